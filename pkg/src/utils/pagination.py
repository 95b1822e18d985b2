from itertools import islice
from typing import Generic, Iterable, TypeVar

from pydantic import BaseModel, Field

T = TypeVar('T')


def page_window(page: int, page_size: int) -> tuple[int, int]:
    """Half-open [start, stop) positions of a 1-based page."""
    start = (page - 1) * page_size
    return start, start + page_size


class PaginationMeta(BaseModel):
    """Where a page sits inside a generated stream"""

    page: int = Field(..., description="Current page number")
    page_size: int = Field(..., description="Maximum number of graphs per page")
    total_items: int = Field(..., description="Number of graphs in the whole stream")
    total_pages: int = Field(..., description="Number of pages in the whole stream")
    has_next: bool = Field(..., description="Whether a later page exists")
    has_previous: bool = Field(..., description="Whether an earlier page exists")


class PaginatedResponse(BaseModel, Generic[T]):
    """One page of a stream together with its position"""

    items: list[T] = Field(..., description="Items on this page, in stream order")
    pagination: PaginationMeta = Field(..., description="Pagination metadata")

    @classmethod
    def create(
        cls,
        items: list[T],
        page: int,
        page_size: int,
        total_items: int
    ) -> "PaginatedResponse[T]":
        total_pages = -(-total_items // page_size)
        return cls(
            items=items,
            pagination=PaginationMeta(
                page=page,
                page_size=page_size,
                total_items=total_items,
                total_pages=total_pages,
                has_next=page < total_pages,
                has_previous=page > 1
            )
        )

    @classmethod
    def from_stream(
        cls,
        stream: Iterable[T],
        page: int,
        page_size: int,
        total_items: int
    ) -> "PaginatedResponse[T]":
        """Cut one page out of a lazy stream; nothing past the page is consumed."""
        start, stop = page_window(page, page_size)
        items = list(islice(stream, start, stop)) if start < total_items else []
        return cls.create(items=items, page=page, page_size=page_size, total_items=total_items)
