from functools import wraps
from typing import Callable, Any
from fastapi import HTTPException, status

from exceptions import (
    ArgumentError,
    GraphFormatError,
    MatchcritError,
    NotDivisibleError,
    PolynomialFormatError,
    SizeLimitError,
    UnknownClaimError,
)


def handle_domain_error(func: Callable) -> Callable:
    """
    Decorator to convert library errors into HTTP exceptions.

    Usage:
        @handle_domain_error
        async def some_manager_method(self, ...):
            # Your method logic here
            pass
    """
    @wraps(func)
    async def wrapper(self, *args, **kwargs) -> Any:
        try:
            return await func(self, *args, **kwargs)
        except (GraphFormatError, PolynomialFormatError) as e:
            raise HTTPException(
                status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
                detail=str(e)
            )
        except UnknownClaimError as e:
            raise HTTPException(
                status_code=status.HTTP_404_NOT_FOUND,
                detail={"message": str(e), "available": e.available}
            )
        except SizeLimitError as e:
            raise HTTPException(
                status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
                detail={"message": str(e), "limit": e.limit}
            )
        except (ArgumentError, NotDivisibleError) as e:
            raise HTTPException(
                status_code=status.HTTP_400_BAD_REQUEST,
                detail=str(e)
            )
        except MatchcritError as e:
            raise HTTPException(
                status_code=status.HTTP_400_BAD_REQUEST,
                detail=str(e)
            )

    return wrapper
