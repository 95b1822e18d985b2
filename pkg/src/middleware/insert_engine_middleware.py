from fastapi import Request, Response
from starlette.middleware.base import BaseHTTPMiddleware

from app.matching.service import get_matching_service


class InsertEngineMiddleware(BaseHTTPMiddleware):
    """
    Middleware that places the process-wide matching engine in request.state.
    All requests share one engine, so memoised polynomials survive across calls.
    """

    async def dispatch(self, request: Request, call_next) -> Response:
        request.state.engine = get_matching_service()

        response = await call_next(request)

        return response
