import time
from fastapi import Request, Response
from starlette.middleware.base import BaseHTTPMiddleware


class TimingMiddleware(BaseHTTPMiddleware):
    """
    Middleware that reports request processing time in the X-Process-Time header (seconds).
    """

    async def dispatch(self, request: Request, call_next) -> Response:
        started = time.perf_counter()

        response = await call_next(request)

        response.headers["X-Process-Time"] = f"{time.perf_counter() - started:.6f}"

        return response
