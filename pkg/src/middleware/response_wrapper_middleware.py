import json
from fastapi import Request, Response
from fastapi.responses import JSONResponse
from starlette.middleware.base import BaseHTTPMiddleware

_UNWRAPPED_PATHS = {"/docs", "/redoc", "/openapi.json", "/metrics"}


class ResponseWrapperMiddleware(BaseHTTPMiddleware):
    """
    Middleware that wraps successful JSON responses as {"data": ...}.

    Paginated payloads become {"data": items, "pagination": meta};
    error responses and non-JSON bodies pass through unchanged.
    """

    async def dispatch(self, request: Request, call_next) -> Response:
        response = await call_next(request)

        if request.url.path in _UNWRAPPED_PATHS:
            return response
        if not 200 <= response.status_code < 300:
            return response
        if not response.headers.get("content-type", "").startswith("application/json"):
            return response

        body = b""
        async for chunk in response.body_iterator:
            body += chunk
        headers = dict(response.headers)
        headers.pop("content-length", None)
        try:
            payload = json.loads(body.decode())
        except (json.JSONDecodeError, UnicodeDecodeError):
            return Response(content=body, status_code=response.status_code, headers=headers)

        if isinstance(payload, dict) and "pagination" in payload and "items" in payload:
            wrapped = {"data": payload["items"], "pagination": payload["pagination"]}
        else:
            wrapped = {"data": payload}

        return JSONResponse(content=wrapped, status_code=response.status_code, headers=headers)
