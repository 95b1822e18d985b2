import time
from functools import wraps
from inspect import iscoroutinefunction

from prometheus_client import Counter, Histogram

COMPUTATION_LATENCY = Histogram(
    "computation_latency_seconds",
    "Latency of library computations",
    ["component", "operation"]
)

MEMO_LOOKUPS = Counter(
    "matching_memo_lookups_total",
    "Matching polynomial memo lookups",
    ["result"]
)

CENSUS_GRAPHS = Counter(
    "census_graphs_scanned_total",
    "Graphs scanned by verification censuses",
    ["claim"]
)


def create_component_metrics(component_name: str):

    def decorator(operation: str):
        def wrapper(func):
            if iscoroutinefunction(func):
                @wraps(func)
                async def async_inner(*args, **kwargs):
                    start = time.perf_counter()
                    try:
                        return await func(*args, **kwargs)
                    finally:
                        COMPUTATION_LATENCY.labels(
                            component=component_name,
                            operation=operation
                        ).observe(time.perf_counter() - start)

                return async_inner

            @wraps(func)
            def inner(*args, **kwargs):
                start = time.perf_counter()
                try:
                    return func(*args, **kwargs)
                finally:
                    COMPUTATION_LATENCY.labels(
                        component=component_name,
                        operation=operation
                    ).observe(time.perf_counter() - start)

            return inner
        return wrapper

    return decorator
