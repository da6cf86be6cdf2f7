import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "SPHEREWRIGHT_THREADS"


def max_workers() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def pmap(fn, items) -> list:
    """Ordered map, fanned out over a thread pool when more than one worker is allowed."""
    items = list(items)
    workers = min(max_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
