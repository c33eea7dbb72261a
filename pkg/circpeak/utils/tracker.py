import threading
import time
from contextlib import contextmanager
from enum import Enum
from typing import Iterator


class Method(Enum):
    ORACLE = "oracle"
    CLOSED = "closed"
    DP = "dp"
    GENFUNC = "genfunc"
    PATHS = "paths"

    @classmethod
    def parse(cls, name: str) -> "Method":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"Unsupported counting method: {name}")


class RouteTracker:
    """
    Tracks how many values each counting route produced and how long it took.

    Updates are guarded by a threading.Lock, so a tracker can be shared by
    worker threads. Worker processes get their own copy and are not tallied.
    """

    def __init__(self):
        self.calls: dict[Method, int] = {method: 0 for method in Method}
        self.seconds: dict[Method, float] = {method: 0.0 for method in Method}
        self._lock = threading.Lock()

    def update(self, method: Method, elapsed: float, calls: int = 1):
        with self._lock:
            self.calls[method] += calls
            self.seconds[method] += elapsed

    @contextmanager
    def track(self, method: Method) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.update(method, time.perf_counter() - start)

    @property
    def total_calls(self) -> int:
        return sum(self.calls.values())

    @property
    def total_seconds(self) -> float:
        return sum(self.seconds.values())

    def __repr__(self):
        parts = ", ".join(
            f"{method.value}={self.calls[method]}/{self.seconds[method]:.3f}s"
            for method in Method
            if self.calls[method]
        )
        return f"RouteTracker({parts}, total_calls={self.total_calls}, total_seconds={self.total_seconds:.3f})"
