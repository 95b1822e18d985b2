import threading
from collections import OrderedDict
from typing import Optional

from app.polynomials.polynomial import IntPolynomial
from metrics.computation import MEMO_LOOKUPS

_HITS = MEMO_LOOKUPS.labels(result="hit")
_MISSES = MEMO_LOOKUPS.labels(result="miss")


class MemoCache:
    """Canonical code -> matching polynomial, optionally LRU-capped.

    Lookups and inserts are atomic; concurrent writers store identical
    values for a key, so last write wins.
    """

    def __init__(self, cap: Optional[int] = None) -> None:
        self._cap = cap
        self._entries: OrderedDict[bytes, IntPolynomial] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @property
    def cap(self) -> Optional[int]:
        return self._cap

    def get(self, key: bytes) -> Optional[IntPolynomial]:
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
                _MISSES.inc()
                return None
            if self._cap is not None:
                self._entries.move_to_end(key)
            self.hits += 1
            _HITS.inc()
            return value

    def put(self, key: bytes, value: IntPolynomial) -> None:
        with self._lock:
            self._entries[key] = value
            if self._cap is not None:
                self._entries.move_to_end(key)
                while len(self._entries) > self._cap:
                    self._entries.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)
