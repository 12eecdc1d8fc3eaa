"""Thread-safe memo table for rooted tree map values."""

import threading
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from src.core.logger import get_logger
from src.forests import Forest
from src.words import Word, WordSum

logger = get_logger(__name__)

CacheKey = Tuple[Forest, Word]


@dataclass
class RtmCache:
    """Map (canonical forest, word) -> value of the forest's map on that word.

    Readers never block one another's results: a missing entry is computed
    outside the lock and inserted afterwards, so two workers may compute the
    same value and the later insert is a no-op.
    """

    enabled: bool = True
    hits: int = 0
    misses: int = 0
    _store: Dict[CacheKey, WordSum] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def get(self, key: CacheKey) -> Optional[WordSum]:
        if not self.enabled:
            return None
        with self._lock:
            value = self._store.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key: CacheKey, value: WordSum) -> WordSum:
        if not self.enabled:
            return value
        with self._lock:
            return self._store.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            size = len(self._store)
            self._store.clear()
            self.hits = 0
            self.misses = 0
        logger.debug("rtm_cache_cleared", entries=size)

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {"entries": len(self._store), "hits": self.hits, "misses": self.misses}
