import logging
import time
from dataclasses import dataclass
from multiprocessing import Pool, TimeoutError as PoolTimeout
from typing import Callable, Iterable, List, Optional, TypeVar

from .errors import CapacityExceeded

log = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


@dataclass
class Task:
    target: Callable[[T], R]
    n_workers: int = 1
    name: str = 'task'
    timeout: Optional[float] = None
    # Called in the parent for items still unfinished when `timeout` runs out;
    # without it the timeout propagates.
    on_timeout: Optional[Callable[[T, CapacityExceeded], R]] = None

    def map(self, items: Iterable[T]) -> List[R]:
        """Apply target to every item; results come back in input order."""
        items = list(items)
        if self.n_workers <= 1 or len(items) <= 1:
            return [self.target(item) for item in items]

        log.info(f'Init {self.n_workers} {self.name} worker processes for {len(items)} items')
        # Target must be picklable (module-level function or functools.partial of one)
        with Pool(processes=self.n_workers) as pool:
            pending = [pool.apply_async(self.target, (item,)) for item in items]
            deadline = None if self.timeout is None else time.monotonic() + self.timeout
            return [self._result(item, result, deadline) for item, result in zip(items, pending)]

    def _result(self, item: T, result, deadline: Optional[float]) -> R:
        remaining = None if deadline is None else max(deadline - time.monotonic(), 0)
        try:
            return result.get(timeout=remaining)
        except PoolTimeout:
            exc = CapacityExceeded(f'{self.name} timed out after {self.timeout}s')
            log.error(f'Task {self.name} failed for {item}: {exc}')
            if self.on_timeout is None:
                raise exc
            return self.on_timeout(item, exc)
