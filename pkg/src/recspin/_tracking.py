"""Registry of public operations and opt-in call recording.

Recording is scoped with a ContextVar so concurrent suites do not share state.
"""

from __future__ import annotations

import contextlib
import functools
from contextvars import ContextVar

PUBLIC_OPS: dict[str, object] = {}
_calls: ContextVar[set | None] = ContextVar("recspin_calls", default=None)


def public_op(name: str):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            seen = _calls.get()
            if seen is not None:
                seen.add(name)
            return fn(*args, **kwargs)

        if hasattr(fn, "cache_info"):
            wrapper.cache_info = fn.cache_info
            wrapper.cache_clear = fn.cache_clear
        PUBLIC_OPS[name] = wrapper
        return wrapper

    return deco


@contextlib.contextmanager
def record_calls():
    seen: set = set()
    token = _calls.set(seen)
    try:
        yield seen
    finally:
        _calls.reset(token)
