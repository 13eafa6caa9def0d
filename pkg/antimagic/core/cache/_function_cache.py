import base64
import inspect
from functools import wraps
from typing import Callable, Sequence

from ._instance import _cache

_MISSING = object()


def make_key_from_args(*args, **kwargs):
    key = list(map(str, args))
    key += list(map(lambda k: str(k) + "=" + str(kwargs[k]), sorted(kwargs.keys())))
    result = ','.join(key)
    return base64.b64encode(result.encode()).decode()


class CacheCall(object):
    """Memoizes a pure function inside the on-disk cache.

    The key is built from the function qualified name and its bound arguments, arguments listed in ``ignore`` do
    not take part in it (worker counts for example). Wrapped functions accept two extra keyword arguments,
    ``disable_cache`` bypasses the cache entirely and ``force_refresh`` recomputes and overwrites the stored value.
    They also carry ``cache_prefix`` and ``cache_clear()``, the latter drops every stored result of the function.

    Parameters
    ----------
    is_pure: bool
        when False entries are keyed on the function object and do not survive the process
    ignore: Sequence[str]
        argument names left out of the key
    cache_instance: Cache
        defaults to the shared antimagic cache
    """

    def __init__(self, is_pure: bool = False, ignore: Sequence[str] = (), cache_instance=_cache):
        self.cache = cache_instance
        self.is_pure = is_pure
        self.ignore = frozenset(ignore)

    def _key(self, prefix: str, signature: inspect.Signature, args, kwargs) -> str:
        bound = signature.bind(*args, **kwargs)
        bound.apply_defaults()
        kept = {name: value for name, value in bound.arguments.items() if name not in self.ignore}
        return prefix + "/" + make_key_from_args(**kept)

    def __call__(self, function: Callable):
        signature = inspect.signature(function)
        if self.is_pure:
            prefix = f"__internal__/CacheCall/{function.__module__}/{function.__qualname__}"
        else:
            prefix = f"__internal__/CacheCall/{hash(function)}"

        @wraps(function)
        def wrapped(*args, disable_cache=False, force_refresh=False, **kwargs):
            if disable_cache:
                return function(*args, **kwargs)
            key = self._key(prefix, signature, args, kwargs)
            if not force_refresh:
                value = self.cache.get(key, _MISSING)
                if value is not _MISSING:
                    return value
            value = function(*args, **kwargs)
            self.cache.set(key, value)
            return value

        wrapped.cache_prefix = prefix + "/"
        wrapped.cache_clear = lambda: self.cache.drop_prefix(wrapped.cache_prefix)
        return wrapped
