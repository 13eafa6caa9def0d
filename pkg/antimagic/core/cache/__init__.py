from .cache import Cache
from ._function_cache import CacheCall
from ._instance import _cache


def cache_disk_size() -> int:
    return _cache.disk_size()


def entries(prefix: str = ""):
    return _cache.keys(prefix)
