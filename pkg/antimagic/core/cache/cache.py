from typing import List, Union

import diskcache as dc

from .version import str_to_version, version_to_str, Version
from ...config import cache as cache_cfg

# bump when the layout of cached difference tables changes
cache_version = str_to_version("1.0")


class Cache:
    __slots__ = ['_data', '_hit', '_miss']

    def __init__(self, cache_path: str = ""):
        self._data = dc.Cache(f"{cache_path}/Cache", size_limit=cache_cfg.size())
        self._hit = 0
        self._miss = 0
        if self.version is None or self.version < cache_version:
            self._data.clear()
            self.version = cache_version

    @property
    def version(self):
        return str_to_version(self._data.get("cache/version", default="0.0.0"))

    @version.setter
    def version(self, v: Union[str, Version]):
        self._data["cache/version"] = v if type(v) is str else version_to_str(v)

    def disk_size(self):
        return self._data.volume()

    def stats(self):
        return {
            "hit": self._hit,
            "misses": self._miss
        }

    def __len__(self):
        return len(self._data)

    def __del__(self):
        self._data.close()

    def keys(self, prefix: str = "") -> List[str]:
        return [key for key in self._data if isinstance(key, str) and key.startswith(prefix)]

    def __contains__(self, item):
        with self.transact():
            if item in self._data:
                self._hit += 1
                return True
            self._miss += 1
            return False

    def set(self, key, value, expire=None):
        with self.transact():
            self._data.set(key, value, expire=expire)

    def get(self, key, default_value=None):
        with self.transact():
            value = self._data.get(key, default_value)
            if value is default_value:
                self._miss += 1
            else:
                self._hit += 1
            return value

    def drop(self, key):
        with self.transact():
            self._data.delete(key)

    def drop_prefix(self, prefix: str) -> int:
        """Deletes every entry whose key starts with prefix, returns how many were deleted."""
        keys = self.keys(prefix)
        with self.transact():
            for key in keys:
                self._data.delete(key)
        return len(keys)

    def transact(self):
        return self._data.transact()
