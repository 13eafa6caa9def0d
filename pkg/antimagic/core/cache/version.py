from typing import Union

from packaging.version import Version, parse, InvalidVersion


def str_to_version(v: str) -> Version or None:
    """Converts given version str representation to a compatible version object

    Parameters
    ----------
    v: str
        version value to convert

    Returns
    -------
    Version or None
        a compatible version object or None when v is not a valid version

    Examples
    --------

    >>> from antimagic.core.cache.version import str_to_version
    >>> str_to_version("1.2.3")
    <Version('1.2.3')>
    >>> str_to_version("not a version") is None
    True

    See Also
    --------
    version_to_str
    """
    try:
        return parse(v)
    except InvalidVersion:
        return None


def version_to_str(v: Union[Version, str]) -> str:
    """Converts given version value to its str representation

    Examples
    --------

    >>> from antimagic.core.cache.version import version_to_str
    >>> from packaging.version import Version
    >>> version_to_str(Version("1.2.3"))
    '1.2.3'

    See Also
    --------
    str_to_version
    """
    return str(v)
