"""
.. testsetup:: *

   from antimagic.core import *
"""

import os
from typing import List

from tqdm.auto import tqdm


def mkdir(directory: str) -> None:
    """Creates directory and parents if they do not exist

    Parameters
    ----------
    directory: str
        Path to create
    """
    if not os.path.exists(directory):
        os.makedirs(directory)


def split_work(total: int, parts: int) -> List[int]:
    """Splits total units of work into parts chunks whose sizes differ by at most one.

    Parameters
    ----------
    total: int
        amount of work to split
    parts: int
        number of chunks

    Returns
    -------
    List[int]
        chunk sizes, first chunks are the larger ones

    Examples
    --------
    >>> split_work(10, 3)
    [4, 3, 3]

    >>> split_work(2, 4)
    [1, 1, 0, 0]
    """
    parts = max(int(parts), 1)
    base, extra = divmod(int(total), parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def progress_bar(leave=True, progress=False, desc=None, total=None, **kwargs):
    if not progress:
        return lambda x: x
    else:
        return lambda x: tqdm(x, leave=leave, desc=desc, total=total, **kwargs)
