# coding: utf-8
#

import contextlib
import functools
import pathlib
import sys
import typing
from typing import Iterable, Iterator, List, Sequence, Tuple, TypeVar

T = TypeVar("T")


@contextlib.contextmanager
def with_package_resource(filename: str) -> typing.Generator[pathlib.Path, None, None]:
    """
    Context manager to access a package data file using importlib.resources.

    Args:
        filename (str): path relative to the monopres package, e.g. "theories/B.theory"

    Yields:
        pathlib.Path: The full path to the located file.
    """
    try:
        from importlib.resources import as_file, files
    except ImportError:
        # For Python < 3.9
        from importlib_resources import as_file, files
    anchor = files("monopres") / filename
    with as_file(anchor) as f:
        if f.exists():
            yield f
            return

    # frozen binaries keep data next to the executable
    binary_path = pathlib.Path(sys.argv[0]).parent
    if (binary_path / filename).exists():
        yield binary_path / filename
        return

    raise FileNotFoundError(f"Resource {filename} not found in monopres package.")


_cached_values = {}


def cache_return(fn):
    @functools.wraps(fn)
    def inner(*args, **kwargs):
        key = (fn, args, frozenset(kwargs.items()))
        value = _cached_values.get(key)
        if value is not None:
            return value

        _cached_values[key] = ret = fn(*args, **kwargs)
        return ret

    return inner


def read_text_argument(value: str) -> str:
    """ file content when value names an existing file, otherwise value itself """
    try:
        path = pathlib.Path(value)
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except (OSError, ValueError):
        pass
    return value


def subsets(items: Sequence[T]) -> Iterator[Tuple[T, ...]]:
    """ all subsets in binary counting order, the empty subset first """
    n = len(items)
    for mask in range(1 << n):
        yield tuple(items[i] for i in range(n) if mask >> i & 1)


def count_inversions(values: Iterable, before) -> int:
    """ number of pairs i<j with before(values[i], values[j]) """
    vals: List = list(values)
    total = 0
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if before(vals[i], vals[j]):
                total += 1
    return total
