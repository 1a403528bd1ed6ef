"""Subsets of 0..n-1 packed into Python ints"""

from typing import Iterable, Iterator, List, Union

from nucleuskit.core.errors import InputError

Subset = Union[int, Iterable[int]]


def full(n: int) -> int:
    return (1 << n) - 1


def from_iterable(items: Iterable[int]) -> int:
    mask = 0
    for item in items:
        mask |= 1 << item
    return mask


def as_mask(subset: Subset) -> int:
    if isinstance(subset, int):
        return subset
    return from_iterable(subset)


def members(mask: int) -> Iterator[int]:
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def to_list(mask: int) -> List[int]:
    return list(members(mask))


def count(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def check_range(mask: int, n: int, what: str = "element") -> None:
    if mask < 0 or mask >> n:
        bad = [i for i in members(mask) if i >= n] if mask >= 0 else [mask]
        raise InputError(f"{what} id out of range 0..{n - 1}: {bad}")
