"""The three shipped categories and instance lookup."""
from __future__ import annotations

from functools import lru_cache

from catcheck.instances.finset import FinSet, PointedFinSet
from catcheck.instances.finvect import FinVect, is_prime
from catcheck.instances.linalg import rref
from catcheck.instances.unionfind import union_find_quotient
from catcheck.kernel import Category, CategoryError, InstanceCard

INSTANCE_TAGS = ("finset", "finvect", "pfinset")

__all__ = [
    "FinSet",
    "FinVect",
    "PointedFinSet",
    "INSTANCE_TAGS",
    "get_instance",
    "instance_card",
    "instance_label",
    "rref",
    "union_find_quotient",
]


def get_instance(tag: str, p: int | None = None) -> Category:
    if tag == "finvect":
        p = 2 if p is None else int(p)
        if not is_prime(p):
            raise CategoryError(f"--prime {p} is not prime")
    elif tag in ("finset", "pfinset"):
        p = None
    else:
        raise CategoryError(f"unknown instance {tag!r}")
    return _instance(tag, p)


@lru_cache(maxsize=None)
def _instance(tag: str, p: int | None) -> Category:
    if tag == "finset":
        return FinSet()
    if tag == "pfinset":
        return PointedFinSet()
    return FinVect(p)


def instance_card(cat: Category) -> InstanceCard:
    return cat.card


def instance_label(cat: Category) -> str:
    return f"finvect_F{cat.p}" if isinstance(cat, FinVect) else cat.tag
