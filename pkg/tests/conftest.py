from __future__ import annotations

import pytest

from parabolic_slices.rootsys import build_root_system

ALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(3, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)]
)


def rs_of(kind: str, rank: int):
    return build_root_system(kind, rank)


@pytest.fixture(scope="session")
def f4_search_report():
    from parabolic_slices.search import f4_s3_search

    return f4_s3_search(jobs=1, seed=0)
