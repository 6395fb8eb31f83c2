"""Degrees in Z^3 and the parity form governing all Koszul signs.

A degree is a triple (i, j, k): cohomological, internal ("Soergel") and
Hochschild.  The parity form

    <(i, j, k), (i', j', k')> = i*i' + k*k'   (mod 2)

is symmetric and bilinear over Z/2; the i- and k-parities are
independent, so cohomologically odd and Hochschild-odd quantities
commute with each other.
"""

from __future__ import annotations

from typing import NamedTuple


class TriDegree(NamedTuple):
    i: int
    j: int
    k: int

    def __add__(self, other):
        return TriDegree(self.i + other[0], self.j + other[1], self.k + other[2])

    def __sub__(self, other):
        return TriDegree(self.i - other[0], self.j - other[1], self.k - other[2])

    def __neg__(self):
        return TriDegree(-self.i, -self.j, -self.k)

    def __str__(self):
        return "(%d,%d,%d)" % self


ZERO = TriDegree(0, 0, 0)


def parity(d: TriDegree, e: TriDegree) -> int:
    """The Z/2 pairing i*i' + k*k'."""
    return (d[0] * e[0] + d[2] * e[2]) % 2
