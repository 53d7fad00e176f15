"""Z/2-graded K-theory pairs and the Kunneth pairing."""

from __future__ import annotations

from dataclasses import dataclass

from .fgab import TRIVIAL, Z, FgAbGroup, direct_sum, tensor, tor


@dataclass(frozen=True)
class KData:
    k0: FgAbGroup = TRIVIAL
    k1: FgAbGroup = TRIVIAL

    def __getitem__(self, degree):
        return (self.k0, self.k1)[degree % 2]

    @property
    def is_trivial(self):
        return self.k0.is_trivial and self.k1.is_trivial

    def __str__(self):
        return f"K0 = {self.k0}, K1 = {self.k1}"


POINT = KData(Z, TRIVIAL)
SUSPENSION = KData(TRIVIAL, Z)


def suspend(a):
    return KData(a.k1, a.k0)


def kunneth(a, b):
    """K-theory of a tensor product from the K-theory of the factors.

    Tensor terms land in degree i+j, Tor terms in degree i+j+1.  The
    sequence splits, so the result is correct up to isomorphism.
    """
    out = [[], []]
    for i in (0, 1):
        for j in (0, 1):
            out[(i + j) % 2].append(tensor(a[i], b[j]))
            out[(i + j + 1) % 2].append(tor(a[i], b[j]))
    return KData(direct_sum(*out[0]), direct_sum(*out[1]))
