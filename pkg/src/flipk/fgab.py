"""Finitely generated abelian groups in invariant-factor form, and maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .intlin import IntMatrix


@dataclass(frozen=True)
class FgAbGroup:
    """Z^rank + Z/t1 + ... + Z/tk with every t >= 2 and t1 | t2 | ... | tk.

    The representation is canonical, so ``==`` is isomorphism.
    """

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        torsion = tuple(int(t) for t in self.torsion)
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(t < 2 for t in torsion):
            raise ValueError(f"torsion coefficients must be >= 2: {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion is not a divisibility chain: {torsion}")
        object.__setattr__(self, "torsion", torsion)

    @property
    def ngens(self):
        return self.rank + len(self.torsion)

    @property
    def orders(self):
        """Order of each canonical generator, 0 meaning infinite."""
        return (0,) * self.rank + self.torsion

    @property
    def is_trivial(self):
        return self.ngens == 0

    @property
    def is_free(self):
        return not self.torsion

    def order(self):
        """Cardinality, or 0 for an infinite group."""
        if self.rank:
            return 0
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def relations(self):
        """Relation matrix presenting this group on its canonical generators."""
        n = self.ngens
        cols = []
        for i, t in enumerate(self.orders):
            if t:
                col = [0] * n
                col[i] = t
                cols.append(col)
        return IntMatrix.from_columns(cols, n)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


Z = FgAbGroup(1)
TRIVIAL = FgAbGroup()


def cyclic(n):
    """Z/n, with Z/0 = Z and Z/1 = 0."""
    return canonicalize(0, [n])


def canonicalize(rank, coefficients=()):
    """Invariant-factor form of Z^rank + sum of Z/c.

    A coefficient 0 is a free summand and 1 is the trivial group.
    """
    coefficients = list(coefficients)
    if rank < 0 or any(c < 0 for c in coefficients):
        raise ValueError("rank and coefficients must be nonnegative")
    rank += sum(1 for c in coefficients if c == 0)
    cs = sorted(c for c in coefficients if c > 1)
    # pairwise (gcd, lcm) sweep leaves cs[i] | cs[j] for i < j
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            a, b = cs[i], cs[j]
            g = gcd(a, b)
            cs[i], cs[j] = g, a // g * b
    return FgAbGroup(rank, tuple(c for c in cs if c > 1))


def direct_sum(*groups):
    rank = sum(g.rank for g in groups)
    return canonicalize(rank, [t for g in groups for t in g.torsion])


def tensor(g, h):
    rank = g.rank * h.rank
    coeffs = list(g.torsion) * h.rank + list(h.torsion) * g.rank
    coeffs += [gcd(s, t) for s in g.torsion for t in h.torsion]
    return canonicalize(rank, coeffs)


def tor(g, h):
    return canonicalize(0, [gcd(s, t) for s in g.torsion for t in h.torsion])


def is_isomorphic(g, h):
    return g == h


def _reduce(matrix, orders):
    rows = matrix.tolist()
    return IntMatrix.from_rows(
        [[x % t for x in row] if t else row for row, t in zip(rows, orders)],
        matrix.cols)


@dataclass(frozen=True)
class GroupMap:
    """Homomorphism source -> target given on canonical generators.

    Column j is the image of source generator j.  Rows over torsion target
    generators are reduced into [0, order) on construction, so two maps are
    equal exactly when their matrices are.
    """

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if m.shape != (self.target.ngens, self.source.ngens):
            raise ValueError(
                f"matrix shape {m.shape} does not match "
                f"{self.target.ngens}x{self.source.ngens}")
        for j, t in enumerate(self.source.orders):
            if not t:
                continue
            for i, s in enumerate(self.target.orders):
                if (t * m[i, j]) % s if s else t * m[i, j]:
                    raise ValueError(
                        f"not well defined: generator {j} has order {t} "
                        f"but its image has nonzero coordinate {i}")
        object.__setattr__(self, "matrix", _reduce(m, self.target.orders))

    @classmethod
    def identity(cls, group):
        return cls(group, group, IntMatrix.identity(group.ngens))

    @classmethod
    def from_rows(cls, source, target, rows):
        return cls(source, target, IntMatrix.from_rows(rows, source.ngens))

    def __call__(self, vector):
        image = self.matrix.apply(vector)
        return [x % t if t else x for x, t in zip(image, self.target.orders)]

    def is_involution(self):
        return (self.source == self.target
                and map_equal(compose(self, self), GroupMap.identity(self.source)))


def compose(f, g):
    """f after g."""
    if g.target != f.source:
        raise ValueError(f"cannot compose: {g.target} is not {f.source}")
    return GroupMap(g.source, f.target, f.matrix @ g.matrix)


def map_equal(f, g):
    if (f.source, f.target) != (g.source, g.target):
        raise ValueError("maps have different source or target")
    return f.matrix == g.matrix
