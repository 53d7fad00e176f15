"""K-theory of the flip crossed product (A (x) A) x Z/2 from the K-theory of A.

A is replaced by a direct sum of building blocks with the same K-theory:
one copy of C per free summand of K0, a Cuntz algebra O_{n+1} per torsion
summand Z/n of K0, the suspension SC per free summand of K1 and a dimension
drop algebra D_n per torsion summand Z/n of K1.  The crossed product then
splits into the flip crossed product of each block (the diagonal terms) and
one copy of M_2(B_i (x) B_j) for every pair i < j (the cross terms), on
which the dual action is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from math import gcd

from .fgab import TRIVIAL, Z, FgAbGroup, GroupMap, canonicalize, direct_sum
from .intlin import IntMatrix, cokernel, flip_matrix, solve
from .kdata import KData, kunneth

DISCLAIMER = (
    "Valid for separable nuclear C*-algebras A in the UCT class with finitely "
    "generated K-theory; computed from K-theoretic data only."
)

CUNTZ_NOTE = (
    "The dual action sends the implementing unitary to its negative, so it "
    "exchanges the spectral projections e+ and e-; the matrix is this swap "
    "written in the generator basis."
)

KINDS = ("point", "cuntz", "susp", "drop")


@dataclass(frozen=True, order=True)
class Block:
    """A building block: C, O_{n+1}, SC or D_n."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind in ("cuntz", "drop"):
            if self.n < 2:
                raise ValueError(f"{self.kind} block needs n >= 2, got {self.n}")
        elif self.n:
            raise ValueError(f"{self.kind} block takes no parameter")

    @classmethod
    def point(cls):
        return cls("point")

    @classmethod
    def cuntz(cls, n):
        return cls("cuntz", n)

    @classmethod
    def susp(cls):
        return cls("susp")

    @classmethod
    def drop(cls, n):
        return cls("drop", n)

    @property
    def algebra(self):
        return {"point": "C", "cuntz": f"O_{self.n + 1}",
                "susp": "SC", "drop": f"D_{self.n}"}[self.kind]

    def sort_key(self):
        return (KINDS.index(self.kind), self.n)

    def __str__(self):
        name = self.kind.capitalize()
        return f"{name}({self.n})" if self.n else name


@dataclass(frozen=True)
class BlockContribution:
    """One direct summand of the answer.

    ``generators`` and ``dual_action`` are indexed by degree; each generator
    label names a canonical generator of that degree's group.
    """

    label: str
    kdata: KData
    generators: tuple
    dual_action: tuple
    source: str
    note: str = ""

    def __post_init__(self):
        if self.source not in ("paper", "derived"):
            raise ValueError(f"bad source flag {self.source!r}")
        for d in (0, 1):
            if len(self.generators[d]) != self.kdata[d].ngens:
                raise ValueError(f"degree {d}: generator labels do not match group")
            act = self.dual_action[d]
            if act.source != self.kdata[d] or act.target != self.kdata[d]:
                raise ValueError(f"degree {d}: dual action is not an endomorphism")


def block_k(b):
    if b.kind == "point":
        return KData(Z, TRIVIAL)
    if b.kind == "cuntz":
        return KData(canonicalize(0, [b.n]), TRIVIAL)
    if b.kind == "susp":
        return KData(TRIVIAL, Z)
    return KData(TRIVIAL, canonicalize(0, [b.n]))


def prime_power_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def decompose(k, primary=False):
    """Building blocks whose direct sum has K-theory ``k``.

    With ``primary=True`` each torsion summand is split into prime powers
    instead of following the invariant factors.
    """
    def split(ts):
        if primary:
            return sorted(q for t in ts for q in prime_power_factors(t))
        return sorted(ts)

    return ([Block.point()] * k.k0.rank
            + [Block.cuntz(t) for t in split(k.k0.torsion)]
            + [Block.susp()] * k.k1.rank
            + [Block.drop(t) for t in split(k.k1.torsion)])


def combo_label(coeffs, names):
    """Render an integer combination such as ``[e+] - [e-]``."""
    terms = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, mag + name))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


def _vector_order(coker, x):
    order = 1
    for c, t in zip(coker.coordinates(x), coker.group.orders):
        if t == 0:
            if c:
                return 0
        elif c:
            step = t // gcd(t, c)
            order = order * step // gcd(order, step)
    return order


def _adapted_action(relations, basis, action):
    """Action on a hand-picked basis of coker(relations).

    ``basis`` lists vectors of Z^rows meant to be canonical generators (same
    orders, same order of appearance).  The basis is verified: each vector
    must have the expected order and together with the relations they must
    span Z^rows.  Returns the GroupMap of ``action`` in this basis.
    """
    coker = cokernel(relations)
    group = coker.group
    if len(basis) != group.ngens:
        raise AssertionError("basis has the wrong number of vectors")
    for b, t in zip(basis, group.orders):
        if _vector_order(coker, b) != t:
            raise AssertionError(f"basis vector {b} does not have order {t}")
    rows = relations.rows
    span = IntMatrix.from_columns(basis, rows).hstack(relations) if basis else relations
    if not cokernel(span).group.is_trivial:
        raise AssertionError("basis vectors do not generate the cokernel")
    cols = []
    for b in basis:
        y = solve(span, action.apply(b))
        cols.append(y[:len(basis)])
    return GroupMap(group, group, IntMatrix.from_columns(cols, len(basis)))


def _empty():
    return GroupMap.identity(TRIVIAL)


def cuntz_closed_form(n):
    return canonicalize(0, [n, n] if n % 2 else [n // 2, 2 * n])


def diag_flip(b):
    """Flip crossed product of a single building block."""
    if b.kind == "point":
        swap = GroupMap.from_rows(FgAbGroup(2), FgAbGroup(2), [[0, 1], [1, 0]])
        return BlockContribution(
            f"diag {b}", KData(FgAbGroup(2), TRIVIAL),
            (("[e+]", "[e-]"), ()), (swap, _empty()), "paper")

    if b.kind == "susp":
        neg = GroupMap.from_rows(Z, Z, [[-1]])
        return BlockContribution(
            f"diag {b}", KData(TRIVIAL, Z),
            ((), ("S([e+] - [e-])",)), (_empty(), neg), "paper")

    n = b.n
    closed = cuntz_closed_form(n)

    if b.kind == "cuntz":
        # rows of flip_matrix are coordinates on ([e+], [e-])
        rel = flip_matrix(n)
        group = cokernel(rel).group
        if group != closed:
            raise AssertionError(f"coker(flip_matrix({n})) = {group}, expected {closed}")
        if n % 2:
            basis = [[1, 0], [0, 1]]
        else:
            basis = [[1, -1], [1, 0]]
            if n == 2:
                basis = basis[1:]  # [e+] - [e-] has order n/2 = 1
        swap = IntMatrix.from_rows([[0, 1], [1, 0]])
        action = _adapted_action(rel, basis, swap)
        labels = tuple(combo_label(v, ("[e+]", "[e-]")) for v in basis)
        return BlockContribution(
            f"diag {b}", KData(group, TRIVIAL), (labels, ()),
            (action, _empty()), "derived", CUNTZ_NOTE)

    coker = cokernel(drop_relations(n))
    if coker.group != closed:
        raise AssertionError(f"D_{n}: cokernel {coker.group}, expected {closed}")
    action = GroupMap(coker.group, coker.group, coker.transport(drop_action_matrix()))
    labels = tuple(combo_label(coker.from_canonical.column(j), ("i(g)", "[w]"))
                   for j in range(coker.group.ngens))
    return BlockContribution(
        f"diag {b}", KData(TRIVIAL, coker.group), ((), labels),
        (_empty(), action), "paper")


def drop_relations(n):
    """Relations of K1 for the D_n block on (iota_*(g), [w])."""
    return IntMatrix.from_rows([[(n * n - n) // 2, (n * n + n) // 2], [-n, -n]])


def drop_action_matrix():
    """g -> -g, w -> w + g on (iota_*(g), [w])."""
    return IntMatrix.from_rows([[-1, 1], [0, 1]])


def cross_term(a, b, tag=""):
    """The M_2(a (x) b) summand; the dual action on it is trivial."""
    k = kunneth(block_k(a), block_k(b))
    tag = tag or f"({a} x {b})"
    gens = tuple(tuple(f"K{d}{tag}#{i}" for i in range(k[d].ngens)) for d in (0, 1))
    return BlockContribution(
        f"cross {a} x {b}", k, gens,
        (GroupMap.identity(k.k0), GroupMap.identity(k.k1)), "paper")


@dataclass(frozen=True)
class FlipReport:
    input: KData
    blocks: tuple
    contributions: tuple
    total: KData
    disclaimer: str = field(default=DISCLAIMER)

    @cached_property
    def _assembled(self):
        return tuple(_assemble_degree(self.contributions, d) for d in (0, 1))

    @property
    def total_dual_action(self):
        """Dual action on the canonical generators of the total, per degree."""
        return tuple(a for a, _ in self._assembled)

    @property
    def total_generators(self):
        """Each canonical generator of the total as a sum of summand generators."""
        return tuple(g for _, g in self._assembled)


def _assemble_degree(contributions, d):
    names, orders, blocks = [], [], []
    for idx, c in enumerate(contributions):
        names += [f"{g}@{idx}" for g in c.generators[d]]
        orders += list(c.kdata[d].orders)
        blocks.append(c.dual_action[d].matrix)
    n = len(orders)
    rel = IntMatrix.from_columns(
        [[t if i == j else 0 for i in range(n)] for j, t in enumerate(orders) if t], n)
    action = _block_diagonal(blocks, n)
    coker = cokernel(rel)
    total = GroupMap(coker.group, coker.group, coker.transport(action))
    gens = tuple(combo_label(coker.from_canonical.column(j), names)
                 for j in range(coker.group.ngens))
    return total, gens


def _block_diagonal(blocks, n):
    data = [[0] * n for _ in range(n)]
    off = 0
    for m in blocks:
        for i in range(m.rows):
            for j in range(m.cols):
                data[off + i][off + j] = m[i, j]
        off += m.rows
    return IntMatrix.from_rows(data, n)


def assemble(blocks, k=None):
    """Flip crossed product K-theory for an explicit list of blocks."""
    blocks = tuple(blocks)
    contributions = []
    for i, b in enumerate(blocks):
        c = diag_flip(b)
        contributions.append(replace(c, label=f"diag[{i}] {b} ({b.algebra})"))
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            c = cross_term(blocks[i], blocks[j], f"(B{i} x B{j})")
            contributions.append(replace(c, label=f"cross[{i},{j}] {blocks[i]} x {blocks[j]}"))
    total = KData(direct_sum(*(c.kdata.k0 for c in contributions)),
                  direct_sum(*(c.kdata.k1 for c in contributions)))
    if k is None:
        k = KData(direct_sum(*(block_k(b).k0 for b in blocks)),
                  direct_sum(*(block_k(b).k1 for b in blocks)))
    return FlipReport(k, blocks, tuple(contributions), total)


def flip_crossed(k):
    return assemble(decompose(k), k)
