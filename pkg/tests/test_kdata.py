from hypothesis import given, settings
from hypothesis import strategies as st

from flipk.fgab import TRIVIAL, Z, canonicalize, cyclic
from flipk.kdata import POINT, SUSPENSION, KData, kunneth, suspend
from flipk.verify import oracle_tensor, oracle_tor

groups = st.builds(lambda r, cs: canonicalize(r, cs),
                   st.integers(0, 2), st.lists(st.integers(0, 12), max_size=2))
kdatas = st.builds(KData, groups, groups)


def test_kunneth_examples():
    for n in (2, 5, 12):
        assert kunneth(POINT, KData(cyclic(n))) == KData(cyclic(n))
    assert kunneth(SUSPENSION, SUSPENSION) == KData(Z)
    z2 = cyclic(2)
    assert kunneth(KData(z2), KData(z2)) == KData(z2, z2)
    assert kunneth(KData(cyclic(3)), KData(k1=cyclic(6))) == KData(cyclic(3), cyclic(3))


def test_kunneth_by_oracles():
    # degree 0 gets the tensor product, degree 1 the Tor term
    z2 = cyclic(2)
    assert oracle_tensor(z2, z2) == z2 and oracle_tor(z2, z2) == z2
    z3, z6 = cyclic(3), cyclic(6)
    assert oracle_tensor(z3, z6) == z3 and oracle_tor(z3, z6) == z3


def test_suspend():
    assert suspend(POINT) == SUSPENSION
    k = KData(Z, cyclic(7))
    assert suspend(suspend(k)) == k
    assert suspend(k) == KData(cyclic(7), Z)
    assert suspend(KData()) == KData(TRIVIAL, TRIVIAL)


def _total_rank(k):
    return k.k0.rank + k.k1.rank


@settings(max_examples=100, deadline=None)
@given(kdatas, kdatas, kdatas)
def test_kunneth_laws(a, b, c):
    assert kunneth(a, b) == kunneth(b, a)
    assert kunneth(kunneth(a, b), c) == kunneth(a, kunneth(b, c))
    assert kunneth(a, POINT) == a
    assert kunneth(a, SUSPENSION) == suspend(a)
    assert _total_rank(kunneth(a, b)) == _total_rank(a) * _total_rank(b)
