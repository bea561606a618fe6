from fractions import Fraction

import pytest

from dcurve import polys
from dcurve.ext import (
    INF,
    ext1_cyclic,
    ext_table,
    ext_table_general,
    expected_ext1,
    non_split_witness,
    presentation,
)
from dcurve.modules import build_a, build_malpha, build_minfty
from dcurve.opalgebra import HomogeneousComponent
from dcurve.semigroup import NATURALS, PreconditionError, make_semigroup

G23 = make_semigroup([2, 3])
HALF, THIRD = Fraction(1, 2), Fraction(1, 3)


def test_ext1_cyclic_examples():
    # t on A: cokernel k[t]/t in degree 0
    res = ext1_cyclic(HomogeneousComponent(1, polys.ONE), build_a(NATURALS))
    assert res.ext1[0] == 1 and sum(res.ext1.values()) == 1 and res.stable
    # d on M_inf: f_j -> f_(j+1) has cokernel spanned by f_0
    res = ext1_cyclic(HomogeneousComponent(-1, polys.X), build_minfty(NATURALS))
    assert sum(res.ext1.values()) == 1 and res.ext1[0] == 1
    # E - 1/2 on M_1/3: scalars 1/3 - 1/2 + n never vanish
    res = ext1_cyclic(HomogeneousComponent(0, polys.make([-HALF, 1])), build_malpha(NATURALS, THIRD))
    assert not any(res.ext1.values()) and not any(res.hom.values())


def test_ext1_cyclic_rejects_bad_operators():
    with pytest.raises(PreconditionError):
        ext1_cyclic(HomogeneousComponent(0, polys.ZERO), build_a(NATURALS))
    with pytest.raises(PreconditionError):
        ext1_cyclic(HomogeneousComponent(-1, polys.X), build_a(G23))


def test_presentations():
    assert presentation(INF) == HomogeneousComponent(1, polys.ONE)
    assert presentation(0) == HomogeneousComponent(-1, polys.X)
    assert presentation(HALF, G23) == HomogeneousComponent(0, polys.make([-HALF, 1]))
    with pytest.raises(PreconditionError):
        presentation(0, G23)


def test_table_examples():
    table = {(e.source, e.target): e for e in ext_table([HALF, THIRD])}
    assert len(table) == 16
    assert table[(0, INF)].ext1_dim == 1
    assert table[(HALF, HALF)].ext1_dim == 1
    assert table[(HALF, THIRD)].ext1_dim == 0


def test_table_matches_classification():
    entries = ext_table()
    assert len(entries) == 25
    for e in entries:
        assert e.ext1_dim == expected_ext1(e.source, e.target) == e.expected
        if e.ext1_dim:
            assert e.graded_degree == 0
    nonzero_off = {(e.source, e.target) for e in entries if e.ext1_dim and e.source != e.target}
    assert nonzero_off == {(0, INF), (INF, 0)}
    for e in entries:
        if e.source != e.target and INF not in (e.source, e.target) and 0 not in (e.source, e.target):
            assert e.hom_dim == 0 and e.ext1_dim == 0


def test_general_gamma_rows():
    for e in ext_table_general(G23, [HALF, THIRD]):
        assert e.matches and e.gamma == "<2,3>"


def test_table_independent_of_thread_count(monkeypatch):
    monkeypatch.setenv("DMOD_CURVE_THREADS", "1")
    one = [e.to_json() for e in ext_table([HALF])]
    monkeypatch.setenv("DMOD_CURVE_THREADS", "4")
    four = [e.to_json() for e in ext_table([HALF])]
    assert one == four and len(one) == 9


def test_alpha_samples_outside_unit_interval_rejected():
    for bad in (0, 1, Fraction(3, 2)):
        with pytest.raises(PreconditionError):
            ext_table([bad])


def test_entry_json_names_both_orders():
    e = ext_table([HALF])[1]
    js = e.to_json()
    assert js["name"] == f"Ext1(M_{js['source']}, M_{js['target']})_0"


def test_non_split_witness():
    w = non_split_witness()
    assert w.sub_is_a_shift and w.top_is_minfty and w.hom_minfty_middle == 0 and w.ok
