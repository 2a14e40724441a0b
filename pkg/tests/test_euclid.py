from fractions import Fraction

import pytest

from e2quiver.euclid import (
    EuclideanModule,
    apply_word,
    basis_vectors,
    char_shift,
    from_quiver,
    graded_vector,
    hom_dimension,
    proj,
    to_quiver,
    validate,
    weight_runs,
)
from e2quiver.linalg import Matrix
from e2quiver.moduli import Partition, young_module
from e2quiver.preproj import QuiverRep, direct_sum, hom_basis, split
from e2quiver.quiver import DimensionVector, Window

ONE = Matrix.from_rows([[1]])


def ladder(p_plus_scalar, p_minus_scalar) -> EuclideanModule:
    """Two weight spaces 0 and 1, both one-dimensional."""
    dims = DimensionVector({0: 1, 1: 1})
    p_plus = {0: Matrix.from_rows([[p_plus_scalar]])}
    p_minus = {1: Matrix.from_rows([[p_minus_scalar]])}
    return EuclideanModule(dims, p_plus, p_minus)


# --- validation -----------------------------------------------------------------


def test_zero_actions_valid():
    m = EuclideanModule(DimensionVector({0: 2, 3: 1}))
    assert validate(m) == []


def test_young_module_valid():
    gs = young_module(Partition.of(2, 1), 0)
    assert validate(gs.module) == []


def test_commutator_violation_detected():
    m = ladder(1, 1)
    problems = validate(m)
    assert any("weight 0" in p for p in problems)


def test_shape_violation_reported_not_thrown():
    m = EuclideanModule(DimensionVector({0: 1}), p_plus={0: Matrix.from_rows([[1, 2]])})
    assert any("shape" in p for p in validate(m))


# --- the dictionary -------------------------------------------------------------


def test_to_quiver_zero_maps():
    m = EuclideanModule(DimensionVector({0: 1, 1: 1}))
    x = to_quiver(m)
    assert x.window == Window(0, 1)
    assert x.map("h0").is_zero() and x.map("hbar0").is_zero()


def test_to_quiver_young_two_boxes():
    # one row of two boxes: raising is the identity V_0 -> V_1, lowering vanishes
    gs = young_module(Partition.of(2), 0)
    x = to_quiver(gs.module)
    assert x.window == Window(0, 1)
    assert x.map("h0") == ONE
    assert x.map("hbar0").is_zero()


def test_round_trip_module_to_quiver(young_corpus):
    for _, gs in young_corpus:
        m = gs.module
        assert from_quiver(to_quiver(m)) == m


def test_round_trip_quiver_to_module(thin16):
    for x in thin16:
        assert to_quiver(from_quiver(x)) == x


def test_to_quiver_requires_validity():
    with pytest.raises(ValueError):
        to_quiver(ladder(1, 1))


def test_from_quiver_requires_relations():
    x = QuiverRep(
        Window(0, 1),
        DimensionVector({0: 1, 1: 1}),
        {"h0": ONE, "hbar0": ONE},
    )
    with pytest.raises(ValueError):
        from_quiver(x)


def test_from_quiver_of_thin_representatives(thin16):
    for x in thin16:
        m = from_quiver(x)
        assert validate(m) == []
        assert m.dims == DimensionVector({k: 1 for k in range(5)})


def test_commutator_becomes_relation():
    gs = young_module(Partition.of(2, 2), 0)
    x = to_quiver(gs.module)
    from e2quiver.preproj import check_relations

    assert check_relations(x) == []
    # both composites through the corner box land on the last box, nonzero
    m = gs.module
    down_up = m.minus(1) * m.plus(0)
    up_down = m.plus(-1) * m.minus(0)
    assert down_up == up_down
    assert not down_up.is_zero()


# --- character shift --------------------------------------------------------------


def test_char_shift_identity():
    m = young_module(Partition.of(3, 1), 0).module
    assert char_shift(m, 0) == m


def test_char_shift_inverse():
    m = young_module(Partition.of(2, 1), 0).module
    assert char_shift(char_shift(m, 2), -2) == m


def test_char_shift_matches_anchored_construction():
    for a in (-2, 1, 3):
        shifted = char_shift(young_module(Partition.of(2, 1), 0).module, a)
        direct = young_module(Partition.of(2, 1), a).module
        assert shifted == direct


def test_char_shift_commutes_with_to_quiver():
    m = young_module(Partition.of(2, 2, 1), 0).module
    x = to_quiver(char_shift(m, 3))
    y = to_quiver(m)
    assert x.window == Window(y.window.a + 3, y.window.b + 3)
    for i in y.window.arrow_indices():
        assert x.map(f"h{i + 3}") == y.map(f"h{i}")
        assert x.map(f"hbar{i + 3}") == y.map(f"hbar{i}")


# --- word actions ------------------------------------------------------------------


def test_projections_orthogonal():
    m = young_module(Partition.of(2, 1), 0).module
    for k, _, v in basis_vectors(m):
        assert apply_word(m, [proj(k + 1), proj(k)], v) == {}
        assert apply_word(m, [proj(k), proj(k)], v) == v


def test_projection_commutation_with_raising():
    m = young_module(Partition.of(2, 1), 0).module
    for k in range(-2, 3):
        for _, _, v in basis_vectors(m):
            left = apply_word(m, [proj(k + 1), "P+"], v)
            right = apply_word(m, ["P+", proj(k)], v)
            assert left == right


def test_projection_sum_is_identity():
    m = young_module(Partition.of(3, 2), 0).module
    for _, _, v in basis_vectors(m):
        total = {}
        for k in m.dims.support():
            for w, coords in apply_word(m, [proj(k)], v).items():
                acc = total.get(w, (Fraction(0),) * len(coords))
                total[w] = tuple(a + b for a, b in zip(acc, coords))
        total = {w: c for w, c in total.items() if any(x != 0 for x in c)}
        assert total == v


def test_cartan_letter_scales_by_weight():
    m = young_module(Partition.of(2), 0).module
    v = graded_vector({1: ["1"]})
    assert apply_word(m, ["L"], v) == v
    assert apply_word(m, ["L"], graded_vector({0: ["1"]})) == {}


def test_word_actions_on_young_module():
    # raising the generator of the two-box row reaches the second box
    m = young_module(Partition.of(2), 0).module
    v = graded_vector({0: ["1"]})
    assert apply_word(m, ["P+"], v) == {1: (Fraction(1),)}
    assert apply_word(m, ["P-"], v) == {}


def test_unknown_letter_rejected():
    m = young_module(Partition.of(1), 0).module
    with pytest.raises(ValueError):
        apply_word(m, ["Q"], graded_vector({0: ["1"]}))


def test_commuting_composites_word_identity(random_thin_corpus):
    for m in random_thin_corpus[:10]:
        for k in range(min(m.dims.support()) - 1, max(m.dims.support()) + 2):
            for _, _, v in basis_vectors(m):
                left = apply_word(m, ["P+", "P-", proj(k)], v)
                right = apply_word(m, ["P-", "P+", proj(k)], v)
                assert left == right


# --- weight runs --------------------------------------------------------------------


def test_weight_runs_split_and_guarantee():
    report = weight_runs({0, 1, 2, 5, 6})
    assert report.runs == ((0, 2), (5, 6))
    assert report.max_run_length == 3
    assert report.finite_type_guarantee


def test_weight_runs_five_consecutive():
    report = weight_runs({0, 1, 2, 3, 4})
    assert report.runs == ((0, 4),)
    assert report.max_run_length == 5
    assert not report.finite_type_guarantee


def test_weight_runs_empty():
    report = weight_runs(set())
    assert report.runs == ()
    assert report.finite_type_guarantee


# --- Hom agreement across the dictionary ---------------------------------------------


def test_hom_dimension_agrees_with_quiver_side(thin16, young_corpus):
    modules = [from_quiver(x) for x in thin16[:5]]
    modules += [gs.module for _, gs in young_corpus[:8]]
    for m1 in modules:
        for m2 in modules:
            lhs = hom_dimension(m1, m2)
            rhs = hom_basis(to_quiver(m1), to_quiver(m2)).dim
            assert lhs == rhs


def test_gap_support_module_splits():
    # a valid module supported on {0, 3} cannot be indecomposable
    x = direct_sum(
        QuiverRep(Window(0, 0), DimensionVector.unit(0)),
        QuiverRep(Window(3, 3), DimensionVector.unit(3)),
    )
    parts = split(x)
    assert parts is not None
    assert sorted(p.dims.support() for p in parts) == [(0,), (3,)]


# --- serialization --------------------------------------------------------------------


def test_module_json_round_trip(young_corpus):
    for _, gs in young_corpus[:6]:
        doc = gs.module.to_json_dict()
        assert EuclideanModule.from_json_dict(doc) == gs.module


def test_module_json_zero_maps_omitted():
    m = EuclideanModule(DimensionVector({0: 1, 1: 1}))
    doc = m.to_json_dict()
    assert doc["p_plus"] == {} and doc["p_minus"] == {}
