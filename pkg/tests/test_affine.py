from fractions import Fraction as F
import json

import pytest

from lambdabracket.affine import (
    LieAlgebraData, WeylModule, admissible_weights, casimir_eigenvalue, casimir_matrix,
    central_charge, fusion_admissible, fusion_table, irrep, load_algebra, sl2, sl2_irrep,
    sugawara_weight, tensor_decompose, tensor_product,
)
from lambdabracket.linalg import Vector, matmul

SL2 = sl2()
half = F(1, 2)


def spin(w):
    return w[0] / 2


def sl2_closed_rule(j1, j2, j, k):
    # independent oracle: the level-k truncation of Clebsch-Gordan
    return abs(j1 - j2) <= j <= min(j1 + j2, k - j1 - j2) and (j1 + j2 + j).denominator == 1


def test_sl2_data():
    assert SL2.theta == (2,)
    assert SL2.form == [[0, 0, 1], [0, 2, 0], [1, 0, 0]]
    assert SL2.weight_pair(SL2.theta, SL2.theta) == 2


@pytest.mark.parametrize("j, value", [(0, 0), (half, F(3, 2)), (1, 4)])
def test_casimir(j, value):
    assert casimir_eigenvalue(SL2, (2 * F(j),)) == value
    e = sl2_irrep(j)
    c = casimir_matrix(SL2, e.matrices)
    n = e.dimension
    assert c == [[value * (i == k) for k in range(n)] for i in range(n)]
    for m in e.matrices:
        assert matmul(c, m) == matmul(m, c)


def test_irrep_relations():
    for j in (0, half, 1, F(3, 2), 2):
        assert sl2_irrep(j).check_relations()
        assert sl2_irrep(j).dimension == 2 * j + 1


def test_sugawara_and_central_charge():
    assert sugawara_weight(SL2, (1,), 1) == F(1, 4)
    assert sugawara_weight(SL2, (2,), 2) == F(1, 2)
    assert sugawara_weight(SL2, (0,), 3) == 0
    assert central_charge(SL2, 1) == 1
    assert central_charge(SL2, 0) == 0
    assert central_charge(SL2, 2) == F(3, 2)
    with pytest.raises(ValueError):
        central_charge(SL2, -2)
    with pytest.raises(ValueError):
        sugawara_weight(SL2, (1,), -2)


@pytest.mark.parametrize("j1, j2, expected", [
    (half, half, [0, 1]), (1, half, [half, F(3, 2)]), (half, 0, [half])])
def test_tensor_decompose(j1, j2, expected):
    comps = tensor_decompose(sl2_irrep(j1), sl2_irrep(j2))
    assert sorted(spin(c.highest_weight) for c in comps) == expected
    assert sum(len(c.embedding) for c in comps) == (2 * j1 + 1) * (2 * j2 + 1)


def test_embeddings_are_equivariant():
    e1, e2 = sl2_irrep(1), sl2_irrep(1)
    mats = tensor_product(e1, e2)
    for c in tensor_decompose(e1, e2):
        target = irrep(SL2, c.highest_weight)
        emb = [[col[r] for col in c.embedding] for r in range(len(mats[0]))]
        for x, y in zip(mats, target.matrices):
            assert matmul(x, emb) == matmul(emb, y)


def test_fusion_admissible_examples():
    assert fusion_admissible(SL2, 1, (1,), (1,), (0,)).admissible
    assert fusion_admissible(SL2, 2, (1,), (1,), (2,)).admissible
    with pytest.raises(ValueError):
        fusion_admissible(SL2, 1, (1,), (1,), (2,))


def test_fusion_table_small_levels():
    assert fusion_table(SL2, 0) == [((0,), (0,), (0,))]
    table = {(spin(a), spin(b), spin(c)) for a, b, c in fusion_table(SL2, 1)}
    assert table == {(0, 0, 0), (0, half, half), (half, 0, half), (half, half, 0)}


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fusion_table_matches_closed_rule(k):
    ws = admissible_weights(SL2, k)
    expected = [(a, b, c) for a in ws for b in ws for c in ws
                if sl2_closed_rule(spin(a), spin(b), spin(c), k)]
    assert fusion_table(SL2, k) == expected


def test_sl3_level_one_is_z3():
    sl3 = load_algebra(name="sl3")
    assert sl3.theta == (1, 1)
    assert central_charge(sl3, 1) == 2
    assert sugawara_weight(sl3, (1, 0), 1) == F(1, 3)
    table = fusion_table(sl3, 1)
    charge = {(0, 0): 0, (1, 0): 1, (0, 1): 2}
    got = {(charge[a], charge[b], charge[c]) for a, b, c in table}
    assert got == {(x, y, (x + y) % 3) for x in range(3) for y in range(3)}


def test_sl3_multiplicity_two_adjoint():
    sl3 = load_algebra(name="sl3")
    comps = tensor_decompose(irrep(sl3, (1, 1)), irrep(sl3, (1, 1)))
    assert sum(1 for c in comps if c.highest_weight == (1, 1)) == 2
    # at level 2 only one of the two copies survives the projection test
    res = fusion_admissible(sl3, 2, (1, 1), (1, 1), (1, 1))
    assert (res.multiplicity, res.rank, res.admissible) == (2, 1, True)


def test_algebra_file_round_trip(tmp_path):
    path = tmp_path / "sl2.json"
    path.write_text(SL2.to_json())
    doc = json.loads(path.read_text())
    assert all(isinstance(x, str) for row in doc["form"] for x in row)
    again = load_algebra(path)
    assert again.structure == SL2.structure and again.form == SL2.form


def test_algebra_validation_rejects_bad_form():
    doc = json.loads(SL2.to_json())
    doc["form"] = [["0", "0", "2"], ["0", "4", "0"], ["2", "0", "0"]]
    with pytest.raises(ValueError):
        LieAlgebraData.from_json(json.dumps(doc))


def test_weyl_module_commutators():
    m = WeylModule.affine(SL2, 3, sl2_irrep(half))
    v = m.act(2, -1, m.act(0, -2, m.vector((), 1)))
    for a in range(3):
        for b in range(3):
            for p in range(-2, 3):
                for q in range(-2, 3):
                    lhs = m.act(a, p, m.act(b, q, v)) - m.act(b, q, m.act(a, p, v))
                    rhs = Vector()
                    for c, x in m.bracket(a, b):
                        rhs = rhs + m.act(c, p + q, v) * x
                    if p + q == 0:
                        rhs = rhs + v * (p * SL2.form[a][b] * 3)
                    assert lhs == rhs


def test_heisenberg_translation():
    fock = WeylModule.heisenberg(F(2, 3))
    assert fock.translate_base(((), 0)) == Vector({(((1, 0),), 0): F(2, 3)})
    vac = WeylModule.affine(SL2, 1)
    assert vac.translate_base(((), 0)) == Vector()
