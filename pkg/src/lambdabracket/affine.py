"""Finite-dimensional simple Lie algebras, their irreps, and level-k fusion.

Weights are Dynkin labels ``(lambda(h_1), ..., lambda(h_r))`` relative to
Chevalley coroots ``h_i``.  With ``G_ij = (h_i, h_j)`` the induced form on
weights is ``(lambda, mu) = lambda^T G^{-1} mu``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .lambda_core import Q
from .linalg import Vector, identity, kron, matmul, nullspace, rank, rref, solve

__all__ = [
    "LieAlgebraData", "IrrepData", "Component", "FusionResult",
    "sl2", "sl2_irrep", "load_algebra", "irrep",
    "casimir_matrix", "casimir_eigenvalue", "sugawara_weight", "central_charge",
    "tensor_product", "tensor_decompose", "admissible_weights", "fusion_admissible",
    "fusion_table", "WeylModule",
]

Matrix = list  # list of rows of Fractions


def _zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def _add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _scale(a: Matrix, s) -> Matrix:
    return [[x * s for x in row] for row in a]


def _apply(a: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return _add(matmul(a, b), _scale(matmul(b, a), -1))


def _trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def _inverse(a: Matrix) -> Matrix:
    n = len(a)
    cols = [solve(a, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# --- Lie algebra data ------------------------------------------------------

@dataclass
class LieAlgebraData:
    """Structure constants ``[x_i, x_j] = sum_k c[i][j][k] x_k`` plus Chevalley data.

    ``chevalley`` lists basis indices of ``e_i``, ``h_i``, ``f_i`` for each
    simple root; ``e_theta`` is the index of a highest-root vector.  The
    invariant form is recomputed as ``Tr(ad a ad b)/(2 h_dual)`` and compared
    with the supplied one.
    """

    name: str
    labels: tuple
    structure: list          # dim x dim x dim
    form: Matrix
    h_dual: int
    chevalley: dict
    e_theta: int
    fundamental_irreps: list = field(default_factory=list)

    def __post_init__(self):
        self.labels = tuple(self.labels)
        n = self.dimension
        self.structure = [[[Q(x) for x in self.structure[i][j]] for j in range(n)] for i in range(n)]
        self.form = [[Q(x) for x in row] for row in self.form]
        self.validate()

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return len(self.chevalley["h"])

    def bracket(self, i: int, j: int) -> Vector:
        return Vector({k: c for k, c in enumerate(self.structure[i][j]) if c})

    def ad(self, i: int) -> Matrix:
        n = self.dimension
        return [[self.structure[i][j][k] for j in range(n)] for k in range(n)]

    def killing_normalized(self) -> Matrix:
        return _normalized_killing(self.structure, self.h_dual)

    def pair(self, a: Sequence, b: Sequence) -> Fraction:
        """Form on the Lie algebra, for coordinate vectors ``a``, ``b``."""
        return sum((a[i] * self.form[i][j] * b[j] for i in range(self.dimension)
                    for j in range(self.dimension)), Fraction(0))

    @property
    def inverse_form(self) -> Matrix:
        if not hasattr(self, "_inv_form"):
            self._inv_form = _inverse(self.form)
        return self._inv_form

    @property
    def coroot_gram(self) -> Matrix:
        hs = self.chevalley["h"]
        return [[self.form[a][b] for b in hs] for a in hs]

    def weight_pair(self, lam: Sequence, mu: Sequence) -> Fraction:
        g_inv = _inverse(self.coroot_gram)
        r = self.rank
        return sum((Q(lam[i]) * g_inv[i][j] * Q(mu[j]) for i in range(r) for j in range(r)), Fraction(0))

    @property
    def theta(self) -> tuple:
        """Dynkin labels of the highest root, read off from ``[h_i, e_theta]``."""
        out = []
        for h in self.chevalley["h"]:
            img = self.bracket(h, self.e_theta)
            if set(img.keys()) - {self.e_theta}:
                raise ValueError("e_theta is not a weight vector for the Cartan subalgebra")
            out.append(img[self.e_theta])
        return tuple(out)

    @property
    def rho(self) -> tuple:
        return (Fraction(1),) * self.rank

    def validate(self) -> None:
        n = self.dimension
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.structure[i][j][k] != -self.structure[j][i][k]:
                        raise ValueError(f"structure constants not antisymmetric at {(i, j, k)}")
        a = [self.ad(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = _commutator(a[i], a[j])
                rhs = _zeros(n)
                for k, c in self.bracket(i, j).items():
                    rhs = _add(rhs, _scale(a[k], c))
                if lhs != rhs:
                    raise ValueError(f"Jacobi identity fails for {(self.labels[i], self.labels[j])}")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    s = sum((self.structure[x][y][w] * self.form[w][z] + self.form[y][w] * self.structure[x][z][w]
                             for w in range(n)), Fraction(0))
                    if s:
                        raise ValueError("form is not invariant")
        if self.killing_normalized() != self.form:
            raise ValueError("form differs from Tr(ad a ad b)/(2 h_dual)")
        if self.weight_pair(self.theta, self.theta) != 2:
            raise ValueError("(theta, theta) != 2")

    # serialization
    def to_json(self) -> str:
        n = self.dimension
        consts = [[i, j, k, str(self.structure[i][j][k])] for i in range(n) for j in range(n)
                  for k in range(n) if self.structure[i][j][k] and i < j]
        doc = {
            "name": self.name,
            "labels": list(self.labels),
            "structure_constants": consts,
            "form": [[str(x) for x in row] for row in self.form],
            "dual_coxeter": self.h_dual,
            "highest_root": [str(x) for x in self.theta],
            "chevalley": self.chevalley,
            "e_theta": self.e_theta,
            "fundamental_irreps": [
                {"highest_weight": [str(x) for x in rep["highest_weight"]],
                 "matrices": [[[str(x) for x in row] for row in m] for m in rep["matrices"]]}
                for rep in self.fundamental_irreps],
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "LieAlgebraData":
        doc = json.loads(text)
        labels = doc["labels"]
        n = len(labels)
        structure = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, v in doc["structure_constants"]:
            structure[i][j][k] = Q(v)
            structure[j][i][k] = -Q(v)
        alg = cls(
            name=doc.get("name", "custom"),
            labels=labels,
            structure=structure,
            form=doc["form"],
            h_dual=int(doc["dual_coxeter"]),
            chevalley=doc["chevalley"],
            e_theta=int(doc["e_theta"]),
            fundamental_irreps=[
                {"highest_weight": tuple(Q(x) for x in rep["highest_weight"]),
                 "matrices": [[[Q(x) for x in row] for row in m] for m in rep["matrices"]]}
                for rep in doc.get("fundamental_irreps", [])],
        )
        if "highest_root" in doc and tuple(Q(x) for x in doc["highest_root"]) != alg.theta:
            raise ValueError("declared highest root disagrees with the structure constants")
        return alg

    @classmethod
    def from_matrices(cls, name, labels, matrices, h_dual, chevalley, e_theta, **kw) -> "LieAlgebraData":
        """Build structure constants from a faithful matrix realization."""
        n = len(matrices)
        flat = [[x for row in m for x in row] for m in matrices]
        cols = [[flat[k][r] for k in range(n)] for r in range(len(flat[0]))]
        structure = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                br = [x for row in _commutator(matrices[i], matrices[j]) for x in row]
                structure[i][j] = _least_squares_exact(cols, br)
        form = _normalized_killing(structure, h_dual)
        return cls(name=name, labels=labels, structure=structure, form=form, h_dual=h_dual,
                   chevalley=chevalley, e_theta=e_theta, **kw)


def _normalized_killing(structure, h_dual) -> Matrix:
    n = len(structure)
    ads = [[[structure[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    return [[_trace(matmul(ads[i], ads[j])) / (2 * h_dual) for j in range(n)] for i in range(n)]


def _least_squares_exact(cols, target):
    """Solve ``sum_k x_k basis_k = target`` where ``cols[r][k]`` is entry r of basis k."""
    m, pivots = rref([row + [t] for row, t in zip(cols, target)])
    n = len(cols[0])
    if n in pivots:
        raise ValueError("matrices are not closed under the commutator")
    x = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        x[p] = m[r][n]
    return x


@lru_cache(maxsize=None)
def sl2() -> LieAlgebraData:
    """``sl_2`` in the basis ``(e, h, f)``; ``(e, f) = 1``, ``(h, h) = 2``."""
    e = [[0, 1], [0, 0]]
    h = [[1, 0], [0, -1]]
    f = [[0, 0], [1, 0]]
    mats = [[[Fraction(x) for x in row] for row in m] for m in (e, h, f)]
    return LieAlgebraData.from_matrices(
        "sl2", ("e", "h", "f"), mats, 2, {"e": [0], "h": [1], "f": [2]}, 0,
        fundamental_irreps=[{"highest_weight": (Fraction(1),), "matrices": mats}])


def load_algebra(path=None, name: str | None = None) -> LieAlgebraData:
    """Load a Lie algebra data file, or a bundled one by ``name``."""
    if path is not None:
        return LieAlgebraData.from_json(Path(path).read_text())
    if name == "sl2":
        return sl2()
    text = resources.files("lambdabracket").joinpath("data", f"{name}.json").read_text()
    return LieAlgebraData.from_json(text)


# --- irreducible representations -------------------------------------------

@dataclass
class IrrepData:
    """Irrep ``E_alpha`` in the basis ``b_j = f_{w_1} ... f_{w_k} v``.

    ``words[j]`` is the index tuple ``(w_1, ..., w_k)`` of simple lowering
    operators producing ``b_j`` from the highest-weight vector ``v = b_0``;
    the same word list reproduces the basis of any copy of ``E_alpha``.
    """

    algebra: LieAlgebraData
    highest_weight: tuple
    matrices: list
    words: list

    @property
    def dimension(self) -> int:
        return len(self.words)

    def weight_of(self, j: int) -> tuple:
        return tuple(self.matrices[h][j][j] for h in self.algebra.chevalley["h"])

    def check_relations(self) -> bool:
        alg = self.algebra
        for i in range(alg.dimension):
            for j in range(alg.dimension):
                rhs = _zeros(self.dimension)
                for k, c in alg.bracket(i, j).items():
                    rhs = _add(rhs, _scale(self.matrices[k], c))
                if _commutator(self.matrices[i], self.matrices[j]) != rhs:
                    return False
        return True


def _apply_word(mats, fs, word, v):
    for i in reversed(word):
        v = _apply(mats[fs[i]], v)
    return v


def _cyclic_irrep(alg: LieAlgebraData, mats, hw_vec) -> IrrepData:
    """The submodule generated by a highest-weight vector, rebased on F-words."""
    fs = alg.chevalley["f"]
    vecs, words = [list(hw_vec)], [()]
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            for i in range(alg.rank):
                w = _apply(mats[fs[i]], vecs[idx])
                if any(w) and rank(vecs + [w]) > len(vecs):
                    vecs.append(w)
                    words.append((i,) + words[idx])
                    nxt.append(len(vecs) - 1)
        frontier = nxt
    cols = [[v[r] for v in vecs] for r in range(len(hw_vec))]
    new = []
    for m in mats:
        images = [_least_squares_exact(cols, _apply(m, v)) for v in vecs]
        new.append([[images[j][i] for j in range(len(vecs))] for i in range(len(vecs))])
    hw = tuple(_apply(mats[h], hw_vec)[_first_nonzero(hw_vec)] / hw_vec[_first_nonzero(hw_vec)]
               for h in alg.chevalley["h"])
    return IrrepData(alg, hw, new, words)


def _first_nonzero(v) -> int:
    return next(i for i, x in enumerate(v) if x)


def _highest_weight_vectors(alg: LieAlgebraData, mats) -> list:
    """Basis of ``ker(e_1) ∩ ... ∩ ker(e_r)`` made of weight vectors.

    Requires the Cartan matrices to be diagonal.
    """
    n = len(mats[0])
    hs = alg.chevalley["h"]
    for h in hs:
        if any(mats[h][i][j] for i in range(n) for j in range(n) if i != j):
            raise ValueError("Cartan generators must act diagonally")
    groups: dict = {}
    for i in range(n):
        groups.setdefault(tuple(mats[h][i][i] for h in hs), []).append(i)
    out = []
    for wt in sorted(groups, reverse=True):
        idx = groups[wt]
        rows = [[mats[e][r][c] for c in idx] for e in alg.chevalley["e"] for r in range(n)]
        for x in nullspace(rows, len(idx)):
            v = [Fraction(0)] * n
            for c, xc in zip(idx, x):
                v[c] = xc
            out.append((wt, v))
    return out


_IRREP_CACHE: dict = {}


def sl2_irrep(j) -> IrrepData:
    """Spin-``j`` irrep of ``sl_2``: ``h v_i = (2j-2i) v_i``, ``f v_i = (i+1) v_{i+1}``."""
    j = Q(j)
    if j < 0 or (2 * j).denominator != 1:
        raise ValueError(f"spin must be a nonnegative half-integer, got {j}")
    return irrep(sl2(), (2 * j,))


def irrep(alg: LieAlgebraData, weight: Sequence) -> IrrepData:
    """Irrep of highest weight ``weight`` (Dynkin labels)."""
    weight = tuple(Q(x) for x in weight)
    if any(x < 0 or x.denominator != 1 for x in weight) or len(weight) != alg.rank:
        raise ValueError(f"{weight} is not a dominant integral weight")
    key = (alg.name, weight)
    if key in _IRREP_CACHE:
        return _IRREP_CACHE[key]
    if alg.name == "sl2":
        mats = _sl2_matrices(weight[0] / 2)
        hw = [Fraction(int(i == 0)) for i in range(len(mats[0]))]
    elif not any(weight):
        mats = [[[Fraction(0)]] for _ in range(alg.dimension)]
        hw = [Fraction(1)]
    else:
        mats, hw = None, None
        for i, mult in enumerate(weight):
            fund = _fundamental(alg, i)
            for _ in range(int(mult)):
                if hw is None:
                    mats, hw = fund
                else:
                    mats = tensor_product_matrices(mats, fund[0])
                    hw = [a * b for a in hw for b in fund[1]]
    rep = _cyclic_irrep(alg, mats, hw)
    if rep.highest_weight != weight:
        raise ArithmeticError("highest-weight extraction produced the wrong weight")
    _IRREP_CACHE[key] = rep
    return rep


def _sl2_matrices(j: Fraction):
    d = int(2 * j) + 1
    e, h, f = _zeros(d), _zeros(d), _zeros(d)
    for i in range(d):
        h[i][i] = 2 * j - 2 * i
        if i + 1 < d:
            f[i + 1][i] = Fraction(i + 1)
        if i >= 1:
            e[i - 1][i] = 2 * j - i + 1
    return [e, h, f]


def _fundamental(alg: LieAlgebraData, i: int):
    target = tuple(Fraction(int(k == i)) for k in range(alg.rank))
    for rep in alg.fundamental_irreps:
        if tuple(rep["highest_weight"]) == target:
            for wt, v in _highest_weight_vectors(alg, rep["matrices"]):
                if wt == target:
                    return rep["matrices"], v
    raise ValueError(f"{alg.name}: no fundamental irrep with highest weight {target} supplied")


def tensor_product_matrices(m1, m2):
    i1, i2 = identity(len(m1[0])), identity(len(m2[0]))
    return [_add(kron(a, i2), kron(i1, b)) for a, b in zip(m1, m2)]


def tensor_product(e1: IrrepData, e2: IrrepData):
    return tensor_product_matrices(e1.matrices, e2.matrices)


def casimir_matrix(alg: LieAlgebraData, mats) -> Matrix:
    """``C = sum_{ab} (G^{-1})_{ab} x_a x_b`` for a representation ``mats``."""
    n = len(mats[0])
    out = _zeros(n)
    inv = alg.inverse_form
    for a in range(alg.dimension):
        for b in range(alg.dimension):
            if inv[a][b]:
                out = _add(out, _scale(matmul(mats[a], mats[b]), inv[a][b]))
    return out


def casimir_eigenvalue(alg: LieAlgebraData, weight: Sequence) -> Fraction:
    weight = tuple(Q(x) for x in weight)
    shifted = tuple(w + 2 * r for w, r in zip(weight, alg.rho))
    return alg.weight_pair(weight, shifted)


def sugawara_weight(alg: LieAlgebraData, weight: Sequence, k) -> Fraction:
    k = Q(k)
    if k == -alg.h_dual:
        raise ValueError("critical level k = -h_dual")
    return casimir_eigenvalue(alg, weight) / (2 * (k + alg.h_dual))


def central_charge(alg: LieAlgebraData, k) -> Fraction:
    k = Q(k)
    if k == -alg.h_dual:
        raise ValueError("critical level k = -h_dual")
    return k * alg.dimension / (k + alg.h_dual)


# --- tensor products and fusion --------------------------------------------

@dataclass
class Component:
    """One irreducible summand of ``E_1 ⊗ E_2`` and its embedding columns."""

    highest_weight: tuple
    copy: int
    embedding: list      # embedding[j] = image of basis vector b_j


def tensor_decompose(e1: IrrepData, e2: IrrepData) -> list[Component]:
    """Decompose ``E_1 ⊗ E_2`` into explicit irreducible copies."""
    alg = e1.algebra
    mats = tensor_product(e1, e2)
    fs = alg.chevalley["f"]
    comps: list[Component] = []
    counts: dict = {}
    for wt, u in _highest_weight_vectors(alg, mats):
        target = irrep(alg, wt)
        cols = [_apply_word(mats, fs, w, u) for w in target.words]
        c = counts.get(wt, 0)
        counts[wt] = c + 1
        comps.append(Component(wt, c, cols))
    if sum(len(c.embedding) for c in comps) != e1.dimension * e2.dimension:
        raise ArithmeticError("tensor decomposition dimensions do not add up")
    return comps


def _coordinates(comps: list[Component], v: Sequence) -> list[list[Fraction]]:
    columns = [col for c in comps for col in c.embedding]
    rows = [[col[r] for col in columns] for r in range(len(v))]
    x = solve(rows, v)
    out, pos = [], 0
    for c in comps:
        out.append(x[pos:pos + len(c.embedding)])
        pos += len(c.embedding)
    return out


def level_pairing_theta(alg: LieAlgebraData, weight) -> Fraction:
    return alg.weight_pair(weight, alg.theta)


def admissible_weights(alg: LieAlgebraData, k: int) -> list[tuple]:
    """Dominant integral weights with ``(alpha, theta) <= k``, lexicographic."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    out = []
    for labels in itertools.product(range(k + 1), repeat=alg.rank):
        w = tuple(Fraction(x) for x in labels)
        if level_pairing_theta(alg, w) <= k:
            out.append(w)
    return out


@dataclass
class FusionResult:
    admissible: bool
    multiplicity: int
    rank: int
    power: int
    reason: str


def _check_weight(alg, k, w, name):
    w = tuple(Q(x) for x in w)
    if len(w) != alg.rank or any(x < 0 or x.denominator != 1 for x in w):
        raise ValueError(f"{name}={w} is not a dominant integral weight")
    if level_pairing_theta(alg, w) > k:
        raise ValueError(f"{name}={w} is not admissible at level {k}: (alpha, theta) > k")
    return w


def fusion_admissible(alg: LieAlgebraData, k: int, a1, a2, a) -> FusionResult:
    """Singular-vector test for the fusion ``E_{a1} x E_{a2} -> E_a`` at level ``k``.

    With ``l = k - (a2, theta) + 1`` every g-equivariant map
    ``P: E_{a1} ⊗ E_{a2} -> E_a`` surviving in an intertwiner must kill
    ``(e_theta^l x) ⊗ b`` for all ``x`` in ``E_{a1}``, ``b`` the highest-weight
    vector of ``E_{a2}``.  Such maps form a space of dimension equal to the
    multiplicity ``m`` of ``E_a``.  The surviving subspace has dimension
    ``m - rank``, so the triple passes iff ``rank < m``.
    """
    a1, a2, a = (_check_weight(alg, k, w, n) for w, n in ((a1, "alpha1"), (a2, "alpha2"), (a, "alpha")))
    e1, e2 = irrep(alg, a1), irrep(alg, a2)
    comps = tensor_decompose(e1, e2)
    copies = [i for i, c in enumerate(comps) if c.highest_weight == a]
    l = int(k - level_pairing_theta(alg, a2) + 1)
    if not copies:
        return FusionResult(False, 0, 0, l, "E_alpha does not occur in the tensor product")
    eth = identity(e1.dimension)
    for _ in range(l):
        eth = matmul(e1.matrices[alg.e_theta], eth)
    b = [Fraction(int(i == 0)) for i in range(e2.dimension)]
    rows = []
    for j in range(e1.dimension):
        x = [eth[r][j] for r in range(e1.dimension)]
        w = [xi * bi for xi in x for bi in b]
        if not any(w):
            continue
        coords = _coordinates(comps, w)
        for t in range(len(comps[copies[0]].embedding)):
            rows.append([coords[c][t] for c in copies])
    r = rank(rows) if rows else 0
    m = len(copies)
    ok = r < m
    reason = ("projection condition satisfied" if ok else
              "every equivariant projection is nonzero on (e_theta^l x) ⊗ b")
    if m > 1:
        reason += f" (multiplicity {m}, {m - r} surviving)"
    return FusionResult(ok, m, r, l, reason)


def fusion_table(alg: LieAlgebraData, k: int, max_level: int = 12) -> list[tuple]:
    """All admissible triples ``(a1, a2, a)`` at level ``k`` in lexicographic order."""
    if k > max_level:
        raise ValueError(f"level {k} exceeds the configured bound {max_level}")
    ws = admissible_weights(alg, k)
    return [(x, y, z) for x in ws for y in ws for z in ws if fusion_admissible(alg, k, x, y, z).admissible]


# --- Weyl modules ----------------------------------------------------------

class WeylModule:
    """Module ``U(g[t^-1] t^-1) ⊗ E`` over the affine algebra at level ``k``.

    Basis keys are ``(word, e)`` where ``word`` is a nonincreasing tuple of
    ``(n, a)`` with ``n >= 1`` standing for ``x_a t^{-n}``, and ``e`` indexes
    the basis of ``E``.  ``J_a`` has field modes ``J_a(p) = x_a t^p``.  The
    translation on the degree-zero layer is the Sugawara ``L_{-1}``.
    """

    def __init__(self, structure, form, level, matrices, shift, labels=None):
        self.structure = structure
        self.form = [[Q(x) for x in row] for row in form]
        self.inverse_form = _inverse(self.form)
        self.level = Q(level)
        self.matrices = matrices
        self.shift = Q(shift)
        if self.shift == 0:
            raise ValueError("critical level k = -h_dual")
        n = len(self.form)
        self.labels = tuple(labels) if labels else tuple(range(n))
        self.generators = tuple(range(n))
        self.generator_weight = {a: 1 for a in self.generators}
        self.dim_e = len(matrices[0])
        self._cache: dict = {}

    @classmethod
    def affine(cls, alg: LieAlgebraData, k, rep: IrrepData | None = None) -> "WeylModule":
        mats = rep.matrices if rep is not None else [[[Fraction(0)]] for _ in range(alg.dimension)]
        m = cls(alg.structure, alg.form, k, mats, Q(k) + alg.h_dual, alg.labels)
        m.algebra, m.rep = alg, rep
        return m

    @classmethod
    def heisenberg(cls, alpha=0) -> "WeylModule":
        """Fock module ``F_alpha``: ``[b_m, b_n] = m delta_{m,-n}``, ``b_0 = alpha``."""
        m = cls([[[Fraction(0)]]], [[1]], 1, [[[Q(alpha)]]], 1, ("b",))
        m.alpha = Q(alpha)
        return m

    def __repr__(self) -> str:
        return f"WeylModule(level={self.level}, dim E={self.dim_e})"

    def vector(self, word=(), e: int = 0) -> Vector:
        return Vector.basis((tuple(word), e))

    @property
    def highest_weight_vector(self) -> Vector:
        return self.vector()

    @property
    def base_keys(self) -> tuple:
        return tuple(((), e) for e in range(self.dim_e))

    def degree(self, key) -> int:
        return sum(n for n, _ in key[0])

    def split(self, key):
        word, e = key
        if not word:
            return None
        n, a = word[0]
        return a, -n, (word[1:], e)

    def bracket(self, a: int, b: int):
        return [(c, x) for c, x in enumerate(self.structure[a][b]) if x]

    def mode(self, a, p: int, key) -> Vector:
        ck = (a, p, key)
        hit = self._cache.get(ck)
        if hit is None:
            hit = self._cache[ck] = self._mode(a, p, key)
        return hit

    def _mode(self, a, p, key) -> Vector:
        word, e = key
        if not word:
            if p > 0:
                return Vector()
            if p == 0:
                m = self.matrices[a]
                return Vector({((), i): m[i][e] for i in range(self.dim_e) if m[i][e]})
            return Vector.basis((((-p, a),), e))
        n1, a1 = word[0]
        rest = (word[1:], e)
        if p < 0 and (-p, a) >= (n1, a1):
            return Vector.basis((((-p, a),) + word, e))
        out = self.act(a1, -n1, self.mode(a, p, rest))
        for c, x in self.bracket(a, a1):
            out = out + self.mode(c, p - n1, rest) * x
        if p == n1 and self.form[a][a1] and self.level:
            out = out + Vector.basis(rest, p * self.form[a][a1] * self.level)
        return out

    def act(self, a, p: int, v: Vector) -> Vector:
        out = Vector()
        for key, c in v.items():
            out = out + self.mode(a, p, key) * c
        return out

    def translate_base(self, key) -> Vector:
        if self.degree(key):
            raise ValueError("translate_base expects a degree-zero key")
        out = Vector()
        for a in self.generators:
            for b in self.generators:
                g = self.inverse_form[a][b]
                if g:
                    out = out + self.act(a, -1, self.mode(b, 0, key)) * g
        return out * (1 / self.shift)
