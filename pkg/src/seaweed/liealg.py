"""Finite-dimensional Lie algebras over Q by structure constants.

Hosts the Kirillov form B_phi(x, y) = phi([x, y]), the randomized index oracle,
the det[Bhat_phi] contact test, and an independent exterior-algebra oracle that
expands phi ^ (dphi)^k literally. Algebras are immutable once built; all
randomized operations take explicit seeds and are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence

from . import _kernels
from .exact import RatMatrix, det as _det

DEFAULT_SEED = 1729
DEFAULT_TRIALS = 25
SAMPLE_BOUND = 10**6
WEDGE_DIM_CAP = 15

# Fixed prime for the certified modular shortcut in the index oracle.
# rank mod p never exceeds the rational rank, and kernel dimension never drops
# below dim mod 2 (skew rank is even), so when the two bounds meet the exact
# kernel dimension is known without bignum elimination.
_PRIME = 2147483647


# ---------------------------------------------------------------------------
# types
# ---------------------------------------------------------------------------

class ParityError(ValueError):
    """An operation that only makes sense in odd dimension got an even one."""


@dataclass(frozen=True)
class CoeffForm:
    """A one-form phi given by its coordinates in the dual basis E_1*..E_d*."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_values(cls, values: Sequence[Fraction | int]) -> "CoeffForm":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls, dim: int) -> "CoeffForm":
        return cls((Fraction(0),) * dim)

    def __len__(self) -> int:
        return len(self.coefficients)

    def scale(self, c: Fraction | int) -> "CoeffForm":
        c = Fraction(c)
        return CoeffForm(tuple(c * x for x in self.coefficients))

    def plus(self, other: "CoeffForm") -> "CoeffForm":
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return CoeffForm(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def to_json(self) -> dict:
        return {"coefficients": [str(x) for x in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> "CoeffForm":
        return cls(tuple(Fraction(s) for s in data["coefficients"]))


SparseVec = tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class LieAlgebra:
    """Structure-constant presentation: table[(i, j)] with i < j holds the
    coefficient vector of [E_i, E_j], sparsely. Antisymmetry is implicit."""

    dim: int
    basis_labels: tuple[str, ...]
    table: tuple[tuple[int, int, SparseVec], ...]

    def __post_init__(self) -> None:
        if len(self.basis_labels) != self.dim:
            raise ValueError("label count != dim")
        pair_map: dict[tuple[int, int], SparseVec] = {}
        for i, j, vec in self.table:
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bad table pair ({i}, {j})")
            if (i, j) in pair_map:
                raise ValueError(f"duplicate table pair ({i}, {j})")
            pair_map[(i, j)] = vec
        object.__setattr__(self, "_pairs", pair_map)
        object.__setattr__(self, "_int_cache", None)

    @classmethod
    def from_table(
        cls,
        dim: int,
        basis_labels: Sequence[str],
        brackets: dict[tuple[int, int], dict[int, Fraction | int]],
    ) -> "LieAlgebra":
        rows = []
        for (i, j), vec in sorted(brackets.items()):
            sv = tuple(
                (k, Fraction(c)) for k, c in sorted(vec.items()) if Fraction(c) != 0
            )
            if sv:
                rows.append((i, j, sv))
        return cls(dim, tuple(basis_labels), tuple(rows))

    def bracket_coeffs(self, i: int, j: int) -> SparseVec:
        """Sparse coefficient vector of [E_i, E_j] (any i, j; sign handled)."""
        if i == j:
            return ()
        if i < j:
            return self._pairs.get((i, j), ())  # type: ignore[attr-defined]
        vec = self._pairs.get((j, i), ())  # type: ignore[attr-defined]
        return tuple((k, -c) for k, c in vec)

    def pairs(self) -> Iterator[tuple[int, int, SparseVec]]:
        yield from self.table

    def _integer_table(self) -> tuple[int, dict[tuple[int, int], list[tuple[int, int]]]]:
        """Structure constants with denominators cleared by one global factor."""
        cached = self._int_cache  # type: ignore[attr-defined]
        if cached is not None:
            return cached
        den = 1
        for _, _, vec in self.table:
            for _, c in vec:
                den = lcm(den, c.denominator)
        table = {
            (i, j): [(k, int(c * den)) for k, c in vec] for i, j, vec in self.table
        }
        object.__setattr__(self, "_int_cache", (den, table))
        return den, table

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.basis_labels),
            "structure": [
                [i, j, [[k, str(c)] for k, c in vec]] for i, j, vec in self.table
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LieAlgebra":
        table = tuple(
            (i, j, tuple((k, Fraction(s)) for k, s in vec))
            for i, j, vec in data["structure"]
        )
        return cls(data["dim"], tuple(data["labels"]), table)


@dataclass(frozen=True)
class ContactWitness:
    form: CoeffForm


@dataclass(frozen=True)
class ProbablyNotContact:
    trials: int


# ---------------------------------------------------------------------------
# core operations
# ---------------------------------------------------------------------------

def bracket(
    L: LieAlgebra, x: Sequence[Fraction | int], y: Sequence[Fraction | int]
) -> list[Fraction]:
    """[x, y] for coefficient vectors x, y, by bilinear extension."""
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError("vector length != dim")
    out = [Fraction(0)] * L.dim
    xs = [(i, Fraction(v)) for i, v in enumerate(x) if v]
    ys = [(j, Fraction(v)) for j, v in enumerate(y) if v]
    for i, xv in xs:
        for j, yv in ys:
            if i == j:
                continue
            f = xv * yv
            for k, c in L.bracket_coeffs(i, j):
                out[k] += f * c
    return out


def jacobi_check(L: LieAlgebra) -> list[tuple[int, int, int]]:
    """All basis triples (i < j < k) violating the Jacobi identity.

    Empty result means the table is a genuine Lie algebra. The sum
    [[Ei,Ej],Ek] + [[Ej,Ek],Ei] + [[Ek,Ei],Ej] is accumulated sparsely.
    """
    bad: list[tuple[int, int, int]] = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            cij = L.bracket_coeffs(i, j)
            for k in range(j + 1, L.dim):
                acc: dict[int, Fraction] = {}
                for trip in (
                    (cij, k),
                    (L.bracket_coeffs(j, k), i),
                    (L.bracket_coeffs(k, i), j),
                ):
                    vec, other = trip
                    for m, c in vec:
                        for t, c2 in L.bracket_coeffs(m, other):
                            acc[t] = acc.get(t, Fraction(0)) + c * c2
                if any(v != 0 for v in acc.values()):
                    bad.append((i, j, k))
    return bad


def kirillov_matrix(L: LieAlgebra, phi: CoeffForm) -> RatMatrix:
    """The skew matrix [B_phi] with (i, j) entry phi([E_i, E_j])."""
    if len(phi) != L.dim:
        raise ValueError("form length != dim")
    co = phi.coefficients
    d = L.dim
    rows = [[Fraction(0)] * d for _ in range(d)]
    for i, j, vec in L.pairs():
        v = sum((c * co[k] for k, c in vec), Fraction(0))
        rows[i][j] = v
        rows[j][i] = -v
    return RatMatrix.from_rows(rows)


def _kirillov_int_rows(L: LieAlgebra, phi_ints: Sequence[int]) -> list[list[int]]:
    """Integer-scaled Kirillov rows (global denominator cleared); same rank."""
    den, table = L._integer_table()
    del den  # scaling does not affect rank or kernel dimension
    d = L.dim
    rows = [[0] * d for _ in range(d)]
    for (i, j), vec in table.items():
        v = 0
        for k, c in vec:
            v += c * phi_ints[k]
        if v:
            rows[i][j] = v
            rows[j][i] = -v
    return rows


def index_randomized(
    L: LieAlgebra, trials: int = DEFAULT_TRIALS, seed: int | None = None
) -> int:
    """min over sampled phi of dim ker(B_phi).

    Coefficients are uniform integers in [-10^6, 10^6]. Regular forms are
    dense, so this equals the true index except with negligible probability;
    it is always an upper bound. Per trial, the kernel dimension is computed
    exactly: a mod-p rank that meets the parity floor pins it without bignum
    work, otherwise exact fraction-free elimination runs. Once any trial hits
    the floor no later trial can lower the min, so the loop returns early with
    the same value a full run would produce.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    d = L.dim
    if d == 0:
        return 0
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    floor = d % 2
    best: int | None = None
    for _ in range(trials):
        phi = [rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in range(d)]
        rows = _kirillov_int_rows(L, phi)
        kd = d - _kernels.rank_mod(rows, _PRIME)
        if kd != floor:
            kd = d - _kernels.rank_int(rows)
        if best is None or kd < best:
            best = kd
        if best == floor:
            break
    assert best is not None
    return best


def bhat_det(L: LieAlgebra, phi: CoeffForm) -> Fraction:
    """det of the bordered matrix [[0, phi^T], [-phi, B_phi]].

    Defined for odd-dimensional algebras (the matrix is even-sized skew, so
    the determinant is a perfect square and vanishes exactly when phi fails
    to be a contact form).
    """
    d = L.dim
    if d % 2 == 0:
        raise ParityError(f"bhat_det needs odd dimension, got {d}")
    if len(phi) != d:
        raise ValueError("form length != dim")
    B = kirillov_matrix(L, phi)
    co = phi.coefficients
    rows = [[Fraction(0), *co]]
    for i in range(d):
        rows.append([-co[i], *B.row(i)])
    return _det(RatMatrix.from_rows(rows))


def _bhat_det_int_is_zero(L: LieAlgebra, phi_ints: Sequence[int]) -> bool:
    """Fast nonvanishing test for bhat_det with integer phi."""
    d = L.dim
    den, _ = L._integer_table()
    B = _kirillov_int_rows(L, phi_ints)
    scaled = [den * v for v in phi_ints]
    rows = [[0, *scaled]]
    for i in range(d):
        rows.append([-scaled[i], *B[i]])
    return _kernels.det_int(rows) == 0


def wedge_volume_coefficient(L: LieAlgebra, phi: CoeffForm) -> Fraction:
    """Coefficient of E_1*^...^E_d* in phi ^ (dphi)^k, d = 2k+1.

    Direct exterior-algebra expansion over bitmask multivectors, with the sign
    convention dphi(E_i, E_j) = -phi([E_i, E_j]). Multilinearity lets the whole
    computation run on integers: phi and the two-form are scaled separately and
    the scale is divided back out at the end.
    """
    d = L.dim
    if d % 2 == 0:
        raise ParityError(f"wedge oracle needs odd dimension, got {d}")
    if d > WEDGE_DIM_CAP:
        raise ValueError(f"dimension {d} exceeds the exterior-algebra cap {WEDGE_DIM_CAP}")
    if len(phi) != d:
        raise ValueError("form length != dim")
    k = (d - 1) // 2

    B = kirillov_matrix(L, phi)
    phi_den = 1
    for x in phi.coefficients:
        phi_den = lcm(phi_den, x.denominator)
    two_den = 1
    for x in B.entries:
        two_den = lcm(two_den, x.denominator)

    phi_int = [int(x * phi_den) for x in phi.coefficients]
    two: dict[int, int] = {}
    for i in range(d):
        for j in range(i + 1, d):
            c = -int(B.at(i, j) * two_den)
            if c:
                two[(1 << i) | (1 << j)] = c

    cur: dict[int, int] = {0: 1}
    for _ in range(k):
        nxt: dict[int, int] = {}
        for m1, c1 in cur.items():
            for m2, c2 in two.items():
                if m1 & m2:
                    continue
                # sign of merging the two ascending index sets: count the
                # inversions (x in m1, y in m2) with x > y
                s = 0
                mm = m2
                while mm:
                    low = mm & -mm
                    s += (m1 >> low.bit_length()).bit_count()
                    mm ^= low
                key = m1 | m2
                val = -c1 * c2 if s & 1 else c1 * c2
                nxt[key] = nxt.get(key, 0) + val
        cur = {m: v for m, v in nxt.items() if v}

    full = (1 << d) - 1
    total = 0
    for i in range(d):
        if not phi_int[i]:
            continue
        rest = full ^ (1 << i)
        c = cur.get(rest)
        if not c:
            continue
        below = (rest & ((1 << i) - 1)).bit_count()
        total += -phi_int[i] * c if below & 1 else phi_int[i] * c
    return Fraction(total, phi_den * two_den**k)


def contact_search_randomized(
    L: LieAlgebra,
    trials: int,
    seed: int | None = None,
    bound: int = SAMPLE_BOUND,
) -> ContactWitness | ProbablyNotContact:
    """Hunt for a contact form by sampling integer one-forms.

    det[Bhat_phi] is a polynomial in the coefficients of phi; if it is not
    identically zero a random point misses its zero set with high probability,
    so a witness normally appears on the first trial. The negative verdict is
    explicitly probabilistic.
    """
    if L.dim % 2 == 0:
        raise ParityError(f"contact search needs odd dimension, got {L.dim}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    for _ in range(trials):
        phi_ints = [rng.randint(-bound, bound) for _ in range(L.dim)]
        if not _bhat_det_int_is_zero(L, phi_ints):
            return ContactWitness(CoeffForm.from_values(phi_ints))
    return ProbablyNotContact(trials)
