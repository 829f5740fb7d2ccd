"""Combinatorial Alexander duality, checked step by step.

The relative chains of (full simplex, X) are carried to the cochains of the
Alexander dual X* by sending e_s to p(s) e*_{complement(s)}.  This module
builds that map, checks it commutes with the (co)boundaries, compares the
homology groups on both sides, and enumerates complexes to run the checks on.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .algebra import INTEGERS, GroupInvariants, IntMatrix, RingSpec
from .homology import (
    complement_pair_complex,
    homology_invariants,
    reduced_chain_complex,
    reduced_cochain_complex,
)
from .simplicial import (
    DomainError,
    Face,
    SimplicialComplex,
    alexander_dual,
    complement,
    faces_of_dimension,
    full_simplex,
    parity,
)

MAX_EXHAUSTIVE_N = 5


@dataclass(frozen=True)
class PhiMap:
    """Matrix of the complement map from relative j-chains to (n-j-2)-cochains of X*.

    Columns follow ``source_basis`` and rows follow ``target_basis``.
    """

    degree: int
    source_basis: tuple[Face, ...]
    target_basis: tuple[Face, ...]
    matrix: IntMatrix

    def is_signed_permutation(self) -> bool:
        m = self.matrix
        if m.rows != m.cols:
            return False
        lines = [m.row(i) for i in range(m.rows)] + [m.column(j) for j in range(m.cols)]
        return all(sorted(map(abs, line)) == [0] * (len(line) - 1) + [1] for line in lines)


def build_phi(X: SimplicialComplex, j: int, signed: bool = True) -> PhiMap:
    """The degree-j component of the chain isomorphism.

    With ``signed=False`` the parity factor is dropped, giving the plain
    complement map, which in general does not commute with the boundaries.
    """
    return _build_phi(X, alexander_dual(X), j, signed)


def _build_phi(X, dual, j, signed):
    n = X.n
    source = tuple(f for f in faces_of_dimension(full_simplex(n), j) if f not in X)
    target = tuple(faces_of_dimension(dual, n - j - 2))
    row_of = {f: r for r, f in enumerate(target)}
    data = [[0] * len(source) for _ in target]
    for c, face in enumerate(source):
        data[row_of[complement(face, n)]][c] = parity(face) if signed else 1
    return PhiMap(j, source, target, IntMatrix(len(target), len(source), data))


def check_commutation(X: SimplicialComplex, j: int, signed: bool = True) -> bool:
    """Does phi_{j-1} . d_j == coboundary^{n-j-1} . phi_j hold exactly?"""
    return commutation_by_degree(X, [j], signed)[j]


def commutation_by_degree(
    X: SimplicialComplex, degrees: Iterable[int] | None = None, signed: bool = True
) -> dict[int, bool]:
    """:func:`check_commutation` for several degrees (default -1..n), sharing the setup."""
    n = X.n
    dual = alexander_dual(X)
    relative = complement_pair_complex(X)
    cochains = reduced_cochain_complex(dual)
    degrees = range(-1, n + 1) if degrees is None else degrees
    phis: dict[int, IntMatrix] = {}

    def phi(j):
        if j not in phis:
            phis[j] = _build_phi(X, dual, j, signed).matrix
        return phis[j]

    return {
        j: phi(j - 1) @ relative.operator(j) == cochains.operator(n - j - 1) @ phi(j)
        for j in degrees
    }


def check_lemma_adfirst(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> bool:
    """Reduced homology of X in degree i agrees with that of (full simplex, X) in degree i+1."""
    absolute = reduced_chain_complex(X, ring)
    relative = complement_pair_complex(X, ring)
    return all(
        homology_invariants(absolute, i) == homology_invariants(relative, i + 1)
        for i in range(-1, X.n)
    )


@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    homology: GroupInvariants
    cohomology: GroupInvariants

    @property
    def matched(self) -> bool:
        return self.homology == self.cohomology


@dataclass(frozen=True)
class DualityReport:
    complex_id: str
    n: int
    ring: RingSpec
    per_degree: tuple[DegreeComparison, ...]

    @property
    def all_matched(self) -> bool:
        return all(row.matched for row in self.per_degree)

    def to_dict(self) -> dict:
        return {
            "complex": self.complex_id,
            "n": self.n,
            "ring": self.ring.token,
            "all_matched": self.all_matched,
            "degrees": [
                {
                    "i": row.degree,
                    "homology": str(row.homology),
                    "cohomology_degree": self.n - row.degree - 3,
                    "cohomology": str(row.cohomology),
                    "matched": row.matched,
                }
                for row in self.per_degree
            ],
        }


def verify_duality(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> DualityReport:
    """Compare reduced homology of X in degree i with reduced cohomology of X* in degree n-i-3."""
    from .io import serialize_complex

    n = X.n
    chains = reduced_chain_complex(X, ring)
    cochains = reduced_cochain_complex(alexander_dual(X), ring)
    rows = tuple(
        DegreeComparison(i, homology_invariants(chains, i), homology_invariants(cochains, n - i - 3))
        for i in range(-1, n)
    )
    return DualityReport(serialize_complex(X).decode(), n, ring, rows)


def _downsets(n: int) -> Iterator[list[int]]:
    # Subsets in order of size, then value; each is included only when all of
    # its codimension-one subsets already are, so every branch is a downset.
    order = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))
    chosen: set[int] = set()

    def extend(k: int) -> Iterator[list[int]]:
        if k == len(order):
            yield sorted(chosen)
            return
        m = order[k]
        yield from extend(k + 1)
        bits = [1 << b for b in range(n) if m >> b & 1]
        if all(m ^ b in chosen for b in bits):
            chosen.add(m)
            yield from extend(k + 1)
            chosen.discard(m)

    yield from extend(0)


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on {1..n}, including void and full, exactly once."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > MAX_EXHAUSTIVE_N:
        raise DomainError(
            f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_N}; use sample_complexes"
        )
    for masks in _downsets(n):
        yield SimplicialComplex._from_masks(n, masks)


def sample_complexes(n: int, count: int, seed: int) -> Iterator[SimplicialComplex]:
    """``count`` pseudorandom complexes on {1..n}, reproducible from ``seed``.

    Each sample is the downward closure of a few random subsets of the ground
    set; the void complex turns up occasionally as the closure of nothing.
    """
    if n < 0 or count < 0:
        raise DomainError("n and count must be nonnegative")
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(0, max(1, n + 1))
        faces = [[v for v in range(1, n + 1) if rng.random() < 0.5] for _ in range(k)]
        yield SimplicialComplex.from_faces(n, faces)
