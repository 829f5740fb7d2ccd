"""Reduced chain, cochain and relative chain complexes and their homology."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import INTEGERS, GroupInvariants, IntMatrix, RingSpec, quotient_invariants
from .simplicial import DomainError, Face, SimplicialComplex, faces_of_dimension, full_simplex

HOMOLOGICAL = "homological"
COHOMOLOGICAL = "cohomological"


@dataclass(frozen=True)
class GradedChainComplex:
    """Free modules with lexicographically ordered face bases, plus operators.

    Homological: ``operator(i)`` maps ``basis(i)`` to ``basis(i - 1)``.
    Cohomological: ``operator(i)`` is the coboundary from ``basis(i - 1)`` to
    ``basis(i)``.  Degrees missing from ``bases`` hold the zero module, and
    operators missing from ``operators`` are zero maps of the right shape.
    """

    ring: RingSpec
    orientation: str
    bases: Mapping[int, tuple[Face, ...]]
    operators: Mapping[int, IntMatrix] = field(default_factory=dict)

    def basis(self, i: int) -> tuple[Face, ...]:
        return self.bases.get(i, ())

    def degrees(self) -> range:
        nonzero = [i for i, b in self.bases.items() if b]
        if not nonzero:
            return range(0)
        return range(min(nonzero), max(nonzero) + 1)

    def operator(self, i: int) -> IntMatrix:
        stored = self.operators.get(i)
        if stored is not None:
            return stored
        if self.orientation == HOMOLOGICAL:
            return IntMatrix.zeros(len(self.basis(i - 1)), len(self.basis(i)))
        return IntMatrix.zeros(len(self.basis(i)), len(self.basis(i - 1)))

    def rank(self, i: int) -> int:
        return len(self.basis(i))

    def euler_characteristic(self) -> int:
        return sum(-len(b) if i % 2 else len(b) for i, b in self.bases.items())

    def check_chain_condition(self) -> bool:
        """True iff every pair of consecutive operators composes to zero."""
        degs = self.degrees()
        if not degs:
            return True
        for i in range(degs.start - 1, degs.stop + 1):
            if self.orientation == HOMOLOGICAL:
                composite = self.operator(i) @ self.operator(i + 1)
            else:
                composite = self.operator(i + 1) @ self.operator(i)
            if not composite.is_zero():
                return False
        return True


def _boundary_matrix(sources, targets) -> IntMatrix:
    # Columns are the faces in sources; a facet of a source that is absent
    # from targets (a face of the subcomplex, for relative chains) is dropped.
    row_of = {f: r for r, f in enumerate(targets)}
    data = [[0] * len(sources) for _ in targets]
    for c, face in enumerate(sources):
        for pos in range(len(face)):
            r = row_of.get(face[:pos] + face[pos + 1:])
            if r is not None:
                data[r][c] = -1 if pos % 2 else 1
    return IntMatrix(len(targets), len(sources), data)


def _homological(ring: RingSpec, bases: dict[int, tuple[Face, ...]]) -> GradedChainComplex:
    operators = {}
    for i in bases:
        if i - 1 in bases:
            operators[i] = _boundary_matrix(bases[i], bases[i - 1])
    return GradedChainComplex(ring, HOMOLOGICAL, bases, operators)


def reduced_chain_complex(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> GradedChainComplex:
    """The augmented chain complex of X, with e_{} spanning degree -1."""
    bases = {}
    for d in range(-1, X.dim + 1):
        faces = faces_of_dimension(X, d)
        if faces:
            bases[d] = tuple(faces)
    return _homological(ring, bases)


def reduced_cochain_complex(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> GradedChainComplex:
    """The dual complex: the coboundary into degree i is the transposed boundary out of degree i."""
    chains = reduced_chain_complex(X, ring)
    operators = {i: m.transpose() for i, m in chains.operators.items()}
    return GradedChainComplex(ring, COHOMOLOGICAL, chains.bases, operators)


def relative_chain_complex(
    X: SimplicialComplex, A: SimplicialComplex, ring: RingSpec = INTEGERS
) -> GradedChainComplex:
    """Chains of X modulo chains of A, on the basis of faces of X not in A."""
    if A.n != X.n:
        raise DomainError(f"ground sets differ: {X.n} vs {A.n}")
    if not A.face_masks <= X.face_masks:
        raise DomainError("A is not a subcomplex of X")
    bases = {}
    for d in range(-1, X.dim + 1):
        faces = tuple(f for f in faces_of_dimension(X, d) if f not in A)
        if faces:
            bases[d] = faces
    return _homological(ring, bases)


def complement_pair_complex(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> GradedChainComplex:
    """Relative chains of the full simplex on X's ground set modulo X."""
    return relative_chain_complex(full_simplex(X.n), X, ring)


def homology_invariants(c: GradedChainComplex, degree: int) -> GroupInvariants:
    """(Co)homology of ``c`` in ``degree``: ker of the outgoing map mod image of the incoming one."""
    if not c.basis(degree):
        return GroupInvariants(c.ring)
    if c.orientation == HOMOLOGICAL:
        return quotient_invariants(c.operator(degree), c.operator(degree + 1), c.ring)
    return quotient_invariants(c.operator(degree + 1), c.operator(degree), c.ring)


def reduced_homology(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> dict[int, GroupInvariants]:
    """Reduced homology of X in every degree -1..n-1."""
    c = reduced_chain_complex(X, ring)
    return {i: homology_invariants(c, i) for i in range(-1, X.n)}


def reduced_cohomology(X: SimplicialComplex, ring: RingSpec = INTEGERS) -> dict[int, GroupInvariants]:
    c = reduced_cochain_complex(X, ring)
    return {i: homology_invariants(c, i) for i in range(-1, X.n)}
