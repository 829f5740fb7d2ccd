"""Finite simplicial complexes on the ground set {1, ..., n}.

A complex is stored by its facet antichain.  Faces are tuples of strictly
increasing 1-based vertices; the empty tuple is the empty face.  Internally
faces are also handled as bitmasks (bit ``v - 1`` set iff ``v`` is a vertex),
which keeps closure and complement computations cheap on small ground sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Face = tuple[int, ...]


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def face_to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << (v - 1)
    return mask


def mask_to_face(mask: int) -> Face:
    face = []
    v = 1
    while mask:
        if mask & 1:
            face.append(v)
        mask >>= 1
        v += 1
    return tuple(face)


def _check_face(face: Sequence[int], n: int) -> None:
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"vertex {v!r} is not an integer")
        if not 1 <= v <= n:
            raise DomainError(f"vertex {v} outside ground set 1..{n}")


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    masks = set(masks)
    return [m for m in masks if not any(m != o and m & o == m for o in masks)]


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of {1..n}, given by its facets.

    ``facets`` must already be canonical: each facet strictly increasing, the
    facets pairwise incomparable and sorted lexicographically.  Use
    :meth:`from_faces` to build a complex from arbitrary generating faces.

    ``facets == ()`` is the void complex (no faces at all), while
    ``facets == ((),)`` is the empty complex whose only face is the empty set.
    """

    n: int
    facets: tuple[Face, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"ground set size must be a nonnegative integer, got {self.n!r}")
        for f in self.facets:
            _check_face(f, self.n)
            if any(a >= b for a, b in zip(f, f[1:])):
                raise DomainError(f"facet {f} is not strictly increasing")
        if list(self.facets) != sorted(set(self.facets)):
            raise DomainError("facets must be distinct and sorted lexicographically")
        masks = [face_to_mask(f) for f in self.facets]
        if len(_maximal_masks(masks)) != len(masks):
            raise DomainError("facets do not form an antichain")

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """The smallest complex on {1..n} containing every face in ``faces``."""
        masks = []
        for f in faces:
            f = list(f)
            _check_face(f, n)
            masks.append(face_to_mask(f))
        return cls._from_masks(n, masks)

    @classmethod
    def _from_masks(cls, n: int, masks: Iterable[int]) -> SimplicialComplex:
        facets = sorted(mask_to_face(m) for m in _maximal_masks(masks))
        return cls(n, tuple(facets))

    @cached_property
    def face_masks(self) -> frozenset[int]:
        """Bitmasks of every face in the downward closure of the facets."""
        faces = set()
        for f in self.facets:
            top = face_to_mask(f)
            sub = top
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return frozenset(faces)

    @cached_property
    def _faces_by_dim(self) -> dict[int, list[Face]]:
        by_dim: dict[int, list[Face]] = {}
        for m in self.face_masks:
            face = mask_to_face(m)
            by_dim.setdefault(len(face) - 1, []).append(face)
        for faces in by_dim.values():
            faces.sort()
        return by_dim

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension of the largest face; -1 for the empty complex, and also
        -1 (by convention, with no faces at all) for the void complex."""
        return max((len(f) - 1 for f in self.facets), default=-1)

    @property
    def num_faces(self) -> int:
        return len(self.face_masks)

    def faces(self) -> list[Face]:
        """All faces, ordered by dimension and lexicographically within one."""
        return [f for d in sorted(self._faces_by_dim) for f in self._faces_by_dim[d]]

    def __contains__(self, face) -> bool:
        return face_to_mask(face) in self.face_masks

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"


def void_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ())


def empty_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ((),))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (tuple(range(1, n + 1)),))


def skeleton(X: SimplicialComplex, d: int) -> SimplicialComplex:
    """Faces of X of dimension at most d."""
    return SimplicialComplex._from_masks(
        X.n, (m for m in X.face_masks if bin(m).count("1") <= d + 1)
    )


def complement(face: Sequence[int], n: int) -> Face:
    present = set(face)
    return tuple(v for v in range(1, n + 1) if v not in present)


def closure_contains(X: SimplicialComplex, face: Sequence[int]) -> bool:
    _check_face(face, X.n)
    return face_to_mask(face) in X.face_masks


def faces_of_dimension(X: SimplicialComplex, d: int) -> list[Face]:
    """Faces of dimension d in lexicographic order (the canonical basis order)."""
    return list(X._faces_by_dim.get(d, ()))


def alexander_dual(X: SimplicialComplex) -> SimplicialComplex:
    """The complex of all sets whose complement is not a face of X."""
    full = (1 << X.n) - 1
    faces = X.face_masks
    return SimplicialComplex._from_masks(
        X.n, (m for m in range(full + 1) if full ^ m not in faces)
    )


def sign(j: int, face: Sequence[int]) -> int:
    """+1 if j is the 1st, 3rd, 5th, ... smallest element of face, else -1."""
    try:
        position = sorted(face).index(j)
    except ValueError:
        raise DomainError(f"vertex {j} is not in face {tuple(face)}") from None
    return -1 if position % 2 else 1


def parity(face: Iterable[int]) -> int:
    """Product of (-1)^(i-1) over the vertices i of face."""
    return -1 if sum(v - 1 for v in face) % 2 else 1


def check_sign_lemma(n: int) -> bool:
    """Exhaustively check sgn(k, s) p(s - k) == sgn(k, ~s + k) p(s) on {1..n}."""
    if n < 1:
        raise DomainError("check_sign_lemma needs n >= 1")
    for mask in range(1 << n):
        s = mask_to_face(mask)
        co = complement(s, n)
        p_s = parity(s)
        for k in s:
            lhs = sign(k, s) * parity(v for v in s if v != k)
            rhs = sign(k, sorted(co + (k,))) * p_s
            if lhs != rhs:
                return False
    return True
