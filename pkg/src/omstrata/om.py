"""Rank-3 oriented matroids of labeled vector arrangements.

An arrangement is an ordered list of (label, Vector3) pairs.  Its oriented
matroid is stored as the cocircuit set: for every pair of independent
vectors, the plane they span induces the sign vector
``k -> sign <v_k, v_i x v_j>`` together with its negation.  Covectors are
recovered on demand as the composition closure of the cocircuits.

Signs never change under positive per-element rescaling, so all sign
computations run on primitive integer copies of the vectors; this keeps the
arithmetic in plain ints and makes fingerprints bit-stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Optional

from .errors import DomainMismatch, GroundSetMismatch, NotSpanning
from .geometry import Vector3
from .labels import Label, is_label, label_key, sort_labels

Sign = int  # -1, 0, +1
IntVec = tuple[int, int, int]

SIGN_CHARS = {1: "+", -1: "-", 0: "0"}
_CHAR_SIGNS = {"+": 1, "-": -1, "0": 0}


def _primitive(v: Vector3) -> IntVec:
    """Positive integer rescaling of v with coprime entries (0 stays 0)."""
    if v.is_zero():
        return (0, 0, 0)
    scale = 1
    for part in (v.x, v.y, v.z):
        scale = scale * part.denominator // gcd(scale, part.denominator)
    ints = (int(v.x * scale), int(v.y * scale), int(v.z * scale))
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    return (ints[0] // g, ints[1] // g, ints[2] // g)


def _cross(u: IntVec, v: IntVec) -> IntVec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: IntVec, v: IntVec) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _sign(x: int) -> Sign:
    return (x > 0) - (x < 0)


def _det3(u: IntVec, v: IntVec, w: IntVec) -> int:
    return _dot(u, _cross(v, w))


def _rank3(vectors: Iterable[IntVec]) -> int:
    """Rank of a list of integer 3-vectors (0..3)."""
    first = second = None
    for v in vectors:
        if v == (0, 0, 0):
            continue
        if first is None:
            first = v
        elif second is None:
            if _cross(first, v) != (0, 0, 0):
                second = v
        elif _det3(first, second, v) != 0:
            return 3
    if second is not None:
        return 2
    return 0 if first is None else 1


@dataclass(frozen=True)
class LabeledArrangement:
    """Ordered, labeled tuple of homogeneous vectors."""

    elements: tuple[tuple[Label, Vector3], ...]

    def __init__(self, elements: Iterable[tuple[Label, Vector3]]):
        elems = tuple((label, vector) for label, vector in elements)
        seen = set()
        for label, _ in elems:
            if not is_label(label):
                raise ValueError(f"invalid label {label!r}")
            if label in seen:
                raise ValueError(f"duplicate label {label!r}")
            seen.add(label)
        object.__setattr__(self, "elements", elems)

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple(label for label, _ in self.elements)

    def vector(self, label: Label) -> Vector3:
        for lab, vec in self.elements:
            if lab == label:
                return vec
        raise KeyError(label)

    def is_spanning(self) -> bool:
        return _rank3(_primitive(v) for _, v in self.elements) == 3

    def sorted_by_label(self) -> "LabeledArrangement":
        return LabeledArrangement(sorted(self.elements, key=lambda e: label_key(e[0])))

    def restrict(self, labels: Iterable[Label]) -> "LabeledArrangement":
        """Sub-arrangement on the given labels, original order kept."""
        keep = set(labels)
        missing = keep - set(self.labels)
        if missing:
            raise KeyError(f"labels not present: {sorted(missing, key=label_key)}")
        return LabeledArrangement((l, v) for l, v in self.elements if l in keep)

    def rescaled(self, factors: Mapping[Label, Fraction]) -> "LabeledArrangement":
        """Per-element positive rescaling (signs of all covectors preserved)."""
        for label, f in factors.items():
            if f <= 0:
                raise ValueError(f"scale for {label!r} must be positive, got {f}")
        return LabeledArrangement(
            (l, v.scaled(factors[l]) if l in factors else v) for l, v in self.elements
        )

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SignVector:
    """A function from an ordered ground set to {+, -, 0}."""

    labels: tuple[Label, ...]
    signs: tuple[Sign, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.signs):
            raise ValueError("labels and signs differ in length")

    def __getitem__(self, label: Label) -> Sign:
        return self.signs[self.labels.index(label)]

    def __neg__(self) -> "SignVector":
        return SignVector(self.labels, tuple(-s for s in self.signs))

    def is_zero(self) -> bool:
        return all(s == 0 for s in self.signs)

    def support(self) -> tuple[Label, ...]:
        return tuple(l for l, s in zip(self.labels, self.signs) if s != 0)

    def zero_set(self) -> tuple[Label, ...]:
        return tuple(l for l, s in zip(self.labels, self.signs) if s == 0)

    def to_string(self) -> str:
        return "".join(SIGN_CHARS[s] for s in self.signs)

    @staticmethod
    def from_string(labels: tuple[Label, ...], text: str) -> "SignVector":
        return SignVector(labels, tuple(_CHAR_SIGNS[ch] for ch in text))

    def __repr__(self) -> str:
        return f"SignVector({self.to_string()})"


def compose(x: SignVector, y: SignVector) -> SignVector:
    """Componentwise composition: x's sign where non-zero, else y's."""
    if x.labels != y.labels:
        raise DomainMismatch("sign vectors live on different ground tuples")
    return SignVector(x.labels, tuple(a if a != 0 else b for a, b in zip(x.signs, y.signs)))


@dataclass(frozen=True)
class Chirotope:
    """Basis orientation map: sorted label triple -> sign.

    Only non-zero signs are stored; absent triples are 0.
    """

    ground: tuple[Label, ...]
    nonzero: Mapping[tuple[Label, Label, Label], Sign]

    def __getitem__(self, triple: tuple[Label, Label, Label]) -> Sign:
        return self.nonzero.get(triple, 0)

    def triples(self):
        return combinations(self.ground, 3)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chirotope):
            return NotImplemented
        return self.ground == other.ground and dict(self.nonzero) == dict(other.nonzero)

    def __hash__(self) -> int:
        return hash((self.ground, frozenset(self.nonzero.items())))


class OrientedMatroid:
    """A rank <= 3 oriented matroid stored by its cocircuit set.

    The ground set is kept in global label order, so equality of two
    oriented matroids on the same label set is plain structural equality of
    their cocircuit sets.
    """

    __slots__ = ("ground", "cocircuits", "loops", "_chirotope", "_vectors")

    def __init__(
        self,
        ground: tuple[Label, ...],
        cocircuits: frozenset[SignVector],
        chirotope: Optional[Chirotope] = None,
        _vectors: Optional[tuple[IntVec, ...]] = None,
    ):
        self.ground = ground
        self.cocircuits = cocircuits
        self._chirotope = chirotope
        self._vectors = _vectors
        zero_everywhere = list(ground)
        for cc in cocircuits:
            zero_everywhere = [l for l in zero_everywhere if cc[l] == 0]
            if not zero_everywhere:
                break
        self.loops = frozenset(zero_everywhere)

    @property
    def chirotope(self) -> Chirotope:
        if self._chirotope is None:
            if self._vectors is None:
                raise ValueError("chirotope unavailable: no defining arrangement")
            self._chirotope = _chirotope_from_ints(self.ground, self._vectors)
        return self._chirotope

    def cocircuit_strings(self) -> list[str]:
        return sorted(cc.to_string() for cc in self.cocircuits)

    def canonical_json(self) -> str:
        doc = {"ground_set": list(self.ground), "cocircuits": self.cocircuit_strings()}
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=True)

    def fingerprint(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("ascii")).hexdigest()

    def delete_loops(self) -> "OrientedMatroid":
        """The same oriented matroid on the non-loop elements."""
        keep = [i for i, l in enumerate(self.ground) if l not in self.loops]
        ground = tuple(self.ground[i] for i in keep)
        cocircuits = frozenset(
            SignVector(ground, tuple(cc.signs[i] for i in keep)) for cc in self.cocircuits
        )
        vectors = tuple(self._vectors[i] for i in keep) if self._vectors else None
        chi = None
        if self._chirotope is not None:
            chi = Chirotope(
                ground,
                {t: s for t, s in self._chirotope.nonzero.items() if all(l in ground for l in t)},
            )
        return OrientedMatroid(ground, cocircuits, chi, vectors)

    @staticmethod
    def rank_zero(ground: Iterable[Label]) -> "OrientedMatroid":
        """The oriented matroid whose only covector is zero (all loops)."""
        g = sort_labels(ground)
        return OrientedMatroid(g, frozenset(), Chirotope(g, {}))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedMatroid):
            return NotImplemented
        return self.ground == other.ground and self.cocircuits == other.cocircuits

    def __hash__(self) -> int:
        return hash((self.ground, self.cocircuits))

    def __repr__(self) -> str:
        return f"OrientedMatroid(|E|={len(self.ground)}, cocircuits={len(self.cocircuits)})"


def _sorted_primitive(arrangement: LabeledArrangement) -> tuple[tuple[Label, ...], tuple[IntVec, ...]]:
    ordered = arrangement.sorted_by_label()
    ground = ordered.labels
    ints = tuple(_primitive(v) for _, v in ordered.elements)
    return ground, ints


def chirotope_of(arrangement: LabeledArrangement) -> Chirotope:
    """Orientation sign of every sorted label triple of the arrangement."""
    ground, ints = _sorted_primitive(arrangement)
    return _chirotope_from_ints(ground, ints)


def _chirotope_from_ints(ground: tuple[Label, ...], ints: tuple[IntVec, ...]) -> Chirotope:
    nonzero: dict[tuple[Label, Label, Label], Sign] = {}
    live = [i for i, v in enumerate(ints) if v != (0, 0, 0)]
    for i, j, k in combinations(live, 3):
        s = _sign(_det3(ints[i], ints[j], ints[k]))
        if s:
            nonzero[(ground[i], ground[j], ground[k])] = s
    return Chirotope(ground, nonzero)


def _cocircuit_tuples(ints: tuple[IntVec, ...]) -> set[tuple[Sign, ...]]:
    out: set[tuple[Sign, ...]] = set()
    n = len(ints)
    for i in range(n):
        vi = ints[i]
        if vi == (0, 0, 0):
            continue
        for j in range(i + 1, n):
            normal = _cross(vi, ints[j])
            if normal == (0, 0, 0):
                continue
            signs = tuple(_sign(_dot(v, normal)) for v in ints)
            out.add(signs)
            out.add(tuple(-s for s in signs))
    return out


def cocircuits_of(arrangement: LabeledArrangement) -> frozenset[SignVector]:
    """Cocircuits of a spanning arrangement.

    Every independent pair spans a plane whose normal induces one cocircuit
    and its negation; duplicates collapse because distinct pairs can span
    the same plane.
    """
    ground, ints = _sorted_primitive(arrangement)
    if _rank3(ints) != 3:
        raise NotSpanning("arrangement does not span rank 3")
    return frozenset(SignVector(ground, t) for t in _cocircuit_tuples(ints))


def om_of(arrangement: LabeledArrangement) -> OrientedMatroid:
    """The oriented matroid of a spanning arrangement, in canonical form."""
    ground, ints = _sorted_primitive(arrangement)
    if _rank3(ints) != 3:
        raise NotSpanning("arrangement does not span rank 3")
    cocircuits = frozenset(SignVector(ground, t) for t in _cocircuit_tuples(ints))
    return OrientedMatroid(ground, cocircuits, None, ints)


def covectors_of(matroid: OrientedMatroid) -> frozenset[SignVector]:
    """All covectors: the composition closure of the cocircuits, plus zero."""
    ground = matroid.ground
    current: set[tuple[Sign, ...]] = {cc.signs for cc in matroid.cocircuits}
    frontier = set(current)
    while frontier:
        fresh: set[tuple[Sign, ...]] = set()
        for x in frontier:
            for y in current:
                for a, b in ((x, y), (y, x)):
                    z = tuple(s if s != 0 else t for s, t in zip(a, b))
                    if z not in current and z not in fresh:
                        fresh.add(z)
        current |= fresh
        frontier = fresh
    current.add(tuple(0 for _ in ground))
    return frozenset(SignVector(ground, t) for t in current)


def om_equal(m1: OrientedMatroid, m2: OrientedMatroid) -> bool:
    """Structural equality of two oriented matroids on the same labels."""
    if m1.ground != m2.ground:
        raise GroundSetMismatch(f"{m1.ground} vs {m2.ground}")
    return m1.cocircuits == m2.cocircuits


def strong_map(source: OrientedMatroid, target: OrientedMatroid) -> bool:
    """True iff every covector of the target is a covector of the source."""
    if source.ground != target.ground:
        raise GroundSetMismatch(f"{source.ground} vs {target.ground}")
    return covectors_of(target) <= covectors_of(source)


def weak_map(source: OrientedMatroid, target: OrientedMatroid) -> bool:
    """Rank-preserving weak-map test on chirotopes.

    True iff some global sign eps makes every target basis sign either 0 or
    eps times the source sign; only sign deletions are allowed.
    """
    if source.ground != target.ground:
        raise GroundSetMismatch(f"{source.ground} vs {target.ground}")
    chi_s = source.chirotope
    chi_t = target.chirotope
    eps = 0
    for triple, t_sign in chi_t.nonzero.items():
        s_sign = chi_s[triple]
        if s_sign == 0:
            return False
        if eps == 0:
            eps = t_sign * s_sign
        elif t_sign != eps * s_sign:
            return False
    return True


@dataclass(frozen=True)
class Matroid:
    """Rank-3 truncated matroid: ground set plus independent sets of size <= 3."""

    ground: tuple[Label, ...]
    independents: frozenset[frozenset[Label]]

    def is_independent(self, subset: Iterable[Label]) -> bool:
        return frozenset(subset) in self.independents

    def rank(self, subset: Iterable[Label]) -> int:
        chosen = frozenset(subset)
        return max((len(i) for i in self.independents if i <= chosen), default=0)

    def full_rank(self) -> int:
        return self.rank(self.ground)


def underlying_matroid(matroid: OrientedMatroid) -> Matroid:
    """Forget signs: independence of size <= 3 subsets, read off the chirotope.

    For the spanning rank-3 case a singleton or pair is independent exactly
    when some basis triple extends it.
    """
    chi = matroid.chirotope
    independents: set[frozenset[Label]] = {frozenset()}
    for triple in chi.nonzero:
        independents.add(frozenset(triple))
        for pair in combinations(triple, 2):
            independents.add(frozenset(pair))
        for single in triple:
            independents.add(frozenset((single,)))
    return Matroid(matroid.ground, frozenset(independents))
