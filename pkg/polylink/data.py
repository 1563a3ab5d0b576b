"""Custom types shared across polylink."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Any

from .exceptions import InvalidPairingError

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator

    from .vertexset import VertexSet

type Path = tuple[int, ...]


@dataclass(frozen=True)
class Pairing:
    """Terminal pairs (s_i, t_i) whose 2k endpoints are all distinct."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        """Check that no endpoint repeats."""
        terminals = [vertex for pair in self.pairs for vertex in pair]
        if len(set(terminals)) != len(terminals):
            msg = f"Pairing endpoints must be distinct: {self.pairs}"
            raise InvalidPairingError(msg)

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> Pairing:
        """Build a pairing from (s, t) tuples."""
        return cls(tuple((int(s), int(t)) for s, t in pairs))

    @classmethod
    def parse(cls, text: str) -> Pairing:
        """Parse the CLI syntax ``s1:t1,s2:t2``."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            source, sep, target = chunk.partition(":")
            if not sep:
                msg = f"Pair {chunk!r} is not of the form s:t"
                raise InvalidPairingError(msg)
            try:
                pairs.append((int(source), int(target)))
            except ValueError as exception:
                msg = f"Pair {chunk!r} has a non-integer endpoint"
                raise InvalidPairingError(msg) from exception
        if not pairs:
            msg = "Pairing is empty"
            raise InvalidPairingError(msg)
        return cls.of(pairs)

    @property
    def k(self) -> int:
        """Return the number of pairs."""
        return len(self.pairs)

    def terminals(self) -> tuple[int, ...]:
        """Return all endpoints, sources first."""
        return tuple(s for s, _ in self.pairs) + tuple(t for _, t in self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return ",".join(f"{s}:{t}" for s, t in self.pairs)

    def as_json(self) -> list[list[int]]:
        """Return a JSON-friendly list of pairs."""
        return [[s, t] for s, t in self.pairs]


@dataclass(frozen=True)
class Linkage:
    """One path per pair; path i runs from s_i to t_i."""

    paths: tuple[Path, ...]

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def as_json(self) -> list[list[int]]:
        """Return a JSON-friendly list of paths."""
        return [list(path) for path in self.paths]


@dataclass(frozen=True)
class KLinkedResult:
    """Outcome of a k-linkedness decision."""

    k: int
    linked: bool
    witness: Pairing | None = None

    def __bool__(self) -> bool:
        return self.linked


@dataclass(frozen=True)
class LinkednessResult:
    """Exact linkedness with a certificate against k + 1.

    ``capped`` means the search stopped at a caller-supplied maximum, so k
    is only a lower bound.
    """

    k: int
    witness: Pairing | None = None
    capped: bool = False


@dataclass(frozen=True)
class RootedSubdivision:
    """A subdivision of a complete graph rooted at ``root``."""

    root: int
    branch: tuple[int, ...]
    paths: tuple[tuple[tuple[int, int], Path], ...] = field(default=())

    def path(self, a: int, b: int) -> Path:
        """Return the subdivision path from branch vertex a to b."""
        for (x, y), path in self.paths:
            if (x, y) == (a, b):
                return path
            if (x, y) == (b, a):
                return tuple(reversed(path))
        msg = f"No subdivision path between {a} and {b}"
        raise KeyError(msg)

    def subdividing_vertices(self) -> set[int]:
        """Return every interior vertex of a subdivision path."""
        return {vertex for _, path in self.paths for vertex in path[1:-1]}

    def edges(self) -> set[frozenset[int]]:
        """Return the edge set E(K) of the subdivision."""
        return {
            frozenset(step)
            for _, path in self.paths
            for step in zip(path, path[1:], strict=False)
        }

    def as_json(self) -> dict[str, Any]:
        """Return the branch list and path lists."""
        return {
            "root": self.root,
            "branch": list(self.branch),
            "paths": [list(path) for _, path in self.paths],
        }


@dataclass(frozen=True)
class CanonicalForm:
    """Parameters (n; (j_1, k_1), ..., (j_m, k_m)) of a recognised polytope."""

    n: int
    pairs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def normalized(cls, n: int, pairs: Iterable[tuple[int, int]]) -> CanonicalForm:
        """Sort each pair ascending, then the pair list lexicographically."""
        return cls(n, tuple(sorted((min(j, k), max(j, k)) for j, k in pairs)))

    @property
    def m(self) -> int:
        """Return the number of sum factors."""
        return len(self.pairs)

    @property
    def dim(self) -> int:
        """Return n - 1 + sum(j_i + k_i) + m."""
        return self.n - 1 + sum(j + k for j, k in self.pairs) + self.m

    @property
    def n_vertices(self) -> int:
        """Return n + sum(j_i + k_i + 2)."""
        return self.n + sum(j + k + 2 for j, k in self.pairs)

    def is_quadrilateral_join(self) -> bool:
        """Return True when every pair is (1, 1)."""
        return all(pair == (1, 1) for pair in self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return f"P({self.n})"
        body = ", ".join(f"{j},{k}" for j, k in self.pairs)
        return f"P({self.n}; {body})"

    def as_json(self) -> dict[str, Any]:
        """Return n and the pair list."""
        return {"n": self.n, "pairs": [list(pair) for pair in self.pairs]}


@dataclass(frozen=True)
class CofacetGraph:
    """Facet complements of size one (loops) and two (edges)."""

    n: int
    loops: VertexSet
    edges: frozenset[tuple[int, int]]

    def neighbors(self, vertex: int) -> set[int]:
        """Return the edge neighbours of a vertex."""
        return {b if a == vertex else a for a, b in self.edges if vertex in (a, b)}

    def degree(self, vertex: int) -> int:
        """Return the degree, counting a loop twice."""
        return len(self.neighbors(vertex)) + (2 if vertex in self.loops else 0)


@dataclass(frozen=True)
class Violation:
    """A single failed check with an optional vertex certificate."""

    code: str
    message: str
    certificate: tuple[int, ...] = ()

    def as_json(self) -> dict[str, Any]:
        """Return code, message and certificate."""
        return {
            "code": self.code,
            "message": self.message,
            "certificate": list(self.certificate),
        }


@dataclass(frozen=True)
class CheckReport:
    """A list of violated invariants; empty means everything holds."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        """Return True if no invariant is violated."""
        return not self.violations

    def codes(self) -> set[str]:
        """Return the distinct violation codes."""
        return {violation.code for violation in self.violations}


@dataclass(frozen=True)
class CharacterizationPredicates:
    """The three equivalent conditions on small facet complements."""

    small_cofacets: bool
    canonical: bool
    no_big_simplex: bool

    def agree(self) -> bool:
        """Return True if all three conditions have the same value."""
        return self.small_cofacets == self.canonical == self.no_big_simplex


class Classification(StrEnum):
    """Possible shapes of a polytope meeting the few-vertices lower bound."""

    CASE_I = "case(i)"
    CASE_II = "case(ii)"
    CASE_III = "case(iii)"
    NOT_EXTREMAL = "not-extremal"


@dataclass(frozen=True)
class ClassificationResult:
    """A classification with the data that certifies it."""

    classification: Classification
    linkedness: int
    lower_bound: int
    canonical_form: CanonicalForm | None = None
    witness_facet: VertexSet | None = None
    facet_form: CanonicalForm | None = None
    note: str | None = None


@dataclass(frozen=True)
class BoundsRow:
    """Known range for k(d)."""

    d: int
    lower: int
    upper: int
    exact: int | None = None
    paper_discrepancy: str | None = None

    def values(self) -> list[int]:
        """Return every value k(d) may still take."""
        return list(range(self.lower, self.upper + 1))


class CaseStatus(StrEnum):
    """Outcome of one verification case."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class CaseOutcome:
    """What a case check reports back: pass or fail, and its evidence."""

    status: CaseStatus
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def check(cls, passed: bool, detail: str = "", **data: Any) -> CaseOutcome:
        """Return PASSED or FAILED depending on ``passed``."""
        status = CaseStatus.PASSED if passed else CaseStatus.FAILED
        return cls(status, detail, data)

    @classmethod
    def skipped(cls, detail: str) -> CaseOutcome:
        """Return a case that did not apply."""
        return cls(CaseStatus.SKIPPED, detail)


@dataclass(frozen=True)
class SuiteCase:
    """One unit of verification work; ``check`` must be a module-level function."""

    suite: str
    name: str
    check: Callable[..., CaseOutcome]
    args: tuple[Any, ...] = ()


@dataclass(frozen=True)
class CaseResult:
    """A finished case in index order."""

    index: int
    suite: str
    name: str
    status: CaseStatus
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    def as_json(self) -> dict[str, Any]:
        """Return the case as a report entry."""
        return {
            "suite": self.suite,
            "name": self.name,
            "status": str(self.status),
            "detail": self.detail,
            "data": self.data,
            "seconds": round(self.seconds, 3),
        }
