"""Finite-scale evidence for star inclusions and exclusions at infinity.

A boundary point lies in the star of another when its approaching
points eventually enter every halfspace around the other's witness set.
At finite scale this yields two one-sided certificates: star_witness
confirms the halfspace inequality along matched family indices
(inclusion evidence), and separation_evidence confirms a uniform
distance excess against a truncated neighborhood of the balanced tree-3
ray (exclusion evidence).  Both report margins, never membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dlgraph import DLParams, DLVertex, PointFamily, identity, vertex_sort_key
from .errors import ProfileMismatch, WrongDimension
from .horofn import m_profile
from .metric import distance
from .treecoord import ORIGIN, TreeVertex, canonical_paths


@dataclass(frozen=True)
class HalfspaceQuery:
    """Witness vertices W and slack C defining {z : d(z, W) <= d(z, id) + C}."""

    witnesses: tuple[DLVertex, ...]
    offset: int = 0

    def __post_init__(self):
        if not self.witnesses:
            raise ValueError("halfspace needs at least one witness vertex")


def in_halfspace(z: DLVertex, query: HalfspaceQuery) -> bool:
    best = min(distance(z, w) for w in query.witnesses)
    return best <= distance(z, identity(z.params)) + query.offset


@dataclass(frozen=True)
class StarWitnessReport:
    """Margins d(a_n, id) + C - d(a_n, b_n) for n = 1..checked_n."""

    a: str
    b: str
    checked_n: int
    offset: int
    margins: tuple[int, ...]
    holds_for_all: bool
    first_failure: int | None


def star_witness(
    a: PointFamily, b: PointFamily, n_max: int, offset: int = 0
) -> StarWitnessReport:
    """Check d(a_n, b_n) <= d(a_n, id) + offset for every 1 <= n <= n_max.

    Success is evidence that the limit of a lies in the star of the
    limit of b; a negative margin pinpoints the first failing index.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    base = identity(a.params)
    margins = []
    first_failure = None
    for n in range(1, n_max + 1):
        an = a.at(n)
        margin = distance(an, base) + offset - distance(an, b.at(n))
        margins.append(margin)
        if margin < 0 and first_failure is None:
            first_failure = n
    return StarWitnessReport(
        a.name, b.name, n_max, offset, tuple(margins),
        first_failure is None, first_failure,
    )


def nk_beta_truncation(params: DLParams, k: int, depth: int) -> tuple[DLVertex, ...]:
    """Balanced tree-3 excursions with spine depth in [k, k + depth].

    These are the vertices agreeing with the beta ray's tail shape up
    to relabeling: trivial in trees 1 and 2, equal spine depth and
    climb in tree 3, every canonical label choice included.  There are
    (q-1) q^(j-1) of them at each depth j >= 1.
    """
    if params.d != 3:
        raise WrongDimension("the truncated neighborhood is defined for d = 3")
    if k < 0 or depth < 0:
        raise ValueError("k and depth must be nonnegative")
    out = []
    for j in range(k, k + depth + 1):
        for path in canonical_paths(j, params.q):
            coords = (ORIGIN, ORIGIN, TreeVertex(j, path))
            out.append(DLVertex(coords, params.q))
    out.sort(key=vertex_sort_key)
    return tuple(out)


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail evidence for a property checked over an enumerated domain."""

    name: str
    cases: int
    failures: int
    passed: bool
    first_failure: str | None = None
    details: dict = field(default_factory=dict)
    elapsed: float | None = None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extras = ", ".join(f"{k}={v}" for k, v in self.details.items())
        tail = f" [{extras}]" if extras else ""
        timing = f" ({self.elapsed:.2f}s)" if self.elapsed is not None else ""
        fails = f", {self.failures} failures" if self.failures else ""
        first = f", first: {self.first_failure}" if self.first_failure else ""
        return f"{verdict} {self.name}: {self.cases} cases{fails}{first}{tail}{timing}"


def separation_evidence(
    a: PointFamily, k: int, n_max: int, depth: int
) -> VerificationReport:
    """Uniform distance excess of a's points over the beta neighborhood.

    Requires a's limiting tree-3 spine depth to be exactly 0 (checked
    via m_profile).  Verifies distance(a_n, w) >= distance(a_n, id) + k
    for all 1 <= n <= n_max and every w in the depth-truncated
    neighborhood at scale k; reports the minimum slack observed.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    profile = m_profile(a)
    if profile[2] != 0:
        raise ProfileMismatch(
            f"{a.name} has limiting tree-3 spine depth {profile[2]}, need 0"
        )
    witnesses = nk_beta_truncation(a.params, k, depth)
    base = identity(a.params)
    cases = 0
    failures = 0
    first_failure = None
    min_slack = None
    for n in range(1, n_max + 1):
        an = a.at(n)
        target = distance(an, base) + k
        for w in witnesses:
            slack = distance(an, w) - target
            cases += 1
            if min_slack is None or slack < min_slack:
                min_slack = slack
            if slack < 0:
                failures += 1
                if first_failure is None:
                    first_failure = f"n={n}, w={w}"
    return VerificationReport(
        name=f"separation:{a.name},k={k}",
        cases=cases,
        failures=failures,
        passed=failures == 0,
        first_failure=first_failure,
        details={"min_slack": min_slack, "k": k, "n_max": n_max, "depth": depth},
    )
