"""
Claim registry and verification engine.

A claim pairs a closed-form predictor with an oracle computation and a
comparator, over a deterministic parameter domain. Running a claim walks
the domain in ascending order and stops at the first disagreement unless
asked to be exhaustive.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from config import WorkbenchSettings
from models import (
    Certificate,
    ClaimSummary,
    DomainKind,
    Expectation,
    Status,
    VerificationOutcome,
)
from services.errors import InvalidInput, ResourceLimitExceeded, UnknownClaim
from services.graph import LabeledGraph, SearchBudget, check_oracle_cap
from services.product import ProductDims, product_vertex_count

logger = logging.getLogger(__name__)

Parameter = Union[int, Tuple[int, ...]]


@dataclass(frozen=True)
class NRange:
    """Integers start..stop (inclusive) accepted by an optional filter"""

    start: int
    stop: int
    where: Optional[Callable[[int], bool]] = None
    kind = DomainKind.N

    def values(self, start: Optional[int] = None, stop: Optional[int] = None) -> Iterator[int]:
        lo = self.start if start is None else max(start, 2)
        hi = self.stop if stop is None else stop
        for n in range(lo, hi + 1):
            if self.where is None or self.where(n):
                yield n


@dataclass(frozen=True)
class DimsSample:
    """
    Non-decreasing dim tuples with entries in start..stop, k in ks, and at
    most max_vertices product-graph vertices, ordered by k then lexically.
    """

    start: int = 2
    stop: int = 16
    ks: Tuple[int, ...] = (2, 3)
    max_vertices: int = 60
    where: Optional[Callable[[ProductDims], bool]] = None
    kind = DomainKind.DIMS

    def values(self, start: Optional[int] = None, stop: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        lo = self.start if start is None else max(start, 2)
        hi = self.stop if stop is None else stop
        for k in self.ks:
            for dims in itertools.combinations_with_replacement(range(lo, hi + 1), k):
                d = ProductDims(dims)
                if product_vertex_count(d) > self.max_vertices:
                    continue
                if self.where is None or self.where(d):
                    yield dims


@dataclass(frozen=True)
class DimsList:
    """A fixed list of dim tuples"""

    items: Tuple[Tuple[int, ...], ...]
    kind = DomainKind.DIMS

    @property
    def start(self) -> int:
        return min(min(dims) for dims in self.items)

    @property
    def stop(self) -> int:
        return max(max(dims) for dims in self.items)

    def values(self, start: Optional[int] = None, stop: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        lo = self.start if start is None else start
        hi = self.stop if stop is None else stop
        for dims in self.items:
            if all(lo <= d <= hi for d in dims):
                yield dims


Domain = Union[NRange, DimsSample, DimsList]


@dataclass(frozen=True)
class Observation:
    value: Any
    witness: Any = None


@dataclass
class OracleContext:
    """Caps and the search budget available to one oracle evaluation"""

    settings: WorkbenchSettings
    budget: SearchBudget

    def checked(self, g: LabeledGraph) -> LabeledGraph:
        check_oracle_cap(g, self.settings.oracle_cap)
        return g


def equal(predicted: Any, observed: Any) -> bool:
    return predicted == observed


def at_most(predicted: Any, observed: Any) -> bool:
    """Observed value stays at or below a predicted upper bound (None: no bound)"""
    return predicted is None or observed <= predicted


def at_least(predicted: Any, observed: Any) -> bool:
    return observed >= predicted


def within(predicted: Sequence[int], observed: int) -> bool:
    low, high = predicted
    return low <= observed <= high


def implies(predicted: Optional[bool], observed: bool) -> bool:
    """predicted True means the hypothesis holds and the conclusion must too"""
    return not predicted or observed


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    domain: Domain
    predictor: Callable[[Parameter], Any]
    oracle: Callable[[Parameter, OracleContext], Observation]
    comparator: Callable[[Any, Any], bool] = equal
    expect: Expectation = Expectation.HOLDS

    def summary(self) -> ClaimSummary:
        return ClaimSummary(
            id=self.id,
            description=self.description,
            domain=self.domain.kind,
            default_range=(self.domain.start, self.domain.stop),
            expect=self.expect,
        )


@dataclass
class ClaimRegistry:
    _claims: Dict[str, Claim] = field(default_factory=dict)

    def register(self, claim: Claim) -> Claim:
        if claim.id in self._claims:
            raise ValueError(f"claim {claim.id} registered twice")
        self._claims[claim.id] = claim
        return claim

    def get(self, claim_id: str) -> Claim:
        try:
            return self._claims[claim_id]
        except KeyError:
            raise UnknownClaim(f"no claim registered as {claim_id!r}") from None

    def __iter__(self) -> Iterator[Claim]:
        return iter(self._claims.values())

    def __len__(self) -> int:
        return len(self._claims)

    def __contains__(self, claim_id: str) -> bool:
        return claim_id in self._claims


@lru_cache(maxsize=1)
def default_registry() -> ClaimRegistry:
    from services import claims_dn, claims_product, claims_zn

    registry = ClaimRegistry()
    for module in (claims_zn, claims_product, claims_dn):
        module.register_claims(registry)
    logger.debug("registered %d claims", len(registry))
    return registry


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    return value


class VerificationEngine:
    def __init__(self, settings: Optional[WorkbenchSettings] = None, registry: Optional[ClaimRegistry] = None):
        self.settings = settings or WorkbenchSettings()
        self.registry = registry if registry is not None else default_registry()

    def list_claims(self) -> List[ClaimSummary]:
        return [claim.summary() for claim in self.registry]

    def run_claim(
        self,
        claim_id: str,
        range_override: Optional[Tuple[Optional[int], Optional[int]]] = None,
        budget: Optional[int] = None,
        exhaustive: bool = False,
    ) -> VerificationOutcome:
        """Check one claim over its domain; the budget applies to each instance"""
        claim = self.registry.get(claim_id)
        start, stop = range_override or self.settings.claim_ranges.get(claim_id, (None, None))
        if start is not None and stop is not None and start > stop:
            raise InvalidInput(f"empty range {start}..{stop}")
        limit = budget or self.settings.search_budget

        checked = 0
        failures = 0
        certificate: Optional[Certificate] = None
        for parameter in claim.domain.values(start, stop):
            ctx = OracleContext(settings=self.settings, budget=SearchBudget(limit))
            try:
                predicted = claim.predictor(parameter)
                observation = claim.oracle(parameter, ctx)
            except ResourceLimitExceeded as e:
                logger.warning("%s stopped at %s: %s", claim.id, parameter, e)
                return self._outcome(
                    claim, checked, Status.RESOURCE_LIMIT, None, f"resource limit at {_jsonable(parameter)}: {e}"
                )
            checked += 1
            if not claim.comparator(predicted, observation.value):
                failures += 1
                if certificate is None:
                    certificate = Certificate(
                        parameter=_jsonable(parameter),
                        predicted=_jsonable(predicted),
                        observed=_jsonable(observation.value),
                        witness=_jsonable(observation.witness),
                    )
                if not exhaustive:
                    break
        if certificate is None:
            return self._outcome(claim, checked, Status.PASS, None, None)
        notes = f"{failures} failing instances" if exhaustive else None
        return self._outcome(claim, checked, Status.COUNTEREXAMPLE, certificate, notes)

    def run_all(
        self,
        range_override: Optional[Tuple[Optional[int], Optional[int]]] = None,
        budget: Optional[int] = None,
        exhaustive: bool = False,
    ) -> Iterator[VerificationOutcome]:
        """Run every claim; a range override only narrows the claims indexed by n"""
        for claim in self.registry:
            span = range_override if claim.domain.kind == DomainKind.N else None
            yield self.run_claim(claim.id, span, budget, exhaustive)

    @staticmethod
    def _outcome(
        claim: Claim,
        checked: int,
        status: Status,
        certificate: Optional[Certificate],
        notes: Optional[str],
    ) -> VerificationOutcome:
        as_expected = (status == Status.PASS and claim.expect == Expectation.HOLDS) or (
            status == Status.COUNTEREXAMPLE and claim.expect == Expectation.REFUTED
        )
        logger.info("%s: %s after %d instances", claim.id, status.value, checked)
        return VerificationOutcome(
            claim_id=claim.id,
            instances_checked=checked,
            status=status,
            expected=claim.expect,
            as_expected=as_expected,
            certificate=certificate,
            notes=notes,
        )


def list_claims() -> List[ClaimSummary]:
    return VerificationEngine().list_claims()


def run_claim(
    claim_id: str,
    range_override: Optional[Tuple[Optional[int], Optional[int]]] = None,
    budget: Optional[int] = None,
    exhaustive: bool = False,
    settings: Optional[WorkbenchSettings] = None,
) -> VerificationOutcome:
    return VerificationEngine(settings).run_claim(claim_id, range_override, budget, exhaustive)
