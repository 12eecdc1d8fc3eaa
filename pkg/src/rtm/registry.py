"""Named identity checks and the sweep runner.

Each registered identity pairs a case generator with a check. A check returns
``None`` when both sides agree and a counterexample mapping otherwise.
Sweeps enumerate every case within the bounds, so a report names the first
failing case in enumeration order regardless of worker count.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Literal, Optional

from pydantic import BaseModel, Field

from src.core.config import settings
from src.core.errors import InvariantViolation, ResourceLimitError
from src.core.logger import get_logger, log_verification_event
from src.core.linear import LinearCombination

logger = get_logger(__name__)

Counterexample = Optional[Dict[str, str]]


class Bounds(BaseModel):
    """Parameter ranges of a sweep.

    ``max_word_length`` is the word length for forest/word sweeps and the
    total degree for product sweeps.
    """

    max_forest_degree: int = Field(4, ge=0)
    max_word_length: int = Field(4, ge=0)
    random_cases: int = Field(0, ge=0)
    seed: int = Field(default_factory=lambda: settings.random_seed)


class VerificationReport(BaseModel):
    """Outcome of one identity sweep; passes iff no counterexample was found."""

    identity: str
    bounds: Dict[str, int]
    status: Literal["pass", "fail"]
    counterexample: Optional[Dict[str, str]] = None
    checked: int
    millis: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class Identity:
    name: str
    summary: str
    cases: Callable[[Bounds], Iterable[Any]]
    check: Callable[[Any], Counterexample]
    default_forest_degree: int = 4
    default_word_length: int = 4
    spot_checks: bool = False

    def default_bounds(self) -> Bounds:
        return Bounds(
            max_forest_degree=min(self.default_forest_degree, settings.max_degree),
            max_word_length=min(self.default_word_length, settings.max_word_length),
            random_cases=settings.random_cases if self.spot_checks else 0,
        )


REGISTRY: Dict[str, Identity] = {}

# short names accepted on the command line and by verify_identity
ALIASES: Dict[str, str] = {
    "thm1": "rtm_diamond_formula",
    "thm2": "antipode_diamond_formula",
    "cor": "g_equals_f_antipode",
    "thm3": "antipode_tau_conjugation",
    "lem_z": "z_commutation",
    "prop_key": "diamond_coproduct_split",
    "lem_pq": "pq_display",
    "prop_B": "fg_tensor_in_b",
    "prop_FG0": "fg_convolution_zero",
    "prop_FS": "f_tau_antipode",
    "lem_tau": "tau_diamond_relation",
    "op_eq3": "phi_tau_composite",
}


def resolve_identity(name: str) -> str:
    """Registered name for ``name`` or one of its short aliases.

    Raises:
        KeyError: Unknown identity name.
    """
    resolved = ALIASES.get(name, name)
    if resolved not in REGISTRY:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(REGISTRY)}")
    return resolved



def register(
    name: str,
    summary: str,
    cases: Callable[[Bounds], Iterable[Any]],
    forest_degree: int = 4,
    word_length: int = 4,
    spot_checks: bool = False,
) -> Callable[[Callable[[Any], Counterexample]], Callable[[Any], Counterexample]]:
    """Decorator adding a check to the registry under ``name``."""

    def wrap(check: Callable[[Any], Counterexample]) -> Callable[[Any], Counterexample]:
        if name in REGISTRY:
            raise ValueError(f"identity {name!r} registered twice")
        REGISTRY[name] = Identity(name, summary, cases, check, forest_degree, word_length, spot_checks)
        return check

    return wrap


def identity_names() -> List[str]:
    return list(REGISTRY)


def mismatch(lhs: LinearCombination[Any], rhs: LinearCombination[Any], **case: Any) -> Counterexample:
    """Counterexample record when ``lhs != rhs``, else ``None``."""
    if lhs == rhs:
        return None
    record = {key: _show(value) for key, value in case.items()}
    record["lhs"] = str(lhs)
    record["rhs"] = str(rhs)
    return record


def failure(reason: str, **case: Any) -> Dict[str, str]:
    record = {key: _show(value) for key, value in case.items()}
    record["reason"] = reason
    return record


def _show(value: Any) -> str:
    if isinstance(value, str):
        return value or "1"
    return str(value)


def _guarded(check: Callable[[Any], Counterexample]) -> Callable[[Any], Counterexample]:
    def run(case: Any) -> Counterexample:
        try:
            return check(case)
        except InvariantViolation as exc:
            return failure(f"invariant violation: {exc}", case=case)

    return run


def _check_caps(bounds: Bounds) -> None:
    if bounds.max_forest_degree > settings.max_degree:
        raise ResourceLimitError("forest degree bound", bounds.max_forest_degree, settings.max_degree)
    if bounds.max_word_length > settings.max_word_length:
        raise ResourceLimitError("word length bound", bounds.max_word_length, settings.max_word_length)


def verify_identity(
    name: str,
    bounds: Optional[Bounds] = None,
    parallelism: Optional[int] = None,
    report_timing: Optional[bool] = None,
) -> VerificationReport:
    """Sweep one identity over its case grid.

    Args:
        name: Registered identity name or short alias.
        bounds: Parameter ranges; the identity's defaults when omitted.
        parallelism: Worker threads; ``settings.parallelism`` when omitted.
        report_timing: Include wall time; ``settings.report_timing`` when omitted.

    Returns:
        A report naming the first counterexample in enumeration order, if any.

    Raises:
        KeyError: Unknown identity name.
        ResourceLimitError: Bounds above the configured caps.
    """
    name = resolve_identity(name)
    identity = REGISTRY[name]
    bounds = bounds or identity.default_bounds()
    _check_caps(bounds)
    workers = parallelism or settings.parallelism
    timing = settings.report_timing if report_timing is None else report_timing

    logger.info("verification_started", identity=name, bounds=bounds.model_dump(), workers=workers)
    started = time.perf_counter()
    check = _guarded(identity.check)
    cases = list(identity.cases(bounds))

    counterexample: Counterexample = None
    checked = 0
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(check, cases):
                checked += 1
                if result is not None:
                    counterexample = result
                    break
    else:
        for case in cases:
            checked += 1
            result = check(case)
            if result is not None:
                counterexample = result
                break

    millis = int((time.perf_counter() - started) * 1000) if timing else None
    status: Literal["pass", "fail"] = "pass" if counterexample is None else "fail"
    log_verification_event(logger, name, status, checked, millis=millis)
    return VerificationReport(
        identity=name,
        bounds={
            "max_forest_degree": bounds.max_forest_degree,
            "max_word_length": bounds.max_word_length,
            "random_cases": bounds.random_cases,
        },
        status=status,
        counterexample=counterexample,
        checked=checked,
        millis=millis,
    )


def run_all(
    parallelism: Optional[int] = None,
    report_timing: Optional[bool] = None,
) -> List[VerificationReport]:
    """Every registered identity at its default bounds, in registration order."""
    return [verify_identity(name, None, parallelism, report_timing) for name in REGISTRY]
