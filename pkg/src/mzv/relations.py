"""Linear relations among multiple zeta values from rooted tree maps and duality."""

from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel

from src.core.config import settings
from src.core.errors import DomainError, InvariantViolation, PreconditionError
from src.core.linear import format_coefficient
from src.core.logger import get_logger
from src.forests import Forest, ForestSum, counit, enumerate_forests
from src.mzv.index import admissible_words, word_index
from src.mzv.numeric import evaluate_word_sum
from src.rtm import rtm_apply
from src.words import Word, WordSum, in_yax, tau

logger = get_logger(__name__)


class Provenance(BaseModel):
    kind: Literal["rtm", "duality"]
    forest: Optional[str] = None
    seed: Optional[str] = None


class RelationTerm(BaseModel):
    coeff: str
    index: List[int]


class RelationRecord(BaseModel):
    """JSON form of a relation."""
    provenance: Provenance
    terms: List[RelationTerm]
    numeric_residual: Optional[float] = None


@dataclass(frozen=True)
class Relation:
    """A polynomial of admissible words claimed to vanish under ζ."""

    lhs: WordSum
    provenance: Provenance

    @property
    def weights(self) -> List[int]:
        return self.lhs.degrees()

    def to_record(self, residual: Optional[float] = None) -> RelationRecord:
        return RelationRecord(
            provenance=self.provenance,
            terms=[
                RelationTerm(coeff=format_coefficient(c), index=list(word_index(w).parts))
                for w, c in self.lhs.items()
            ],
            numeric_residual=residual,
        )

    def __str__(self) -> str:
        if not self.lhs:
            return "0 = 0"
        parts = []
        for word, coeff in self.lhs.items():
            label = f"ζ{word_index(word)}"
            magnitude = abs(coeff)
            body = label if magnitude == 1 else f"{magnitude} {label}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts) + " = 0"


def _check_admissible(lhs: WordSum, expected_weight: int) -> None:
    for word, _ in lhs.items():
        if not in_yax(word):
            raise InvariantViolation("relation term is not admissible", word or "1")
        if len(word) != expected_weight:
            raise InvariantViolation("relation term has the wrong weight", word)


def relation_from_rtm(f: "ForestSum | Forest", seed: Word) -> Relation:
    """The relation ``f(seed) = 0`` for f in the augmentation ideal.

    Raises:
        PreconditionError: If ``f`` has a unit term or is not homogeneous.
        DomainError: If ``seed`` is not an admissible word.
    """
    forests = ForestSum.of(f) if isinstance(f, Forest) else f
    if counit(forests):
        raise PreconditionError("forest sum must lie in the augmentation ideal (no I term)")
    degrees = forests.degrees()
    if len(degrees) > 1:
        raise PreconditionError(f"forest sum is not homogeneous: degrees {degrees}")
    if not in_yax(seed):
        raise DomainError("relation_from_rtm", seed, "yAx")
    lhs = rtm_apply(forests, seed)
    if degrees:
        _check_admissible(lhs, degrees[0] + len(seed))
    logger.debug("relation_generated", kind="rtm", forest=str(forests), seed=seed, terms=len(lhs))
    return Relation(lhs, Provenance(kind="rtm", forest=str(forests), seed=seed))


def duality_relation(word: Word) -> Relation:
    """``w - τ(w)``; zero for self-dual words.

    Raises:
        DomainError: If ``word`` is not admissible.
    """
    if not in_yax(word):
        raise DomainError("duality_relation", word, "yAx")
    p = WordSum.word(word)
    return Relation(p - tau(p), Provenance(kind="duality", seed=word))


def duality_relation_from_forest(f: "ForestSum | Forest") -> Relation:
    """Duality for the word ``f(x)``: ``(1 - τ)(f(x))``, which equals ``(f + S(f))(x)``."""
    forests = ForestSum.of(f) if isinstance(f, Forest) else f
    if counit(forests):
        raise PreconditionError("forest sum must lie in the augmentation ideal (no I term)")
    image = rtm_apply(forests, "x")
    lhs = image - tau(image)
    for degree in forests.degrees():
        _check_admissible(lhs, degree + 1)
    return Relation(lhs, Provenance(kind="duality", forest=str(forests), seed="x"))


def verify_relation_numeric(
    relation: Relation,
    tol: Optional[float] = None,
    terms: Optional[int] = None,
) -> Tuple[bool, float]:
    """Evaluate ``relation.lhs`` under ζ and compare against ``tol``.

    Returns:
        ``(abs(residual) < tol, residual)``.
    """
    bound = settings.tolerance if tol is None else tol
    if bound <= 0:
        raise PreconditionError("tolerance must be positive")
    residual = evaluate_word_sum(relation.lhs, terms)
    ok = abs(residual) < bound
    if not ok:
        logger.warning("relation_residual_large", relation=str(relation), residual=residual, tol=bound)
    return ok, residual


def rtm_relations(forest_degree: int, seed: Word) -> List[Relation]:
    """One relation per forest of the given degree applied to ``seed``."""
    if forest_degree < 1:
        raise PreconditionError("forest degree must be at least 1")
    return [relation_from_rtm(forest, seed) for forest in enumerate_forests(forest_degree)]


def duality_relations(weight: int) -> List[Relation]:
    """Non-trivial duality relations of one weight, one per dual pair."""
    found = []
    for word in admissible_words(weight):
        dual = tau(WordSum.word(word)).keys()[0]
        if word < dual:
            found.append(duality_relation(word))
    return found
