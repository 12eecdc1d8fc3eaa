"""Command-line front end.

Every subcommand writes its result to stdout as canonical text, or as JSON
with ``--json``. Exit codes: 0 success, 1 failed check, 2 bad input,
3 resource cap exceeded.
"""

import argparse
import io
import json
import sys
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, TextIO

from pydantic import BaseModel

from src.core.config import Settings, load_settings, use_settings
from src.core.errors import AlgebraError, ResourceLimitError
from src.core.logger import get_logger, setup_logging
from src.forests import ForestSum, antipode, check_degree, coproduct, enumerate_forests, parse_forest_sum
from src.harmonic import diamond, harub, star
from src.mzv import (
    Relation,
    duality_relations,
    parse_index,
    rtm_relations,
    verify_relation_numeric,
    zeta_numeric,
    zeta_truncated,
)
from src.rtm import (
    REGISTRY,
    Bounds,
    VerificationReport,
    f_poly,
    g_poly,
    identity_names,
    resolve_identity,
    rtm_apply,
    run_all,
    span_rank,
    verify_identity,
)
from src.words import WordSum, parse_word

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

PRODUCTS: Dict[str, Callable[[WordSum, WordSum], WordSum]] = {
    "star": star,
    "harub": harub,
    "diamond": diamond,
}


class CliConfig(BaseModel):
    """Per-invocation snapshot of caps and output options."""

    max_degree: int
    max_word_length: int
    output_format: Literal["text", "json"]
    numeric_terms: int
    tolerance: float
    parallelism: int
    report_timing: bool

    @classmethod
    def build(cls, base: Settings, args: argparse.Namespace) -> "CliConfig":
        return cls(
            max_degree=base.max_degree,
            max_word_length=base.max_word_length,
            output_format="json" if args.json else base.output_format,
            numeric_terms=base.numeric_terms if getattr(args, "terms", None) is None else args.terms,
            tolerance=base.tolerance if getattr(args, "tol", None) is None else args.tol,
            parallelism=args.parallelism or base.parallelism,
            report_timing=base.report_timing and not args.no_timing,
        )

    @property
    def as_json(self) -> bool:
        return self.output_format == "json"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtm-algebra",
        description="Rooted tree maps, harmonic products and multiple zeta relations.",
    )
    parser.add_argument("--json", action="store_true", help="Emit JSON instead of text.")
    parser.add_argument("--config", default=None, help="Flat KEY=value settings file.")
    parser.add_argument("--parallelism", type=int, default=None, help="Worker threads for sweeps.")
    parser.add_argument("--no-timing", action="store_true", help="Omit wall time from reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forests", help="List canonical forests of one degree.")
    p.add_argument("--degree", type=int, required=True)

    for name, text in (("coproduct", "Coproduct of a forest sum."), ("antipode", "Antipode of a forest sum."),
                       ("fpoly", "The polynomial F_f."), ("gpoly", "The polynomial G_f.")):
        p = sub.add_parser(name, help=text)
        p.add_argument("forest")

    p = sub.add_parser("rtm", help="Apply a rooted tree map to a polynomial.")
    p.add_argument("forest")
    p.add_argument("word")

    p = sub.add_parser("product", help="Multiply two polynomials.")
    p.add_argument("--op", choices=sorted(PRODUCTS), required=True)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("check", help="Verify a named identity, or 'all'.")
    p.add_argument("identity", help="Identity name, short alias (e.g. cor) or 'all'; 'list' prints the names.")
    p.add_argument("--max-forest-degree", type=int, default=None)
    p.add_argument("--max-word-length", type=int, default=None)
    p.add_argument("--random", type=int, default=None, help="Random spot checks at degree 5-6.")

    p = sub.add_parser("relations", help="Zeta relations from forests or from duality.")
    p.add_argument("--forest-degree", type=int, default=None)
    p.add_argument("--seed", default="yx")
    p.add_argument("--duality", action="store_true", help="List duality relations of --weight.")
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--terms", type=int, default=None)

    p = sub.add_parser("rank", help="Rank of the F_f of one degree.")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("zeta", help="Numeric multiple zeta value, e.g. '1,2'.")
    p.add_argument("index")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--truncated", type=int, default=None, help="Also run the direct sum up to N.")
    return parser


class _Session:
    """One dispatch: parsed arguments, config snapshot and buffered output."""

    def __init__(self, args: argparse.Namespace, config: CliConfig):
        self.args = args
        self.config = config
        self.out = io.StringIO()

    def emit(self, text: str, payload: Any) -> None:
        if self.config.as_json:
            self.out.write(json.dumps(payload, ensure_ascii=False, sort_keys=True) + "\n")
        else:
            self.out.write(text + "\n")

    # Input helpers

    def forest_sum(self, text: str) -> ForestSum:
        value = parse_forest_sum(text)
        for degree in value.degrees():
            check_degree(degree, self.config.max_degree)
        return value

    def polynomial(self, text: str) -> WordSum:
        value = parse_word(text)
        for degree in value.degrees():
            if degree > self.config.max_word_length:
                raise ResourceLimitError("word length", degree, self.config.max_word_length)
        return value

    # Subcommands

    def forests(self) -> int:
        check_degree(self.args.degree, self.config.max_degree)
        found = enumerate_forests(self.args.degree, self.config.max_degree)
        self.emit("\n".join(str(f) for f in found), [f.render() for f in found])
        return EXIT_OK

    def coproduct(self) -> int:
        value = coproduct(self.forest_sum(self.args.forest))
        self.emit(str(value), [r.model_dump() for r in value.to_records()])
        return EXIT_OK

    def antipode(self) -> int:
        value = antipode(self.forest_sum(self.args.forest))
        self.emit(str(value), [r.model_dump() for r in value.to_records()])
        return EXIT_OK

    def _poly(self, value: WordSum) -> int:
        self.emit(str(value), [r.model_dump() for r in value.to_records()])
        return EXIT_OK

    def fpoly(self) -> int:
        return self._poly(f_poly(self.forest_sum(self.args.forest)))

    def gpoly(self) -> int:
        return self._poly(g_poly(self.forest_sum(self.args.forest)))

    def rtm(self) -> int:
        return self._poly(rtm_apply(self.forest_sum(self.args.forest), self.polynomial(self.args.word)))

    def product(self) -> int:
        op = PRODUCTS[self.args.op]
        return self._poly(op(self.polynomial(self.args.left), self.polynomial(self.args.right)))

    def check(self) -> int:
        if self.args.identity == "list":
            names = identity_names()
            self.emit("\n".join(names), names)
            return EXIT_OK
        if self.args.identity == "all":
            reports = run_all(self.config.parallelism, self.config.report_timing)
        else:
            reports = [verify_identity(
                self.args.identity,
                self._bounds(self.args.identity),
                self.config.parallelism,
                self.config.report_timing,
            )]
        text = "\n".join(_report_line(r) for r in reports)
        payload: Any = [r.model_dump() for r in reports]
        if self.args.identity != "all":
            payload = payload[0]
        self.emit(text, payload)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED

    def _bounds(self, name: str) -> Optional[Bounds]:
        a, b, n = self.args.max_forest_degree, self.args.max_word_length, self.args.random
        if a is None and b is None and n is None:
            return None
        defaults = REGISTRY[resolve_identity(name)].default_bounds()
        return Bounds(
            max_forest_degree=defaults.max_forest_degree if a is None else a,
            max_word_length=defaults.max_word_length if b is None else b,
            random_cases=defaults.random_cases if n is None else n,
        )

    def relations(self) -> int:
        args = self.args
        if args.duality:
            if args.weight is None:
                raise AlgebraError("--duality needs --weight")
            found = duality_relations(args.weight)
        else:
            if args.forest_degree is None:
                raise AlgebraError("--forest-degree is required unless --duality is given")
            check_degree(args.forest_degree, self.config.max_degree)
            found = rtm_relations(args.forest_degree, args.seed)
        lines: List[str] = []
        records: List[Dict[str, Any]] = []
        failed = False
        for relation in found:
            residual: Optional[float] = None
            if args.numeric:
                ok, residual = verify_relation_numeric(relation, self.config.tolerance, self.config.numeric_terms)
                failed = failed or not ok
            lines.append(_relation_line(relation, residual))
            records.append(relation.to_record(residual).model_dump())
        self.emit("\n".join(lines), records)
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    def rank(self) -> int:
        check_degree(self.args.degree, self.config.max_degree)
        rank, expected = span_rank(self.args.degree)
        self.emit(
            f"degree {self.args.degree}: rank {rank}, expected {expected}",
            {"degree": self.args.degree, "rank": rank, "expected": expected},
        )
        return EXIT_OK if rank == expected else EXIT_CHECK_FAILED

    def zeta(self) -> int:
        index = parse_index(self.args.index)
        value = zeta_numeric(index, self.config.numeric_terms)
        payload: Dict[str, Any] = {"index": list(index.parts), "value": value, "terms": self.config.numeric_terms}
        text = f"zeta{index} = {value:.15g}"
        if self.args.truncated is not None:
            partial, bound = zeta_truncated(index, self.args.truncated)
            payload.update(truncated=partial, tail_bound=bound, cutoff=self.args.truncated)
            text += f"\ndirect sum to {self.args.truncated}: {partial:.15g} (tail <= {bound:.3g})"
        self.emit(text, payload)
        return EXIT_OK


def _report_line(report: VerificationReport) -> str:
    timing = "" if report.millis is None else f" in {report.millis} ms"
    line = f"{report.status} {report.identity}: {report.checked} cases{timing}"
    if report.counterexample:
        details = ", ".join(f"{k}={v}" for k, v in sorted(report.counterexample.items()))
        line += f"\n  counterexample: {details}"
    return line


def _relation_line(relation: Relation, residual: Optional[float]) -> str:
    source = relation.provenance
    origin = f"forest {source.forest}, seed {source.seed}" if source.kind == "rtm" else f"dual of {source.seed}"
    line = f"{relation}    [{origin}]"
    if residual is not None:
        line += f" residual {residual:.3e}"
    return line


def dispatch(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Run one command line and return its exit code.

    Output is buffered and written to ``stdout`` only after the command
    finishes; error messages go to ``stderr``.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        base = load_settings(args.config)
    except Exception as exc:
        stderr.write(f"error: invalid configuration: {exc}\n")
        return EXIT_USAGE
    setup_logging(base.log_level)
    config = CliConfig.build(base, args)
    session = _Session(args, config)
    logger.debug("command_dispatched", command=args.command, output_format=config.output_format)

    try:
        with use_settings(base):
            code = getattr(session, args.command)()
    except ResourceLimitError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except (AlgebraError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        stderr.write(f"error: {message}\n")
        return EXIT_USAGE
    except Exception:
        logger.error("command_crashed", command=args.command, exc_info=True)
        raise

    stdout.write(session.out.getvalue())
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
