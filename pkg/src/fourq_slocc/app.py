from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from fourq_slocc.core.audit import chi_family_audit
from fourq_slocc.core.catalog import catalog_entry, catalog_names, named_state
from fourq_slocc.core.entanglement import marginal_purity, max_entanglement_report, normalize_subset
from fourq_slocc.core.equivalence import compare_states, orbit_invariance_report, verify_witness
from fourq_slocc.core.errors import FourQubitError
from fourq_slocc.core.invariants import fingerprint, inv_N
from fourq_slocc.core.io import (
    build_entanglement_payload,
    build_fingerprint_payload,
    build_orbit_payload,
    build_verdict_payload,
    write_payload,
)
from fourq_slocc.core.local_ops import apply_quartet, parse_ops
from fourq_slocc.core.state import ComplexTolerance, PureState4
from fourq_slocc.data.loaders import load_state_file, save_state_file, serialize_state
from fourq_slocc.utils.log import configure_log, log_event, log_exception
from fourq_slocc.version import APP_TITLE, BUILD_VERSION, MAJOR_VERSION

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


@dataclass
class CliConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    sources: list[tuple[str, str]] = field(default_factory=list)
    output: str = ""
    log_file: str = ""
    seed: int = 0
    samples: int = 1
    workers: int = 1
    group: str = "sl"

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}.")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}.")

    @property
    def tolerance(self) -> ComplexTolerance:
        return ComplexTolerance(abs_tol=self.abs_tol, rel_tol=self.rel_tol)


class _SourceAction(argparse.Action):
    """Collect --state/--named in command-line order under one dest."""

    def __call__(self, parser, namespace, values, option_string=None):
        sources = list(getattr(namespace, self.dest, None) or [])
        kind = "file" if option_string == "--state" else "named"
        sources.append((kind, str(values)))
        setattr(namespace, self.dest, sources)


class _UsageError(Exception):
    pass


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--state", dest="sources", action=_SourceAction, metavar="FILE", help="fourq-state-v1 file")
    p.add_argument("--named", dest="sources", action=_SourceAction, metavar="NAME", help="catalog state name")


def _add_tolerance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--abs-tol", type=float, default=1e-10)
    p.add_argument("--rel-tol", type=float, default=1e-9)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fourq", description=APP_TITLE)
    parser.add_argument("--version", action="version", version=f"%(prog)s {MAJOR_VERSION}.{BUILD_VERSION}")
    parser.add_argument("--output", default="", help="write the JSON document to this file instead of stdout")
    parser.add_argument("--log-file", default="", help="append diagnostics to this file instead of stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="fingerprint (H, L, M, Dxt) plus N")
    _add_source_args(p)

    p = sub.add_parser("compare", help="weighted-projective fingerprint comparison")
    _add_source_args(p)
    _add_tolerance_args(p)

    p = sub.add_parser("apply", help="apply a quartet of single-qubit gates")
    p.add_argument("--ops", required=True, help='four gates from I,X,Y,Z,H, e.g. "H,H,H,I"')
    _add_source_args(p)

    p = sub.add_parser("check-witness", help="does the quartet map state A onto a multiple of state B")
    p.add_argument("--ops", required=True)
    p.add_argument("tokens", nargs="*", metavar="STATE", help="file path or catalog name")
    _add_source_args(p)
    _add_tolerance_args(p)

    p = sub.add_parser("marginals", help="single- and two-qubit marginal purities")
    p.add_argument("--subset", default="", help="comma-separated qubits, e.g. 1,2")
    _add_source_args(p)

    p = sub.add_parser("orbit-test", help="Monte Carlo invariance over random local quartets")
    _add_source_args(p)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--group", choices=("sl", "gl"), default="sl")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--rel-tol", type=float, default=1e-9)

    p = sub.add_parser("catalog", help="list or show catalog states")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?", default="")

    p = sub.add_parser("audit", help="check every chi-family claim")
    _add_tolerance_args(p)
    return parser


def _config_from_args(ns: argparse.Namespace) -> CliConfig:
    sources = list(getattr(ns, "sources", None) or [])
    for token in getattr(ns, "tokens", None) or []:
        if Path(token).is_file():
            sources.append(("file", token))
        elif token.strip().lower() in catalog_names():
            sources.append(("named", token))
        else:
            raise _UsageError(f"'{token}' is neither a state file nor a catalog name.")
    return CliConfig(
        abs_tol=getattr(ns, "abs_tol", 1e-10),
        rel_tol=getattr(ns, "rel_tol", 1e-9),
        sources=sources,
        output=ns.output,
        log_file=ns.log_file,
        seed=getattr(ns, "seed", 0),
        samples=getattr(ns, "samples", 1),
        workers=getattr(ns, "workers", 1),
        group=getattr(ns, "group", "sl"),
    )


def _load_source(kind: str, value: str) -> PureState4:
    if kind == "named":
        return named_state(value)
    return load_state_file(value)


def _states(config: CliConfig, count: int) -> list[PureState4]:
    if len(config.sources) != count:
        noun = "state" if count == 1 else "states"
        raise _UsageError(f"Expected {count} {noun} via --state/--named, got {len(config.sources)}.")
    return [_load_source(kind, value) for kind, value in config.sources]


def _run_command(ns: argparse.Namespace, config: CliConfig) -> tuple[Any, int]:
    command = ns.command
    tol = config.tolerance

    if command == "invariants":
        (state,) = _states(config, 1)
        return build_fingerprint_payload(fingerprint(state), inv_N(state)), EXIT_OK

    if command == "compare":
        a, b = _states(config, 2)
        verdict = compare_states(a, b, tol)
        return build_verdict_payload(verdict), EXIT_OK if verdict.equivalent else EXIT_NEGATIVE

    if command == "apply":
        quartet = parse_ops(ns.ops)
        (state,) = _states(config, 1)
        return apply_quartet(quartet, state), EXIT_OK

    if command == "check-witness":
        quartet = parse_ops(ns.ops)
        a, b = _states(config, 2)
        ok = verify_witness(a, b, quartet, tol)
        return {"ops": quartet.labels(), "witness": ok}, EXIT_OK if ok else EXIT_NEGATIVE

    if command == "marginals":
        (state,) = _states(config, 1)
        payload = build_entanglement_payload(max_entanglement_report(state))
        if ns.subset:
            try:
                keep = normalize_subset(int(tok) for tok in ns.subset.split(",") if tok.strip())
            except ValueError as exc:
                raise _UsageError(f"Bad --subset '{ns.subset}': {exc}") from exc
            payload["subset"] = {
                "keep": "".join(str(q) for q in keep),
                "purity": marginal_purity(state, keep),
            }
        return payload, EXIT_OK

    if command == "orbit-test":
        (state,) = _states(config, 1)
        report = orbit_invariance_report(
            state, config.samples, config.seed, group=config.group, workers=config.workers
        )
        code = EXIT_OK if report.max_deviation <= config.rel_tol else EXIT_NEGATIVE
        return build_orbit_payload(report), code

    if command == "catalog":
        if ns.action == "list":
            return {
                "states": [
                    {"name": name, "provenance": catalog_entry(name).provenance} for name in catalog_names()
                ]
            }, EXIT_OK
        if not ns.name:
            raise _UsageError("catalog show needs a state name.")
        return named_state(ns.name), EXIT_OK

    if command == "audit":
        report = chi_family_audit(tol)
        return report.to_payload(), EXIT_OK if report.passed else EXIT_NEGATIVE

    raise _UsageError(f"Unknown command '{command}'.")


def _emit(payload: Any, output: str) -> None:
    """States go out as fourq-state-v1 files, everything else as a JSON payload."""
    if isinstance(payload, PureState4):
        if output:
            save_state_file(payload, output)
        else:
            sys.stdout.write(serialize_state(payload).decode("utf-8"))
        return
    text = write_payload(payload, output or None)
    if not output:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one subcommand; JSON goes to stdout (or --output), diagnostics to stderr."""
    args = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(args)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    configure_log(ns.log_file or None)
    try:
        config = _config_from_args(ns)
        payload, code = _run_command(ns, config)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FourQubitError, OSError, ValueError) as exc:
        log_event(f"cli.{ns.command}", f"{type(exc).__name__}: {exc}")
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        log_exception(f"cli.{ns.command}")
        return EXIT_USAGE

    _emit(payload, config.output)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
