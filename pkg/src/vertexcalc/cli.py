"""``vertexcalc`` command-line interface."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import acceptance, cremona, ftcy, gv, vertex
from .cache import AmplitudeCache
from .exact_algebra import DomainError, NovikovSeries, series_log
from .exact_algebra.novikov import parse_edge
from .partitions import decode, encode_triple
from .serialization import qrational_to_json, render, render_series, series_to_json

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3
ENV_CACHE = "VERTEXCALC_CACHE"


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    cache_path: str | None = None
    default_max_degree: int = 4
    default_max_genus: int = 3
    jobs: int = 1
    output: str = "text"

    def validate(self):
        if self.jobs < 1:
            raise UsageError("jobs must be at least 1")
        if self.default_max_degree < 0 or self.default_max_genus < 0:
            raise UsageError("degrees must be nonnegative")
        if self.output not in ("text", "json"):
            raise UsageError(f"unknown output format {self.output!r}")


def read_config_file(path: str) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        out[key.strip()] = value.strip()
    return out


def resolve_config(args) -> CliConfig:
    """Flags override the environment, which overrides the config file."""
    cfg = CliConfig()
    if args.config_file:
        values = read_config_file(args.config_file)
        known = {"cache_path", "default_max_degree", "default_max_genus", "jobs", "output"}
        unknown = set(values) - known
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        try:
            for key, value in values.items():
                setattr(cfg, key, value if key in ("cache_path", "output") else int(value))
        except ValueError as exc:
            raise UsageError(f"bad config value: {exc}") from exc
    if os.environ.get(ENV_CACHE):
        cfg.cache_path = os.environ[ENV_CACHE]
    if args.cache:
        cfg.cache_path = args.cache
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if getattr(args, "output", None):
        cfg.output = args.output
    if getattr(args, "json", False):
        cfg.output = "json"
    cfg.validate()
    return cfg


# -- argument helpers --------------------------------------------------------------


def _lengths(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise UsageError(f"bad lengths {text!r}") from None


def _caps(args, lengths) -> dict | None:
    caps = {}
    if args.position_caps:
        per = _lengths(args.position_caps)
        for i, n in enumerate(lengths, start=1):
            for j in range(1, n + 1):
                if j <= len(per):
                    caps[(i, j)] = per[j - 1]
    for item in args.cap or []:
        edge, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad cap {item!r}; expected i,j=c")
        try:
            caps[parse_edge(edge)] = int(value)
        except ValueError:
            raise UsageError(f"bad cap {item!r}") from None
    return caps or None


def _config(args, cfg: CliConfig) -> ftcy.ConfigSpec:
    D = cfg.default_max_degree if args.max_degree is None else args.max_degree
    shape = args.shape.replace("-", "_")
    lengths = _lengths(args.lengths) if args.lengths else (1, 1, 1)
    if shape == "two_leg":
        shape = ftcy.TRIVALENT
        lengths = (lengths + (1, 1, 1))[:3]
    try:
        return ftcy.ConfigSpec(shape, lengths, D, _caps(args, lengths))
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _emit(cfg: CliConfig, text: str, payload) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands -----------------------------------------------------------------------


def cmd_amplitude(args, cfg: CliConfig) -> int:
    try:
        legs = tuple(decode(m) for m in (args.mu1, args.mu2, args.mu3))
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    value = vertex.amplitude(args.flavor, legs)
    _emit(cfg, render(value), {"flavor": args.flavor, "triple": encode_triple(legs), "value": qrational_to_json(value)})
    return EXIT_OK


def cmd_check_vertex_equality(args, cfg: CliConfig) -> int:
    if args.max_size < 0:
        raise UsageError("max size must be nonnegative")
    n, bad = acceptance.check_vertex_equality(args.max_size, cfg.jobs)
    payload = {"checked": n, "failures": bad}
    text = f"checked {n} triples with legs of size <= {args.max_size}: " + (
        "all equal" if not bad else "MISMATCH at " + ", ".join(bad)
    )
    _emit(cfg, text, payload)
    return EXIT_OK if not bad else EXIT_VERIFY


def _two_leg_series(config: ftcy.ConfigSpec) -> NovikovSeries:
    n1, n2 = (config.lengths + (1, 1))[:2]
    return ftcy.z_two_leg(n1, n2, config.max_degree)


def cmd_zfun(args, cfg: CliConfig) -> int:
    config = _config(args, cfg)
    if args.shape.replace("-", "_") == "two_leg":
        z = _two_leg_series(config)
    else:
        z = ftcy.partition_function(config, args.flavor)
    if args.log:
        z = series_log(z)
    _emit(cfg, render_series(z), series_to_json(z))
    return EXIT_OK


def cmd_gv(args, cfg: CliConfig) -> int:
    config = _config(args, cfg)
    G = cfg.default_max_genus if args.max_genus is None else args.max_genus
    if args.shape.replace("-", "_") == "two_leg":
        F = series_log(_two_leg_series(config))
    else:
        F = ftcy.free_energy(config, args.flavor)
    table = gv.gv_extract(F, G)
    payload = gv.gv_to_json(table, G)
    lines = []
    for entry in payload["classes"]:
        d = " ".join(f"{k}:{v}" for k, v in entry["d"].items())
        ns = " ".join(f"n{g}={n}" for g, n in entry["n"].items())
        lines.append(f"{d}  {ns}")
    _emit(cfg, "\n".join(lines), payload)
    return EXIT_OK


def _outcome_payload(cls, outcome: cremona.ReductionOutcome) -> dict:
    return {
        "class": str(cls),
        "outcome": str(outcome),
        "engine_level": outcome.engine_level,
        "trace": outcome.trace,
    }


def cmd_cremona_reduce(args, cfg: CliConfig) -> int:
    try:
        cls = cremona.CurveClass.parse(args.curve_class)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    if not cls.is_calabi_yau():
        raise UsageError(f"class {cls} violates 2d = sum a_i")
    outcome = cremona.reduce(cls, max_growth=args.max_growth)
    payload = _outcome_payload(cls, outcome)
    if args.max_genus is not None and outcome.tag != cremona.IRREDUCIBLE:
        payload["invariants"] = [str(v) for v in cremona.local_invariants(outcome, args.max_genus)]
    lines = [f"{cls} -> {outcome}" + (" (engine-level conclusion)" if outcome.engine_level else "")]
    lines += [json.dumps(step, sort_keys=True) for step in outcome.trace]
    if "invariants" in payload:
        lines.append("N^g = " + ", ".join(payload["invariants"]))
    _emit(cfg, "\n".join(lines), payload)
    return EXIT_OK


def _parse_degrees(text: str, config: ftcy.ConfigSpec) -> dict:
    legs = text.split("|")
    if len(legs) > len(config.lengths):
        raise UsageError("more degree legs than configuration legs")
    out = {}
    for i, leg in enumerate(legs, start=1):
        if not leg.strip():
            continue
        values = _lengths(leg)
        if len(values) > config.lengths[i - 1]:
            raise UsageError(f"leg {i} has more degrees than curves")
        for j, a in enumerate(values, start=1):
            out[(i, j)] = a
    return out


def cmd_cremona_from_degrees(args, cfg: CliConfig) -> int:
    args.max_degree = 0
    config = _config(args, cfg)
    degrees = _parse_degrees(args.degrees, config)
    try:
        cls = cremona.class_of_degrees(config, degrees)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    payload = {"class": str(cls)}
    text = str(cls)
    if args.reduce:
        outcome = cremona.reduce(cls)
        payload.update(_outcome_payload(cls, outcome))
        text += f" -> {outcome}"
    _emit(cfg, text, payload)
    return EXIT_OK


def cmd_selftest(args, cfg: CliConfig) -> int:
    echo = None if cfg.output == "json" else print
    results = acceptance.run_all(extended=args.extended, jobs=cfg.jobs, echo=echo)
    if cfg.output == "json":
        print(json.dumps([r.__dict__ for r in results], sort_keys=True))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


# -- parser --------------------------------------------------------------------------


def _add_config_args(p, shapes):
    p.add_argument("--config", dest="shape", choices=shapes, default="trivalent",
                   help="configuration shape")
    p.add_argument("--lengths", help="comma-separated leg lengths, e.g. 2,2,2")
    p.add_argument("--max-degree", type=int, help="total Novikov degree cutoff")
    p.add_argument("--cap", action="append", metavar="I,J=C", help="cap the degree on edge (i,j)")
    p.add_argument("--position-caps", metavar="C1,C2,...",
                   help="cap the degree of the j-th curve on every leg")
    p.add_argument("--flavor", choices=vertex.FLAVORS, default=vertex.MATH)


def _output_parent() -> argparse.ArgumentParser:
    # accepted before or after the subcommand; SUPPRESS keeps a later default from clobbering an earlier flag
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="same as --output json")
    p.add_argument("--output", choices=["text", "json"], default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    out = _output_parent()
    parser = argparse.ArgumentParser(
        prog="vertexcalc", description="Exact vertex and partition-function calculator.", parents=[out]
    )
    parser.add_argument("--jobs", type=int, help="worker processes for batch commands")
    parser.add_argument("--cache", help="amplitude cache file (JSON lines)")
    parser.add_argument("--config", dest="config_file", metavar="FILE", help="key = value settings file")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("amplitude", parents=[out], help="one vertex amplitude")
    p.add_argument("--flavor", choices=vertex.FLAVORS, default=vertex.PHYSICAL)
    for name in ("mu1", "mu2", "mu3"):
        p.add_argument(name, nargs="?", default="", help="partition such as 2,1 (empty for none)")
    p.set_defaults(func=cmd_amplitude)

    p = sub.add_parser("check-vertex-equality", parents=[out], help="compare both vertex flavors")
    p.add_argument("--max-size", type=int, default=3)
    p.set_defaults(func=cmd_check_vertex_equality)

    shapes = ["closed-vertex", "chain", "two-leg", "trivalent"]
    p = sub.add_parser("zfun", parents=[out], help="partition function series")
    _add_config_args(p, shapes)
    p.add_argument("--log", action="store_true", help="print the free energy instead")
    p.set_defaults(func=cmd_zfun)

    p = sub.add_parser("gv", parents=[out], help="Gopakumar-Vafa table")
    _add_config_args(p, shapes)
    p.add_argument("--max-genus", type=int)
    p.set_defaults(func=cmd_gv)

    p = sub.add_parser("cremona", help="curve classes on blowups of P^3")
    csub = p.add_subparsers(dest="cremona_command", required=True)
    r = csub.add_parser("reduce", parents=[out], help="reduce a class such as 3;1,1,1,1,1,1")
    r.add_argument("--class", dest="curve_class", required=True)
    r.add_argument("--max-growth", type=int, default=0)
    r.add_argument("--max-genus", type=int)
    r.set_defaults(func=cmd_cremona_reduce)
    f = csub.add_parser("from-degrees", parents=[out], help="class of a degree vector")
    f.add_argument("--config", dest="shape", choices=["chain", "trivalent", "closed-vertex"], default="trivalent")
    f.add_argument("--lengths")
    f.add_argument("--degrees", required=True, help="per-leg degrees separated by |, e.g. 1,1|1,0|1,1")
    f.add_argument("--reduce", action="store_true")
    f.set_defaults(func=cmd_cremona_from_degrees, cap=None, position_caps=None)

    p = sub.add_parser("selftest", parents=[out], help="run the acceptance suite")
    p.add_argument("--extended", action="store_true", help="vertex identity up to leg size 4")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    cache = None
    try:
        cfg = resolve_config(args)
        if cfg.cache_path:
            cache = AmplitudeCache(cfg.cache_path)
            cache.seed()
        code = args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except gv.GvIntegralityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (DomainError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if cache is not None:
        cache.flush_memo()
    return code


if __name__ == "__main__":
    sys.exit(main())
