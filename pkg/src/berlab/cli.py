"""Command line interface: verify / explore / case."""

import argparse
import sys

from . import harness, report as reporting, rkhs, theorems
from .errors import BerlabError, ConfigInvalid

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2


def _parse_dims(text):
    dims = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            n1, n2 = part.lower().split("x")
            dims.append((int(n1), int(n2)))
        except ValueError as exc:
            raise ConfigInvalid(f"bad dims entry {part!r}, expected n1xn2") from exc
    if not dims:
        raise ConfigInvalid("empty dims list")
    return tuple(dims)


def _parse_families(text):
    families = []
    for tag in text.split(","):
        tag = tag.strip()
        if not tag:
            continue
        if tag == "gaussian":
            families.append(rkhs.KernelFamily("gaussian", {"sigma": 1.0}))
        else:
            families.append(rkhs.KernelFamily(tag))
    if not families:
        raise ConfigInvalid("empty kernel family list")
    return tuple(families)


def _read_config_file(path):
    """Flat ``key = value`` campaign description."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigInvalid(f"bad config line {raw.strip()!r}")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def build_config(args):
    """Merge config file values and CLI flags (flags win)."""
    config = harness.CampaignConfig()
    values = {}
    if getattr(args, "config", None):
        values = _read_config_file(args.config)
    if "master_seed" in values:
        config.master_seed = int(values["master_seed"])
    if "trials_per_checker" in values:
        config.trials_per_checker = int(values["trials_per_checker"])
    if "dims" in values:
        config.dims = _parse_dims(values["dims"])
    if "kernel" in values:
        config.kernel_families = _parse_families(values["kernel"])
    if "theorems" in values:
        config.checker_filter = tuple(
            t.strip() for t in values["theorems"].split(",") if t.strip())
    if "check_tol" in values:
        config.check_tol = float(values["check_tol"])
    if "out" in values:
        config.out = values["out"]
    if "format" in values:
        config.format = values["format"]

    if getattr(args, "seed", None) is not None:
        config.master_seed = args.seed
    if getattr(args, "trials", None) is not None:
        config.trials_per_checker = args.trials
    if getattr(args, "dims", None):
        config.dims = _parse_dims(args.dims)
    if getattr(args, "kernel", None):
        config.kernel_families = _parse_families(args.kernel)
    if getattr(args, "theorems", None):
        config.checker_filter = tuple(
            t.strip() for t in args.theorems.split(",") if t.strip())
    if getattr(args, "tol", None) is not None:
        config.check_tol = args.tol
    if getattr(args, "out", None):
        config.out = args.out
    if getattr(args, "format", None):
        config.format = args.format
    config.validate()
    return config


def _add_common(parser):
    parser.add_argument("--config", help="flat key=value campaign file")
    parser.add_argument("--seed", type=int, help="campaign master seed")
    parser.add_argument("--trials", type=int, help="trials per checker")
    parser.add_argument("--dims", help="comma list of block dims, e.g. 2x2,3x2")
    parser.add_argument("--kernel", help="comma list of kernel families")
    parser.add_argument("--theorems", help="comma list of checker ids")
    parser.add_argument("--tol", type=float, help="gating slack tolerance")
    parser.add_argument("--out", help="report output path")
    parser.add_argument("--format", choices=("json", "csv"), help="report format")


def cmd_verify(args):
    config = build_config(args)
    report = harness.run_campaign(config)
    for result in report.results:
        label = reporting.result_label(result)
        conv = result["convention"] or "-"
        status = "FAIL" if result["failures"] else "ok"
        print(f"{label:12s} {conv:6s} {result['mode']:13s} "
              f"trials={result['trials']:4d} failures={result['failures']:3d} "
              f"min_slack={result['min_slack']:+.3e} [{status}]")
    print(f"gating failures: {report.gating_failures} "
          f"(wall time {report.wall_time_ms} ms)")
    if config.out:
        reporting.emit_report(report, config.format, config.out)
        print(f"report written to {config.out}")
    else:
        sys.stdout.write(reporting.dumps_json(report.to_dict())
                         if config.format == "json"
                         else reporting.report_csv(report))
    return EXIT_VIOLATION if report.gating_failures else EXIT_OK


def cmd_explore(args):
    config = build_config(args)
    cert = harness.explore(config, args.theorem, args.budget)
    sys.stdout.write(reporting.dumps_json(cert.to_dict()))
    violated = cert.mode == theorems.GATING and not cert.holds
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_case(args):
    # here --seed is the per-trial seed recorded in a report witness
    if args.seed is None:
        raise ConfigInvalid("case needs --seed (the per-trial seed)")
    config = build_config(args)
    draw = harness.draw_trial(args.theorem, args.seed, config)
    certs = harness.evaluate_draw(draw, config)
    sys.stdout.write(reporting.dumps_json([c.to_dict() for c in certs]))
    return EXIT_OK


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="berlab",
        description="Berezin-number inequality verification campaigns")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification campaign")
    _add_common(p_verify)

    p_explore = sub.add_parser("explore", help="adversarial slack search")
    _add_common(p_explore)
    p_explore.add_argument("--theorem", required=True)
    p_explore.add_argument("--budget", type=int, required=True)

    p_case = sub.add_parser("case", help="reproduce one trial certificate")
    _add_common(p_case)
    p_case.add_argument("--theorem", required=True)

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "explore":
            return cmd_explore(args)
        return cmd_case(args)
    except (BerlabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
