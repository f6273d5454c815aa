"""Verification suites command."""
import logging
from typing import List

from ...services import extremal, sweeps
from ...services.extremal import TheoremReport
from ...utils import serialization
from ...utils.exceptions import InvalidInputError, VerificationFailure
from .common import load_pointset, run_config, version, write_output

logger = logging.getLogger(__name__)

SUITES = ['theorem1', 'schur', 'cover', 'kst', 'all']
DEFAULT_RADII = [0.72, 0.8, 1.0, 2.0]


def _theorem1(args, cfg) -> List[TheoremReport]:
    if args.input:
        ps = load_pointset(args.input)
        return [extremal.verify_theorem1(ps, cfg.epsilon, cfg.chromatic_cap, cfg.odd_cycle_cap, cfg.hull_samples)]
    reports = []
    for r in args.r or DEFAULT_RADII:
        reports.extend(sweeps.theorem1_sweep(args.trials, r, args.n_max, cfg.seed, cfg.threads, cfg.epsilon))
    return reports


def _cover(args, cfg) -> List[TheoremReport]:
    if args.input:
        return [extremal.verify_cover(load_pointset(args.input), cfg.epsilon, cfg.hull_samples, cfg.odd_cycle_cap)]
    reports = []
    for r in args.r or DEFAULT_RADII:
        reports.extend(sweeps.cover_sweep(args.trials, r, args.n_max, cfg.seed, cfg.threads, cfg.epsilon,
                                          cfg.hull_samples))
    return reports


def _schur(args, cfg) -> List[TheoremReport]:
    if args.input:
        ps = load_pointset(args.input)
        return [extremal.verify_schur(ps, cfg.epsilon), extremal.verify_d5_cliques(ps, cfg.epsilon)]
    n_max = min(args.n_max, 10) if args.n_max else 10
    return sweeps.schur_sweep(args.trials, n_max, cfg.seed, cfg.threads, args.anneal_steps or 0, cfg.epsilon)


def _kst(args, cfg) -> List[TheoremReport]:
    return [extremal.verify_kst(args.n or 52, args.trials, cfg.seed, args.s)]


def _all(args, cfg) -> List[TheoremReport]:
    if args.input:
        return extremal.report_suite(load_pointset(args.input), cfg.epsilon)
    reports = _theorem1(args, cfg) + _cover(args, cfg) + _schur(args, cfg) + _kst(args, cfg)
    for r in args.r or DEFAULT_RADII:
        if r > (3 / 8) ** 0.5:
            reports.extend(sweeps.lemma3_sweep(args.trials, r, args.n_max, cfg.seed, cfg.threads, cfg.epsilon))
    reports.append(extremal.verify_counterexamples())
    return reports


RUNNERS = {'theorem1': _theorem1, 'schur': _schur, 'cover': _cover, 'kst': _kst, 'all': _all}


def verify_command(args) -> None:
    """Run a verification suite and write the aggregated report.

    Precondition-violating instances are counted as skipped. Any failed claim
    makes the command raise VerificationFailure after the report is written.

    Args:
        args: Command line arguments containing suite, input, trials, r, n_max and format
    """
    if args.suite not in RUNNERS:
        raise InvalidInputError(f"Unknown suite '{args.suite}'; use one of {', '.join(SUITES)}")
    if args.trials < 1:
        raise InvalidInputError(f"--trials must be positive, got {args.trials}")
    cfg = run_config(args)
    reports = RUNNERS[args.suite](args, cfg)
    failed = [r for r in reports if not r.passed]
    skipped = [r for r in reports if not r.hypothesis_ok]
    summary = {"reports": len(reports), "failed": len(failed), "skipped": len(skipped)}
    logger.info("Suite %s: %d reports, %d failed, %d skipped", args.suite, *summary.values())

    if args.format == 'csv':
        write_output(args, serialization.sweep_csv(reports, cfg.to_dict(), version()))
    else:
        write_output(args, serialization.dump_reports(reports, summary, cfg.to_dict(), version()))
    if failed:
        names = sorted({c.name for r in failed for c in r.failures})
        raise VerificationFailure(f"{len(failed)} of {len(reports)} reports failed: {', '.join(names)}")
