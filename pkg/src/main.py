"""
Main entry point for harmonica
Provides the CLI commands and maps outcomes to exit codes
"""

import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import click

from src.config.run_config import Command, RunConfig, load_config, parse_pair
from src.core.errors import ConfigError, HarmonicaError
from src.domain.aumann import aumann_mean_detailed, check_hh_scalar, check_hh_setvalued
from src.domain.convexity import (
    check_scalar,
    check_svf,
    check_svf_setwise,
    is_harmonic_m_convex_set,
    is_m_convex_set,
    is_starshaped,
)
from src.domain.quadrature import integrate_weighted
from src.domain.reports import ConvexityReport, HHVerdict, Verdict
from src.domain.sampling import HarmonicParams
from src.domain.setvalued import (
    BoxFn,
    IntervalFn,
    cartesian,
    from_endpoints,
    from_scaled_set,
    linear_combo,
    product_fn,
    union_fn,
)
from src.expr.parser import parse
from src.persistence.report_writer import ReportWriter, build_payload, error_payload
from src.utils.logger import get_logger, set_level

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_PAIR_FIELDS = ("domain", "set", "set_a", "set_b", "ab")

Outcome = Tuple[Dict[str, Any], int]


# Command bodies

def _params(rc: RunConfig) -> HarmonicParams:
    return HarmonicParams(
        m=rc.m if rc.m is not None else 1.0,
        alpha=rc.alpha,
        tol=rc.tol,
        grid_t=rc.grid_t,
        trials=rc.trials,
        seed=rc.seed,
        samples=rc.samples,
    )


def _verdict_code(certified: bool) -> int:
    return EXIT_OK if certified else EXIT_FAILED


def _endpoint_fn(rc: RunConfig, lower: str, upper: str) -> IntervalFn:
    return from_endpoints(parse(lower), parse(upper), rc.interval("domain"), tol=rc.tol)


def _run_check_fn(rc: RunConfig) -> Outcome:
    report = check_scalar(parse(rc.f), rc.interval("domain"), _params(rc))
    return report.to_dict(), _verdict_code(report.certified)


def _run_check_svf(rc: RunConfig) -> Outcome:
    if rc.f is not None:
        F = from_scaled_set(parse(rc.f), rc.interval("set"), rc.interval("domain"), tol=rc.tol)
    else:
        F = _endpoint_fn(rc, rc.f1, rc.f2)
    rc.require("m")
    params = _params(rc)

    if (rc.set_a is None) != (rc.set_b is None):
        missing = "set_b" if rc.set_b is None else "set_a"
        raise ConfigError(missing, "set_a and set_b are given together")
    if rc.set_a is not None:
        report = check_svf_setwise(F, rc.interval("set_a"), rc.interval("set_b"), params)
    else:
        report = check_svf(F, params)
    body = {"function": F.describe()}
    body.update(report.to_dict())
    return body, _verdict_code(report.certified)


def _run_check_set(rc: RunConfig) -> Outcome:
    S = rc.interval("set")
    if rc.harmonic:
        report = is_harmonic_m_convex_set(S, rc.m, _params(rc))
    else:
        report = is_m_convex_set(S, rc.m, _params(rc))
    return report.to_dict(), _verdict_code(report.certified)


def _run_starshaped(rc: RunConfig) -> Outcome:
    report = is_starshaped(rc.interval("set"), _params(rc))
    return report.to_dict(), _verdict_code(report.certified)


def _run_integrate(rc: RunConfig) -> Outcome:
    domain = rc.interval("domain")
    a, b = domain.lo, domain.hi
    if rc.f is not None:
        result = integrate_weighted(parse(rc.f), a, b)
        body = {"value": result.value}
        body.update({k: v for k, v in result.to_dict().items() if k != "value"})
        body["weighted_mean"] = a * b / (b - a) * result.value
        return body, EXIT_OK

    F = _endpoint_fn(rc, rc.f1, rc.f2)
    result = aumann_mean_detailed(F, a, b)
    body = {
        "value": result.mean,
        "weight": result.weight,
        "error_bound": result.error_bound,
        "lower": result.lower.to_dict(),
        "upper": result.upper.to_dict(),
    }
    return body, EXIT_OK


def _run_hh(rc: RunConfig) -> Outcome:
    F = _endpoint_fn(rc, rc.f1, rc.f2)
    span = rc.interval("ab") or F.domain
    report = check_hh_setvalued(F, span.lo, span.hi, rc.m, rc.tol)
    return report.to_dict(), _verdict_code(report.verdict is HHVerdict.HOLDS_WITHIN_TOL)


def _run_hh_scalar(rc: RunConfig) -> Outcome:
    span = rc.interval("ab") or rc.interval("domain")
    result = check_hh_scalar(parse(rc.f), span.lo, span.hi, rc.m, rc.tol)
    return result.to_dict(), _verdict_code(result.holds)


def _value_at(fn: Any, x: float) -> Dict[str, Any]:
    return {"x": x, "value": fn(x)}


def _run_ops(rc: RunConfig) -> Outcome:
    F = _endpoint_fn(rc, rc.f1, rc.f2)
    G = _endpoint_fn(rc, rc.g1, rc.g2)
    if rc.op == "union":
        result: Any = union_fn(F, G, tol=rc.tol)
    elif rc.op == "combo":
        result = linear_combo(rc.lam, F, G)
    elif rc.op == "product":
        result = product_fn(F, G)
    else:
        result = cartesian(F, G)

    domain = F.domain
    points = rc.at or [domain.lo, domain.midpoint, domain.hi]
    if isinstance(result, BoxFn):
        description: Dict[str, Any] = {"first": result.first.describe(), "second": result.second.describe()}
    else:
        description = result.describe()
    body: Dict[str, Any] = {
        "result": description,
        "values": [_value_at(result, x) for x in points],
    }
    if not rc.check:
        return body, EXIT_OK

    params = _params(rc)
    if isinstance(result, BoxFn):
        reports = {"first": check_svf(result.first, params), "second": check_svf(result.second, params)}
        certified = all(r.certified for r in reports.values())
        body["verdict"] = (Verdict.CERTIFIED_ON_SAMPLES if certified else Verdict.FALSIFIED).value
        body["check"] = {name: r.to_dict() for name, r in reports.items()}
    else:
        report: ConvexityReport = check_svf(result, params)
        certified = report.certified
        body["verdict"] = report.verdict.value
        body["check"] = report.to_dict()
    return body, _verdict_code(certified)


_HANDLERS: Dict[Command, Callable[[RunConfig], Outcome]] = {
    Command.CHECK_FN: _run_check_fn,
    Command.CHECK_SVF: _run_check_svf,
    Command.CHECK_SET: _run_check_set,
    Command.STARSHAPED: _run_starshaped,
    Command.INTEGRATE: _run_integrate,
    Command.HH: _run_hh,
    Command.HH_SCALAR: _run_hh_scalar,
    Command.OPS: _run_ops,
}


def _inputs(rc: RunConfig) -> Dict[str, Any]:
    """Snapshot of the fields that shaped a run"""
    inputs: Dict[str, Any] = {}
    for name in ("f", "f1", "f2", "g1", "g2", *_PAIR_FIELDS, "m", "alpha", "tol",
                 "samples", "grid_t", "trials", "op", "lam"):
        value = getattr(rc, name)
        if value is not None:
            inputs[name] = list(value) if name in _PAIR_FIELDS else value
    if rc.at:
        inputs["at"] = list(rc.at)
    if rc.harmonic:
        inputs["harmonic"] = True
    if rc.check:
        inputs["check"] = True
    return inputs


def execute(command: Command, options: Dict[str, Any]) -> int:
    """
    Run one command from raw CLI options and write its report

    Args:
        command: Subcommand to run
        options: Flag values; pair-valued flags are still 'a:b' strings

    Returns:
        Process exit code
    """
    config_path = options.pop("config", None)
    writer = ReportWriter(
        output=options.get("output") if options.get("output") in ("json", "text") else "json",
        out_path=options.get("out_path"),
    )
    logger.add_context(command=command.value)
    try:
        overrides = dict(options)
        for name in _PAIR_FIELDS:
            if isinstance(overrides.get(name), str):
                overrides[name] = parse_pair(overrides[name], name)
        overrides["command"] = command
        deferred = ("m",) if command is Command.CHECK_SVF else ()
        rc = load_config(config_path, overrides, deferred=deferred)
        writer = ReportWriter(output=rc.output, out_path=rc.out_path)

        logger.debug(f"Running {command.value}")
        body, code = _HANDLERS[command](rc)
        writer.write(build_payload(command.value, _inputs(rc), body, rc.seed))
        return code
    except HarmonicaError as e:
        logger.error(f"{command.value} failed: {e}")
        writer.write(error_payload(command.value, e))
        return e.exit_code
    finally:
        logger.clear_context()


# CLI surface

def common_options(func: Callable) -> Callable:
    """Options shared by every command"""
    options = [
        click.option('--config', 'config', type=click.Path(dir_okay=False), default=None,
                      help='key=value run configuration file'),
        click.option('--domain', default=None, help='Domain a:b with 0 < a < b'),
        click.option('--m', 'm', type=float, default=None, help='Harmonic m in (0, 1]'),
        click.option('--alpha', type=float, default=None, help='Exponent alpha in [0, 1]'),
        click.option('--tol', type=float, default=None, help='Inclusion tolerance'),
        click.option('--samples', type=int, default=None, help='Grid points along x and y'),
        click.option('--grid-t', 'grid_t', type=int, default=None, help='Grid points along t'),
        click.option('--trials', type=int, default=None, help='Random triples after the grid'),
        click.option('--seed', type=int, default=None, help='Seed of the random triples'),
        click.option('--output', type=click.Choice(['json', 'text']), default=None,
                     help='Report format'),
        click.option('--out', 'out_path', default=None, help='Write the report to a file'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.option('--log-level', default=None, help='Log level for stderr output')
def cli(log_level):
    """Harmonic m-convexity toolkit for interval-valued functions"""
    if log_level:
        set_level(log_level)


@cli.command('check-fn')
@click.option('--f', 'f', default=None, help='Scalar function of x')
@common_options
def check_fn_command(**options):
    """Certify harmonic (alpha, m)-convexity of a scalar function"""
    return execute(Command.CHECK_FN, options)


@cli.command('check-svf')
@click.option('--f1', default=None, help='Lower endpoint')
@click.option('--f2', default=None, help='Upper endpoint')
@click.option('--f', 'f', default=None, help='Scaling function for F(x) = f(x) * SET')
@click.option('--set', 'set', default=None, help='Fixed set lo:hi for --f')
@click.option('--set-a', 'set_a', default=None, help='Set A for the set-wise check')
@click.option('--set-b', 'set_b', default=None, help='Set B for the set-wise check')
@common_options
def check_svf_command(**options):
    """Certify harmonic m-convexity of an interval-valued function"""
    return execute(Command.CHECK_SVF, options)


@cli.command('check-set')
@click.option('--set', 'set', default=None, help='Interval lo:hi')
@click.option('--harmonic', is_flag=True, default=False, help='Check harmonic m-convexity instead')
@common_options
def check_set_command(**options):
    """Check m-convexity of an interval"""
    return execute(Command.CHECK_SET, options)


@cli.command('starshaped')
@click.option('--set', 'set', default=None, help='Interval lo:hi')
@common_options
def starshaped_command(**options):
    """Check tS inside S for t in (0, 1]"""
    return execute(Command.STARSHAPED, options)


@cli.command('integrate')
@click.option('--f', 'f', default=None, help='Integrate f(x) / x^2')
@click.option('--f1', default=None, help='Lower endpoint for the Aumann mean')
@click.option('--f2', default=None, help='Upper endpoint for the Aumann mean')
@common_options
def integrate_command(**options):
    """Integrate against the 1/x^2 kernel"""
    return execute(Command.INTEGRATE, options)


@cli.command('hh')
@click.option('--f1', default=None, help='Lower endpoint')
@click.option('--f2', default=None, help='Upper endpoint')
@click.option('--ab', default=None, help='Integration interval a:b (default: the domain)')
@common_options
def hh_command(**options):
    """Check the set-valued Hermite-Hadamard inclusions"""
    return execute(Command.HH, options)


@cli.command('hh-scalar')
@click.option('--f', 'f', default=None, help='Scalar function of x')
@click.option('--ab', default=None, help='Integration interval a:b (default: the domain)')
@common_options
def hh_scalar_command(**options):
    """Check the scalar Hermite-Hadamard inequality"""
    return execute(Command.HH_SCALAR, options)


@cli.command('ops')
@click.option('--op', type=click.Choice(['union', 'combo', 'product', 'cartesian']), default=None)
@click.option('--f1', default=None, help='Lower endpoint of F')
@click.option('--f2', default=None, help='Upper endpoint of F')
@click.option('--g1', default=None, help='Lower endpoint of G')
@click.option('--g2', default=None, help='Upper endpoint of G')
@click.option('--lam', type=float, default=None, help='Scalar for combo')
@click.option('--at', 'at', type=float, multiple=True, help='Evaluation point (repeatable)')
@click.option('--check', is_flag=True, default=False, help='Run check-svf on the result')
@common_options
def ops_command(**options):
    """Combine two interval-valued functions"""
    options["at"] = list(options.get("at") or [])
    return execute(Command.OPS, options)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit code

    Args:
        argv: Arguments without the program name

    Returns:
        0 certified or holds, 1 falsified or violated, 2 usage, 3 numeric
    """
    try:
        result = cli.main(args=argv, prog_name="harmonica", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        logger.error("Aborted")
        return EXIT_USAGE
    if isinstance(result, int):
        return result
    return EXIT_OK


def main():
    """Console entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
