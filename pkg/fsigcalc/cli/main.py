# fsigcalc/cli/main.py
"""
Command-line interface for fsigcalc.

Usage:
    fsigcalc basis --m 2 --n 2 --k 3                 # closed Groebner basis
    fsigcalc length --k 3 --m 2 --n 2 --route all    # colength from every route
    fsigcalc fsig --a 1 --b 1 --c 1 --p 7 --r 3      # psi_7(3/7)
    fsigcalc limit --a 1 --b 0 --c 1 --u 2 --v 3     # limit function as JSON
    fsigcalc nvol --a 1 --b 1 --c 1 --t 1/2          # normalized volume
    fsigcalc sweep --a 1 --b 1 --c 1 --primes 31,37  # convergence table
    fsigcalc verify --suite all --max-size 6         # oracle cross-checks
"""
import functools
import json
import logging
import sys
from fractions import Fraction
from typing import Optional, Tuple

import click
from sympy import isprime, nextprime, primerange

from fsigcalc import __version__
from fsigcalc.algorithms.closed_basis import IdealSpec, closed_groebner
from fsigcalc.algorithms.lengths import length_general, length_oracle, length_simple, length_wlp
from fsigcalc.arith.field import PrimeField, parse_field
from fsigcalc.cli.sweep import FORMATS, SweepConfig, render, run_sweep
from fsigcalc.cli.verify import SUITES, run_verify
from fsigcalc.config import DEFAULT_GRID_COUNT, DEFAULT_VERIFY_PRIMES
from fsigcalc.exceptions import DomainError, FsigError, VerificationFailure
from fsigcalc.fsig.nvol import corollary_b_check, nvol_simple
from fsigcalc.fsig.signature import empirical_fsig, fsig_at_p, limit_fsig_general
from fsigcalc.oracle.buchberger import buchberger, ideal_generators

logger = logging.getLogger(__name__)

__all__ = [
    "cli",
]

EXIT_VERIFICATION = 1
EXIT_USAGE = 2


class FieldType(click.ParamType):
    """`q` or `p=<prime>`"""
    name = "field"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_field(value)
        except DomainError as e:
            self.fail(str(e), param, ctx)


class RationalType(click.ParamType):
    """Exact rational from `p/q` or a decimal string."""
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


class PrimeListType(click.ParamType):
    """Comma-separated primes, e.g. `31,101`."""
    name = "primes"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            primes = tuple(int(part) for part in str(value).split(",") if part.strip())
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)
        bad = [p for p in primes if not isprime(p)]
        if bad:
            self.fail(f"not prime: {bad}", param, ctx)
        return primes


FIELD = FieldType()
RATIONAL = RationalType()
PRIMES = PrimeListType()


def handle_errors(func):
    """Map library exceptions onto the exit-code contract."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except VerificationFailure as e:
            click.echo(f"FAIL: {e}", err=True)
            sys.exit(EXIT_VERIFICATION)
        except FsigError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def ideal_options(func):
    """--k/--m/--n for (x^m, y^n, (x+y)^k) or --M/--N/--K/--a/--b/--c for the general ideal."""
    options = [
        click.option("--k", "small_k", type=int, default=None, help="Exponent of (x+y), >= 0"),
        click.option("--m", "small_m", type=int, default=None, help="Power of x"),
        click.option("--n", "small_n", type=int, default=None, help="Power of y"),
        click.option("--M", "big_m", type=int, default=None, help="Power of x (general ideal)"),
        click.option("--N", "big_n", type=int, default=None, help="Power of y (default M)"),
        click.option("--K", "big_k", type=int, default=None, help="Outer exponent (default 1; 0 gives the unit ideal)"),
        click.option("--a", "a", type=int, default=None, help="Exponent of x in f"),
        click.option("--b", "b", type=int, default=None, help="Exponent of y in f"),
        click.option("--c", "c", type=int, default=None, help="Exponent of (x+y) in f"),
        click.option("--field", "field", type=FIELD, default="q", show_default=True,
                     help="Coefficient field: q or p=<prime>"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def resolve_spec(small_k, small_m, small_n, big_m, big_n, big_k, a, b, c, field) -> Tuple[IdealSpec, bool]:
    """Returns the IdealSpec and whether it came from the (k, m, n) flags."""
    simple = (small_k, small_m, small_n)
    general = (big_m, big_n, big_k, a, b, c)
    if any(v is not None for v in simple):
        if any(v is not None for v in general):
            raise click.UsageError("use either --k/--m/--n or --M/--N/--K/--a/--b/--c, not both")
        if any(v is None for v in simple):
            raise click.UsageError("--k, --m and --n are all required")
        return IdealSpec.simple(small_k, small_m, small_n, field), True
    if big_m is None:
        raise click.UsageError("give --k/--m/--n or at least --M")
    return IdealSpec(
        M=big_m,
        N=big_m if big_n is None else big_n,
        K=1 if big_k is None else big_k,
        a=a or 0,
        b=b or 0,
        c=1 if c is None else c,
        field=field,
    ), False


@click.group()
@click.version_option(version=__version__, prog_name="fsigcalc")
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
def cli(verbose: bool):
    """
    F-signature toolkit for x^a y^b (x^u + y^v)^c: Groebner bases,
    colengths, F-signature values and their limits, all in exact arithmetic.
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


@cli.command()
@ideal_options
@click.option("--oracle", is_flag=True, help="Use Buchberger instead of the closed form")
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@handle_errors
def basis(small_k, small_m, small_n, big_m, big_n, big_k, a, b, c, field, oracle, output_json):
    """
    Groebner basis and minimal initial ideal of (x^M, y^N, f^K).

    Examples:

        fsigcalc basis --m 2 --n 2 --k 3

        fsigcalc basis --m 2 --n 2 --k 3 --oracle --field p=31
    """
    spec, _ = resolve_spec(small_k, small_m, small_n, big_m, big_n, big_k, a, b, c, field)
    result = buchberger(ideal_generators(spec)) if oracle else closed_groebner(spec)
    if output_json:
        data = result.to_dict()
        data['spec'] = spec.to_dict()
        data['colength'] = result.colength()
        click.echo(json.dumps(data, indent=2))
        return
    click.echo(f"case: {result.case}")
    for line in result.render():
        click.echo(line)
    click.echo("lt_ideal: " + ", ".join(m.render() for m in result.lt_ideal))


def _wlp_prime(spec: IdealSpec) -> int:
    if isinstance(spec.field, PrimeField):
        return spec.field.p
    return int(nextprime(spec.K + spec.M + spec.N - 1))


@cli.command()
@ideal_options
@click.option("--route", type=click.Choice(["formula", "wlp", "oracle", "all"]), default="formula",
              show_default=True)
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@handle_errors
def length(small_k, small_m, small_n, big_m, big_n, big_k, a, b, c, field, route, output_json):
    """
    Colength of (x^M, y^N, f^K).

    Examples:

        fsigcalc length --k 3 --m 2 --n 2 --route all

        fsigcalc length --M 5 --K 1 --a 1 --b 1 --c 1
    """
    spec, is_simple = resolve_spec(small_k, small_m, small_n, big_m, big_n, big_k, a, b, c, field)
    results = []
    if route in ("formula", "all"):
        if is_simple:
            results.append(length_simple(spec.K, spec.M, spec.N, spec.field))
        else:
            results.append(length_general(spec))
    if route in ("wlp", "all") and is_simple:
        results.append(length_wlp(spec.K, spec.M, spec.N, _wlp_prime(spec)))
    elif route == "wlp":
        raise click.UsageError("the wlp route needs --k/--m/--n")
    if route in ("oracle", "all"):
        results.append(length_oracle(spec))
    values = {r.value for r in results}
    if len(values) > 1:
        raise VerificationFailure("length routes agree", spec.to_dict(),
                                  results[0].value, [r.value for r in results])
    if output_json:
        click.echo(json.dumps({'spec': spec.to_dict(), 'results': [r.to_dict() for r in results]}, indent=2))
        return
    if route != "all":
        click.echo(results[0].value)
        return
    for r in results:
        click.echo(f"{r.route.value}: {r.value} (case {r.case_tag})")


@cli.command()
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--c", type=int, required=True)
@click.option("--p", type=int, required=True, help="Prime characteristic")
@click.option("--r", type=int, required=True, help="Numerator of t = r/p")
@handle_errors
def fsig(a, b, c, p, r):
    """
    Exact F-signature psi_p(r/p) of x^a y^b (x+y)^c.

    Example:

        fsigcalc fsig --a 1 --b 1 --c 1 --p 7 --r 3
    """
    click.echo(str(fsig_at_p(a, b, c, p, r)))


@cli.command()
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--c", type=int, required=True)
@click.option("--u", type=int, default=1, show_default=True)
@click.option("--v", type=int, default=1, show_default=True)
@click.option("--t", type=RATIONAL, default=None, help="Evaluate at t instead of printing the function")
@handle_errors
def limit(a, b, c, u, v, t: Optional[Fraction]):
    """
    Limit F-signature of x^a y^b (x^u + y^v)^c as piecewise JSON.

    Example:

        fsigcalc limit --a 1 --b 0 --c 1 --u 2 --v 3
    """
    fn = limit_fsig_general(a, b, c, u, v)
    if t is not None:
        click.echo(str(fn(t)))
        return
    click.echo(json.dumps(fn.to_dict(), indent=2))


@cli.command()
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--c", type=int, required=True)
@click.option("--t", type=RATIONAL, required=True)
@click.option("--check-corollary", is_flag=True, help="Also compare nvol/4 with the limit F-signature")
@handle_errors
def nvol(a, b, c, t: Fraction, check_corollary: bool):
    """
    Normalized volume of the pair x^a y^b (x+y)^c at t, a >= b >= c.

    Example:

        fsigcalc nvol --a 1 --b 1 --c 1 --t 1/2 --check-corollary
    """
    click.echo(str(nvol_simple(a, b, c, t)))
    if check_corollary:
        holds = corollary_b_check(a, b, c, t)
        click.echo(f"corollary_b: {'true' if holds else 'false'}")
        if not holds:
            sys.exit(EXIT_VERIFICATION)


@cli.command()
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--c", type=int, required=True)
@click.option("--u", type=int, default=1, show_default=True)
@click.option("--v", type=int, default=1, show_default=True)
@click.option("--p", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--e", type=int, default=1, show_default=True, help="t = r / p^e")
@handle_errors
def empirical(a, b, c, u, v, p, r, e):
    """
    psi_p(r/p^e) of x^a y^b (x^u + y^v)^c from the weighted rank oracle.

    Example:

        fsigcalc empirical --a 1 --b 0 --c 1 --u 2 --v 3 --p 31 --r 5
    """
    click.echo(str(empirical_fsig(a, b, c, u, v, p, r, e)))


@cli.command()
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--c", type=int, required=True)
@click.option("--u", type=int, default=1, show_default=True)
@click.option("--v", type=int, default=1, show_default=True)
@click.option("--primes", type=PRIMES, default=None, help="Comma-separated primes")
@click.option("--p-min", type=int, default=None, help="Smallest prime of a range")
@click.option("--p-max", type=int, default=None, help="Largest prime of a range")
@click.option("--count", type=int, default=DEFAULT_GRID_COUNT, show_default=True, help="Grid points in (0, lambda)")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
@handle_errors
def sweep(a, b, c, u, v, primes, p_min, p_max, count, fmt, output):
    """
    Table of psi_p(floor(tp)/p) against the limit psi(t).

    Examples:

        fsigcalc sweep --a 1 --b 1 --c 1 --primes 31,37,41,43,47

        fsigcalc sweep --a 1 --b 0 --c 1 --u 2 --v 3 --p-min 31 --p-max 101 --format json
    """
    if primes is None:
        if p_min is None or p_max is None:
            raise click.UsageError("give --primes or both --p-min and --p-max")
        primes = tuple(int(p) for p in primerange(p_min, p_max + 1))
    config = SweepConfig(a=a, b=b, c=c, u=u, v=v, primes=primes, count=count, fmt=fmt, output=output)
    text = render(config, run_sweep(config))
    if output:
        with open(output, "w", newline="") as handle:
            handle.write(text)
        logger.info("wrote %s", output)
    else:
        click.echo(text, nl=False)


@cli.command()
@click.option("--suite", type=click.Choice(SUITES + ("all",)), default="all", show_default=True)
@click.option("--max-size", type=int, default=6, show_default=True)
@click.option("--primes", type=PRIMES, default=",".join(map(str, DEFAULT_VERIFY_PRIMES)), show_default=True)
@handle_errors
def verify(suite, max_size, primes):
    """
    Cross-check closed forms against the Buchberger and rank oracles.

    Example:

        fsigcalc verify --suite length --max-size 10 --primes 31,101
    """
    report = run_verify(suite, max_size, primes)
    for line in report.render():
        click.echo(line)


def main():
    cli()


if __name__ == "__main__":
    main()
