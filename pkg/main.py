#!/usr/bin/env python3
import csv
import io
import json
import logging
import os

import click
from jinja2 import Template

from config import DEFAULT_ORDER, jobs_from_env, order_from_env
from datafilereaders.series_file_reader import SeriesFileReader, format_series
from partitions.colored import ak_series, ak_series_mod
from qseries.dissection import component, extract
from qseries.errors import ConfigurationError, EtaSyntaxError, SeriesError
from qseries.etaparser import parse_eta
from qseries.special import eval_eta
from verification.checkers import run_check
from verification.registry import build_registry, parse_check_spec, parse_param_bounds
from verification.suite import all_passed, run_suite

logger = logging.getLogger(__name__)

# CONSTANTS
FORMATS = ("text", "json", "csv")
TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "templates")
USAGE_EXIT = 2
FAIL_EXIT = 1


class CliConfig:
    """Options shared by every subcommand; flags beat the environment, the environment beats the defaults."""

    def __init__(self, order=None, modulus=None, fmt="text", out=None):
        if order is None:
            order = order_from_env()
        if not isinstance(order, int) or order < 0:
            raise ConfigurationError(f"order must be a non-negative integer, got {order!r}")
        if modulus is not None and modulus < 2:
            raise ConfigurationError(f"modulus must be at least 2, got {modulus}")
        if fmt not in FORMATS:
            raise ConfigurationError(f"unknown format {fmt!r}")
        self._order = order
        self._modulus = modulus
        self._fmt = fmt
        self._out = out

    @property
    def order(self) -> int:
        return self._order

    @property
    def modulus(self):
        return self._modulus

    @property
    def fmt(self) -> str:
        return self._fmt

    @property
    def out(self):
        return self._out

    def emit(self, text: str):
        if self._out is None:
            click.echo(text, nl=not text.endswith("\n"))
            return
        logger.debug("writing output to %s", self._out)
        with open(self._out, mode="w", encoding="utf-8") as out_file:
            out_file.write(text)

    def __repr__(self):
        return f"<CliConfig order {self._order}, mod {self._modulus}, {self._fmt}>"


def render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", "status", "order", "range_checked", "n", "index", "residue", "elapsed_ms"])
        for r in reports:
            c = r.counterexample
            writer.writerow(
                [r.report_id, r.status, r.order_used, r.range_checked]
                + ([c.n, c.index, c.residue] if c is not None else ["", "", ""])
                + [r.elapsed_ms]
            )
        return out.getvalue()
    with open(os.path.join(TEMPLATE_DIR, "report_table.jinja"), "r") as template_file:
        table_template = Template(template_file.read())
    return (
        table_template.render(
            reports=reports,
            show_statements=len(reports) == 1,
            passed=sum(1 for r in reports if r.status == "pass"),
            failed=sum(1 for r in reports if r.status == "fail"),
            skipped=sum(1 for r in reports if r.status == "skipped"),
        )
        + "\n"
    )


def _fail_usage(err):
    if isinstance(err, EtaSyntaxError):
        click.echo(f"error: {err.reason}", err=True)
        click.echo(err.caret(), err=True)
    else:
        click.echo(f"error: {err}", err=True)
    raise SystemExit(USAGE_EXIT)


def common_options(with_modulus=True):
    def decorate(command):
        command = click.option("--out", type=click.Path(dir_okay=False), default=None, help="write to a file")(command)
        command = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)(
            command
        )
        if with_modulus:
            command = click.option("--mod", "-m", "modulus", type=int, default=None, help="reduce mod m")(command)
        command = click.option(
            "--order", "-N", type=int, default=None, help=f"truncation order (default {DEFAULT_ORDER})"
        )(command)
        return command

    return decorate


def _config(order, modulus, fmt, out):
    try:
        return CliConfig(order, modulus, fmt, out)
    except ConfigurationError as err:
        _fail_usage(err)


@click.group(name="parity-forge")
@click.option("--verbose", "-v", is_flag=True, help="log every check")
def cli(verbose):
    """Truncated q-series engine and verification harness for colored partition congruences."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.argument("quotient")
@common_options()
def expand(quotient, order, modulus, fmt, out):
    """Coefficients of an eta-quotient such as f2^4/f1^5."""
    config = _config(order, modulus, fmt, out)
    try:
        series = eval_eta(parse_eta(quotient), config.order, config.modulus)
    except (EtaSyntaxError, SeriesError) as err:
        _fail_usage(err)
    config.emit(format_series(series, config.fmt))


@cli.command()
@click.argument("k", type=int)
@common_options()
def ak(k, order, modulus, fmt, out):
    """a_k(0..N), optionally mod m."""
    config = _config(order, modulus, fmt, out)
    try:
        if config.modulus is None:
            series = ak_series(k, config.order)
        else:
            series = ak_series_mod(k, config.modulus, config.order)
    except SeriesError as err:
        _fail_usage(err)
    config.emit(format_series(series, config.fmt))


@cli.command()
@click.option("--in", "in_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-m", "stride", required=True, type=int, help="progression modulus")
@click.option("-r", "residue", required=True, type=int, help="residue class")
@click.option("--component", "keep_exponents", is_flag=True, help="keep the original exponents")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def dissect(in_file, stride, residue, keep_exponents, fmt, out):
    """Extract the terms of a series file on exponents == r (mod m)."""
    try:
        series = SeriesFileReader(in_file).read_series_file()
        config = CliConfig(series.order, None, fmt, out)
        if keep_exponents:
            series = component(series, stride, residue)
        else:
            series = extract(series, stride, residue)
    except (SeriesError, ConfigurationError) as err:
        _fail_usage(err)
    config.emit(format_series(series, config.fmt))


@cli.command()
@click.argument("spec")
@common_options(with_modulus=False)
def check(spec, order, fmt, out):
    """Check one congruence, e.g. "ak=5 A=5 B=3 mod=5"."""
    config = _config(order, None, fmt, out)
    try:
        entry = parse_check_spec(spec)
    except ConfigurationError as err:
        _fail_usage(err)
    report = run_check(entry, config.order)
    config.emit(render_reports([report], config.fmt))
    if report.status == "fail":
        raise SystemExit(FAIL_EXIT)


@cli.command()
@click.argument("suite_id")
@click.option("--params", default="", help="parameter ranges, e.g. alpha=0..2,j=0..2,t=0..8")
@click.option("--jobs", type=int, default=None, help="worker processes")
@common_options(with_modulus=False)
def suite(suite_id, params, jobs, order, fmt, out):
    """Run a named suite (or a single registry id)."""
    config = _config(order, None, fmt, out)
    try:
        bounds = parse_param_bounds(params)
        jobs = jobs_from_env() if jobs is None else jobs
        if jobs < 1:
            raise ConfigurationError(f"--jobs must be at least 1, got {jobs}")
        reports = run_suite(suite_id, config.order, bounds, jobs)
    except ConfigurationError as err:
        _fail_usage(err)
    config.emit(render_reports(reports, config.fmt))
    if not all_passed(reports):
        raise SystemExit(FAIL_EXIT)


@cli.command(name="list")
@click.option("--order", "-N", type=int, default=None)
def list_entries(order):
    """Every registry id with its suite and statement."""
    config = _config(order, None, "text", None)
    registry = build_registry(config.order)
    for entry_id in registry.ids:
        click.echo(f"{entry_id}\t{registry.suite_of(entry_id)}\t{registry.entry(entry_id).statement}")


if __name__ == "__main__":
    cli()
