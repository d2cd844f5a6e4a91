"""Checks that evaluate registry entries to a truncation order and produce Reports.

A pass means "verified to order N": every coefficient the truncated series
knows satisfies the statement. It is evidence, not a proof.
"""
import logging
import time

from domainmodel.congruence_family import CongruenceFamily
from domainmodel.internal_congruence import InternalCongruence
from domainmodel.report import Counterexample, Report
from domainmodel.series_identity import IdentityGroup, SeriesIdentity
from qseries.dissection import extract
from qseries.series import reduce_mod

logger = logging.getLogger(__name__)


def _source_series(source, order, modulus, exact):
    if exact:
        return reduce_mod(source.evaluate(order), modulus)
    return source.evaluate(order, modulus)


def _finish(report_id, start, order, checked, counterexample, statement):
    status = "pass" if counterexample is None else "fail"
    report = Report(report_id, status, order, checked, counterexample, time.perf_counter() - start, statement)
    if counterexample is None:
        logger.debug("%s passed at order %d in %.1f ms", report_id, order, report.elapsed_ms)
    else:
        logger.warning("%s failed: %s", report_id, report.summary)
    return report


def _skipped(report_id, start, order, statement):
    logger.info("%s skipped: order %d reaches no index of the progression", report_id, order)
    return Report(report_id, "skipped", order, 0, None, time.perf_counter() - start, statement)


def check_vanishing(family: CongruenceFamily, order: int, exact: bool = False) -> Report:
    start = time.perf_counter()
    order = family.order if family.order is not None else order
    if family.offset > order:
        return _skipped(family.family_id, start, order, family.statement)
    series = _source_series(family.source, order, family.modulus, exact)
    progression = extract(series, family.stride, family.offset)
    counterexample = None
    for n, residue in enumerate(progression.coeffs):
        if residue:
            counterexample = Counterexample(n, family.stride * n + family.offset, residue)
            break
    return _finish(family.family_id, start, order, progression.order + 1, counterexample, family.statement)


def check_internal(congruence: InternalCongruence, order: int, exact: bool = False) -> Report:
    start = time.perf_counter()
    order = congruence.order if congruence.order is not None else order
    (a1, b1), (a2, b2) = congruence.lhs, congruence.rhs
    if b1 > order or b2 > order:
        return _skipped(congruence.congruence_id, start, order, congruence.statement)
    series = _source_series(congruence.source, order, congruence.modulus, exact)
    left = extract(series, a1, b1)
    right = extract(series, a2, b2)
    checked = min(left.order, right.order) + 1
    counterexample = None
    for n in range(checked):
        if left.coeffs[n] != right.coeffs[n]:
            counterexample = Counterexample(n, a1 * n + b1, left.coeffs[n], right.coeffs[n])
            break
    return _finish(congruence.congruence_id, start, order, checked, counterexample, congruence.statement)


def check_identity(identity: SeriesIdentity, order: int) -> Report:
    start = time.perf_counter()
    order = identity.order if identity.order is not None else order
    left = identity.lhs.evaluate(order, identity.modulus)
    right = identity.rhs.evaluate(order, identity.modulus)
    checked = min(left.order, right.order) + 1
    counterexample = None
    for n in range(checked):
        if left.coeffs[n] != right.coeffs[n]:
            counterexample = Counterexample(n, n, left.coeffs[n], right.coeffs[n])
            break
    return _finish(identity.identity_id, start, order, checked, counterexample, identity.statement)


def check_group(group: IdentityGroup, order: int) -> Report:
    start = time.perf_counter()
    reports = [check_identity(identity, order) for identity in group.identities]
    failed = [r for r in reports if r.status == "fail"]
    counterexample = failed[0].counterexample if failed else None
    order_used = max(r.order_used for r in reports)
    checked = sum(r.range_checked for r in reports)
    return _finish(group.group_id, start, order_used, checked, counterexample, group.statement)


def run_check(entry, order: int) -> Report:
    if isinstance(entry, CongruenceFamily):
        return check_vanishing(entry, order)
    if isinstance(entry, InternalCongruence):
        return check_internal(entry, order)
    if isinstance(entry, SeriesIdentity):
        return check_identity(entry, order)
    if isinstance(entry, IdentityGroup):
        return check_group(entry, order)
    raise TypeError(f"cannot check {entry!r}")
