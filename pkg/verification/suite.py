import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor

from config import DEFAULT_ORDER
from verification.checkers import run_check
from verification.registry import build_registry

logger = logging.getLogger(__name__)


def run_suite(suite_id: str, order: int = DEFAULT_ORDER, param_bounds=None, jobs: int = 1) -> list:
    """Check every entry of a suite at `order` and return the reports sorted by id."""
    entries = build_registry(order, param_bounds).suite(suite_id)
    logger.info("suite %s: %d checks at order %d", suite_id, len(entries), order)
    start = time.perf_counter()
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_check, entries, itertools.repeat(order)))
    else:
        reports = [run_check(entry, order) for entry in entries]
    reports.sort(key=lambda r: r.report_id)
    failed = sum(1 for r in reports if r.status == "fail")
    logger.info("suite %s finished in %.2f s, %d failed", suite_id, time.perf_counter() - start, failed)
    return reports


def all_passed(reports) -> bool:
    return not any(r.status == "fail" for r in reports)
