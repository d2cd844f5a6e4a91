STATUSES = ("pass", "fail", "skipped")


class Counterexample:
    """First violation found: progression index n, series exponent, residue there.

    `expected` is the residue the other side had, for internal congruences and
    identities.
    """

    def __init__(self, n: int, index: int, residue: int, expected=None):
        self._n = n
        self._index = index
        self._residue = residue
        self._expected = expected

    @property
    def n(self) -> int:
        return self._n

    @property
    def index(self) -> int:
        return self._index

    @property
    def residue(self) -> int:
        return self._residue

    @property
    def expected(self):
        return self._expected

    def to_dict(self) -> dict:
        rv = {"n": self._n, "index": self._index, "residue": self._residue}
        if self._expected is not None:
            rv["expected"] = self._expected
        return rv

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], data["index"], data["residue"], data.get("expected"))

    def __repr__(self):
        return f"<Counterexample n={self._n} index={self._index} residue={self._residue}>"

    def __eq__(self, other):
        if not isinstance(other, Counterexample):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self._n, self._index, self._residue, self._expected))


class Report:
    def __init__(self, report_id: str, status: str, order_used: int, range_checked: int, counterexample=None,
                 elapsed: float = 0.0, statement: str = ""):
        if status not in STATUSES:
            raise ValueError(f"bad status {status!r}")
        if (status == "fail") != (counterexample is not None):
            raise ValueError("a report fails exactly when it carries a counterexample")
        self._report_id = report_id
        self._status = status
        self._order_used = order_used
        self._range_checked = range_checked
        self._counterexample = counterexample
        self._elapsed = elapsed
        self._statement = statement

    @property
    def report_id(self) -> str:
        return self._report_id

    @property
    def status(self) -> str:
        return self._status

    @property
    def passed(self) -> bool:
        return self._status == "pass"

    @property
    def order_used(self) -> int:
        return self._order_used

    @property
    def range_checked(self) -> int:
        return self._range_checked

    @property
    def counterexample(self):
        return self._counterexample

    @property
    def elapsed(self) -> float:
        return self._elapsed

    @property
    def elapsed_ms(self) -> float:
        return round(self._elapsed * 1000, 3)

    @property
    def statement(self) -> str:
        return self._statement

    @property
    def summary(self) -> str:
        if self._status == "pass":
            return f"verified to order {self._order_used} ({self._range_checked} cases)"
        if self._status == "skipped":
            return f"nothing to check at order {self._order_used}"
        c = self._counterexample
        return f"fails at n={c.n} (exponent {c.index}, residue {c.residue})"

    def to_dict(self) -> dict:
        return {
            "id": self._report_id,
            "status": self._status,
            "order": self._order_used,
            "range_checked": self._range_checked,
            "counterexample": None if self._counterexample is None else self._counterexample.to_dict(),
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, data):
        counterexample = data.get("counterexample")
        return cls(
            data["id"],
            data["status"],
            data["order"],
            data["range_checked"],
            None if counterexample is None else Counterexample.from_dict(counterexample),
            data.get("elapsed_ms", 0.0) / 1000,
        )

    def __repr__(self):
        return f"<Report {self._report_id} {self._status}, order {self._order_used}>"

    def __eq__(self, other):
        if not isinstance(other, Report):
            return False
        # timings differ between runs of the same check
        return (self._report_id, self._status, self._order_used, self._range_checked, self._counterexample) == (
            other._report_id,
            other._status,
            other._order_used,
            other._range_checked,
            other._counterexample,
        )

    def __lt__(self, other):
        return self._report_id < other._report_id

    def __hash__(self):
        return hash((self._report_id, self._status, self._order_used, self._range_checked))
