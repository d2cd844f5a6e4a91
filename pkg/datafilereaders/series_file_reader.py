import csv
import io
import json
import re

from qseries.errors import SeriesError
from qseries.series import ModSeries, make

_ORDER_COMMENT = re.compile(r"#\s*order\s+(\d+)\s*$")


def _build(coefficients: dict, order, modulus):
    if order is None:
        order = max(coefficients, default=0)
    if coefficients and max(coefficients) > order:
        raise SeriesError(f"term q^{max(coefficients)} lies past the declared order {order}")
    dense = [coefficients.get(n, 0) for n in range(order + 1)]
    if modulus is None:
        return make(dense, order)
    return ModSeries(dense, order, modulus)


class SeriesFileReader:
    """Reads a truncated series from a text, JSON or CSV file.

    The format comes from the extension (.txt/.tsv, .json, .csv) and falls back
    to sniffing the content.
    """

    def __init__(self, file_name: str):
        self._file_name = file_name
        self._series = None

    @property
    def file_name(self):
        return self._file_name

    @property
    def series(self):
        return self._series

    @property
    def format(self) -> str:
        name = self._file_name.lower()
        if name.endswith(".json"):
            return "json"
        if name.endswith(".csv"):
            return "csv"
        if name.endswith((".txt", ".tsv")):
            return "text"
        return None

    def read_series_file(self):
        with open(self._file_name, mode="r", encoding="utf-8-sig") as series_file:
            content = series_file.read()
        self._series = parse_series(content, self.format)
        return self._series


def parse_series(content: str, fmt=None):
    if fmt is None:
        body = [line for line in content.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        stripped = body[0].lstrip() if body else ""
        if stripped.startswith("{"):
            fmt = "json"
        elif stripped.lower().startswith("n,"):
            fmt = "csv"
        else:
            fmt = "text"
    if fmt == "json":
        return _parse_json(content)
    if fmt == "csv":
        return _parse_csv(content)
    return _parse_text(content)


def _parse_text(content):
    order = None
    last = -1
    coefficients = {}
    for line_number, line in enumerate(content.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _ORDER_COMMENT.match(line)
            if match:
                order = int(match.group(1))
            continue
        fields = line.split()
        if len(fields) != 2:
            raise SeriesError(f"line {line_number}: expected 'n<TAB>coefficient', got {line!r}")
        try:
            n, c = int(fields[0]), int(fields[1])
        except ValueError:
            raise SeriesError(f"line {line_number}: non-integer field in {line!r}") from None
        if n <= last:
            raise SeriesError(f"line {line_number}: exponents must ascend")
        coefficients[n] = c
        last = n
    return _build(coefficients, order, None)


def _parse_json(content):
    try:
        data = json.loads(content)
        order = int(data["order"])
        coeffs = [int(c) for c in data["coeffs"]]
    except (ValueError, KeyError, TypeError) as err:
        raise SeriesError(f"malformed series JSON: {err}") from None
    if len(coeffs) != order + 1:
        raise SeriesError(f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}")
    return _build(dict(enumerate(coeffs)), order, data.get("modulus"))


def _parse_csv(content):
    order = None
    lines = []
    for line in content.splitlines():
        match = _ORDER_COMMENT.match(line.strip())
        if match:
            order = int(match.group(1))
        elif not line.startswith("#"):
            lines.append(line)
    coefficients = {}
    for row in csv.DictReader(lines):
        try:
            coefficients[int(row["n"])] = int(row["coefficient"])
        except (KeyError, TypeError, ValueError):
            raise SeriesError(f"malformed CSV row {row!r}") from None
    return _build(coefficients, order, None)


def format_text(s) -> str:
    lines = [f"# order {s.order}"]
    lines.extend(f"{n}\t{c}" for n, c in enumerate(s.coeffs))
    return "\n".join(lines) + "\n"


def format_json(s) -> str:
    data = {"order": s.order, "coeffs": list(s.coeffs)}
    if s.modulus is not None:
        data["modulus"] = s.modulus
    return json.dumps(data)


def format_csv(s) -> str:
    out = io.StringIO()
    out.write(f"# order {s.order}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "coefficient"])
    writer.writerows(enumerate(s.coeffs))
    return out.getvalue()


def format_series(s, fmt: str = "text") -> str:
    if fmt == "json":
        return format_json(s)
    if fmt == "csv":
        return format_csv(s)
    return format_text(s)
