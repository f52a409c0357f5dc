"""Text formats for code files and analysis reports.

Code file: a header line ``v q k count`` followed by one codeword per
line, the rows of its canonical matrix separated by commas, each row a
string of base-q digits, leftmost column first (digit = field element
index).  Codewords are written in canonical sorted order, so emission is
byte-deterministic.  Parsing validates shape, canonicity, distinctness and
the count.

Report file: ``key: value`` lines in fixed order.  Distributions are
rendered as ``value^multiplicity`` groups, planes as comma-joined rows,
booleans as ``true``/``false``; parsing restores the analysis record.
"""

from __future__ import annotations

from .analysis import CodeReport
from .linalg import Space, Subspace, SubspaceCode, rref, space


class CodeFileError(ValueError):
    """Malformed code file."""


def _row_to_digits(sp: Space, row: int) -> str:
    return "".join(str(d) for d in sp.digits(row))


def _digits_to_row(sp: Space, text: str) -> int:
    if len(text) != sp.v:
        raise CodeFileError(f"row {text!r} must have {sp.v} digits")
    digits = []
    for ch in text:
        if not ch.isdigit() or int(ch) >= sp.q:
            raise CodeFileError(f"row {text!r} has digits outside GF({sp.q})")
        digits.append(int(ch))
    return sp.vector(digits)


def subspace_to_text(sub: Subspace) -> str:
    return ",".join(_row_to_digits(sub.space, r) for r in sub.rows)


def subspace_from_text(sp: Space, text: str) -> Subspace:
    rows = tuple(_digits_to_row(sp, part) for part in text.split(","))
    got, pivots = rref(sp, rows)
    if got != rows:
        raise CodeFileError(f"codeword {text!r} is not a canonical matrix")
    return Subspace(sp, rows, pivots)


def write_code(code: SubspaceCode, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(emit_code(code))


def emit_code(code: SubspaceCode) -> str:
    if code.k is None:
        raise CodeFileError("code files hold constant-dimension codes")
    lines = [f"{code.space.v} {code.space.q} {code.k} {code.size}"]
    lines += [subspace_to_text(m) for m in code.sorted_members()]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> SubspaceCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CodeFileError("empty code file")
    header = lines[0].split()
    if len(header) != 4:
        raise CodeFileError("header must be 'v q k count'")
    try:
        v, q, k, count = (int(x) for x in header)
    except ValueError as exc:
        raise CodeFileError(f"bad header {lines[0]!r}") from exc
    try:
        sp = space(v, q)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from exc
    body = lines[1:]
    if len(body) != count:
        raise CodeFileError(f"header promises {count} codewords, found {len(body)}")
    members = []
    for ln in body:
        sub = subspace_from_text(sp, ln)
        if sub.dim != k:
            raise CodeFileError(f"codeword {ln!r} has dimension {sub.dim}, expected {k}")
        members.append(sub)
    if len(set(members)) != len(members):
        raise CodeFileError("duplicate codewords")
    return SubspaceCode(sp, members)


def read_code(path) -> SubspaceCode:
    with open(path, encoding="ascii") as fh:
        return parse_code(fh.read())


# -- report files ----------------------------------------------------------

_REPORT_KEYS = (
    "v",
    "q",
    "k",
    "size",
    "min_distance",
    "degree_distribution",
    "light_plane",
    "s_plane",
    "s_profile",
    "nine_config_types",
    "seventeen_configs",
    "feasibility",
    "aut_order",
    "self_dual",
    "aut_order_with_correlations",
)


def _dist_to_text(dist: dict) -> str:
    return " ".join(f"{key}^{mult}" for key, mult in sorted(dist.items(), key=lambda kv: str(kv[0])))


def _dist_from_text(text: str, key_type=int) -> dict:
    out = {}
    for part in text.split():
        base, exp = part.split("^")
        out[key_type(base)] = int(exp)
    return out


def emit_report(report: CodeReport) -> str:
    lines = []
    for key in _REPORT_KEYS:
        value = getattr(report, key)
        if value is None:
            continue
        if key in ("light_plane", "s_plane"):
            rendered = subspace_to_text(value)
        elif key in ("degree_distribution", "s_profile", "nine_config_types"):
            rendered = _dist_to_text(value)
        elif key == "feasibility":
            rendered = " ".join(
                f"{name}={'pass' if ok else 'fail'}" for name, ok in sorted(value.items())
            )
        elif key == "self_dual":
            rendered = "true" if value else "false"
        else:
            rendered = str(value)
        lines.append(f"{key}: {rendered}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> CodeReport:
    fields = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        key, _, value = ln.partition(": ")
        fields[key] = value
    v, q, k = int(fields["v"]), int(fields["q"]), int(fields["k"])
    sp = space(v, q)
    report = CodeReport(
        v=v,
        q=q,
        k=k,
        size=int(fields["size"]),
        min_distance=int(fields["min_distance"]),
        degree_distribution=_dist_from_text(fields["degree_distribution"]),
    )
    if "light_plane" in fields:
        report.light_plane = subspace_from_text(sp, fields["light_plane"])
    if "s_plane" in fields:
        report.s_plane = subspace_from_text(sp, fields["s_plane"])
    if "s_profile" in fields:
        report.s_profile = _dist_from_text(fields["s_profile"])
    if "nine_config_types" in fields:
        report.nine_config_types = _dist_from_text(fields["nine_config_types"], key_type=str)
    if "seventeen_configs" in fields:
        report.seventeen_configs = int(fields["seventeen_configs"])
    if "feasibility" in fields:
        report.feasibility = {
            name: flag == "pass"
            for name, flag in (part.split("=") for part in fields["feasibility"].split())
        }
    if "aut_order" in fields:
        report.aut_order = int(fields["aut_order"])
    if "self_dual" in fields:
        report.self_dual = fields["self_dual"] == "true"
    if "aut_order_with_correlations" in fields:
        report.aut_order_with_correlations = int(fields["aut_order_with_correlations"])
    return report
