"""JSON encodings and human-readable rendering."""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .exact_algebra import DomainError, HalfLaurent, NovikovSeries, QRational, format_laurent, qbracket
from .exact_algebra.novikov import edge_label, parse_edge


def _laurent_json(p: HalfLaurent) -> list:
    return [[k, str(c)] for k, c in sorted(p.terms.items())]


def _laurent_from(items) -> HalfLaurent:
    return HalfLaurent({int(k): Fraction(c) for k, c in items})


def qrational_to_json(v: QRational) -> dict:
    return {"num": _laurent_json(v.num), "den": _laurent_json(v.den)}


def qrational_from_json(obj) -> QRational:
    try:
        den = _laurent_from(obj["den"])
        num = _laurent_from(obj["num"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed q-rational {obj!r}") from exc
    if den.is_zero():
        raise DomainError("zero denominator")
    return QRational(num, den)


def series_to_json(s: NovikovSeries) -> dict:
    out = {
        "edges": [edge_label(e) for e in s.edges],
        "max_degree": s.max_degree,
        "terms": [{"exp": list(k), "coeff": qrational_to_json(c)} for k, c in s.items()],
    }
    if s.caps is not None:
        out["caps"] = list(s.caps)
    return out


def series_from_json(obj) -> NovikovSeries:
    edges = [parse_edge(e) for e in obj["edges"]]
    terms = {tuple(t["exp"]): qrational_from_json(t["coeff"]) for t in obj["terms"]}
    return NovikovSeries(edges, int(obj["max_degree"]), terms, obj.get("caps"))


def render(v: QRational) -> str:
    """Text form with ``[n]`` factors pulled out of the denominator when they divide it."""
    if v.is_laurent():
        return format_laurent(v.as_laurent())
    rest = QRational(v.den)
    counts: dict[int, int] = {}
    top = v.den.max_exponent() - v.den.min_exponent()
    for n in range(top // 2, 0, -1):
        b = qbracket(n)
        while True:
            trial = rest / b
            if not trial.is_laurent():
                break
            rest = trial
            counts[n] = counts.get(n, 0) + 1
    lead = rest.as_laurent()
    if not counts or len(lead.terms) != 1:
        return str(v)
    num = (QRational(v.num) / rest).as_laurent()
    den = "".join(f"[{n}]" + (f"^{k}" if k > 1 else "") for n, k in sorted(counts.items()))
    scale = lcm(*(c.denominator for c in num.terms.values()))
    if scale > 1:
        num = num * HalfLaurent({0: scale})
        den = f"({scale}{den})"
    text = format_laurent(num)
    if len(num.terms) > 1:
        text = f"({text})"
    return f"{text}/{den}"


def render_series(s: NovikovSeries, fn=render) -> str:
    lines = []
    for exp, c in sorted(s.items(), key=lambda kv: (sum(kv[0]), tuple(-a for a in kv[0]))):
        lines.append(f"{s.monomial_str(exp)}: {fn(c)}")
    return "\n".join(lines)
