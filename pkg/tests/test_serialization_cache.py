import json
from fractions import Fraction

from hypothesis import given, strategies as st

from vertexcalc import vertex
from vertexcalc.cache import AmplitudeCache
from vertexcalc.exact_algebra import HalfLaurent, NovikovSeries, QRational, qbracket
from vertexcalc.ftcy import trivalent, z_trivalent
from vertexcalc.partitions import triple
from vertexcalc.serialization import (
    qrational_from_json,
    qrational_to_json,
    render,
    render_series,
    series_from_json,
    series_to_json,
)

fr = st.fractions(min_value=-4, max_value=4, max_denominator=5)
lp = st.dictionaries(st.integers(-3, 3), fr, max_size=3).map(HalfLaurent)
qr = st.builds(QRational, lp, lp.filter(lambda p: not p.is_zero()))


@given(qr)
def test_qrational_json_round_trip(v):
    assert qrational_from_json(json.loads(json.dumps(qrational_to_json(v)))) == v


def test_series_json_round_trip_with_caps():
    s = z_trivalent(trivalent((2, 1, 1), 3, {(1, 2): 1}))
    back = series_from_json(json.loads(json.dumps(series_to_json(s))))
    assert back == s
    assert back.caps == s.caps


def test_render_brackets():
    assert render(QRational.one()) == "1"
    assert render(qbracket(1).inverse()) == "1/[1]"
    assert render(-(qbracket(2) ** 2).inverse() * Fraction(1, 2)) == "-1/(2[2]^2)"


def test_render_series_lines():
    base = NovikovSeries([(1, 1)], 2)
    text = render_series(base.one() + base.variable((1, 1)))
    assert len(text.splitlines()) == 2


def test_cache_round_trip_and_corruption(tmp_path, caplog):
    path = tmp_path / "amps.jsonl"
    vertex.clear_memo()
    t = triple((2,), (1,), ())
    value = vertex.w_three_math(t)
    cache = AmplitudeCache(path)
    assert cache.flush_memo() >= 1
    assert cache.flush_memo() == 0
    with path.open("a") as fh:
        fh.write("{not json\n")
        fh.write(json.dumps({"flavor": "math", "triple": "1||", "value": {}, "version": 99}) + "\n")
    vertex.clear_memo()
    fresh = AmplitudeCache(path)
    records = fresh.load()
    assert any(r[1] == t and r[2] == value for r in records)
    assert "corrupt" in caplog.text
    fresh.seed()
    assert (vertex.MATH, t, value) in vertex.memo_items()
    vertex.clear_memo()
