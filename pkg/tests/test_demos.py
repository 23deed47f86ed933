import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("name", ["vertex_flavors.py", "cremona_reduction.py", "chain_and_closed_vertex.py"])
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    out = capsys.readouterr().out
    assert "False" not in out
    if "mismatches" in out:
        assert " 0 mismatches" in out
