import json
import xml.etree.ElementTree as ET

import pytest

from cartoonga import cli, verify
from cartoonga.blades import blade_product
from cartoonga.multivector import Multivector


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "BSQ * LEFT", "--dim", "2", "--output", "glyph")[:2] == (0, "↓\n")
    assert run(capsys, "eval", "e1 * e1", "--dim", "2")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "eval", "1 + e12", "--output", "json")
    assert code == 0 and Multivector.from_json(out) == Multivector(2, {0: 1, 3: 1})


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "e1 +", "--dim", "2")
    assert code == 2 and err.startswith("1:5: syntax error")
    assert run(capsys, "eval", "e1 * e2", "--dim", "3", "--output", "glyph")[0] == 2
    assert run(capsys, "eval", "RIGHT", "--dim", "3")[0] == 2


@pytest.mark.parametrize("bits, fn, line", [
    ("1", "11", "Constant, witness -2"),
    ("2", "constant0", "Constant, witness +4"),
    ("1", "01", "Balanced, witness 0"),
    ("2", "0001", "PromiseViolated, witness +2"),
])
def test_dj(capsys, bits, fn, line):
    code, out, _ = run(capsys, "dj", "--bits", bits, "--function", fn)
    assert code == 0 and out.splitlines()[0] == line


def test_dj_stages_and_json(capsys):
    code, out, _ = run(capsys, "dj", "--bits", "1", "--function", "11", "--show-stages")
    assert code == 0
    assert "E*e_n   1 + e{1} - e{2} - e{1,2}" in out
    code, out, _ = run(capsys, "dj", "--bits", "1", "--function", "11", "--show-stages", "--output", "json")
    report = json.loads(out)
    assert report["classification"] == "constant" and report["scalar_witness"] == -2
    assert report["f_at_zero"] == 1
    assert [s["name"] for s in report["stages"]] == ["E*e_n", "oracle", "F*", "Pi"]
    pi = Multivector.from_dict(report["stages"][-1]["multivector"])
    assert pi == Multivector.scalar(-2, 2)


def test_dj_render(capsys, tmp_path):
    path = tmp_path / "fig6.svg"
    code, _, _ = run(capsys, "dj", "--bits", "2", "--function", "constant0", "--render", f"svg:{path}")
    assert code == 0
    root = ET.parse(path).getroot()
    fills = [c.get("fill") for c in root.iter("{http://www.w3.org/2000/svg}circle")]
    assert fills == ["white"] * 4
    art = tmp_path / "fig5.txt"
    assert run(capsys, "dj", "--bits", "1", "--function", "01", "--render", f"ascii:{art}", "--render-full")[0] == 0
    assert "(empty bag)" in art.read_text()


@pytest.mark.parametrize("argv", [
    ["dj", "--bits", "2", "--function", "011"],
    ["dj", "--bits", "2", "--function", "0120"],
    ["dj", "--bits", "17", "--function", "constant0"],
    ["dj", "--bits", "3", "--function", "constant0", "--render", "svg:x.svg"],
    ["dj", "--bits", "1", "--function", "00", "--render", "png:x"],
])
def test_dj_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_io_error(capsys, tmp_path):
    bad = tmp_path / "missing" / "out.svg"
    assert run(capsys, "dj", "--bits", "1", "--function", "11", "--render", f"svg:{bad}")[0] == 3
    assert run(capsys, "render", "--json", str(tmp_path / "nope.json"))[0] == 3


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "-2 + RIGHT", "--dim", "2")
    assert code == 0 and "dots   : * *" in out
    src = tmp_path / "mv.json"
    src.write_text(Multivector(3, {0: 4, 7: -1}).to_json())
    out_path = tmp_path / "mv.svg"
    assert run(capsys, "render", "--json", str(src), "--output", "svg", "--out", str(out_path))[0] == 0
    ET.parse(out_path)
    code, out, _ = run(capsys, "render", "--json", str(src), "--output", "json")
    assert json.loads(out)[1] == {"kind": "cube", "orientation": -1, "axes": [1, 2, 3], "multiplicity": 1}
    assert run(capsys, "render", "e1", "--dim", "4")[0] == 2
    assert run(capsys, "render")[0] == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "oracle equivalence: ok (11364 checked)"
    assert lines[1] == "deutsch-jozsa exhaustive: ok (276 checked)"


def test_selftest_negative_control(capsys, monkeypatch):
    def flipped(a, b):
        # the other textbook ordering: count left bits below right bits
        sign, c = blade_product(a, b)
        if a.mask and b.mask and a.mask != b.mask:
            sign2, _ = blade_product(b, a)
            return sign2, c
        return sign, c

    result = verify.oracle_equivalence(flipped)
    assert not result.ok
    assert "e{1} * e{2}" in result.counterexample

    monkeypatch.setattr(verify, "blade_product", flipped)
    code, out, _ = run(capsys, "selftest")
    assert code == 1 and "counterexample: e{1} * e{2}" in out
