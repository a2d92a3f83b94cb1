import json

import pytest

from thetacodes.cli import main
from thetacodes.exactq import from_json, to_text
from thetacodes.ringcodes import code_to_json

REF_63 = "1 + 6q^4 + 12q^8 + 8q^12 + 12q^16 + 6q^18 + 48q^20 + 30q^22"
REF_79 = "1 + 6q^4 + 12q^8 + 8q^12 + 6q^16 + 30q^20 + 6q^22 + 48q^24"
C32_63 = "1 + 4q^2 + 6q^4 + 8q^6 + 12q^8 + 8q^10 + 8q^12 + 16q^14 + 8q^16 + 22q^18 + 40q^20 + 18q^22"


@pytest.fixture
def files(tmp_path, c32, c33):
    out = {}
    for name, c in (("c32", c32), ("c33", c33)):
        p = tmp_path / (name + ".json")
        p.write_text(json.dumps(code_to_json(c)))
        out[name] = str(p)
    p = tmp_path / "zero.json"
    p.write_text(json.dumps({"ring": "F2xF2", "length": 2, "generators": []}))
    out["zero"] = str(p)
    return out


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out.strip(), cap.err.strip()


def test_coset_theta_examples(capsys):
    assert run(capsys, "coset-theta", "--level", "7", "--coset", "G", "--prec", "10") == (0, "2q^2 + 2q^4 + 2q^8", "")
    assert run(capsys, "coset-theta", "--level", "7", "--coset", "A", "--prec", "5")[:2] == (0, "1 + 2q^4")
    rc, out, _ = run(capsys, "coset-theta", "--level", "11", "--coset", "C", "--prec", "30", "--oracle")
    assert rc == 0 and out.endswith("PASS")


def test_coset_theta_bad_level(capsys):
    rc, _, err = run(capsys, "coset-theta", "--level", "6", "--coset", "A")
    assert rc == 2 and "NOT_ADMISSIBLE" in err


def test_coset_theta_json(capsys):
    rc, out, _ = run(capsys, "coset-theta", "--level", "7", "--coset", "C", "--prec", "11", "--format", "json")
    obj = json.loads(out)
    assert rc == 0 and to_text(from_json(obj["series"])) == "2q + 2q^7 + 2q^9"


def test_code_theta_reference_strings(capsys, files):
    # these reference strings come from the code built on <001> and its dual
    rc, out, err = run(capsys, "code-theta", "--code", files["c33"], "--level", "63", "--prec", "24")
    assert (rc, out) == (0, REF_63) and "not squarefree" in err
    rc, out, _ = run(capsys, "code-theta", "--code", files["c33"], "--level", "79", "--prec", "26")
    assert (rc, out) == (0, REF_79)


def test_code_theta_c32(capsys, files):
    rc, out, _ = run(capsys, "code-theta", "--code", files["c32"], "--level", "63", "--prec", "24", "--oracle")
    assert rc == 0 and out.splitlines() == [C32_63, "enumeration: PASS"]


def test_code_theta_zero_code(capsys, files):
    rc, out, _ = run(capsys, "code-theta", "--code", files["zero"], "--level", "7", "--prec", "9")
    assert (rc, out) == (0, "1 + 4q^4 + 12q^8")


def test_code_theta_errors(capsys, files, tmp_path):
    rc, _, err = run(capsys, "code-theta", "--code", files["c32"], "--level", "11")
    assert rc == 2 and "RING_LEVEL_MISMATCH" in err
    assert run(capsys, "code-theta", "--code", str(tmp_path / "none.json"), "--level", "7")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"ring": "F4", "length": 2, "generators": [["1", "x"]]}')
    assert run(capsys, "code-theta", "--code", str(bad), "--level", "3")[0] == 2


def test_compare_levels(capsys, files):
    rc, out, _ = run(capsys, "compare-levels", "--code", files["c32"], "--level", "79", "--level2", "63")
    assert (rc, out) == (0, "first difference q^16, bound q^16, PASS")
    rc, out, _ = run(capsys, "compare-levels", "--code", files["c32"], "--level", "15", "--level2", "7",
                     "--format", "json")
    obj = json.loads(out)
    assert rc == 0 and obj["bound"] == 2 and obj["pass"] and obj["first_difference"] >= 2
    assert run(capsys, "compare-levels", "--code", files["c32"], "--level", "7", "--level2", "7")[0] == 2


def test_recover_level7_search(capsys, files, c32, c33):
    from thetacodes.ringcodes import swe
    rc, out, _ = run(capsys, "recover", "--code", files["c32"], "--level", "7", "--search")
    obj = json.loads(out)
    assert rc == 0 and obj["delta"] == 3 and obj["regime"] == "FAMILY_BOUND"
    sw = {m["swe"] for m in obj["matches"]}
    assert str(swe(c32)) in sw and str(swe(c33)) in sw


def test_recover_level15_text(capsys, files, c32):
    from thetacodes.ringcodes import swe
    rc, out, _ = run(capsys, "recover", "--code", files["c32"], "--level", "15", "--format", "text")
    lines = out.splitlines()
    assert rc == 0
    assert lines[0] == "n=3 l=15 regime=UNIQUE_GUARANTEED delta=0 delta_lower_bound=-3"
    assert lines[1] == "swe = %s" % swe(c32)


def test_recover_from_series_file(capsys, tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("1 + 6q^2 + 24q^4 + 56q^6 + 114q^8 + O(q^9)")
    rc, out, _ = run(capsys, "recover", "--series", str(p), "--n", "3", "--level", "7")
    assert rc == 0 and json.loads(out)["delta"] == 3


def test_recover_errors(capsys, tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("1+q")
    rc, _, err = run(capsys, "recover", "--series", str(p), "--n", "3", "--level", "7")
    assert rc == 3 and "INCONSISTENT_TARGET" in err
    p.write_text("1 + 6q^2 + O(q^3)")
    rc, _, err = run(capsys, "recover", "--series", str(p), "--n", "3", "--level", "7")
    assert rc == 4 and "INSUFFICIENT_PRECISION" in err
    assert run(capsys, "recover", "--series", str(p), "--level", "7")[0] == 2
    assert run(capsys, "recover", "--level", "7")[0] == 2


def test_identities(capsys):
    rc, out, _ = run(capsys, "identities", "--level", "3", "7", "11", "15", "--prec", "40")
    lines = out.splitlines()
    assert rc == 0 and len(lines) == 4 and all(ln.endswith("PASS") for ln in lines)
    rc, out, err = run(capsys, "identities", "--level", "63")
    assert rc == 0 and out.endswith("PASS") and "warning: level 63 is not squarefree" in err
    rc, _, err = run(capsys, "identities", "--level", "5")
    assert rc == 2 and "NOT_ADMISSIBLE" in err
    assert run(capsys, "identities", "--level", "63", "--strict-squarefree")[0] == 2


def test_output_is_deterministic(capsys, files, tmp_path):
    argv = ["recover", "--code", files["c32"], "--level", "7", "--search"]
    a, b = run(capsys, *argv), run(capsys, *argv)
    assert a == b
    o1, o2 = tmp_path / "a.json", tmp_path / "b.json"
    main(["code-theta", "--code", files["c32"], "--level", "7", "--format", "json", "--out", str(o1)])
    main(["code-theta", "--code", files["c32"], "--level", "7", "--format", "json", "--out", str(o2)])
    assert o1.read_bytes() == o2.read_bytes()


def test_json_series_roundtrip(capsys, files, tmp_path):
    o = tmp_path / "t.json"
    assert main(["code-theta", "--code", files["c32"], "--level", "15", "--format", "json", "--out", str(o)]) == 0
    series = json.loads(o.read_text())["series"]
    p = tmp_path / "series.json"
    p.write_text(json.dumps(series))
    rc, out, _ = run(capsys, "recover", "--series", str(p), "--n", "3", "--level", "15")
    assert rc == 0 and json.loads(out)["delta"] == 0
