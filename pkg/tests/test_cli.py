import io
import contextlib
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_orbifolds.cli import (
    ParseError,
    expression_report,
    parse_base,
    parse_fibration,
    run_command,
)
from seifert_orbifolds.core import Surface, normalize
from seifert_orbifolds.groups import enumerate_quotient_groups, quotient_hopf


def run(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run_command(list(argv))
    return code, out.getvalue().rstrip("\n"), err.getvalue()


class TestParser:
    def test_sphere_four_fields(self):
        f = parse_fibration("S2(2,2,3); 1/2,1/2,1/3; ; -4/3")
        assert str(normalize(f)) == "(S2(2,2,3); 1/2,1/2,1/3; -4/3)"

    def test_disk_full(self):
        f = parse_fibration("D2(;2,2,4); ; 3/4,1/2,0/2; -1/8; 1")
        from seifert_orbifolds import parse_group
        assert normalize(f) == quotient_hopf(parse_group("F12(m=1,n=2)"))

    def test_bare_disk(self):
        f = parse_fibration("D2; ; ; -1; 0")
        assert f.base.surface is Surface.DISK and f.euler == -1 and f.xi == (0,)

    def test_xi_solved_when_omitted(self):
        f = parse_fibration("D2(3;2); 1/3; 1/2; -1/12")
        assert f.xi == (1,)

    def test_xi_unsolvable_is_error(self):
        with pytest.raises(ParseError):
            parse_fibration("D2(;3); ; 1/3; -1/2")

    def test_count_mismatch(self):
        with pytest.raises(ParseError, match="count mismatch"):
            parse_fibration("S2(2,2,3); 1/2,1/2; ; -1")

    def test_position_in_errors(self):
        with pytest.raises(ParseError, match="position"):
            parse_fibration("S2(2,2,3); 1/2,x,1/3; ; -1")

    def test_plain_invariant_rejected(self):
        with pytest.raises(ParseError):
            parse_fibration("S2(2); 1; ; -1/2")

    def test_order_one_points_merge(self):
        f = parse_fibration("S2(1,2,2); 0/1,1/2,1/2; ; -1")
        g = parse_fibration("S2(2,2); 1/2,1/2; -1")
        assert normalize(f) == normalize(g)

    def test_base_only(self):
        assert parse_base("D2(;2,2,4)").corner_labels == (2, 2, 4)
        assert parse_base("RP2(3)").cone_labels == (3,)
        with pytest.raises(ParseError):
            parse_base("T2(3)")


class TestCommands:
    def test_classify(self):
        code, out, _ = run("classify", "S2(2,2,4); 0/2,0/2,2/4; ; -1/2")
        assert code == 0 and out == "spherical; fibrations: 3"

    def test_diffeo_exit_codes(self):
        code, out, _ = run("diffeo", "S2(2,2); 0/2,0/2; ; -1", "D2; ; ; -1; 0")
        assert code == 0 and out == "diffeomorphic"
        code, out, _ = run(
            "diffeo", "S2(2,3,5); 1/2,1/3,1/5; ; -1/30",
            "S2(2,3,5); 1/2,1/3,1/5; ; -31/30",
        )
        assert code == 3 and out == "not diffeomorphic"
        code, _, err = run("diffeo", "S2(2,2); nonsense", "D2; ; ; -1; 0")
        assert code == 1

    def test_quotient(self):
        code, out, _ = run("quotient", "F5(m=2)")
        assert code == 0 and out == "(S2(2,3,3); 0/2,2/3,2/3; -1/3)"
        code, out, _ = run("quotient", "F2(m=3,n=2)", "--anti-hopf")
        assert code == 0 and out == "(RP2(3); 1/3; 2/3)"
        code, _, _ = run("quotient", "F20")
        assert code == 0

    def test_quotient_unsupported_family_exits_2(self):
        code, _, err = run("quotient", "F1(m=1,n=2,r=3,s=1)")
        assert code == 2
        code, _, _ = run("quotient", "F11(m=1,n=2,r=3,s=1)")
        assert code == 2

    def test_validate_exit_code(self):
        code, out, _ = run("validate", "S2(2,2,3); 0/2,0/2,1/3; ; -1/2")
        assert code == 1 and "residue -1/6" in out
        code, out, _ = run("validate", "S2(2,2,3); 1/3,1/2,1/2; ; -1/3")
        assert code == 0

    def test_chi(self):
        code, out, _ = run("chi", "D2(;2,2,4)")
        assert code == 0 and out == "chi(D2(;2,2,4)) = 1/8"

    def test_lens(self):
        code, out, _ = run("lens", "S2(4,4); 2/4,2/4; ; -1")
        assert code == 0 and out == "L(4,3)"
        code, _, _ = run("lens", "S2(2,3,5); 1/2,1/3,1/5; ; -1/30")
        assert code == 1

    def test_fibrations_infinite_key(self):
        code, out, _ = run("fibrations", "S2(2,2,3); 0/2,0/2,1/3; ; -1/3")
        assert code == 0 and out.startswith("infinitely many fibrations")

    def test_json_report_fields(self):
        code, out, _ = run("--json", "classify", "S2(2,3,5); 1/2,1/3,1/5; ; -1/30")
        assert code == 0
        obj = json.loads(out)
        assert obj["spherical"] and obj["count"] == 1 and obj["chi"] == "1/30"


class TestAtlas:
    def test_deterministic_and_grouped(self, tmp_path):
        out1 = run("--json", "atlas", "--max-order", "60")
        out2 = run("--json", "atlas", "--max-order", "60")
        assert out1 == out2 and out1[0] == 0
        lines = out1[1].splitlines()
        assert lines
        for line in lines:
            obj = json.loads(line)
            assert {"class", "count", "members"} <= set(obj)
        # hopf and anti-hopf quotients of one group land in one class
        member_classes = {}
        for line in lines:
            obj = json.loads(line)
            for m in obj["members"]:
                member_classes.setdefault(m["group"], set()).add(obj["class"])
        both_sided = [g for g, cs in member_classes.items() if len(cs) > 1]
        assert not both_sided

    def test_out_file(self, tmp_path):
        target = tmp_path / "atlas.txt"
        code, out, _ = run("atlas", "--max-order", "30", "--out", str(target))
        assert code == 0 and target.read_text().strip()


def _schema_check(obj, schema):
    """Minimal structural validation against the shipped schema."""
    assert isinstance(obj, dict)
    for key in schema["required"]:
        assert key in obj, key
    props = schema["properties"]
    for key, val in obj.items():
        assert key in props, key
    assert isinstance(obj["input"], str) and isinstance(obj["normalized"], str)
    assert isinstance(obj["valid"], bool) and isinstance(obj["spherical"], bool)
    assert obj["count"] in (None, 1, 2, 3, "infinite")
    assert isinstance(obj["fibrations"], list)
    if "diffeo_key" in obj:
        k = obj["diffeo_key"]
        assert k["class"] in ("sphere", "disk")
        assert k["mode"] in ("oriented", "fixed-cores")
        assert k["lens"]["p"] >= 1 and 0 <= k["lens"]["q"] < max(k["lens"]["p"], 1)


def test_reports_validate_against_schema():
    import importlib.resources as res

    schema = json.loads(
        res.files("seifert_orbifolds").joinpath("schema.json").read_text()
    )
    exprs = [
        "S2(2,3,5); 1/2,1/3,1/5; ; -1/30",
        "S2(2,2,4); 0/2,0/2,2/4; ; -1/2",
        "S2(2,2); 0/2,0/2; ; -1",
        "D2(;3,3); ; 1/3,1/3; -1/3; 0",
        "D2; ; ; -1; 0",
        "RP2(3); 1/3; 2/3",
        "S2(2,2,3); 0/2,0/2,1/3; ; -1/2",
        "S2; ; 0",
    ]
    for g in list(enumerate_quotient_groups(90))[:40]:
        exprs.append(str(quotient_hopf(g)))
    for text in exprs:
        obj = expression_report(parse_fibration(text))
        _schema_check(obj, schema)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.sampled_from([1, -1]))
def test_print_parse_roundtrip_on_engine_values(u, v, sign):
    from math import gcd

    from seifert_orbifolds.core import s3_fibration

    if gcd(u, v) != 1:
        return
    f = s3_fibration(u, v, sign)
    assert normalize(parse_fibration(str(f))) == f


def test_print_parse_roundtrip_on_quotients():
    from seifert_orbifolds.classify import (
        FibrationClass,
        enumerate_bridges,
        enumerate_fibrations,
        fibration_class,
    )

    for g in enumerate_quotient_groups(150):
        f = quotient_hopf(g)
        values = {f}
        if fibration_class(f) is FibrationClass.FINITE:
            values |= enumerate_fibrations(f)
        else:
            values.add(enumerate_bridges(f) or f)
        for v in values:
            assert normalize(parse_fibration(str(v))) == v


def test_parameter_cap_env(monkeypatch):
    monkeypatch.setenv("SEIFERT_ATLAS_MAX_B", "50")
    code, _, err = run("classify", "S2(2,2,97); 0/2,0/2,1/97; ; -1/97")
    assert code == 1 and "SEIFERT_ATLAS_MAX_B" in err
    monkeypatch.delenv("SEIFERT_ATLAS_MAX_B")
    code, out, _ = run("classify", "S2(2,2,97); 0/2,0/2,1/97; ; -1/97")
    assert code == 0


def test_validate_flags_order_mismatch():
    code, out, _ = run("validate", "S2(2,3); 1/2,1/4; ; -3/4")
    assert code == 1 and "do not match" in out


def test_huge_euler_class_is_capped_not_hung():
    code, _, err = run("lens", "S2; ; -1000000007")
    assert code == 1 and "SEIFERT_ATLAS_MAX_B" in err
