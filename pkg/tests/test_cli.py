import io
import json

import pytest

from kummergaps.cli import run


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_gapset_maximal_example():
    code, out, err = invoke(["gapset", "--m", "9", "--lambdas", "1,1,3,3", "--place", "0"])
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["command"] == "gapset"
    assert report["results"]["gaps"] == [1, 2, 3, 4, 5, 7, 10, 11, 13, 19]
    assert report["results"]["genus"] == 10


def test_output_is_byte_deterministic():
    argv = ["semigroup", "--m", "9", "--lambdas", "1,1,3,3", "--all-places"]
    assert invoke(argv) == invoke(argv)
    argv = ["verify", "--curves", "5", "--semigroups", "5", "--profiles", "5"]
    assert invoke(argv) == invoke(argv)


def test_limit_equality_case():
    code, out, _ = invoke(["limit", "--m", "3", "--k", "1=1"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["limit"] == "1/3"
    assert report["results"]["attains_upper"] is True


def test_gapset_partial_fallback_warns():
    code, out, _ = invoke(["gapset", "--m", "4", "--lambdas", "1,2,1", "--place", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["gaps"] == [1]
    assert any("partial" in w for w in report["warnings"])


def test_gapset_flag_combinations():
    code, out, _ = invoke(
        ["gapset", "--m", "9", "--lambdas", "1,1,3,3", "--all-places"]
    )
    report = json.loads(out)
    assert set(report["results"]["gaps"]) == {"0", "1", "2"}
    code, out, _ = invoke(
        ["gapset", "--m", "9", "--lambdas", "1,1,3,3", "--reference", "--place", "1"]
    )
    assert json.loads(out)["results"]["gaps"] == [1, 2, 3, 4, 5, 7, 10, 11, 13, 19]
    code, out, _ = invoke(["gapset", "--m", "9", "--lambdas", "1,1,3,3", "--generic"])
    assert json.loads(out)["results"]["gaps"] == [1, 2, 3]


def test_domain_error_reports_code():
    code, out, err = invoke(
        ["semigroup", "--m", "4", "--lambdas", "1,2,1", "--place", "2"]
    )
    assert code == 1 and out == ""
    assert json.loads(err)["error"]["code"] == "not_totally_ramified"


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as info:
        invoke(["gapset", "--m", "not-a-number"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        invoke([])
    assert info.value.code == 2


def test_missing_curve_is_domain_error():
    code, _, err = invoke(["gapset", "--place", "0"])
    assert code == 1
    assert json.loads(err)["error"]["code"] == "invalid_input"


def test_curve_file_and_flag_override(tmp_path):
    path = tmp_path / "curve.json"
    path.write_text(json.dumps({"m": 9, "lambdas": [1, 1, 3, 3]}))
    code, out, _ = invoke(["invariants", "--curve", str(path), "--place", "0"])
    report = json.loads(out)
    assert code == 0
    assert report["results"]["genus"] == 10
    assert report["results"]["frobenius"] == 19
    assert report["results"]["agrees"] is True

    code, out, _ = invoke(
        ["gapset", "--curve", str(path), "--lambdas", "1,1,1", "--place", "0"]
    )
    report = json.loads(out)
    assert report["input"]["lambdas"] == [1, 1, 1]
    assert any("overrides" in w for w in report["warnings"])


def test_apery_and_symmetry_commands():
    code, out, _ = invoke(["apery", "--m", "9", "--lambdas", "1,1,3,3"])
    report = json.loads(out)
    assert report["results"]["values"] == [0, 28, 20, 12, 22, 14, 6, 16, 8]
    assert report["results"]["matches_brute_force"] is True

    code, out, _ = invoke(
        ["symmetry", "--m", "5", "--lambdas", "4,2,2", "--place", "1"]
    )
    report = json.loads(out)
    assert report["results"]["verdict"] == "Symmetric"
    assert report["results"]["symmetric"] is True
    assert report["results"]["consistent"] is True


def test_coincide_command():
    code, out, _ = invoke(
        ["coincide", "--m", "3", "--lambdas", "1,1,2", "--places", "1,3"]
    )
    report = json.loads(out)
    assert report["results"]["equal"] is True
    assert report["results"]["criterion"] == "trigonal_balance"


def test_divisors_command():
    code, out, _ = invoke(
        ["divisors", "--m", "9", "--lambdas", "1,1,3,3", "--anchor", "1"]
    )
    report = json.loads(out)
    results = report["results"]
    assert results["count"] == 10
    assert results["all_effective"] is True
    assert results["all_degree_2g_minus_2"] is True
    assert results["matches_gap_set"] is True
    assert results["recovered_gap_set"] == [1, 2, 3, 4, 5, 7, 10, 11, 13, 19]


def test_weights_and_decimal_rendering():
    code, out, _ = invoke(["weights", "--m", "2", "--lambdas", "1,1,1,1,1"])
    report = json.loads(out)
    assert report["results"]["bw"] == 6
    assert report["results"]["ratio"] == "1"

    code, out, _ = invoke(
        ["--decimal", "4", "sweep", "--m", "3", "--pattern", "1,2", "--repeats", "4"]
    )
    report = json.loads(out)
    row = report["results"]["rows"][0]
    assert row["ratio"] == {"exact": "8/35", "decimal": "0.2286"}


def test_weights_warns_below_genus_two():
    code, out, _ = invoke(["weights", "--m", "3", "--lambdas", "1,1"])
    report = json.loads(out)
    assert code == 0
    assert report["results"]["ratio"] is None
    assert any("ratio undefined" in w for w in report["warnings"])


def test_verify_command_passes():
    code, out, _ = invoke(
        ["verify", "--curves", "10", "--semigroups", "5", "--profiles", "10"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["all_passed"] is True
    assert len(report["results"]["checks"]) == 21
