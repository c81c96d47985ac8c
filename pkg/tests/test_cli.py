import json

from click.testing import CliRunner

from loopcalc.cli import main


def run(*args):
    return CliRunner().invoke(main, args)


def test_decompose_factors():
    r = run("decompose", "-i", '{"type":"four_manifold","k":1}', "--emit", "factors")
    assert r.exit_code == 0
    got = json.loads(r.output)
    assert got["factors"]["circles"] == 1
    assert got["factors"]["loop_spheres"] == {"5": 1}


def test_decompose_series_cap_six():
    r = run("decompose", "-i", '{"type":"four_manifold","k":2}', "--emit", "series", "--cap", "6")
    assert r.exit_code == 0
    assert json.loads(r.output) == {"series": [1, 2, 3, 4, 5, 6, 7]}


def test_excluded_wall_case_exits_one():
    r = run("decompose", "-i", '{"type":"wall","n":4,"k":3}')
    assert r.exit_code == 1
    got = json.loads(r.output)
    assert got["error"]["code"] == "excluded_case"
    assert "2, 4, 8" in got["error"]["message"]


def test_low_cap_rejected():
    r = run("decompose", "-i", '{"type":"four_manifold","k":1}', "--cap", "1")
    assert r.exit_code == 1
    assert json.loads(r.output)["error"]["code"] == "usage"


def test_bad_json_rejected():
    r = run("decompose", "-i", "{not json")
    assert r.exit_code == 1
    assert json.loads(r.output)["error"]["code"] == "usage"


def test_unknown_emit_rejected():
    r = run("decompose", "-i", '{"type":"four_manifold","k":1}', "--emit", "bogus")
    assert r.exit_code == 1
    assert json.loads(r.output)["error"]["code"] == "usage"


def test_input_from_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text('{"type":"four_manifold","k":0}')
    r = run("decompose", "-i", "@%s" % path, "--emit", "factors")
    assert r.exit_code == 0
    got = json.loads(r.output)
    assert got["factors"]["spheres"] == {"3": 1}
    assert got["factors"]["loop_spheres"] == {"7": 1}


def test_missing_input_file():
    r = run("decompose", "-i", "@/no/such/file.json")
    assert r.exit_code == 1
    assert json.loads(r.output)["error"]["code"] == "usage"


def test_output_is_byte_deterministic():
    args = ("decompose", "-i", '{"type":"four_manifold","k":3}')
    assert run(*args).output == run(*args).output


def test_emit_comma_separated():
    r = run(
        "decompose",
        "-i",
        '{"type":"four_manifold","k":2}',
        "--emit",
        "series,ranks",
        "--cap",
        "5",
    )
    assert r.exit_code == 0
    got = json.loads(r.output)
    assert set(got) == {"series", "ranks"}
    assert got["ranks"]["subject"] == "base"


def test_text_format():
    r = run(
        "decompose",
        "-i",
        '{"type":"four_manifold","k":1}',
        "--format",
        "text",
        "--cap",
        "8",
    )
    assert r.exit_code == 0
    assert "tree:" in r.output
    assert "factors: circles 1; loop spheres 5:1" in r.output
    assert "series: 1 1 0 0 1 1 0 0 1" in r.output
    assert "ranks: 2:1 5:1" in r.output


def test_equivalent_true_false():
    r = run(
        "equivalent",
        "-i",
        '[{"type":"four_manifold","k":3},{"type":"four_manifold","k":3}]',
    )
    assert r.exit_code == 0 and json.loads(r.output) == {"equivalent": True}
    r = run(
        "equivalent",
        "-i",
        '{"a":{"type":"four_manifold","k":0},"b":{"type":"four_manifold","k":1}}',
    )
    assert r.exit_code == 0 and json.loads(r.output) == {"equivalent": False}


def test_equivalent_incomparable_exits_one():
    r = run(
        "equivalent",
        "-i",
        '[{"type":"four_manifold","k":1},{"type":"wall","n":5,"k":3}]',
    )
    assert r.exit_code == 1
    assert json.loads(r.output)["error"]["code"] == "usage"


def test_equivalent_malformed_pair():
    r = run("equivalent", "-i", '[{"type":"four_manifold","k":1}]')
    assert r.exit_code == 1
    assert json.loads(r.output)["error"]["code"] == "usage"


def test_verify_series_suite():
    r = run("verify", "--suite", "series", "--seed", "3")
    assert r.exit_code == 0
    got = json.loads(r.output)
    assert got["ok"] is True and got["failures"] == 0
    assert {c["check"] for c in got["checks"]} == {
        "series.invert_roundtrip",
        "series.tensor_identity",
        "series.loop_sphere_defining",
    }
    for c in got["checks"]:
        assert c["seed"] == 3


def test_verify_deterministic_given_seed():
    a = run("verify", "--suite", "series", "--seed", "5").output
    b = run("verify", "--suite", "series", "--seed", "5").output
    assert a == b


def test_verify_text_format():
    r = run("verify", "--suite", "series", "--format", "text")
    assert r.exit_code == 0
    assert "total failures: 0" in r.output
