import json

import pytest
from hypothesis import given

from assemblyplan import validate_model
from assemblyplan.cli import main
from assemblyplan.modelfile import ParseError, dump_model, load_model, parse_model_text
from helpers import bridge, models


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def bridge_path(data_dir):
    return data_dir / "bridge.json"


# -- validate ----------------------------------------------------------------------


def test_validate_ok(capsys, bridge_path):
    code, out, _ = run(capsys, "validate", bridge_path)
    assert code == 0
    assert out == "OK: 5 blocks, 7 connections, 2 directions\n"


def test_fixture_matches_reference_model(bridge_path):
    assert load_model(bridge_path) == bridge()


def test_validate_loop(capsys, data_dir):
    code, out, err = run(capsys, "validate", data_dir / "loop.json")
    assert code == 1
    assert "LoopEdge: block 3" in err.splitlines()
    assert out == ""


def test_validate_malformed(capsys, data_dir):
    code, _, err = run(capsys, "validate", data_dir / "malformed.json")
    assert code == 2
    assert err.startswith("ParseError: line 4, column 3")


def test_validate_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", tmp_path / "absent.json")
    assert code == 2
    assert err.startswith("IOError")


def test_validate_one_diagnostic_per_line(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "schema_version": 1,
                "directions": [[0, 0, 0]],
                "blocks": [{"id": 1}, {"id": 1}],
                "connections": [],
            }
        )
    )
    code, _, err = run(capsys, "validate", path)
    assert code == 1
    codes = {line.split(":")[0] for line in err.splitlines()}
    assert {"ZeroDirection", "DuplicateBlockId"} <= codes


def test_schema_version_required():
    with pytest.raises(ParseError, match="schema_version"):
        parse_model_text('{"directions": [[1,0,0]], "blocks": [{"id": 1}], "connections": []}')


# -- decompose ---------------------------------------------------------------------


def test_decompose_d0(capsys, bridge_path):
    code, out, _ = run(capsys, "decompose", bridge_path, "--dir", 0)
    assert code == 0
    assert out == "2 components: [1,2,3,4] | [5]; removed: 1->5, 4->5\n"


def test_decompose_d1(capsys, bridge_path):
    _, out, _ = run(capsys, "decompose", bridge_path, "--dir", 1)
    assert out == "1 component (no PFD along this direction)\n"


def test_decompose_single(capsys, data_dir):
    _, out, _ = run(capsys, "decompose", data_dir / "single.json", "--dir", 0)
    assert out.startswith("1 component")


def test_decompose_all_dirs(capsys, bridge_path):
    _, out, _ = run(capsys, "decompose", bridge_path, "--all-dirs")
    assert out.splitlines() == [
        "direction 0 (1, 0, 0): 2 components: [1,2,3,4] | [5]; removed: 1->5, 4->5",
        "direction 1 (0, 1, 0): 1 component (no PFD along this direction)",
    ]


def test_decompose_structured(capsys, bridge_path):
    _, out, _ = run(capsys, "decompose", bridge_path, "--all-dirs", "--format", "structured")
    doc = json.loads(out)
    assert doc[0]["components"] == [[1, 2, 3, 4], [5]]
    assert doc[0]["removed"] == [[1, 5], [4, 5]]
    assert doc[1]["components"] == [[1, 2, 3, 4, 5]]
    assert doc[1]["removed"] == []


def test_decompose_bad_dir(capsys, bridge_path):
    code, _, err = run(capsys, "decompose", bridge_path, "--dir", 5)
    assert code == 2
    assert "out of range" in err


# -- instructions ------------------------------------------------------------------


def test_instructions_bridge(capsys, bridge_path, data_dir):
    code, out, _ = run(capsys, "instructions", bridge_path)
    assert code == 0
    assert out == (data_dir / "bridge_plan.txt").read_text()


def test_instructions_structured(capsys, bridge_path):
    _, out, _ = run(capsys, "instructions", bridge_path, "--format", "structured")
    steps = json.loads(out)["steps"]
    assert [s["target"] for s in steps] == [[2, 3], [1, 2, 3, 4], [1, 2, 3, 4, 5]]


def test_instructions_two_blocks(capsys, data_dir):
    _, out, _ = run(capsys, "instructions", data_dir / "two.json")
    assert out.count("Step ") == 1
    assert '1 -> 2 {"connector": "snap"}' in out


def test_instructions_single(capsys, data_dir):
    _, out, _ = run(capsys, "instructions", data_dir / "single.json", "--format", "structured")
    assert json.loads(out)["steps"] == []
    _, out, _ = run(capsys, "instructions", data_dir / "single.json")
    assert out == "Model is a single block; no assembly required.\n"


def test_instructions_stuck(capsys, tmp_path):
    path = tmp_path / "stuck.json"
    path.write_text(
        json.dumps(
            {
                "schema_version": 1,
                "directions": [[1, 0, 0], [0, 1, 0]],
                "blocks": [{"id": 1}, {"id": 2}],
                "connections": [
                    {"from": 1, "to": 2, "direction": 0},
                    {"from": 1, "to": 2, "direction": 1},
                ],
            }
        )
    )
    code, out, err = run(capsys, "instructions", path)
    assert code == 1 and out == ""
    assert err == "StuckComponent: no direction splits [1,2]\n"


# -- export-dot --------------------------------------------------------------------


def arcs(text):
    return [line for line in text.splitlines() if "->" in line]


def nodes(text):
    return [line for line in text.splitlines() if "[label=" in line and "->" not in line]


def test_dot_ccg(capsys, bridge_path):
    _, out, _ = run(capsys, "export-dot", bridge_path, "--what", "ccg:0")
    assert out.startswith("digraph")
    assert (len(nodes(out)), len(arcs(out))) == (2, 1)


def test_dot_tree(capsys, bridge_path):
    _, out, _ = run(capsys, "export-dot", bridge_path, "--what", "tree")
    assert (len(nodes(out)), len(arcs(out))) == (8, 7)


def test_dot_projections(capsys, bridge_path):
    _, out, _ = run(capsys, "export-dot", bridge_path, "--what", "projection:1")
    assert len(arcs(out)) == 10
    _, out, _ = run(capsys, "export-dot", bridge_path, "--what", "projection:0")
    assert len(arcs(out)) == 11


def test_dot_model(capsys, bridge_path):
    _, out, _ = run(capsys, "export-dot", bridge_path)
    assert (len(nodes(out)), len(arcs(out))) == (5, 7)


@pytest.mark.parametrize("what", ["bogus", "ccg:x", "ccg:9", "projection", "tree:1"])
def test_dot_unknown_target(capsys, bridge_path, what):
    code, out, err = run(capsys, "export-dot", bridge_path, "--what", what)
    assert code == 2 and out == ""
    assert err.startswith("UnknownTarget")


# -- oracle-check ------------------------------------------------------------------


def test_oracle_check_bridge(capsys, bridge_path):
    code, out, _ = run(capsys, "oracle-check", bridge_path)
    assert code == 0
    assert out.splitlines()[-1] == "all candidates agree"


def test_oracle_check_two(capsys, data_dir):
    code, _, _ = run(capsys, "oracle-check", data_dir / "two.json")
    assert code == 0


def test_oracle_check_too_large(capsys, data_dir):
    code, _, err = run(capsys, "oracle-check", data_dir / "chain20.json")
    assert code == 1
    assert err.startswith("InstanceTooLarge")


def test_oracle_check_max_blocks_flag(capsys, bridge_path):
    code, _, err = run(capsys, "oracle-check", bridge_path, "--max-blocks", 3)
    assert code == 1 and "InstanceTooLarge" in err


# -- file format and stability -----------------------------------------------------


@given(models(max_blocks=8, max_edges=12))
def test_dump_load_round_trip(g):
    assert validate_model(parse_model_text(dump_model(g))) == g


def test_dump_file_round_trip(tmp_path, bridge_path):
    g = load_model(bridge_path)
    path = tmp_path / "again.json"
    path.write_text(dump_model(g))
    assert load_model(path) == g
    assert dump_model(load_model(path)) == dump_model(g)


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--all-dirs", "--format", "structured"],
        ["instructions"],
        ["instructions", "--format", "structured"],
        ["export-dot", "--what", "tree"],
        ["export-dot", "--what", "projection:0"],
        ["oracle-check"],
    ],
)
def test_outputs_are_byte_stable(capsys, bridge_path, argv):
    first = run(capsys, argv[0], bridge_path, *argv[1:])
    second = run(capsys, argv[0], bridge_path, *argv[1:])
    assert first == second
