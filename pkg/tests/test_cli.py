import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

from egcert.cli import main
from egcert.detect import is_pk_free
from egcert.graph import parse_graph6
from egcert.witness import Witness, verify_witness

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
SCHEMAS = HERE.parent / "docs" / "schemas"


def _registry():
    resources = []
    for p in SCHEMAS.glob("*.json"):
        body = json.loads(p.read_text())
        resources.append((body["$id"], Resource.from_contents(body)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validate(obj, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(obj)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_k4_edge_list(capsys):
    code, out, _ = run(capsys, "check", DATA / "k4.edges")
    assert code == 0
    assert "min_degree=3" in out and "kappa=complete" in out
    assert "p5 witness: Cycle4" in out and "p8 witness: Cycle4" in out


def test_check_p8_needs_min_degree(capsys):
    code, _, err = run(capsys, "check", DATA / "p8.edges")
    assert code == 3
    assert "minimum degree is 1" in err


def test_check_p8_without_witnesses(capsys):
    code, out, _ = run(capsys, "check", DATA / "p8.edges", "--no-witness", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["p8_free"] is False and rec["kappa"] == 1 and rec["witnesses"] == {}
    validate(rec, "check_output.schema.json")


def test_check_malformed_graph6_names_offset(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_bytes(b"C~\nC}\x01\nIheA@GUAo\n")
    code, out, err = run(capsys, "check", f, "--json")
    assert code == 2
    assert "offset 2" in err
    # processing continued past the bad record
    assert len(out.splitlines()) == 2


def test_first_failure_sets_exit_code(tmp_path, capsys):
    f = tmp_path / "mixed.g6"
    f.write_text("GhCGGC\nC~\n")
    code, out, err = run(capsys, "check", f)
    assert code == 3
    assert "graph 2" in out


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/graph.g6")
    assert code == 2 and "error" in err


def test_check_golden_and_schema(capsys):
    code, out, _ = run(capsys, "check", DATA / "petersen.g6", "--json", "--trace")
    assert code == 0
    assert out == (GOLDEN / "check_petersen.json").read_text()
    rec = json.loads(out)
    validate(rec, "check_output.schema.json")
    assert rec["cycle_spectrum"] == [5, 6, 8, 9]
    assert rec["kappa"] == 3 and rec["p5_free"] is False and rec["p8_free"] is True


def test_extract_petersen_p8(capsys):
    code, out, _ = run(capsys, "extract", DATA / "petersen.g6", "--goal", "p8", "--json", "--trace")
    assert code == 0
    assert out == (GOLDEN / "extract_petersen_p8.json").read_text()
    body = json.loads(out)
    validate(body, "extraction.schema.json")
    w = Witness.from_dict(body["witness"])
    assert w.kind.value == "Cycle8"
    assert verify_witness(parse_graph6((DATA / "petersen.g6").read_bytes().strip()), w)


def test_extract_k4_p5_text(capsys):
    code, out, _ = run(capsys, "extract", DATA / "k4.edges", "--goal", "p5", "--trace")
    assert code == 0 and out.startswith("graph 1: Cycle4")


def test_extract_requires_min_degree(capsys):
    code, _, _ = run(capsys, "extract", DATA / "p8.edges", "--goal", "p8")
    assert code == 3


def test_extract_internal_invariant_dumps_trace(monkeypatch, capsys):
    from egcert import cli
    from egcert.witness import ExtractionTrace, InternalInvariant, TraceEvent

    def boom(g):
        raise InternalInvariant("synthetic", ExtractionTrace([TraceEvent("Claim2.1", "Case1", {"v1": 0})]))

    monkeypatch.setattr(cli, "eg_witness", boom)
    code, _, err = run(capsys, "extract", DATA / "petersen.g6", "--goal", "p8")
    assert code == 4
    assert '"claim":"Claim2.1"' in err


def test_extract_branch_corpus_p8_free_gives_cycle(tmp_path, capsys):
    lines = [ln.split()[0] for ln in (DATA / "branches.txt").read_text().splitlines()
             if ln and not ln.startswith("#")]
    f = tmp_path / "b.g6"
    f.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "extract", f, "--goal", "p8", "--json")
    assert code == 0
    results = [json.loads(r) for r in out.splitlines()]
    assert len(results) == len(lines)
    for g6, body in zip(lines, results):
        g = parse_graph6(g6.encode())
        w = Witness.from_dict(body["witness"])
        assert verify_witness(g, w)
        if is_pk_free(g, 8):
            assert w.kind.is_cycle


def test_verify_theorems_k4_only(capsys):
    code, out, _ = run(capsys, "verify-theorems", "--n-min", 4, "--n-max", 4, "--json")
    assert code == 0
    assert json.loads(out)["orders"]["4"]["graphs_total"] == 1


def test_verify_theorems_golden(capsys):
    code, out, _ = run(capsys, "verify-theorems", "--n-min", 4, "--n-max", 6, "--json")
    assert code == 0
    assert out == (GOLDEN / "sweep_4_6.json").read_text()
    validate(json.loads(out), "sweep_report.schema.json")


def test_verify_theorems_jobs_identical(capsys):
    outs = []
    for jobs in (1, 2):
        code, out, _ = run(capsys, "verify-theorems", "--n-min", 5, "--n-max", 6, "--json",
                           "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_theorems_timing_flag(capsys):
    code, out, _ = run(capsys, "verify-theorems", "--n-min", 4, "--n-max", 5, "--json", "--timing")
    data = json.loads(out)
    validate(data, "sweep_report.schema.json")
    assert "wall_time" in data["orders"]["5"]


def test_verify_theorems_external_stream(capsys):
    code, out, _ = run(capsys, "verify-theorems", "--input", DATA / "cubic14.g6", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["orders"]["14"]["graphs_total"] == 40


def test_verify_theorems_bad_stream(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_bytes(b"C~\nC~~\n")
    code, _, err = run(capsys, "verify-theorems", "--input", f)
    assert code == 2 and "offset 2" in err
    code, _, _ = run(capsys, "verify-theorems", "--input", tmp_path / "missing.g6")
    assert code == 2


def test_verify_theorems_failures_exit_5(monkeypatch, capsys):
    from egcert import enumeration
    from egcert.witness import ExtractionTrace, WitnessKind

    monkeypatch.setattr(enumeration, "p5_witness",
                        lambda g: (Witness(WitnessKind.CYCLE4, (0, 1, 2, 3)), ExtractionTrace()))
    code, _, err = run(capsys, "verify-theorems", "--input", DATA / "petersen.g6")
    assert code == 5
    assert "IheA@GUAo" in err


@pytest.mark.parametrize("argv", [["--help"], ["check", "--help"]])
def test_help(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 0


def test_module_entry_point_and_stdin():
    proc = subprocess.run([sys.executable, "-m", "egcert", "check", "-", "--json"],
                          input="C~\n", capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kappa"] == "complete"
