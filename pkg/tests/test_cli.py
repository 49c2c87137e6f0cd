import json
import os

import pytest

from specls.cli import main
from specls.graph6 import emit_graph6
from specls.families import t_n2q
from specls.reporting import ReportDocument, verdicts_to_csv
from specls.theorems import check_ls


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "Y:n=10,q=2", "--json")
    assert code == 0
    doc = json.loads(out)
    item = doc["items"][0]
    assert item["m"] == 27 and item["t"] == 10 and item["predictions_match"]


def test_construct_bad_spec(capsys):
    code, _, err = run(capsys, "construct", "Y:n=10,q=99")
    assert code == 2 and "error" in err


def test_spectral(capsys):
    code, out, _ = run(capsys, "spectral", "--spec", "Turan:n=7,r=2")
    assert code == 0
    row = json.loads(out.splitlines()[0])
    assert row["lambda_lo"] <= 12 ** 0.5 <= row["lambda_hi"]
    assert set(row) >= {"lambda_lo", "lambda_hi", "residual", "converged"}


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--spec", "Kab+:a=6,b=4", "--tau3", "--epsilon")
    assert code == 0
    row = json.loads(out.splitlines()[0])
    assert row["t"] == 4 and row["tau3"] == 1 and row["epsilon"] == 1


def test_verify_ok_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "LS", "--spec", "T:n=10,q=3", "--q", "3", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("theorem_id,n,params,hypothesis,conclusion")
    assert lines[1].startswith("LS,10,")


def test_verify_indeterminate_exit(capsys):
    # heuristic-only epsilon makes the supersaturation check indeterminate
    code, out, _ = run(
        capsys, "verify", "FAR_BIP_SUPERSAT", "--spec", "Turan:n=40,r=2",
        "--exact-limit", "10",
    )
    assert code == 3


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "LS", "--n", "5", "--exhaustive", "--json")
    assert code == 0
    doc = json.loads(out)
    rep = doc["items"][0]
    assert rep["graphs_examined"] > 0 and not rep["counterexamples"]


def test_verify_bad_file(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("thisisnotgraph6!!!\n")
    code, _, err = run(capsys, "verify", "BN_INEQ", "--input", str(p))
    assert code == 2


def test_verify_graph6_input(capsys, tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(emit_graph6(t_n2q(10, 3).graph) + "\n")
    code, out, _ = run(capsys, "verify", "LS", "--input", str(p), "--q", "3", "--json")
    assert code == 0


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--min-edges", "7")
    assert code == 0
    row = json.loads(out.splitlines()[0])
    assert row["visited"] == row["closed_form"] == 176


def test_search_random(capsys):
    code, out, _ = run(
        capsys, "search", "--target", "SPEC_LS_Y", "--mode", "random",
        "--n", "20", "--q", "1", "--samples", "30", "--perturbations", "10",
        "--seed", "3", "--json",
    )
    assert code in (0, 3)
    doc = json.loads(out)
    assert doc["items"][0]["graphs_examined"] == 40


def test_search_job_file(capsys, tmp_path):
    p = tmp_path / "job.json"
    p.write_text(json.dumps({
        "target": "BN", "mode": "exhaustive", "grid": {"n": [4]},
    }))
    code, out, _ = run(capsys, "search", "--job", str(p), "--json")
    assert code == 0


def test_ratio_scan_cli(capsys):
    code, out, _ = run(capsys, "ratio-scan", "--families", "Turan:r=3",
                       "--n-grid", "30:60:30", "--json")
    assert code == 0
    doc = json.loads(out)
    curve = doc["items"][0]["ratio_curve"]
    assert len(curve) == 2 and all(r["C_exact"] == "2/9" for r in curve)


def test_family_root(capsys):
    code, out, _ = run(capsys, "family-root", "Y_even", "--n", "6")
    assert code == 0
    row = json.loads(out.splitlines()[0])
    assert abs(row["lo"] - 3.392344345629) < 1e-6


def test_usage_errors(capsys):
    assert main(["nope"]) == 2
    assert main([]) == 2
    assert main(["verify"]) == 2
    code, _, err = run(capsys, "verify", "LS", "--exhaustive")  # missing --n
    assert code == 2


def test_workers_env_default(capsys, monkeypatch):
    monkeypatch.setenv("SPECLS_WORKERS", "2")
    code, out, _ = run(capsys, "verify", "LS", "--n", "4", "--exhaustive", "--json")
    assert code == 0


def test_report_document_round_trip():
    doc = ReportDocument(command=["verify", "LS"])
    doc.add("verdict", {"x": 1})
    doc.provenance = {"seed": 0}
    text = doc.to_json()
    doc2 = ReportDocument.from_json(text)
    assert doc2.to_json() == text


def test_csv_schema_golden():
    v = check_ls(t_n2q(10, 3).graph, 3)
    csv_text = verdicts_to_csv([v])
    assert csv_text.splitlines()[0] == (
        "theorem_id,n,params,hypothesis,conclusion,margin_lo,margin_hi,witness_ref"
    )
    assert csv_text.splitlines()[1] == 'LS,10,"{""m"":28,""q"":3}",true,true,0,0,'


def test_certificate_json_schema_golden(capsys):
    code, out, _ = run(capsys, "spectral", "--spec", "Turan:n=4,r=2", "--json")
    doc = json.loads(out)
    cert = doc["items"][0]
    assert sorted(cert) == ["converged", "graph", "kind", "lambda_hi", "lambda_lo", "residual"]


def test_verify_embed_order_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "EMBED_ORDER", "--n", "30", "--q", "4")
    assert code == 0
    # the q=3 chain is certified violated: machine-checkable exit 1
    code, out, _ = run(capsys, "verify", "EMBED_ORDER", "--n", "30", "--q", "3")
    assert code == 1


def test_verify_bn_alias(capsys):
    code, _, _ = run(capsys, "verify", "BN", "--g6", "C~")
    assert code == 0


def test_count_edges_input(capsys):
    code, out, _ = run(capsys, "count", "--edges", "0-1,1-2,0-2", "--n", "3")
    assert code == 0
    assert json.loads(out.splitlines()[0])["t"] == 1


def test_golden_verdict_schema(tmp_path):
    from pathlib import Path

    from specls.reporting import canonical_json
    from specls.families import t_n2q, turan
    from specls.spectral import perron_enclosure

    golden = Path(__file__).parent / "golden"
    v = check_ls(t_n2q(10, 3).graph, 3)
    assert canonical_json(v.to_jsonable()) + "\n" == (golden / "verdict_ls.json").read_text()
    c = perron_enclosure(turan(4, 2).graph, 1e-9)
    assert canonical_json(c.to_jsonable()) + "\n" == (
        golden / "certificate_k22.json"
    ).read_text()


def test_full_scan_ceiling(tmp_path):
    from specls.search import SearchJob, run_exhaustive

    job = SearchJob("BN", "exhaustive", {"n": [8]}, ceiling=10**6)
    with pytest.raises(ValueError):
        run_exhaustive(job)
