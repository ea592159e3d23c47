import json

import numpy as np
import pytest

import latgraph


def test_petersen_lattices():
    report = latgraph.graph_lattice("petersen")
    names = {str(r["eigenvalue"]): r["lattice"]["names"] for r in report["records"]}
    assert names["-2"] == ["A4_dual"]
    assert names["1"] == ["A5^2"]


def test_single_eigenvalue_and_parse_error():
    report = latgraph.graph_lattice("complement(schlafli)", eigenvalue=-5)
    assert len(report["records"]) == 1
    assert report["records"][0]["lattice"]["names"] == ["E6_dual"]
    assert latgraph.normalize(" cartesian( complete(3) , cycle(4) ) ") == "cartesian(complete(3),cycle(4))"
    with pytest.raises(latgraph.ParseError):
        latgraph.normalize("petersn")
    with pytest.raises(ValueError):
        latgraph.graph_lattice("petersen", eigenvalue=2)


def test_tables():
    rows = latgraph.table2(5)
    assert all(r["ok"] for r in rows)
    assert len(latgraph.table1()) == 14


def test_simplex_frame():
    report = json.loads(latgraph.frame_report(latgraph.simplex_etf_csv(3)))
    assert report["rational"]
    assert report["lattice"]["names"] == ["A3_dual"]


def test_identify_gram():
    gram = "2\n2 -1\n-1 2\n"
    # A2 and its dual are similar
    assert latgraph.identify_gram(gram)["names"] == ["A2", "A2_dual"]


def test_steiner_etf_meets_welch_bound():
    a = latgraph.steiner_etf(7)
    assert a.shape == (7, 28)
    assert np.allclose(a @ a.T, (28 / 7) * np.eye(7))
    assert latgraph.mutual_coherence(a) == pytest.approx(latgraph.welch_bound(7, 28), abs=1e-9)


def test_cs_experiment_csv():
    csv = latgraph.cs_experiment(7, [1, 2], trials=20, noise=0.1, seed=1)
    lines = csv.strip().splitlines()
    assert lines[0] == "sparsity,method,success_rate,mean_error"
    assert len(lines) == 1 + 2 * 4
    assert csv == latgraph.cs_experiment(7, [1, 2], trials=20, noise=0.1, seed=1)
