import json

import pytest

from skewrank import catalog
from skewrank.cli import main
from skewrank.skew import SkewPolyMatrix


def write_matrix(tmp_path, name):
    path = tmp_path / ("%s.json" % name)
    path.write_text(catalog.get(name).matrix.dumps())
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_certify_exit_codes(tmp_path, capsys):
    code, out = run(capsys, ["certify", write_matrix(tmp_path, "M8")])
    assert code == 0
    data = json.loads(out)
    assert data["generic_rank"] == 6 and data["constant"] is True
    assert data["method"] == "binary-gcd"

    split = SkewPolyMatrix(4, ("a", "b"), {(0, 1): "a", (2, 3): "b"})
    p = tmp_path / "split.json"
    p.write_text(split.dumps())
    code, out = run(capsys, ["certify", str(p)])
    assert code == 3
    assert json.loads(out)["witness"] == ["0", "1"]

    code, out = run(capsys, ["certify", "--sampled", "25", str(p)])
    assert code == 3            # the probe finds a drop on this input
    code, out = run(capsys, ["certify", "--sampled", "25",
                             write_matrix(tmp_path, "M7")])
    assert code == 4            # sampling never certifies
    assert json.loads(out)["constant"] is None


def test_classify_and_canonical(tmp_path, capsys):
    code, out = run(capsys, ["classify", write_matrix(tmp_path, "M8")])
    assert code == 0
    assert json.loads(out) == {"rank": 6, "partition": [2, 1], "padding": 0}
    code, out = run(capsys, ["canonical", "2,1"])
    assert code == 0
    assert SkewPolyMatrix.from_json(json.loads(out)) == catalog.get("M8").matrix


def test_orbit_dim(tmp_path, capsys):
    code, out = run(capsys, ["orbit-dim", write_matrix(tmp_path, "M7")])
    assert code == 0
    data = json.loads(out)
    assert data["tangent_rank"] == 39 and data["orbit_dim"] == 38
    code, out = run(capsys, ["--seed", "3", "orbit-dim", "--exact",
                             write_matrix(tmp_path, "M7")])
    assert code == 0
    assert json.loads(out)["seed"] == 3


def test_project(tmp_path, capsys):
    tri = catalog.get("triangle3").matrix
    nine = tri.direct_sum(tri).direct_sum(tri)
    p = tmp_path / "nine.json"
    p.write_text(nine.dumps())
    code, out = run(capsys, ["project", str(p),
                             "--center", "1,0,0,0,1,0,0,0,1"])
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is True
    assert SkewPolyMatrix.from_json(data["result"]) == catalog.get("pi6").matrix

    A = catalog.get("pi2").matrix
    C = A.evaluate_at((1, 0, 0))
    col = next([C[i][j] for i in range(8)] for j in range(8)
               if any(C[i][j] for i in range(8)))
    p2 = tmp_path / "pi2.json"
    p2.write_text(A.dumps())
    code, out = run(capsys, ["project", str(p2),
                             "--center", ",".join(str(x) for x in col)])
    assert code == 3
    assert json.loads(out)["valid"] is False


def test_gauss_and_fingerprint(tmp_path, capsys):
    code, out = run(capsys, ["gauss", write_matrix(tmp_path, "M8")])
    assert code == 0
    data = json.loads(out)
    assert data["span_dim"] == 4 and len(data["coordinates"]) == 28
    code, out = run(capsys, ["fingerprint", "--budget", "25",
                             write_matrix(tmp_path, "pi2")])
    assert code == 0
    data = json.loads(out)
    assert data["c2"] == 2 and data["generic_splitting"] == [2, 1]


def test_catalog_listing(capsys):
    code, out = run(capsys, ["catalog"])
    assert code == 0
    names = {e["name"] for e in json.loads(out)}
    assert {"M7", "pi6", "westwick"} <= names
    code, out = run(capsys, ["catalog", "westwick", "--matrix"])
    assert code == 0
    assert SkewPolyMatrix.from_json(json.loads(out)).order == 10
    code, out = run(capsys, ["catalog", "pi5"])
    data = json.loads(out)
    assert data["expected"]["c2"] == 4


def test_reproduce_subset(capsys):
    code, out = run(capsys, ["reproduce", "--name", "M7", "--name", "rank4_6x6",
                             "--table"])
    assert code == 0
    assert "0 failures" in out


def test_ideal_commands(tmp_path, capsys):
    ideal = {"vars": ["a", "b", "c"], "generators": ["a", "b", "c"]}
    p = tmp_path / "ideal.json"
    p.write_text(json.dumps(ideal))
    code, out = run(capsys, ["ideal-empty", str(p)])
    assert code == 0 and json.loads(out)["empty"] is True

    p2 = tmp_path / "pts.json"
    p2.write_text(json.dumps({"vars": ["a", "b", "c"],
                              "generators": ["a^2", "b"]}))
    code, out = run(capsys, ["ideal-degree", str(p2)])
    assert code == 0 and json.loads(out)["degree"] == 2

    p3 = tmp_path / "conic.json"
    p3.write_text(json.dumps({"vars": ["a", "b", "c"],
                              "generators": ["a*c - b^2"]}))
    code, out = run(capsys, ["ideal-degree", str(p3)])
    assert code == 4            # wrong dimension reported as unknown
    code, out = run(capsys, ["ideal-degree", "--proj-dim", "1", str(p3)])
    assert code == 0 and json.loads(out)["degree"] == 2


def test_usage_errors(tmp_path, capsys):
    assert main(["classify", str(tmp_path / "missing.json")]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
