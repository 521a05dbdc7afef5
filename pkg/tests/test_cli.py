import json

import jsonschema
import pytest

from homcx.cli import main
from homcx.graph import counterexample_g9, serialize

COMPONENT_SCHEMA = {
    "type": "object",
    "required": ["components", "sizes"],
    "properties": {
        "components": {"type": "integer"},
        "sizes": {"type": "array", "items": {"type": "integer"}},
    },
}
HOMOLOGY_SCHEMA = {
    "type": "object",
    "required": ["cells", "euler", "betti_gf2"],
    "properties": {
        "cells": {"type": "array", "items": {"type": "integer"}},
        "euler": {"type": "integer"},
        "betti_gf2": {"type": "array", "items": {"type": "integer"}},
    },
}
PAPER_SCHEMA = {
    "type": "object",
    "required": ["chi", "total", "signatures", "per_signature", "squares_ok",
                 "certificates_ok", "components", "pass"],
    "properties": {
        "chi": {"type": "integer"},
        "total": {"type": "integer"},
        "signatures": {"type": "integer"},
        "per_signature": {
            "type": "object",
            "required": ["s", "t", "h", "v"],
            "properties": {k: {"type": "integer"} for k in "sthv"},
        },
        "squares_ok": {"type": "boolean"},
        "certificates_ok": {"type": "boolean"},
        "components": {"type": "integer"},
        "pass": {"type": "boolean"},
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "family, chi", [("counterexample_g9", 5), ("complete:4", 4), ("kneser:5,2", 3)]
)
def test_chi(capsys, family, chi):
    code, out, _ = run(capsys, "chi", "--family", family)
    assert code == 0 and out.splitlines()[0] == f"chi: {chi}"


def test_chi_json_matches_text(capsys):
    _, text, _ = run(capsys, "chi", "--family", "counterexample_g9")
    _, js, _ = run(capsys, "chi", "--family", "counterexample_g9", "--format", "json")
    d = json.loads(js)
    assert text == f"chi: {d['chi']}\nwitness: {' '.join(map(str, d['witness']))}\nclique: {' '.join(map(str, d['clique']))}\n"


def test_hom_count(capsys):
    code, out, _ = run(capsys, "hom", "count", "--g", "family:counterexample_g9", "--h", "family:complete:5")
    assert code == 0 and out == "4080\n"


def test_hom_list(capsys):
    code, out, _ = run(capsys, "hom", "list", "--g", "family:complete:2", "--h", "family:complete:3")
    assert out.splitlines() == ["1 2", "1 3", "2 1", "2 3", "3 1", "3 2"]


def test_flip_components(capsys):
    code, out, _ = run(capsys, "flip", "components", "--g", "family:complete:2", "--h", "family:complete:2")
    assert code == 0 and out.splitlines()[0] == "components: 2"
    _, js, _ = run(capsys, "flip", "components", "--g", "family:complete:2", "--h", "family:complete:2", "--format", "json")
    d = json.loads(js)
    jsonschema.validate(d, COMPONENT_SCHEMA)
    assert d == {"components": 2, "sizes": [1, 1]}


def test_flip_path(capsys):
    code, out, _ = run(capsys, "flip", "path", "--g", "family:complete:2", "--h", "family:complete:3",
                       "--from", "1 2", "--to", "2 1")
    assert code == 0 and out.splitlines() == ["1 2", "1 3", "2 3", "2 1"]
    code, out, _ = run(capsys, "flip", "path", "--g", "family:complete:2", "--h", "family:complete:2",
                       "--from", "1 2", "--to", "2 1")
    assert code == 0 and out == "no path\n"


def test_flip_path_rejects_non_member(capsys):
    code, _, err = run(capsys, "flip", "path", "--g", "family:complete:2", "--h", "family:complete:3",
                       "--from", "1 1", "--to", "2 1")
    assert code == 2 and "not a homomorphism" in err


def test_flip_export(capsys, tmp_path):
    out_file = tmp_path / "flip.dot"
    code, out, _ = run(capsys, "flip", "export", "--g", "family:complete:2", "--h", "family:complete:3",
                       "-o", str(out_file))
    assert code == 0 and out == ""
    assert out_file.read_text().count(" -- ") == 6


def test_complex_homology(capsys):
    code, out, _ = run(capsys, "complex", "homology", "--g", "family:complete:2", "--h", "family:complete:4")
    assert code == 0
    assert "betti_gf2 (homological evidence): 1 0 1" in out
    _, js, _ = run(capsys, "complex", "homology", "--g", "family:complete:2", "--h", "family:complete:4",
                   "--format", "json")
    d = json.loads(js)
    jsonschema.validate(d, HOMOLOGY_SCHEMA)
    assert d == {"cells": [12, 24, 14], "euler": 2, "betti_gf2": [1, 0, 1]}


def test_complex_cells(capsys):
    code, out, _ = run(capsys, "complex", "cells", "--g", "family:complete:2", "--h", "family:complete:3")
    assert out == "dim 0: 6\ndim 1: 6\ntotal: 12\neuler: 0\n"
    code, out, _ = run(capsys, "complex", "cells", "--g", "family:complete:2", "--h", "family:complete:4",
                       "--max-dim", "1", "--format", "json")
    assert json.loads(out) == {"cells": [12, 24]}


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper", "--format", "json")
    d = json.loads(out)
    jsonschema.validate(d, PAPER_SCHEMA)
    assert code == 0 and d["pass"] and d["total"] == 4080 and d["components"] == 1


def test_verify_paper_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify-paper", "--g", "family:complete:5")
    assert code == 1 and "verdict: FAIL" in out


def test_graph_file_source(capsys, tmp_path):
    f = tmp_path / "g9.col"
    f.write_text(serialize(counterexample_g9()))
    code, out, _ = run(capsys, "hom", "count", "--g", str(f), "--h", "family:complete:5")
    assert out == "4080\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["hom", "count", "--g", "family:nope", "--h", "family:complete:2"],
        ["hom", "count", "--g", "family:complete:x", "--h", "family:complete:2"],
        ["hom", "count", "--g", "/no/such/file", "--h", "family:complete:2"],
        ["chi"],
        ["chi", "--family", "complete:3", "--threads", "0"],
        ["complex", "homology", "--g", "family:complete:2", "--h", "family:complete:3", "--max-dim", "1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("homcx:")


def test_parse_error_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.col"
    f.write_text("p edge 2 1\ne 1 1\n")
    code, _, err = run(capsys, "chi", "--g", str(f))
    assert code == 2 and "line 2" in err


def test_argparse_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hom", "bogus"])
    assert exc.value.code == 2


def test_cap_exit_3(capsys):
    code, _, err = run(capsys, "hom", "count", "--g", "family:path:6", "--h", "family:complete:6",
                       "--max-colorings", "10")
    assert code == 3 and "cap" in err
    code, _, _ = run(capsys, "complex", "cells", "--g", "family:complete:2", "--h", "family:complete:5",
                     "--max-cells", "5")
    assert code == 3
