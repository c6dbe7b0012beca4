"""CLI behavior: formats, flags, exit codes, determinism."""

import json
import subprocess
import sys


from trimatch.cli import main

TRIPLE = "p hyp 3 3 3\ne 0 1 2\ne 0 1 2\ne 0 1 2\n"
TWO_TRIPLES = (
    "p hyp 6 6 3\n"
    + "e 0 1 2\n" * 3
    + "e 3 4 5\n" * 3
)
QUADS = "p hyp 5 5 4\n" + "".join(
    f"e {' '.join(str(v) for v in range(5) if v != skip)}\n" for skip in range(4, -1, -1)
)
K33 = "p bip 3 3 9\n" + "".join(f"e {a} {b}\n" for a in range(3) for b in range(3))


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_triple(tmp_path, capsys):
    f = write(tmp_path, "t.hyp", TRIPLE)
    code, out, _ = run(capsys, "solve", f)
    assert code == 0
    assert out == "triangle 0 1 2\n"


def test_solve_json_schema(tmp_path, capsys):
    f = write(tmp_path, "t.hyp", TRIPLE)
    code, out, _ = run(capsys, "solve", f, "--json")
    assert code == 0
    obj = json.loads(out)
    assert list(obj.keys()) == ["kind", "triangle", "pairs", "keep"]
    assert obj["triangle"] == [0, 1, 2] and obj["pairs"] == [] and obj["keep"] is None


def test_solve_disconnected_needs_components(tmp_path, capsys):
    f = write(tmp_path, "two.hyp", TWO_TRIPLES)
    code, _, err = run(capsys, "solve", f)
    assert code == 2
    assert "Disconnected" in err
    code, out, _ = run(capsys, "solve", f, "--components")
    assert code == 0
    assert out == "triangle 0 1 2\ntriangle 3 4 5\n"


def test_solve_components_json(tmp_path, capsys):
    f = write(tmp_path, "two.hyp", TWO_TRIPLES)
    code, out, _ = run(capsys, "solve", f, "--components", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "components"
    assert [c["triangle"] for c in obj["components"]] == [[0, 1, 2], [3, 4, 5]]


def test_solve_components_k4(tmp_path, capsys):
    two_quads = "p hyp 8 8 4\n" + "e 0 1 2 3\n" * 4 + "e 4 5 6 7\n" * 4
    f = write(tmp_path, "q2.hyp", two_quads)
    code, _, err = run(capsys, "solve", f, "--k", "4")
    assert code == 2 and "Disconnected" in err
    code, out, _ = run(capsys, "solve", f, "--k", "4", "--components")
    assert code == 0
    assert all(line.startswith("pair") for line in out.splitlines())
    assert len(out.splitlines()) == 4


def test_solve_k4_instance(tmp_path, capsys):
    f = write(tmp_path, "q.hyp", QUADS)
    code, out, _ = run(capsys, "solve", f, "--k", "4")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for ln in lines if ln.startswith("triangle")) == 1
    assert sum(1 for ln in lines if ln.startswith("pair")) == 1


def test_solve_k_mismatch(tmp_path, capsys):
    f = write(tmp_path, "q.hyp", QUADS)
    code, _, err = run(capsys, "solve", f)
    assert code == 2
    assert "k=4" in err


def test_solve_then_verify_round_trip(tmp_path, capsys):
    instance = write(tmp_path, "i.hyp", TRIPLE)
    code, out, _ = run(capsys, "solve", instance)
    cert = write(tmp_path, "i.cert", out)
    code, out, _ = run(capsys, "verify", instance, cert)
    assert code == 0
    assert out.strip() == "OK"


def test_verify_tampered_certificate(tmp_path, capsys):
    instance = write(tmp_path, "i.hyp", TWO_TRIPLES)
    code, out, _ = run(capsys, "solve", instance, "--components")
    lines = out.splitlines()
    cert = write(tmp_path, "i.cert", "\n".join(lines[:-1]) + "\n")
    code, out, _ = run(capsys, "verify", instance, cert)
    assert code == 1
    assert "cover" in out


def test_verify_size_mismatch(tmp_path, capsys):
    instance = write(tmp_path, "i.hyp", TRIPLE)
    cert = write(tmp_path, "i.cert", "pair 0 9\ntriangle 0 1 2\n")
    code, _, err = run(capsys, "verify", instance, cert)
    assert code == 2


def test_gen_triple(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--n", "3")
    assert code == 0
    assert out == TRIPLE


def test_gen_determinism(capsys):
    code, out1, _ = run(capsys, "gen", "--n", "7", "--seed", "42")
    code, out2, _ = run(capsys, "gen", "--n", "7", "--seed", "42")
    assert out1 == out2


def test_gen_bip_k33(capsys):
    code, out, _ = run(capsys, "gen", "--bip", "--n", "3", "--k", "3")
    assert code == 0
    assert out == K33


def test_lu_k33(tmp_path, capsys):
    f = write(tmp_path, "k33.bip", K33)
    code, out, _ = run(capsys, "lu", f, "--k", "3")
    assert code == 0
    assert out == "keep 0 0\nkeep 0 1\nkeep 0 2\n"
    cert = write(tmp_path, "k33.keep", out)
    code, out, _ = run(capsys, "verify", "--lu", f, cert)
    assert code == 0


def test_lu_fano_incidence(tmp_path, capsys, fano_incidence):
    from trimatch.formats import format_bipartite

    f = write(tmp_path, "fano.bip", format_bipartite(fano_incidence))
    code, out, _ = run(capsys, "lu", f, "--k", "3")
    assert code == 0
    assert len(out.splitlines()) == 7
    cert = write(tmp_path, "fano.keep", out)
    code, _, _ = run(capsys, "verify", "--lu", f, cert)
    assert code == 0


def test_lu_irregular_exit_2(tmp_path, capsys):
    f = write(tmp_path, "bad.bip", "p bip 2 2 3\ne 0 0\ne 0 1\ne 1 0\n")
    code, _, err = run(capsys, "lu", f)
    assert code == 2
    assert "NotRegular" in err


def test_oracle_agreement(tmp_path, capsys, fano):
    from trimatch.formats import format_hypergraph

    f = write(tmp_path, "fano.hyp", format_hypergraph(fano))
    code, out, _ = run(capsys, "oracle", f)
    assert code == 0
    assert "agreement: yes" in out


def test_oracle_on_random_13(tmp_path, capsys):
    from trimatch import random_triple_system
    from trimatch.formats import format_hypergraph

    h = random_triple_system(13, seed=5, require_connected=True)
    f = write(tmp_path, "r13.hyp", format_hypergraph(h))
    code, out, _ = run(capsys, "oracle", f)
    assert code == 0
    assert "agreement: yes" in out


def test_oracle_budget_exit_2(tmp_path, capsys):
    from trimatch import random_triple_system
    from trimatch.formats import format_hypergraph

    h = random_triple_system(17, seed=3, require_connected=True)
    f = write(tmp_path, "big.hyp", format_hypergraph(h))
    code, _, err = run(capsys, "oracle", f)
    assert code == 2
    assert "Budget" in err


def test_parse_error_exit_2(tmp_path, capsys):
    f = write(tmp_path, "junk.hyp", "p hyp 3 1 3\ne 0 x 2\n")
    code, _, err = run(capsys, "solve", f)
    assert code == 2
    assert "line 2" in err


def test_subprocess_byte_determinism(tmp_path):
    """Identical bytes across separate interpreter runs (fresh hash seeds)."""
    outs = set()
    for rep in range(3):
        r = subprocess.run(
            [sys.executable, "-m", "trimatch", "gen", "--n", "11", "--seed", "7",
             "--connected"],
            capture_output=True,
            check=True,
        )
        outs.add(r.stdout)
    assert len(outs) == 1
    instance = tmp_path / "i.hyp"
    instance.write_bytes(outs.pop())
    solved = set()
    for rep in range(3):
        r = subprocess.run(
            [sys.executable, "-m", "trimatch", "solve", str(instance)],
            capture_output=True,
            check=True,
        )
        solved.add(r.stdout)
    assert len(solved) == 1
