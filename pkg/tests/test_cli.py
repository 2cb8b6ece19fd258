import io
import subprocess
import sys

import pytest

from hgo.cli import main
from hgo.generate import generate_orbits
from hgo.store import loads

from conftest import SAMPLE6


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(map(str, argv)), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    ex1 = "n 6 directed 0\n" + "".join(
        f"e {i} {j} 1\n" for i in range(6) for j in range(i) if SAMPLE6[i][j])
    return {
        "ex1": write("ex1.txt", "# six-vertex sample\n" + ex1),
        "k3": write("k3.txt", "n 3 directed 0\ne 0 1 1\ne 1 2 1\ne 0 2 1\n"),
        "p4": write("p4.txt", "n 4 directed 0\ne 0 1 1\ne 1 2 1\ne 2 3 1\n"),
        "empty3": write("empty3.txt", "n 3 directed 0\n"),
        "colored": write("colored.txt", "n 3 directed 0\nv 1 2\ne 0 1 1\n"),
        "garbage": write("garbage.txt", "n 3 directed 0\nx 1 2\n"),
        "loop": write("loop.txt", "n 3 directed 0\ne 1 1 1\n"),
        "asym": write("asym.txt", "n 3 directed 0\ne 0 1 1\ne 1 0 2\n"),
        "cache": tmp_path / "cache",
    }


def test_canonical(files):
    assert run("canonical", files["ex1"])[1] == "0,0,0,0,0,0,0,0,1,0,0,1,0,0,0,1,0,1,1,1,0\n"
    assert run("canonical", files["ex1"], "--ref", 4)[1] == \
        "0,0,0,0,0,0,0,0,1,0,1,0,0,0,0,1,1,1,1,0,0\n"
    assert run("canonical", files["empty3"])[1] == "0,0,0,0,0,0\n"
    code, out, _ = run("canonical", files["ex1"], "--directed")
    assert code == 0 and len(out.strip().split(",")) == 36


def test_generate(files):
    code, out, err = run("generate", "-n", 4, "--vcolors", 1, "--ecolors", 1,
                         "--cache-dir", files["cache"].parent, "--time")
    assert code == 0
    assert len(loads(out)) == 11
    assert err.startswith("elapsed=")
    code, out, _ = run("generate", "-n", 4, "--orbits", "--connected", "--no-cache")
    assert loads(out) == generate_orbits(4, 1, 1, connected_only=True)
    code, out, _ = run("generate", "-n", 3, "--directed", "--no-cache")
    assert len(loads(out)) == 16


def test_generate_to_file(files, tmp_path):
    target = tmp_path / "out.cat"
    code, out, _ = run("generate", "-n", 3, "--vcolors", 2, "--no-cache", "--out", target)
    assert code == 0 and out == ""
    assert len(loads(target.read_text())) == 20


def test_generate_guard(files):
    code, _, err = run("generate", "-n", 6, "--no-cache")
    assert code == 4
    assert err.startswith("error: TYPE_TOO_LARGE:") and "--max-order" in err
    assert err.count("\n") == 1
    code, out, _ = run("generate", "-n", 6, "--no-cache", "--max-order", 6)
    assert code == 0 and len(loads(out)) == 156


def test_count(files):
    code, out, _ = run("count", files["k3"], "--ref", 0, "-k", 3, "--connected", "--no-cache")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[0].endswith(":1") and lines[1] == "total=1"
    code, out, _ = run("count", files["p4"], "--ref", 0, "-k", 3, "--connected", "--no-cache")
    assert out.splitlines()[-1] == "total=1" and len(out.splitlines()) == 2


def test_count_dense_and_graphlets(files):
    code, out, _ = run("count", files["p4"], "--ref", 0, "-k", 3, "--dense", "--no-cache")
    vec = out.splitlines()[0].split(",")
    assert len(vec) == 6 and sum(map(int, vec)) == 3
    code, out, _ = run("count", files["p4"], "-k", 3, "--graphlets", "--no-cache")
    assert sorted(line.split(":")[1] for line in out.splitlines()[:-1]) == ["2", "2"]


@pytest.mark.parametrize("argv, status, code", [
    (["count", "{colored}", "--ref", 0, "-k", 2], 3, "COLOR_OUT_OF_BOUNDS"),
    (["count", "{p4}", "--ref", 9, "-k", 2], 6, "VERTEX_OUT_OF_RANGE"),
    (["count", "{p4}", "--ref", 0, "-k", 5], 7, "K_EXCEEDS_ORDER"),
    (["count", "{p4}", "-k", 2], 2, "PARSE_ERROR"),
    (["canonical", "{garbage}"], 2, "PARSE_ERROR"),
    (["canonical", "{missing}"], 2, "PARSE_ERROR"),
    (["canonical", "{loop}"], 3, "SELF_LOOP"),
    (["canonical", "{asym}"], 3, "ASYMMETRIC_UNDIRECTED_EDGE"),
])
def test_error_paths(files, tmp_path, argv, status, code):
    paths = {k: v for k, v in files.items()}
    paths["missing"] = tmp_path / "missing.txt"
    argv = [str(a).format(**paths) for a in argv] + ["--no-cache"] * (argv[0] == "count")
    rc, out, err = run(*argv)
    assert rc == status
    assert err.startswith(f"error: {code}:") and err.count("\n") == 1


def test_corrupt_cache_exit_status(files):
    cache = files["cache"]
    cache.mkdir()
    run("generate", "-n", 3, "--cache-dir", cache)
    victim = cache / "u_g_n3_v1_e1_all.cat"
    victim.write_text(victim.read_text()[:-5])
    rc, _, err = run("generate", "-n", 3, "--cache-dir", cache)
    assert rc == 5 and err.startswith("error: CORRUPT_CATALOG:")


def test_output_is_stable_across_cache_states(files):
    argv = ["count", files["p4"], "--ref", 1, "-k", 3, "--vcolors", 2, "--cache-dir", files["cache"]]
    files["cache"].mkdir()
    cold = run(*argv)[1]
    warm = run(*argv)[1]
    assert cold == warm == run(*argv[:-2], "--no-cache")[1]


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "hgo", "canonical", str(files["empty3"])],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "0,0,0,0,0,0\n"
