import numpy as np
import pytest

from lzbg.cli import EXIT_ARGS, EXIT_IO, EXIT_OK, main
from lzbg.oracles import naive_phi, naive_suffix_array

PAPER = b"abaabababaaaaabbabab"


@pytest.fixture
def paper_file(tmp_path):
    p = tmp_path / "paper.txt"
    p.write_bytes(PAPER)
    return p


def test_factorize_decode_round_trip(tmp_path, paper_file, capsys):
    out = tmp_path / "paper.lz"
    back = tmp_path / "paper.out"
    assert main(["factorize", "--algo", "bgone-t", "--input", str(paper_file),
                 "--output", str(out), "--stats"]) == EXIT_OK
    stats = capsys.readouterr().err.strip().split("\t")
    assert stats[0] == "20" and stats[1] == "8"  # n and factor count
    assert main(["decode", "--input", str(out), "--output", str(back)]) == EXIT_OK
    assert back.read_bytes() == PAPER


@pytest.mark.parametrize("algo", ["bgone-t", "bgone-sa", "bgtwo", "kkp3-ref"])
def test_all_algo_flags(tmp_path, paper_file, algo):
    out = tmp_path / f"{algo}.lz"
    assert main(["factorize", "--algo", algo, "--input", str(paper_file),
                 "--output", str(out)]) == EXIT_OK
    streams = {p.read_bytes() for p in tmp_path.glob("*.lz")}
    assert len(streams) == 1  # identical output across variants


def test_verify_ok(paper_file):
    assert main(["verify", "--input", str(paper_file)]) == EXIT_OK


def test_verify_empty_file(tmp_path):
    p = tmp_path / "empty.bin"
    p.write_bytes(b"")
    assert main(["verify", "--input", str(p)]) == EXIT_OK


def test_missing_input_is_io_error(tmp_path):
    assert main(["verify", "--input", str(tmp_path / "nope.bin")]) == EXIT_IO


def test_bad_stream_is_io_error(tmp_path):
    p = tmp_path / "junk.lz"
    p.write_bytes(b"NOTALZBGSTREAM")
    assert main(["decode", "--input", str(p),
                 "--output", str(tmp_path / "o")]) == EXIT_IO


def test_invalid_args(paper_file):
    assert main(["factorize", "--algo", "zipzap", "--input", str(paper_file),
                 "--output", "x"]) == EXIT_ARGS
    assert main(["bench", "--manifest", "m", "--algos", "wat"]) == EXIT_ARGS


def test_dump_sa(paper_file, capsys):
    assert main(["dump", "--array", "sa", "--input", str(paper_file)]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    got = [int(line.split("\t")[1]) for line in lines]
    assert got == naive_suffix_array(PAPER)
    assert lines[0].split("\t")[0] == "1"


def test_dump_phi(paper_file, capsys):
    assert main(["dump", "--array", "phi", "--input", str(paper_file)]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    got = [int(line.split("\t")[1]) for line in lines]
    assert got == naive_phi(PAPER)


def test_dump_nsv(paper_file, capsys):
    from lzbg.oracles import naive_psv_nsv

    assert main(["dump", "--array", "nsv", "--input", str(paper_file)]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    got = [int(line.split("\t")[1]) for line in lines]
    assert got == naive_psv_nsv(PAPER)[1][1:]


def test_dump_lpf(paper_file, capsys):
    assert main(["dump", "--array", "lpf", "--input", str(paper_file)]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    lpf = {int(a): int(b) for a, b in (line.split("\t") for line in lines)}
    assert lpf[11] == 4  # the worked-example value
    assert lpf[1] == 0


def test_bench_runs_and_reports(tmp_path, paper_file, capsys):
    manifest = tmp_path / "manifest.tsv"
    manifest.write_text(f"paper\t{paper_file}\nmissing\t{tmp_path}/nope.bin\n")
    assert main(["bench", "--manifest", str(manifest)]) == EXIT_OK
    out = capsys.readouterr().out.strip().splitlines()
    header = out[0].split("\t")
    assert header[:4] == ["name", "algo", "n", "factors"]
    rows = [line.split("\t") for line in out[1:]]
    paper_rows = [r for r in rows if r[0] == "paper"]
    assert len(paper_rows) == 4
    counts = {r[1]: r[10] for r in paper_rows}
    assert counts["bgone_t"] == "1"
    assert counts["bgone_sa"] == "1"
    assert counts["bgtwo"] == "2"
    assert counts["kkp3_ref"] == "3"
    assert all(r[3] == "8" for r in paper_rows)
    missing = [r for r in rows if r[0] == "missing"]
    assert len(missing) == 4 and all(r[2] == "failed" for r in missing)


def test_corpus_urls(capsys):
    assert main(["corpus-urls"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "pizzachili" in out


def test_bench_rows_deterministic_apart_from_timing():
    from lzbg.bench import run_one

    a = run_one("x", PAPER * 20, "bgone_t").tsv().split("\t")
    b = run_one("x", PAPER * 20, "bgone_t").tsv().split("\t")
    timing = {4, 5, 6, 7, 8}  # the t_*_ms columns
    for idx, (va, vb) in enumerate(zip(a, b)):
        if idx not in timing:
            assert va == vb
