import pytest

from padovan_codec.cli import main

EXAMPLE1_BYTES = b"PADOVANC v1 m=1\n2208,11,8,15,15,3,4,15,4\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_bytes(data if isinstance(data, bytes) else data.encode())
        return path
    return _write


def test_encode_decode_roundtrip(tmp_path, write):
    src = write("msg.txt", "HELLO ALA\n")
    coded, out = tmp_path / "msg.pc", tmp_path / "out.txt"
    assert main(["encode", "--input", str(src), "--output", str(coded)]) == 0
    assert coded.read_bytes().startswith(b"PADOVANC v1 m=1\n")
    assert main(["decode", "--input", str(coded), "--output", str(out)]) == 0
    assert out.read_text() == "HELLO ALA\n"


def test_encode_is_deterministic(tmp_path, write):
    src = write("msg.txt", "the quick brown fox\njumps over the lazy dog\n")
    a, b = tmp_path / "a.pc", tmp_path / "b.pc"
    assert main(["encode", "--input", str(src), "--output", str(a)]) == 0
    assert main(["encode", "--input", str(src), "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    out = tmp_path / "out.txt"
    assert main(["decode", "--input", str(a), "--output", str(out)]) == 0
    assert out.read_text() == "THE QUICK BROWN FOX JUMPS OVER THE LAZY DOG\n"


def test_inspect_example1(write, capsys):
    path = write("ex1.pc", EXAMPLE1_BYTES)
    assert main(["inspect", "--input", str(path)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "m=1"
    assert out[1] == "n=4"
    assert out[2] == "row 1: d=2208 minor22=-16 ok"


def test_decode_tampered_exits_2(tmp_path, write, capsys):
    # first disclosed entry 11 -> 12: the centre equation has no integer root
    path = write("bad.pc", b"PADOVANC v1 m=1\n2208,12,8,15,15,3,4,15,4\n")
    out = tmp_path / "out.txt"
    assert main(["decode", "--input", str(path), "--output", str(out)]) == 2
    assert "corrupt" in capsys.readouterr().err
    assert not out.exists()


def test_decode_out_of_range_center_exits_2(tmp_path, write):
    path = write("bad.pc", b"PADOVANC v1 m=1\n2208,11,8,15,15,3,3,15,4\n")
    assert main(["decode", "--input", str(path), "--output", str(tmp_path / "o")]) == 2


@pytest.mark.parametrize("data", [
    b"garbage\n",
    b"PADOVANC v1 m=2\n2208,11,8,15,15,3,4,15,4\n",
    b"PADOVANC v1 m=1\n2208,30,8,15,15,3,4,15,4\n",
])
def test_decode_malformed_exits_1(tmp_path, write, capsys, data):
    path = write("bad.pc", data)
    assert main(["decode", "--input", str(path), "--output", str(tmp_path / "o")]) == 1
    assert capsys.readouterr().err.startswith("error:")


@pytest.mark.parametrize("text", ["HELLO  ALA", "HELLO ALA 2", "", "\n"])
def test_encode_bad_text_exits_1(tmp_path, write, text):
    src = write("msg.txt", text)
    assert main(["encode", "--input", str(src), "--output", str(tmp_path / "o")]) == 1


def test_encode_non_utf8_exits_1(tmp_path, write):
    src = write("msg.txt", b"\xff\xfe")
    assert main(["encode", "--input", str(src), "--output", str(tmp_path / "o")]) == 1


def test_missing_file_exits_1(tmp_path, capsys):
    assert main(["inspect", "--input", str(tmp_path / "nope")]) == 1
    assert capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["encode"], ["inspect", "--bogus", "x"]])
def test_usage_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err
