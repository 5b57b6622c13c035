"""Text file formats and the command-line surface."""

import pytest

from finshift import cli, files
from finshift.errors import FormatError
from finshift.groups import cyclic
from finshift.patterns import BINARY
from finshift.shiftspace import enumerate_sft, full_shift


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


@pytest.fixture
def golden5(tmp_path):
    _write(tmp_path, "z5.grp", "group cyclic 5\n")
    return _write(
        tmp_path,
        "golden5.sft",
        "sft\ngroup z5.grp\nalphabet 0 1\nshape 0 1\nforbid 1 1\n",
    )


@pytest.fixture
def doubling_tower(tmp_path):
    _write(tmp_path, "z2.grp", "group cyclic 2\n")
    _write(tmp_path, "z4.grp", "group cyclic 4\n")
    _write(tmp_path, "z8.grp", "group cyclic 8\n")
    return _write(
        tmp_path,
        "tower.twr",
        "tower\n"
        "level z2.grp\nlevel z4.grp\nlevel z8.grp\n"
        "embed 0 pairs 0->0 1->2\n"
        "embed 1 pairs 0->0 1->2 2->4 3->6\n",
    )


def test_read_group_kinds(tmp_path):
    assert files.read_group(_write(tmp_path, "a.grp", "group cyclic 6")).order == 6
    _write(tmp_path, "b.grp", "group cyclic 2")
    g = files.read_group(
        _write(tmp_path, "c.grp", "group product a.grp b.grp")
    )
    assert g.order == 12
    g = files.read_group(
        _write(tmp_path, "d.grp", "group table 2\n0 1\n1 0\n")
    )
    assert g.order == 2


def test_read_group_errors(tmp_path):
    with pytest.raises(FormatError):
        files.read_group(_write(tmp_path, "e.grp", ""))
    with pytest.raises(FormatError, match=r"f\.grp:1:"):
        files.read_group(_write(tmp_path, "f.grp", "grp cyclic 2"))
    with pytest.raises(FormatError):
        files.read_group(_write(tmp_path, "g.grp", "group cyclic x"))
    with pytest.raises(FormatError):
        files.read_group(_write(tmp_path, "h.grp", "group table 3\n0 1\n"))


def test_read_tower(doubling_tower):
    t = files.read_tower(doubling_tower)
    assert [g.order for g in t.levels] == [2, 4, 8]
    assert t.embeddings == ((0, 2), (0, 2, 4, 6))


def test_read_tower_errors(tmp_path):
    _write(tmp_path, "z2.grp", "group cyclic 2")
    _write(tmp_path, "z4.grp", "group cyclic 4")
    with pytest.raises(FormatError):
        files.read_tower(
            _write(
                tmp_path,
                "bad.twr",
                "tower\nlevel z2.grp\nlevel z4.grp\nembed 0 pairs 0->0\n",
            )
        )
    with pytest.raises(FormatError):
        files.read_tower(_write(tmp_path, "bad2.twr", "not-a-tower\n"))


def test_read_sft(golden5):
    spec = files.read_sft(golden5)
    assert spec.group.order == 5
    assert spec.forbidden_shape == (0, 1)
    assert len(enumerate_sft(spec).configs) == 11


def test_read_sft_unsorted_shape(tmp_path):
    _write(tmp_path, "z4.grp", "group cyclic 4\n")
    path = _write(
        tmp_path,
        "s.sft",
        "sft\ngroup z4.grp\nalphabet 0 1\nshape 2 0\nforbid 1 0\n",
    )
    spec = files.read_sft(path)
    assert spec.forbidden_shape == (0, 2)
    # symbols are positional against the declared order: 1 at 2, 0 at 0
    (w,) = spec.forbidden
    assert w.as_dict() == {0: 0, 2: 1}


def test_read_sft_errors(tmp_path):
    _write(tmp_path, "z4.grp", "group cyclic 4\n")
    with pytest.raises(FormatError):
        files.read_sft(
            _write(tmp_path, "t.sft", "sft\ngroup z4.grp\nshape 0 1\n")
        )
    with pytest.raises(FormatError, match=r"u\.sft:5:"):
        files.read_sft(
            _write(
                tmp_path,
                "u.sft",
                "sft\ngroup z4.grp\nalphabet 0 1\nshape 0 1\nforbid 1\n",
            )
        )


def test_read_blockmap(tmp_path):
    y = full_shift(cyclic(4), BINARY)
    path = _write(
        tmp_path,
        "m.map",
        "window 0 1\nmap 0 0 -> 0\nmap 0 1 -> 1\nmap 1 0 -> 1\nmap 1 1 -> 0\n",
    )
    code = files.read_blockmap(path, y, BINARY)
    assert code.window == (0, 1)
    assert code.table[(1, 0)] == 1


def test_pattern_round_trip(tmp_path):
    from finshift.patterns import make_pattern

    g = cyclic(4)
    w = make_pattern(g, {0: 1, 3: 0})
    path = _write(tmp_path, "p.pat", files.format_pattern(w, BINARY))
    assert files.read_pattern(path, g, BINARY) == w


def test_cli_group_validate(tmp_path, capsys):
    path = _write(tmp_path, "z6.grp", "group cyclic 6\n")
    assert cli.main(["group", "validate", path]) == 0
    assert "order 6" in capsys.readouterr().out


def test_cli_sft_entropy(golden5, capsys):
    assert cli.main(["sft", "entropy", golden5]) == 0
    out = capsys.readouterr().out
    assert "log(11)/5" in out
    assert "0.479579" in out  # log(11)/5 = 0.4795790...


def test_cli_sft_enum(golden5, capsys):
    assert cli.main(["sft", "enum", golden5]) == 0
    assert "11 configurations" in capsys.readouterr().out


def test_cli_extend_and_extract(tmp_path, doubling_tower, capsys):
    _write(tmp_path, "z2.grp", "group cyclic 2\n")
    base = _write(
        tmp_path,
        "base.sft",
        "sft\ngroup z2.grp\nalphabet 0 1\nshape 0 1\nforbid 1 1\n",
    )
    assert cli.main(["extend", base, doubling_tower, "0", "2"]) == 0
    out = capsys.readouterr().out
    assert "81 configurations" in out  # 3^4 copies of the 3-config base

    _write(tmp_path, "z4.grp", "group cyclic 4\n")
    ext = _write(
        tmp_path,
        "ext.sft",
        # the two-coset lift of forbidding 11 on Z/2 inside Z/4
        "sft\ngroup z4.grp\nalphabet 0 1\nshape 0 2\nforbid 1 1\n",
    )
    assert cli.main(["extract", ext, doubling_tower, "0"]) == 0
    out = capsys.readouterr().out
    assert "base spec on level 0" in out
    assert "forbid 1 1" in out


def test_cli_check_and_zline(golden5, capsys):
    assert cli.main(["check", "zero", golden5]) == 0
    assert "positive-entropy" in capsys.readouterr().out
    assert cli.main(["check", "mme", golden5, "--grid", "30"]) == 0
    assert "unique maximizer: True" in capsys.readouterr().out
    assert cli.main(["zline", "gap", "4"]) == 0
    assert "011111110" in capsys.readouterr().out


def test_cli_entropy_set(doubling_tower, capsys):
    assert cli.main(
        ["--format", "tsv", "entropy-set", doubling_tower, "--max-level", "2",
         "--max-n", "2"]
    ) == 0
    out = capsys.readouterr().out
    assert "2\t4\t" in out


def test_cli_verify_exit_codes(capsys):
    assert cli.main(["verify", "free-extension"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") >= 13


def test_cli_error_reporting(tmp_path, capsys):
    bad = _write(tmp_path, "bad.grp", "group cyclic nope\n")
    assert cli.main(["group", "validate", bad]) == 2
    err = capsys.readouterr().err
    assert "bad.grp:1:" in err
