import json
import os

import pytest

from stratcensus.classify import smallest_horned_tree
from stratcensus.cli import INPUT_ERROR, OK, REJECTED, main
from stratcensus.documents import dump_document
from stratcensus.graph import StratGraph, white


def write(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(p)


def doc(tmp_path, g, name="g.json"):
    return write(tmp_path, name, dump_document(g))


def single(genus=0):
    return StratGraph.build([white("w", genus)], [])


class TestCheck:
    def test_single_white(self, tmp_path, capsys):
        assert main(["check", doc(tmp_path, single())]) == OK
        assert "simply connected" in capsys.readouterr().out

    def test_horned_tree(self, tmp_path, capsys):
        assert main(["check", doc(tmp_path, smallest_horned_tree())]) == REJECTED
        assert "horned tree" in capsys.readouterr().out

    def test_verbose_witness(self, tmp_path, capsys):
        assert main(["check", "-v", doc(tmp_path, smallest_horned_tree())]) == REJECTED
        out = capsys.readouterr().out
        assert "reduced graph:" in out and "horned subtree:" in out

    def test_label_zero(self, tmp_path):
        bad = {
            "vertices": [{"id": "w", "color": "white", "genus": 0}, {"id": "b", "color": "black"}],
            "edges": [{"white": "w", "black": "b", "label": 0}],
        }
        assert main(["check", write(tmp_path, "g.json", bad)]) == INPUT_ERROR

    @pytest.mark.parametrize(
        "payload",
        [
            {"vertices": [{"id": "w", "color": "white", "genus": 0}], "extra": 1},
            {"vertices": [{"id": "w", "color": "white"}]},
            {"vertices": [{"id": "b", "color": "black", "genus": 0}]},
            {"vertices": [{"id": "w", "color": "white", "genus": 0}], "edges": [{"white": "w", "black": "x", "label": 1}]},
            "not json",
        ],
    )
    def test_malformed(self, tmp_path, payload):
        assert main(["check", write(tmp_path, "g.json", payload)]) == INPUT_ERROR

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "absent.json")]) == INPUT_ERROR


class TestPi1:
    def test_w3b(self, tmp_path, capsys):
        payload = {
            "vertices": [{"id": "w", "color": "white", "genus": 0}, {"id": "b", "color": "black"}],
            "edges": [{"white": "w", "black": "b", "label": 3}],
        }
        assert main(["pi1", write(tmp_path, "g.json", payload)]) == OK
        assert capsys.readouterr().out.strip() == "⟨b, c1 | c1, b^3 c1^-1⟩"

    def test_single_white(self, tmp_path, capsys):
        assert main(["pi1", doc(tmp_path, single())]) == OK
        assert capsys.readouterr().out.strip() == "⟨ | ⟩"

    def test_negative_genus(self, tmp_path):
        assert main(["pi1", doc(tmp_path, single(-1))]) == INPUT_ERROR


class TestCensus:
    def test_seven(self, capsys):
        assert main(["census", "-n", "7", "--engine", "all", "--format", "csv"]) == OK
        lines = capsys.readouterr().out.splitlines()
        for engine in ("constructive", "brute"):
            assert f"7,,{engine},grand total,167" in lines
        # the closed-form engine covers b <= 1 only
        assert "7,0,formula,total,48" in lines and "7,1,formula,total,88" in lines

    def test_one(self, capsys):
        assert main(["census", "-n", "1"]) == OK
        assert "total: 1" in capsys.readouterr().out

    def test_b_filter(self, capsys):
        assert main(["census", "-n", "7", "-b", "2", "--format", "csv"]) == OK
        lines = capsys.readouterr().out.splitlines()
        assert "7,2,brute,total,29" in lines and "7,2,constructive,total,29" in lines

    def test_csv_deterministic(self, capsys):
        main(["census", "-n", "6", "--format", "csv"])
        first = capsys.readouterr().out
        main(["census", "-n", "6", "--format", "csv"])
        assert capsys.readouterr().out == first

    @pytest.mark.parametrize(
        "argv",
        [
            ["census"],
            ["census", "-n", "x"],
            ["census", "-n", "3", "--engine", "magic"],
            ["census", "-n", "3", "--format", "xml"],
            ["census", "-n", "0"],
            ["census", "-n", "9", "--engine", "brute"],
            ["bogus"],
        ],
    )
    def test_invalid(self, argv):
        assert main(argv) == INPUT_ERROR


class TestEnumerate:
    @pytest.mark.parametrize("n, expected", [(1, 1), (3, 3), (7, 167)])
    def test_file_counts(self, tmp_path, n, expected):
        out = tmp_path / "out"
        assert main(["enumerate", "-n", str(n), "--out", str(out)]) == OK
        assert len(list(out.glob("*.json"))) == expected

    def test_dot(self, tmp_path):
        out = tmp_path / "dot"
        assert main(["enumerate", "-n", "3", "--out", str(out), "--emit", "dot"]) == OK
        files = sorted(out.glob("*.dot"))
        assert len(files) == 3
        text = "".join(f.read_text() for f in files)
        assert "shape=circle" in text and "shape=point" in text and "label=" in text

    def test_b_filter(self, tmp_path):
        out = tmp_path / "b2"
        assert main(["enumerate", "-n", "7", "-b", "2", "--out", str(out)]) == OK
        assert len(list(out.glob("*.json"))) == 29

    @pytest.mark.skipif(os.geteuid() == 0, reason="root ignores directory permissions")
    def test_unwritable_permissions(self, tmp_path):
        locked = tmp_path / "locked"
        locked.mkdir(mode=0o500)
        assert main(["enumerate", "-n", "3", "--out", str(locked / "x")]) == INPUT_ERROR

    def test_unwritable_file_in_the_way(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        assert main(["enumerate", "-n", "3", "--out", str(blocker / "sub")]) == INPUT_ERROR

    def test_round_trip(self, tmp_path, capsys):
        out = tmp_path / "rt"
        assert main(["enumerate", "-n", "6", "--out", str(out)]) == OK
        files = sorted(out.glob("*.json"))
        assert files
        for f in files:
            assert main(["check", str(f)]) == OK, f.read_text()


class TestTables:
    def test_one(self, capsys):
        assert main(["tables", "--max-n", "1"]) == OK
        assert capsys.readouterr().out == "n,R,M,U\n1,1,1,0\n"

    def test_u_is_m_minus_r(self, capsys):
        assert main(["tables", "--max-n", "9"]) == OK
        rows = capsys.readouterr().out.splitlines()
        assert rows[0] == "n,R,M,U"
        for row in rows[1:]:
            n, r, m, u = map(int, row.split(","))
            assert u == m - r

    def test_zero(self):
        assert main(["tables", "--max-n", "0"]) == INPUT_ERROR
