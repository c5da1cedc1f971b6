import pytest

from ldikit.exceptions import ParseError
from ldikit.schemas import GeneratorMatrix, Integers, Modulo
from ldikit.services import steane_ldi, steane_standard
from ldikit.utils.codefile import load_code, parse_code_file, render_code_file


class TestParse:

    def test_docs_files(self, codes_dir):
        assert parse_code_file((codes_dir / "steane_ldi.qec").read_text()) == steane_ldi().matrix
        assert parse_code_file((codes_dir / "steane_standard.qec").read_text()) == steane_standard().matrix

    def test_bar_is_optional(self):
        with_bar = parse_code_file("QEC1 n=2 rows=1 dim=Z\n1 -1 | 0 0\n")
        without = parse_code_file("QEC1 n=2 rows=1 dim=Z\n1 -1 0 0\n")
        assert with_bar == without
        assert with_bar.dim == Integers()

    def test_comments_and_blank_lines(self):
        text = "# header comment\nQEC1 n=1 rows=1 dim=6\n\n# row\n2 3\n"
        m = parse_code_file(text)
        assert m.to_lists() == [[2, 3]]
        assert m.dim == Modulo(m=6)

    def test_no_rows(self):
        m = parse_code_file("QEC1 n=3 rows=0 dim=2\n")
        assert m.num_rows == 0 and m.n == 3

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "QEC2 n=1 rows=1 dim=2\n1 0\n",
            "QEC1 n=2 rows=1 dim=2\n1 0 0\n",
            "QEC1 n=1 rows=2 dim=2\n1 0\n",
            "QEC1 n=1 rows=1 dim=2\n1 a\n",
            "QEC1 n=2 rows=1 dim=2\n1 | 0 0 0\n",
            "QEC1 n=1 rows=1 dim=2\n1 | | 0\n",
            "QEC1 n=1 rows=1 dim=1\n1 0\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_code_file(text)


class TestRender:

    def test_layout(self):
        m = GeneratorMatrix.from_rows(2, [[1, -1, 0, 0], [0, 0, 1, 1]])
        assert render_code_file(m) == "QEC1 n=2 rows=2 dim=Z\n1 -1 | 0 0\n0 0 | 1 1\n"

    def test_idempotent(self):
        text = render_code_file(steane_ldi().matrix)
        assert render_code_file(parse_code_file(text)) == text


class TestLoad:

    def test_catalog_reference(self):
        assert load_code("steane_ldi") == steane_ldi().matrix
        assert load_code("toric:2").n == 8

    def test_path(self, codes_dir):
        assert load_code(codes_dir / "steane_standard.qec") == steane_standard().matrix

    def test_unknown(self, tmp_path):
        with pytest.raises(ParseError):
            load_code(str(tmp_path / "missing.qec"))
