import pytest
from click.testing import CliRunner

from ldikit.main import cli, run


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


class TestCatalogCommand:

    def test_list(self, runner):
        result = invoke(runner, "catalog")
        assert result.exit_code == 0
        assert "steane_ldi" in result.output.splitlines()
        assert "toric:N" in result.output.splitlines()

    def test_entry(self, runner):
        result = invoke(runner, "catalog", "two_register")
        lines = result.output.splitlines()
        assert lines[0] == "# two_register [[2,0,2]]_3"
        assert lines[1] == "QEC1 n=2 rows=2 dim=Z"
        assert lines[2] == "1 -1 | 0 0"

    def test_unknown(self, runner):
        result = invoke(runner, "catalog", "shor")
        assert result.exit_code == 1
        assert "error:" in result.output


class TestTransforms:

    def test_canon(self, runner):
        result = invoke(runner, "canon", "steane_ldi")
        assert result.exit_code == 0
        assert result.output.startswith("# rank=6 ")

    def test_ldi_then_verify(self, runner, codes_dir, tmp_path):
        result = invoke(runner, "ldi", str(codes_dir / "steane_standard.qec"), "--variant", "css")
        assert result.exit_code == 0
        converted = tmp_path / "steane_css.qec"
        converted.write_text(result.output)
        check = invoke(runner, "verify", str(converted))
        assert check.output.splitlines() == ["is_ldi=true B=1"]

    def test_verify_violations(self, runner, codes_dir):
        result = invoke(runner, "verify", str(codes_dir / "steane_standard.qec"))
        lines = result.output.splitlines()
        assert lines[0] == "is_ldi=false B=1"
        assert all(line.startswith("violation ") for line in lines[1:])
        assert len(lines) > 1

    def test_nullifiers(self, runner):
        result = invoke(runner, "nullifiers", "steane_ldi")
        assert result.output.splitlines() == [
            "x1+x2+x3+x4",
            "x2+x3+x5+x6",
            "x3+x4+x6+x7",
            "p1-p2+p3-p4",
            "p2-p3-p5+p6",
            "p3-p4-p6+p7",
        ]

    def test_nullifiers_reject_non_ldi(self, runner):
        result = invoke(runner, "nullifiers", "steane_standard")
        assert result.exit_code == 1
        assert "error:" in result.output


class TestDistanceCommands:

    def test_distance_text(self, runner):
        result = invoke(runner, "distance", "steane_ldi", "--p", "2", "--w-max", "3")
        assert result.exit_code == 0
        assert result.output.startswith("p=2 d=3 witness=")

    def test_distance_csv(self, runner):
        result = invoke(runner, "--csv", "distance", "steane_ldi", "--p", "2", "--p", "3", "--w-max", "3")
        lines = result.output.splitlines()
        assert lines[0] == "code,p,w_max,d,witness"
        assert [line.split(",")[:4] for line in lines[1:]] == [
            ["steane_ldi", "2", "3", "3"],
            ["steane_ldi", "3", "3", "3"],
        ]

    def test_distance_not_found(self, runner):
        result = invoke(runner, "distance", "steane_ldi", "--p", "2", "--w-max", "2")
        assert result.output.strip() == "p=2 d>2"

    def test_deterministic(self, runner):
        args = ("distance", "steane_ldi", "--p", "3", "--w-max", "3")
        assert invoke(runner, *args).output == invoke(runner, *args).output

    def test_budget_exit(self, runner):
        result = invoke(runner, "--budget", "100", "distance", "steane_ldi", "--p", "3", "--w-max", "3")
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_dstar(self, runner):
        result = invoke(runner, "dstar", "steane_ldi", "--w-max", "3")
        assert result.output.startswith("d*=3 witness=")

    def test_dstar_requires_ldi(self, runner):
        result = invoke(runner, "dstar", "steane_standard", "--w-max", "2")
        assert result.exit_code == 1
        assert "error:" in result.output

    def test_classify(self, runner):
        result = invoke(runner, "classify", "steane_ldi", "I I I I X X X", "--p", "2")
        assert result.output.strip() == "tag=Unavoidable syndrome=(0,0,0,0,0,0)"

    def test_logicals(self, runner):
        result = invoke(runner, "logicals", "steane_ldi")
        assert result.output.splitlines() == [
            "X X X X X X X",
            "Z Z^-1 Z Z^-1 Z Z^-1 Z",
        ]

    def test_dps(self, runner):
        result = invoke(runner, "dps", "steane_ldi")
        assert result.output.startswith("d_ps=1.732050807569 norm2=3 box=2 w_max=4")


class TestBoundCommands:

    def test_bounds(self, runner):
        result = invoke(runner, "bounds", "--B", "1", "--q", "2", "--d", "3", "--css")
        assert result.output.strip() == "hadamard=16 alternative=100 css=2 rotor_ok=true"

    def test_bounds_without_css(self, runner):
        result = invoke(runner, "bounds", "--B", "3", "--q", "2", "--d", "3")
        assert result.output.strip() == "hadamard=1296 alternative=900 rotor_ok=false"

    def test_bad_distance(self, runner):
        result = invoke(runner, "bounds", "--B", "1", "--q", "2", "--d", "1")
        assert result.exit_code == 1

    def test_promise(self, runner):
        result = invoke(runner, "promise", "steane_ldi", "--d", "3", "--target", "3", "--target", "6", "--target", "Z")
        assert result.output.splitlines() == [
            "target=3 promised=true rank_preserved=true p*=2",
            "target=6 promised=false rank_preserved=true p*=2",
            "target=Z promised=true rank_preserved=true p*=2",
        ]

    def test_rank(self, runner):
        result = invoke(runner, "rank", "steane_ldi", "--m", "2", "--m", "6")
        assert result.output.splitlines() == [
            "Z: 6 invariants=(1,1,1,1,1,1)",
            "2: 6",
            "6: 6",
            "preserved=true",
        ]


class TestStabilizeCommand:

    def test_two_register(self, runner):
        result = invoke(runner, "stabilize", "two_register", "--q", "3")
        lines = result.output.splitlines()
        assert [line.split()[0] for line in lines] == ["|0,0>", "|1,2>", "|2,1>"]
        assert all(line.split()[1].startswith("+0.577350") for line in lines)

    def test_budget(self, runner):
        result = invoke(runner, "stabilize", "hamming:4", "--q", "2")
        assert result.exit_code == 2


class TestRun:

    def test_exit_codes(self, capsys):
        assert run(["catalog"]) == 0
        assert run(["dstar", "steane_standard", "--w-max", "2"]) == 1
        assert run(["--budget", "10", "dstar", "steane_ldi", "--w-max", "3"]) == 2
        assert run(["no-such-command"]) == 2

    def test_missing_prime_is_a_domain_error(self, runner):
        assert run(["logicals", "two_register"]) == 1
        result = invoke(runner, "canon", "two_register")
        assert result.exit_code == 1
        assert "pass --q" in result.output
