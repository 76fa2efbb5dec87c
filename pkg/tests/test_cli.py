import pytest

from cmapf.cli import main

FIG1A = """\
nodes 1 2 3 4 5
edge 1 2
edge 2 3
edge 3 4
edge 4 5
edge 5 1
constraint 1: 1 4
constraint 1: 2 3
pebble 0 2 4
marked 0
"""

FIG1B_SWAP = """\
nodes 1 2 3 4 5
edge 1 2
edge 2 3
edge 3 4
edge 4 5
edge 5 1
edge 3 5
constraint 1: 1 4
constraint 1: 2 3
pebble 0 2 4
pebble 1 4 2
"""


@pytest.fixture
def fig1a(tmp_path):
    p = tmp_path / "fig1a.txt"
    p.write_text(FIG1A)
    return str(p)


@pytest.fixture
def fig1b_swap(tmp_path):
    p = tmp_path / "fig1b.txt"
    p.write_text(FIG1B_SWAP)
    return str(p)


class TestReduce:
    def test_independent_set(self, fig1a, capsys):
        assert main(["reduce", fig1a, "--w", "2,4"]) == 0
        out = capsys.readouterr().out
        assert "INDEPENDENT" in out
        assert "edge (2, 4) lift 2-3-4" in out
        assert "edge (4, 2) lift 4-5-1-2" in out

    def test_dependent_set(self, fig1b_swap, capsys):
        assert main(["reduce", fig1b_swap, "--w", "2,4,5"]) == 3
        out = capsys.readouterr().out
        assert "NOT INDEPENDENT" in out
        assert "missing (5, 2)" in out

    def test_singleton_trivially_independent(self, fig1a, capsys):
        assert main(["reduce", fig1a, "--w", "3"]) == 0
        assert "INDEPENDENT" in capsys.readouterr().out

    def test_non_member(self, fig1a, capsys):
        assert main(["reduce", fig1a, "--w", "1,4"]) == 3
        assert "NOT A CONSTRAINT MEMBER" in capsys.readouterr().out

    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("nodes 1\nedge 1\n")
        assert main(["reduce", str(bad), "--w", "1"]) == 2

    def test_missing_file(self, capsys):
        assert main(["reduce", "/nonexistent.txt", "--w", "1"]) == 2


class TestCmis:
    def test_random_csv(self, tmp_path, capsys):
        grid = tmp_path / "grid.txt"
        grid.write_text("grid 3\n")
        assert main(["cmis", str(grid), "--runs", "5", "--seed", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "run_index,cardinality,vertices"
        assert len(lines) == 6

    def test_deterministic_given_seed(self, tmp_path, capsys):
        grid = tmp_path / "grid.txt"
        grid.write_text("grid 3\n")
        main(["cmis", str(grid), "--runs", "5", "--seed", "9"])
        first = capsys.readouterr().out
        main(["cmis", str(grid), "--runs", "5", "--seed", "9"])
        assert capsys.readouterr().out == first

    def test_exact_row(self, tmp_path, capsys):
        grid = tmp_path / "grid.txt"
        grid.write_text("grid 3\n")
        assert main(["cmis", str(grid), "--runs", "2", "--exact"]) == 0
        out = capsys.readouterr().out
        assert "exact,4," in out and "PROVEN" in out

    def test_greedy_rule(self, tmp_path, capsys):
        grid = tmp_path / "grid.txt"
        grid.write_text("grid 3\n")
        assert main(["cmis", str(grid), "--rule", "greedy-degree"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2  # header plus single deterministic run


class TestSolve:
    def test_feasible_plan_file(self, fig1a, tmp_path, capsys):
        out_path = tmp_path / "plan.txt"
        assert main(["solve", fig1a, "--w", "2,4",
                     "--output", str(out_path)]) == 0
        assert out_path.read_text().splitlines()[0] == "FEASIBLE"
        assert "2 -> 3" in out_path.read_text()

    def test_swap_reduction_infeasible(self, fig1b_swap, capsys):
        assert main(["solve", fig1b_swap, "--w", "2,4"]) == 4
        assert "INFEASIBLE_VIA_REDUCTION" in capsys.readouterr().out

    def test_swap_oracle_proves_infeasible(self, fig1b_swap, capsys):
        assert main(["solve", fig1b_swap, "--oracle"]) == 5
        assert "PROVEN_INFEASIBLE" in capsys.readouterr().out

    def test_oracle_feasible(self, fig1a, capsys):
        assert main(["solve", fig1a, "--oracle"]) == 0

    def test_source_equals_target(self, tmp_path, capsys):
        p = tmp_path / "inst.txt"
        p.write_text(FIG1A.replace("pebble 0 2 4", "pebble 0 2 2"))
        assert main(["solve", str(p), "--w", "2"]) == 0
        assert capsys.readouterr().out == "FEASIBLE\n"

    def test_dependent_w_exit(self, fig1b_swap, capsys):
        assert main(["solve", fig1b_swap, "--w", "2,4,5"]) == 3

    def test_two_stage(self, tmp_path, capsys):
        p = tmp_path / "inst.txt"
        p.write_text(FIG1B_SWAP.replace("pebble 0 2 4\npebble 1 4 2",
                                        "pebble 0 2 3"))
        assert main(["solve", str(p), "--two-stage", "2,5;1,3,5"]) == 0
        assert "FEASIBLE" in capsys.readouterr().out


class TestValidate:
    def test_accepts_own_plans(self, fig1a, tmp_path, capsys):
        plan = tmp_path / "plan.txt"
        main(["solve", fig1a, "--w", "2,4", "--output", str(plan)])
        capsys.readouterr()
        assert main(["validate", fig1a, str(plan)]) == 0
        assert "VALID" in capsys.readouterr().out

    def test_rejects_undefined_transition(self, fig1a, tmp_path, capsys):
        plan = tmp_path / "plan.txt"
        plan.write_text("FEASIBLE\n2 -> 3\n3 -> 2\n")
        assert main(["validate", fig1a, str(plan)]) == 6
        out = capsys.readouterr().out
        assert "INVALID" in out and "transition undefined" in out

    def test_rejects_constraint_breach(self, tmp_path, capsys):
        inst = tmp_path / "inst.txt"
        inst.write_text(FIG1A.replace("pebble 0 2 4\nmarked 0",
                                      "pebble 0 1 2\npebble 1 3 3"))
        plan = tmp_path / "plan.txt"
        plan.write_text("FEASIBLE\n1 -> 2\n")
        assert main(["validate", str(inst), str(plan)]) == 6
        out = capsys.readouterr().out
        assert "prefix 1" in out

    def test_rejects_wrong_destination(self, fig1a, tmp_path, capsys):
        plan = tmp_path / "plan.txt"
        plan.write_text("FEASIBLE\n2 -> 3\n")
        assert main(["validate", fig1a, str(plan)]) == 6


class TestGadget:
    def test_sat_byte_stable(self, tmp_path, capsys):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 3 3\n1 -2 0\n3 0\n-1 2 -3 0\n")
        assert main(["gadget", "sat", str(cnf)]) == 0
        first = capsys.readouterr().out
        main(["gadget", "sat", str(cnf)])
        assert capsys.readouterr().out == first
        assert first.startswith("nodes 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17")

    def test_sat_oversized_clause_exit(self, tmp_path):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 4 1\n1 2 3 4 0\n")
        assert main(["gadget", "sat", str(cnf)]) == 2

    def test_mis_gadget_file_round_trips(self, tmp_path, capsys):
        g = tmp_path / "g.txt"
        g.write_text("nodes 1 2 3 4 5\nundirected\nedge 1 2\nedge 4 3\n"
                     "edge 1 4\nedge 4 5\nedge 2 5\nedge 2 3\n")
        out = tmp_path / "gadget.txt"
        assert main(["gadget", "mis", str(g), "--output", str(out)]) == 0
        capsys.readouterr()
        assert main(["cmis", str(out), "--runs", "1", "--exact"]) == 0
        assert "exact,3,1;3;5,PROVEN" in capsys.readouterr().out


class TestBenchGrid:
    def test_small_table(self, capsys):
        assert main(["bench-grid", "--n-max", "3", "--runs", "10",
                     "--seed", "0"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,random_best,greedy_degree,exact"
        assert lines[1].startswith("2,2,2,2")
        assert lines[2].split(",")[3] == "4"
