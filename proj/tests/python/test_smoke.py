import json
import os
import subprocess

import pytest

import asearch


def test_registry_lists_the_four_benchmarks():
    assert sorted(asearch.model_names()) == ["all-interval", "costas", "magic-square", "partition"]


def test_model_costs_and_verifier():
    part = asearch.make_model("partition", 8)
    good = [1, 4, 6, 7, 2, 3, 5, 8]
    assert part.cost_of_solution(good) == 0
    assert part.verify(good)
    assert part.cost_of_solution(list(range(1, 9))) == 160
    assert all(part.cost_on_variable(good, i) == 0 for i in range(8))

    costas = asearch.make_model("costas", 3)
    assert costas.cost_of_solution([1, 3, 2]) == 0
    assert costas.cost_if_swap([1, 2, 3], costas.cost_of_solution([1, 2, 3]), 1, 2) == 0

    with pytest.raises(ValueError):
        asearch.make_model("partition", 10)


def test_random_permutation_is_a_permutation():
    p = asearch.random_permutation(20, seed=3)
    assert sorted(p) == list(range(20))
    assert p == asearch.random_permutation(20, seed=3)


def test_solve_is_deterministic_and_verified():
    a = asearch.solve("costas", 10, seed=11)
    b = asearch.solve("costas", 10, seed=11)
    assert a.solved and a.cost == 0 and a.stop == "solved"
    assert a.solution == b.solution
    assert a.iterations_total == b.iterations_total
    assert asearch.make_model("costas", 10).verify(a.solution)


def test_params_round_trip():
    p = asearch.default_params("magic-square", 6)
    assert p.tenure == 10
    assert p.max_iterations == 100 * 36 * 36
    p.reset_fraction = 0.0
    with pytest.raises(ValueError):
        p.validate()


def test_multi_walk_reports_a_winner():
    out = asearch.multi_walk_solve("all-interval", 12, workers=3, seed_base=5)
    assert out.solved
    assert out.worker_id in (0, 1, 2)
    assert asearch.make_model("all-interval", 12).verify(out.solution)


def test_benchmark_structured_report():
    report = json.loads(asearch.run_benchmark("costas", [6, 7], [1, 2], samples=2))
    cells = report["cells"]
    assert len(cells) == 4
    assert all(len(c["samples"]) == 2 for c in cells)
    assert all(s["solved"] for c in cells for s in c["samples"])


@pytest.mark.skipif("ASEARCH_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_solve_exit_codes():
    cli = os.environ["ASEARCH_CLI"]
    ok = subprocess.run([cli, "solve", "costas", "--size", "8", "--seed", "2"],
                        capture_output=True, text=True)
    assert ok.returncode == 0
    assert "certificate:" in ok.stdout
    bad = subprocess.run([cli, "solve", "nope", "--size", "8"], capture_output=True, text=True)
    assert bad.returncode == 1
