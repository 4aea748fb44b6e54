import random
from fractions import Fraction

import pytest

from cutinterdict.engine import ExplicitFamily, Options, solve, solve_explicit
from cutinterdict.enumeration import EnumerationError
from cutinterdict.generate import random_instance
from cutinterdict.instance import InterdictionInstance, truncate_weights
from cutinterdict.oracle import all_cuts, brute_solve
from conftest import small_instances
from oracles import brute_knapsack


def test_t1(t1):
    sol = solve(t1)
    assert sol.value == 3 and sol.S == (0, 1) and sol.R == (0,)
    assert (sol.lambda_star, sol.L_star, sol.Lambda) == (2, 6, 2)
    assert sol.candidates == 3 and not sol.degenerate


def test_affordable_cut_is_degenerate():
    inst = InterdictionInstance.from_tuples(3, [(0, 1, 4, 1), (1, 2, 3, 1), (0, 2, 5, 1)], 2)
    sol = solve(inst)
    assert sol.degenerate and sol.value == 0
    assert sol.R == sol.S and len(sol.S) == 2
    assert sol.lambda_star is None


def test_t1_zero_budget(t1):
    sol = solve(InterdictionInstance(t1.n, t1.edges, 0))
    assert sol.value == 7 and sol.R == () and sol.S == (0, 1)


def test_disconnected_graph():
    inst = InterdictionInstance.from_tuples(4, [(0, 1, 3, 2), (2, 3, 4, 5)], 0)
    sol = solve(inst)
    assert sol.degenerate and sol.disconnected and sol.value == 0 and sol.S == ()


def test_zero_weight_cut_is_zero_optimum():
    # vertex 2 hangs on one zero-weight edge whose cost exceeds the budget
    inst = InterdictionInstance.from_tuples(3, [(0, 1, 4, 2), (1, 2, 0, 9), (0, 1, 5, 3)], 1)
    sol = solve(inst)
    assert sol.degenerate and sol.value == 0 == brute_solve(inst).value
    assert sol.S == (1,) and sol.R == ()


def test_explicit_examples():
    sol = solve_explicit([(0,), (1,)], (5, 3), (4, 4), 3)
    assert sol.value == 3 and sol.S == (1,) and sol.R == ()
    sol = solve_explicit([(0,)], (5,), (1,), 1)
    assert sol.degenerate and sol.value == 0
    with pytest.raises(ValueError):
        ExplicitFamily([])
    with pytest.raises(ValueError):
        ExplicitFamily([(0,), (0,)])


def test_explicit_cut_family_matches_graph_backend(t1):
    a = solve(t1)
    b = solve_explicit(all_cuts(t1), t1.weights, t1.costs, t1.budget)
    assert (a.value, a.S, a.R, a.lambda_star, a.L_star, a.Lambda, a.candidates) == \
           (b.value, b.S, b.R, b.lambda_star, b.L_star, b.Lambda, b.candidates)


def test_explicit_matches_graph_on_random_instances():
    for inst in small_instances(60, seed=12, nmax=6):
        a, b = solve(inst), solve_explicit(all_cuts(inst), inst.weights, inst.costs, inst.budget)
        assert a.value == b.value
        assert (a.lambda_star, a.Lambda) == (b.lambda_star, b.Lambda)


def test_generic_family_not_cuts():
    # arbitrary small set systems, checked by a direct scan
    rng = random.Random(8)
    for _ in range(100):
        m = 6
        members = {tuple(sorted(rng.sample(range(m), rng.randint(1, 4)))) for _ in range(rng.randint(1, 6))}
        w = [rng.randint(0, 9) for _ in range(m)]
        c = [rng.randint(1, 6) for _ in range(m)]
        b = rng.randint(0, 8)
        expected = min(brute_knapsack([(e, w[e], c[e]) for e in S], b)[0] for S in members)
        assert solve_explicit(sorted(members), w, c, b).value == expected


def test_oracle_equivalence_and_witness_property():
    for inst in small_instances(200, seed=13):
        sol, rep = solve(inst), brute_solve(inst)
        assert sol.value == rep.value
        sol.check(inst)
        if not sol.degenerate:
            wl = truncate_weights(inst, sol.lambda_star)
            ws = sum(wl[e] for e in rep.best_S)
            assert sol.L_star <= ws <= sol.L_star + inst.budget * sol.lambda_star < 2 * sol.L_star
            assert sum(wl[e] for e in sol.S) < 2 * sol.L_star
            assert sol.value >= sol.Lambda


def test_permutation_invariance():
    rng = random.Random(1)
    for inst in small_instances(60, seed=14):
        order = list(range(inst.m))
        rng.shuffle(order)
        assert solve(inst).value == solve(inst.relabeled(order)).value


def test_fptas_mode_is_feasible_and_close():
    eps = Fraction(1, 10)
    for inst in small_instances(60, seed=15):
        sol = solve(inst, Options(knapsack="fptas", epsilon=eps))
        sol.check(inst)
        assert sol.value >= brute_solve(inst).value


def test_contraction_backend_agrees():
    for inst in small_instances(15, seed=16, nmin=6, nmax=8):
        a = solve(inst, Options(enum="contraction", seed=3))
        assert a.value == brute_solve(inst).value


def test_exhaustive_over_limit_is_an_error():
    inst = random_instance(8, 10, seed=1)
    with pytest.raises(EnumerationError):
        solve(inst, Options(enum="exhaustive", exhaustive_limit=6))


def test_option_validation():
    with pytest.raises(ValueError):
        Options(knapsack="fptas")
    with pytest.raises(ValueError):
        Options(epsilon=Fraction(1, 2))
    with pytest.raises(ValueError):
        Options(enum="magic")
