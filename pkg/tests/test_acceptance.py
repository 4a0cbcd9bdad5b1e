"""One PASS/FAIL line per acceptance criterion, with its tolerance and time limit."""
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from codimlab.ado import NonAbelianSemigroup, Representation, adjoint_rep, graded_ado, verify_graded_ado
from codimlab.algebra import (Subspace, abelian_algebra, is_graded_ideal, solvable_radical, spin,
                              structure_operators)
from codimlab.algfile import data_path
from codimlab.asymptotics import bound_report, closed_form_value, maximize_phi
from codimlab.codim import CodimEngine, cocharacter_table, naive_codimension, theta_crosscheck
from codimlab.regev import RegevDescriptor, centrality_sweep, regev_eval_dp, regev_eval_naive
from codimlab.semigroup import left_zero_semigroup
from codimlab.symmetric import partitions_of, specht_dim, specht_dim_branching
from codimlab.witness import (block_value, build_witness, evaluate_symmetrized, symmetrizer_terms,
                              witness_substitution)


def report(capsys, k, ok, detail, elapsed, limit):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    with capsys.disabled():
        print(f"\nACCEPTANCE {k:>2} {status}  {detail}  [{elapsed:.2f} s, limit {limit:g} s]")
    assert ok, detail
    assert within, f"took {elapsed:.2f} s, limit {limit} s"


def el(L, name):
    return L.basis_element(L.index(name))


def test_01_optimization(capsys):
    t = time.perf_counter()
    errs = {q: abs(maximize_phi(q).value - closed_form_value(q)) for q in range(4, 9)}
    q5 = maximize_phi(5).value
    dt = time.perf_counter() - t
    ok = max(errs.values()) < 1e-9 and repr(q5).startswith("4.828427124")
    report(capsys, 1, ok, f"max |phi* - (q-3+2sqrt2)| = {max(errs.values()):.1e} (tol 1e-9), q=5 {q5:.12f}",
           dt, 5)


def test_02_block_constants(capsys, L):
    t = time.perf_counter()
    vals = {k: block_value(L, k) for k in range(1, 9)}
    dt = time.perf_counter() - t
    targets = {1: ("v0", 64), 2: ("u0", 16), 4: ("u0", 2), 5: ("t0", 4), 6: ("u0", None)}
    ok = vals[3] == el(L, "t0") * -8
    parts = []
    for k, (name, mag) in targets.items():
        c = vals[k].coords[L.index(name)]
        only = vals[k] == el(L, name) * c
        ok &= only and c != 0 and (mag is None or abs(c) == mag)
        parts.append(f"f{k}={c}*{name}")
    report(capsys, 2, ok, "f3=-8*t0 " + " ".join(parts), dt, 1)


@pytest.mark.parametrize("beta,label", [((0, 1, 0, 0, 0, 0, 0), "(2,2,2,1,1) f''"),
                                        ((0, 0, 1, 0, 0, 1, 0), "(3,2,2,1,1) f")])
def test_03_witness_nonvanishing(capsys, L, beta, label):
    t = time.perf_counter()
    w = build_witness(beta, 1)
    a = witness_substitution(L, w)
    ev = w.evaluator(L)
    plain = ev(a)
    sym = evaluate_symmetrized(L, symmetrizer_terms(w.tableau), ev, a, w.n)
    dt = time.perf_counter() - t
    c = plain.coords[0]
    ok = c != 0 and plain == el(L, "u0") * c and not sym.is_zero()
    report(capsys, 3, ok, f"{label}: f = {c}*u0, e*f = {sym.coords[0]}*u0", dt, 60)


def test_04_theta_filter(capsys, L):
    t = time.perf_counter()
    eng = CodimEngine(L)
    checked, nonzero = 0, []
    for n in range(1, 7):
        rep = theta_crosscheck(L, n, engine=eng)
        checked += len(rep.inadmissible)
        nonzero += rep.violations
    dt = time.perf_counter() - t
    report(capsys, 4, not nonzero,
           f"n <= 6: {checked} inadmissible shapes, {len(nonzero)} with m != 0", dt, 600)


def test_05_consistency(capsys, L):
    t = time.perf_counter()
    eng = CodimEngine(L)
    rows = [cocharacter_table(L, n, engine=eng) for n in range(1, 6)]
    oracle = [naive_codimension(L, n) for n in (1, 2)]
    dt = time.perf_counter() - t
    ok = all(r.consistent() for r in rows) and oracle == [2, 4] \
        and [r.codimension for r in rows[:2]] == oracle
    sums = ",".join(str(r.weighted_sum()) for r in rows)
    report(capsys, 5, ok, f"sum m*dim = {sums} = c_n; naive c1,c2 = {oracle}", dt, 600)


def test_06_bounds(capsys, L):
    t = time.perf_counter()
    rep = bound_report(L, range(1, 8))
    dt = time.perf_counter() - t
    ok = all(r.c_n <= 5 ** (r.n + 1) and r.nth_root <= 4.829 for r in rep.rows)
    roots = ",".join(f"{r.nth_root:.3f}" for r in rep.rows)
    report(capsys, 6, ok, f"c_n <= 5^(n+1) for n <= 7; roots {roots} <= 4.829 (trend only)", dt, 600)


def test_07_structure(capsys, L):
    t = time.perf_counter()
    ops = structure_operators(L)
    rad = solvable_radical(L)
    want = Subspace.span([el(L, "uu") - el(L, "u0"), el(L, "vv") - el(L, "v0")], 5)
    I0 = Subspace.span([el(L, "u0"), el(L, "v0"), el(L, "t0")], 5)
    small = [spin(L, el(L, n), ops) == I0 for n in ("u0", "v0", "t0")]
    seeds = [el(L, "uu"), el(L, "vv"), el(L, "uu") + el(L, "vv"), el(L, "uu") - el(L, "vv")]
    big = [spin(L, s, ops).dim for s in seeds]
    dt = time.perf_counter() - t
    ok = (rad == want and not is_graded_ideal(L, rad) and is_graded_ideal(L, I0)
          and all(small) and big == [5, 5, 5, 5])
    report(capsys, 7, ok, f"radical ok={rad == want}; spins of b1,b3,b5 = (I,0): {all(small)}; "
           f"spin dims of b2,b4,b2+b4,b2-b4 = {big} (need 5,5,5,5)", dt, 1)


def test_08_graded_ado(capsys, L):
    t = time.perf_counter()
    g = graded_ado(L, adjoint_rep(L))
    rep = verify_graded_ado(g)
    B = abelian_algebra(2, (0, 1), left_zero_semigroup())
    try:
        graded_ado(B, Representation(B, 2, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]))
        rejected = False
    except NonAbelianSemigroup:
        rejected = True
    dt = time.perf_counter() - t
    ok = g.dim == 10 and rep.ok and rep.rank == 5 and rejected
    report(capsys, 8, ok, f"dim {g.dim}, hom failures {len(rep.homomorphism_failures)}/25, rank {rep.rank}, "
           f"containment failures {len(rep.containment_failures)}, non-abelian rejected {rejected}", dt, 1)


def test_09_regev(capsys):
    t = time.perf_counter()
    rep = centrality_sweep(2)
    rng = np.random.default_rng(0)
    d = RegevDescriptor(2)
    same = 0
    for _ in range(100):
        X = rng.integers(-3, 4, (4, 2, 2))
        Y = rng.integers(-3, 4, (4, 2, 2))
        same += bool(np.array_equal(regev_eval_dp(d, X, Y), regev_eval_naive(d, X, Y)))
    dt = time.perf_counter() - t
    ok = rep.ok and rep.tuples == 4 ** 8 and same == 100
    report(capsys, 9, ok, f"{rep.tuples} tuples, all scalar {rep.all_scalar}, {rep.nonzero} nonzero; "
           f"DP = naive on {same}/100", dt, 120)


def test_10_specht(capsys):
    t = time.perf_counter()
    hook = sum(specht_dim(l) != specht_dim_branching(l) for n in range(1, 11) for l in partitions_of(n))
    squares = sum(sum(specht_dim(l) ** 2 for l in partitions_of(n)) != math.factorial(n)
                  for n in range(1, 9))
    rect = sum(specht_dim((2 * k,) * s) * math.factorial(2 * k + s) ** s < math.factorial(2 * k * s)
               for s in range(1, 5) for k in range(1, 6))
    dt = time.perf_counter() - t
    report(capsys, 10, hook == squares == rect == 0,
           f"hook vs branching mismatches {hook}, sum-of-squares failures {squares}, "
           f"rectangle bound failures {rect}", dt, 30)


def _verify(*extra):
    cmd = [sys.executable, "-m", "codimlab.cli", "verify-paper", "--level", "full", "--seed", "0", *extra]
    return subprocess.run(cmd, capture_output=True, env={"PATH": "/usr/bin:/bin"}, timeout=600)


def test_11_determinism(capsys, tmp_path):
    t = time.perf_counter()
    a, b = _verify(), _verify()
    bad = tmp_path / "mutated.alg"
    bad.write_text(data_path("paper_L.alg").read_text().replace("= 2*t0", "= 3*t0", 1))
    m = _verify("--algebra", str(bad))
    dt = time.perf_counter() - t
    ok = a.stdout == b.stdout and a.returncode == b.returncode and m.returncode == 1 and a.stdout
    report(capsys, 11, ok, f"two full runs byte-identical: {a.stdout == b.stdout}; "
           f"mutated constant exit code {m.returncode}", dt, 600)
