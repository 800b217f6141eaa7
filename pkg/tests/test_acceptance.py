"""End-to-end acceptance criteria.

Each check returns (ok, detail).  The tests print one PASS/FAIL line per
criterion and then assert.  Run this file directly for the summary alone.
"""
import contextlib
import io
import json
import random
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reference_tables import E6_ROWS, E7_ROWS, E7_WORD_FIXES  # noqa: E402

from schubcalc import cli, csm, exceptl, orbitcomb, schubidx, singloc, towers  # noqa: E402
from schubcalc.rootsys import build  # noqa: E402
from schubcalc.weyl import (  # noqa: E402
    bruhat_leq,
    group,
    minimal_reps,
    random_reduced_word,
    reduced_words,
    weyl_group,
)


def _cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.run(list(argv))
    if code:
        raise RuntimeError(f"cli exited with {code}")
    return json.loads(buf.getvalue())


def _element(label, word):
    return group(label).element("" if word == "e" else word)


def _table_rows(label, rows):
    return {_element(label, r["word"]): (r["dim"], r["deg"]) for r in rows}


# ----------------------------------------------------------------- checks

def check_1():
    rows = _cli_json("degree-table", "--group", "E6", "--node", "6")["rows"]
    got = _table_rows("E6", rows)
    want = {_element("E6", w): (d, g) for w, d, g in E6_ROWS}
    named = [("123456", 6, 3), ("24315423456", 11, 12), ("1342543165423456", 16, 78)]
    ok = len(rows) == 27 and got == want and all(got[_element("E6", w)] == (d, g) for w, d, g in named)
    return ok, f"{len(rows)} rows, {sum(got.get(e) == v for e, v in want.items())}/27 match the printed table"


def check_2():
    rows = _cli_json("degree-table", "--group", "E7", "--node", "7")["rows"]
    got = _table_rows("E7", rows)
    want = {_element("E7", E7_WORD_FIXES.get(w, w)): (w, d, g) for w, d, g in E7_ROWS}
    bad = [f"{w}: printed deg {g}, computed {got[e][1]}" for e, (w, d, g) in want.items() if got.get(e) != (d, g)]
    named = [("243154234567", 12, 12), ("765423143542654317654234567", 27, 13110)]
    named_ok = all(got[_element("E7", w)] == (d, g) for w, d, g in named)
    same_multiset = Counter(got.values()) == Counter((d, g) for _, d, g in E7_ROWS)
    ok = len(rows) == 56 and not bad and named_ok
    detail = f"{len(rows)} rows, {56 - len(bad)}/56 match; (dim,deg) multiset equal: {same_multiset}"
    if bad:
        detail += "; mismatches: " + "; ".join(bad)
    return ok, detail


def check_3():
    spin = exceptl.spinor_over_cayley()
    frd = exceptl.cayley_over_freudenthal()
    ok = spin.perfect and frd.perfect
    return ok, f"OG(5,10)->E6/P6: {len(spin.pairs)} pairs; E6/P6->E7/P7: {len(frd.pairs)} pairs"


def _fl3_golden():
    g = group("A2")
    c = csm.csm_cell(g.element("12"))
    want = {"12": 1, "1": 1, "2": 2, "": 1}
    return {w.word_str: coeff for w, coeff in c.value.terms()} == want


def _csm_problems(c, below, other_classes):
    problems = list(csm.check_invariants(c))
    problems += [f"coefficient of {u.word_str or 'e'} is {c.coefficient(u)}" for u in below if c.coefficient(u) < 1]
    problems += [f"word {''.join(map(str, word))} disagrees" for word, value in other_classes if value != c.value]
    return problems


def check_4():
    failures = []
    count = 0
    for label in ("A1", "A2", "A3", "B2", "B3", "C3"):
        g = weyl_group(build(label[0], int(label[1:])))
        elements = g.all_elements()
        for w in elements:
            count += 1
            below = [u for u in elements if bruhat_leq(u, w)]
            others = [(word, csm.csm_cell(w, word).value) for word in reduced_words(w)]
            bad = _csm_problems(csm.csm_cell(w), below, others)
            failures += [f"{label} {w.word_str or 'e'}: {p}" for p in bad]
    rng = random.Random(20240601)
    e6 = minimal_reps(build("E", 6), [6])
    for w in e6.reps:
        count += 1
        below = [u for u in e6.reps if bruhat_leq(u, w)]
        words = [random_reduced_word(w, rng) for _ in range(3)]
        others = [(word, csm.csm_cell_parabolic(w, [6], word).value) for word in words]
        bad = _csm_problems(csm.csm_cell_parabolic(w, [6]), below, others)
        failures += [f"E6/P6 {w.word_str or 'e'}: {p}" for p in bad]
    golden = _fl3_golden()
    detail = f"{count} cells checked, Fl(3) golden value {'reproduced' if golden else 'WRONG'}"
    if failures:
        detail += f"; {len(failures)} failures, first: {failures[0]}"
    return not failures and golden, detail


def _fork_swap(word, rank):
    swap = {rank - 1: rank, rank: rank - 1}
    return tuple(swap.get(i, i) for i in word)


def check_5():
    bad = []
    checked = 0
    for rank in (3, 4):
        q = minimal_reps(build("D", rank), [1])
        middle = [w for w in q.reps if w.length == rank - 1]
        for w in q.reps:
            c = csm.csm_cell_parabolic(w, [1])
            coeffs = (c.coefficient(middle[0]), c.coefficient(middle[1]))
            if w in middle:
                # the involution exchanges these two cells, so their classes trade places
                other = middle[1 - middle.index(w)]
                swapped = csm.csm_cell_parabolic(other, [1])
                if (swapped.coefficient(middle[0]), swapped.coefficient(middle[1])) != coeffs[::-1]:
                    bad.append(f"D{rank} middle cells are not exchanged")
                continue
            checked += 1
            if coeffs[0] != coeffs[1]:
                bad.append(f"D{rank} {w.word_str}: {coeffs}")
    return not bad, f"{checked} involution-stable cells have equal middle coefficients; middle cells exchanged" + (
        f"; failures: {bad}" if bad else "")


def _sg_indices(max_n, max_k):
    for n in range(2, max_n + 1, 2):
        for k in range(1, min(max_k, n // 2) + 1):
            yield from schubidx.all_sg_indices(k, n)


def check_6():
    bad = []
    total = oracle = 0
    for idx in _sg_indices(12, 4):
        total += 1
        d = schubidx.dimension(idx)
        tower = towers.build_sg_tower(idx).total_dim
        if tower != d:
            bad.append(f"{idx}: tower {tower}, closed form {d}")
        if idx.n <= 8 and idx.k <= 3:
            oracle += 1
            kernel = singloc.generic_tangent_dim(idx, seed=oracle)
            if kernel != d:
                bad.append(f"{idx}: oracle {kernel}, closed form {d}")
    detail = f"{total} indices (tower = closed form), {oracle} with Jacobian kernel"
    if bad:
        detail += f"; {len(bad)} mismatches, first: {bad[0]}"
    return not bad, detail


def check_7():
    bad = []
    total = 0
    for idx in _sg_indices(8, 3):
        total += 1
        thm = singloc.theorem_singular_points(idx)
        orc = singloc.oracle_singular_points(idx)
        if thm != orc:
            bad.append(f"{idx}: theorem {len(thm)} points, oracle {len(orc)} points")
    line_idx = schubidx.sg(1, 6, (), (2,))
    line = [c.component_index for c in singloc.singular_locus(line_idx)]
    line_ok = line == [schubidx.sg(1, 6, (2,), ())] and (
        singloc.theorem_singular_points(line_idx) == singloc.oracle_singular_points(line_idx))
    # the equality case drops the type II candidate; the oracle decides whether that is right
    eq = schubidx.sg(2, 6, (3,), (1,))
    eq_ok = singloc.exclusion_applies(eq) and singloc.theorem_singular_points(eq) == singloc.oracle_singular_points(eq)
    ok = not bad and line_ok and eq_ok
    detail = (f"{total - len(bad)}/{total} indices agree; line locus in F_2 reported "
              f"{'and confirmed' if line_ok else 'but oracle finds it smooth'}; II-2 equality case "
              f"{'consistent' if eq_ok else 'inconsistent with oracle'}")
    if bad:
        detail += f"; first disagreements: {'; '.join(bad[:3])}"
    return ok, detail


def check_8():
    bad = []
    total = 0
    for idx in _sg_indices(10, 4):
        total += 1
        sm = singloc.smoothness(idx)
        if not sm.agrees:
            bad.append(f"{idx}: singular locus {'empty' if sm.smooth else 'nonempty'}, form {sm.form}")
    detail = f"{total - len(bad)}/{total} indices agree"
    if bad:
        detail += f"; first disagreements: {'; '.join(bad[:3])}"
    return not bad, detail


def check_9():
    from itertools import permutations, product

    bad = []
    cases = 0
    for w in permutations(range(1, 5)):
        for a in range(1, 5):
            cells = orbitcomb.orbit_cells(w, a)
            bar = orbitcomb.ibar(w, a)
            if len(cells) != 2 ** len(bar):
                bad.append(f"{w}, a={a}: {len(cells)} cells")
            for head in product((0, 1, 2), repeat=a - 1):
                v = list(head) + [1] + [0] * (4 - a)
                if sum(c.contains(v) for c in cells) != 1:
                    bad.append(f"{w}, a={a}: {v} not covered exactly once")
            for c in cells:
                cases += 1
                if not orbitcomb.verify_transitivity(w, a, c.I):
                    bad.append(f"{w}, a={a}, I={sorted(c.I)}: orbit dim "
                               f"{orbitcomb.orbit_dimension(w, c)} > {c.dim}")
    detail = f"{cases - len(bad)}/{cases} (w, a, I) cases pass"
    if bad:
        detail += f"; first failures: {'; '.join(bad[:3])}"
    return not bad, detail


def _expected_finite_log(idx):
    # Grassmannian: always; type A flags: h=1 or (h=2, k_1=1); SG: s=k-1, else undecided
    if isinstance(idx, schubidx.GrassIndex):
        return True
    if isinstance(idx, schubidx.FlagIndex):
        return True if idx.h == 1 or (idx.h == 2 and idx.steps[0] == 1) else None
    return True if idx.s == idx.k - 1 else None


def check_10():
    from itertools import combinations

    cases = []
    for n in range(2, 7):
        for k in range(1, n):
            cases += schubidx.all_grass_indices(k, n)
    for n in range(3, 6):
        for h in (1, 2, 3):
            for steps in combinations(range(1, n), h):
                cases += schubidx.all_flag_indices(steps, n)
    cases += list(_sg_indices(8, 3))
    bad = [str(i) for i in cases if towers.build_tower(i).finite_log != _expected_finite_log(i)]
    return not bad, f"{len(cases) - len(bad)}/{len(cases)} verdicts match the truth table"


CHECKS = {n: globals()[f"check_{n}"] for n in range(1, 11)}


def _line(n, ok, detail, seconds):
    return f"ACCEPTANCE {n:2d}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}"


@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n, capsys):
    start = time.perf_counter()
    ok, detail = CHECKS[n]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail, time.perf_counter() - start))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, check in CHECKS.items():
        start = time.perf_counter()
        ok, detail = check()
        failed += not ok
        print(_line(n, ok, detail, time.perf_counter() - start), flush=True)
    sys.exit(1 if failed else 0)
