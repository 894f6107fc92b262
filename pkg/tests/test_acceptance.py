"""Acceptance suite: one PASS/FAIL line per criterion, printed in the pytest
terminal summary (or directly when run as a script)."""

from __future__ import annotations

import time

import pytest

from subcubic.canonical import audit_propositions, canonical_coloring
from subcubic.corpus import enumerate_subcubic, family_instances
from subcubic.distinguishing import distinguishing_number, find_distinguishing_coloring
from subcubic.families import FAMILY_KINDS, FamilySpec, family, generate_family, named_graph
from subcubic.graph import emit_graph6, parse_graph6
from subcubic.naive import naive_connected_classes, naive_distinguishing_number, naive_subcubic_classes
from subcubic.prover import color_girth_high, fix_all_but_siblings, petersen_3coloring, prove_two_distinguishable
from subcubic.structure import detect_gadgets, recognize
from subcubic.symmetry import (
    automorphisms,
    find_automorphism,
    is_distinguishing,
    is_isomorphic,
    motion,
    moved_points,
    vertex_orbits,
)

from .conftest import ACCEPTANCE_LINES


def report(number: int, ok: bool, detail: str) -> bool:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


# ---------------------------------------------------------------------------


def test_criterion_1_named_distinguishing_numbers():
    expected = {"K1_3": 3, "K2_3": 3, "Cube": 3, "Petersen": 3, "K4": 4, "K3_3": 4, "C5": 3,
                "Heawood": 2, "Dodecahedron": 2}
    got, slowest = {}, 0.0
    for name in expected:
        t = time.perf_counter()
        got[name] = distinguishing_number(named_graph(name))
        slowest = max(slowest, time.perf_counter() - t)
    wrong = {k: v for k, v in got.items() if v != expected[k]}
    ok = report(1, not wrong, f"9 named graphs exact (slowest {slowest:.2f}s)" + (f"; wrong {wrong}" if wrong else ""))
    assert ok


def test_criterion_2_motion():
    t = time.perf_counter()
    got = (motion(named_graph("Cube")), motion(named_graph("Petersen")))
    elapsed = time.perf_counter() - t
    ok = report(2, got == (4, 6), f"m(Cube)={got[0]}, m(Petersen)={got[1]} in {elapsed:.2f}s")
    assert ok


def test_criterion_3_family_refutations():
    members = [("T", 2), ("T", 3), ("S", 2), ("R1", 2), ("R2", 2), ("R3", 2)]
    bad, times = [], []
    for kind, n in members:
        g = family(kind, n)
        t = time.perf_counter()
        no_two = find_distinguishing_coloring(g, 2) is None
        three = find_distinguishing_coloring(g, 3)
        times.append(time.perf_counter() - t)
        if not (no_two and three is not None and is_distinguishing(g, three)):
            bad.append(f"{kind}{n}")
    ok = report(3, not bad, f"D = 3 for {len(members)} members by exhaustive 2-coloring refutation "
                f"(slowest {max(times):.2f}s)" + (f"; failed {bad}" if bad else ""))
    assert ok


def test_criterion_4_sweep(corpus_report):
    records = [r for r in corpus_report.records if r.name.startswith("n") and r.n <= 7]
    three = {r.graph6 for r in records if r.D == 3}
    four = {r.graph6 for r in records if r.D == 4}
    canon = {name: next(r.graph6 for r in records if is_isomorphic(named_graph(name), parse_graph6(r.graph6)))
             for name in ("K1_3", "K2_3", "K4", "K3_3")}
    disagree = [r.graph6 for r in records if not r.ok]
    ok = (three == {canon["K1_3"], canon["K2_3"]} and four == {canon["K4"], canon["K3_3"]}
          and all(r.D <= 2 for r in records if r.graph6 not in three | four) and not disagree)
    ok = report(4, ok, f"{len(records)} connected max-degree-3 graphs with n <= 7: D=3 only K1_3, K2_3; "
                f"D=4 only K4, K3_3; {len(disagree)} classifier disagreements")
    assert ok


# canonical-coloring audits over closed neighborhoods, one root vertex per orbit


@pytest.fixture(scope="module")
def audits():
    graphs = [(f"n{n}", g) for n in range(4, 9) for g in enumerate_subcubic(n) if g.max_degree() == 3]
    graphs += family_instances()
    out = []
    for name, g in graphs:
        for orbit in vertex_orbits(g):
            k = sorted({orbit[0], *g.adj[orbit[0]]})
            c, audit = canonical_coloring(g, k)
            out.append((name, emit_graph6(g), k, audit_propositions(g, k, c, audit)))
    return out


GUARANTEED = ("goal", "white_up", "black_cross", "all_black", "black_white_siblings_below")


def _failures(audits, check):
    return [(code, k) for _, code, k, rep in audits if not rep.results[check].passed]


def test_criterion_5_canonical_properties(audits):
    counts = {check: len(_failures(audits, check)) for check in GUARANTEED + ("black_white_siblings",)}
    strict = counts["black_white_siblings"]
    ok_guaranteed = len(audits) >= 100 and all(counts[c] == 0 for c in GUARANTEED)
    detail = (f"{len(audits)} rooted instances; goal, white-up, black-cross, all-black: 0 failures; "
              f"sibling swap fixing the ball below the pair: {counts['black_white_siblings_below']} failures; "
              f"sibling swap fixing the whole ball except the pair: {strict} failures "
              f"(e.g. Petersen rooted at a closed neighborhood; see decisions ledger)")
    report(5, ok_guaranteed and strict == 0, detail)
    assert ok_guaranteed


@pytest.mark.xfail(strict=True, reason="the pointwise stabilizer of N[v] in some graphs swaps several pairs at once")
def test_criterion_5_strict_sibling_swap(audits):
    failures = _failures(audits, "black_white_siblings")
    assert failures == [], f"{len(failures)} instances, first {failures[:3]}"


def test_criterion_6_certificates(corpus_report):
    checks = {}
    heawood = prove_two_distinguishable(named_graph("Heawood"))
    checks["Heawood"] = heawood.strategy == "Lem6.2-Heawood" and is_distinguishing(named_graph("Heawood"), heawood.coloring)
    dodeca = prove_two_distinguishable(named_graph("Dodecahedron"))
    checks["Dodecahedron"] = dodeca.strategy == "Dodecahedron" and is_distinguishing(named_graph("Dodecahedron"), dodeca.coloring)
    mcgee = color_girth_high(named_graph("McGee"))
    checks["McGee"] = mcgee.strategy == "Lem6.1" and is_distinguishing(named_graph("McGee"), mcgee.coloring)
    for name in ("Pappus", "Desargues"):
        tr = color_girth_high(named_graph(name))
        checks[name] = tr.strategy == "Lem6.2-whisker" and is_distinguishing(named_graph(name), tr.coloring)
    fallbacks = corpus_report.by_strategy("fallback-search")
    repairs = corpus_report.by_strategy("repair")
    bad = [k for k, v in checks.items() if not v]
    ok = not bad and not fallbacks
    detail = (f"5 certificates distinguish; fallback-search fired {len(fallbacks)} times over "
              f"{len(corpus_report.records)} graphs; bounded repair of a construction used on {len(repairs)} "
              f"({', '.join(r.graph6 for r in repairs)})")
    ok = report(6, ok, detail + (f"; failed {bad}" if bad else ""))
    assert ok


def test_criterion_7_petersen_three_coloring():
    c = petersen_3coloring()
    white, black, red = c.histogram()
    ok = is_distinguishing(named_graph("Petersen"), c) and c.k == 3 and (red, black, white) == (1, 3, 6)
    ok = report(7, ok, f"distinguishing with k=3; {red} red / {black} black / {white} white")
    assert ok


def test_criterion_8_sibling_fixing_colorings():
    graphs = {"K1_3": named_graph("K1_3"), "K2_3": named_graph("K2_3"), "T2": family("T", 2),
              "T3": family("T", 3), "S2": family("S", 2), "R12": family("R1", 2), "R22": family("R2", 2),
              "R32": family("R3", 2)}
    bad = []
    for name, g in graphs.items():
        c, pair = fix_all_but_siblings(g)
        group = automorphisms(g, c)
        siblings = bool(set(g.adj[pair[0]]) & set(g.adj[pair[1]]))
        if group.order != 2 or moved_points(group.elements[1]) != sorted(pair) or not siblings:
            bad.append(name)
    ok = report(8, not bad, f"{len(graphs)} graphs: color-preserving group of order 2 swapping one sibling pair"
                + (f"; failed {bad}" if bad else ""))
    assert ok


def test_criterion_9_oracle_consistency():
    graphs = [g for n in range(1, 7) for g in naive_connected_classes(n)]
    d_mismatch = [emit_graph6(g) for g in graphs if distinguishing_number(g) != naive_distinguishing_number(g)]
    counts_naive = [len(naive_subcubic_classes(n)) for n in range(1, 7)]
    counts_pruned = [len(enumerate_subcubic(n)) for n in range(1, 7)]
    ok = not d_mismatch and counts_naive == counts_pruned
    ok = report(9, ok, f"D agrees on all {len(graphs)} connected graphs with n <= 6; class counts "
                f"{counts_pruned} (pruned) vs {counts_naive} (naive)")
    assert ok


def _tree_pairs_split(g, c, witness) -> bool:
    kids = witness.children(witness.root)
    if c[witness.root] != 1 or sorted(c[v] for v in kids) != [0, 0, 1]:
        return False
    for level in witness.levels[1:-1]:
        for p in level:
            if sorted(c[v] for v in witness.children(p)) != [0, 1]:
                return False
    return True


def test_criterion_10_large_families():
    problems = []
    for n in (4, 5):
        tree = family("T", n)
        for kind in FAMILY_KINDS:
            member = generate_family(FamilySpec(kind, n))
            g = member.graph
            label, witness = recognize(g)
            if str(label) != f"Family({kind},{n})":
                problems.append(f"{kind}{n} labelled {label}")
                continue
            if not kind.startswith("R"):
                continue
            # stripping the gadgets leaves T_n, with gadgets on its bottom sibling pairs
            occ = detect_gadgets(g)
            inner = {v for o in occ for v in o.interior}
            stripped, _ = g.induced(v for v in range(g.n) if v not in inner)
            if not is_isomorphic(stripped, tree):
                problems.append(f"{kind}{n} does not strip to T{n}")
            if {frozenset(o.ends) for o in occ} != {frozenset(p) for p in member.sibling_pairs}:
                problems.append(f"{kind}{n} gadgets off the leaf pairs")
            # the gadget coloring splits every tree sibling pair, so on T_n it fixes
            # everything; the only freedom left is one gadget pair
            c, pair = fix_all_but_siblings(g)
            if not _tree_pairs_split(g, c, witness):
                problems.append(f"{kind}{n} tree pairs not split")
            swap = find_automorphism(g, c, nontrivial=True)
            if swap is None or moved_points(swap) != sorted(pair):
                problems.append(f"{kind}{n} freedom is not the gadget pair")
            if find_automorphism(g, c, fixed=pair, nontrivial=True) is not None:
                problems.append(f"{kind}{n} has more freedom")
    ok = report(10, not problems, "all five families labelled correctly for n = 4, 5; gadget colorings of "
                "R1, R2, R3 restrict to sibling-splitting colorings of T_n and leave only one gadget pair free"
                + (f"; problems {problems}" if problems else ""))
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
