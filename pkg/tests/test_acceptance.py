"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import json
import random
import time

from burnkit.bounds import greedy_packing, trianglefree_preset, verify_tethering
from burnkit.campaign import CampaignSpec, CampaignState, run_campaign
from burnkit.enumeration import code_to_graph, free_tree_codes
from burnkit.exact import (
    burning_number_bruteforce,
    burning_number_exact,
    is_well_burnable,
    spanning_tree_oracle,
)
from burnkit.graph import eccentricity_radius, is_triangle_free, path_graph
from burnkit.intmath import ceil_sqrt
from burnkit.bounds import linear_threshold, linear_threshold_scan
from burnkit.trees import profile, thm41_predicate, thm42_predicate
from conftest import record
from helpers import random_bipartite_min_degree, random_connected, trees_bruteforce


def test_c1_path_law():
    t0 = time.perf_counter()
    bad = [n for n in range(1, 37) if burning_number_exact(path_graph(n)).burning_number != ceil_sqrt(n)]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    record("C1 path law n<=36", ok, f"mismatches={bad} time={elapsed:.2f}s")
    assert ok


def test_c2_small_trees_well_burnable():
    t0 = time.perf_counter()
    seen, bad = 0, []
    for n in range(1, 11):
        for code in free_tree_codes(n):
            seen += 1
            ok, _ = is_well_burnable(code_to_graph(code))
            if not ok:
                bad.append(code)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    record("C2 trees n<=10 well-burnable", ok, f"trees={seen} counterexamples={len(bad)} time={elapsed:.1f}s")
    assert ok


def test_c3_oracle_equivalence():
    rng = random.Random(2024)
    mismatches, checked = [], 0
    for n in range(1, 9):
        for code in free_tree_codes(n):
            g = code_to_graph(code)
            checked += 1
            if burning_number_exact(g).burning_number != burning_number_bruteforce(g):
                mismatches.append(code)
    for _ in range(200):
        g = random_connected(rng.randint(1, 8), rng)
        checked += 1
        if burning_number_exact(g).burning_number != burning_number_bruteforce(g):
            mismatches.append(g.edges())
    record("C3 exact == brute force", not mismatches, f"graphs={checked} mismatches={len(mismatches)}")
    assert not mismatches


def test_c4_packing_bound_soundness():
    rng = random.Random(77)
    violations, pairs = 0, 0
    for _ in range(500):
        g = random_connected(rng.randint(1, 16), rng)
        b = burning_number_exact(g).burning_number
        _, rad, _ = eccentricity_radius(g)
        for r in range(1, rad + 1):
            pairs += 1
            c = greedy_packing(g, r)
            if b > len(c.packing) + 2 * r:
                violations += 1
    record("C4 packing bound sound", violations == 0, f"graph-radius pairs={pairs} violations={violations}")
    assert violations == 0


def test_c5_spanning_tree_reduction():
    rng = random.Random(5150)
    mismatches = 0
    for _ in range(100):
        g = random_connected(rng.randint(1, 9), rng)
        if spanning_tree_oracle(g) != burning_number_exact(g).burning_number:
            mismatches += 1
    record("C5 spanning-tree oracle", mismatches == 0, f"graphs=100 mismatches={mismatches}")
    assert mismatches == 0


def test_c6_trianglefree_preset_validity():
    # generated graphs are bipartite, hence triangle-free, with min degree d
    rng = random.Random(6)
    violations = []
    for i in range(100):
        d = (3, 4, 5)[i % 3]
        g = random_bipartite_min_degree(d, rng)
        assert is_triangle_free(g) and min(g.degrees()) >= d and g.is_connected
        ok, where = verify_tethering(g, trianglefree_preset(d))
        if not ok:
            violations.append((d, g.n, where))
    detail = f"graphs=100 violations={len(violations)}"
    if violations:
        detail += f" first={violations[0]} (graphs with 4-cycles fall below the preset)"
    record("C6 triangle-free tethering preset", not violations, detail)
    assert not violations


def test_c7_linear_threshold():
    closed, scan = linear_threshold(9), linear_threshold_scan(9)
    ok = closed == scan == 1223
    record("C7 linear threshold h=9", ok, f"closed-form={closed} scan={scan}")
    assert ok


def test_c8_nonleaf_bound_audit():
    got = {(4, 25): thm42_predicate(25, 4), (4, 26): thm42_predicate(26, 4),
           (3, 81): thm42_predicate(81, 3), (3, 101): thm42_predicate(101, 3)}
    want = {(4, 25): False, (4, 26): True, (3, 81): False, (3, 101): True}
    last_fail = {d: max(n for n in range(2, 2000) if not thm42_predicate(n, d)) for d in (3, 4)}
    ok = got == want
    record("C8 non-leaf bound predicate audit", ok,
           f"values={ {f'd={d},n={n}': v for (d, n), v in got.items()} } "
           f"holds for all n>={last_fail[4] + 1} (d=4, claimed 25), n>={last_fail[3] + 1} (d=3, claimed 81)")
    assert ok


def test_c9_degree_predicate_implication():
    t0 = time.perf_counter()
    checked, violations = 0, []
    for n in range(2, 13):
        for code in free_tree_codes(n):
            g = code_to_graph(code)
            dp = profile(g)
            if dp.n_prime == 0 or not thm41_predicate(dp):
                continue
            checked += 1
            if burning_number_exact(g).burning_number > ceil_sqrt(n):
                violations.append(code)
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 1800
    record("C9 degree predicate implies well-burnable n<=12", ok,
           f"predicate-true trees={checked} violations={len(violations)} time={elapsed:.1f}s")
    assert ok


def _tallies(state):
    return json.dumps({str(k): v for k, v in sorted(state.per_n.items())}, sort_keys=True).encode()


def test_c10_campaign_resumability(tmp_path):
    spec = CampaignSpec(1, 16, 3, checkpoint_interval=50)
    full_path = tmp_path / "full.json"
    full = run_campaign(spec, checkpoint_path=full_path)
    reference = _tallies(full)
    # number of checkpoint writes in an uninterrupted run
    total = 0
    probe = None
    while probe is None or not probe.done:
        total += 1
        probe = run_campaign(spec, max_checkpoints=total)
    mismatched = []
    for k in range(1, total):
        path = tmp_path / f"ck{k}.json"
        run_campaign(spec, checkpoint_path=path, max_checkpoints=k)
        resumed = run_campaign(spec, resume=CampaignState.from_json(path.read_text()), checkpoint_path=path)
        final = CampaignState.from_json(path.read_text())
        if not (final.done and _tallies(final) == reference == _tallies(resumed)):
            mismatched.append(k)
    # and a run killed after every single checkpoint
    chain = tmp_path / "chain.json"
    run_campaign(spec, checkpoint_path=chain, max_checkpoints=1)
    hops = 1
    while not CampaignState.from_json(chain.read_text()).done:
        run_campaign(spec, resume=CampaignState.from_json(chain.read_text()), checkpoint_path=chain,
                     max_checkpoints=1)
        hops += 1
    chained = CampaignState.from_json(chain.read_text())
    ok = (not mismatched and _tallies(chained) == reference and not full.counterexamples
          and not chained.counterexamples)
    record("C10 campaign resumability T_3 n<=16", ok,
           f"boundaries={total - 1} mismatches={mismatched} chained hops={hops} "
           f"in_family={full.totals()['in_family']} counterexamples={len(full.counterexamples)}")
    assert ok


def test_c11_enumeration_counts():
    ours = [sum(1 for _ in free_tree_codes(n)) for n in range(1, 10)]
    oracle = [len(trees_bruteforce(n)) for n in range(1, 10)]
    record("C11 free-tree counts n<=9", ours == oracle, f"enumerated={ours} brute-force={oracle}")
    assert ours == oracle
