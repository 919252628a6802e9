"""Desk-scale self-checks runnable from the command line.

Each check is a small, fast version of one verification theme from the
test suite: oracle agreement for the word problem, index profiles against
brute search, fusion bookkeeping, obstruction verdicts, tree geometry.
The CLI subcommand ``selftest`` runs them all and reports counts, so the
installed package can vouch for itself without a test harness.
"""

from __future__ import annotations

import random

from . import fusion, hecke, oracles, rigidity, tree, words
from .words import bs, word_nf


def _check_word_problem(seed: int) -> None:
    rng = random.Random(seed)
    for G in (bs(2, 3), bs(2, -2), bs(3, 6), bs(1, 2)):
        for _ in range(300):
            w = oracles.random_word(rng, max_b=5, max_exp=10**4)
            nf = words.normalize(w, G)
            assert words.normalize(words.to_group_word(nf), G) == nf
            assert (nf == words.IDENTITY) == oracles.oracle_is_identity(w, G, rng)
            assert len(nf.prefix) == oracles.oracle_b_length(w, G, rng)
            if nf == words.IDENTITY:
                assert words.abelianization_image(w, G) == (0, 0)
            variant = oracles.with_inserted_relator(w, G, rng)
            assert words.normalize(variant, G) == nf


def _check_profiles(seed: int) -> None:
    rng = random.Random(seed)
    for n in range(2, 5):
        for am in range(n, 5):
            for m in (am, -am):
                G = bs(n, m)
                assert hecke.coset_profile(word_nf("b", G), G) == hecke.CosetProfile(
                    n, abs(m), n if m > 0 else -n
                )
                assert hecke.coset_profile(word_nf("B", G), G) == hecke.CosetProfile(
                    abs(m), n, m
                )
    G = bs(2, 3)
    for _ in range(25):
        g = oracles.random_nf(rng, G, max_b=3, max_exp=20)
        p = hecke.coset_profile(g, G)
        assert (p.l, p.r, p.L) == oracles.oracle_profile(g, G)
        q = hecke.coset_profile(words.invert(g, G), G)
        assert p.l == q.r and p.r == q.l


def _check_index_values(seed: int) -> None:
    rng = random.Random(seed)
    G = bs(2, 3)
    seen = set()
    for _ in range(400):
        g = oracles.random_nf(rng, G, max_b=4, max_exp=12)
        l = hecke.coset_profile(g, G).l
        seen.add(l)
        assert l == 1 or hecke.f_set_member(l, G)
    assert {1, 2, 3, 4}.issubset(seen)


def _check_self_inverse_fusion(seed: int) -> None:
    rng = random.Random(seed)
    G = bs(2, 3)
    dec = fusion.decompose_self_inverse(word_nf("b", G), G)
    assert [t.as_json() for t in dec.terms] == [
        {"char": "0/1"},
        {"char": "1/3"},
        {"char": "2/3"},
        {"coset": "b a b^-1", "l": 3, "r": 3},
    ]
    done = 0
    while done < 20:
        g = oracles.random_nf(rng, G, max_b=2, max_exp=10)
        p = hecke.coset_profile(g, G)
        try:
            d = fusion.decompose_self_inverse(g, G)
        except ValueError:
            continue  # a conjugate collapses; the decomposition rejects g
        done += 1
        assert d.left_dim == d.right_dim == p.l * p.r
        for i, x in enumerate(d.terms):
            for y in d.terms[i + 1 :]:
                assert not fusion.isomorphic(x, y, G)


def _check_exchange(seed: int) -> None:
    rng = random.Random(seed)
    G = bs(2, 3)
    omega_pool = fusion.enumerate_omega(G, 12)
    for _ in range(10):
        w = rng.choice(omega_pool)
        g = oracles.random_nf(rng, G, max_b=2, max_exp=8)
        p = hecke.coset_profile(g, G)
        partners = fusion.exchange_partners(w, g, G)
        for mu in partners:
            assert mu.power(p.L) == w.power(p.r)
        brute = {
            mu
            for mu in fusion.enumerate_omega(G, 72)
            if mu.power(p.L) == w.power(p.r)
        }
        assert {mu for mu in partners if mu.den <= 72} == brute


def _check_obstruction(seed: int) -> None:
    del seed
    for n1 in range(2, 5):
        for am1 in range(n1, 5):
            for m1 in (am1, -am1):
                for n2 in range(2, 5):
                    for am2 in range(n2, 5):
                        for m2 in (am2, -am2):
                            v = rigidity.crossed_product_obstruction(n1, m1, n2, m2)
                            if n1 != n2:
                                expect = rigidity.N_MISMATCH
                            elif am1 != am2:
                                expect = rigidity.ABS_M_MISMATCH
                            elif n1 != am1 and m1 != m2:
                                expect = rigidity.SIGN_MISMATCH
                            else:
                                expect = rigidity.NO_OBSTRUCTION
                            assert v.kind == expect
    wit = rigidity.crossed_product_obstruction(2, 3, 2, -3).witness
    assert wit is not None and wit.t == 1
    assert str(wit.omega) == "1/12" and str(wit.mu) == "1/18"


def _check_isomorphism(seed: int) -> None:
    del seed
    values = [v for v in range(-4, 5) if v]
    for n1 in values:
        for m1 in values:
            assert rigidity.canonicalize(*rigidity.canonicalize(n1, m1)) == rigidity.canonicalize(n1, m1)
            for n2 in values:
                for m2 in values:
                    same = rigidity.canonicalize(n1, m1) == rigidity.canonicalize(n2, m2)
                    assert rigidity.is_isomorphic(n1, m1, n2, m2) == same


def _check_tree(seed: int) -> None:
    rng = random.Random(seed)
    G = bs(2, 3)
    assert tree.classify(word_nf("b", G), G) == tree.Hyperbolic(1)
    assert tree.classify(word_nf("b a B", G), G) == tree.Elliptic(word_nf("b", G))
    ball = tree.export_ball(tree.base_vertex(G), 1, G)
    n_vertices = sum(1 for line in ball.splitlines() if line.endswith('";'))
    assert n_vertices == 1 + G.n + abs(G.m)
    for _ in range(20):
        g = oracles.random_nf(rng, G, max_b=3, max_exp=10)
        z = rng.choice([-3, -2, -1, 1, 2, 3])
        assert tree.power_classify_consistency(g, z, G)
    for _ in range(10):
        g = oracles.random_elliptic(rng, G, deep=True)
        h = oracles.random_elliptic(rng, G, deep=True)
        if isinstance(tree.classify(words.multiply(g, h, G), G), tree.Elliptic):
            assert tree.common_fixed_vertex([g, h], G, 8) is not None


def _check_quasi_centralizer(seed: int) -> None:
    rng = random.Random(seed)
    G = bs(2, -2)
    assert not hecke.qc_member(word_nf("b", G), G)
    assert hecke.qc_member(word_nf("b^2", G), G)
    for _ in range(30):
        g = oracles.random_nf(rng, G, max_b=3, max_exp=10)
        gb = words.multiply(g, word_nf("b", G), G)
        assert hecke.centralizes(g, 2, G) != hecke.centralizes(gb, 2, G)


CHECKS = [
    ("word problem vs pinch oracle", _check_word_problem),
    ("coset index profiles", _check_profiles),
    ("index value set", _check_index_values),
    ("self-inverse fusion", _check_self_inverse_fusion),
    ("exchange partners", _check_exchange),
    ("obstruction matrix", _check_obstruction),
    ("isomorphism criterion", _check_isomorphism),
    ("tree actions", _check_tree),
    ("quasi-centralizer index two", _check_quasi_centralizer),
]


def run_selftest(seed: int = 0) -> tuple[int, int, list[str]]:
    """Run every check; returns (passed, failed, report lines)."""
    passed = failed = 0
    lines = []
    for name, fn in CHECKS:
        try:
            fn(seed)
        except AssertionError as exc:
            failed += 1
            detail = f": {exc}" if str(exc) else ""
            lines.append(f"FAIL {name}{detail}")
        else:
            passed += 1
            lines.append(f"ok   {name}")
    lines.append(f"{passed} passed, {failed} failed")
    return passed, failed, lines
