"""Independent verification paths and random samplers.

The reducer here deliberately shares no code with the normal-form builder:
it works on raw syllable lists, looks for pinches b a^s b^-1 (n | s) and
b^-1 a^s b (m | s) anywhere in the word, and collapses them in a random
order.  Britton's criterion then decides triviality of the reduced word.
The index-profile oracle searches exponents one by one through the word
problem instead of propagating constraints.
"""

from __future__ import annotations

import random

from .words import (
    BsPresentation,
    GroupWord,
    NormalForm,
    a_power,
    concat_words,
    inverse_word,
    invert,
    multiply,
    normalize,
)

__all__ = [
    "pinch_eliminate",
    "oracle_is_identity",
    "oracle_b_length",
    "oracle_profile",
    "random_word",
    "random_nf",
    "with_inserted_relator",
    "random_elliptic",
]


def _pinch_sites(sylls: tuple[tuple[str, int], ...], G: BsPresentation) -> list[int]:
    """Start indices of collapsible triples b^{+} a^s b^{-} with n | s or
    b^{-} a^s b^{+} with m | s.  Merged syllables keep s nonzero, and a
    zero-power pinch would already have merged away."""
    sites = []
    for i in range(len(sylls) - 2):
        x, y, z = sylls[i], sylls[i + 1], sylls[i + 2]
        if x[0] != "b" or y[0] != "a" or z[0] != "b":
            continue
        if x[1] > 0 > z[1] and y[1] % G.n == 0:
            sites.append(i)
        elif x[1] < 0 < z[1] and y[1] % G.m == 0:
            sites.append(i)
    return sites


def pinch_eliminate(w: GroupWord, G: BsPresentation, rng: random.Random) -> GroupWord:
    """Britton-reduce by collapsing pinches in a random order."""
    sylls = w.syllables
    while True:
        sites = _pinch_sites(sylls, G)
        if not sites:
            return GroupWord(sylls)
        i = rng.choice(sites)
        x, y, z = sylls[i], sylls[i + 1], sylls[i + 2]
        step = 1 if x[1] > 0 else -1
        mid = y[1] // G.n * G.m if step == 1 else y[1] // G.m * G.n
        repl = [("b", x[1] - step), ("a", mid), ("b", z[1] + step)]
        sylls = GroupWord.of(sylls[:i] + tuple(repl) + sylls[i + 3 :]).syllables


def oracle_is_identity(w: GroupWord, G: BsPresentation, rng: random.Random) -> bool:
    return not pinch_eliminate(w, G, rng).syllables


def oracle_b_length(w: GroupWord, G: BsPresentation, rng: random.Random) -> int:
    reduced = pinch_eliminate(w, G, rng)
    return sum(abs(exp) for letter, exp in reduced.syllables if letter == "b")


def oracle_profile(g: NormalForm, G: BsPresentation, bound: int = 10**6) -> tuple[int, int, int]:
    """(l, r, L) by brute search: smallest exponents achieving membership,
    each conjugation decided by the word problem."""
    ginv = invert(g, G)
    l = r = None
    for z in range(1, bound + 1):
        if l is None and not multiply(multiply(g, a_power(z), G), ginv, G).prefix:
            l = z
        if r is None and not multiply(multiply(ginv, a_power(z), G), g, G).prefix:
            r = z
        if l is not None and r is not None:
            break
    if l is None or r is None:
        raise RuntimeError(f"profile search exceeded bound {bound}")
    for L in (l, -l):
        if multiply(multiply(g, a_power(L), G), ginv, G) == a_power(r):
            return l, r, L
    raise RuntimeError("no signed exponent matches, which contradicts almost normality")


# ---------------------------------------------------------------------------
# samplers

def random_word(rng: random.Random, max_b: int = 6, max_exp: int = 10**6) -> GroupWord:
    """Random free word: up to max_b b-letters in signed runs, interleaved
    with a-powers of magnitude up to max_exp."""
    items: list[tuple[str, int]] = []
    total_b = rng.randint(0, max_b)
    runs: list[int] = []
    while total_b > 0:
        run = rng.randint(1, total_b)
        runs.append(run if rng.random() < 0.5 else -run)
        total_b -= run
    for run in runs:
        if rng.random() < 0.8:
            items.append(("a", rng.randint(-max_exp, max_exp)))
        items.append(("b", run))
    if rng.random() < 0.8:
        items.append(("a", rng.randint(-max_exp, max_exp)))
    return GroupWord.of(items)


def random_nf(
    rng: random.Random, G: BsPresentation, max_b: int = 4, max_exp: int = 50
) -> NormalForm:
    return normalize(random_word(rng, max_b=max_b, max_exp=max_exp), G)


def with_inserted_relator(w: GroupWord, G: BsPresentation, rng: random.Random) -> GroupWord:
    """Insert a conjugate of the defining relator (or its inverse) at a random
    syllable boundary; the result is the same group element."""
    relator = GroupWord.of([("b", 1), ("a", G.n), ("b", -1), ("a", -G.m)])
    if rng.random() < 0.5:
        relator = inverse_word(relator)
    conj = random_word(rng, max_b=2, max_exp=8)
    padded = concat_words(concat_words(conj, relator), inverse_word(conj))
    pos = rng.randint(0, len(w.syllables))
    return GroupWord.of(w.syllables[:pos] + padded.syllables + w.syllables[pos:])


def random_elliptic(
    rng: random.Random, G: BsPresentation, max_conj_b: int = 2, deep: bool = False
) -> NormalForm:
    """A random conjugate u a^p u^-1; with deep=True the power p is a
    multiple of n*m, which fixes a whole neighborhood of the u-vertex."""
    u = normalize(random_word(rng, max_b=max_conj_b, max_exp=6), G)
    p = rng.randint(1, 4) * (1 if rng.random() < 0.5 else -1)
    if deep:
        p *= G.n * G.m
    return multiply(multiply(u, a_power(p), G), invert(u, G), G)
