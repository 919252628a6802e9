"""Isomorphism and crossed-product obstruction reports for BS(n, m).

BS(n1, m1) and BS(n2, m2) are isomorphic iff {n1, m1} = {eps n2, eps m2}
for some sign eps; every pair therefore has a unique canonical form with
1 <= n <= |m|.  The group is amenable iff |n| = 1 or |m| = 1.

For canonical nonamenable parameters the crossed-product comparison is an
obstruction test: stable isomorphism of the crossed products forces
n1 = n2 and |m1| = |m2| always, and additionally m1 = m2 when n1 != |m1|.
The sign case carries an exact certificate: a pair of roots of unity
omega, mu with omega^n = mu^m but mu^{2m} != 1, built from the smallest t
with |n0^t m0^t| > 2 as

    omega = exp(2 pi i / (k n0^{t+1} m0^t)),
    mu    = exp(2 pi i / (k n0^t m0^{t+1})).

A verdict of no_obstruction asserts nothing beyond the test not applying.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .words import BsPresentation, NormalForm, bs
from .hecke import coset_profile
from .fusion import ONE, RootOfUnity, omega_member

__all__ = [
    "NO_OBSTRUCTION",
    "N_MISMATCH",
    "ABS_M_MISMATCH",
    "SIGN_MISMATCH",
    "SignWitness",
    "RigidityVerdict",
    "canonicalize",
    "is_isomorphic",
    "is_amenable",
    "recover_parameters",
    "sign_witness",
    "crossed_product_obstruction",
    "w_relation",
]

NO_OBSTRUCTION = "no_obstruction"
N_MISMATCH = "n_mismatch"
ABS_M_MISMATCH = "abs_m_mismatch"
SIGN_MISMATCH = "sign_mismatch"


@dataclass(frozen=True, slots=True)
class SignWitness:
    """Certificate separating BS(n, m) from BS(n, -m) when n != |m|."""

    t: int
    omega: RootOfUnity
    mu: RootOfUnity

    def as_json(self) -> dict:
        return {"t": self.t, "omega": str(self.omega), "mu": str(self.mu)}


@dataclass(frozen=True, slots=True)
class RigidityVerdict:
    kind: str
    witness: SignWitness | None = None

    def as_json(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness.as_json()
        return out


def _require_nonzero(*values: int) -> None:
    if any(v == 0 for v in values):
        raise ValueError("parameters must be nonzero")


def canonicalize(n: int, m: int) -> tuple[int, int]:
    """The unique pair with 1 <= n' <= |m'| reachable by the isomorphism
    moves (n, m) -> (-n, -m) and (n, m) -> (m, n)."""
    _require_nonzero(n, m)
    for cand in ((n, m), (-n, -m), (m, n), (-m, -n)):
        if 1 <= cand[0] <= abs(cand[1]):
            return cand
    raise AssertionError("unreachable: some orientation is canonical")


def is_isomorphic(n1: int, m1: int, n2: int, m2: int) -> bool:
    """{n1, m1} = {eps n2, eps m2} as multisets for some eps in {1, -1}."""
    _require_nonzero(n1, m1, n2, m2)
    mine = sorted((n1, m1))
    return mine == sorted((n2, m2)) or mine == sorted((-n2, -m2))


def is_amenable(n: int, m: int) -> bool:
    _require_nonzero(n, m)
    return abs(n) == 1 or abs(m) == 1


def recover_parameters(profiles) -> tuple[int, int]:
    """Recover (n, |m|) from a sample of (l, r) index pairs.

    n is the least l-value above 1.  The ratios l/r all lie in the cyclic
    group generated by n/|m|; the largest sampled ratio below 1 is that
    generator, so |m| = n divided by it.  When every ratio is 1 the group
    has n = |m|.  Rejects samples holding no l > 1.
    """
    pairs = set(profiles)
    ls = {l for l, _ in pairs if l > 1}
    if not ls:
        raise ValueError("sample contains no profile with l > 1")
    n = min(ls)
    ratios = {Fraction(l, r) for l, r in pairs}
    below = [q for q in ratios if q < 1]
    rho = max(below) if below else Fraction(1)
    abs_m = Fraction(n) / rho
    if abs_m.denominator != 1:
        raise ValueError(f"sampled ratios are inconsistent: n={n}, generator={rho}")
    return n, abs_m.numerator


def sign_witness(n: int, m: int) -> SignWitness:
    """The exact certificate pair for canonical parameters with n != |m|;
    all defining relations are re-verified before returning."""
    if not 2 <= n <= abs(m):
        raise ValueError(f"need 2 <= n <= |m|, got ({n},{m})")
    if n == abs(m):
        raise ValueError("no sign witness exists when n = |m|")
    k = gcd(n, abs(m))
    n0, m0 = n // k, m // k
    base = abs(n0 * m0)
    t = 1
    while base**t <= 2:
        t += 1
    omega = RootOfUnity.from_fraction(Fraction(1, k * n0 ** (t + 1) * m0**t))
    mu = RootOfUnity.from_fraction(Fraction(1, k * n0**t * m0 ** (t + 1)))
    G = bs(n, m)
    if omega.power(n) != mu.power(m):
        raise RuntimeError("internal error: witness relation omega^n = mu^m fails")
    if mu.power(2 * m) == ONE:
        raise RuntimeError("internal error: witness has mu^(2m) = 1")
    if not (omega_member(omega, G) and omega_member(mu, G)):
        raise RuntimeError("internal error: witness roots fall outside Omega")
    return SignWitness(t, omega, mu)


def crossed_product_obstruction(n1: int, m1: int, n2: int, m2: int) -> RigidityVerdict:
    """Obstruction verdict for canonical nonamenable parameter pairs.

    Order of tests: n mismatch, then |m| mismatch, then, when n != |m|,
    sign mismatch with a verified witness.  no_obstruction only means the
    test does not separate the two crossed products.
    """
    for n, m in ((n1, m1), (n2, m2)):
        if not 2 <= n <= abs(m):
            raise ValueError(f"need canonical nonamenable parameters 2 <= n <= |m|, got ({n},{m})")
    if n1 != n2:
        return RigidityVerdict(N_MISMATCH)
    if abs(m1) != abs(m2):
        return RigidityVerdict(ABS_M_MISMATCH)
    if n1 != abs(m1) and m1 != m2:
        wit = sign_witness(n1, m1)
        if wit.omega.power(n1) != wit.mu.power(m1) or wit.mu.power(2 * m1) == ONE:
            raise RuntimeError("internal error: sign witness failed re-verification")
        return RigidityVerdict(SIGN_MISMATCH, wit)
    return RigidityVerdict(NO_OBSTRUCTION)


def w_relation(w: RootOfUnity, u: RootOfUnity, g: NormalForm, G: BsPresentation) -> bool:
    """The exchange relation w^{r(g)} = u^{L(g)}, as exact fractions."""
    if not (omega_member(w, G) and omega_member(u, G)):
        raise ValueError("both roots must lie in Omega")
    p = coset_profile(g, G)
    return w.power(p.r) == u.power(p.L)
