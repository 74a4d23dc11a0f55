"""Shared rings, example modules and corpus helpers."""

import random

import pytest

from multireg import (
    FreeModuleSpec,
    MatrixOverS,
    Poly,
    Presentation,
    RingSpec,
    ideal_matrix,
    irrelevant_ideal,
    monomials_of_degree,
    poly_from_string,
    saturate,
)


@pytest.fixture(scope="session")
def P11():
    return RingSpec((1, 1))


@pytest.fixture(scope="session")
def P12():
    return RingSpec((1, 2))


@pytest.fixture(scope="session")
def P22():
    return RingSpec((2, 2))


@pytest.fixture(scope="session")
def P111():
    return RingSpec((1, 1, 1))


def pp(ring, text):
    return poly_from_string(ring, text)


@pytest.fixture(scope="session")
def not_linear_module(P11):
    """The rank-4 module whose truncation at (1,0) is quasilinear but
    not linear; its Betti numbers are symmetric in the two factors."""
    return _not_linear(P11, mirror=False)


@pytest.fixture(scope="session")
def not_linear_mirror(P11):
    return _not_linear(P11, mirror=True)


def _not_linear(ring, mirror):
    a, b = ("y", "x") if mirror else ("x", "y")
    rows = [(0, 1), (0, 1), (1, 0), (1, 0)] if mirror else \
        [(1, 0), (1, 0), (0, 1), (0, 1)]
    Z = Poly.zero(ring)
    e = lambda s: pp(ring, s)
    entries = [
        [-e(f"{b}0"), Z, -e(f"{b}0"), Z],
        [Z, -e(f"{b}1"), Z, -e(f"{b}1")],
        [e(f"{a}0"), e(f"{a}1"), Z, Z],
        [Z, Z, e(f"{a}1"), e(f"{a}0")],
    ]
    F0 = FreeModuleSpec(ring, rows)
    rel = MatrixOverS.from_entries(FreeModuleSpec(ring, [(1, 1)] * 4),
                                   F0, entries)
    return Presentation(F0, rel)


@pytest.fixture(scope="session")
def hyperelliptic(P12):
    """Saturated ideal of the genus-4 hyperelliptic curve of bidegree
    (2,8), as a matrix into S; computed once per session."""
    f1 = pp(P12, "x0^2*y0^2 + x1^2*y1^2 + x0*x1*y2^2")
    f2 = pp(P12, "x0^3*y2 + x1^3*(y0 + y1)")
    return saturate(ideal_matrix(P12, [f1, f2]), irrelevant_ideal(P12))


@pytest.fixture(scope="session")
def hyperelliptic_module(hyperelliptic):
    return Presentation(hyperelliptic.target, hyperelliptic)


HYPERELLIPTIC_BETTI = {
    (0, (0, 0)): 1,
    (1, (3, 1)): 1, (1, (2, 2)): 1, (1, (2, 3)): 2, (1, (1, 5)): 3,
    (1, (0, 8)): 1,
    (2, (3, 3)): 3, (2, (2, 5)): 6, (2, (1, 7)): 1, (2, (1, 8)): 2,
    (3, (3, 5)): 3, (3, (2, 7)): 2, (3, (2, 8)): 1,
    (4, (3, 7)): 1,
}

HYPERELLIPTIC_TRUNC_21_BETTI = {
    (0, (2, 1)): 9,
    (1, (3, 1)): 7, (1, (2, 2)): 10, (1, (2, 3)): 2,
    (2, (3, 2)): 6, (2, (2, 3)): 3, (2, (3, 3)): 3,
    (3, (3, 3)): 2,
}

SB_P12_BETTI = {
    (0, (0, 0)): 1,
    (1, (1, 1)): 6,
    (2, (1, 2)): 6, (2, (2, 1)): 3,
    (3, (1, 3)): 2, (3, (2, 2)): 3,
    (4, (2, 3)): 1,
}


def random_homogeneous_gen(ring, rng, maxdeg=2, binomial_rate=0.5):
    """One random monomial or binomial, homogeneous, nonzero degree."""
    while True:
        d = tuple(rng.randint(0, maxdeg) for _ in range(ring.r))
        if any(d):
            break
    monos = monomials_of_degree(ring, d)
    m1 = rng.choice(monos)
    if rng.random() >= binomial_rate or len(monos) == 1:
        return Poly.monomial(ring, m1)
    m2 = rng.choice(monos)
    if m2 == m1:
        return Poly.monomial(ring, m1)
    return Poly.monomial(ring, m1) + Poly.monomial(
        ring, m2, rng.randint(1, ring.p - 1))


def random_saturated_quotient(ring, rng, ngens=None, maxdeg=2,
                              max_hilbert=None, probe=None):
    """A random saturated monomial/binomial quotient of the ring, or
    None when the draw degenerates (unit or zero ideal, or a quotient
    too big for the requested budget)."""
    from multireg import hilbert_function
    if ngens is None:
        ngens = rng.randint(2, 3)
    gens = [random_homogeneous_gen(ring, rng, maxdeg) for _ in range(ngens)]
    I = saturate(ideal_matrix(ring, gens), irrelevant_ideal(ring))
    if I.source.rank == 0:
        return None
    if any(not c.terms[0][0][0] for c in I.columns):
        return None  # unit ideal
    M = Presentation(I.target, I)
    if max_hilbert is not None:
        if probe is None:
            probe = tuple(6 for _ in range(ring.r))
        if hilbert_function(M, probe) > max_hilbert:
            return None
    return M


def saturated_corpus(ring, count, seed, **kw):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        M = random_saturated_quotient(ring, rng, **kw)
        if M is not None:
            out.append(M)
    return out
