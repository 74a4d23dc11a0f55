import itertools
import random

from multireg import (
    FreeModuleSpec,
    MatrixOverS,
    Poly,
    Presentation,
    betti,
    free_resolution,
    hilbert_function,
    irrelevant_ideal,
    is_minimal_complex,
    koszul_complex,
    minimalize,
    tensor_complexes,
)
from multireg import modp
from multireg.resolution import FreeComplex
from multireg.ringcore import free_basis_of_degree

from .conftest import SB_P12_BETTI, HYPERELLIPTIC_BETTI, pp


def _check_exactness(C, M, box, positive_only=True):
    """Degreewise rank identities: rank d_i + rank d_{i+1} spans each
    middle term, and the Euler characteristic equals the Hilbert
    function."""
    p = C.ring.p
    for d in box:
        dims = [len(free_basis_of_degree(t, d)) for t in C.terms]
        ranks = [modp.rank(diff.graded_block(d)[0], p)
                 for diff in C.differentials]
        for i in range(1, len(C.terms) - 1):
            assert ranks[i - 1] + ranks[i] == dims[i], (d, i)
        chi = 0
        sign = 1
        for dim in dims:
            chi += sign * dim
            sign = -sign
        assert chi == hilbert_function(M, d), d


def test_free_module_resolution(P12):
    S = Presentation.free(P12)
    res = free_resolution(S)
    assert len(res.terms) == 1
    assert res.terms[0].twists == ((0, 0),)


def test_koszul_betti(P11):
    K = koszul_complex(P11, [pp(P11, "x0"), pp(P11, "x1")])
    assert is_minimal_complex(K)
    assert betti(K).data == {(0, (0, 0)): 1, (1, (1, 0)): 2, (2, (2, 0)): 1}


def test_resolution_matches_koszul(P11):
    M = Presentation.quotient_by_ideal(P11, [pp(P11, "x0"), pp(P11, "x1")])
    res = free_resolution(M)
    assert betti(res).data == {(0, (0, 0)): 1, (1, (1, 0)): 2,
                               (2, (2, 0)): 1}


def test_sb_betti_golden(P12):
    SB = Presentation.quotient_by_ideal(P12, irrelevant_ideal(P12))
    res = free_resolution(SB)
    assert is_minimal_complex(res)
    assert betti(res).data == SB_P12_BETTI


def test_hyperelliptic_betti_golden(hyperelliptic_module):
    res = free_resolution(hyperelliptic_module)
    assert betti(res).data == HYPERELLIPTIC_BETTI


def test_minimalize_trivial_complex(P11):
    F = FreeModuleSpec(P11, ((0, 0),))
    C = FreeComplex([F, F], [MatrixOverS.identity(F)], check=False)
    assert not is_minimal_complex(C)
    mc = minimalize(C)
    assert all(t.rank == 0 for t in mc.terms)


def test_minimalize_idempotent(P11):
    K = koszul_complex(P11, [pp(P11, "x0"), pp(P11, "x1")])
    mc = minimalize(K)
    assert betti(mc).data == betti(K).data
    assert is_minimal_complex(mc)


def test_minimalize_padded_complex(P11):
    """A resolution padded with a trivial summand minimalizes back."""
    x0, x1 = pp(P11, "x0"), pp(P11, "x1")
    Z = Poly.zero(P11)
    one = Poly.one(P11)
    # Koszul complex of (x0, x1) with a trivial S(-1,0) <-1- S(-1,0)
    # summand spliced across homological degrees 0 and 1
    F0 = FreeModuleSpec(P11, [(0, 0), (1, 0)])
    F1 = FreeModuleSpec(P11, [(1, 0), (1, 0), (1, 0)])
    F2 = FreeModuleSpec(P11, [(2, 0)])
    d1 = MatrixOverS.from_entries(F1, F0, [
        [x0, x1, Z],
        [Z, Z, one],
    ])
    d2 = MatrixOverS.from_entries(F2, F1, [
        [-x1], [x0], [Z]])
    C = FreeComplex([F0, F1, F2], [d1, d2])
    mc = minimalize(C)
    assert is_minimal_complex(mc)
    assert betti(mc).data == {(0, (0, 0)): 1, (1, (1, 0)): 2,
                              (2, (2, 0)): 1}


def test_is_minimal_detects_units(P11):
    F = FreeModuleSpec(P11, ((0, 0),))
    C = FreeComplex([F, F], [MatrixOverS.identity(F)], check=False)
    assert not is_minimal_complex(C)
    K = koszul_complex(P11, [pp(P11, "x0"), pp(P11, "x1")])
    assert is_minimal_complex(K)


def test_betti_flags_nonminimal(P11):
    F = FreeModuleSpec(P11, ((0, 0),))
    C = FreeComplex([F, F], [MatrixOverS.identity(F)], check=False)
    t = betti(C)
    assert not t.from_minimal
    assert t.multiplicity(1, (0, 0)) == 1


def test_resolution_exactness_small(P11):
    gens = [pp(P11, "x0*y0"), pp(P11, "x1*y1"), pp(P11, "x0*y1")]
    M = Presentation.quotient_by_ideal(P11, gens)
    res = free_resolution(M)
    box = list(itertools.product(range(4), repeat=2))
    _check_exactness(res, M, box)


def test_resolution_exactness_module(not_linear_module):
    res = free_resolution(not_linear_module)
    box = list(itertools.product(range(4), repeat=2))
    _check_exactness(res, not_linear_module, box)


def test_resolution_length_bound(P11, P12):
    rng = random.Random(9)
    from .conftest import random_saturated_quotient
    for ring in (P11, P12):
        for _ in range(3):
            M = random_saturated_quotient(ring, rng)
            if M is None:
                continue
            res = free_resolution(M)
            assert len(res.terms) - 1 <= ring.nvars


def test_betti_input_order_invariance(P11):
    gens = [pp(P11, "x0*y0"), pp(P11, "x1*y1"), pp(P11, "x0*y1 - x1*y0")]
    tables = set()
    for perm in itertools.permutations(gens):
        M = Presentation.quotient_by_ideal(P11, list(perm))
        tables.add(tuple(sorted(betti(free_resolution(M)).data.items())))
    assert len(tables) == 1


def test_tensor_complexes_koszul(P11):
    """Tensor of the two one-variable Koszul complexes is the
    two-variable Koszul complex."""
    A = koszul_complex(P11, [pp(P11, "x0")])
    B = koszul_complex(P11, [pp(P11, "y0")])
    T = tensor_complexes(A, B)
    for i in range(len(T.differentials) - 1):
        assert T.differentials[i].compose(T.differentials[i + 1]).is_zero()
    K = koszul_complex(P11, [pp(P11, "x0"), pp(P11, "y0")])
    assert betti(T).data == betti(K).data


def test_betti_pretty_and_json(P12):
    SB = Presentation.quotient_by_ideal(P12, irrelevant_ideal(P12))
    t = betti(free_resolution(SB))
    text = t.pretty()
    assert "[1, 1]" in text and "6" in text
    js = t.to_json()
    assert js["schema"] == "multireg/betti/v1"
    assert {"index": 4, "degree": [2, 3], "multiplicity": 1} in js["entries"]
