"""Brute-force generation check: products of the generators span the loop
homology subalgebra of k[K]^! with exactly the predicted graded dimensions.

The loop homology series is 1/P with P the signed Euler-characteristic
polynomial.  If the generators really generate, monomials in them span a
subspace of that dimension in every degree; if the relation count is right,
the dimension is not smaller either.  For the pentagon this pins the single
degree-5 relation numerically: 50 degree-5 monomials span a 49-dimensional
space.
"""

from fractions import Fraction

from looppres.exactlin import GF, QQ, ZZ, ExactMatrix, rank
from looppres.homotopy import char_polynomial, series_inverse
from looppres.presentation import gptw_generators, pc_algebra
from looppres.simplicial import (
    clique_complex,
    cycle_complex,
    graph_complex,
    path_complex,
    simplex,
)


def generated_span_dims(k, ring, max_deg):
    """Dimension, per degree, of the span of monomials in the generators."""
    algebra = pc_algebra(k, ring)
    gens = gptw_generators(k, ring)
    products = {0: [algebra.one()]}
    for d in range(1, max_deg + 1):
        layer = []
        for g in gens:
            lower = products.get(d - g.degree)
            if not lower:
                continue
            for elem in lower:
                prod = elem * g.value
                if not prod.is_zero():
                    layer.append(prod)
        products[d] = layer
    dims = [0] * (max_deg + 1)
    dims[0] = 1
    for d in range(1, max_deg + 1):
        layer = products[d]
        if not layer:
            continue
        words = sorted({w for elem in layer for w, _ in elem.terms})
        index = {w: i for i, w in enumerate(words)}
        mat = ExactMatrix.zeros(len(words), len(layer), ring)
        for col, elem in enumerate(layer):
            for w, c in elem.terms:
                mat.data[index[w]][col] = c
        dims[d] = rank(mat)
    return dims


def expected_loop_dims(k, max_deg):
    return series_inverse(char_polynomial(k), max_deg)


def test_pentagon_span_dims_certify_single_relation():
    pentagon = cycle_complex(5)
    for ring in (QQ, GF(2)):
        dims = generated_span_dims(pentagon, ring, 5)
        # 1, 0, 5, 5, 25, 49: ten generators, one relation in degree 5
        assert dims == expected_loop_dims(pentagon, 5) == [1, 0, 5, 5, 25, 49]


def test_square_span_dims():
    square = cycle_complex(4)
    for ring in (QQ, GF(2), GF(3)):
        dims = generated_span_dims(square, ring, 6)
        assert dims == expected_loop_dims(square, 6) == [1, 0, 2, 0, 3, 0, 4]


def test_simplex_span_is_trivial():
    for m in (2, 3):
        dims = generated_span_dims(simplex(m), QQ, 4)
        assert dims == [1, 0, 0, 0, 0]


def test_tree_span_dims_and_freeness():
    # for trees the subalgebra is free: P = 1 - sum of t^{deg g} over gens
    star5 = graph_complex(5, [(1, j) for j in range(2, 6)])
    for k in (path_complex(4), star5):
        gens = gptw_generators(k, ZZ)
        counts = {}
        for g in gens:
            counts[g.degree] = counts.get(g.degree, 0) + 1
        p = char_polynomial(k)
        expect = [1] + [0] * max(counts)
        for d, c in counts.items():
            expect[d] -= c
        while expect and expect[-1] == 0:
            expect.pop()
        assert p == expect
        dims = generated_span_dims(k, QQ, 5)
        assert dims == expected_loop_dims(k, 5)


def test_random_flag_span_dims():
    for edges, m in [
        ([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)], 5),
        ([(1, 2), (3, 4)], 4),
        ([(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)], 4),
    ]:
        k = clique_complex(m, edges)
        dims = generated_span_dims(k, QQ, 5)
        assert dims == expected_loop_dims(k, 5), edges
