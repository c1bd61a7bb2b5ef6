"""Shared strategies for the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from d4green.green import ETA_INF, Eta, GreenElement, band, omega, projective, simple_one, simple_two

ETA_POOL = [Eta(Fraction(0)), Eta(Fraction(1)), Eta(Fraction(-2)), Eta(Fraction(5, 7)), ETA_INF]


def labels(max_s: int = 4, etas=None):
    etas = list(etas) if etas is not None else ETA_POOL
    residues = st.sampled_from([0, 1])
    sizes = st.integers(min_value=1, max_value=max_s)
    return st.one_of(
        st.builds(simple_one, residues),
        st.builds(simple_two, residues),
        st.builds(projective, residues),
        st.builds(omega, sizes, residues),
        st.builds(lambda s, r: omega(-s, r), sizes, residues),
        st.builds(band, sizes, residues, st.sampled_from(etas)),
    )


def green_elements(max_s: int = 3, max_terms: int = 4, max_coeff: int = 5):
    term = st.tuples(labels(max_s), st.integers(min_value=-max_coeff, max_value=max_coeff))
    return st.lists(term, max_size=max_terms).map(GreenElement)


def small_fractions(max_num: int = 6, max_den: int = 4):
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def rat_matrices(max_dim: int = 4, square: bool = False):
    from d4green.linalg import RatMatrix

    def build(rows, cols, flat):
        return RatMatrix.from_rows([flat[i * cols : (i + 1) * cols] for i in range(rows)])

    dims = st.integers(min_value=1, max_value=max_dim)
    if square:
        shape = dims.map(lambda n: (n, n))
    else:
        shape = st.tuples(dims, dims)
    return shape.flatmap(
        lambda rc: st.lists(
            small_fractions(), min_size=rc[0] * rc[1], max_size=rc[0] * rc[1]
        ).map(lambda flat: build(rc[0], rc[1], flat))
    )
