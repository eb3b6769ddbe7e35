import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartoonga.blades import BladeIndex, blade_product
from cartoonga.oracle import canonicalize


@pytest.mark.parametrize("word, sign, indices", [
    ([1, 2], 1, (1, 2)),
    ([2, 1], -1, (1, 2)),
    ([1, 2, 1], -1, (2,)),
    ([3, 3], 1, ()),
    ([], 1, ()),
    ([3, 2, 1], -1, (1, 2, 3)),
])
def test_examples(word, sign, indices):
    assert canonicalize(word, 3) == (sign, BladeIndex.from_indices(indices, 3))


def test_index_out_of_range():
    with pytest.raises(ValueError):
        canonicalize([0], 3)
    with pytest.raises(ValueError):
        canonicalize([4], 3)


words = st.integers(1, 8).flatmap(
    lambda dim: st.tuples(st.just(dim), st.lists(st.integers(1, dim), max_size=12))
)


@given(words)
def test_schedule_independence(dw):
    dim, word = dw
    assert canonicalize(word, dim) == canonicalize(word, dim, reverse_sweep=True)


@given(st.integers(1, 8).flatmap(lambda dim: st.tuples(
    st.just(dim),
    st.lists(st.integers(1, dim), max_size=8),
    st.lists(st.integers(1, dim), max_size=8),
)))
def test_concatenation_homomorphism(dst):
    dim, s, t = dst
    sa, a = canonicalize(s, dim)
    sb, b = canonicalize(t, dim)
    sign, c = blade_product(a, b)
    assert canonicalize(s + t, dim) == (sa * sb * sign, c)
