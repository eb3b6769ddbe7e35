import hypothesis.strategies as st
import pytest

from cartoonga import BladeIndex, Multivector


@st.composite
def int_multivectors(draw, dim=None, max_dim=8, max_terms=8, max_coeff=5):
    if dim is None:
        dim = draw(st.integers(1, max_dim))
    terms = draw(st.dictionaries(
        st.integers(0, (1 << dim) - 1),
        st.integers(-max_coeff, max_coeff),
        max_size=max_terms,
    ))
    return Multivector(dim, terms)


@st.composite
def mv_triples(draw, max_dim=8):
    dim = draw(st.integers(1, max_dim))
    return tuple(draw(int_multivectors(dim=dim)) for _ in range(3))


def blade(spec, dim):
    """Shorthand: blade("110", 3) or blade((1, 2), 3)."""
    if isinstance(spec, str):
        assert len(spec) == dim
        return BladeIndex.from_bits(spec)
    return BladeIndex.from_indices(spec, dim)


@pytest.fixture
def e():
    return blade


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
