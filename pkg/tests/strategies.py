from hypothesis import strategies as st

from omx.realize import Arrangement

signs = st.sampled_from((-1, 0, 1))


def sign_vectors(k):
    return st.tuples(*[signs] * k)


def vector(dim, bound=2):
    return st.tuples(*[st.integers(-bound, bound)] * dim)


@st.composite
def arrangements(draw, dims=(2, 3), max_n=4, bound=2, g=None):
    dim = draw(st.sampled_from(dims))
    n = draw(st.integers(1, max_n))
    vecs = tuple(draw(vector(dim, bound)) for _ in range(n))
    gv = g if g is not None else draw(vector(dim, bound).filter(any))
    return Arrangement(vecs, gv)
