from hypothesis import strategies as st

from gmfsym.perm_core import Permutation


@st.composite
def permutations(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    images = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(images)


@st.composite
def perm_pairs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.permutations(list(range(1, n + 1))))
    q = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(p), Permutation(q)
