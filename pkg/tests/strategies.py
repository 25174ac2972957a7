import itertools

from hypothesis import strategies as st

from domramsey.graph import make_graph


@st.composite
def graphs(draw, min_order=1, max_order=12):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_permutation(draw, min_order=1, max_order=12):
    g = draw(graphs(min_order, max_order))
    return g, draw(st.permutations(range(g.order)))
