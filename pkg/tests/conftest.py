import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from stargen import Digraph  # noqa: E402


@st.composite
def digraphs(draw, min_n=1, max_n=6, min_outdegree_one=True):
    """Random labeled digraphs; by default every vertex keeps at least one prey."""
    n = draw(st.integers(min_n, max_n))
    low = 1 if min_outdegree_one else 0
    rows = draw(
        st.lists(st.integers(low, 2**n - 1), min_size=n, max_size=n)
    )
    return Digraph(n, rows)
