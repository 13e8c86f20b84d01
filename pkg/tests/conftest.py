import os
import random

from hypothesis import HealthCheck, settings, strategies as st

from orderpoly.poset import Poset

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_MAX_EXAMPLES", 50)),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def posets(draw, max_size=7, min_size=0):
    """Random posets: any set of pairs i < j generates an acyclic relation."""
    p = draw(st.integers(min_size, max_size))
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    perm = draw(st.permutations(range(p)))
    # scramble labels so construction has to re-sort
    return Poset(p, [(perm[a], perm[b]) for a, b in chosen])


def random_poset(rng: random.Random, max_size=7, min_size=1, density=0.35) -> Poset:
    p = rng.randint(min_size, max_size)
    perm = list(range(p))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(p) for j in range(i + 1, p) if rng.random() < density]
    return Poset(p, pairs)
