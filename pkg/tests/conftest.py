import random

import pytest

from surfhom import load_example
from surfhom.quiver import SurfaceAlgebra
from surfhom.surface import flip, natural_key

NAMED = ["fig2", "fig3", "fan_hexagon", "annulus_1_1", "annulus_2_1",
         "triangle_hexagon", "torus_1"]


def random_flip_descendant(T, seed, steps):
    rng = random.Random(seed)
    for _ in range(steps):
        T = flip(T, rng.choice(sorted(T.arcs, key=natural_key)))
    return T


def build_corpus():
    corpus = {name: load_example(name) for name in NAMED}
    fig2 = corpus["fig2"]
    for k in range(6):
        corpus[f"fig2_flip{k}"] = random_flip_descendant(fig2, seed=100 + k, steps=k + 1)
    return corpus


CORPUS = build_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture(scope="session")
def algebras():
    return {name: SurfaceAlgebra.from_triangulation(T) for name, T in CORPUS.items()}


@pytest.fixture
def fig2():
    return load_example("fig2")


@pytest.fixture
def fig3():
    return load_example("fig3")
