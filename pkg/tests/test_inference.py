import random

import pytest

from lexinduce import (
    CycleConstraints,
    InferenceParams,
    LexicalEntry,
    ScoredPair,
    UnknownLanguage,
    build_graph,
    cd_predict,
    transitive_predict,
)
from oracles import oracle_cd, random_multipartite_graph


def e(rep, lang, pos="n"):
    return LexicalEntry(rep, lang, pos)


PARAMS = InferenceParams(constraints=CycleConstraints(4, 6, 3))


def double_pivot_graph(direct_edge=False):
    a, b = e("a", "aa"), e("b", "bb")
    c1, c2 = e("c1", "cc"), e("c2", "cc")
    pairs = [(a, c1), (c1, b), (b, c2), (c2, a)]
    if direct_edge:
        pairs.append((a, b))
    return build_graph(pairs), a, b


def test_single_square_scores_two_thirds():
    g, a, b = double_pivot_graph()
    assert cd_predict(g, "aa", "bb", PARAMS) == {ScoredPair(a, b, 2 / 3, "cycle")}


def test_directly_connected_pair_excluded():
    g, _, _ = double_pivot_graph(direct_edge=True)
    assert cd_predict(g, "aa", "bb", PARAMS) == set()


def test_pos_mismatch_excluded():
    a, b = e("a", "aa", "n"), e("b", "bb", "v")
    c1, c2 = e("c1", "cc"), e("c2", "cc")
    g = build_graph([(a, c1), (c1, b), (b, c2), (c2, a)])
    assert cd_predict(g, "aa", "bb", PARAMS) == set()


def test_unknown_language():
    g, _, _ = double_pivot_graph()
    with pytest.raises(UnknownLanguage):
        cd_predict(g, "aa", "zz", PARAMS)


def test_matches_bruteforce_on_random_graphs():
    rng = random.Random(1234)
    for _ in range(60):
        n_langs = rng.randrange(3, 6)
        g = random_multipartite_graph(rng, n_langs, rng.randrange(8, 30), 0.25, pos_tags=("n", "v"))
        langs = g.languages
        src, tgt = rng.sample(langs, 2)
        got = {(sp.source, sp.target): sp.confidence for sp in cd_predict(g, src, tgt, PARAMS)}
        assert got == oracle_cd(g, src, tgt, PARAMS)


def test_confidence_monotone_in_constraints():
    rng = random.Random(99)
    loose = InferenceParams(constraints=CycleConstraints(4, 6, 3))
    shorter = InferenceParams(constraints=CycleConstraints(4, 4, 3))
    shallower = InferenceParams(constraints=CycleConstraints(4, 4, 2))
    for _ in range(20):
        g = random_multipartite_graph(rng, 3, 20, 0.3)
        src, tgt = g.languages[0], g.languages[1]
        base = {(sp.source, sp.target): sp.confidence for sp in cd_predict(g, src, tgt, loose)}
        for tight in (shorter, shallower):
            sub = {(sp.source, sp.target): sp.confidence for sp in cd_predict(g, src, tgt, tight)}
            for key, conf in sub.items():
                assert conf <= base[key]


def test_threaded_output_identical():
    rng = random.Random(5)
    g = random_multipartite_graph(rng, 4, 25, 0.3)
    src, tgt = g.languages[0], g.languages[1]
    assert cd_predict(g, src, tgt, PARAMS) == cd_predict(g, src, tgt, PARAMS, threads=4)


def test_insertion_order_irrelevant():
    rng = random.Random(6)
    g = random_multipartite_graph(rng, 3, 18, 0.3)
    pairs = list(g.edges())
    rng.shuffle(pairs)
    g2 = build_graph(pairs, extra_vertices=g.vertices)
    src, tgt = g.languages[0], g.languages[1]
    assert cd_predict(g, src, tgt, PARAMS) == cd_predict(g2, src, tgt, PARAMS)


# -- transitive translation -------------------------------------------------


def chain(*entries):
    return build_graph(list(zip(entries, entries[1:])))


def test_transitive_chain_within_depth():
    a, x, b = e("a", "aa", "np"), e("x", "xx", "np"), e("b", "bb", "np")
    g = chain(a, x, b)
    assert transitive_predict(g, "aa", "bb", {"np"}, 4) == {ScoredPair(a, b, 1.0, "transitive")}


def test_transitive_depth_bound():
    ents = [e(f"v{i}", lang, "np") for i, lang in enumerate(["aa", "cc", "dd", "ee", "ff", "bb"])]
    g = chain(*ents)  # path length 5
    assert transitive_predict(g, "aa", "bb", {"np"}, 4) == set()
    assert transitive_predict(g, "aa", "bb", {"np"}, 5) == {ScoredPair(ents[0], ents[-1], 1.0, "transitive")}


def test_transitive_intermediate_pos_restriction():
    a, x, b = e("a", "aa", "np"), e("x", "xx", "n"), e("b", "bb", "np")
    g = chain(a, x, b)
    assert transitive_predict(g, "aa", "bb", {"np"}, 4) == set()


def test_transitive_adjacent_excluded():
    a, b = e("a", "aa", "np"), e("b", "bb", "np")
    g = build_graph([(a, b)])
    assert transitive_predict(g, "aa", "bb", {"np"}, 4) == set()


def test_transitive_pos_must_match_source():
    a, x, b = e("a", "aa", "np"), e("x", "xx", "num"), e("b", "bb", "num")
    g = chain(a, x, b)
    # b reachable through pos_set vertices but has different POS than a
    assert transitive_predict(g, "aa", "bb", {"np", "num"}, 4) == set()
