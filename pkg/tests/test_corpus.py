from ngpd.corpus import (bisimplicial_corpus, equivalence_corpus, generate_corpus, groupoid_corpus,
                         sset_corpus)
from ngpd.io import serialize_document

SMALL_COUNT = 75


def texts(seed, size):
    return [serialize_document(d) for d in generate_corpus(seed, size)]


def test_seed_zero_contains_z2_nerve():
    names = {d.metadata["name"] for d in generate_corpus(0)}
    assert "nerve/Z2" in names
    assert any(n.startswith("spine-failure/") for n in names)
    assert any(n.startswith("2-groupoid/K(") for n in names)
    assert any(n.startswith("2-groupoid/lift(") for n in names)
    assert any(n.startswith("bisimplicial/N(") for n in names)


def test_same_seed_same_bytes():
    assert texts(0, "small") == texts(0, "small")
    assert texts(3, "standard") == texts(3, "standard")


def test_small_count_is_stable():
    assert len(generate_corpus(0, "small")) == SMALL_COUNT
    assert len(generate_corpus(5, "small")) == SMALL_COUNT
    assert len(generate_corpus(0, "standard")) == SMALL_COUNT + 16


def test_seeds_change_random_part_only():
    a, b = groupoid_corpus(0), groupoid_corpus(1)
    assert [n for n, _ in a[:18]] == [n for n, _ in b[:18]]
    assert any(G != H for (_, G), (_, H) in zip(a[18:], b[18:]))


def test_budgets():
    assert len(groupoid_corpus(0)) >= 20
    for _, G in groupoid_corpus(0):
        assert len(G.objects) <= 5 and G.order <= 16
    for _, G in equivalence_corpus():
        assert len(G.objects) <= 3 and G.order <= 8
    bis = bisimplicial_corpus()
    assert len(bis) >= 10 and sum("disconnected" in f.tags for f in bis) >= 2
    tags = [("homotopy-discrete" in f.tags) for f in sset_corpus(0)]
    assert any(tags) and not all(tags)
