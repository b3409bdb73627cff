import json

import pytest
from hypothesis import given, strategies as st

from ngpd.corpus import fixed_groupoids, nfunctor_corpus, two_groupoid_corpus
from ngpd.groupoid import GroupoidFunctor, cyclic, nerve, spread
from ngpd.io import (Document, ParseError, decode_id, encode_id, parse_document,
                     serialize_document, to_document)
from ngpd.multisimplicial import external_product
from ngpd.simplicial import boundary_simplex, standard_simplex


def round_trip(v):
    doc = to_document(v, name="x", seed="0", provenance="test")
    text = serialize_document(doc)
    back = parse_document(text)
    assert back == doc
    assert serialize_document(back) == text
    return back


def test_interval_round_trip():
    round_trip(standard_simplex(1, 2))


def test_nerve_round_trip():
    back = round_trip(nerve(cyclic(2), 3))
    assert back.kind == "sset" and back.payload.counts() == (1, 2, 4, 8)


@pytest.mark.parametrize("name,G", fixed_groupoids(), ids=lambda v: v if isinstance(v, str) else "")
def test_groupoid_round_trip(name, G):
    round_trip(G)


def test_other_kinds_round_trip():
    round_trip(external_product(nerve(cyclic(2), 2), boundary_simplex(2, 2)))
    G = spread(cyclic(2), 2)
    round_trip(GroupoidFunctor(G, G, {0: 1, 1: 0}, {f: (1 - f[0], f[1], 1 - f[2]) for f in G.morphism_list}))
    round_trip(two_groupoid_corpus()[6].value)
    round_trip(nfunctor_corpus()[1][1])


def test_truncated_text_reports_line():
    text = serialize_document(to_document(nerve(cyclic(2), 2)))
    cut = text[: len(text) // 2]
    with pytest.raises(ParseError, match=r"line \d+ column \d+"):
        parse_document(cut)


def test_bad_payload_reports_path():
    body = json.loads(serialize_document(to_document(standard_simplex(1, 1))))
    del body["payload"]["maps"]["d:0:0"]
    with pytest.raises(ParseError, match="at "):
        parse_document(json.dumps(body))
    body["kind"] = "nonsense"
    with pytest.raises(ParseError, match="kind"):
        parse_document(json.dumps(body))
    with pytest.raises(ParseError):
        parse_document("[1, 2]")


def test_format_tag_required():
    body = json.loads(serialize_document(to_document(cyclic(2))))
    body["format"] = "other/9"
    with pytest.raises(ParseError, match="format"):
        parse_document(json.dumps(body))


identifiers = st.recursive(
    st.one_of(st.integers(-1000, 1000), st.text(max_size=6)),
    lambda inner: st.lists(inner, max_size=3).map(tuple), max_leaves=8)


@given(identifiers)
def test_identifier_codec_round_trip(v):
    s = encode_id(v)
    assert isinstance(s, str)
    assert decode_id(s) == v
    assert type(decode_id(s)) is type(v)


def test_identifier_codec_examples():
    assert encode_id("a") == "a"
    assert encode_id(3) == "#3"
    assert encode_id("#x") == '#"#x"'
    assert encode_id((0, ("a", 1))) == '#[0,["a",1]]'
    with pytest.raises(TypeError):
        encode_id(True)
    with pytest.raises(ParseError):
        decode_id("#[1,")


def test_document_equality_uses_metadata():
    assert Document("groupoid", cyclic(2), {"a": "1"}) != Document("groupoid", cyclic(2), {})
