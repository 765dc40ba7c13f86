import json

from tropfan import (
    Graph,
    all_chains,
    chain_to_json,
    enumerate_types,
    psi_cof_to_radial,
    radial_alignments,
    radial_from_json,
    radial_to_json,
    tropical_type,
    type_from_json,
    type_to_json,
)


def test_type_round_trip():
    t = tropical_type(6, [frozenset({2, 3}), frozenset({4, 5, 6}), frozenset({5, 6})])
    doc = type_to_json(t)
    assert doc["ends"] == 6
    assert doc["ends_at"]["1"] == 0
    assert type_from_json(json.loads(json.dumps(doc))) == t


def test_type_round_trip_all_n5():
    for d, ts in enumerate_types(5).items():
        for t in ts:
            assert type_from_json(type_to_json(t)) == t


def test_radial_round_trip():
    t = tropical_type(7, [frozenset({2, 3}), frozenset({4, 5}), frozenset({6, 7})])
    for rt in radial_alignments(t):
        doc = radial_to_json(rt)
        assert len(doc["levels"]) == rt.num_levels
        assert radial_from_json(json.loads(json.dumps(doc))) == rt


def test_foreign_vertex_numbering_is_tolerated():
    # the same tree with shuffled vertex ids and reversed edge orientation
    doc = {
        "ends": 5,
        "edges": [[7, 3], [3, 9]],
        "ends_at": {"1": 7, "2": 9, "3": 9, "4": 3, "5": 7},
    }
    t = type_from_json(doc)
    assert t == tropical_type(5, [frozenset({2, 3}), frozenset({2, 3, 4})])
    rdoc = dict(doc, levels=[[3], [9]])
    rt = radial_from_json(rdoc)
    assert [sorted(t.splits[v - 1]) for block in rt.levels for v in block] == [
        [2, 3, 4],
        [2, 3],
    ]


def test_chain_serialization(k4):
    chains = [c for c in all_chains(k4) if len(c) == 2]
    doc = chain_to_json(chains[0])
    assert doc == [["2-3"], ["2-3", "2-4", "3-4"]]
    rt = psi_cof_to_radial(chains[0])
    assert radial_from_json(radial_to_json(rt)) == rt
