import json

import pytest

import sufmsel


def test_worked_example():
    t = sufmsel.Text("mississippi")
    assert len(t) == 12
    assert sufmsel.bwt_segment(t, 1, 12).text == "ipssm$pissii"
    assert sufmsel.bwt_sample(t, [1, 4, 7, 10]).text == "isps"
    assert sufmsel.sample_text_suffixes(t, 3).text == "$pss"
    c = sufmsel.sa_chunk(t, 3, 5)
    assert c.positions == [8, 5, 2]
    assert c.lcps == [1, 4]


def test_against_oracle():
    t = sufmsel.Text.from_symbols([1, 0, 1, 1, 0, 1, 0, 1])
    sa = sufmsel.oracle_sa(t)
    r = sufmsel.multiselect(t, [2, 3, 7], debug=True)
    assert r.positions == [sa[1], sa[2], sa[6]]
    full = sufmsel.multiselect_consecutive(t, 1, len(t))
    assert full.positions == sa
    assert sum(full.metrics["events"].values()) > 0


def test_lcp_state_and_json():
    t = sufmsel.Text("abracadabra")
    p = sufmsel.partial_index(t, [2, 3, 4, 5])
    st = sufmsel.lcp_state(sufmsel.multiselect(t, [2, 3, 4, 5]))
    assert [st.query(i, i + 1) for i in range(3)] == p.lcps
    doc = json.loads(sufmsel.to_json(p, t))
    assert doc["positions"] == p.positions
    assert sufmsel.tree(t, p).startswith("(root)")


def test_bad_input():
    t = sufmsel.Text("abc")
    with pytest.raises(ValueError):
        sufmsel.multiselect(t, [3, 2])
    with pytest.raises(ValueError):
        sufmsel.sa_chunk(t, 0, 2)
