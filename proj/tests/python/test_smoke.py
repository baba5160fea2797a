import pytest

import cechcube as cc


def test_hypercube_homology():
    g = cc.Graph.hypercube(3)
    assert g.vertex_count == 8
    assert g.edge_count == 12
    k = cc.cech_complex(g, 2)
    h = cc.reduced_homology(k)
    assert h.betti(2) == 7
    assert h.betti(0) == 0
    assert h.betti(1) == 0
    assert h.torsion(2) == []
    assert h.top_nonzero_dim() == 2


def test_barcode():
    g = cc.Graph.hypercube(2)
    f = cc.build_filtration(g, 3)
    bc = cc.compute_barcode(f)
    got = sorted((i.dim, i.birth, i.death) for i in bc.intervals)
    assert got == [(0, 0, 1), (0, 0, 1), (0, 0, 1), (1, 1, 2), (2, 2, 3)]
    assert bc.alive_at(2, 2) == 1


def test_contiguity_chain():
    assert cc.contiguity_chain(2, 1, 2).success
    bad = cc.contiguity_chain(2, 1, 1)
    assert not bad.success
    assert bad.witness == [1, 3]


def test_collapse():
    k = cc.SimplicialComplex.from_maximal(4, [[0, 1, 3], [1, 2], [2, 3]])
    r = cc.is_d_collapsible(k, 2)
    assert r.verdict == "collapsible"
    assert cc.verify_sequence(k, r.sequence).success
    assert cc.is_d_collapsible(k, 1).verdict == "impossible"


def test_formulas_and_table():
    assert cc.alpha(7) == 4
    assert cc.betti2_hypercube(3) == 7
    assert cc.table_lookup(4, 6).descriptor() == "S^14"
    assert cc.table_lookup(3, 2).expected_betti() == {2: 7}
    assert cc.table_lookup(8, 42) is None
    assert len(cc.table_registry()) == 51


def test_errors():
    with pytest.raises(ValueError):
        cc.link(cc.cech_complex(cc.Graph.hypercube(2), 1), 99)
    with pytest.raises(RuntimeError):
        k = cc.cech_complex(cc.Graph.hypercube(4), 8)
        k.total_face_count(10)
