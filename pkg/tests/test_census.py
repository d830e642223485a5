from spinetorsion.census import census_branched, enumerate_triangulations
from spinetorsion.moves import is_rigid


def test_one_tet_census(census1):
    assert len(census1) == 4
    assert all(is_rigid(s) for s in census1)
    counts = sorted(len(s.boundary_report()) for s in census1)
    assert counts == [1, 1, 2, 2]
    for s in census1:
        for chi, genus in s.boundary_report():
            assert (chi, genus) == (2, 0)


def test_census_members_validate_and_are_distinct(census2):
    codes = set()
    for s in census2:
        code = s.canonical_encoding()
        assert code not in codes
        codes.add(code)
        assert s.spine_edge_count == 2 * s.spine_vertex_count


def test_census_deterministic():
    a = [s.canonical_encoding() for s in census_branched(2)]
    b = [s.canonical_encoding() for s in census_branched(2)]
    assert a == b
    assert a == sorted(a)


def test_triangulation_enumeration_counts():
    assert len(enumerate_triangulations(1)) == 6
    assert len(census_branched(1)) == 4
