"""Exhaustive enumeration of branched spines with a given number of tetrahedra.

Triangulations are generated by a canonical backtracking search over face
gluings.  Relabelling freedom is used in the standard two ways: every
gluing permutation is odd (so all tetrahedron orientation bits are +1 and
the triangulation is oriented by construction), and the first gluing into
a fresh tetrahedron uses a fixed permutation.  Isomorphic duplicates are
removed afterwards through canonical encodings, so the output is a list
of pairwise non-isomorphic objects in a deterministic order.
"""

from .errors import Disconnected, NonStandardDual
from .perms import ALL_PERMS, sign
from .spine import BranchedSpine, enumerate_branchings, triangulation_encoding
from .triangulation import Triangulation

_ODD_WITH_IMAGE = {
    (f, f2): tuple(p for p in ALL_PERMS if sign(p) == -1 and p[f] == f2)
    for f in range(4) for f2 in range(4)
}


def enumerate_triangulations(tet_count):
    """All connected oriented triangulations with the given size, up to isomorphism."""
    results = []
    seen = set()
    faces = [(t, f) for t in range(tet_count) for f in range(4)]

    def complete(gluings):
        try:
            trg = Triangulation(tet_count, dict(gluings))
        except (Disconnected, NonStandardDual):
            return
        code = triangulation_encoding(trg)
        if code not in seen:
            seen.add(code)
            results.append(trg)

    def extend(gluings, used):
        open_faces = [x for x in faces if x[0] < used and x not in gluings]
        if not open_faces:
            if used == tet_count:
                complete(gluings)
            return
        t, f = open_faces[0]
        if used < tet_count:
            t2 = used
            perm = _ODD_WITH_IMAGE[(f, 0)][0]
            child = dict(gluings)
            child[(t, f)] = (t2, 0, perm)
            inv = tuple(sorted(range(4), key=lambda k: perm[k]))
            child[(t2, 0)] = (t, f, inv)
            extend(child, used + 1)
        for (t2, f2) in open_faces[1:] + ([] if (t, f) == open_faces[0] else []):
            for perm in _ODD_WITH_IMAGE[(f, f2)]:
                child = dict(gluings)
                child[(t, f)] = (t2, f2, perm)
                inv = tuple(sorted(range(4), key=lambda k: perm[k]))
                child[(t2, f2)] = (t, f, inv)
                extend(child, used)

    extend({}, 1)
    return results


def census_branched(tet_count):
    """All branched spines with the given number of tetrahedra, up to isomorphism.

    Deterministic: spines are sorted by canonical encoding.
    """
    spines = {}
    for trg in enumerate_triangulations(tet_count):
        for spine in enumerate_branchings(trg):
            code = spine.canonical_encoding()
            if code not in spines:
                spines[code] = spine
    return [spines[code] for code in sorted(spines)]


def corpus(max_tets):
    """The branched-spine census for every size up to ``max_tets``, concatenated."""
    out = []
    for n in range(1, max_tets + 1):
        out.extend(census_branched(n))
    return out
