"""Ideal triangulations given by face gluings of tetrahedra.

A triangulation is a list of abstract tetrahedra with corners labelled
0..3 and a total gluing of their faces.  Face f of a tetrahedron is the
triangle spanned by the three corners different from f.  A gluing is a
permutation of {0,1,2,3} carrying f to the partner face index and the
three corners of f to the corners of the partner face.  Self-adjacencies
and multiple adjacencies are allowed; gluing a face to itself is not.

Everything derived here (face, edge and vertex classes, tetrahedron
orientations, around-the-edge fans, vertex links) is purely
combinatorial and shared by the branched-spine layer on top.
"""

from .errors import Disconnected, NonOrientable, NonStandardDual, UnpairedFace
from .perms import compose, inverse, sign


class EdgeClass:
    """An orbit of tetrahedron edges under the face gluings.

    ``members`` lists one oriented representative (t, i, j) per
    tetrahedron edge in the class, all coherently oriented, in cyclic
    order of the walk around the edge.  ``fan`` records the walk:
    ``fan[p] = (t, i, j, enter_face, exit_face)`` where the walk enters
    the p-th tetrahedron through ``enter_face`` and leaves through
    ``exit_face``.
    """

    __slots__ = ("index", "members", "fan")

    def __init__(self, index, members, fan):
        self.index = index
        self.members = members
        self.fan = fan

    @property
    def size(self):
        return len(self.members)

    def __repr__(self):
        return "EdgeClass(%d, %s)" % (self.index, list(self.members))


def _face_corners(f):
    return tuple(c for c in range(4) if c != f)


class Triangulation:
    """A connected, orientable gluing of tetrahedra along all faces."""

    def __init__(self, tet_count, gluings):
        if tet_count <= 0:
            raise UnpairedFace("a triangulation needs at least one tetrahedron")
        self.tet_count = tet_count
        self.gluings = self._check_involution(gluings)
        self._check_connected()
        self.orientations = self._orient()
        self.face_classes, self.face_class_of = self._face_classes()
        self.edge_classes, self.edge_class_of = self._edge_classes()
        self.vertex_classes, self.vertex_class_of = self._vertex_classes()

    # -- construction checks -------------------------------------------------

    def _check_involution(self, gluings):
        full = {}
        for (t, f), (t2, f2, perm) in gluings.items():
            if not (0 <= t < self.tet_count and 0 <= t2 < self.tet_count):
                raise UnpairedFace("gluing refers to tetrahedron out of range")
            if not (0 <= f < 4 and 0 <= f2 < 4):
                raise UnpairedFace("gluing refers to face out of range")
            if sorted(perm) != [0, 1, 2, 3]:
                raise UnpairedFace("gluing permutation %r is not a bijection" % (perm,))
            if perm[f] != f2:
                raise UnpairedFace(
                    "gluing permutation must carry face %d to face %d" % (f, f2))
            if (t, f) == (t2, f2):
                raise UnpairedFace("face %d.%d glued to itself" % (t, f))
            for key, val in (((t, f), (t2, f2, tuple(perm))),
                             ((t2, f2), (t, f, inverse(perm)))):
                if key in full and full[key] != val:
                    raise UnpairedFace(
                        "face %d.%d glued twice inconsistently" % key)
                full[key] = val
        for t in range(self.tet_count):
            for f in range(4):
                if (t, f) not in full:
                    raise UnpairedFace("face %d.%d is not glued" % (t, f))
        return full

    def _check_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for f in range(4):
                t2 = self.gluings[(t, f)][0]
                if t2 not in seen:
                    seen.add(t2)
                    stack.append(t2)
        if len(seen) != self.tet_count:
            raise Disconnected(
                "only %d of %d tetrahedra reachable" % (len(seen), self.tet_count))

    def _orient(self):
        """Assign +1/-1 to the tetrahedra so every gluing is orientation-reversing.

        A gluing with permutation p between tetrahedra of orientations s, s'
        reverses orientation exactly when sign(p) * s * s' == -1.  The
        assignment is normalised by orientations[0] == +1.
        """
        orient = [0] * self.tet_count
        orient[0] = 1
        stack = [0]
        while stack:
            t = stack.pop()
            for f in range(4):
                t2, _, perm = self.gluings[(t, f)]
                want = -orient[t] * sign(perm)
                if orient[t2] == 0:
                    orient[t2] = want
                    stack.append(t2)
                elif orient[t2] != want:
                    raise NonOrientable("no consistent tetrahedron orientations exist")
        return tuple(orient)

    # -- derived class tables -------------------------------------------------

    def _face_classes(self):
        classes = []
        of = {}
        for t in range(self.tet_count):
            for f in range(4):
                if (t, f) in of:
                    continue
                t2, f2, _ = self.gluings[(t, f)]
                idx = len(classes)
                classes.append(((t, f), (t2, f2)))
                of[(t, f)] = idx
                of[(t2, f2)] = idx
        return tuple(classes), of

    def _walk_around_edge(self, t, i, j):
        """Cyclic fan of tetrahedron edges glued around the edge (t, i, j).

        Returns (members, fan): see EdgeClass.  Raises NonStandardDual if
        the walk returns with the edge reversed (the dual region around
        such an edge is not an open disc and the quotient is not an ideal
        triangulation of a manifold).
        """
        sides = [c for c in range(4) if c != i and c != j]
        cur = (t, i, j)
        enter = sides[0]
        members, fan = [], []
        while True:
            ct, ci, cj = cur
            exit_face = next(c for c in range(4) if c not in (ci, cj, enter))
            members.append(cur)
            fan.append((ct, ci, cj, enter, exit_face))
            t2, f2, perm = self.gluings[(ct, exit_face)]
            cur = (t2, perm[ci], perm[cj])
            enter = f2
            if cur == (t, i, j) and enter == sides[0]:
                break
            if cur == (t, j, i):
                raise NonStandardDual(
                    "edge through %d.%d%d is glued to itself reversed" % (t, i, j))
            if len(members) > 12 * self.tet_count:
                raise NonStandardDual("edge walk failed to close")  # unreachable guard
        return tuple(members), tuple(fan)

    def _edge_classes(self):
        classes = []
        of = {}
        for t in range(self.tet_count):
            for i in range(4):
                for j in range(i + 1, 4):
                    if (t, i, j) in of:
                        continue
                    members, fan = self._walk_around_edge(t, i, j)
                    idx = len(classes)
                    classes.append(EdgeClass(idx, members, fan))
                    for (mt, mi, mj) in members:
                        of[(mt, mi, mj)] = (idx, 1)
                        of[(mt, mj, mi)] = (idx, -1)
        # Every tetrahedron edge must land in exactly one class.
        assert len(of) == 12 * self.tet_count
        return tuple(classes), of

    def _vertex_classes(self):
        parent = {(t, c): (t, c) for t in range(self.tet_count) for c in range(4)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (t, f), (t2, f2, perm) in self.gluings.items():
            for c in _face_corners(f):
                a, b = find((t, c)), find((t2, perm[c]))
                if a != b:
                    parent[a] = b
        groups = {}
        for key in parent:
            groups.setdefault(find(key), []).append(key)
        classes = tuple(tuple(sorted(g)) for g in
                        sorted(groups.values(), key=lambda g: min(g)))
        of = {}
        for idx, cls in enumerate(classes):
            for key in cls:
                of[key] = idx
        return classes, of

    # -- vertex links ----------------------------------------------------------

    def vertex_link(self, vclass_index):
        """Euler characteristic and genus of the link surface of a vertex class.

        The link is assembled from one normal triangle per (tet, corner)
        instance; triangle sides are glued according to the face gluings.
        """
        corners = self.vertex_classes[vclass_index]
        ntri = len(corners)
        # Link-vertex identifications: corner (t, c, x) of the normal triangle
        # at (t, c) sits on the tetrahedron edge {c, x}.
        parent = {}
        for (t, c) in corners:
            for x in range(4):
                if x != c:
                    parent[(t, c, x)] = (t, c, x)

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        for (t, c) in corners:
            for f in range(4):
                if f == c:
                    continue
                t2, _, perm = self.gluings[(t, f)]
                for x in range(4):
                    if x != c and x != f:
                        a = find((t, c, x))
                        b = find((t2, perm[c], perm[x]))
                        if a != b:
                            parent[a] = b
        nvert = len({find(k) for k in parent})
        nedge = (3 * ntri) // 2
        chi = nvert - nedge + ntri
        assert chi % 2 == 0 and chi <= 2
        return chi, (2 - chi) // 2

    def positive_corner_order(self, t):
        """A corner ordering of tetrahedron t positive for its orientation."""
        return (0, 1, 2, 3) if self.orientations[t] == 1 else (1, 0, 2, 3)


def glue_both_ways(gluings, t, f, t2, f2, perm):
    """Record a gluing and its inverse in a gluing dict under construction."""
    perm = tuple(perm)
    gluings[(t, f)] = (t2, f2, perm)
    gluings[(t2, f2)] = (t, f, inverse(perm))


def compose_gluing(g1, g2):
    """Compose two gluing permutations (first g1, then g2)."""
    return compose(g2, g1)
