"""Frozen spine files used across the test suite.

All of these were produced by the census generator and are pinned here
as stable text artifacts; tests re-derive their advertised properties.
"""

# One tetrahedron; the first member of the one-tetrahedron census.
ONE_TET = """\
spine 1
tets 1
glue 0.0 -> 0.1 : 023
glue 0.2 -> 0.3 : 012
edge 0 : 0.01
edge 1 : 0.02
edge 2 : 0.23
orient 0 +
"""

# Two tetrahedra; face class 0 admits both central-edge orientations.
TWO_VARIANT = """\
spine 1
tets 2
glue 0.0 -> 1.0 : 132
glue 0.1 -> 0.2 : 013
glue 0.3 -> 1.2 : 013
glue 1.1 -> 1.3 : 021
edge 0 : 0.01
edge 1 : 0.03
edge 2 : 0.12
edge 3 : 0.31
edge 4 : 1.02
orient 0 +
orient 1 +
"""

# Two tetrahedra, one torus boundary component (a knot-exterior-like
# manifold); the positive move at face class 0, variant 0, reproduces the
# reference 21-row certificate table.
GOLDEN = """\
spine 1
tets 2
glue 0.0 -> 1.0 : 132
glue 0.1 -> 0.2 : 013
glue 0.3 -> 1.1 : 203
glue 1.2 -> 1.3 : 120
edge 0 : 0.01
edge 1 : 0.03
orient 0 +
orient 1 +
"""

# Two tetrahedra with H_1 = Z/2; edge class 1 has valence 1 and edge
# class 2 has valence 3 but meets only two distinct tetrahedra.
TORSION2 = """\
spine 1
tets 2
glue 0.0 -> 1.0 : 132
glue 0.1 -> 0.2 : 013
glue 0.3 -> 1.3 : 102
glue 1.1 -> 1.2 : 130
edge 0 : 0.01
edge 1 : 0.03
edge 2 : 0.12
orient 0 +
orient 1 +
"""

# The reference certificate table: (simplex, sign, end0, end1).
GOLDEN_TABLE = [
    ("v", 1, "d", "c"), ("va", -1, "d", "c"), ("vb", -1, "d", "c"),
    ("vc", -1, "d", "c"), ("vd", -1, "d", "d"), ("ve", -1, "d", "c"),
    ("vab", 1, "d", "c"), ("vad", 1, "d", "d"), ("vae", 1, "d", "c"),
    ("vcb", 1, "d", "c"), ("vcd", 1, "d", "d"), ("vce", 1, "d", "c"),
    ("vbe", 1, "d", "c"), ("ved", 1, "d", "d"), ("vdb", 1, "d", "d"),
    ("vabe", -1, "d", "c"), ("vaed", -1, "d", "d"), ("vadb", -1, "d", "d"),
    ("vcbe", -1, "d", "c"), ("vced", -1, "d", "d"), ("vcdb", -1, "d", "d"),
]
