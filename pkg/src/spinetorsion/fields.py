"""Exact coefficient fields for twisted complexes and torsion values.

Two families are provided:

- ``FunctionField(r)``: the rational-function field Q(t1..tr), elements
  stored as reduced fractions of Laurent polynomials with Fraction
  coefficients; r = 0 degenerates to plain Q.
- ``CyclotomicField(n)``: Q(zeta_n), elements stored as coefficient
  vectors modulo the n-th cyclotomic polynomial.

Matrix work over a function field is fraction-free: rows are cleared to
Laurent-polynomial form, determinants use Bareiss elimination with exact
division, and kernels and linear solves are assembled from Cramer ratios
of Bareiss minors.  Over a cyclotomic field plain Gaussian elimination
is exact and cheap.  ``cofactor_det`` gives an independent slow
determinant used to cross-check the Bareiss engine.
"""

from fractions import Fraction
from math import gcd as _int_gcd

_SYMPY_RINGS = {}


def _sympy_ring(nvars):
    if nvars not in _SYMPY_RINGS:
        from sympy import QQ
        from sympy.polys.rings import ring
        names = ",".join("t%d" % (i + 1) for i in range(nvars))
        _SYMPY_RINGS[nvars] = ring(names, QQ)[0]
    return _SYMPY_RINGS[nvars]


class LaurentPoly:
    """A Laurent polynomial in ``nvars`` variables over Q.

    ``terms`` maps exponent tuples to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v} if terms else {}

    @classmethod
    def const(cls, nvars, value):
        value = Fraction(value)
        return cls(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        coeff = Fraction(coeff)
        return cls(nvars, {tuple(exps): coeff} if coeff else {})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(self.nvars, out)

    def __neg__(self):
        return LaurentPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return LaurentPoly(self.nvars)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return LaurentPoly(self.nvars, out)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LaurentPoly(self.nvars)
        return LaurentPoly(self.nvars, {k: v * c for k, v in self.terms.items()})

    def shift(self, exps):
        return LaurentPoly(self.nvars,
                           {tuple(a + b for a, b in zip(k, exps)): v
                            for k, v in self.terms.items()})

    def lead_key(self):
        return max(self.terms) if self.terms else None

    def lead_coeff(self):
        return self.terms[max(self.terms)] if self.terms else Fraction(0)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(k[i] for k in self.terms) for i in range(self.nvars))

    def is_monomial(self):
        return len(self.terms) == 1

    def signed_content(self):
        """Positive-lead normaliser: self / signed_content() is integer-primitive
        with positive leading coefficient."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for v in self.terms.values():
            num = _int_gcd(num, abs(v.numerator))
            den = den * v.denominator // _int_gcd(den, v.denominator)
        c = Fraction(num, den)
        return c if self.lead_coeff() > 0 else -c

    def exact_div(self, other):
        """Exact quotient self / other in the Laurent ring; raises if not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(self.nvars)
        if other.is_monomial():
            (k2, v2), = other.terms.items()
            return LaurentPoly(self.nvars,
                               {tuple(a - b for a, b in zip(k, k2)): v / v2
                                for k, v in self.terms.items()})
        rem = self
        out = {}
        lead2 = other.lead_key()
        c2 = other.terms[lead2]
        limit = len(self.terms) * (len(other.terms) + 1) + 8
        while not rem.is_zero():
            lead1 = rem.lead_key()
            q = tuple(a - b for a, b in zip(lead1, lead2))
            c = rem.terms[lead1] / c2
            out[q] = c
            rem = rem - other * LaurentPoly.monomial(self.nvars, q, c)
            limit -= 1
            if limit < 0:
                raise ArithmeticError("non-exact Laurent division")
        return LaurentPoly(self.nvars, out)

    def to_sympy(self):
        ring = _sympy_ring(self.nvars)
        from sympy import QQ
        return ring.from_dict({k: QQ(v) for k, v in self.terms.items()})

    @classmethod
    def from_sympy(cls, nvars, p):
        terms = {}
        for k, c in p.terms():
            terms[tuple(k)] = Fraction(c.numerator, c.denominator)
        return cls(nvars, terms)

    def str_terms(self, names):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "*".join(
                ("%s" % names[i] if e == 1 else "%s^%d" % (names[i], e))
                for i, e in enumerate(k) if e != 0)
            if mono:
                if c == 1:
                    part = mono
                elif c == -1:
                    part = "-" + mono
                else:
                    part = "%s*%s" % (c, mono)
            else:
                part = "%s" % c
            bits.append(part)
        out = bits[0]
        for part in bits[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out


def _lp_gcd(a, b):
    """GCD of Laurent polynomials with nonnegative exponents, up to units."""
    nvars = a.nvars
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if nvars == 0:
        return LaurentPoly.const(0, 1)
    if a.is_monomial() or b.is_monomial():
        keys = list(a.terms) + list(b.terms)
        exps = tuple(min(k[i] for k in keys) for i in range(nvars))
        return LaurentPoly.monomial(nvars, exps)
    g = a.to_sympy().gcd(b.to_sympy())
    return LaurentPoly.from_sympy(nvars, g)


class RationalFunction:
    """A reduced fraction of Laurent polynomials; always canonical.

    Canonical form: the denominator is an integer-primitive polynomial
    with nonnegative exponents (minimum exponent 0 in every variable) and
    positive leading coefficient; numerator and denominator are coprime.
    """

    __slots__ = ("nvars", "num", "den")

    def __init__(self, num, den=None, _canonical=False):
        self.nvars = num.nvars
        if den is None:
            den = LaurentPoly.const(self.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num = num
            self.den = LaurentPoly.const(self.nvars, 1)
            return
        # Pull the denominator's monomial unit into the numerator.
        shift = den.min_exponents()
        if any(shift):
            den = den.shift(tuple(-e for e in shift))
            num = num.shift(tuple(-e for e in shift))
        if not den.is_monomial():
            nshift = num.min_exponents()
            npoly = num.shift(tuple(-e for e in nshift)) if any(nshift) else num
            g = _lp_gcd(npoly, den)
            if not (g.is_monomial() and g.lead_key() == (0,) * self.nvars):
                npoly = npoly.exact_div(g)
                den = den.exact_div(g)
            num = npoly.shift(nshift) if any(nshift) else npoly
            shift2 = den.min_exponents()
            if any(shift2):
                den = den.shift(tuple(-e for e in shift2))
                num = num.shift(tuple(-e for e in shift2))
        c = den.signed_content()
        if c != 1:
            den = den.scale(1 / c)
            num = num.scale(1 / c)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return (isinstance(other, RationalFunction) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverting zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inv()

    def as_fraction(self):
        """The rational value, if constant; raises otherwise."""
        if self.is_zero():
            return Fraction(0)
        if self.num.is_monomial() and self.den.is_monomial():
            (kn, vn), = self.num.terms.items()
            (kd, vd), = self.den.terms.items()
            if not any(kn) and not any(kd):
                return vn / vd
        raise ValueError("not a constant")

    def str_in(self, names):
        num = self.num.str_terms(names)
        if self.den.is_monomial() and self.den.lead_key() == (0,) * self.nvars \
                and self.den.lead_coeff() == 1:
            return num
        return "(%s)/(%s)" % (num, self.den.str_terms(names))


class FunctionField:
    """Q(t1..tr) with fraction-free matrix routines."""

    def __init__(self, nvars):
        self.nvars = nvars
        self.names = tuple("t%d" % (i + 1) for i in range(nvars))
        self.zero = RationalFunction(LaurentPoly(nvars))
        self.one = RationalFunction(LaurentPoly.const(nvars, 1))

    def __eq__(self, other):
        return isinstance(other, FunctionField) and self.nvars == other.nvars

    def __repr__(self):
        return "FunctionField(%d)" % self.nvars

    def from_int(self, k):
        return RationalFunction(LaurentPoly.const(self.nvars, k))

    def from_fraction(self, q):
        return RationalFunction(LaurentPoly.const(self.nvars, q))

    def monomial(self, exps, coeff=1):
        return RationalFunction(LaurentPoly.monomial(self.nvars, exps, coeff))

    def element_str(self, x):
        return x.str_in(self.names)

    # -- fraction-free matrix engine ------------------------------------------

    def _cleared(self, matrix):
        """(Laurent matrix with nonnegative exponents, row factors).

        Each row is scaled by the product of its denominators and a
        monomial; row scaling by nonzero factors preserves ranks, kernels
        and solution sets, and determinants divide out the factors.
        """
        cleared = []
        factors = []
        for row in matrix:
            factor = LaurentPoly.const(self.nvars, 1)
            for x in row:
                factor = factor * x.den
            new_row = []
            for x in row:
                e = x.num
                for y in row:
                    if y is not x:
                        e = e * y.den
                new_row.append(e)
            mins = [0] * self.nvars
            for e in new_row:
                if not e.is_zero():
                    m = e.min_exponents()
                    mins = [min(a, b) for a, b in zip(mins, m)]
            if any(mins):
                shift = tuple(-m for m in mins)
                new_row = [e.shift(shift) for e in new_row]
                factor = factor.shift(shift)
            cleared.append(new_row)
            factors.append(factor)
        return cleared, factors

    def _bareiss(self, rows, want_transform=False):
        """Fraction-free elimination; returns (rank, pivot rows, pivot cols,
        final pivot value, sign of row/col selection as a permutation)."""
        m = len(rows)
        n = len(rows[0]) if m else 0
        A = [list(r) for r in rows]
        prev = LaurentPoly.const(self.nvars, 1)
        row_perm = list(range(m))
        piv_rows, piv_cols = [], []
        sign_swaps = 1
        r = 0
        used_cols = set()
        for c in range(n):
            pr = None
            for i in range(r, m):
                if not A[row_perm[i]][c].is_zero():
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                row_perm[r], row_perm[pr] = row_perm[pr], row_perm[r]
                sign_swaps = -sign_swaps
            piv = A[row_perm[r]][c]
            for i in range(r + 1, m):
                ri = row_perm[i]
                for j in range(n):
                    if j == c or j in used_cols:
                        continue
                    num = piv * A[ri][j] - A[ri][c] * A[row_perm[r]][j]
                    A[ri][j] = num.exact_div(prev)
                A[ri][c] = LaurentPoly(self.nvars)
            piv_rows.append(row_perm[r])
            piv_cols.append(c)
            used_cols.add(c)
            prev = piv
            r += 1
            if r == m:
                break
        return r, piv_rows, piv_cols, prev, sign_swaps

    def det(self, matrix):
        """Determinant of a square matrix of field elements."""
        n = len(matrix)
        if n == 0:
            return self.one
        cleared, factors = self._cleared(matrix)
        rank, _pr, _pc, last_piv, swap_sign = self._bareiss(cleared)
        if rank < n:
            return self.zero
        num = last_piv if swap_sign == 1 else -last_piv
        den = factors[0]
        for f in factors[1:]:
            den = den * f
        return RationalFunction(num, den)

    def rank(self, matrix):
        if not matrix or not matrix[0]:
            return 0
        cleared, _ = self._cleared(matrix)
        return self._bareiss(cleared)[0]

    def _minor_det(self, cleared, rows, cols):
        sub = [[cleared[i][j] for j in cols] for i in rows]
        rank, _pr, _pc, piv, swaps = self._bareiss(sub)
        if rank < len(rows):
            return LaurentPoly(self.nvars)
        return piv if swaps == 1 else -piv

    def nullspace(self, matrix, col_order=None):
        """Basis of the right kernel, one vector per non-pivot column.

        ``col_order`` biases which columns become pivots; the resulting
        basis is deterministic for a fixed order.
        """
        if not matrix:
            return []
        m, n = len(matrix), len(matrix[0])
        order = list(col_order) if col_order is not None else list(range(n))
        permuted = [[row[j] for j in order] for row in matrix]
        cleared, _ = self._cleared(permuted)
        rank, piv_rows, piv_cols_p, _piv, _s = self._bareiss(cleared)
        piv_cols = [order[c] for c in piv_cols_p]
        cleared0, _ = self._cleared(matrix)
        d0 = self._minor_det(cleared0, piv_rows, piv_cols)
        basis = []
        for j in range(n):
            if j in piv_cols:
                continue
            vec = [self.zero] * n
            vec[j] = self.one
            for i, pc in enumerate(piv_cols):
                cols = list(piv_cols)
                cols[i] = j
                di = self._minor_det(cleared0, piv_rows, cols)
                vec[pc] = RationalFunction(-di, d0) if not di.is_zero() else self.zero
            basis.append(vec)
        return basis

    def solve(self, matrix, rhs):
        """One solution of A x = rhs, or None if inconsistent."""
        if not matrix:
            return [] if all(x.is_zero() for x in rhs) else None
        m, n = len(matrix), len(matrix[0])
        cleared, _ = self._cleared(matrix)
        rank, piv_rows, piv_cols, _piv, _s = self._bareiss(cleared)
        aug = [row + [rhs[i]] for i, row in enumerate(matrix)]
        if self.rank(aug) != rank:
            return None
        cleared_aug, _ = self._cleared(aug)
        d0 = self._minor_det(cleared_aug, piv_rows, piv_cols)
        sol = [self.zero] * n
        for i, pc in enumerate(piv_cols):
            cols = list(piv_cols)
            cols[i] = n  # rhs column
            di = self._minor_det(cleared_aug, piv_rows, cols)
            sol[pc] = RationalFunction(di, d0) if not di.is_zero() else self.zero
        return sol

    def select_columns(self, matrix, order):
        """Greedy independent column subset spanning the column space."""
        if not matrix:
            return []
        selected = []
        r = 0
        for j in order:
            trial = selected + [j]
            sub = [[row[c] for c in trial] for row in matrix]
            if self.rank(sub) > r:
                selected.append(j)
                r += 1
        return selected


def cyclotomic_polynomial(n):
    """Integer coefficient list of the n-th cyclotomic polynomial, low degree first."""

    def poly_div(a, b):
        a = list(a)
        out = [0] * (len(a) - len(b) + 1)
        while len(a) >= len(b) and any(a):
            shift = len(a) - len(b)
            q = a[-1] // b[-1]
            out[shift] = q
            for i, c in enumerate(b):
                a[shift + i] -= q * c
            while a and a[-1] == 0:
                a.pop()
            if not a:
                break
        return out

    poly = [0] * n + [1]
    poly[0] = -1  # z^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = poly_div(poly, cyclotomic_polynomial(d))
    return poly


class CyclotomicElement:
    """An element of Q(zeta_n), coefficients of 1, z, .., z^(deg-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, CyclotomicElement)
                and self.field.order == other.field.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __add__(self, other):
        return CyclotomicElement(self.field,
                                 [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return CyclotomicElement(self.field,
                                 [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        deg = self.field.degree
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:deg]
        for k in range(deg, 2 * deg - 1):
            if conv[k]:
                red = self.field.power_table[k]
                for i in range(deg):
                    out[i] += conv[k] * red[i]
        return CyclotomicElement(self.field, out)

    def inv(self):
        return self.field.invert(self)

    def __truediv__(self, other):
        return self * other.inv()


class CyclotomicField:
    """Q(zeta_n) with generic exact Gaussian elimination."""

    def __init__(self, order):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.order = order
        self.phi = tuple(cyclotomic_polynomial(order))
        self.degree = len(self.phi) - 1
        self.power_table = self._powers()
        self.zero = CyclotomicElement(self, [Fraction(0)] * self.degree)
        self.one = self.from_int(1)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and self.order == other.order

    def __repr__(self):
        return "CyclotomicField(%d)" % self.order

    def _powers(self):
        deg = self.degree
        table = {}
        cur = [-Fraction(c, self.phi[-1]) for c in self.phi[:-1]]
        table[deg] = list(cur)
        for k in range(deg + 1, 2 * deg - 1):
            nxt = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(deg):
                    nxt[i] += top * table[deg][i]
            table[k] = nxt
            cur = nxt
        return table

    def from_int(self, k):
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(k)
        return CyclotomicElement(self, coeffs)

    def from_fraction(self, q):
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return CyclotomicElement(self, coeffs)

    def zeta(self, power=1):
        power %= self.order
        # Reduce z^power mod the cyclotomic polynomial via repeated shifts.
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(1)
        el = CyclotomicElement(self, coeffs)
        if self.degree == 0:
            raise ValueError("degenerate field")
        zc = [Fraction(0)] * self.degree
        if self.degree == 1:
            zc[0] = -Fraction(self.phi[0], self.phi[1])
        else:
            zc[1] = Fraction(1)
        z = CyclotomicElement(self, zc)
        for _ in range(power):
            el = el * z
        return el

    def invert(self, el):
        """Extended Euclid in Q[z] against the cyclotomic polynomial."""
        if el.is_zero():
            raise ZeroDivisionError("inverting zero")

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        def divmod_poly(a, b):
            a = list(a)
            q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
            while len(a) >= len(b) and any(a):
                shift = len(a) - len(b)
                c = a[-1] / b[-1]
                q[shift] += c
                for i, bc in enumerate(b):
                    a[shift + i] -= c * bc
                trim(a)
                if not a:
                    break
            return q, a

        r0 = [Fraction(c) for c in self.phi]
        r1 = trim(list(el.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = divmod_poly(r0, r1)
            # s_next = s0 - q * s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            s_next = [a - b for a, b in
                      zip(s0 + [Fraction(0)] * (len(prod) - len(s0)), prod)] \
                if len(prod) >= len(s0) else \
                     [a - b for a, b in
                      zip(s0, prod + [Fraction(0)] * (len(s0) - len(prod)))]
            r0, r1 = r1, trim(r)
            s0, s1 = s1, trim(s_next) or [Fraction(0)]
        # r0 is the gcd, a nonzero constant since phi is irreducible.
        if len(r0) != 1:
            raise ArithmeticError("element not invertible; field arithmetic broken")
        c = r0[0]
        coeffs = [x / c for x in s0]
        coeffs = (coeffs + [Fraction(0)] * self.degree)[:self.degree]
        return CyclotomicElement(self, coeffs)

    def element_str(self, x):
        bits = []
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            if i == 0:
                bits.append("%s" % c)
            elif i == 1:
                bits.append("z" if c == 1 else "-z" if c == -1 else "%s*z" % c)
            else:
                mono = "z^%d" % i
                bits.append(mono if c == 1 else "-" + mono if c == -1
                            else "%s*%s" % (c, mono))
        if not bits:
            return "0"
        out = bits[0]
        for part in bits[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    # -- generic exact Gaussian elimination ------------------------------------

    def det(self, matrix):
        n = len(matrix)
        if n == 0:
            return self.one
        A = [list(r) for r in matrix]
        out = self.one
        for c in range(n):
            pr = next((i for i in range(c, n) if not A[i][c].is_zero()), None)
            if pr is None:
                return self.zero
            if pr != c:
                A[c], A[pr] = A[pr], A[c]
                out = -out
            piv = A[c][c]
            out = out * piv
            inv = piv.inv()
            for i in range(c + 1, n):
                if A[i][c].is_zero():
                    continue
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
        return out

    def _rref(self, matrix, col_order=None):
        m = len(matrix)
        n = len(matrix[0]) if m else 0
        order = list(col_order) if col_order is not None else list(range(n))
        A = [list(r) for r in matrix]
        piv_cols, piv_rows = [], []
        r = 0
        for c in order:
            pr = next((i for i in range(m) if i not in piv_rows
                       and not A[i][c].is_zero()), None)
            if pr is None:
                continue
            inv = A[pr][c].inv()
            A[pr] = [a * inv for a in A[pr]]
            for i in range(m):
                if i != pr and not A[i][c].is_zero():
                    f = A[i][c]
                    A[i] = [a - f * b for a, b in zip(A[i], A[pr])]
            piv_rows.append(pr)
            piv_cols.append(c)
            r += 1
        return A, piv_rows, piv_cols

    def rank(self, matrix):
        if not matrix:
            return 0
        return len(self._rref(matrix)[1])

    def nullspace(self, matrix, col_order=None):
        if not matrix:
            return []
        n = len(matrix[0])
        A, piv_rows, piv_cols = self._rref(matrix, col_order)
        basis = []
        for j in range(n):
            if j in piv_cols:
                continue
            vec = [self.zero] * n
            vec[j] = self.one
            for row, pc in zip(piv_rows, piv_cols):
                vec[pc] = -A[row][j]
            basis.append(vec)
        return basis

    def solve(self, matrix, rhs):
        if not matrix:
            return [] if all(x.is_zero() for x in rhs) else None
        n = len(matrix[0])
        aug = [row + [rhs[i]] for i, row in enumerate(matrix)]
        A, piv_rows, piv_cols = self._rref(aug, list(range(n)))
        for i in range(len(A)):
            if i not in piv_rows and not A[i][n].is_zero():
                return None
        if n in piv_cols:
            return None
        sol = [self.zero] * n
        for row, pc in zip(piv_rows, piv_cols):
            sol[pc] = A[row][n]
        return sol

    def select_columns(self, matrix, order):
        if not matrix:
            return []
        selected = []
        r = 0
        for j in order:
            sub = [[row[c] for c in selected + [j]] for row in matrix]
            if self.rank(sub) > r:
                selected.append(j)
                r += 1
        return selected


def cofactor_det(field, matrix):
    """Determinant by first-row cofactor expansion; slow cross-check oracle."""
    n = len(matrix)
    if n == 0:
        return field.one
    if n == 1:
        return matrix[0][0]
    total = field.zero
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        minor = [[matrix[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = matrix[0][j] * cofactor_det(field, minor)
        total = total + term if j % 2 == 0 else total - term
    return total
