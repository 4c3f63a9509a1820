"""Matrices over K and cubic forms on the n*n matrix space.

The trace cubic form X -> tr(X^3) plays the role of (six times) the
symmetric tensor of interest; a symmetric 3-tensor is identified with its
cubic polynomial, stored sparsely as a map from degree-3 monomials in the
variables x_pq to field coefficients.  Monomials are canonical sorted
3-tuples of 0-based index pairs.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from .qfield import FieldElem, TauMismatchError, rational


class DimensionMismatchError(ValueError):
    pass


class SquareMatrix:
    """Immutable n x n matrix with FieldElem entries over one tau."""

    __slots__ = ("n", "rows", "tau")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("matrix must be square")
        tau = rows[0][0].tau
        for r in rows:
            for e in r:
                if e.tau != tau:
                    raise TauMismatchError("mixed tau in matrix entries")
        self.rows = rows
        self.n = n
        self.tau = tau

    @staticmethod
    def identity(n, tau) -> "SquareMatrix":
        one, zero = FieldElem.one(tau), FieldElem.zero(tau)
        return SquareMatrix([[one if i == j else zero for j in range(n)]
                             for i in range(n)])

    @staticmethod
    def zero(n, tau) -> "SquareMatrix":
        z = FieldElem.zero(tau)
        return SquareMatrix([[z] * n for _ in range(n)])

    @staticmethod
    def basis_matrix(n, tau, p, q) -> "SquareMatrix":
        """E_pq (0-based)."""
        one, zero = FieldElem.one(tau), FieldElem.zero(tau)
        return SquareMatrix([[one if (i, j) == (p, q) else zero
                              for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "SquareMatrix"):
        if self.n != other.n:
            raise DimensionMismatchError(f"{self.n} vs {other.n}")
        if self.tau != other.tau:
            raise TauMismatchError("mixed tau in matrix operation")

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        return SquareMatrix([[a + b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        return SquareMatrix([[a - b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c: FieldElem) -> "SquareMatrix":
        return SquareMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        n = self.n
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = FieldElem.zero(self.tau)
                for k in range(n):
                    rk = r[k]
                    if rk:
                        row_val = rk * c[k]
                        s = s + row_val
                row.append(s)
            out.append(row)
        return SquareMatrix(out)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(list(zip(*self.rows)))

    def conjugate(self) -> "SquareMatrix":
        return SquareMatrix([[a.conjugate() for a in r] for r in self.rows])

    def trace(self) -> FieldElem:
        s = FieldElem.zero(self.tau)
        for i in range(self.n):
            s = s + self.rows[i][i]
        return s

    def determinant(self) -> FieldElem:
        if self.n == 1:
            return self.rows[0][0]
        if self.n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        if self.n == 3:
            (a, b, c), (d, e, f), (g, h, i) = self.rows
            return (a * (e * i - f * h) - b * (d * i - f * g)
                    + c * (d * h - e * g))
        raise NotImplementedError("determinant only for n <= 3")

    def adjugate(self) -> "SquareMatrix":
        """Classical adjugate: self * adj = det * I.  Projectively this is
        the inverse without any division."""
        if self.n != 3:
            raise NotImplementedError("adjugate only for n = 3")
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return SquareMatrix([
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ])

    def inverse(self) -> "SquareMatrix":
        if self.n == 3:
            det = self.determinant()
            if det.is_zero():
                raise ZeroDivisionError("singular matrix")
            dinv = det.inv()
            return self.adjugate().scale(dinv)
        raise NotImplementedError("inverse only for n = 3")

    def __repr__(self):
        return "SquareMatrix([" + ", ".join(
            "[" + ", ".join(repr(e) for e in r) + "]" for r in self.rows
        ) + "])"

    def to_json(self):
        return [[e.to_json() for e in r] for r in self.rows]

    @staticmethod
    def from_json(data, tau) -> "SquareMatrix":
        return SquareMatrix([[FieldElem.from_json(e, tau) for e in r]
                             for r in data])


def monomial(pairs):
    """Canonical monomial: sorted 3-tuple of 0-based (p, q) pairs."""
    pairs = tuple(sorted(tuple(p) for p in pairs))
    if len(pairs) != 3:
        raise ValueError("monomials have total degree exactly 3")
    return pairs


class CubicForm:
    """Sparse cubic polynomial on the n*n matrix space."""

    __slots__ = ("n", "terms", "tau")

    def __init__(self, n, terms, tau):
        self.n = n
        self.tau = rational(tau)
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @staticmethod
    def zero(n, tau) -> "CubicForm":
        return CubicForm(n, {}, tau)

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return (self.n == other.n and self.tau == other.tau
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, pairs) -> FieldElem:
        return self.terms.get(monomial(pairs), FieldElem.zero(self.tau))

    def conjugate(self) -> "CubicForm":
        return CubicForm(self.n,
                         {m: c.conjugate() for m, c in self.terms.items()},
                         self.tau)

    def __repr__(self):
        return f"CubicForm(n={self.n}, {len(self.terms)} terms)"

    def to_json(self):
        out = []
        for m in sorted(self.terms):
            out.append({
                "monomial": [[p + 1, q + 1] for p, q in m],
                "coeff": self.terms[m].to_json(),
            })
        return {"n": self.n, "terms": out}

    @staticmethod
    def from_json(data, tau) -> "CubicForm":
        terms = {}
        for t in data["terms"]:
            m = monomial([(p - 1, q - 1) for p, q in t["monomial"]])
            terms[m] = FieldElem.from_json(t["coeff"], tau)
        return CubicForm(data["n"], terms, tau)


def sm_value(a: SquareMatrix, b: SquareMatrix, c: SquareMatrix) -> FieldElem:
    """The symmetric trilinear value (tr(ABC) + tr(ACB)) / 2."""
    a._check(b)
    a._check(c)
    t = (a * b * c).trace() + (a * c * b).trace()
    return t / 2


def trace_cubic_form(n: int, tau) -> CubicForm:
    """The form X -> tr(X^3) = sum_{p,q,r} x_pq x_qr x_rp."""
    if n < 1:
        raise ValueError("n must be positive")
    one = FieldElem.one(tau)
    terms = {}
    for p, q, r in product(range(n), repeat=3):
        m = monomial([(p, q), (q, r), (r, p)])
        terms[m] = terms.get(m, FieldElem.zero(tau)) + one
    return CubicForm(n, terms, tau)


def linear_form(m: SquareMatrix):
    """Coefficients of X -> tr(mX) as a map (q, p) -> m_pq, nonzeros only."""
    coeffs = {}
    for p in range(m.n):
        for q in range(m.n):
            e = m.rows[p][q]
            if e:
                coeffs[(q, p)] = e
    return coeffs


def pairing_cube(m: SquareMatrix) -> CubicForm:
    """The cube of the linear form X -> tr(mX), collected with multinomial
    multiplicities.  This is the cubic form of the rank-one symmetric cube
    attached to m."""
    lf = linear_form(m)
    vars_ = sorted(lf)
    terms = {}
    for combo in combinations_with_replacement(vars_, 3):
        mult = _multinomial(combo)
        coeff = lf[combo[0]] * lf[combo[1]] * lf[combo[2]] * mult
        mono = monomial(combo)
        if mono in terms:
            terms[mono] = terms[mono] + coeff
        else:
            terms[mono] = coeff
    return CubicForm(m.n, terms, m.tau)


def _multinomial(combo):
    a, b, c = combo
    if a == b == c:
        return 1
    if a == b or b == c or a == c:
        return 3
    return 6


def evaluate(f: CubicForm, x: SquareMatrix) -> FieldElem:
    if f.n != x.n:
        raise DimensionMismatchError(f"form n={f.n} vs matrix n={x.n}")
    total = FieldElem.zero(f.tau)
    for m, c in f.terms.items():
        v = c
        for (p, q) in m:
            v = v * x.rows[p][q]
        total = total + v
    return total


def scale_add(f: CubicForm, c: FieldElem, g: CubicForm) -> CubicForm:
    """f + c*g."""
    if f.n != g.n:
        raise DimensionMismatchError(f"form n={f.n} vs n={g.n}")
    terms = dict(f.terms)
    for m, gc in g.terms.items():
        add = c * gc
        if m in terms:
            terms[m] = terms[m] + add
        else:
            terms[m] = add
    return CubicForm(f.n, terms, f.tau)


def pullback(f: CubicForm, images) -> CubicForm:
    """The form X -> f(L(X)) for a linear endomorphism L of matrix space.

    images is either a callable taking each basis matrix E_pq to L(E_pq),
    or a dict {(p, q): SquareMatrix}.
    """
    n, tau = f.n, f.tau
    if callable(images):
        images = {(p, q): images(SquareMatrix.basis_matrix(n, tau, p, q))
                  for p in range(n) for q in range(n)}
    # lin[(p,q)] is the linear form giving coordinate (p,q) of L(X).
    lin = {(p, q): {} for p in range(n) for q in range(n)}
    for (r, s), img in images.items():
        for p in range(n):
            for q in range(n):
                e = img.rows[p][q]
                if e:
                    lin[(p, q)][(r, s)] = e
    terms = {}
    zero = FieldElem.zero(tau)
    for m, c in f.terms.items():
        l1, l2, l3 = (lin[pq] for pq in m)
        # multiply l1*l2 into a quadratic, then by l3
        quad = {}
        for v1, c1 in l1.items():
            for v2, c2 in l2.items():
                key = (v1, v2) if v1 <= v2 else (v2, v1)
                prod = c1 * c2
                if key in quad:
                    quad[key] = quad[key] + prod
                else:
                    quad[key] = prod
        for (v1, v2), cq in quad.items():
            for v3, c3 in l3.items():
                mono = monomial((v1, v2, v3))
                add = c * cq * c3
                if mono in terms:
                    terms[mono] = terms[mono] + add
                else:
                    terms[mono] = add
    return CubicForm(n, terms, tau)
