"""The Z^3-graded super-commutative coefficient algebra.

A = k[x1, x2, y1, y2] (x) Lambda[nu1, nu2] (x) Lambda[xi1, xi2]

with generator degrees (i, j, k)

    x:  (0, 2, 0)       y:  (2, -2, 0)
    nu: (-1, 2, 0)      xi: (0, 0, 1)

Products are signed by the parity form i*i' + k*k': the nu's
anticommute among themselves, the xi's anticommute among themselves,
and the two exterior families commute with each other.  Monomials are
stored with their exterior letters in the fixed generator order

    x1 < x2 < y1 < y2 < nu1 < nu2 < xi1 < xi2,

the reordering sign being absorbed into the coefficient, so equality of
elements is equality of term dictionaries.

The structure maps of the calculus live here as well: the differential
``kappa`` (nu_i -> x_i, extended by the cohomological Leibniz rule), the
index-swap involution ``s``, the divided-difference operator on the
x-subalgebra, and the pairing of alpha_s = x1 - x2 against xi-linear
forms.
"""

from __future__ import annotations

from .degrees import TriDegree, parity
from .scalars import default_field

N_GENERATORS = 8
X1, X2, Y1, Y2, NU1, NU2, XI1, XI2 = range(N_GENERATORS)

GENERATOR_NAMES = ("x1", "x2", "y1", "y2", "nu1", "nu2", "xi1", "xi2")
GENERATOR_INDEX = {name: idx for idx, name in enumerate(GENERATOR_NAMES)}

GENERATOR_DEGREES = (
    TriDegree(0, 2, 0),
    TriDegree(0, 2, 0),
    TriDegree(2, -2, 0),
    TriDegree(2, -2, 0),
    TriDegree(-1, 2, 0),
    TriDegree(-1, 2, 0),
    TriDegree(0, 0, 1),
    TriDegree(0, 0, 1),
)

# Exactly the generators g with <deg g, deg g> = 1.
ODD_GENERATORS = frozenset((NU1, NU2, XI1, XI2))

_S_PERMUTATION = (X2, X1, Y2, Y1, NU2, NU1, XI2, XI1)


class Monomial(tuple):
    """An exponent vector over the fixed generator order.

    Exterior exponents (nu, xi) are 0 or 1.
    """

    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if len(exps) != N_GENERATORS:
            raise ValueError("expected %d exponents, got %d" % (N_GENERATORS, len(exps)))
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent in %r" % (exps,))
        if any(exps[i] > 1 for i in range(NU1, N_GENERATORS)):
            raise ValueError("exterior exponent above 1 in %r" % (exps,))
        return super().__new__(cls, exps)

    @property
    def degree(self) -> TriDegree:
        return TriDegree(
            2 * (self[Y1] + self[Y2]) - (self[NU1] + self[NU2]),
            2 * (self[X1] + self[X2]) - 2 * (self[Y1] + self[Y2]) + 2 * (self[NU1] + self[NU2]),
            self[XI1] + self[XI2],
        )

    @property
    def cohomological_parity(self) -> int:
        return (self[NU1] + self[NU2]) % 2

    @property
    def hochschild_parity(self) -> int:
        return (self[XI1] + self[XI2]) % 2

    def with_exponent(self, index: int, value: int) -> "Monomial":
        exps = list(self)
        exps[index] = value
        return Monomial(exps)

    def __str__(self):
        parts = []
        for idx, e in enumerate(self):
            if e == 1:
                parts.append(GENERATOR_NAMES[idx])
            elif e > 1:
                parts.append("%s^%d" % (GENERATOR_NAMES[idx], e))
        return "*".join(parts) if parts else "1"


MONOMIAL_ONE = Monomial((0,) * N_GENERATORS)

GENERATOR_MONOMIALS = tuple(
    Monomial(tuple(1 if t == idx else 0 for t in range(N_GENERATORS)))
    for idx in range(N_GENERATORS)
)


def multiply_monomials(m: Monomial, n: Monomial):
    """(product monomial, sign) in canonical order, or None if it vanishes.

    The sign counts transpositions needed to merge the exterior letters,
    weighted by the parity form: nu past nu and xi past xi each flip the
    sign, nu past xi is free.
    """
    if (m[NU1] and n[NU1]) or (m[NU2] and n[NU2]) or (m[XI1] and n[XI1]) or (m[XI2] and n[XI2]):
        return None
    crossings = m[NU2] * n[NU1] + m[XI2] * n[XI1]
    sign = -1 if crossings % 2 else 1
    return Monomial(tuple(a + b for a, b in zip(m, n))), sign


def s_monomial(m: Monomial):
    """(swapped monomial, sign): indices 1 <-> 2 on every family.

    Swapping reverses each fully occupied exterior pair, e.g.
    nu1*nu2 -> nu2*nu1 = -nu1*nu2.
    """
    swapped = Monomial(tuple(m[p] for p in _S_PERMUTATION))
    sign = -1 if (m[NU1] * m[NU2] + m[XI1] * m[XI2]) % 2 else 1
    return swapped, sign


class AlgebraElement:
    """A finite k-linear combination of monomials; zero terms are absent."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    mono = Monomial(mono)
                if coeff:
                    clean[mono] = coeff
        self.field = field
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, field=None):
        return cls(field or default_field())

    @classmethod
    def scalar(cls, value, field=None):
        field = field or default_field()
        return cls(field, {MONOMIAL_ONE: field.coerce(value)})

    @classmethod
    def one(cls, field=None):
        return cls.scalar(1, field)

    @classmethod
    def generator(cls, name: str, field=None):
        field = field or default_field()
        idx = GENERATOR_INDEX[name]
        return cls(field, {GENERATOR_MONOMIALS[idx]: field.one})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff=1, field=None):
        field = field or default_field()
        return cls(field, {mono: field.coerce(coeff)})

    # -- ring structure ----------------------------------------------

    def _check_field(self, other: "AlgebraElement"):
        if other.field != self.field:
            raise ValueError("mixed coefficient fields")

    def __add__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.scalar(other, self.field)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_field(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, self.field.zero) + c
        return AlgebraElement(self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.scalar(other, self.field)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        c = self.field.coerce(value)
        if not c:
            return AlgebraElement.zero(self.field)
        return AlgebraElement(self.field, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_field(other)
            terms = {}
            zero = self.field.zero
            for m, cm in self.terms.items():
                for n, cn in other.terms.items():
                    prod = multiply_monomials(m, n)
                    if prod is None:
                        continue
                    mono, sign = prod
                    coeff = cm * cn
                    if sign < 0:
                        coeff = -coeff
                    acc = terms.get(mono, zero) + coeff
                    if acc:
                        terms[mono] = acc
                    elif mono in terms:
                        del terms[mono]
            return AlgebraElement(self.field, terms)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        # only scalars reach here; they commute with everything
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be non-negative integers")
        result = AlgebraElement.one(self.field)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.scalar(other, self.field)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    __hash__ = None

    # -- grading -----------------------------------------------------

    def homogeneous_components(self):
        comps = {}
        for mono, c in self.terms.items():
            comps.setdefault(mono.degree, {})[mono] = c
        return {d: AlgebraElement(self.field, t) for d, t in comps.items()}

    def degree(self):
        """The common degree of all terms, or None if mixed or zero."""
        degs = {m.degree for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def homogeneous_part(self, degree: TriDegree) -> "AlgebraElement":
        return AlgebraElement(
            self.field, {m: c for m, c in self.terms.items() if m.degree == degree}
        )

    # -- structure maps ----------------------------------------------

    def kappa(self) -> "AlgebraElement":
        """The differential: nu_i -> x_i, Leibniz in the cohomological parity.

        Raises the degree by (1, 0, 0); squares to zero.
        """
        out = {}
        zero = self.field.zero
        for mono, c in self.terms.items():
            if mono[NU1]:
                new = list(mono)
                new[NU1] = 0
                new[X1] += 1
                key = Monomial(new)
                acc = out.get(key, zero) + c
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
            if mono[NU2]:
                new = list(mono)
                new[NU2] = 0
                new[X2] += 1
                key = Monomial(new)
                contrib = -c if mono[NU1] else c
                acc = out.get(key, zero) + contrib
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return AlgebraElement(self.field, out)

    def s_action(self) -> "AlgebraElement":
        """The involution swapping the 1- and 2-indexed generators."""
        out = {}
        for mono, c in self.terms.items():
            swapped, sign = s_monomial(mono)
            out[swapped] = -c if sign < 0 else c
        return AlgebraElement(self.field, out)

    def demazure(self) -> "AlgebraElement":
        """(f - s(f)) / (x1 - x2) on the x-subalgebra; exact division."""
        for mono in self.terms:
            if any(mono[i] for i in range(Y1, N_GENERATORS)):
                raise ValueError("divided difference needs an element of k[x1, x2]")
        work = dict((self - self.s_action()).terms)
        quotient = {}
        zero = self.field.zero
        while work:
            mono = max(work)  # largest x1-degree first (lex order on exponents)
            c = work.pop(mono)
            if mono[X1] == 0:
                raise ArithmeticError("not divisible by x1 - x2: %s" % mono)
            qm = mono.with_exponent(X1, mono[X1] - 1)
            quotient[qm] = quotient.get(qm, zero) + c
            lower = qm.with_exponent(X2, qm[X2] + 1)
            acc = work.get(lower, zero) + c
            if acc:
                work[lower] = acc
            elif lower in work:
                del work[lower]
        return AlgebraElement(self.field, quotient)

    def alpha_pairing(self):
        """Pair alpha_s = x1 - x2 against a xi-linear form: xi1 -> 1, xi2 -> -1."""
        total = self.field.zero
        for mono, c in self.terms.items():
            if mono == GENERATOR_MONOMIALS[XI1]:
                total = total + c
            elif mono == GENERATOR_MONOMIALS[XI2]:
                total = total - c
            else:
                raise ValueError("alpha pairing needs a k-linear combination of xi1, xi2")
        return total

    # -- display -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            cs = str(c)
            ms = str(mono)
            if ms == "1":
                text = cs
            elif cs == "1":
                text = ms
            elif cs == "-1":
                text = "-" + ms
            else:
                text = "%s*%s" % (cs if "/" not in cs else "(%s)" % cs, ms)
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "<AlgebraElement %s>" % self


def enumerate_monomials(degree, allowed=None):
    """All monomials of the given degree over an allowed generator subset.

    The degree equations bound every exponent: the exterior exponents
    are at most 1, which pins the total y-exponent through the
    cohomological degree and then the total x-exponent through the
    internal degree.  The result is sorted in the monomial order.
    """
    i, j, k = degree
    if allowed is None:
        allowed_idx = frozenset(range(N_GENERATORS))
    else:
        allowed_idx = frozenset(
            GENERATOR_INDEX[a] if isinstance(a, str) else int(a) for a in allowed
        )
    out = []
    nu1_choices = (0, 1) if NU1 in allowed_idx else (0,)
    nu2_choices = (0, 1) if NU2 in allowed_idx else (0,)
    xi1_choices = (0, 1) if XI1 in allowed_idx else (0,)
    xi2_choices = (0, 1) if XI2 in allowed_idx else (0,)
    for c1 in nu1_choices:
        for c2 in nu2_choices:
            for e1 in xi1_choices:
                for e2 in xi2_choices:
                    if e1 + e2 != k:
                        continue
                    twice_b = i + c1 + c2
                    if twice_b < 0 or twice_b % 2:
                        continue
                    b_total = twice_b // 2
                    twice_a = j + 2 * b_total - 2 * (c1 + c2)
                    if twice_a < 0 or twice_a % 2:
                        continue
                    a_total = twice_a // 2
                    for a1 in _splits(a_total, X1 in allowed_idx, X2 in allowed_idx):
                        for b1 in _splits(b_total, Y1 in allowed_idx, Y2 in allowed_idx):
                            out.append(
                                Monomial(
                                    (a1, a_total - a1, b1, b_total - b1, c1, c2, e1, e2)
                                )
                            )
    out.sort()
    return out


def _splits(total, first_allowed, second_allowed):
    if not first_allowed and not second_allowed:
        return [0] if total == 0 else []
    if not first_allowed:
        return [0]
    if not second_allowed:
        return [total]
    return range(total + 1)


# -- named constants ----------------------------------------------------


def alpha_s(field=None):
    field = field or default_field()
    return AlgebraElement.generator("x1", field) - AlgebraElement.generator("x2", field)


def alpha_s_v(field=None):
    field = field or default_field()
    return AlgebraElement.generator("y1", field) - AlgebraElement.generator("y2", field)


def nu_s(field=None):
    field = field or default_field()
    return AlgebraElement.generator("nu1", field) - AlgebraElement.generator("nu2", field)


def xi_s(field=None):
    field = field or default_field()
    return AlgebraElement.generator("xi1", field) - AlgebraElement.generator("xi2", field)


def theta(field=None):
    """nu1*y1 + nu2*y2; the curvature potential on the empty word."""
    field = field or default_field()
    g = lambda n: AlgebraElement.generator(n, field)
    return g("nu1") * g("y1") + g("nu2") * g("y2")


def theta_s(field=None):
    """nu2*y1 + nu1*y2; the index-twisted companion of theta.

    Note this is the sum of s(nu_i)*y_i, which differs from applying the
    involution s to theta (s fixes theta).
    """
    field = field or default_field()
    g = lambda n: AlgebraElement.generator(n, field)
    return g("nu2") * g("y1") + g("nu1") * g("y2")


NAMED_CONSTANTS = {
    "alpha_s": alpha_s,
    "alpha_s_v": alpha_s_v,
    "nu_s": nu_s,
    "xi_s": xi_s,
    "theta": theta,
    "theta_s": theta_s,
}
