"""Exact scalar fields: the rationals and small Galois fields GF(p^k).

Field elements support +, -, *, /, ==, hash and bool, so the linear
algebra layer is field-agnostic.  Rationals are plain ``fractions.Fraction``;
Galois field elements are ``GFElem`` wrappers around an integer code
(the base-p digits of the code are the polynomial coefficients).
"""

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _find_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    def encode(code):
        # coefficients of x^0..x^{k-1} from base-p digits, then monic x^k
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        return coeffs + [1]

    def is_irreducible(poly):
        # trial division by every monic polynomial of degree 1..k//2
        for d in range(1, k // 2 + 1):
            for code in range(p ** d):
                div = []
                c = code
                for _ in range(d):
                    div.append(c % p)
                    c //= p
                div.append(1)
                if _poly_divides(div, poly, p):
                    return False
        return True

    for code in range(p ** k):
        poly = encode(code)
        if is_irreducible(poly):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")


def _poly_divides(d, a, p):
    r = _poly_mod(a, d, p) if len(a) >= len(d) else list(a)
    return all(c % p == 0 for c in r)


class GFElem:
    """Element of a Galois field; immutable, hashable."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code % field.order

    def _check(self, other):
        if isinstance(other, GFElem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.elem(other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field._add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field._add(self, -o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field._add(o, -self)

    def __neg__(self):
        f = self.field
        digits = f._digits(self.code)
        return GFElem(f, f._undigits([(-d) % f.p for d in digits]))

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field._mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field._mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field._mul(o, self.inverse())

    def inverse(self):
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.field._pow(self, self.field.order - 2)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return self.field._pow(self, e)

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self == self.field.elem(other % self.field.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"GF({self.field.p}^{self.field.k}:{self.code})" \
            if self.field.k > 1 else f"{self.code}%{self.field.p}"


class GF:
    """The Galois field GF(p^k); instances with equal (p, k) compare equal."""

    _cache = {}

    def __new__(cls, p, k=1):
        key = (p, k)
        if key in cls._cache:
            return cls._cache[key]
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("k must be >= 1")
        self = super().__new__(cls)
        self.p = p
        self.k = k
        self.order = p ** k
        self.char = p
        self.modulus = _find_irreducible(p, k) if k > 1 else (0, 1)
        cls._cache[key] = self
        return self

    # -- encoding helpers -------------------------------------------------
    def _digits(self, code):
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return out

    def _undigits(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + (d % self.p)
        return code

    # -- arithmetic --------------------------------------------------------
    def _add(self, a, b):
        da, db = self._digits(a.code), self._digits(b.code)
        return GFElem(self, self._undigits([(x + y) % self.p
                                            for x, y in zip(da, db)]))

    def _mul(self, a, b):
        if self.k == 1:
            return GFElem(self, (a.code * b.code) % self.p)
        prod = _poly_mul(self._digits(a.code), self._digits(b.code), self.p)
        red = _poly_mod(prod, list(self.modulus), self.p)
        red += [0] * (self.k - len(red))
        return GFElem(self, self._undigits(red))

    def _pow(self, a, e):
        r = self.one
        b = a
        while e:
            if e & 1:
                r = self._mul(r, b)
            b = self._mul(b, b)
            e >>= 1
        return r

    # -- field interface ---------------------------------------------------
    @property
    def zero(self):
        return GFElem(self, 0)

    @property
    def one(self):
        return GFElem(self, 1)

    def elem(self, code):
        if isinstance(code, GFElem):
            if code.field != self:
                raise ValueError("element of a different field")
            return code
        return GFElem(self, int(code) % self.order)

    def elements(self):
        return [GFElem(self, c) for c in range(self.order)]

    @property
    def is_prime_field(self):
        return self.k == 1

    def frobenius(self, x, m=1):
        """x -> x^(p^m), the m-th Frobenius power."""
        return self._pow(self.elem(x), self.p ** m)

    def sigma(self, name):
        """Field involution by name: 'id' or 'frobenius' (needs even k)."""
        if name == "id":
            return lambda x: x
        if name == "frobenius":
            if self.k % 2 != 0:
                raise ValueError(
                    "order-2 automorphism needs an even extension degree")
            m = self.k // 2
            return lambda x: self.frobenius(x, m)
        raise ValueError(f"unknown involution {name!r}")

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"


class RationalField:
    """The rationals; a singleton wrapper around fractions.Fraction."""

    char = 0
    is_prime_field = True
    order = None

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def elem(self, x):
        return Fraction(x)

    def elements(self):
        return None

    def sigma(self, name):
        if name != "id":
            raise ValueError("the rationals only carry the identity involution")
        return lambda x: x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def field_from_json(desc):
    """Parse a field descriptor: "Q" or {"p": int, "k": int}."""
    if desc == "Q":
        return QQ
    if isinstance(desc, dict) and "p" in desc:
        return GF(int(desc["p"]), int(desc.get("k", 1)))
    raise ValueError(f"bad field descriptor: {desc!r}")


def field_to_json(field):
    if field == QQ:
        return "Q"
    return {"p": field.p, "k": field.k}


def scalar_to_json(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GFElem):
        return x.code
    if isinstance(x, int):
        return x
    raise ValueError(f"cannot serialize scalar {x!r}")


def scalar_from_json(field, v):
    if field == QQ:
        if isinstance(v, str):
            return Fraction(v)
        return Fraction(v)
    return field.elem(int(v))
