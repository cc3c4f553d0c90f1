"""Exact one-variable q-series and the catalog of classical building blocks.

A :class:`FracSeries` is a Laurent series in q^(1/D) with rational
coefficients and an explicit *cutoff*: coefficients at exponents strictly
below the cutoff are exact, everything above is unknown.  Operations
propagate the tightest cutoff they can guarantee and refuse (rather than
silently truncate) when asked for data beyond it.

The catalog covers the Dedekind eta function and eta quotients, the weight-2
Eisenstein combinations Lambda_N, the level 11/14/15/20/23/44 newforms, the
unary theta functions S^(m)_r, and the classical mock theta functions of
orders 2, 3, 8 and 10.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .algebra import as_rat
from .errors import CutoffUnderflow, DataExhausted, NotInvertible, NotUnimodular

INF = Fraction(10**15)  # effectively infinite cutoff for exact polynomials


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FracSeries:
    """Laurent series in q^(1/denom), exact below ``cutoff``.

    ``coeffs`` maps integer k to the coefficient of q^(k/denom); zero
    coefficients are never stored.  Instances are immutable by convention.
    """

    __slots__ = ("denom", "coeffs", "cutoff")

    def __init__(self, denom: int, coeffs: dict, cutoff: Fraction):
        self.denom = denom
        self.cutoff = as_rat(cutoff)
        kcut = self.cutoff * denom
        self.coeffs = {k: v for k, v in coeffs.items() if v != 0 and k < kcut}

    # -- construction -------------------------------------------------
    @classmethod
    def from_terms(cls, terms, cutoff) -> "FracSeries":
        """Build from (exponent, coefficient) pairs with Fraction exponents."""
        cutoff = as_rat(cutoff)
        denom = 1
        pairs = []
        for e, c in terms:
            e = as_rat(e)
            if e < cutoff:
                denom = _lcm(denom, e.denominator)
                pairs.append((e, c))
        coeffs = {}
        for e, c in pairs:
            k = e.numerator * (denom // e.denominator)
            coeffs[k] = coeffs.get(k, 0) + c
        return cls(denom, coeffs, cutoff)

    @classmethod
    def zero(cls, cutoff=INF) -> "FracSeries":
        return cls(1, {}, cutoff)

    @classmethod
    def one(cls, cutoff=INF) -> "FracSeries":
        return cls(1, {0: 1}, cutoff)

    @classmethod
    def monomial(cls, exponent, coeff=1, cutoff=INF) -> "FracSeries":
        return cls.from_terms([(exponent, coeff)], cutoff)

    # -- inspection ---------------------------------------------------
    def exponent(self, k: int) -> Fraction:
        return Fraction(k, self.denom)

    def items(self):
        """Sorted (Fraction exponent, coefficient) pairs."""
        for k in sorted(self.coeffs):
            yield Fraction(k, self.denom), self.coeffs[k]

    def coefficient(self, e) -> Fraction:
        e = as_rat(e)
        if e >= self.cutoff:
            raise CutoffUnderflow(f"coefficient at {e} >= cutoff {self.cutoff}")
        if e.denominator and self.denom % e.denominator == 0:
            return as_rat(self.coeffs.get(e.numerator * (self.denom // e.denominator), 0))
        return Fraction(0)

    def low(self) -> Fraction:
        """Lowest exponent with a nonzero coefficient (0 for the zero series)."""
        if not self.coeffs:
            return Fraction(0)
        return Fraction(min(self.coeffs), self.denom)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        cut = min(self.cutoff, other.cutoff)
        return self.truncate(cut).normalized_pairs() == other.truncate(cut).normalized_pairs()

    def __hash__(self):
        return hash((self.denom, self.cutoff, tuple(sorted(self.coeffs.items()))))

    def normalized_pairs(self):
        return tuple((Fraction(k, self.denom), as_rat(v)) for k, v in sorted(self.coeffs.items()))

    # -- arithmetic ----------------------------------------------------
    def _align(self, other: "FracSeries"):
        d = _lcm(self.denom, other.denom)
        fa, fb = d // self.denom, d // other.denom
        a = {k * fa: v for k, v in self.coeffs.items()}
        b = {k * fb: v for k, v in other.coeffs.items()}
        return d, a, b

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FracSeries.monomial(0, other)
        d, a, b = self._align(other)
        for k, v in b.items():
            a[k] = a.get(k, 0) + v
        return FracSeries(d, a, min(self.cutoff, other.cutoff))

    __radd__ = __add__

    def __neg__(self):
        return FracSeries(self.denom, {k: -v for k, v in self.coeffs.items()}, self.cutoff)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FracSeries.monomial(0, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "FracSeries":
        if c == 0:
            return FracSeries(1, {}, self.cutoff)
        return FracSeries(self.denom, {k: c * v for k, v in self.coeffs.items()}, self.cutoff)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        d, a, b = self._align(other)
        if not a or not b:
            cut = min(self.cutoff, other.cutoff)
            return FracSeries(1, {}, INF if (self.cutoff == INF and other.cutoff == INF) else cut)
        cut = min(self.cutoff + other.low(), other.cutoff + self.low())
        kcut = cut * d  # exact Fraction; compare k < kcut
        out = {}
        bi = sorted(b.items())
        for ka, va in a.items():
            for kb, vb in bi:
                k = ka + kb
                if k >= kcut:
                    break
                out[k] = out.get(k, 0) + va * vb
        return FracSeries(d, out, cut)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        result = FracSeries.one(self.cutoff if n == 0 else INF)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self, cutoff=None) -> "FracSeries":
        """Multiplicative inverse; requires a nonzero lowest-order coefficient.

        The result is exact below ``self.cutoff - 2*low``.  An everywhere-
        exact polynomial has no finite inverse expansion, so a target
        ``cutoff`` must be supplied for those.
        """
        if not self.coeffs:
            raise NotInvertible("cannot invert the zero series")
        work = self
        if cutoff is not None:
            work = self.truncate(min(self.cutoff, as_rat(cutoff) + 2 * self.low()))
        if work.cutoff >= INF:
            raise CutoffUnderflow("inverting an exact polynomial needs a target cutoff")
        self = work
        low_k = min(self.coeffs)
        lead = as_rat(self.coeffs[low_k])
        low = Fraction(low_k, self.denom)
        cut = self.cutoff - 2 * low
        # reduce to monic 1 + u on the sparsest sublattice
        rel = {k - low_k: as_rat(v) / lead for k, v in self.coeffs.items()}
        step = 0
        for k in rel:
            step = gcd(step, k)
        step = step or 1
        u = {k // step: v for k, v in rel.items() if k}
        kmax_f = (self.cutoff - low) * self.denom / step  # exact bound on reduced lattice
        kmax = int(kmax_f) + (1 if kmax_f == int(kmax_f) else 1)
        inv = [Fraction(0)] * max(kmax, 1)
        inv[0] = Fraction(1)
        uk = sorted(u.items())
        for k in range(1, len(inv)):
            s = Fraction(0)
            for j, uj in uk:
                if j > k:
                    break
                s += uj * inv[k - j]
            inv[k] = -s
        coeffs = {}
        for k, v in enumerate(inv):
            if v:
                coeffs[k * step - low_k] = v / lead
        return FracSeries(self.denom, coeffs, cut)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / as_rat(other))
        return self * other.invert()

    # -- structural ops -------------------------------------------------
    def rescale(self, t) -> "FracSeries":
        """Map exponents e -> t*e (t a positive rational)."""
        t = as_rat(t)
        if t <= 0:
            raise ValueError("rescale factor must be positive")
        return FracSeries.from_terms(
            ((Fraction(k, self.denom) * t, v) for k, v in self.coeffs.items()),
            self.cutoff * t,
        )

    def shift(self, e) -> "FracSeries":
        """Multiply by q^e."""
        e = as_rat(e)
        return FracSeries.from_terms(
            ((Fraction(k, self.denom) + e, v) for k, v in self.coeffs.items()),
            self.cutoff + e,
        )

    def split(self, residue) -> "FracSeries":
        """Keep only exponents congruent to ``residue`` modulo 1."""
        residue = as_rat(residue) % 1
        keep = {
            k: v
            for k, v in self.coeffs.items()
            if Fraction(k, self.denom) % 1 == residue
        }
        return FracSeries(self.denom, keep, self.cutoff)

    def substitute_minus_q(self) -> "FracSeries":
        """q -> -q on an integer-exponent series."""
        out = {}
        for k, v in self.coeffs.items():
            e = Fraction(k, self.denom)
            if e.denominator != 1:
                raise ValueError("q -> -q needs integer exponents")
            out[k] = -v if e.numerator % 2 else v
        return FracSeries(self.denom, out, self.cutoff)

    def truncate(self, cutoff) -> "FracSeries":
        cutoff = as_rat(cutoff)
        if cutoff > self.cutoff:
            raise CutoffUnderflow(f"cannot extend cutoff {self.cutoff} to {cutoff}")
        kcut = cutoff * self.denom
        return FracSeries(self.denom, {k: v for k, v in self.coeffs.items() if k < kcut}, cutoff)

    def render(self, max_terms: int = 12) -> str:
        """Canonical text form q^(a/b)*(c0 + c1*q^(s) + ...)."""
        if not self.coeffs:
            return "0"
        low = self.low()
        parts = []
        for i, (e, c) in enumerate(self.items()):
            if i >= max_terms:
                parts.append("...")
                break
            rel = e - low
            if rel == 0:
                parts.append(str(as_rat(c)))
            else:
                parts.append(f"{as_rat(c)}*q^({rel})")
        body = " + ".join(parts).replace("+ -", "- ")
        if low == 0:
            return body
        return f"q^({low})*({body})"

    def __repr__(self):
        return f"FracSeries({self.render(6)}, cutoff={self.cutoff})"


def series_arith(a: FracSeries, b, op: str, **kw):
    """Dispatcher over the series operations (mirror of the public methods)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "invert":
        return a.invert()
    if op == "rescale":
        return a.rescale(kw["t"])
    if op == "split":
        return a.split(kw["residue"])
    if op == "shift":
        return a.shift(kw["exponent"])
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# catalog: eta and friends

def euler_product(cutoff, step: int = 1) -> FracSeries:
    """prod_{n>=1} (1 - q^(step*n)) by the pentagonal number expansion."""
    cutoff = as_rat(cutoff)
    coeffs = {}
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = step * kk * (3 * kk - 1) // 2
            if e < cutoff:
                coeffs[e] = coeffs.get(e, 0) + (-1) ** (kk % 2)
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return FracSeries(1, coeffs, cutoff)


def eta(cutoff) -> FracSeries:
    """Dedekind eta: q^(1/24) prod (1 - q^n)."""
    return euler_product(as_rat(cutoff) - Fraction(1, 24)).shift(Fraction(1, 24))


def eta_quotient(spec, cutoff) -> FracSeries:
    """prod_k eta(k*tau)^(m_k) for spec a sequence of (scale, exponent).

    Scales may be rationals (used for arguments like tau/2); exponents any
    integers, negative entries handled by exact series inversion.
    """
    cutoff = as_rat(cutoff)
    result = FracSeries.one()
    for k, m in spec:
        k = as_rat(k)
        if k <= 0 or m == 0:
            if m == 0:
                continue
            raise ValueError("eta scale must be positive")
        # generous inner cutoff: inversion costs 2*low, powers cost |m|*low
        inner = cutoff / k + Fraction(abs(m) + 2, 12)
        base = eta(inner).rescale(k)
        result = result * (base ** m)
    return result.truncate(cutoff) if result.cutoff > cutoff else result


def divisor_sigma(k: int) -> int:
    s = 0
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            s += d
            if d != k // d:
                s += k // d
    return s


def lambda_n(n: int, cutoff) -> FracSeries:
    """Weight-2 Eisenstein form Lambda_N on Gamma_0(N), N >= 2."""
    if n < 2:
        raise ValueError("lambda_n needs N >= 2")
    cutoff = as_rat(cutoff)
    pref = Fraction(n * (n - 1), 24)
    coeffs = {0: pref}
    k = 1
    while k < cutoff:
        c = pref * Fraction(24, n - 1) * divisor_sigma(k)
        coeffs[k] = coeffs.get(k, 0) + c
        if n * k < cutoff:
            coeffs[n * k] = coeffs.get(n * k, 0) - n * c
        k += 1
    return FracSeries(1, coeffs, cutoff)


_F44 = {1: 1, 3: 1, 5: -3, 7: 2, 9: -2, 11: -1, 13: -4, 15: -3, 17: 6, 19: 8,
        21: 2, 23: -3, 25: 4, 27: -5}
_F44_CUT = 28  # stored data is exact below q^28

_NEWFORM_SPECS = {
    "f11": [(1, 2), (11, 2)],
    "f14": [(1, 1), (2, 1), (7, 1), (14, 1)],
    "f15": [(1, 1), (3, 1), (5, 1), (15, 1)],
    "f20": [(2, 2), (10, 2)],
    "f23b": [(1, 2), (23, 2)],
}


def newform(label: str, cutoff) -> FracSeries:
    """Weight-2 newform by label: f11, f14, f15, f20, f23a, f23b, f44."""
    cutoff = as_rat(cutoff)
    if label in _NEWFORM_SPECS:
        return eta_quotient(_NEWFORM_SPECS[label], cutoff)
    if label == "f23a":
        out = eta_quotient([(1, 3), (23, 3), (2, -1), (46, -1)], cutoff)
        out = out + eta_quotient([(1, 2), (23, 2)], cutoff).scale(3)
        out = out + eta_quotient([(1, 1), (2, 1), (23, 1), (46, 1)], cutoff).scale(4)
        out = out + eta_quotient([(2, 2), (46, 2)], cutoff).scale(4)
        return out
    if label == "f44":
        if cutoff > _F44_CUT:
            raise DataExhausted(f"f44 stored to q^{_F44_CUT - 1} only; asked for {cutoff}")
        return FracSeries(1, {k: v for k, v in _F44.items() if k < cutoff}, cutoff)
    raise KeyError(f"unknown newform {label!r}")


def unary_theta(m: int, r: int, cutoff) -> FracSeries:
    """S^(m)_r = sum_n (2mn + r) q^((2mn+r)^2 / 4m)."""
    if m < 1:
        raise ValueError("index m must be >= 1")
    cutoff = as_rat(cutoff)
    terms = []
    n = 0
    while True:
        added = False
        for s in ((n, -n - 1) if True else ()):
            j = 2 * m * s + r
            e = Fraction(j * j, 4 * m)
            if e < cutoff:
                terms.append((e, j))
                added = True
        if not added:
            break
        n += 1
    return FracSeries.from_terms(terms, cutoff)


# ---------------------------------------------------------------------------
# mock theta functions

def _poch(signs_exps, cutoff):
    """prod (1 + sign*q^e) as an exact polynomial below cutoff."""
    out = FracSeries.one()
    for sign, e in signs_exps:
        out = out * FracSeries(1, {0: 1, e: sign}, INF)
    return out.truncate(min(out.cutoff, cutoff))


def _eulerian(cutoff, valuation, numerator, denominator, sign=None):
    """Sum over n of sign(n) * q^valuation(n) * numerator(n)/denominator(n)."""
    cutoff = as_rat(cutoff)
    total = FracSeries.zero(cutoff)
    n = 0
    while valuation(n) < cutoff:
        rel = cutoff - valuation(n)
        num = _poch(numerator(n), rel)
        den = _poch(denominator(n), rel + 1)
        term = (num * den.invert()).truncate(rel)
        term = term.shift(valuation(n))
        if sign is not None and sign(n):
            term = -term
        total = total + term
        n += 1
    return FracSeries(total.denom, total.coeffs, cutoff)


def _rng(n, mk_exp, sign=1):
    return [(sign, mk_exp(k)) for k in range(1, n + 1)]


_MOCK_THETA = {}


def _register(label):
    def deco(fn):
        _MOCK_THETA[label] = fn
        return fn
    return deco


@_register("f")
def _mock_f(cut):
    return _eulerian(cut, lambda n: n * n,
                     lambda n: [],
                     lambda n: _rng(n, lambda k: k) * 2)


@_register("phi")
def _mock_phi(cut):
    return _eulerian(cut, lambda n: n * n,
                     lambda n: [],
                     lambda n: _rng(n, lambda k: 2 * k))


@_register("chi")
def _mock_chi(cut):
    # denominators (1 - q^k + q^(2k)); expand each factor exactly
    cut = as_rat(cut)
    total = FracSeries.zero(cut)
    n = 0
    while n * n < cut:
        rel = cut - n * n
        den = FracSeries.one()
        for k in range(1, n + 1):
            den = den * FracSeries(1, {0: 1, k: -1, 2 * k: 1}, INF)
        term = den.invert(cutoff=rel).truncate(rel).shift(n * n)
        total = total + term
        n += 1
    return FracSeries(total.denom, total.coeffs, cut)


@_register("omega")
def _mock_omega(cut):
    return _eulerian(cut, lambda n: 2 * n * (n + 1),
                     lambda n: [],
                     lambda n: [(-1, 2 * k + 1) for k in range(n + 1)] * 2)


@_register("rho")
def _mock_rho(cut):
    cut = as_rat(cut)
    total = FracSeries.zero(cut)
    n = 0
    while 2 * n * (n + 1) < cut:
        v = 2 * n * (n + 1)
        rel = cut - v
        den = FracSeries.one()
        for k in range(n + 1):
            e = 2 * k + 1
            den = den * FracSeries(1, {0: 1, e: 1, 2 * e: 1}, INF)
        total = total + den.invert(cutoff=rel).truncate(rel).shift(v)
        n += 1
    return FracSeries(total.denom, total.coeffs, cut)


@_register("mu2")
def _mock_mu2(cut):
    return _eulerian(cut, lambda n: n * n,
                     lambda n: _rng(n, lambda k: 2 * k - 1, -1),
                     lambda n: _rng(n, lambda k: 2 * k) * 2,
                     sign=lambda n: n % 2)


@_register("U0")
def _mock_u0(cut):
    return _eulerian(cut, lambda n: n * n,
                     lambda n: _rng(n, lambda k: 2 * k - 1),
                     lambda n: _rng(n, lambda k: 4 * k))


@_register("U1")
def _mock_u1(cut):
    return _eulerian(cut, lambda n: (n + 1) ** 2,
                     lambda n: _rng(n, lambda k: 2 * k - 1),
                     lambda n: [(1, 4 * k - 2) for k in range(1, n + 2)])


@_register("S0")
def _mock_s0(cut):
    return _eulerian(cut, lambda n: n * n,
                     lambda n: _rng(n, lambda k: 2 * k - 1),
                     lambda n: _rng(n, lambda k: 2 * k))


@_register("S1")
def _mock_s1(cut):
    return _eulerian(cut, lambda n: n * (n + 2),
                     lambda n: _rng(n, lambda k: 2 * k - 1),
                     lambda n: _rng(n, lambda k: 2 * k))


@_register("T0")
def _mock_t0(cut):
    return _eulerian(cut, lambda n: (n + 1) * (n + 2),
                     lambda n: _rng(n, lambda k: 2 * k),
                     lambda n: _rng(n + 1, lambda k: 2 * k - 1))


@_register("T1")
def _mock_t1(cut):
    return _eulerian(cut, lambda n: n * (n + 1),
                     lambda n: _rng(n, lambda k: 2 * k),
                     lambda n: _rng(n + 1, lambda k: 2 * k - 1))


@_register("phi10")
def _mock_phi10(cut):
    return _eulerian(cut, lambda n: n * (n + 1) // 2,
                     lambda n: [],
                     lambda n: [(-1, 2 * k - 1) for k in range(1, n + 2)])


@_register("psi10")
def _mock_psi10(cut):
    return _eulerian(cut, lambda n: (n + 1) * (n + 2) // 2,
                     lambda n: [],
                     lambda n: [(-1, 2 * k - 1) for k in range(1, n + 2)])


@_register("X")
def _mock_x(cut):
    return _eulerian(cut, lambda n: n * n,
                     lambda n: [],
                     lambda n: _rng(2 * n, lambda k: k),
                     sign=lambda n: n % 2)


@_register("chi10")
def _mock_chi10(cut):
    return _eulerian(cut, lambda n: (n + 1) ** 2,
                     lambda n: [],
                     lambda n: _rng(2 * n + 1, lambda k: k),
                     sign=lambda n: n % 2)


def mock_theta(label: str, cutoff) -> FracSeries:
    """Classical mock theta function by label.

    Labels: order 3: f, phi, chi, omega, rho; order 2/8: mu2, U0, U1,
    S0, S1, T0, T1; order 10: phi10, psi10, X, chi10.
    """
    try:
        fn = _MOCK_THETA[label]
    except KeyError:
        raise KeyError(f"unknown mock theta {label!r}") from None
    return fn(as_rat(cutoff))


# ---------------------------------------------------------------------------
# eta multiplier

def _dedekind_sum(d: int, c: int) -> Fraction:
    def saw(x: Fraction) -> Fraction:
        if x.denominator == 1:
            return Fraction(0)
        return x - (x.numerator // x.denominator) - Fraction(1, 2)

    s = Fraction(0)
    for m in range(1, c):
        s += saw(Fraction(m, c)) * saw(Fraction(m * d, c))
    return s


def dedekind_epsilon(a: int, b: int, c: int, d: int) -> int:
    """Eta multiplier as the integer k (mod 24) with epsilon = e(k/24)."""
    if a * d - b * c != 1:
        raise NotUnimodular(f"det != 1 for {(a, b, c, d)}")
    if c < 0 or (c == 0 and d < 0):
        # epsilon(-gamma) = epsilon(gamma) * e(1/4)
        return (dedekind_epsilon(-a, -b, -c, -d) + 6) % 24
    if c == 0:
        return (-b) % 24
    x = Fraction(-(a + d), 24 * c) + _dedekind_sum(d, c) / 2 + Fraction(1, 8)
    k = 24 * x
    if k.denominator != 1:
        raise ArithmeticError(f"eta multiplier not a 24th root for {(a, b, c, d)}")
    return k.numerator % 24
