"""Two-variable exact series: Jacobi theta functions, the weight-0 basis of
weak Jacobi forms, meromorphic blocks expanded in a fixed annulus, and the
extraction of the vector-valued mock modular forms attached to the six
distinguished weight-0 forms.

A :class:`WindowedSeries` stores, for each q-exponent below ``qcut``, a finite
Laurent row in y.  Two flavours exist:

* *complete* (``ywindow is None``): every nonzero coefficient is stored; this
  is the case for weak Jacobi forms and theta functions, whose y-support per
  q-order is finite.
* *windowed* (``ywindow = Y``): rows are exact for ``|y-power| <= Y`` only;
  used for meromorphic blocks whose annulus expansions have infinite tails.

The ``annulus`` tag records which geometric expansion produced a meromorphic
block: ``lower`` means |q| < |y| < 1, ``upper`` means 1 < |y| < 1/|q|.
Entire series combine with anything; two tagged series combine only when the
tags agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import as_rat
from .errors import OutOfRange, UnboundedSupport, WindowTooNarrow
from .qseries import INF, FracSeries, eta, euler_product

ENTIRE = "entire"
LOWER = "lower"   # |q| < |y| < 1
UPPER = "upper"   # 1 < |y| < 1/|q|


def _lcm(a, b):
    return a * b // gcd(a, b)


class WindowedSeries:
    """q/y bi-series with exact windowing; see module docstring."""

    __slots__ = ("denom", "ydenom", "qcut", "rows", "ywindow", "support_index", "annulus")

    def __init__(self, denom, rows, qcut, ywindow=None, support_index=None,
                 annulus=ENTIRE, ydenom=1):
        self.denom = denom
        self.ydenom = ydenom
        self.qcut = as_rat(qcut)
        kcut = self.qcut * denom
        clean = {}
        for k, row in rows.items():
            if k >= kcut:
                continue
            r = {y: c for y, c in row.items() if c != 0}
            if r:
                clean[k] = r
        self.rows = clean
        self.ywindow = ywindow
        self.support_index = support_index
        self.annulus = annulus

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, qcut, **kw):
        return cls(1, {}, qcut, **kw)

    @classmethod
    def one(cls, qcut=INF):
        return cls(1, {0: {0: 1}}, qcut, support_index=0)

    @classmethod
    def from_fracseries(cls, f: FracSeries) -> "WindowedSeries":
        """Embed a one-variable series as a y-independent bi-series."""
        return cls(f.denom, {k: {0: v} for k, v in f.coeffs.items()}, f.cutoff,
                   support_index=0)

    # -- basic inspection --------------------------------------------------
    def is_complete(self):
        return self.ywindow is None

    def qexp(self, k):
        return Fraction(k, self.denom)

    def coefficient(self, qe, ypow) -> Fraction:
        qe, ypow = as_rat(qe), as_rat(ypow)
        if qe >= self.qcut:
            raise OutOfRange(f"q-exponent {qe} >= qcut {self.qcut}")
        if self.ywindow is not None and abs(ypow) > self.ywindow:
            raise WindowTooNarrow(f"y-power {ypow} outside window {self.ywindow}")
        if self.denom % qe.denominator or self.ydenom % ypow.denominator:
            return Fraction(0)
        k = qe.numerator * (self.denom // qe.denominator)
        y = ypow.numerator * (self.ydenom // ypow.denominator)
        return as_rat(self.rows.get(k, {}).get(y, 0))

    def max_abs_y(self) -> Fraction:
        m = 0
        for row in self.rows.values():
            for y in row:
                if abs(y) > m:
                    m = abs(y)
        return Fraction(m, self.ydenom)

    def items(self):
        for k in sorted(self.rows):
            for y in sorted(self.rows[k]):
                yield Fraction(k, self.denom), Fraction(y, self.ydenom), self.rows[k][y]

    def dump(self) -> str:
        """Line format '(q_num/q_den, y_pow) -> rational', sorted."""
        out = []
        for qe, yp, c in self.items():
            out.append(f"({qe.numerator}/{qe.denominator}, {yp}) -> {as_rat(c)}")
        return "\n".join(out)

    # -- algebra -----------------------------------------------------------
    def _combine_annulus(self, other):
        if self.annulus == ENTIRE:
            return other.annulus
        if other.annulus == ENTIRE or other.annulus == self.annulus:
            return self.annulus
        raise ValueError(f"incompatible annuli {self.annulus}/{other.annulus}")

    def _aligned(self, other):
        d = _lcm(self.denom, other.denom)
        yd = _lcm(self.ydenom, other.ydenom)
        def lift(s):
            fq, fy = d // s.denom, yd // s.ydenom
            return {k * fq: {y * fy: c for y, c in row.items()}
                    for k, row in s.rows.items()}
        return d, yd, lift(self), lift(other)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WindowedSeries.one(INF).scale(other)
        d, yd, a, b = self._aligned(other)
        for k, row in b.items():
            dst = a.setdefault(k, {})
            for y, c in row.items():
                dst[y] = dst.get(y, 0) + c
        wins = [w for w in (self.ywindow, other.ywindow) if w is not None]
        si = None
        if self.support_index is not None and other.support_index is not None:
            si = max(self.support_index, other.support_index)
        return WindowedSeries(d, a, min(self.qcut, other.qcut),
                              ywindow=min(wins) if wins else None,
                              support_index=si,
                              annulus=self._combine_annulus(other), ydenom=yd)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        rows = {k: {y: c * v for y, v in row.items()} for k, row in self.rows.items()}
        return WindowedSeries(self.denom, rows, self.qcut, ywindow=self.ywindow,
                              support_index=self.support_index,
                              annulus=self.annulus, ydenom=self.ydenom)

    def qshift(self, e):
        e = as_rat(e)
        d = _lcm(self.denom, e.denominator)
        f = d // self.denom
        off = e.numerator * (d // e.denominator)
        rows = {k * f + off: dict(row) for k, row in self.rows.items()}
        return WindowedSeries(d, rows, self.qcut + e, ywindow=self.ywindow,
                              support_index=self.support_index,
                              annulus=self.annulus, ydenom=self.ydenom)

    def y_reflect(self):
        """y -> 1/y."""
        rows = {k: {-y: c for y, c in row.items()} for k, row in self.rows.items()}
        ann = {LOWER: UPPER, UPPER: LOWER}.get(self.annulus, ENTIRE)
        return WindowedSeries(self.denom, rows, self.qcut, ywindow=self.ywindow,
                              support_index=self.support_index, annulus=ann,
                              ydenom=self.ydenom)

    def truncate(self, qcut):
        return WindowedSeries(self.denom, self.rows, min(self.qcut, as_rat(qcut)),
                              ywindow=self.ywindow, support_index=self.support_index,
                              annulus=self.annulus, ydenom=self.ydenom)

    def __eq__(self, other):
        if not isinstance(other, WindowedSeries):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return id(self)

    def is_zero(self):
        return not self.rows

    def _plain_mul(self, other, qcut=None):
        """Convolution of two complete series (exact,全 support kept)."""
        d, yd, a, b = self._aligned(other)
        cut = min(self.qcut + other.low_q(), other.qcut + self.low_q())
        if qcut is not None:
            cut = min(cut, as_rat(qcut))
        kcut = cut * d
        out = {}
        bi = sorted(b.items())
        for ka, rowa in a.items():
            for kb, rowb in bi:
                k = ka + kb
                if k >= kcut:
                    break
                dst = out.setdefault(k, {})
                for ya, ca in rowa.items():
                    for yb, cb in rowb.items():
                        y = ya + yb
                        dst[y] = dst.get(y, 0) + ca * cb
        si = None
        if self.support_index is not None and other.support_index is not None:
            si = self.support_index + other.support_index
        return WindowedSeries(d, out, cut, support_index=si,
                              annulus=self._combine_annulus(other), ydenom=yd)

    def low_q(self) -> Fraction:
        if not self.rows:
            return Fraction(0)
        return Fraction(min(self.rows), self.denom)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, FracSeries):
            other = WindowedSeries.from_fracseries(other)
        if self.is_complete() and other.is_complete():
            return self._plain_mul(other)
        return windowed_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported on bi-series")
        out = WindowedSeries.one(INF)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def specialize_z0(self) -> FracSeries:
        """Set z = 0, i.e. sum each q-row over y.  Complete series only."""
        if not self.is_complete():
            raise UnboundedSupport("specialization needs a y-polynomial series")
        return FracSeries(self.denom, {k: sum(row.values()) for k, row in self.rows.items()},
                          self.qcut)

    def dz_at_z0(self) -> FracSeries:
        """(1/2 pi i) d/dz at z = 0: weight each coefficient by its y-power."""
        if not self.is_complete():
            raise UnboundedSupport("derivative needs a y-polynomial series")
        out = {}
        for k, row in self.rows.items():
            s = sum(Fraction(y, self.ydenom) * c for y, c in row.items())
            if s:
                out[k] = s
        return FracSeries(self.denom, out, self.qcut)

    def y_row(self, ypow: int) -> FracSeries:
        """The coefficient of y^ypow as a one-variable series."""
        if self.ywindow is not None and abs(ypow) > self.ywindow:
            raise WindowTooNarrow(f"row {ypow} outside window {self.ywindow}")
        y = ypow * self.ydenom
        out = {}
        for k, row in self.rows.items():
            c = row.get(y, 0)
            if c:
                out[k] = c
        return FracSeries(self.denom, out, self.qcut)


def windowed_mul(a: WindowedSeries, b: WindowedSeries, qcut=None, ywindow=None):
    """Exact product when at least one factor is y-polynomial per q-order.

    The windowed factor must be exact on the target window widened by the
    complete factor's maximal |y|-power; otherwise the tails it is missing
    could fold back into the window.
    """
    if a.is_complete() and b.is_complete():
        out = a._plain_mul(b, qcut=qcut)
        return out
    if b.is_complete():
        a, b = b, a
    if not a.is_complete():
        raise UnboundedSupport("product of two windowed series is not supported")
    # a complete, b windowed
    reach = a.max_abs_y()
    cut = min(a.qcut + b.low_q(), b.qcut + a.low_q())
    if qcut is not None:
        cut = min(cut, as_rat(qcut))
    target = ywindow if ywindow is not None else b.ywindow - reach
    if target < 0 or b.ywindow < target + reach:
        raise WindowTooNarrow(
            f"need window {target}+{reach} on windowed factor, have {b.ywindow}")
    d, yd, ra, rb = a._aligned(b)
    kcut = cut * d
    ytgt = target * yd
    out = {}
    rbs = sorted(rb.items())
    for ka, rowa in ra.items():
        for kb, rowb in rbs:
            k = ka + kb
            if k >= kcut:
                break
            dst = out.setdefault(k, {})
            for ya, ca in rowa.items():
                for yb, cb in rowb.items():
                    y = ya + yb
                    if abs(y) <= ytgt:
                        dst[y] = dst.get(y, 0) + ca * cb
    return WindowedSeries(d, out, cut, ywindow=target,
                          annulus=a._combine_annulus(b), ydenom=yd)


# ---------------------------------------------------------------------------
# theta functions

def jacobi_theta(i: int, qcut, z_scale: int = 1) -> WindowedSeries:
    """The four classical theta functions as exact products.

    The first one is returned with its constant unit -i divided out, so all
    four have rational coefficients; only even powers of theta_1 (or the
    ratio combinations used below) appear in this library, and for those the
    unit cancels.  theta_1 and theta_2 carry half-integer y-powers.
    ``z_scale`` evaluates at (tau, z_scale*z).
    """
    qcut = as_rat(qcut)
    rows = {0: {z_scale: 1, -z_scale: -1}} if i == 1 else (
        {0: {z_scale: 1, -z_scale: 1}} if i == 2 else {0: {0: 1}})
    pref = WindowedSeries(1, rows, INF, support_index=None, ydenom=2)
    out = pref
    sign_y = -1 if i in (1, 4) else 1
    half = i in (3, 4)
    n = 1
    while (Fraction(2 * n - 1, 2) if half else Fraction(n)) < qcut:
        qe = Fraction(2 * n - 1, 2) if half else Fraction(n)
        dd = qe.denominator
        k = qe.numerator
        fac = WindowedSeries(dd, {k: {z_scale: sign_y}, 0: {0: 1}}, INF, ydenom=1)
        fac2 = WindowedSeries(dd, {k: {-z_scale: sign_y}, 0: {0: 1}}, INF, ydenom=1)
        out = (out * fac) * fac2
        out = out.truncate(qcut)
        n += 1
    if i in (1, 2):
        out = out * WindowedSeries.from_fracseries(
            euler_product(qcut - Fraction(1, 8)).shift(Fraction(1, 8)))
    else:
        out = out * WindowedSeries.from_fracseries(euler_product(qcut))
    return out.truncate(qcut)


def index_theta(m: int, r: int, qcut) -> WindowedSeries:
    """theta^(m)_r(tau, z) = sum_n q^((2mn+r)^2/4m) y^(2mn+r)."""
    if m < 1:
        raise OutOfRange("index must be positive")
    qcut = as_rat(qcut)
    rows = {}
    n = 0
    while True:
        hit = False
        for s in (n, -n - 1):
            j = 2 * m * s + r
            e = Fraction(j * j, 4 * m)
            if e < qcut:
                hit = True
                rows.setdefault(j * j, {})[j] = 1
        if not hit:
            break
        n += 1
    return WindowedSeries(4 * m, rows, qcut, support_index=m)


def hat_theta(m: int, r: int, qcut) -> WindowedSeries:
    """theta^(m)_{-r} - theta^(m)_r (odd under y -> 1/y)."""
    return index_theta(m, -r, qcut) - index_theta(m, r, qcut)


# ---------------------------------------------------------------------------
# the weight-0 basis

_memo: dict = {}


def _theta_ratio_sq(i: int, qcut) -> WindowedSeries:
    """f_i^2 = (theta_i(tau,z)/theta_i(tau,0))^2 for i in {2,3,4}."""
    key = ("frat", i, qcut)
    if key not in _memo:
        th = jacobi_theta(i, qcut)
        num = th * th
        den = th.specialize_z0()
        _memo[key] = num * WindowedSeries.from_fracseries((den * den).invert())
    return _memo[key]


def _phi_seed(m: int, qcut) -> WindowedSeries:
    f2 = _theta_ratio_sq(2, qcut)
    f3 = _theta_ratio_sq(3, qcut)
    f4 = _theta_ratio_sq(4, qcut)
    if m == 2:
        return (f2 + f3 + f4).scale(4)
    if m == 3:
        return (f2 * f3 + f3 * f4 + f4 * f2).scale(2)
    if m == 4:
        return ((f2 * f3) * f4).scale(4)
    raise OutOfRange(m)


def gritsenko(m: int, n: int, qcut) -> WindowedSeries:
    """The weight 0, index m-1 basis form phi^(m)_n (2 <= m <= 25, 1 <= n < m).

    Built from the three theta-quotient generators by the standard recursion
    scheme; results are memoized per (m, n, qcut).
    """
    qcut = as_rat(qcut)
    if not (2 <= m <= 25 and 1 <= n <= m - 1):
        raise OutOfRange(f"no basis form phi^({m})_{n}")
    key = (m, n, qcut)
    if key in _memo:
        return _memo[key]
    g = lambda a, b: gcd(a, b)
    p1 = lambda mm: gritsenko(mm, 1, qcut)
    if n == 1:
        if m in (2, 3, 4):
            out = _phi_seed(m, qcut)
        elif m == 5:
            out = (p1(4) * p1(2) - p1(3) * p1(3)).scale(Fraction(1, 4))
        elif m == 7:
            out = p1(3) * p1(5) - p1(4) * p1(4)
        elif m == 9:
            out = p1(3) * p1(7) - p1(5) * p1(5)
        elif m == 13:
            out = p1(5) * p1(9) - (p1(7) * p1(7)).scale(2)
        else:
            c = g(12, m - 1)
            if c == 1:
                out = (p1(m - 4) * p1(5)).scale(g(12, m - 5)) \
                    + (p1(m - 2) * p1(3)).scale(g(12, m - 3)) \
                    - (p1(m - 3) * p1(4)).scale(2 * g(12, m - 4))
            elif c == 2:
                out = ((p1(m - 4) * p1(5)).scale(g(12, m - 5))
                       + (p1(m - 2) * p1(3)).scale(g(12, m - 3))
                       - (p1(m - 3) * p1(4)).scale(2 * g(12, m - 4))).scale(Fraction(1, 2))
            elif c == 3:
                out = (p1(m - 3) * p1(4)).scale(Fraction(2 * g(12, m - 4), 3)) \
                    + (p1(m - 6) * p1(7)).scale(Fraction(g(12, m - 7), 3)) \
                    - (p1(m - 4) * p1(5)).scale(g(12, m - 5))
            elif c == 4:
                out = ((p1(m - 12) * p1(13)).scale(g(12, m - 13))
                       + (p1(m - 4) * p1(5)).scale(g(12, m - 5))
                       - (p1(m - 8) * p1(9)).scale(g(12, m - 9))).scale(Fraction(1, 4))
            elif c == 6:
                out = (p1(m - 3) * p1(4)).scale(Fraction(g(12, m - 4), 3)) \
                    + (p1(m - 6) * p1(7)).scale(Fraction(g(12, m - 7), 6)) \
                    - (p1(m - 4) * p1(5)).scale(Fraction(g(12, m - 5), 2))
            else:  # c == 12, m > 24
                out = (p1(m - 3) * p1(4)).scale(Fraction(g(12, m - 4), 6)) \
                    - (p1(m - 4) * p1(5)).scale(Fraction(g(12, m - 5), 4)) \
                    + (p1(m - 6) * p1(7)).scale(Fraction(g(12, m - 7), 12))
    elif n == 2:
        if m == 3:
            out = p1(2) * p1(2) - p1(3).scale(24)
        elif m == 4:
            out = p1(2) * p1(3) - p1(4).scale(18)
        elif m == 5:
            out = p1(2) * p1(4) - p1(5).scale(16)
        else:
            out = (p1(m - 3) * p1(4)).scale(g(12, m - 4)) \
                - (p1(m - 4) * p1(5)).scale(g(12, m - 5)) \
                - p1(m).scale(g(12, m - 1))
    elif n == m - 1:
        out = p1(2) ** (m - 1)
    elif n == m - 2:
        out = (p1(2) ** (m - 3)) * gritsenko(3, 1, qcut)
    else:  # 3 <= n <= m - 3
        out = gritsenko(m - 3, n - 1, qcut) * gritsenko(4, 1, qcut)
    out = out.truncate(qcut)
    out.support_index = m - 1
    _memo[key] = out
    return out


def umbral_Z(ell: int, qcut) -> WindowedSeries:
    """The distinguished weight-0 form Z^(l) = 2 phi^(l)_1, l in {2,3,4,5,7,13}."""
    if ell not in (2, 3, 4, 5, 7, 13):
        raise OutOfRange(f"lambency {ell}")
    return gritsenko(ell, 1, qcut).scale(2)


def zeta_form(qcut) -> WindowedSeries:
    """The weight 0 index 6 generator theta_1^12 / eta^12 of the cusp ideal."""
    qcut = as_rat(qcut)
    key = ("zeta", qcut)
    if key not in _memo:
        t1 = jacobi_theta(1, qcut + Fraction(3, 2))
        t2 = t1 * t1
        t4 = t2 * t2
        t12 = (t4 * t4) * t4
        e12 = (eta(qcut + Fraction(3, 2)) ** 12).invert()
        out = (t12 * WindowedSeries.from_fracseries(e12)).truncate(qcut)
        out.support_index = 6
        _memo[key] = out
    return _memo[key]


# ---------------------------------------------------------------------------
# meromorphic blocks

def _pole_row(ywindow: int, annulus: str) -> WindowedSeries:
    """(y+1)/(y-1) expanded in the chosen annulus, as a q^0 row."""
    if annulus == LOWER:   # = -(1+y) sum_{j>=0} y^j
        row = {0: -1}
        for j in range(1, ywindow + 1):
            row[j] = -2
    elif annulus == UPPER:  # = (1+1/y) sum_{j>=0} y^-j
        row = {0: 1}
        for j in range(1, ywindow + 1):
            row[-j] = 2
    else:
        raise ValueError(annulus)
    return WindowedSeries(1, {0: row}, INF, ywindow=ywindow, annulus=annulus)


def _psi_core(qcut) -> WindowedSeries:
    """prod (1-q^n)^2 (1-y^2 q^n)(1-y^-2 q^n) / [(1-y q^n)(1-y^-1 q^n)]^2."""
    key = ("psicore", qcut)
    if key in _memo:
        return _memo[key]
    qcut = as_rat(qcut)
    N = int(qcut) + 1
    A = WindowedSeries.one(qcut)
    for n in range(1, N):
        A = A * WindowedSeries(1, {0: {0: 1}, n: {2: -1}}, INF)
        A = A * WindowedSeries(1, {0: {0: 1}, n: {-2: -1}}, INF)
        A = A.truncate(qcut)
    A = A * WindowedSeries.from_fracseries(euler_product(qcut) ** 2)
    A = A.truncate(qcut)
    C = WindowedSeries.one(qcut)
    for n in range(1, N):
        row = {}
        i = 0
        while n * i < qcut:
            row.setdefault(n * i, {})[i] = 1
            i += 1
        C = (C * WindowedSeries(1, row, qcut)).truncate(qcut)
    D = C.y_reflect()
    B = C * D
    B = (B * B).truncate(qcut)
    out = (A * B).truncate(qcut)
    _memo[key] = out
    return out


def psi_one_one(qcut, ywindow: int, annulus: str = LOWER) -> WindowedSeries:
    """The meromorphic weight 1 index 1 block, expanded in the given annulus.

    Product form: (y+1)/(y-1) * prod_{n>=1} (1-q^n)^2 (1-y^2 q^n)(1-y^-2 q^n)
    / [(1-y q^n)^2 (1-y^-1 q^n)^2]; all geometric factors expand with positive
    exponents inside either annulus, only the pole factor depends on it.
    """
    core = _psi_core(qcut)
    reach = int(core.max_abs_y())
    pole = _pole_row(ywindow + reach, annulus)
    return windowed_mul(core, pole, qcut=qcut, ywindow=ywindow)


def appell_mu(m: int, j2: int, qcut, ywindow: int, annulus: str = LOWER) -> WindowedSeries:
    """The averaged pole block mu^(m)_j with 2j = j2 in {0, ..., m-1}.

    Each k-summand q^(m k^2) y^(2mk) (sum_t (y q^k)^t) / (1 - y q^k) is
    expanded per the annulus: the k = 0 pole factor as a one-sided geometric
    series in y, the k != 0 factors in powers of (y q^|k|)^(+-1).
    """
    if not 0 <= j2 <= m - 1:
        raise OutOfRange(f"2j = {j2} outside 0..{m - 1}")
    qcut = as_rat(qcut)
    sign = -1 if j2 % 2 == 0 else 1  # (-1)^(1+2j)
    rows = {}

    def put(qe, yp, c):
        if qe < qcut and abs(yp) <= ywindow:
            dst = rows.setdefault(qe, {})
            dst[yp] = dst.get(yp, 0) + c

    k = 0
    while m * k * k - (j2 + 1) * abs(k) < qcut:
        base_q = m * k * k
        base_y = 2 * m * k
        for t in range(-j2, j2 + 2):
            cq, cy = base_q + k * t, base_y + t
            if k == 0:
                if annulus == LOWER:
                    for i in range(0, ywindow + abs(cy) + 1):
                        put(cq, cy + i, sign)
                else:
                    for i in range(1, ywindow + abs(cy) + 2):
                        put(cq, cy - i, -sign)
            elif k > 0:
                i = 0
                while cq + k * i < qcut:
                    put(cq + k * i, cy + i, sign)
                    i += 1
            else:
                i = 1
                while cq - k * i < qcut:
                    put(cq - k * i, cy - i, -sign)
                    i += 1
        if k > 0:
            k = -k
        else:
            k = -k + 1
    return WindowedSeries(1, rows, qcut, ywindow=ywindow, annulus=annulus)


# ---------------------------------------------------------------------------
# extraction of the mock modular vector

@dataclass
class HVector:
    """The (l-1)-vector of theta-coefficients of a weight-0 form's finite part."""

    lambency: int
    components: list  # FracSeries, index r-1 for r = 1..l-1

    def component(self, r: int) -> FracSeries:
        return self.components[r - 1]

    def __iter__(self):
        return iter(self.components)


def extract_from_form(phi: WindowedSeries, m: int, qcut, annulus: str = LOWER) -> HVector:
    """Theta-coefficients H_r of the finite part of (Psi_{1,1} * phi).

    ``phi`` is a weak Jacobi form of weight 0 and index m-1 (complete);
    H_r = -q^(-r^2/4m) [y^r](Psi*phi - chi*mu^(m)_0), both blocks expanded in
    the same annulus.
    """
    qcut = as_rat(qcut)
    chi = phi.specialize_z0().coefficient(0)
    reach = int(phi.max_abs_y())
    psi = psi_one_one(qcut, (m - 1) + reach + 1, annulus)
    mu0 = appell_mu(m, 0, qcut, m + 1, annulus)
    comps = []
    d, yd, rp, rf = psi._aligned(phi)
    kcut = qcut * d
    for r in range(1, m):
        acc = {}
        for kf, rowf in rf.items():
            for yf, cf in rowf.items():
                want = r * yd - yf
                for kp, rowp in rp.items():
                    k = kp + kf
                    if k >= kcut:
                        continue
                    c = rowp.get(want)
                    if c is not None:
                        acc[k] = acc.get(k, 0) + c * cf
        mrow = mu0.y_row(r)
        row = FracSeries(d, acc, qcut) - mrow.scale(chi)
        comps.append((-row).shift(Fraction(-r * r, 4 * m)))
    return HVector(m, comps)


def extract_H(ell: int, qcut, annulus: str = LOWER) -> HVector:
    """The mock modular vector attached to Z^(l) (identity-class series)."""
    if ell not in (2, 3, 4, 5, 7, 13):
        raise OutOfRange(f"lambency {ell}")
    return extract_from_form(umbral_Z(ell, qcut), ell, qcut, annulus)


def verify_extremal(ell: int, qcut=6) -> dict:
    """Check the distinguished polar structure of the extracted vector."""
    H = extract_H(ell, qcut)
    z0 = umbral_Z(ell, qcut).specialize_z0()
    report = {
        "lambency": ell,
        "chi": z0.coefficient(0),
        "chi_expected": Fraction(24, ell - 1),
        "constant_Z": all(c == 0 for e, c in z0.items() if e != 0),
        "polar_ok": True,
        "failures": [],
    }
    for r in range(1, ell):
        h = H.component(r)
        for e, c in h.items():
            if e > 0:
                break
            if r == 1 and e == Fraction(-1, 4 * ell) and c == -2:
                continue
            report["polar_ok"] = False
            report["failures"].append((r, e, c))
    report["ok"] = (report["polar_ok"] and report["constant_Z"]
                    and report["chi"] == report["chi_expected"])
    return report


def leading_row_relation(phi: WindowedSeries, m: int) -> bool:
    """For a form with q^0 row a + b(y + 1/y): the relation (m-1)(a+2b) = 12b."""
    a = phi.coefficient(0, 0)
    b = phi.coefficient(0, 1)
    return (m - 1) * (a + 2 * b) == 12 * b


def extremal_space_dim(m: int, nbound: int | None = None, qcut=None) -> int:
    """Dimension of the space of extremal candidates at index m-1 (m in {9, 25}).

    Sets up the span of phi^(m)_1 and zeta^i phi^(m-6i)_j, imposes vanishing
    of every massive-side coefficient q^n y^r with r^2 - 4mn >= 0 (and of all
    polar terms other than the r = 1 head), and returns the nullity.
    """
    if m not in (9, 25):
        raise OutOfRange("supported candidates: m in {9, 25}")
    if nbound is None:
        nbound = max(4, (m - 1) ** 2 // (4 * m))
    if qcut is None:
        qcut = nbound + 2
    basis = [gritsenko(m, 1, qcut)]
    zpow = WindowedSeries.one(INF)
    for i in range(1, (m - 1) // 6 + 1):
        zpow = (zpow * zeta_form(qcut)).truncate(qcut)
        for j in range(1, m - 6 * i):
            basis.append(zpow * gritsenko(m - 6 * i, j, qcut))
    slots = [(r, n) for r in range(1, m) for n in range(0, nbound + 1)
             if r * r - 4 * m * n >= 0 and (r, n) != (1, 0)]
    matrix = []
    for phi in basis:
        H = extract_from_form(phi, m, qcut)
        matrix.append([H.component(r).coefficient(Fraction(4 * m * n - r * r, 4 * m))
                       for r, n in slots])
    # rank of the (basis x slots) matrix by exact Gaussian elimination
    nvars = len(basis)
    rowspace = [list(row) for row in matrix]
    r_ix = 0
    for c in range(len(slots)):
        piv = None
        for rr in range(r_ix, nvars):
            if rowspace[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        rowspace[r_ix], rowspace[piv] = rowspace[piv], rowspace[r_ix]
        pv = rowspace[r_ix][c]
        for rr in range(nvars):
            if rr != r_ix and rowspace[rr][c] != 0:
                f = Fraction(rowspace[rr][c], 1) / pv
                rowspace[rr] = [x - f * y for x, y in zip(rowspace[rr], rowspace[r_ix])]
        r_ix += 1
        if r_ix == nvars:
            break
    return nvars - r_ix


def verify_n4_identity(ell: int, qcut=10, ywindow=12) -> dict:
    """Residual of Psi*Z - chi*mu_0 - sum_r H_r theta-hat_r inside a box."""
    qcut = as_rat(qcut)
    Z = umbral_Z(ell, qcut)
    H = extract_H(ell, qcut)
    chi = Fraction(24, ell - 1)
    psi = psi_one_one(qcut, ywindow + int(Z.max_abs_y()) + 1, LOWER)
    total = windowed_mul(Z, psi, qcut=qcut, ywindow=ywindow)
    total = total - appell_mu(ell, 0, qcut, ywindow, LOWER).scale(chi)
    for r in range(1, ell):
        piece = hat_theta(ell, r, qcut) * WindowedSeries.from_fracseries(H.component(r))
        total = total - _clip(piece, ywindow, total.annulus)
    bad = [(qe, yp, c) for qe, yp, c in total.items()]
    return {"lambency": ell, "residual_terms": bad, "ok": not bad}


def _clip(s: WindowedSeries, ywindow: int, annulus: str) -> WindowedSeries:
    rows = {}
    for k, row in s.rows.items():
        r = {y: c for y, c in row.items() if abs(Fraction(y, s.ydenom)) <= ywindow}
        if r:
            rows[k] = r
    return WindowedSeries(s.denom, rows, s.qcut, ywindow=ywindow, annulus=annulus,
                          ydenom=s.ydenom)
