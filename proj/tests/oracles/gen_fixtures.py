#!/usr/bin/env python3
"""Regenerates data/fixtures.json.

Every quoted coefficient list is typed in from its published closed form or
printed expansion and then cross-checked here against an independent
Fraction-based expansion of the defining series. Derived lists come straight
from that expansion. Run from the repository root:

    python3 tests/oracles/gen_fixtures.py > data/fixtures.json
"""

import json
import sys
from fractions import Fraction as Fr
from math import comb, factorial

N = 17  # coefficients c_0..c_16


def zero(n=N):
    return [Fr(0)] * n


def mul(a, b):
    n = min(len(a), len(b))
    r = [Fr(0)] * n
    for i in range(n):
        if a[i]:
            for j in range(n - i):
                r[i + j] += a[i] * b[j]
    return r


def add(a, b):
    n = min(len(a), len(b))
    return [a[i] + b[i] for i in range(n)]


def sc(c, a):
    return [Fr(c) * x for x in a]


def recip(a):
    n = len(a)
    r = [Fr(0)] * n
    r[0] = 1 / Fr(a[0])
    for k in range(1, n):
        r[k] = -sum(a[j] * r[k - j] for j in range(1, k + 1)) / a[0]
    return r


def comp(o, i):
    n = min(len(o), len(i))
    r = [Fr(0)] * n
    for c in reversed(o[:n]):
        r = mul(r, i[:n])
        r[0] += c
    return r


def deriv(a):
    return [k * a[k] for k in range(1, len(a))]


def integ(a):
    return [Fr(0)] + [a[k] / (k + 1) for k in range(len(a))]


def log1(a):
    assert a[0] == 1
    return integ(mul(deriv(a), recip(a)))[: len(a)]


def exp1(a):
    assert a[0] == 0
    n = len(a)
    r = [Fr(0)] * n
    r[0] = Fr(1)
    for k in range(1, n):
        r[k] = sum(j * a[j] * r[k - j] for j in range(1, k + 1)) / k
    return r


def powr(a, q):
    return exp1(sc(q, log1(a)))


def inv(s):
    # naive order-by-order solve, independent of the library's power table
    n = len(s)
    t = [Fr(0)] * n
    t[1] = 1 / s[1]
    for k in range(2, n):
        t[k] = -comp(s, t)[k] / s[1]
    return t


def poly(coeffs, n=N):
    v = [Fr(c) for c in coeffs] + [Fr(0)] * n
    return v[:n]


def log_one_plus(c, n=N):
    """log(1 + c X)."""
    c = Fr(c)
    return [Fr(0)] + [Fr((-1) ** (k - 1)) * c**k / k for k in range(1, n)]


def weight(f):
    return [k * f[k] for k in range(len(f))]


def phi_from_x(x):
    # phi = X / X'
    return [Fr(0)] + mul(x[1:], recip(deriv(x)))


def xi_of(f, x):
    return comp(f, x)


def ln_plain(x):
    # log(X(p)/p)
    return log1(x[1:])


def h0_plain(f, x):
    xi = xi_of(f, x)
    lg = [Fr(0)] + ln_plain(x)
    return [xi[k] - lg[k] for k in range(min(len(xi), len(lg)))]


def catalan(n):
    return Fr(comb(2 * n, n), n + 1)


def bernoulli(nmax):
    b = [Fr(1)]
    for m in range(1, nmax + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / Fr(m + 1))
    return b


FIXTURES = []


def check(label, quoted, computed, skip=()):
    n = len(quoted)
    q = [Fr(x) for x in quoted]
    c = list(computed[:n])
    for k in skip:
        q[k] = c[k] = 0
    if q != c:
        sys.stderr.write(f"MISMATCH {label}\n quoted  {[str(x) for x in quoted]}\n computed {[str(x) for x in computed[:n]]}\n")
        raise SystemExit(1)


def emit(entry, params, quantity, coeffs, provenance, oeis=None, note="", scale=None, multiplier=None,
         compare="exact"):
    rec = {
        "entry": entry,
        "params": {k: str(Fr(v)) for k, v in params.items()},
        "quantity": quantity,
        "coeffs": [str(Fr(c)) for c in coeffs],
        "provenance": provenance,
    }
    if oeis:
        rec["oeis"] = oeis
    if scale is not None:
        rec["scale"] = str(Fr(scale))
    if multiplier is not None:
        rec["multiplier"] = [str(Fr(c)) for c in multiplier]
    if compare != "exact":
        rec["compare"] = compare
    if note:
        rec["note"] = note
    FIXTURES.append(rec)


def quoted(entry, params, quantity, coeffs, computed, **kw):
    skip = (1,) if kw.get("compare") == "mod_linear" else ()
    check(f"{entry}/{quantity}", coeffs, computed, skip)
    emit(entry, params, quantity, coeffs, "quoted", **kw)


def derived(entry, params, quantity, computed, length, **kw):
    emit(entry, params, quantity, computed[:length], "derived", **kw)


# boltzmann-gibbs
F = poly([0, 1])
X = inv(weight(F))
quoted("boltzmann-gibbs", {}, "z", [Fr(1, factorial(k)) for k in range(17)], exp1(F))
quoted("boltzmann-gibbs", {}, "phi", [0, 1, 0, 0, 0], phi_from_x(X))
quoted("boltzmann-gibbs", {}, "xi", [0, 1, 0, 0, 0], xi_of(F, X))
quoted("boltzmann-gibbs", {}, "entropy.plain", [0, 1, 0, 0], F)

# fermi-dirac
F = log_one_plus(1)
X = inv(weight(F))
quoted("fermi-dirac", {}, "z", [1, 1] + [0] * 15, exp1(F))
quoted("fermi-dirac", {}, "w", [0] + [(-1) ** (k - 1) for k in range(1, 17)], weight(F))
quoted("fermi-dirac", {}, "X_of_w", [0] + [1] * 16, X)
quoted("fermi-dirac", {}, "phi", [0, 1, -1, 0, 0, 0, 0], phi_from_x(X))
quoted("fermi-dirac", {}, "xi", [0] + [Fr(1, k) for k in range(1, 16)], xi_of(F, X))
quoted("fermi-dirac", {}, "ln_phi.plain", [0] + [Fr(1, k) for k in range(1, 15)], ln_plain(X))
# -(1-p) log(1-p) = p - sum_{n>=2} p^n / (n(n-1))
quoted("fermi-dirac", {}, "phi_entropy.plain", [0, 1] + [Fr(-1, k * (k - 1)) for k in range(2, 15)],
       h0_plain(F, X))

# bose-einstein
F = sc(-1, log_one_plus(-1))
X = inv(weight(F))
quoted("bose-einstein", {}, "F", [0] + [Fr(1, k) for k in range(1, 17)], F)
quoted("bose-einstein", {}, "z", [1] * 17, exp1(F))
quoted("bose-einstein", {}, "w", [0] + [1] * 16, weight(F))
quoted("bose-einstein", {}, "X_of_w", [0] + [(-1) ** (k - 1) for k in range(1, 17)], X)
quoted("bose-einstein", {}, "phi", [0, 1, 1, 0, 0, 0], phi_from_x(X))
quoted("bose-einstein", {}, "xi", [0] + [Fr((-1) ** (k - 1), k) for k in range(1, 16)], xi_of(F, X))
quoted("bose-einstein", {}, "ln_phi.plain", [0] + [Fr((-1) ** k, k) for k in range(1, 15)], ln_plain(X))
# (1+p) log(1+p) = p + sum_{n>=2} (-1)^n p^n / (n(n-1))
quoted("bose-einstein", {}, "phi_entropy.plain", [0, 1] + [Fr((-1) ** k, k * (k - 1)) for k in range(2, 15)],
       h0_plain(F, X), note="closed form is -p log p + (1+p) log(1+p) - 2p log 2; the printed constant -2 log 2 "
                            "lacks the factor p")

# acharya-swamy
eps = Fr(1, 2)
P = {"eps": eps}
F = sc(1 / eps, log_one_plus(eps))
X = inv(weight(F))
quoted("acharya-swamy", P, "F", [0] + [Fr((-1) ** (k - 1), k) * eps ** (k - 1) for k in range(1, 17)], F)
quoted("acharya-swamy", P, "w", [0] + [(-eps) ** (k - 1) for k in range(1, 17)], weight(F))
quoted("acharya-swamy", P, "X_of_w", [0] + [eps ** (k - 1) for k in range(1, 17)], X)
quoted("acharya-swamy", P, "phi", [0, 1, -eps, 0, 0, 0], phi_from_x(X))
quoted("acharya-swamy", P, "xi", [0] + [eps ** (k - 1) / k for k in range(1, 16)], xi_of(F, X))
quoted("acharya-swamy", P, "ln_phi.plain", [0] + [eps**k / k for k in range(1, 15)], ln_plain(X))
# -(1/eps)(1 - eps p) log(1 - eps p), expanded
as_h = sc(-1 / eps, mul(poly([1, -eps]), sc(-1, [Fr(0)] + [eps**k / k for k in range(1, N)])))
quoted("acharya-swamy", P, "phi_entropy.plain", as_h[:15], h0_plain(F, X), compare="mod_linear")

# gentile
F = log1(poly([1, 1, 1]))
quoted("gentile", {"p": 2}, "z", [1, 1, 1] + [0] * 14, exp1(F))
quoted("gentile", {"p": 2}, "w", [0] + [1 - (3 if k % 3 == 0 else 0) for k in range(1, 17)], weight(F))
F = log1(poly([1, 1]))
quoted("gentile", {"p": 1}, "w", [0] + [(-1) ** (k - 1) for k in range(1, 17)], weight(F))

# lah
F = [Fr(0)] + [Fr(1)] * (N - 1)
X = inv(weight(F))
lah = [[0, 1], [0, 2, 1], [0, 6, 6, 1], [0, 24, 36, 12, 1]]
for n, row in enumerate(lah, start=1):
    emit("lah", {}, f"gamma_{n}", row, "quoted", oeis="A008297" if n == 4 else None)
quoted("lah", {}, "X_of_w", [0, 1, -2, 5, -14, 42, -132, 429, -1430], X, oeis="A000108")
quoted("lah", {}, "phi", [0, 1, 2, -2, 4, -10, 28, -84], phi_from_x(X), oeis="A002420")
# xi = (sqrt(1+4w) - 1)/2
quoted("lah", {}, "xi", sc(Fr(1, 2), add(powr(poly([1, 4]), Fr(1, 2)), poly([-1])))[:15], xi_of(F, X))
derived("lah", {}, "phi_entropy.plain", h0_plain(F, X), 14,
        note="the printed closed form flips the sign of the algebraic part; this is F(X(p)) - p log X(p)")

# exponential
F = [Fr(0)] + [Fr(1, factorial(k)) for k in range(1, N)]
X = inv(weight(F))
quoted("exponential", {}, "w", [0] + [Fr(1, factorial(k - 1)) for k in range(1, 17)], weight(F))
cayley = [0] + [Fr((-1) ** (n - 1) * n ** (n - 1), factorial(n)) for n in range(1, 17)]
quoted("exponential", {}, "X_of_w", cayley, X)
quoted("exponential", {}, "phi", [0, 1] + cayley[1:15], phi_from_x(X))
quoted("exponential", {}, "xi", [0] + [Fr((-1) ** (n - 1) * (n - 1) ** (n - 1), factorial(n)) for n in range(1, 16)],
       xi_of(F, X))
quoted("exponential", {}, "phi_entropy.plain",
       [0, 0] + [Fr((-1) ** n * (n - 1) ** (n - 2), factorial(n)) for n in range(2, 15)], h0_plain(F, X),
       compare="mod_linear")
stirling_rows = [[0, 1], [0, 1, 1], [0, 1, 3, 1], [0, 1, 7, 6, 1]]
for n, row in enumerate(stirling_rows, start=1):
    emit("exponential", {}, f"gamma_{n}", row, "quoted", oeis="A008277" if n == 4 else None)

# abel
a = Fr(1)
P = {"a": a}
F = [Fr(0)] + [Fr((-a * n) ** (n - 1), factorial(n)) for n in range(1, N)]
X = inv(weight(F))
quoted("abel", P, "w", [0] + [Fr((-a * n) ** (n - 1), factorial(n - 1)) for n in range(1, 17)], weight(F))
# X = w/(1 - a w) exp(1/(1 - a w) - 1)
g = recip(poly([1, -a]))
abel_x = mul(mul(poly([0, 1]), g), exp1(add(g, poly([-1]))))
quoted("abel", P, "X_of_w", abel_x[:15], X)
quoted("abel", P, "phi", [0, 1, -2 * a, a * a, 0, 0, 0], phi_from_x(X))
quoted("abel", P, "xi", [0] + [a ** (n - 1) for n in range(1, 16)], xi_of(F, X))
# log(p/(1-ap)) + 1/(1-ap), constant dropped
quoted("abel", P, "ln_phi.plain", [0] + [a**n / n + a**n for n in range(1, 15)], ln_plain(X))
quoted("abel", P, "phi_entropy.plain", [0, 0] + [-a ** (n - 1) / (n - 1) for n in range(2, 15)], h0_plain(F, X),
       compare="mod_linear")

# gould and its specializations
def gould_f(a, b, n=N):
    out = [Fr(0)]
    for k in range(1, n):
        prod = Fr(1)
        for j in range(1, k):
            prod *= a * k + j * b
        out.append(Fr((-1) ** (k - 1)) * prod / factorial(k))
    return out


def gould_x(a, b, n=N):
    num = mul(poly([0, 1], n), powr(poly([1, -a], n), a / b))
    return mul(num, recip(powr(poly([1, -(a + b)], n), (a + b) / b)))


a, b = Fr(2), Fr(1)
P = {"a": a, "b": b}
F = gould_f(a, b)
X = inv(weight(F))
quoted("gould", P, "X_of_w", gould_x(a, b)[:15], X)
quoted("gould", P, "phi", [0, 1, -(2 * a + b), a * (a + b), 0, 0], phi_from_x(X))
quoted("gould", P, "xi", [0] + [((a + b) ** n - a**n) / (b * n) for n in range(1, 16)], xi_of(F, X))
# (1/b)[(1-ap)log(1-ap) - (1-(a+b)p)log(1-(a+b)p)]
def one_minus_log(c):
    return mul(poly([1, -c]), log_one_plus(-c))


gould_h = sc(1 / b, add(one_minus_log(a), sc(-1, one_minus_log(a + b))))
quoted("gould", P, "phi_entropy.plain", gould_h[:15], h0_plain(F, X), compare="mod_linear")


def exp_scaled(c, n=N):
    return [c**k / factorial(k) for k in range(n)]


eps = Fr(1, 2)
f = sc(1 / eps, add(exp_scaled(eps), poly([-1])))
quoted("gould-acharya-swamy", {"eps": eps}, "f_inverse", f[:15], inv(gould_f(Fr(0), eps)))
a = Fr(1)
f = mul(poly([0, 1]), exp_scaled(a))
quoted("gould-lambert", {"a": a}, "f_inverse", f[:15], inv([Fr(0)] + [Fr((-a * n) ** (n - 1), factorial(n))
                                                                     for n in range(1, N)]))
gg = Fr(2)
f = add(exp_scaled(gg), sc(-1, exp_scaled(gg - 1)))
quoted("gould-framed-vertex", {"g": gg}, "f_inverse", f[:15], inv(gould_f(gg - 1, Fr(1))))
a = Fr(1)
f = sc(-1 / (2 * a), add(exp_scaled(-a), sc(-1, exp_scaled(a))))
quoted("gould-catalan", {"a": a}, "f_inverse", f[:15], inv(gould_f(a, -2 * a)))

# mittag-leffler, scaled by X/2
F = add(log_one_plus(Fr(1, 2)), sc(-1, log_one_plus(Fr(-1, 2))))
X = inv(weight(F))
ml_x = zero(14)
for n in range(1, 8):
    if 2 * n - 1 < 14:
        ml_x[2 * n - 1] = 2 * Fr((-1) ** (n - 1) * factorial(2 * n - 2), factorial(n) * factorial(n - 1)) / 2 ** (2 * n - 1)
quoted("mittag-leffler", {}, "X_of_w", ml_x, X, oeis="A000108")
ml_phi = zero(14)
ml_phi[1] = Fr(1)
for n in range(1, 7):
    ml_phi[2 * n + 1] = 2 * Fr((-1) ** (n - 1) * factorial(2 * n - 2), factorial(n) * factorial(n - 1)) / 2 ** (2 * n)
quoted("mittag-leffler", {}, "phi", ml_phi, phi_from_x(X))
ml_xi = zero(14)
for n in range(1, 8):
    if 2 * n - 1 < 14:
        ml_xi[2 * n - 1] = 2 * Fr((-1) ** (n - 1) * factorial(2 * n - 2), (2 * n - 1) * factorial(n - 1) ** 2) / 2 ** (2 * n - 1)
quoted("mittag-leffler", {}, "xi", ml_xi, xi_of(F, X))
ml_ln = zero(14)
for n in range(1, 7):
    ml_ln[2 * n] = Fr((-1) ** n, 2 ** (2 * n)) * Fr(comb(2 * n, n), 2 * n)
quoted("mittag-leffler", {}, "ln_phi.plain", ml_ln, ln_plain(X), oeis="A000984")
ml_h = zero(14)
for n in range(2, 8):
    if 2 * n - 1 < 14:
        ml_h[2 * n - 1] = Fr((-1) ** n, 2 ** (2 * n - 2)) * Fr(factorial(2 * n - 2),
                                                              (2 * n - 1) * (2 * n - 2) * factorial(n - 1) ** 2)
quoted("mittag-leffler", {}, "phi_entropy.plain", ml_h, h0_plain(F, X), compare="mod_linear",
       note="the printed sum has sign (-1)^(n-1) and power u^(2n-2); the expansion of the printed closed form has "
            "sign (-1)^n and power p^(2n-1)")

# bessel
F = add(poly([1]), sc(-1, powr(poly([1, -2]), Fr(1, 2))))
X = inv(weight(F))
# w (sqrt(1+w^2) - w)
quoted("bessel", {}, "X_of_w", mul(poly([0, 1]), add(powr(poly([1, 0, 1]), Fr(1, 2)), poly([0, -1])))[:15], X)
sq = powr(poly([1, 0, 1]), Fr(1, 2))
quoted("bessel", {}, "phi", mul(mul(poly([0, 1]), sq), add(sq, poly([0, 1])))[:15], phi_from_x(X))
quoted("bessel", {}, "xi", add(poly([1, 1]), sc(-1, sq))[:15], xi_of(F, X))
b_ln = zero(14)
for n in range(0, 7):
    b_ln[2 * n + 1] = -Fr((-1) ** n, 2 ** (2 * n)) * Fr(comb(2 * n, n), 2 * n + 1)
quoted("bessel", {}, "ln_phi.plain", b_ln, ln_plain(X))
b_h = zero(14)
for n in range(0, 6):
    b_h[2 * n + 2] = Fr((-1) ** n, 2 ** (2 * n)) * Fr(comb(2 * n, n), (2 * n + 1) * (2 * n + 2))
quoted("bessel", {}, "phi_entropy.plain", b_h, h0_plain(F, X), compare="mod_linear")

# mott
root = powr(poly([1, 0, -4], N + 1), Fr(1, 2))
F = sc(Fr(1, 2), add(poly([1], N + 1), sc(-1, root))[1:])
X = inv(weight(F))
mott_w = zero(16)
for n in range(1, 9):
    if 2 * n - 1 < 16:
        mott_w[2 * n - 1] = Fr(comb(2 * n - 1, n))
quoted("mott", {}, "w", mott_w, weight(F), oeis="A001700")
quoted("mott", {}, "X_of_w", [0, 1, 0, -3, 0, 17, 0, -119, 0, 929, 0, -7755], X)
quoted("mott", {}, "phi", [0, 1, 0, 6, 0, -14, 0, 78, 0, -542, 0, 4214], phi_from_x(X))
phi_in_x = [k * c for k, c in enumerate(weight(F))]
quoted("mott", {}, "phi_in_X", [0, 1, 0, 9, 0, 50, 0, 245, 0, 1134, 0, 5082], phi_in_x, oeis="A001818",
       note="the printed line 1 + 9X^2 + ... is phi/X")
mott_f = zero(16)
for n in range(0, 8):
    mott_f[2 * n + 1] = catalan(n)
quoted("mott", {}, "F", mott_f, F, oeis="A000108",
       note="xi in X equals F; the printed exponent X^(n+1) should read X^(2n+1)")
xi = xi_of(F, X)
quoted("mott", {}, "Y", [1, 0, -2, 0, 10, 0, -66, 0, 498, 0, -4066, 0, 34970], xi[1:], oeis="A027307",
       note="Y = sqrt(1 - 4 X(w)^2) = xi(w)/w")
derived("mott", {}, "phi_entropy.plain", h0_plain(F, X), 14)

# dilogarithm
F = [Fr(0)] + [Fr(1, k * k) for k in range(1, N)]
X = inv(weight(F))
dilog_rows = [[0, 1], [0, Fr(1, 2), 1], [0, Fr(2, 3), Fr(3, 2), 1], [0, Fr(3, 2), Fr(41, 12), 3, 1]]
for n, row in enumerate(dilog_rows, start=1):
    emit("dilogarithm", {}, f"gamma_{n}", row, "quoted")
quoted("dilogarithm", {}, "X_of_w", sc(-1, add(exp_scaled(Fr(-1)), poly([-1])))[:16], X)
quoted("dilogarithm", {}, "phi", add(exp_scaled(Fr(1)), poly([-1]))[:16], phi_from_x(X))
B = bernoulli(16)
quoted("dilogarithm", {}, "xi", [0] + [B[n] / factorial(n + 1) for n in range(0, 15)], xi_of(F, X))
quoted("dilogarithm", {}, "ln_phi.plain", [0] + [B[n] / factorial(n) / n for n in range(1, 15)], ln_plain(X))
quoted("dilogarithm", {}, "phi_entropy.plain",
       [0, 0] + [-B[n] / factorial(n) / (n * (n + 1)) for n in range(1, 14)], h0_plain(F, X), compare="mod_linear")

# averaged acharya-swamy, first variant
eps = Fr(1, 3)
P = {"eps": eps}
F = sc(1 / (2 * eps), add(log_one_plus(eps), sc(-1, log_one_plus(-eps))))
X = inv(weight(F))
v = zero(15)
for n in range(0, 7):
    v[2 * n + 1] = (-1) ** n * catalan(n) * eps ** (2 * n)
quoted("averaged-as-1", P, "X_of_w", v, X, oeis="A000108")
v = zero(15)
v[1] = Fr(1)
for n in range(0, 6):
    v[2 * n + 3] = 2 * (-1) ** n * catalan(n) * eps ** (2 * n + 2)
quoted("averaged-as-1", P, "phi", v, phi_from_x(X), oeis="A000108")
v = zero(14)
for n in range(1, 7):
    v[2 * n] = Fr((-1) ** n, n) * comb(2 * n - 1, n) * eps ** (2 * n)
quoted("averaged-as-1", P, "ln_phi.plain", v, ln_plain(X), oeis="A001700")
v = zero(15)
for n in range(0, 7):
    v[2 * n + 1] = Fr((-1) ** n, 2 * n + 1) * comb(2 * n, n) * eps ** (2 * n)
quoted("averaged-as-1", P, "xi", v, xi_of(F, X), oeis="A000984")
v = zero(14)
for n in range(1, 7):
    v[2 * n + 1] = -Fr((-1) ** n, 2 * n * (2 * n + 1)) * comb(2 * n, n) * eps ** (2 * n)
quoted("averaged-as-1", P, "phi_entropy.plain", v, h0_plain(F, X), compare="mod_linear")

# averaged acharya-swamy, second variant
eps = Fr(2)
s = (eps + 1 / eps) / 2
P = {"eps": eps}
F = sc(Fr(1, 2), add(sc(1 / eps, log_one_plus(eps)), sc(eps, log_one_plus(1 / eps))))
X = inv(weight(F))
px = [0, 1, s, 1, s * (-s**2 + 2), (-s**2 + 2), s * (2 * s**4 - 6 * s**2 + 5), (2 * s**4 - 6 * s**2 + 5),
      s * (-5 * s**6 + 20 * s**4 - 28 * s**2 + 14), (-5 * s**6 + 20 * s**4 - 28 * s**2 + 14),
      (14 * s**9 - 70 * s**7 + 135 * s**5 - 120 * s**3 + 42 * s),
      (14 * s**8 - 70 * s**6 + 135 * s**4 - 120 * s**2 + 42),
      (-42 * s**11 + 252 * s**9 - 616 * s**7 + 770 * s**5 - 495 * s**3 + 132 * s)]
quoted("averaged-as-2", P, "X_of_w", px, X)
q = s**2 - 1
pphi = [0, 1, -s, 2 * q, -s * q, -2 * q**2, 2 * s * q**2, 4 * q**3, -5 * s * q**3, -10 * q**4, 14 * s * q**4,
        28 * q**5]
quoted("averaged-as-2", P, "phi", pphi, phi_from_x(X),
       note="the printed u^6 coefficient carries a stray factor s; the coefficient is 2 s (s^2-1)^2")
r = recip(phi_from_x(X)[1:])
pr = [1, s, -s**2 + 2, -2 * s**3 + 3 * s, 3 * s**4 - 8 * s**2 + 6, 6 * s**5 - 15 * s**3 + 10 * s,
      -10 * s**6 + 36 * s**4 - 45 * s**2 + 20, -20 * s**7 + 70 * s**5 - 84 * s**3 + 35 * s,
      35 * s**8 - 160 * s**6 + 280 * s**4 - 224 * s**2 + 70,
      70 * s**9 - 315 * s**7 + 540 * s**5 - 420 * s**3 + 126 * s,
      -126 * s**10 + 700 * s**8 - 1575 * s**6 + 1800 * s**4 - 1050 * s**2 + 252,
      -252 * s**11 + 1386 * s**9 - 3080 * s**7 + 3465 * s**5 - 1980 * s**3 + 462 * s]
quoted("averaged-as-2", P, "u_over_phi", pr, r)
# u (s - u)/phi
psu = [s, q, -s * q, -2 * q**2, 3 * s * q**2, 6 * q**3, -10 * s * q**3, -20 * q**4, 35 * s * q**4, 70 * q**5,
       -126 * s * q**5, -252 * q**6]
quoted("averaged-as-2", P, "u_over_phi", psu, mul(poly([s, -1]), r), multiplier=[s, -1], oeis="A001405")

# averaged acharya-swamy, third variant (normalized: F(X/s))
eps = Fr(2)
s = (eps + 1 / eps) / 2
t = ((eps - 1 / eps) / (eps + 1 / eps)) ** 2
P = {"eps": eps}
raw = sc(Fr(1, 2), add(log_one_plus(1 / eps), log_one_plus(eps)))
F = [raw[k] / s**k for k in range(N)]
X = inv(weight(F))
px = [0, (1 - t), (1 - t**2), (1 + t**2 - 2 * t**3), (1 + 4 * t**3 - 5 * t**4),
      (1 - 2 * t**3 + 15 * t**4 - 14 * t**5), (1 - 15 * t**4 + 56 * t**5 - 42 * t**6),
      (1 + 5 * t**4 - 84 * t**5 + 210 * t**6 - 132 * t**7),
      (1 - 420 * t**6 + 56 * t**5 + 792 * t**7 - 429 * t**8),
      (1 - 14 * t**5 + 420 * t**6 - 1980 * t**7 + 3003 * t**8 - 1430 * t**9)]
quoted("averaged-as-3", P, "X_of_w", px, sc(2 / (s * s) / 2, X), scale=1 / (s * s),
       note="the normalized entry uses F(X/s); its X(w) is s times the unnormalized one, shown divided by s")
pphi = [0, 1, -(t + 1), -(2 * t**2 - 2 * t), -(5 * t**3 - 6 * t**2 + t), -(14 * t**4 - 20 * t**3 + 6 * t**2),
        -(42 * t**5 - 70 * t**4 + 30 * t**3 - 2 * t**2), -(132 * t**6 - 252 * t**5 + 140 * t**4 - 20 * t**3),
        -(429 * t**7 - 924 * t**6 + 630 * t**5 - 140 * t**4 + 5 * t**3),
        -(1430 * t**8 - 3432 * t**7 + 2772 * t**6 - 840 * t**5 + 70 * t**4)]
quoted("averaged-as-3", P, "phi", pphi, phi_from_x(X), oeis="A068763",
       note="the printed u^6 coefficient has every power of t raised by one; corrected here")
r = recip(phi_from_x(X)[1:])
pr = [1, (t + 1), (3 * t**2 + 1), (10 * t**3 - 3 * t**2 + 1), (35 * t**4 - 20 * t**3 + 1),
      (126 * t**5 - 105 * t**4 + 10 * t**3 + 1), (462 * t**6 - 504 * t**5 + 105 * t**4 + 1),
      (1716 * t**7 - 2310 * t**6 + 756 * t**5 - 35 * t**4 + 1),
      (6435 * t**8 - 10296 * t**7 + 4620 * t**6 - 504 * t**5 + 1),
      (24310 * t**9 - 45045 * t**8 + 25740 * t**7 - 4620 * t**6 + 126 * t**5 + 1)]
quoted("averaged-as-3", P, "u_over_phi", pr, r, oeis="A001700")
leg = [2, t, Fr(1, 2) * (-t + 3 * t**2), Fr(1, 2) * (-3 * t**2 + 5 * t**3),
       Fr(1, 8) * (3 * t**2 - 30 * t**3 + 35 * t**4), Fr(1, 8) * (15 * t**3 - 70 * t**4 + 63 * t**5),
       Fr(1, 16) * (-5 * t**3 + 105 * t**4 - 315 * t**5 + 231 * t**6),
       Fr(1, 16) * (-35 * t**4 + 315 * t**5 - 693 * t**6 + 429 * t**7),
       Fr(1, 128) * (35 * t**4 - 1260 * t**5 + 6930 * t**6 - 12012 * t**7 + 6435 * t**8),
       Fr(1, 128) * (315 * t**5 - 4620 * t**6 + 18018 * t**7 - 25740 * t**8 + 12155 * t**9)]
leg_u = [c * 2**k for k, c in enumerate(leg)]
quoted("averaged-as-3", P, "u_over_phi", leg_u, mul(poly([2, -2]), r), multiplier=[2, -2],
       note="2u(1-u)/phi; the printed (2u)^9 coefficient has every entry doubled; corrected here")

json.dump({"version": 1, "fixtures": FIXTURES}, sys.stdout, indent=1)
sys.stdout.write("\n")
