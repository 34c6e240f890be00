"""Independent high-precision reference values frozen into the C++ tests.

Everything here is computed with mpmath at 40 digits, by direct summation or
by quadrature of the original x-integral on [0, inf). None of it shares code
with the library. Run with `python3 tests/oracle/frozen_values.py`.
"""
import mpmath as mp

mp.mp.dps = 40


def t(x, a):
    return x + a + mp.sqrt(x * x + 2 * a * x)


def lhs(mu, lam, a, f, linear=False, gy=0):
    def g(x):
        tt = t(x, a)
        w = gy * (x if linear else 1) / tt
        return x ** (mu - 1) * tt ** (-lam) * f(w)
    return mp.quad(g, [0, 1, 10, 100, mp.inf])


def s_alpha(alpha):
    def f(w):
        return mp.nsum(lambda n: w ** n * mp.gamma(alpha + 1) * mp.gamma((n + 1) / 2)
                       / (mp.sqrt(mp.pi) * mp.factorial(n) * mp.gamma(n / 2 + alpha + 1)),
                       [0, mp.inf])
    return f


def wright(upper, lower, z, terms=200):
    s = mp.mpf(0)
    for k in range(terms):
        num = mp.fprod(mp.gamma(a + al * k) for a, al in upper)
        den = mp.fprod(mp.gamma(b + be * k) for b, be in lower)
        s += num / den * mp.mpf(z) ** k / mp.factorial(k)
    return s


def ober(mu, lam, a):
    return 2 * lam * a ** (-lam) * (a / 2) ** mu * mp.gamma(2 * mu) * mp.gamma(lam - mu) / mp.gamma(1 + lam + mu)


def show(name, v):
    print(f"{name:55s} {mp.nstr(v, 20)}")


show("I0(1)", mp.besseli(0, 1))
show("L0(1)", mp.struvel(0, 1))
show("I1(1)", mp.besseli(1, 1))
show("L1(1)", mp.struvel(1, 1))

lam, mu = mp.mpf(2), mp.mpf(1)
show("3Psi3 T3-form lam=2 mu=1 z=0.5",
     wright([(0.5, 0.5), (lam + 1, 1), (lam - mu, 1)], [(1, 0.5), (lam, 1), (1 + lam + mu, 1)], 0.5))
show("2F2[3,1;2,2;0.5]", mp.hyp2f2(3, 1, 2, 2, 0.5))
show("ober(1,2,1)", ober(1, 2, 1))
show("ober(0.5,1.5,2)", ober(mp.mpf(0.5), mp.mpf(1.5), 2))
show("quad ober(0.5,1.5,2)", lhs(mp.mpf(0.5), mp.mpf(1.5), 2, lambda w: 1))

s0 = lambda w: mp.besseli(0, w) + mp.struvel(0, w)
show("LHS fixed mu=.8 lam=2.5 a=1.5 gy=.7 S0",
     lhs(mp.mpf('0.8'), mp.mpf('2.5'), mp.mpf('1.5'), s0, gy=mp.mpf('0.7')))
show("LHS fixed mu=1 lam=2 a=1 gy=.5 exp", lhs(1, 2, 1, mp.exp, gy=mp.mpf('0.5')))
show("LHS linear mu=.6 lam=2.2 a=1 gy=.8 S0",
     lhs(mp.mpf('0.6'), mp.mpf('2.2'), 1, s0, linear=True, gy=mp.mpf('0.8')))
k1 = lambda w: 2 * mp.besseli(1, w) + mp.struvel(1, w)
show("LHS fixed mu=1 lam=2.5 a=1 y=.6 2I1+L1", lhs(1, mp.mpf('2.5'), 1, k1, gy=mp.mpf('0.6')))

# Audit point T1, alpha=1, mu=1, lam=2.5, a=1, gy=0.5
mu, lam, a, al, gy = mp.mpf(1), mp.mpf('2.5'), mp.mpf(1), mp.mpf(1), mp.mpf('0.5')
L = lhs(mu, lam, a, s_alpha(al), gy=gy)
pref = 2 ** (1 - mu) * a ** (mu - lam) * mp.gamma(al + 1) * mp.gamma(2 * mu) / mp.sqrt(mp.pi)
stated = pref * wright([(0.5, 0.5), (lam + 1, 1), (lam - mu, 1)], [(lam, 1), (1 + lam + mu, 1)], gy / a)
derived = pref * wright([(0.5, 0.5), (lam + 1, 1), (lam - mu, 1)], [(al + 1, 0.5), (lam, 1), (1 + lam + mu, 1)], gy / a)
show("T1 point LHS", L)
show("T1 point stated", stated)
show("T1 point derived closed Wright", derived)
show("T1 point rel err stated", abs(stated - L) / L)

# Audit point T3, mu=1, lam=2.5, a=1, y=0.5
L = lhs(mu, lam, a, s0, gy=gy)
stated = 2 ** (1 - mu) * a ** (mu - lam) / mp.sqrt(mp.pi) * mp.gamma(2 * mu) * wright(
    [(0.5, 0.5), (lam + 1, 1), (lam - mu, 1)], [(1, 0.5), (lam, 1), (1 + lam + mu, 1)], gy / a)
show("T3 point LHS", L)
show("T3 point stated", stated)
