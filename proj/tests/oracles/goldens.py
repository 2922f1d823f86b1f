"""High-precision reference values for the frozen constants in the test suite.

Every integral here is evaluated with mpmath at 40 digits, independent of the
C++ quadrature engine. Rerun with `python3 tests/oracles/goldens.py`.
"""
import mpmath as mp

mp.mp.dps = 40


def two_sided_amp(l1, l2):
    return l1 * l2 / (l1 + l2)


def re_transform(l1, l2, omega):
    a = two_sided_amp(l1, l2)
    return a * (l1 / (l1**2 + omega**2) + l2 / (l2**2 + omega**2))


def band_g(l1, l2, k):
    return mp.atanh(re_transform(l1, l2, 2 * k) / 2)


def split_points(w, lam, per_decade=4):
    n = int(mp.ceil(mp.log10(lam / w) * per_decade))
    return [w * (lam / w) ** (mp.mpf(i) / n) for i in range(n + 1)]


def t00_exact_band(l1, l2, w, lam):
    # negative-definite form: -k^3 cosh^2 g (tanh g)^2
    def f(k):
        g = band_g(l1, l2, k)
        return -k**3 * mp.cosh(g) ** 2 * mp.tanh(g) ** 2
    return mp.quad(f, split_points(w, lam)) / (2 * mp.pi**2)


def positive_term_band(l1, l2, w, lam):
    def f(k):
        return k**3 * mp.sinh(band_g(l1, l2, k)) ** 2
    return mp.quad(f, split_points(w, lam)) / (2 * mp.pi**2)


def density_band(l1, l2, w, lam, t):
    def f(k):
        g = band_g(l1, l2, k)
        return k**3 * (mp.sinh(g) ** 2 - mp.cosh(g) * mp.sinh(g) * mp.cos(2 * k * t))
    return mp.quad(f, split_points(w, lam, 16)) / (2 * mp.pi**2)


def constant_band_lorentzian(g0, w, lam, t0):
    s, c = mp.sinh(g0), mp.cosh(g0)
    def f(k):
        return k**3 * (s * s - c * s * mp.exp(-2 * k * t0))
    return mp.quad(f, [w, lam]) / (2 * mp.pi**2)


if __name__ == "__main__":
    print("tse{1,2}(t=-1)             ", mp.mpf(2) / 3 * mp.e**-1)
    print("atanh(0.1)                 ", mp.atanh(mp.mpf("0.1")))
    print("sinh^2(0.2), cosh*sinh(0.2)", mp.sinh(0.2) ** 2, mp.cosh(0.2) * mp.sinh(0.2))
    print("asym l=1 e                 ", -1 / (128 * mp.pi**2))
    print("asym l=2,3 ratio 10        ", -36 * mp.log(10) / (128 * mp.pi**2))
    print("t00 exact W=100 L=1e8      ", t00_exact_band(1, 1, 100, mp.mpf(10) ** 8))
    print("asym W=100 L=1e8           ", -mp.log(mp.mpf(10) ** 6) / (128 * mp.pi**2))
    print("t00 exact W=10 L=1e3       ", t00_exact_band(1, 1, 10, 1000))
    print("positive W=10 L=1e3        ", positive_term_band(1, 1, 10, 1000))
    print("density(t=0) W=10 L=1e3    ", density_band(1, 1, 10, 1000, 0))
    print("constband g0=.1 W=1 L=10 t0=1", constant_band_lorentzian(mp.mpf("0.1"), 1, 10, 1))
    print("log integral W=100 L=1e6   ", mp.log(mp.mpf(10) ** 4) / 16)
    print("sin(1000)/10               ", mp.sin(1000) / 10)
    print("j_n(6000), n = 0..23       ", [mp.nstr(mp.sqrt(mp.pi / 12000) * mp.besselj(n + mp.mpf(1) / 2, 6000), 17) for n in range(24)])
