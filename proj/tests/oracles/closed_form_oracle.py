"""Independent high-precision oracle for frozen test values.

Evaluates the closed forms with mpmath (50 digits) and differentiates them
numerically with mpmath.diff, so nothing here shares code with the C++ path.
Run: python3 tests/oracles/closed_form_oracle.py
"""
from mpmath import mp, mpf, besseli, cos, sin, diff, quad, pi, nstr

mp.dps = 50


def I(k, x):
    return besseli(k, x)


def report(R, n):
    R = mpf(R)
    a = I(1, R) / I(0, R)
    q = a / R
    st = 2 * q
    Mn = 1 - 2 * q - a * I(n + 1, R) / I(n, R)
    mun = n * (n * n - 1) / (R**3 * Mn)
    Mt = mpf(1) / 2 + mpf(2 * n - 3) / 2 * q - Mn

    sS = lambda r: I(0, r) / I(0, R)
    psS = lambda r: st * r * r / 4 - I(0, r) / I(0, R) + 1 - st * R * R / 4
    s1 = lambda r, t: -I(1, R) * I(n, r) / (I(0, R) * I(n, R)) * cos(n * t)
    pt1 = lambda r, t: (n * n - 1) * r**n / R**(n + 2) * cos(n * t)
    ps1 = lambda r, t: (-(r**n) * I(1, R) / (R**n * I(0, R)) + I(1, R) * I(n, r) / (I(0, R) * I(n, R))) * cos(n * t)
    s2 = lambda r, t: Mt / 2 * I(0, r) / I(0, R) + Mt / 2 * I(2 * n, r) / I(2 * n, R) * cos(2 * n * t)
    pt2 = lambda r, t: (mpf(1) / 2 - mpf(3 * n * n) / 4 - mpf(n * (n * n - 1)) / 2) / R**3 + r**(2 * n) / R**(2 * n + 3) * (mpf(1) / 2 - mpf(5 * n * n) / 4 - mpf(n * (n * n - 1)) / 2) * cos(2 * n * t)
    ps2 = lambda r, t: mpf(2 * n - 1) / 4 * q * (1 + (r / R)**(2 * n) * cos(2 * n * t)) - s2(r, t)

    def F2(t, mu):
        c = cos(n * t)
        ptS3 = 0
        psS3 = diff(psS, R, 3)
        return (ptS3 * c * c + mu * psS3 * c * c
                + 2 * diff(lambda r: pt1(r, t), R, 2) * c
                + 2 * mu * diff(lambda r: ps1(r, t), R, 2) * c
                + 2 / R**2 * diff(lambda th: pt1(R, th), t) * n * sin(n * t)
                + 2 * mu / R**2 * diff(lambda th: ps1(R, th), t) * n * sin(n * t)
                + 2 * diff(lambda r: pt2(r, t), R)
                + 2 * mu * diff(lambda r: ps2(r, t), R))

    L1 = quad(lambda t: F2(t, mun), [0, 2 * pi]) / (2 * pi)
    L2 = quad(lambda t: F2(t, mun) * cos(2 * n * t), [0, 2 * pi]) / pi
    print(f"R={nstr(R, 4)} n={n}")
    for name, v in [("sigma_tilde", st), ("M_n", Mn), ("mu_n", mun), ("M_tilde", Mt),
                    ("Lambda1", L1), ("Lambda2", L2)]:
        print(f"  {name:12s} {nstr(v, 17)}")


if __name__ == "__main__":
    print("I0(2)", nstr(I(0, 2), 17), "I1(2)", nstr(I(1, 2), 17),
          "I2(2)", nstr(I(2, 2), 17), "I3(2)", nstr(I(3, 2), 17), "I2(1)", nstr(I(2, 1), 17))
    print("I1(2)/I0(2)", nstr(I(1, 2) / I(0, 2), 17))
    print("I6(0.001)/I5(0.001)", nstr(I(6, mpf('0.001')) / I(5, mpf('0.001')), 17))
    print("I50(30)", nstr(I(50, 30), 17), "I200(15)", nstr(I(200, 15), 17),
          "I0(800)", nstr(I(0, 800), 17), "I100(1000)", nstr(I(100, 1000), 17), "I3(60)", nstr(I(3, 60), 17))
    R = mpf(2)
    a = I(1, R) / I(0, R)
    print("p_star_S(0) R=2", nstr(-1 / I(0, R) + 1 - a, 17), "sigma_S(0)", nstr(1 / I(0, R), 17))
    print("sigma_1,2(1) R=2", nstr(-I(1, R) * I(2, 1) / (I(0, R) * I(2, R)), 17))
    print("dp1*/dr n=2 R=2", nstr(I(1, R) * I(3, R) / (I(0, R) * I(2, R)), 17))
    print("d2pS*/dr2 R=2", nstr(2 * a / R - 1, 17))
    for R_, n_ in [(2, 2), (2, 3), (1, 5), (5, 4)]:
        report(R_, n_)
