"""Regenerate the high-precision reference numbers frozen into the tests.

Run ``python tests/reference_values.py``. Nothing here imports ``udw``:
the kernel comes from integrating its defining ODE, and entropies and
energies come from an mpmath eigensolve of the assembled density matrix.
"""

import mpmath as mp

mp.mp.dps = 30


def kernel_ode(t, tau):
    # h'' + h'/tau + h = 0, h(0) = 1, h'(0) = 0
    f = mp.odefun(lambda _, y: [y[1], -y[1] / tau - y[0]], 0, [mp.mpf(1), mp.mpf(0)])
    return f(t)[0]


def steady(delta0, gamma):
    d, g = mp.mpf(delta0), mp.mpf(gamma)
    den = 4 * (3 + g * g)
    r11 = (3 + d) * (g - 1) ** 2 / den
    r22 = (3 - d - (d + 1) * g * g) / den
    r44 = (3 + d) * (g + 1) ** 2 / den
    r23 = (d - g * g) / (2 * (3 + g * g))
    return r11, r22, r44, r23


def matrix(delta0, gamma):
    r11, r22, r44, r23 = steady(delta0, gamma)
    return mp.matrix([[r11, 0, 0, 0], [0, r22, r23, 0], [0, r23, r22, 0], [0, 0, 0, r44]])


def entropy(delta0, gamma):
    eig, _ = mp.eigsy(matrix(delta0, gamma))
    return -mp.fsum(x * mp.log(x) for x in eig if x > 0)


def energy(delta0, gamma, omega):
    h = mp.diag([omega, 0, 0, -omega])
    rho = matrix(delta0, gamma)
    return sum((h * rho)[i, i] for i in range(4))


def cycle(delta0, wa, wb, tc, th):
    g = lambda w, t: mp.tanh(mp.mpf(w) / (2 * mp.mpf(t)))
    a, b, c, d = (wa, th), (wb, th), (wb, tc), (wa, tc)
    s = lambda p: entropy(delta0, g(*p))
    u = lambda p: energy(delta0, g(*p), p[0])
    q_ab = th * (s(b) - s(a))
    q_bc = u(c) - u(b)
    q_cd = tc * (s(d) - s(c))
    q_da = u(a) - u(d)
    return q_ab, q_bc, q_cd, q_da


def binary_entropy(x):
    return -x * mp.log(x, 2) - (1 - x) * mp.log(1 - x, 2)


if __name__ == "__main__":
    print("tanh(1)", mp.tanh(1))
    for t, tau in [(1, 0.1), (0.5, 0.1), (2, 5), (10, 5), (3, 0.2)]:
        print(f"h({t}; {tau})", kernel_ode(mp.mpf(t), mp.mpf(tau)))
    print("EoF(0.5)", binary_entropy((1 + mp.sqrt(1 - mp.mpf(0.25))) / 2))
    print("S(-2, tanh 1)", entropy(-2, mp.tanh(1)))
    print("U(-2, tanh 1, w=2)", energy(-2, mp.tanh(1), 2))
    print("cycle", cycle(-1.5, 1, 0.5, mp.mpf("0.5"), 1))
    print("h=1/2 root tau=0.1", mp.findroot(lambda t: kernel_ode(t, mp.mpf("0.1")) - mp.mpf("0.5"), 0.3))
