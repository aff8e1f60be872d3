#!/usr/bin/env python3
"""Independent high-precision oracle for the frozen values in the Rust tests.

Evaluates every closed form directly with mpmath (40 digits) and performs the
vacuum mode sums by brute force, without sharing any code path with the crate.
Run: python3 crates/core/tests/oracles/oracle.py
"""
import mpmath as mp

mp.mp.dps = 40

C = mp.mpf("2.99792458e10")
HBAR = mp.mpf("1.054571817e-27")


def boost_factor(n, beta):
    return (n + beta) / (1 + n * beta)


def transform_constants(eps, mu, beta):
    n = mp.sqrt(eps * mu)
    f = boost_factor(n, beta)
    return mp.sqrt(eps / mu) * f, mp.sqrt(mu / eps) * f


def cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def apply(m, v):
    return [sum(m[i][j] * v[j] for j in range(3)) for i in range(3)]


def transpose(m):
    return [[m[j][i] for j in range(3)] for i in range(3)]


def lorentz_exact(e, b, beta):
    g = 1 / mp.sqrt(1 - beta * beta)
    zb = cross([0, 0, 1], b)
    ze = cross([0, 0, 1], e)
    ep = [g * (e[0] + beta * zb[0]), g * (e[1] + beta * zb[1]), e[2]]
    bp = [g * (b[0] - beta * ze[0]), g * (b[1] - beta * ze[1]), b[2]]
    return ep, bp


def me_exact(eps, mu, chi, e, b, beta):
    _, mup = transform_constants(eps, mu, beta)
    ep, bp = lorentz_exact(e, b, beta)
    return dot(bp, apply(transpose(chi), ep)) / mup


def velocity(eps, mu, rho0, chi, e, b):
    p = 1 / (4 * mp.pi * mu * C)
    n = mp.sqrt(eps * mu)
    am = [p * (eps * mu - 1) * x for x in cross(e, b)]
    ce = [p * x for x in cross(e, apply(transpose(chi), e))]
    cb = [-p * x for x in cross(b, apply(chi, b))]
    shen = -p * (n - 1 / n) * dot(b, apply(transpose(chi), e))
    rhs = [(am[i] + ce[i] + cb[i]) / rho0 for i in range(3)]
    rhs[2] += shen / rho0
    return am, ce, cb, shen, rhs


def mode_sums(eps, mu, chi, grid_n, cutoff, volume):
    """Brute-force zero-point sums, cell-centred grid over [-cutoff, cutoff]^3."""
    n = mp.sqrt(eps * mu)
    dk = 2 * cutoff / grid_n
    weight = volume * dk ** 3 / (2 * mp.pi) ** 3
    chit = transpose(chi)
    count = 0
    energy = mp.mpf(0)
    exb = [mp.mpf(0)] * 3
    exce = [mp.mpf(0)] * 3
    bxcb = [mp.mpf(0)] * 3
    bce = mp.mpf(0)
    for i in range(grid_n):
        for j in range(grid_n):
            for l in range(grid_n):
                k = [cutoff * mp.mpf(2 * idx + 1 - grid_n) / grid_n for idx in (i, j, l)]
                k2 = dot(k, k)
                if k2 == 0 or k2 > cutoff * cutoff:
                    continue
                kn = mp.sqrt(k2)
                kh = [x / kn for x in k]
                omega = C * kn / n
                amp2 = 2 * mp.pi * HBAR * omega / volume
                # any orthonormal transverse basis; the sums are traces over it
                ref = [0, 0, 0]
                ref[min(range(3), key=lambda a: (abs(kh[a]), a))] = 1
                e1 = cross(ref, kh)
                e1n = mp.sqrt(dot(e1, e1))
                e1 = [x / e1n for x in e1]
                e2 = cross(kh, e1)
                for e in (e1, e2):
                    count += 1
                    energy += weight * HBAR * omega / 2
                    ev = [mp.sqrt(amp2) * x for x in e]
                    bv = [n * x for x in cross(kh, ev)]
                    exb = [a + weight * x for a, x in zip(exb, cross(ev, bv))]
                    exce = [a + weight * x for a, x in zip(exce, cross(ev, apply(chit, ev)))]
                    bxcb = [a + weight * x for a, x in zip(bxcb, cross(bv, apply(chi, bv)))]
                    bce += weight * dot(bv, apply(chit, ev))
    return count, energy, exb, exce, bxcb, bce


def show(label, value):
    if isinstance(value, list):
        print(label, [mp.nstr(x, 20) for x in value])
    else:
        print(label, mp.nstr(value, 20))


def antisym(g):
    return [[0, g, 0], [-g, 0, 0], [0, 0, 0]]


if __name__ == "__main__":
    one = mp.mpf(1)
    show("dot (1,2,3).(4,5,6)", dot([1, 2, 3], [4, 5, 6]))
    show("cross (1,2,3)x(4,5,6)", cross([1, 2, 3], [4, 5, 6]))
    show("triple x,(1,1,0),(1,1,1)", dot([1, 0, 0], cross([1, 1, 0], [1, 1, 1])))

    ep, mup = transform_constants(mp.mpf("2.25"), one, mp.mpf("0.1"))
    show("eps' (2.25,1,0.1)", ep)
    show("mu'  (2.25,1,0.1)", mup)
    show("index (1.5, 0.1)", boost_factor(mp.mpf("1.5"), mp.mpf("0.1")))

    g = mp.mpf("1e-3")
    show("me_exact antisym 1e-3, x, y, beta 0.01",
         me_exact(mp.mpf("2.25"), one, antisym(g), [1, 0, 0], [0, 1, 0], mp.mpf("0.01")))
    show("mu_correction diag 1e-3 beta 0.01", mp.mpf("0.01") * (mp.mpf("1.5") - 1 / mp.mpf("1.5")) * g)

    am, ce, cb, shen, rhs = velocity(mp.mpf("2.25"), one, one, antisym(mp.mpf("1e-4")), [1, 0, 0], [0, 1, 0])
    show("velocity AM", am)
    show("velocity chiE", ce)
    show("velocity chiB", cb)
    show("velocity shen", shen)
    show("velocity rhs", rhs)

    count, energy, *_ = mode_sums(one, one, antisym(mp.mpf(0)), 16, mp.mpf("1e5"), one)
    print("modes grid16 cutoff1e5", count)
    show("zero-point energy grid16 cutoff1e5 V1", energy)

    count, energy, exb, exce, bxcb, bce = mode_sums(mp.mpf("2.25"), one, antisym(mp.mpf("1e-3")), 8,
                                                    mp.mpf("1e5"), one)
    print("modes grid8 cutoff1e5", count)
    show("grid8 <ExB>", exb)
    show("grid8 <Ex(chiT E)>", exce)
    show("grid8 <Bx(chi B)>", bxcb)
    show("grid8 <B.chiT E>", bce)

    # classical velocity with vacuum bilinears substituted (CLI golden row)
    p = 1 / (4 * mp.pi * C)
    n = mp.sqrt(mp.mpf("2.25"))
    vz = (p * (mp.mpf("2.25") - 1) * exb[2] + p * exce[2] - p * bxcb[2] - p * (n - 1 / n) * bce)
    show("vacuum v_z grid8 (rho0=1)", vz)
    show("vacuum chiE z", p * exce[2])
    show("vacuum chiB z", -p * bxcb[2])
