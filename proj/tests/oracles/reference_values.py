"""Reference values frozen into the C++ tests.

Independent of the library: frames are typed in from their closed forms,
packets are built by applying the raising operator
    A^dagger[Y] = i / sqrt(2 eps) (K^* x + i eps X^* grad)
symbolically to the Gaussian ground state, polynomial coefficients come from a
sympy series of the generating function, and integrals are trapezoid sums on
fine grids (spectrally accurate for Gaussians).

    python3 tests/oracles/reference_values.py
"""

import itertools
import math

import numpy as np
import sympy as sp

I = 1j
EPS = 0.1
R2 = math.sqrt(2.0)

Q1 = np.array([[1, 1], [1, -1]]) / R2
P1 = I * Q1
Q2 = 0.5 * np.array([[1 + I, 1 - I], [1 - I, 1 + I]])
P2 = 0.5 * np.array([[I - 1, I + 1], [I + 1, I - 1]])
Q3 = np.array([[I, -I * (1 + R2)], [1, R2 - 1]])
P3 = np.array([[(1 - R2), 1], [(I + I * R2), I]]) / (2 * R2)

OMEGA = np.block([[np.zeros((2, 2)), -np.eye(2)], [np.eye(2), np.zeros((2, 2))]])


def metric(q, p):
    z = np.vstack([q, p])
    return OMEGA.T @ np.real(z @ z.conj().T) @ OMEGA


def overlap(qz, pz, qy, py):
    return 0.5 * I * (pz.conj().T @ qy - qz.conj().T @ py)


def recursion(qz, pz, qy, py):
    g = metric(qz, pz)
    y = np.vstack([qy, py])
    b = overlap(qz, pz, qy, py)
    return 0.25 * y.conj().T @ g @ y.conj() + b.conj().T @ np.linalg.inv(qz) @ qz.conj() @ b.conj()


x1, x2 = sp.symbols("x1 x2", real=True)
X = sp.Matrix([x1, x2])


def cmat(a):
    return sp.Matrix(2, 2, lambda i, j: sp.nsimplify(a[i, j].real, rational=False) + sp.I * sp.nsimplify(a[i, j].imag, rational=False))


def packet_expr(qz, pz, qy, py, k, eps=EPS):
    qs, ps, qys, pys = cmat(qz), cmat(pz), cmat(qy), cmat(py)
    width = ps * qs.inv()
    det = complex(np.linalg.det(qz))
    det_factor = 1.0 / np.sqrt(det)
    phi = (sp.pi * eps) ** sp.Rational(-1, 2) * complex(det_factor) * sp.exp(
        sp.I * (X.T * width * X)[0] / (2 * eps))
    for j in range(2):
        for _ in range(k[j]):
            grad = sp.Matrix([sp.diff(phi, x1), sp.diff(phi, x2)])
            term = (pys.H * X)[j] * phi + sp.I * eps * (qys.H * grad)[j]
            phi = sp.expand(sp.I / sp.sqrt(2 * eps) * term)
    phi = phi / sp.sqrt(math.factorial(k[0]) * math.factorial(k[1]))
    return sp.lambdify((x1, x2), phi, "numpy")


def grid(half, n):
    t = np.linspace(-half, half, n)
    return t, t[1] - t[0]


def show_matrix(name, a):
    print(name)
    for row in np.atleast_2d(a):
        print("  " + ", ".join(f"{{{v.real:.17g}, {v.imag:.17g}}}" if np.iscomplexobj(a) else f"{v:.17g}" for v in row))


def main():
    show_matrix("G_Z2", metric(Q2, P2))
    show_matrix("B(Z2,Z3)", overlap(Q2, P2, Q3, P3))
    m23 = recursion(Q2, P2, Q3, P3)
    show_matrix("M(Z2,Z3)", m23)
    print("M(Z2,Z3) asymmetry", np.abs(m23 - m23.T).max())

    # q_(6,5)^M3 from k! [t^k] exp(2 x.t - t^T M t).
    t1, t2 = sp.symbols("t1 t2")
    s = 1 / sp.sqrt(2)
    m3 = sp.Matrix([[s, s], [s, -s]])
    t = sp.Matrix([t1, t2])
    gen = sp.exp(2 * (x1 * t1 + x2 * t2) - (t.T * m3 * t)[0])
    coeff = sp.expand(sp.diff(gen, t1, 6, t2, 5).subs({t1: 0, t2: 0}))
    poly = sp.Poly(coeff, x1, x2)
    print("q_(6,5)^M3 coefficients (a1, a2, value)")
    for (a1, a2), c in sorted(poly.terms(), key=lambda tc: (sum(tc[0]), tc[0])):
        print(f"  {{{a1}, {a2}, {float(sp.N(c, 30)):.17g}}},")

    # Ground state of Z2 at (0.2, -0.1).
    x = np.array([0.2, -0.1])
    w = P2 @ np.linalg.inv(Q2)
    phi0 = (math.pi * EPS) ** -0.5 / np.sqrt(np.linalg.det(Q2)) * np.exp(I * x @ w @ x / (2 * EPS))
    print(f"phi0[Z2](0.2,-0.1) = {phi0.real:.17g} {phi0.imag:.17g}")

    # Gram matrix of phi_k[Z2, Z3], k in {0, e1, e2}.
    ks = [(0, 0), (1, 0), (0, 1)]
    fs = [packet_expr(Q2, P2, Q3, P3, k) for k in ks]
    t, h = grid(4.0, 801)
    xx, yy = np.meshgrid(t, t, indexing="ij")
    vals = [np.broadcast_to(f(xx, yy), xx.shape) for f in fs]
    gram = np.array([[np.sum(np.conj(a) * b) * h * h for b in vals] for a in vals])
    show_matrix("Gram(Z2,Z3)", gram)

    # Wigner function of phi_(1,0)[Z2] and phi_(0,0)[Z2] at z = (0.1, 0, -0.2, 0.05).
    fa = packet_expr(Q2, P2, Q2, P2, (1, 0))
    fb = packet_expr(Q2, P2, Q2, P2, (0, 0))
    q = np.array([0.1, 0.0])
    xi = np.array([-0.2, 0.05])
    t, h = grid(5.0, 1201)
    y1, y2 = np.meshgrid(t, t, indexing="ij")
    integrand = (np.conj(fa(q[0] + y1 / 2, q[1] + y2 / 2)) * fb(q[0] - y1 / 2, q[1] - y2 / 2)
                 * np.exp(I * (xi[0] * y1 + xi[1] * y2) / EPS))
    wval = np.sum(integrand) * h * h / (2 * math.pi * EPS) ** 2
    print(f"W_(1,0),(0,0)[Z2](0.1,0,-0.2,0.05) = {wval.real:.17g} {wval.imag:.17g}")


if __name__ == "__main__":
    main()
