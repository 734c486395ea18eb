"""Closed-form reference values for the numerical geometry checks.

Second fundamental forms use the exact identity D_X (B x) = B A x for linear
fields; geodesics on round spheres are great circles. Run once and freeze
the output in tests/fixtures/geom_oracle.json.
"""
import json
import sys

import numpy as np


def herm_ip(a, b):
    return np.real(np.trace(a.conj().T @ b))


def gram_schmidt(mats, ip):
    out = []
    for m in mats:
        m = m.astype(complex)
        for b in out:
            m = m - ip(b, m) * b
        n = np.sqrt(ip(m, m))
        if n > 1e-12:
            out.append(m / n)
    return out


def e(i, j, v=1.0):
    m = np.zeros((3, 3), complex)
    m[i, j] = v
    return m


def so3():
    return [e(i, j) - e(j, i) for i in range(3) for j in range(i + 1, 3)]


def su3():
    g = so3() + [1j * (e(i, j) + e(j, i)) for i in range(3) for j in range(i + 1, 3)]
    return g + [1j * (e(0, 0) - e(1, 1)), 1j * (e(1, 1) - e(2, 2))]


def ad_matrix(basis, ip, z):
    return np.array([[ip(bk, z @ bl - bl @ z) for bl in basis] for bk in basis])


def coords(basis, ip, m):
    return np.array([ip(b, m) for b in basis])


def sff_norm(x, gens, tangent_proj):
    vals = np.stack([g @ x for g in gens], axis=1)
    u, s, vt = np.linalg.svd(vals, full_matrices=False)
    r = int(np.sum(s > 1e-8 * max(1.0, s[0])))
    frame = u[:, :r]
    coeff = vt[:r].T / s[:r]
    normal = tangent_proj(x) - frame @ frame.T
    total = 0.0
    for a in range(r):
        A = sum(c * g for c, g in zip(coeff[:, a], gens))
        for b in range(r):
            B = sum(c * g for c, g in zip(coeff[:, b], gens))
            total += np.sum((normal @ (B @ A @ x)) ** 2)
    return float(np.sqrt(total))


def sphere_proj(x):
    n = x / np.linalg.norm(x)
    return np.eye(len(x)) - np.outer(n, n)


def s4_model():
    mats = [e(0, 0) - e(1, 1), e(1, 1) - e(2, 2), e(0, 1) + e(1, 0), e(0, 2) + e(2, 0), e(1, 2) + e(2, 1)]
    basis = gram_schmidt(mats, herm_ip)
    gens = [ad_matrix(basis, herm_ip, z) for z in so3()]
    return basis, gens


def cp2_model(group):
    herm = [e(i, i) for i in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            herm += [e(i, j) + e(j, i), 1j * e(i, j) - 1j * e(j, i)]
    basis = gram_schmidt(herm, herm_ip)
    gens = [ad_matrix(basis, herm_ip, z) for z in (so3() if group == "SO(3)" else su3())]

    def proj(x):
        # Tangent space of rank-one projectors at P: {PH + HP - H = 0 complement}, via the
        # differential of P -> P^2 - P restricted to Hermitian matrices.
        P = sum(c * b for c, b in zip(x, basis))
        J = np.stack([coords(basis, herm_ip, P @ b + b @ P - b) for b in basis], axis=1)
        u, s, vt = np.linalg.svd(J)
        r = int(np.sum(s > 1e-10 * s[0]))
        n = vt[:r].T
        return np.eye(len(x)) - n @ n.T

    return basis, gens, proj


def s7_model():
    ip = lambda a, b: 0.5 * herm_ip(a, b)
    basis = gram_schmidt(su3(), ip)
    gens = [ad_matrix(basis, ip, z) for z in su3()]
    return basis, ip, gens


def main():
    out = {}
    basis, gens = s4_model()
    p = coords(basis, herm_ip, np.diag([1, 1, -2]) / np.sqrt(6))
    out["veronese_rp2_s4"] = sff_norm(p, gens, sphere_proj)

    cb, cg, cproj = cp2_model("SO(3)")
    v = np.array([1, 0, 1j]) / np.sqrt(2)
    out["orbit_10i_cp2"] = sff_norm(coords(cb, herm_ip, np.outer(v, v.conj())), cg, cproj)
    rng = np.random.default_rng(5)
    real = []
    for _ in range(10):
        w = rng.normal(size=3)
        w /= np.linalg.norm(w)
        real.append(sff_norm(coords(cb, herm_ip, np.outer(w, w).astype(complex)), cg, cproj))
    out["real_rp2_cp2_max"] = max(real)

    sb, sip, sg = s7_model()
    z = coords(sb, sip, np.diag([1j, 1j, -2j]))
    out["cp2_in_s7"] = sff_norm(z / np.linalg.norm(z), sg, sphere_proj)

    # Great circle from diag(1,1,-2)/sqrt(6) towards diag(1,-1,0)/sqrt(2).
    vdir = coords(basis, herm_ip, np.diag([1, -1, 0]) / np.sqrt(2))
    fdd = {}
    names = ["rot12", "rot13", "rot23"]
    ts = np.arange(0, 3.0 + 1e-12, 1e-3)
    for name, A in zip(names, gens):
        a, b, c = (A @ p) @ (A @ p), (A @ vdir) @ (A @ vdir), (A @ p) @ (A @ vdir)
        g = a * np.cos(ts) ** 2 + b * np.sin(ts) ** 2 + 2 * c * np.sin(ts) * np.cos(ts)
        gp = (b - a) * np.sin(2 * ts) + 2 * c * np.cos(2 * ts)
        gpp = 2 * (b - a) * np.cos(2 * ts) - 4 * c * np.sin(2 * ts)
        f = np.sqrt(np.maximum(g, 0))
        mask = f > 0.1
        fpp = (2 * g[mask] * gpp[mask] - gp[mask] ** 2) / (4 * g[mask] ** 1.5)
        fdd[name] = float(fpp.max())
    out["s4_profile_max_f_dd_above_0.1"] = fdd

    t = 0.5
    q = np.cos(t) * p + np.sin(t) * vdir
    nrm = -np.sin(t) * p + np.cos(t) * vdir
    frames = [A @ q for A in gens]
    S = np.array([[-(gens[a] @ nrm) @ (frames[b] / np.linalg.norm(frames[b])) / np.linalg.norm(frames[a])
                   for b in range(3)] for a in range(3)])
    out["s4_shape_t0.5_eigenvalues"] = sorted(float(x) for x in np.linalg.eigvalsh((S + S.T) / 2))
    out["s4_shape_t0.5_off_diagonal_max"] = float(np.max(np.abs(S - np.diag(np.diag(S)))))

    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
