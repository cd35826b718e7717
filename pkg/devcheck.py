"""Scratch verification of the core construction (deleted before delivery)."""
import math
import numpy as np
from fractions import Fraction

from kscert.rays import Ray, inner, conj_cross, gram, projector, projector_sum_spectrum, hermitian_eigenvalues, hermitize
from kscert.thresholds import delta, order_of, build_threshold_graph, max_clique, fkrs_check
from kscert.gadget import build_pair_model, pair_operator_C, pair_inequality_bounds

rng = np.random.default_rng(7)

def random_ray(dim=3, label=""):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return Ray(v / np.linalg.norm(v), label)

def random_pair_with_overlap(c, dim=3):
    """Random pair psi,phi with |<psi|phi>| = c (random phases)."""
    psi = random_ray(dim)
    # random unit vector orthogonal to psi
    w = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    w = w - np.vdot(psi.vector, w) * psi.vector
    w = w / np.linalg.norm(w)
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    phi_vec = c * phase * psi.vector + math.sqrt(1 - c * c) * w
    return psi, Ray(phi_vec / np.linalg.norm(phi_vec))

# 1. Jacobi vs numpy on random Hermitian matrices
for trial in range(200):
    d = rng.integers(2, 9)
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = hermitize(m)
    mine = hermitian_eigenvalues(h)
    ref = np.linalg.eigvalsh(h)
    assert np.max(np.abs(mine - ref)) < 1e-10, (trial, np.max(np.abs(mine - ref)))
print("jacobi ok")

# 2. tetrahedron
tet_vecs = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
tet = [Ray(np.array(v) / math.sqrt(3), f"t{i}") for i, v in enumerate(tet_vecs)]
g = gram(tet)
assert np.allclose(g - np.eye(4), (1 / 3) * (np.ones((4, 4)) - np.eye(4)), atol=1e-12), g
spec = projector_sum_spectrum(tet)
print("tetra spectrum:", spec.eigenvalues)
assert abs(spec.lambda_min - 4 / 3) < 1e-12 and abs(spec.lambda_max - 4 / 3) < 1e-12
v = fkrs_check(tet, 1)
print("tetra verdict:", v)
assert v.M == 1 and v.is_fkrs

# 3. nine omega
w = np.exp(2j * np.pi / 3)
nine_raw = [(0, 1, -1), (1, 0, -1), (1, -1, 0),
            (0, 1, -w), (1, 0, -w), (1, -w, 0),
            (0, 1, -w * w), (1, 0, -w * w), (1, -w * w, 0)]
nine = [Ray.from_components(np.array(vec, dtype=complex), f"n{i}") for i, vec in enumerate(nine_raw)]
gn = gram(nine)
off = gn[~np.eye(9, dtype=bool)]
print("nine-omega gram offdiag range:", off.min(), off.max())
assert np.all(np.abs(off - 0.5) < 1e-10)
spec9 = projector_sum_spectrum(nine)
print("nine-omega spectrum:", spec9.eigenvalues)
assert abs(spec9.lambda_min - 3) < 1e-9
v9 = fkrs_check(nine, 2)
assert v9.M == 1 and v9.is_fkrs
v9a = fkrs_check(nine, 1)
print("nine at order 1:", v9a.M, v9a.is_fkrs)
assert v9a.M == 9 and not v9a.is_fkrs

# 4. gadget: chain overlaps, C=2nI, for random pairs and orders
for trial in range(300):
    n = int(rng.integers(1, 4))
    dn = float(delta(n))
    c = rng.uniform(0, dn)
    if trial % 7 == 0:
        c = dn  # boundary: u = 0
    psi, phi = random_pair_with_overlap(c)
    theta = rng.uniform(0, 2 * np.pi) if trial % 3 == 0 else 0.0
    model = build_pair_model(psi, phi, n, theta=theta)
    C = pair_operator_C(model)
    assert np.max(np.abs(C.entries - 2 * n * np.eye(3))) < 1e-10
    b = pair_inequality_bounds(model)
    assert abs(b.quantum_max - (2 * n + 1 + c)) < 1e-9, (n, c, b)
print("gadget invariants ok (300 random models, theta varied)")

# 5. equivariance under common unitary + theta independence of Gram
def random_unitary(dim=3):
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))

max_dev_u = 0.0
max_dev_theta = 0.0
for trial in range(40):
    n = int(rng.integers(1, 3))
    c = rng.uniform(0, float(delta(n)))
    psi, phi = random_pair_with_overlap(c)
    model = build_pair_model(psi, phi, n)
    g0 = gram(model.rays)
    u = random_unitary()
    psi_u = Ray(u @ psi.vector)
    phi_u = Ray(u @ phi.vector)
    model_u = build_pair_model(psi_u, phi_u, n)
    max_dev_u = max(max_dev_u, float(np.max(np.abs(gram(model_u.rays) - g0))))
    model_t = build_pair_model(psi, phi, n, theta=rng.uniform(0, 2 * np.pi))
    max_dev_theta = max(max_dev_theta, float(np.max(np.abs(gram(model_t.rays) - g0))))
print("equivariance max dev:", max_dev_u, "theta-independence max dev:", max_dev_theta)
assert max_dev_u < 1e-8 and max_dev_theta < 1e-8

# 6. Clifton case structure: n=1, c=1/3 boundary -> inner pair orthogonal
psi, phi = random_pair_with_overlap(1 / 3)
m1 = build_pair_model(psi, phi, 1)
print("clifton chain overlap:", abs(inner(*m1.chain[0])))
assert abs(inner(*m1.chain[0])) < 1e-10
print("coincidences:", m1.coincidences)

# 7. n=2 c=0.45: level-2 chain overlap = delta_1 = 1/3
psi, phi = random_pair_with_overlap(0.45)
m2 = build_pair_model(psi, phi, 2)
print("n2 chain overlaps:", [abs(inner(a, b)) for a, b in m2.chain])
assert abs(abs(inner(*m2.chain[1])) - 1 / 3) < 1e-10

# 8. appendix-A bound: random configurations never exceed; witness attains
def config_ratio(delta_val, z_mag=None):
    e = np.array([1.0, 0, 0], dtype=complex)
    f = np.array([delta_val, math.sqrt(1 - delta_val**2), 0], dtype=complex)
    ghat = np.cross(np.conj(e), np.conj(f))
    ghat = ghat / np.linalg.norm(ghat)
    if z_mag is None:
        a = rng.normal(size=3) + 1j * rng.normal(size=3)
        a = a / np.linalg.norm(a)
    else:
        x = math.sqrt((1 - z_mag**2) / (2 * (1 + delta_val)))
        a = x * e + x * f + z_mag * ghat
        a = a / np.linalg.norm(a)
    ae = np.vdot(e, a)
    af = np.vdot(f, a)
    b = np.cross(np.conj(a) - np.conj(ae) * np.conj(e), np.conj(a) - np.conj(af) * np.conj(f))
    nb = np.linalg.norm(b)
    if nb < 1e-12:
        return None
    return abs(np.vdot(a, np.conj(b))) / nb     # |a* . b| / |b|

for dv in (0.0, 1 / 3, 1 / 2):
    bound = (1 + dv) / (3 - dv)
    worst = 0.0
    for _ in range(4000):
        r = config_ratio(dv)
        if r is not None:
            worst = max(worst, r)
    wit = config_ratio(dv, z_mag=math.sqrt((1 - dv) / (3 - dv)))
    print(f"delta={dv:.3f} bound={bound:.6f} worst_random={worst:.6f} witness={wit:.9f}")
    assert worst <= bound + 1e-9
    assert abs(wit - bound) < 1e-9

print("ALL DEV CHECKS PASSED")
