"""Locate the source of the ~2e-8 Gram deviation."""
import math
import warnings
import numpy as np

from kscert.rays import Ray, inner, gram
from kscert.thresholds import delta
from kscert.gadget import build_pair_model

warnings.filterwarnings("ignore")
rng = np.random.default_rng(7)

def random_ray(dim=3, label=""):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return Ray(v / np.linalg.norm(v), label)

def random_pair_with_overlap(c, dim=3):
    psi = random_ray(dim)
    w = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    w = w - np.vdot(psi.vector, w) * psi.vector
    w = w / np.linalg.norm(w)
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    phi_vec = c * phase * psi.vector + math.sqrt(1 - c * c) * w
    return psi, Ray(phi_vec / np.linalg.norm(phi_vec))

worst = (0.0, None)
for trial in range(200):
    n = int(rng.integers(1, 3))
    c = rng.uniform(0, float(delta(n)))
    psi, phi = random_pair_with_overlap(c)
    model = build_pair_model(psi, phi, n)
    g0 = gram(model.rays)
    model_t = build_pair_model(psi, phi, n, theta=rng.uniform(0, 2 * np.pi))
    dev = np.abs(gram(model_t.rays) - g0)
    d = float(np.max(dev))
    if d > worst[0]:
        i, j = np.unravel_index(np.argmax(dev), dev.shape)
        worst = (d, (trial, n, c, int(i), int(j), model.wiring.labels[i], model.wiring.labels[j], g0[i, j]))
print("worst theta dev:", worst)

# inspect the worst-label pattern across many trials
from collections import Counter
cnt = Counter()
for trial in range(300):
    n = 2
    c = rng.uniform(0, float(delta(n)))
    psi, phi = random_pair_with_overlap(c)
    model = build_pair_model(psi, phi, n)
    g0 = gram(model.rays)
    model_t = build_pair_model(psi, phi, n, theta=1.234)
    dev = np.abs(gram(model_t.rays) - g0)
    i, j = np.unravel_index(np.argmax(dev), dev.shape)
    if dev[i, j] > 1e-10:
        cnt[(model.wiring.labels[i], model.wiring.labels[j])] += 1
print(cnt.most_common(8))

# hypothesis: normalization of nearly-degenerate cross products?
# check |g| values of the completions for a bad case
n = 2
c = 0.49
psi, phi = random_pair_with_overlap(c)
m0 = build_pair_model(psi, phi, n)
mt = build_pair_model(psi, phi, n, theta=2.0)
g0, gt = gram(m0.rays), gram(mt.rays)
dev = np.abs(gt - g0)
print("max dev:", dev.max())
lbl = m0.wiring.labels
for i in range(len(lbl)):
    for j in range(i + 1, len(lbl)):
        if dev[i, j] > 1e-9:
            print(f"  {lbl[i]:6s} {lbl[j]:6s} dev={dev[i,j]:.3e} val={g0[i,j]:.6f}")
