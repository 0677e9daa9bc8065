# # Functional repair with random coefficients
#
# Nodes keep their coding vectors. After each repair we check that every
# combination the rank profile allows still has full rank.

import itertools

import numpy as np

from coopregen import SystemParams
from coopregen.codes import (majorized_vectors, regularity_check, rlnc_decode, rlnc_init,
                             rlnc_repair)
from coopregen.flowgraph import profile
from coopregen.gf import GF

p = SystemParams(5, 3, 2, 2)
f = GF(2 ** 16)
prof = profile("second", 0, p)
print(prof.entries, len(majorized_vectors(prof.entries)), "vectors to check")

rng = np.random.default_rng(3)
x = f.random((prof.B, 2), rng)
st = rlnc_init(p, prof, f, seed=3, chunk=x)
for stage in range(5):
    failed = sorted(rng.choice(np.arange(1, 6), 2, replace=False).tolist())
    st, log = rlnc_repair(st, failed, seed=stage)
    ok = all(np.array_equal(rlnc_decode(st, s), x) for s in itertools.combinations(range(1, 6), 2))
    print(stage + 1, failed, regularity_check(st), ok, log.total)
