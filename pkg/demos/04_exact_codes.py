# # Two exact-repair codes
#
# First a 4-node code over GF(5) storing two symbols per node, then a binary
# code storing 15 bits on 5 nodes.

import numpy as np

from coopregen import SystemParams
from coopregen.codes import (make_mbcr, make_mscr, mbcr_encode, mbcr_repair, mscr_decode,
                             mscr_encode, mscr_repair)
from coopregen.gf import GF

code = make_mscr(SystemParams(4, 2, 2, 2), GF(5),
                 [[[1, 0], [0, 1], [1, 1], [2, 1]], [[1, 0], [0, 1], [2, 1], [1, 1]]])
x = np.array([3, 1, 4, 2])
nodes = mscr_encode(code, x)
for i, v in nodes.items():
    print(i, v)

new, log = mscr_repair(code, nodes, [1, 2])
print("repair traffic:", log.phase1_symbols, "+", log.phase2_symbols)
print(mscr_decode(code, {3: nodes[3], 4: nodes[4]}))

# Binary code with one parity row per group; the diagonal cell is stored raw.
H = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
bcode = make_mbcr(SystemParams(5, 3, 3, 2), GF(2), [H] * 5)
bits = np.random.default_rng(0).integers(0, 2, 15)
bnodes = mbcr_encode(bcode, bits)
_, blog = mbcr_repair(bcode, bnodes, [4, 5])
print("bits moved:", blog.total)
