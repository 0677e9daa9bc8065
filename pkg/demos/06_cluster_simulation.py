# # A small cluster over many stages
#
# Random batches of r failures, cooperative repair, and a full recovery audit
# after every stage. The state can be saved and picked up later.

import tempfile

from coopregen import SystemParams
from coopregen.core import fmt
from coopregen.storagesim import SimConfig, compare_repair_modes, load, run, save

cfg = SimConfig(SystemParams(5, 3, 3, 2), "mscr", 256, stages=5, seed=7)
rep, state = run(cfg)
for s in rep.stages:
    print(s["stage"], s["failed"], s["total"], s["audit_ok"])
print("normalized gamma, alpha:", fmt(rep.gamma_norm), fmt(rep.alpha_norm))

with tempfile.TemporaryDirectory() as d:
    save(state, d)
    again = load(d)
    print("reloaded at stage", again.stage)

# Repair traffic per node at minimum storage, n=7, k=3, three failures.
for mode, v in compare_repair_modes().items():
    print(mode, fmt(v))
