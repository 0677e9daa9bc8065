# # Information flow graphs
#
# Each repair stage adds in/mid/out vertices per newcomer. The file can reach a
# data collector only if every cut between the source and it is big enough.

import random

from coopregen import RepairBudget, SystemParams
from coopregen.cutbound import cut_types
from coopregen.flowgraph import (build_graph, max_flow, min_cut_over_types, profile,
                                 random_schedule, worst_case_schedule)

p = SystemParams(6, 4, 3, 2)
b = RepairBudget(19, 7, 2, 1)
sched = [((1, 2), {1: (3, 4, 5, 6), 2: (3, 4, 5, 6)}),
         ((3, 4), {3: (1, 2, 5, 6), 4: (1, 2, 5, 6)})]
g = build_graph(p, b, sched, dc=(1, 2, 3))
print("max flow:", max_flow(g))
print(g.edge_list()[:200])

# Formula over cut types, next to the worst graph for each type.
print("formula:", min_cut_over_types(p, b))
for t in list(cut_types(p))[:5]:
    s, dc = worst_case_schedule(t, p)
    print(t.ells, max_flow(build_graph(p, b, s, dc=dc)))

rng = random.Random(1)
flows = [max_flow(build_graph(p, b, random_schedule(p, 3, rng), dc=rng.sample(range(1, 7), 3)))
         for _ in range(200)]
print("random graphs, lowest flow:", min(flows))
print("profile:", profile("first", 1, p).entries)
