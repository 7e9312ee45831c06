"""Fixed order and diameter: T(d,n) is extremal for every index in the family."""
from ecctree import SteinerIndex, WeightFunction, build_Tdn, to_edge_list, verify_diameter

n = 10
print(to_edge_list(build_Tdn(n, 5), ["T(5,10)"]))

specs = [WeightFunction("hyper"), WeightFunction("genw", 2), WeightFunction("harary"),
         WeightFunction("genw", -1), WeightFunction("rcw")]
print("d  trees  " + "  ".join(s.spec() for s in specs))
for d in range(2, n):
    reports = [verify_diameter(n, d, s) for s in specs]
    flags = ["ok" if r.passed and len(r.classes[0].attainers) == 1 else "--" for r in reports]
    print(f"{d}  {reports[0].tree_count:5d}  " + "  ".join(f"{f:>{len(s.spec())}}" for f, s in zip(flags, specs)))

# %% Steiner: unique minimiser only while k <= n - ceil(d/2)
d = 7
for k in range(2, n):
    rec = verify_diameter(n, d, SteinerIndex(k)).classes[0]
    print(f"d={d} k={k}: {len(rec.attainers)} minimiser(s)")
