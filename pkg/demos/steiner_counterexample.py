"""Steiner-Wiener indices and where uniqueness of the minimiser stops."""
import math

from ecctree import (counterexample_pair, is_isomorphic, of_tree, sw_k_bruteforce,
                     sw_k_formula, to_edge_list, verify_steiner)

t1, t2 = counterexample_pair(11, 7)
print(to_edge_list(t1, ["T1"]))
print(to_edge_list(t2, ["T2"]))
print("same sequence:", of_tree(t1) == of_tree(t2), " isomorphic:", is_isomorphic(t1, t2))

# edge-split formula against summing over all subsets
for k in range(2, 11):
    a, b = sw_k_formula(t1, k), sw_k_formula(t2, k)
    assert a == sw_k_bruteforce(t1, k)
    print(f"k={k:2d}  SW(T1)={a:5d}  SW(T2)={b:5d}  {'tie' if a == b else ''}")

threshold = 11 - math.ceil(7 / 2)
print("uniqueness is guaranteed up to k =", threshold)

# %% the class of T1 at k = 8 has more than one minimiser
report = verify_steiner(11, 8, only=[of_tree(t1)])
rec = report.classes[0]
print(rec.key, "minimisers:", len(rec.attainers), "flags:", rec.flags)
