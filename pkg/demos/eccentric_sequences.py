"""Which sorted integer lists are eccentric sequences of trees?"""
from itertools import combinations_with_replacement

from ecctree import (InvalidSequence, build_extremal, ecc_profile, free_trees,
                     of_tree, to_edge_list, validate_sorted)

# %% a few hand-picked lists
for seq in ([1, 2, 2, 2], [2, 2, 3, 3, 3], [2, 2, 2, 3, 3], [2, 3, 3, 4], [4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7]):
    try:
        print(seq, "->", validate_sorted(seq))
    except InvalidSequence as exc:
        print(seq, "-> rejected:", exc.reason)

# %% every accepted list at n = 9 is realised by some tree, and nothing else is
n = 9
accepted = set()
for seq in combinations_with_replacement(range(1, n), n):
    try:
        accepted.add(validate_sorted(seq))
    except InvalidSequence:
        pass
realised = {of_tree(t) for t in free_trees(n)}
print(f"n={n}: {len(accepted)} accepted, {len(realised)} realised, equal={accepted == realised}")

# %% the caterpillar built for a sequence realises it
s = validate_sorted([4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7])
t = build_extremal(s)
print(to_edge_list(t, [f"T({s})"]))
print("eccentricities", ecc_profile(t).eccentricities)
