"""Within one eccentric-sequence class the caterpillar T(S) is the optimum."""
from collections import Counter

from ecctree import (WeightFunction, build_extremal, canonical_form, classify_by_sequence,
                     parse_index_spec, verify_wiener_type, wiener_type)

n = 11
groups = classify_by_sequence(n)
sizes = Counter({str(s): len(ts) for s, ts in groups.items()})
print(f"{n}-vertex trees fall into {len(groups)} classes; largest:", sizes.most_common(3))

# %% look inside the largest class by hand
key, trees = max(groups.items(), key=lambda kv: len(kv[1]))
w = WeightFunction("wiener")
values = sorted((wiener_type(t, w).value, canonical_form(t) == canonical_form(build_extremal(key)))
                for t in trees)
print(f"class {key}: smallest W values", values[:4])

# %% the harary index is maximised instead, by the same tree
h = WeightFunction("harary")
best = max(trees, key=lambda t: wiener_type(t, h).value)
print("harary maximiser is T(S):", canonical_form(best) == canonical_form(build_extremal(key)),
      "value", wiener_type(best, h))

# %% the whole order in one call
for spec in ("wiener", "hyper", "harary", "rcw", "genw:-2"):
    report = verify_wiener_type(n, parse_index_spec(spec))
    print(f"{spec:8s} classes={len(report.classes):3d} passed={report.passed}")
