# %% [markdown]
# What a broken datum looks like.
#
# broken_J doubles one coefficient of J.  The checker pins the damage on a
# single axiom and names a basis witness; building anyway gives a
# non-associative product, so the axioms are doing real work.

# %%
from lrcross import build_crossed_product, builtin_instance, check_all, validate_algebra

d = builtin_instance("broken_J")
report = check_all(d, max_witnesses=3)
for r in report.results:
    if not r.holds:
        w = r.witness
        names = [d.U.label(i) if s == "U" else d.H.label(i) for s, i in zip(w.input_spaces, w.inputs)]
        print(r.label, "fails at", tuple(names))
        show = lambda t: {idx: d.field.format(c) for idx, c in t.nonzero()}
        print("  lhs", show(w.lhs), "rhs", show(w.rhs))

# %%
forced = build_crossed_product(d, require_axioms=False)
failure = validate_algebra(forced).failures[0]
print(failure.law, "breaks at", tuple(forced.label(i) for i in failure.witness))
