# %% [markdown]
# An L-R-smash product over Sweedler's four-dimensional Hopf algebra.
#
# The module algebra is the dual H*, acted on by H from both sides.  The
# result is a 16-dimensional algebra; associativity is checked on all 4096
# basis triples.  Acting on H itself by multiplication does not work, because
# h·1 = h moves the unit, and the checker says so.

# %%
import time

from lrcross import (
    BimoduleAlgebraData, FieldSpec, build_crossed_product, builtin_source, check_all, from_lr_smash,
    to_datum, validate_algebra,
)

for field in (FieldSpec.rationals(), FieldSpec.prime(5), FieldSpec.prime(7)):
    t = time.perf_counter()
    d = to_datum(builtin_source("sweedler_lr_smash", field))
    ok = check_all(d).all_hold
    rep = validate_algebra(build_crossed_product(d))
    print(f"{field}: axioms {ok}, {rep.triples_checked} triples ok {rep.ok}, {time.perf_counter() - t:.2f}s")

# %% regular self-action
src = builtin_source("sweedler_lr_smash")
H = src.qb.H
regular = BimoduleAlgebraData(H, H.mu, H.mu)
print("regular actions pass the action checks:", regular.problems(H) == [])
print("but the crossed datum fails:", check_all(from_lr_smash(src.qb, regular)).failed)
