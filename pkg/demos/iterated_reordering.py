# %% [markdown]
# An iterated crossed product lives on W ⊗ H ⊗ V, but the general
# construction works on (W ⊗ V) ⊗ H.  Moving basis vectors along
# (w ⊗ v) ⊗ h ↦ w ⊗ h ⊗ v turns one multiplication table into the other.

# %%
import numpy as np

from lrcross import build_crossed_product, builtin_source, from_iterated
from lrcross.constructions import iterated_whv_order

src = builtin_source("iterated_sign")
A = build_crossed_product(from_iterated(src))
pos = iterated_whv_order(src)
print("basis (W⊗V)⊗H :", A.labels)
print("lands at W⊗H⊗V:", pos)

# %% structure constants after the move, as an integer cube
mu = np.array([[[int(A.mu[i, j, k]) for k in range(8)] for j in range(8)] for i in range(8)])
moved = np.zeros_like(mu)
moved[np.ix_(pos, pos, pos)] = mu
print("nonzero entries:", int(np.count_nonzero(moved)), "of", moved.size)
