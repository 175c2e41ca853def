# The lattice [[W]], a common label for a vertex of the product of trees, and stabilizers.
from fractions import Fraction

from metabelian import crt_normalize, g_n_setup, orbit_reps, stabilizer_data, val_eval, w_project_ceil
from metabelian.geometry import reduce_to_rep
from metabelian.valuations import degree, fadic

G2 = g_n_setup(2)
print("orbit representatives:", orbit_reps(G2))

point = [Fraction(-5, 2), Fraction(1, 2), Fraction(1), Fraction(1)]
in_w, ceil, bound = w_project_ceil(point, G2)
rep, q = reduce_to_rep(ceil, G2)
print(f"{[str(p) for p in point]}: in W {in_w}, ceil {ceil}, bound {bound}, rep {rep} via {q}")

# %% one label a serving all four trees at once
zero = G2.zero()
labels = [zero, G2.element(1, [-1, 0, 0]), G2.element(1, [0, -1, 0]), zero]
res = crt_normalize(G2, labels, [0, 0, 0, 0])
print("a =", res.a, " a' =", res.a_prime, " t =", res.t)
for name, v, lab in zip(["w", "v0", "v1", "v2"], [degree(), fadic(0), fadic(1), fadic(2)], labels):
    print(f"  {name}(a - a_{name}) = {val_eval(v, res.a - lab)}")

# %% stabilizers of the representative vertices
for sw in range(-G2.beta):
    data = stabilizer_data(G2, sw)
    print(f"s_w = {sw}: free Z[1/2]-module of rank {data.rank}, HNN exponent {data.hnn['relation_exponent']}")
print("first basis elements:", [str(e) for e in stabilizer_data(G2, 0).basis[:3]])
