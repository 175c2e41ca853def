# Halfspace tests on the characters V = {w, v0, v1, v2} and tameness of cone families.
import itertools

from metabelian import build_V, g_n_setup, halfspace_test, m_tame_check, sigma_c_theoremB_data, ConeFamily

G2 = g_n_setup(2)
V = build_V(G2)
names = ["w", "v0", "v1", "v2"]
for (c, q), name in zip(V, names):
    print(f"{name} = {c}, q_{name} = {q}, {name}(q_{name}) = {c(q)}")

chars = [c for c, _ in V]
print("sum:", sum(chars[1:], chars[0]))

# %% three of them always fit in an open halfspace, all four never do
for idx in itertools.combinations(range(4), 3):
    ok, u = halfspace_test([chars[i] for i in idx])
    print("{" + ",".join(names[i] for i in idx) + "}", ok, "u =", u)
print("all four:", halfspace_test(chars))

# %% the same fact phrased as tameness of the finite family of classes
fam = ConeFamily.of_classes(chars, names)
for m in (3, 4):
    print(f"V, m={m}:", m_tame_check(fam, m).tame)

# %% the Sigma^c description for n = 2 has continuous families, handled as cones
cones = sigma_c_theoremB_data(2)
for cone in cones:
    print("  ", cone)
res3 = m_tame_check(cones, 3)
res4 = m_tame_check(cones, 4)
print("3-tame:", res3.tame)
print("4-tame:", res4.tame, "certificate:", [str(c) for c in res4.certificate])
