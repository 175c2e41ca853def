# H^2(Q, A) for one block: the closed form next to the fixed-point count.
from metabelian import coinvariants_reduce, fixed_point_order, g_n_setup, h2_report, setup_validate

for n in range(2, 7):
    rep = h2_report(g_n_setup(n))
    print(f"G_{n}: k-1 = {g_n_setup(n).k - 1}, closed form {rep.theorem_c}, fixed points {rep.fixed_points}")

k4 = setup_validate({"k": 4, "blocks": [[[0, 1], [2, 1, 1]]]})
print("k=4, f = x, x^2+x+2:", h2_report(k4))
print("x+5 in A/3A:", coinvariants_reduce(k4, k4.element("x+5")))

# %% a case where the two answers differ: 10 = 4 mod 6 is not 1, but it fixes Z/3
k7 = setup_validate({"k": 7, "blocks": [[[0, 1], [7, 2, 1]]]})
rep = h2_report(k7)
print("k=7, f = x, x^2+2x+7:", rep.theorem_c, "vs", rep.fixed_points, "agree:", rep.agree)

# %% the count over a range of k for a single value f(1) = 4
print([(k, fixed_point_order(k, [4]).order) for k in range(2, 20)])
