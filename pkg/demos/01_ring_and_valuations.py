# The module ring Z[x, x^-1, (x+1)^-1, (x+2)^-1, 1/2] of G_2 and its valuations.
from metabelian import g_n_setup, val_eval, fadic, degree, padic, char_of_valuation
from metabelian.polynomial import poly_resultant

G2 = g_n_setup(2)
print("setup:", G2.k, [str(f) for f in G2.f], "beta =", G2.beta)

# %% pairwise resultants are powers of k, which is what makes the f_i coprime in Z[1/k][x]
for i in range(3):
    for j in range(i + 1, 3):
        print(f"Res({G2.f[i]}, {G2.f[j]}) =", poly_resultant(G2.f[i], G2.f[j]))

# %% elements are stored as numer * prod f_i^e_i * k^kexp with the f_i pulled out
a = G2.element(1, [-1, 0, 0])          # 1/x
b = G2.element(1, [0, -1, 0])          # 1/(x+1)
print("1/x + 1/(x+1) =", a + b)
print("(x^2+x)/x     =", G2.element("x^2+x", [-1, 0, 0]))
print("6             =", G2.element(6))  # 3 * 2

# %% valuations: v_i counts f_i, w is minus the degree
e = (a + b) * G2.element("x+2") ** 2
for v in (fadic(0), fadic(1), fadic(2), degree()):
    print(f"{v}({e}) = {val_eval(v, e)}")
print("p2(12/8) =", val_eval(padic(2), G2.element(12, kexp=-3)))

# %% each valuation gives a character of Q on the basis (q_-1, q0, q1, q2)
for v in (degree(), fadic(0), fadic(1), fadic(2)):
    print(v, "->", char_of_valuation(v, G2))
