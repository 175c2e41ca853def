# Finite pieces of the tree of v0: lines of labels, merged below their meeting height.
from metabelian import GroupElement, QMonomial, act_on_vertex, g_n_setup, line_intersection_sup, tree_ball, tree_context
from metabelian.geometry import TreeVertex

G2 = g_n_setup(2)
ctx = tree_context(G2, 0)
print("v =", ctx.v, " q_v =", ctx.q_v, " beta =", ctx.beta)

zero, one, x2 = G2.zero(), G2.one(), G2.element("x^2")
print("lines of 0 and 1 agree up to height", line_intersection_sup(ctx, zero, one))
print("lines of 0 and x^2 agree up to height", line_intersection_sup(ctx, zero, x2))

ball = tree_ball(ctx, [zero, one], (0, 6))
print(f"ball: {len(ball.vertices)} vertices, {len(ball.edges)} edges, tree: {ball.is_tree()}")
for i, (z, label) in enumerate(ball.vertices):
    print(f"  {i}: height {z}, label {label}")

# %% three seeds; the window is lowered automatically if lines only meet further down
ball = tree_ball(ctx, [zero, one, x2], (6, 9))
print("heights used:", ball.window, "vertices:", len(ball.vertices), "edges:", ball.edges)

# %% G acts on the right; heights move by v(q)
vert = TreeVertex(ctx, 2, G2.element("x+3"))
g = GroupElement(G2.element(1, [0, -1, 0]), QMonomial((0, 1, 1, 0)))
moved = act_on_vertex(vert, g)
print(vert, "*", (str(g.a), str(g.q)), "->", moved)
