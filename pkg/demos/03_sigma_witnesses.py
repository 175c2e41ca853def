# Centralizer witnesses: lambda in ZQ acting as 1 on A and positive under v.
import time

from metabelian import Character, centralizer_witness_search, g_n_setup, verify_theoremB

G2 = g_n_setup(2)

for coords in [(-1, 0, 0, 0), (0, 1, -1, 0), (1, 1, 0, 0), (0, 0, 1, 0), (0, -1, -1, -1)]:
    v = Character(coords)
    verdict = centralizer_witness_search(G2, v)
    print(v, "->", verdict)
    if verdict.in_sigma:
        # the witness is self-checking: its image is 1 and v > 0 on its support
        print("    image:", verdict.witness.image(G2), " min v:", verdict.witness.min_value(v))

# %% sweep a grid of classes against the known description of Sigma^c
t = time.perf_counter()
report = verify_theoremB(G2, grid_resolution=2, max_classes=200)
print(f"{len(report.rows)} classes in {time.perf_counter() - t:.1f}s:",
      len(report.inside), "inside the family (no witness),",
      len(report.outside), "outside (witness found),",
      len(report.anomalies), "anomalies")
