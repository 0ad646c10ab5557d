"""
Building directed graphs and reading their basic statistics
===========================================================

"""

from netcover import graph_stats, parse_edge_list, to_csv, to_json

# a survey-style edge list: "source names target" relationships
text = """source,target
ana,bo
carl,bo
bo,dee
dee,ana
carl,dee
"""

g = parse_edge_list(text, fmt="csv")
print("nodes:", g.nodes)
print("edges:", g.edges)

# duplicates and self-loops are dropped at ingestion, with counts kept
noisy = parse_edge_list("a,b\na,b\na,a", fmt="csv")
print("kept edges:", noisy.edges)
print("dropped:", noisy.ingest)

# in/out neighborhoods come from the same immutable structure
print("who names bo:", sorted(g.in_neighbors("bo")))
print("who bo names:", sorted(g.out_neighbors("bo")))

# density is m / n(n-1); average degree uses the total-degree convention 2m/n
stats = graph_stats(g)
print(f"n={stats.n} m={stats.m}")
print(f"density={stats.density:.4f} avg_degree={stats.avg_degree:.2f}")

# both serializers emit sorted, byte-stable output; json keeps isolated nodes
print(to_csv(g), end="")
print(to_json(g), end="")
