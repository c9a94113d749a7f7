import sys

# solvers raise the recursion limit for decomposition-deep inputs; pin it
# high before hypothesis snapshots the value so tests never mutate it
sys.setrecursionlimit(120_000)
