"""Compare basis cycle closure with the all-simple-paths oracle on random flows.

    python scripts/closure_vs_paths.py --trials 2000 --max-nodes 8
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from ledgerkernel import EdgeFlow, check_cycle_closure, check_path_independence_bruteforce, gradient
from ledgerkernel.graph import build_graph


@dataclass
class Config:
    trials: int = 500
    max_nodes: int = 8
    closed_fraction: float = 0.5
    seed: int = 0


def random_graph(rng, n):
    nodes = list(range(n))
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    p = rng.uniform(0.1, 0.8)
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return build_graph(nodes, edges)


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    tally = Counter()
    t_basis = t_brute = 0.0
    for _ in range(cfg.trials):
        g = random_graph(rng, rng.randint(2, cfg.max_nodes))
        if rng.random() < cfg.closed_fraction:
            f = gradient({v: rng.randint(-9, 9) for v in g.nodes}, g)
        else:
            f = EdgeFlow.from_directed(g, {e: rng.randint(-2, 2) for e in g.undirected})
        t = time.perf_counter()
        a = check_cycle_closure(f).closed
        t_basis += time.perf_counter() - t
        t = time.perf_counter()
        b = check_path_independence_bruteforce(f)
        t_brute += time.perf_counter() - t
        tally[(a, b)] += 1
    return tally, t_basis, t_brute


def main():
    ap = argparse.ArgumentParser()
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args()))
    tally, tb, tf = run(cfg)
    agree = tally[(True, True)] + tally[(False, False)]
    print(f"trials={cfg.trials} agree={agree} closed={tally[(True, True)]} open={tally[(False, False)]}")
    print(f"disagree={cfg.trials - agree}")
    print(f"basis_seconds={tb:.3f} bruteforce_seconds={tf:.3f}")


if __name__ == "__main__":
    main()
