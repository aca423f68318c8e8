"""Compare the compiled and pure-Python kernels on random games.

    python benchmarks/bench_kernels.py [--n 10] [--games 20] [--seed 0]
"""

import argparse
import random
import timeit

from simplegames import kernels


def random_game(n, rng, density=0.5):
    size = 1 << n
    table = bytes(1 if rng.random() < density else 0 for _ in range(size))
    return table, [m for m in range(size) if table[m]]


def monotone_game(n, rng):
    # winning iff the weighted sum clears a quota: sparse minimal sets, harder covers
    weights = [rng.randint(1, 5) for _ in range(n)]
    quota = sum(weights) // 2 + 1
    size = 1 << n
    table = bytes(1 if sum(w for i, w in enumerate(weights) if m >> i & 1) >= quota else 0 for m in range(size))
    return table, [m for m in range(size) if table[m]]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--games", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    games = [random_game(args.n, rng) for _ in range(args.games // 2)]
    games += [monotone_game(args.n, rng) for _ in range(args.games - len(games))]
    full = (1 << args.n) - 1
    backends = kernels.backends()

    jobs = {
        "determining_strings": lambda k: [k.determining_strings(t, args.n) for t, _ in games],
        "subset_certificates": lambda k: [k.subset_certificates(t, args.n) for t, _ in games],
        "min_empty_intersection": lambda k: [k.min_empty_intersection(w, full) for _, w in games],
    }
    print(f"n={args.n} games={len(games)} backends={sorted(backends)}")
    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name in sorted(backends)) + f"{'speedup':>10}")
    for job, fn in jobs.items():
        times = {}
        results = {}
        for name, k in sorted(backends.items()):
            results[name] = fn(k)
            times[name] = min(timeit.repeat(lambda: fn(k), number=1, repeat=3))
        if len(results) > 1:
            first, *rest = results.values()
            norm = lambda r: [list(x) if job == "subset_certificates" else x for x in r]  # noqa: E731
            assert all(norm(r) == norm(first) for r in rest), f"{job}: backends disagree"
        speed = f"{times['python'] / times['cython']:.1f}x" if "cython" in times else "-"
        print(f"{job:<24}" + "".join(f"{times[name] * 1e3:>10.1f}ms" for name in sorted(times)) + f"{speed:>10}")


if __name__ == "__main__":
    main()
