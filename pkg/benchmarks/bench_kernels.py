#!/usr/bin/env python3
"""Benchmark the compiled text kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Workloads approximate the two hot paths: ingesting Q&A titles/answers
(stemming + splitting) and scanning result files (neutralize + identifiers).
"""

from __future__ import annotations

import argparse
import random
import time

from rack import _native

try:
    from rack import _speedups
except ImportError:  # pragma: no cover
    _speedups = None


def make_words(n: int) -> list[str]:
    rng = random.Random(42)
    suffixes = ["", "ing", "ed", "es", "ation", "ness", "izer", "ful", "ly", "ational"]
    stems = ["parse", "read", "hash", "download", "connect", "format", "token",
             "buffer", "stream", "digest", "relate", "operate", "sense", "triple"]
    return [rng.choice(stems) + rng.choice(suffixes) for _ in range(n)]


def make_camel_text(n: int) -> str:
    rng = random.Random(43)
    parts = ["Message", "Digest", "Buffered", "Reader", "Html", "Parser", "get",
             "instance", "to", "Hex", "URL", "Connection", "read", "Line", "SHA256"]
    out = []
    for _ in range(n):
        out.append("".join(rng.choice(parts) for _ in range(rng.randint(1, 4))))
    return " ".join(out)


def make_java_source(n_methods: int) -> str:
    lines = ["public class Bench {"]
    for i in range(n_methods):
        lines += [
            f"    // helper {i} with a brace {{ in a comment",
            f'    public int method{i}(String input) {{',
            f'        String label = "literal {{ with braces }} and \\"quotes\\" {i}";',
            "        /* block comment",
            "           spanning lines } */",
            "        return input.length();",
            "    }",
        ]
    lines.append("}")
    return "\n".join(lines)


def bench(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernels not built; run `pip install -e .` first")
        return

    words = make_words(50_000)
    camel = make_camel_text(20_000)
    source = make_java_source(600)

    workloads = [
        ("porter_stem x50k words", lambda m: [m.porter_stem(w) for w in words]),
        ("split_subtokens 20k idents", lambda m: m.split_subtokens(camel)),
        ("find_identifiers ~40kB java", lambda m: m.find_identifiers(source)),
        ("neutralize_java ~40kB java", lambda m: m.neutralize_java(source)),
    ]

    print(f"{'workload':<30} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}")
    for name, runner in workloads:
        pure = bench(runner, (_native,), args.repeat)
        fast = bench(runner, (_speedups,), args.repeat)
        print(f"{name:<30} {pure * 1e3:>10.2f} {fast * 1e3:>14.2f} {pure / fast:>7.1f}x")

    # sanity: identical outputs on these workloads
    assert [_native.porter_stem(w) for w in words] == [_speedups.porter_stem(w) for w in words]
    assert _native.split_subtokens(camel) == _speedups.split_subtokens(camel)
    assert _native.find_identifiers(source) == _speedups.find_identifiers(source)
    assert _native.neutralize_java(source) == _speedups.neutralize_java(source)
    print("outputs identical across backends")


if __name__ == "__main__":
    main()
