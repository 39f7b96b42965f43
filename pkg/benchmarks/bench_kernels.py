"""Compare the compiled and pure-Python letter kernels.

    python benchmarks/bench_kernels.py [--words N] [--length L] [--repeat R]
"""

import argparse
import random
import sys
import timeit

from psfknots import _kernels_py as pure
from psfknots import kernels
from psfknots.acceptance import random_automorphic_image
from psfknots.words import CyclicWord


def workload(count, length, seed):
    # automorphic images of A^2B^3 padded up to the target length
    rng = random.Random(seed)
    base = CyclicWord.parse("A^2B^3")
    out = []
    while len(out) < count:
        w = random_automorphic_image(rng, base, max_len=length, steps=4 * length)
        if w.length >= length // 2:
            out.append(w.letters())
    return out


def bench(impl, words, repeat):
    def run_minimize():
        for w in words:
            impl.minimize_letters(w)

    def run_images():
        for w in words:
            for code in range(4):
                impl.image_cyclic_length(w, code)

    return (min(timeit.repeat(run_minimize, number=1, repeat=repeat)),
            min(timeit.repeat(run_images, number=1, repeat=repeat)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=400)
    ap.add_argument("--length", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    compiled = kernels.compiled()
    if compiled is None:
        print("compiled kernels not built; run pip install -e . first", file=sys.stderr)
        return 1
    words = workload(args.words, args.length, args.seed)
    for w in words[:20]:
        assert list(pure.minimize_letters(w)[0]) == list(compiled.minimize_letters(w)[0])
    mean_len = sum(map(len, words)) / len(words)
    print(f"{len(words)} words, mean length {mean_len:.0f}, best of {args.repeat}")
    print(f"{'kernel':<22}{'pure (s)':>10}{'cython (s)':>12}{'speedup':>10}")
    rows = zip(("minimize_letters", "image_cyclic_length x4"),
               bench(pure, words, args.repeat), bench(compiled, words, args.repeat))
    for name, tp, tc in rows:
        print(f"{name:<22}{tp:>10.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
