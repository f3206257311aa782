"""Count the crystal graph of B(Λ_i) by breadth-first search from the empty
diagram and compare layer sizes with the n-regular partition counts.

    python3 scripts/crystal_walk.py --n 3 --i 1 --depth 12
"""
import argparse

from sldecomp.crystal import ExtendedYoungDiagram, Partition, apply_f, regular_partitions


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--depth", type=int, default=10)
    args = p.parse_args()
    layer = {ExtendedYoungDiagram(Partition(), args.i, args.n)}
    for m in range(args.depth + 1):
        want = sum(1 for _ in regular_partitions(args.n, m))
        flag = "" if len(layer) == want else "  <-- mismatch"
        print(f"boxes={m:<3d} reached={len(layer):<6d} regular={want}{flag}")
        layer = {d2 for d in layer for j in range(args.n) if (d2 := apply_f(d, j)) is not None}


if __name__ == "__main__":
    main()
