"""Compare the compiled reduction kernel against the pure-Python fallback.

Both backends are loaded directly (no environment tricks) and run on the
same workload: repeated normal-form reduction of the degree-12 central
relation residue and of random degree-10 polynomials.

Usage: python3 benchmarks/bench_reduce.py [--repeats N]
"""

import argparse
import random
import time

from cubiclifford._kernel import pyreduce
from cubiclifford.center import central_elements, formal_discriminant_nc
from cubiclifford.fields import make_field
from cubiclifford.freealg import NcPoly, clifford_relations
from cubiclifford.rewrite import complete

try:
    from cubiclifford._kernel import _fastreduce
except ImportError:
    _fastreduce = None


def build_workload(field, system):
    z = central_elements(field)
    delta = formal_discriminant_nc(field)
    big = z.z4.mul(z.z4).sub(z.z5.pow(3)).add(delta.scale(field.of(27)))
    polys = [big]
    rng = random.Random(0)
    for _ in range(30):
        polys.append(NcPoly(field, {
            "".join(rng.choice("xy") for _ in range(rng.randrange(1, 11))):
                rng.randrange(1, field.p)
            for _ in range(12)}))
    enc = system.order.encode
    rules = tuple(
        (enc(r.lead),
         tuple((enc(w), c) for w, c in sorted(r.tail.terms.items())))
        for r in system.rules)
    terms = [tuple((enc(w), c) for w, c in sorted(p.terms.items()))
             for p in polys]
    return rules, terms


def run(kernel, rules, terms, p, repeats):
    t0 = time.perf_counter()
    out = []
    for _ in range(repeats):
        out = [kernel.reduce_terms(t, rules, p) for t in terms]
    return time.perf_counter() - t0, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--prime", type=int, default=13)
    args = parser.parse_args()

    field = make_field("prime", args.prime)
    system = complete(clifford_relations(field), degree_bound=13)
    rules, terms = build_workload(field, system)

    t_py, out_py = run(pyreduce, rules, terms, field.p, args.repeats)
    print(f"pure python : {t_py:8.3f} s "
          f"({args.repeats} repeats, {len(terms)} polynomials)")

    if _fastreduce is None:
        print("compiled    : unavailable (extension not built)")
        return

    t_cy, out_cy = run(_fastreduce, rules, terms, field.p, args.repeats)
    print(f"compiled    : {t_cy:8.3f} s")
    print(f"speedup     : {t_py / t_cy:8.2f}x")
    assert out_py == out_cy, "backends disagree on the last normal form"
    print("both backends agree on every normal form")


if __name__ == "__main__":
    main()
