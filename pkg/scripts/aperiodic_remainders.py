"""Growth of a conjugate of the greedy remainders of 1 for beta = (6/5, 5 delta/6).

delta is the real root of x^6 - x^5 - 1.  Two conjugates gamma of delta have
|gamma| > 1; once |psi(r_n(1))| exceeds |gamma|^5 / (|gamma|^6 - 1) along the
phase-1 positions n = 12j - 1, it keeps growing, so the remainders cannot repeat
and the greedy expansion of 1 is not eventually periodic.

    python3 scripts/aperiodic_remainders.py [max_n]
"""
import sys
from fractions import Fraction

from altbase.expansion import AlternateBase, greedy_expand
from altbase.numberfield import conjugate_embed, field_new


def main(argv):
    max_n = int(argv[1]) if len(argv) > 1 else 200
    f = field_new([-1, 0, 0, 0, 0, -1, 1], (1, 2))
    d = f.gen
    b = AlternateBase([f(Fraction(6, 5)), d * Fraction(5, 6)], f)
    k = next(j for j in range(f.degree - 1) if conjugate_embed(d, j, 80).abs_lower(80) > 1)
    g = conjugate_embed(d, k, 80)
    lo, hi = g.abs_lower(80), g.abs_upper(80)
    print(f"|gamma| in [{float(lo):.10f}, {float(hi):.10f}]")
    print(f"threshold in [{float(hi ** 5 / (hi ** 6 - 1)):.6f}, {float(lo ** 5 / (lo ** 6 - 1)):.6f}]")
    res = greedy_expand(1, b, step_cap=max_n + 1)
    print(f"status after {max_n + 1} digits: {res.status}")
    print("n,|psi(r_n)|_lo,|psi(r_n)|_hi")
    for n in range(11, max_n + 1, 12):
        box = conjugate_embed(res.remainders[n], k, 40)
        print(f"{n},{float(box.abs_lower(40)):.6f},{float(box.abs_upper(40)):.6f}")


if __name__ == "__main__":
    main(sys.argv)
