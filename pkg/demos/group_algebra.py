"""Group algebra Q[Z/n]: projections P_d, their antipode symmetry and classes.

    python3 demos/group_algebra.py [n]
"""

import sys
from fractions import Fraction

from hopf_integrals.hopf import build_group_algebra, tensor, tensor_mul_left
from hopf_integrals.integrals import classify_group_like_projection, is_integral_type


def main(n=6):
    G = build_group_algebra(n)
    K = G.field
    print(f"Q[Z/{n}]")
    for d in (d for d in range(1, n + 1) if n % d == 0):
        P = tuple(K(Fraction(d, n)) if k % d == 0 else K.zero for k in range(n))
        lhs = tensor_mul_left(G, None, P, G.coproduct(P))
        print(f"  P_{d}: integral type {is_integral_type(G, P)}, "
              f"S(P) == P {G.S(P) == P}, "
              f"(1(x)P)Delta(P) == P(x)P {lhs == tensor(P, P)}, "
              f"class {classify_group_like_projection(G, P)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
