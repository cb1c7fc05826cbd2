"""Build a Taft algebra, check its axioms and look at the three coideal families.

    python3 demos/taft_walkthrough.py [n]
"""

import sys

from hopf_integrals import algebra as alg
from hopf_integrals.hopf import verify_hopf_axioms
from hopf_integrals.integrals import classify_group_like_projection, left_integrals, right_integrals
from hopf_integrals.linalg import rank
from hopf_integrals.serialize import scalar_str
from hopf_integrals.taft import (
    build_taft,
    coideal_n_dx,
    coideal_v_p_beta,
    hopf_sub_h_d,
    p_beta,
    p_d,
)


def show(T, v):
    """Pretty-print an element in the g^i x^j basis."""
    terms = []
    for idx, c in enumerate(v):
        if c.is_zero():
            continue
        i, j = divmod(idx, T.n)
        mono = "".join(s for s in (f"g^{i}" if i else "", f"x^{j}" if j else "") if s) or "1"
        terms.append(f"({scalar_str(c)}){mono}")
    return " + ".join(terms) or "0"


def main(n=3):
    T = build_taft(n)
    H = T.hopf
    rep = verify_hopf_axioms(H)
    print(f"Taft algebra n={n}, dim {T.dim}: axioms {'ok' if rep.ok else rep.failed()}")

    eps = H.counit
    divs = [d for d in range(1, n + 1) if n % d == 0]
    print("\nfamily          dim  dim L  dim R  L == R  semisimple")
    rows = [("V_P(beta=1)", coideal_v_p_beta(T, 1))]
    rows += [(f"H_{d}", hopf_sub_h_d(T, d)) for d in divs]
    rows += [(f"N_{d},x", coideal_n_dx(T, d)) for d in divs]
    for name, A in rows:
        L, R = left_integrals(A, eps), right_integrals(A, eps)
        print(f"{name:<15} {A.dim:>3}  {L.dim:>5}  {R.dim:>5}  {str(L == R):>6}  "
              f"{alg.is_semisimple(A.algebra)}")

    print("\nprojections")
    print("P_beta(1) =", show(T, p_beta(T, 1)), "->", classify_group_like_projection(H, p_beta(T, 1)))
    for d in divs:
        print(f"P_{d} (in H_{d}) class:", classify_group_like_projection(H, p_d(T, d)))

    tr = alg.trace_form(H.algebra)
    print(f"\ntrace form of the whole algebra has rank {rank(tr)} of {T.dim}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
