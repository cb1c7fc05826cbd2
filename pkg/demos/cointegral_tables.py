"""Print g-cointegral dimensions for each family, g running over the powers of g.

    python3 demos/cointegral_tables.py [n]
"""

import sys

from hopf_integrals.taft import build_taft, cointegral_tables


def main(n=4):
    T = build_taft(n)
    rows = cointegral_tables(T, betas=[1, -1, T.omega])
    fams = list(dict.fromkeys(r["family"] for r in rows))
    width = max(len(f) for f in fams)
    print(" " * width, " ".join(f"g^{j}" for j in range(n)))
    for fam in fams:
        dims = {r["g_exponent"]: r for r in rows if r["family"] == fam}
        cells = [f"{dims[j]['dim']:>3}" for j in range(n)]
        ok = all(dims[j]["ok"] for j in range(n))
        print(f"{fam:<{width}}", " ".join(cells), "" if ok else "  MISMATCH")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
