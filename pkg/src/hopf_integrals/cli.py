"""Command line entry point: ``hopf-integrals <command> ...``.

Exit codes: 0 every check passed, 1 usage error, 2 malformed input,
3 a mathematical check failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from . import __version__
from . import algebra as alg
from .cointegrals import (
    Cointegral,
    HypothesisError,
    check_two_sided_identity,
    cointegral_report,
    g_cointegrals,
    is_invertible_in,
    normalize_on,
    z_element,
)
from .hopf import GroupLike, build_group_algebra, enumerate_group_likes_in_family, verify_hopf_axioms
from .integrals import (
    CoidealSubalgebra,
    classify_group_like_projection,
    integral_report,
    is_nondegenerate,
    is_unimodular,
    left_integrals,
    right_integrals,
)
from .linalg import Subspace
from .serialize import (
    SchemaError,
    dumps,
    functional_from_json,
    hopf_from_json,
    hopf_to_json,
    scalar_str,
    subspace_from_json,
    subspace_to_json,
)
from .taft import (
    build_taft,
    coideal_n_dx,
    coideal_v_p_beta,
    cointegral_tables,
    hopf_sub_h_d,
    lambda_dx,
    p_beta,
    p_d,
    y_powers,
)

EXIT_OK, EXIT_USAGE, EXIT_SCHEMA, EXIT_MATH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seed() -> int:
    raw = os.environ.get("HOPF_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HOPF_SEED must be an integer, got {raw!r}")


# -- argument parsing helpers ----------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def parse_beta(text: str, K):
    """'w' or 'w^k' for powers of the root of unity; otherwise a coefficient list."""
    t = text.strip().replace(" ", "")
    sign = 1
    if t.startswith("-w"):
        sign, t = -1, t[1:]
    if t == "w":
        return K.omega * sign
    if t.startswith("w^"):
        return K.omega ** int(t[2:]) * sign
    return K.parse(t)


# -- taft-report -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _taft(n: int):
    return build_taft(n, verify=False)


def _check(name, ok, detail=None):
    out = {"name": name, "status": "pass" if ok else "fail"}
    if detail is not None:
        out["detail"] = detail
    return out


def _vec_str(v):
    return [scalar_str(c) for c in v]


def _family_cell(n: int, kind: str, param: str, seed: int) -> dict:
    """Every computation for one named family of H_{n^2}."""
    T = _taft(n)
    H = T.hopf
    K = T.field
    if kind == "V_P":
        beta = parse_beta(param, K)
        A = coideal_v_p_beta(T, beta)
        lam = p_beta(T, beta)
        label = f"V_P(beta={scalar_str(beta)})"
        rows = cointegral_tables(T, betas=[beta], ds=[])
        expected_class = "right"
        expected_semisimple = True
    elif kind == "H_d":
        d = int(param)
        A = hopf_sub_h_d(T, d)
        lam = p_d(T, d)
        label = f"H_{d}"
        rows = [r for r in cointegral_tables(T, betas=[], ds=[d]) if r["family"] == label]
        expected_class = "two_sided"
        expected_semisimple = True
    else:
        d = int(param)
        A = coideal_n_dx(T, d)
        lam = lambda_dx(T, d)
        label = f"N_{d},x"
        rows = [r for r in cointegral_tables(T, betas=[], ds=[d]) if r["family"] == label]
        expected_class = None
        expected_semisimple = False   # x is a non-zero nilpotent ideal generator

    eps = H.counit
    L = left_integrals(A, eps)
    R = right_integrals(A, eps)
    closed = Subspace(H.dim, [lam], K)
    semisimple = alg.is_semisimple(A.algebra)
    checks = [
        _check("coideal_subalgebra", A.is_coideal_subalgebra),
        _check("dim_L_eps_is_1", L.dim == 1),
        _check("dim_R_eps_is_1", R.dim == 1),
        _check("L_eps_closed_form", L == closed),
        _check("nondegenerate", is_nondegenerate(H, lam)),
        _check("semisimplicity", semisimple == expected_semisimple,
               {"semisimple": semisimple, "expected": expected_semisimple}),
        _check("cointegral_table", all(r["ok"] for r in rows)),
    ]
    proj = None
    if expected_class is not None:
        proj = classify_group_like_projection(H, lam)
        checks.append(_check("projection_class", proj == expected_class,
                             {"found": proj, "expected": expected_class}))

    z_info = None
    if kind == "V_P":
        gi = T.group_like(-1)
        z = z_element(H, lam, gi.vector)
        zinv = is_invertible_in(A, z)
        expected_z = y_powers(T, beta)[n - 1]
        checks.append(_check("z_element", z == expected_z and zinv is not None))
        phi = normalize_on(Cointegral(H, A.space, gi, g_cointegrals(H, A.space, gi).basis[0]), lam)
        checks.append(_check("two_sided_identity", check_two_sided_identity(H, lam, gi.vector, phi)))
        z_info = {"g_exponent": n - 1, "z": _vec_str(z),
                  "inverse": _vec_str(zinv) if zinv else None}
    elif kind == "H_d":
        zs = []
        ok = True
        for m in range(n // d):
            gm = T.group_like(d * m)
            z = z_element(H, lam, gm.vector)
            zinv = is_invertible_in(A, z)
            ok = ok and z == gm.vector and zinv is not None
            zs.append({"g_exponent": d * m, "z": _vec_str(z),
                       "inverse": _vec_str(zinv) if zinv else None})
        checks.append(_check("z_element", ok))
        one = T.group_like(0)
        phi = normalize_on(Cointegral(H, A.space, one, g_cointegrals(H, A.space, one).basis[0]), lam)
        checks.append(_check("two_sided_identity", check_two_sided_identity(H, lam, one.vector, phi)))
        z_info = zs

    frob = alg.frobenius_search(A.algebra, rng_seed=seed)
    return {
        "family": label,
        "dim": A.dim,
        "lambda": _vec_str(lam),
        "integrals": {"dim_L": L.dim, "dim_R": R.dim,
                      "basis_L": [_vec_str(b) for b in L.basis],
                      "basis_R": [_vec_str(b) for b in R.basis]},
        "unimodular": is_unimodular(A),
        "semisimple": semisimple,
        "projection_class": proj,
        "frobenius_certificate": _vec_str(frob) if frob is not None else None,
        "cointegrals": rows,
        "z_elements": z_info,
        "checks": checks,
    }


def _cells(ns, betas, ds):
    for n in ns:
        for b in betas:
            yield (n, "V_P", b)
        for d in (ds if ds is not None else [d for d in range(1, n + 1) if n % d == 0]):
            yield (n, "H_d", str(d))
        for d in (ds if ds is not None else [d for d in range(1, n + 1) if n % d == 0]):
            yield (n, "N_dx", str(d))


def _run_cell(args):
    return _family_cell(*args)


def build_taft_report(ns, betas, ds, jobs=1, seed=0) -> dict:
    for n in ns:
        if n < 2:
            raise UsageError(f"n must be >= 2, got {n}")
        for d in ds or []:
            if d < 1 or n % d:
                raise UsageError(f"d={d} does not divide n={n}")
        K = _taft(n).field
        for b in betas:
            try:
                val = parse_beta(b, K)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"cannot parse beta {b!r}")
            if val.is_zero():
                raise UsageError("beta must be non-zero")
    cells = [(n, kind, p, seed) for n, kind, p in _cells(ns, betas, ds)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_cell, cells))
    else:
        results = [_run_cell(c) for c in cells]

    algebras = []
    for n in ns:
        rep = verify_hopf_axioms(_taft(n).hopf)
        algebras.append({
            "n": n,
            "dim": n * n,
            "axioms": rep.to_json(),
            "semisimple": alg.is_semisimple(_taft(n).hopf.algebra),
            "families": [r for c, r in zip(cells, results) if c[0] == n],
        })
    inputs = {"n": list(ns), "beta": list(betas), "d": ds, "seed": seed}
    digest = hashlib.sha256(json.dumps(inputs, sort_keys=True).encode()).hexdigest()
    ok = all(a["axioms"]["ok"] and not a["semisimple"] for a in algebras) and all(
        c["status"] == "pass" for a in algebras for f in a["families"] for c in f["checks"])
    return {"tool_version": __version__, "input_digest": digest, "inputs": inputs,
            "algebras": algebras, "all_pass": ok}


def report_markdown(doc: dict) -> str:
    lines = [f"# Taft report (version {doc['tool_version']})", "",
             f"input digest `{doc['input_digest']}`", ""]
    for a in doc["algebras"]:
        lines.append(f"## H_{{{a['n']}^2}} (dim {a['dim']})")
        lines.append("")
        lines.append(f"axioms: {'pass' if a['axioms']['ok'] else 'FAIL'}; "
                     f"semisimple: {a['semisimple']}")
        lines.append("")
        lines.append("| family | dim | dim L | dim R | unimodular | semisimple | projection | checks |")
        lines.append("|---|---|---|---|---|---|---|---|")
        for f in a["families"]:
            bad = [c["name"] for c in f["checks"] if c["status"] != "pass"]
            lines.append(
                f"| {f['family']} | {f['dim']} | {f['integrals']['dim_L']} | "
                f"{f['integrals']['dim_R']} | {f['unimodular']} | {f['semisimple']} | "
                f"{f['projection_class'] or '-'} | {'pass' if not bad else 'FAIL: ' + ', '.join(bad)} |")
        lines.append("")
        lines.append("| family | g^j | dim | values |")
        lines.append("|---|---|---|---|")
        for f in a["families"]:
            for r in f["cointegrals"]:
                vals = " ".join(r.get("values", [])) or "-"
                lines.append(f"| {r['family']} | {r['g_exponent']} | {r['dim']} | {vals} |")
        lines.append("")
    lines.append(f"overall: {'pass' if doc['all_pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_taft_report(args) -> int:
    doc = build_taft_report(args.n, args.beta or ["1"], args.d, jobs=args.jobs, seed=_seed())
    text = dumps(doc) if args.format == "json" else report_markdown(doc)
    _emit(text, args.out)
    return EXIT_OK if doc["all_pass"] else EXIT_MATH


# -- JSON driven commands ------------------------------------------------------------

def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})")
    except OSError as exc:
        raise UsageError(str(exc))


def cmd_verify(args) -> int:
    H = hopf_from_json(_load(args.algebra))
    rep = verify_hopf_axioms(H)
    out = {"dim": H.dim, "conductor": H.field.n, **rep.to_json()}
    if not rep.ok:
        out["failed"] = rep.failed()
    _emit(dumps(out), args.out)
    if args.reexport:
        _emit(dumps(hopf_to_json(H)), args.reexport)
    return EXIT_OK if rep.ok else EXIT_MATH


def _coideal(H, path):
    space = subspace_from_json(_load(path), H.field)
    if space.ambient_dim != H.dim:
        raise SchemaError("subspace ambient dimension does not match the algebra")
    return CoidealSubalgebra(H, space, name=os.path.basename(path))


def cmd_integrals(args) -> int:
    H = hopf_from_json(_load(args.algebra))
    A = _coideal(H, args.subspace)
    if not A.is_coideal_subalgebra:
        sys.stderr.write(f"not a left coideal subalgebra: subalgebra={A.is_subalgebra}, "
                         f"left_coideal={A.is_left_coideal}, unit={A.contains_unit}\n")
        return EXIT_MATH
    mu, label = H.counit, "eps"
    if args.mu:
        mu, label = functional_from_json(_load(args.mu), H.field, H.dim), args.mu
    if not alg.is_multiplicative(A.algebra, A.restrict_functional(mu)):
        sys.stderr.write("mu is not multiplicative on the subalgebra\n")
        return EXIT_MATH
    rep = integral_report(A, mu, family=A.name, mu_label=label)
    rep["unimodular"] = is_unimodular(A) if label == "eps" else None
    rep["semisimple"] = alg.is_semisimple(A.algebra)
    _emit(dumps(rep), args.out)
    return EXIT_OK


def cmd_cointegrals(args) -> int:
    H = hopf_from_json(_load(args.algebra))
    A = _coideal(H, args.coideal)
    if not A.is_left_coideal:
        sys.stderr.write("not a left coideal\n")
        return EXIT_MATH
    if args.g_power is not None:
        try:
            g = enumerate_group_likes_in_family(H)[args.g_power % H.params["n"]]
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        if not 0 <= args.g_index < H.dim:
            raise UsageError("g-index out of range")
        try:
            g = GroupLike(H, H.basis_vector(args.g_index), None)
        except ValueError:
            sys.stderr.write(f"basis vector {args.g_index} is not group-like\n")
            return EXIT_MATH
    rep = cointegral_report(H, A.space, g, family=A.name)
    rep["g_index"] = args.g_index
    _emit(dumps(rep), args.out)
    return EXIT_OK


def cmd_export_taft(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    _emit(dumps(hopf_to_json(_taft(args.n).hopf)), args.out)
    return EXIT_OK


def cmd_export_group(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    _emit(dumps(hopf_to_json(build_group_algebra(args.n))), args.out)
    return EXIT_OK


def cmd_export_coideal(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    T = _taft(args.n)
    try:
        if args.family == "v_p":
            beta = parse_beta(args.param, T.field)
            if beta.is_zero():
                raise UsageError("beta must be non-zero")
            A = coideal_v_p_beta(T, beta)
        elif args.family == "h_d":
            A = hopf_sub_h_d(T, int(args.param))
        else:
            A = coideal_n_dx(T, int(args.param))
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(dumps(subspace_to_json(A.space)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopf-integrals", description="Exact integrals and cointegrals "
                "on coideal subalgebras of finite-dimensional Hopf algebras.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("taft-report", help="reproduce the Taft algebra tables")
    s.add_argument("--n", type=_int_list, required=True, help="n or comma list of n")
    s.add_argument("--beta", action="append",
                   help="beta value, repeatable: 1, -1, w, w^2 or a coefficient list '0,1'")
    s.add_argument("--d", type=_int_list, default=None, help="comma list of divisors (default: all)")
    s.add_argument("--out", default=None)
    s.add_argument("--format", choices=["json", "markdown"], default="json")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_taft_report)

    s = sub.add_parser("verify", help="check the Hopf axioms of a JSON algebra")
    s.add_argument("algebra")
    s.add_argument("--out", default=None)
    s.add_argument("--reexport", default=None, help="write the parsed algebra back out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("integrals", help="mu-integrals on a coideal subalgebra")
    s.add_argument("algebra")
    s.add_argument("subspace")
    s.add_argument("mu", nargs="?", default=None, help="functional JSON (default: counit)")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_integrals)

    s = sub.add_parser("cointegrals", help="g-cointegrals on a left coideal")
    s.add_argument("algebra")
    s.add_argument("coideal")
    s.add_argument("g_index", type=int, help="basis index of the group-like g")
    s.add_argument("--g-power", type=int, default=None,
                   help="use g^k of the family generator instead of a basis index")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_cointegrals)

    s = sub.add_parser("export-taft", help="write H_{n^2} as JSON")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export_taft)

    s = sub.add_parser("export-group", help="write Q[Z/n] as JSON")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export_group)

    s = sub.add_parser("export-coideal", help="write a named Taft coideal subalgebra as JSON")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--family", choices=["v_p", "h_d", "n_dx"], required=True)
    s.add_argument("--param", required=True, help="beta for v_p, d otherwise")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export_coideal)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("error: --jobs must be >= 1\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SchemaError as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return EXIT_SCHEMA
    except HypothesisError as exc:
        sys.stderr.write(f"hypothesis violated: {exc}\n")
        return EXIT_MATH
    except ArithmeticError as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
