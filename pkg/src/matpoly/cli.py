"""``matpoly`` command line: compute, dual, zeta, reconstruct, verify, search."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .duality import chi_dual
from .invariants import MobiusPoly, coboundary, mobius_poly, tutte
from .lattice import GeometricLattice
from .matroid import Matroid, MatroidError, UniformMatroid, load_matroid, params
from .reconstruct import ReconstructionError, reconstruct
from .search import SearchConfig, SearchError, run_search
from .verify import run_checks
from .zeta import ZetaPoly, zeta_from_chi

EXIT_OK, EXIT_ERROR, EXIT_DISCOVERY = 0, 1, 2


class CLIError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load(args) -> Matroid:
    if args.input and args.uniform:
        raise CLIError("give either --input or --uniform, not both")
    if args.uniform:
        try:
            k, n = (int(x) for x in args.uniform.split(","))
        except ValueError:
            raise CLIError(f"--uniform expects 'k,n', got {args.uniform!r}") from None
        M: Matroid = UniformMatroid(k, n)
    elif args.input:
        try:
            M = load_matroid(args.input)
        except OSError as exc:
            raise CLIError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        raise CLIError("an input is required: --input FILE or --uniform k,n")
    return M.dual() if getattr(args, "dual", False) else M


def _lattice(M: Matroid) -> GeometricLattice:
    try:
        return GeometricLattice(M)
    except MatroidError as exc:
        raise CLIError(str(exc)) from None


def _zeta(M: Matroid, L: GeometricLattice) -> ZetaPoly:
    p = params(M)
    if not p.cosimple:
        raise CLIError("zeta polynomial needs a simple dual (d > 2)")
    return zeta_from_chi(coboundary(L), int(p.d), int(p.dstar))


def _zeta_text(Z: ZetaPoly) -> str:
    parts = [f"r={Z.r}"] + [f"P_{i} = {p.render()}" for i, p in enumerate(Z.P)]
    text = ", ".join(parts)
    if Z.laurent:
        text += f"\nlaurent coefficients at {Z.laurent}"
    return text


def cmd_compute(args) -> int:
    M = _load(args)
    p = params(M)
    what = {"all": ("chi", "mu", "tutte", "zeta")}.get(args.what, (args.what,))
    text = [p.line()]
    data: dict = {"params": p.as_dict(), "n": p.n, "k": p.k}
    L = _lattice(M) if set(what) & {"chi", "mu", "zeta"} else None
    for w in what:
        if w == "chi":
            c = coboundary(L)
            text.append(c.render())
            data["chi"] = c.to_json()["chi"]
        elif w == "mu":
            m = mobius_poly(L)
            text.append(m.render())
            data["mu"] = m.to_json()["mu"]
        elif w == "tutte":
            t = tutte(M)
            text.append("tutte = " + t.render())
            data["tutte"] = [[i, j, c] for (i, j), c in sorted(t.coeffs.items())]
        elif w == "zeta":
            Z = _zeta(M, L)
            text.append(_zeta_text(Z))
            data["zeta"] = Z.to_json()
    print(_dump(data) if args.format == "json" else "\n".join(text))
    return EXIT_OK


def cmd_dual(args) -> int:
    M = _load(args)
    cs = chi_dual(coboundary(_lattice(M)))
    print(_dump(cs.to_json()) if args.format == "json" else cs.render("chi*"))
    return EXIT_OK


def cmd_zeta(args) -> int:
    M = _load(args)
    Z = _zeta(M, _lattice(M))
    print(_dump(Z.to_json()) if args.format == "json" else _zeta_text(Z))
    return EXIT_OK


def _read_mu(path: str) -> MobiusPoly:
    try:
        with open(path, encoding="utf-8") as fh:
            return MobiusPoly.from_json(json.load(fh))
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}") from None
    except (KeyError, ValueError, TypeError) as exc:
        raise CLIError(f"{path}: not a Moebius polynomial file ({exc})") from None


def cmd_reconstruct(args) -> int:
    mu, mus = _read_mu(args.mu), _read_mu(args.mu_dual)
    methods = ("linear", "zeta") if args.method == "both" else (args.method,)
    reports = [reconstruct(mu, mus, m) for m in methods]
    chis = {r.method: r.chi for r in reports if r.chi is not None}
    agree = len({json.dumps(c.to_json()) for c in chis.values()}) <= 1
    if args.format == "json":
        out = {"reports": [r.summary() for r in reports], "agree": agree}
        if chis:
            first = next(iter(chis.values()))
            out.update(first.to_json())
        print(_dump(out))
    else:
        for r in reports:
            s = r.summary()
            print(f"[{r.method}] outcome={r.outcome} equations={s['equations']} unknowns={s['unknowns']} "
                  f"rank={s['rank']} kernel_dim={s['kernel_dim']}")
            if r.advisory:
                print(f"[{r.method}] {r.advisory}")
        if chis:
            print(next(iter(chis.values())).render())
        if len(reports) > 1:
            print(f"methods agree: {str(agree).lower()}")
    if not agree:
        raise CLIError("linear and zeta reconstructions disagree")
    return EXIT_OK


def cmd_verify(args) -> int:
    M = _load(args)
    checks = run_checks(M)
    if args.format == "json":
        print(_dump([{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]))
    else:
        for c in checks:
            print(c.line())
    return EXIT_OK if all(c.ok for c in checks) else EXIT_ERROR


def cmd_search(args) -> int:
    cfg = SearchConfig(q=args.q, k=args.k, n=args.n, d=args.d, dstar=args.dstar,
                       trials=args.trials, seed=args.seed, out=args.out,
                       max_attempts=args.max_attempts, resume=args.resume,
                       record_timing=args.record_timing, threads=args.threads)
    summary = run_search(cfg)
    print(summary.to_json())
    return EXIT_DISCOVERY if summary.found else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matpoly", description="Exact matroid polynomial invariants.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def source(p, dual=True):
        p.add_argument("--input", help="matrix file ('q k n' header) or explicit rank file")
        p.add_argument("--uniform", metavar="K,N", help="uniform matroid U(k,n)")
        if dual:
            p.add_argument("--dual", action="store_true", help="work with the dual matroid")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compute", help="print polynomial invariants")
    source(p)
    p.add_argument("--what", choices=("chi", "mu", "tutte", "zeta", "params", "all"), default="all")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("dual", help="coboundary polynomial of the dual via the duality transform")
    source(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("zeta", help="two-variable zeta polynomial")
    source(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("reconstruct", help="recover chi from mu_M and mu_M*")
    p.add_argument("--mu", required=True)
    p.add_argument("--mu-dual", required=True)
    p.add_argument("--method", choices=("linear", "zeta", "both"), default="both")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="check every identity on one matroid")
    source(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="random counterexample search")
    p.add_argument("--q", type=int, default=7)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--dstar", type=int, default=3)
    p.add_argument("--trials", type=int, default=260)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="line-delimited JSON trial records")
    p.add_argument("--max-attempts", type=int)
    p.add_argument("--resume", action="store_true", help="continue an interrupted --out file")
    p.add_argument("--record-timing", action="store_true", help="store wall time per record")
    p.add_argument("--threads", type=int, default=1, help="worker processes (0 = all cores)")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (CLIError, MatroidError, ReconstructionError, SearchError, ArithmeticError, ValueError) as exc:
        print(f"matpoly: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
