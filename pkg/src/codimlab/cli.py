"""Command line entry point: ``codimlab <command> [--flags]``.

All tables are TSV with one ``#`` header row.  Exit codes: 0 success,
1 mathematical failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import GradedLieAlgebra, validate_algebra
from .algfile import AlgebraParseError, data_path, dump_algebra, parse_algebra

CACHE_ENV = "CODIMLAB_CACHE"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algebra: str | None = None
    n: int | None = None
    q: int | None = None
    t: int | None = None
    lam: str | None = None
    beta: str | None = None
    rank: str = "auto"
    seed: int = 0
    level: str = "quick"
    jobs: int = 1
    sweep: bool = False
    random: int = 0
    rows: bool = False
    cache_dir: str | None = None

    def key(self, algebra_text: str) -> str:
        d = asdict(self)
        d.pop("cache_dir")
        d.pop("jobs")  # output does not depend on the pool size
        d["algebra"] = algebra_text
        d["version"] = __version__
        blob = json.dumps(d, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


class Cache:
    """Output text keyed by a content hash; any I/O problem disables it."""

    def __init__(self, directory: str | None):
        self.dir = Path(directory) if directory else None
        if self.dir is not None:
            try:
                self.dir.mkdir(parents=True, exist_ok=True)
            except OSError:
                self.dir = None

    def get(self, key: str):
        if self.dir is None:
            return None
        try:
            blob = json.loads((self.dir / f"{key}.json").read_text())
            return blob["out"], blob["code"]
        except (OSError, ValueError, KeyError):
            return None

    def put(self, key: str, out: str, code: int) -> None:
        if self.dir is None:
            return
        try:
            tmp = self.dir / f"{key}.tmp"
            tmp.write_text(json.dumps({"out": out, "code": code}))
            tmp.replace(self.dir / f"{key}.json")
        except OSError:
            pass


def _algebra_text(cfg: RunConfig, default: str = "paper_L.alg") -> str:
    path = Path(cfg.algebra) if cfg.algebra else data_path(default)
    try:
        return path.read_text()
    except OSError as e:
        raise UsageError(f"cannot read algebra file {path}: {e}")


def _load(text: str) -> GradedLieAlgebra:
    alg = parse_algebra(text)
    bad = validate_algebra(alg)
    if bad:
        raise ValidationFailure(bad)
    return alg


class ValidationFailure(Exception):
    def __init__(self, violations):
        super().__init__(f"{len(violations)} violations")
        self.violations = violations


def _tsv(header: list[str], rows) -> list[str]:
    out = ["# " + "\t".join(header)]
    out += ["\t".join(str(x) for x in r) for r in rows]
    return out


def _need(cfg: RunConfig, name: str):
    v = getattr(cfg, name)
    if v is None:
        raise UsageError(f"--{name} is required for {cfg.command}")
    return v


# ---------------------------------------------------------------------------
# Commands; each returns (lines, exit code)
# ---------------------------------------------------------------------------

def cmd_check(cfg, text):
    alg = parse_algebra(text)
    bad = validate_algebra(alg)
    rows = [(v.kind, ",".join(alg.basis_names[i] for i in v.indices), v.detail) for v in bad]
    lines = _tsv(["kind", "basis", "detail"], rows)
    return lines, 1 if bad else 0


def _engine(cfg, alg):
    from .codim import CodimEngine, EngineConfig, graded_types

    ecfg = EngineConfig(rank_mode=cfg.rank, seed=cfg.seed, jobs=cfg.jobs)
    return CodimEngine(alg, graded_types(alg), ecfg)


def cmd_codim(cfg, text):
    alg = _load(text)
    n = _need(cfg, "n")
    eng = _engine(cfg, alg)
    rows = []
    for k in range(1, n + 1):
        c, rep = eng.codimension(k)
        rows.append((k, c, rep.method, str(rep.certified).lower()))
    return _tsv(["n", "c_n", "method", "certified"], rows), 0


def cmd_cochar(cfg, text):
    from .codim import cocharacter_table
    from .symmetric import format_partition

    alg = _load(text)
    n = _need(cfg, "n")
    tab = cocharacter_table(alg, n, engine=_engine(cfg, alg))
    rows = [(format_partition(lam), m, d, p) for lam, m, d, p in tab.rows()]
    return _tsv(["lambda", "multiplicity", "specht_dim", "product"], rows), (0 if tab.consistent() else 1)


def cmd_bound(cfg, text):
    from .asymptotics import bound_report

    alg = _load(text)
    n = _need(cfg, "n")
    rep = bound_report(alg, range(1, n + 1), engine=_engine(cfg, alg))
    rows = [(r.n, r.c_n, f"{r.nth_root:.9f}", f"{r.upper_bound:.9f}", r.trivial_bound) for r in rep.rows]
    return _tsv(["n", "c_n", "nth_root", "upper_bound", "trivial_bound"], rows), (0 if rep.ok else 1)


def _parse_ints(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--{flag} expects comma-separated integers")


def cmd_witness(cfg, text):
    from .freepoly import polynomial_rows, to_left_normed
    from .symmetric import format_partition
    from .witness import (InconsistentBeta, build_witness, evaluate_symmetrized, partition_to_beta,
                          symmetrizer_terms, witness_substitution)

    alg = _load(text)
    try:
        if cfg.beta:
            vals = _parse_ints(cfg.beta, "beta")
            if len(vals) != 8:
                raise UsageError("--beta expects lambda5,beta2,...,beta8 (8 integers)")
            beta, l5 = tuple(vals[1:]), vals[0]
        elif cfg.lam:
            beta, l5 = partition_to_beta(_parse_ints(cfg.lam, "lambda"))
        else:
            raise UsageError("witness needs --lambda or --beta")
        w = build_witness(beta, l5)
    except InconsistentBeta as e:
        raise UsageError(str(e))
    if cfg.rows:
        rows = [(c, ",".join(map(str, idx)), ",".join(map(str, lab)))
                for c, idx, lab in polynomial_rows(to_left_normed(w.polynomial()))]
        return _tsv(["coefficient", "indices", "labels"], rows), 0
    a = witness_substitution(alg, w)
    ev = w.evaluator(alg)
    plain = ev(a)
    sym = evaluate_symmetrized(alg, symmetrizer_terms(w.tableau), ev, a, w.n)

    def vec(x):
        return ",".join(str(c) for c in x.coords)
    rows = [("case", w.case), ("shape", format_partition(w.shape)), ("n", w.n),
            ("beta", ",".join(map(str, w.beta))), ("lambda5", w.lambda5),
            ("columns", ",".join(f"f{k}" for k in w.column_kinds)),
            ("bracket_order", ",".join(f"f{w.column_kinds[c]}" for c in w.order)),
            ("basis", ",".join(alg.basis_names)),
            ("value", vec(plain)), ("symmetrized_value", vec(sym))]
    return _tsv(["key", "value"], rows), (0 if not sym.is_zero() else 1)


def cmd_ado(cfg, text):
    from .ado import adjoint_rep, graded_ado, verify_graded_ado

    alg = _load(text)
    g = graded_ado(alg, adjoint_rep(alg))
    rep = verify_graded_ado(g)
    rows = []
    for i, m in enumerate(g.matrices):
        support = ";".join(f"{r}<-{s}" for r, s in sorted(g.support(m)))
        mat = ";".join(",".join(str(x) for x in row) for row in m)
        rows.append((alg.basis_names[i], alg.degree[i], support, mat))
    lines = _tsv(["basis", "degree", "block_support", "matrix"], rows)
    return lines, 0 if rep.ok else 1


def cmd_regev(cfg, text):
    from .regev import RegevDescriptor, is_scalar, regev_eval_dp, sweep_values

    t = _need(cfg, "t")
    rows = []
    if cfg.sweep:
        if t > 2:
            raise UsageError("--sweep is limited to --t 2 or less")
        for idx, v in sweep_values(t):
            rows.append((idx, int(v[0, 0]), str(is_scalar(v)).lower()))
    elif cfg.random:
        rng = np.random.default_rng(cfg.seed)
        desc = RegevDescriptor(t)
        for k in range(cfg.random):
            X = rng.integers(-3, 4, size=(t * t, t, t))
            Y = rng.integers(-3, 4, size=(t * t, t, t))
            v = regev_eval_dp(desc, X.astype(object), Y.astype(object))
            rows.append((k, v[0, 0], str(is_scalar(v)).lower()))
    else:
        raise UsageError("regev needs --sweep or --random K")
    code = 0 if all(r[2] == "true" for r in rows) else 1
    return _tsv(["tuple_id", "scalar", "is_scalar"], rows), code


def cmd_verify(cfg, text):
    from .claims import HEADER, exit_code, run_claims

    alg = parse_algebra(text)  # validation is itself a claim
    results = run_claims(alg, cfg.level, cfg.seed, cfg.jobs)
    return [HEADER] + [r.row() for r in results], exit_code(results)


COMMANDS = {
    "check": cmd_check, "codim": cmd_codim, "cochar": cmd_cochar, "bound": cmd_bound,
    "witness": cmd_witness, "ado": cmd_ado, "regev": cmd_regev, "verify-paper": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="codimlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--algebra", help="algebra file (default: the shipped example)")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        s.add_argument("--rank", choices=("exact", "modular", "auto"), default="auto")
        if name in ("codim", "cochar", "bound"):
            s.add_argument("--n", type=int, required=True)
        if name == "witness":
            s.add_argument("--lambda", dest="lam", help="partition, e.g. 2,2,2,1,1")
            s.add_argument("--beta", help="lambda5,beta2,...,beta8")
            s.add_argument("--rows", action="store_true", help="print the polynomial instead")
        if name == "regev":
            s.add_argument("--t", type=int, required=True)
            s.add_argument("--sweep", action="store_true")
            s.add_argument("--random", type=int, default=0)
        if name == "verify-paper":
            s.add_argument("--level", choices=("quick", "full"), default="quick")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 2
    cfg = RunConfig(command=ns.command,
                    **{k: v for k, v in vars(ns).items()
                       if k in RunConfig.__dataclass_fields__ and k != "command"})
    cfg.cache_dir = os.environ.get(CACHE_ENV) or None
    if cfg.n is not None and cfg.n < 1:
        print("error: --n must be positive", file=sys.stderr)
        return 2
    try:
        text = _algebra_text(cfg, "paper_L.alg")
        cache = Cache(cfg.cache_dir)
        key = cfg.key(text)
        hit = cache.get(key)
        if hit is not None:
            out, code = hit
        else:
            lines, code = COMMANDS[cfg.command](cfg, text)
            out = "\n".join(lines) + "\n"
            cache.put(key, out, code)
    except (UsageError, AlgebraParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValidationFailure as e:
        for v in e.violations:
            print(f"invalid algebra: {v.kind} {v.indices} {v.detail}", file=sys.stderr)
        return 1
    except ValueError as e:  # caps, guards, inconsistent parameters
        print(f"error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
