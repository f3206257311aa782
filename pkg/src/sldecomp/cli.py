"""Command line interface.

Exit codes: 0 success, 1 verification mismatch, 2 bad usage or parameters.
"""
from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import sys
from dataclasses import dataclass

from .crystal import (
    ExtendedYoungDiagram,
    Partition,
    RegularityError,
    apply_e,
    apply_f,
    j_signature,
    weight_of,
)
from .decomp import (
    MultiplicityTable,
    WeightLabel,
    index_range,
    min_cost,
    multiplicity_table,
    partner,
    series_from_table,
)
from .identities import UnsupportedParametersError, cramer_B, propmod_classify, propmod_witness
from .qseries import first_mismatch, format_series
from .suites import SUITES


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = 2
    i: int = 0
    t: int | None = None
    order: int | None = None
    max_boxes: int | None = None
    method: str = "enumerate"
    format: str = "text"
    suite: str | None = None
    partition: str = ""
    word: str = ""

    def validate(self) -> None:
        if self.command == "verify":
            return
        if self.n < 2:
            raise UsageError(f"--n must be at least 2, got {self.n}")
        if not 0 <= self.i < self.n:
            raise UsageError(f"--i must satisfy 0 <= i < n, got i={self.i}, n={self.n}")
        if self.t is not None and self.t not in index_range(self.n, self.i):
            r = index_range(self.n, self.i)
            raise UsageError(f"--t must lie in {r.start}..{r.stop - 1} for n={self.n}, i={self.i}")
        for name in ("order", "max_boxes"):
            val = getattr(self, name)
            if val is not None and val < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")


# decompose -------------------------------------------------------------------


def table_to_json(tbl: MultiplicityTable) -> dict:
    return {
        "n": tbl.n,
        "i": tbl.i,
        "max_boxes": tbl.max_boxes,
        "labels": [
            {"t": lab.t, "u": lab.u, "k": lab.k, "count": tbl.entries[lab]} for lab in tbl.labels()
        ],
        "complete_k": {str(t): k for t, k in sorted(tbl.completeness.items())},
    }


def table_to_csv(tbl: MultiplicityTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "u", "k", "count"])
    for lab in tbl.labels():
        w.writerow([lab.t, lab.u, lab.k, tbl.entries[lab]])
    return buf.getvalue()


def table_to_text(tbl: MultiplicityTable) -> str:
    lines = [f"V(Λ_0) ⊗ V(Λ_{tbl.i}) for n={tbl.n}, partitions up to {tbl.max_boxes} boxes"]
    for t in index_range(tbl.n, tbl.i):
        u = partner(tbl.n, tbl.i, t)
        top = tbl.completeness[t]
        lines.append(f"t={t} u={u}  (complete through k={top})")
        ks = sorted(lab.k for lab in tbl.entries if lab.t == t)
        for k in range(abs(tbl.i - t), max(ks + [top]) + 1):
            count = tbl.entries.get(WeightLabel(t, u, k), 0)
            flag = "" if k <= top else "  (incomplete)"
            lines.append(f"  k={k:<3d} {count}{flag}")
    return "\n".join(lines) + "\n"


def cmd_decompose(cfg: RunConfig, out) -> int:
    max_boxes = 4 * cfg.n if cfg.max_boxes is None else cfg.max_boxes
    tbl = multiplicity_table(cfg.n, cfg.i, max_boxes)
    if cfg.format == "json":
        out.write(json.dumps(table_to_json(tbl), indent=2) + "\n")
    elif cfg.format == "csv":
        out.write(table_to_csv(tbl))
    else:
        out.write(table_to_text(tbl))
    return 0


# series ----------------------------------------------------------------------


def enumerated_series(n: int, i: int, t: int, order: int):
    tbl = multiplicity_table(n, i, min_cost(n, i, t) + n * order)
    return series_from_table(tbl, t).truncate(order)


def cmd_series(cfg: RunConfig, out) -> int:
    if cfg.t is None:
        raise UsageError("series needs --t")
    order = 20 if cfg.order is None else cfg.order
    if cfg.method in ("cramer", "both") and not propmod_classify(cfg.n, cfg.i):
        j, jp = propmod_witness(cfg.n, cfg.i)
        raise UsageError(
            f"Cramer's rule unavailable for n={cfg.n}, i={cfg.i}: residues collide "
            f"(j={j}, j'={jp}); use --method enumerate"
        )
    results = {}
    if cfg.method in ("enumerate", "both"):
        results["enumerate"] = enumerated_series(cfg.n, cfg.i, cfg.t, order)
    if cfg.method in ("cramer", "both"):
        results["cramer"] = cramer_B(cfg.n, cfg.i, cfg.t, order)
    if cfg.format == "json":
        payload = {
            "n": cfg.n, "i": cfg.i, "t": cfg.t, "order": order,
            "series": {m: list(s.coefficients(0, order)) for m, s in results.items()},
        }
    for method, s in results.items():
        if cfg.format == "text":
            out.write(f"B_{cfg.t}^{cfg.i}(q) [{method}] = {format_series(s)} + O(q^{order + 1})\n")
        elif cfg.format == "csv":
            out.write("method,k,coefficient\n" if method == next(iter(results)) else "")
            out.writelines(f"{method},{k},{s[k]}\n" for k in range(order + 1))
    if len(results) == 2:
        bad = first_mismatch(results["enumerate"], results["cramer"], 0, order)
        verdict = "MATCH" if bad is None else f"MISMATCH at q^{bad}"
        if cfg.format == "json":
            payload["verdict"] = verdict
        elif cfg.format == "text":
            out.write(verdict + "\n")
        code = 0 if bad is None else 1
    else:
        code = 0
    if cfg.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    return code


# verify ----------------------------------------------------------------------


def cmd_verify(cfg: RunConfig, out) -> int:
    names = list(SUITES) if cfg.suite == "all" else [cfg.suite]
    if cfg.suite is None or any(nm not in SUITES for nm in names):
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}, all")
    failed = 0
    for name in names:
        fn = SUITES[name]
        params = inspect.signature(fn).parameters
        kwargs = {}
        if cfg.order is not None and "order" in params:
            kwargs["order"] = cfg.order
        if cfg.max_boxes is not None and "max_boxes" in params:
            kwargs["max_boxes"] = cfg.max_boxes
        for chk in fn(**kwargs):
            out.write(chk.line() + "\n")
            failed += not chk.ok
    return 1 if failed else 0


# crystal ---------------------------------------------------------------------


def _parse_word(word: str, n: int) -> list[tuple[str, int]]:
    ops = []
    for tok in word.replace(",", " ").split():
        if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit() or int(tok[1:]) >= n:
            raise UsageError(f"malformed operator {tok!r}; expected e<j> or f<j> with 0 <= j < {n}")
        ops.append((tok[0], int(tok[1:])))
    return ops


def _describe(d: ExtendedYoungDiagram) -> str:
    sigs = " ".join(f"{j}:{j_signature(d, j).reduced or '.'}" for j in range(d.n))
    return f"{d.shape}  signatures[{sigs}]  weight {weight_of(d)}"


def cmd_crystal(cfg: RunConfig, out) -> int:
    try:
        shape = Partition.parse(cfg.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = ExtendedYoungDiagram(shape, cfg.i, cfg.n)
    if not d.is_regular():
        raise UsageError(f"{shape} is not {cfg.n}-regular")
    ops = _parse_word(cfg.word, cfg.n)
    out.write(f"start  {_describe(d)}\n")
    for kind, j in ops:
        nxt = apply_f(d, j) if kind == "f" else apply_e(d, j)
        if nxt is None:
            out.write(f"{kind}{j}     0\n")
            return 0
        d = nxt
        out.write(f"{kind}{j}     {_describe(d)}\n")
    return 0


COMMANDS = {
    "decompose": cmd_decompose,
    "series": cmd_series,
    "verify": cmd_verify,
    "crystal": cmd_crystal,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sldecomp",
        description="Outer multiplicities of V(Λ_0) ⊗ V(Λ_i) for affine sl(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_t=False):
        p.add_argument("--n", type=int, required=True, help="rank n >= 2")
        p.add_argument("--i", type=int, required=True, help="charge / second weight index, 0 <= i < n")
        if need_t:
            p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("decompose", help="multiplicity table from highest-weight partitions")
    common(p)
    p.add_argument("--max-boxes", type=int)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("series", help="generating series B_t^i(q)")
    common(p, need_t=True)
    p.add_argument("--order", type=int)
    p.add_argument("--method", choices=("enumerate", "cramer", "both"), default="enumerate")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--max-boxes", type=int)

    p = sub.add_parser("crystal", help="apply Kashiwara operators to a diagram")
    common(p)
    p.add_argument("--partition", default="", help='e.g. "5,4,1^2"; empty for the null diagram')
    p.add_argument("--word", default="", help='operators applied left to right, e.g. "f0 f1 e0"')
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(**{k: v for k, v in vars(args).items()})
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, UnsupportedParametersError, RegularityError) as exc:
        parser.print_usage(sys.stderr)
        print(f"sldecomp: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
