"""Command-line front end.

Input files are either a JSON matroid descriptor or a code file (role header
line plus matrix text).  All structured output is JSON with sorted keys and
ascending subsets, so a fixed input and flag set always produces identical
bytes; tables are a human rendering of the same data.

Exit codes: 0 success, 1 input error, 2 identity/assertion failure,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import betti as betti_mod
from . import codes as codes_mod
from . import masks, wei
from .errors import CapExceeded, InputError
from .ladder import DEFAULT_SUBSET_CAP
from .ladder import ladder as build_ladder
from .matroid import Matroid, from_descriptor, validate_axioms
from .weights import is_chained, weight_report

COMMANDS = ("weights", "betti", "strands", "wei", "chained", "report", "validate")


@dataclass
class RunConfig:
    command: str
    input_path: str
    fmt: str = "json"
    values: bool = False
    chain: str | None = None
    cap_subsets: int = DEFAULT_SUBSET_CAP
    cap_subspaces: int = codes_mod.DEFAULT_SUBSPACE_CAP
    seed: int = 0
    dump_ladder: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.cap_subsets <= 0 or self.cap_subspaces <= 0:
            raise InputError("caps must be positive")
        if self.fmt not in ("json", "table"):
            raise InputError(f"unknown format {self.fmt!r}")


def _load_input(path: str) -> tuple[Matroid, codes_mod.LinearCode | None]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_descriptor(stripped), None
    code = codes_mod.parse_code_file(text)
    return codes_mod.code_matroid(code), code


def _render_table(doc: dict) -> str:
    lines = []

    def walk(prefix: str, node):
        if isinstance(node, dict):
            for key in sorted(node):
                walk(f"{prefix}{key}.", node[key])
        elif isinstance(node, list) and all(
            not isinstance(x, (dict, list)) for x in node
        ):
            lines.append(f"{prefix[:-1]}: {' '.join(str(x) for x in node)}")
        elif isinstance(node, list):
            for idx, item in enumerate(node):
                walk(f"{prefix}{idx}.", item)
        else:
            lines.append(f"{prefix[:-1]}: {node}")

    walk("", doc)
    return "\n".join(lines) + "\n"


def _betti_table_text(diagram: betti_mod.BettiDiagram) -> str:
    """Grid rendering: rows are homological indices, columns cardinalities."""
    if diagram.values is not None:
        cells = {key: str(val) for key, val in diagram.table_values().items()}
    else:
        cells = {key: "*" for key in diagram.table_support()}
    max_j = max((j for _, j in cells), default=0)
    width = max([3] + [len(v) for v in cells.values()])
    header = "i\\j " + " ".join(f"{j:>{width}}" for j in range(max_j + 1))
    lines = [header]
    for i in range(diagram.t + 1):
        row = [f"{cells.get((i, j), '.'):>{width}}" for j in range(max_j + 1)]
        lines.append(f"{i:>3} " + " ".join(row))
    return "\n".join(lines) + "\n"


def _cmd_weights(M: Matroid, config: RunConfig) -> dict:
    return weight_report(M).to_json_dict()


def _cmd_betti(M: Matroid, config: RunConfig) -> dict:
    if config.values:
        return betti_mod.betti_values(M).to_json_dict()
    return betti_mod.betti_support(M).to_json_dict()


def _cmd_strands(M: Matroid, config: RunConfig) -> dict:
    if not config.chain:
        raise InputError("strands requires --chain \"1,2|1,2,3|...\"")
    chain = masks.parse_chain(config.chain, M.n)
    spec = betti_mod.StrandSpec(sets=chain)
    verdict = betti_mod.strand_check(M, spec)
    return {
        "chain": [list(masks.to_labels(m)) for m in chain],
        "nonzero": verdict,
    }


def _cmd_wei(M: Matroid, config: RunConfig) -> dict:
    return {
        "greedy": wei.check_wei_greedy(M, cap=config.cap_subsets),
        "classical": wei.check_wei_classical(M, cap=config.cap_subsets),
    }


def _cmd_chained(M: Matroid, config: RunConfig) -> dict:
    verdict, chain = is_chained(M)
    return {
        "chained": verdict,
        "witness": None
        if chain is None
        else [list(masks.to_labels(m)) for m in chain],
    }


def _cmd_validate(
    M: Matroid, config: RunConfig, code: codes_mod.LinearCode | None
) -> dict:
    doc: dict = {"axioms": validate_axioms(M, seed=config.seed).to_json_dict()}
    if code is not None and code.p**code.k <= config.cap_subspaces:
        report = codes_mod.code_weights(code)
        d_oracle = tuple(
            codes_mod.ghw_bruteforce(code, r, cap=config.cap_subspaces)
            for r in range(1, code.k + 1)
        )
        e_o, et_o, g_o = codes_mod.greedy_bruteforce(code, cap=config.cap_subspaces)
        doc["code_oracle"] = {
            "agrees": report.d == d_oracle
            and report.e == e_o
            and report.e_tilde == et_o
            and report.g == g_o,
            "d": list(d_oracle),
            "e": list(e_o),
            "e_tilde": list(et_o),
            "g": list(g_o),
        }
    return doc


# the wei section of a report needs the dual's ladder, which can dwarf the
# primal one; reports bound that side tightly and mark it skipped instead of
# failing the whole run
REPORT_WEI_CAP = 300_000


def _cmd_report(M: Matroid, config: RunConfig) -> dict:
    doc = {
        "weights": _cmd_weights(M, config),
        "betti": _cmd_betti(M, config),
        "chained": _cmd_chained(M, config),
        "shape": betti_mod.resolution_shape(M).to_json_dict(),
    }
    if config.chain:
        doc["strands"] = _cmd_strands(M, config)
    cap = min(config.cap_subsets, REPORT_WEI_CAP)
    try:
        doc["wei"] = {
            "greedy": wei.check_wei_greedy(M, cap=cap),
            "classical": wei.check_wei_classical(M, cap=cap),
        }
    except CapExceeded as exc:
        doc["wei"] = {"skipped": str(exc)}
    return doc


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered output)."""
    try:
        M, code = _load_input(config.input_path)
        build_ladder(M, cap=config.cap_subsets)
        if config.command == "weights":
            doc = _cmd_weights(M, config)
        elif config.command == "betti":
            doc = _cmd_betti(M, config)
        elif config.command == "strands":
            doc = _cmd_strands(M, config)
        elif config.command == "wei":
            doc = _cmd_wei(M, config)
        elif config.command == "chained":
            doc = _cmd_chained(M, config)
        elif config.command == "validate":
            doc = _cmd_validate(M, config, code)
        else:
            doc = _cmd_report(M, config)
        if config.dump_ladder:
            doc["ladder"] = build_ladder(M).to_json_dict()
    except InputError as exc:
        return 1, f"input error: {exc}\n"
    except CapExceeded as exc:
        return 3, f"cap exceeded: {exc}\n"
    except AssertionError as exc:
        return 2, f"internal invariant failure: {exc}\n"

    status = 0
    if config.command == "wei" and not (
        doc["greedy"]["identity_holds"] and doc["classical"]["identity_holds"]
    ):
        status = 2
    if config.command == "validate":
        if not doc["axioms"]["ok"]:
            status = 2
        if not doc.get("code_oracle", {"agrees": True})["agrees"]:
            status = 2
    if config.command == "report" and "skipped" not in doc["wei"] and not (
        doc["wei"]["greedy"]["identity_holds"]
        and doc["wei"]["classical"]["identity_holds"]
    ):
        status = 2

    if config.fmt == "table":
        if config.command == "betti":
            diagram = (
                betti_mod.betti_values(M)
                if config.values
                else betti_mod.betti_support(M)
            )
            return status, _betti_table_text(diagram)
        return status, _render_table(doc)
    return status, json.dumps(doc, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matgreedy",
        description="Weight hierarchies, greedy weights, Wei duality and "
        "Betti data for matroids and linear codes over prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("weights", "all four weight vectors with witnesses"),
        ("betti", "Betti support (values with --values)"),
        ("strands", "check a strand given with --chain"),
        ("wei", "both Wei duality identities"),
        ("chained", "chainedness verdict and witness chain"),
        ("report", "everything at once"),
        ("validate", "axiom check; code inputs also get oracle cross-check"),
    ):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument("input", help="matroid JSON or code file")
        sp.add_argument("--format", default="json", choices=("json", "table"))
        sp.add_argument(
            "--values", action="store_true", help="compute exact Betti values"
        )
        sp.add_argument("--chain", help='chain of subsets, e.g. "1,2|1,2,3,4"')
        sp.add_argument("--cap-subsets", type=int, default=DEFAULT_SUBSET_CAP)
        sp.add_argument(
            "--cap-subspaces", type=int, default=codes_mod.DEFAULT_SUBSPACE_CAP
        )
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--dump-ladder", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            input_path=args.input,
            fmt=args.format,
            values=args.values,
            chain=args.chain,
            cap_subsets=args.cap_subsets,
            cap_subspaces=args.cap_subspaces,
            seed=args.seed,
            dump_ladder=args.dump_ladder,
        )
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    status, output = run(config)
    # rendered reports go to stdout even when an identity check failed;
    # plain error messages go to stderr
    is_message = output.startswith(
        ("input error:", "cap exceeded:", "internal invariant failure:")
    )
    stream = sys.stderr if is_message else sys.stdout
    stream.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
