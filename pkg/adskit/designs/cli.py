# Copyright 2025 The adskit Authors
# SPDX-License-Identifier: Apache-2.0
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Command-line front end.

    adskit [--out PATH] [--format json|csv|text] [--budget N] [--seed-gamma G] <command> ...

Commands: verify, construct, filter, search, autocorr, interleave, cycnum, table.
Analysis outcomes, rule-outs included, exit 0; precondition failures exit 1;
malformed input and failed self-verification exit 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import pandas as pd

from adskit.designs.constants import (
    CYCLOTOMIC_FAMILIES,
    PALEY_HADAMARD_KINDS,
    PALEY_QR,
    PRODUCT_FAMILIES,
    TRANSFER_DIRECTIONS,
)
from adskit.designs.constructions import (
    ck_pds,
    cyclotomic_ads,
    ds_ads_transfer,
    gmw_like_support,
    paley_hadamard_ds,
    paley_qr,
    pn_graph_ads,
)
from adskit.designs.diffcore import classify
from adskit.designs.filters import ALL_TESTS, run_all
from adskit.designs.groups import make_group
from adskit.designs.products import (
    cor55,
    dhm_quartic,
    dpw_skew,
    jungnickel_dds,
    tang_ding,
    zlz_pq_squares,
    zlz_z4q,
)
from adskit.designs.search import brute_search
from adskit.designs.sequences import (
    SeqBits,
    ads_from_sequence,
    autocorr_spectrum,
    char_seq,
    interleave,
    interleave_support,
    legendre,
    mseq,
    support,
)
from adskit.designs.tables import candidate_table, cycnum_table, summary_table
from adskit.tools.base import AdsKitError, ParseError, PreconditionError, VerificationError
from adskit.tools.logger import adskit_logger
from adskit.tools.schema import CommandResult, ConstructedSet, ParamSet, Verdict
from adskit.tools.utils import is_prime

SINGLE_FAMILIES = (
    PALEY_QR,
    *CYCLOTOMIC_FAMILIES,
    "ck_pds",
    "ds_ads_transfer",
    "gmw_like_support",
    "pn_graph_ads",
    "paley_hadamard_ds",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _int_list(text: Optional[str], flag: str) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.replace(" ", "").strip("()[]").split(",") if part]
    except ValueError:
        raise ParseError(f"{flag} expects comma-separated integers, got {text!r}")


def _need(args: argparse.Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        raise ParseError(f"{args.command} --family {args.family} needs --{name.replace('_', '-')}")
    return value


def _read_json(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    if not isinstance(doc, dict):
        raise ParseError(f"{path} does not hold a JSON object")
    return doc.get("payload", doc)


def _read_seq(args: argparse.Namespace) -> SeqBits:
    if args.seq is not None:
        return SeqBits.from_text(args.seq)
    if args.seq_file is not None:
        try:
            return SeqBits.from_text(Path(args.seq_file).read_text())
        except OSError as exc:
            raise ParseError(f"cannot read {args.seq_file}: {exc}")
    if args.legendre is not None:
        return legendre(args.legendre)
    if args.mseq is not None:
        return mseq(args.mseq)
    raise ParseError(f"{args.command} needs one of --seq, --seq-file, --legendre, --mseq")


def _paley_hadamard_seed(l: int) -> List[int]:
    """A default Paley-Hadamard set in Z_l: squares, Singer or twin-prime."""
    if is_prime(l) and l % 4 == 3:
        return paley_hadamard_ds("qr", p=l).elements
    if l >= 3 and (l + 1) & l == 0:
        return paley_hadamard_ds("singer", t=l.bit_length()).elements
    p = math.isqrt(l + 1) - 1
    if p > 2 and p * (p + 2) == l and is_prime(p) and is_prime(p + 2):
        return paley_hadamard_ds("twin_prime", p=p).elements
    raise PreconditionError(f"no default Paley-Hadamard set in Z_{l}; pass --group and --set")


def _seed(args: argparse.Namespace):
    if args.group is not None and args.set is not None:
        return args.group, args.set
    if args.l is not None:
        return f"zv:{args.l}", _paley_hadamard_seed(args.l)
    raise ParseError(f"{args.command} --family {args.family} needs --l or --group with --set")


# commands


def _verify(args: argparse.Namespace) -> CommandResult:
    claimed = None
    if args.source is not None:
        doc = _read_json(args.source)
        if "group" not in doc or "set" not in doc:
            raise ParseError(f"{args.source} lacks a group or a set")
        group, text = doc["group"], ",".join(str(x) for x in doc["set"])
        if doc.get("claimed"):
            claimed = Verdict.model_validate(doc["claimed"])
    elif args.group is not None and args.set is not None:
        group, text = args.group, args.set
    else:
        raise ParseError("verify needs --group with --set, or --from")
    ctx = make_group(group)
    D = ctx.parse_set(text)
    subgroup = ctx.parse_set(args.subgroup) if args.subgroup else None
    classification = classify(ctx, D, subgroup=subgroup)
    payload = classification.document()
    payload["set"] = ctx.format_set(D)
    diagnostics = []
    if claimed is not None:
        payload["claimed_holds"] = classification.has(claimed.type, claimed.params())
        if not payload["claimed_holds"]:
            diagnostics.append(f"claimed {claimed.label()} does not hold")
    if classification.is_none:
        diagnostics.append("no DS, ADS or PDS structure")
    return CommandResult(status="ok", payload=payload, diagnostics=diagnostics)


def _construct_single(args: argparse.Namespace) -> ConstructedSet:
    family, gamma = args.family, args.seed_gamma
    if family == PALEY_QR:
        return paley_qr(_need(args, "q"), gamma)
    if family in CYCLOTOMIC_FAMILIES:
        return cyclotomic_ads(_need(args, "q"), family, args.i or 0, args.experimental, gamma)
    if family == "ck_pds":
        return ck_pds(_need(args, "q"), _int_list(_need(args, "classes"), "--classes"), gamma)
    if family == "ds_ads_transfer":
        ctx = make_group(_need(args, "group"))
        return ds_ads_transfer(
            _need(args, "direction"), ctx, ctx.parse_set(_need(args, "set")), ctx.parse_elem(_need(args, "d"))
        )
    if family == "gmw_like_support":
        return gmw_like_support(_need(args, "q"), gamma)
    if family == "pn_graph_ads":
        return pn_graph_ads(_need(args, "p"), args.m or 1, _need(args, "s"))
    return paley_hadamard_ds(_need(args, "kind"), p=args.p, t=args.t, gamma=gamma)


def _construct_product(args: argparse.Namespace) -> ConstructedSet:
    family, gamma = args.family, args.seed_gamma
    if family == "jungnickel_dds":
        return jungnickel_dds(
            _need(args, "group"), _need(args, "set"), _need(args, "group_b"), _need(args, "set_b")
        )
    if family == "cor55":
        group, D1 = _seed(args)
        return cor55(group, D1, args.i or 0)
    if family == "tang_ding":
        group, A = _seed(args)
        return tang_ding(group, A, args.set_b if args.set_b is not None else A)
    if family == "dhm_quartic":
        triple = _int_list(_need(args, "triple"), "--triple")
        if len(triple) != 3:
            raise ParseError(f"--triple expects three class indices, got {triple}")
        return dhm_quartic(_need(args, "q"), *triple, with_zero=args.with_zero, gamma=gamma)
    if family == "zlz_z4q":
        return zlz_z4q(_need(args, "q"), gamma)
    if family == "zlz_pq_squares":
        return zlz_pq_squares(_need(args, "p"), _need(args, "q"), include_row=args.include_row)
    return dpw_skew(_need(args, "q"))


def _construct(args: argparse.Namespace) -> CommandResult:
    if args.family in PRODUCT_FAMILIES:
        built = _construct_product(args)
    else:
        built = _construct_single(args)
    diagnostics = [] if built.verified else ["no design is claimed for this recipe"]
    return CommandResult(status="ok", payload=built.document(), diagnostics=diagnostics)


def _filter(args: argparse.Namespace) -> CommandResult:
    try:
        params = ParamSet.parse(args.params)
    except ValueError as exc:
        raise ParseError(f"--params expects v,k,lambda,t: {exc}")
    tests = [name.strip() for name in args.tests.split(",") if name.strip()] if args.tests else None
    report = run_all(params, _int_list(args.w, "--w"), args.symmetric_s, tests)
    diagnostics = [
        f"{name}: {verdict.detail}" for name, verdict in report.tests.items() if verdict.status == "ruled_out"
    ]
    return CommandResult(
        status="ruled_out" if report.ruled_out else "ok", payload=report.document(), diagnostics=diagnostics
    )


def _search(args: argparse.Namespace) -> CommandResult:
    ctx = make_group(args.group)
    found = brute_search(
        ctx,
        args.k,
        lam=args.lam,
        t=args.t,
        dedup=not args.no_dedup,
        include_pds=args.include_pds,
        budget=args.budget,
    )
    payload = {
        "group": ctx.descriptor,
        "k": args.k,
        "count": len(found),
        "results": [item.document() for item in found],
    }
    return CommandResult(status="ok", payload=payload)


def _autocorr(args: argparse.Namespace) -> CommandResult:
    s = _read_seq(args)
    payload = autocorr_spectrum(s).document(full=args.full)
    classification = ads_from_sequence(s)
    if args.full:
        payload["support"] = support(s)
    payload["ads"] = classification.document() if classification is not None else None
    return CommandResult(status="ok", payload=payload)


def _interleave(args: argparse.Namespace) -> CommandResult:
    if args.group is not None and args.set is not None:
        ctx = make_group(args.group)
        if not ctx.is_cyclic:
            raise PreconditionError(f"interleave seeds live in Z_l, got {ctx.descriptor}")
        C, l = ctx.parse_set(args.set), ctx.order
    else:
        seed_bits = _read_seq(args)
        C, l = support(seed_bits), seed_bits.period
    payload = interleave_support(C, l, args.delta).document()
    payload["sequence"] = interleave(char_seq(C, l), args.delta).to_text()
    return CommandResult(status="ok", payload=payload)


def _cycnum(args: argparse.Namespace) -> CommandResult:
    frame = cycnum_table(args.q, args.e, args.method, args.seed_gamma)
    payload = {"q": args.q, "e": args.e, "method": args.method, "matrix": frame.to_numpy().tolist()}
    return CommandResult(status="ok", payload=payload)


def _table(args: argparse.Namespace) -> CommandResult:
    if args.candidates is not None:
        frame = candidate_table(args.candidates, args.vmax, battery=args.battery)
        payload = {"kind": args.candidates, "vmax": args.vmax}
    elif args.summary:
        frame = summary_table(args.qmax, args.qmin)
        payload = {"qmin": args.qmin, "qmax": args.qmax}
    else:
        if args.q is None or args.e is None:
            raise ParseError("table --cycnum needs --q and --e")
        return _cycnum(args)
    payload["rows"] = json.loads(frame.to_json(orient="records"))
    diagnostics = []
    if args.summary:
        diagnostics = [f"q={row['q']} {row['shape']} disagrees" for row in payload["rows"] if not row["agrees"]]
    return CommandResult(status="ok", payload=payload, diagnostics=diagnostics)


_COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "verify": _verify,
    "construct": _construct,
    "filter": _filter,
    "search": _search,
    "autocorr": _autocorr,
    "interleave": _interleave,
    "cycnum": _cycnum,
    "table": _table,
}


# parser


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--out", default=default(None), help="write the result here instead of stdout")
    parser.add_argument("--format", choices=("json", "csv", "text"), default=default("json"))
    parser.add_argument("--budget", type=int, default=default(None), help="subset budget for search")
    parser.add_argument(
        "--seed-gamma", type=int, default=default(None), help="primitive element overriding the default one"
    )
    parser.add_argument("--log-level", default=default(None), help="override LOGGING_LEVEL for this run")


def _sequence_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seq", help="the sequence as a string of 0 and 1")
    parser.add_argument("--seq-file", help="file holding one line of 0 and 1")
    parser.add_argument("--legendre", type=int, help="Legendre sequence of this prime")
    parser.add_argument("--mseq", type=int, help="m-sequence of period 2^t - 1")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adskit", description="Almost difference set toolkit.")
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = commands.add_parser("verify", parents=[common], help="classify a subset")
    verify.add_argument("--group")
    verify.add_argument("--set")
    verify.add_argument("--subgroup", help="subgroup for a divisible reading")
    verify.add_argument("--from", dest="source", help="JSON document with group and set")

    construct = commands.add_parser("construct", parents=[common], help="run a generator")
    construct.add_argument("--family", required=True, choices=(*SINGLE_FAMILIES, *PRODUCT_FAMILIES))
    for name in ("q", "p", "m", "s", "t", "l", "i"):
        construct.add_argument(f"--{name}", type=int)
    construct.add_argument("--kind", choices=PALEY_HADAMARD_KINDS)
    construct.add_argument("--direction", choices=TRANSFER_DIRECTIONS)
    construct.add_argument("--classes", help="class indices, e.g. 0,2,5")
    construct.add_argument("--triple", help="class triple i,j,l")
    construct.add_argument("--group")
    construct.add_argument("--set")
    construct.add_argument("--group-b")
    construct.add_argument("--set-b")
    construct.add_argument("--d", help="element to add or remove")
    construct.add_argument("--with-zero", action="store_true")
    construct.add_argument("--include-row", action="store_true")
    construct.add_argument("--experimental", action="store_true")

    filt = commands.add_parser("filter", parents=[common], help="feasibility filters on (v,k,lambda,t)")
    filt.add_argument("--params", required=True, help="v,k,lambda,t")
    filt.add_argument("--w", help="moduli for the Hall test, e.g. 2,4")
    filt.add_argument("--symmetric-s", action="store_true")
    filt.add_argument("--tests", help=f"subset of {','.join(ALL_TESTS)}")

    search = commands.add_parser("search", parents=[common], help="exhaustive subset search")
    search.add_argument("--group", required=True)
    search.add_argument("--k", type=int, required=True)
    search.add_argument("--lambda", dest="lam", type=int)
    search.add_argument("--t", type=int)
    search.add_argument("--no-dedup", action="store_true")
    search.add_argument("--include-pds", action="store_true")

    autocorr = commands.add_parser("autocorr", parents=[common], help="periodic autocorrelation spectrum")
    _sequence_options(autocorr)
    autocorr.add_argument("--full", action="store_true", help="include every C(w) and the support")

    inter = commands.add_parser("interleave", parents=[common], help="interleave an ideal seed")
    _sequence_options(inter)
    inter.add_argument("--group")
    inter.add_argument("--set")
    inter.add_argument("--delta", type=int, default=0)

    cycnum = commands.add_parser("cycnum", parents=[common], help="cyclotomic numbers of order e")
    cycnum.add_argument("--q", type=int, required=True)
    cycnum.add_argument("--e", type=int, required=True)
    cycnum.add_argument("--method", choices=("direct", "closed"), default="direct")

    table = commands.add_parser("table", parents=[common], help="reference tables")
    which = table.add_mutually_exclusive_group(required=True)
    which.add_argument("--candidates", choices=("t1", "tv2"))
    which.add_argument("--summary", action="store_true")
    which.add_argument("--cycnum", action="store_true")
    table.add_argument("--vmax", type=int, default=200)
    table.add_argument("--battery", action="store_true", help="run every filter on each candidate")
    table.add_argument("--qmin", type=int, default=3)
    table.add_argument("--qmax", type=int, default=200)
    table.add_argument("--q", type=int)
    table.add_argument("--e", type=int)
    table.add_argument("--method", choices=("direct", "closed"), default="direct")
    return parser


def _failure(exc: Exception) -> CommandResult:
    status = "error" if isinstance(exc, (ParseError, VerificationError)) else "precondition_failed"
    return CommandResult(status=status, diagnostics=[str(exc)])


def dispatch(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse argv and run the command; failures come back as a CommandResult."""
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except AdsKitError as exc:
        return _failure(exc)


# output


def _json_default(obj):
    if hasattr(obj, "item"):
        return obj.item()
    return str(obj)


def _render_text(result: CommandResult) -> str:
    lines = [f"status: {result.status}"]
    for key, value in sorted(result.payload.items()):
        if key == "verdicts":
            labels = [Verdict.model_validate(doc).label() for doc in value]
            lines.append(f"verdicts: {', '.join(labels) or 'none'}")
        elif key == "claimed" and value:
            lines.append(f"claimed: {Verdict.model_validate(value).label()}")
        elif isinstance(value, (str, int, float, bool)):
            lines.append(f"{key}: {value}")
        elif isinstance(value, list) and len(value) <= 64 and all(not isinstance(x, (dict, list)) for x in value):
            lines.append(f"{key}: {', '.join(str(x) for x in value)}")
    lines.extend(f"note: {line}" for line in result.diagnostics)
    return "\n".join(lines) + "\n"


def _render_csv(result: CommandResult) -> str:
    if "rows" in result.payload:
        return pd.DataFrame(result.payload["rows"]).to_csv(index=False)
    if "matrix" in result.payload:
        frame = pd.DataFrame(result.payload["matrix"])
        frame.index.name = "i"
        return frame.to_csv()
    raise PreconditionError("csv output is available for table and cycnum only")


def render(result: CommandResult, fmt: str = "json") -> str:
    if fmt == "text":
        return _render_text(result)
    if fmt == "csv" and result.status in ("ok", "ruled_out"):
        return _render_csv(result)
    return json.dumps(result.model_dump(), indent=2, sort_keys=True, ensure_ascii=False, default=_json_default) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        sys.stderr.write(build_parser().format_usage())
        result, fmt, out = _failure(exc), "json", None
    else:
        if getattr(args, "log_level", None):
            adskit_logger.set_level(args.log_level)
        try:
            result = _COMMANDS[args.command](args)
        except AdsKitError as exc:
            result = _failure(exc)
        fmt, out = args.format, args.out
    try:
        text = render(result, fmt)
    except PreconditionError as exc:
        result = _failure(exc)
        text = render(result)
    if out is not None:
        Path(out).write_text(text)
        adskit_logger.log("DEBUG", f"wrote {out}")
    else:
        sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
