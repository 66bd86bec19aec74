"""Command-line front end.

Commands run in-process by default; with --url they are sent to a running
service instead, so the CLI is a thin client over the same handlers.

Exit codes: 0 success/agreement, 1 usage or domain error, 2 verification
disagreement, 3 inconclusive (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import NoReturn, Optional

import pydantic

from .algebra import AlgebraError
from .gp_core import GraphError
from .hom_engine import BudgetExhaustedError
from .service import handlers
from .service.models import (
    CayleyRequest,
    CayleyResponse,
    CheckTableRequest,
    CheckTableResponse,
    ClassifyRequest,
    PlaneRow,
    RetractRequest,
    RetractResponse,
    ScanRequest,
    ScanResponse,
    TableRequest,
    TableResponse,
    VerifyReport,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_INCONCLUSIVE = 3


class CliError(Exception):
    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors by default; this artifact uses 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_ENDPOINTS = {
    ClassifyRequest: ("/classify", PlaneRow),
    VerifyRequest: ("/verify", VerifyReport),
    RetractRequest: ("/retract", RetractResponse),
    CayleyRequest: ("/cayley", CayleyResponse),
    TableRequest: ("/table", TableResponse),
    CheckTableRequest: ("/check-table", CheckTableResponse),
    ScanRequest: ("/scan", ScanResponse),
}

_HANDLERS = {
    ClassifyRequest: handlers.handle_classify,
    VerifyRequest: handlers.handle_verify,
    RetractRequest: handlers.handle_retract,
    CayleyRequest: handlers.handle_cayley,
    TableRequest: handlers.handle_table,
    CheckTableRequest: handlers.handle_check_table,
    ScanRequest: handlers.handle_scan,
}


def _call(request: pydantic.BaseModel, url: Optional[str]) -> pydantic.BaseModel:
    if url is None:
        handler = _HANDLERS[type(request)]
        try:
            return handler(request)
        except BudgetExhaustedError as exc:
            raise CliError(f"budget exhausted: {exc}", EXIT_INCONCLUSIVE)
        except (GraphError, AlgebraError, ValueError) as exc:
            raise CliError(str(exc), EXIT_USAGE)
    import httpx

    path, response_model = _ENDPOINTS[type(request)]
    try:
        resp = httpx.post(
            url.rstrip("/") + path, json=request.model_dump(), timeout=600.0
        )
    except httpx.HTTPError as exc:
        raise CliError(f"request to {url} failed: {exc}", EXIT_USAGE)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except json.JSONDecodeError:
            detail = resp.text
        code = (
            EXIT_INCONCLUSIVE
            if isinstance(detail, str) and detail.startswith("budget exhausted")
            else EXIT_USAGE
        )
        raise CliError(f"service error: {detail}", code)
    return response_model.model_validate(resp.json())


def _print_json(model: pydantic.BaseModel) -> None:
    print(json.dumps(model.model_dump(), indent=2))


def _yesno(value: bool) -> str:
    return "yes" if value else "no"


def cmd_classify(args: argparse.Namespace) -> int:
    row = _call(
        ClassifyRequest(n=args.n, k=args.k, brute_aut=args.brute_aut), args.url
    )
    assert isinstance(row, PlaneRow)
    if args.format == "json":
        _print_json(row)
        return EXIT_OK
    expected = (
        "(exceptional)" if row.aut_order_expected is None
        else str(row.aut_order_expected)
    )
    found = "(not computed)" if row.aut_order_found is None else str(row.aut_order_found)
    print(f"G({row.n},{row.k})")
    print(f"  bipartite:            {_yesno(row.bipartite)}")
    print(f"  core:                 {_yesno(row.core)}")
    print(f"  vertex-transitive:    {_yesno(row.vertex_transitive)}")
    print(f"  group-graph:          {_yesno(row.group_graph)}")
    print(f"  2gen-monoid-graph:    {_yesno(row.two_gen_monoid_graph)}")
    print(f"  loopless-obstruction: {_yesno(row.loopless_obstruction)}")
    print(f"  aut-order-expected:   {expected}")
    print(f"  aut-order-found:      {found}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    try:
        req = VerifyRequest(n_max=args.nmax, checks=checks)
    except pydantic.ValidationError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    report = _call(req, args.url)
    assert isinstance(report, VerifyReport)
    if args.format == "json":
        _print_json(report)
    else:
        for res in report.results:
            print(
                f"check {res.check}: n<={res.n_max_effective} "
                f"instances={res.instances} agreements={res.agreements} "
                f"disagreements={len(res.disagreements)} "
                f"inconclusive={len(res.inconclusive)}"
            )
            for d in res.disagreements:
                print(f"  DISAGREE G({d.n},{d.k}): {d.closed_form} vs {d.oracle}")
            for i in res.inconclusive:
                print(f"  INCONCLUSIVE G({i.n},{i.k}): {i.detail}")
        print("result: " + ("OK" if report.ok else "FAILED"))
    if any(res.disagreements for res in report.results):
        return EXIT_DISAGREEMENT
    if any(res.inconclusive for res in report.results):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_retract(args: argparse.Namespace) -> int:
    resp = _call(RetractRequest(n=args.n, k=args.k, format=args.format), args.url)
    assert isinstance(resp, RetractResponse)
    if args.format == "dot":
        print(resp.dot, end="")
    else:
        _print_json(resp)
    return EXIT_OK


def cmd_cayley(args: argparse.Namespace) -> int:
    resp = _call(
        CayleyRequest(
            construction=args.construction, n=args.n, k=args.k, format=args.format
        ),
        args.url,
    )
    assert isinstance(resp, CayleyResponse)
    if args.format == "dot":
        print(resp.dot, end="")
    else:
        _print_json(resp)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    resp = _call(TableRequest(name=args.name), args.url)
    _print_json(resp)
    return EXIT_OK


def cmd_check_table(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read table file {args.path}: {exc}", EXIT_USAGE)
    try:
        table = TableResponse.model_validate(obj)
        req = CheckTableRequest(
            table=table,
            connection=args.connection,
            target=tuple(args.target) if args.target else None,
        )
    except pydantic.ValidationError as exc:
        raise CliError(f"bad table file: {exc}", EXIT_USAGE)
    resp = _call(req, args.url)
    assert isinstance(resp, CheckTableResponse)
    _print_json(resp)
    if resp.target is not None and resp.matches_target is False:
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    resp = _call(ScanRequest(n_max=args.nmax), args.url)
    assert isinstance(resp, ScanResponse)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(resp.csv)
    else:
        print(resp.csv, end="")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _int_pair(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpgraph", description=__doc__)
    parser.add_argument(
        "--url", default=None,
        help="base URL of a running service; default is in-process execution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one parameter pair")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--brute-aut", action="store_true",
                   help="force brute-force automorphism count (default only n <= 12)")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="closed forms vs exhaustive oracles")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--checks", default="core,endo,aut",
                   help="comma list from: core, endo, aut")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("retract", help="explicit retraction for NotCore instances")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("cayley", help="build a named Cayley digraph")
    p.add_argument("construction",
                   help="petersen-s|petersen-m|petersen-sp|petersen-mp|dodecahedron|"
                        "desargues|cay1|cay1-rev|cay1-loop|group")
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("k", type=int, nargs="?", default=None)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("table", help="emit a builtin multiplication table as JSON")
    p.add_argument("name")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check-table", help="analyze a table file, optionally vs G(n,k)")
    p.add_argument("path")
    p.add_argument("--target", type=int, nargs=2, metavar=("N", "K"), default=None)
    p.add_argument("--connection", type=_int_pair, default=None,
                   help="comma-separated element ids overriding the file's connection")
    p.set_defaults(func=cmd_check_table)

    p = sub.add_parser("scan", help="emit the parameter-plane dataset as CSV")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"gpgraph: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except pydantic.ValidationError as exc:
        print(f"gpgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
