"""Thin command-line client over the in-process web service."""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .render import relation_csv, relation_table
from .service import create_app


class CliFailure(Exception):
    """A failed request, carrying the machine-readable report text."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhorder",
        description="Orders on simple-module labels of small diagram-like algebras.",
    )
    parser.add_argument(
        "--server",
        help="base URL of a running service; by default requests run in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(cmd, formats=("json", "csv", "table"), default_format="json"):
        if formats:
            cmd.add_argument("--format", choices=formats, default=default_format)
        cmd.add_argument("--out", help="write the output to this path instead of stdout")

    biset = sub.add_parser("biset-order", help="orders over a section-closed group catalog")
    biset.add_argument(
        "--catalog",
        default="builtin:s4family",
        help='catalog JSON path or "builtin:s4family"',
    )
    biset.add_argument("--jobs", type=int, default=1)
    biset.add_argument("--verify", action="store_true", help="run the invariant suite inline")
    common(biset)

    brauer = sub.add_parser("brauer-order", help="orders on diagram-algebra labels")
    brauer.add_argument("--n", type=int, required=True)
    brauer.add_argument("--delta", default="1", help="nonzero loop scalar, P or P/Q")
    brauer.add_argument("--verify", action="store_true", help="run the invariant suite inline")
    common(brauer)

    table1 = sub.add_parser(
        "table1", help="the nine-group catalog's one-step relation as a grid"
    )
    table1.add_argument("--jobs", type=int, default=1)
    table1.add_argument("--verify", action="store_true", help="run the invariant suite inline")
    common(table1, default_format="table")

    oracle = sub.add_parser("oracle-check", help="run the brute-force validation battery")
    oracle.add_argument("--suite", default="small", choices=["small"])
    common(oracle, formats=())

    chars = sub.add_parser("char-table", help="exact character table of a builtin group")
    chars.add_argument("--group", required=True)
    common(chars, formats=())

    return parser


def _post(server: str | None, path: str, body: dict) -> dict:
    """POST one JSON request, served in process unless a server URL is given."""

    async def go() -> httpx.Response:
        if server:
            client = httpx.AsyncClient(base_url=server, timeout=None)
        else:
            transport = httpx.ASGITransport(app=create_app())
            client = httpx.AsyncClient(
                transport=transport, base_url="http://qhorder.internal", timeout=None
            )
        async with client:
            return await client.post(path, json=body)

    response = asyncio.run(go())
    if response.status_code != 200:
        try:
            detail = response.json()
        except ValueError:
            detail = {"error": response.text}
        raise CliFailure(json.dumps(detail, indent=2, sort_keys=True))
    return response.json()


def _catalog_argument(path: str):
    if path == "builtin:s4family":
        return path
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliFailure(json.dumps({"error": f"cannot read catalog: {exc}"}))
    except ValueError as exc:
        raise CliFailure(json.dumps({"error": f"catalog is not valid JSON: {exc}"}))


def _render(payload: dict, fmt: str) -> str:
    if fmt == "csv":
        return relation_csv(payload)
    if fmt == "table":
        return relation_table(payload)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "biset-order":
        body = {
            "catalog": _catalog_argument(args.catalog),
            "jobs": args.jobs,
            "verify": args.verify,
        }
        payload = _post(args.server, "/biset-order", body)
        _emit(_render(payload, args.format), args.out)
        return 0
    if args.command == "brauer-order":
        body = {"n": args.n, "delta": args.delta, "verify": args.verify}
        payload = _post(args.server, "/brauer-order", body)
        _emit(_render(payload, args.format), args.out)
        return 0
    if args.command == "table1":
        body = {"catalog": "builtin:s4family", "jobs": args.jobs, "verify": args.verify}
        payload = _post(args.server, "/biset-order", body)
        _emit(_render(payload, args.format), args.out)
        return 0
    if args.command == "oracle-check":
        report = _post(args.server, "/oracle-check", {"suite": args.suite})
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
        return 0 if report["passed"] else 1
    if args.command == "char-table":
        payload = _post(args.server, "/char-table", {"group": args.group})
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    raise CliFailure(json.dumps({"error": f"unknown command {args.command!r}"}))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except CliFailure as failure:
        sys.stderr.write(failure.args[0] + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
