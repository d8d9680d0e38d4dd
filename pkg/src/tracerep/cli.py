"""Command line client.

A thin client over the HTTP service: by default it mounts the FastAPI
app in-process, so no server needs to be running; pass --url to talk to
a remote instance instead.

Exit codes: 0 success, 1 verification failure, 2 argument or parse
error (including unknown lemma ids), 3 internal nonnegativity failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import app
    return TestClient(app, raise_server_exceptions=False)


def _fail(resp: httpx.Response) -> int:
    detail = None
    try:
        detail = resp.json().get("detail")
    except ValueError:
        pass
    if isinstance(detail, dict) and detail.get("error") == "nonnegativity":
        print(f"internal error: {detail.get('message')}", file=sys.stderr)
        return EXIT_INTERNAL
    print(f"error ({resp.status_code}): {detail or resp.text}",
          file=sys.stderr)
    return EXIT_PARSE


def _print_rep(result: dict, as_json: bool, extra: dict | None = None) -> None:
    if as_json:
        payload = dict(extra or {})
        payload["result"] = result
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    comps = result.get("components", [])
    for comp in comps:
        print(f"  {comp['mult']:>3} * V[{comp['plus']}|{comp['minus']}]")
    total = sum(c["mult"] for c in comps)
    print(f"  ({len(comps)} distinct, total multiplicity {total})")


def cmd_decompose(args, client) -> int:
    body = {"kind": args.kind, "bipartitions": args.bipartitions,
            "degree": args.degree, "power_kind": args.power_kind}
    resp = client.post("/decompose", json=body)
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    _print_rep(data["result"], args.json,
               {"schema": data["schema"], "kind": data["kind"]})
    return EXIT_OK


def cmd_w_table(args, client) -> int:
    resp = client.get("/w-table", params={"degree": args.degree,
                                          "variant": args.variant})
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"degree {data['degree']} ({data['variant']}), "
          f"minimal rank {data['minimal_rank']}")
    for entry in data["entries"]:
        print(f"W({entry['mu']},{entry['nu']}):")
        _print_rep(entry["value"], False)
    print("total:")
    _print_rep(data["total"], False)
    return EXIT_OK


def cmd_dim_poly(args, client) -> int:
    resp = client.get("/dim-poly", params={"degree": args.degree})
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
        return EXIT_OK
    terms = []
    for k, c in enumerate(data["coefficients_ascending"]):
        if c["numerator"] == 0:
            continue
        frac = f"{c['numerator']}" if c["denominator"] == 1 else \
            f"{c['numerator']}/{c['denominator']}"
        terms.append(f"({frac})*n^{k}" if k else f"({frac})")
    print(f"degree {data['polynomial_degree']}: " + " + ".join(terms))
    return EXIT_OK


def cmd_torelli_char(args, client) -> int:
    resp = client.get("/torelli-char",
                      params={"family": args.family,
                              "max_degree": args.max_degree,
                              "algebra": args.algebra})
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"family {data['family']}, flavor {data['flavor']}, "
          f"truncated at degree {data['max_degree']}")
    for row in data["series"]:
        parts = []
        for term in row["terms"]:
            c = f"{term['coeff_num']}" if term["coeff_den"] == 1 else \
                f"{term['coeff_num']}/{term['coeff_den']}"
            parts.append(f"{c}*s[{term['partition']}]")
        print(f"  t^{row['degree']}: " + " + ".join(parts))
    return EXIT_OK


def cmd_verify(args, client) -> int:
    body = {"lemma": args.lemma, "n": args.n,
            "max_degree": args.max_degree, "budget": args.budget}
    resp = client.post("/verify", json=body)
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        status = "PASS" if data["passed"] else "FAIL"
        print(f"{data['lemma']}: {status}")
        for item in data["report"].get("items", []):
            print(f"  {item}")
    return EXIT_OK if data["passed"] else EXIT_VERIFY_FAILED


def cmd_list(args, client) -> int:
    resp = client.get("/lemmas")
    if resp.status_code != 200:
        return _fail(resp)
    data = resp.json()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for ident in data["lemmas"]:
            print(ident)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracerep",
        description="Decompositions, degree tables and verification "
                    "suites for traceless symmetric algebras.")
    parser.add_argument("--url", default=None,
                        help="base URL of a running service "
                             "(default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="tensor/power/wedge decompositions")
    p.add_argument("kind", choices=["tensor", "power", "wedge-u", "wedge-uo"])
    p.add_argument("bipartitions", nargs="*",
                   help="bipartitions as 'plus|minus', e.g. '1,1|1'")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--power-kind", choices=["alternating", "symmetric"],
                   default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("w-table", help="bigraded component table")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--variant", choices=["ia", "io"], default="ia")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_w_table)

    p = sub.add_parser("dim-poly", help="traceless dimension polynomial")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dim_poly)

    p = sub.add_parser("torelli-char", help="character series of a family")
    p.add_argument("--family", required=True,
                   help="X, X', X'', Y, Y', Y'', Z, Z' or Z''")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--algebra", action="store_true",
                   help="character of the traceless symmetric algebra")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_torelli_char)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("lemma")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list verification suite ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    with _client(args.url) as client:
        try:
            return args.func(args, client)
        except httpx.HTTPError as exc:
            print(f"transport error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
