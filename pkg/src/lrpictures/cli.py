"""Command-line front end.

One verb per invocation.  Partitions are comma-separated descending
integers ("3,1,1"); pass "-" for the empty partition.  Orders are named
by "jay", "eff", or "index:<k>" with k an index into the admissible
order listing for the relevant cell set (see the orders verb).  Output
is plain text by default and JSON with --format json; identical
invocations produce byte-identical output.

Exit status: 0 on success, 1 when a verification verb finds a failure,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .lr import (LRInstance, conjecture_experiment, conjecture_sweep,
                 decompose_tensor, lr_coefficient_all_methods, lr_filter, phi, psi,
                 sweep, verify_bijection)
from .pictures import Picture, TotalOrder, enumerate_admissible_orders, enumerate_pictures
from .shapes import Partition, cells
from .tableaux import Tableau
from .wordcrystal import verify_embedding


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts; "", "-", and "0" all mean the empty shape."""
    stripped = text.strip()
    if stripped in ("", "-", "0"):
        return Partition(())
    try:
        parts = tuple(int(piece) for piece in stripped.split(","))
    except ValueError:
        raise ValueError(
            f"cannot parse partition {text!r}: expected comma-separated integers") from None
    return Partition(parts)


def resolve_order(name: str, cell_set: tuple) -> TotalOrder:
    """Turn an --order value into a total order on the given cells."""
    if name == "jay":
        return TotalOrder.jay(cell_set)
    if name == "eff":
        return TotalOrder.eff(cell_set)
    if name.startswith("index:"):
        tail = name[len("index:"):]
        if not tail.isdigit():
            raise ValueError(f"bad order index {tail!r}: expected index:<k> with k a nonnegative integer")
        k = int(tail)
        orders = enumerate_admissible_orders(cell_set)
        if k >= len(orders):
            raise ValueError(
                f"order index {k} out of range: {len(orders)} admissible orders exist")
        return orders[k]
    raise ValueError(f"unknown order {name!r}: expected jay, eff, or index:<k>")


def _fmt_parts(shape: Partition) -> str:
    return ",".join(str(part) for part in shape.parts) if shape.parts else "-"


def _fmt_cell(cell: tuple[int, int]) -> str:
    return f"({cell[0]},{cell[1]})"


def _fmt_picture(pic: Picture) -> str:
    return " ".join(f"{_fmt_cell(a)}->{_fmt_cell(b)}" for a, b in pic.pairs)


def _fmt_rows(tab: Tableau) -> str:
    return "/".join(",".join(str(value) for value in row) for row in tab.rows)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _order_label(order: TotalOrder, cell_set: tuple) -> str:
    index = enumerate_admissible_orders(cell_set).index(order)
    tags = [tag for tag, ref in (("jay", TotalOrder.jay(cell_set)),
                                 ("eff", TotalOrder.eff(cell_set)))
            if order == ref]
    return f"{index}:{'+'.join(tags)}" if tags else str(index)


def _truncate(items: tuple, limit: int | None) -> tuple:
    if limit is None:
        return items
    if limit < 0:
        raise ValueError("--limit must be nonnegative")
    return items[:limit]


def _instance(args: argparse.Namespace) -> LRInstance:
    return LRInstance(parse_partition(args.lam), parse_partition(args.mu),
                      parse_partition(args.nu), args.rank)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_count(args: argparse.Namespace) -> int:
    inst = _instance(args)
    triple = lr_coefficient_all_methods(inst)
    if args.format == "json":
        _emit_json({"instance": inst.to_json(),
                    "counts": {"pictures": triple.pictures,
                               "crystals": triple.crystals,
                               "lattice": triple.lattice}})
    else:
        print(f"pictures={triple.pictures} crystals={triple.crystals} lattice={triple.lattice}")
    return 0


def _cmd_pictures(args: argparse.Namespace) -> int:
    inst = _instance(args)
    domain = resolve_order(args.order, cells(inst.mu)) if args.order else None
    pics = _truncate(enumerate_pictures(inst.mu, inst.skew_shape, domain), args.limit)
    if args.format == "json":
        _emit_json({"instance": inst.to_json(),
                    "pictures": [pic.to_json() for pic in pics]})
    else:
        for pic in pics:
            print(_fmt_picture(pic))
    return 0


def _cmd_crystals(args: argparse.Namespace) -> int:
    inst = _instance(args)
    order = resolve_order(args.order, cells(inst.mu)) if args.order else None
    tabs = _truncate(lr_filter(inst, order), args.limit)
    if args.format == "json":
        _emit_json({"instance": inst.to_json(),
                    "tableaux": [tab.to_json() for tab in tabs]})
    elif tabs:
        print("\n\n".join(tab.ascii() for tab in tabs))
    return 0


def _cmd_phi(args: argparse.Namespace) -> int:
    inst = _instance(args)
    pics = _truncate(enumerate_pictures(inst.mu, inst.skew_shape), args.limit)
    pairs = [(pic, phi(pic, inst)) for pic in pics]
    if args.format == "json":
        _emit_json({"instance": inst.to_json(),
                    "pairs": [{"picture": pic.to_json(), "tableau": tab.to_json()}
                              for pic, tab in pairs]})
    else:
        for pic, tab in pairs:
            print(f"{_fmt_picture(pic)} => {_fmt_rows(tab)}")
    return 0


def _cmd_psi(args: argparse.Namespace) -> int:
    inst = _instance(args)
    tabs = _truncate(lr_filter(inst), args.limit)
    pairs = [(tab, psi(tab, inst)) for tab in tabs]
    if args.format == "json":
        _emit_json({"instance": inst.to_json(),
                    "pairs": [{"tableau": tab.to_json(), "picture": pic.to_json()}
                              for tab, pic in pairs]})
    else:
        for tab, pic in pairs:
            print(f"{_fmt_rows(tab)} => {_fmt_picture(pic)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.nu is not None:
        if args.lam is None or args.mu is None:
            raise ValueError("verify with --nu needs --lambda and --mu as well")
        report = verify_bijection(_instance(args))
        if args.format == "json":
            _emit_json(report.to_json())
        else:
            print(f"pictures={report.pictures} crystals={report.crystals} "
                  f"lattice={report.lattice}")
            print(f"bijection={report.bijection}")
            if report.counterexample is not None:
                print(f"counterexample={json.dumps(report.counterexample)}")
        return 0 if report.ok else 1
    if args.mu is None or args.rank is None:
        raise ValueError("verify needs --nu (bijection check) or --mu with --rank "
                         "(reading embedding check)")
    shape = parse_partition(args.mu)
    cell_set = cells(shape)
    order = resolve_order(args.order, cell_set) if args.order else TotalOrder.jay(cell_set)
    report = verify_embedding(shape, args.rank, order)
    if args.format == "json":
        _emit_json({"shape": shape.to_json(), "max_entry": args.rank,
                    "order": order.to_json(), "ok": report.ok,
                    "counterexample": report.counterexample})
    else:
        print(f"embedding={'ok' if report.ok else 'fail'}")
        if report.counterexample is not None:
            print(f"counterexample={json.dumps(report.counterexample)}")
    return 0 if report.ok else 1


def _cmd_decompose(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    order = resolve_order(args.order, cells(mu)) if args.order else None
    table = decompose_tensor(lam, mu, args.rank, order)
    if args.format == "json":
        _emit_json({"lambda": lam.to_json(), "mu": mu.to_json(),
                    "rank_bound": args.rank,
                    "components": [{"nu": shape.to_json(), "multiplicity": mult}
                                   for shape, mult in table.items()]})
    else:
        for shape, mult in table.items():
            print(f"nu={_fmt_parts(shape)} multiplicity={mult}")
    return 0


def _cmd_orders(args: argparse.Namespace) -> int:
    mu = parse_partition(args.mu)
    cell_set = cells(mu)
    everything = enumerate_admissible_orders(cell_set)
    listed = _truncate(everything, args.limit)
    if args.format == "json":
        _emit_json({"mu": mu.to_json(), "total": len(everything),
                    "orders": [order.to_json() for order in listed]})
    else:
        for index, order in enumerate(listed):
            tags = [tag for tag, ref in (("jay", TotalOrder.jay(cell_set)),
                                         ("eff", TotalOrder.eff(cell_set)))
                    if order == ref]
            suffix = f" [{','.join(tags)}]" if tags else ""
            print(f"{index}: " + " ".join(_fmt_cell(c) for c in order.cells) + suffix)
        print(f"total={len(everything)}")
    return 0


def _conjecture_rows(args: argparse.Namespace):
    if args.max_size is not None:
        return conjecture_sweep(args.max_size)
    if args.lam is None or args.mu is None or args.nu is None:
        raise ValueError("conjecture needs --lambda, --mu, and --nu, or --max-size")
    inst = _instance(args)
    rows = []
    for codomain in enumerate_admissible_orders(inst.skew_shape.cells()):
        for domain in enumerate_admissible_orders(cells(inst.mu)):
            rows.append(conjecture_experiment(inst, codomain, domain))
    return tuple(rows)


def _cmd_conjecture(args: argparse.Namespace) -> int:
    rows = _conjecture_rows(args)
    holds = sum(1 for row in rows if row.holds)
    if args.format == "json":
        _emit_json({"rows": [row.to_json() for row in rows],
                    "holds": holds, "fails": len(rows) - holds})
        return 0
    for row in rows:
        inst = row.instance
        codomain = _order_label(row.codomain_order, inst.skew_shape.cells())
        domain = _order_label(row.domain_order, cells(inst.mu))
        print(f"lambda={_fmt_parts(inst.lam)} mu={_fmt_parts(inst.mu)} "
              f"nu={_fmt_parts(inst.nu)} codomain={codomain} domain={domain} "
              f"crystals={row.crystals} pictures={row.pictures} "
              f"well_defined={_yn(row.well_defined)} injective={_yn(row.injective)} "
              f"surjective={_yn(row.surjective)} "
              f"verdict={'holds' if row.holds else 'fails'}")
    print(f"rows={len(rows)} holds={holds} fails={len(rows) - holds}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    report = sweep(args.max_size)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        for row in report.per_size:
            print(f"size={row.size} instances={row.instances} "
                  f"mismatches={row.mismatches} max_coefficient={row.max_coefficient}")
        print(f"instances={report.instances} mismatches={len(report.failures)} "
              f"status={'ok' if report.ok else 'fail'}")
    return 0 if report.ok else 1


_HANDLERS: dict[str, Callable[[argparse.Namespace], int]] = {
    "count": _cmd_count, "pictures": _cmd_pictures, "crystals": _cmd_crystals,
    "phi": _cmd_phi, "psi": _cmd_psi, "verify": _cmd_verify,
    "decompose": _cmd_decompose, "orders": _cmd_orders,
    "conjecture": _cmd_conjecture, "sweep": _cmd_sweep,
}

_PARTITION_HELP = "comma-separated parts, e.g. 3,1,1; use - for the empty shape"
_ORDER_HELP = "jay, eff, or index:<k> into the admissible order listing"


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output encoding (default text)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrpictures",
        description="Pictures, Littlewood-Richardson crystals, and the bijection "
                    "between them.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name: str, help_text: str, *, lam: str | None = None,
             mu: str | None = None, nu: str | None = None, rank: bool = False,
             order: bool = False, limit: bool = False,
             max_size: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if lam is not None:
            p.add_argument("--lambda", dest="lam", required=lam == "required",
                           metavar="PARTS", help=_PARTITION_HELP)
        if mu is not None:
            p.add_argument("--mu", required=mu == "required",
                           metavar="PARTS", help=_PARTITION_HELP)
        if nu is not None:
            p.add_argument("--nu", required=nu == "required",
                           metavar="PARTS", help=_PARTITION_HELP)
        if rank:
            p.add_argument("--rank", type=int, metavar="N",
                           help="entry bound for tableaux")
        if order:
            p.add_argument("--order", metavar="ORDER", help=_ORDER_HELP)
        if limit:
            p.add_argument("--limit", type=int, metavar="N",
                           help="print at most N items")
        if max_size:
            p.add_argument("--max-size", dest="max_size", type=int, metavar="N",
                           help="largest target size to cover")
        _add_format(p)
        return p

    verb("count", "picture, crystal, and lattice counts for one instance",
         lam="required", mu="required", nu="required", rank=True)
    verb("pictures", "list the pictures of one instance",
         lam="required", mu="required", nu="required", rank=True, order=True,
         limit=True)
    verb("crystals", "list the filtered tableaux of one instance",
         lam="required", mu="required", nu="required", rank=True, order=True,
         limit=True)
    verb("phi", "table of pictures and their image tableaux",
         lam="required", mu="required", nu="required", rank=True, limit=True)
    verb("psi", "table of filtered tableaux and their image pictures",
         lam="required", mu="required", nu="required", rank=True, limit=True)
    verb("verify", "check the bijection on one instance, or with --mu and "
                   "--rank alone check the reading embedding",
         lam="optional", mu="optional", nu="optional", rank=True, order=True)
    p = verb("decompose", "tensor product decomposition table",
             lam="required", mu="required", order=True)
    p.add_argument("--rank", type=int, required=True, metavar="N",
                   help="entry bound for tableaux")
    verb("orders", "list the admissible orders on the cells of a shape",
         mu="required", limit=True)
    verb("conjecture", "order-pair experiment on one instance or a sweep",
         lam="optional", mu="optional", nu="optional", rank=True, max_size=True)
    p = verb("sweep", "verify the bijection on every instance up to a size",
             max_size=False)
    p.add_argument("--max-size", dest="max_size", type=int, required=True,
                   metavar="N", help="largest target size to cover")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        return _HANDLERS[args.verb](args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
