"""Command-line interface: ``cptgroups <verb> ...``.

Exit status: 0 on success, 1 on usage or input errors, 2 when
``verify-paper`` reports a mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import cpt_models as cm
from .exact_arith import render
from .group_core import FiniteGroup, GroupError, embeds, is_isomorphic
from .render import grid
from .repr_theory import CharacterTable, character_table, tables_match

FORMATS = ("text", "json", "csv", "latex")
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

_VERB_FORMATS = {
    "build": ("text", "json"),
    "classes": FORMATS,
    "chartable": FORMATS,
    "irreps": FORMATS,
    "iso": ("text", "json"),
    "embed": ("text", "json"),
    "verify-paper": ("text", "json"),
    "export": FORMATS,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _group_id(text: str) -> str:
    if text not in cm.GROUP_IDS:
        raise argparse.ArgumentTypeError(f"unknown group id {text!r} (choose from {', '.join(cm.GROUP_IDS)})")
    return text


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cptgroups", description="Finite CPT groups, their conjugacy classes and irreducible representations.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, labels=True):
        sp.add_argument("--format", "-f", default="text", choices=FORMATS)
        sp.add_argument("-o", "--output", help="write to this file instead of standard output")
        if labels:
            sp.add_argument("--labels", choices=("cpt", "raw"), default="cpt",
                            help="name elements by CPT token where available (default) or by construction label")

    sp = sub.add_parser("build", help="build a named group (or load one from JSON) and summarise it")
    sp.add_argument("group", nargs="?", type=_group_id)
    sp.add_argument("--from-json", dest="from_json", help="load a group exported with 'export --format json'")
    common(sp)

    sp = sub.add_parser("classes", help="conjugacy classes")
    sp.add_argument("group", type=_group_id)
    common(sp)

    sp = sub.add_parser("chartable", help="character table")
    sp.add_argument("group", type=_group_id)
    sp.add_argument("--method", choices=("constructive", "dixon"), default="constructive",
                    help="explicit irreducible representations or the class-algebra algorithm")
    common(sp)

    sp = sub.add_parser("irreps", help="irreducible representations, element by element")
    sp.add_argument("group", type=_group_id)
    common(sp)

    sp = sub.add_parser("iso", help="test two groups for isomorphism and compare character tables")
    sp.add_argument("group", type=_group_id)
    sp.add_argument("other", type=_group_id)
    common(sp, labels=False)

    sp = sub.add_parser("embed", help="look for an injective homomorphism from the first group into the second")
    sp.add_argument("group", type=_group_id)
    sp.add_argument("other", type=_group_id)
    common(sp, labels=False)

    sp = sub.add_parser("verify-paper", help="recompute the published tables and claims")
    common(sp, labels=False)

    sp = sub.add_parser("export", help="Cayley table export (json is re-importable with build --from-json)")
    sp.add_argument("group", type=_group_id)
    common(sp)
    return p


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def _names(group_id: str, mode: str) -> tuple[str, ...]:
    return cm.display_names(group_id) if mode == "cpt" else cm.named_group(group_id).labels


def _class_rep(c, names: Sequence[str]) -> int:
    # show [PT] rather than [-PT] when both are in the class
    return next((m for m in c.members if not names[m].startswith("-")), c.representative)


def _class_name(c, names: Sequence[str]) -> str:
    lab = names[_class_rep(c, names)]
    return f"[{lab}]" if c.size == 1 else f"{c.size}[{lab}]"


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _summary(g: FiniteGroup, names: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return _dumps(g.to_json())
    orders = g.element_orders
    lines = [
        f"group {g.name}",
        f"order {g.order}",
        f"abelian {'yes' if g.is_abelian else 'no'}",
        f"exponent {g.exponent}",
        f"classes {len(g.classes)}",
        "center " + " ".join(names[x] for x in g.center),
        "generators " + " ".join(names[x] for x in g.generators),
        "elements:",
    ]
    w = max(len(n) for n in names)
    for x in range(g.order):
        extra = f"  ({g.labels[x]})" if names[x] != g.labels[x] else ""
        lines.append(f"  {names[x]:<{w}}  order {orders[x]}{extra}")
    return "\n".join(lines) + "\n"


def cmd_build(args) -> str:
    if args.from_json:
        if args.group:
            raise UsageError("give either a group id or --from-json, not both")
        try:
            with open(args.from_json, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as e:
            raise UsageError(f"cannot read {args.from_json}: {e.strerror}") from None
        except json.JSONDecodeError as e:
            raise UsageError(f"{args.from_json} is not valid JSON: {e}") from None
        try:
            g = FiniteGroup.from_json(data, name=os.path.basename(args.from_json))
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"rejected {args.from_json}: {e}") from None
        return _summary(g, g.labels, args.format)
    if not args.group:
        raise UsageError("a group id or --from-json is required")
    return _summary(cm.named_group(args.group), _names(args.group, args.labels), args.format)


def cmd_classes(args) -> str:
    g = cm.named_group(args.group)
    names = _names(args.group, args.labels)
    if args.format == "json":
        return _dumps([{"label": _class_name(c, names), "size": c.size,
                        "representative": names[_class_rep(c, names)],
                        "members": [names[m] for m in c.members]} for c in g.classes])
    rows = [(_class_name(c, names), [str(c.size), "{" + ", ".join(names[m] for m in c.members) + "}"])
            for c in g.classes]
    if args.format == "text":
        lines = [f"{g.name}: {len(g.classes)} conjugacy classes"]
        w = max(len(r[0]) for r in rows)
        lines += [f"{lab:<{w}}  = {members}" for lab, (_, members) in rows]
        return "\n".join(lines) + "\n"
    return grid(args.format, "class", ["size", "members"], rows, caption=f"conjugacy classes of {g.name}")


def _table_for(args) -> CharacterTable:
    if args.method == "dixon":
        return character_table(cm.named_group(args.group))
    return cm.constructive_table(args.group)


def cmd_chartable(args) -> str:
    t = _table_for(args)
    g = t.group
    names = _names(args.group, args.labels)
    if args.format == "json":
        data = t.to_json(names)
        for entry, c in zip(data["classes"], t.classes):
            entry["label"] = _class_name(c, names)
            entry["representative"] = names[_class_rep(c, names)]
        return _dumps(data)
    headers = [_class_name(c, names) for c in t.classes]
    rows = [(name, [render(v) for v in r]) for name, r in zip(t.row_names, t.rows)]
    return grid(args.format, f"Ch {g.name}", headers, rows, caption=f"character table of {g.name} ({args.method})")


def cmd_irreps(args) -> str:
    g = cm.named_group(args.group)
    names = _names(args.group, args.labels)
    reps = cm.named_irreps(args.group)
    if args.format == "json":
        return _dumps([{"name": r.name, "dim": r.dim,
                        "matrices": {names[x]: [[v.to_json() for v in row] for row in r(x).row_lists()]
                                     for x in range(g.order)}} for r in reps])

    def cell(m):
        return render(m[0, 0]) if m.rows == 1 else str(m)

    rows = [(r.name, [cell(r(x)) for x in range(g.order)]) for r in reps]
    return grid(args.format, f"IIR {g.name}", list(names), rows, caption=f"irreducible representations of {g.name}")


def cmd_iso(args) -> str:
    a, b = cm.named_group(args.group), cm.named_group(args.other)
    iso = is_isomorphic(a, b)
    ta, tb = character_table(a), character_table(b)
    same = ta.is_square() and tb.is_square() and tables_match(ta, tb) is not None
    if args.format == "json":
        out = {"isomorphic": iso is not None, "character_tables_match": same}
        if iso is not None:
            out["map"] = {a.labels[x]: b.labels[iso(x)] for x in range(a.order)}
        return _dumps(out)
    verdict = "isomorphic" if iso is not None else "not isomorphic"
    tables = "character tables match" if same else "character tables differ"
    lines = [f"{verdict}; {tables}"]
    if iso is not None:
        lines += [f"  {a.labels[x]} -> {b.labels[iso(x)]}" for x in range(a.order)]
    return "\n".join(lines) + "\n"


def cmd_embed(args) -> str:
    h, g = cm.named_group(args.group), cm.named_group(args.other)
    emb = embeds(h, g)
    if args.format == "json":
        out = {"embeds": emb is not None}
        if emb is not None:
            out["map"] = {h.labels[x]: g.labels[emb(x)] for x in range(h.order)}
        return _dumps(out)
    if emb is None:
        return f"{args.group} does not embed in {args.other}\n"
    lines = [f"{args.group} embeds in {args.other}"]
    lines += [f"  {h.labels[x]} -> {g.labels[emb(x)]}" for x in range(h.order)]
    return "\n".join(lines) + "\n"


def cmd_export(args) -> str:
    g = cm.named_group(args.group)
    if args.format == "json":
        return _dumps(g.to_json())
    names = _names(args.group, args.labels)
    rows = [(names[a], [names[int(g.cayley[a, b])] for b in range(g.order)]) for a in range(g.order)]
    return grid(args.format, "·", list(names), rows, caption=f"multiplication table of {g.name}")


_COMMANDS = {
    "build": cmd_build,
    "classes": cmd_classes,
    "chartable": cmd_chartable,
    "irreps": cmd_irreps,
    "iso": cmd_iso,
    "embed": cmd_embed,
    "export": cmd_export,
}


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _check_output_path(path: Optional[str]) -> None:
    if path is None:
        return
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent) or not os.access(parent, os.W_OK) or os.path.isdir(path):
        raise UsageError(f"cannot write to {path}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format not in _VERB_FORMATS[args.verb]:
            raise UsageError(f"format {args.format!r} is not available for {args.verb} "
                             f"(choose from {', '.join(_VERB_FORMATS[args.verb])})")
        _check_output_path(args.output)
        if args.verb == "verify-paper":
            from .verifier import verify_paper
            report = verify_paper()
            _write(report.to_json_text() if args.format == "json" else report.to_text(), args.output)
            return EXIT_MISMATCH if report.mismatches else EXIT_OK
        text = _COMMANDS[args.verb](args)
        _write(text, args.output)
    except UsageError as e:
        print(f"cptgroups: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, OSError) as e:
        print(f"cptgroups: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
