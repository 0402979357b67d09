"""Command-line front end.

Subcommands: crystal, demazure, character, rank-one, verify.  Output is
deterministic byte for byte: element ids are BFS order, edges and members
are emitted sorted, and JSON key order is fixed.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 output write failure, 4 resource
cap exceeded.  Set CRYSTAL_LOG to error, info or debug to adjust logging.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from .character import (FormalCharacter, apply_demazure_word, char_of,
                        verify_demazure_character, weyl_character,
                        weyl_dimension)
from .crystal import DEFAULT_MAX_ELEMENTS, ResourceCapError, generate_crystal, verify_normal
from .demazure import (demazure_crystal, reduced_word_independence,
                       verify_filtration_structure, verify_string_property)
from .qarith import qint
from .rank_one import RankOneModule, act_e, act_f, crystal_f_tilde, verify_sl2_relation
from .root_data import cartan_datum, longest_word, weyl_group

log = logging.getLogger("qcrystal")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_WRITE = 3
EXIT_RESOURCE = 4


@dataclass
class JobSpec:
    command: str
    type_name: str | None
    weight: tuple[int, ...]
    word: tuple[int, ...] | None
    fmt: str
    out: str | None
    max_elements: int
    inject_failure: bool = False


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qcrystal",
        description="exact crystals, Demazure subsets and characters")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word_help=None, typed=True):
        if typed:
            p.add_argument("--type", required=True, metavar="NAME",
                           help="root-system type, e.g. A2, B2, G2")
        p.add_argument("--weight", required=True, type=_int_list, metavar="C1,C2,...",
                       help="dominant weight in fundamental-weight coordinates")
        if word_help:
            p.add_argument("--word", type=_int_list, metavar="I1,I2,...", help=word_help)
        p.add_argument("--format", dest="fmt", choices=("json", "dot", "text"),
                       default="text", help="output format (default text)")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS,
                       metavar="N", help="crystal size cap (default %(default)s)")

    common(sub.add_parser("crystal", help="build B(lambda) and export it"))
    p = sub.add_parser("demazure", help="build a Demazure subset B_w(lambda)")
    common(p, word_help="reduced word, required")
    p = sub.add_parser("character", help="character of B(lambda) or B_w(lambda)")
    common(p, word_help="optional reduced word for a Demazure character")
    p = sub.add_parser("rank-one", help="print the rank-one action tables")
    common(p, typed=False)
    p = sub.add_parser("verify", help="run the verification suite")
    common(p)
    p.add_argument("--inject-failure", action="store_true",
                   help="corrupt one Demazure subset first (negative-control test hook)")
    return parser


def parse_args(argv):
    """Parse and validate argv into a JobSpec; exits with code 2 on misuse."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    type_name = getattr(ns, "type", None)
    word = getattr(ns, "word", None)
    if type_name is not None:
        try:
            datum = cartan_datum(type_name)
        except ValueError as exc:
            parser.error(str(exc))
        if len(ns.weight) != datum.rank:
            parser.error(f"--weight needs {datum.rank} coordinates for {datum.name}, "
                         f"got {len(ns.weight)}")
        if word is not None and any(not 1 <= i <= datum.rank for i in word):
            parser.error(f"--word letters must lie in 1..{datum.rank}")
    else:
        if len(ns.weight) != 1:
            parser.error("rank-one takes a single integer --weight")
        if ns.weight[0] < 0:
            parser.error("rank-one highest weight must be nonnegative")
    if ns.command == "demazure" and word is None:
        parser.error("demazure requires --word")
    if ns.command in ("crystal", "demazure", "character", "verify"):
        if any(c < 0 for c in ns.weight):
            parser.error(f"--weight must be dominant (all coordinates >= 0), got {ns.weight}")
    return JobSpec(
        command=ns.command,
        type_name=type_name,
        weight=ns.weight,
        word=word,
        fmt=getattr(ns, "fmt", "text"),
        out=ns.out,
        max_elements=ns.max_elements,
        inject_failure=getattr(ns, "inject_failure", False))


# -- exporters ----------------------------------------------------------


def _sorted_edges(graph):
    return sorted(graph.edges.items())


def emit_json(graph, members=None):
    """Deterministic JSON for a crystal or a Demazure subset of it."""
    payload = {
        "family": graph.datum.family,
        "rank": graph.datum.rank,
        "highest_weight": list(graph.highest_weight),
        "elements": [
            {"id": b,
             "weight": list(graph.weight(b)),
             "eps": [graph.eps(b, i) for i in graph.indices()],
             "phi": [graph.phi(b, i) for i in graph.indices()]}
            for b in graph.all_ids()],
        "edges": [
            {"from": b, "to": child, "i": i}
            for (b, i), child in _sorted_edges(graph)],
    }
    if members is not None:
        payload["members"] = sorted(members)
    return (json.dumps(payload, indent=2) + "\n").encode()


def emit_dot(graph, members=None):
    """Deterministic DOT digraph, nodes labeled by weight, edges by index."""
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for b in graph.all_ids():
        label = "(" + ", ".join(str(c) for c in graph.weight(b)) + ")"
        extra = ", peripheries=2" if members is not None and b in members else ""
        lines.append(f'  n{b} [label="{label}"{extra}];')
    for (b, i), child in _sorted_edges(graph):
        lines.append(f'  n{b} -> n{child} [label="{i}"];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def emit_text(graph, members=None):
    name = graph.datum.name
    lam = ", ".join(str(c) for c in graph.highest_weight)
    lines = [f"crystal {name} highest weight ({lam}): {len(graph)} elements"]
    if members is not None:
        lines[0] += f", subset of size {len(members)}"
    for b in graph.all_ids():
        mark = "*" if members is not None and b in members else " "
        wt = ", ".join(str(c) for c in graph.weight(b))
        eps = ", ".join(str(graph.eps(b, i)) for i in graph.indices())
        phi = ", ".join(str(graph.phi(b, i)) for i in graph.indices())
        lines.append(f"{mark}{b:>4}  weight=({wt})  eps=({eps})  phi=({phi})")
    lines.append("edges:")
    for (b, i), child in _sorted_edges(graph):
        lines.append(f"  {b} -{i}-> {child}")
    return ("\n".join(lines) + "\n").encode()


def _character_payload(datum, lam, word, chi):
    return {
        "family": datum.family,
        "rank": datum.rank,
        "highest_weight": list(lam),
        "word": list(word) if word is not None else None,
        "character": [{"weight": list(w), "mult": m} for w, m in chi.items()],
    }


def emit_character(datum, lam, word, chi, fmt):
    if fmt == "json":
        return (json.dumps(_character_payload(datum, lam, word, chi), indent=2) + "\n").encode()
    return (chi.render() + "\n").encode()


def emit_rank_one(lam):
    m = RankOneModule(lam)
    lines = [f"rank-one module V({lam}) over Z[q,q^-1], basis f^(k)v, k = 0..{lam}"]
    lines.append("f action:")
    for k in range(m.dim):
        image = act_f(m, m.basis_vector(k))
        desc = f"[{k + 1}] f^({k + 1})v = ({qint(k + 1)}) f^({k + 1})v" if image else "0"
        lines.append(f"  f . f^({k})v = {desc}")
    lines.append("e action:")
    for k in range(m.dim):
        image = act_e(m, m.basis_vector(k))
        co = m.lam - k + 1
        desc = f"[{co}] f^({k - 1})v = ({qint(co)}) f^({k - 1})v" if image else "0"
        lines.append(f"  e . f^({k})v = {desc}")
    lines.append("K action:")
    for k in range(m.dim):
        lines.append(f"  K . f^({k})v = q^{m.lam - 2 * k} f^({k})v")
    chain = " -> ".join(str(k) for k in range(m.dim))
    lines.append(f"crystal chain: {chain}")
    ok, _ = verify_sl2_relation(m)
    lines.append(f"sl2 relation (ef - fe = [lambda - 2k]): {'ok' if ok else 'VIOLATED'}")
    return ("\n".join(lines) + "\n").encode()


# -- verification suite ---------------------------------------------------


def _corrupt(dc):
    """Drop a mid-string member so the string property must fail."""
    from .demazure import DemazureCrystal, i_strings

    for i in dc.graph.indices():
        for s in i_strings(dc.graph, i):
            if s.length >= 1 and set(s.members) <= dc.members:
                members = dc.members - {s.members[-1]}
                return DemazureCrystal(dc.graph, dc.word, frozenset(members))
    raise RuntimeError("no string long enough to corrupt")


def run_verify(spec):
    """Run the whole combinatorial suite; returns (report rows, ok)."""
    datum = cartan_datum(spec.type_name)
    graph = generate_crystal(datum, spec.weight, max_elements=spec.max_elements)
    group = weyl_group(datum)
    subsets = {w: demazure_crystal(graph, w) for w in group}
    if spec.inject_failure:
        top_word = longest_word(datum)
        subsets[top_word] = _corrupt(subsets[top_word])
        log.info("injected a corrupted subset for %s", top_word)

    rows = []

    ok, witness = verify_normal(graph)
    rows.append(("normal-crystal-relations", ok, witness))

    ok, witness = True, None
    for w, dc in subsets.items():
        for i in datum.indices():
            good, wit = verify_string_property(dc, i)
            if not good:
                ok, witness = False, (w, wit)
                break
        if not ok:
            break
    rows.append((f"string-property ({len(group)} words x {datum.rank} indices)", ok, witness))

    ok, witness = True, None
    for w, dc in subsets.items():
        for i in datum.indices():
            good, wit = verify_filtration_structure(dc, i)
            if not good:
                ok, witness = False, (w, wit)
                break
        if not ok:
            break
    rows.append(("filtration-structure", ok, witness))

    ok, witness = True, None
    for w in group:
        good, wit = reduced_word_independence(graph, w)
        if not good:
            ok, witness = False, (w, wit)
            break
    rows.append(("reduced-word-independence", ok, witness))

    ok, witness = True, None
    for w in group:
        good, wit = verify_demazure_character(graph, spec.weight, w)
        if not good:
            ok, witness = False, (w, "character mismatch")
            break
    rows.append(("demazure-character-formula", ok, witness))

    freudenthal = weyl_character(datum, spec.weight)
    crystal_char = char_of(graph.all_ids(), graph)
    demazure_char = apply_demazure_word(
        datum, longest_word(datum), FormalCharacter.monomial(spec.weight))
    ok = crystal_char == freudenthal == demazure_char
    rows.append(("weyl-character-agreement", ok, None if ok else "character mismatch"))

    dim = weyl_dimension(datum, spec.weight)
    ok = len(graph) == dim
    rows.append(("weyl-dimension-agreement", ok,
                 None if ok else (len(graph), dim)))

    return rows, all(ok for _, ok, _ in rows)


def _verify_output(spec, rows, ok):
    if spec.fmt == "json":
        payload = {
            "type": spec.type_name,
            "weight": list(spec.weight),
            "checks": [{"name": name, "ok": good,
                        "witness": None if wit is None else str(wit)}
                       for name, good, wit in rows],
            "ok": ok,
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    width = max(len(name) for name, _, _ in rows)
    lines = [f"verification suite for {spec.type_name}, weight {spec.weight}"]
    for name, good, wit in rows:
        status = "PASS" if good else f"FAIL  witness: {wit}"
        lines.append(f"  {name:<{width}}  {status}")
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    return ("\n".join(lines) + "\n").encode()


# -- driver ----------------------------------------------------------------


def _write(spec, data):
    if spec.out:
        with open(spec.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
        sys.stdout.flush()


def _configure_logging():
    level = os.environ.get("CRYSTAL_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(stream=sys.stderr,
                        level=levels.get(level, logging.ERROR),
                        format="qcrystal %(levelname)s: %(message)s")
    if level not in levels:
        log.error("unknown CRYSTAL_LOG value %r, using 'error'", level)


def main(argv=None):
    _configure_logging()
    spec = parse_args(sys.argv[1:] if argv is None else list(argv))
    try:
        if spec.command == "rank-one":
            data = emit_rank_one(spec.weight[0])
        elif spec.command == "verify":
            rows, ok = run_verify(spec)
            data = _verify_output(spec, rows, ok)
            _write(spec, data)
            return EXIT_OK if ok else EXIT_VERIFY_FAILED
        else:
            datum = cartan_datum(spec.type_name)
            if spec.command == "character":
                graph = generate_crystal(datum, spec.weight, max_elements=spec.max_elements)
                if spec.word is not None:
                    members = demazure_crystal(graph, spec.word).members
                else:
                    members = graph.all_ids()
                chi = char_of(members, graph)
                data = emit_character(datum, spec.weight, spec.word, chi, spec.fmt)
            else:
                graph = generate_crystal(datum, spec.weight, max_elements=spec.max_elements)
                members = None
                if spec.command == "demazure":
                    members = demazure_crystal(graph, spec.word).members
                emitter = {"json": emit_json, "dot": emit_dot, "text": emit_text}[spec.fmt]
                data = emitter(graph, members)
        _write(spec, data)
        return EXIT_OK
    except ResourceCapError as exc:
        print(f"qcrystal: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"qcrystal: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qcrystal: cannot write output: {exc}", file=sys.stderr)
        return EXIT_WRITE


if __name__ == "__main__":
    sys.exit(main())
