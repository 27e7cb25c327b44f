"""Command line interface: ``apforge <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 computational unknown (overflow or
budget), 4 theorem-violation finding.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import platform
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Optional

from . import __version__, acceptance, artin, forms
from .artin import ArtinPresentation, AsymmetricMatrix, Violation
from .formats import PresentationCandidate, parse_braid_text, parse_presentation_text, serialize_presentation
from .grammar import GrammarError, parse_word
from .words import RankMismatch

EXIT_OK, EXIT_INVALID, EXIT_UNKNOWN, EXIT_VIOLATION = 0, 2, 3, 4

REPORT_SCHEMA = "apforge.report/1"


class InputError(Exception):
    pass


def read_input(spec: str) -> tuple[str, str]:
    """(text, label) for a path, or for a bundled corpus file given as ``corpus:NAME`` or a bare bundled name."""
    from .example import corpus_names, corpus_text

    name = spec[len("corpus:") :] if spec.startswith("corpus:") else spec
    p = Path(spec)
    if not spec.startswith("corpus:") and p.exists():
        return p.read_text(), str(p)
    if name in corpus_names():
        return corpus_text(name), f"corpus:{name}"
    raise InputError(f"no such file: {spec}")


def load_candidate(spec: str) -> tuple[PresentationCandidate, str]:
    text, label = read_input(spec)
    if label.endswith(".braid"):
        b = parse_braid_text(text)
        r = artin.from_braid(b.braid, b.framings)
        return PresentationCandidate(r.n, r.relators, label), text
    return parse_presentation_text(text, label), text


def load_valid(spec: str) -> tuple[ArtinPresentation, str]:
    cand, text = load_candidate(spec)
    out = cand.validate()
    if isinstance(out, Violation):
        raise InputError(f"{cand.source}: {out.describe()}")
    return out, text


def _digest(texts: list[str]) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode())
        h.update(b"\0")
    return h.hexdigest()


class Run:
    """Collects inputs and results into a RunReport."""

    def __init__(self, command: str, args: argparse.Namespace):
        self.command = command
        self.args = args
        self.texts: list[str] = []
        self.labels: list[str] = []
        self.timings: dict[str, float] = {}

    def valid(self, spec: str) -> ArtinPresentation:
        r, text = load_valid(spec)
        self._note(spec, text)
        return r

    def candidate(self, spec: str) -> PresentationCandidate:
        c, text = load_candidate(spec)
        self._note(spec, text)
        return c

    def _note(self, spec: str, text: str) -> None:
        self.labels.append(spec)
        self.texts.append(text)

    def timed(self, label: str, fn: Callable[[], Any]) -> Any:
        t0 = time.perf_counter()
        try:
            return fn()
        finally:
            self.timings[label] = round(time.perf_counter() - t0, 4)

    def report(self, results: Any) -> dict:
        rep = {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "inputs": self.labels,
            "inputs_digest": _digest(self.texts),
            "seed": getattr(self.args, "seed", None),
            "versions": {"apforge": __version__, "python": ".".join(platform.python_version_tuple()[:2])},
            "results": results,
        }
        if getattr(self.args, "timings", False):
            rep["timings"] = self.timings
        return rep


def _words(relators) -> list[str]:
    return [str(w) for w in relators]


# commands: each returns (exit code, results, text lines)


def cmd_validate(run: Run, a) -> tuple[int, Any, list[str]]:
    results, lines, code = [], [], EXIT_OK
    for f in a.files:
        c = run.candidate(f)
        out = c.validate()
        if isinstance(out, Violation):
            code = EXIT_INVALID
            entry = {"file": f, "valid": False, "violation": out.to_json()}
            try:
                artin.abelianization_matrix(c.relators, c.n)
            except AsymmetricMatrix as exc:
                entry["asymmetry"] = str(exc)
            lines.append(f"FAIL {f}: first divergence at letter {out.divergence}")
            lines.append(f"  lhs {out.lhs}")
            lines.append(f"  rhs {out.rhs}")
        else:
            entry = {"file": f, "valid": True, "n": out.n}
            lines.append(f"PASS {f}")
        results.append(entry)
    return code, results, lines


def cmd_mul(run: Run, a) -> tuple[int, Any, list[str]]:
    r, s = run.valid(a.left), run.valid(a.right)
    orders = {"default": [False], "reversed": [True], "both": [False, True]}[a.order]
    compare = run.valid(a.compare) if a.compare else None
    results, lines = {}, []
    for rev in orders:
        label = "phi_left∘phi_right" if not rev else "phi_right∘phi_left"
        p = run.timed(label, lambda: artin.multiply(r, s, reversed_order=rev))
        entry = {"relators": _words(p.relators)}
        if compare is not None:
            entry["matches_compare"] = p.relators == compare.relators
        results[label] = entry
        lines.append(f"# {label}" + (f"  (matches {a.compare}: {entry['matches_compare']})" if compare else ""))
        lines.append(serialize_presentation(p).rstrip())
    return EXIT_OK, results, lines


def cmd_inv(run: Run, a) -> tuple[int, Any, list[str]]:
    r = run.valid(a.file)
    inv = artin.invert(r)
    return EXIT_OK, {"relators": _words(inv.relators)}, [serialize_presentation(inv).rstrip()]


def cmd_torelli(run: Run, a) -> tuple[int, Any, list[str]]:
    if a.file:
        r = run.valid(a.file)
        t = artin.is_torelli(r)
        return EXIT_OK, {"torelli": t}, [f"torelli: {str(t).lower()}"]
    if a.random is None:
        raise InputError("give a file or --random N")
    seed = a.seed if a.seed is not None else 0
    t = artin.random_torelli(a.random, seed, a.size)
    return EXIT_OK, {"relators": _words(t.relators), "torelli": artin.is_torelli(t)}, [serialize_presentation(t).rstrip()]


def cmd_abelian(run: Run, a) -> tuple[int, Any, list[str]]:
    from .groups.fpgroup import pi

    r = run.valid(a.file)
    m = artin.abelianization_matrix(r)
    g = pi(r)
    torsion, rank = g.abelianization()
    res = {"matrix": m, "torelli": artin.is_torelli(r), "h1": g.describe_abelianization(), "torsion": torsion, "free_rank": rank}
    lines = [" ".join(f"{v:3d}" for v in row) for row in m]
    lines += [f"torelli: {str(res['torelli']).lower()}", f"H_1(pi) = {res['h1']}"]
    return EXIT_OK, res, lines


def _group_for(run: Run, a):
    from .groups.fpgroup import pi
    from .knots import knot_group

    r = run.valid(a.file)
    if getattr(a, "knot", None):
        return knot_group(r, a.knot)
    return pi(r)


def cmd_enumerate(run: Run, a) -> tuple[int, Any, list[str]]:
    from .groups.coset import CosetOverflow, todd_coxeter
    from .groups.tietze import tietze_simplify

    g = _group_for(run, a)
    subgroup = [parse_word(t, g.generator_count) for t in (a.subgroup or "").split(";") if t.strip()]
    if a.simplify:
        if subgroup:
            raise InputError("--simplify renames generators; it cannot be combined with --subgroup")
        g = run.timed("tietze", lambda: tietze_simplify(g))
    try:
        table = run.timed("enumerate", lambda: todd_coxeter(g, subgroup, a.max_cosets))
    except CosetOverflow as exc:
        return EXIT_UNKNOWN, {"status": "unknown", "reason": str(exc)}, [f"unknown: {exc}"]
    res = {"status": "closed", "index": table.index, "defined": table.defined}
    return EXIT_OK, res, [f"index {table.index} ({table.defined} cosets defined)"]


def cmd_homs(run: Run, a) -> tuple[int, Any, list[str]]:
    from .groups.finite import by_name
    from .groups.homs import SearchBudgetExceeded, hom_count

    g = _group_for(run, a)
    try:
        target = by_name(a.target)
    except ValueError as exc:
        raise InputError(str(exc))
    try:
        c = run.timed("homs", lambda: hom_count(g, target, a.node_cap))
    except SearchBudgetExceeded as exc:
        return EXIT_UNKNOWN, {"status": "unknown", "reason": str(exc)}, [f"unknown: {exc}"]
    res = {"status": "complete", "target": target.name, "total": c.total, "nonabelian_image": c.nonabelian_image, "surjective": c.surjective}
    return EXIT_OK, res, [f"{target.name}: total {c.total}, nonabelian image {c.nonabelian_image}, surjective {c.surjective}"]


def _triality_job(item: tuple[str, str, int]) -> dict:
    from .groups.triality import triality_check

    label, text, max_cosets = item
    cand = parse_presentation_text(text, label)
    r = cand.require_valid()
    res = triality_check(r, max_cosets)
    return {"file": label, **res.to_json()}


def cmd_triality(run: Run, a) -> tuple[int, Any, list[str]]:
    from .groups.triality import I120, TRIVIAL, VIOLATION

    items = []
    for f in a.files:
        r = run.valid(f)
        items.append((f, serialize_presentation(r), a.max_cosets))
    workers = min(acceptance.threads(), len(items))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_triality_job, items))
    else:
        results = [_triality_job(it) for it in items]
    code, lines = EXIT_OK, []
    for res in results:
        lines.append(f"{res['file']}: {res['verdict']}" + (f" (order {res['order']})" if res["order"] else "") + f" - {res['reason']}")
        if res["verdict"] == VIOLATION:
            code = EXIT_VIOLATION
            if a.counterexample_dir:
                out = Path(a.counterexample_dir)
                out.mkdir(parents=True, exist_ok=True)
                path = out / (Path(res["file"].replace("corpus:", "")).stem + ".counterexample.ap")
                src = next(t for lab, t, _ in items if lab == res["file"])
                path.write_text(src)
                res["counterexample"] = str(path)
        elif res["verdict"] not in (TRIVIAL, I120) and code == EXIT_OK:
            code = EXIT_UNKNOWN
    return code, results, lines


def cmd_alexander(run: Run, a) -> tuple[int, Any, list[str]]:
    from .knots import NotComputable, PRESENTATION_RULE, alexander_details, knot_group

    r = run.valid(a.file)
    g = knot_group(r, a.knot)
    try:
        d = alexander_details(g)
    except NotComputable as exc:
        return EXIT_UNKNOWN, {"status": "not computable", "reason": str(exc), "rule": PRESENTATION_RULE}, [f"not computable: {exc}"]
    p = d.polynomial.canonical()
    res = {"polynomial": str(p), **p.to_json(), "weights": list(d.weights), "deleted_column": d.deleted_column, "rule": PRESENTATION_RULE}
    return EXIT_OK, res, [str(p), f"presentation rule: {PRESENTATION_RULE}"]


def cmd_knot_group(run: Run, a) -> tuple[int, Any, list[str]]:
    from .knots import PRESENTATION_RULE, knot_group

    r = run.valid(a.file)
    g = knot_group(r, a.knot)
    mer, lon = g.peripheral
    res = {"generators": g.generator_count, "relators": _words(g.relators), "meridian": str(mer), "longitude": str(lon), "rule": PRESENTATION_RULE}
    lines = [str(g), f"meridian {mer}", f"longitude {lon}", f"presentation rule: {PRESENTATION_RULE}"]
    return EXIT_OK, res, lines


def _matrix_for(run: Run, a) -> list[list[int]]:
    if a.matrix:
        try:
            m = json.loads(a.matrix)
        except json.JSONDecodeError as exc:
            raise InputError(f"--matrix is not JSON: {exc}")
        run._note("--matrix", a.matrix)
        return m
    if not a.file:
        raise InputError("give a presentation file or --matrix")
    return artin.abelianization_matrix(run.valid(a.file))


def cmd_form(run: Run, a) -> tuple[int, Any, list[str]]:
    m = _matrix_for(run, a)
    try:
        rep = forms.classify(m)
    except forms.FormError as exc:
        raise InputError(str(exc))
    code = EXIT_UNKNOWN if rep.diagonalizable_to_identity == forms.UNKNOWN else EXIT_OK
    return code, rep.to_json(), [json.dumps(rep.to_json())]


def cmd_donaldson(run: Run, a) -> tuple[int, Any, list[str]]:
    r = run.valid(a.file)
    w = run.timed("witness", lambda: forms.theorem_witness(r, budget=a.budget))
    res = w.to_json()
    res["obstructed"] = forms.donaldson_obstructed(artin.abelianization_matrix(r))
    line = w.verdict + (f" via {w.target}" if w.target else "") + (f" ({w.reason})" if w.reason else "")
    code = EXIT_UNKNOWN if w.verdict == forms.INCONCLUSIVE else EXIT_OK
    return code, res, [line]


def cmd_example(run: Run, a) -> tuple[int, Any, list[str]]:
    from .example import reproduce

    rep = reproduce(a.max_cosets)
    lines = []
    for label, r in (("printed", rep.printed), ("corrected", rep.corrected)):
        if r is None:
            continue
        lines.append(f"{label} ({r.s_file}): " + " ".join(f"{st.name}:{st.status}" for st in r.steps))
    for e in rep.printed.errata:
        lines.append(f"erratum {e['file']}: first divergence at letter {e['violation']['first_divergence']}; {e.get('asymmetry', '')}")
    for c in rep.candidates:
        lines.append(f"candidate fix {c['file']} line {c['line']}: {c['from']} -> {c['to']}: {c['text']}")
    return EXIT_OK, rep.to_json(), lines


def cmd_selftest(run: Run, a) -> tuple[int, Any, list[str]]:
    results = acceptance.run_all()
    lines = [r.line() for r in results]
    payload = [{"criterion": r.number, "title": r.title, "ok": r.ok, "summary": r.detail.get("summary", "")} for r in results]
    return (EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION), payload, lines


def build_parser() -> argparse.ArgumentParser:
    def add_globals(q: argparse.ArgumentParser, default) -> None:
        q.add_argument("--json", action="store_true", default=default, help="print the JSON run report instead of text")
        q.add_argument("--report", default=default, help="also write the JSON run report to this path")
        q.add_argument("--seed", type=int, default=default, help="seed for randomized commands")
        q.add_argument("--timings", action="store_true", default=default, help="include wall-clock timings (makes reports non-reproducible)")

    p = argparse.ArgumentParser(prog="apforge", description="Artin presentations: validation, products, group and form analysis.")
    p.set_defaults(json=False, report=None, seed=None, timings=False)
    add_globals(p, argparse.SUPPRESS)
    # global options are also accepted after the command name
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    s = command("validate", "check the Artin equation")
    s.add_argument("files", nargs="+")
    s.set_defaults(fn=cmd_validate)

    s = command("mul", "product of two presentations")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--order", choices=["default", "reversed", "both"], default="default")
    s.add_argument("--compare", help="presentation to compare each product against")
    s.set_defaults(fn=cmd_mul)

    s = command("inv", "inverse presentation")
    s.add_argument("file")
    s.set_defaults(fn=cmd_inv)

    s = command("torelli", "Torelli test, or a random Torelli presentation")
    s.add_argument("file", nargs="?")
    s.add_argument("--random", type=int, metavar="N", help="generate on N strands")
    s.add_argument("--size", type=int, default=12)
    s.set_defaults(fn=cmd_torelli)

    s = command("abelian", "A(r) and H_1 of the group")
    s.add_argument("file")
    s.set_defaults(fn=cmd_abelian)

    s = command("enumerate", "Todd-Coxeter coset enumeration of pi(r) or a knot group")
    s.add_argument("file")
    s.add_argument("--max-cosets", type=int, default=100_000)
    s.add_argument("--subgroup", help="subgroup generators separated by ';'")
    s.add_argument("--knot", type=int, help="use the knot group of k_i instead of pi(r)")
    s.add_argument("--simplify", action="store_true", help="Tietze-simplify first")
    s.set_defaults(fn=cmd_enumerate)

    s = command("homs", "count homomorphisms into a finite group")
    s.add_argument("file")
    s.add_argument("--target", required=True, help="sl25, s3, a5, cyclic:k, bd:k, 2t, 2o, sK, aK")
    s.add_argument("--knot", type=int)
    s.add_argument("--node-cap", type=int, default=10**8)
    s.set_defaults(fn=cmd_homs)

    s = command("triality", "trivial / I(120) / unknown for perfect pi(r)")
    s.add_argument("files", nargs="+")
    s.add_argument("--max-cosets", type=int, default=100_000)
    s.add_argument("--counterexample-dir", help="where to write presentations that violate the dichotomy")
    s.set_defaults(fn=cmd_triality)

    s = command("alexander", "Alexander polynomial of the knot k_i")
    s.add_argument("file")
    s.add_argument("--knot", type=int, required=True)
    s.set_defaults(fn=cmd_alexander)

    s = command("knot-group", "presentation of the knot group of k_i")
    s.add_argument("file")
    s.add_argument("--knot", type=int, required=True)
    s.set_defaults(fn=cmd_knot_group)

    s = command("form", "classify A(r) (or --matrix)")
    s.add_argument("file", nargs="?")
    s.add_argument("--matrix", help="JSON integer matrix")
    s.set_defaults(fn=cmd_form)

    s = command("donaldson", "obstruction test and SU(2)-subgroup witness search")
    s.add_argument("file")
    s.add_argument("--budget", type=float, default=60.0, help="seconds")
    s.set_defaults(fn=cmd_donaldson)

    s = command("example", "reproduce the bundled worked example")
    s.add_argument("--max-cosets", type=int, default=200_000)
    s.set_defaults(fn=cmd_example)

    s = command("selftest", "run the acceptance checks")
    s.set_defaults(fn=cmd_selftest)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if a.seed is not None:
        random.seed(a.seed)
    run = Run(a.command, a)
    try:
        code, results, lines = a.fn(run, a)
    except (InputError, GrammarError, RankMismatch, AsymmetricMatrix, artin.InvalidPresentation, IndexError, NotImplementedError, ValueError) as exc:
        code, results, lines = EXIT_INVALID, {"error": f"{type(exc).__name__}: {exc}"}, [f"error: {exc}"]
    report = run.report(results)
    text = json.dumps(report, indent=2, sort_keys=True)
    if a.report:
        Path(a.report).write_text(text + "\n")
    if a.json:
        print(text)
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
