"""Command-line entry point.

Subcommands:
  generate   build a translation graph from a manifest and predict one
             language pair with otic, cd, or acd
  evaluate   score a prediction file against a gold dictionary
  synth      emit a synthetic instance (dictionaries + gold + manifest)

Exit codes: 0 success, 1 usage error, 2 input/format error, 3 internal.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from collections import Counter

from . import dictio
from .acd import AcdConfig, acd_predict, merge_scored, threshold_filter
from .errors import LexinduceError
from .evaluation import evaluate
from .graph import build_graph
from .inference import CycleConstraints, InferenceParams, cd_predict, transitive_predict
from .metagraph import largest_biconnected_language_component
from .otic import build_pivot_table, otic_type_a, otic_type_b
from .synth import SynthParams, generate

log = logging.getLogger("lexinduce")

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; we reserve 2 for input errors
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def load_config(path) -> dict[str, str]:
    """Flat key=value config; `#` comments and blank lines ignored."""
    out: dict[str, str] = {}
    for lineno, line in dictio._data_lines(path):
        if "=" not in line:
            raise dictio.MalformedLine(path, lineno, "expected key=value")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _resolve(args, config: dict[str, str], name: str, default, cast):
    """Flag value if given, else config value, else the default."""
    val = getattr(args, name)
    if val is not None:
        return val
    if name in config:
        return cast(config[name])
    return default


def _build_params(args, config) -> InferenceParams:
    constraints = CycleConstraints(
        min_len=_resolve(args, config, "min_len", 4, int),
        max_len=_resolve(args, config, "max_len", 6, int),
        context_depth=_resolve(args, config, "context_depth", 3, int),
    )
    pos = _resolve(args, config, "transitive_pos", "np,num", str)
    return InferenceParams(
        constraints=constraints,
        threshold=_resolve(args, config, "threshold", 0.6, float),
        transitive_pos=frozenset(t for t in pos.split(",") if t),
        transitive_depth=_resolve(args, config, "transitive_depth", 4, int),
    )


def cmd_generate(args) -> int:
    config = load_config(args.config) if args.config else {}
    algo = _resolve(args, config, "algo", "acd", str)
    pivot = _resolve(args, config, "pivot", None, str)
    if algo in ("otic", "acd") and not pivot:
        raise UsageError(f"--pivot is required for --algo {algo}")
    params = _build_params(args, config)
    threads = _resolve(args, config, "threads", 1, int)

    specs = dictio.parse_manifest(args.manifest)
    if _resolve(args, config, "bcc_filter", False, lambda s: s.lower() in ("1", "true", "yes")):
        specs = largest_biconnected_language_component(specs)
        log.info("bcc filter kept %d dictionaries", len(specs))
    pairs = [p for spec in specs for p in dictio.parse_dictionary(spec)]
    g = build_graph(pairs)
    log.info("graph: %d vertices, %d edges", g.vertex_count, g.edge_count)

    if algo == "otic":
        table = build_pivot_table(g, args.src, pivot, args.tgt)
        type_b = otic_type_b(table)
        type_a = otic_type_a(table)
        rows = [(a, b, 1.0, "type_b") for a, b in type_b]
        rows += [(a, b, 1.0, "type_a") for a, b in type_a - type_b]
    elif algo == "cd":
        scored = merge_scored(
            cd_predict(g, args.src, args.tgt, params, threads=threads),
            transitive_predict(g, args.src, args.tgt, params.transitive_pos, params.transitive_depth),
        )
        scored = threshold_filter(scored, params.threshold)
        rows = [(sp.source, sp.target, sp.confidence, sp.provenance) for sp in scored]
    elif algo == "acd":
        cfg = AcdConfig(params=params, pivot=pivot)
        scored = acd_predict(g, args.src, args.tgt, cfg, threads=threads)
        rows = [(sp.source, sp.target, sp.confidence, sp.provenance) for sp in scored]
    else:
        raise UsageError(f"unknown algorithm: {algo!r}")

    counts = Counter(prov for _, _, _, prov in rows)
    for prov in sorted(counts):
        log.info("predictions: %d %s", counts[prov], prov)
    dictio.write_predictions(args.out, rows)
    log.info("wrote %d predictions to %s", len(rows), args.out)
    return 0


def _report_lines(report, prefix=""):
    d = report.as_dict()
    summary = " ".join(f"{k}={d[k]:.4f}" for k in ("precision", "recall", "f1", "coverage", "bwp", "bwr"))
    yield f"{prefix}{summary} predicted={report.predicted} gold={report.gold} correct={report.correct}"
    for key, value in d.items():
        yield f"{key}={value}"
    for warning in report.warnings:
        yield f"warning={warning}"


def cmd_evaluate(args) -> int:
    preds = dictio.read_predictions(args.pred, args.src, args.tgt)
    gold_pairs = dictio.parse_dictionary(dictio.DictionarySpec(args.gold, args.src, args.tgt))
    vocab = None
    if args.manifest:
        specs = dictio.parse_manifest(args.manifest)
        g = build_graph([p for spec in specs for p in dictio.parse_dictionary(spec)])
        vocab = {lang: g.entries_of_lang(lang) for lang in g.languages}

    out = open(args.report, "w", encoding="utf-8") if args.report else None
    def emit(line):
        print(line)
        if out:
            out.write(line + "\n")

    try:
        if args.sweep:
            try:
                start, stop, step = (float(x) for x in args.sweep.split(":"))
            except ValueError:
                raise UsageError("--sweep expects start:stop:step") from None
            emit("threshold\tprecision\trecall\tf1\tcoverage\tpredicted")
            tau = start
            while tau <= stop + 1e-9:
                kept = [(a, b) for a, b, conf in preds if conf >= tau - 1e-12]
                r = evaluate(kept, gold_pairs, vocab)
                emit(f"{tau:.2f}\t{r.precision:.4f}\t{r.recall:.4f}\t{r.f1:.4f}\t{r.coverage:.4f}\t{r.predicted}")
                tau += step
        else:
            report = evaluate([(a, b) for a, b, _ in preds], gold_pairs, vocab)
            for line in _report_lines(report):
                emit(line)
    finally:
        if out:
            out.close()
    return 0


def cmd_synth(args) -> int:
    params = SynthParams(
        n_langs=args.langs,
        n_senses=args.senses,
        words_per_sense_per_lang=args.words_per_sense,
        polysemy_rate=args.polysemy,
        edge_prob=args.edge_prob,
        seed=args.seed,
    )
    inst = generate(params)
    os.makedirs(args.out_dir, exist_ok=True)
    manifest_rows = []
    for i, la in enumerate(inst.languages):
        for lb in inst.languages[i + 1 :]:
            name = f"dict_{la}-{lb}.tsv"
            dictio.write_dictionary(
                os.path.join(args.out_dir, name), inst.dictionaries.get((la, lb), ())
            )
            dictio.write_dictionary(
                os.path.join(args.out_dir, f"gold_{la}-{lb}.tsv"),
                sorted(inst.gold.get((la, lb), ())),
            )
            manifest_rows.append(f"{la}\t{lb}\t{name}\n")
    with open(os.path.join(args.out_dir, "manifest.tsv"), "w", encoding="utf-8") as fh:
        fh.writelines(manifest_rows)
    log.info(
        "synth: %d languages, %d vertices, %d edges -> %s",
        len(inst.languages), inst.graph.vertex_count, inst.graph.edge_count, args.out_dir,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexinduce", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="predict one language pair from a dictionary manifest")
    gen.add_argument("--manifest", required=True)
    gen.add_argument("--src", required=True)
    gen.add_argument("--tgt", required=True)
    gen.add_argument("--pivot")
    gen.add_argument("--algo", choices=["otic", "cd", "acd"], default=None)
    gen.add_argument("--out", required=True)
    gen.add_argument("--bcc-filter", dest="bcc_filter", action="store_const", const=True)
    gen.add_argument("--config")
    gen.add_argument("--threads", type=int)
    gen.add_argument("--context-depth", dest="context_depth", type=int)
    gen.add_argument("--min-len", dest="min_len", type=int)
    gen.add_argument("--max-len", dest="max_len", type=int)
    gen.add_argument("--threshold", type=float)
    gen.add_argument("--transitive-pos", dest="transitive_pos")
    gen.add_argument("--transitive-depth", dest="transitive_depth", type=int)
    gen.set_defaults(func=cmd_generate)

    ev = sub.add_parser("evaluate", help="score a prediction file against a gold dictionary")
    ev.add_argument("--pred", required=True)
    ev.add_argument("--gold", required=True)
    ev.add_argument("--src", required=True)
    ev.add_argument("--tgt", required=True)
    ev.add_argument("--manifest", help="input dictionaries, used for the BWR vocabulary")
    ev.add_argument("--sweep", help="threshold sweep start:stop:step, one output row per threshold")
    ev.add_argument("--report", help="also write the output lines to this file")
    ev.set_defaults(func=cmd_evaluate)

    sy = sub.add_parser("synth", help="generate a synthetic instance with exact gold")
    sy.add_argument("--out-dir", required=True)
    sy.add_argument("--langs", type=int, default=3)
    sy.add_argument("--senses", type=int, default=50)
    sy.add_argument("--words-per-sense", dest="words_per_sense", type=int, default=1)
    sy.add_argument("--polysemy", type=float, default=0.0)
    sy.add_argument("--edge-prob", dest="edge_prob", type=float, default=1.0)
    sy.add_argument("--seed", type=int, default=0)
    sy.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lexinduce: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LexinduceError, OSError, ValueError) as exc:
        print(f"lexinduce: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover
        print(f"lexinduce: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
