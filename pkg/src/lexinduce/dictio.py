"""Reading and writing dictionary, manifest, and prediction files.

Dictionary files are UTF-8 TSV with 4 columns per line: rep_a, pos_a,
rep_b, pos_b. Blank lines and lines starting with `#` are skipped. The
two languages are supplied out of band (manifest row or CLI flag).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Iterable

from .entries import LexicalEntry, make_entry, normalize_lang, LANG_RE
from .errors import InvalidSpec, MalformedLine, MissingFile

Pair = tuple[LexicalEntry, LexicalEntry]


@dataclass(frozen=True, slots=True)
class DictionarySpec:
    path: str
    lang_a: str
    lang_b: str

    def __post_init__(self):
        if self.lang_a == self.lang_b:
            raise InvalidSpec(f"identical languages in {self.path}: {self.lang_a}")


def _data_lines(path):
    try:
        fh = open(path, encoding="utf-8")
    except FileNotFoundError:
        raise MissingFile(str(path)) from None
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield lineno, line


def parse_dictionary(spec: DictionarySpec) -> list[Pair]:
    """Load one bilingual dictionary file as deduplicated entry pairs."""
    pairs: list[Pair] = []
    seen: set[Pair] = set()
    for lineno, line in _data_lines(spec.path):
        cols = line.split("\t")
        if len(cols) != 4:
            raise MalformedLine(spec.path, lineno, f"expected 4 columns, got {len(cols)}")
        rep_a, pos_a, rep_b, pos_b = cols
        try:
            pair = (make_entry(rep_a, spec.lang_a, pos_a), make_entry(rep_b, spec.lang_b, pos_b))
        except ValueError as exc:
            raise MalformedLine(spec.path, lineno, str(exc)) from None
        if pair not in seen:
            seen.add(pair)
            pairs.append(pair)
    return pairs


def parse_manifest(path) -> list[DictionarySpec]:
    """Manifest: one dictionary per line, `lang_a<TAB>lang_b<TAB>path`.

    Relative dictionary paths are resolved against the manifest's directory.
    """
    base = os.path.dirname(os.path.abspath(path))
    specs = []
    for lineno, line in _data_lines(path):
        cols = line.split("\t")
        if len(cols) != 3:
            raise MalformedLine(path, lineno, f"expected 3 columns, got {len(cols)}")
        lang_a, lang_b, dict_path = cols
        lang_a, lang_b = normalize_lang(lang_a), normalize_lang(lang_b)
        for code in (lang_a, lang_b):
            if not LANG_RE.match(code):
                raise MalformedLine(path, lineno, f"bad language code: {code!r}")
        if not os.path.isabs(dict_path):
            dict_path = os.path.join(base, dict_path)
        specs.append(DictionarySpec(dict_path, lang_a, lang_b))
    return specs


def write_dictionary(path, pairs: Iterable[Pair]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# rep_a\tpos_a\trep_b\tpos_b\n")
        for a, b in pairs:
            fh.write(f"{a.rep}\t{a.pos}\t{b.rep}\t{b.pos}\n")


def format_confidence(value: float) -> str:
    """Render a confidence as a 4-place decimal with half-even rounding."""
    return str(Decimal(repr(value)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def write_predictions(path, rows: Iterable[tuple[LexicalEntry, LexicalEntry, float, str]]) -> None:
    """Prediction TSV: rep_a, pos_a, rep_b, pos_b, confidence, provenance.

    Rows are sorted by source rep, source pos, descending confidence,
    target rep, so repeated runs produce byte-identical files.
    """
    ordered = sorted(rows, key=lambda r: (r[0].rep, r[0].pos, -r[2], r[1].rep, r[1].pos, r[3]))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# rep_a\tpos_a\trep_b\tpos_b\tconfidence\tprovenance\n")
        for a, b, conf, prov in ordered:
            fh.write(f"{a.rep}\t{a.pos}\t{b.rep}\t{b.pos}\t{format_confidence(conf)}\t{prov}\n")


def read_predictions(path, lang_a: str, lang_b: str) -> list[tuple[LexicalEntry, LexicalEntry, float]]:
    """Load a prediction TSV.

    Confidence and provenance columns are optional; a plain 4-column
    dictionary file reads as predictions at confidence 1.
    """
    out = []
    for lineno, line in _data_lines(path):
        cols = line.split("\t")
        if len(cols) not in (4, 5, 6):
            raise MalformedLine(path, lineno, f"expected 4-6 columns, got {len(cols)}")
        if len(cols) == 4:
            conf = 1.0
        else:
            try:
                conf = float(cols[4])
            except ValueError:
                raise MalformedLine(path, lineno, f"bad confidence: {cols[4]!r}") from None
        try:
            pair = (make_entry(cols[0], lang_a, cols[1]), make_entry(cols[2], lang_b, cols[3]))
        except ValueError as exc:
            raise MalformedLine(path, lineno, str(exc)) from None
        out.append((pair[0], pair[1], conf))
    return out
