"""Command-line entry point: ``exactbigrams {index,marginals,top,compare,verify}``.

Exit codes: 0 success, 1 usage error, 2 data or format error, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence, TextIO

from .corpus import FORMATS, Document, TokenizerConfig, read_corpus, tokenize
from .errors import BigramError
from .index import FrequencyIndex, build_index, load_index, save_index
from .marginals import approx_marginal, exact_left_marginal, exact_right_marginal, total_bigram_count
from .measures import MeasureId, top_k
from .oracle import verify_index

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


@dataclass(frozen=True)
class ComparisonRow:
    word: str
    approx: int
    exact_left: int
    exact_right: int
    abs_error_left: int
    abs_error_right: int


@dataclass(frozen=True)
class ComparisonReport:
    rows: List[ComparisonRow]
    total_approx: int
    total_exact: int
    total_relative_error: Optional[float]
    mean_relative_error: float
    max_relative_error: float
    words_with_error: int


def compare_index(index: FrequencyIndex) -> ComparisonReport:
    """Per-word approximation error of the full-window marginal.

    Relative errors are taken against the approximate marginal (always
    positive for vocabulary words); the total's relative error is taken
    against the exact total.
    """
    rows, rel = [], []
    for word in sorted(index.word_fd):
        approx = approx_marginal(index, word)
        left = exact_left_marginal(index, word)
        right = exact_right_marginal(index, word)
        rows.append(ComparisonRow(word, approx, left, right, approx - left, approx - right))
        rel.extend(((approx - left) / approx, (approx - right) / approx))
    total_approx = (index.window - 1) * index.token_count
    total_exact = total_bigram_count(index)
    diff = total_approx - total_exact
    return ComparisonReport(
        rows=rows,
        total_approx=total_approx,
        total_exact=total_exact,
        total_relative_error=(diff / total_exact) if total_exact else (0.0 if diff == 0 else None),
        mean_relative_error=sum(rel) / len(rel) if rel else 0.0,
        max_relative_error=max(rel, default=0.0),
        words_with_error=sum(1 for r in rows if r.abs_error_left or r.abs_error_right),
    )


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _bool(value: str) -> bool:
    if value.lower() in ("true", "1", "yes"):
        return True
    if value.lower() in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {value!r}")


def _window(value: str) -> int:
    try:
        w = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be an integer, got {value!r}") from None
    if w < 2:
        raise argparse.ArgumentTypeError("window must be >= 2")
    return w


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _add_corpus_args(p: argparse.ArgumentParser, window_required: bool = True) -> None:
    p.add_argument("--window", type=_window, required=window_required)
    p.add_argument("--format", choices=FORMATS, required=True)
    p.add_argument("--lowercase", type=_bool, default=True)
    p.add_argument("--strip-punct", type=_bool, default=False)
    p.add_argument("inputs", nargs="+", metavar="INPUT")


def _add_output_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("tsv", "json"), default="tsv")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="exactbigrams", description="Exact windowed bigram statistics for short-text corpora.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="build and save a frequency index")
    _add_corpus_args(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("marginals", help="print exact and approximate marginals")
    p.add_argument("--index", required=True)
    p.add_argument("words", nargs="+", metavar="WORD")
    _add_output_arg(p)

    p = sub.add_parser("top", help="rank collocations")
    p.add_argument("--index", required=True)
    p.add_argument("--measure", choices=[m.value for m in MeasureId], required=True)
    p.add_argument("--k", type=_positive, default=10)
    p.add_argument("--min-count", type=_nonneg, default=1)
    p.add_argument("--mode", choices=("exact", "approx"), default="exact")
    _add_output_arg(p)

    p = sub.add_parser("compare", help="approximate vs exact marginals per word")
    _add_corpus_args(p)
    _add_output_arg(p)

    p = sub.add_parser("verify", help="check the exact method against brute-force enumeration")
    _add_corpus_args(p, window_required=False)
    p.add_argument("--index", help="verify a saved index instead of a fresh build")
    return parser


def _config(args) -> TokenizerConfig:
    return TokenizerConfig(lowercase=args.lowercase, strip_edge_punctuation=args.strip_punct)


def _read_docs(paths: Iterable[str], fmt: str, config: TokenizerConfig) -> Iterable[Document]:
    for path in paths:
        with open(path, "rb") as fh:
            yield from read_corpus(fh, fmt, config)


def _load(path: str) -> FrequencyIndex:
    with open(path, "rb") as fh:
        return load_index(fh)


def _query_word(word: str, config: Optional[TokenizerConfig]) -> str:
    if config is None:
        return word
    tokens = tokenize(word, config).tokens
    return tokens[0] if len(tokens) == 1 else word


def _tsv(out: TextIO, rows: Iterable[Sequence]) -> None:
    for row in rows:
        out.write("\t".join(str(x) for x in row) + "\n")


def _json(out: TextIO, obj) -> None:
    out.write(json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2) + "\n")


def cmd_index(args, out: TextIO) -> int:
    config = _config(args)
    index = build_index(_read_docs(args.inputs, args.format, config), args.window, config)
    with open(args.out, "wb") as fh:
        save_index(index, fh)
    return EXIT_OK


def cmd_marginals(args, out: TextIO) -> int:
    index = _load(args.index)
    try:
        config = TokenizerConfig.from_fingerprint(index.tokenizer)
    except ValueError:
        config = None
    rows = []
    for raw in args.words:
        word = _query_word(raw, config)
        rows.append({
            "word": word,
            "count": index.word_fd.get(word, 0),
            "approx": approx_marginal(index, word),
            "exact_left": exact_left_marginal(index, word),
            "exact_right": exact_right_marginal(index, word),
        })
    if args.output == "json":
        _json(out, {"window": index.window, "rows": rows})
    else:
        cols = ["word", "count", "approx", "exact_left", "exact_right"]
        _tsv(out, [cols] + [[r[c] for c in cols] for r in rows])
    return EXIT_OK


def cmd_top(args, out: TextIO) -> int:
    index = _load(args.index)
    results = top_k(index, args.measure, k=args.k, min_count=args.min_count, mode=args.mode)
    if args.output == "json":
        _json(out, [
            {"word1": r.pair[0], "word2": r.pair[1], "n11": r.n11, "score": r.score} for r in results
        ])
    else:
        _tsv(out, [["word1", "word2", "n11", "score"]]
             + [[r.pair[0], r.pair[1], r.n11, f"{r.score:.6f}"] for r in results])
    return EXIT_OK


def _fmt_rel(x: Optional[float]) -> str:
    return "NA" if x is None else f"{x:.6f}"


def cmd_compare(args, out: TextIO) -> int:
    config = _config(args)
    index = build_index(_read_docs(args.inputs, args.format, config), args.window, config)
    report = compare_index(index)
    if args.output == "json":
        _json(out, asdict(report))
        return EXIT_OK
    cols = ["word", "approx", "exact_left", "exact_right", "abs_error_left", "abs_error_right"]
    _tsv(out, [cols] + [[getattr(r, c) for c in cols] for r in report.rows])
    _tsv(out, [
        ["# total_approx", report.total_approx],
        ["# total_exact", report.total_exact],
        ["# total_relative_error", _fmt_rel(report.total_relative_error)],
        ["# mean_relative_error", _fmt_rel(report.mean_relative_error)],
        ["# max_relative_error", _fmt_rel(report.max_relative_error)],
        ["# words_with_error", report.words_with_error],
    ])
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.index:
        index = _load(args.index)
        if args.window is not None and args.window != index.window:
            raise BigramError(f"--window {args.window} does not match index window {index.window}")
        try:
            config = TokenizerConfig.from_fingerprint(index.tokenizer)
        except ValueError as exc:
            raise BigramError(str(exc)) from exc
        docs = list(_read_docs(args.inputs, args.format, config))
    else:
        if args.window is None:
            raise UsageError("verify: error: --window is required without --index")
        config = _config(args)
        docs = list(_read_docs(args.inputs, args.format, config))
        index = build_index(docs, args.window, config)
    report = verify_index(index, docs)
    out.write(f"{report}\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


COMMANDS = {
    "index": cmd_index,
    "marginals": cmd_marginals,
    "top": cmd_top,
    "compare": cmd_compare,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (BigramError, OSError) as exc:
        stderr.write(f"exactbigrams: {exc}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run())
