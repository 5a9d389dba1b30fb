"""Command-line interface.

Subcommands: ``normalize`` (general/speech pipelines, streaming line by
line), ``split`` (sentence segmentation), ``eval-split`` (segmentation
accuracy against a gold fixture) and ``scan`` (emit classified spans).
Exit codes: 0 success, 1 usage error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .pipeline import (
    Mode,
    PASS_NAMES,
    PipelineConfig,
    enumerate_verbalizations,
    normalize_general,
    normalize_speech,
)
from .scanner import scan
from .segmenter import evaluate_segmentation, split_sentences
from .verbalize import SelectionPolicy


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="persian-norm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    norm = sub.add_parser("normalize", help="run a normalization pipeline")
    norm.add_argument("--mode", choices=[Mode.GENERAL, Mode.SPEECH],
                      default=None)
    norm.add_argument("--seed", type=int, default=None,
                      help="seeded-random template selection")
    norm.add_argument("--template-index", type=int, default=None,
                      help="fixed template selection index")
    norm.add_argument("--disable", action="append", default=[],
                      metavar="PASS", help=f"disable a pass ({', '.join(PASS_NAMES)})")
    norm.add_argument("--enumerate", action="store_true", dest="enumerate_all",
                      help="print every possible verbalization per line")
    norm.add_argument("--out", default=None, help="output file (default stdout)")
    norm.add_argument("--config", default=None,
                      help="key=value config file; CLI flags override it")
    norm.add_argument("input", nargs="?", default="-",
                      help="input file, or - for stdin")

    split = sub.add_parser("split", help="sentence segmentation")
    split.add_argument("--threshold", type=int, default=None,
                       help="verb-split token threshold")
    split.add_argument("input", nargs="?", default="-")

    ev = sub.add_parser("eval-split", help="segmentation accuracy on a gold fixture")
    ev.add_argument("gold", help="gold fixture: one sentence per line, "
                                 "blank line between paragraphs")

    sc = sub.add_parser("scan", help="emit spans as tab-separated lines")
    sc.add_argument("input", nargs="?", default="-")
    return parser


def _read_input(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _load_config_file(path: str) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#") or "=" not in ln:
                continue
            key, _, value = ln.partition("=")
            values[key.strip()] = value.strip()
    return values


def _build_config(args) -> PipelineConfig:
    file_values = _load_config_file(args.config) if args.config else {}
    mode = args.mode or file_values.get("mode", Mode.SPEECH)
    seed = args.seed
    if seed is None and "seed" in file_values:
        seed = int(file_values["seed"])
    index = args.template_index
    if index is None and "template_index" in file_values:
        index = int(file_values["template_index"])
    if seed is not None:
        policy = SelectionPolicy.seeded(seed)
    else:
        policy = SelectionPolicy.fixed(index or 0)
    disabled = set(args.disable)
    if "disable" in file_values:
        disabled |= set(file_values["disable"].split(","))
    config = PipelineConfig(mode=mode, policy=policy)
    for name in disabled:
        config = config.disable(name)
    return config


def _cmd_normalize(args) -> int:
    config = _build_config(args)
    lines = _read_input(args.input)
    out_lines = []
    for line in lines:
        if args.enumerate_all:
            out_lines.extend(enumerate_verbalizations(line, config))
        elif config.mode == Mode.GENERAL:
            out_lines.append(normalize_general(line, config))
        else:
            out_lines.append(normalize_speech(line, config))
    payload = "\n".join(out_lines) + ("\n" if out_lines else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_split(args) -> int:
    kwargs = {}
    if args.threshold is not None:
        kwargs["verb_split_threshold"] = args.threshold
    for line in _read_input(args.input):
        for sentence in split_sentences(line, **kwargs):
            print(sentence)
    return 0


def read_gold_fixture(path) -> list[list[str]]:
    """Gold fixture file -> list of paragraphs, each a list of sentences."""
    paragraphs: list[list[str]] = [[]]
    text = (
        path.read_text(encoding="utf-8")
        if hasattr(path, "read_text") else open(path, encoding="utf-8").read()
    )
    for ln in text.splitlines():
        ln = ln.strip()
        if ln.startswith("#"):
            continue
        if not ln:
            if paragraphs[-1]:
                paragraphs.append([])
            continue
        paragraphs[-1].append(ln)
    if not paragraphs[-1]:
        paragraphs.pop()
    return paragraphs


def evaluate_gold_fixture(path) -> float:
    paragraphs = read_gold_fixture(path)
    predicted: list[str] = []
    gold: list[str] = []
    for sentences in paragraphs:
        source = " ".join(sentences)
        predicted.extend(split_sentences(source))
        gold.extend(sentences)
    return evaluate_segmentation(predicted, gold)


def _cmd_eval_split(args) -> int:
    accuracy = evaluate_gold_fixture(args.gold)
    print(f"{accuracy:.4f}")
    return 0


def _cmd_scan(args) -> int:
    for line in _read_input(args.input):
        for span in scan(line):
            print(f"{span.start}\t{span.end}\t{span.cls.value}\t{span.raw}")
    return 0


_COMMANDS = {
    "normalize": _cmd_normalize,
    "split": _cmd_split,
    "eval-split": _cmd_eval_split,
    "scan": _cmd_scan,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
