"""Command-line interface.

Subcommands: build, sim, pattern, simtext, coherence, retrieve.  Numeric
output is printed with six decimal places; exit codes are 0 on success,
1 for domain errors (unresolvable word, empty word list, malformed
entry), 2 for I/O and file format errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import textops
from .activation import run, stimulus_for_word, top_activities
from .config import Config, config_from_env, load_config
from .dictionary import (closure_warnings, index_entries, parse_dictionary,
                         serialize_entries)
from .errors import (BuildError, EmptyWordListError, FileFormatError,
                     LexnetError, ParseError, UnresolvableWordError)
from .morphology import MorphTable, default_table
from .network import (Network, compile_network, load_network, network_to_json,
                      save_network)
from .significance import (SignificanceTable, build_significance,
                           load_sidecar, save_sidecar)
from .similarity import (make_wordlist, similarity_word, similarity_wordlist,
                         word_significance, wordlist_stimulus)

SIDECAR_SUFFIX = ".sig"


def sidecar_path(net_path) -> str:
    return str(net_path) + SIDECAR_SUFFIX


def _fmt(value: float) -> str:
    return f"{value:.6f}"


# ---------------------------------------------------------------------------
# artifact loading

def _load_artifact(net_path):
    """(network, significance table, entry index) from a compiled artifact."""
    side = load_sidecar(sidecar_path(net_path))
    morph = MorphTable.parse(side.get("morph_rules", ""))
    net = load_network(net_path, morph)
    sig = SignificanceTable.from_json(side["significance"])
    entries = parse_dictionary(side.get("entries", ""))
    return net, sig, index_entries(entries)


def _read_dictionary(path) -> list:
    with open(path, encoding="utf-8") as fh:
        return parse_dictionary(fh)


def _extra_index(net, sig, args, config):
    path = getattr(args, "extra", None) or config.extra_dictionary
    if not path:
        return {}
    return index_entries(_read_dictionary(path))


# ---------------------------------------------------------------------------
# commands

def cmd_build(args, config: Config) -> int:
    morph_path = args.morph or config.morph
    entries = _read_dictionary(args.dictionary)
    morph = MorphTable.load(morph_path) if morph_path else default_table()
    warnings = closure_warnings(entries, morph)
    network = compile_network(entries, morph)

    word_classes = {}
    for e in entries:
        word_classes.setdefault(e.headword, e.word_class.value)
    with open(args.counts, encoding="utf-8") as fh:
        sig = build_significance(fh, word_classes)

    save_network(network, args.out)
    save_sidecar({
        "format_version": 1,
        "significance": sig.to_json(),
        "morph_rules": morph.dump(),
        "entries": serialize_entries(entries),
    }, sidecar_path(args.out))

    n_links = sum(len(s.links) for node in network.nodes for s in node.subreferants)
    n_back = sum(len(node.refere) for node in network.nodes)
    print(f"nodes: {len(network.nodes)}")
    print(f"links: {n_links} forward, {n_back} back")
    print(f"closure warnings: {len(warnings)}")
    for w in warnings:
        print(f"  {w}", file=sys.stderr)
    return 0


def _net_path(args, config: Config):
    path = args.net or config.network
    if not path:
        raise FileFormatError("no network given (use --net or a config file)")
    return path


def cmd_sim(args, config: Config) -> int:
    net, sig, entry_index = _load_artifact(_net_path(args, config))
    entry_index.update(_extra_index(net, sig, args, config))
    words = (args.word, args.word2)
    if all(net.resolve_root(w) is not None for w in words):
        sigma = similarity_word(net, sig, args.word, args.word2, args.steps)
    else:
        lists = []
        for w in words:
            wordlist, expanded = textops.word_as_wordlist(
                net, sig, w, entry_index, args.depth)
            if expanded:
                print(f"note: {w!r} is outside the network; "
                      "using its dictionary definition", file=sys.stderr)
            lists.append(wordlist)
        sigma = similarity_wordlist(net, lists[0], lists[1], args.steps)
    print(_fmt(sigma))
    return 0


def cmd_pattern(args, config: Config) -> int:
    net, sig, _ = _load_artifact(_net_path(args, config))
    if len(args.words) == 1:
        word = args.words[0]
        root = net.resolve_root(word)
        if root is None:
            raise UnresolvableWordError(word)
        stim = stimulus_for_word(net, root, word_significance(net, sig, root))
    else:
        stim = wordlist_stimulus(net, make_wordlist(net, args.words, sig))
    pattern = run(net, stim, args.steps)
    for node_id, activity in top_activities(net, pattern, args.top):
        print(f"{node_id}\t{_fmt(activity)}")
    return 0


def _text_arg(net, sig, value: str, from_file: bool):
    if from_file:
        with open(value, encoding="utf-8") as fh:
            value = fh.read()
    return textops.make_text(net, value, sig)


def cmd_simtext(args, config: Config) -> int:
    net, sig, _ = _load_artifact(_net_path(args, config))
    x = _text_arg(net, sig, args.text, args.files)
    x2 = _text_arg(net, sig, args.text2, args.files)
    print(_fmt(textops.similarity_text(net, x, x2, args.steps)))
    return 0


def cmd_coherence(args, config: Config) -> int:
    net, sig, _ = _load_artifact(_net_path(args, config))
    x = _text_arg(net, sig, args.text, args.files)
    print(_fmt(textops.coherence(net, x, args.steps)))
    return 0


def cmd_retrieve(args, config: Config) -> int:
    net, sig, _ = _load_artifact(_net_path(args, config))
    store_path = args.store or config.episodes
    if not store_path:
        raise FileFormatError("no episode store given (use --store or a config file)")
    store = textops.load_episodes(store_path, net, sig)
    x = textops.make_text(net, args.text, sig)
    for ep_id, sigma in textops.retrieve(net, x, store, args.top, args.steps):
        print(f"{ep_id}\t{_fmt(sigma)}")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="config file (JSON)")
    common.add_argument("--net", help="compiled network file")
    common.add_argument("--steps", type=int, default=None,
                        help="activation steps (default 10)")

    parser = argparse.ArgumentParser(
        prog="lexnet",
        description="Dictionary-derived semantic network queries")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common],
                       help="compile a dictionary into a network")
    p.add_argument("dictionary", help="dictionary source file")
    p.add_argument("counts", help="corpus counts TSV")
    p.add_argument("out", help="output network file")
    p.add_argument("--morph", help="morphology rules file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("sim", parents=[common],
                       help="similarity between two words")
    p.add_argument("word")
    p.add_argument("word2")
    p.add_argument("--extra", help="supplementary dictionary for extra words")
    p.add_argument("--depth", type=int, default=1,
                   help="extra-word expansion depth")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("pattern", parents=[common],
                       help="dump an activated pattern")
    p.add_argument("words", nargs="+")
    p.add_argument("--top", type=int, default=None, help="rows to print")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("simtext", parents=[common],
                       help="similarity between two texts")
    p.add_argument("text")
    p.add_argument("text2")
    p.add_argument("--files", action="store_true",
                   help="treat the arguments as file paths")
    p.set_defaults(func=cmd_simtext)

    p = sub.add_parser("coherence", parents=[common],
                       help="coherence of a text")
    p.add_argument("text")
    p.add_argument("--files", action="store_true",
                   help="treat the argument as a file path")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("retrieve", parents=[common],
                       help="rank stored episodes against a query text")
    p.add_argument("text")
    p.add_argument("--store", help="episode store (JSON lines)")
    p.add_argument("--top", type=int, default=None, help="results to print")
    p.set_defaults(func=cmd_retrieve)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config) if args.config else config_from_env()
        if args.steps is None:
            args.steps = config.steps
        if args.steps < 1:
            raise ValueError(f"steps must be >= 1, got {args.steps}")
        if getattr(args, "top", None) is None:
            args.top = config.top_k
        return args.func(args, config)
    except (ParseError, BuildError, UnresolvableWordError,
            EmptyWordListError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 2
    except (FileFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
