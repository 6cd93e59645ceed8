import argparse
import json
import sys
import yaml
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict

from .automata import suffix_automaton
from .free_group import GroupElement
from .io import (
    automaton_to_dict,
    counting_graph_to_dict,
    counting_graph_to_dot,
    counting_graph_to_text,
    save_automaton_json,
    to_dot,
    to_text,
)
from .pal_map import pal_group, pal_word_fast
from .pal_suffix import build_direct, counting_graph
from .verify import SCOPES, count_directives, run_verification
from .words import Alphabet, palindromic_closure


@dataclass
class CliConfig:
    """
    Настройки командной строки.

    Attributes:
        format: Формат вывода графов: text, dot или json.
        max_pal_length: Ограничение на |Pal(u)|.
        witness_max_len: Длина перебора в поиске свидетеля коцикла.
        max_directives: Предел числа направляющих слов в verify.
        scope: Набор проверок verify по умолчанию.
        max_len: Длина направляющих слов verify по умолчанию.
        alphabet_size: Размер алфавита verify по умолчанию.
    """
    format: str = "text"
    max_pal_length: int = 10**7
    witness_max_len: int = 6
    max_directives: int = 10**6
    scope: str = "all"
    max_len: int = 4
    alphabet_size: int = 2

    @classmethod
    def from_yaml(cls, path: str) -> "CliConfig":
        """
        Raises:
            ValueError: Если файл не найден или содержит неизвестные ключи.
        """
        if not Path(path).exists():
            raise ValueError(f"File not found: {path}")
        data = load_config(path) or {}
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown config keys in {path}: {unknown}")
        return cls(**data)


def load_config(path: str) -> Dict[str, Any]:
    """Load YAML configuration."""
    with open(path, 'r') as f:
        return yaml.safe_load(f)


def _config(args) -> CliConfig:
    config = CliConfig.from_yaml(args.config) if getattr(args, "config", None) else CliConfig()
    for name in ("format", "max_pal_length", "witness_max_len", "scope", "max_len", "alphabet_size"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    return config


def _error(message: str) -> int:
    print(f"Error: {message}", file=sys.stderr)
    return 2


def _alphabet(text: str, declared: str | None, group: bool = False) -> Alphabet:
    if declared:
        return Alphabet(tuple(declared))
    if group and text == "1":
        text = ""
    return Alphabet.from_text(text) if text else Alphabet(("a",))


def pal_command(args):
    """Print Pal(input); with --group the input is a free-group element."""
    try:
        config = _config(args)
        alphabet = _alphabet(args.input, args.alphabet, group=args.group)
        if args.group:
            element = GroupElement.parse(args.input, alphabet)
            print(pal_group(element, max_length=config.max_pal_length))
        else:
            word = alphabet.validate(args.input)
            print(pal_word_fast(word, max_length=config.max_pal_length))
    except ValueError as e:
        return _error(str(e))
    return 0


def closure_command(args):
    """Print the palindromic closure of the input word."""
    try:
        alphabet = _alphabet(args.input, args.alphabet)
        print(palindromic_closure(alphabet.validate(args.input)))
    except ValueError as e:
        return _error(str(e))
    return 0


def automaton_command(args):
    """Emit S(u), S_c(u) or the counting graph of u."""
    try:
        config = _config(args)
        alphabet = _alphabet(args.directive, args.alphabet)
        directive = alphabet.validate(args.directive)

        print(f"Building {args.kind} automaton for {directive!r}...", file=sys.stderr)
        if args.kind == "counting":
            graph = counting_graph(
                directive, alphabet=alphabet, max_pal_length=config.max_pal_length
            )
            if config.format == "json":
                output = json.dumps(counting_graph_to_dict(graph), indent=2) + "\n"
            elif config.format == "dot":
                output = counting_graph_to_dot(graph)
            else:
                output = counting_graph_to_text(graph)
        else:
            if args.kind == "suffix":
                pal = pal_word_fast(directive, max_length=config.max_pal_length)
                automaton = suffix_automaton(pal, alphabet=alphabet).to_compact()
            else:
                automaton = build_direct(
                    directive, alphabet=alphabet, max_pal_length=config.max_pal_length
                ).underlying
            if config.format == "json":
                if args.out:
                    save_automaton_json(automaton, args.out)
                    print(f"Saved to {args.out}", file=sys.stderr)
                    return 0
                output = json.dumps(automaton_to_dict(automaton), indent=2) + "\n"
            elif config.format == "dot":
                output = to_dot(automaton)
            else:
                output = to_text(automaton)
    except ValueError as e:
        return _error(str(e))

    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(output)
        print(f"Saved to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(output)
    return 0


def verify_command(args):
    """Run the verification suites; exit 1 on any failed property."""
    try:
        config = _config(args)
        directives = count_directives(config.alphabet_size, config.max_len)
        print(
            f"Verifying scope={config.scope} max_len={config.max_len} "
            f"alphabet={config.alphabet_size} ({directives} directives)...",
            file=sys.stderr,
        )
        results = run_verification(
            scope=config.scope,
            max_len=config.max_len,
            alphabet_size=config.alphabet_size,
            witness_max_len=config.witness_max_len,
            max_directives=config.max_directives,
        )
    except ValueError as e:
        return _error(str(e))

    print("=" * 60)
    print(f"{'Suite':<16} {'Checked':<10} {'Failures':<10} {'Status':<8}")
    print("-" * 60)
    any_failure = False
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        any_failure |= not result.passed
        print(f"{result.name:<16} {result.checked:<10} {len(result.failures):<10} {status:<8}")
    print("=" * 60)

    for result in results:
        if result.failures:
            print(f"First counterexample ({result.name}): {result.failures[0]}")
            break

    if args.report:
        from .report import generate_markdown_report
        print(f"Generating report: {args.report}", file=sys.stderr)
        generate_markdown_report(
            results,
            args.report,
            settings={
                "scope": config.scope,
                "max_len": config.max_len,
                "alphabet_size": config.alphabet_size,
                "directives": directives,
            },
        )

    return 1 if any_failure else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Palindromization and compact suffix automata of Pal(u)"
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    # Pal
    parser_pal = subparsers.add_parser('pal', help='Iterated palindromic closure Pal(u)')
    parser_pal.add_argument('input', help='Directive word (group element with --group)')
    parser_pal.add_argument('--group', action='store_true', help='Read input as a free-group element (uppercase = inverse)')
    parser_pal.add_argument('--alphabet', help='Declared letters, e.g. abc')
    parser_pal.add_argument('--max-pal-length', type=int, dest='max_pal_length', help='Guard on |Pal(u)|')
    parser_pal.add_argument('--config', help='Path to config.yaml')
    parser_pal.set_defaults(func=pal_command)

    # Closure
    parser_closure = subparsers.add_parser('closure', help='Palindromic closure w^(+)')
    parser_closure.add_argument('input', help='Word')
    parser_closure.add_argument('--alphabet', help='Declared letters, e.g. abc')
    parser_closure.set_defaults(func=closure_command)

    # Automaton
    parser_automaton = subparsers.add_parser('automaton', help='Suffix / compact suffix automaton of Pal(u)')
    parser_automaton.add_argument('directive', help='Directive word u')
    parser_automaton.add_argument('--kind', choices=['suffix', 'compact', 'counting'], default='compact')
    parser_automaton.add_argument('--format', choices=['text', 'dot', 'json'], help='Output format (default text)')
    parser_automaton.add_argument('--alphabet', help='Declared letters, e.g. abc')
    parser_automaton.add_argument('--max-pal-length', type=int, dest='max_pal_length', help='Guard on |Pal(u)|')
    parser_automaton.add_argument('--out', help='Write to a file instead of stdout')
    parser_automaton.add_argument('--config', help='Path to config.yaml')
    parser_automaton.set_defaults(func=automaton_command)

    # Verify
    parser_verify = subparsers.add_parser('verify', help='Exhaustive property verification')
    parser_verify.add_argument('--scope', choices=list(SCOPES), help='Suite to run (default all)')
    parser_verify.add_argument('--max-len', type=int, dest='max_len', help='Maximal directive length')
    parser_verify.add_argument('--alphabet', type=int, dest='alphabet_size', help='Alphabet size 1..4')
    parser_verify.add_argument('--witness-max-len', type=int, dest='witness_max_len', help='Cocycle witness search length')
    parser_verify.add_argument('--report', help='Path to output markdown report')
    parser_verify.add_argument('--config', help='Path to config.yaml')
    parser_verify.set_defaults(func=verify_command)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    sys.exit(args.func(args))


if __name__ == "__main__":
    main()
