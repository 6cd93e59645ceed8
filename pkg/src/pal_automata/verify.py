"""
Exhaustive verification suites over all directive words up to a length.

Each suite returns a `SuiteResult`; the CLI turns them into an exit code
and, on request, a markdown report.
"""

import itertools
from dataclasses import dataclass, field

from .automata import suffix_automaton, verify_pal_suffix_theorem
from .compact import canonical_form, minimal_compact, reduce_to_minimal
from .free_group import GroupElement, embed_word, reduced_elements, signed_letters
from .pal_map import (
    check_justin_L,
    check_justin_R,
    check_lr_conjugation,
    check_lr_reversal,
    cocycle_witness_search,
    delta,
    pal_group,
    pal_word,
    pal_word_fast,
    run_transducer,
    verify_cocycle_witness,
)
from .pal_suffix import (
    build_direct,
    check_label_homogeneity,
    counting_graph,
    extend,
    fibonacci_length_check,
    path_count_to_final,
    restrict,
    transition_count,
    verify_counting,
)
from .words import Alphabet, left_special_factors, prefixes, suffixes


SCOPES = ("all", "justin", "suffix-theorem", "compact", "counts", "cocycle")


@dataclass
class SuiteResult:
    """
    Attributes:
        name: Suite name (one of SCOPES except "all").
        checked: Number of items checked (directives, pairs, ...).
        failures: Human-readable counterexamples, in discovery order.
    """
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        if not ok:
            self.failures.append(message)


def count_directives(alphabet_size: int, max_len: int) -> int:
    return sum(alphabet_size ** k for k in range(max_len + 1))


def count_reduced_elements(alphabet_size: int, length: int) -> int:
    """Reduced words of exactly `length` letters over k letters and their inverses."""
    if length == 0:
        return 1
    return 2 * alphabet_size * (2 * alphabet_size - 1) ** (length - 1)


def count_justin_pairs(alphabet_size: int, max_len: int) -> int:
    """Pairs (u, v) of reduced elements with |u| + |v| ≤ max_len."""
    per_length = [count_reduced_elements(alphabet_size, n) for n in range(max_len + 1)]
    return sum(
        per_length[i] * per_length[j]
        for i in range(max_len + 1)
        for j in range(max_len + 1 - i)
    )


def sweep_size(scope: str, alphabet_size: int, max_len: int, witness_max_len: int = 6) -> int:
    """Largest number of items a single suite of `scope` walks through."""
    sizes = [count_directives(alphabet_size, max_len)]
    if scope in ("all", "justin"):
        sizes.append(count_justin_pairs(alphabet_size, max_len))
    if scope in ("all", "cocycle"):
        sizes.append(sum(count_reduced_elements(alphabet_size, n) for n in range(witness_max_len + 1)))
        if alphabet_size == 2:
            sizes.append(sum(count_reduced_elements(alphabet_size, n) for n in range(max_len + 1)))
    return max(sizes)


def validate_bounds(
    alphabet_size: int,
    max_len: int,
    max_directives: int = 10**6,
    scope: str = "all",
    witness_max_len: int = 6,
) -> None:
    """
    Raises:
        ValueError: If the alphabet size is outside 1..4, a length is negative,
            or some suite of `scope` would walk more than max_directives items
            (directive words, reduced group elements or Justin pairs).
    """
    if not 1 <= alphabet_size <= 4:
        raise ValueError(f"alphabet size must be in 1..4, got {alphabet_size}")
    if max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    if witness_max_len < 0:
        raise ValueError(f"witness_max_len must be non-negative, got {witness_max_len}")
    total = sweep_size(scope, alphabet_size, max_len, witness_max_len)
    if total > max_directives:
        raise ValueError(
            f"Sweep of {total} items for scope {scope!r} exceeds the bound {max_directives}; "
            f"lower --max-len"
        )


def suite_justin(alphabet: Alphabet, max_len: int) -> SuiteResult:
    """Justin's formulas, L/R identities, δ morphism, transducer and fast Pal."""
    result = SuiteResult("justin")
    by_length: dict[int, list[GroupElement]] = {}
    for element in reduced_elements(alphabet, max_len):
        by_length.setdefault(len(element), []).append(element)
    letters = [GroupElement((s,), alphabet) for s in signed_letters(alphabet)]

    for u in itertools.chain.from_iterable(by_length.values()):
        result.check(pal_group(u).is_palindrome(), f"Pal({u}) = {pal_group(u)} is not a palindrome")
        for a in letters:
            result.check(check_lr_conjugation(a, u), f"a·R_a(u) != L_a(u)·a for a={a}, u={u}")
        partners = itertools.chain.from_iterable(
            by_length.get(k, []) for k in range(max_len - len(u) + 1)
        )
        for v in partners:
            result.checked += 1
            result.check(check_justin_R(u, v), f"Justin R fails for u={u}, v={v}")
            result.check(check_justin_L(u, v), f"Justin L fails for u={u}, v={v}")
            result.check(check_lr_reversal(u, v), f"R_u(v) != ~L_u(~v) for u={u}, v={v}")
            result.check(delta(u) * delta(v) == delta(u * v), f"δ(u)δ(v) != δ(uv) for u={u}, v={v}")

    seen: dict[str, str] = {}
    for w in alphabet.words(max_len):
        pal = pal_word(w)
        result.check(pal_word_fast(w) == pal, f"pal_word_fast({w!r}) != pal_word")
        result.check("".join(run_transducer(w, alphabet)) == pal, f"transducer output differs for {w!r}")
        result.check(pal_group(embed_word(w, alphabet)) == embed_word(pal, alphabet),
                     f"pal_group disagrees with pal_word on {w!r}")
        result.check(pal not in seen, f"Pal not injective: {seen.get(pal)!r} and {w!r}")
        seen[pal] = w
    return result


def suite_suffix_theorem(alphabet: Alphabet, max_len: int) -> SuiteResult:
    result = SuiteResult("suffix-theorem")
    for u in alphabet.words(max_len):
        result.checked += 1
        report = verify_pal_suffix_theorem(u, alphabet=alphabet)
        result.check(report.passed, f"u={u!r}: {report.counterexample}")
        pal = pal_word_fast(u)
        extra = left_special_factors(pal) - set(prefixes(pal))
        result.check(not extra, f"u={u!r}: left-special factor {sorted(extra)[:1]} is not a prefix")
    return result


def suite_compact(alphabet: Alphabet, max_len: int) -> SuiteResult:
    """build_direct = minimal_compact = reduce_to_minimal, plus extend / restrict."""
    result = SuiteResult("compact")
    for u in alphabet.words(max_len):
        result.checked += 1
        direct = build_direct(u, alphabet=alphabet)
        expected = canonical_form(direct.underlying)
        oracle = canonical_form(minimal_compact(suffixes(direct.pal)))
        reduced = canonical_form(reduce_to_minimal(suffix_automaton(direct.pal).to_compact()))
        result.check(expected == oracle, f"u={u!r}: build_direct differs from minimal_compact")
        result.check(expected == reduced, f"u={u!r}: build_direct differs from reduce_to_minimal")
        if len(u) < max_len:
            for x in alphabet:
                grown = canonical_form(extend(direct, x).underlying)
                result.check(grown == canonical_form(build_direct(u + x, alphabet=alphabet).underlying),
                             f"u={u!r}, x={x!r}: extend differs from build_direct")
        for p in prefixes(u):
            kept = canonical_form(restrict(direct, p).underlying)
            result.check(kept == canonical_form(build_direct(p, alphabet=alphabet).underlying),
                         f"u={u!r}: restrict to {p!r} differs from build_direct")
    return result


def suite_counts(alphabet: Alphabet, max_len: int) -> SuiteResult:
    """State / edge / path counts, label homogeneity, counting graphs, Fibonacci growth."""
    result = SuiteResult("counts")
    for u in alphabet.words(max_len):
        result.checked += 1
        A = build_direct(u, alphabet=alphabet)
        result.check(A.n_states == len(u) + 1, f"u={u!r}: {A.n_states} states")
        result.check(A.underlying.terminals == frozenset(A.underlying.states), f"u={u!r}: non-terminal state")
        result.check(A.n_edges == transition_count(u), f"u={u!r}: {A.n_edges} edges, expected {transition_count(u)}")
        expected_paths = A.pal_lengths[-1] - A.pal_lengths[-2] if u else 1
        result.check(path_count_to_final(u, alphabet=alphabet) == expected_paths,
                     f"u={u!r}: path count differs from |Pal(u)| - |Pal(u⁻)|")
        result.check(check_label_homogeneity(A), f"u={u!r}: labels depend on more than the target")
        result.check(verify_counting(counting_graph(u, alphabet=alphabet)),
                     f"u={u!r}: counting graph does not count 0..|Pal(u)|")
    for n in range(1, 13):
        result.check(fibonacci_length_check(n), f"|Pal((ab)^{n})| != F_{2 * n + 3} - 2")
    return result


def suite_cocycle(alphabet: Alphabet, max_len: int, witness_max_len: int = 6) -> SuiteResult:
    """Triviality of the Pal cocycle on two letters, its absence otherwise."""
    result = SuiteResult("cocycle")
    witness = cocycle_witness_search(alphabet, witness_max_len)
    result.checked += 1
    if len(alphabet) == 2:
        a, b = alphabet.letters
        expected = GroupElement.parse(a + b, alphabet)
        result.check(witness == expected, f"witness search returned {witness}, expected {expected}")
        if witness is not None:
            for u in reduced_elements(alphabet, max_len):
                result.checked += 1
                result.check(verify_cocycle_witness(witness, u), f"Pal({u}) != x⁻¹R_u(x) for x={witness}")
    else:
        result.check(witness is None, f"unexpected witness {witness} for |A| = {len(alphabet)}")
    return result


def run_verification(
    scope: str,
    max_len: int,
    alphabet_size: int,
    witness_max_len: int = 6,
    max_directives: int = 10**6,
) -> list[SuiteResult]:
    """
    Run the suites selected by `scope` over the first `alphabet_size` letters.

    Raises:
        ValueError: On an unknown scope or a bound violation.
    """
    if scope not in SCOPES:
        raise ValueError(f"Unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    validate_bounds(alphabet_size, max_len, max_directives, scope, witness_max_len)
    alphabet = Alphabet.of_size(alphabet_size)

    suites = {
        "justin": lambda: suite_justin(alphabet, max_len),
        "suffix-theorem": lambda: suite_suffix_theorem(alphabet, max_len),
        "compact": lambda: suite_compact(alphabet, max_len),
        "counts": lambda: suite_counts(alphabet, max_len),
        "cocycle": lambda: suite_cocycle(alphabet, max_len, witness_max_len),
    }
    selected = list(suites) if scope == "all" else [scope]
    return [suites[name]() for name in selected]
