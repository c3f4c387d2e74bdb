"""The gating verification suite: one callable per criterion, shared by
the command-line `verify` command and the acceptance tests.

Every check uses exact arithmetic and exact equality.  The conjecture
scans (criterion 9) are informational: they report witnesses but never
gate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field

from .anick import ResolutionPrefix
from .kostant import (
    big_system,
    conjectural_system,
    frobenius_shift_check,
    graded_pbw_dimensions,
    pbw_dimension,
    small_system,
    verify_small_against_big,
)
from .polynomials import Polynomial
from .resolution import (
    GradedComplex,
    generic_minimalize,
    minimalize,
    rank_fp,
    rank_fp_oracle,
)
from .words import Word, word_of


@dataclass
class CriterionResult:
    name: str
    passed: bool
    gating: bool = True
    details: dict = dataclass_field(default_factory=dict)

    def line(self) -> str:
        verdict = "PASS" if self.passed else ("FAIL" if self.gating else "INFO")
        return f"{verdict} {self.name}"


def criterion_1_small_complete() -> CriterionResult:
    """Small systems are complete and already interreduced, l <= 3."""
    details = {}
    ok = True
    for l in range(4):
        system = small_system(l).system
        complete, witnesses = system.is_complete()
        reduced = system.interreduce().rules == system.rules
        details[f"l={l}"] = {"complete": complete, "interreduce_identity": reduced}
        ok = ok and complete and reduced
    return CriterionResult("criterion 1: small basis completeness and reducedness", ok, details=details)


def criterion_2_dimensions() -> CriterionResult:
    """Irreducible-word counts: 8, 64, 512 over the index bounds 0, 1, 2,
    and per-degree counts match the exponent-tuple counts for d <= 16."""
    details = {}
    ok = True
    for l in (1, 2, 3):
        system = small_system(l - 1).system
        total = len(system.irreducible_words())
        expected_total = 8**l
        counts = system.irreducible_counts_by_degree(16)
        expected_counts = graded_pbw_dimensions(3, 2, l, 16)
        good = total == expected_total and counts == expected_counts
        details[f"l={l}"] = {
            "total": total,
            "expected_total": expected_total,
            "graded_match": counts == expected_counts,
        }
        ok = ok and good
    return CriterionResult("criterion 2: dimension counts", ok, details=details)


def criterion_3_big_complete() -> CriterionResult:
    """Big-system completeness and total counts at desk scale."""
    details = {}
    ok = True
    for n, p, l in ((3, 2, 1), (3, 2, 2), (3, 3, 1), (4, 2, 1)):
        system = big_system(n, p, p**l - 1).system
        complete, _ = system.is_complete()
        total = len(system.irreducible_words())
        expected = pbw_dimension(n, p, l)
        details[f"n={n},p={p},l={l}"] = {
            "complete": complete,
            "total": total,
            "expected": expected,
        }
        ok = ok and complete and total == expected
    return CriterionResult("criterion 3: big system completeness", ok, details=details)


def criterion_4_identities() -> CriterionResult:
    """Squares, braid and skew identities vanish in the divided-power
    algebra for indices <= 2 (the index-2 small relations cover them all)."""
    ok, failures = verify_small_against_big(2)
    return CriterionResult(
        "criterion 4: identity suite in the divided-power algebra",
        ok,
        details={"failures": [str(f) for f in failures]},
    )


def criterion_5_golden_differentials() -> CriterionResult:
    """The tabulated d_1 and d_2 values match the printed formulas for all
    indices <= 3."""
    K = 3
    system = small_system(K).system
    prefix = ResolutionPrefix(system)
    A = system.alphabet
    a = [A.generator(f"a{k}") for k in range(K + 1)]
    b = [A.generator(f"b{k}") for k in range(K + 1)]
    e = A.empty_word
    F = system.field

    def elem(level, *pairs):
        from .anick import ModuleElement

        acc = ModuleElement.zero(level, F)
        for m, t in pairs:
            acc = acc.combine(1, ModuleElement.basis(level, F, m, t))
        return acc

    mismatches = []

    def expect(level, t, expected):
        got = prefix.d_generator(level, t)
        if got != expected:
            mismatches.append(f"d_{level}(.{t}) = {got}, expected {expected}")

    for k in range(K + 1):
        ak, bk = word_of(a[k]), word_of(b[k])
        expect(1, ak * ak, elem(0, (ak, ak)))
        braid = Word((b[k], a[k], b[k], a[k]))
        expect(
            1,
            braid,
            elem(0, (Word((b[k], a[k], b[k])), ak), (Word((a[k], b[k], a[k])), bk)),
        )
        for l in range(k + 1, K + 1):
            al = word_of(a[l])
            expect(1, al * ak, elem(0, (al, ak), (ak, al)))
            tail = Word((a[k], b[k], a[k]) + tuple(a[k + 1 : l]))
            expect(
                1,
                al * word_of(b[k]),
                elem(0, (al, word_of(b[k])), (word_of(b[k]), al), (tail[:-1], word_of(tail[-1]))),
            )
            expect(2, al * ak * ak, elem(1, (al, ak * ak), (ak, al * ak)))
            expect(
                2,
                word_of(a[l]) * braid,
                elem(
                    1,
                    (al, braid),
                    (Word((b[k], a[k], b[k])), al * ak),
                    (Word((a[k], b[k], a[k])), al * word_of(b[k])),
                ),
            )
        if k + 1 <= K:
            anext = word_of(a[k + 1])
            bk2 = word_of(b[k]) * word_of(b[k])
            expect(
                2,
                anext * bk2,
                elem(1, (anext, bk2), (word_of(b[k]), anext * word_of(b[k])), (e, braid)),
            )
    return CriterionResult(
        "criterion 5: golden differential values",
        not mismatches,
        details={"mismatches": mismatches},
    )


def criterion_6_exactness() -> CriterionResult:
    """d o d = 0 on all generators; zero exactness defects through degree 16."""
    prefix = ResolutionPrefix(small_system(3).system)
    complex_ok, problems = prefix.verify_complex()
    gc = GradedComplex.from_prefix(prefix)
    defects = gc.verify_exactness([-1, 0, 1], 16)
    ok = complex_ok and not defects
    return CriterionResult(
        "criterion 6: complex identity and exactness",
        ok,
        details={
            "d_compose_d_zero": complex_ok,
            "problems": problems,
            "defects": {f"{k}": v for k, v in defects.items()},
        },
    )


def expected_betti_table(max_degree: int = 16, K: int = 3) -> dict[int, dict[int, int]]:
    """Level 0: the trivial cover; level 1: two generators in each degree
    2^k; level 2: two in each degree 2^(k+1) and four in each 2^l + 2^k."""
    level1 = {2**k: 2 for k in range(K + 1) if 2**k <= max_degree}
    level2: dict[int, int] = {}
    for k in range(K + 1):
        d = 2 ** (k + 1)
        if d <= max_degree:
            level2[d] = level2.get(d, 0) + 2
    for k in range(K + 1):
        for l in range(k + 1, K + 1):
            d = 2**l + 2**k
            if d <= max_degree:
                level2[d] = level2.get(d, 0) + 4
    return {0: {0: 1}, 1: level1, 2: level2}


def criterion_7_minimality() -> CriterionResult:
    """After minimalization: radical criterion at levels 0-2, zero defects,
    and the expected Betti table; the generic cancellation path agrees."""
    prefix = ResolutionPrefix(small_system(3).system)
    gc = GradedComplex.from_prefix(prefix)
    mn = minimalize(gc)
    radical = {lvl: mn.radical_image_check(lvl)[0] for lvl in (0, 1, 2)}
    defects = mn.verify_exactness([-1, 0, 1], 16)
    betti = {lvl: mn.betti_table(16)[lvl] for lvl in (0, 1, 2)}
    expected = expected_betti_table(16, 3)
    gm = generic_minimalize(gc)
    generic_betti = {lvl: gm.betti_table(16)[lvl] for lvl in (0, 1, 2)}
    ok = (
        all(radical.values())
        and not defects
        and betti == expected
        and generic_betti == betti
    )
    return CriterionResult(
        "criterion 7: minimality and Betti numbers",
        ok,
        details={
            "radical": radical,
            "defects": {f"{k}": v for k, v in defects.items()},
            "betti": betti,
            "expected": expected,
            "generic_agrees": generic_betti == betti,
        },
    )


# ---------------------------------------------------------------------
# criterion 8: randomized property suites
# ---------------------------------------------------------------------

def _random_word(rng: random.Random, alphabet, max_len: int) -> Word:
    gens = list(alphabet)
    return Word(tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))))


def check_monoid_laws(cases: int = 1000, seed: int = 0) -> int:
    """Translation invariance and totality of the word order."""
    rng = random.Random(seed)
    alphabet = small_system(1).alphabet
    failures = 0
    for _ in range(cases):
        u = _random_word(rng, alphabet, 5)
        v = _random_word(rng, alphabet, 5)
        w = _random_word(rng, alphabet, 5)
        if u < v:
            if not (u * w < v * w and w * u < w * v):
                failures += 1
        if (u < v) + (v < u) + (u == v) != 1:
            failures += 1
        if not u.is_empty() and not (v < v * u):
            failures += 1
    return failures


def check_nf_uniqueness(cases: int = 1000, seed: int = 1) -> int:
    """A complete system gives one normal form no matter the strategy."""
    rng = random.Random(seed)
    system = small_system(1).system
    failures = 0
    for _ in range(cases):
        g = Polynomial.from_terms(
            system.field,
            [(1, _random_word(rng, system.alphabet, 6)) for _ in range(rng.randint(1, 3))],
        )
        h = g
        while True:
            candidates = []
            for w in h.terms:
                for pos in range(len(w)):
                    for ridx, rule in enumerate(system.rules):
                        if w.letters[pos : pos + len(rule.lhs)] == rule.lhs.letters:
                            candidates.append((w, pos, ridx))
            if not candidates:
                break
            w, pos, ridx = rng.choice(candidates)
            coeff = h.terms[w]
            h = h.combine(-coeff, Polynomial.monomial(system.field, w)).combine(
                coeff, system.apply_step(w, pos, ridx)
            )
        if h != system.normal_form(g):
            failures += 1
    return failures


def check_reduction_soundness(cases: int = 1000, seed: int = 2) -> int:
    """Two-sided multiples of the relations reduce to zero."""
    rng = random.Random(seed)
    system = small_system(1).system
    failures = 0
    for _ in range(cases):
        rule = rng.choice(system.rules)
        u = _random_word(rng, system.alphabet, 3)
        v = _random_word(rng, system.alphabet, 3)
        g = rule.polynomial().sandwich(u, v)
        if not system.normal_form(g).is_zero():
            failures += 1
    return failures


def check_rank_oracle(cases: int = 1000, seed: int = 3) -> int:
    """Bitpacked/pivoting rank agrees with the transposed naive oracle."""
    rng = random.Random(seed)
    failures = 0
    for case in range(cases):
        p = rng.choice((2, 2, 3, 5))
        if case % 100 == 0:
            rows = cols = 50
        else:
            rows, cols = rng.randint(1, 20), rng.randint(1, 20)
        mat = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        if rank_fp(mat, p) != rank_fp_oracle(mat, p):
            failures += 1
    return failures


def criterion_8_properties(cases: int = 1000) -> CriterionResult:
    details = {
        "monoid_laws": check_monoid_laws(cases),
        "nf_uniqueness": check_nf_uniqueness(cases),
        "reduction_soundness": check_reduction_soundness(cases),
        "rank_oracle": check_rank_oracle(cases),
    }
    ok = all(v == 0 for v in details.values())
    return CriterionResult(
        "criterion 8: randomized property suites", ok, details=details
    )


def criterion_9_conjectures() -> CriterionResult:
    """Bounded conjecture scans; informational only (never gates)."""
    details = {}
    shift_ok = all(
        frobenius_shift_check(l, j)[0] for l in range(4) for j in (1, 2)
    )
    details["frobenius_shift"] = "consistent" if shift_ok else "witness found"

    odd = conjectural_system("odd_p_n3", 3, 3, 1)
    completed = odd.system.complete(9)
    new_odd = completed.rules[len(odd.system.rules):]
    details["odd_p_n3 (p=3, degree<=9)"] = (
        "consistent up to bound"
        if not new_odd
        else f"witness: {len(new_odd)} unresolved consequences, e.g. {new_odd[0].lhs}"
    )

    gen = conjectural_system("p2_general_n", 4, 2, 2)
    completed = gen.system.complete(8)
    new_gen = completed.rules[len(gen.system.rules):]
    details["p2_general_n (n=4, degree<=8)"] = (
        "consistent up to bound"
        if not new_gen
        else f"witness: {len(new_gen)} unresolved consequences, e.g. {new_gen[0].lhs}"
    )
    return CriterionResult(
        "criterion 9: conjecture scans (experimental)",
        shift_ok and not new_odd and not new_gen,
        gating=False,
        details=details,
    )


ALL_CRITERIA = (
    criterion_1_small_complete,
    criterion_2_dimensions,
    criterion_3_big_complete,
    criterion_4_identities,
    criterion_5_golden_differentials,
    criterion_6_exactness,
    criterion_7_minimality,
    criterion_8_properties,
    criterion_9_conjectures,
)


def run_all() -> list[CriterionResult]:
    return [fn() for fn in ALL_CRITERIA]
