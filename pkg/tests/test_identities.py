import json
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hooktrees import (
    BUILTIN_NAMES,
    HookWeight,
    SumTable,
    builtin_identities,
    catalan,
    eval_brute,
    eval_recurrence,
    fraction_str,
    get_identity,
    hook_lengths,
    iter_trees,
    odd_binomial_sum,
    random_hook_weight,
    verify,
)
from hooktrees import identities


def naive_sum(weight, n):
    # Reference evaluation: one Fraction product per tree, summed in
    # enumeration order.  Deliberately unoptimized.
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for tree in iter_trees(n):
        product = Fraction(1)
        for h in hook_lengths(tree):
            product *= weight(h)
        total += product
    return total


HAN4 = get_identity("han4")
HAN5 = get_identity("han5")


class TestHookWeight:
    def test_builtin_weight_values(self):
        assert HAN4.weight(1) == 1
        assert HAN4.weight(2) == Fraction(1, 4)
        assert HAN4.weight(3) == Fraction(1, 12)
        assert HAN5.weight(1) == Fraction(1, 6)
        assert HAN5.weight(2) == Fraction(1, 40)
        assert get_identity("postnikov").weight(3) == Fraction(4, 3)

    def test_memoized_and_pure(self):
        calls = []
        weight = HookWeight("probe", lambda h: (calls.append(h), Fraction(1, h))[1])
        assert weight(5) == weight(5) == Fraction(1, 5)
        assert calls == [5]

    def test_nonpositive_hook_rejected(self):
        with pytest.raises(ValueError):
            HAN4.weight(0)

    def test_table_weight_bounds(self):
        weight = HookWeight.from_values("tiny", {1: Fraction(2, 3), 2: 1})
        assert weight(1) == Fraction(2, 3)
        assert weight(2) == 1
        with pytest.raises(ValueError):
            weight(3)


class TestEvalBrute:
    def test_golden_example_values(self):
        assert eval_brute(HAN4.weight, 3) == Fraction(1, 6)
        assert eval_brute(HAN5.weight, 3) == Fraction(1, 5040)

    def test_empty_product(self):
        assert eval_brute(HAN4.weight, 0) == 1
        assert eval_brute(random_hook_weight(3), 0) == 1

    def test_constant_weight_counts_trees(self):
        one = get_identity("catalan").weight
        assert eval_brute(one, 5) == 42

    def test_matches_naive_reference(self):
        for name in BUILTIN_NAMES:
            weight = get_identity(name).weight
            for n in range(7):
                assert eval_brute(weight, n) == naive_sum(weight, n)
        for seed in range(3):
            weight = random_hook_weight(seed, max_h=6)
            for n in range(7):
                assert eval_brute(weight, n) == naive_sum(weight, n)

    def test_cap_enforced(self):
        with pytest.raises(ValueError, match="cap 3"):
            eval_brute(HAN4.weight, 4, cap=3)
        assert eval_brute(HAN4.weight, 4, cap=4) == Fraction(1, 24)
        assert eval_brute(HAN4.weight, 4, cap=None) == Fraction(1, 24)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            eval_brute(HAN4.weight, -1)


class TestEvalRecurrence:
    def test_golden_values(self):
        assert eval_recurrence(HAN4.weight, 10) == Fraction(1, 3628800)
        assert eval_recurrence(HAN5.weight, 1) == Fraction(1, 6)

    def test_constant_weight_reproduces_catalan(self):
        table = SumTable(get_identity("catalan").weight)
        for n in range(13):
            assert table.value(n) == catalan(n)

    def test_seed_entry(self):
        table = SumTable(HAN4.weight)
        assert table.value(0) == 1
        assert len(table) == 1

    def test_table_reuse(self):
        table = SumTable(HAN5.weight)
        first = eval_recurrence(HAN5.weight, 8, table)
        assert len(table) == 9
        assert eval_recurrence(HAN5.weight, 8, table) == first
        assert eval_recurrence(HAN5.weight, 4, table) == Fraction(1, factorial(9))

    def test_foreign_table_rejected(self):
        with pytest.raises(ValueError):
            eval_recurrence(HAN4.weight, 3, SumTable(HAN5.weight))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            eval_recurrence(HAN4.weight, -2)


class TestOracleEquivalence:
    @pytest.mark.parametrize("seed", range(6))
    def test_random_weights(self, seed):
        weight = random_hook_weight(seed, max_h=8)
        table = SumTable(weight)
        for n in range(9):
            assert eval_brute(weight, n) == eval_recurrence(weight, n, table)

    @given(
        numerators=st.lists(st.integers(1, 9), min_size=6, max_size=6),
        denominators=st.lists(st.integers(1, 9), min_size=6, max_size=6),
    )
    @settings(max_examples=40, deadline=None)
    def test_any_small_weight(self, numerators, denominators):
        values = {
            h: Fraction(p, q)
            for h, (p, q) in enumerate(zip(numerators, denominators), start=1)
        }
        weight = HookWeight.from_values("hyp", values)
        table = SumTable(weight)
        for n in range(7):
            assert eval_brute(weight, n) == eval_recurrence(weight, n, table)


class TestBuiltins:
    def test_exactly_five(self):
        names = [identity.name for identity in builtin_identities()]
        assert names == ["catalan", "labelings", "postnikov", "han4", "han5"]
        assert BUILTIN_NAMES == tuple(names)

    def test_lookups(self):
        assert get_identity("han5").weight(1) == Fraction(1, 6)
        assert get_identity("postnikov").rhs(3) == 16
        assert get_identity("catalan").rhs(0) == 1
        labelings = get_identity("labelings")
        assert labelings.prefactor(4) == labelings.rhs(4) == 24

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown identity"):
            get_identity("han6")

    def test_all_hold_at_zero(self):
        for identity in builtin_identities():
            assert identity.prefactor(0) * Fraction(1) == identity.rhs(0)


class TestVerify:
    def test_han4_both(self):
        report = verify("han4", 1, 8, "both")
        assert report.all_passed
        assert report.first_failure is None
        assert [record.n for record in report.records] == list(range(1, 9))

    def test_postnikov_brute_at_two(self):
        report = verify("postnikov", 2, 2, "brute")
        assert report.all_passed
        assert report.records[0].lhs == 3

    def test_catalan_recurrence(self):
        assert verify("catalan", 0, 10, "recurrence").all_passed

    def test_labelings_both(self):
        report = verify("labelings", 1, 9, "both")
        assert report.all_passed
        assert report.records[-1].lhs == factorial(9)

    def test_failure_reported_not_raised(self):
        broken = identities.HookIdentity(
            name="broken",
            weight=HAN4.weight,
            prefactor=lambda n: Fraction(1),
            rhs=lambda n: Fraction(1, factorial(n) + 1),
        )
        report = verify(broken, 1, 4, "recurrence")
        assert not report.all_passed
        failure = report.first_failure
        assert failure.n == 1
        assert failure.lhs == 1
        assert failure.rhs == Fraction(1, 2)

    def test_both_mode_detects_route_disagreement(self, monkeypatch):
        monkeypatch.setattr(identities, "eval_brute", lambda w, n, cap=None: Fraction(7))
        report = verify("han4", 2, 2, "both")
        assert not report.all_passed
        record = report.records[0]
        assert record.lhs == 7
        assert record.rhs == Fraction(1, 2)

    def test_brute_cap_respected(self):
        with pytest.raises(ValueError, match="brute-force cap"):
            verify("han4", 1, 5, "brute", brute_cap=3)
        # recurrence mode has no cap
        assert verify("han4", 1, 20, "recurrence", brute_cap=3).all_passed

    def test_bad_arguments(self):
        with pytest.raises(ValueError, match="mode"):
            verify("han4", 1, 3, "fast")
        with pytest.raises(ValueError, match="empty range"):
            verify("han4", 5, 1, "recurrence")

    def test_memoization_transparent(self):
        table = SumTable(HAN5.weight)
        interleaved = [
            verify("han5", 4, 6, "recurrence", table=table),
            verify("han5", 1, 3, "recurrence", table=table),
            verify("han5", 1, 9, "recurrence", table=table),
        ]
        fresh = verify("han5", 1, 9, "recurrence")
        assert all(report.all_passed for report in interleaved)
        assert [r.lhs for r in interleaved[2].records] == [r.lhs for r in fresh.records]


class TestReportSerialization:
    def test_pass_line_has_four_fields(self):
        record = verify("han4", 3, 3, "recurrence").records[0]
        assert record.tsv_line() == "han4\t3\trecurrence\tPASS"

    def test_fail_line_carries_both_sides(self):
        broken = identities.HookIdentity(
            name="broken",
            weight=HAN4.weight,
            prefactor=lambda n: Fraction(1),
            rhs=lambda n: Fraction(-5, 3),
        )
        record = verify(broken, 2, 2, "recurrence").records[0]
        assert record.tsv_line() == "broken\t2\trecurrence\tFAIL\t1/2\t-5/3"

    def test_json_record_keys(self):
        record = verify("han5", 2, 2, "both").records[0]
        payload = json.loads(record.json_line())
        assert payload == {
            "identity": "han5",
            "n": 2,
            "mode": "both",
            "status": "PASS",
            "lhs": "1/120",
            "rhs": "1/120",
        }

    def test_report_lines(self):
        report = verify("catalan", 0, 2, "recurrence")
        assert list(report.lines()) == [
            "catalan\t0\trecurrence\tPASS",
            "catalan\t1\trecurrence\tPASS",
            "catalan\t2\trecurrence\tPASS",
        ]


class TestFractionStr:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (Fraction(42), "42/1"),
            (Fraction(-3, 9), "-1/3"),
            (Fraction(1, 5040), "1/5040"),
            (Fraction(0), "0/1"),
        ],
    )
    def test_format(self, value, expected):
        assert fraction_str(value) == expected


class TestOddBinomialSum:
    def test_single_term(self):
        assert odd_binomial_sum(1) == 2

    def test_three(self):
        # 6 + 20 + 6, summed term by term
        assert odd_binomial_sum(3) == 32

    def test_power_of_two_contract(self):
        for n in range(1, 60):
            assert odd_binomial_sum(n) == 2 ** (2 * n - 1)
        assert odd_binomial_sum(100) == 2**199

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            odd_binomial_sum(0)


class TestRandomWeight:
    def test_deterministic(self):
        first = random_hook_weight(11, max_h=9)
        second = random_hook_weight(11, max_h=9)
        assert [first(h) for h in range(1, 10)] == [second(h) for h in range(1, 10)]

    def test_values_in_small_range(self):
        weight = random_hook_weight(5, max_h=12)
        for h in range(1, 13):
            value = weight(h)
            assert 1 <= value.numerator <= 9
            assert 1 <= value.denominator <= 9
