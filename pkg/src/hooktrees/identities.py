"""Exact evaluation and verification of multiplicative hook statistics.

For a weight w mapping hook lengths to rationals, the statistic of interest
is S(n) = sum over all n-vertex binary trees of prod over vertices of
w(h_v).  The module evaluates S(n) two independent ways:

* brute force: enumerate every tree and recompute its hook lengths by
  traversal (``eval_brute``);
* the root-split convolution S(n) = w(n) * sum_k S(k) * S(n-1-k) with
  S(0) = 1, filled bottom-up (``eval_recurrence``).

Named identities of the form prefactor(n) * S(n) = rhs(n) are then checked
by exact rational equality.  No floating point appears anywhere on an
evaluation or comparison path.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator, Mapping, Optional, Union

from .trees import catalan, iter_trees, subtree_sizes

DEFAULT_BRUTE_CAP = 14  # catalan(14) = 2,674,440 trees: desk-scale seconds

MODES = ("brute", "recurrence", "both")


class HookWeight:
    """A pure map from hook length (a positive integer) to an exact rational.

    Values are memoized, so a weight backed by an expensive callable is
    still cheap to sample repeatedly.
    """

    def __init__(self, name: str, fn: Callable[[int], Union[Fraction, int]]):
        self.name = name
        self._fn = fn
        self._values: dict[int, Fraction] = {}

    def __call__(self, h: int) -> Fraction:
        try:
            return self._values[h]
        except KeyError:
            pass
        if h < 1:
            raise ValueError("hook lengths are positive integers")
        value = Fraction(self._fn(h))
        self._values[h] = value
        return value

    @classmethod
    def from_values(cls, name: str, values: Mapping[int, Union[Fraction, int]]) -> "HookWeight":
        """Weight backed by a finite table; undefined hook lengths raise."""
        table = {int(h): Fraction(v) for h, v in values.items()}

        def lookup(h: int) -> Fraction:
            try:
                return table[h]
            except KeyError:
                raise ValueError(f"weight {name!r} has no value for hook length {h}") from None

        return cls(name, lookup)

    def __repr__(self) -> str:
        return f"HookWeight({self.name!r})"


class SumTable:
    """Bottom-up memo of S(n) values for one weight, with S(0) = 1."""

    def __init__(self, weight: HookWeight):
        self.weight = weight
        self._values: list[Fraction] = [Fraction(1)]

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        values = self._values
        while len(values) <= n:
            m = len(values)
            conv = sum(values[k] * values[m - 1 - k] for k in range(m))
            values.append(self.weight(m) * conv)
        return values[n]

    def __len__(self) -> int:
        return len(self._values)


def eval_brute(weight: HookWeight, n: int, *, cap: Optional[int] = DEFAULT_BRUTE_CAP) -> Fraction:
    """S(n) by full enumeration: every tree is generated and its hook
    lengths recomputed by traversal.

    Independent of the recurrence path by construction.  For n = 0 the sum
    has one term, the empty product over the empty tree, so the result is 1.
    Pass ``cap=None`` to lift the size guard.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cap is not None and n > cap:
        raise ValueError(f"n={n} exceeds the brute-force cap {cap}; pass a larger cap to override")
    if n == 0:
        return Fraction(1)
    numerators = [0] * (n + 1)
    denominators = [0] * (n + 1)
    for h in range(1, n + 1):
        value = weight(h)
        numerators[h] = value.numerator
        denominators[h] = value.denominator
    # Per-tree products are exact integer pairs; partial sums are grouped
    # by denominator so only one reduction happens per distinct value.
    # Grouping reorders the summation, which cannot change the exact total.
    totals: dict[int, int] = {}
    for tree in iter_trees(n):
        num = 1
        den = 1
        for h in subtree_sizes(tree):
            num *= numerators[h]
            den *= denominators[h]
        totals[den] = totals.get(den, 0) + num
    return sum((Fraction(num, den) for den, num in totals.items()), start=Fraction(0))


def eval_recurrence(weight: HookWeight, n: int, table: Optional[SumTable] = None) -> Fraction:
    """S(n) from the root-split convolution, filling the table bottom-up.

    Splitting a nonempty tree at its root leaves an ordered pair of smaller
    trees, and the root itself contributes weight(n); hence
    S(n) = weight(n) * sum_{k=0}^{n-1} S(k) * S(n-1-k).  Repeated calls
    against the same table reuse all previously filled entries.
    """
    if table is None:
        table = SumTable(weight)
    elif table.weight is not weight:
        raise ValueError("table was built for a different weight")
    return table.value(n)


@dataclass(frozen=True)
class HookIdentity:
    """A named claim: prefactor(n) * S_weight(n) = rhs(n) for all n >= 1.

    prefactor and rhs must be total on n >= 1; the built-ins also define
    n = 0, where every one of them happens to hold.
    """

    name: str
    weight: HookWeight
    prefactor: Callable[[int], Fraction]
    rhs: Callable[[int], Fraction]
    doc: str = ""


def fraction_str(value: Fraction) -> str:
    """Serialize a rational as 'p/q': fully reduced, q positive, sign on p."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one identity at one n."""

    identity: str
    n: int
    mode: str
    passed: bool
    lhs: Fraction
    rhs: Fraction

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def tsv_line(self) -> str:
        fields = [self.identity, str(self.n), self.mode, self.status]
        if not self.passed:
            fields.append(fraction_str(self.lhs))
            fields.append(fraction_str(self.rhs))
        return "\t".join(fields)

    def json_line(self) -> str:
        return json.dumps(
            {
                "identity": self.identity,
                "n": self.n,
                "mode": self.mode,
                "status": self.status,
                "lhs": fraction_str(self.lhs),
                "rhs": fraction_str(self.rhs),
            }
        )


@dataclass(frozen=True)
class VerificationReport:
    """Per-n outcomes for one verify call."""

    records: tuple[VerificationRecord, ...]

    @property
    def all_passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def first_failure(self) -> Optional[VerificationRecord]:
        return next((record for record in self.records if not record.passed), None)

    def lines(self, output_format: str = "tsv") -> Iterator[str]:
        for record in self.records:
            yield record.json_line() if output_format == "json" else record.tsv_line()


def _check(
    identity: HookIdentity,
    n: int,
    mode: str,
    *,
    brute_cap: Optional[int],
    table: SumTable,
) -> VerificationRecord:
    if mode in ("brute", "both"):
        s_brute = eval_brute(identity.weight, n, cap=brute_cap)
    if mode in ("recurrence", "both"):
        s_value = eval_recurrence(identity.weight, n, table)
    if mode == "brute":
        s_value = s_brute
    elif mode == "both" and s_brute != s_value:
        # The two evaluation routes disagreeing is itself a failure; report
        # the routes rather than the identity sides.
        return VerificationRecord(identity.name, n, mode, False, s_brute, s_value)
    lhs = identity.prefactor(n) * s_value
    rhs = identity.rhs(n)
    return VerificationRecord(identity.name, n, mode, lhs == rhs, lhs, rhs)


def iter_verify(
    identity: Union[str, HookIdentity],
    n_from: int,
    n_to: int,
    mode: str = "both",
    *,
    brute_cap: Optional[int] = DEFAULT_BRUTE_CAP,
    table: Optional[SumTable] = None,
) -> Iterator[VerificationRecord]:
    """Stream one VerificationRecord per n in [n_from, n_to]."""
    if isinstance(identity, str):
        identity = get_identity(identity)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, not {mode!r}")
    if n_from > n_to:
        raise ValueError(f"empty range: n_from={n_from} > n_to={n_to}")
    if table is None:
        table = SumTable(identity.weight)
    for n in range(n_from, n_to + 1):
        yield _check(identity, n, mode, brute_cap=brute_cap, table=table)


def verify(
    identity: Union[str, HookIdentity],
    n_from: int,
    n_to: int,
    mode: str = "both",
    *,
    brute_cap: Optional[int] = DEFAULT_BRUTE_CAP,
    table: Optional[SumTable] = None,
) -> VerificationReport:
    """Check prefactor(n) * S(n) = rhs(n) for each n in the range.

    ``mode`` selects the evaluation route; "both" additionally requires the
    two routes to agree exactly.  Failures are report content, not errors.
    """
    return VerificationReport(
        records=tuple(
            iter_verify(identity, n_from, n_to, mode, brute_cap=brute_cap, table=table)
        )
    )


def odd_binomial_sum(n: int) -> int:
    """Sum of C(2n, 2k+1) over k = 0..n-1, by direct binomial summation.

    Contract: equals 2^(2n-1), half of the full row sum of binomials.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return sum(comb(2 * n, 2 * k + 1) for k in range(n))


def random_hook_weight(seed: int, max_h: int = 16, name: Optional[str] = None) -> HookWeight:
    """Deterministic pseudo-random weight for oracle-equivalence tests.

    Assigns p/q with p, q drawn uniformly from 1..9 to every hook length up
    to max_h; larger hook lengths are undefined and raise.
    """
    rng = random.Random(seed)
    values = {h: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for h in range(1, max_h + 1)}
    return HookWeight.from_values(name or f"random-{seed}", values)


def _builtins() -> dict[str, HookIdentity]:
    return {
        "catalan": HookIdentity(
            name="catalan",
            weight=HookWeight("1", lambda h: Fraction(1)),
            prefactor=lambda n: Fraction(1),
            rhs=lambda n: Fraction(catalan(n)),
            doc="sum_T 1 = C(2n,n)/(n+1)",
        ),
        "labelings": HookIdentity(
            name="labelings",
            weight=HookWeight("1/h", lambda h: Fraction(1, h)),
            prefactor=lambda n: Fraction(factorial(n)),
            rhs=lambda n: Fraction(factorial(n)),
            doc="n! * sum_T prod_v 1/h_v = n!",
        ),
        "postnikov": HookIdentity(
            name="postnikov",
            weight=HookWeight("1+1/h", lambda h: Fraction(h + 1, h)),
            prefactor=lambda n: Fraction(factorial(n), 2**n),
            rhs=lambda n: Fraction(n + 1) ** (n - 1),
            doc="(n!/2^n) * sum_T prod_v (1 + 1/h_v) = (n+1)^(n-1)",
        ),
        "han4": HookIdentity(
            name="han4",
            weight=HookWeight("1/(h*2^(h-1))", lambda h: Fraction(1, h * 2 ** (h - 1))),
            prefactor=lambda n: Fraction(1),
            rhs=lambda n: Fraction(1, factorial(n)),
            doc="sum_T prod_v 1/(h_v*2^(h_v-1)) = 1/n!",
        ),
        "han5": HookIdentity(
            name="han5",
            weight=HookWeight(
                "1/((2h+1)*2^(2h-1))", lambda h: Fraction(1, (2 * h + 1) * 2 ** (2 * h - 1))
            ),
            prefactor=lambda n: Fraction(1),
            rhs=lambda n: Fraction(1, factorial(2 * n + 1)),
            doc="sum_T prod_v 1/((2h_v+1)*2^(2h_v-1)) = 1/(2n+1)!",
        ),
    }


_BUILTINS = _builtins()

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin_identities() -> list[HookIdentity]:
    """The five built-in identities, in a stable order."""
    return list(_BUILTINS.values())


def get_identity(name: str) -> HookIdentity:
    """Look up a built-in identity by name."""
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown identity {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}"
        ) from None
