"""End-to-end verification and certification of the moment-sum identities.

``verify_claim`` evaluates a claim index by index with the requested
engines and reports exact equality; ``prove_claim`` runs the finite
recurrence certification.  The claim registry is data: each entry carries
the sequence generators, the root-set spec and the default index range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import closed_forms as cf
from . import qratio
from .fib_lucas import fib, fib_minus_one_factors, gcd, lcm, lucas
from .moment_sums import (
    BruteForceGuardError,
    MomentKey,
    MomentTable,
    a_brute,
    a_prime,
    a_prime_brute,
)
from .recurrence_prover import (
    QUARTIC_PHI_POWERS,
    SIGNED_PHI_POWERS,
    EVEN_PHI_POWERS,
    TWICE_ODD_PHI_POWERS,
    Certificate,
    RootSetSpec,
    certify_identity,
)

CLAIM_IDS = (
    "lemma2",
    "lemma3",
    "lemma4",
    "theorem1",
    "theorem6",
    "case4l",
    "nicomachus",
    "fact-identities",
)

DEFAULT_RANGES = {
    "lemma2": 10,
    "lemma3": 18,  # 9 instances per parity class
    "lemma4": 18,
    "theorem1": 30,
    "theorem6": 60,
    "case4l": 21,
    "nicomachus": 1000,
    "fact-identities": 50,
}

DEEP_RANGES = {"case4l": 100, "theorem1": 100}

DEFAULT_ENGINES = {
    "lemma2": ("brute", "recursive", "closed"),
    "lemma3": ("brute", "recursive", "closed"),
    "lemma4": ("brute", "recursive", "closed"),
    "theorem1": ("recursive", "closed"),
    "theorem6": ("closed",),
    "case4l": ("closed",),
    "nicomachus": ("brute",),
    "fact-identities": ("closed",),
}


@dataclass
class IndexResult:
    index: int
    lhs: str
    rhs: str
    equal: bool
    skipped: bool = False


@dataclass
class ClaimReport:
    claim: str
    range: tuple[int, int]
    engines: tuple[str, ...]
    verdict: str
    failures: list[dict]
    skipped: list[int]
    certificate: list[dict] | None
    rows: list[IndexResult] = field(repr=False, default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "range": list(self.range),
            "engines": list(self.engines),
            "verdict": self.verdict,
            "failures": self.failures,
            "skipped": self.skipped,
            "certificate": self.certificate,
        }


def _pairs_lemma2(k: int, engines: Iterable[str], table: MomentTable):
    closed = cf.lemma2_a(k), cf.lemma2_a_prime(k)
    for eng in engines:
        if eng == "closed":
            continue
        if eng == "brute":
            yield a_brute(MomentKey(k, 1, 0)), closed[0]
            yield a_prime_brute(k, 1), closed[1]
        elif eng == "recursive":
            yield table.a(k, 1, 0), closed[0]
            yield a_prime(k, 1, table), closed[1]


def _pairs_lemma3(k: int, engines: Iterable[str], table: MomentTable):
    closed = cf.lemma3_a3(k)
    for eng in engines:
        if eng == "brute":
            yield a_brute(MomentKey(k, 3, 0)), closed
        elif eng == "recursive":
            yield table.a(k, 3, 0), closed


def _pairs_lemma4(k: int, engines: Iterable[str], table: MomentTable):
    closed = cf.lemma4_a_prime3(k)
    for eng in engines:
        if eng == "brute":
            yield a_prime_brute(k, 3), closed
        elif eng == "recursive":
            yield a_prime(k, 3, table), closed


def _pairs_theorem1(K: int, engines: Iterable[str], table: MomentTable):
    rhs = cf.theorem1_rhs(K)
    for eng in engines:
        if eng == "closed":
            continue
        yield qratio.q_diff(K, engine=eng), rhs
    if tuple(engines) == ("closed",):
        yield qratio.q_diff(K, engine="closed"), rhs


def _pairs_theorem6(k: int, engines: Iterable[str], table: MomentTable):
    rhs = cf.theorem6_rhs(k)
    yield lcm(cf.lemma2_a(2 * k), cf.lemma2_a_prime(2 * k)), rhs
    if "brute" in engines:
        yield lcm(a_brute(MomentKey(2 * k, 1, 0)), a_prime_brute(2 * k, 1)), rhs


def _pairs_case4l(l: int, engines: Iterable[str], table: MomentTable):
    lhs, rhs = cf.case4l_sides(l)
    yield lhs, rhs
    if "recursive" in engines:
        K = 4 * l
        num, den = cf.theorem1_num_den(K)
        a1, a1p = table.a(K, 1, 0), a_prime(K, 1, table)
        a3, a3p = table.a(K, 3, 0), a_prime(K, 3, table)
        yield den * (a3p * a1 * a1 - a3 * a1p * a1p), a1 * a1 * a1p * a1p * (den - num)


def _pairs_nicomachus(m: int, engines: Iterable[str], table: MomentTable):
    yield qratio.nicomachus_check(m), True


def _pairs_fact(l: int, engines: Iterable[str], table: MomentTable):
    for n in range(4 * l, 4 * l + 4):
        f, lu = fib_minus_one_factors(n)
        yield f * lu, fib(n) - 1
    yield gcd(lucas(2 * l + 1), lucas(2 * l + 2)), 1


_CHECKERS: dict[str, tuple[Callable, int]] = {
    # checker, first index
    "lemma2": (_pairs_lemma2, 1),
    "lemma3": (_pairs_lemma3, 1),
    "lemma4": (_pairs_lemma4, 1),
    "theorem1": (_pairs_theorem1, 3),
    "theorem6": (_pairs_theorem6, 1),
    "case4l": (_pairs_case4l, 1),
    "nicomachus": (_pairs_nicomachus, 1),
    "fact-identities": (_pairs_fact, 1),
}


def verify_claim(
    claim: str,
    k_max: int | None = None,
    engines: Iterable[str] | None = None,
    deep: bool = False,
) -> ClaimReport:
    """Check one claim index by index; exact equality at every index."""
    if claim not in CLAIM_IDS:
        raise ValueError(f"unknown claim {claim!r}; known: {', '.join(CLAIM_IDS)}")
    checker, lo = _CHECKERS[claim]
    if k_max is None:
        k_max = DEEP_RANGES.get(claim, DEFAULT_RANGES[claim]) if deep else DEFAULT_RANGES[claim]
    engines = tuple(engines) if engines is not None else DEFAULT_ENGINES[claim]
    for eng in engines:
        if eng not in ("brute", "recursive", "closed"):
            raise ValueError(f"unknown engine {eng!r}")

    table = MomentTable()
    rows: list[IndexResult] = []
    failures: list[dict] = []
    skipped: list[int] = []
    for idx in range(lo, k_max + 1):
        try:
            for lhs, rhs in checker(idx, engines, table):
                equal = lhs == rhs
                row = IndexResult(idx, str(lhs), str(rhs), equal)
                rows.append(row)
                if not equal:
                    failures.append({"index": idx, "lhs": str(lhs), "rhs": str(rhs)})
        except BruteForceGuardError:
            skipped.append(idx)
            rows.append(IndexResult(idx, "", "", True, skipped=True))
    verdict = "pass" if not failures else "fail"
    return ClaimReport(
        claim=claim,
        range=(lo, k_max),
        engines=engines,
        verdict=verdict,
        failures=failures,
        skipped=skipped,
        certificate=None,
        rows=rows,
    )


# ---------------------------------------------------------------------------
# Certification registry
# ---------------------------------------------------------------------------

def _theorem1_side_gen(residue: int, side: int) -> Callable[[int], int]:
    def gen(l: int) -> int:
        return cf.theorem1_identity_sides(4 * l + residue)[side]

    return gen


def _prove_specs(table: MomentTable) -> dict[str, list[tuple]]:
    """claim id -> list of (name, lhs, rhs, spec) certification jobs.

    The first-moment identities live on the 10-element signed root set; the
    parity-split third-moment identities on the 9-element even-power set.
    The denominator-free Q-difference identity splits modulo 4: the even
    residues need the 21-element set {phi^(4l): |l| <= 10}, the odd
    residues the 22-element set {phi^(2l): l odd, |l| <= 21} (their
    characteristic roots sit at odd multiples of phi^2).
    """
    signed2 = RootSetSpec(SIGNED_PHI_POWERS, 2)
    even4 = RootSetSpec(EVEN_PHI_POWERS, 4)
    quartic10 = RootSetSpec(QUARTIC_PHI_POWERS, 10)
    twice_odd21 = RootSetSpec(TWICE_ODD_PHI_POWERS, 21)
    return {
        "lemma2": [
            ("lemma2/A", lambda k: table.a(k, 1, 0), cf.lemma2_a, signed2),
            ("lemma2/Aprime", lambda k: a_prime(k, 1, table), cf.lemma2_a_prime, signed2),
        ],
        "lemma3": [
            (
                "lemma3/even",
                lambda k: table.a(2 * k, 3, 0),
                lambda k: cf.lemma3_a3(2 * k),
                even4,
            ),
            (
                "lemma3/odd",
                lambda k: table.a(2 * k - 1, 3, 0),
                lambda k: cf.lemma3_a3(2 * k - 1),
                even4,
            ),
        ],
        "lemma4": [
            (
                "lemma4/even",
                lambda k: a_prime(2 * k, 3, table),
                lambda k: cf.lemma4_a_prime3(2 * k),
                even4,
            ),
            (
                "lemma4/odd",
                lambda k: a_prime(2 * k - 1, 3, table),
                lambda k: cf.lemma4_a_prime3(2 * k - 1),
                even4,
            ),
        ],
        "theorem1": [
            ("theorem1/mod4=0", _theorem1_side_gen(0, 0), _theorem1_side_gen(0, 1), quartic10),
            ("theorem1/mod4=1", _theorem1_side_gen(1, 0), _theorem1_side_gen(1, 1), twice_odd21),
            ("theorem1/mod4=2", _theorem1_side_gen(2, 0), _theorem1_side_gen(2, 1), quartic10),
            ("theorem1/mod4=3", _theorem1_side_gen(3, 0), _theorem1_side_gen(3, 1), twice_odd21),
        ],
    }


PROVABLE_CLAIMS = ("lemma2", "lemma3", "lemma4", "theorem1")


def prove_claim(claim: str, extra_window: int | None = None) -> list[Certificate]:
    """Run the finite certification for a registered claim.

    Returns one Certificate per branch (parity class or residue class).
    """
    if claim not in PROVABLE_CLAIMS:
        raise ValueError(
            f"claim {claim!r} has no registered root-set spec; "
            f"provable claims: {', '.join(PROVABLE_CLAIMS)}"
        )
    table = MomentTable()
    jobs = _prove_specs(table)[claim]
    return [
        certify_identity(name, lhs, rhs, spec, extra_window)
        for name, lhs, rhs, spec in jobs
    ]
