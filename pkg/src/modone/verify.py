"""Exact verification of the algebraic facts behind the oscillation bound.

Each elimination step in the underlying argument rests on a displayed
polynomial identity in r together with a strict inequality that the
eliminated configuration would force.  The identities are checked exactly in
rational arithmetic; the strict inequalities of the refuted branches are
confirmed to fail (their true opposites hold for every r in (0,1)).

Because equal polynomials of degree d agree everywhere once they agree at
d+1 points, evaluating both sides on a grid larger than the degree certifies
the identity itself, not just the sampled instances.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exactnum import CertifiedValue, decimal_str, format_rational
from .series import BoundedSeq, eval_series
from .words import Word, left_extension_pair, find_pattern, zero_block_profile


class IdentityKind(enum.Enum):
    MU_NU_GAP = "mu_nu_gap"
    NO_010 = "no_010"
    NOT_BOTH_0111_1000 = "not_both_0111_1000"
    ODD_BLOCK = "odd_block"
    BLOCK_GAP = "block_gap"
    FINAL_MH = "final_mh"


@dataclass(frozen=True)
class ProofIdentity:
    """One displayed step: an equality lhs(r) = rhs(r), plus the threshold
    that the refuted branch would need rhs(r) to exceed."""

    kind: IdentityKind
    z: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind in (IdentityKind.ODD_BLOCK, IdentityKind.BLOCK_GAP):
            if self.z is None or self.z < 2 or self.z % 2:
                raise ValueError(f"{self.kind.value} needs an even z >= 2")
        if self.kind is IdentityKind.FINAL_MH and (self.m is None or self.m < 1):
            raise ValueError("final_mh needs m >= 1")

    @property
    def degree(self) -> int:
        """Degree of both sides as polynomials in r."""
        if self.kind is IdentityKind.MU_NU_GAP:
            return 4
        if self.kind is IdentityKind.NO_010:
            return 5
        if self.kind is IdentityKind.ODD_BLOCK:
            return self.z + 4
        if self.kind is IdentityKind.BLOCK_GAP:
            return self.z + 6
        raise ValueError(f"{self.kind.value} is not an equality identity")

    def lhs(self, r: Fraction) -> Fraction:
        if self.kind is IdentityKind.MU_NU_GAP:
            return 2 - (1 - r) * (1 - r**3)
        if self.kind is IdentityKind.NO_010:
            return 1 + r - r**2 * (1 - r) * (1 - r**2)
        if self.kind is IdentityKind.ODD_BLOCK:
            z = self.z
            return 1 + r - r**2 + r ** (z + 1) - r ** (z + 1) * (1 - r) * (1 - r**2)
        if self.kind is IdentityKind.BLOCK_GAP:
            z = self.z
            return 1 + r - r**2 + r ** (z + 3) - r ** (z + 3) * (1 - r) * (1 - r**2)
        raise ValueError(f"{self.kind.value} is not an equality identity")

    def rhs(self, r: Fraction) -> Fraction:
        base = 1 + r - r**2
        if self.kind is IdentityKind.MU_NU_GAP:
            return (1 + r**2) * base
        if self.kind is IdentityKind.NO_010:
            return (1 + r**3) * base
        if self.kind is IdentityKind.ODD_BLOCK:
            return (1 + r ** (self.z + 2)) * base
        if self.kind is IdentityKind.BLOCK_GAP:
            return (1 + r ** (self.z + 4)) * base
        raise ValueError(f"{self.kind.value} is not an equality identity")

    def thresholds(self, r: Fraction) -> tuple[Fraction, ...]:
        """Values the refuted branch claims rhs(r) strictly exceeds.

        The verifier shows rhs(r) is strictly BELOW each of these, which is
        what collapses the assumed configuration.
        """
        if self.kind is IdentityKind.MU_NU_GAP:
            return (Fraction(2),)
        if self.kind is IdentityKind.NO_010:
            # letter a of the blocking factor can be 0 or 1; a = 0 binds
            return (1 + r, 1 + r + r**2)
        if self.kind is IdentityKind.ODD_BLOCK:
            return (1 + r - r**2 + r ** (self.z + 1),)
        if self.kind is IdentityKind.BLOCK_GAP:
            return (1 + r - r**2 + r ** (self.z + 3),)
        raise ValueError(f"{self.kind.value} has no contradiction threshold")

    def mh_bound(self, r: Fraction) -> Fraction:
        """(1 + r - r^2) / (1 + r^m), the escalated interval-length bound."""
        if self.kind is not IdentityKind.FINAL_MH:
            raise ValueError("mh_bound is defined for final_mh only")
        return (1 + r - r**2) / (1 + r**self.m)

    def describe(self) -> str:
        if self.z is not None:
            return f"{self.kind.value}(z={self.z})"
        if self.m is not None:
            return f"{self.kind.value}(m={self.m})"
        return self.kind.value


def equality_identities(z_values: Sequence[int]) -> list[ProofIdentity]:
    """The four equality-type identity families, instantiated over z_values."""
    out = [
        ProofIdentity(IdentityKind.MU_NU_GAP),
        ProofIdentity(IdentityKind.NO_010),
    ]
    for z in z_values:
        out.append(ProofIdentity(IdentityKind.ODD_BLOCK, z=z))
        out.append(ProofIdentity(IdentityKind.BLOCK_GAP, z=z))
    return out


@dataclass(frozen=True)
class IdentityCheck:
    """Result of one identity at one grid point."""

    identity: ProofIdentity
    r: Fraction
    lhs: Fraction
    rhs: Fraction
    equal: bool
    rejected: bool  # rhs strictly below every claimed threshold

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity.describe(),
            "r": format_rational(self.r),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "equal": self.equal,
            "contradiction_rejected": self.rejected,
        }


@dataclass(frozen=True)
class ProofIdentityReport:
    checks: tuple[IdentityCheck, ...]
    grid_size: int
    certified_identities: tuple[str, ...]  # identities with grid_size > degree

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.checks)

    @property
    def all_rejected(self) -> bool:
        return all(c.rejected for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.all_equal and self.all_rejected

    def to_json_dict(self) -> dict:
        return {
            "grid_size": self.grid_size,
            "all_equal": self.all_equal,
            "all_contradictions_rejected": self.all_rejected,
            "certified_identities": list(self.certified_identities),
            "checks": [c.to_json_dict() for c in self.checks],
        }


def check_proof_identities(
    r_grid: Sequence[Union[int, Fraction]], z_values: Sequence[int]
) -> ProofIdentityReport:
    """Evaluate every equality identity and contradiction threshold exactly.

    All r must be rationals in (0,1); all z even and >= 2.  Any float in the
    grid is rejected rather than silently converted.
    """
    grid: list[Fraction] = []
    for r in r_grid:
        if isinstance(r, float):
            raise TypeError("grid values must be exact rationals, not floats")
        rf = Fraction(r)
        if not 0 < rf < 1:
            raise ValueError(f"grid value {rf} outside (0, 1)")
        grid.append(rf)
    if not grid:
        raise ValueError("empty r grid")
    for z in z_values:
        if z < 2 or z % 2:
            raise ValueError(f"z values must be even and >= 2, got {z}")
    idents = equality_identities(z_values)
    checks = []
    for ident in idents:
        for r in grid:
            lhs, rhs = ident.lhs(r), ident.rhs(r)
            rejected = all(rhs < t for t in ident.thresholds(r))
            checks.append(
                IdentityCheck(ident, r, lhs, rhs, equal=(lhs == rhs), rejected=rejected)
            )
    distinct = len(set(grid))
    certified = tuple(
        ident.describe() for ident in idents if distinct > ident.degree
    )
    return ProofIdentityReport(
        checks=tuple(checks), grid_size=distinct, certified_identities=certified
    )


# ---------------------------------------------------------------------------
# structure audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureAudit:
    no010: bool
    no101: bool
    not_both_0111_1000: bool
    blocks_even: bool
    blocks_in_k_kplus2: bool
    well_formed: bool
    leading_ones: int
    blocks: tuple[int, ...]

    @property
    def all_ok(self) -> bool:
        return (
            self.no010
            and self.no101
            and self.not_both_0111_1000
            and self.blocks_even
            and self.blocks_in_k_kplus2
            and self.well_formed
        )

    def to_json_dict(self) -> dict:
        return {
            "no010": self.no010,
            "no101": self.no101,
            "not_both_0111_1000": self.not_both_0111_1000,
            "blocks_even": self.blocks_even,
            "blocks_in_k_kplus2": self.blocks_in_k_kplus2,
            "well_formed": self.well_formed,
            "leading_ones": self.leading_ones,
            "block_count": len(self.blocks),
            "block_lengths_seen": sorted(set(self.blocks)),
            "all_ok": self.all_ok,
        }


def structure_audit(w: Word, k: int) -> StructureAudit:
    """Audit a binary word against the shape every equality witness must have:
    no 010, no 101, not both 0111 and 1000, and complete zero blocks of the
    two even lengths k and k+2 separated by exactly 11."""
    if k < 2 or k % 2:
        raise ValueError(f"k must be an even integer >= 2, got {k}")
    profile = zero_block_profile(w)
    has0111 = bool(find_pattern(w, Word((0, 1, 1, 1))))
    has1000 = bool(find_pattern(w, Word((1, 0, 0, 0))))
    return StructureAudit(
        no010=not find_pattern(w, Word((0, 1, 0))),
        no101=not find_pattern(w, Word((1, 0, 1))),
        not_both_0111_1000=not (has0111 and has1000),
        blocks_even=all(b % 2 == 0 for b in profile.blocks),
        blocks_in_k_kplus2=all(b in (k, k + 2) for b in profile.blocks),
        well_formed=profile.well_formed,
        leading_ones=profile.leading_ones,
        blocks=profile.blocks,
    )


def contradiction_witness(
    w: Word,
    r: Union[int, Fraction],
    pair: tuple[int, int],
    terms: int,
) -> CertifiedValue:
    """Certified S_i(-r) - S_j(-r) for two occurrence indices i, j in w.

    This is the quantity the elimination steps pit against 1 + r - r^2: for
    a word violating the required structure, suitable occurrences push the
    difference above the bound any small enclosing interval would allow.
    Same index twice encloses 0 (width from the two tail radii only).
    """
    rf = Fraction(r)
    i, j = pair
    S = BoundedSeq.from_word(w)
    a = eval_series(S, i, -rf, terms)
    b = eval_series(S, j, -rf, terms)
    return a.sub(b)


# ---------------------------------------------------------------------------
# extension-pair escalation
# ---------------------------------------------------------------------------


class ExtensionPairNotFound(Exception):
    """The block word's prefix does not (yet) show both k U and (k+2) U."""

    def __init__(self, n: int, prefix_length: int):
        self.n = n
        self.prefix_length = prefix_length
        super().__init__(
            f"no length-{n} factor with both one-letter left extensions in a "
            f"block-word prefix of length {prefix_length}; extend the prefix"
        )


@dataclass(frozen=True)
class EscalationReport:
    n: int
    u: Word
    k: int
    m: int
    r: Fraction
    bound: Fraction
    m_exceeds_4n: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "u": str(self.u),
            "k": self.k,
            "m": self.m,
            "r": format_rational(self.r),
            "bound": {
                "exact": format_rational(self.bound),
                "decimal": decimal_str(self.bound),
            },
            "m_exceeds_4n": self.m_exceeds_4n,
        }


def _infer_k(wZ: Word) -> int:
    letters = sorted(wZ.alphabet)
    if not letters:
        raise ValueError("empty block word")
    if len(letters) == 1:
        return letters[0]  # degenerate; extension pairs cannot exist anyway
    if len(letters) == 2 and letters[1] - letters[0] == 2:
        return letters[0]
    raise ValueError(
        f"block word alphabet {letters} is not of the form {{k, k+2}}"
    )


def mh_escalation(wZ: Word, n: int, r: Union[int, Fraction]) -> EscalationReport:
    """Escalated lower bound on any interval trapping all shifted series.

    Finds, inside the block word Z, a factor U of length n preceded both by
    k and by k+2 (the two-sided left extension that minimal-complexity
    growth guarantees for infinite aperiodic Z), then reports

        m = k + 3 + sum(u_i + 2)   and   bound = (1+r-r^2) / (1+r^m),

    which climbs toward 1 + r - r^2 as n grows.  Raises
    ExtensionPairNotFound when the finite prefix lacks such a factor.
    """
    rf = Fraction(r)
    if not 0 < rf < 1:
        raise ValueError(f"r must be in (0, 1), got {rf}")
    if n < 0:
        raise ValueError("n must be >= 0")
    k = _infer_k(wZ)
    found = left_extension_pair(wZ, n)
    if found is None:
        raise ExtensionPairNotFound(n, len(wZ))
    u, _, _ = found
    m = k + 3 + sum(a + 2 for a in u)
    bound = (1 + rf - rf**2) / (1 + rf**m)
    return EscalationReport(
        n=n, u=u, k=k, m=m, r=rf, bound=bound, m_exceeds_4n=(m > 4 * n)
    )


def mh_escalation_sweep(
    wZ: Word, r: Union[int, Fraction], max_n: int
) -> list[EscalationReport]:
    """Escalation reports for n = 0..max_n, stopping at the first NotFound."""
    out = []
    for n in range(max_n + 1):
        try:
            out.append(mh_escalation(wZ, n, r))
        except ExtensionPairNotFound:
            break
    return out
