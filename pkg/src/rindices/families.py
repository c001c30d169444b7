"""Closed-form index expressions for the four named families, and a
verifier that compares every recorded variant against direct computation.

The published path proposition is internally inconsistent: its statement
line, its proof's final arithmetic and the values implied by the degree
definitions are three different things. The star proposition's first-index
claim counts only the central vertex. Each recorded claim is therefore
tagged with its source (statement, proof, or corrected form) and checked
independently; mismatches are findings, not errors.

Corrected forms registered here, derived by brute-force evaluation over
n = 3..60 and then confirmed by the endpoint / next-to-end / interior
vertex classification:

  path, n >= 5:  R1 = 64n - 174,  R2 = 64n - 200,  R3 = 16n - 36
  path, n = 3:   R1 = 41,  R2 = 24,  R3 = 14   (only two vertex classes)
  path, n = 4:   R1 = 82,  R2 = 65,  R3 = 28   (no interior-class vertex)
  star, n >= 3:  R1 = n^2 + 4(n-1)^3           (center n^2 plus pendants)
"""

import io
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import OrderBelowValidityError
from .graph import Family, generate_family
from .indices import r1_index, r2_index, r3_index


class Source(Enum):
    PAPER_STATEMENT = "statement"
    PAPER_PROOF = "proof"
    CORRECTED = "corrected"


class RIndex(Enum):
    R1 = "r1"
    R2 = "r2"
    R3 = "r3"


_INDEX_FN = {RIndex.R1: r1_index, RIndex.R2: r2_index, RIndex.R3: r3_index}


@dataclass(frozen=True)
class ClosedFormVariant:
    """One recorded closed-form claim for (family, index)."""

    family: Family
    index: RIndex
    source: Source
    expression: object  # callable n -> Fraction
    min_n: int = 3

    def evaluate(self, n):
        if n < self.min_n:
            raise OrderBelowValidityError(
                f"{self.family.value}/{self.index.value}/{self.source.value} "
                f"claimed only for n >= {self.min_n}, got {n}"
            )
        return Fraction(self.expression(n))


@dataclass(frozen=True)
class DiscrepancyRow:
    family: Family
    index: RIndex
    n: int
    source: Source
    claimed: Fraction
    computed: int

    @property
    def match(self):
        return self.claimed == self.computed


@dataclass(frozen=True)
class DiscrepancyReport:
    rows: tuple

    def mismatches(self):
        return [row for row in self.rows if not row.match]

    def corrected_all_match(self):
        return all(
            row.match for row in self.rows if row.source is Source.CORRECTED
        )


_PATH_SMALL = {
    3: {RIndex.R1: 41, RIndex.R2: 24, RIndex.R3: 14},
    4: {RIndex.R1: 82, RIndex.R2: 65, RIndex.R3: 28},
}


def _path_corrected(index):
    slope = {RIndex.R1: 64, RIndex.R2: 64, RIndex.R3: 16}[index]
    offset = {RIndex.R1: -174, RIndex.R2: -200, RIndex.R3: -36}[index]

    def expr(n):
        if n in _PATH_SMALL:
            return _PATH_SMALL[n][index]
        return slope * n + offset

    return expr


VARIANTS = [
    # Complete graphs: statement and proof agree; both correct.
    ClosedFormVariant(
        Family.COMPLETE, RIndex.R1, Source.PAPER_STATEMENT,
        lambda n: n * ((n - 1) ** 2 * ((n - 1) ** (n - 3) + 1)) ** 2,
    ),
    ClosedFormVariant(
        Family.COMPLETE, RIndex.R2, Source.PAPER_STATEMENT,
        lambda n: Fraction(n, 2) * (n - 1) ** 5 * ((n - 1) ** (n - 3) + 1) ** 2,
    ),
    ClosedFormVariant(
        Family.COMPLETE, RIndex.R3, Source.PAPER_STATEMENT,
        lambda n: n * (n - 1) ** 3 * ((n - 1) ** (n - 3) + 1),
    ),
    # Cycles: statement and proof agree; both correct.
    ClosedFormVariant(Family.CYCLE, RIndex.R1, Source.PAPER_STATEMENT,
                      lambda n: 64 * n),
    ClosedFormVariant(Family.CYCLE, RIndex.R2, Source.PAPER_STATEMENT,
                      lambda n: 64 * n),
    ClosedFormVariant(Family.CYCLE, RIndex.R3, Source.PAPER_STATEMENT,
                      lambda n: 16 * n),
    # Paths: statement and proof disagree with each other and with the
    # definitions; the corrected forms are registered alongside both.
    ClosedFormVariant(Family.PATH, RIndex.R1, Source.PAPER_STATEMENT,
                      lambda n: n + Fraction(5, 2)),
    ClosedFormVariant(Family.PATH, RIndex.R2, Source.PAPER_STATEMENT,
                      lambda n: n + 1),
    ClosedFormVariant(Family.PATH, RIndex.R3, Source.PAPER_STATEMENT,
                      lambda n: 2 * n - Fraction(10, 3)),
    ClosedFormVariant(Family.PATH, RIndex.R1, Source.PAPER_PROOF,
                      lambda n: 64 * n - 78),
    ClosedFormVariant(Family.PATH, RIndex.R2, Source.PAPER_PROOF,
                      lambda n: 64 * n - 112),
    ClosedFormVariant(Family.PATH, RIndex.R3, Source.PAPER_PROOF,
                      lambda n: 16 * n - 22),
    ClosedFormVariant(Family.PATH, RIndex.R1, Source.CORRECTED,
                      _path_corrected(RIndex.R1)),
    ClosedFormVariant(Family.PATH, RIndex.R2, Source.CORRECTED,
                      _path_corrected(RIndex.R2)),
    ClosedFormVariant(Family.PATH, RIndex.R3, Source.CORRECTED,
                      _path_corrected(RIndex.R3)),
    # Stars: the second and third index claims are correct; the first
    # counts only the central vertex, so a corrected form is added.
    ClosedFormVariant(Family.STAR, RIndex.R1, Source.PAPER_STATEMENT,
                      lambda n: n ** 2),
    ClosedFormVariant(Family.STAR, RIndex.R2, Source.PAPER_STATEMENT,
                      lambda n: 2 * n * (n - 1) ** 2),
    ClosedFormVariant(Family.STAR, RIndex.R3, Source.PAPER_STATEMENT,
                      lambda n: (n - 1) * (3 * n - 2)),
    ClosedFormVariant(Family.STAR, RIndex.R1, Source.CORRECTED,
                      lambda n: n ** 2 + 4 * (n - 1) ** 3),
]


def variants_for(family):
    family = Family(family)
    return [v for v in VARIANTS if v.family is family]


def closed_form(variant, n):
    """Exact rational value of one closed-form claim at order n."""
    return variant.evaluate(n)


def verify_family(family, n_range):
    """Compare every recorded claim for a family against direct computation.

    n_range is an iterable of orders. Each (index, n) pair uses a single
    directly computed value shared by all sources; rows below a variant's
    validity minimum are skipped. Rows are sorted by (index, n, source).
    """
    family = Family(family)
    variants = variants_for(family)
    orders = sorted(set(n_range))
    computed_cache = {}
    rows = []
    for n in orders:
        for variant in variants:
            if n < variant.min_n:
                continue
            key = (variant.index, n)
            if key not in computed_cache:
                g = generate_family(family, n)
                computed_cache[key] = _INDEX_FN[variant.index](g)
            rows.append(DiscrepancyRow(
                family=family,
                index=variant.index,
                n=n,
                source=variant.source,
                claimed=variant.evaluate(n),
                computed=computed_cache[key],
            ))
    source_order = [Source.PAPER_STATEMENT, Source.PAPER_PROOF,
                    Source.CORRECTED]
    rows.sort(key=lambda r: (r.index.value, r.n, source_order.index(r.source)))
    return DiscrepancyReport(rows=tuple(rows))


def format_rational(q):
    """Exact decimal string for integers, 'p/q' for proper rationals."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


VERIFY_CSV_HEADER = "family,index,n,source,claimed,computed,verdict"


def report_to_csv(report):
    """Render a DiscrepancyReport as CSV text."""
    out = io.StringIO()
    out.write(VERIFY_CSV_HEADER + "\n")
    for row in report.rows:
        verdict = "Match" if row.match else "Mismatch"
        out.write(
            f"{row.family.value},{row.index.value},{row.n},"
            f"{row.source.value},{format_rational(row.claimed)},"
            f"{row.computed},{verdict}\n"
        )
    return out.getvalue()


def report_summary(report):
    """Per-source match/mismatch counts as a small text table."""
    counts = {}
    for row in report.rows:
        key = (row.family.value, row.source.value)
        ok, bad = counts.get(key, (0, 0))
        if row.match:
            counts[key] = (ok + 1, bad)
        else:
            counts[key] = (ok, bad + 1)
    lines = [f"{'family':<10} {'source':<10} {'match':>7} {'mismatch':>9}"]
    for (family, source), (ok, bad) in sorted(counts.items()):
        lines.append(f"{family:<10} {source:<10} {ok:>7} {bad:>9}")
    return "\n".join(lines) + "\n"
