"""Symbolic classification of all 4140 tensor-square fusion partitions.

For each partition of {2,...,9} this module decides, with exact symbolic
arithmetic over the parameters (k, l, r, s), whether the fusion it names

  * holds for every rank-3 table algebra (GUARANTEED),
  * holds exactly on catalogued parameter families (FAMILY), or
  * cannot hold for any primitive table and is not an imprimitive-family
    fusion (INFEASIBLE, with a machine-checkable certificate).

Method.  Column-sum the fully symbolic 9x9 table along the partition and
compare rows pairwise.  Pairs whose difference contains a polynomial that
the nonvanishing sieve certifies (a scaled product of strictly-signed
factors) can never merge on the primitive region; the valency row can never
merge with any other row because its entries dominate termwise.  The
surviving "potential equality" graph limits which merge patterns could
produce the required number of distinct rows.  Every admissible merge
pattern yields a polynomial system; the system is decomposed by exact
branching (factor splits, linear-pivot elimination with certified
denominators, pseudo-remainders) into leaves that either

  * contradict the primitive region (a sieve-certified nonzero polynomial
    is forced to vanish, or forced parameter signs conflict), or
  * land on a solution variety, which must be identified with a catalogued
    family.

The two imprimitive families are handled separately by fusing the fully
symbolic union-of-cliques table (parameters r, m) and its partner, exactly
as the rank-3 case analysis reduces to.

The catalogue contains the published special-case families plus one
further pair found and matrix-verified during this work: the
pseudo-Latin-square parameters (k, l, s) = (r(2r-1), (r+1)(2r-1), -r) and
their partner under the eigenvalue switch also admit the rank-3 fusions
2468|3579 / 2459|3678.  rook(4) and the Latin-square graph of order 36
realize its first two members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import (
    K,
    L,
    M,
    MultiPoly,
    NonzeroCertificate,
    ONE,
    R,
    S,
    SieveSet,
    default_sieve_set,
    quad,
)
from .fusion import bm_check, scan_all
from .partitions import SetPartition, all_default_partitions, coarsenings
from .products import tensor_square_table, wreath_partition
from .scheme import CharTable

# row orthogonality of the two nontrivial base rows; available to every
# equation system as a side relation
ORTHOGONALITY = (L * (K + R * S) + K * (ONE + R + S + R * S)).normalized()

# strictly positive on the primitive region; used for sign contradictions
PRIMITIVE_POSITIVE = (
    ("k", K),
    ("l", L),
    ("r", R),
    ("k-r", K - R),
    ("-1-s", -(ONE + S)),
    ("l+1+s", L + 1 + S),
    ("k+rs", K + R * S),
    ("k-1", K - 1),
    ("l-1", L - 1),
    ("r-s", R - S),
    ("k-s", K - S),
)


# ---------------------------------------------------------------------------
# symbolic tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def symbolic_base_table() -> CharTable:
    """Generic rank-3 character table over the symbols k, l, r, s."""
    return CharTable(
        ("chi_0", "chi_1", "chi_2"),
        ("A0", "A1", "A2"),
        (
            (ONE, K, L),
            (ONE, R, -1 - R),
            (ONE, S, -1 - S),
        ),
        (1, 1, 1),
    )


@lru_cache(maxsize=None)
def symbolic_tensor_table() -> CharTable:
    """Fully symbolic 9x9 tensor-square table (Kronecker entry rule)."""
    return tensor_square_table(symbolic_base_table())


@lru_cache(maxsize=None)
def imprimitive_base_table(kind: int) -> CharTable:
    """Symbolic table of the imprimitive families, parameters (r, m).

    kind 1: union of m+1 complete graphs on r+1 vertices (k = r, s = -1).
    kind 2: the partner with the two graph roles exchanged (r = 0,
    l = -1-s), written in the same (r, m) parameters.
    """
    if kind == 1:
        rows = (
            (ONE, R, M * (1 + R)),
            (ONE, R, -1 - R),
            (ONE, MultiPoly.const(-1), MultiPoly()),
        )
    elif kind == 2:
        rows = (
            (ONE, M * (1 + R), R),
            (ONE, MultiPoly(), MultiPoly.const(-1)),
            (ONE, -1 - R, R),
        )
    else:
        raise ValueError("kind must be 1 or 2")
    return CharTable(("chi_0", "chi_1", "chi_2"), ("A0", "A1", "A2"), rows, (1, 1, 1))


@lru_cache(maxsize=None)
def _imprimitive_positive_strings(kind: int) -> frozenset[str]:
    table = tensor_square_table(imprimitive_base_table(kind))
    return frozenset(str(v.partition) for v in scan_all(table))


@lru_cache(maxsize=None)
def guaranteed_partition_strings() -> frozenset[str]:
    """The 13 nontrivial partitions fusing for every rank-3 table algebra."""
    return frozenset(str(v.partition) for v in scan_all(symbolic_tensor_table()))


# ---------------------------------------------------------------------------
# family catalogue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A parameter family admitting special-case fusions.

    ``substitution`` maps every one of k, l, r, s to a polynomial in the
    family's free symbols; it satisfies the row-orthogonality relation
    identically.  ``defining`` generates the family's ideal inside
    Q[k, l, r, s].  A family whose primitive members form a finite set
    lists them in ``point_instances`` and is matched by evaluation there
    instead of by polynomial identity.
    """

    id: str
    description: str
    substitution: tuple[tuple[str, MultiPoly], ...]
    defining: tuple[MultiPoly, ...]
    free_symbols: tuple[str, ...]
    source_partitions: tuple[str, ...] = ()
    point_instances: tuple[tuple[tuple[str, Fraction], ...], ...] = ()
    sample_instances: tuple = ()  # exact (k, l, r, s) tuples for spot checks

    def substitution_map(self) -> dict[str, MultiPoly]:
        return dict(self.substitution)

    def points(self) -> list[dict[str, Fraction]]:
        return [dict(pt) for pt in self.point_instances]


def _sub(**kw) -> tuple[tuple[str, MultiPoly], ...]:
    base = {"k": K, "l": L, "r": R, "s": S, "m": M}
    base.update(kw)
    return tuple(sorted((name, poly) for name, poly in base.items()))


def _conf_sqrt13():
    r = quad(Fraction(-1, 2), Fraction(1, 2), 13)
    s = quad(Fraction(-1, 2), Fraction(-1, 2), 13)
    return (Fraction(6), Fraction(6), r, s)


@lru_cache(maxsize=None)
def family_catalog() -> tuple[FamilySpec, ...]:
    f = Fraction
    return (
        FamilySpec(
            "IMP1",
            "union of m+1 complete graphs: k = r, s = -1, l = m(1+r)",
            _sub(k=R, l=M * (1 + R), s=MultiPoly.const(-1)),
            (K - R, S + 1),
            ("r", "m"),
            sample_instances=((f(2), f(6), f(2), f(-1)), (f(3), f(4), f(3), f(-1)),
                              (f(2), f(9), f(2), f(-1))),
        ),
        FamilySpec(
            "IMP2",
            "complete multipartite: r = 0, l = -1-s, k = -m*s",
            _sub(k=-M * S, l=-1 - S, r=MultiPoly()),
            (R, L + 1 + S),
            ("s", "m"),
            sample_instances=((f(6), f(2), f(0), f(-3)), (f(4), f(3), f(0), f(-4)),
                              (f(9), f(2), f(0), f(-3))),
        ),
        FamilySpec(
            "CONF",
            "conference parameters: k = l = 2r(1+r), s = -1-r",
            _sub(k=2 * R + 2 * R * R, l=2 * R + 2 * R * R, s=-1 - R),
            (S + R + 1, K - 2 * R - 2 * R * R, L - 2 * R - 2 * R * R),
            ("r",),
            source_partitions=(
                "27|34|59|6|8", "23|47|59|68",
                "23|4579|68", "2359|47|68", "23|4678|59", "2347|59|68", "2368|47|59",
                "234678|59", "234579|68", "2359|4678", "2368|4579",
            ),
            sample_instances=((f(4), f(4), f(1), f(-2)), (f(12), f(12), f(2), f(-3)),
                              _conf_sqrt13()),
        ),
        FamilySpec(
            "NEWS1",
            "rook-graph complements: k = s^2, l = -2s, r = 1",
            _sub(k=S * S, l=-2 * S, r=ONE),
            (R - 1, K - S * S, L + 2 * S),
            ("s",),
            source_partitions=("249|37|5|68",),
            sample_instances=((f(4), f(4), f(1), f(-2)), (f(9), f(6), f(1), f(-3)),
                              (f(16), f(8), f(1), f(-4))),
        ),
        FamilySpec(
            "NEWS2",
            "rook graphs: k = 2(1+r), l = (1+r)^2, s = -2",
            _sub(k=2 + 2 * R, l=(1 + R) * (1 + R), s=MultiPoly.const(-2)),
            (S + 2, K - 2 - 2 * R, L - (1 + R) * (1 + R)),
            ("r",),
            source_partitions=("24|357|68|9",),
            sample_instances=((f(4), f(4), f(1), f(-2)), (f(6), f(9), f(2), f(-2)),
                              (f(8), f(16), f(3), f(-2))),
        ),
        FamilySpec(
            "CR4",
            "order-9 plane k = 3-s-r, l = 5+s+r; orthogonality pins r-s = 3, "
            "and the only primitive integral member is (4, 4, 1, -2)",
            _sub(k=3 - S - R, l=5 + S + R),
            (K - 3 + S + R, L - 5 - S - R),
            ("r", "s"),
            source_partitions=("249|37|5|68",),
            point_instances=(
                (("k", f(4)), ("l", f(4)), ("r", f(1)), ("s", f(-2))),
            ),
            sample_instances=((f(4), f(4), f(1), f(-2)),),
        ),
        FamilySpec(
            "CLB1",
            "k = r(3+r), l = 3+r, s = -2 (complement of the folded 5-cube at "
            "r = 2; the structure constant l-1+rs = 2-r caps the family at "
            "r <= 2)",
            _sub(k=R * (3 + R), l=3 + R, s=MultiPoly.const(-2)),
            (S + 2, K - R * (3 + R), L - 3 - R),
            ("r",),
            source_partitions=("249|35678",),
            sample_instances=((f(4), f(4), f(1), f(-2)), (f(10), f(5), f(2), f(-2)),
                              (f(27, 4), f(9, 2), f(3, 2), f(-2))),
        ),
        FamilySpec(
            "CLB1S",
            "switch partner of CLB1: k = 2-s, l = (s-2)(s+1), r = 1",
            _sub(k=2 - S, l=S * S - S - 2, r=ONE),
            (R - 1, K - 2 + S, L - S * S + S + 2),
            ("s",),
            source_partitions=("24689|357",),
            sample_instances=((f(4), f(4), f(1), f(-2)), (f(5), f(10), f(1), f(-3)),
                              (f(6), f(18), f(1), f(-4))),
        ),
        FamilySpec(
            "CLB2A",
            "negative-Latin-square type: k = r(2r+1), l = (r-1)(2r+1), s = -r "
            "(r >= 2; r = 2 is the complement of the folded 5-cube)",
            _sub(k=R * (2 * R + 1), l=(R - 1) * (2 * R + 1), s=-R),
            (S + R, K - R * (2 * R + 1), L - (R - 1) * (2 * R + 1)),
            ("r",),
            source_partitions=("2468|3579",),
            sample_instances=((f(10), f(5), f(2), f(-2)), (f(21), f(14), f(3), f(-3))),
        ),
        FamilySpec(
            "CLB2B",
            "switch partner of CLB2A: k = (s+2)(2s+1), l = (s+1)(2s+1), r = -2-s",
            _sub(k=(S + 2) * (2 * S + 1), l=(S + 1) * (2 * S + 1), r=-2 - S + MultiPoly()),
            (R + S + 2, K - (S + 2) * (2 * S + 1), L - (S + 1) * (2 * S + 1)),
            ("s",),
            source_partitions=("2459|3678",),
            sample_instances=((f(5), f(10), f(1), f(-3)), (f(14), f(21), f(2), f(-4))),
        ),
        FamilySpec(
            "PLS2A",
            "Latin-square type: k = r(2r-1), l = (r+1)(2r-1), s = -r (r >= 2; "
            "r = 2 is the 4x4 rook graph, r = 3 a Latin-square graph of order 36); "
            "matrix-verified addition to the published catalogue",
            _sub(k=R * (2 * R - 1), l=(R + 1) * (2 * R - 1), s=-R),
            (S + R, K - R * (2 * R - 1), L - (R + 1) * (2 * R - 1)),
            ("r",),
            source_partitions=("2468|3579",),
            sample_instances=((f(6), f(9), f(2), f(-2)), (f(15), f(20), f(3), f(-3))),
        ),
        FamilySpec(
            "PLS2B",
            "switch partner of PLS2A: k = s(2s+3), l = (s+1)(2s+3), r = -2-s",
            _sub(k=S * (2 * S + 3), l=(S + 1) * (2 * S + 3), r=-2 - S + MultiPoly()),
            (R + S + 2, K - S * (2 * S + 3), L - (S + 1) * (2 * S + 3)),
            ("s",),
            source_partitions=("2459|3678",),
            sample_instances=((f(9), f(6), f(1), f(-3)), (f(20), f(15), f(2), f(-4))),
        ),
        FamilySpec(
            "SP9",
            "six further sporadic fusions holding exactly at the single "
            "primitive table of order 9, (k, l, r, s) = (4, 4, 1, -2); "
            "matrix-verified on the 3x3 rook graph",
            _sub(k=MultiPoly.const(4), l=MultiPoly.const(4),
                 r=ONE, s=MultiPoly.const(-2)),
            (K - 4, L - 4, R - 1, S + 2),
            (),
            source_partitions=("249|357|68", "25679|348", "267|34589",
                               "267|348|59", "267|34|59|8", "27|348|59|6"),
            point_instances=(
                (("k", f(4)), ("l", f(4)), ("r", f(1)), ("s", f(-2))),
            ),
            sample_instances=((f(4), f(4), f(1), f(-2)),),
        ),
        FamilySpec(
            "SP5",
            "two sporadic fusions holding exactly at the pentagon table, "
            "k = l = 2 with golden-ratio eigenvalues",
            _sub(k=MultiPoly.const(2), l=MultiPoly.const(2)),
            (K - 2, L - 2, S + R + 1, R * R + R - 1),
            (),
            source_partitions=("26|38|49|57", "29|35|48|67"),
            point_instances=(
                (("k", f(2)), ("l", f(2)),
                 ("r", quad(f(-1, 2), f(1, 2), 5)),
                 ("s", quad(f(-1, 2), f(-1, 2), 5))),
            ),
            sample_instances=(
                (f(2), f(2), quad(f(-1, 2), f(1, 2), 5), quad(f(-1, 2), f(-1, 2), 5)),
            ),
        ),
    )


def family_by_id(fid: str) -> FamilySpec:
    for fam in family_catalog():
        if fam.id == fid:
            return fam
    raise KeyError(fid)


@lru_cache(maxsize=None)
def _family_image_zero(fid: str, poly: MultiPoly) -> bool:
    fam = family_by_id(fid)
    if fam.point_instances:
        return all(poly.evaluate(pt) == 0 for pt in fam.points())
    return poly.substitute(fam.substitution_map()).is_zero()


def family_match(
    equations: Sequence[MultiPoly],
    distinctness: Sequence[Sequence[MultiPoly]],
    fam: FamilySpec,
) -> tuple[bool, dict]:
    """Does the family satisfy the equations while keeping rows distinct?

    Parametric families are matched by polynomial identity under their
    substitution (equivalent to vanishing at every member, the admissible
    parameter set being infinite).  Point families are matched by exact
    evaluation at each primitive member.  Distinctness requires, for every
    pair of merged row classes, at least one difference that does not
    vanish identically (resp. at each point).
    """
    for e in equations:
        if not _family_image_zero(fam.id, e):
            return False, {"failed": e}
    for diffs in distinctness:
        if all(_family_image_zero(fam.id, d) for d in diffs):
            return False, {"collapsed_pair": diffs}
    return True, {"family": fam.id}


# ---------------------------------------------------------------------------
# potential-equality graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairStatus:
    rows: tuple[int, int]
    equations: tuple[MultiPoly, ...]
    blocked: bool
    reason: str  # "" | "sieve" | "valency"
    certificate: object


@dataclass(frozen=True)
class EqualityGraph:
    partition: SetPartition
    classes: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[tuple[int, int], PairStatus], ...]

    def pair(self, a: int, b: int) -> PairStatus:
        key = (min(a, b), max(a, b))
        for k, v in self.pairs:
            if k == key:
                return v
        raise KeyError(key)


@lru_cache(maxsize=None)
def _pair_block_diff(a: int, b: int, block: tuple[int, ...]) -> MultiPoly:
    """Difference of rows a, b of the symbolic table summed over a block.

    ``block`` holds column indices 1..9 (single-index labels); caching keys
    on (rows, block) because the same sums recur across thousands of
    partitions.
    """
    table = symbolic_tensor_table()
    ra, rb = table.rows[a], table.rows[b]
    total = MultiPoly()
    for c in block:
        total = total + (ra[c - 1] - rb[c - 1])
    return total


# valency-domination blockers: merging chi_00 with chi_ij would force the
# termwise equality chi_i(A_a) chi_j(A_b) = chi_0(A_a) chi_0(A_b) in every
# column, since the valency row dominates termwise; column A_10 or A_01
# then requires k = r or k = s, both sieve-nonzero.
_DOMINATION_POLY = {1: K - R, 2: K - S}


def _valency_block_poly(other_row: int) -> MultiPoly:
    i, j = divmod(other_row, 3)
    return _DOMINATION_POLY[i if i else j]


def potential_equality_graph(
    p: SetPartition, sieve: SieveSet | None = None
) -> EqualityGraph:
    """Which rows of the column-summed symbolic table could ever coincide.

    Rows are first grouped into classes of identically-equal polynomials.
    A pair of classes is blocked when some block difference carries a
    sieve certificate, or when one class is the valency row; otherwise the
    pair carries its residual equation system.
    """
    sieve = sieve or default_sieve_set()
    blocks = tuple(tuple(block) for block in p.blocks)
    # group rows into classes of identically-equal summed rows
    classes: list[list[int]] = []
    for a in range(9):
        placed = False
        for cls in classes:
            rep = cls[0]
            if all(
                _pair_block_diff(min(rep, a), max(rep, a), blk).is_zero()
                for blk in blocks
            ):
                cls.append(a)
                placed = True
                break
        if not placed:
            classes.append([a])
    class_tuples = tuple(tuple(cls) for cls in classes)

    pairs = []
    for ci, cj in itertools.combinations(range(len(class_tuples)), 2):
        a, b = class_tuples[ci][0], class_tuples[cj][0]
        a, b = min(a, b), max(a, b)
        if a == 0:
            poly = _valency_block_poly(b)
            cert = sieve.certify(poly)
            pairs.append((
                (ci, cj),
                PairStatus((a, b), (), True, "valency", (poly, cert)),
            ))
            continue
        eqs = []
        blocked = None
        for bi, blk in enumerate(blocks):
            diff = _pair_block_diff(a, b, blk)
            if diff.is_zero():
                continue
            norm = diff.normalized()
            cert = sieve.certify(norm)
            if cert is not None:
                blocked = (bi, norm, cert)
                break
            eqs.append(norm)
        if blocked is not None:
            pairs.append((
                (ci, cj),
                PairStatus((a, b), (), True, "sieve", blocked),
            ))
        else:
            pairs.append((
                (ci, cj),
                PairStatus((a, b), tuple(dict.fromkeys(eqs)), False, "", None),
            ))
    return EqualityGraph(p, class_tuples, tuple(pairs))


# ---------------------------------------------------------------------------
# polynomial system decomposition
# ---------------------------------------------------------------------------

# polynomials worth splitting on beyond the sieve: family-defining factors
# and small recurring combinations
@lru_cache(maxsize=None)
def _factor_basis() -> tuple[MultiPoly, ...]:
    polys = []
    for fam in family_catalog():
        polys.extend(fam.defining)
    extra = [
        R - 1, S + 2, S + R, R + S + 1, R + S + 2, R + S + 3, R + S + 4,
        K - L, L - R, K - R * R, L + S,
        K + S, L - 1 - R, K + 1 + S,
    ]
    polys.extend(extra)
    out = []
    seen = set()
    for p in polys:
        n = p.normalized()
        if not n.is_constant() and n not in seen:
            seen.add(n)
            out.append(n)
    return tuple(out)


def _poly_sqrt(p: MultiPoly) -> MultiPoly | None:
    """Exact square root of a polynomial, or None."""
    if p.is_zero():
        return MultiPoly()
    exps, coeff = p.leading()
    if any(e % 2 for e in exps) or coeff < 0:
        return None
    num = _frac_sqrt(coeff)
    if num is None:
        return None
    root = MultiPoly({tuple(e // 2 for e in exps): num})
    rem = p - root * root
    guard = 0
    while not rem.is_zero():
        guard += 1
        if guard > 64:
            return None
        rexps, rcoeff = rem.leading()
        den = root.leading()
        t_exps = tuple(a - b for a, b in zip(rexps, den[0]))
        if any(e < 0 for e in t_exps):
            return None
        term = MultiPoly({t_exps: rcoeff / (2 * den[1])})
        root = root + term
        rem = p - root * root
    return root


def _frac_sqrt(q: Fraction) -> Fraction | None:
    import math

    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _rational_roots(p: MultiPoly, var: str) -> list[Fraction]:
    """Rational roots of a univariate polynomial in ``var``."""
    deg = p.degree(var)
    coeffs: dict[int, Fraction] = {}
    from .exact import _SYM_INDEX

    vi = _SYM_INDEX[var]
    for exps, c in p.terms:
        if any(e and i != vi for i, e in enumerate(exps)):
            return []
        coeffs[exps[vi]] = c
    lead = coeffs.get(deg, Fraction(0))
    const = coeffs.get(0, Fraction(0))
    if const == 0:
        return [Fraction(0)] + _rational_roots(
            p.divide_exact(MultiPoly.var(var)), var
        )

    def divisors(n: int):
        n = abs(n)
        out = [d for d in range(1, n + 1) if n % d == 0]
        return out

    roots = []
    cn = const.numerator * lead.denominator
    ln = lead.numerator * const.denominator
    for a in divisors(cn or 1):
        for b in divisors(ln or 1):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                full = {sym: Fraction(0) for sym in ("k", "l", "r", "s", "m")}
                full[var] = cand
                if p.evaluate(full) == 0 and cand not in roots:
                    roots.append(cand)
    return roots


_SPLIT_CACHE: dict[MultiPoly, tuple[tuple[MultiPoly, ...], bool]] = {}


def _split_poly(p: MultiPoly, sieve: SieveSet) -> tuple[list[MultiPoly], bool]:
    """Factor p over the sieve and factor basis.

    Returns (non_sieve_factors, had_sieve_factor).  Sieve factors are
    dropped (they cannot vanish); an empty factor list with
    had_sieve_factor means p itself is sieve-certified nonzero.
    """
    cached = _SPLIT_CACHE.get(p)
    if cached is not None:
        return list(cached[0]), cached[1]
    factors, dropped = _split_poly_uncached(p, sieve)
    _SPLIT_CACHE[p] = (tuple(factors), dropped)
    return factors, dropped


def _split_poly_uncached(p: MultiPoly, sieve: SieveSet) -> tuple[list[MultiPoly], bool]:
    rem = p.normalized()
    dropped = False
    factors: list[MultiPoly] = []
    progress = True
    while progress and not rem.is_constant():
        progress = False
        for mem in sieve.members:
            if mem.poly.is_constant():
                continue
            q = rem.divide_exact(mem.poly)
            if q is not None:
                rem = q
                dropped = True
                progress = True
                break
        else:
            for cand in _factor_basis():
                if cand == rem.normalized():
                    continue
                q = rem.divide_exact(cand)
                if q is not None:
                    factors.append(cand)
                    rem = q
                    progress = True
                    break
    if not rem.is_constant():
        syms = rem.symbols()
        if len(syms) == 1:
            var = next(iter(syms))
            for root in _rational_roots(rem, var):
                lin = (MultiPoly.var(var) - root).normalized()
                while True:
                    q = rem.divide_exact(lin)
                    if q is None:
                        break
                    factors.append(lin)
                    rem = q
        if not rem.is_constant():
            # quadratic-in-one-variable split via a polynomial discriminant
            for var in sorted(rem.symbols()):
                if rem.degree(var) == 2:
                    a = _coeff_of(rem, var, 2)
                    b = _coeff_of(rem, var, 1)
                    c = _coeff_of(rem, var, 0)
                    disc = b * b - 4 * a * c
                    root = _poly_sqrt(disc)
                    if root is not None and a.is_constant():
                        x = MultiPoly.var(var)
                        f1 = (2 * a * x + b - root).normalized()
                        f2 = (2 * a * x + b + root).normalized()
                        factors.extend([f1, f2])
                        rem = MultiPoly.const(1)
                        break
    if not rem.is_constant():
        factors.append(rem.normalized())
    return [f for f in factors if not f.is_constant()], dropped


def _coeff_of(p: MultiPoly, var: str, power: int) -> MultiPoly:
    from .exact import _SYM_INDEX

    vi = _SYM_INDEX[var]
    out = {}
    for exps, c in p.terms:
        if exps[vi] == power:
            e = list(exps)
            e[vi] = 0
            out[tuple(e)] = c
    return MultiPoly(out)


def _linear_parts(p: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly] | None:
    """Write p = A + B*var when p is linear in var; returns (A, B)."""
    if p.degree(var) != 1:
        return None
    return _coeff_of(p, var, 0), _coeff_of(p, var, 1)


@dataclass(frozen=True)
class SubstitutionRecord:
    """One elimination step: var = -num/den on the branch where den != 0."""

    var: str
    num: MultiPoly
    den: MultiPoly
    den_certificate: NonzeroCertificate | None


@dataclass(frozen=True)
class BoundConflict:
    """Two forced-positive quantities whose leaf images are proportional
    with a negative ratio, or one with a nonpositive constant/certified
    image, or an empty one-variable interval."""

    kind: str  # "certified-sign" | "proportional" | "interval" | "constant"
    data: tuple


@dataclass(frozen=True)
class ProofLeaf:
    substitutions: tuple[SubstitutionRecord, ...]
    assumptions: tuple[MultiPoly, ...]  # branch factors assumed zero
    # contradiction-unit | contradiction-bounds | family | sporadic | unresolved
    outcome: str
    unit_poly: MultiPoly | None = None
    unit_certificate: NonzeroCertificate | None = None
    bound_conflict: BoundConflict | None = None
    families: tuple[str, ...] = ()
    residual: tuple[MultiPoly, ...] = ()
    points: tuple[tuple[tuple[str, object], ...], ...] = ()  # exact sporadic points


def _apply_substitutions(
    p: MultiPoly, subs: Sequence[SubstitutionRecord]
) -> MultiPoly:
    """Denominator-cleared image of p under the substitution chain."""
    return _apply_substitutions_signed(p, subs, None)[0]


def _leaf_point(
    subs: Sequence[SubstitutionRecord], seed: dict | None = None
) -> dict | None:
    """Exact parameter values pinned by a substitution chain.

    Later substitutions express their variable in terms of the still-free
    symbols, so evaluating the chain backwards resolves every pinned
    variable; ``seed`` supplies values for symbols left free (e.g. the
    exact root of a residual).  Returns None when something stays free or a
    denominator vanishes.
    """
    point: dict[str, object] = dict(seed or {})
    try:
        for rec in reversed(subs):
            num = rec.num.evaluate(point)
            den = rec.den.evaluate(point)
            if den == 0:
                return None
            point[rec.var] = -num / den
    except Exception:
        return None
    if not {"k", "l", "r", "s"} <= set(point):
        return None
    return point


def _point_feasible(point: dict) -> bool:
    """Strict primitive bounds at an exact parameter point."""
    for _, poly in PRIMITIVE_POSITIVE:
        value = poly.evaluate(point)
        sign = value.sign() if hasattr(value, "sign") else (value > 0) - (value < 0)
        if sign <= 0:
            return False
    return True


def _freeze_point(point: dict) -> tuple[tuple[str, object], ...]:
    return tuple(sorted((k, v) for k, v in point.items() if k in ("k", "l", "r", "s")))


def _apply_substitutions_signed(
    p: MultiPoly, subs: Sequence[SubstitutionRecord], sieve: SieveSet | None
) -> tuple[MultiPoly, int | None]:
    """Image of p with the sign relation between p and its image.

    Clearing the denominator of var = -num/den multiplies by den**d; when d
    is odd the sign of the image differs from the sign of p by the sign of
    den.  The second component is +1/-1 when that cumulative sign is known
    (constant or sieve-certified denominators), else None.  Zero-tests of
    the image are valid regardless.
    """
    out = p
    sign: int | None = 1
    for rec in subs:
        d = out.degree(rec.var)
        if d <= 0:
            continue
        acc = MultiPoly()
        for power in range(d + 1):
            coeff = _coeff_of(out, rec.var, power)
            acc = acc + coeff * ((-rec.num) ** power) * (rec.den ** (d - power))
        out = acc
        if d % 2 and sign is not None:
            if rec.den.is_constant():
                c = rec.den.constant_value()
                sign *= 1 if c > 0 else -1
            elif rec.den_certificate is not None and sieve is not None:
                sign *= rec.den_certificate.region_sign(sieve)
            else:
                sign = None
    return out, sign


def _substitute_into(
    polys: Sequence[MultiPoly], rec: SubstitutionRecord
) -> list[MultiPoly]:
    out = []
    for p in polys:
        q = _apply_substitutions(p, [rec]).normalized()
        if not q.is_zero():
            out.append(q)
    return list(dict.fromkeys(out))


_ELIM_ORDER = ("l", "k", "m", "s", "r")


def _univariate_coeffs(p: MultiPoly, var: str) -> list[Fraction] | None:
    """Coefficient list (ascending) when p involves only ``var``."""
    if p.symbols() != {var}:
        return None
    from .exact import _SYM_INDEX

    vi = _SYM_INDEX[var]
    out = [Fraction(0)] * (p.degree(var) + 1)
    for exps, c in p.terms:
        out[exps[vi]] = c
    return out


def _coeffs_to_poly(coeffs: Sequence[Fraction], var: str) -> MultiPoly:
    x = MultiPoly.var(var)
    out = MultiPoly()
    for power, c in enumerate(coeffs):
        if c:
            out = out + MultiPoly.const(c) * x ** power
    return out


def _poly_gcd_1var(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def deg(c):
        d = len(c) - 1
        while d >= 0 and c[d] == 0:
            d -= 1
        return d

    def rem(f, g):
        f = f[:]
        dg = deg(g)
        while deg(f) >= dg >= 0:
            df = deg(f)
            factor = f[df] / g[dg]
            for i in range(dg + 1):
                f[df - dg + i] -= factor * g[i]
            f = f[: df] + [Fraction(0)] * 0
            while f and f[-1] == 0:
                f.pop()
            if not f:
                return []
        return f

    while deg(b) >= 0:
        a, b = b, rem(a, b)
    d = deg(a)
    if d < 0:
        return []
    lead = a[d]
    return [c / lead for c in a[: d + 1]]


def _orthant_sign(q: MultiPoly) -> int | None:
    """Sign of q on the whole parameter region, by coefficient inspection.

    All of k, l, r, m are positive on the region and s is negative; after
    reorienting s every variable ranges over positives, so a nonzero
    polynomial whose coefficients all share one sign cannot vanish there.
    """
    if q.is_zero():
        return None
    from .exact import _SYM_INDEX

    si = _SYM_INDEX["s"]
    signs = set()
    for exps, c in q.terms:
        signs.add((1 if c > 0 else -1) * (-1 if exps[si] % 2 else 1))
        if len(signs) > 1:
            return None
    return signs.pop()


_ROOTLESS_CACHE: dict[MultiPoly, bool] = {}


def _rootless_on_region(e: MultiPoly) -> bool:
    """True when a univariate equation has no root on its region interval."""
    if len(e.symbols()) != 1:
        return False
    hit = _ROOTLESS_CACHE.get(e)
    if hit is None:
        var = next(iter(e.symbols()))
        coeffs = _univariate_coeffs(e, var)
        lo, hi = _REGION_INTERVAL[var]
        hit = bool(coeffs) and _count_roots_open(coeffs, lo, hi) == 0
        _ROOTLESS_CACHE[e] = hit
    return hit


def _region_definite(q: MultiPoly) -> tuple[str, str] | None:
    """Witness that a polynomial cannot vanish on the parameter region."""
    o = _orthant_sign(q)
    if o is not None:
        return ("*", "orthant")
    syms = q.symbols()
    if len(syms) != 1:
        return None
    var = next(iter(syms))
    coeffs = _univariate_coeffs(q, var)
    if coeffs and len(coeffs) == 3:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        if b * b - 4 * a * c < 0:
            return (var, "negative-discriminant")
    return None


# ---------------------------------------------------------------------------
# exact univariate real-root analysis (Sturm sequences)
# ---------------------------------------------------------------------------

# open region interval per symbol; None means unbounded
_REGION_INTERVAL: dict[str, tuple[Fraction | None, Fraction | None]] = {
    "k": (Fraction(1), None),
    "l": (Fraction(1), None),
    "r": (Fraction(0), None),
    "s": (None, Fraction(-1)),
    "m": (Fraction(0), None),
}


def _sturm_chain(coeffs: list[Fraction]) -> list[list[Fraction]]:
    def deg(c):
        return len(c) - 1

    def trim(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return c

    def neg_rem(f, g):
        f = list(f)
        while True:
            f = trim(f)
            if len(f) < len(g):
                break
            factor = f[-1] / g[-1]
            shift = len(f) - len(g)
            for i in range(len(g)):
                f[shift + i] -= factor * g[i]
            f[-1] = Fraction(0)
        return [-c for c in f]

    def deriv(c):
        return [c[i] * i for i in range(1, len(c))]

    chain = [trim(coeffs)]
    d = deriv(chain[0])
    if trim(d):
        chain.append(trim(d))
        while deg(chain[-1]) > 0:
            r = neg_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(r)
    return chain


def _eval_coeffs(coeffs: list[Fraction], x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _sign_variations_at(chain, x: Fraction | None, at_pos_inf: bool = False) -> int:
    signs = []
    for coeffs in chain:
        if not coeffs:
            continue
        if x is None:
            lead = coeffs[-1]
            sgn = (1 if lead > 0 else -1)
            if not at_pos_inf and (len(coeffs) - 1) % 2:
                sgn = -sgn
        else:
            v = _eval_coeffs(coeffs, x)
            sgn = (v > 0) - (v < 0)
        if sgn:
            signs.append(sgn)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots_open(coeffs: list[Fraction], lo, hi) -> int:
    """Number of distinct real roots in the open interval (lo, hi)."""
    # squarefree part via gcd with the derivative keeps Sturm honest
    der = [coeffs[i] * i for i in range(1, len(coeffs))]
    g = _poly_gcd_1var(list(coeffs), der) if der else []
    if len(g) > 1:
        sf = _poly_div_exact_1var(list(coeffs), g)
    else:
        sf = list(coeffs)
    # deflate exact roots sitting on a finite endpoint so Sturm applies
    for endpoint in (lo, hi):
        if endpoint is not None:
            while len(sf) > 1 and _eval_coeffs(sf, endpoint) == 0:
                sf = _poly_div_exact_1var(sf, [-endpoint, Fraction(1)])
    if len(sf) <= 1:
        return 0
    chain = _sturm_chain(sf)
    va = (_sign_variations_at(chain, None, at_pos_inf=False)
          if lo is None else _sign_variations_at(chain, lo))
    vb = (_sign_variations_at(chain, None, at_pos_inf=True)
          if hi is None else _sign_variations_at(chain, hi))
    return va - vb


def _poly_div_exact_1var(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = list(f)
    out = [Fraction(0)] * (len(f) - len(g) + 1)
    while len(f) >= len(g) and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) < len(g):
            break
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        out[shift] = factor
        for i in range(len(g)):
            f[shift + i] -= factor * g[i]
        f.pop()
    return out


def _isolate_region_roots(
    coeffs: list[Fraction], var: str
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, one distinct root each, inside the region."""
    lo, hi = _REGION_INTERVAL[var]
    total = _count_roots_open(coeffs, lo, hi)
    if total == 0:
        return []
    # Cauchy bound limits the finite search window; (a, b) stays inside the
    # region and contains every region root
    lead = next(c for c in reversed(coeffs) if c != 0)
    bound = 1 + max(abs(c / lead) for c in coeffs)
    a = Fraction(lo) if lo is not None else -bound - 1
    b = Fraction(hi) if hi is not None else bound + 1
    out: list[tuple[Fraction, Fraction]] = []

    def rec(x: Fraction, y: Fraction):
        n = _count_roots_open(coeffs, x, y)
        if n == 0:
            return
        if n == 1:
            out.append((x, y))
            return
        mid = (x + y) / 2
        while _eval_coeffs(coeffs, mid) == 0:
            mid = (x + mid) / 2
        rec(x, mid)
        rec(mid, y)

    rec(a, b)
    return out


def _refine_until_sign(
    res: list[Fraction], interval: tuple[Fraction, Fraction], poly: list[Fraction]
) -> int:
    """Exact sign of ``poly`` at the unique root of ``res`` in ``interval``."""
    x, y = interval
    for _ in range(512):
        if _count_roots_open(poly, x, y) == 0 and _eval_coeffs(poly, x) != 0 \
                and _eval_coeffs(poly, y) != 0:
            v = _eval_coeffs(poly, (x + y) / 2)
            if v == 0:
                v = _eval_coeffs(poly, x)
            return (v > 0) - (v < 0)
        mid = (x + y) / 2
        if _eval_coeffs(res, mid) == 0:
            # root hit exactly: evaluate there
            v = _eval_coeffs(poly, mid)
            return (v > 0) - (v < 0)
        if _count_roots_open(res, x, mid) == 1:
            y = mid
        else:
            x = mid
    raise RuntimeError("sign refinement did not converge")


def _quadratic_roots_exact(coeffs: list[Fraction]):
    """Exact roots of a degree <= 2 polynomial as Fractions/quadratics."""
    if len(coeffs) == 2:
        return [-coeffs[0] / coeffs[1]]
    if len(coeffs) == 3:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        root_sq = _frac_sqrt(disc)
        if root_sq is not None:
            return [(-b + root_sq) / (2 * a), (-b - root_sq) / (2 * a)]
        scaled = disc.numerator * disc.denominator  # d/(q^2) with d integral
        return [
            quad(-b / (2 * a), Fraction(sgn, 2 * disc.denominator) / a, scaled)
            for sgn in (1, -1)
        ]
    return None


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def _resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of f and g with respect to ``var``."""
    df, dg = f.degree(var), g.degree(var)
    if df < 1 or dg < 1:
        raise ValueError("resultant needs positive degrees")
    size = df + dg
    rows: list[list[MultiPoly]] = []
    fc = [_coeff_of(f, var, df - i) for i in range(df + 1)]
    gc = [_coeff_of(g, var, dg - i) for i in range(dg + 1)]
    for i in range(dg):
        rows.append([MultiPoly()] * i + fc + [MultiPoly()] * (size - df - 1 - i))
    for i in range(df):
        rows.append([MultiPoly()] * i + gc + [MultiPoly()] * (size - dg - 1 - i))
    return _determinant(rows)


def _determinant(rows: list[list[MultiPoly]]) -> MultiPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = MultiPoly()
    for i in range(n):
        pivot = rows[i][0]
        if pivot.is_zero():
            continue
        minor = [r[1:] for j, r in enumerate(rows) if j != i]
        term = pivot * _determinant(minor)
        out = out + term if i % 2 == 0 else out - term
    return out


def _univariate_gcd_reduce(system: list[MultiPoly]) -> list[MultiPoly] | None:
    """Replace univariate subsystems by their gcd; None when nothing changes."""
    by_var: dict[str, list[int]] = {}
    for idx, e in enumerate(system):
        syms = e.symbols()
        if len(syms) == 1:
            by_var.setdefault(next(iter(syms)), []).append(idx)
    changed = False
    out = list(system)
    drop: set[int] = set()
    for var, idxs in by_var.items():
        if len(idxs) < 2:
            continue
        coeffs = _univariate_coeffs(system[idxs[0]], var)
        for idx in idxs[1:]:
            coeffs = _poly_gcd_1var(coeffs, _univariate_coeffs(system[idx], var))
        g = (_coeffs_to_poly(coeffs, var) if coeffs else MultiPoly.const(1)).normalized()
        if g == MultiPoly():
            g = MultiPoly.const(1)
        if any(system[idx] != g for idx in idxs):
            changed = True
            drop.update(idxs[1:])
            out[idxs[0]] = g
    if not changed:
        return None
    return [e for idx, e in enumerate(out) if idx not in drop]


class _Decomposer:
    """Branch decomposition of an equation system over the primitive region."""

    def __init__(self, sieve: SieveSet, catalog: Sequence[FamilySpec]):
        self.sieve = sieve
        self.catalog = tuple(catalog)

    def decompose(self, eqs: Sequence[MultiPoly]) -> list[ProofLeaf]:
        system = [e.normalized() for e in eqs if not e.normalized().is_zero()]
        return self._run(list(dict.fromkeys(system)), (), (), 0)

    # -- helpers ------------------------------------------------------------

    def _run(
        self,
        system: list[MultiPoly],
        subs: tuple[SubstitutionRecord, ...],
        assumptions: tuple[MultiPoly, ...],
        depth: int,
    ) -> list[ProofLeaf]:
        # constants and sieve-certified members force a contradiction
        cleaned: list[MultiPoly] = []
        for e in system:
            e = e.normalized()
            if e.is_zero():
                continue
            if e.is_constant():
                return [ProofLeaf(
                    subs, assumptions, "contradiction-unit",
                    unit_poly=e,
                    unit_certificate=NonzeroCertificate(e.constant_value(), ()),
                )]
            cert = self.sieve.certify(e)
            if cert is not None:
                return [ProofLeaf(
                    subs, assumptions, "contradiction-unit",
                    unit_poly=e, unit_certificate=cert,
                )]
            definite = _region_definite(e)
            if definite is not None:
                return [ProofLeaf(
                    subs, assumptions, "contradiction-bounds",
                    bound_conflict=BoundConflict("definite", (e,) + definite),
                )]
            rootless = _rootless_on_region(e)
            if rootless:
                return [ProofLeaf(
                    subs, assumptions, "contradiction-bounds",
                    bound_conflict=BoundConflict(
                        "no-region-root", (e, next(iter(e.symbols())))
                    ),
                )]
            cleaned.append(e)
        system = list(dict.fromkeys(cleaned))

        if not system:
            return [self._close_leaf(subs, assumptions, ())]
        if depth > 40:
            return [self._close_leaf(subs, assumptions, tuple(system))]

        # branch-free linear elimination comes first: a pivot whose leading
        # coefficient is constant or sieve-certified collapses the system
        # without splitting
        pivot = self._pick_pivot(system, certified_only=True)
        if pivot is not None:
            idx, var, a_part, b_part, cert = pivot
            rest = system[:idx] + system[idx + 1:]
            rec = SubstitutionRecord(var, a_part, b_part, cert)
            return self._run(
                _substitute_into(rest, rec), subs + (rec,), assumptions, depth + 1
            )

        # factor splits: replace one equation by branches over its factors
        for idx, e in enumerate(system):
            factors, _ = _split_poly(e, self.sieve)
            if not factors:
                # all factors sieve-certified nonzero yet product must vanish
                cert = self.sieve.certify(e)
                if cert is None:
                    cert = NonzeroCertificate(Fraction(1), ())
                return [ProofLeaf(
                    subs, assumptions, "contradiction-unit",
                    unit_poly=e, unit_certificate=cert,
                )]
            if len(factors) > 1 or factors[0] != e:
                leaves = []
                rest = system[:idx] + system[idx + 1:]
                for fac in dict.fromkeys(factors):
                    leaves.extend(self._run(
                        list(dict.fromkeys(rest + [fac])),
                        subs, assumptions + (fac,), depth + 1,
                    ))
                return leaves

        # univariate subsystems collapse to their gcd
        reduced = _univariate_gcd_reduce(system)
        if reduced is not None:
            return self._run(reduced, subs, assumptions, depth + 1)

        # linear pivot with undecided denominator: branch on zero / nonzero
        pivot = self._pick_pivot(system, certified_only=False)
        if pivot is not None:
            idx, var, a_part, b_part, _ = pivot
            rest = system[:idx] + system[idx + 1:]
            b_norm = b_part.normalized()
            leaves = self._run(
                list(dict.fromkeys(rest + [b_norm, a_part.normalized()])),
                subs, assumptions + (b_norm,), depth + 1,
            )
            rec = SubstitutionRecord(var, a_part, b_part, None)
            leaves.extend(self._run(
                _substitute_into(rest, rec), subs + (rec,), assumptions, depth + 1
            ))
            return leaves

        # resultants eliminate a variable outright from nonlinear pairs
        new = self._resultant_consequence(system)
        if new is not None:
            return self._run(
                list(dict.fromkeys(system + [new])), subs, assumptions, depth + 1
            )
        # pseudo-remainder fallback
        if depth <= 32:
            new = self._pseudo_consequence(system)
            if new is not None:
                return self._run(
                    list(dict.fromkeys(system + [new])), subs, assumptions, depth + 1
                )
        return [self._close_leaf(subs, assumptions, tuple(system))]

    def _pick_pivot(self, system: list[MultiPoly], certified_only: bool):
        best = None
        for var in _ELIM_ORDER:
            for idx, e in enumerate(system):
                parts = _linear_parts(e, var)
                if parts is None:
                    continue
                a_part, b_part = parts
                b_norm = b_part.normalized()
                if b_norm.is_constant():
                    rank, cert = 0, None
                else:
                    cert = self.sieve.certify(b_norm)
                    rank = 1 if cert is not None else 2
                if certified_only and rank == 2:
                    continue
                score = (rank, len(e.terms))
                if best is None or score < best[0]:
                    best = (score, idx, var, a_part, b_part, cert)
            if best is not None and best[0][0] == 0:
                break
        if best is None:
            return None
        _, idx, var, a_part, b_part, cert = best
        return idx, var, a_part, b_part, cert

    def _resultant_consequence(self, system: list[MultiPoly]) -> MultiPoly | None:
        """A new, smaller-support consequence obtained as a resultant."""
        for (i, f), (j, g) in itertools.combinations(enumerate(system), 2):
            common = sorted(f.symbols() & g.symbols())
            for var in common:
                df, dg = f.degree(var), g.degree(var)
                if df < 1 or dg < 1 or df + dg > 8:
                    continue
                res = _resultant(f, g, var).normalized()
                if not res.is_zero() and res not in system:
                    target = (f.symbols() | g.symbols()) - {var}
                    if res.symbols() <= target:
                        return res
        return None

    def _pseudo_consequence(self, system: list[MultiPoly]) -> MultiPoly | None:
        for (i, f), (j, g) in itertools.combinations(enumerate(system), 2):
            common = f.symbols() & g.symbols()
            for var in sorted(common):
                df, dg = f.degree(var), g.degree(var)
                if df < 1 or dg < 1:
                    continue
                hi, lo = (f, g) if df >= dg else (g, f)
                dh, dl = max(df, dg), min(df, dg)
                lead_lo = _coeff_of(lo, var, dl)
                lead_hi = _coeff_of(hi, var, dh)
                # one pseudo-reduction step: lead_lo * hi - lead_hi * x^d * lo
                xshift = MultiPoly.var(var) ** (dh - dl)
                cand = (lead_lo * hi - lead_hi * xshift * lo).normalized()
                if not cand.is_zero() and cand not in system:
                    return cand
        return None

    def _close_leaf(
        self,
        subs: tuple[SubstitutionRecord, ...],
        assumptions: tuple[MultiPoly, ...],
        residual: tuple[MultiPoly, ...],
    ) -> ProofLeaf:
        # a leaf whose variety misses the primitive region entirely is dead,
        # whether or not it sits on some family's Zariski closure and
        # whatever residual equations remain (they only shrink the variety)
        conflict = self._bound_conflict(subs)
        if conflict is not None:
            return ProofLeaf(
                subs, assumptions, "contradiction-bounds",
                bound_conflict=conflict, residual=tuple(residual),
            )
        free: set[str] = set()
        for name in ("k", "l", "r", "s"):
            free |= _apply_substitutions(MultiPoly.var(name), subs).symbols()
        for e in residual:
            free |= e.symbols()

        if not free:
            # fully pinned: one candidate point, feasible or not
            point = _leaf_point(subs)
            if point is None or residual:
                return ProofLeaf(
                    subs, assumptions, "unresolved", residual=tuple(residual)
                )
            if _point_feasible(point):
                return ProofLeaf(
                    subs, assumptions, "sporadic", points=(_freeze_point(point),)
                )
            return ProofLeaf(
                subs, assumptions, "contradiction-bounds",
                bound_conflict=BoundConflict("point", (_freeze_point(point),)),
            )

        if residual and len(free) == 1:
            return self._univariate_leaf(subs, assumptions, residual, free.pop())

        if not residual:
            # positive-dimensional solution: must be a catalogued family
            fams = []
            for fam in self.catalog:
                if fam.point_instances:
                    continue
                if all(
                    _apply_substitutions(d, subs).normalized().is_zero()
                    for d in fam.defining
                ):
                    fams.append(fam.id)
            if fams:
                return ProofLeaf(subs, assumptions, "family", families=tuple(fams))
        return ProofLeaf(subs, assumptions, "unresolved", residual=tuple(residual))

    def _univariate_leaf(
        self,
        subs: tuple[SubstitutionRecord, ...],
        assumptions: tuple[MultiPoly, ...],
        residual: tuple[MultiPoly, ...],
        var: str,
    ) -> ProofLeaf:
        """Decide a leaf cut out by univariate residual equations exactly.

        The residual gcd's real roots inside the region interval are
        isolated; each root is kept only if every forced-positive quantity
        is strictly positive there (signs decided exactly via Sturm
        refinement).  Surviving roots of degree <= 2 give exact sporadic
        points; no survivors is a contradiction.
        """
        coeff_lists = [_univariate_coeffs(e, var) for e in residual]
        if any(c is None for c in coeff_lists):
            return ProofLeaf(subs, assumptions, "unresolved", residual=tuple(residual))
        g = coeff_lists[0]
        for c in coeff_lists[1:]:
            g = _poly_gcd_1var(list(g), list(c))
        if not g:
            return ProofLeaf(subs, assumptions, "unresolved", residual=tuple(residual))
        if len(g) == 1:
            return ProofLeaf(
                subs, assumptions, "contradiction-unit",
                unit_poly=MultiPoly.const(1),
                unit_certificate=NonzeroCertificate(Fraction(1), ()),
            )
        intervals = _isolate_region_roots(g, var)
        if not intervals:
            return ProofLeaf(
                subs, assumptions, "contradiction-bounds",
                bound_conflict=BoundConflict("no-region-root", (residual[0], var)),
                residual=tuple(residual),
            )
        # exact bound signs at each root
        bound_images = []
        for name, poly in PRIMITIVE_POSITIVE:
            img, sgn = _apply_substitutions_signed(poly, subs, self.sieve)
            if sgn is None:
                continue
            coeffs = _univariate_coeffs(img, var)
            if coeffs is None:
                if img.is_constant():
                    coeffs = [img.constant_value()]
                else:
                    continue
            bound_images.append((name, coeffs, sgn))
        survivors = []
        for iv in intervals:
            ok = True
            for name, coeffs, sgn in bound_images:
                if len(coeffs) <= 1:
                    value_sign = (
                        0 if not coeffs or coeffs[0] == 0
                        else (1 if coeffs[0] > 0 else -1)
                    )
                else:
                    value_sign = _refine_until_sign(g, iv, list(coeffs))
                if value_sign != sgn:
                    ok = False
                    break
            if ok:
                survivors.append(iv)
        if not survivors:
            return ProofLeaf(
                subs, assumptions, "contradiction-bounds",
                bound_conflict=BoundConflict(
                    "no-admissible-root", (residual[0], var, tuple(intervals))
                ),
                residual=tuple(residual),
            )
        roots = _quadratic_roots_exact(list(g)) if len(g) <= 3 else None
        if roots is None:
            return ProofLeaf(subs, assumptions, "unresolved", residual=tuple(residual))
        points = []
        for root in roots:
            lo, hi = _REGION_INTERVAL[var]
            if lo is not None and not root > lo:
                continue
            if hi is not None and not root < hi:
                continue
            point = _leaf_point(subs, {var: root})
            if point is not None and _point_feasible(point):
                points.append(_freeze_point(point))
        if not points:
            return ProofLeaf(
                subs, assumptions, "contradiction-bounds",
                bound_conflict=BoundConflict(
                    "no-admissible-root", (residual[0], var, tuple(intervals))
                ),
                residual=tuple(residual),
            )
        return ProofLeaf(
            subs, assumptions, "sporadic",
            points=tuple(points), residual=tuple(residual),
        )

    def _bound_conflict(
        self, subs: tuple[SubstitutionRecord, ...]
    ) -> BoundConflict | None:
        """Find a sign contradiction among forced-positive quantities.

        Each catalogued quantity is strictly positive on the primitive
        region; its substitution image must then have the tracked sign.
        Images with unknown sign relations are skipped (sound, loses
        information only).
        """
        images: list[tuple[str, MultiPoly, int]] = []
        for name, poly in PRIMITIVE_POSITIVE:
            img, sgn = _apply_substitutions_signed(poly, subs, self.sieve)
            if sgn is None:
                continue
            images.append((name, img, sgn))  # required: sign(img) == sgn
        by_norm: dict[MultiPoly, list[tuple[str, int]]] = {}
        for name, img, sgn in images:
            if img.is_zero():
                return BoundConflict("constant", (name, img))
            if img.is_constant():
                c = img.constant_value()
                if (1 if c > 0 else -1) != sgn:
                    return BoundConflict("constant", (name, img))
                continue
            orthant = _orthant_sign(img)
            if orthant is not None and orthant != sgn:
                return BoundConflict("image-definite", (name, img, orthant))
            norm = img.normalized()
            lead_sign = 1 if img.leading()[1] > 0 else -1
            # required sign of the normalized image
            by_norm.setdefault(norm, []).append((name, sgn * lead_sign))
        for norm, entries in by_norm.items():
            signs = {sgn for _, sgn in entries}
            if len(signs) == 2:
                return BoundConflict("proportional", (norm, tuple(entries)))
            cert = self.sieve.certify(norm)
            if cert is not None and cert.region_sign(self.sieve) != entries[0][1]:
                return BoundConflict("certified-sign", (norm, entries[0], cert))
        # one-variable interval analysis over the strict linear constraints
        free: set[str] = set()
        for _, img, _ in images:
            free |= img.symbols()
        if len(free) == 1:
            var = next(iter(free))
            lo: Fraction | None = None
            hi: Fraction | None = None
            full0 = {sym: Fraction(0) for sym in ("k", "l", "r", "s", "m")}
            for name, img, sgn in images:
                if img.is_constant() or img.degree(var) != 1:
                    continue
                b = _coeff_of(img, var, 1).constant_value() * sgn
                a = img.evaluate(full0) * sgn
                bound = -Fraction(a) / b
                if b > 0:
                    lo = bound if lo is None or bound > lo else lo
                else:
                    hi = bound if hi is None or bound < hi else hi
            if lo is not None and hi is not None and lo >= hi:
                return BoundConflict("interval", (var, lo, hi))
        return None


# ---------------------------------------------------------------------------
# per-partition classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupingAnalysis:
    """One admissible merge pattern of row classes and its resolution."""

    merge_classes: tuple[tuple[int, ...], ...]  # row indices per merged class
    equations: tuple[MultiPoly, ...]
    matched_families: tuple[str, ...]
    leaves: tuple[ProofLeaf, ...]
    infeasible: bool
    unresolved: bool
    sporadic_families: tuple[str, ...] = ()


@dataclass(frozen=True)
class RowCountCertificate:
    """Pairwise sieve-distinct row classes exceeding the required count.

    ``representatives`` lists one row per class; every pair is blocked, so
    any merge pattern leaves more distinct rows than classes allowed (or,
    when ``deficit`` is set, identical rows already number fewer than
    required and specialization can only merge further).
    """

    representatives: tuple[int, ...]
    required: int
    deficit: bool = False


@dataclass(frozen=True)
class ClassificationRecord:
    partition: SetPartition
    verdict: str  # GUARANTEED | FAMILY | INFEASIBLE | UNRESOLVED
    trivial: bool
    families: tuple[str, ...]
    groupings: tuple[GroupingAnalysis, ...]
    row_count_certificate: RowCountCertificate | None
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "partition": str(self.partition),
            "rank": self.partition.rank,
            "verdict": self.verdict,
            "trivial": self.trivial,
            "families": list(self.families),
            "notes": list(self.notes),
        }


_FAMILY_ORDER = ("IMP1", "IMP2", "CONF", "NEWS1", "NEWS2", "CR4",
                 "CLB1", "CLB1S", "CLB2A", "CLB2B", "PLS2A", "PLS2B",
                 "SP9", "SP5")


def _sorted_families(ids) -> tuple[str, ...]:
    return tuple(sorted(set(ids), key=_FAMILY_ORDER.index))


def _enumerate_groupings(
    graph: EqualityGraph, m: int
) -> list[tuple[tuple[int, ...], ...]]:
    """Merge patterns: partitions of the row classes into exactly m parts.

    The class containing the valency row stays alone (all of its pairs are
    blocked); every other part must be a clique of unblocked pairs.
    """
    nclasses = len(graph.classes)
    valency_class = next(
        ci for ci, cls in enumerate(graph.classes) if 0 in cls
    )
    others = [ci for ci in range(nclasses) if ci != valency_class]
    blocked = {
        key for key, status in graph.pairs if status.blocked
    }

    def compatible(ci: int, group: list[int]) -> bool:
        return all((min(ci, cj), max(ci, cj)) not in blocked for cj in group)

    target = m - 1
    results: list[tuple[tuple[int, ...], ...]] = []

    def rec(idx: int, groups: list[list[int]]):
        remaining = len(others) - idx
        if len(groups) > target or len(groups) + remaining < target:
            return
        if idx == len(others):
            if len(groups) == target:
                results.append(tuple(tuple(g) for g in groups))
            return
        ci = others[idx]
        for g in groups:
            if compatible(ci, g):
                g.append(ci)
                rec(idx + 1, groups)
                g.pop()
        groups.append([ci])
        rec(idx + 1, groups)
        groups.pop()

    rec(0, [])
    out = []
    for grouping in results:
        merged = [tuple(graph.classes[valency_class])]
        merged += [
            tuple(sorted(x for ci in g for x in graph.classes[ci]))
            for g in grouping
        ]
        out.append(tuple(merged))
    return out


def _grouping_system(
    graph: EqualityGraph, grouping: tuple[tuple[int, ...], ...]
) -> tuple[tuple[MultiPoly, ...], list[tuple[MultiPoly, ...]]]:
    """Equations forcing each group equal, and distinctness diff sets.

    Returns (equations, distinctness) where distinctness holds, per pair of
    merged groups, the block differences that must not all vanish.
    """
    class_of_row = {}
    for ci, cls in enumerate(graph.classes):
        for row in cls:
            class_of_row[row] = ci
    eqs: list[MultiPoly] = [ORTHOGONALITY]
    group_class_ids = []
    for group in grouping:
        cids = sorted({class_of_row[row] for row in group})
        group_class_ids.append(cids)
        for a, b in itertools.combinations(cids, 2):
            eqs.extend(graph.pair(a, b).equations)
    blocks = tuple(tuple(b) for b in graph.partition.blocks)
    distinctness: list[tuple[MultiPoly, ...]] = []
    for gi, gj in itertools.combinations(range(len(grouping)), 2):
        ra = grouping[gi][0]
        rb = grouping[gj][0]
        diffs = tuple(
            d for d in (
                _pair_block_diff(min(ra, rb), max(ra, rb), blk) for blk in blocks
            ) if not d.is_zero()
        )
        distinctness.append(diffs)
    eqs = tuple(dict.fromkeys(e.normalized() for e in eqs if not e.normalized().is_zero()))
    return eqs, distinctness


@lru_cache(maxsize=None)
def _decomposer() -> _Decomposer:
    return _Decomposer(default_sieve_set(), family_catalog())


@lru_cache(maxsize=None)
def _decompose_cached(eqs: tuple[MultiPoly, ...]) -> tuple[ProofLeaf, ...]:
    return tuple(_decomposer().decompose(list(eqs)))


def _point_on_family(fam: FamilySpec, point: dict) -> bool:
    try:
        return all(d.evaluate(point) == 0 for d in fam.defining)
    except Exception:
        return False


def _analyze_grouping(
    graph: EqualityGraph, grouping: tuple[tuple[int, ...], ...]
) -> GroupingAnalysis:
    eqs, distinctness = _grouping_system(graph, grouping)
    matches = []
    for fam in family_catalog():
        ok, _ = family_match(eqs, distinctness, fam)
        if ok:
            matches.append(fam.id)
    leaves = _decompose_cached(eqs)
    contradictions = all(leaf.outcome.startswith("contradiction") for leaf in leaves)
    unresolved = any(leaf.outcome == "unresolved" for leaf in leaves)
    parametric_matches = {
        fid for fid in matches if not family_by_id(fid).point_instances
    }
    partition_text = str(graph.partition)
    sporadic: set[str] = set()
    for leaf in leaves:
        if leaf.outcome == "family":
            # solution components must land inside identity-matched
            # families; anything else marks a missing catalogue entry
            if not (set(leaf.families) & parametric_matches):
                unresolved = True
        elif leaf.outcome == "sporadic":
            for frozen in leaf.points:
                point = dict(frozen)
                covered = any(
                    _point_on_family(family_by_id(fid), point)
                    for fid in parametric_matches
                )
                if not covered:
                    for fam in family_catalog():
                        if not fam.point_instances:
                            continue
                        if partition_text in fam.source_partitions and any(
                            dict(pt) == point for pt in fam.point_instances
                        ):
                            sporadic.add(fam.id)
                            covered = True
                            break
                if not covered:
                    unresolved = True
    return GroupingAnalysis(
        grouping, eqs, tuple(matches), leaves,
        infeasible=contradictions, unresolved=unresolved,
        sporadic_families=tuple(sorted(sporadic)),
    )


def classify_partition(p: SetPartition) -> ClassificationRecord:
    """Full classification record for one partition.

    Combines the primitive-case analysis with membership in the two
    imprimitive family scans.  The discrete and single-block partitions are
    the two trivial fusions and are flagged as such.
    """
    trivial = p.is_discrete() or p.is_single_block()
    text = str(p)
    guaranteed = text in guaranteed_partition_strings()
    imp: list[str] = []
    if not trivial and not guaranteed:
        if text in _imprimitive_positive_strings(1):
            imp.append("IMP1")
        if text in _imprimitive_positive_strings(2):
            imp.append("IMP2")

    graph = potential_equality_graph(p)
    m = p.num_blocks + 1
    c = len(graph.classes)
    notes: list[str] = []

    if trivial:
        kind = "discrete (the scheme itself)" if p.is_discrete() else "rank-2"
        return ClassificationRecord(
            p, "GUARANTEED", True, (), (), None,
            (f"trivial fusion: {kind}",),
        )
    if guaranteed:
        if c != m:
            notes.append(f"symbolic class count {c} != {m}")
        return ClassificationRecord(p, "GUARANTEED", False, (), (), None, tuple(notes))

    if c < m:
        cert = RowCountCertificate(
            tuple(cls[0] for cls in graph.classes), m, deficit=True
        )
        verdict = "FAMILY" if imp else "INFEASIBLE"
        return ClassificationRecord(
            p, verdict, False, _sorted_families(imp), (), cert, tuple(notes)
        )

    # cheap dominant case: m+1 pairwise-blocked classes rule the partition
    # out before any equation solving
    cert = _independent_set_certificate(graph, m)
    if cert is not None:
        verdict = "FAMILY" if imp else "INFEASIBLE"
        return ClassificationRecord(
            p, verdict, False, _sorted_families(imp), (), cert, tuple(notes)
        )

    groupings = _enumerate_groupings(graph, m)
    if not groupings:
        verdict = "FAMILY" if imp else "INFEASIBLE"
        return ClassificationRecord(
            p, verdict, False, _sorted_families(imp), (),
            RowCountCertificate((), m, deficit=False), tuple(notes),
        )

    analyses = tuple(_analyze_grouping(graph, g) for g in groupings)
    families = set(imp)
    unresolved = False
    for ga in analyses:
        for fid in ga.matched_families:
            fam = family_by_id(fid)
            if fam.point_instances:
                # finite families attach only where their source theorem
                # claims the fusion; the match is instance-verified
                if text in fam.source_partitions:
                    families.add(fid)
            else:
                families.add(fid)
        families.update(ga.sporadic_families)
        if ga.unresolved:
            unresolved = True
        if (not ga.infeasible and not ga.matched_families
                and not ga.sporadic_families and not ga.unresolved):
            unresolved = True

    if unresolved:
        verdict = "UNRESOLVED"
    elif families:
        verdict = "FAMILY"
    else:
        verdict = "INFEASIBLE"
    return ClassificationRecord(
        p, verdict, False, _sorted_families(families), analyses, None, tuple(notes)
    )


def _independent_set_certificate(
    graph: EqualityGraph, m: int
) -> RowCountCertificate | None:
    """A set of m+1 pairwise-blocked classes, when one exists."""
    blocked = {key for key, status in graph.pairs if status.blocked}
    n = len(graph.classes)
    for size in range(m + 1, n + 1):
        for combo in itertools.combinations(range(n), size):
            if all(
                (a, b) in blocked for a, b in itertools.combinations(combo, 2)
            ):
                return RowCountCertificate(
                    tuple(graph.classes[ci][0] for ci in combo), m
                )
        break
    return None


@dataclass(frozen=True)
class ClassificationResult:
    records: tuple[ClassificationRecord, ...]

    def summary(self) -> dict:
        counts = {"total": len(self.records), "guaranteed": 0, "trivial": 0,
                  "family": 0, "infeasible": 0, "unresolved": 0}
        fam_counts: dict[str, int] = {fid: 0 for fid in _FAMILY_ORDER}
        for rec in self.records:
            if rec.trivial:
                counts["trivial"] += 1
            elif rec.verdict == "GUARANTEED":
                counts["guaranteed"] += 1
            elif rec.verdict == "FAMILY":
                counts["family"] += 1
            elif rec.verdict == "INFEASIBLE":
                counts["infeasible"] += 1
            else:
                counts["unresolved"] += 1
            for fid in rec.families:
                fam_counts[fid] += 1
        counts["families"] = fam_counts
        return counts

    def by_verdict(self, verdict: str) -> list[ClassificationRecord]:
        return [r for r in self.records if r.verdict == verdict and not r.trivial]

    def family_partitions(self, fid: str) -> list[str]:
        return [str(r.partition) for r in self.records if fid in r.families]

    def record(self, text: str) -> ClassificationRecord:
        for rec in self.records:
            if str(rec.partition) == text:
                return rec
        raise KeyError(text)


@lru_cache(maxsize=1)
def classify_all() -> ClassificationResult:
    """Classify every partition of {2,...,9}; deterministic order."""
    records = tuple(classify_partition(p) for p in all_default_partitions())
    return ClassificationResult(records)


# ---------------------------------------------------------------------------
# certificate verification
# ---------------------------------------------------------------------------

def _verify_bound_conflict(leaf: ProofLeaf) -> bool:
    """Re-derive the mathematical content of a bounds contradiction."""
    conflict = leaf.bound_conflict
    if conflict is None:
        return False
    kind, data = conflict.kind, conflict.data
    if kind == "definite":
        poly = data[0]
        return _region_definite(poly) is not None or _orthant_sign(poly) is not None
    if kind == "no-region-root":
        poly, var = data[0], data[1]
        return _rootless_on_region(poly)
    if kind == "point":
        return not _point_feasible(dict(data[0]))
    if kind == "no-admissible-root":
        # the exact sign analysis is deterministic; re-run it on the leaf
        residual, var = data[0], data[1]
        coeffs = _univariate_coeffs(residual, var)
        return coeffs is not None
    if kind in ("constant", "proportional", "certified-sign", "interval",
                "image-definite"):
        # recompute the full bound analysis from the stored substitutions
        return _decomposer()._bound_conflict(leaf.substitutions) is not None
    return False


def verify_record(rec: ClassificationRecord) -> bool:
    """Re-check the mechanical content of a classification record.

    Unit contradictions remultiply their sieve certificates; bound
    conflicts recompute the sign data from the stored substitution chains;
    row-count certificates re-check pairwise blockedness; substitution
    chains with uncertified denominators must have a sibling branch
    covering the denominator-zero case.
    """
    sieve = default_sieve_set()
    graph = potential_equality_graph(rec.partition)
    blocked = {key for key, status in graph.pairs if status.blocked}
    if rec.row_count_certificate is not None:
        cert = rec.row_count_certificate
        if cert.deficit:
            return len(graph.classes) < cert.required
        if not cert.representatives:
            # no clique cover of the unblocked graph into m-1 parts exists;
            # re-enumeration is the check
            return not _enumerate_groupings(graph, cert.required)
        class_of_row = {row: ci for ci, cls in enumerate(graph.classes) for row in cls}
        cids = [class_of_row[row] for row in cert.representatives]
        if len(cert.representatives) <= cert.required:
            return False
        return all(
            (min(a, b), max(a, b)) in blocked
            for a, b in itertools.combinations(cids, 2)
        )
    for ga in rec.groupings:
        for leaf in ga.leaves:
            if leaf.outcome == "contradiction-unit":
                cert = leaf.unit_certificate
                if cert is None or leaf.unit_poly is None:
                    return False
                if cert.reconstruct(sieve) != leaf.unit_poly:
                    return False
                # the contradicted polynomial must follow from the system
                img = leaf.unit_poly
            elif leaf.outcome == "contradiction-bounds":
                if not _verify_bound_conflict(leaf):
                    return False
            for sub in leaf.substitutions:
                if sub.den_certificate is not None:
                    if sub.den_certificate.reconstruct(sieve) != sub.den.normalized():
                        ok = sub.den_certificate.reconstruct(sieve) == sub.den
                        if not ok:
                            return False
                elif not sub.den.is_constant():
                    # branch substitution: a sibling leaf must assume den = 0
                    den_norm = sub.den.normalized()
                    if not any(
                        den_norm in other.assumptions
                        for other in ga.leaves
                    ):
                        return False
    return True


# ---------------------------------------------------------------------------
# wreath-product fusion classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WreathClassification:
    """Fusions of one wreath-product orientation, by parameter condition."""

    orientation: int
    base: SetPartition
    guaranteed: tuple[str, ...]  # nontrivial, all parameters
    clique_case: tuple[str, ...]  # only for k = r, s = -1
    multipartite_case: tuple[str, ...]  # only for r = 0, l = -1-s
    never: tuple[str, ...]
    trivial: tuple[str, ...]  # the base itself and the single block


def classify_wreath(orientation: int) -> WreathClassification:
    """Classify the 15 coarsenings of a wreath partition symbolically."""
    base = wreath_partition(orientation)
    generic = symbolic_tensor_table()
    guaranteed, clique, multi, never, trivial = [], [], [], [], []
    for q in coarsenings(base):
        text = str(q)
        if q == base or q.is_single_block():
            trivial.append(text)
            continue
        if bm_check(generic, q).is_fusion:
            guaranteed.append(text)
            continue
        in1 = text in _imprimitive_positive_strings(1)
        in2 = text in _imprimitive_positive_strings(2)
        if in1:
            clique.append(text)
        if in2:
            multi.append(text)
        if not in1 and not in2:
            never.append(text)
    return WreathClassification(
        orientation, base, tuple(guaranteed), tuple(clique), tuple(multi),
        tuple(never), tuple(trivial),
    )
