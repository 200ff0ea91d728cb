"""Two-valued labelings of a word lattice and their extremal numbers.

A labeling assigns P or N to every word; it is stored by its P-region.
The admissible ("weighted") labelings are those where

* the P-region is an up-set (``monotone``),
* the all-zero word is P (``zero_word``) and the word using only
  neg(1) is N (``negative_unit``),
* no word and its complement are both N (``complement_pair``),
* the word using all n marks is P (``full_word``).

The first three conditions alone make a *basic* labeling; all five make
a *weighted* one.  A labeling is *representable* when some admissible
valuation f induces it, i.e. P exactly on the words with nonnegative
sum; that question is decided exactly with the rational feasibility
solver.  The extremal numbers minimize the size of the P-region (or its
d-mark slice) over all weighted labelings (gamma_tilde) or over the
representable ones (gamma).

These notions degenerate when no negative mark exists (r = n): the
negative witness word is missing, so enumeration yields nothing there
and the extremal numbers are restricted to 1 <= r <= n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional

from .core import LatticeParams, Word, enumerate_words, leq
from .errors import DomainError, ResourceLimitError
from .feasibility import feasible_point
from .weights import NrFunction, induced_map

__all__ = [
    "BooleanMap",
    "AxiomCheck",
    "RepresentabilityResult",
    "ExtremalResult",
    "ExtremalReport",
    "check_axioms",
    "enumerate_wbm",
    "is_representable",
    "gamma_tilde",
    "gamma_tilde_d",
    "gamma",
    "gamma_d",
    "psi",
    "wb_vs_rwb_report",
    "map_to_json",
    "report_to_json",
    "DEFAULT_CAP",
    "DEFAULT_N_GUARD",
]

DEFAULT_CAP = 10_000_000
DEFAULT_N_GUARD = 5

BASIC_AXIOMS = ("monotone", "zero_word", "negative_unit")
WEIGHTED_AXIOMS = BASIC_AXIOMS + ("complement_pair", "full_word")


@dataclass(frozen=True)
class BooleanMap:
    """A total P/N labeling, stored as the set of P-labeled words."""

    params: LatticeParams
    p_set: frozenset

    def __post_init__(self):
        for w in self.p_set:
            if not isinstance(w, Word) or w.params != self.params:
                raise DomainError(f"p_set entry {w!r} does not belong to {self.params}")

    def is_positive(self, w: Word) -> bool:
        if w.params != self.params:
            raise DomainError(f"word from {w.params} against a map on {self.params}")
        return w in self.p_set

    def label(self, w: Word) -> str:
        return "P" if self.is_positive(w) else "N"

    @property
    def p_count(self) -> int:
        return len(self.p_set)

    def p_count_d(self, d: int) -> int:
        if not 1 <= d <= self.params.n:
            raise DomainError(f"need 1 <= d <= n, got d={d} for {self.params}")
        return sum(1 for w in self.p_set if w.nonzero_count == d)


@dataclass(frozen=True)
class AxiomCheck:
    is_bm: bool
    is_wbm: bool
    violated: tuple


def _zero_word(params: LatticeParams) -> Word:
    return Word(params, 0)


def _negative_unit(params: LatticeParams) -> Word:
    return Word(params, 1 << params.r)


def _full_word(params: LatticeParams) -> Word:
    return Word(params, (1 << params.n) - 1)


def check_axioms(bmap: BooleanMap) -> AxiomCheck:
    """Check the five labeling conditions, reporting every violated one."""
    params = bmap.params
    if params.num_neg == 0:
        raise DomainError(
            "labeling conditions are unspecified without a negative mark (r = n)"
        )
    from .hasse import build

    diagram = build(params)
    p = bmap.p_set
    violated = []
    if any(hi not in p for lo, hi in diagram.edges if lo in p):
        violated.append("monotone")
    if _zero_word(params) not in p:
        violated.append("zero_word")
    if _negative_unit(params) in p:
        violated.append("negative_unit")
    if any(w not in p and w.complement() not in p for w in diagram.words()):
        violated.append("complement_pair")
    if _full_word(params) not in p:
        violated.append("full_word")
    is_bm = not any(v in BASIC_AXIOMS for v in violated)
    return AxiomCheck(is_bm, is_bm and len(violated) == 0, tuple(violated))


@lru_cache(maxsize=16)
def _tables(params: LatticeParams):
    """Per-lattice machinery for the labeling search: canonical word list,
    closure bit masks over word indexes, complement mapping and the
    top-down decision order."""
    from .hasse import build

    diagram = build(params)
    words = list(diagram.words())
    index = {w: i for i, w in enumerate(words)}
    count = len(words)
    up = [0] * count
    down = [0] * count
    for i in range(count):
        wi = words[i]
        for k in range(count):
            if leq(wi, words[k]):
                up[i] |= 1 << k
                down[k] |= 1 << i
    comp = [index[w.complement()] for w in words]
    decision = [index[w] for level in reversed(diagram.levels) for w in level]
    return words, index, tuple(up), tuple(down), tuple(comp), tuple(decision)


def enumerate_wbm(
    params: LatticeParams,
    cap: int = DEFAULT_CAP,
    n_guard: int = DEFAULT_N_GUARD,
) -> Iterator[BooleanMap]:
    """Yield every weighted labeling of L(n, r), each exactly once, in a
    deterministic order (words are decided top rank first, N before P).

    Raises a resource error when n exceeds ``n_guard`` or more than
    ``cap`` labelings would be produced.  At r = n the conditions are
    unspecified (no negative mark), so nothing is yielded.
    """
    if params.n > n_guard:
        raise ResourceLimitError(
            f"out of desk scale: n={params.n} exceeds the enumeration guard "
            f"{n_guard} (override n_guard to force)",
            count=0,
        )
    if params.r == params.n:
        return iter(())
    return _enumerate_wbm(params, cap)


def _enumerate_wbm(params: LatticeParams, cap: int) -> Iterator[BooleanMap]:
    words, index, up, down, comp, decision = _tables(params)
    count = len(words)

    def set_p(pos, neg, i):
        pos |= up[i]
        if pos & neg:
            return None
        return pos, neg

    def set_n(pos, neg, i):
        new_n = down[i] & ~neg
        neg |= down[i]
        m = new_n
        while m:
            b = m & -m
            pos |= up[comp[b.bit_length() - 1]]
            m ^= b
        if pos & neg:
            return None
        return pos, neg

    state = set_p(0, 0, index[_zero_word(params)])
    if state is not None:
        state = set_n(*state, index[_negative_unit(params)])
    if state is not None:
        state = set_p(*state, index[_full_word(params)])
    if state is None:
        return

    emitted = 0

    def walk(pos, neg, at):
        nonlocal emitted
        decided = pos | neg
        while at < count and decided >> decision[at] & 1:
            at += 1
        if at == count:
            if emitted >= cap:
                raise ResourceLimitError(
                    f"labeling enumeration for {params} exceeded the cap of {cap}",
                    count=emitted,
                )
            emitted += 1
            yield BooleanMap(
                params,
                frozenset(words[i] for i in range(count) if pos >> i & 1),
            )
            return
        i = decision[at]
        st = set_n(pos, neg, i)
        if st is not None:
            yield from walk(st[0], st[1], at + 1)
        st = set_p(pos, neg, i)
        if st is not None:
            yield from walk(st[0], st[1], at + 1)

    yield from walk(state[0], state[1], 0)


@dataclass(frozen=True)
class RepresentabilityResult:
    representable: bool
    witness: Optional[NrFunction]

    @property
    def status(self) -> str:
        return "representable" if self.representable else "not-representable"


def _cover_maps(params: LatticeParams):
    from .hasse import build

    diagram = build(params)
    parents = {w: [] for w in diagram.words()}
    kids = {w: [] for w in diagram.words()}
    for lo, hi in diagram.edges:
        parents[hi].append(lo)
        kids[lo].append(hi)
    return parents, kids


def is_representable(bmap: BooleanMap, require_weight: bool = True) -> RepresentabilityResult:
    """Decide exactly whether some admissible valuation induces the map
    (with ``require_weight``, some weight-flagged valuation).

    Any labeling no valuation can induce, including non-monotone ones,
    simply comes back not-representable.  A returned witness is verified
    to induce the map letter for letter before it is handed out.
    """
    params = bmap.params
    n, r = params.n, params.r
    parents, kids = _cover_maps(params)
    p = bmap.p_set
    for w, ks in kids.items():
        if w in p and any(k not in p for k in ks):
            return RepresentabilityResult(False, None)
    # the map is monotone, so constraining only the boundary words is
    # enough: every other word row is implied through the symbol chain
    minimal_p = [w for w in p if not any(u in p for u in parents[w])]
    maximal_n = [w for w in parents if w not in p and all(k in p for k in kids[w])]

    rows = []
    if r:
        e = [0] * n
        e[0] = -1
        rows.append((tuple(e), 0))  # pos(1) >= 0
    for i in range(r - 1):
        e = [0] * n
        e[i] = 1
        e[i + 1] = -1
        rows.append((tuple(e), 0))  # pos(i+1) <= pos(i+2)
    if n - r:
        e = [0] * n
        e[r] = 1
        rows.append((tuple(e), -1))  # neg(1) < 0, scaled to <= -1
    for j in range(n - r - 1):
        e = [0] * n
        e[r + j] = -1
        e[r + j + 1] = 1
        rows.append((tuple(e), 0))  # neg(j+2) <= neg(j+1)
    if require_weight:
        rows.append(((-1,) * n, 0))  # total over all marks >= 0

    def word_row(w, sign):
        e = [0] * n
        m = w.mask
        while m:
            b = m & -m
            e[b.bit_length() - 1] = sign
            m ^= b
        return tuple(e)

    for w in minimal_p:
        rows.append((word_row(w, -1), 0))  # sum >= 0
    for w in maximal_n:
        rows.append((word_row(w, 1), -1))  # sum < 0, scaled to <= -1

    point = feasible_point(rows, n)
    if point is None:
        return RepresentabilityResult(False, None)
    witness = NrFunction(params, tuple(point[:r]), tuple(point[r:]))
    if induced_map(witness).p_set != p:
        raise RuntimeError(f"feasibility witness fails to induce the map on {params}")
    return RepresentabilityResult(True, witness)


@dataclass(frozen=True)
class ExtremalResult:
    """A minimum together with one labeling achieving it (and, for the
    representable minima, a valuation witnessing that labeling)."""

    value: int
    minimizer: Optional[BooleanMap]
    witness: Optional[NrFunction] = None


def _check_extremal_params(params: LatticeParams, d: Optional[int]):
    if not 1 <= params.r <= params.n - 1:
        raise DomainError(
            f"extremal numbers are unspecified outside 1 <= r <= n-1, got {params}"
        )
    if d is not None and not 1 <= d <= params.n:
        raise DomainError(f"need 1 <= d <= n, got d={d} for {params}")


def _min_over_wbm(params, d, representable_only, cap, n_guard) -> ExtremalResult:
    _check_extremal_params(params, d)
    best = None
    for bmap in enumerate_wbm(params, cap=cap, n_guard=n_guard):
        witness = None
        if representable_only:
            res = is_representable(bmap)
            if not res.representable:
                continue
            witness = res.witness
        size = bmap.p_count if d is None else bmap.p_count_d(d)
        if best is None or size < best.value:
            best = ExtremalResult(size, bmap, witness)
    if best is None:
        raise DomainError(f"no admissible labeling exists for {params}")
    return best


def gamma_tilde(params, *, cap=DEFAULT_CAP, n_guard=DEFAULT_N_GUARD) -> ExtremalResult:
    """Minimum P-region size over all weighted labelings."""
    return _min_over_wbm(params, None, False, cap, n_guard)


def gamma_tilde_d(params, d, *, cap=DEFAULT_CAP, n_guard=DEFAULT_N_GUARD) -> ExtremalResult:
    """Minimum count of P-labeled d-mark words over all weighted labelings."""
    return _min_over_wbm(params, d, False, cap, n_guard)


def gamma(params, *, cap=DEFAULT_CAP, n_guard=DEFAULT_N_GUARD) -> ExtremalResult:
    """Minimum P-region size over the representable weighted labelings.

    This equals the minimum of alpha over weight valuations: restricting
    to induced labelings does not change the minimum.
    """
    return _min_over_wbm(params, None, True, cap, n_guard)


def gamma_d(params, d, *, cap=DEFAULT_CAP, n_guard=DEFAULT_N_GUARD) -> ExtremalResult:
    """Minimum count of P-labeled d-mark words over the representable
    weighted labelings."""
    return _min_over_wbm(params, d, True, cap, n_guard)


def psi(n: int, d: int, *, cap=DEFAULT_CAP, n_guard=DEFAULT_N_GUARD) -> ExtremalResult:
    """Minimize gamma_d over r.

    r runs over 1..n-1 by enumeration; the r = n endpoint contributes the
    closed form C(n, d) (with no negative mark every word sums >= 0), which
    never beats the enumerated range for n >= 2.  For n = 1 the closed form
    is the only candidate and no minimizing labeling exists (minimizer is
    None).
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got n={n}")
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}")
    best = None
    for r in range(1, n):
        res = gamma_d(LatticeParams(n, r), d, cap=cap, n_guard=n_guard)
        if best is None or res.value < best.value:
            best = res
    closed_form = comb(n, d)
    if best is None or closed_form < best.value:
        best = ExtremalResult(closed_form, None, None)
    return best


@dataclass(frozen=True)
class ExtremalReport:
    """One full sweep over the weighted labelings of a lattice."""

    params: LatticeParams
    d: Optional[int]
    wb_count: int
    rwb_count: int
    gamma_tilde: Optional[int]
    gamma: Optional[int]
    minimizer: Optional[BooleanMap]
    witness: Optional[NrFunction]
    non_representable: tuple


def wb_vs_rwb_report(
    params: LatticeParams,
    d: Optional[int] = None,
    *,
    cap: int = DEFAULT_CAP,
    n_guard: int = DEFAULT_N_GUARD,
    collect_non_representable: bool = True,
) -> ExtremalReport:
    """Enumerate every weighted labeling once, recording representability,
    both extremal minima, and (optionally) each non-representable map."""
    _check_extremal_params(params, d)
    wb = rwb = 0
    best_tilde = best_gamma = None
    minimizer = witness = None
    bad = []
    for bmap in enumerate_wbm(params, cap=cap, n_guard=n_guard):
        size = bmap.p_count if d is None else bmap.p_count_d(d)
        wb += 1
        if best_tilde is None or size < best_tilde:
            best_tilde = size
        res = is_representable(bmap)
        if res.representable:
            rwb += 1
            if best_gamma is None or size < best_gamma:
                best_gamma = size
                minimizer = bmap
                witness = res.witness
        elif collect_non_representable:
            bad.append(bmap)
    if wb == rwb and best_tilde != best_gamma:
        raise RuntimeError(
            "consistency violated: every labeling is representable but the "
            f"two minima differ ({best_tilde} vs {best_gamma}) on {params}"
        )
    return ExtremalReport(
        params, d, wb, rwb, best_tilde, best_gamma, minimizer, witness, tuple(bad)
    )


def _sorted_strings(params: LatticeParams, words) -> list:
    wanted = set(words)
    return [str(w) for w in enumerate_words(params) if w in wanted]


def map_to_json(bmap: BooleanMap) -> dict:
    """JSON form of a labeling: its P-words in canonical order."""
    return {"p_set": _sorted_strings(bmap.params, bmap.p_set)}


def report_to_json(report: ExtremalReport, include_non_representable: bool = True) -> dict:
    out = {
        "n": report.params.n,
        "r": report.params.r,
        "d": report.d,
        "gamma_tilde": report.gamma_tilde,
        "gamma": report.gamma,
        "minimizer": map_to_json(report.minimizer) if report.minimizer else None,
        "wb_count": report.wb_count,
        "rwb_count": report.rwb_count,
    }
    if include_non_representable:
        out["non_representable"] = [map_to_json(b) for b in report.non_representable]
    return out
