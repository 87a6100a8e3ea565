"""Exact enumeration of the weighted sample space of tomb configurations.

Samples are ordered 6-tuples (woman1, woman2, singleton1, singleton2,
father, son) of categories. Each tuple carries mass equal to the product of
its category person-counts (weights times gender totals), so the full space
has mass female_total^2 * male_total^4. Tuples failing the realism
constraints count only toward the total; valid tuples whose RR score is at
most the observed value (exact rational comparison, no epsilon) form the
tail. With ``require_yeshua_in_tomb`` set, a valid tuple joins the tail only
if the Yeshua category occupies the son slot or a singleton slot.
"""

from __future__ import annotations

import bisect
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .candidates import OTHER_KIND, HypothesisSpec
from .scoring import YESHUA, RuleLedger, score_male_slots


@dataclass(frozen=True)
class TailResult:
    total_mass: Fraction
    valid_mass: Fraction
    tail_mass: Fraction
    proportion: Fraction
    observed_rr: Fraction

    @property
    def valid_ratio(self) -> Fraction:
        return self.valid_mass / self.total_mass


def tuple_space_size(spec: HypothesisSpec) -> int:
    """Ordered person 6-tuples: female_total^2 * male_total^4."""
    return spec.female_total ** 2 * spec.male_total ** 4


def _men_tuples(spec: HypothesisSpec, rules: RuleLedger, threads: int):
    """Score all valid ordered male 4-tuples; returns (tuples, valid_mass).

    Each entry is (score, mass, tail_eligible). Masses are in person counts.
    """
    men = spec.men
    mt = spec.male_total
    counts = {c.label: c.weight * mt for c in men}
    other = {c.label for c in men if c.kind == OTHER_KIND}

    combos = []
    for s1, s2, f, son in product([c.label for c in men], repeat=4):
        if s1 == s2 and s1 not in other:
            continue
        if f == son and f not in other:
            continue
        if son not in other and son in (s1, s2):
            continue
        combos.append((s1, s2, f, son))

    def score_one(combo):
        s1, s2, f, son = combo
        singles, gen, bonus = score_male_slots(s1, s2, f, son, spec, rules)
        mass = counts[s1] * counts[s2] * counts[f] * counts[son]
        eligible = YESHUA in (s1, s2, son)
        return (singles * gen / bonus, mass, eligible)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(combos) // threads)
            parts = [combos[i:i + chunk] for i in range(0, len(combos), chunk)]
            scored = []
            for batch in pool.map(lambda part: [score_one(c) for c in part], parts):
                scored.extend(batch)
    else:
        scored = [score_one(c) for c in combos]

    valid_mass = sum((m for _, m, _ in scored), Fraction(0))
    scored.sort(key=lambda t: t[0])
    return scored, valid_mass


def enumerate_tail(spec: HypothesisSpec, rules: RuleLedger, observed: Fraction,
                   threads: int = 1) -> TailResult:
    """Total, valid, and tail mass of the sample space against ``observed``."""
    if observed <= 0:
        raise ValueError("observed RR must be positive")
    ft = spec.female_total
    women = spec.women
    wcounts = {c.label: c.weight * ft for c in women}
    wother = {c.label for c in women if c.kind == OTHER_KIND}
    wrr = {c.label: c.rr for c in women}

    wpairs = []
    valid_w = Fraction(0)
    for w1, w2 in product([c.label for c in women], repeat=2):
        if w1 == w2 and w1 not in wother:
            continue
        mass = wcounts[w1] * wcounts[w2]
        valid_w += mass
        wpairs.append((wrr[w1] * wrr[w2], mass))

    men_scored, valid_m = _men_tuples(spec, rules, threads)
    scores = [t[0] for t in men_scored]
    pref = [Fraction(0)]
    for sc, mass, eligible in men_scored:
        add = mass if (eligible or not rules.require_yeshua_in_tomb) else Fraction(0)
        pref.append(pref[-1] + add)

    tail = Fraction(0)
    for wsc, wmass in wpairs:
        idx = bisect.bisect_right(scores, observed / wsc)
        tail += wmass * pref[idx]

    total = Fraction(tuple_space_size(spec))
    valid = valid_w * valid_m
    return TailResult(total_mass=total, valid_mass=valid, tail_mass=tail,
                      proportion=tail / valid, observed_rr=observed)
