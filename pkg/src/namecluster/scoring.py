"""Realism validation and RR scoring of a six-slot tomb configuration.

A configuration holds two women, two singleton men, and the father/son pair
of a generational ossuary, each given as a category label of one hypothesis.
Validation enforces the realism constraints (no category may be drawn twice
into incompatible slots, with the uninformative Other class exempt).
Scoring multiplies the slot RR values and then applies a ledger of familial
adjustments keyed on the male candidate roles.

The adjustment ledger, in the order audited against the reference analysis:

  R1  father Yeshua: the pair scores 1 (with ``allow_father_yeshua`` the
      father's rarity counts but his son stays unknown).
  R2  father Other: the pair scores 1.
  R3  a father who also appears as a singleton is counted once only.
  R4  singletons Yosef and Yoseh together: that Yosef is unknown, scores 1.
  R5  father Yoseh: son unknown (1) unless named for a close relative
      (Yeshua, Yosef, James, Cleopas), then son rr times the unknown-son
      factor.
  R6  father Cleopas: as R5 with sons Yosef, James, Yoseh.
  R7  father Yoseh with a singleton Yosef: that Yosef scores 1.
  R8  father Yosef, not a singleton, Yoseh present: pair scores 1 unless the
      son is Yeshua, Yoseh or James (full value).
  R9  father Yosef, not a singleton, no Yoseh: pair scores 1 unless the son
      is Yeshua or James (full value).
  R10 father Yosef who is also a singleton, no Yoseh: sons Yeshua or James
      count at rr times the factor; other sons unknown.
  R11 father Yosef, son Cleopas, no Yoseh: full pair value times the factor.
  R12 father James who is also a singleton: sons Yoseh, Yeshua, Yosef or
      Cleopas count at rr times the factor; others unknown.
  R13 father James, not a singleton: son Cleopas counts in full; sons Yoseh,
      Yosef or Yeshua at rr times the factor; others unknown.
  R14 son Yeshua of father Yosef: the total is divided by the bonus divisor.

A father Yosef who is also a singleton while a Yoseh is present falls under
none of the written adjustments; the pair is unknowable and scores 1 (this
is what reproduces the reference valid and tail masses exactly).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .candidates import OTHER_KIND, Category, HypothesisSpec, SpecificationError

YOSEF = "Yosef"
YESHUA = "Yeshua"
YOSEH = "Yoseh"
JAMES = "James"
CLEOPAS = "Cleopas"


class ContractViolation(ValueError):
    """score() was called on an invalid configuration."""


@dataclass(frozen=True)
class RuleLedger:
    """Numeric parameters and toggles of the configurational adjustments."""

    bonus_divisor: Fraction = Fraction(6, 5)
    unknown_son_factor: Fraction = Fraction(5)
    require_yeshua_in_tomb: bool = False
    allow_father_yeshua: bool = False
    count_unknown_sons: bool = True

    def __post_init__(self):
        if self.bonus_divisor < 1:
            raise SpecificationError("bonus_divisor must be >= 1")
        if self.unknown_son_factor < 1:
            raise SpecificationError("unknown_son_factor must be >= 1")

    def with_params(self, **kwargs) -> "RuleLedger":
        return replace(self, **kwargs)


@dataclass(frozen=True)
class TombConfiguration:
    """Category labels for the six inscribed slots."""

    woman1: str
    woman2: str
    singleton1: str
    singleton2: str
    father: str
    son: str

    def male_slots(self) -> tuple[str, str, str, str]:
        return (self.singleton1, self.singleton2, self.father, self.son)


@dataclass(frozen=True)
class RRValue:
    """Score of a configuration, factored by slot group."""

    value: Fraction
    women_part: Fraction
    singleton_part: Fraction
    generational_part: Fraction
    bonus_applied: Fraction = Fraction(1)


TALPIYOT = TombConfiguration(
    woman1="MM", woman2="Marya", singleton1=YOSEH, singleton2="Other",
    father=YOSEF, son=YESHUA)


def validate(config: TombConfiguration, spec: HypothesisSpec) -> str | None:
    """Return the reason a configuration is impossible, or None when valid.

    Equality is category-level; the Other category never collides with
    itself. A father may share a category with a singleton.
    """
    w1 = spec.category("female", config.woman1)
    w2 = spec.category("female", config.woman2)
    s1 = spec.category("male", config.singleton1)
    s2 = spec.category("male", config.singleton2)
    father = spec.category("male", config.father)
    son = spec.category("male", config.son)

    def collides(a: Category, b: Category) -> bool:
        return a.label == b.label and a.kind != OTHER_KIND

    if collides(w1, w2):
        return "duplicate woman"
    if collides(s1, s2):
        return "duplicate singleton"
    if collides(father, son):
        return "father and son share a rendition"
    if collides(son, s1) or collides(son, s2):
        return "son duplicates a singleton"
    return None


def _generational_part(singles: tuple[str, str], father: Category, son: Category,
                       rules: RuleLedger) -> Fraction:
    """Pair contribution after the familial adjustments (before the bonus)."""
    one = Fraction(1)

    def named_for_relative(allowed: tuple[str, ...]) -> Fraction:
        if son.label in allowed and son.kind != OTHER_KIND:
            if rules.count_unknown_sons:
                return son.rr * rules.unknown_son_factor
            return one
        return one

    father_is_singleton = father.label in singles
    yoseh_present = YOSEH in singles or son.label == YOSEH

    if father.kind == OTHER_KIND:
        return one  # R2
    if father.label == YESHUA:
        if not rules.allow_father_yeshua:
            return one  # R1
        return father.rr  # father counts; no known son of a Yeshua
    if father.label == YOSEH:
        return father.rr * named_for_relative((YESHUA, YOSEF, JAMES, CLEOPAS))  # R5
    if father.label == CLEOPAS:
        return father.rr * named_for_relative((YOSEF, JAMES, YOSEH))  # R6
    if father.label == YOSEF:
        if son.label == CLEOPAS and not yoseh_present:
            return father.rr * named_for_relative((CLEOPAS,))  # R11
        if yoseh_present:
            if father_is_singleton:
                return one  # uncovered case: unknowable pair
            if son.label in (YESHUA, YOSEH, JAMES):
                return father.rr * son.rr  # R8
            return one
        if father_is_singleton:
            return father.rr * named_for_relative((YESHUA, JAMES))  # R10
        if son.label in (YESHUA, JAMES):
            return father.rr * son.rr  # R9
        return one
    if father.label == JAMES:
        if father_is_singleton:
            return father.rr * named_for_relative((YOSEH, YESHUA, YOSEF, CLEOPAS))  # R12
        if son.label == CLEOPAS:
            return father.rr * son.rr  # R13, a known grandson
        return father.rr * named_for_relative((YOSEH, YOSEF, YESHUA))  # R13
    # a candidate with no familial rules contributes its plain pair product
    return father.rr * (son.rr if son.kind != OTHER_KIND else one)


def score_male_slots(singleton1: str, singleton2: str, father_label: str,
                     son_label: str, spec: HypothesisSpec,
                     rules: RuleLedger) -> tuple[Fraction, Fraction, Fraction]:
    """(singleton_part, generational_part, bonus divisor) for the male slots."""
    s1 = spec.category("male", singleton1)
    s2 = spec.category("male", singleton2)
    father = spec.category("male", father_label)
    son = spec.category("male", son_label)

    a1, a2 = s1.rr, s2.rr
    if father.kind != OTHER_KIND:  # R3: a father-singleton is counted once
        if s1.label == father.label:
            a1 = Fraction(1)
        elif s2.label == father.label:
            a2 = Fraction(1)
    if {s1.label, s2.label} == {YOSEF, YOSEH}:  # R4
        if s1.label == YOSEF:
            a1 = Fraction(1)
        else:
            a2 = Fraction(1)
    if father.label == YOSEH:  # R7
        if s1.label == YOSEF:
            a1 = Fraction(1)
        if s2.label == YOSEF:
            a2 = Fraction(1)

    generational_part = _generational_part(
        (s1.label, s2.label), father, son, rules)
    bonus = Fraction(1)
    if father.label == YOSEF and son.label == YESHUA:  # R14
        bonus = rules.bonus_divisor
    return a1 * a2, generational_part, bonus


def score(config: TombConfiguration, spec: HypothesisSpec,
          rules: RuleLedger = RuleLedger()) -> RRValue:
    """RR value of a valid configuration under the adjustment ledger."""
    reason = validate(config, spec)
    if reason is not None:
        raise ContractViolation(reason)
    w1 = spec.category("female", config.woman1)
    w2 = spec.category("female", config.woman2)
    singleton_part, generational_part, bonus = score_male_slots(
        config.singleton1, config.singleton2, config.father, config.son,
        spec, rules)
    women_part = w1.rr * w2.rr
    value = women_part * singleton_part * generational_part / bonus
    return RRValue(value=value, women_part=women_part,
                   singleton_part=singleton_part,
                   generational_part=generational_part, bonus_applied=bonus)
