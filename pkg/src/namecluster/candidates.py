"""A priori candidate lists and their per-category weights and RR values.

A hypothesis is an ordered list of candidate categories per gender plus one
catch-all "Other" category absorbing the complement. Sampling weights come
from the onomasticon (slice estimator, full generic, or residual-of-generic);
RR values follow the rarest-class rule: a slice candidate scores at its slice
frequency, a residual-of-generic category scores at the full generic
frequency, and Other scores 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .onomasticon import (FEMALE, MALE, Onomasticon, ParseError,
                          RenditionSlice, parse_fraction, slice_frequency)

OTHER = "Other"

CANDIDATE = "candidate"
RESIDUAL_GENERIC = "residual_generic"
OTHER_KIND = "other"


class SpecificationError(ValueError):
    """A candidate list cannot be realized (duplicates, negative residuals...)."""


@dataclass(frozen=True)
class RenditionClassChain:
    """Nested rendition classes for one person, innermost (rarest) first."""

    person: str
    classes: tuple[RenditionSlice, ...]

    def __post_init__(self):
        if not self.classes:
            raise SpecificationError(f"chain for {self.person}: no classes")
        for inner, outer in zip(self.classes, self.classes[1:]):
            if (inner.ossuary_matching / inner.ossuary_generic
                    > outer.ossuary_matching / outer.ossuary_generic):
                raise SpecificationError(
                    f"chain for {self.person}: classes must widen outward")

    def rarest(self) -> RenditionSlice:
        return self.classes[0]


@dataclass(frozen=True)
class Category:
    """One sampling category: a label, a weight, and an RR value."""

    label: str
    gender: str
    weight: Fraction
    rr: Fraction
    kind: str = CANDIDATE

    def __post_init__(self):
        if self.kind not in (CANDIDATE, RESIDUAL_GENERIC, OTHER_KIND):
            raise SpecificationError(f"category {self.label}: bad kind {self.kind!r}")
        if self.kind == OTHER_KIND and self.rr != 1:
            raise SpecificationError(f"category {self.label}: Other must have rr = 1")
        if self.kind == RESIDUAL_GENERIC and self.rr < self.weight:
            raise SpecificationError(
                f"category {self.label}: residual weight exceeds the generic rr")
        if not 0 <= self.weight <= 1:
            raise SpecificationError(f"category {self.label}: weight outside [0,1]")
        if not 0 < self.rr <= 1:
            raise SpecificationError(f"category {self.label}: rr outside (0,1]")


@dataclass(frozen=True)
class CandidateDescriptor:
    """How one a priori person maps onto the onomasticon.

    ``rendition_class`` is a slice label, "generic", or "residual" (the
    generic minus its sliced-out candidates; rr stays the full generic
    frequency). ``scale`` multiplies both weight and RR value; the freed or
    absorbed mass moves to the residual of the same generic when one exists,
    otherwise to Other.
    """

    person: str
    gender: str
    generic: str = ""
    rendition_class: str = "generic"
    label: Optional[str] = None
    weight: Optional[Fraction] = None
    rr: Optional[Fraction] = None
    scale: Fraction = Fraction(1)

    def resolved_label(self) -> str:
        if self.label:
            return self.label
        if self.rendition_class in ("generic", "residual"):
            return self.generic
        return self.rendition_class


@dataclass(frozen=True)
class HypothesisSpec:
    """Ordered categories per gender; weights sum to exactly 1 per gender."""

    name: str
    women: tuple[Category, ...]
    men: tuple[Category, ...]
    female_total: int
    male_total: int

    def __post_init__(self):
        for gender, cats in ((FEMALE, self.women), (MALE, self.men)):
            labels = [c.label for c in cats]
            if len(set(labels)) != len(labels):
                raise SpecificationError(f"{gender} categories: duplicate label")
            if sum(c.weight for c in cats) != 1:
                raise SpecificationError(f"{gender} categories: weights must sum to 1")
            if sum(1 for c in cats if c.kind == OTHER_KIND) != 1:
                raise SpecificationError(f"{gender} categories: exactly one Other")

    def categories(self, gender: str) -> tuple[Category, ...]:
        return self.women if gender == FEMALE else self.men

    def category(self, gender: str, label: str) -> Category:
        for c in self.categories(gender):
            if c.label == label:
                return c
        raise SpecificationError(f"category: {gender}/{label}: unknown")


def assign_rr(onom: Onomasticon, desc: CandidateDescriptor) -> Fraction:
    """RR value of a candidate: its rarest resolvable class frequency.

    Slice candidates score at the slice frequency, generic candidates at the
    generic frequency, and residual candidates at the *full* generic
    frequency (a residual rendition is common and carries reduced evidentiary
    value). Explicit overrides win; ``scale`` applies afterwards.
    """
    if desc.rr is not None:
        return desc.rr * desc.scale
    total = onom.gender_total(desc.gender)
    if desc.rendition_class in ("generic", "residual"):
        value = onom.generic(desc.generic).total_persons / total
    else:
        value = slice_frequency(onom.slice(desc.generic, desc.rendition_class), onom)
    return value * desc.scale


def _weight(onom: Onomasticon, desc: CandidateDescriptor,
            siblings: Sequence[CandidateDescriptor]) -> Fraction:
    if desc.weight is not None:
        return desc.weight * desc.scale
    total = onom.gender_total(desc.gender)
    if desc.rendition_class == "generic":
        return onom.generic(desc.generic).total_persons / total * desc.scale
    if desc.rendition_class == "residual":
        # complement inside the generic after the sliced-out siblings
        carved = Fraction(0)
        for sib in siblings:
            if (sib.generic == desc.generic and sib is not desc
                    and sib.rendition_class not in ("generic", "residual")):
                if sib.weight is not None:
                    carved += sib.weight * total * sib.scale
                else:
                    slc = onom.slice(sib.generic, sib.rendition_class)
                    carved += (slc.ossuary_matching / slc.ossuary_generic
                               * onom.generic(sib.generic).total_persons * sib.scale)
        residual = onom.generic(desc.generic).total_persons - carved
        if residual < 0:
            raise SpecificationError(
                f"candidate {desc.person}: negative residual of {desc.generic}")
        return residual / total * desc.scale
    return slice_frequency(onom.slice(desc.generic, desc.rendition_class), onom) * desc.scale


def build_spec(onom: Onomasticon, candidates: Sequence[CandidateDescriptor],
               name: str = "custom") -> HypothesisSpec:
    """Realize candidate descriptors into a weighted category list per gender."""
    persons = [d.person for d in candidates]
    if len(set(persons)) != len(persons):
        raise SpecificationError("duplicate candidate person")
    for d in candidates:
        if d.gender not in (FEMALE, MALE):
            raise SpecificationError(
                f"candidate {d.person}: unknown gender {d.gender!r}")
    women: list[Category] = []
    men: list[Category] = []
    for gender, out in ((FEMALE, women), (MALE, men)):
        mine = [d for d in candidates if d.gender == gender]
        labels = [d.resolved_label() for d in mine]
        if len(set(labels)) != len(labels):
            raise SpecificationError(f"duplicate {gender} category label")
        acc = Fraction(0)
        for desc in mine:
            w = _weight(onom, desc, mine)
            r = assign_rr(onom, desc)
            kind = RESIDUAL_GENERIC if desc.rendition_class == "residual" else CANDIDATE
            out.append(Category(label=desc.resolved_label(), gender=gender,
                                weight=w, rr=r, kind=kind))
            acc += w
        other = 1 - acc
        if other < 0:
            raise SpecificationError(f"{gender} candidates: weights exceed 1")
        out.append(Category(label=OTHER, gender=gender, weight=other,
                            rr=Fraction(1), kind=OTHER_KIND))
    return HypothesisSpec(name=name, women=tuple(women), men=tuple(men),
                          female_total=onom.female_total,
                          male_total=onom.male_total)


BASELINE_DESCRIPTORS = (
    CandidateDescriptor("mary_magdalene", FEMALE, "Mariam", "MM"),
    CandidateDescriptor("mary_mother", FEMALE, "Mariam", "Marya"),
    CandidateDescriptor("mariam_sister", FEMALE, "Mariam", "residual", label="Mariam"),
    CandidateDescriptor("salome_sister", FEMALE, "Salome", "generic"),
    CandidateDescriptor("joseph_father", MALE, "Joseph", "residual", label="Yosef"),
    CandidateDescriptor("yeshua", MALE, "Yeshua", "generic"),
    CandidateDescriptor("joses_brother", MALE, "Joseph", "Yoseh"),
    CandidateDescriptor("james_brother", MALE, "Yaakov", "generic", label="James"),
)

ADDON_DESCRIPTORS = {
    "joanna": CandidateDescriptor("joanna", FEMALE, "Joanna", "generic"),
    "martha": CandidateDescriptor("martha", FEMALE, "Martha", "generic"),
    "cleopas": CandidateDescriptor("cleopas", MALE, "Cleopas", "generic"),
}


def baseline_spec(onom: Onomasticon) -> HypothesisSpec:
    return build_spec(onom, BASELINE_DESCRIPTORS, name="baseline")


# ---------------------------------------------------------------------------
# hypothesis config files
#
#   name <identifier>
#   candidate <person> <gender> <generic> <class> [label=..] [weight=a/b]
#             [rr=a/b] [scale=a/b]
#   observed woman1=.. woman2=.. singleton1=.. singleton2=.. father=.. son=..
# <class> is slice:<label>, generic, or residual.
# ---------------------------------------------------------------------------

def parse_hypothesis_config(text: str):
    """Return (name, descriptors, observed-slot mapping or None)."""
    name = "custom"
    descriptors: list[CandidateDescriptor] = []
    observed = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        try:
            if kind == "name":
                name = fields[1]
            elif kind == "candidate":
                person, gender, generic, rclass = fields[1:5]
                if rclass.startswith("slice:"):
                    rclass = rclass.split(":", 1)[1]
                opts = dict(f.split("=", 1) for f in fields[5:])
                descriptors.append(CandidateDescriptor(
                    person=person, gender=gender, generic=generic,
                    rendition_class=rclass, label=opts.get("label"),
                    weight=(parse_fraction(opts["weight"]) if "weight" in opts else None),
                    rr=(parse_fraction(opts["rr"]) if "rr" in opts else None),
                    scale=parse_fraction(opts.get("scale", "1"))))
            elif kind == "observed":
                observed = dict(f.split("=", 1) for f in fields[1:])
            else:
                raise ParseError(f"row {lineno}: unknown record kind {kind!r}")
        except ParseError:
            raise
        except (IndexError, ValueError) as exc:
            raise ParseError(f"row {lineno}: {exc}") from exc
    return name, tuple(descriptors), observed


def load_hypothesis_config(source: Union[str, Path] = "bundled"):
    if source == "bundled":
        text = resources.files("namecluster.data").joinpath("baseline.cfg").read_text()
    else:
        text = Path(source).read_text()
    return parse_hypothesis_config(text)
