"""Posets equipped with a unary map intended as an antitone involution,
and the classification ladder built on the condition

    (K)  L(x, x') <= U(y, y')   for all x, y.

The ladder: Boolean poset -> strict -> strong -> pseudo-Kleene, with
"Kleene" meaning pseudo-Kleene plus distributivity.  Every predicate
returns a :class:`Verdict`; structural falsity never raises.  Operations
that are meaningless without a valid antitone involution raise
:class:`UsageError`, and ones that need bounds raise :class:`DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UsageError
from .poset import Poset, Subset, Verdict, find_isomorphism


def involution_from_pairs(labels, pairs):
    """Total involutive map from (name, name) pairs, symmetrically closed."""
    index = {name: i for i, name in enumerate(labels)}
    inv = [None] * len(labels)
    for a, b in pairs:
        x = index[a] if isinstance(a, str) else a
        y = index[b] if isinstance(b, str) else b
        for s, t in ((x, y), (y, x)):
            if inv[s] is not None and inv[s] != t:
                raise UsageError(f"conflicting involution pairing for {labels[s]!r}")
            inv[s] = t
    missing = [labels[i] for i, v in enumerate(inv) if v is None]
    if missing:
        raise UsageError(f"involution does not cover: {', '.join(missing)}")
    return tuple(inv)


class InvolutivePoset:
    """A finite poset together with a total unary map ``inv``.

    The map is stored as given; :meth:`check_antitone_involution` validates
    it, and the classification predicates insist on validity.
    """

    __slots__ = ("base", "inv", "_involution_verdict")

    def __init__(self, base, inv):
        if not isinstance(base, Poset):
            raise UsageError("base must be a Poset")
        inv = tuple(inv)
        if len(inv) != base.n:
            raise UsageError("involution must be a total map on the carrier")
        for v in inv:
            if not isinstance(v, int) or not (0 <= v < base.n):
                raise UsageError("involution maps outside the carrier")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "_involution_verdict", None)

    def __setattr__(self, name, value):
        raise AttributeError("InvolutivePoset is immutable")

    @classmethod
    def from_covers(cls, labels, covers, involution_pairs):
        base = Poset.from_covers(labels, covers)
        return cls(base, involution_from_pairs(base.labels, involution_pairs))

    # -- delegation ------------------------------------------------------
    @property
    def labels(self):
        return self.base.labels

    @property
    def n(self):
        return self.base.n

    def index(self, item):
        return self.base.index(item)

    def label(self, x):
        return self.base.labels[x]

    def leq(self, x, y):
        return self.base.leq(x, y)

    def incomparable(self, x, y):
        return self.base.incomparable(x, y)

    def subset(self, items=()):
        return self.base.subset(items)

    def lower_cone(self, items):
        return self.base.lower_cone(items)

    def upper_cone(self, items):
        return self.base.upper_cone(items)

    def leq_set(self, a, b):
        return self.base.leq_set(a, b)

    def bounds(self):
        return self.base.bounds()

    def is_lattice(self):
        return self.base.is_lattice()

    def is_distributive(self, form="LU"):
        return self.base.is_distributive(form)

    def __eq__(self, other):
        if not isinstance(other, InvolutivePoset):
            return NotImplemented
        return self.base == other.base and self.inv == other.inv

    def __hash__(self):
        return hash((self.base, self.inv))

    def __repr__(self):
        return f"InvolutivePoset({self.n} elements: {', '.join(self.labels)})"

    # -- the involution --------------------------------------------------
    def prime(self, x):
        """x' as an element index."""
        return self.inv[self.base.index(x)]

    def prime_subset(self, items):
        """Elementwise image A' of a subset."""
        mask = self.base._mask_of(items)
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= 1 << self.inv[low.bit_length() - 1]
            m ^= low
        return Subset(self.base, out)

    def check_antitone_involution(self):
        """x'' = x for all x, and x <= y implies y' <= x'."""
        cached = self._involution_verdict
        if cached is not None:
            return cached
        lab = self.labels
        verdict = Verdict(True)
        for x in range(self.n):
            if self.inv[self.inv[x]] != x:
                verdict = Verdict(
                    False, (x,),
                    f"not involutive: {lab[x]}'' = {lab[self.inv[self.inv[x]]]} != {lab[x]}")
                break
        else:
            for x in range(self.n):
                for y in range(self.n):
                    if x != y and self.base.leq(x, y) and not self.base.leq(self.inv[y], self.inv[x]):
                        verdict = Verdict(
                            False, (x, y),
                            f"not antitone: {lab[x]} <= {lab[y]} but "
                            f"{lab[y]}' = {lab[self.inv[y]]} !<= {lab[self.inv[x]]} = {lab[x]}'")
                        break
                else:
                    continue
                break
        object.__setattr__(self, "_involution_verdict", verdict)
        return verdict

    def _require_involution(self):
        verdict = self.check_antitone_involution()
        if not verdict.ok:
            raise UsageError(f"operation requires a valid antitone involution ({verdict.detail})")

    def fixed_points(self):
        mask = 0
        for x in range(self.n):
            if self.inv[x] == x:
                mask |= 1 << x
        return Subset(self.base, mask)

    # -- cone shorthands ---------------------------------------------------
    def _self_cone_masks(self):
        """Masks of L(x, x') and U(x, x') for every x."""
        p = self.base
        lows = [p._lower((1 << x) | (1 << self.inv[x])) for x in range(self.n)]
        ups = [p._upper((1 << x) | (1 << self.inv[x])) for x in range(self.n)]
        return lows, ups

    # -- classification ladder -----------------------------------------------
    def is_pseudo_kleene(self):
        """Condition (K): L(x,x') <= U(y,y') for all pairs x, y."""
        self._require_involution()
        p = self.base
        lab = self.labels
        lows, ups = self._self_cone_masks()
        for x in range(self.n):
            for y in range(self.n):
                if not p._leq_set(lows[x], ups[y]):
                    detail = (f"L({lab[x]},{lab[x]}') = {Subset(p, lows[x]).render()} !<= "
                              f"{Subset(p, ups[y]).render()} = U({lab[y]},{lab[y]}')")
                    return Verdict(False, (x, y), detail)
        return Verdict(True)

    def is_kleene(self):
        """Pseudo-Kleene plus the distributivity identity (form LU)."""
        pk = self.is_pseudo_kleene()
        if not pk.ok:
            return Verdict(False, pk.witness, f"not pseudo-Kleene: {pk.detail}")
        dist = self.base.is_distributive("LU")
        if not dist.ok:
            return Verdict(False, dist.witness, f"not distributive: {dist.detail}")
        return Verdict(True)

    def is_strong(self):
        """x || y implies L(x,x') = L(y,y')."""
        self._require_involution()
        p = self.base
        lab = self.labels
        lows, _ = self._self_cone_masks()
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if p.incomparable(x, y) and lows[x] != lows[y]:
                    detail = (f"{lab[x]} || {lab[y]} but L({lab[x]},{lab[x]}') = "
                              f"{Subset(p, lows[x]).render()} != "
                              f"{Subset(p, lows[y]).render()} = L({lab[y]},{lab[y]}')")
                    return Verdict(False, (x, y), detail)
        return Verdict(True)

    def is_strict(self):
        """Bounded, and all non-extremal x, y share the same L(x,x') and
        U(x,x')."""
        self._require_involution()
        bottom, top = self.base.bounds()
        if bottom is None or top is None:
            raise DomainError("strictness requires bounds")
        p = self.base
        lab = self.labels
        lows, ups = self._self_cone_masks()
        inner = [x for x in range(self.n) if x not in (bottom, top)]
        for i, x in enumerate(inner):
            for y in inner[i + 1:]:
                if lows[x] != lows[y]:
                    detail = (f"L({lab[x]},{lab[x]}') = {Subset(p, lows[x]).render()} != "
                              f"{Subset(p, lows[y]).render()} = L({lab[y]},{lab[y]}')")
                    return Verdict(False, (x, y), detail)
                if ups[x] != ups[y]:
                    detail = (f"U({lab[x]},{lab[x]}') = {Subset(p, ups[x]).render()} != "
                              f"{Subset(p, ups[y]).render()} = U({lab[y]},{lab[y]}')")
                    return Verdict(False, (x, y), detail)
        return Verdict(True)

    def is_boolean_poset(self):
        """Bounded distributive poset where the involution complements:
        L(x,x') = {0} and U(x,x') = {1} for every x."""
        self._require_involution()
        bottom, top = self.base.bounds()
        if bottom is None or top is None:
            raise DomainError("Boolean poset check requires bounds")
        if not self.base.is_distributive("LU").ok:
            raise DomainError("Boolean poset check requires distributivity")
        p = self.base
        lab = self.labels
        lows, ups = self._self_cone_masks()
        for x in range(self.n):
            if lows[x] != 1 << bottom:
                detail = (f"L({lab[x]},{lab[x]}') = {Subset(p, lows[x]).render()} != "
                          f"{{{lab[bottom]}}}")
                return Verdict(False, (x,), detail)
            if ups[x] != 1 << top:
                detail = (f"U({lab[x]},{lab[x]}') = {Subset(p, ups[x]).render()} != "
                          f"{{{lab[top]}}}")
                return Verdict(False, (x,), detail)
        return Verdict(True)

    def lemma11_holds(self, a, b):
        """On a bounded distributive involutive poset: a <= b together with
        L(b, a') = {0} forces L(a,a') = L(b,b') = {0} and
        U(a,a') = U(b,b') = {1}.  Precondition violations raise
        :class:`DomainError`."""
        self._require_involution()
        bottom, top = self.base.bounds()
        if bottom is None or top is None:
            raise DomainError("requires a bounded poset")
        if not self.base.is_distributive("LU").ok:
            raise DomainError("requires a distributive poset")
        a, b = self.base.index(a), self.base.index(b)
        if not self.base.leq(a, b):
            raise DomainError(f"requires {self.labels[a]} <= {self.labels[b]}")
        p = self.base
        if p._lower((1 << b) | (1 << self.inv[a])) != 1 << bottom:
            raise DomainError(
                f"requires L({self.labels[b]}, {self.labels[a]}') = {{{self.labels[bottom]}}}; "
                f"got {Subset(p, p._lower((1 << b) | (1 << self.inv[a]))).render()}")
        lows, ups = self._self_cone_masks()
        for x in (a, b):
            if lows[x] != 1 << bottom:
                return Verdict(False, (a, b),
                               f"L({self.labels[x]},{self.labels[x]}') = "
                               f"{Subset(p, lows[x]).render()}")
            if ups[x] != 1 << top:
                return Verdict(False, (a, b),
                               f"U({self.labels[x]},{self.labels[x]}') = "
                               f"{Subset(p, ups[x]).render()}")
        return Verdict(True)

    def isomorphic_to(self, other):
        """Isomorphism respecting the involutions, or ``None``."""
        return find_isomorphism(self.base, other.base, self.inv, other.inv)

    def classify(self):
        return classify(self)


@dataclass(frozen=True)
class Classification:
    """Full classification report for an involutive poset."""

    involution: Verdict
    bounded: tuple
    lattice: Verdict
    distributive: dict
    distributive_forms_agree: bool
    pseudo_kleene: Verdict | None
    kleene: Verdict | None
    strong: Verdict | None
    strict: Verdict | None
    strict_reason: str
    boolean: Verdict | None
    boolean_reason: str
    fixed_points: tuple
    summary: str


def _summary(involution, lattice_ok, pk, kleene, strong, strict, boolean):
    if not involution.ok:
        name = "not an antitone involution"
    elif boolean is not None and boolean.ok:
        name = "Boolean"
    elif strict is not None and strict.ok and kleene.ok:
        name = "strict Kleene"
    elif strict is not None and strict.ok:
        name = "strict pseudo-Kleene"
    elif strong.ok and kleene.ok:
        name = "strong Kleene"
    elif kleene.ok:
        name = "Kleene"
    elif strong.ok:
        name = "strong pseudo-Kleene"
    elif pk.ok:
        name = "pseudo-Kleene"
    else:
        name = "involutive (not pseudo-Kleene)"
    if involution.ok:
        word = "algebra" if lattice_ok else "poset"
        name = f"{name} {word}"
    return f"{name}; {'lattice' if lattice_ok else 'not a lattice'}"


def classify(ip):
    """Classify without throwing on structural falsity; only malformed
    input raises."""
    involution = ip.check_antitone_involution()
    bottom, top = ip.base.bounds()
    lab = ip.labels
    bounded = (lab[bottom] if bottom is not None else None,
               lab[top] if top is not None else None)
    lattice = ip.base.is_lattice()
    distributive = ip.base.distributivity_all_forms()
    forms_agree = len({v.ok for v in distributive.values()}) == 1

    pk = kleene = strong = strict = boolean = None
    strict_reason = boolean_reason = ""
    fixed = ()
    if involution.ok:
        pk = ip.is_pseudo_kleene()
        kleene = ip.is_kleene()
        strong = ip.is_strong()
        if bottom is None or top is None:
            strict_reason = "not applicable: poset is unbounded"
        else:
            strict = ip.is_strict()
        if bottom is None or top is None:
            boolean_reason = "not applicable: poset is unbounded"
        elif not distributive["LU"].ok:
            boolean_reason = "not applicable: poset is not distributive"
        else:
            boolean = ip.is_boolean_poset()
        fixed = ip.fixed_points().labels

    summary = _summary(involution, lattice.ok, pk, kleene, strong, strict, boolean) \
        if involution.ok else "not an antitone involution"
    return Classification(
        involution=involution, bounded=bounded, lattice=lattice,
        distributive=distributive, distributive_forms_agree=forms_agree,
        pseudo_kleene=pk, kleene=kleene, strong=strong,
        strict=strict, strict_reason=strict_reason,
        boolean=boolean, boolean_reason=boolean_reason,
        fixed_points=fixed, summary=summary)
