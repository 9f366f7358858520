"""Completion by cut ideals (the Dedekind-MacNeille construction).

The completion of a finite poset P is the family of all cone intersections
``L(A)`` for ``A ⊆ P``, ordered by inclusion.  It is computed as the
closure of the principal ideals plus the full carrier under pairwise
intersection.  Meets are intersections; joins are ``L(U(.))`` of unions.
When P carries a valid antitone involution, the completion inherits one:

    star(I) = L(I')     (elementwise prime, then lower cone)

and the canonical embedding ``x -> L(x)`` commutes with the involutions.
"""

from __future__ import annotations

from .errors import UsageError
from .involution import InvolutivePoset
from .poset import Poset, Subset, _bits


class CompletionLattice:
    """The lattice of cut ideals of a finite poset."""

    __slots__ = ("base", "inv", "ideals", "labels", "_index", "_embed", "_star")

    def __init__(self, base, inv=None):
        if isinstance(base, InvolutivePoset):
            if inv is not None:
                raise UsageError("involution given twice")
            inv = base.inv
            base._require_involution()
            base = base.base
        if not isinstance(base, Poset):
            raise UsageError("base must be a Poset or InvolutivePoset")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "inv", tuple(inv) if inv is not None else None)

        found = {base._full}
        work = [base._lower(1 << x) for x in range(base.n)]
        found.update(work)
        work = list(found)
        while work:
            cur = work.pop()
            for other in list(found):
                meet = cur & other
                if meet not in found:
                    found.add(meet)
                    work.append(meet)
        ideals = sorted(found, key=lambda m: (m.bit_count(), tuple(_bits(m))))
        object.__setattr__(self, "ideals", tuple(ideals))
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(ideals)})
        lab = base.labels
        object.__setattr__(
            self, "labels",
            tuple("{" + ",".join(lab[x] for x in _bits(m)) + "}" for m in ideals))
        object.__setattr__(
            self, "_embed",
            tuple(self._index[base._lower(1 << x)] for x in range(base.n)))
        if self.inv is None:
            object.__setattr__(self, "_star", None)
        else:
            star = []
            for m in ideals:
                primed = 0
                for x in _bits(m):
                    primed |= 1 << self.inv[x]
                star.append(self._index[base._lower(primed)])
            object.__setattr__(self, "_star", tuple(star))

    def __setattr__(self, name, value):
        raise AttributeError("CompletionLattice is immutable")

    # -- basic access -----------------------------------------------------
    @property
    def n(self):
        return len(self.ideals)

    @property
    def has_involution(self):
        return self.inv is not None

    def ideal(self, i):
        """The i-th ideal as a subset of the base poset."""
        return Subset(self.base, self.ideals[i])

    def index_of(self, items):
        """Index of an ideal given as a base subset; usage error if the
        set is not a cut ideal."""
        mask = self.base._mask_of(items)
        try:
            return self._index[mask]
        except KeyError:
            raise UsageError(
                f"{Subset(self.base, mask).render()} is not a cut ideal") from None

    def leq(self, i, j):
        return self.ideals[i] & ~self.ideals[j] == 0

    # -- lattice structure ---------------------------------------------------
    def embed(self, x):
        """Index of the principal ideal L(x)."""
        return self._embed[self.base.index(x)]

    def meet(self, i, j):
        return self._index[self.ideals[i] & self.ideals[j]]

    def join(self, i, j):
        union = self.ideals[i] | self.ideals[j]
        return self._index[self.base._lower(self.base._upper(union))]

    def star(self, i):
        """The inherited involution L(I')."""
        if self._star is None:
            raise UsageError("completion of a plain poset has no involution")
        return self._star[i]

    # -- views -------------------------------------------------------------
    def as_poset(self):
        """The completion as a poset ordered by inclusion."""
        n = self.n
        up = []
        for i in range(n):
            m = 0
            for j in range(n):
                if self.leq(i, j):
                    m |= 1 << j
            up.append(m)
        return Poset(self.labels, up, _validated=True)

    def as_involutive_poset(self):
        if self._star is None:
            raise UsageError("completion of a plain poset has no involution")
        return InvolutivePoset(self.as_poset(), self._star)

    def fixed_ideals(self):
        """Labels of the star-fixed ideals."""
        if self._star is None:
            raise UsageError("completion of a plain poset has no involution")
        return tuple(self.labels[i] for i in range(self.n) if self._star[i] == i)

    def __repr__(self):
        return f"CompletionLattice({self.n} ideals over {self.base.n} elements)"


def dedekind_macneille(base, inv=None):
    """Build the completion of a poset or involutive poset."""
    return CompletionLattice(base, inv)
