"""Finite posets and the lower/upper cone calculus.

A :class:`Poset` stores its order relation as per-element bitmasks, which
keeps the cone operators L and U cheap enough for exhaustive audits.  All
element subsets handed to callers are :class:`Subset` value objects tied to
their owning poset; mixing subsets across posets is a usage error.

Conventions used throughout the package:

* ``L(A)`` (``lower_cone``) is the set of common lower bounds of ``A`` and
  ``U(A)`` (``upper_cone``) the set of common upper bounds.  ``L({}) `` is
  the full carrier, dually for ``U``.
* the set-order ``A <= B`` (``leq_set``) holds when every element of ``A``
  is below every element of ``B``; it is vacuously true when either side
  is empty.
* predicates that can fail return a :class:`Verdict` carrying a witness in
  canonical (lowest-index-first) order rather than raising.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import UsageError

DISTRIBUTIVITY_FORMS = ("LU", "ULU", "UL", "LUL")


@dataclass(frozen=True)
class Verdict:
    """Boolean check outcome plus a reproducible witness when it fails."""

    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "Verdict(ok)"
        return f"Verdict(fail: {self.detail})"


def _bits(mask):
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Subset:
    """An immutable subset of a poset's carrier, tied to its owner."""

    __slots__ = ("owner", "mask")

    def __init__(self, owner, mask):
        object.__setattr__(self, "owner", owner)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Subset is immutable")

    # -- set protocol -------------------------------------------------
    def __iter__(self):
        return _bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, item):
        idx = self.owner.index(item) if isinstance(item, str) else item
        return bool((self.mask >> idx) & 1)

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self.owner is other.owner and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.owner), self.mask))

    def _check_owner(self, other):
        if self.owner is not other.owner:
            raise UsageError("subsets belong to different posets")

    def __and__(self, other):
        self._check_owner(other)
        return Subset(self.owner, self.mask & other.mask)

    def __or__(self, other):
        self._check_owner(other)
        return Subset(self.owner, self.mask | other.mask)

    def __sub__(self, other):
        self._check_owner(other)
        return Subset(self.owner, self.mask & ~other.mask)

    def issubset(self, other):
        self._check_owner(other)
        return not (self.mask & ~other.mask)

    # -- rendering ----------------------------------------------------
    @property
    def indices(self):
        return tuple(_bits(self.mask))

    @property
    def labels(self):
        lab = self.owner.labels
        return tuple(lab[i] for i in _bits(self.mask))

    def render(self):
        return "{" + ", ".join(self.labels) + "}"

    def __repr__(self):
        return f"Subset({self.render()})"


class Poset:
    """A finite partially ordered set with named elements."""

    __slots__ = ("labels", "n", "_up", "_down", "_index", "_full")

    def __init__(self, labels, up_masks, *, _validated=False):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise UsageError("duplicate element names")
        n = len(labels)
        up = tuple(up_masks)
        if len(up) != n:
            raise UsageError("relation size does not match element count")
        full = (1 << n) - 1
        if not _validated:
            _validate_order(up, n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_up", up)
        down = [0] * n
        for x in range(n):
            m = up[x]
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << x
                m ^= low
        object.__setattr__(self, "_down", tuple(down))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(labels)})
        object.__setattr__(self, "_full", full)

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    # -- construction --------------------------------------------------
    @classmethod
    def from_covers(cls, labels, covers):
        """Build a poset from cover pairs; the reflexive-transitive closure
        is computed and antisymmetry validated afterwards."""
        labels = tuple(labels)
        index = {name: i for i, name in enumerate(labels)}
        n = len(labels)
        up = [1 << x for x in range(n)]
        for lo, hi in covers:
            try:
                a = index[lo] if isinstance(lo, str) else lo
                b = index[hi] if isinstance(hi, str) else hi
            except KeyError as missing:
                raise UsageError(f"unknown element name {missing.args[0]!r} "
                                 f"in cover ({lo}, {hi})") from None
            if not (0 <= a < n and 0 <= b < n):
                raise UsageError(f"cover ({lo}, {hi}) out of range")
            up[a] |= 1 << b
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= up[k]
        return cls(labels, up)

    @classmethod
    def from_relation(cls, labels, leq_pairs):
        """Build a poset from an explicit <= relation given as index or
        name pairs; reflexivity is added, the other axioms are validated."""
        labels = tuple(labels)
        index = {name: i for i, name in enumerate(labels)}
        n = len(labels)
        up = [1 << x for x in range(n)]
        for lo, hi in leq_pairs:
            a = index[lo] if isinstance(lo, str) else lo
            b = index[hi] if isinstance(hi, str) else hi
            up[a] |= 1 << b
        return cls(labels, up)

    # -- basic queries ---------------------------------------------------
    def index(self, item):
        if isinstance(item, str):
            try:
                return self._index[item]
            except KeyError:
                raise UsageError(f"unknown element name {item!r}") from None
        if not isinstance(item, int) or not (0 <= item < self.n):
            raise UsageError(f"element index {item!r} out of range")
        return item

    def label(self, x):
        return self.labels[x]

    def leq(self, x, y):
        return bool((self._up[self.index(x)] >> self.index(y)) & 1)

    def lt(self, x, y):
        x, y = self.index(x), self.index(y)
        return x != y and bool((self._up[x] >> y) & 1)

    def incomparable(self, x, y):
        x, y = self.index(x), self.index(y)
        return not ((self._up[x] >> y) & 1 or (self._up[y] >> x) & 1)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self._up == other._up

    def __hash__(self):
        return hash((self.labels, self._up))

    def __repr__(self):
        return f"Poset({self.n} elements: {', '.join(self.labels)})"

    # -- subsets ---------------------------------------------------------
    def _mask_of(self, items):
        if isinstance(items, Subset):
            if items.owner is not self:
                raise UsageError("subset belongs to a different poset")
            return items.mask
        if isinstance(items, (str, int)):
            return 1 << self.index(items)
        mask = 0
        for item in items:
            mask |= 1 << self.index(item)
        return mask

    def subset(self, items=()):
        return Subset(self, self._mask_of(items))

    @property
    def empty(self):
        return Subset(self, 0)

    @property
    def full(self):
        return Subset(self, self._full)

    # -- cone calculus -----------------------------------------------------
    def _lower(self, mask):
        res = self._full
        down = self._down
        while mask and res:
            low = mask & -mask
            res &= down[low.bit_length() - 1]
            mask ^= low
        return res if mask == 0 else 0

    def _upper(self, mask):
        res = self._full
        up = self._up
        while mask and res:
            low = mask & -mask
            res &= up[low.bit_length() - 1]
            mask ^= low
        return res if mask == 0 else 0

    def lower_cone(self, items):
        """L(A): common lower bounds of A.  L({}) is the full carrier."""
        return Subset(self, self._lower(self._mask_of(items)))

    def upper_cone(self, items):
        """U(A): common upper bounds of A.  U({}) is the full carrier."""
        return Subset(self, self._upper(self._mask_of(items)))

    def _leq_set(self, amask, bmask):
        up = self._up
        while amask:
            low = amask & -amask
            if bmask & ~up[low.bit_length() - 1]:
                return False
            amask ^= low
        return True

    def leq_set(self, a, b):
        """Set order: every element of ``a`` below every element of ``b``
        (vacuously true when either side is empty)."""
        return self._leq_set(self._mask_of(a), self._mask_of(b))

    # -- structure predicates ----------------------------------------------
    def is_downward_directed(self):
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if not (self._down[x] & self._down[y]):
                    return False
        return True

    def bounds(self):
        """Return (bottom, top) element indices, each ``None`` if absent."""
        bottom = top = None
        for x in range(self.n):
            if self._up[x] == self._full:
                bottom = x
            if self._down[x] == self._full:
                top = x
        return bottom, top

    def covers(self):
        """Cover pairs (x, y) with x covered by y, in index order."""
        out = []
        for x in range(self.n):
            strict = self._up[x] & ~(1 << x)
            above = 0
            for z in _bits(strict):
                above |= self._up[z] & ~(1 << z)
            for y in _bits(strict & ~above):
                out.append((x, y))
        return out

    def _minimal_of(self, mask):
        res = []
        for x in _bits(mask):
            if not (self._down[x] & ~(1 << x) & mask):
                res.append(x)
        return res

    def _maximal_of(self, mask):
        res = []
        for x in _bits(mask):
            if not (self._up[x] & ~(1 << x) & mask):
                res.append(x)
        return res

    def _least_of(self, mask):
        for x in _bits(mask):
            if not (mask & ~self._up[x]):
                return x
        return None

    def _greatest_of(self, mask):
        for x in _bits(mask):
            if not (mask & ~self._down[x]):
                return x
        return None

    def join(self, x, y):
        """Least upper bound index, or ``None`` if it does not exist."""
        return self._least_of(self._up[self.index(x)] & self._up[self.index(y)])

    def meet(self, x, y):
        return self._greatest_of(self._down[self.index(x)] & self._down[self.index(y)])

    def is_lattice(self):
        """Every pair has a least upper and greatest lower bound."""
        lab = self.labels
        for x in range(self.n):
            for y in range(x + 1, self.n):
                um = self._up[x] & self._up[y]
                if self._least_of(um) is None:
                    if um:
                        cands = "{" + ", ".join(lab[m] for m in self._minimal_of(um)) + "}"
                        detail = (f"{{{lab[x]}, {lab[y]}}} has no least upper bound "
                                  f"(minimal upper bounds: {cands})")
                    else:
                        detail = f"{{{lab[x]}, {lab[y]}}} has no common upper bound"
                    return Verdict(False, (x, y), detail)
                lm = self._down[x] & self._down[y]
                if self._greatest_of(lm) is None:
                    if lm:
                        cands = "{" + ", ".join(lab[m] for m in self._maximal_of(lm)) + "}"
                        detail = (f"{{{lab[x]}, {lab[y]}}} has no greatest lower bound "
                                  f"(maximal lower bounds: {cands})")
                    else:
                        detail = f"{{{lab[x]}, {lab[y]}}} has no common lower bound"
                    return Verdict(False, (x, y), detail)
        return Verdict(True)

    def _distributive_sides(self, form, bx, by, bz):
        L, U = self._lower, self._upper
        if form == "LU":
            return (L(U(bx | by) | bz), L(U(L(bx | bz) | L(by | bz))))
        if form == "ULU":
            return (U(L(U(bx | by) | bz)), U(L(bx | bz) | L(by | bz)))
        if form == "UL":
            return (U(L(bx | by) | bz), U(L(U(bx | bz) | U(by | bz))))
        if form == "LUL":
            return (L(U(L(bx | by) | bz)), L(U(bx | bz) | U(by | bz)))
        raise UsageError(f"unknown distributivity form {form!r}; "
                         f"expected one of {DISTRIBUTIVITY_FORMS}")

    def is_distributive(self, form="LU"):
        """Check the selected distributivity identity on all element
        triples; the witness is the first failing triple in index order."""
        if form not in DISTRIBUTIVITY_FORMS:
            raise UsageError(f"unknown distributivity form {form!r}; "
                             f"expected one of {DISTRIBUTIVITY_FORMS}")
        rng = range(self.n)
        for x in rng:
            bx = 1 << x
            for y in rng:
                by = 1 << y
                for z in rng:
                    lhs, rhs = self._distributive_sides(form, bx, by, 1 << z)
                    if lhs != rhs:
                        lab = self.labels
                        detail = (f"form {form} fails at ({lab[x]}, {lab[y]}, {lab[z]}): "
                                  f"lhs = {Subset(self, lhs).render()}, "
                                  f"rhs = {Subset(self, rhs).render()}")
                        return Verdict(False, (x, y, z), detail)
        return Verdict(True)

    def distributivity_all_forms(self):
        """Evaluate all four distributivity identities."""
        return {form: self.is_distributive(form) for form in DISTRIBUTIVITY_FORMS}


def _validate_order(up, n):
    full = (1 << n) - 1
    for x in range(n):
        if up[x] & ~full:
            raise UsageError("relation mask out of range")
        if not (up[x] >> x) & 1:
            raise UsageError(f"relation is not reflexive at index {x}")
    for x in range(n):
        m = up[x] & ~(1 << x)
        for y in _bits(m):
            if (up[y] >> x) & 1:
                raise UsageError(f"relation is not antisymmetric on ({x}, {y})")
            if up[y] & ~up[x]:
                raise UsageError(f"relation is not transitive at ({x}, {y})")


def _refine_colors(poset, inv=None):
    """Iteratively refined isomorphism-invariant colouring."""
    n = poset.n
    colors = [
        (poset._down[x].bit_count(), poset._up[x].bit_count(),
         -1 if inv is None else (0 if inv[x] == x else 1))
        for x in range(n)
    ]
    while True:
        sigs = []
        for x in range(n):
            below = tuple(sorted(colors[y] for y in _bits(poset._down[x] & ~(1 << x))))
            above = tuple(sorted(colors[y] for y in _bits(poset._up[x] & ~(1 << x))))
            mate = colors[inv[x]] if inv is not None else 0
            sigs.append((colors[x], below, above, mate))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def find_isomorphism(p, q, p_inv=None, q_inv=None):
    """Return a mapping tuple f with f[x] in q for x in p preserving the
    order both ways (and commuting with the involutions when given), or
    ``None`` when no isomorphism exists."""
    if (p_inv is None) != (q_inv is None):
        raise UsageError("either both involutions or neither must be given")
    if p.n != q.n:
        return None
    pc = _refine_colors(p, p_inv)
    qc = _refine_colors(q, q_inv)
    if sorted(pc) != sorted(qc):
        return None
    cands = [[y for y in range(q.n) if qc[y] == pc[x]] for x in range(p.n)]
    order = sorted(range(p.n), key=lambda x: len(cands[x]))
    mapping = [None] * p.n
    used = [False] * q.n

    def extend(pos):
        if pos == p.n:
            return True
        x = order[pos]
        for y in cands[x]:
            if used[y]:
                continue
            ok = True
            for z in range(p.n):
                fz = mapping[z]
                if fz is None:
                    continue
                if p.leq(x, z) != q.leq(y, fz) or p.leq(z, x) != q.leq(fz, y):
                    ok = False
                    break
            if ok and p_inv is not None:
                mx = mapping[p_inv[x]]
                if mx is not None and mx != q_inv[y]:
                    ok = False
                if p_inv[x] == x and q_inv[y] != y:
                    ok = False
            if ok:
                mapping[x] = y
                used[y] = True
                if extend(pos + 1):
                    return True
                mapping[x] = None
                used[y] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None


def are_isomorphic(p, q, p_inv=None, q_inv=None):
    return find_isomorphism(p, q, p_inv=p_inv, q_inv=q_inv) is not None
