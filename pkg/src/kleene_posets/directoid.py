"""Commutative meet-directoids assigned to downward directed posets.

An *assignment* turns a downward directed poset P into a groupoid
``(P, ⊓)``: comparable pairs meet at their minimum, and every
incomparable pair {x, y} gets one chosen element of L(x, y).  The induced
order ``x <= y  iff  x ⊓ y = x`` recovers P exactly.  When P carries a
unary map, the dual operation is ``x ⊔ y = (x' ⊓ y')'``.

The identity / implication checkers evaluate the following conditions on
the operation tables only (never on the source poset), so they can serve
as one side of the equivalence audits:

  (1)  x'' = x
  (2)  (x ⊓ y)' ⊓ y' = y'
  (3)  (z ⊓ x) ⊓ (z ⊓ x')  <=  (w ⊔ y) ⊔ (w ⊔ y')
  (4)  [forall t: w ⊓ ((t⊔x)⊔(t⊔y)) = w], w ⊓ z = w,
       [forall t: s ⊔ ((t⊓x)⊓(t⊓z)) = s] and
       [forall t: s ⊔ ((t⊓y)⊓(t⊓z)) = s]   imply   w <= s
  (5)  x != x ⊓ y != y and x ⊓ z = x' ⊓ z = z
       imply y ⊓ z = y' ⊓ z = z
  (6)  the same implication restricted to x, y outside the bounds

where ``<=`` always means the induced order (read off the table).
Witnesses are deterministic: the checkers scan in a fixed order and
report the first violation they encounter.
"""

from __future__ import annotations

import itertools

from .errors import DomainError, UsageError
from .involution import InvolutivePoset
from .poset import Poset, Verdict, _bits


def default_chooser(x, y, candidates):
    """Pick the candidate with the lowest canonical index."""
    return candidates[0]


def _split_source(source):
    if isinstance(source, InvolutivePoset):
        return source.base, source.inv
    if isinstance(source, Poset):
        return source, None
    raise UsageError("source must be a Poset or InvolutivePoset")


def _base_table(p):
    """Comparable part of the meet table plus the incomparable pairs with
    their candidate meets (in canonical order)."""
    n = p.n
    table = [[-1] * n for _ in range(n)]
    pairs = []
    for x in range(n):
        table[x][x] = x
        for y in range(x + 1, n):
            if p.leq(x, y):
                table[x][y] = table[y][x] = x
            elif p.leq(y, x):
                table[x][y] = table[y][x] = y
            else:
                cands = tuple(_bits(p._down[x] & p._down[y]))
                if not cands:
                    raise DomainError(
                        f"poset is not downward directed: "
                        f"{p.labels[x]} and {p.labels[y]} have no common lower bound")
                pairs.append(((x, y), cands))
    return table, pairs


class MeetDirectoid:
    """A groupoid table, optionally with a unary map, on named elements."""

    __slots__ = ("n", "labels", "meet", "inv", "_join", "_i12")

    def __init__(self, meet, inv=None, labels=None):
        meet = tuple(tuple(row) for row in meet)
        n = len(meet)
        for row in meet:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise UsageError("meet table is not a total binary operation")
        if labels is None:
            labels = tuple(f"x{i}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise UsageError("label count does not match table size")
        if inv is not None:
            inv = tuple(inv)
            if len(inv) != n or any(not (0 <= v < n) for v in inv):
                raise UsageError("unary map is not total on the carrier")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "meet", meet)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "_join", None)
        object.__setattr__(self, "_i12", None)

    def __setattr__(self, name, value):
        raise AttributeError("MeetDirectoid is immutable")

    def meet_of(self, x, y):
        return self.meet[x][y]

    # -- directoid axioms -------------------------------------------------
    def check_directoid_axioms(self):
        """Idempotency, commutativity and the weak associativity
        (x ⊓ (y ⊓ z)) ⊓ z = x ⊓ (y ⊓ z)."""
        meet = self.meet
        lab = self.labels
        rng = range(self.n)
        for x in rng:
            if meet[x][x] != x:
                return Verdict(False, ("idempotency", x),
                               f"{lab[x]} meet {lab[x]} = {lab[meet[x][x]]}")
        for x in rng:
            for y in rng:
                if meet[x][y] != meet[y][x]:
                    return Verdict(False, ("commutativity", x, y),
                                   f"{lab[x]} meet {lab[y]} = {lab[meet[x][y]]} but "
                                   f"{lab[y]} meet {lab[x]} = {lab[meet[y][x]]}")
        for x in rng:
            row_x = meet[x]
            for y in rng:
                row_y = meet[y]
                for z in rng:
                    m = row_x[row_y[z]]
                    if meet[m][z] != m:
                        return Verdict(
                            False, ("weak associativity", x, y, z),
                            f"(({lab[x]} meet ({lab[y]} meet {lab[z]})) meet {lab[z]}) "
                            f"= {lab[meet[m][z]]} != {lab[m]}")
        return Verdict(True)

    def induced_poset(self):
        """The order x <= y iff x ⊓ y = x; domain error when the table
        does not induce a partial order."""
        meet = self.meet
        n = self.n
        up = []
        for x in range(n):
            m = 0
            row = meet[x]
            for y in range(n):
                if row[y] == x:
                    m |= 1 << y
            up.append(m)
        try:
            return Poset(self.labels, up)
        except UsageError as exc:
            raise DomainError(f"induced relation is not a partial order: {exc}") from None

    # -- the dual operation --------------------------------------------------
    def _require_inv(self):
        if self.inv is None:
            raise UsageError("operation requires the unary map")

    def join_table(self):
        """x ⊔ y = (x' ⊓ y')'; requires an involutive unary map."""
        self._require_inv()
        cached = self._join
        if cached is not None:
            return cached
        inv = self.inv
        for x in range(self.n):
            if inv[inv[x]] != x:
                raise UsageError("join requires an involutive unary map (x'' = x)")
        meet = self.meet
        join = tuple(tuple(inv[meet[inv[x]][inv[y]]] for y in range(self.n))
                     for x in range(self.n))
        object.__setattr__(self, "_join", join)
        return join

    def join_of(self, x, y):
        return self.join_table()[x][y]

    # -- identities ---------------------------------------------------------
    def check_identities_1_2(self):
        """(1) x'' = x and (2) (x ⊓ y)' ⊓ y' = y'."""
        self._require_inv()
        cached = self._i12
        if cached is not None:
            return cached
        meet, inv, lab = self.meet, self.inv, self.labels
        verdict = Verdict(True)
        for x in range(self.n):
            if inv[inv[x]] != x:
                verdict = Verdict(False, ("(1)", x),
                                  f"(1) fails: {lab[x]}'' = {lab[inv[inv[x]]]}")
                break
        else:
            for x in range(self.n):
                row = meet[x]
                for y in range(self.n):
                    iy = inv[y]
                    if meet[inv[row[y]]][iy] != iy:
                        verdict = Verdict(
                            False, ("(2)", x, y),
                            f"(2) fails at ({lab[x]}, {lab[y]}): "
                            f"({lab[x]} meet {lab[y]})' meet {lab[y]}' = "
                            f"{lab[meet[inv[row[y]]][iy]]} != {lab[iy]}")
                        break
                else:
                    continue
                break
        object.__setattr__(self, "_i12", verdict)
        return verdict

    def _require_identities_1_2(self):
        verdict = self.check_identities_1_2()
        if not verdict.ok:
            raise UsageError(f"operation requires identities (1) and (2); {verdict.detail}")

    def _above_masks(self):
        """above[w] = bitmask of {s | w <= s} in the induced order."""
        meet = self.meet
        out = []
        for w in range(self.n):
            row = meet[w]
            m = 0
            for s in range(self.n):
                if row[s] == w:
                    m |= 1 << s
            out.append(m)
        return out

    def check_identity_3(self):
        """(z ⊓ x) ⊓ (z ⊓ x') <= (w ⊔ y) ⊔ (w ⊔ y') for all
        x, y, z, w; witness is the first failing (x, y, z, w)."""
        self._require_identities_1_2()
        meet, inv = self.meet, self.inv
        join = self.join_table()
        n = self.n
        above = self._above_masks()
        lmask = rmask = 0
        for z in range(n):
            mz = meet[z]
            for x in range(n):
                lmask |= 1 << meet[mz[x]][mz[inv[x]]]
        for w in range(n):
            jw = join[w]
            for y in range(n):
                rmask |= 1 << join[jw[y]][jw[inv[y]]]
        for low in _bits(lmask):
            if rmask & ~above[low]:
                break
        else:
            return Verdict(True)
        lab = self.labels
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    lhs = meet[meet[z][x]][meet[z][inv[x]]]
                    for w in range(n):
                        rhs = join[join[w][y]][join[w][inv[y]]]
                        if meet[lhs][rhs] != lhs:
                            return Verdict(
                                False, (x, y, z, w),
                                f"(3) fails at (x,y,z,w) = ({lab[x]}, {lab[y]}, "
                                f"{lab[z]}, {lab[w]}): {lab[lhs]} !<= {lab[rhs]}")
        raise AssertionError("identity (3) fast path and rescan disagree")

    def check_implication_4(self):
        """The distributivity implication; witness is the first violating
        (w, s, x, y, z) in the checker's scan order."""
        self._require_identities_1_2()
        meet = self.meet
        join = self.join_table()
        n = self.n
        above = self._above_masks()
        # below[u] = {w | w meet u = w};  sfix[l] = {s | s join l = s}
        below = [0] * n
        for w in range(n):
            row = meet[w]
            for u in range(n):
                if row[u] == w:
                    below[u] |= 1 << w
        sfix = [0] * n
        for s in range(n):
            row = join[s]
            for l in range(n):
                if row[l] == s:
                    sfix[l] |= 1 << s
        full = (1 << n) - 1
        wset = [[0] * n for _ in range(n)]   # {w | forall t: w meet ((t v x) v (t v y)) = w}
        sset = [[0] * n for _ in range(n)]   # {s | forall t: s join ((t ^ x) ^ (t ^ z)) = s}
        rng = range(n)
        for x in rng:
            for y in rng:
                um = 0
                lm = 0
                for t in rng:
                    jt = join[t]
                    um |= 1 << join[jt[x]][jt[y]]
                    mt = meet[t]
                    lm |= 1 << meet[mt[x]][mt[y]]
                acc = full
                for u in _bits(um):
                    acc &= below[u]
                    if not acc:
                        break
                wset[x][y] = acc
                acc = full
                for l in _bits(lm):
                    acc &= sfix[l]
                    if not acc:
                        break
                sset[x][y] = acc
        lab = self.labels
        for x in rng:
            wrow = wset[x]
            srow = sset[x]
            for y in rng:
                wxy = wrow[y]
                if not wxy:
                    continue
                sy = sset[y]
                for z in rng:
                    wc = wxy & below[z]
                    if not wc:
                        continue
                    sc = srow[z] & sy[z]
                    if not sc:
                        continue
                    for w in _bits(wc):
                        bad = sc & ~above[w]
                        if bad:
                            s = (bad & -bad).bit_length() - 1
                            return Verdict(
                                False, (w, s, x, y, z),
                                f"(4) fails at (w,s,x,y,z) = ({lab[w]}, {lab[s]}, "
                                f"{lab[x]}, {lab[y]}, {lab[z]}): premises hold "
                                f"but {lab[w]} !<= {lab[s]}")
        return Verdict(True)

    def _shared_lower_body(self, xs, ys, require_incomparable):
        meet, inv, lab = self.meet, self.inv, self.labels
        rng = range(self.n)
        for x in xs:
            ix = inv[x]
            for y in ys:
                if require_incomparable:
                    m = meet[x][y]
                    if m == x or m == y:
                        continue
                iy = inv[y]
                for z in rng:
                    if meet[x][z] == z and meet[ix][z] == z:
                        if meet[y][z] != z or meet[iy][z] != z:
                            return Verdict(
                                False, (x, y, z),
                                f"fails at (x,y,z) = ({lab[x]}, {lab[y]}, {lab[z]}): "
                                f"z <= x and z <= x' but not (z <= y and z <= y')")
        return Verdict(True)

    def check_implication_5(self):
        """x != x ⊓ y != y and x ⊓ z = x' ⊓ z = z imply
        y ⊓ z = y' ⊓ z = z."""
        self._require_inv()
        rng = range(self.n)
        verdict = self._shared_lower_body(rng, rng, require_incomparable=True)
        if not verdict.ok:
            return Verdict(False, verdict.witness, f"(5) {verdict.detail}")
        return verdict

    def check_implication_6(self, bottom, top):
        """x, y outside the designated bounds and x ⊓ z = x' ⊓ z = z
        imply y ⊓ z = y' ⊓ z = z.  Unlike (5) there is no
        incomparability premise.  The bounds must really bound the
        induced order."""
        self._require_inv()
        meet = self.meet
        if isinstance(bottom, str):
            bottom = self.labels.index(bottom)
        if isinstance(top, str):
            top = self.labels.index(top)
        for x in range(self.n):
            if meet[bottom][x] != bottom or meet[top][x] != x:
                raise UsageError("designated bounds do not bound the induced order")
        inner = [x for x in range(self.n) if x not in (bottom, top)]
        verdict = self._shared_lower_body(inner, inner, require_incomparable=False)
        if not verdict.ok:
            return Verdict(False, verdict.witness, f"(6) {verdict.detail}")
        return verdict

    def __repr__(self):
        return f"MeetDirectoid({self.n} elements)"


# -- assignments ------------------------------------------------------------

def assignment_pairs(source):
    """The incomparable pairs and their candidate meets, canonical order."""
    p, _ = _split_source(source)
    return _base_table(p)[1]


def assignment_count(source):
    p, _ = _split_source(source)
    count = 1
    for _, cands in _base_table(p)[1]:
        count *= len(cands)
    return count


def assign_directoid(source, chooser=default_chooser):
    """Assign one meet table; ``chooser(x, y, candidates)`` is consulted
    once per incomparable pair {x, y} (x < y canonically)."""
    p, inv = _split_source(source)
    table, pairs = _base_table(p)
    for (x, y), cands in pairs:
        pick = chooser(x, y, cands)
        if pick not in cands:
            raise UsageError(
                f"chooser picked {pick!r} outside L({p.labels[x]}, {p.labels[y]})")
        table[x][y] = table[y][x] = pick
    return MeetDirectoid(table, inv=inv, labels=p.labels)


def iter_assignments(source):
    """All assignments, lexicographic in the canonical pair/candidate
    order.  No cap: callers slice as needed."""
    p, inv = _split_source(source)
    table, pairs = _base_table(p)
    if not pairs:
        yield MeetDirectoid(table, inv=inv, labels=p.labels)
        return
    keys = [pair for pair, _ in pairs]
    for picks in itertools.product(*(cands for _, cands in pairs)):
        for (x, y), pick in zip(keys, picks):
            table[x][y] = table[y][x] = pick
        yield MeetDirectoid(table, inv=inv, labels=p.labels)


def all_assignments(source, cap=1000):
    """Materialize every assignment; domain error when the space exceeds
    the cap (the count is reported in the message)."""
    count = assignment_count(source)
    if count > cap:
        raise DomainError(f"assignment space has {count} tables, over the cap {cap}")
    return list(iter_assignments(source))


def assignment_choices(directoid, source):
    """Recover the choice made for each incomparable pair as a label map
    (used to serialize audit witnesses)."""
    p, _ = _split_source(source)
    out = {}
    for (x, y), _ in _base_table(p)[1]:
        out[f"{p.labels[x]},{p.labels[y]}"] = p.labels[directoid.meet[x][y]]
    return out


def directoid_from_choices(source, choices):
    """Rebuild an assignment from :func:`assignment_choices` output."""
    p, inv = _split_source(source)
    table, pairs = _base_table(p)
    for (x, y), cands in pairs:
        key = f"{p.labels[x]},{p.labels[y]}"
        try:
            pick = p.index(choices[key])
        except KeyError:
            raise UsageError(f"missing choice for incomparable pair {key}") from None
        if pick not in cands:
            raise UsageError(f"choice for {key} is not a common lower bound")
        table[x][y] = table[y][x] = pick
    return MeetDirectoid(table, inv=inv, labels=p.labels)


# -- derived-set laws ---------------------------------------------------------

def check_derived_set_laws(directoid, poset):
    """Cones recovered from the operation tables:

      L(x)    = {z ⊓ x | z}
      U(x)    = {z ⊔ x | z}
      L(x,y)  = {(z ⊓ x) ⊓ (z ⊓ y) | z}
      U(x,y)  = {(t ⊔ x) ⊔ (t ⊔ y) | t}

    plus the duality laws: x ⊓ y = min for comparable pairs and dually
    for ⊔; x ⊓ y = x iff x ⊔ y = y; the meet/join of an
    incomparable pair lands in the corresponding cone.
    """
    meet = directoid.meet
    join = directoid.join_table()
    n = directoid.n
    lab = directoid.labels
    poset, _ = _split_source(poset)
    if poset.n != n:
        raise UsageError("poset and directoid sizes differ")
    for x in range(n):
        got = 0
        for z in range(n):
            got |= 1 << meet[z][x]
        if got != poset._down[x]:
            return Verdict(False, ("L(x)", x),
                           f"{{z meet {lab[x]}}} != L({lab[x]})")
        got = 0
        for z in range(n):
            got |= 1 << join[z][x]
        if got != poset._up[x]:
            return Verdict(False, ("U(x)", x),
                           f"{{z join {lab[x]}}} != U({lab[x]})")
    for x in range(n):
        for y in range(n):
            got = 0
            for z in range(n):
                mz = meet[z]
                got |= 1 << meet[mz[x]][mz[y]]
            expect = poset._down[x] & poset._down[y]
            if got != expect:
                return Verdict(False, ("L(x,y)", x, y),
                               f"{{(z meet {lab[x]}) meet (z meet {lab[y]})}} != "
                               f"L({lab[x]},{lab[y]})")
            got = 0
            for t in range(n):
                jt = join[t]
                got |= 1 << join[jt[x]][jt[y]]
            expect = poset._up[x] & poset._up[y]
            if got != expect:
                return Verdict(False, ("U(x,y)", x, y),
                               f"{{(t join {lab[x]}) join (t join {lab[y]})}} != "
                               f"U({lab[x]},{lab[y]})")
    for x in range(n):
        for y in range(n):
            m, j = meet[x][y], join[x][y]
            if poset.leq(x, y):
                if m != x or j != y:
                    return Verdict(False, ("comparable", x, y),
                                   f"{lab[x]} <= {lab[y]} but meet/join differ from min/max")
            elif poset.leq(y, x):
                if m != y or j != x:
                    return Verdict(False, ("comparable", x, y),
                                   f"{lab[y]} <= {lab[x]} but meet/join differ from min/max")
            else:
                if not ((poset._down[x] >> m) & 1 and (poset._down[y] >> m) & 1):
                    return Verdict(False, ("meet-cone", x, y),
                                   f"{lab[x]} meet {lab[y]} outside L({lab[x]},{lab[y]})")
                if not ((poset._up[x] >> j) & 1 and (poset._up[y] >> j) & 1):
                    return Verdict(False, ("join-cone", x, y),
                                   f"{lab[x]} join {lab[y]} outside U({lab[x]},{lab[y]})")
            if (m == x) != (j == y):
                return Verdict(False, ("duality", x, y),
                               f"x meet y = x iff x join y = y fails at "
                               f"({lab[x]}, {lab[y]})")
    return Verdict(True)


def check_printed_u_pair_law(directoid, poset):
    """The alternative pair-cone reading U(x,y) = {(z ⊔ x) ⊓
    (z ⊔ y) | z} (inner meet).  Kept separate because the derived-set
    audit tracks which of the two readings actually holds."""
    meet = directoid.meet
    join = directoid.join_table()
    n = directoid.n
    lab = directoid.labels
    poset, _ = _split_source(poset)
    if poset.n != n:
        raise UsageError("poset and directoid sizes differ")
    for x in range(n):
        for y in range(n):
            got = 0
            for z in range(n):
                jz = join[z]
                got |= 1 << meet[jz[x]][jz[y]]
            expect = poset._up[x] & poset._up[y]
            if got != expect:
                from .poset import Subset
                return Verdict(
                    False, ("U(x,y) printed", x, y),
                    f"{{(z join {lab[x]}) meet (z join {lab[y]})}} = "
                    f"{Subset(poset, got).render()} != "
                    f"{Subset(poset, expect).render()} = U({lab[x]},{lab[y]})")
    return Verdict(True)
