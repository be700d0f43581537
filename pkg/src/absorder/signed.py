"""Signed permutations: the arithmetic core behind S_n, B_n and D_n.

An element of the hyperoctahedral group B_n is a permutation w of
{-n, ..., -1, 1, ..., n} satisfying w(-i) = -w(i).  It is stored as the
tuple (w(1), ..., w(n)); the negative half is implied.  The symmetric
group S_n sits inside B_n as the sign-free elements, and D_n as the
elements with an even number of balanced cycles, so one representation
serves all three groups.

Cycle conventions used throughout:

* a paired cycle ((a1,...,ak)) is the product (a1 ... ak)(-a1 ... -ak)
  of two mirrored k-cycles; its reflection length is k - 1;
* a balanced cycle [a1,...,ak] is the single 2k-cycle
  (a1 ... ak -a1 ... -ak); its reflection length is k.

Canonical form of a cycle word: rotate so the entry of smallest absolute
value comes first, and take that entry positive.  Composition is right
to left: (u * v)(i) = u(v(i)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class CycleNotationError(ValueError):
    """Raised on malformed cycle notation; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SignedPermutation:
    """A signed permutation, hashable and immutable."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Apply to a signed point i with 1 <= |i| <= n."""
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (u * v)(i) = u(v(i))."""
        return SignedPermutation(self(x) for x in other.images)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            if j > 0:
                inv[j - 1] = i
            else:
                inv[-j - 1] = -i
        return SignedPermutation(inv)

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return format_cycles(self)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(range(1, n + 1))


@dataclass(frozen=True)
class Cycle:
    """A canonical cycle word; kind is 'balanced' or 'paired'."""

    kind: str
    entries: tuple

    def __post_init__(self):
        if self.kind not in ("balanced", "paired"):
            raise ValueError(f"unknown cycle kind {self.kind!r}")

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def reflection_length(self) -> int:
        if self.kind == "balanced":
            return len(self.entries)
        return len(self.entries) - 1

    @property
    def support(self) -> frozenset:
        return frozenset(abs(a) for a in self.entries)

    def __str__(self) -> str:
        inner = ",".join(str(a) for a in self.entries)
        if self.kind == "balanced":
            return f"[{inner}]"
        return f"(({inner}))"


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycle form: nontrivial cycles plus the fixed points."""

    cycles: tuple
    fixed_points: frozenset

    @property
    def balanced(self) -> tuple:
        return tuple(c for c in self.cycles if c.kind == "balanced")

    @property
    def paired(self) -> tuple:
        return tuple(c for c in self.cycles if c.kind == "paired")


def _canonical_word(word, kind):
    """Rotate/negate a cycle word so min |entry| leads with positive sign."""
    k = len(word)
    lead = min(range(k), key=lambda i: abs(word[i]))
    word = word[lead:] + word[:lead]
    if word[0] < 0:
        word = tuple(-a for a in word)
    return tuple(word)


def cycle_decomposition(w: SignedPermutation) -> CycleDecomposition:
    """Split w into balanced and paired cycles (fixed points set aside).

    A balanced cycle is an orbit of w on {±1,...,±n} that is closed under
    negation; a paired cycle is one of a mirrored orbit pair.  Balanced
    1-cycles [i] (sign flips) count as nontrivial cycles.
    """
    seen = set()
    cycles = []
    fixed = []
    for start in range(1, w.n + 1):
        if start in seen or -start in seen:
            continue
        orbit = [start]
        x = w(start)
        while x != start and x != -start:
            orbit.append(x)
            x = w(x)
        for a in orbit:
            seen.add(abs(a))
        if x == -start:
            cycles.append(Cycle("balanced", _canonical_word(tuple(orbit), "balanced")))
        elif len(orbit) == 1:
            fixed.append(start)
        else:
            cycles.append(Cycle("paired", _canonical_word(tuple(orbit), "paired")))
    cycles.sort(key=lambda c: min(c.support))
    return CycleDecomposition(tuple(cycles), frozenset(fixed))


def from_cycles(words, n: int) -> SignedPermutation:
    """Build a signed permutation from disjoint cycle words.

    `words` is an iterable of (kind, entries) pairs.  Supports must be
    disjoint and contained in {1..n}.
    """
    images = list(range(1, n + 1))
    used = set()
    for kind, entries in words:
        entries = tuple(entries)
        if not entries:
            continue
        for a in entries:
            if a == 0 or abs(a) > n:
                raise ValueError(f"entry {a} out of range for n={n}")
            if abs(a) in used:
                raise ValueError(f"entry {abs(a)} appears in two cycles")
            used.add(abs(a))
        for i, a in enumerate(entries):
            if i + 1 < len(entries):
                nxt = entries[i + 1]
            elif kind == "balanced":
                nxt = -entries[0]
            else:
                nxt = entries[0]
            if a > 0:
                images[a - 1] = nxt
            else:
                images[-a - 1] = -nxt
    return SignedPermutation(images)


def balanced_cycle(entries, n: int) -> SignedPermutation:
    return from_cycles([("balanced", tuple(entries))], n)


def paired_cycle(entries, n: int) -> SignedPermutation:
    return from_cycles([("paired", tuple(entries))], n)


def format_cycles(w: SignedPermutation) -> str:
    """Serialize in cycle notation; the identity prints as 'e'."""
    dec = cycle_decomposition(w)
    if not dec.cycles:
        return "e"
    return "".join(str(c) for c in dec.cycles)


def _parse_int(text, pos):
    start = pos
    if pos < len(text) and text[pos] in "+-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or not text[start:pos].lstrip("+-"):
        raise CycleNotationError("expected an integer", start)
    return int(text[start:pos]), pos


def parse_cycles(text: str, n: int) -> SignedPermutation:
    """Parse cycle notation: balanced `[a1,a2]`, paired `((a1,a2))`, identity `e`.

    Whitespace is allowed between tokens.  Entries must be nonzero, have
    absolute value at most n, and no absolute value may repeat.
    """
    words = []
    pos = 0
    stripped = text.strip()
    if stripped == "e" or stripped == "":
        return identity(n)
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text.startswith("((", pos):
            kind, closer = "paired", "))"
            pos += 2
        elif text[pos] == "[":
            kind, closer = "balanced", "]"
            pos += 1
        elif text[pos] == "(":
            raise CycleNotationError("paired cycles need doubled parentheses", pos)
        else:
            raise CycleNotationError(f"unexpected character {text[pos]!r}", pos)
        entries = []
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            value, pos = _parse_int(text, pos)
            if value == 0:
                raise CycleNotationError("cycle entries must be nonzero", pos - 1)
            if abs(value) > n:
                raise CycleNotationError(f"entry {value} exceeds n={n}", pos - 1)
            entries.append(value)
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if text.startswith(closer, pos):
                pos += len(closer)
                break
            raise CycleNotationError(f"expected ',' or {closer!r}", pos)
        words.append((kind, tuple(entries)))
    try:
        return from_cycles(words, n)
    except ValueError as exc:
        raise CycleNotationError(str(exc), 0) from exc


KINDS = ("S", "B", "D")


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"unknown group kind {kind!r}")


def is_member(w: SignedPermutation, kind: str) -> bool:
    """Membership test: S = sign-free, D = evenly many balanced cycles."""
    _check_kind(kind)
    if kind == "B":
        return True
    if kind == "S":
        return all(j > 0 for j in w.images)
    return len(cycle_decomposition(w).balanced) % 2 == 0


def gamma(w: SignedPermutation) -> int:
    """Number of paired cycles, counting each fixed point as a paired 1-cycle."""
    dec = cycle_decomposition(w)
    return len(dec.paired) + len(dec.fixed_points)


def absolute_length(w: SignedPermutation, kind: str = "B") -> int:
    """Reflection length: n minus the number of paired cycles.

    The same count is correct for all three groups; for S_n every cycle is
    paired and for D_n the length is the restriction of the B_n length.
    """
    _check_kind(kind)
    if not is_member(w, kind):
        raise ValueError(f"{w!r} is not in kind {kind}")
    return w.n - gamma(w)


def reflection_set(kind: str, n: int) -> tuple:
    """All reflections of the group, as permutations.

    B_n: the n sign flips [i] plus ((i,j)) and ((i,-j)) for i<j (n^2 total);
    D_n drops the sign flips; S_n keeps only the plain transpositions.
    """
    _check_kind(kind)
    refs = []
    if kind == "B":
        refs.extend(balanced_cycle((i,), n) for i in range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            refs.append(paired_cycle((i, j), n))
            if kind != "S":
                refs.append(paired_cycle((i, -j), n))
    return tuple(refs)


def mu_partition(w: SignedPermutation) -> tuple:
    """Lengths of the balanced cycles of w, weakly decreasing."""
    return tuple(sorted((c.length for c in cycle_decomposition(w).balanced), reverse=True))


def is_hook(mu: tuple) -> bool:
    """True when mu is empty or of the form (k, 1, 1, ..., 1)."""
    return all(part == 1 for part in mu[1:])


def coxeter_elements(kind: str, n: int):
    """Yield the Coxeter elements, deduplicated as permutations.

    S_n: the n-cycles; B_n: the balanced n-cycles; D_n: the products
    [a1,...,a_{n-1}][a_n] of a balanced (n-1)-cycle and a sign flip.
    """
    _check_kind(kind)
    if kind == "S":
        if n < 2:
            return
        for rest in itertools.permutations(range(2, n + 1)):
            yield paired_cycle((1,) + rest, n)
        return
    if kind == "B":
        for rest in itertools.permutations(range(2, n + 1)):
            for signs in itertools.product((1, -1), repeat=n - 1):
                yield balanced_cycle((1,) + tuple(s * a for s, a in zip(signs, rest)), n)
        return
    if n < 2:
        return
    seen = set()
    for single in range(1, n + 1):
        others = [a for a in range(1, n + 1) if a != single]
        lead, rest_pool = others[0], others[1:]
        for rest in itertools.permutations(rest_pool):
            for signs in itertools.product((1, -1), repeat=len(rest)):
                word = (lead,) + tuple(s * a for s, a in zip(signs, rest))
                w = from_cycles([("balanced", word), ("balanced", (single,))], n)
                if w not in seen:
                    seen.add(w)
                    yield w


def group_elements(kind: str, n: int):
    """Iterate over every element of the group (desk scale only)."""
    _check_kind(kind)
    for perm in itertools.permutations(range(1, n + 1)):
        if kind == "S":
            yield SignedPermutation(perm)
            continue
        for signs in itertools.product((1, -1), repeat=n):
            w = SignedPermutation(s * a for s, a in zip(signs, perm))
            if kind == "B" or is_member(w, "D"):
                yield w


def group_order(kind: str, n: int) -> int:
    import math

    if kind == "S":
        return math.factorial(n)
    if kind == "B":
        return (2 ** n) * math.factorial(n)
    return (2 ** (n - 1)) * math.factorial(n)


def exponents(kind: str, n: int) -> tuple:
    """Exponents e_1..e_n; the rank sizes of Abs are the coefficients of
    prod_i (1 + e_i t)."""
    _check_kind(kind)
    if kind == "S":
        return tuple(range(1, n))
    if kind == "B":
        return tuple(range(1, 2 * n, 2))
    return tuple(range(1, 2 * n - 2, 2)) + (n - 1,)
