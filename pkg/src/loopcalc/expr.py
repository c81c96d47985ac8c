"""Space expressions and their canonical form.

A SpaceExpr is a formal pointed-space expression built from spheres and the
point by wedge, product, smash, loop and suspension.  Expressions carry no
homotopy-theoretic smarts themselves; they are the syntax that the
normalization and decomposition layers rewrite.

canonicalize() flattens and sorts the associative-commutative nodes and
applies the point identities, so that two expressions differing only by
permutation / reassociation / unit clutter become structurally equal.

SphereWedge is the workhorse finite wedge of spheres (dimension -> finite
multiplicity, dimensions >= 2), kept separate from the expression tree
because most algorithms want the multiset, not syntax.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UsageError
from .series import TruncatedSeries


class SpaceExpr:
    """Base class; concrete nodes are the dataclasses below."""

    __slots__ = ()


@dataclass(frozen=True)
class Point(SpaceExpr):
    pass


@dataclass(frozen=True)
class Sphere(SpaceExpr):
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("sphere dimension must be >= 1")


@dataclass(frozen=True)
class Loop(SpaceExpr):
    child: SpaceExpr


@dataclass(frozen=True)
class Suspension(SpaceExpr):
    child: SpaceExpr


@dataclass(frozen=True)
class Wedge(SpaceExpr):
    children: tuple

    def __post_init__(self):
        _check_children(self.children)


@dataclass(frozen=True)
class Product(SpaceExpr):
    children: tuple

    def __post_init__(self):
        _check_children(self.children)


@dataclass(frozen=True)
class Smash(SpaceExpr):
    children: tuple

    def __post_init__(self):
        _check_children(self.children)
        if not self.children:
            raise DomainError("smash with no factors is ill-defined")


def _check_children(children):
    if not isinstance(children, tuple):
        raise DomainError("children must be a tuple")
    for c in children:
        if not isinstance(c, SpaceExpr):
            raise DomainError("child %r is not a SpaceExpr" % (c,))


POINT = Point()


def sphere(d):
    return Sphere(d)


def loop(x):
    return Loop(x)


def suspension(x):
    return Suspension(x)


def wedge(*xs):
    return Wedge(tuple(xs))


def product(*xs):
    return Product(tuple(xs))


def smash(*xs):
    return Smash(tuple(xs))


_KIND_RANK = {
    Point: 0,
    Sphere: 1,
    Loop: 2,
    Suspension: 3,
    Smash: 4,
    Wedge: 5,
    Product: 6,
}


def sort_key(e):
    """Total order on canonical expressions:
    Point < spheres (by dimension) < Loop < Suspension < Smash < Wedge <
    Product, recursing lexicographically."""
    k = _KIND_RANK[type(e)]
    if isinstance(e, Point):
        return (k,)
    if isinstance(e, Sphere):
        return (k, e.dim)
    if isinstance(e, (Loop, Suspension)):
        return (k, sort_key(e.child))
    return (k, tuple(sort_key(c) for c in e.children))


def canonicalize(e):
    """Canonical form: children canonicalized, associative nodes flattened,
    wedge/product units (the point) dropped, smash absorbed by the point,
    commutative children sorted, single-child nodes collapsed."""
    if isinstance(e, (Point, Sphere)):
        return e
    if isinstance(e, Loop):
        c = canonicalize(e.child)
        return POINT if isinstance(c, Point) else Loop(c)
    if isinstance(e, Suspension):
        c = canonicalize(e.child)
        return POINT if isinstance(c, Point) else Suspension(c)

    cls = type(e)
    flat = []
    for c in e.children:
        c = canonicalize(c)
        if isinstance(c, cls):
            flat.extend(c.children)
        else:
            flat.append(c)

    if cls is Smash:
        if any(isinstance(c, Point) for c in flat):
            return POINT
    else:
        flat = [c for c in flat if not isinstance(c, Point)]

    flat.sort(key=sort_key)
    if not flat:
        return POINT
    if len(flat) == 1:
        return flat[0]
    return cls(tuple(flat))


# ---------------------------------------------------------------------------
# finite wedges of spheres


@dataclass(frozen=True)
class SphereWedge:
    """Finite wedge of spheres as a multiset dimension -> multiplicity.

    Dimensions are >= 2 (simply connected) and multiplicities >= 1; the
    empty multiset denotes the point.  Infinite wedges never exist as
    values: they appear only truncated, and the caller carries the
    truncation flag.
    """

    items: tuple  # sorted ((dim, mult), ...)

    def __post_init__(self):
        prev = 0
        for dim, mult in self.items:
            if dim < 2:
                raise DomainError("sphere wedge dimensions must be >= 2")
            if mult < 1:
                raise DomainError("sphere wedge multiplicities must be >= 1")
            if dim <= prev:
                raise DomainError("sphere wedge items must be sorted and distinct")
            prev = dim

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((int(k), int(v)) for k, v in d.items() if v)))

    @classmethod
    def empty(cls):
        return cls(())

    def as_dict(self):
        return {dim: mult for dim, mult in self.items}

    def is_point(self):
        return not self.items

    def total(self):
        """Number of wedge summands, counted with multiplicity."""
        return sum(m for _, m in self.items)

    def union(self, other):
        d = self.as_dict()
        for dim, mult in other.items:
            d[dim] = d.get(dim, 0) + mult
        return SphereWedge.from_dict(d)

    def scaled(self, factor):
        if factor < 0:
            raise DomainError("multiplicity factor must be >= 0")
        if factor == 0:
            return SphereWedge.empty()
        return SphereWedge(tuple((d, m * factor) for d, m in self.items))

    def restrict(self, max_dim):
        """Drop summands of dimension above max_dim."""
        return SphereWedge(tuple((d, m) for d, m in self.items if d <= max_dim))

    def as_expr(self):
        if not self.items:
            return POINT
        spheres = []
        for dim, mult in self.items:
            spheres.extend([Sphere(dim)] * mult)
        return canonicalize(Wedge(tuple(spheres)))

    def to_json(self):
        return {str(dim): mult for dim, mult in self.items}

    def reduced_homology_series(self, cap):
        out = [0] * (cap + 1)
        for dim, mult in self.items:
            if dim <= cap:
                out[dim] += mult
        return TruncatedSeries(cap, out)

    def generator_series(self, cap):
        """Reduced series desuspended by one degree: the Bott-Samelson
        generator degrees for loops on this wedge."""
        out = [0] * (cap + 1)
        for dim, mult in self.items:
            if dim - 1 <= cap:
                out[dim - 1] += mult
        return TruncatedSeries(cap, out)


def sphere_wedge(d):
    """Convenience constructor from a plain dict."""
    return SphereWedge.from_dict(d)


def reduced_homology_series(w, cap):
    """Reduced homology series of a finite sphere wedge: the coefficient of
    t^d is the multiplicity of dimension d."""
    if not isinstance(w, SphereWedge):
        raise UsageError("reduced_homology_series expects a SphereWedge")
    return w.reduced_homology_series(cap)


def wedge_from_expr(e):
    """Extract a SphereWedge from a canonical wedge-of-spheres expression.

    Accepts Point (empty wedge), a single sphere of dimension >= 2, or a
    Wedge whose children are all such spheres; returns None for anything
    else so the caller can report the offending subterm.
    """
    e = canonicalize(e)
    if isinstance(e, Point):
        return SphereWedge.empty()
    if isinstance(e, Sphere):
        return SphereWedge(((e.dim, 1),)) if e.dim >= 2 else None
    if isinstance(e, Wedge):
        counts = {}
        for c in e.children:
            if not isinstance(c, Sphere) or c.dim < 2:
                return None
            counts[c.dim] = counts.get(c.dim, 0) + 1
        return SphereWedge.from_dict(counts)
    return None


# ---------------------------------------------------------------------------
# rendering and parsing

_SYMBOLS = {
    "unicode": {"loop": "Ω", "susp": "Σ", "wedge": " ∨ ", "prod": " × ", "smash": " ∧ "},
    "ascii": {"loop": "O", "susp": "Sigma", "wedge": " v ", "prod": " x ", "smash": " ^ "},
}


def render(e, style="unicode"):
    """Stable text rendering.  Composite children of prefix/infix operators
    are parenthesized; ascii style uses O / Sigma / v / x / ^ so that the
    output survives any terminal.  render/parse round-trip on canonical
    expressions."""
    sym = _SYMBOLS[style]

    def rec(x):
        if isinstance(x, Point):
            return "*"
        if isinstance(x, Sphere):
            return "S^%d" % x.dim
        if isinstance(x, Loop):
            return sym["loop"] + _wrap(x.child)
        if isinstance(x, Suspension):
            return sym["susp"] + _wrap(x.child)
        if isinstance(x, Wedge):
            return sym["wedge"].join(_infix(c) for c in x.children)
        if isinstance(x, Product):
            return sym["prod"].join(_infix(c) for c in x.children)
        if isinstance(x, Smash):
            return sym["smash"].join(_infix(c) for c in x.children)
        raise UsageError("cannot render %r" % (x,))

    def _wrap(child):
        if isinstance(child, Sphere) and style == "unicode":
            return rec(child)
        return "(" + rec(child) + ")"

    def _infix(child):
        if isinstance(child, (Wedge, Product, Smash)):
            return "(" + rec(child) + ")"
        return rec(child)

    return rec(e)


class _Parser:
    def __init__(self, text):
        self.toks = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "()*":
                toks.append(ch)
                i += 1
            elif ch in "Ω∨×∧Σ":
                toks.append({"Ω": "O", "∨": "v", "×": "x", "∧": "^", "Σ": "Sigma"}[ch])
                i += 1
            elif text.startswith("Sigma", i):
                toks.append("Sigma")
                i += 5
            elif ch == "S" and text.startswith("S^", i):
                j = i + 2
                while j < len(text) and text[j].isdigit():
                    j += 1
                if j == i + 2:
                    raise UsageError("bad sphere token at %r" % text[i:])
                toks.append(text[i:j])
                i = j
            elif ch in "Ovx^":
                toks.append(ch)
                i += 1
            else:
                raise UsageError("unexpected character %r in expression" % ch)
        return toks

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse(self):
        e = self.expr()
        if self.peek() is not None:
            raise UsageError("trailing tokens after expression")
        return e

    def expr(self):
        first = self.atom()
        op = self.peek()
        if op not in ("v", "x", "^"):
            return first
        children = [first]
        while self.peek() == op:
            self.take()
            children.append(self.atom())
        if self.peek() in ("v", "x", "^"):
            raise UsageError("mixed infix operators need parentheses")
        cls = {"v": Wedge, "x": Product, "^": Smash}[op]
        return cls(tuple(children))

    def atom(self):
        t = self.take()
        if t is None:
            raise UsageError("unexpected end of expression")
        if t == "*":
            return POINT
        if t.startswith("S^"):
            return Sphere(int(t[2:]))
        if t in ("O", "Sigma"):
            cls = Loop if t == "O" else Suspension
            return cls(self.atom())
        if t == "(":
            e = self.expr()
            if self.take() != ")":
                raise UsageError("missing closing parenthesis")
            return e
        raise UsageError("unexpected token %r" % t)


def parse(text):
    """Inverse of render (on canonical expressions, up to canonicalization)."""
    return _Parser(text).parse()
