"""Normalization of loop-space expressions into sphere and loop-sphere factors.

The supported grammar is deliberately small: products of circles, odd
spheres, loops on spheres, loops on products of spheres, and loops on
wedges of simply connected spheres.  Everything the rewrite rules produce
stays inside this grammar, so normalization always terminates in a single
bottom-up pass.  Anything outside it raises UnsupportedExpressionError
naming the offending subterm.
"""

from math import comb

from .errors import DomainError, UnsupportedExpressionError, UsageError
from .expr import (
    Loop,
    Point,
    Product,
    Sphere,
    SphereWedge,
    Wedge,
    canonicalize,
    render,
    wedge_from_expr,
)
from .hilton import FactorList, hilton_milnor
from .series import TruncatedSeries, geometric_factor

# Loops on S^d split off the bottom cell only when S^(d-1) is an H-space,
# so exactly for d in {2, 4, 8}.  S^1 is kept as a plain circle factor and
# the d = 2 split is suppressed so that Loop(S^2) stays atomic; the other
# two always rewrite, which keeps the normal form canonical.
_EVEN_SPLIT = {4: (3, 7), 8: (7, 15)}


def james_split(s, cap):
    """Summands of the stable James splitting of loops on S^s.

    After one suspension, loops on S^s splits as a wedge with one sphere
    of dimension (s-1)*i + 1 for each i >= 1.  Summands are kept while
    their dimension is at most cap + 1, so the desuspended data below the
    cap is complete.
    """
    if s < 2:
        raise DomainError("james_split needs a simply connected sphere, got S^%d" % s)
    if cap < 0:
        raise DomainError("cap must be >= 0")
    dims = {}
    i = 1
    while (s - 1) * i + 1 <= cap + 1:
        dims[(s - 1) * i + 1] = 1
        i += 1
    return SphereWedge.from_dict(dims)


def smash_desuspendables(a, b):
    """Wedge of spheres whose reduced series is the product a * b.

    Both inputs must be reduced series (zero constant term) with the same
    cap and nonnegative coefficients; the smash of two wedges of spheres
    is again a wedge of spheres, with dimensions added pairwise.
    """
    if a.cap != b.cap:
        raise UsageError("smash factors must share a cap, got %d and %d" % (a.cap, b.cap))
    if a[0] != 0 or b[0] != 0:
        raise DomainError("smash factors must be reduced series with zero constant term")
    prod = a.mul(b)
    dims = {}
    for d in range(prod.cap + 1):
        c = prod[d]
        if c < 0:
            raise DomainError("negative multiplicity at dimension %d" % d)
        if c:
            dims[d] = c
    return SphereWedge.from_dict(dims)


def half_smash_split(q_factors, j, cap):
    """Wedge summands of the half-smash of a loop space against a wedge.

    For a product of loop factors with homology Q and a wedge J of simply
    connected spheres, the half-smash splits as J wedge (J smash Q'),
    where Q' runs over the reduced part of Q.  The result collects every
    summand of dimension at most cap.
    """
    if q_factors.cap < cap:
        raise UsageError(
            "factor list cap %d is below the requested cap %d" % (q_factors.cap, cap)
        )
    at_cap = FactorList.build(
        cap,
        circles=q_factors.circles,
        spheres=q_factors.sphere_dict(),
        loop_spheres=q_factors.loop_sphere_dict(),
        truncated=q_factors.truncated,
    )
    reduced_j = j.reduced_homology_series(cap)
    reduced_q = factor_series(at_cap).reduced()
    return j.restrict(cap).union(smash_desuspendables(reduced_j, reduced_q))


def normal_form(e, cap):
    """Rewrite a supported expression into a FactorList at the given cap.

    Loops distribute over products, loops on wedges expand through the
    Hilton-Milnor factorization, and loops on S^4 or S^8 split off their
    bottom cell.  The result is canonical: any two expressions that agree
    up to reordering and reassociation produce identical factor lists.
    """
    if cap < 0:
        raise DomainError("cap must be >= 0")
    e = canonicalize(e)
    circles = 0
    spheres = {}
    loops = {}
    truncated = False

    def unsupported(sub):
        raise UnsupportedExpressionError(
            "no factorization rule for subterm: %s" % render(sub)
        )

    def add_loop_sphere(d, mult):
        if d in _EVEN_SPLIT:
            bottom, rest = _EVEN_SPLIT[d]
            spheres[bottom] = spheres.get(bottom, 0) + mult
            loops[rest] = loops.get(rest, 0) + mult
        else:
            loops[d] = loops.get(d, 0) + mult

    def visit_loop(x):
        nonlocal truncated
        if isinstance(x, Sphere):
            if x.dim == 1:
                unsupported(Loop(x))
            add_loop_sphere(x.dim, 1)
        elif isinstance(x, Product):
            for child in x.children:
                visit_loop(child)
        elif isinstance(x, Wedge):
            w = wedge_from_expr(x)
            if w is None:
                unsupported(Loop(x))
            factors = hilton_milnor(w, cap)
            for d, m in factors.loop_spheres:
                add_loop_sphere(d, m)
            truncated = truncated or factors.truncated
        else:
            unsupported(Loop(x))

    def visit_atom(atom):
        nonlocal circles
        if isinstance(atom, Point):
            return
        if isinstance(atom, Sphere):
            if atom.dim == 1:
                circles += 1
            elif atom.dim % 2 == 1:
                spheres[atom.dim] = spheres.get(atom.dim, 0) + 1
            else:
                unsupported(atom)
        elif isinstance(atom, Loop):
            visit_loop(atom.child)
        else:
            unsupported(atom)

    atoms = e.children if isinstance(e, Product) else (e,)
    for atom in atoms:
        visit_atom(atom)
    return FactorList.build(cap, circles, spheres, loops, truncated)


def _binomial_factor(period, mult, cap):
    # (1 + t^period)^mult, exact binomials so large multiplicities stay cheap
    out = [0] * (cap + 1)
    i = 0
    while period * i <= cap:
        if i <= mult:
            out[period * i] = comb(mult, i)
        i += 1
    return TruncatedSeries(cap, out)


def factor_series(f):
    """Homology Poincare series of a FactorList, exact below its cap."""
    out = TruncatedSeries.one(f.cap)
    if f.circles:
        out = out.mul(_binomial_factor(1, f.circles, f.cap))
    for d, m in f.spheres:
        out = out.mul(_binomial_factor(d, m, f.cap))
    for d, m in f.loop_spheres:
        out = out.mul(geometric_factor(d - 1, m, f.cap))
    return out
