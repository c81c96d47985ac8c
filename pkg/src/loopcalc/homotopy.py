"""Rational homotopy rank tables read off normalized factor lists.

The rules are the classical ones: an odd sphere carries one rational
class, an even sphere a generator and its Whitehead square.  The free
graded Lie algebra oracle solves the Poincare-Birkhoff-Witt identity
numerically and provides an independent route to the same tables for
loops on wedges.
"""

from dataclasses import dataclass
from math import comb

from .errors import OracleError, UsageError, ValidationError
from .series import TruncatedSeries, geometric_factor, tensor_algebra_series


@dataclass(frozen=True)
class RankTable:
    """Ranks of rational homotopy groups below a cap, for either a loop
    space or the space it is the loops of."""

    subject: str
    cap: int
    ranks: tuple

    def __init__(self, subject, cap, ranks):
        if subject not in ("loop", "base"):
            raise ValidationError('subject must be "loop" or "base"')
        object.__setattr__(self, "subject", subject)
        object.__setattr__(self, "cap", int(cap))
        if isinstance(ranks, dict):
            ranks = sorted((d, r) for d, r in ranks.items() if r)
        object.__setattr__(
            self, "ranks", tuple((int(d), int(r)) for d, r in ranks)
        )
        prev = 0
        for d, r in self.ranks:
            if d <= prev or d > self.cap or r < 1:
                raise ValidationError("malformed rank table")
            prev = d

    def rank(self, degree):
        for d, r in self.ranks:
            if d == degree:
                return r
        return 0

    def as_dict(self):
        return {d: r for d, r in self.ranks}

    def to_json(self):
        return {
            "subject": self.subject,
            "cap": self.cap,
            "ranks": {str(d): r for d, r in self.ranks},
        }


def rational_ranks(factors):
    """Loop-space rank table of a normalized factor list.

    Circles count in degree one, a plain odd sphere in its own degree;
    loops on an odd sphere contribute one degree below it, loops on an
    even sphere additionally at twice that.  Degrees beyond the factor
    list's cap are dropped.
    """
    out = {}
    cap = factors.cap

    def add(deg, mult):
        if 1 <= deg <= cap and mult:
            out[deg] = out.get(deg, 0) + mult

    add(1, factors.circles)
    for d, m in factors.spheres:
        add(d, m)
    for d, m in factors.loop_spheres:
        add(d - 1, m)
        if d % 2 == 0:
            add(2 * d - 2, m)
    return RankTable("loop", cap, out)


def to_base(table):
    """Shift a loop-space table up one degree to describe the space it
    is the loops of; the top degree falls off the cap."""
    if table.subject != "loop":
        raise UsageError("only a loop table shifts to a base table")
    out = {d + 1: r for d, r in table.ranks if d + 1 <= table.cap}
    return RankTable("base", table.cap, out)


def _one_plus_power(period, mult, cap):
    # (1 + t^period)^mult
    out = [0] * (cap + 1)
    i = 0
    while period * i <= cap:
        if i <= mult:
            out[period * i] = comb(mult, i)
        i += 1
    return TruncatedSeries(cap, out)


def free_lie_ranks(generator_degrees, cap):
    """Degreewise ranks of the free graded Lie algebra on generators of
    the given degrees.

    Solves the graded Poincare-Birkhoff-Witt identity against the tensor
    algebra series: odd-degree ranks enter through exterior factors
    (1 + t^j), even-degree ranks through geometric factors, and peeling
    the product from the bottom determines each rank in turn.
    """
    degrees = list(generator_degrees)
    for d in degrees:
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise ValidationError("generator degrees must be integers >= 1")
    if cap < 0:
        raise ValidationError("cap must be >= 0")
    gen = [0] * (cap + 1)
    for d in degrees:
        if d <= cap:
            gen[d] += 1
    target = tensor_algebra_series(TruncatedSeries(cap, gen))
    running = TruncatedSeries.one(cap)
    out = {}
    for j in range(1, cap + 1):
        residual = target.mul(running.invert())
        rank = residual[j]
        if rank < 0:
            raise OracleError("identity unsolvable: negative rank at %d" % j)
        if rank:
            out[j] = rank
            if j % 2 == 1:
                running = running.mul(_one_plus_power(j, rank, cap))
            else:
                running = running.mul(geometric_factor(j, rank, cap))
    return out
