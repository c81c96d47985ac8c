"""Hilton-Milnor bookkeeping: Lyndon words over weighted alphabets.

Loops on a finite wedge of spheres split, up to the degree cap, as a
product of loops on spheres, one factor per basic product; basic products
of a fixed weight are counted by Lyndon words of that weight.  A wedge
summand of dimension n contributes a letter of weight n-1, and a Lyndon
word of total weight d contributes the factor "loops on S^(d+1)".

Three routes to the same counts live here:

* lyndon_multiplicities -- production counting via Newton power sums and
  Moebius inversion (the necklace count).  Handles weights whose word
  counts are astronomically large.
* witt_counts -- independent oracle: solve the generating identity
  prod_d (1 - t^d)^(-L_d) == 1/(1 - sum_j t^(w_j)) iteratively for L_d.
* lyndon_words -- explicit weight-pruned Duval generation, usable as a
  third check whenever the predicted count is small enough to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, OracleError, UsageError
from .series import TruncatedSeries, geometric_factor

GAUGE_DIM_LIMIT = 64  # sanity bound for alphabet weights; see WeightedAlphabet


@dataclass(frozen=True)
class WeightedAlphabet:
    """Finite list of positive integer letter weights, in sorted order."""

    weights: tuple

    def __post_init__(self):
        for w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise DomainError("letter weights must be integers >= 1")
            if w > GAUGE_DIM_LIMIT:
                raise DomainError("letter weight %d is implausibly large" % w)
        if tuple(sorted(self.weights)) != self.weights:
            raise DomainError("weights must be sorted ascending")

    @classmethod
    def from_weights(cls, ws):
        return cls(tuple(sorted(int(w) for w in ws)))

    def weight_series(self, cap):
        out = [0] * (cap + 1)
        for w in self.weights:
            if w <= cap:
                out[w] += 1
        return TruncatedSeries(cap, out)


def _coerce_alphabet(a):
    if isinstance(a, WeightedAlphabet):
        return a
    return WeightedAlphabet.from_weights(a)


def _mobius_sieve(n):
    mu = [0] * (n + 1)
    if n >= 1:
        mu[1] = 1
    primes = []
    spf = [0] * (n + 1)
    for i in range(2, n + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if p > spf[i] or i * p > n:
                break
            spf[i * p] = p
            mu[i * p] = 0 if i % p == 0 else -mu[i]
    return mu


def lyndon_multiplicities(a, cap):
    """Number of Lyndon words of each total weight 1..cap, as a dict.

    Computed by the necklace count: with W(t) the letter-weight series,
    the power sums p_m of the word count satisfy sum(p_m t^m / m) =
    -log(1 - W), i.e. sum(p_m t^(m-1)) = W' / (1 - W), and then
    d * L_d = sum over e | d of mu(e) * p_(d/e).
    """
    a = _coerce_alphabet(a)
    if cap < 0:
        raise DomainError("cap must be >= 0")
    if cap == 0 or not a.weights:
        return {}
    w = a.weight_series(cap)
    w_deriv = TruncatedSeries(cap, [w[d + 1] * (d + 1) if d < cap else 0 for d in range(cap + 1)])
    inv = (TruncatedSeries.one(cap) - w).invert()
    p_shifted = w_deriv.mul(inv)  # coefficient of t^(m-1) is p_m
    mu = _mobius_sieve(cap)
    counts = {}
    for d in range(1, cap + 1):
        total = 0
        for e in range(1, d + 1):
            if d % e == 0 and mu[e]:
                total += mu[e] * p_shifted[d // e - 1]
        if total % d != 0:
            raise OracleError("necklace count for weight %d is not divisible by %d" % (d, d))
        val = total // d
        if val < 0:
            raise OracleError("negative Lyndon count at weight %d" % d)
        if val:
            counts[d] = val
    return counts


def witt_counts(a, cap):
    """Independent oracle for lyndon_multiplicities: peel the generating
    identity prod_d (1-t^d)^(-L_d) == 1/(1 - W(t)) one degree at a time.

    At each degree d the partial product over smaller degrees is exact
    below d and short by exactly L_d at d."""
    a = _coerce_alphabet(a)
    if cap < 0:
        raise DomainError("cap must be >= 0")
    if cap == 0 or not a.weights:
        return {}
    target = (TruncatedSeries.one(cap) - a.weight_series(cap)).invert()
    partial = TruncatedSeries.one(cap)
    counts = {}
    for d in range(1, cap + 1):
        missing = target[d] - partial[d]
        if missing < 0:
            raise OracleError("generating identity gave a negative count at weight %d" % d)
        if missing:
            counts[d] = missing
            partial = partial.mul(geometric_factor(d, missing, cap))
    return counts


def lyndon_words(a, max_weight):
    """Explicitly generate the Lyndon words of total weight <= max_weight,
    as tuples of letter indices into the sorted alphabet.

    Duval's construction over the index alphabet, with words pruned by
    weight.  Only usable when the output count is small; the counting
    routes above are the production path.
    """
    a = _coerce_alphabet(a)
    if max_weight < 1 or not a.weights:
        return
    n = len(a.weights)
    max_len = max_weight // min(a.weights)
    word = [-1]
    while word:
        word[-1] += 1
        if word[-1] >= n:
            word.pop()
            continue
        if sum(a.weights[c] for c in word) <= max_weight:
            yield tuple(word)
        m = len(word)
        while len(word) < max_len:
            nxt = word[len(word) - m]
            # extending past the weight bound can never recover: weights >= 1
            if sum(a.weights[c] for c in word) + a.weights[nxt] > max_weight:
                break
            word.append(nxt)
        while word and word[-1] == n - 1:
            word.pop()


def lyndon_multiplicities_by_enumeration(a, cap):
    """Weight histogram of lyndon_words; the enumerative cross-check."""
    a = _coerce_alphabet(a)
    counts = {}
    for w in lyndon_words(a, cap):
        d = sum(a.weights[c] for c in w)
        counts[d] = counts.get(d, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# factor lists


@dataclass(frozen=True)
class FactorList:
    """Canonical product of loop-space factors up to a degree cap.

    circles counts S^1 factors; spheres holds plain odd-sphere factors of
    dimension >= 3; loop_spheres holds factors "loops on S^d" with d >= 2.
    A factor appears only if it affects homology in degrees <= cap (a loop
    sphere of dimension d first contributes in degree d-1).  truncated
    records that the untruncated factorization is infinite.
    """

    circles: int
    spheres: tuple  # sorted ((dim, mult), ...)
    loop_spheres: tuple
    cap: int
    truncated: bool

    def __post_init__(self):
        if self.circles < 0:
            raise DomainError("negative circle count")
        if self.cap < 0:
            raise DomainError("cap must be >= 0")
        for dim, mult in self.spheres:
            if dim < 3 or dim % 2 == 0:
                raise DomainError("plain sphere factors must have odd dimension >= 3")
            if mult < 1 or dim > self.cap:
                raise DomainError("sphere factor outside the cap or empty")
        for dim, mult in self.loop_spheres:
            if dim < 2:
                raise DomainError("loop sphere factors need dimension >= 2")
            if mult < 1 or dim - 1 > self.cap:
                raise DomainError("loop sphere factor outside the cap or empty")

    @classmethod
    def build(cls, cap, circles=0, spheres=None, loop_spheres=None, truncated=False):
        """Normalize dict inputs, dropping factors invisible below the cap."""
        sph = tuple(sorted((d, m) for d, m in (spheres or {}).items() if m and d <= cap))
        lsp = tuple(sorted((d, m) for d, m in (loop_spheres or {}).items() if m and d - 1 <= cap))
        circ = circles if cap >= 1 else 0
        return cls(circ, sph, lsp, cap, truncated)

    @classmethod
    def empty(cls, cap):
        return cls(0, (), (), cap, False)

    def sphere_dict(self):
        return {d: m for d, m in self.spheres}

    def loop_sphere_dict(self):
        return {d: m for d, m in self.loop_spheres}

    def merge(self, other):
        if self.cap != other.cap:
            raise UsageError("cannot merge factor lists with different caps")
        sph = self.sphere_dict()
        for d, m in other.spheres:
            sph[d] = sph.get(d, 0) + m
        lsp = self.loop_sphere_dict()
        for d, m in other.loop_spheres:
            lsp[d] = lsp.get(d, 0) + m
        return FactorList.build(
            self.cap,
            circles=self.circles + other.circles,
            spheres=sph,
            loop_spheres=lsp,
            truncated=self.truncated or other.truncated,
        )

    def to_json(self):
        return {
            "circles": self.circles,
            "spheres": {str(d): m for d, m in self.spheres},
            "loop_spheres": {str(d): m for d, m in self.loop_spheres},
            "cap": self.cap,
            "truncated": self.truncated,
        }

    @classmethod
    def from_json(cls, obj):
        return cls.build(
            int(obj["cap"]),
            circles=int(obj.get("circles", 0)),
            spheres={int(k): int(v) for k, v in obj.get("spheres", {}).items()},
            loop_spheres={int(k): int(v) for k, v in obj.get("loop_spheres", {}).items()},
            truncated=bool(obj.get("truncated", False)),
        )

    def render(self, style="unicode"):
        loop_sym = "Ω" if style == "unicode" else "O"
        times = " × " if style == "unicode" else " x "
        parts = []
        if self.circles:
            parts.extend(["S^1"] * self.circles)
        for d, m in self.spheres:
            parts.extend(["S^%d" % d] * m)
        for d, m in self.loop_spheres:
            label = "%sS^%d" % (loop_sym, d) if style == "unicode" else "O(S^%d)" % d
            if m > 6:
                parts.append("%s{%d copies}" % (label, m))
            else:
                parts.extend([label] * m)
        body = times.join(parts) if parts else "*"
        return body + (" [truncated at %d]" % self.cap if self.truncated else "")


def hilton_milnor(w, cap):
    """Split loops on a finite sphere wedge into loop-sphere factors.

    A summand S^n becomes a letter of weight n-1; each Lyndon word of total
    weight d <= cap contributes one factor of loops on S^(d+1).  With two or
    more letters the full factorization is infinite, so the result is marked
    truncated."""
    letters = []
    for dim, mult in w.items:
        letters.extend([dim - 1] * mult)
    if not letters:
        return FactorList.empty(cap)
    a = WeightedAlphabet.from_weights(letters)
    counts = lyndon_multiplicities(a, cap)
    loops = {d + 1: m for d, m in counts.items()}
    return FactorList.build(cap, loop_spheres=loops, truncated=len(letters) >= 2)
