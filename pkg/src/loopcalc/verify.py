"""Property suites cross-checking the rewrite rules against the oracles.

Each suite runs a fixed battery of exhaustive and seeded-random checks
and reports per-check instance and failure counts.  The random streams
are derived deterministically from the seed, so a reported failure is
reproducible by rerunning with the same seed.
"""

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .decompose import (
    ConnSumSpec,
    FourManifoldSpec,
    PDSpec,
    WallSpec,
    decompose_conn_sum,
    decompose_config,
    decompose_four_manifold,
    decompose_general,
    decompose_wall,
    loop_equivalent,
)
from .errors import LoopcalcError, UsageError
from .expr import SphereWedge, canonicalize, loop, product, sphere
from .hilton import (
    hilton_milnor,
    lyndon_multiplicities,
    lyndon_multiplicities_by_enumeration,
    witt_counts,
)
from .homotopy import free_lie_ranks, rational_ranks, to_base
from .normalize import factor_series, half_smash_split, james_split, normal_form
from .series import (
    TruncatedSeries,
    loop_sphere_series,
    polynomial_two_var_series,
    tensor_algebra_series,
)
from .ss_oracle import (
    IntersectionForm,
    SSInput,
    fiber_e_infinity,
    five_complex_from_form,
    pairing_witness,
    path_loop_series_check,
)

SUITE_NAMES = ("series", "hm", "ss", "ranks")


@dataclass(frozen=True)
class CheckResult:
    check: str
    instances: int
    failures: int
    seed: int
    first_failure: str = None

    def to_json(self):
        obj = {
            "check": self.check,
            "instances": self.instances,
            "failures": self.failures,
            "seed": self.seed,
        }
        if self.first_failure is not None:
            obj["first_failure"] = self.first_failure
        return obj


class _Tally:
    def __init__(self, check, seed):
        self.check = check
        self.seed = seed
        self.instances = 0
        self.failures = 0
        self.first_failure = None

    def count(self, ok, describe):
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                text = describe() if callable(describe) else str(describe)
                self.first_failure = text

    def run(self, body, describe):
        # body() returns truth; a raised LoopcalcError counts as failure
        try:
            ok = body()
            note = describe
        except LoopcalcError as err:
            ok = False
            note = "%s: %s" % (describe() if callable(describe) else describe, err)
        self.count(ok, note)

    def result(self):
        return CheckResult(
            self.check, self.instances, self.failures, self.seed, self.first_failure
        )


def _rng(seed, offset):
    # fixed integer mixing keeps streams stable across suite reordering
    return random.Random(seed * 101 + offset)


# ---------------------------------------------------------------------------
# series suite


def _check_invert_roundtrip(seed):
    t = _Tally("series.invert_roundtrip", seed)
    rng = _rng(seed, 1)
    one = TruncatedSeries.one(30)
    for _ in range(200):
        coeffs = [rng.choice((1, -1))]
        coeffs += [rng.randint(-9, 9) for _ in range(30)]
        s = TruncatedSeries(30, coeffs)
        inv = s.invert()
        ok = s.mul(inv) == one and inv.mul(s) == one
        t.count(ok, lambda: "coefficients %r" % (coeffs[:8],))
    return t.result()


def _check_tensor_identity(seed):
    t = _Tally("series.tensor_identity", seed)
    rng = _rng(seed, 2)
    one = TruncatedSeries.one(30)
    for _ in range(100):
        coeffs = [0] + [rng.randint(0, 6) for _ in range(30)]
        g = TruncatedSeries(30, coeffs)
        ts = tensor_algebra_series(g)
        ok = ts == one.add(g.mul(ts))
        t.count(ok, lambda: "generators %r" % (coeffs[:8],))
    return t.result()


def _check_loop_sphere_defining(seed):
    t = _Tally("series.loop_sphere_defining", seed)
    one = TruncatedSeries.one(30)
    for m in range(2, 13):
        lhs = loop_sphere_series(m, 30).mul(
            one.sub(TruncatedSeries.monomial(30, m - 1))
        )
        t.count(lhs == one, "m=%d" % m)
    return t.result()


def _series_checks(seed):
    return [
        _check_invert_roundtrip(seed),
        _check_tensor_identity(seed),
        _check_loop_sphere_defining(seed),
    ]


# ---------------------------------------------------------------------------
# hm suite


def _check_lyndon_witt_exhaustive(seed):
    t = _Tally("hm.lyndon_vs_witt_exhaustive", seed)
    for size in range(1, 7):
        for ws in combinations_with_replacement(range(1, 5), size):
            ok = lyndon_multiplicities(ws, 20) == witt_counts(ws, 20)
            t.count(ok, lambda: "weights %r" % (ws,))
    return t.result()


def _check_lyndon_witt_random(seed):
    t = _Tally("hm.lyndon_vs_witt_random", seed)
    rng = _rng(seed, 11)
    for _ in range(100):
        size = rng.randint(1, 8)
        ws = sorted(rng.randint(1, 6) for _ in range(size))
        ok = lyndon_multiplicities(ws, 20) == witt_counts(ws, 20)
        t.count(ok, lambda: "weights %r" % (ws,))
    return t.result()


def _check_lyndon_vs_enumeration(seed):
    t = _Tally("hm.lyndon_vs_enumeration", seed)
    for size in range(1, 4):
        for ws in combinations_with_replacement(range(1, 4), size):
            ok = lyndon_multiplicities(ws, 8) == lyndon_multiplicities_by_enumeration(
                ws, 8
            )
            t.count(ok, lambda: "weights %r" % (ws,))
    return t.result()


def _check_hilton_tensor(seed):
    t = _Tally("hm.hilton_vs_tensor_algebra", seed)
    for size in range(1, 6):
        for dims in combinations_with_replacement(range(2, 7), size):
            counts = {}
            for d in dims:
                counts[d] = counts.get(d, 0) + 1
            w = SphereWedge.from_dict(counts)
            lhs = factor_series(hilton_milnor(w, 25))
            rhs = tensor_algebra_series(w.generator_series(25))
            t.count(lhs == rhs, lambda: "wedge %r" % (counts,))
    return t.result()


def _check_james_identity(seed):
    t = _Tally("hm.james_splitting_series", seed)
    one = TruncatedSeries.one(26)
    for s in range(2, 7):
        lhs = james_split(s, 25).reduced_homology_series(26)
        rhs = loop_sphere_series(s, 26).sub(one).shift_up(1)
        t.count(lhs == rhs, "s=%d" % s)
    return t.result()


def _check_iterated_james(seed):
    t = _Tally("hm.iterated_james_half_smash", seed)
    cap = 20
    for a in (2, 3, 4):
        for s in (2, 3, 4):
            for s2 in range(s, 5):
                q = normal_form(loop(product(sphere(s), sphere(s2))), cap)
                got = half_smash_split(q, SphereWedge.from_dict({a: 1}), cap)
                dims = {}
                i = 0
                while a + (s - 1) * i <= cap:
                    j = 0
                    while a + (s - 1) * i + (s2 - 1) * j <= cap:
                        d = a + (s - 1) * i + (s2 - 1) * j
                        dims[d] = dims.get(d, 0) + 1
                        j += 1
                    i += 1
                ok = got == SphereWedge.from_dict(dims)
                t.count(ok, lambda: "a=%d s=%d s2=%d" % (a, s, s2))
    return t.result()


def _hm_checks(seed):
    return [
        _check_lyndon_witt_exhaustive(seed),
        _check_lyndon_witt_random(seed),
        _check_lyndon_vs_enumeration(seed),
        _check_hilton_tensor(seed),
        _check_james_identity(seed),
        _check_iterated_james(seed),
    ]


# ---------------------------------------------------------------------------
# ss suite


def _check_path_loop(seed):
    t = _Tally("ss.path_loop_vs_polynomial", seed)
    for m in range(2, 9):
        for nm in range(m, 9):
            t.run(
                lambda m=m, nm=nm: path_loop_series_check(m, m + nm, 25)
                == polynomial_two_var_series(m - 1, nm - 1, 25),
                "m=%d n=%d" % (m, m + nm),
            )
    return t.result()


def _random_ss_input(rng, case_two, cap=25):
    if case_two:
        m = rng.randint(2, 6)
        nm = m
    else:
        m = rng.randint(2, 5)
        nm = m + rng.randint(1, 4)
    n = m + nm
    inner = rng.randint(0, 8)
    middles = sorted(rng.randint(m, nm) for _ in range(inner))
    degrees = [m] + middles + [nm]
    ell = len(degrees)
    first = [0] + [rng.randint(-5, 5) for _ in range(ell - 2)] + [1]
    sign = -1 if (m * nm) % 2 else 1
    last = [sign] + [rng.randint(-5, 5) for _ in range(ell - 2)] + [0]
    return SSInput(degrees, m, n, first, last, cap)


def _fiber_prediction(ssin):
    poly = polynomial_two_var_series(ssin.m - 1, ssin.n - ssin.m - 1, ssin.cap)
    pred = TruncatedSeries.one(ssin.cap)
    for d in ssin.degrees[1:-1]:
        pred = pred.add(poly.shift_up(d))
    return pred


def _check_fiber_prediction(seed):
    t = _Tally("ss.fiber_oracle_vs_prediction", seed)
    rng = _rng(seed, 21)
    for idx in range(200):
        ssin = _random_ss_input(rng, case_two=idx % 2 == 0)
        t.run(
            lambda ssin=ssin: fiber_e_infinity(ssin).series()
            == _fiber_prediction(ssin),
            lambda: "degrees %r m=%d n=%d" % (ssin.degrees, ssin.m, ssin.n),
        )
    return t.result()


def _check_fiber_half_smash(seed):
    t = _Tally("ss.fiber_vs_half_smash", seed)
    rng = _rng(seed, 22)
    one = TruncatedSeries.one(25)
    for _ in range(50):
        m = rng.randint(2, 5)
        nm = m + rng.randint(0, 3)
        n = m + nm
        middles = sorted(rng.randint(m, nm) for _ in range(rng.randint(1, 4)))
        counts = {}
        for d in middles:
            counts[d] = counts.get(d, 0) + 1
        j = SphereWedge.from_dict(counts)
        degrees = [m] + middles + [nm]
        ell = len(degrees)
        first = [0] + [rng.randint(-5, 5) for _ in range(ell - 2)] + [1]
        sign = -1 if (m * nm) % 2 else 1
        last = [sign] + [rng.randint(-5, 5) for _ in range(ell - 2)] + [0]
        ssin = SSInput(degrees, m, n, first, last, 25)

        def body(ssin=ssin, j=j, m=m, nm=nm):
            fiber = fiber_e_infinity(ssin).series()
            poly = polynomial_two_var_series(m - 1, nm - 1, 25)
            direct = one.add(j.reduced_homology_series(25).mul(poly))
            q = normal_form(loop(product(sphere(m), sphere(nm))), 25)
            smashed = half_smash_split(q, j, 25)
            via_smash = one.add(smashed.reduced_homology_series(25))
            return fiber == direct and fiber == via_smash

        t.run(body, lambda: "middle %r m=%d n=%d" % (middles, m, n))
    return t.result()


def _random_unimodular_form(rng, k):
    diag = [rng.choice((1, -1)) for _ in range(k)]
    upper = [[0] * k for _ in range(k)]
    for i in range(k):
        upper[i][i] = 1
        for j2 in range(i + 1, k):
            upper[i][j2] = rng.randint(-3, 3)
    rows = [
        [
            sum(upper[t2][i] * diag[t2] * upper[t2][j2] for t2 in range(k))
            for j2 in range(k)
        ]
        for i in range(k)
    ]
    return IntersectionForm(rows)


def _check_five_complex_independence(seed):
    t = _Tally("ss.five_complex_form_independence", seed)
    rng = _rng(seed, 23)
    for k in range(1, 9):
        identity = IntersectionForm(
            [[1 if i == j2 else 0 for j2 in range(k)] for i in range(k)]
        )
        reference = five_complex_from_form(identity)
        for _ in range(100):
            form = _random_unimodular_form(rng, k)
            t.run(
                lambda form=form, reference=reference: five_complex_from_form(form)
                == reference,
                lambda: "k=%d form %r" % (k, form.entries),
            )
    return t.result()


def _check_pairing_witness(seed):
    t = _Tally("ss.pairing_witness_dot_product", seed)
    rng = _rng(seed, 24)
    for _ in range(100):
        k = rng.randint(1, 8)
        form = _random_unimodular_form(rng, k)
        w = pairing_witness(form)
        dot = sum(a * b for a, b in zip(form.entries[-1], w))
        t.count(dot == 1, lambda: "form %r witness %r" % (form.entries, w))
    return t.result()


def iter_pd_battery():
    """PDSpec battery shared with the acceptance tests: all middle
    multisets of size at most 4 with dimensions at most 6."""
    for m in range(2, 7):
        for nm in range(m, 7):
            n = m + nm
            for size in range(0, 5):
                for dims in combinations_with_replacement(range(m, nm + 1), size):
                    counts = {}
                    for d in dims:
                        counts[d] = counts.get(d, 0) + 1
                    yield PDSpec(m, n, SphereWedge.from_dict(counts))


def two_route_series(p, cap):
    """The two independent series routes for a PDSpec decomposition.

    Route A normalizes the full decomposition and multiplies the factor
    series; route B multiplies the closed-form loop homology of the
    two-sphere product by the tensor-algebra series of the splitting
    wedge, using only series arithmetic.
    """
    route_a = factor_series(normal_form(decompose_general(p, cap), cap))
    q = polynomial_two_var_series(p.m - 1, p.n - p.m - 1, cap)
    g = p.middle.generator_series(cap)
    route_b = q.mul(TruncatedSeries.one(cap).sub(g.mul(q)).invert())
    return route_a, route_b


def _check_two_route(seed):
    t = _Tally("ss.two_route_series_identity", seed)
    for p in iter_pd_battery():
        t.run(
            lambda p=p: (lambda ab: ab[0] == ab[1])(two_route_series(p, 25)),
            lambda: "m=%d n=%d middle %r" % (p.m, p.n, p.middle.as_dict()),
        )
    return t.result()


def _ss_checks(seed):
    return [
        _check_path_loop(seed),
        _check_fiber_prediction(seed),
        _check_fiber_half_smash(seed),
        _check_five_complex_independence(seed),
        _check_pairing_witness(seed),
        _check_two_route(seed),
    ]


# ---------------------------------------------------------------------------
# ranks suite


def _rank_battery_wedges():
    for size in range(1, 5):
        for dims in combinations_with_replacement(range(2, 6), size):
            counts = {}
            for d in dims:
                counts[d] = counts.get(d, 0) + 1
            yield SphereWedge.from_dict(counts)


def _check_rational_vs_free_lie(seed):
    t = _Tally("ranks.rational_vs_free_lie", seed)
    for w in _rank_battery_wedges():
        degrees = []
        for d, mult in w.items:
            degrees.extend([d - 1] * mult)
        lhs = rational_ranks(hilton_milnor(w, 20)).as_dict()
        rhs = free_lie_ranks(degrees, 20)
        t.count(lhs == rhs, lambda: "wedge %r" % (w.as_dict(),))
    return t.result()


def _check_base_loop_shift(seed):
    t = _Tally("ranks.base_loop_shift", seed)
    for w in list(_rank_battery_wedges())[:20]:
        table = rational_ranks(hilton_milnor(w, 20))
        base = to_base(table)
        ok = all(base.rank(q) == table.rank(q - 1) for q in range(2, 21))
        ok = ok and base.rank(1) == 0
        t.count(ok, lambda: "wedge %r" % (w.as_dict(),))
    return t.result()


def _four_manifold_base_table(spec, cap=30):
    factors = normal_form(decompose_four_manifold(spec, cap), cap)
    return to_base(rational_ranks(factors))


def _check_four_manifold_tables(seed):
    t = _Tally("ranks.four_manifold_tables", seed)
    rng = _rng(seed, 43)
    for k in range(0, 9):
        plain = _four_manifold_base_table(FourManifoldSpec(k))
        variants = []
        if k >= 1:
            identity = IntersectionForm(
                [[1 if i == j2 else 0 for j2 in range(k)] for i in range(k)]
            )
            variants.append(FourManifoldSpec(k, identity))
            for _ in range(5):
                variants.append(
                    FourManifoldSpec(k, _random_unimodular_form(rng, k))
                )
        ok = all(_four_manifold_base_table(v) == plain for v in variants)
        t.count(ok, "k=%d" % k)
    frozen = {
        0: {4: 1, 7: 1},
        1: {2: 1, 5: 1},
        2: {2: 2, 3: 2},
    }
    for k, expected in frozen.items():
        table = _four_manifold_base_table(FourManifoldSpec(k))
        t.count(table.as_dict() == expected, "frozen table k=%d" % k)
    return t.result()


def _random_conn_sum(rng):
    n = rng.randint(5, 9)
    m = rng.randint(2, n // 2)
    size = rng.randint(0, 3)
    counts = {}
    for _ in range(size):
        d = rng.randint(m, n - m)
        counts[d] = counts.get(d, 0) + 1
    return ConnSumSpec(m, n, SphereWedge.from_dict(counts))


def _check_equivalence_crosscheck(seed):
    t = _Tally("ranks.equivalence_vs_normal_form", seed)
    rng = _rng(seed, 41)

    def nf(expr):
        return normal_form(expr, 30)

    for _ in range(60):
        a = FourManifoldSpec(rng.randint(0, 5))
        b = FourManifoldSpec(rng.randint(0, 5))
        same = nf(decompose_four_manifold(a, 30)) == nf(decompose_four_manifold(b, 30))
        t.count(
            loop_equivalent(a, b) == same,
            lambda: "four-manifold ranks %d vs %d" % (a.rank, b.rank),
        )
    for _ in range(50):
        n = rng.choice((3, 5, 6, 7, 9))
        a = WallSpec(n, rng.randint(2, 6))
        b = WallSpec(n, rng.randint(2, 6))
        same = nf(decompose_wall(a, 30)) == nf(decompose_wall(b, 30))
        t.count(
            loop_equivalent(a, b) == same,
            lambda: "wall n=%d ranks %d vs %d" % (n, a.rank, b.rank),
        )
    for _ in range(60):
        a = _random_conn_sum(rng)
        if rng.random() < 0.5:
            b = ConnSumSpec(a.m, a.n, a.punctured_skeleton)
        else:
            b = _random_conn_sum(rng)
            while b.n != a.n:
                b = _random_conn_sum(rng)
        same = nf(decompose_conn_sum(a, 30)) == nf(decompose_conn_sum(b, 30))
        t.count(
            loop_equivalent(a, b) == same,
            lambda: "connected sums %r vs %r" % (a, b),
        )
    return t.result()


def _check_config_factors(seed):
    t = _Tally("ranks.config_factor_count_and_monotone", seed)
    rng = _rng(seed, 42)
    cap = 20
    for _ in range(15):
        n = rng.choice((5, 7, 9))
        m = rng.randint(2, n // 2)
        counts = {}
        for _ in range(rng.randint(0, 2)):
            d = rng.randint(m, n - m)
            counts[d] = counts.get(d, 0) + 1
        c = ConnSumSpec(m, n, SphereWedge.from_dict(counts))

        def body(c=c):
            previous = None
            for points in range(1, 4):
                exprs = decompose_config(c, points, cap)
                if len(exprs) != points + 1:
                    return False
                merged = canonicalize(product(*exprs))
                series = factor_series(normal_form(merged, cap))
                if previous is not None:
                    if any(series[d] < previous[d] for d in range(cap + 1)):
                        return False
                previous = series
            return True

        t.run(body, lambda: "base %r" % (c,))
    return t.result()


def _ranks_checks(seed):
    return [
        _check_rational_vs_free_lie(seed),
        _check_base_loop_shift(seed),
        _check_four_manifold_tables(seed),
        _check_equivalence_crosscheck(seed),
        _check_config_factors(seed),
    ]


# ---------------------------------------------------------------------------


_SUITES = {
    "series": _series_checks,
    "hm": _hm_checks,
    "ss": _ss_checks,
    "ranks": _ranks_checks,
}


def run_suite(name, seed=0):
    """Run one named suite (or "all") and return its CheckResults."""
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise UsageError("seed must be an integer")
    if name == "all":
        out = []
        for suite in SUITE_NAMES:
            out.extend(_SUITES[suite](seed))
        return out
    if name not in _SUITES:
        raise UsageError(
            "unknown suite %r (expected one of %s or all)"
            % (name, ", ".join(SUITE_NAMES))
        )
    return _SUITES[name](seed)
