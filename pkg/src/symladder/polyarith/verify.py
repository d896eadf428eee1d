"""Independent algebraic checks of one descent step.

Everything is decided by Groebner normal forms in the polynomial ring of
the source ladder (plus a variable ``y`` standing for ``1/x_vw`` in the
localization checks).  A check passes, fails with a witness polynomial, or
is skipped when a resource bound is hit.
"""

import time
from dataclasses import dataclass, field

from ..biliaison import backward_image, forward_image, lemma_local_data
from ..errors import CheckFailed, IdealError, ResourceBound
from ..height import h_plus
from .groebner import Bounds, groebner, krull_dimension, normal_form
from .minors import cell_name, expand_minor, ladder_ring

CHECKS = (
    "inclusion_J_in_I",
    "inclusion_J_in_Iprime",
    "congruence_identity",
    "ideal_equality_D1I_D2Iprime",
    "localization_phi",
    "localization_psi_phi_identity",
    "height_oracle_I",
    "height_oracle_Iprime",
    "height_oracle_J",
)

DEFAULT_PRIMES = (32003, 65537)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    witness: str | None = None
    detail: str = ""


@dataclass
class VerificationReport:
    step: int
    field: str
    checks: list = field(default_factory=list)
    bounds_hit: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == "fail"]

    @property
    def skipped(self):
        return [c for c in self.checks if c.status == "skipped"]

    def get(self, name):
        return next(c for c in self.checks if c.name == name)

    def raise_on_failure(self):
        bad = self.failed
        if bad:
            raise CheckFailed(f"{bad[0].name} failed", witness=bad[0].witness)


def parse_field(spec):
    """``"q"``/``"Q"`` -> 0, ``"fp:p"``/``"Fp:p"`` -> p, ints pass through."""
    if isinstance(spec, int):
        return spec
    s = str(spec).strip().lower()
    if s == "q":
        return 0
    if s.startswith("fp:"):
        p = int(s[3:])
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not a prime")
        return p
    raise ValueError(f"unknown field {spec!r}; use q or fp:<p>")


def field_name(modulus):
    return "Q" if modulus == 0 else f"Fp:{modulus}"


class _Context:
    """Rings, generators and cached bases for one step."""

    def __init__(self, step, modulus, bounds):
        self.step = step
        self.bounds = bounds
        src = step.source
        self.n = src.n
        self.ring = ladder_ring(src.ladder.plus_cells, modulus)
        self.yring = ladder_ring(src.ladder.plus_cells, modulus, extra=("y",))
        self._gb = {}

    def expand(self, minor, ring=None):
        return expand_minor(minor, self.n, ring or self.ring)

    def gens(self, ideal, ring=None):
        return [self.expand(m, ring) for m in ideal.generators]

    def gb(self, key, gens):
        if key not in self._gb:
            self._gb[key] = groebner(gens, bounds=self.bounds) if gens else []
        return self._gb[key]


def _first_nonzero(polys, basis):
    for p in polys:
        r = normal_form(p, basis) if basis else p
        if r:
            return p, r
    return None


def _inclusion(ctx, name, key):
    st = ctx.step
    ideal = st.source if key == "I" else st.target
    basis = ctx.gb(key, ctx.gens(ideal))
    bad = _first_nonzero(ctx.gens(st.link), basis)
    if bad:
        return CheckResult(name, "fail", bad[1].to_text(),
                           f"link generator {bad[0].to_text()} has a nonzero normal form")
    return CheckResult(name, "pass")


def _ordered_pivot_minors(ideal, k):
    """Pivot-size minors of the pivot subladder that use row v and column w.

    Each is returned as (rows, cols) with v last among rows and w last among
    cols, the orientation in which the congruence identity is written.
    """
    v, w = ideal.points[k - 1]
    t = ideal.sizes[k - 1]
    out = []
    for m in ideal.generators:
        if m.size != t or not _in_subladder(ideal, k, m):
            continue
        for rows, cols in ((m.rows, m.cols), (m.cols, m.rows)):
            if v in rows and w in cols:
                a = tuple(r for r in rows if r != v)
                b = tuple(c for c in cols if c != w)
                out.append((a, b))
                break
    return out


def _in_subladder(ideal, k, m):
    cells = ideal.subladder_cells(k - 1)
    return all(((a, b) if a <= b else (b, a)) in cells for a in m.rows for b in m.cols)


class _Ordered:
    """Minor-like with rows and cols taken in the given (unsorted) order."""

    def __init__(self, rows, cols):
        self.rows, self.cols = tuple(rows), tuple(cols)


def _congruence(ctx):
    st = ctx.step
    src = st.source
    v, w = src.points[st.pivot_k - 1]
    basis = ctx.gb("J", ctx.gens(st.link))
    num = ctx.expand(st.f_numerator) if st.f_numerator else ctx.ring.one()
    den = ctx.expand(st.f_denominator)
    count = 0
    for a, b in _ordered_pivot_minors(src, st.pivot_k):
        big = ctx.expand(_Ordered(a + (v,), b + (w,)))
        small = ctx.expand(_Ordered(a, b)) if a else ctx.ring.one()
        expr = num * big - den * small
        r = normal_form(expr, basis) if basis else expr
        count += 1
        if r:
            return CheckResult("congruence_identity", "fail", r.to_text(),
                               f"minor [{a + (v,)};{b + (w,)}]")
    return CheckResult("congruence_identity", "pass", detail=f"{count} minors")


def _equality(ctx):
    st = ctx.step
    J = ctx.gens(st.link)
    num = ctx.expand(st.f_numerator) if st.f_numerator else ctx.ring.one()
    den = ctx.expand(st.f_denominator)
    left = [num * g for g in ctx.gens(st.source)] + J
    right = [den * g for g in ctx.gens(st.target)] + J
    gl = ctx.gb("D1I+J", left)
    gr = ctx.gb("D2I'+J", right)
    bad = _first_nonzero(right, gl) or _first_nonzero(left, gr)
    if bad:
        return CheckResult("ideal_equality_D1I_D2Iprime", "fail", bad[1].to_text(),
                           f"generator {bad[0].to_text()} not in the other ideal")
    return CheckResult("ideal_equality_D1I_D2Iprime", "pass")


def _height(ctx, name, ideal, key, expected):
    gens = ctx.gens(ideal)
    if not gens:
        got = 0
    else:
        basis = ctx.gb(key, gens)
        got = ctx.ring.nvars - krull_dimension(gens, basis=basis)
    if got != expected:
        return CheckResult(name, "fail", None, f"oracle height {got}, combinatorial {expected}")
    return CheckResult(name, "pass", detail=f"height {got}")


def substitution_images(ring, data, forward):
    """Images of every ring variable under the forward or backward map."""
    y = ring.var("y")

    def var(c):
        return ring.var(cell_name(*c))

    image = forward_image if forward else backward_image
    images = []
    for name in ring.names:
        if name == "y":
            images.append(y)
            continue
        i, j = (int(x) for x in name[2:-1].split(","))
        images.append(image(data, (i, j), var, y))
    return images


def _localization(ctx):
    st = ctx.step
    src, k = st.source, st.pivot_k
    v, w = src.points[k - 1]
    t = src.sizes[k - 1]
    R = ctx.yring
    data = lemma_local_data(src, k)
    phi = substitution_images(R, data, True)
    psi = substitution_images(R, data, False)
    xvw = R.var(cell_name(v, w))
    rel = R.var("y") * xvw - 1

    target = ctx.gens(st.target, R) + [rel]
    basis = ctx.gb("I'[y]", target)
    phi_res = CheckResult("localization_phi", "pass")
    clear = xvw ** t
    for g in ctx.gens(src, R):
        img = g.substitute(phi) * clear
        r = normal_form(img, basis)
        if r:
            phi_res = CheckResult("localization_phi", "fail", r.to_text(),
                                  f"phi-image of {g.to_text()} is outside the target ideal")
            break

    unit = [rel]
    psi_res = CheckResult("localization_psi_phi_identity", "pass")
    for name in R.names:
        if name == "y":
            continue
        x = R.var(name)
        back = x.substitute(phi).substitute(psi)
        r = normal_form(back - x, unit)
        if r:
            psi_res = CheckResult("localization_psi_phi_identity", "fail", r.to_text(),
                                  f"psi(phi({name})) differs from {name}")
            break
    return [phi_res, psi_res]


def verify_step(step, field="fp:32003", bounds=None, index=0, only=None):
    """Run the verification battery on one step; returns a VerificationReport.

    ``field`` is ``"q"``, ``"fp:<p>"`` or an int modulus (0 for Q).  ``only``
    restricts to a subset of check names.
    """
    modulus = parse_field(field)
    bounds = bounds or Bounds()
    ctx = _Context(step, modulus, bounds)
    report = VerificationReport(index, field_name(modulus))
    start = time.monotonic()
    expected_I = h_plus(step.source).height
    try:
        profile = step.heights
    except IdealError as exc:
        # a corrupted step may carry an unnormalized target or link
        profile = None
        report.checks.append(CheckResult("height_profile", "fail", None, str(exc)))

    def run(names, fn):
        wanted = [n for n in names if only is None or n in only]
        if not wanted:
            return
        try:
            res = fn()
        except ResourceBound as exc:
            report.bounds_hit.append(str(exc))
            for n in wanted:
                report.checks.append(CheckResult(n, "skipped", None, str(exc)))
            return
        res = res if isinstance(res, list) else [res]
        report.checks.extend(r for r in res if r.name in wanted)

    run(["inclusion_J_in_I"], lambda: _inclusion(ctx, "inclusion_J_in_I", "I"))
    run(["inclusion_J_in_Iprime"], lambda: _inclusion(ctx, "inclusion_J_in_Iprime", "I'"))
    run(["congruence_identity"], lambda: _congruence(ctx))
    run(["ideal_equality_D1I_D2Iprime"], lambda: _equality(ctx))
    run(["localization_phi", "localization_psi_phi_identity"], lambda: _localization(ctx))
    run(["height_oracle_I"],
        lambda: _height(ctx, "height_oracle_I", step.source, "I", expected_I))
    run(["height_oracle_Iprime"],
        lambda: _height(ctx, "height_oracle_Iprime", step.target, "I'", expected_I))
    run(["height_oracle_J"],
        lambda: _height(ctx, "height_oracle_J", step.link, "J", expected_I - 1))
    # the combinatorial profile itself must already show the (h, h, h-1) pattern
    if profile is not None and profile != (expected_I, expected_I, expected_I - 1):
        report.checks.append(CheckResult("height_profile", "fail", None,
                                          f"combinatorial heights {profile}"))
    report.seconds = time.monotonic() - start
    return report
