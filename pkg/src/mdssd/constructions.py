"""The five families of self-dual GRS / extended-GRS constructions.

Each family picks evaluation points structured by cyclotomic cosets (families
1-3), by a translated subspace grid (family 4), or by subfield-subspace
translates of roots of unity (family 5), then delegates to the assembly
engines in `grs`.  Parameter validation is pure integer arithmetic so that
astronomically large-but-valid parameter sets can be checked without ever
materializing a field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

import sympy

from .errors import (
    HypothesisViolated,
    NotEnoughCosets,
    ParityInfeasible,
    TooLargeToMaterialize,
    UnsupportedTheorem,
)
from .field import FieldCtx, make_field
from .grs import (
    CodeArtifact,
    EvalVector,
    assemble_self_dual_grs,
    assemble_self_dual_xgrs,
)

THEOREMS = ("T1i", "T1ii", "T2", "T3i", "T3ii", "T4", "T5")

# Construction is refused (validation still succeeds) beyond this length.
MATERIALIZE_BUDGET = 1 << 16


@dataclass(frozen=True)
class ConstructionParams:
    theorem: str
    p: int
    d: int
    n: int
    m: int | None = None
    t: int | None = None
    s: int | None = None
    e: int | None = None
    k_sub: int | None = None

    @property
    def q(self) -> int:
        return self.p**self.d

    @property
    def r(self) -> int:
        return self.p ** (self.d // 2)

    def label(self) -> str:
        parts = []
        for key in ("m", "t", "s", "e", "k_sub"):
            val = getattr(self, key)
            if val is not None:
                parts.append(f"{'k' if key == 'k_sub' else key}={val}")
        return f"{self.theorem}({','.join(parts)})"

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem}
        for key in ("m", "t", "s", "e", "k_sub"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


@dataclass
class ConstructionTrace:
    """Diagnostic record of construction intermediates."""

    ctx: FieldCtx
    params: ConstructionParams
    I: tuple[int, ...] | None = None
    A: int | None = None
    lam: int | None = None
    locators: list[int] | None = None
    u: dict[int, int] | None = None  # per coset representative z
    c: int | None = None
    xi_s: int | None = None
    beta: int | None = None
    omega: int | None = None
    V_basis: tuple[int, ...] | None = None
    S: tuple[int, ...] | None = None  # grid coordinates (families 4-5)
    V: tuple[int, ...] | None = dc_field(default=None)

    def to_dict(self) -> dict:
        out: dict = {}
        if self.I is not None:
            out["I"] = list(self.I)
        if self.A is not None:
            out["A"] = self.A
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.locators is not None:
            out["locators"] = list(self.locators)
        if self.u is not None:
            out["u"] = {str(z): uz for z, uz in sorted(self.u.items())}
        if self.c is not None:
            out["c"] = self.c
        if self.xi_s is not None:
            out["xi_s"] = self.xi_s
        if self.beta is not None:
            out["beta"] = self.beta
        if self.omega is not None:
            out["omega"] = self.omega
        if self.V_basis is not None:
            out["V_basis"] = list(self.V_basis)
        return out


# --- hypothesis validation (integer-only; works for arbitrarily large q) ---

def _require(cond: bool, clause: str) -> None:
    if not cond:
        raise HypothesisViolated(clause)


def _require_square_q(p: int, d: int) -> int:
    _require(d % 2 == 0, "q = r^2 with r an odd prime power")
    return p ** (d // 2)


def validate(theorem: str, p: int, d: int, *, m: int | None = None, t: int | None = None,
             s: int | None = None, e: int | None = None, k_sub: int | None = None) -> ConstructionParams:
    """Check a theorem's hypotheses and return the normalized parameter set.

    Raises HypothesisViolated naming the failed clause."""
    if theorem not in THEOREMS:
        raise UnsupportedTheorem(theorem)
    if p == 2:
        raise HypothesisViolated("q is a power of an odd prime")
    if not sympy.isprime(p):
        raise HypothesisViolated("p is prime")
    _require(d >= 1, "d >= 1")
    q = p**d

    if theorem in ("T1i", "T1ii", "T2"):
        r = _require_square_q(p, d)
        _require(m is not None and t is not None, "m and t are required")
        _require(m >= 1 and (q - 1) % m == 0, "m | (q-1)")
        bound = (r + 1) // gcd(r + 1, m)
        if theorem == "T2":
            _require(t * m % 2 == 1, "tm is odd")
            _require(2 <= t <= bound // 2, "2 <= t <= (r+1)/(2 gcd(r+1,m))")
            n = t * m + 1
        else:
            _require(t * m % 2 == 0, "tm is even")
            _require(1 <= t <= bound, "1 <= t <= (r+1)/gcd(r+1,m)")
            if theorem == "T1i":
                _require((q - 1) // m % 2 == 0, "(q-1)/m is even")
                n = t * m
            else:
                _require(
                    not (t % 2 == 0 and m % 2 == 0 and r % 4 == 1),
                    "t is even, m is even and r ≡ 1 (mod 4)",
                )
                n = t * m + 2
        return ConstructionParams(theorem, p, d, n, m=m, t=t)

    if theorem in ("T3i", "T3ii"):
        r = _require_square_q(p, d)
        _require(m is not None and t is not None and s is not None, "m, t and s are required")
        _require(m >= 1 and (q - 1) % m == 0, "m | (q-1)")
        _require(s % 2 == 0 and s >= 2, "s is even")
        _require(m % s == 0, "s | m")
        _require((r + 1) % s == 0, "s | (r+1)")
        bound = s * (r - 1) // gcd(s * (r - 1), m)
        _require(1 <= t <= bound, "1 <= t <= s(r-1)/gcd(s(r-1),m)")
        if theorem == "T3i":
            _require((q - 1) // m % 2 == 0, "(q-1)/m is even")
            _require((r + 1) // s % 2 == 0, "(r+1)/s is even")
            n = t * m
        else:
            n = t * m + 2
        return ConstructionParams(theorem, p, d, n, m=m, t=t, s=s)

    if theorem == "T4":
        _require_square_q(p, d)
        s_prime = d // 2
        _require(e is not None, "e is required")
        _require(1 <= e <= s_prime, "1 <= e <= s")
        return ConstructionParams(theorem, p, d, p ** (2 * e) + 1, e=e)

    # T5
    _require(k_sub is not None and t is not None and e is not None, "k, t and e are required")
    _require(k_sub >= 1 and d % k_sub == 0, "k | (km) with q = p^{km}")
    m_prime = d // k_sub
    _require(t >= 1, "t >= 1")
    _require((p**k_sub - 1) % (2 * t) == 0, "2t | (p^k - 1)")
    _require(0 <= e <= m_prime - 1, "e <= m-1")
    _require((q - 1) % (4 * t) == 0, "(q-1)/(2t) is even")
    return ConstructionParams(theorem, p, d, 2 * t * p ** (k_sub * e), e=e, t=t, k_sub=k_sub)


# --- coset-representative selection ---

def select_coset_reps(ctx: FieldCtx, stride: int, m: int, t: int,
                      parity: str = "any") -> tuple[tuple[int, ...], int]:
    """Greedy ascending scan for indices i with g^{stride*i} in pairwise
    distinct cosets of the order-m subgroup.  `parity` constrains either the
    sum A of the chosen indices (A_even / A_odd) or every index (all_even).

    Fresh-coset test: stride*i*m mod (q-1) not previously seen."""
    q1 = ctx.q - 1
    subgroup_size = q1 // gcd(q1, stride)  # indices repeat beyond this

    def fresh_indices(step: int):
        seen: set[int] = set()
        for i in range(0, subgroup_size, step):
            key = stride * i * m % q1
            if key not in seen:
                seen.add(key)
                yield i

    if parity == "all_even":
        chosen = []
        for i in fresh_indices(2):
            chosen.append(i)
            if len(chosen) == t:
                return tuple(chosen), sum(chosen)
        raise ParityInfeasible(f"only {len(chosen)} even-index cosets available, needed {t}")

    candidates = fresh_indices(1)
    if parity == "any":
        chosen = []
        for i in candidates:
            chosen.append(i)
            if len(chosen) == t:
                return tuple(chosen), sum(chosen)
        raise NotEnoughCosets(t, len(chosen))

    if parity not in ("A_even", "A_odd"):
        raise ValueError(f"unknown parity mode {parity!r}")
    want = 0 if parity == "A_even" else 1
    base: list[int] = []
    base_keys: set[int] = set()
    final = None
    for i in range(subgroup_size):
        key = stride * i * m % q1
        if len(base) < t - 1:
            if key not in base_keys:
                base.append(i)
                base_keys.add(key)
            continue
        # final slot: any later representative of an unused coset qualifies
        if key not in base_keys and (sum(base) + i) % 2 == want:
            final = i
            break
    if final is None:
        if len(base) < t - 1:
            raise NotEnoughCosets(t, len(base))
        raise ParityInfeasible(f"no final index gives A ≡ {want} (mod 2)")
    chosen = base + [final]
    return tuple(chosen), sum(chosen)


# --- families 1-3: cyclotomic coset unions ---

def _coset_points(ctx: FieldCtx, stride: int, m: int, I: tuple[int, ...]) -> list[int]:
    """Points g^{k(q-1)/m + stride*z}, z over I (outer), 0 <= k < m (inner)."""
    q1 = ctx.q - 1
    step = q1 // m
    return [
        ctx.exp[(k * step + stride * z) % q1]
        for z in I
        for k in range(m)
    ]


def _u_products(ctx: FieldCtx, stride: int, m: int, I: tuple[int, ...]) -> dict[int, int]:
    """u_z = prod_{l in I, l != z} (g^{stride*z*m} - g^{stride*l*m})."""
    q1 = ctx.q - 1
    powers = {z: ctx.exp[stride * z * m % q1] for z in I}
    out = {}
    for z in I:
        acc = 1
        for l in I:
            if l != z:
                acc = ctx.mul_v(acc, ctx.sub_v(powers[z], powers[l]))
        out[z] = acc
    return out


def _check_budget(params: ConstructionParams) -> None:
    if params.n > MATERIALIZE_BUDGET:
        raise TooLargeToMaterialize(params.n, MATERIALIZE_BUDGET)


def construct_T1i(ctx: FieldCtx, m: int, t: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T1i", ctx.p, ctx.d, m=m, t=t)
    _check_budget(params)
    r, q1 = params.r, ctx.q - 1
    I, A = select_coset_reps(ctx, r - 1, m, t, "any")
    points = _coset_points(ctx, r - 1, m, I)
    lam = ctx.exp[((r + 1) * (t - 1) // 2 - m * A) % q1]
    a = EvalVector(ctx, tuple(points), extended=False)
    art, locs = assemble_self_dual_grs(a, lam, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, I=I, A=A, lam=lam, locators=locs,
                              u=_u_products(ctx, r - 1, m, I))
    return art, trace


def construct_T1ii(ctx: FieldCtx, m: int, t: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T1ii", ctx.p, ctx.d, m=m, t=t)
    _check_budget(params)
    r = params.r
    # the square condition needs (r+1)/2*(t-1) - (A + (t-2)z)m even for all z;
    # with m even the A-term vanishes mod 2, so only m odd constrains A
    if t % 2 == 1 or m % 2 == 0:
        parity = "any"
    elif r % 4 == 3:
        parity = "A_even"
    else:  # t even, m odd, r = 1 (mod 4); t/m both even with r = 1 is excluded
        parity = "A_odd"
    I, A = select_coset_reps(ctx, r - 1, m, t, parity)
    points = [0] + _coset_points(ctx, r - 1, m, I)
    a = EvalVector(ctx, tuple(points), extended=True)
    art, locs = assemble_self_dual_xgrs(a, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, I=I, A=A, locators=locs,
                              u=_u_products(ctx, r - 1, m, I))
    return art, trace


def construct_T2(ctx: FieldCtx, m: int, t: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T2", ctx.p, ctx.d, m=m, t=t)
    _check_budget(params)
    r = params.r
    I, A = select_coset_reps(ctx, r - 1, m, t, "all_even")
    points = _coset_points(ctx, r - 1, m, I)
    a = EvalVector(ctx, tuple(points), extended=True)
    art, locs = assemble_self_dual_xgrs(a, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, I=I, A=A, locators=locs,
                              u=_u_products(ctx, r - 1, m, I))
    return art, trace


def construct_T3i(ctx: FieldCtx, m: int, t: int, s: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T3i", ctx.p, ctx.d, m=m, t=t, s=s)
    _check_budget(params)
    r = params.r
    stride = (r + 1) // s
    I, A = select_coset_reps(ctx, stride, m, t, "any")
    points = _coset_points(ctx, stride, m, I)
    a = EvalVector(ctx, tuple(points), extended=False)
    art, locs = assemble_self_dual_grs(a, 1, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, I=I, A=A, lam=1, locators=locs,
                              u=_u_products(ctx, stride, m, I),
                              xi_s=ctx.root_of_unity_v(s))
    return art, trace


def construct_T3ii(ctx: FieldCtx, m: int, t: int, s: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T3ii", ctx.p, ctx.d, m=m, t=t, s=s)
    _check_budget(params)
    r = params.r
    stride = (r + 1) // s
    I, A = select_coset_reps(ctx, stride, m, t, "any")
    points = [0] + _coset_points(ctx, stride, m, I)
    a = EvalVector(ctx, tuple(points), extended=True)
    art, locs = assemble_self_dual_xgrs(a, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, I=I, A=A, locators=locs,
                              u=_u_products(ctx, stride, m, I),
                              xi_s=ctx.root_of_unity_v(s))
    return art, trace


# --- family 4: subspace grid alpha_k * beta + alpha_j ---

def construct_T4(ctx: FieldCtx, e: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T4", ctx.p, ctx.d, e=e)
    _check_budget(params)
    p, r = ctx.p, params.r
    gamma = ctx.subfield_generator_v(r)
    basis = tuple(ctx.pow_v(gamma, i) for i in range(e))
    # all F_p-combinations of the basis, mixed-radix order
    alphas = []
    for idx in range(p**e):
        acc, rem = 0, idx
        for b in basis:
            rem, c = rem // p, rem % p
            acc = ctx.add_v(acc, ctx.mul_v(c % p, b))
        alphas.append(acc)
    beta = ctx.pow_v(ctx.g_val, r - 1)
    points = [
        ctx.add_v(ctx.mul_v(ak, beta), aj)
        for ak in alphas
        for aj in alphas
    ]
    a = EvalVector(ctx, tuple(points), extended=True)
    art, locs = assemble_self_dual_xgrs(a, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, locators=locs, beta=beta,
                              V_basis=basis, S=tuple(alphas))
    return art, trace


# --- family 5: subfield-subspace translates of 2t-th roots of unity ---

def construct_T5(ctx: FieldCtx, k_sub: int, t: int, e: int) -> tuple[CodeArtifact, ConstructionTrace]:
    params = validate("T5", ctx.p, ctx.d, t=t, e=e, k_sub=k_sub)
    _check_budget(params)
    sub_q = ctx.p**k_sub
    sub_elems = ctx.subfield_elements_v(sub_q)
    gamma = ctx.subfield_generator_v(sub_q)
    omega = ctx.pow_v(gamma, (sub_q - 1) // (2 * t))
    basis = tuple(ctx.pow_v(ctx.g_val, i) for i in range(1, e + 1))
    # V = subfield-span of {g, ..., g^e}; coordinates are unique, so
    # V meets the subfield only in 0
    V = []
    for idx in range(sub_q**e):
        acc, rem = 0, idx
        for b in basis:
            rem, ci = rem // sub_q, rem % sub_q
            acc = ctx.add_v(acc, ctx.mul_v(sub_elems[ci], b))
        V.append(acc)
    points = []
    for j in range(2 * t):
        wj = ctx.pow_v(omega, j)
        points.extend(ctx.add_v(wj, u) for u in V)
    prod_nz = 1
    for u in V:
        if u != 0:
            prod_nz = ctx.mul_v(prod_nz, u)
    prod_shift = 1
    for u in V:
        for h in range(1, 2 * t):
            prod_shift = ctx.mul_v(
                prod_shift, ctx.sub_v(ctx.add_v(1, u), ctx.pow_v(omega, h))
            )
    c = ctx.mul_v(prod_nz, prod_shift)
    a = EvalVector(ctx, tuple(points), extended=False)
    art, locs = assemble_self_dual_grs(a, c, params.label(), params.to_dict())
    trace = ConstructionTrace(ctx, params, lam=c, locators=locs, c=c,
                              omega=omega, V_basis=basis, V=tuple(V))
    return art, trace


_CONSTRUCTORS = {
    "T1i": lambda ctx, pr: construct_T1i(ctx, pr.m, pr.t),
    "T1ii": lambda ctx, pr: construct_T1ii(ctx, pr.m, pr.t),
    "T2": lambda ctx, pr: construct_T2(ctx, pr.m, pr.t),
    "T3i": lambda ctx, pr: construct_T3i(ctx, pr.m, pr.t, pr.s),
    "T3ii": lambda ctx, pr: construct_T3ii(ctx, pr.m, pr.t, pr.s),
    "T4": lambda ctx, pr: construct_T4(ctx, pr.e),
    "T5": lambda ctx, pr: construct_T5(ctx, pr.k_sub, pr.t, pr.e),
}


def build(theorem: str, p: int, d: int, **kw) -> tuple[CodeArtifact, ConstructionTrace]:
    """Validate (integer-only), enforce the build budget, then construct."""
    params = validate(theorem, p, d, **kw)
    _check_budget(params)
    ctx = make_field(p, d)
    return _CONSTRUCTORS[theorem](ctx, params)


def construct_from_params(ctx: FieldCtx, params: ConstructionParams):
    return _CONSTRUCTORS[params.theorem](ctx, params)


# --- closed-form locators (tested point-by-point against brute force) ---

def closed_form_locator(params: ConstructionParams, trace: ConstructionTrace, i: int) -> int:
    """Per-family closed form of L at the i-th finite evaluation point."""
    ctx = trace.ctx
    th = params.theorem
    q1 = ctx.q - 1
    if th in ("T1i", "T2", "T3i"):
        m = params.m
        stride = params.r - 1 if th in ("T1i", "T2") else (params.r + 1) // params.s
        zi, k = divmod(i, m)
        z = trace.I[zi]
        alpha = ctx.exp[(k * (q1 // m) + stride * z) % q1]
        return ctx.mul_v(
            ctx.mul_v(ctx.int_v(m), ctx.pow_v(alpha, m - 1)), trace.u[z]
        )
    if th in ("T1ii", "T3ii"):
        m = params.m
        stride = params.r - 1 if th == "T1ii" else (params.r + 1) // params.s
        if i == 0:
            acc = 1
            for l in trace.I:
                acc = ctx.mul_v(acc, ctx.exp[stride * l * m % q1])
            if (m + 1) * params.t % 2 == 1:
                acc = ctx.neg_v(acc)
            return acc
        zi, k = divmod(i - 1, m)
        z = trace.I[zi]
        return ctx.mul_v(
            ctx.mul_v(ctx.int_v(m), ctx.exp[stride * z * m % q1]), trace.u[z]
        )
    if th == "T4":
        pe = len(trace.S)
        k0, j0 = divmod(i, pe)
        S = trace.S
        acc = ctx.pow_v(trace.beta, pe - 1)
        for j in range(pe):
            if j != j0:
                acc = ctx.mul_v(acc, ctx.sub_v(S[j0], S[j]))
        for k in range(pe):
            if k != k0:
                acc = ctx.mul_v(acc, ctx.sub_v(S[k0], S[k]))
        for j in range(pe):
            if j == j0:
                continue
            for k in range(pe):
                if k == k0:
                    continue
                term = ctx.sub_v(
                    ctx.mul_v(ctx.sub_v(S[k0], S[k]), trace.beta),
                    ctx.sub_v(S[j0], S[j]),
                )
                acc = ctx.mul_v(acc, term)
        return acc
    if th == "T5":
        block = ctx.p ** (params.k_sub * params.e)
        j = i // block
        return ctx.mul_v(ctx.pow_v(trace.omega, -j * block), trace.c)
    raise UnsupportedTheorem(th)


# --- exhaustive parameter enumeration (census spot checks, test sweeps) ---

def iter_valid_params(p: int, d: int, n_max: int):
    """Yield every ConstructionParams with n <= n_max, deterministically
    ordered by (theorem, parameters)."""
    q = p**d
    n_max = min(n_max, q + 1)
    q1 = q - 1
    divisors = sorted(sympy.divisors(q1))
    if d % 2 == 0:
        r = p ** (d // 2)
        for m in divisors:
            bound = (r + 1) // gcd(r + 1, m)
            # T1i
            if (q1 // m) % 2 == 0:
                for t in range(1, bound + 1):
                    if t * m > n_max:
                        break
                    if t * m % 2 == 0:
                        yield ConstructionParams("T1i", p, d, t * m, m=m, t=t)
        for m in divisors:
            bound = (r + 1) // gcd(r + 1, m)
            for t in range(1, bound + 1):
                if t * m + 2 > n_max:
                    break
                if t * m % 2 == 0 and not (t % 2 == 0 and m % 2 == 0 and r % 4 == 1):
                    yield ConstructionParams("T1ii", p, d, t * m + 2, m=m, t=t)
        for m in divisors:
            if m % 2 == 0:
                continue
            bound = (r + 1) // (2 * gcd(r + 1, m))
            for t in range(2, bound + 1):
                if t * m + 1 > n_max:
                    break
                if t % 2 == 1:
                    yield ConstructionParams("T2", p, d, t * m + 1, m=m, t=t)
        s_candidates = [s for s in sorted(sympy.divisors(r + 1)) if s % 2 == 0]
        for m in divisors:
            for s in s_candidates:
                if m % s != 0:
                    continue
                bound = s * (r - 1) // gcd(s * (r - 1), m)
                if (q1 // m) % 2 == 0 and ((r + 1) // s) % 2 == 0:
                    for t in range(1, bound + 1):
                        if t * m > n_max:
                            break
                        yield ConstructionParams("T3i", p, d, t * m, m=m, t=t, s=s)
        for m in divisors:
            for s in s_candidates:
                if m % s != 0:
                    continue
                bound = s * (r - 1) // gcd(s * (r - 1), m)
                for t in range(1, bound + 1):
                    if t * m + 2 > n_max:
                        break
                    yield ConstructionParams("T3ii", p, d, t * m + 2, m=m, t=t, s=s)
        for e in range(1, d // 2 + 1):
            if p ** (2 * e) + 1 <= n_max:
                yield ConstructionParams("T4", p, d, p ** (2 * e) + 1, e=e)
    for k_sub in sorted(sympy.divisors(d)):
        m_prime = d // k_sub
        sub_q = p**k_sub
        for t in range(1, (sub_q - 1) // 2 + 1):
            if (sub_q - 1) % (2 * t) != 0 or q1 % (4 * t) != 0:
                continue
            for e in range(0, m_prime):
                n = 2 * t * sub_q**e
                if n > n_max:
                    break
                yield ConstructionParams("T5", p, d, n, e=e, t=t, k_sub=k_sub)
