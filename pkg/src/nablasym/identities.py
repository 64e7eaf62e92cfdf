"""Registry of named identity checks.

Each check evaluates both sides exactly and compares them coefficient by
coefficient, in the Schur basis for symmetric functions.  ``check(name, **params)``
returns an IdentityCheck; ``grid(name, max_degree)`` lists the parameter sets
that ``verify --all`` runs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import combinat as cb
from .exactalg import q, q_int, qt, qt_is_nonneg_polynomial, t
from .hallops import (c_apply, c_star, c_vee, c_vee_remark, c_word, camh_pairing, cvee_p_pairing,
                      main_pairing_expected, star_dual)
from .macdonald import nabla
from .parking import erun, pf_genfun, qpoly, touch_of
from .symfun import (basis_extract, basis_inject, e, from_schur, fund_solve, get_trunc, h, hall, lincomb, m, one,
                     p, petrie, star)


class IdentityError(ValueError):
    pass


@dataclass
class IdentityCheck:
    name: str
    params: dict
    lhs: Any
    rhs: Any
    verdict: bool
    witness: dict | None = None
    elapsed_ms: int = 0

    def to_json_obj(self):
        return {"identity": self.name, "params": dict(self.params), "verdict": bool(self.verdict),
                "witness": self.witness, "elapsed_ms": int(self.elapsed_ms)}


@dataclass
class _Entry:
    fn: Callable
    params: tuple
    degree: Callable
    grid: Callable
    doc: str = ""
    defaults: dict = field(default_factory=dict)


REGISTRY: dict[str, _Entry] = {}


def _register(name, params, degree, grid, defaults=None):
    def deco(fn):
        REGISTRY[name] = _Entry(fn, params, degree, grid, (fn.__doc__ or "").strip(), defaults or {})
        return fn
    return deco


# -- comparison helpers -------------------------------------------------------


def _cmp_tables(lhs, rhs, keyname="partition"):
    keys = sorted(set(lhs) | set(rhs), key=lambda k: (sum(k) if isinstance(k, tuple) else 0, cb.sort_key(k)
                                                        if isinstance(k, tuple) else k))
    zero = qt(0)
    for k in keys:
        a, b = lhs.get(k, zero), rhs.get(k, zero)
        if a != b:
            return {keyname: list(k) if isinstance(k, tuple) else k, "lhs": str(a), "rhs": str(b)}
    return None


def compare_symfun(lhs, rhs):
    return _cmp_tables(basis_extract(lhs, "s"), basis_extract(rhs, "s"))


def _finish(name, params, lhs, rhs, witness, t0):
    return IdentityCheck(name, params, lhs, rhs, witness is None, witness,
                         int((time.perf_counter() - t0) * 1000))


def _apply_word(word, f):
    for a in reversed(word):
        f = c_apply(a, f)
    return f


def _sym_check(name, params, lhs, rhs, t0):
    return _finish(name, params, lhs, rhs, compare_symfun(lhs, rhs), t0)


def _pf_as_symfun(fv):
    return from_schur(fund_solve(fv))


def _sign(k):
    return -1 if k % 2 else 1


def _compositions_bounded(total, parts):
    """Compositions with exactly `parts` parts and sum <= total."""
    for s in range(parts, total + 1):
        for a in cb.enumerate_compositions(s):
            if len(a) == parts:
                yield a


# -- shuffle family -----------------------------------------------------------


@_register("shuffle", ("n",), lambda n: n, lambda D: [{"n": n} for n in range(1, D + 1)])
def _shuffle(t0, n):
    """nabla e_n against the parking function sum."""
    lhs = nabla(e(n))
    rhs = _pf_as_symfun(pf_genfun(n))
    return _sym_check("shuffle", {"n": n}, lhs, rhs, t0)


def _comp_grid(D):
    return [{"alpha": list(a)} for n in range(1, D + 1) for a in cb.enumerate_compositions(n)]


@_register("comp-shuffle", ("alpha",), lambda alpha: sum(alpha), _comp_grid)
def _comp_shuffle(t0, alpha):
    """nabla C_alpha against the touch-filtered parking function sum."""
    alpha = cb.as_composition(alpha)
    lhs = nabla(c_word(alpha))
    rhs = _pf_as_symfun(pf_genfun(sum(alpha), touch=alpha))
    return _sym_check("comp-shuffle", {"alpha": list(alpha)}, lhs, rhs, t0)


@_register("pn", ("n",), lambda n: n, lambda D: [{"n": n} for n in range(1, D + 1)])
def _pn(t0, n):
    """(-1)^(n-1) p_n = sum over alpha of [alpha_1]_q C_alpha."""
    lhs = p(n).scale(_sign(n - 1))
    rhs = lincomb((q_int(a[0]), c_word(a)) for a in cb.enumerate_compositions(n))
    return _sym_check("pn", {"n": n}, lhs, rhs, t0)


@_register("pn-pf", ("n",), lambda n: n, lambda D: [{"n": n} for n in range(1, D + 1)])
def _pn_pf(t0, n):
    """(-1)^(n-1) nabla p_n against the [ret]_q-weighted parking function sum."""
    lhs = nabla(p(n)).scale(_sign(n - 1))
    rhs = _pf_as_symfun(pf_genfun(n, path_weight=lambda a: q_int(touch_of(a)[0]).num))
    return _sym_check("pn-pf", {"n": n}, lhs, rhs, t0)


def _hook_grid(D):
    return [{"n": n, "k": k} for n in range(2, D + 1) for k in range(1, D - n + 1)]


def _hook_check(n, k):
    if n < 2 or k < 1:
        raise IdentityError("hook identities need n >= 2 and k >= 1")


def hook_rhs(n, k):
    terms = []
    for a in range(1, n + 1):
        coef = qt(k + 1)
        for i in range(1, a):
            coef = coef + q ** (n - i)
        inner = []
        for tau in cb.enumerate_compositions(n - a):
            for b in range(0, k + 1):
                for rho in cb.enumerate_compositions(k - b):
                    inner.append((1, c_word(tau + (a + b,) + rho)))
        terms.append((coef, lincomb(inner)))
    return lincomb(terms)


@_register("hook", ("n", "k"), lambda n, k: n + k, _hook_grid)
def _hook(t0, n, k):
    """(-1)^(n-1) m_{n,1^k} against the triple-sum C expansion."""
    _hook_check(n, k)
    lhs = m((n,) + (1,) * k).scale(_sign(n - 1))
    return _sym_check("hook", {"n": n, "k": k}, lhs, hook_rhs(n, k), t0)


@_register("hook-pf", ("n", "k"), lambda n, k: n + k, _hook_grid)
def _hook_pf(t0, n, k):
    """(-1)^(n-1) nabla m_{n,1^k} against the qpoly-weighted parking function sum."""
    _hook_check(n, k)
    lhs = nabla(m((n,) + (1,) * k)).scale(_sign(n - 1))
    rhs = _pf_as_symfun(pf_genfun(n + k, path_weight=lambda a: qpoly(n, k, a)))
    return _sym_check("hook-pf", {"n": n, "k": k}, lhs, rhs, t0)


# -- the m_{2^k} family ------------------------------------------------------


def _k_grid(D, lo=1):
    return [{"k": k} for k in range(lo, D // 2 + 1)]


def m2k_expansion_rhs(k):
    out = [(1, e(2 * k))]
    for i in range(1, k + 1):
        for alpha in _compositions_bounded(k, i):
            word = tuple(2 * x for x in alpha)
            out.append((q ** i, _apply_word(word, e(2 * k - 2 * sum(alpha)))))
    return lincomb(out)


@_register("m2k-expansion", ("k",), lambda k: 2 * k, _k_grid)
def _m2k_expansion(t0, k):
    """(-1)^k m_{2^k} = e_2k + sum q^i C_{2 alpha_1} ... C_{2 alpha_i} e_{2k - 2|alpha|}."""
    lhs = m((2,) * k).scale(_sign(k))
    return _sym_check("m2k-expansion", {"k": k}, lhs, m2k_expansion_rhs(k), t0)


@_register("m2k-recursion", ("k",), lambda k: 2 * k, _k_grid)
def _m2k_recursion(t0, k):
    """(-1)^k m_{2^k} = e_2k + q sum_i C_2i((-1)^(k-i) m_{2^(k-i)})."""
    lhs = m((2,) * k).scale(_sign(k))
    rhs = e(2 * k) + lincomb((q, c_apply(2 * i, m((2,) * (k - i)).scale(_sign(k - i))))
                             for i in range(1, k + 1))
    return _sym_check("m2k-recursion", {"k": k}, lhs, rhs, t0)


def _m2k_erun_grid(D):
    return [{"k": k, "pf": f} for k in range(1, D // 2 + 1) for f in (0, 1)]


@_register("m2k-erun", ("k", "pf"), lambda k, pf=1: 2 * k, _m2k_erun_grid, {"pf": 1})
def _m2k_erun(t0, k, pf=1):
    """The [erun+1]_q form: as a C expansion (pf=0) or, after nabla, as a parking function sum (pf=1)."""
    if pf:
        lhs = nabla(m((2,) * k)).scale(_sign(k))
        rhs = _pf_as_symfun(pf_genfun(2 * k, path_weight=lambda a: q_int(erun(touch_of(a)) + 1).num))
    else:
        lhs = m((2,) * k).scale(_sign(k))
        rhs = lincomb((q_int(erun(a) + 1), c_word(a)) for a in cb.enumerate_compositions(2 * k))
    return _sym_check("m2k-erun", {"k": k, "pf": pf}, lhs, rhs, t0)


@_register("e2k-alt", ("k",), lambda k: 2 * k, _k_grid)
def _e2k_alt(t0, k):
    """e_2k = sum_i (-1)^i m_{2^i} h_{2k-2i}."""
    rhs = lincomb((_sign(i), m((2,) * i) * h(2 * k - 2 * i)) for i in range(k + 1))
    return _sym_check("e2k-alt", {"k": k}, e(2 * k), rhs, t0)


def _petrie_grid(D):
    return [{"k": k, "n": n} for k in range(2, 6) for n in range(0, D + 1)]


@_register("petrie", ("k", "n"), lambda k, n: n, _petrie_grid)
def _petrie(t0, k, n):
    """G(k, n) = sum_i (-1)^i m_{k^i} h_{n-ki}."""
    if k < 1 or n < 0:
        raise IdentityError("petrie needs k >= 1 and n >= 0")
    rhs = lincomb((_sign(i), m((k,) * i) * h(n - k * i)) for i in range(n // k + 1))
    return _sym_check("petrie", {"k": k, "n": n}, petrie(k, n), rhs, t0)


def _ak_grid(D):
    return [{"a": a, "k": k} for a in range(2, D + 1) for k in range(1, D // a + 1)]


@_register("ak-recursion", ("a", "k"), lambda a, k: a * k, _ak_grid)
def _ak_recursion(t0, a, k):
    """(-1)^((a-1)k) m_{a^k} = q^(a-1) sum_i C_ai((-1)^((a-1)(k-i)) m_{a^(k-i)}) + (-1)^(ak) G(a, ak)."""
    if a < 1 or k < 1:
        raise IdentityError("ak-recursion needs a >= 1 and k >= 1")
    lhs = m((a,) * k).scale(_sign((a - 1) * k))
    rhs = lincomb((q ** (a - 1), c_apply(a * i, m((a,) * (k - i)).scale(_sign((a - 1) * (k - i)))))
                  for i in range(1, k + 1))
    rhs = rhs + petrie(a, a * k).scale(_sign(a * k))
    return _sym_check("ak-recursion", {"a": a, "k": k}, lhs, rhs, t0)


# -- two columns ---------------------------------------------------------------


def _main_grid(D):
    return [{"k": k, "l": l} for k in range(1, D // 2 + 1) for l in range(0, D - 2 * k + 1)]


def _m2k1l(k, l):
    return m((2,) * k + (1,) * l)


def main_rhs_terms(k, l):
    """Right side of the two-column recursion as a list of (label, SymFun) terms."""
    terms = [("e", e(2 * k + l).scale(cb.binom(k + l, k)))]
    for i in range(1, k + 1):
        for j in range(0, l + 1):
            inner = _m2k1l(k - i, l - j).scale(_sign(k - i))
            terms.append(((i, j), c_apply(2 * i + j, inner).scale(q * cb.binom(i - 1 + j, i - 1))))
    return terms


@_register("main", ("k", "l", "flip", "qshift"), lambda k, l, flip=0, qshift=0: 2 * k + l, _main_grid,
           {"flip": 0, "qshift": 0})
def _main(t0, k, l, flip=0, qshift=0):
    """(-1)^k m_{2^k 1^l} against the two-column recursion.

    ``flip=i`` negates the i-th right-side term and ``qshift=i`` multiplies it
    by q (1-based; 0 leaves the identity intact).  Used for mutation testing.
    """
    if k < 1 or l < 0:
        raise IdentityError("main needs k >= 1 and l >= 0")
    terms = main_rhs_terms(k, l)
    for idx in (flip, qshift):
        if idx and not 1 <= idx <= len(terms):
            raise IdentityError(f"mutation index {idx} out of range 1..{len(terms)}")
    parts = []
    for pos, (_, f) in enumerate(terms, 1):
        if pos == flip:
            f = -f
        if pos == qshift:
            f = f.scale(q)
        parts.append((1, f))
    lhs = _m2k1l(k, l).scale(_sign(k))
    params = {"k": k, "l": l}
    if flip:
        params["flip"] = flip
    if qshift:
        params["qshift"] = qshift
    return _sym_check("main", params, lhs, lincomb(parts), t0)


def main_term_count(k, l):
    return 1 + k * (l + 1)


@_register("main-pairing", ("k", "l"), lambda k, l: 2 * k + l, _main_grid)
def _main_pairing(t0, k, l):
    """<q sum binom C_{2i+j}((-1)^(k-i) m), h_lam> for every lam, against the closed-form table."""
    if k < 1 or l < 0:
        raise IdentityError("main-pairing needs k >= 1 and l >= 0")
    body = lincomb((1, f) for lab, f in main_rhs_terms(k, l) if lab != "e")
    n = 2 * k + l
    lhs = {lam: hall(body, h(lam)) for lam in cb.enumerate_partitions(n)}
    rhs = {lam: main_pairing_expected(k, l, lam) for lam in cb.enumerate_partitions(n)}
    lhs = {a: b for a, b in lhs.items() if b}
    rhs = {a: b for a, b in rhs.items() if b}
    return _finish("main-pairing", {"k": k, "l": l}, lhs, rhs, _cmp_tables(lhs, rhs), t0)


def c_expansion_terms(k, l):
    """Fully expanded C-expansion of (-1)^k m_{2^k 1^l} from the recursion.

    Returns {(word, j): coefficient} meaning coefficient * C_word(e_j).
    """
    if k == 0:
        return {((), l): qt(1)}
    out = {((), 2 * k + l): qt(cb.binom(k + l, k))}
    for i in range(1, k + 1):
        for j in range(0, l + 1):
            for (word, ej), c in c_expansion_terms(k - i, l - j).items():
                key = ((2 * i + j,) + word, ej)
                out[key] = out.get(key, qt(0)) + c * q * cb.binom(i - 1 + j, i - 1)
    return {a: b for a, b in out.items() if b}


EXAMPLE_M221 = {
    ((), 5): qt(3),
    ((2,), 3): 2 * q,
    ((3,), 2): qt(q),
    ((4,), 1): qt(q),
    ((5,), 0): 2 * q,
    ((2, 2), 1): q ** 2,
    ((2, 3), 0): q ** 2,
    ((3, 2), 0): q ** 2,
}


def _eval_terms(terms):
    return lincomb((c, _apply_word(word, e(j) if j else one())) for (word, j), c in terms.items())


@_register("example-1-12", (), lambda: 5, lambda D: [{}] if D >= 5 else [])
def _example(t0):
    """The eight-term C expansion of m_{2,2,1}: term for term, then as symmetric functions."""
    derived = c_expansion_terms(2, 1)
    want = {a: qt(b) for a, b in EXAMPLE_M221.items()}
    wit = None
    if derived != want:
        for key in sorted(set(derived) | set(want)):
            a, b = derived.get(key, qt(0)), want.get(key, qt(0))
            if a != b:
                wit = {"term": f"C{list(key[0])}(e_{key[1]})", "lhs": str(a), "rhs": str(b)}
                break
    lhs = m((2, 2, 1))
    rhs = _eval_terms(want)
    if wit is None:
        wit = compare_symfun(lhs, rhs)
    return _finish("example-1-12", {}, lhs, rhs, wit, t0)


# -- positivity scans ------------------------------------------------------------


def _scan(name, params, items, t0):
    lhs = {}
    wit = None
    for label, f in items:
        g = nabla(f)
        co = basis_extract(g, "s")
        lhs[label] = g
        for lam in sorted(co, key=cb.sort_key):
            if not qt_is_nonneg_polynomial(co[lam]) and wit is None:
                wit = {"input": list(label), "partition": list(lam), "lhs": str(co[lam]), "rhs": "N[q,t]"}
    return IdentityCheck(name, params, lhs, None, wit is None, wit, int((time.perf_counter() - t0) * 1000))


@_register("positivity-scan", ("n",), lambda n: n, lambda D: [{"n": n} for n in range(1, D + 1)])
def _positivity_scan(t0, n):
    """(-1)^(|mu|-l(mu)) nabla m_mu is Schur positive for all mu of n."""
    items = [(mu, m(mu).scale(_sign(n - len(mu)))) for mu in cb.enumerate_partitions(n)]
    return _scan("positivity-scan", {"n": n}, items, t0)


@_register("gak-scan", ("a", "k"), lambda a, k: a * k, _ak_grid)
def _gak_scan(t0, a, k):
    """(-1)^(ak) nabla G(a, ak) is Schur positive."""
    items = [((a, k), petrie(a, a * k).scale(_sign(a * k)))]
    return _scan("gak-scan", {"a": a, "k": k}, items, t0)


# -- operator calculus on random inputs -----------------------------------------


def random_symfun(rng, n, terms=3, basis=None):
    """A random degree-n function with small integer-polynomial coefficients."""
    parts = cb.enumerate_partitions(n)
    basis = basis or rng.choice("pshem")
    out = []
    for _ in range(terms):
        lam = rng.choice(parts)
        c = qt(rng.randint(-3, 3) + rng.randint(-1, 1) * q ** rng.randint(1, 2)
               + rng.randint(-1, 1) * t ** rng.randint(1, 2))
        out.append((c, basis_inject(basis, lam)))
    f = lincomb(out)
    return f if f else basis_inject(basis, parts[0])


def _op_params(rng, max_degree):
    a = rng.randint(-1, 3)
    ng = rng.randint(max(0, -a), max(max(0, -a), max_degree - a))
    return a, ng


def _op_grid(D):
    return [{"seed": s, "max_degree": min(D, 6)} for s in range(5)]


@_register("hall-adjoint", ("seed", "max_degree"), lambda seed, max_degree=6: max_degree, _op_grid,
           {"max_degree": 6})
def _hall_adjoint(t0, seed, max_degree=6):
    """<f, C_a g> = <C_a^vee f, g> on a seeded random instance."""
    rng = random.Random(seed)
    a, ng = _op_params(rng, max_degree)
    g = random_symfun(rng, ng)
    f = random_symfun(rng, ng + a)
    lhs = {(0,): hall(f, c_apply(a, g))}
    rhs = {(0,): hall(c_vee(a, f), g)}
    wit = _cmp_tables(lhs, rhs, "pairing")
    if wit is None:
        v1, v2 = c_vee(a, f), c_vee_remark(a, f)
        wit = compare_symfun(v1, v2)
    return _finish("hall-adjoint", {"seed": seed, "a": a, "deg": ng}, lhs, rhs, wit, t0)


@_register("star-adjoint", ("seed", "max_degree"), lambda seed, max_degree=6: max_degree, _op_grid,
           {"max_degree": 6})
def _star_adjoint(t0, seed, max_degree=6):
    """<f, C_a g>_* = <C_a^* f, g>_* on a seeded random instance."""
    rng = random.Random(seed)
    a, ng = _op_params(rng, max_degree)
    g = random_symfun(rng, ng)
    f = random_symfun(rng, ng + a)
    lhs = {(0,): star(f, c_apply(a, g))}
    rhs = {(0,): star(c_star(a, f), g)}
    return _finish("star-adjoint", {"seed": seed, "a": a, "deg": ng}, lhs, rhs,
                   _cmp_tables(lhs, rhs, "pairing"), t0)


@_register("star-bridge", ("seed", "max_degree"), lambda seed, max_degree=6: max_degree, _op_grid,
           {"max_degree": 6})
def _star_bridge(t0, seed, max_degree=6):
    """<f, g> = <f, g[-eps X / M]>_* on a seeded random instance."""
    rng = random.Random(seed)
    n = rng.randint(0, max_degree)
    f, g = random_symfun(rng, n), random_symfun(rng, n)
    lhs = {(0,): hall(f, g)}
    rhs = {(0,): star(f, star_dual(g))}
    return _finish("star-bridge", {"seed": seed, "deg": n}, lhs, rhs, _cmp_tables(lhs, rhs, "pairing"), t0)


@_register("camh", ("seed", "max_degree"), lambda seed, max_degree=6: max_degree, _op_grid,
           {"max_degree": 6})
def _camh(t0, seed, max_degree=6):
    """<C_a m_mu, h_lam> directly and from the H_i(z) product formula."""
    rng = random.Random(seed)
    a = rng.randint(1, max_degree)
    mu = rng.choice(cb.enumerate_partitions(rng.randint(0, max_degree - a)))
    lam = rng.choice(cb.enumerate_partitions(sum(mu) + a))
    lhs = {(0,): hall(c_apply(a, m(mu)), h(lam))}
    rhs = {(0,): camh_pairing(a, mu, lam)}
    return _finish("camh", {"seed": seed, "a": a, "mu": list(mu), "lam": list(lam)}, lhs, rhs,
                   _cmp_tables(lhs, rhs, "pairing"), t0)


@_register("cvee-p", ("seed", "max_degree"), lambda seed, max_degree=6: max_degree, _op_grid,
           {"max_degree": 6})
def _cvee_p(t0, seed, max_degree=6):
    """<C_a^vee p_lam, p_mu> directly and from the power-sum formula."""
    rng = random.Random(seed)
    a = rng.randint(0, max_degree)
    lam = rng.choice(cb.enumerate_partitions(rng.randint(a, max_degree)))
    mu = rng.choice(cb.enumerate_partitions(sum(lam) - a))
    lhs = {(0,): hall(c_vee(a, basis_inject("p", lam)), basis_inject("p", mu))}
    rhs = {(0,): cvee_p_pairing(a, lam, mu)}
    return _finish("cvee-p", {"seed": seed, "a": a, "lam": list(lam), "mu": list(mu)}, lhs, rhs,
                   _cmp_tables(lhs, rhs, "pairing"), t0)


# -- entry points ------------------------------------------------------------------


def names():
    return list(REGISTRY)


def check(name, params=None, **kw):
    if name not in REGISTRY:
        raise IdentityError(f"unknown identity {name!r}; known: {', '.join(REGISTRY)}")
    ent = REGISTRY[name]
    params = dict(params or {}, **kw)
    unknown = set(params) - set(ent.params)
    if unknown:
        raise IdentityError(f"{name}: unknown parameter(s) {sorted(unknown)}; expected {list(ent.params)}")
    missing = [k for k in ent.params if k not in params and k not in ent.defaults]
    if missing:
        raise IdentityError(f"{name}: missing parameter(s) {missing}")
    for k, v in params.items():
        if k == "alpha":
            if not isinstance(v, (list, tuple)) or not v or any(int(x) < 1 for x in v):
                raise IdentityError(f"{name}: alpha must be a nonempty list of positive integers")
            params[k] = [int(x) for x in v]
        else:
            params[k] = int(v)
    deg = ent.degree(**params)
    if deg > get_trunc():
        raise IdentityError(f"{name}: degree {deg} exceeds truncation {get_trunc()}")
    if deg < 0:
        raise IdentityError(f"{name}: negative degree")
    t0 = time.perf_counter()
    return ent.fn(t0, **params)


def grid(name, max_degree):
    return REGISTRY[name].grid(max_degree)


def all_cases(max_degree):
    return [(name, prm) for name in REGISTRY for prm in grid(name, max_degree)]


def _run_case(case):
    name, prm = case
    return check(name, prm).to_json_obj()


def run_all(max_degree, threads=1):
    """JSON reports for every registry entry over its grid, in registry order."""
    cases = all_cases(max_degree)
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        from .symfun import set_trunc
        with ProcessPoolExecutor(max_workers=threads, initializer=set_trunc, initargs=(get_trunc(),)) as ex:
            return list(ex.map(_run_case, cases, chunksize=1))
    return [_run_case(c) for c in cases]
