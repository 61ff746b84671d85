"""Verification routines shared by ``kla2 verify`` and the acceptance tests.

Each check returns a :class:`CheckResult` whose ``lines`` list every
expected/actual comparison that was made, so a failure is self-explaining.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import hecke
from .cells import a_fn, cond54, two_sided
from .coxeter import GENS, descents, star
from .extended import (
    D_TABLE,
    USET,
    USET_LISTED,
    W0,
    W0_LONGEST,
    W0_WORDS,
    ExtElement,
    d_elem,
    eps,
    factor_c0,
    max_rep,
    min_rep,
    weight_elem,
)
from .lattice import ALPHA, BETA, X, Y, ZERO_W, Weight, w0_act
from .laurent import ONE, XI, ZERO, LaurentPoly
from .muclosed import predict
from .weights import (
    a_coeff,
    b_direct,
    b_table,
    dim_V,
    minuscule_mult,
    region,
    res0,
    stab_data,
    tensor_mult,
    weight_mult,
)

SCAN_LEN = 14


@dataclass
class CheckResult:
    check_id: str
    ok: bool = True
    lines: list = field(default_factory=list)

    def expect(self, label, expected, actual):
        good = expected == actual
        self.ok &= good
        self.lines.append(f"{'ok  ' if good else 'FAIL'} {label}: expected {expected}, got {actual}")
        return good

    def note(self, text):
        self.lines.append(f"     {text}")

    def fail(self, text):
        self.ok = False
        self.lines.append(f"FAIL {text}")

    def report(self):
        head = f"[{'PASS' if self.ok else 'FAIL'}] {self.check_id}"
        return "\n".join([head] + ["  " + ln for ln in self.lines])


def _ext(text):
    return ExtElement.parse(text)


def _fmt(expansion):
    items = sorted(expansion.items(), key=lambda kv: kv[0].sort_key())
    return "{" + ", ".join(f"{z}: {h}" for z, h in items) + "}"


_W0 = ExtElement(0, W0_LONGEST)


def _lam_w0(m, n):
    return weight_elem(Weight(m, n)) * _W0


# operands: w0 = sts, o = omega; words multiply left to right
PRODUCT_IDENTITIES = [
    ("4.2(1)", [("sts", "sts"), ("stso", "oosts"), ("stsoo", "osts")],
     lambda: {_W0: XI ** 3 - XI}),
    ("4.2(2)", [("sts", "rsts"), ("stsr", "sts"), ("stso", "oorsts"), ("stsoo", "orsts"),
                ("stsro", "oosts"), ("stsroo", "osts")],
     lambda: {_lam_w0(1, 1): ONE, _W0: XI ** 2}),
    ("4.2(3)", [("sts", "osts"), ("stso", "sts"), ("stsoo", "oosts")],
     lambda: {_lam_w0(1, 0): XI}),
    ("4.2(4)", [("sts", "orsts"), ("stso", "rsts"), ("stsoo", "oorsts")],
     lambda: {_lam_w0(1, 0): XI ** 2}),
    ("4.2(5)", [("sts", "oosts"), ("stso", "osts"), ("stsoo", "sts")],
     lambda: {_lam_w0(0, 1): XI}),
    ("4.2(6)", [("sts", "oorsts"), ("stso", "orsts"), ("stsoo", "rsts")],
     lambda: {_lam_w0(0, 1): XI ** 2}),
    ("4.3(1)", [("stsr", "rsts"), ("stsro", "oorsts"), ("stsroo", "orsts")],
     lambda: {_lam_w0(1, 1): XI, _W0: XI ** 3}),
    ("4.3(2)", [("stsr", "osts"), ("stsro", "sts"), ("stsroo", "oosts")],
     lambda: {_lam_w0(1, 0): XI ** 2}),
    ("4.3(3)", [("stsr", "oosts"), ("stsroo", "sts"), ("stsro", "osts")],
     lambda: {_lam_w0(0, 1): XI ** 2}),
    ("4.3(4)", [("stsr", "orsts"), ("stsro", "rsts"), ("stsroo", "oorsts")],
     lambda: {_lam_w0(0, 2): XI, _lam_w0(1, 0): 2 * XI}),
    ("4.3(5)", [("stsr", "oorsts"), ("stsroo", "rsts"), ("stsro", "orsts")],
     lambda: {_lam_w0(2, 0): XI, _lam_w0(0, 1): 2 * XI}),
]


# 4.x -----------------------------------------------------------------------


def check_d_table():
    """``d_u = u * prod x_a`` over simple roots ``a`` sent negative by ``u``."""
    res = CheckResult("4.1")
    fundamental = {"alpha": X, "beta": Y}
    roots = {"alpha": ALPHA, "beta": BETA}
    for name in W0_WORDS:
        lam = ZERO_W
        for key, root in roots.items():
            i, j = w0_act(name, root).root_coords()
            if i <= 0 and j <= 0:
                lam = lam + fundamental[key]
        d = ExtElement(0, W0[name]) * weight_elem(lam)
        res.expect(f"d_{name}", str(D_TABLE[name]), str(d))
    return res


def _product_check(check_id, prefix):
    res = CheckResult(check_id)
    for label, operands, expected in PRODUCT_IDENTITIES:
        if not label.startswith(prefix):
            continue
        want = expected()
        for a, b in operands:
            got = hecke.c_product(_ext(a), _ext(b))
            res.expect(f"{label} C_{a} C_{b}", _fmt(want), _fmt(got))
    return res


def check_prop42():
    return _product_check("4.2", "4.2")


def check_prop43():
    return _product_check("4.3", "4.3")


def delta_triples():
    """Triples ``(d_u, d_u', z)`` with nonzero ``v**2`` coefficient of
    ``h_{w0 d_u^(-1), d_u' w0, z w0}``, plus a list of anomalies
    (coefficient not 1, z outside {0,x,y}, or several z for one product)."""
    triples, anomalies = set(), []
    for u in W0_WORDS:
        du = d_elem(u)
        left = _W0 * du.inverse()
        for u2 in W0_WORDS:
            right = d_elem(u2) * _W0
            hits = []
            for z, h in hecke.c_product(left, right).items():
                delta = h.coeff(2)
                if not delta:
                    continue
                fac = factor_c0(z)
                if fac is None or fac[0] != "e" or fac[2] != "e":
                    anomalies.append(f"delta at {z} which is not of the form z1*w0")
                    continue
                hits.append((fac[1], delta))
            if len(hits) > 1:
                anomalies.append(f"({u}, {u2}): several z1 {hits}")
            for z1, delta in hits:
                if delta != 1:
                    anomalies.append(f"({u}, {u2}): delta {delta} at {z1}")
                if z1 not in (ZERO_W, X, Y):
                    anomalies.append(f"({u}, {u2}): z1 = {z1} outside {{0, x, y}}")
                triples.add((du, d_elem(u2), z1))
    return frozenset(triples), anomalies


def _triple_str(t):
    d, d2, z = t
    return f"({d}, {d2}, {z})"


def check_prop44():
    res = CheckResult("4.4")
    triples, anomalies = delta_triples()
    res.expect("anomalies (several z1, delta != 1, z1 outside {0,x,y})", [], anomalies)
    res.expect("size of the delta = 1 set", 18, len(triples))
    res.expect("delta set equals USET", True, triples == USET)
    missing = sorted(map(_triple_str, USET_LISTED - triples))
    extra = sorted(map(_triple_str, triples - USET_LISTED))
    res.expect("listed triples not produced by the products", [], missing)
    res.expect("produced triples not in the listed set", [], extra)
    cls = [ZERO_W, X, Y]
    shifted = {(a, b, cls[(cls.index(z) - a.omega) % 3]) for a, b, z in triples}
    res.note(f"moving z back by the omega-power of d_u reproduces the listed set: {shifted == USET_LISTED}")
    return res


# 5.x -----------------------------------------------------------------------


def _rotations():
    for a in GENS:
        for b in GENS:
            if a == b:
                continue
            c = next(g for g in GENS if g not in (a, b))
            yield a, b, c


def _c0_partners_gap3(table, w):
    j = table.idx(w)
    out = []
    for i in np.flatnonzero(table.bruhat[:, j]):
        u = table.elements[int(i)]
        if u.length == w.length - 3 and two_sided(u) == "c_0":
            out.append((u, int(i)))
    return out


def check_prop58(max_len=12):
    res = CheckResult("5.8")
    table = hecke.get_table(max_len)
    worst = 0
    for w in table.elements:
        if two_sided(w) != "c_1" or w.length < 3:
            continue
        hits = [u for u, _ in _c0_partners_gap3(table, w) if cond54(u, w)]
        worst = max(worst, len(hits))
        if len(hits) > 1:
            res.fail(f"{w}: {len(hits)} candidates {[str(u) for u in hits]}")
    res.expect(f"max number of candidates over c_1, l(w) <= {max_len}", True, worst <= 1)
    # descent condition on gap-1 lowest-cell partners
    bad = 0
    for w in table.elements:
        if two_sided(w) != "c_1":
            continue
        (g,) = descents(w, "right")
        rwg = descents(w.rmul(g), "right")
        j = table.idx(w)
        for i in np.flatnonzero(table.bruhat[:, j]):
            u = table.elements[int(i)]
            if u.length != w.length - 1 or two_sided(u) != "c_0" or len(descents(u, "left")) != 1:
                continue
            if rwg <= descents(u, "right"):
                bad += 1
    res.expect("gap-1 partners with |L(u)| = 1 and R(wg) inside R(u)", 0, bad)
    return res


_FAMILIES = {
    # check id: (tail of w, u formula, required parity of m)
    "5.9": (lambda a, b, c: "", lambda m, a, b, c: (c + a + b) * (m - 2) + c + a + c, 0),
    "5.10": (lambda a, b, c: a, lambda m, a, b, c: (c + a + b) * (m - 2) + c + a + b + a, 1),
    "5.11": (lambda a, b, c: a + b, lambda m, a, b, c: (c + a + b) * (m - 2) + c + a + b + c + b, 0),
}


def _family_check(check_id, max_len=SCAN_LEN):
    res = CheckResult(check_id)
    tail, formula, parity = _FAMILIES[check_id]
    table = hecke.get_table(max_len)
    for a, b, c in _rotations():
        m = 1
        while 3 * m + len(tail(a, b, c)) <= max_len:
            w = ExtElement.parse((a + b + c) * m + tail(a, b, c)).body
            found = sorted(
                str(u) for u, i in _c0_partners_gap3(table, w) if table.mu_at(i, table.idx(w))
            )
            values = sorted(
                {table.mu_at(i, table.idx(w)) for u, i in _c0_partners_gap3(table, w)} - {0}
            )
            want = []
            if m >= 2 and m % 2 == parity:
                want = [str(ExtElement.parse(formula(m, a, b, c)).body)]
            res.expect(f"w = {w}: nonzero-mu partners at gap 3", want, found)
            if values:
                res.expect(f"w = {w}: nonzero value", [1], values)
            m += 1
    return res


def check_prop59():
    return _family_check("5.9")


def check_prop510():
    return _family_check("5.10")


def check_prop511():
    return _family_check("5.11")


# 6.x -----------------------------------------------------------------------


def closed_min_rep(lam, corrected=False):
    """Closed-form coset minimum, or ``None`` outside the tabulated families.

    With ``corrected`` the third sub-case of the two Z families uses the
    exponent ``2k+1`` on the repeated block, which is what the computed
    minima require; the quoted form has ``2k`` there and is three letters
    short.
    """
    extra = 1 if corrected else 0
    m, n = lam.m, lam.n
    rst, rts = "rst", "rts"
    if n == 0 and m >= 1:
        k, r = divmod(m - 1, 3)
        return [rst * (2 * k) + "o", rst * (2 * k) + "rsoo", rst * (2 * k + 1) + "r"][r]
    if m == 0 and n >= 1:
        k, r = divmod(n - 1, 3)
        return [rts * (2 * k) + "oo", rts * (2 * k) + "rto", rts * (2 * k + 1) + "r"][r]
    if n == 1 and m >= 1:
        k, r = divmod(m - 1, 3)
        return [rst * (2 * k) + "r", rst * (2 * k + 1) + "o", rst * (2 * k + 1) + "rsoo"][r]
    if m == 1 and n >= 1:
        k, r = divmod(n - 1, 3)
        return [rts * (2 * k) + "r", rts * (2 * k + 1) + "oo", rts * (2 * k + 1) + "rto"][r]
    if m >= 2 and n >= m:
        k, r = divmod(n - m, 3)
        base = "r" + "stsr" * (m - 1) + "tsr" * (2 * k + (extra if r == 2 else 0))
        return base + ["", "tsoo", "to"][r]
    if n >= 2 and m > n:
        k, r = divmod(m - n, 3)
        base = "r" + "stsr" * (n - 1) + "str" * (2 * k + (extra if r == 2 else 0))
        return base + ["", "sto", "soo"][r]
    return None


def _family_k(lam):
    """Family parameter ``k`` of the closed form for ``m_lam``."""
    m, n = lam.m, lam.n
    if n == 0:
        return (m - 1) // 3
    if m == 0:
        return (n - 1) // 3
    if n == 1:
        return (m - 1) // 3
    if m == 1:
        return (n - 1) // 3
    return abs(n - m) // 3


def check_prop64(bound=8, k_max=3):
    res = CheckResult("6.4")
    counts = Counter()
    fixed = 0
    for m in range(bound + 1):
        for n in range(bound + 1):
            lam = Weight(m, n)
            if lam == ZERO_W:
                continue
            reg = region(lam)
            nu, pi, _ = stab_data(lam)
            in_x = reg in ("X1", "X2")
            stab = [w for w in W0_WORDS if w0_act(w, lam) == lam]
            want_stab = {"X1": ["e", "t"], "X2": ["e", "s"]}.get(reg, ["e"])
            res.expect(f"W0^lam at {lam}", want_stab, stab)
            res.expect(f"nu at {lam}", 1 if in_x else 0, nu)
            res.expect(f"pi at {lam}", str(XI if in_x else ONE), str(pi))
            res.expect(f"eps at {lam}", -1 if in_x else 1, eps(lam))
            res.expect(f"l(M) - l(m) at {lam}", 5 if in_x else 6,
                       max_rep(lam).length - min_rep(lam).length)
            if _family_k(lam) > k_max:
                continue
            counts[reg] += 1
            actual = min_rep(lam)
            # the Z2 family is stated for k > 0 only
            if reg != "Z2" or _family_k(lam) > 0:
                res.expect(f"m_lam at {lam} ({reg})", str(_ext(closed_min_rep(lam))), str(actual))
            fixed += _ext(closed_min_rep(lam, corrected=True)) == actual
    res.note(f"closed-form cases compared per region: {dict(sorted(counts.items()))}")
    res.note(f"with exponent 2k+1 in the third Z sub-case: {fixed}/{sum(counts.values())} agree")
    return res


def closed_a(lam, lam2):
    """Tabulated ``a_{lam, lam2}`` for ``0 < lam < lam2`` by root difference."""
    i, j = (lam2 - lam).root_coords()
    d = (int(i), int(j)) if i.denominator == 1 and j.denominator == 1 else None
    if d in ((1, 0), (0, 1)):
        return LaurentPoly.mono(-2, -1)
    if d == (1, 1):
        if lam.m * lam.n == 0:
            return LaurentPoly.mono(-2, -1)
        return LaurentPoly.mono(-4) - LaurentPoly.mono(-2)
    if d in ((1, 2), (2, 1)):
        return LaurentPoly.mono(-4)
    if d == (2, 2):
        return LaurentPoly.mono(-6, -1)
    return ZERO


def check_prop65(bound=8):
    res = CheckResult("6.5")
    dom = [Weight(m, n) for m in range(bound + 1) for n in range(bound + 1)]
    compared = mismatches = 0
    support_bad = []
    for lam in dom:
        for lam2 in dom:
            a = a_coeff(lam, lam2)
            i, j = (lam2 - lam).root_coords()
            below = i.denominator == 1 and i >= 0 and j >= 0
            if lam == lam2:
                if a != ONE:
                    support_bad.append(f"a({lam},{lam}) = {a}")
            elif not below:
                if not a.is_zero():
                    support_bad.append(f"a({lam},{lam2}) = {a} but lam is not below lam2")
            else:
                if not a.is_zero() and a.degree >= 0:
                    support_bad.append(f"a({lam},{lam2}) = {a} has non-negative powers")
                if lam != ZERO_W:
                    compared += 1
                    want = closed_a(lam, lam2)
                    if want != a:
                        mismatches += 1
                        res.fail(f"a({lam},{lam2}): expected {want}, got {a}")
    res.expect("support/normalisation violations", [], support_bad[:10])
    res.expect(f"closed-form mismatches over {compared} pairs 0 < lam < lam'", 0, mismatches)
    return res


def closed_b(family, lam2):
    """Tabulated ``b_{lam, lam2}`` (only the nonzero entries)."""
    p = LaurentPoly.mono
    table = {
        "ny": {BETA: p(-1) + p(-3), ALPHA + 2 * BETA: p(-4)},
        "x+my": {BETA: p(-2, -1), ALPHA + BETA: p(-1), ALPHA + 2 * BETA: p(-4)},
        "mx": {ALPHA: p(-1) + p(-3), 2 * ALPHA + BETA: p(-4)},
        "mx+y": {ALPHA: p(-2, -1), ALPHA + BETA: p(-1), 2 * ALPHA + BETA: p(-4)},
    }[family]
    return {lam2 - d: b for d, b in table.items()}


FAMILIES_6 = {
    "6.6": ("ny", lambda k: Weight(0, k)),
    "6.7": ("x+my", lambda k: Weight(1, k)),
    "6.8": ("mx", lambda k: Weight(k, 0)),
    "6.9": ("mx+y", lambda k: Weight(k, 1)),
}


def _b_check(check_id, params=(4, 5, 6, 7)):
    res = CheckResult(check_id)
    family, make = FAMILIES_6[check_id]
    for k in params:
        lam2 = make(k)
        table = b_table(lam2)
        want = closed_b(family, lam2)
        got = {lam: b for lam, b in table.items() if lam not in (lam2, ZERO_W) and not b.is_zero()}
        fmt = lambda d: "{" + ", ".join(f"{l}: {b}" for l, b in sorted(d.items())) + "}"
        res.expect(f"b(., {lam2}) nonzero entries", fmt(want), fmt(got))
        direct_bad = [str(lam) for lam, b in table.items() if b_direct(lam, lam2) != b]
        res.expect(f"b_table vs b_direct at {lam2} over {len(table)} weights", [], direct_bad)
    return res


def check_prop66():
    return _b_check("6.6")


def check_prop67():
    return _b_check("6.7")


def check_prop68():
    return _b_check("6.8")


def check_prop69():
    return _b_check("6.9")


def check_bridge(max_len=SCAN_LEN):
    res = CheckResult("bridge-6.2")
    compared = 0
    for check_id, (_, make) in FAMILIES_6.items():
        for k in (4, 5, 6, 7):
            lam2 = make(k)
            top = min_rep(lam2)
            if top.length > max_len:
                continue
            for lam, b in b_table(lam2).items():
                if lam == lam2:
                    continue
                compared += 1
                res.expect(f"res0 b({lam},{lam2}) vs mu(m_lam, m_lam'')",
                           res0(b), hecke.mu_direct(min_rep(lam), top))
    res.note(f"pairs compared: {compared}")
    return res


# scans ---------------------------------------------------------------------


def _scan_columns(args):
    max_len, cols = args
    table = hecke.get_table(max_len)
    rules, bad, rows = Counter(), Counter(), []
    for j in cols:
        w = table.elements[j]
        for i in np.flatnonzero(table.bruhat[:, j]):
            i = int(i)
            if i == j:
                continue
            u = table.elements[i]
            direct = table.mu_at(i, j)
            verdict = predict(u, w)
            rules[verdict.rule] += 1
            if verdict.value != direct:
                bad[verdict.rule] += 1
                rows.append((str(u), str(w), verdict.value, verdict.rule, direct))
    return rules, bad, rows


def mu_scan(max_len=SCAN_LEN, jobs=1):
    """Compare ``predict`` with the KL oracle on every Bruhat pair ``u < w``.

    Returns ``(rule counts, mismatch counts per rule, mismatch rows)``.
    """
    table = hecke.get_table(max_len)
    n = len(table.elements)
    cols = [j for j in range(n) if table.elements[j].length <= max_len]
    chunks = [cols[k::jobs] for k in range(jobs)] if jobs > 1 else [cols]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_scan_columns, [(max_len, c) for c in chunks]))
    else:
        parts = [_scan_columns((max_len, cols))]
    rules, bad, rows = Counter(), Counter(), []
    for r, b, rw in parts:
        rules.update(r)
        bad.update(b)
        rows.extend(rw)
    rows.sort(key=lambda row: (len(row[1]), row[1], len(row[0]), row[0]))
    return rules, bad, rows


def check_mu_scan(max_len=SCAN_LEN, jobs=1):
    res = CheckResult("mu-scan")
    rules, bad, rows = mu_scan(max_len, jobs)
    total = sum(rules.values())
    res.note(f"pairs u < w with l(w) <= {max_len}: {total}")
    res.note("rules fired: " + ", ".join(f"{k}={v}" for k, v in sorted(rules.items())))
    for u, w, value, rule, direct in rows:
        res.fail(f"({u}, {w}) {rule}: closed form {value}, KL oracle {direct}")
    res.expect("mismatches", 0, sum(bad.values()))
    table = hecke.get_table(max_len)
    big = int(max(
        (table.mu_at(i, j) for i, j, _ in table.mu_pairs()), default=0
    ))
    res.expect("max mu in range", 1, big)
    # lowest-cell u below c_1 with one-element descent sets has mu = 0
    hits = 0
    for i, j, m in table.mu_pairs():
        u, w = table.elements[i], table.elements[j]
        if two_sided(u) == "c_0" and two_sided(w) == "c_1":
            if len(descents(u, "left")) == 1 and len(descents(u, "right")) == 1:
                hits += 1
    res.expect("nonzero mu(u in c_0, w in c_1) with |L(u)| = |R(u)| = 1", 0, hits)
    gaps = Counter()
    for i, j, m in table.mu_pairs():
        u, w = table.elements[i], table.elements[j]
        if two_sided(u) == "c_0" and two_sided(w) == "c_0":
            gaps[w.length - u.length] += 1
    res.expect("gaps of nonzero mu inside c_0", [1, 3], sorted(gaps))
    return res


def check_local_finite(centre_len=10):
    res = CheckResult("local-finite")
    # a partner at gap 5 above a length-10 element needs length 15
    table = hecke.get_table(centre_len + 5)
    partners = Counter()
    far = []
    for i, j, m in table.mu_pairs():
        u, w = table.elements[i], table.elements[j]
        gap = w.length - u.length
        for centre in (u, w):
            if centre.length <= centre_len:
                partners[centre] += 1
                if gap > 3:
                    far.append(f"({u}, {w}) gap {gap}")
    res.expect(f"mu~-partners beyond gap 3 for l(w) <= {centre_len}", [], far[:10])
    res.note(f"largest partner count: {max(partners.values())}")
    return res


def check_structure(max_len=SCAN_LEN, product_len=4):
    """Positivity, degree bounds, KL identities, star invariance, descent
    containments and the degree bound on structure constants."""
    res = CheckResult("structure")
    table = hecke.get_table(max_len)
    els, coeffs, bruhat = table.elements, table.coeffs, table.bruhat
    lengths = table.lengths
    n = len(els)
    neg = int((coeffs < 0).sum())
    res.expect("negative KL coefficients", 0, neg)
    deg_bad = const_bad = 0
    for j in range(n):
        for i in np.flatnonzero(bruhat[:, j]):
            i = int(i)
            p = table.poly_at(i, j)
            if not p or p[0] != 1:
                const_bad += 1
            if i != j and len(p) - 1 > (lengths[j] - lengths[i] - 1) // 2:
                deg_bad += 1
    res.expect("pairs with constant term != 1", 0, const_bad)
    res.expect("pairs above the degree bound", 0, deg_bad)

    left_bad = inv_bad = strip_bad = 0
    for j in range(n):
        w = els[j]
        lw = descents(w, "left")
        for i in np.flatnonzero(bruhat[:, j]):
            i = int(i)
            u = els[i]
            p = table.poly_at(i, j)
            if table.poly(u.inverse(), w.inverse()) != p:
                inv_bad += 1
            for g in lw:
                gu = table.index[u.lmul(g)]
                if u != w and table.poly_at(gu, j) != p:
                    left_bad += 1
                gw = table.index[w.lmul(g)]
                if not bruhat[i, gw] and table.poly_at(gu, gw) != p:
                    strip_bad += 1
    res.expect("P(u,w) != P(gu,w) with gw < w", 0, left_bad)
    res.expect("P(u,w) != P(gu,gw) with gw < w and u not below gw", 0, strip_bad)
    res.expect("P(u,w) != P(u^-1,w^-1)", 0, inv_bad)

    def mu_t(a, b):
        if a.length > b.length:
            a, b = b, a
        if b.length > max_len:
            return None
        ia, ib = table.index[a], table.index[b]
        return table.mu_at(ia, ib) if bruhat[ia, ib] else 0

    star_pairs = star_bad = 0
    contain_bad = []
    for i, j, m in table.mu_pairs():
        u, w = els[i], els[j]
        au, aw = a_fn(u), a_fn(w)
        lu, lw = descents(u, "left"), descents(w, "left")
        ru, rw = descents(u, "right"), descents(w, "right")
        if au < aw:
            ok = lu <= lw and ru <= rw
        elif au > aw:
            ok = lw <= lu and rw <= ru
        else:
            ok = lu == lw or ru == rw
        if not ok:
            contain_bad.append(f"({u}, {w})")
    for j in range(n):
        w = els[j]
        for i in np.flatnonzero(bruhat[:, j]):
            u = els[int(i)]
            if u == w:
                continue
            m = table.mu_at(int(i), j)
            for side in ("left", "right"):
                for pair in (("r", "s"), ("s", "t"), ("r", "t")):
                    su, sw = star(u, pair, side), star(w, pair, side)
                    if su is None or sw is None:
                        continue
                    m2 = mu_t(su, sw)
                    if m2 is None:
                        continue
                    star_pairs += 1
                    star_bad += m2 != m
    res.expect("descent containments violated on mu != 0 pairs", [], contain_bad[:10])
    res.expect(f"star changes mu~ ({star_pairs} star pairs)", 0, star_bad)

    small = [ExtElement(k, w) for k in range(3) for w in els if w.length <= product_len]
    over = []
    for a in small:
        for b in small:
            for z, h in hecke.c_product(a, b).items():
                if h.degree > a_fn(z):
                    over.append(f"h({a},{b},{z}) = {h}")
    res.expect(f"deg h > a(z) over {len(small) ** 2} products", [], over[:10])
    gen_bad = 0
    for w in els:
        if w.length > 8:
            break
        for g in GENS:
            want = hecke.c_generator_product(g, w)
            got = hecke.c_product(ExtElement.parse(g), ExtElement(0, w))
            gen_bad += want != got
    res.expect("C_g C_w differs from the generator rule (l(w) <= 8)", 0, gen_bad)
    return res


def check_tensor(bound=5):
    res = CheckResult("tensor")
    grid = [Weight(m, n) for m in range(bound + 1) for n in range(bound + 1)]
    bound_bad = equiv_bad = dim_bad = 0
    for lam in grid:
        for lam2 in grid:
            total = 0
            for nu, c in _decomp(lam, lam2).items():
                total += c * dim_V(nu)
                if c > weight_mult(lam, nu - lam2):
                    bound_bad += 1
            dim_bad += total != dim_V(lam) * dim_V(lam2)
    for z1 in (ZERO_W, X, Y):
        for lam2 in grid:
            for lam in [Weight(m, n) for m in range(bound + 2) for n in range(bound + 2)]:
                equiv_bad += minuscule_mult(z1, lam2, lam) != tensor_mult(z1, lam2, lam)
    res.expect("multiplicity above the weight-multiplicity bound", 0, bound_bad)
    res.expect("minuscule rule differs from the tensor multiplicity", 0, equiv_bad)
    res.expect("dimension identity failures", 0, dim_bad)
    return res


def _decomp(lam, lam2):
    from .weights import _tensor_decomposition

    return _tensor_decomposition(lam, lam2)


CHECKS = {
    "4.1": check_d_table,
    "4.2": check_prop42,
    "4.3": check_prop43,
    "4.4": check_prop44,
    "5.8": check_prop58,
    "5.9": check_prop59,
    "5.10": check_prop510,
    "5.11": check_prop511,
    "6.4": check_prop64,
    "6.5": check_prop65,
    "6.6": check_prop66,
    "6.7": check_prop67,
    "6.8": check_prop68,
    "6.9": check_prop69,
    "mu-scan": check_mu_scan,
    "local-finite": check_local_finite,
    "bridge-6.2": check_bridge,
    "structure": check_structure,
    "tensor": check_tensor,
}


def run(check_id):
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise KeyError(f"unknown check {check_id!r}; choose from {', '.join(CHECKS)} or all") from None
    return fn()
