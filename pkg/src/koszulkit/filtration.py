"""Koszul/linear filtration certificates and their verification, the three
filtration-search algorithms, the partial-flag colon enumerator, and the
forbidden-ideal case analysis.

All family members are ideals generated by linear forms, so ideals are
identified by the row space of their coefficient vectors in degree 1; colon
ideals are recomputed from scratch during verification (witness data is a
hint, never trusted).
"""

from __future__ import annotations

from itertools import product

from .linalg import new_matrix
from .quotient import RIdeal, colon_element


class FiltrationCert:
    """Leveled family of linearly generated ideals with optional witnesses.

    levels[i] lists the members with i minimal generators (level 0 is the
    zero ideal); witnesses maps a member key to (smaller ideal, colon ideal)
    generator lists.
    """

    KINDS = ("koszul", "linear", "flag", "partial-koszul", "partial-linear")

    def __init__(self, ring, kind, levels, witnesses=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown filtration kind {kind!r}")
        self.ring = ring
        self.kind = kind
        self.levels = levels
        self.witnesses = witnesses or {}

    def members(self):
        for level in self.levels:
            yield from level

    def member_count(self):
        return sum(len(level) for level in self.levels)

    def span_keys(self):
        return {m.linear_span_key() for m in self.members()}

    def __repr__(self):
        sizes = [len(level) for level in self.levels]
        return f"FiltrationCert(kind={self.kind}, levels={sizes})"


class Violation:
    def __init__(self, axiom, ideal, detail):
        self.axiom = axiom
        self.ideal = ideal
        self.detail = detail

    def __repr__(self):
        return f"[{self.axiom}] {self.ideal!r}: {self.detail}"


class VerifyReport:
    def __init__(self, valid, violations):
        self.valid = valid
        self.violations = violations

    def __repr__(self):
        status = "valid" if self.valid else "INVALID"
        return f"VerifyReport({status}, {len(self.violations)} violations)"


# ---------------------------------------------------------------------------
# linear-form span helpers


def normalize_linear(R, w):
    """Scale a linear form so its most significant variable has coefficient 1."""
    r = R.nf(w)
    if r.is_zero() or r.degree() != 1:
        raise ValueError(f"expected a nonzero linear form, got {w}")
    lt = r.leading(R.order)
    return r.scale(R.ambient.field.inv(lt[1]))


def span_matrix(R, forms):
    """RREF of the degree-1 coordinate rows of the given linear forms."""
    rows = [R.coords(f, 1) for f in forms if not R.nf(f).is_zero()]
    mat = new_matrix(R.ambient.field, rows, R.dim(1))
    mat.rref()
    return mat


def _form_row(R, form):
    """Cached degree-1 coordinate row of a linear form."""
    cache = getattr(R, "_form_row_cache", None)
    if cache is None:
        cache = R._form_row_cache = {}
    key = form.key()
    if key not in cache:
        row = R.coords(form, 1)
        cache[key] = bytes(row) if R.ambient.field.p is not None else row
    return cache[key]


def _span_from_rows(R, rows):
    """RREF span matrix straight from coordinate rows."""
    fld = R.ambient.field
    if fld.p is not None:
        from .linalg import ModMat

        mat = ModMat(bytearray(b"".join(rows)), len(rows), R.dim(1), fld.p)
    else:
        mat = new_matrix(fld, [list(r) for r in rows], R.dim(1))
    mat.rref()
    return mat


def ideal_from_span(R, mat):
    """The linear ideal with the given RREF degree-1 span."""
    gens = [R.poly_from_coords(list(mat.row(i)), 1) for i in range(mat.nrows)]
    ideal = RIdeal(R, gens)
    ideal._pieces[1] = mat
    return ideal


def linear_ideal(R, forms):
    return ideal_from_span(R, span_matrix(R, forms))


def enumerate_span_forms(R, forms):
    """Every nonzero form of span(forms) up to scalar, normalized, in a
    deterministic order (the span analogue of doubling over a list)."""
    base = span_matrix(R, forms)
    p = R.ambient.field.p
    if p is None:
        raise ValueError("span enumeration needs a finite field")
    t = base.nrows
    out = []
    for lead in range(t):
        for tail in product(range(p), repeat=t - lead - 1):
            combo = [0] * t
            combo[lead] = 1
            for off, c in enumerate(tail):
                combo[lead + 1 + off] = c
            coeffs = list(base.vecmat(bytes(combo)))
            f = R.poly_from_coords(coeffs, 1)
            out.append(normalize_linear(R, f))
    return out


def _colon_cached(b, w):
    """Colon of a linear ideal by a linear form, memoized on the ring."""
    R = b.ring
    cache = getattr(R, "_lin_colon_cache", None)
    if cache is None:
        cache = R._lin_colon_cache = {}
    wn = normalize_linear(R, w)
    key = (b.linear_span_key(), wn.key())
    if key not in cache:
        cache[key] = colon_element(b, wn)
    return cache[key]


def _witness_form(b, a):
    """A linear form in a but not in b (dim gap must be one)."""
    R = b.ring
    bspan = b.piece(1)
    for i in range(a.piece(1).nrows):
        row = list(a.piece(1).row(i))
        if not bspan.contains(row):
            return R.poly_from_coords(row, 1)
    raise ValueError("no witness form: ideals have equal degree-1 spans")


# ---------------------------------------------------------------------------
# verification


def verify_filtration(cert):
    """Check the axioms of the certificate's kind; violations name the
    offending ideal and failed axiom.  Colon ideals are recomputed."""
    R = cert.ring
    violations = []
    for m in cert.members():
        if m.ring is not R and m.ring.ambient != R.ambient:
            raise ValueError("certificate mixes ideals from different rings")

    for i, level in enumerate(cert.levels):
        for m in level:
            mins = m.min_gens()
            if any(g.degree() != 1 for g in mins):
                violations.append(
                    Violation("KF1", m, "not generated by degree-1 elements")
                )
            elif len(mins) != i:
                violations.append(
                    Violation("level", m, f"{len(mins)} minimal generators at level {i}")
                )
    if not cert.levels or len(cert.levels[0]) != 1 or not cert.levels[0][0].is_zero():
        violations.append(Violation("level", None, "level 0 must be exactly {(0)}"))

    keys = cert.span_keys()
    full = span_matrix(R, R.ambient.gens()).key()
    if cert.kind in ("koszul", "linear", "flag"):
        if full not in keys:
            violations.append(Violation("KF2", None, "maximal ideal missing"))

    if cert.kind == "flag":
        for i, level in enumerate(cert.levels):
            if len(level) != 1:
                violations.append(
                    Violation("flag", None, f"level {i} has {len(level)} members")
                )
        chain = [level[0] for level in cert.levels if level]
        for a, b in zip(chain, chain[1:]):
            if not b.contains_ideal(a):
                violations.append(Violation("flag", b, "chain containment fails"))

    if cert.kind in ("koszul", "linear", "flag", "partial-koszul", "partial-linear"):
        need_member = cert.kind in ("koszul", "partial-koszul")
        for i, level in enumerate(cert.levels):
            if i == 0:
                continue
            for a in level:
                if a.is_zero():
                    continue
                ok, detail = _kf3_witness(cert, a, i, need_member)
                if not ok:
                    axiom = "KF3" if need_member else "LF"
                    violations.append(Violation(axiom, a, detail))

    return VerifyReport(not violations, violations)


def _kf3_witness(cert, a, level, need_member):
    """Find b in the family with b < a, a/b cyclic, and b:a linear
    (need_member: b:a must itself belong to the family)."""
    R = cert.ring
    keys = cert.span_keys()
    candidates = []
    akey = _ideal_key_str(a)
    if akey in cert.witnesses:
        bgens, _ = cert.witnesses[akey]
        candidates.append(RIdeal(R, list(bgens)))
    if level - 1 < len(cert.levels):
        candidates.extend(cert.levels[level - 1])
    seen = set()
    for b in candidates:
        bkey = b.linear_span_key()
        if bkey in seen:
            continue
        seen.add(bkey)
        if bkey not in keys:
            continue
        if b.piece(1).nrows != a.piece(1).nrows - 1:
            continue
        if not a.contains_ideal(b):
            continue
        w = _witness_form(b, a)
        colon = _colon_cached(b, w)
        if not colon.is_linearly_generated():
            continue
        if need_member and colon.linear_span_key() not in keys:
            continue
        return True, None
    return False, "no admissible witness pair (b, b:a) in the family"


def _ideal_key_str(a):
    return "|".join(sorted(g.to_text() for g in a.gens))


# ---------------------------------------------------------------------------
# Algorithm: partial linear filtration from a pool of linear forms


def partial_linear_filtration(R, forms):
    """Largest partial linear filtration whose ideals and colon ideals are
    generated by elements of the pool; set semantics in the pool."""
    pool = []
    seen = set()
    for f in forms:
        fn = normalize_linear(R, f)
        if fn.degree() != 1:
            raise ValueError(f"pool element is not linear: {f}")
        if fn.key() not in seen:
            seen.add(fn.key())
            pool.append(fn)
    zero = R.zero_ideal()
    levels = [[zero]]
    level_maps = [{zero.linear_span_key(): zero}]
    n = R.ambient.n
    for i in range(1, n + 1):
        current = {}
        for b in level_maps[i - 1].values():
            for f in pool:
                if b.contains_poly(f):
                    continue
                candidate_span = b.piece(1).stack(span_matrix(R, [f]))
                candidate_span.rref()
                key = candidate_span.key()
                if key in current:
                    continue
                colon = _colon_cached(b, f)
                if _generated_by_pool_subset(colon, pool):
                    current[key] = ideal_from_span(R, candidate_span)
        level_maps.append(dict(sorted(current.items())))
        levels.append(list(level_maps[i].values()))
    return FiltrationCert(R, "partial-linear", levels)


def _generated_by_pool_subset(ideal, pool):
    """Does the ideal equal the ideal generated by the pool elements it
    contains?  (Subset-generation test without enumerating subsets.)"""
    if not ideal.is_linearly_generated():
        return False
    R = ideal.ring
    inside = [f for f in pool if ideal.contains_poly(f)]
    return span_matrix(R, inside).key() == ideal.piece(1).key()


# ---------------------------------------------------------------------------
# Algorithm: trim a linear filtration to a partial Koszul filtration


def partial_koszul_filtration(R, cert):
    """Greatest subfamily satisfying the colon-closure axiom: repeatedly keep
    an ideal only if some member one level down gives a cyclic quotient whose
    colon stays in the family.  The zero ideal is always kept."""
    levels = [list(level) for level in cert.levels]
    while True:
        keys = {m.linear_span_key() for level in levels for m in level}
        new_levels = [levels[0][:1] if levels and levels[0] else [R.zero_ideal()]]
        changed = False
        for i in range(1, len(levels)):
            kept = []
            for a in levels[i]:
                ok = False
                for b in levels[i - 1]:
                    if not a.contains_ideal(b):
                        continue
                    if b.piece(1).nrows != a.piece(1).nrows - 1:
                        continue
                    w = _witness_form(b, a)
                    colon = _colon_cached(b, w)
                    if not colon.is_linearly_generated():
                        continue
                    ck = colon.linear_span_key()
                    if colon.is_zero() or ck in keys:
                        ok = True
                        break
                if ok:
                    kept.append(a)
                else:
                    changed = True
            new_levels.append(kept)
        levels = new_levels
        if not changed:
            break
    return FiltrationCert(R, "partial-koszul", levels)


def contains_maximal_ideal(cert):
    R = cert.ring
    return span_matrix(R, R.ambient.gens()).key() in cert.span_keys()


def max_min_gens(cert):
    """Largest minimal-generator count among nonzero members."""
    best = 0
    for i, level in enumerate(cert.levels):
        if level:
            best = max(best, i)
    return best


# ---------------------------------------------------------------------------
# Algorithm: all linear flags over a pool


def linear_flags(R, forms):
    """All maximal chains (0) < a_1 < ... < a_n = m with each a_i generated
    by i pool elements, cyclic steps, and every colon a_{i-1} : a_i generated
    by a subset of the pool."""
    pool = [normalize_linear(R, f) for f in forms]
    seen = set()
    pool = [f for f in pool if not (f.key() in seen or seen.add(f.key()))]
    n = R.ambient.n
    maximal = R.maximal_ideal()
    flags = [[maximal]]
    level = n
    while level > 0 and flags:
        new_flags = []
        new_seen = set()
        for flag in flags:
            top = flag[0]
            for subset_span, subideal in _pool_subspan_ideals(R, pool, level - 1):
                if subideal.piece(1).nrows != level - 1:
                    continue
                if not top.contains_ideal(subideal):
                    continue
                w = _witness_form(subideal, top)
                colon = _colon_cached(subideal, w)
                if not _generated_by_pool_subset(colon, pool):
                    continue
                chain = [subideal] + flag
                chkey = tuple(m.linear_span_key() for m in chain)
                if chkey not in new_seen:
                    new_seen.add(chkey)
                    new_flags.append(chain)
        flags = new_flags
        level -= 1
    return sorted(flags, key=lambda f: [str(g) for m in f for g in m.gens])


def _pool_subspan_ideals(R, pool, size):
    """Distinct ideals generated by `size`-subsets of the pool."""
    from itertools import combinations

    out = {}
    for combo in combinations(pool, size):
        mat = span_matrix(R, list(combo))
        key = mat.key()
        if key not in out:
            out[key] = ideal_from_span(R, mat)
    return sorted(out.items())


def flag_to_cert(R, flag):
    """Package a maximal chain as a flag-kind certificate."""
    levels = [[m] for m in flag]
    return FiltrationCert(R, "flag", levels)


# ---------------------------------------------------------------------------
# partial-flag colon enumeration (the finite-field case analysis driver)


def linear_colon_ideals(R, gens, seeds):
    """For every strict chain of linear ideals (w) = a_1 < a_2 < ... < a_t =
    (gens) with w drawn from `seeds` and every later step adding one
    normalized form of span(gens): when every colon a_{s-1} : a_s (s >= 2)
    is linearly generated, record the list of those colons.  Returns the
    distinct recorded lists in discovery order.
    """
    target = span_matrix(R, gens)
    lall = enumerate_span_forms(R, gens)
    for w in seeds:
        if not target.contains(R.coords(normalize_linear(R, w), 1)):
            raise ValueError(f"seed {w} lies outside the span of the generators")
    t = target.nrows
    results = []
    seen_lists = set()
    seed_ideals = []
    seed_seen = set()
    for w in seeds:
        ideal = linear_ideal(R, [w])
        if ideal.linear_span_key() not in seed_seen:
            seed_seen.add(ideal.linear_span_key())
            seed_ideals.append(ideal)

    def extend(current, colons):
        depth = current.piece(1).nrows
        if depth == t:
            key = tuple(c.linear_span_key() for c in colons)
            if key not in seen_lists:
                seen_lists.add(key)
                results.append(list(colons))
            return
        next_spans = {}
        for g in lall:
            if current.contains_poly(g):
                continue
            span = current.piece(1).stack(span_matrix(R, [g]))
            span.rref()
            key = span.key()
            if key not in next_spans:
                next_spans[key] = (span, g)
        for key in sorted(next_spans):
            span, g = next_spans[key]
            colon = _colon_cached(current, g)
            if not colon.is_linearly_generated():
                continue
            extend(ideal_from_span(R, span), colons + [colon])

    for seed in seed_ideals:
        extend(seed, [])
    return results


# ---------------------------------------------------------------------------
# forbidden-ideal case analysis


class CaseReport:
    """Result of one stage of the excluded-element flag analysis."""

    def __init__(self, stage, degree_sets=None, candidates=None, survivors=None):
        self.stage = stage
        self.degree_sets = degree_sets
        self.candidates = candidates
        self.survivors = survivors

    def __repr__(self):
        parts = [f"stage={self.stage}"]
        if self.degree_sets is not None:
            parts.append(f"degree_sets={sorted(self.degree_sets)}")
        if self.candidates is not None:
            parts.append(f"candidates={len(self.candidates)}")
        if self.survivors is not None:
            parts.append(f"survivors={len(self.survivors)}")
        return f"CaseReport({', '.join(parts)})"


def forbidden_ideal_scan(R, base_gens, seeds, excluded, stage, res_steps=(4, 5)):
    """Case analysis for flags of (base_gens) according to the first level
    where `excluded` appears; stages 1 and 2 report colon generator-degree
    sets, stages 3 and 4 run the truncated linearity test on candidates."""
    from .resolution import res_looks_linear

    z = R.nf(excluded)
    if stage == 1:
        degree_sets = set()
        for w in seeds:
            colon = _colon_cached(linear_ideal(R, [w]), z)
            degree_sets.add(tuple(sorted({g.degree() for g in colon.min_gens()})))
        return CaseReport(1, degree_sets=degree_sets)
    lall = enumerate_span_forms(R, base_gens)
    zvec = R.coords(z, 1)
    if stage == 2:
        degree_sets = set()
        done = set()
        lall_rows = [_form_row(R, g) for g in lall]
        for w in seeds:
            wrow = _form_row(R, normalize_linear(R, w))
            for grow_ in lall_rows:
                span = _span_from_rows(R, [wrow, grow_])
                if span.contains(zvec):
                    continue
                key = span.key()
                if key in done:
                    continue
                done.add(key)
                colon = _colon_cached(ideal_from_span(R, span), z)
                degree_sets.add(tuple(sorted({h.degree() for h in colon.min_gens()})))
        return CaseReport(2, degree_sets=degree_sets)
    if stage == 3:
        from itertools import combinations

        spans = {}
        lall_rows = [_form_row(R, g) for g in lall]
        for w in seeds:
            wrow = _form_row(R, normalize_linear(R, w))
            for r1, r2 in combinations(lall_rows, 2):
                span = _span_from_rows(R, [wrow, r1, r2])
                if span.contains(zvec):
                    continue
                spans.setdefault(span.key(), span)
        candidates = {}
        for key in sorted(spans):
            colon = _colon_cached(ideal_from_span(R, spans[key]), z)
            if colon.is_linearly_generated():
                candidates[key] = ideal_from_span(R, spans[key])
        survivors = list(candidates.values())
        for t in res_steps:
            survivors = [a for a in survivors if res_looks_linear(a, t)]
            if not survivors:
                break
        return CaseReport(3, candidates=sorted(candidates), survivors=survivors)
    if stage == 4:
        fld = R.ambient.field
        survivors = []
        checked = {}
        for lams in product(range(fld.p), repeat=len(base_gens)):
            gens = [
                g + R.ambient.constant(lam) * excluded if lam else g
                for g, lam in zip(base_gens, lams)
            ]
            ideal = linear_ideal(R, gens)
            key = ideal.linear_span_key()
            if key in checked:
                continue
            checked[key] = ideal
            if res_looks_linear(ideal, res_steps[0]):
                survivors.append(ideal)
        return CaseReport(4, candidates=sorted(checked), survivors=survivors)
    raise ValueError(f"stage must be 1..4, got {stage}")


# ---------------------------------------------------------------------------
# certificate serialization

SCHEMA_VERSION = 1


def _ring_to_json(R):
    order = R.order
    kind = type(order).__name__.lower()
    if kind not in ("lex", "degrevlex"):
        raise ValueError("only lex/degrevlex orders are serializable")
    fld = R.ambient.field
    return {
        "field": "QQ" if fld.p is None else f"GF {fld.p}",
        "vars": list(R.ambient.names),
        "order": {"kind": kind, "vars": [R.ambient.names[i] for i in order.perm]},
        "quotient": [g.to_text() for g in R.defining.gens],
    }


def _ring_from_json(data):
    from .files import parse_ring_descriptor
    from .quotient import QuotientRing

    header = [f"field {data['field']}", "vars " + " ".join(data["vars"])]
    order = data.get("order")
    if order:
        header.append(f"order {order['kind']} " + " > ".join(order["vars"]))
    header.append("quotient:")
    header.extend(data.get("quotient", []))
    ring, sections = parse_ring_descriptor("\n".join(header))
    return QuotientRing(ring, sections["quotient"])


def certificate_to_json(cert):
    """Serialize with the fixed field order ring, kind, levels, witnesses."""
    import json

    payload = {
        "ring": _ring_to_json(cert.ring),
        "kind": cert.kind,
        "levels": [
            [sorted(g.to_text() for g in m.gens) for m in level]
            for level in cert.levels
        ],
        "witnesses": {
            key: {
                "b": sorted(g.to_text() for g in bgens),
                "colon": sorted(g.to_text() for g in cgens),
            }
            for key, (bgens, cgens) in sorted(cert.witnesses.items())
        },
        "version": SCHEMA_VERSION,
    }
    return json.dumps(payload, indent=1)


def certificate_from_json(text):
    """Re-parse a certificate from scratch; the schema version is checked."""
    import json

    data = json.loads(text)
    version = data.get("version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported certificate schema version {version!r}")
    R = _ring_from_json(data["ring"])
    ring = R.ambient
    levels = [
        [RIdeal(R, [ring.parse(s) for s in gens]) for gens in level]
        for level in data["levels"]
    ]
    witnesses = {}
    for key, val in data.get("witnesses", {}).items():
        witnesses[key] = (
            [ring.parse(s) for s in val["b"]],
            [ring.parse(s) for s in val["colon"]],
        )
    return FiltrationCert(R, data["kind"], levels, witnesses)


def export_certificate(cert, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(certificate_to_json(cert) + "\n")


def import_certificate(path):
    with open(path, encoding="utf-8") as fh:
        return certificate_from_json(fh.read())
