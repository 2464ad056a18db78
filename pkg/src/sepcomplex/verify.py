"""Machine checks for the structural claims about separation complexes.

Each check compares a computed quantity against a frozen expected value and
yields a CheckResult row. Contractibility-style claims are never decided;
they are certified in decreasing strength: a cone point, a full greedy
collapse, or (inconclusively) trivial reduced homology alone.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import comb
from typing import Callable, Iterable, Sequence

from .complexes import Complex, Covering, cross_polytope_boundary, isomorphic, nerve
from .homology import HomologyGroup, reduced_homology
from .separation import (
    SeparationComplex,
    antipodal_subcomplex,
    build,
    central_edge_star,
    deletion_covering,
    free_complementary_pairs,
    retraction_image_mask,
)
from .subsets import GROUP, ground_mask

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CheckResult:
    check: str
    scope: str
    expected: str
    computed: str
    status: str
    witness: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _row(check: str, scope: str, expected, computed, witness: str = "",
         inconclusive: bool = False) -> CheckResult:
    e, c = str(expected), str(computed)
    if e == c:
        status = PASS
    elif inconclusive:
        status = INCONCLUSIVE
    else:
        status = FAIL
    return CheckResult(check, scope, e, c, status, witness)


def any_failed(results: Iterable[CheckResult]) -> bool:
    return any(r.failed for r in results)


def results_to_json(results: Sequence[CheckResult]) -> str:
    payload = {
        "checks": [asdict(r) for r in results],
        "summary": {
            "pass": sum(r.status == PASS for r in results),
            "fail": sum(r.status == FAIL for r in results),
            "inconclusive": sum(r.status == INCONCLUSIVE for r in results),
            "skipped": sum(r.status == SKIPPED for r in results),
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def format_results(results: Sequence[CheckResult]) -> str:
    lines = []
    for r in results:
        line = f"{r.check} [{r.scope}]: {r.status}"
        if r.status not in (PASS, SKIPPED):
            line += f" (expected {r.expected}, computed {r.computed})"
        elif r.expected:
            line += f" ({r.computed})"
        if r.witness:
            line += f" -- {r.witness}"
        lines.append(line)
    counts = (f"{sum(r.status == PASS for r in results)} passed, "
              f"{sum(r.status == FAIL for r in results)} failed, "
              f"{sum(r.status == INCONCLUSIVE for r in results)} inconclusive, "
              f"{sum(r.status == SKIPPED for r in results)} skipped")
    lines.append(counts)
    return "\n".join(lines)


def _homology_str(groups: Sequence[HomologyGroup]) -> str:
    return "; ".join(f"H~{d} = {g}" for d, g in enumerate(groups))


# ---------------------------------------------------------------------------
# figure-level counts
# ---------------------------------------------------------------------------

def figure_checks() -> list[CheckResult]:
    out = []
    for relation in ("ss", "ws"):
        sc = build(3, relation)
        out.append(_row(f"vertices {relation}(3)", "n=3",
                        "('13', '2')", str(tuple(sorted(sc.complex.labels)))))
        edge_count = sc.complex.face_counts()[1] if len(sc.complex.face_counts()) > 1 else 0
        out.append(_row(f"edges {relation}(3)", "n=3", 0, edge_count))
    ss4, ws4 = build(4, "ss"), build(4, "ws")
    out.append(_row("f-vector ss(4)", "n=4", (8, 16, 8), ss4.complex.face_counts()))
    out.append(_row("f-vector ws(4)", "n=4", (8, 17, 10), ws4.complex.face_counts()))

    def edge_labels(sc: SeparationComplex) -> set[frozenset[str]]:
        return {frozenset(sc.complex.labels[v] for v in e)
                for e in sc.complex.faces_of_dim(1)}

    ss_edges, ws_edges = edge_labels(ss4), edge_labels(ws4)
    out.append(_row("edge containment ss(4) in ws(4)", "n=4", True, ss_edges <= ws_edges))
    extra = {tuple(sorted(e)) for e in ws_edges - ss_edges}
    out.append(_row("extra ws(4) edge", "n=4", "{('14', '23')}", str(extra)))
    return out


# ---------------------------------------------------------------------------
# homology shadows
# ---------------------------------------------------------------------------

def contractibility_shadow(sc: SeparationComplex, with_collapse: bool = True) -> list[CheckResult]:
    """Trivial reduced homology, plus a collapse certificate where feasible."""
    scope = f"{sc.relation}({sc.n})"
    groups = reduced_homology(sc.complex)
    trivial = all(g.is_trivial for g in groups)
    out = [_row(f"homology-trivial {scope}", scope, True, trivial,
                witness=_homology_str(groups) if not trivial else "")]
    if with_collapse:
        outcome = sc.complex.greedy_collapse()
        # a stuck collapse decides nothing; only n=4 is pinned to succeed
        out.append(_row(f"collapse-certificate {scope}", scope,
                        "collapsed-to-point", outcome.status,
                        witness=f"{outcome.steps} steps",
                        inconclusive=sc.n >= 5))
    return out


def sphere_shadow(sc: SeparationComplex) -> CheckResult:
    """Reduced homology of a single sphere of dimension n-3."""
    scope = f"{sc.relation}({sc.n})"
    groups = reduced_homology(sc.complex)
    expected = [HomologyGroup(1) if d == sc.n - 3 else HomologyGroup(0)
                for d in range(len(groups))]
    return _row(f"sphere-homology {scope}", scope,
                _homology_str(expected), _homology_str(groups))


def purity_check(sc: SeparationComplex) -> CheckResult:
    scope = f"{sc.relation}({sc.n})"
    expected_dim = comb(sc.n - 1, 2) - 1
    computed = (sc.complex.is_pure(), sc.complex.dimension())
    return _row(f"pure-of-dimension {scope}", scope,
                (True, expected_dim), computed)


# ---------------------------------------------------------------------------
# the antipodal subcomplex
# ---------------------------------------------------------------------------

def antipodal_checks(n: int) -> list[CheckResult]:
    scope = f"n={n}"
    sub = antipodal_subcomplex(n)
    reference = cross_polytope_boundary(n - 2)
    mapping = isomorphic(sub.complex, reference)
    out = [_row(f"cross-polytope-isomorphism K({n})", scope, True, mapping is not None)]
    groups = reduced_homology(sub.complex)
    expected = [HomologyGroup(1) if d == n - 3 else HomologyGroup(0)
                for d in range(len(groups))]
    out.append(_row(f"cross-polytope-homology K({n})", scope,
                    _homology_str(expected), _homology_str(groups)))
    return out


# ---------------------------------------------------------------------------
# retraction checks
# ---------------------------------------------------------------------------

def _require_retraction_domain(sc: SeparationComplex) -> None:
    if sc.relation != "ss":
        raise ValueError("retraction checks run on the strong-separation complex")
    if sc.n < 4:
        raise ValueError("retraction checks need n >= 4")


def image_nonempty_violations(sc: SeparationComplex) -> int:
    """Faces whose retraction image is empty, i.e. where every complementary
    pair extends both ways or neither way. Zero is the expected answer."""
    _require_retraction_domain(sc)
    return sum(1 for f in sc.complex.iter_face_masks()
               if retraction_image_mask(sc, f) == 0)


def chain_condition_violations(sc: SeparationComplex) -> int:
    """Comparable face pairs whose two images union to a complementary pair.

    A violation on any chain of faces is already a violation on one comparable
    pair, so sweeping pairs covers all chains. Exhaustive through n = 5; above
    that the outer face is sampled on a fixed stride (the sweep is quadratic).
    """
    _require_retraction_domain(sc)
    pairs = sc.singleton_pair_indices()
    images = {f: retraction_image_mask(sc, f) for f in sc.complex.iter_face_masks()}
    outer = list(images)
    if sc.n > 5:
        stride = max(1, len(outer) // 2000)
        outer = outer[::stride]
    violations = 0
    for f in outer:
        img_f = images[f]
        sub = f
        while True:
            sub = (sub - 1) & f
            if sub == 0:
                break
            union = img_f | images[sub]
            if any(union >> i & 1 and union >> j & 1 for i, j in pairs):
                violations += 1
    return violations


def identity_on_antipodal_violations(sc: SeparationComplex) -> int:
    """Faces of the antipodal subcomplex not fixed by the retraction."""
    kmask = 0
    for i in sc.antipodal_vertex_indices():
        kmask |= 1 << i
    return sum(1 for f in sc.complex.iter_face_masks()
               if f & ~kmask == 0 and retraction_image_mask(sc, f) != f)


def carrier_violations(sc: SeparationComplex) -> int:
    """Faces where face + image fails to be a face of the complex."""
    return sum(1 for f in sc.complex.iter_face_masks()
               if not sc.complex.has_face_mask(f | retraction_image_mask(sc, f)))


def retraction_checks(sc: SeparationComplex) -> list[CheckResult]:
    scope = f"ss({sc.n})"
    return [
        _row(f"image-nonempty {scope}", scope, 0, image_nonempty_violations(sc),
             witness="violations"),
        _row(f"chain-condition {scope}", scope, 0, chain_condition_violations(sc),
             witness="violations"),
        _row(f"identity-on-cross-polytope {scope}", scope, 0,
             identity_on_antipodal_violations(sc), witness="violations"),
        _row(f"carrier-containment {scope}", scope, 0, carrier_violations(sc),
             witness="violations"),
    ]


def star_intersection_violations(sc: SeparationComplex) -> int:
    """Exhaustive sweep of the star identity: over all face pairs whose union
    is a face, st(a) meet st(b) must equal st(a | b)."""
    cx = sc.complex
    faces = list(cx.iter_face_masks())
    face_set = set(faces)
    stars = {f: cx.star_mask(f) for f in faces}
    bad = 0
    for a in faces:
        star_a = stars[a]
        for b in faces:
            union = a | b
            if union not in face_set:
                continue
            if star_a.intersection(stars[b]) != stars[union]:
                bad += 1
    return bad


# ---------------------------------------------------------------------------
# equivariance
# ---------------------------------------------------------------------------

def equivariance_checks(sc: SeparationComplex) -> list[CheckResult]:
    scope = f"{sc.relation}({sc.n})"
    out = []
    facet_set = set(sc.complex.facets)
    antipodal = set(sc.antipodal_vertex_indices())

    def permute_mask(m: int, perm: tuple[int, ...]) -> int:
        r = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            r |= 1 << perm[low.bit_length() - 1]
        return r

    faces_preserved = True
    antipodal_preserved = True
    for g in GROUP:
        perm = sc.vertex_permutation(g)
        if {permute_mask(f, perm) for f in facet_set} != facet_set:
            faces_preserved = False
        if {perm[i] for i in antipodal} != antipodal:
            antipodal_preserved = False
    out.append(_row(f"symmetries-preserve-facets {scope}", scope, True, faces_preserved))
    out.append(_row(f"symmetries-preserve-cross-polytope {scope}", scope, True,
                    antipodal_preserved))
    if sc.relation == "ss":
        bad = 0
        faces = list(sc.complex.iter_face_masks())
        images = {f: retraction_image_mask(sc, f) for f in faces}
        for g in GROUP:
            perm = sc.vertex_permutation(g)
            for f in faces:
                if images[permute_mask(f, perm)] != permute_mask(images[f], perm):
                    bad += 1
        out.append(_row(f"retraction-equivariance {scope}", scope, 0, bad,
                        witness="violations"))
    return out


# ---------------------------------------------------------------------------
# the deletion covering
# ---------------------------------------------------------------------------

def contractibility_certificate(cx: Complex) -> str:
    """Strongest available certificate: cone-point, collapsed-to-point, or none."""
    if cx.cone_points():
        return "cone-point"
    if cx.greedy_collapse().collapsed:
        return "collapsed-to-point"
    return "none"


def _all_intersections(covering: Covering) -> dict[int, Complex]:
    """Intersection of every subset of covering members, keyed by index mask."""
    inters: dict[int, Complex] = {0: covering.parent}
    for smask in range(1, 1 << len(covering.members)):
        low = smask & -smask
        inters[smask] = inters[smask ^ low].intersection(
            covering.members[low.bit_length() - 1])
    return inters


def covering_checks(sc: SeparationComplex, with_certificates: bool = True) -> list[CheckResult]:
    """The deletion covering: union, nerve, and every index-subset intersection."""
    scope = f"ws({sc.n})"
    covering = deletion_covering(sc)
    out = [
        _row(f"covering-members-are-subcomplexes {scope}", scope, True,
             covering.members_are_subcomplexes()),
        _row(f"covering-unions-to-complex {scope}", scope, True,
             covering.covers_parent()),
    ]
    nerve_cx = nerve(covering)
    want = len(covering.members)
    full = (1 << want) - 1
    out.append(_row(f"covering-nerve-is-simplex {scope}", scope,
                    f"simplex on {want} vertices",
                    f"simplex on {want} vertices" if nerve_cx.facets == (full,)
                    else f"facets {nerve_cx.facet_tuples()}"))
    star = central_edge_star(sc)
    inters = _all_intersections(covering)
    total = len(inters)
    nonempty = sum(1 for cx in inters.values() if not cx.is_empty)
    contain_star = sum(
        1 for cx in inters.values()
        if all(cx.has_face_mask(f) for f in star.facets)
    )
    trivial = 0
    worst = []
    for smask, cx in sorted(inters.items()):
        groups = reduced_homology(cx)
        if all(g.is_trivial for g in groups):
            trivial += 1
        else:
            worst.append(format(smask, "b"))
    out.append(_row(f"covering-intersections-nonempty {scope}", scope,
                    f"{total}/{total}", f"{nonempty}/{total}"))
    out.append(_row(f"covering-intersections-contain-central-star {scope}", scope,
                    f"{total}/{total}", f"{contain_star}/{total}"))
    out.append(_row(f"covering-intersections-homology-trivial {scope}", scope,
                    f"{total}/{total}", f"{trivial}/{total}",
                    witness="; ".join(worst)))
    if with_certificates:
        tally = {"cone-point": 0, "collapsed-to-point": 0, "none": 0}
        for smask, cx in sorted(inters.items()):
            tally[contractibility_certificate(cx)] += 1
        computed = (f"cone-point {tally['cone-point']}, "
                    f"collapsed {tally['collapsed-to-point']}, "
                    f"uncertified {tally['none']}")
        out.append(CheckResult(
            f"covering-intersection-certificates {scope}", scope,
            "0 uncertified", computed,
            PASS if tally["none"] == 0 else INCONCLUSIVE))
    return out


def star_cover_vertex_indices(sc: SeparationComplex, index_subset: Iterable[int]) -> list[int]:
    """Vertex indices whose stars cover an intersection with no free pairs:
    the central pair plus every non-deleted singleton and complement."""
    chosen = set(index_subset)
    if free_complementary_pairs(chosen, sc.n):
        raise ValueError("star covering applies to intersections with no free pairs")
    full = ground_mask(sc.n)
    ends = (1 << 0) | (1 << (sc.n - 1))
    cover = [sc.vertex_index(ends), sc.vertex_index(full ^ ends)]
    for k in range(2, sc.n):
        if 2 * (k - 2) not in chosen:
            cover.append(sc.vertex_index(1 << (k - 1)))
    for k in range(2, sc.n):
        if 2 * (k - 2) + 1 not in chosen:
            cover.append(sc.vertex_index(full ^ (1 << (k - 1))))
    return cover


def star_cover_cone_point_check(sc: SeparationComplex, index_subset: Iterable[int]) -> CheckResult:
    """Inside one no-free-pair intersection, every nonempty intersection of
    the star covering must expose a cone point."""
    chosen = sorted(set(index_subset))
    scope = f"ws({sc.n}) sigma={{{','.join(map(str, chosen))}}}"
    covering = deletion_covering(sc)
    cx = sc.complex
    for i in chosen:
        cx = cx.intersection(covering.members[i])
    cover_vertices = star_cover_vertex_indices(sc, chosen)
    members = [cx.star_mask(1 << v) for v in cover_vertices]
    labels = [f"st({cx.labels[v]})" for v in cover_vertices]
    star_covering = Covering(cx, tuple(members), tuple(labels))
    if not star_covering.covers_parent():
        return CheckResult(f"star-cover-covers {scope}", scope, "True", "False", FAIL)
    checked = missing = 0
    for tmask in range(1, 1 << len(members)):
        inter = None
        rest = tmask
        while rest:
            low = rest & -rest
            rest ^= low
            m = members[low.bit_length() - 1]
            inter = m if inter is None else inter.intersection(m)
        if inter.is_empty:
            continue
        checked += 1
        if not inter.cone_points():
            missing += 1
    return _row(f"star-cover-cone-points {scope}", scope,
                "0 missing", f"{missing} missing",
                witness=f"{checked} nonempty intersections")


def no_free_pair_subsets(n: int) -> list[tuple[int, ...]]:
    """All covering index subsets whose every complementary pair is used."""
    size = 2 * (n - 2)
    return [
        tuple(i for i in range(size) if smask >> i & 1)
        for smask in range(1 << size)
        if free_complementary_pairs(
            (i for i in range(size) if smask >> i & 1), n) == 0
    ]


def star_cover_checks(sc: SeparationComplex) -> list[CheckResult]:
    scope = f"ws({sc.n})"
    rows = [star_cover_cone_point_check(sc, s) for s in no_free_pair_subsets(sc.n)]
    bad = [r for r in rows if r.status != PASS]
    summary = _row(f"star-cover-cone-points-all {scope}", scope,
                   f"{len(rows)} intersections clean",
                   f"{len(rows) - len(bad)} intersections clean",
                   witness="; ".join(r.scope for r in bad))
    return [summary]


# ---------------------------------------------------------------------------
# boundary findings at n = 5
# ---------------------------------------------------------------------------

_SQUARE = Complex(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3), (0, 3)])


def _expected_groups(length: int, nontrivial: dict[int, HomologyGroup]) -> list[HomologyGroup]:
    return [nontrivial.get(d, HomologyGroup(0)) for d in range(length)]


def boundary_findings(ss5: SeparationComplex | None = None,
                      ws5: SeparationComplex | None = None) -> list[CheckResult]:
    """Purity, boundary homology, and the anomalous links at n = 5."""
    ss5 = ss5 or build(5, "ss")
    ws5 = ws5 or build(5, "ws")
    out = []
    for n in (4, 5):
        for sc in ((build(n, "ss"), build(n, "ws")) if n == 4 else (ss5, ws5)):
            out.append(purity_check(sc))

    expected_by_relation = {
        "ss": {2: HomologyGroup(1), 3: HomologyGroup(9), 4: HomologyGroup(1)},
        "ws": {2: HomologyGroup(1), 4: HomologyGroup(1)},
    }
    boundaries = {}
    for sc in (ss5, ws5):
        bd = sc.complex.boundary()
        boundaries[sc.relation] = bd
        groups = reduced_homology(bd)
        expected = _expected_groups(len(groups), expected_by_relation[sc.relation])
        for d, g in enumerate(expected):
            if not g.is_trivial:
                out.append(_row(f"H~{d}(boundary {sc.relation}5)", f"boundary {sc.relation}(5)",
                                str(g), str(groups[d])))
        others = [f"H~{d}" for d, g in enumerate(groups)
                  if expected[d].is_trivial and not g.is_trivial]
        out.append(_row(f"other-groups-trivial (boundary {sc.relation}5)",
                        f"boundary {sc.relation}(5)", "all 0",
                        "all 0" if not others else ", ".join(others)))

    bd_ws = boundaries["ws"]
    for label in ("15", "234"):
        lk = bd_ws.link_mask(1 << ws5.vertex_index(label))
        groups = reduced_homology(lk)
        got = f"H~1 = {groups[1]}, H~3 = {groups[3]}"
        out.append(_row(f"link-homology lk({label})", "boundary ws(5)",
                        "H~1 = Z, H~3 = Z", got,
                        witness=_homology_str(groups)))

    edge = 0
    for label in ("15", "234"):
        edge |= 1 << ws5.vertex_index(label)
    lk_edge = bd_ws.link_mask(edge)
    out.append(_row("link-f-vector lk(15,234)", "boundary ws(5)",
                    (12, 24, 16), lk_edge.face_counts()))
    pieces = lk_edge.components()
    octa = cross_polytope_boundary(3)
    shape_ok = (len(pieces) == 2
                and all(isomorphic(p, octa) is not None for p in pieces))
    out.append(_row("link-two-octahedra lk(15,234)", "boundary ws(5)",
                    True, shape_ok))

    bd_ss = boundaries["ss"]
    face = 0
    for label in ("2", "23", "234"):
        face |= 1 << ss5.vertex_index(label)
    lk_face = bd_ss.link_mask(face)
    out.append(_row("link-f-vector lk(2,23,234)", "boundary ss(5)",
                    (8, 8), lk_face.face_counts()))
    pieces = lk_face.components()
    cycles_ok = (len(pieces) == 2
                 and all(isomorphic(p, _SQUARE) is not None for p in pieces))
    out.append(_row("link-two-squares lk(2,23,234)", "boundary ss(5)",
                    True, cycles_ok))
    groups = reduced_homology(lk_face)
    out.append(_row("link-homology lk(2,23,234)", "boundary ss(5)",
                    "H~0 = Z; H~1 = Z^2", _homology_str(groups)))
    return out


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------

def _skipped(check: str, scope: str, reason: str) -> CheckResult:
    return CheckResult(check, scope, "", "", SKIPPED, reason)


def full_report(nmax: int = 5, allow_heavy: bool = False,
                force_heavy: bool = False,
                progress: Callable[[str], None] | None = None) -> list[CheckResult]:
    """Every machine check, in a fixed order, up to ground size nmax.

    Ground size 6 work is gated: the strong-separation checks run with
    allow_heavy, the weak-separation homology additionally needs force_heavy.
    """
    if nmax < 4:
        raise ValueError("the report needs nmax >= 4")
    say = progress or (lambda msg: None)
    results: list[CheckResult] = []

    say("figure counts")
    results.extend(figure_checks())

    small_max = min(nmax, 5)
    built = {(n, rel): build(n, rel) for n in range(4, small_max + 1)
             for rel in ("ss", "ws")}

    for n in range(4, small_max + 1):
        say(f"contractibility shadow ws({n})")
        results.extend(contractibility_shadow(built[(n, "ws")]))
    for n in range(4, small_max + 1):
        say(f"sphere shadow ss({n})")
        results.append(sphere_shadow(built[(n, "ss")]))

    for n in range(4, 8):
        say(f"cross polytope n={n}")
        results.extend(antipodal_checks(n))

    for n in range(4, small_max + 1):
        say(f"retraction checks ss({n})")
        results.extend(retraction_checks(built[(n, "ss")]))

    for n in range(4, small_max + 1):
        for rel in ("ss", "ws"):
            say(f"equivariance {rel}({n})")
            results.extend(equivariance_checks(built[(n, rel)]))

    for n in range(4, small_max + 1):
        say(f"covering checks ws({n})")
        results.extend(covering_checks(built[(n, "ws")]))
        results.extend(star_cover_checks(built[(n, "ws")]))

    if nmax >= 5:
        say("boundary findings n=5")
        results.extend(boundary_findings(built[(5, "ss")], built[(5, "ws")]))

    if nmax >= 6:
        if allow_heavy or force_heavy:
            say("sphere shadow ss(6)")
            ss6 = build(6, "ss")
            results.append(purity_check(ss6))
            results.append(sphere_shadow(ss6))
        else:
            results.append(_skipped("purity ss(6)", "ss(6)", "needs --allow-heavy"))
            results.append(_skipped("sphere-homology ss(6)", "ss(6)", "needs --allow-heavy"))
        if force_heavy:
            say("contractibility shadow ws(6)")
            ws6 = build(6, "ws")
            results.extend(contractibility_shadow(ws6, with_collapse=False))
        else:
            results.append(_skipped("homology-trivial ws(6)", "ws(6)", "needs --force-heavy"))
    return results


# ---------------------------------------------------------------------------
# named checks for the command line
# ---------------------------------------------------------------------------

def run_named_check(name: str, n: int, relation: str | None = None,
                    cap: int | None = None) -> list[CheckResult]:
    if name == "figures":
        return figure_checks()
    if name == "lemma-4-4":
        sc = build(n, "ss", cap)
        return [_row(f"image-nonempty ss({n})", f"ss({n})", 0,
                     image_nonempty_violations(sc), witness="violations")]
    if name == "chain-condition":
        sc = build(n, "ss", cap)
        return [_row(f"chain-condition ss({n})", f"ss({n})", 0,
                     chain_condition_violations(sc), witness="violations")]
    if name == "retraction":
        return retraction_checks(build(n, "ss", cap))
    if name == "equivariance":
        relations = (relation,) if relation else ("ss", "ws")
        out = []
        for rel in relations:
            out.extend(equivariance_checks(build(n, rel, cap)))
        return out
    if name == "covering":
        return covering_checks(build(n, "ws", cap))
    if name == "cone-points":
        return star_cover_checks(build(n, "ws", cap))
    if name == "purity":
        relations = (relation,) if relation else ("ss", "ws")
        return [purity_check(build(n, rel, cap)) for rel in relations]
    if name == "cross-polytope":
        return antipodal_checks(n)
    if name == "boundary-findings":
        if n != 5:
            raise ValueError("boundary findings are defined at n = 5")
        return boundary_findings()
    raise ValueError(f"unknown check {name!r}")


CHECK_NAMES = (
    "figures", "lemma-4-4", "chain-condition", "retraction", "equivariance",
    "covering", "cone-points", "purity", "cross-polytope", "boundary-findings",
)
