"""
Property suites re-checking the combinatorial results on small instances.

Each suite is a list of properties. A property is a check run over a
list of independent instances; the check returns None on success and a
message otherwise. Expected values come from the fixture catalog.
"""

import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ppx.config import DEFAULT_BOUNDS, Bounds
from ppx.core.algebra import boundary, dimension
from ppx.core.morphism import PolygraphMorphism
from ppx.core.polygraph import ClassTag, Polygraph, SubPolygraph, disjoint_union
from ppx.core.terms import SIGNS, Gen, Sign, Term, occurrence_counts, render
from ppx.fixtures.catalog import FixtureCatalog
from ppx.fixtures.examples import Example, ce2_lambda, ce2_lambda_prime
from ppx.fixtures.randomized import random_chain_complex, random_identifications, random_terms
from ppx.homotopy.anodyne import (
    anodyne_steps,
    cylinder_end,
    cylinder_relative,
    generating_cofibration,
    horn,
    horns,
    occurs_once,
    pushout_product,
    recognize_anodyne_pushout,
)
from ppx.homotopy.homology import homology, is_acyclic, reduced_homology
from ppx.homotopy.realization import check_mono, orientals_embed, realize, simplex
from ppx.linearization.delta import (
    apply_functor,
    delta,
    delta_vector,
    makkai_leq,
    pi_cell,
    positivity,
    preserves_sigma,
    sigma,
)
from ppx.linearization.globular import (
    ChainComplex,
    chain_to_globular,
    from_double_sequence,
    globular_to_chain,
    linearize,
    to_double_sequence,
)
from ppx.linearization.lincomb import LinComb
from ppx.linearization.vectors import Vector, basis_vector
from ppx.polyplex.classify import classify_cell
from ppx.polyplex.collapse import inner_owner
from ppx.polyplex.enumerate import EnumerationKind, enumerate_polyplexes
from ppx.polyplex.generic import is_generic
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.regularity import (
    has_spherical_boundary,
    is_polyplex,
    is_regular,
    is_regular_morphism,
    non_spherical_cells,
    shape_is_spherical,
    sigma_image,
)
from ppx.steiner.cone import ConeCell
from ppx.steiner.construct import (
    build_cone,
    build_tensor,
    cube,
    globe,
    globe_arrow,
    globe_to_tensor,
    oriental,
    subset_name,
    tensor_polygraph,
)
from ppx.steiner.tensor import TensorCell, reassociate, tensor_globular, tensor_pi, unit_group
from ppx.verification.results import PropertyResult, SuiteReport

LOGGER = logging.getLogger(__name__)

SUITES = ("sigma", "linear", "tensor", "cone", "anodyne", "realize")

# Plexes paired in the tensor closure property have at most this many cells.
PAIR_MAX_CELLS = 7

Check = Callable[[Any], Optional[str]]
Probe = Callable[[Any], str]
Factor = Tuple[str, Polygraph]


def _expect(label: str, got: Any, want: Any) -> Optional[str]:
    if got == want:
        return None
    return f"{label}: expected {want}, got {got}"


def _named(v: LinComb) -> Dict[str, int]:
    names = v.polygraph.names()
    return {names[x]: c for x, c in v.items()}


def _guarded(check: Check, instance: Any) -> Optional[str]:
    try:
        return check(instance)
    except Exception as e:
        LOGGER.exception("Check raised on %r", instance)
        return f"{type(e).__name__}: {e}"


def _probed(probe: Probe, instance: Any) -> str:
    try:
        return probe(instance)
    except Exception as e:
        LOGGER.exception("Observation raised on %r", instance)
        return f"error: {type(e).__name__}"


def _top(p: Polygraph) -> int:
    return p.cells_of_dim(p.dim)[0].id


def _plex_outcome(p: Polygraph, top: int) -> str:
    labels = classify_cell(p, top).labels
    return "plex" if len(labels) == len(p) and set(labels) == set(p.ids) else "not a plex"


def _vertices(name: str) -> Tuple[int, ...]:
    return tuple(int(v) for v in name.strip("[]").split(","))


class PaperVerifier:
    """
    Runs the property suites at desk scale.

    Instances of a property are independent. With more than one worker
    they are checked on a thread pool; results keep the instance order,
    so reports do not depend on the number of workers.
    """

    def __init__(
        self,
        bounds: Optional[Bounds] = None,
        catalog: Optional[FixtureCatalog] = None,
        max_dim: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        """
        Initialize the verifier.

        Args:
            bounds: Size limits (defaults to DEFAULT_BOUNDS)
            catalog: Fixture catalog providing inputs and expected values
            max_dim: Lower enumeration dimension than the bounds allow
            workers: Worker threads (defaults to bounds.workers)
        """
        self.bounds = bounds or DEFAULT_BOUNDS
        self.catalog = catalog or FixtureCatalog()
        self.max_dim = self.bounds.max_dim if max_dim is None else min(max_dim, self.bounds.max_dim)
        self.workers = self.bounds.workers if workers is None else workers
        if self.workers < 1:
            raise ValueError(f"Worker count must be positive, got {self.workers}")
        self.expected = self.catalog.expected()
        self._enumerated: Dict[EnumerationKind, List[Polyplex]] = {}
        self._terms: Optional[List[Tuple[Polygraph, Term]]] = None

    def run(self, suite: str = "all") -> SuiteReport:
        """
        Run one suite or all of them.

        Raises:
            ValueError: If the suite name is unknown
        """
        names = SUITES if suite == "all" else (suite,)
        report = SuiteReport()
        for name in names:
            report.extend(self.run_suite(name))
        LOGGER.info("Verified %d properties, pass rate %.2f", len(report.results), report.calculate_pass_rate())
        return report

    def run_suite(self, name: str) -> List[PropertyResult]:
        """Run a single suite by name."""
        if name not in SUITES:
            raise ValueError(f"Unknown suite {name!r}; known: {', '.join(SUITES)}, all")
        LOGGER.info("Running suite %s", name)
        return getattr(self, f"{name}_suite")()

    def check(self, suite: str, name: str, source: Callable[[], Sequence[Any]], check: Check) -> PropertyResult:
        """
        Check one property over its instances.

        Args:
            suite: Suite name
            name: Property name
            source: Builds the instances
            check: Returns None on success, a message on failure

        Returns:
            The property result; errors raised while building instances
            or checking one of them count as failures
        """
        start = time.perf_counter()
        try:
            instances = list(source())
        except Exception as e:
            LOGGER.exception("Could not build instances of %s/%s", suite, name)
            return PropertyResult(name, suite, False, 0, [f"{type(e).__name__}: {e}"], time.perf_counter() - start)
        outcomes = self._map(lambda x: _guarded(check, x), instances)
        failures = [o for o in outcomes if o]
        if not instances:
            failures.append("no instances")
        elapsed = time.perf_counter() - start
        LOGGER.info("%s/%s: %d instances, %d failures", suite, name, len(instances), len(failures))
        return PropertyResult(name, suite, not failures, len(instances), failures, elapsed)

    def observe(self, suite: str, name: str, source: Callable[[], Sequence[Any]], probe: Probe) -> PropertyResult:
        """
        Record the outcomes of an open question over its instances.

        Nothing is asserted. The result fails only when the instances
        cannot be built; otherwise the outcome of every instance is
        counted into the observations, and an empty instance list is
        allowed.
        """
        start = time.perf_counter()
        try:
            instances = list(source())
        except Exception as e:
            LOGGER.exception("Could not build instances of %s/%s", suite, name)
            return PropertyResult(name, suite, False, 0, [f"{type(e).__name__}: {e}"], time.perf_counter() - start)
        outcomes = self._map(lambda x: _probed(probe, x), instances)
        observations = dict(sorted(Counter(outcomes).items()))
        LOGGER.info("%s/%s: observed %s", suite, name, observations)
        return PropertyResult(name, suite, True, len(instances), [], time.perf_counter() - start, observations)

    def _map(self, fn: Callable[[Any], Any], instances: List[Any]) -> List[Any]:
        if self.workers > 1 and len(instances) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                return list(pool.map(fn, instances))
        return [fn(x) for x in instances]

    def polyplexes(self, kind: EnumerationKind = EnumerationKind.POLYPLEX) -> List[Polyplex]:
        """Enumerated polyplexes of a kind, computed once per verifier."""
        if kind not in self._enumerated:
            self._enumerated[kind] = list(
                enumerate_polyplexes(self.max_dim, self.bounds.max_cells, kind, self.bounds)
            )
        return self._enumerated[kind]

    def regular_polyplexes(self, kind: EnumerationKind = EnumerationKind.POLYPLEX) -> List[Polyplex]:
        """Enumerated polyplexes whose underlying polygraph is regular."""
        return [pp for pp in self.polyplexes(kind) if is_regular(pp.underlying)]

    def regular_plexes(self) -> List[Polyplex]:
        return self.regular_polyplexes(EnumerationKind.PLEX)

    def positive_plexes(self) -> List[Example]:
        """Catalog plexes that are positive but not regular."""
        found = []
        for name in self.catalog.names():
            ex = self.catalog.get(name)
            p = ex.polygraph
            if p.class_tag is ClassTag.POSITIVE and isinstance(ex.arrow, Gen) and not is_regular(p):
                found.append(ex)
        return found

    def _total_dim(self, cap: int) -> int:
        return min(cap, self.max_dim + 1)

    def sigma_suite(self) -> List[PropertyResult]:
        """Both counterexamples, the sigma criterion and sphericity."""
        ce1, ce2, rand = self.expected["ce1"], self.expected["ce2"], self.expected["random"]
        s = "sigma"

        def ce1_defect(ex: Example) -> Optional[str]:
            p = ex.polygraph
            return _expect(ex.name, _named(sigma_image(p, ex.arrow) - sigma(p)), ce1["sigma_defect"])

        def ce1_spheres(ex: Example) -> Optional[str]:
            return _expect(ex.name, [c.label for c in non_spherical_cells(ex.polygraph)], ce1["non_spherical"])

        def ce1_composite(ex: Example) -> Optional[str]:
            if not is_polyplex(ex.polygraph, ex.arrow):
                return f"{ex.name}: the composite is not a polyplex"
            return _expect(ex.name, len(ex.polygraph), ce1["ce1_X_cells"])

        def ce1_collapsed(ex: Example) -> Optional[str]:
            p, t = ex.polygraph, ex.arrow
            if sigma_image(p, t) != sigma(p):
                return f"{ex.name}: the raw sigma test fails"
            if is_generic(globe_arrow(p, t)) is not False:
                return f"{ex.name}: the arrow is certified generic"
            return None

        def ce2_defect(lam: PolygraphMorphism) -> Optional[str]:
            got = _named(apply_functor(lam, sigma(lam.domain)) - sigma(lam.codomain))
            return _expect("λ", got, ce2["sigma_defect"])

        def ce2_generic(lam: PolygraphMorphism) -> Optional[str]:
            return _expect(
                "λ",
                (is_generic(lam), is_regular_morphism(lam)),
                (ce2["lambda_generic"], ce2["lambda_regular"]),
            )

        def ce2_prime_generic(lam: PolygraphMorphism) -> Optional[str]:
            return _expect(
                "λ′",
                (is_generic(lam), preserves_sigma(lam)),
                (ce2["lambda_prime_generic"], ce2["lambda_prime_preserves_sigma"]),
            )

        def sound(pp: Polyplex) -> Optional[str]:
            return None if is_polyplex(pp.underlying, pp.universal) else f"{pp!r}: sigma test fails"

        def complete(item: Tuple[Polygraph, Term]) -> Optional[str]:
            q, t = item
            if is_polyplex(q, t):
                return f"quotient with grades {q.grades()} passes the sigma test on {render(t, q.names())}"
            return None

        def agree(pp: Polyplex) -> Optional[str]:
            has_spherical_boundary(pp)
            return None

        def source_target(pp: Polyplex) -> Optional[str]:
            src = has_spherical_boundary(pp.boundary(pp.dim - 1, Sign.MINUS)[0])
            tgt = has_spherical_boundary(pp.boundary(pp.dim - 1, Sign.PLUS)[0])
            return None if src == tgt else f"{pp!r}: source spherical {src}, target spherical {tgt}"

        def owner(item: Tuple[Polyplex, int]) -> Optional[str]:
            pp, x = item
            own = inner_owner(pp, x)
            return None if own.exclusive else f"{pp!r}: cell {x} has ownership {own}"

        return [
            self.check(s, "ce1_sigma_defect", lambda: [self.catalog.get("ce1_Y")], ce1_defect),
            self.check(s, "ce1_non_spherical", lambda: [self.catalog.get("ce1_Y")], ce1_spheres),
            self.check(s, "ce1_composite_polyplex", lambda: [self.catalog.get("ce1_X")], ce1_composite),
            self.check(s, "ce1_collapse_not_generic", lambda: [self.catalog.get("ce1_Y_prime")], ce1_collapsed),
            self.check(s, "ce2_sigma_defect", lambda: [ce2_lambda()], ce2_defect),
            self.check(s, "ce2_lambda_generic", lambda: [ce2_lambda()], ce2_generic),
            self.check(s, "ce2_lambda_prime_not_generic", lambda: [ce2_lambda_prime()], ce2_prime_generic),
            self.check(s, "sigma_sound", self.regular_polyplexes, sound),
            self.check(
                s,
                "sigma_complete",
                lambda: random_identifications(
                    self.regular_polyplexes(), rand["non_polyplex_pairs"], rand["seed"]
                ),
                complete,
            ),
            self.check(s, "sphericity_methods_agree", self.polyplexes, agree),
            self.check(
                s,
                "source_target_sphericity",
                lambda: [pp for pp in self.regular_polyplexes() if pp.dim >= 1],
                source_target,
            ),
            self.check(
                s,
                "inner_owner_exclusive",
                lambda: [
                    (pp, x)
                    for pp in self.regular_polyplexes()
                    if pp.dim >= 1
                    for x, c in enumerate(pp.shape.cells)
                    if c.dim < pp.dim
                ],
                owner,
            ),
        ]

    def _term_instances(self) -> List[Tuple[Polygraph, Term]]:
        if self._terms is None:
            rand = self.expected["random"]
            sources = [
                oriental(3, self.bounds),
                cube(2, self.bounds),
                self.catalog.get("ce1_Y").polygraph,
            ]
            total = rand["terms"]
            terms: List[Tuple[Polygraph, Term]] = []
            for i, p in enumerate(sources):
                count = total // len(sources) + (1 if i < total % len(sources) else 0)
                terms.extend((p, t) for t in random_terms(p, count, rand["seed"] + i))
            self._terms = terms
        return self._terms

    def linear_suite(self) -> List[PropertyResult]:
        """Counting, Makkai positivity and the conversions between descriptions."""
        rand = self.expected["random"]
        s = "linear"

        def counts(item: Tuple[Polygraph, Term]) -> Optional[str]:
            p, t = item
            n = dimension(p, t)
            d = delta_vector(p, t)
            occ = occurrence_counts(t)
            wrong = [c.label for c in p.cells_of_dim(n) if d[c.id] != occ[c.id]]
            return f"{render(t, p.names())}: counts differ on {wrong}" if wrong else None

        def positive(item: Tuple[Polygraph, Term]) -> Optional[str]:
            p, t = item
            return None if positivity(delta(p, t)) else f"{render(t, p.names())} has a negative m-coordinate"

        def monotone(item: Tuple[Polygraph, Term]) -> Optional[str]:
            p, t = item
            whole = delta(p, t)
            bad = [
                f"{k}{sign.value}"
                for k in range(dimension(p, t))
                for sign in SIGNS
                if not makkai_leq(delta(p, boundary(p, t, k, sign)), whole)
            ]
            return f"{render(t, p.names())}: boundaries {bad} exceed the arrow" if bad else None

        def round_trip(k: ChainComplex) -> Optional[str]:
            g = chain_to_globular(k)
            issues = g.relation_violations()
            if issues:
                return "; ".join(issues[:3])
            if not globular_to_chain(g).same_as(k):
                return f"complex of dimension {k.dim}: chain and globular forms disagree"
            for b in g.basis():
                seq = to_double_sequence(g, {b: 1})
                if seq.violations(k):
                    return f"double sequence of {b} is not admissible"
                if from_double_sequence(g, seq) != basis_vector(b):
                    return f"double sequence of {b} does not give back {b}"
            return None

        def complexes() -> List[ChainComplex]:
            return [
                random_chain_complex(
                    rand["seed"] + i, rand["complex_max_grade"], rand["complex_max_basis"], augmented=bool(i % 2)
                )
                for i in range(rand["complexes"])
            ]

        return [
            self.check(s, "delta_counts_occurrences", self._term_instances, counts),
            self.check(s, "m_basis_positive", self._term_instances, positive),
            self.check(s, "makkai_monotone_under_boundaries", self._term_instances, monotone),
            self.check(s, "chain_globular_round_trip", complexes, round_trip),
        ]

    def tensor_suite(self) -> List[PropertyResult]:
        """Grades, linear laws and regular closure of the tensor product."""
        expected = self.expected["tensor"]
        total = self._total_dim(expected["max_total_dim"])
        s = "tensor"

        def factors() -> List[Factor]:
            found = [(f"D{n}", globe(n)) for n in range(total + 1)]
            found += [(f"O{n}", oriental(n, self.bounds)) for n in range(2, min(total, self.bounds.max_oriental) + 1)]
            return found

        def laws(item: Tuple[Factor, Factor]) -> Optional[str]:
            (xn, x), (yn, y) = item
            res = build_tensor(x, y)
            pg = res.polygraph
            gx, gy = linearize(x), linearize(y)
            keys = {i: key for key, i in res.cells.items()}
            for key, cid in res.cells.items():
                for k in range(pg.dim_of(cid)):
                    for sign in SIGNS:
                        got = pi_cell(pg, cid, k, sign).map_keys(keys.__getitem__)
                        if got != tensor_pi(gx, gy, key.left, key.right, k, sign):
                            return f"{xn}⊗{yn}: pi_{k}{sign.value} of {pg.cell(cid).label} differs"
            want = Vector(
                (TensorCell(a, b), ca * cb) for a, ca in sigma(x).items() for b, cb in sigma(y).items()
            )
            got = Vector((keys[i], c) for i, c in sigma(pg).items())
            return None if got == want else f"{xn}⊗{yn}: sigma is not the product of sigmas"

        def associative(item: Tuple[int, int, int]) -> Optional[str]:
            a, b, c = (linearize(globe(n)) for n in item)
            left = tensor_globular(tensor_globular(a, b), c).rename(reassociate)
            right = tensor_globular(a, tensor_globular(b, c))
            return None if left.same_as(right) else f"D{item[0]}⊗D{item[1]}⊗D{item[2]}: " + "; ".join(
                left.mismatches(right)
            )

        def unital(n: int) -> Optional[str]:
            g = linearize(globe(n))
            u = unit_group()
            if not tensor_globular(u, g).rename(lambda c: c.right).same_as(g):
                return f"Z⊗D{n} differs from D{n}"
            if not tensor_globular(g, u).rename(lambda c: c.left).same_as(g):
                return f"D{n}⊗Z differs from D{n}"
            return None

        def globe_map(item: Tuple[int, int]) -> Optional[str]:
            f = globe_to_tensor(*item)
            if not f.preserves_sigma():
                return f"D{sum(item)} -> D{item[0]}⊗D{item[1]} does not preserve sigma"
            if not f.preserves_alternate_positivity():
                return f"D{sum(item)} -> D{item[0]}⊗D{item[1]} does not preserve alternate positivity"
            return None

        def closure(item: Tuple[Polyplex, Polyplex]) -> Optional[str]:
            a, b = item
            res = build_tensor(a.underlying, b.underlying)
            pg = res.polygraph
            if not is_regular(pg):
                return f"{a!r}⊗{b!r} is not regular"
            top = res.cells[TensorCell(_top(a.underlying), _top(b.underlying))]
            if not shape_is_spherical(classify_cell(pg, top).shape):
                return f"{a!r}⊗{b!r}: the top plex lacks spherical boundary"
            return None

        def plex_pairs() -> List[Tuple[Polyplex, Polyplex]]:
            small = [pp for pp in self.regular_plexes() if pp.size <= PAIR_MAX_CELLS]
            return [(a, b) for a in small for b in small if a.dim + b.dim <= total]

        def positive_tensor(item: Tuple[Example, int]) -> str:
            ex, n = item
            res = build_tensor(ex.polygraph, globe(n))
            return _plex_outcome(res.polygraph, res.cells[TensorCell(ex.arrow.cell, _top(globe(n)))])

        def positive_pairs() -> List[Tuple[Example, int]]:
            return [(ex, n) for ex in self.positive_plexes() for n in range(2) if ex.polygraph.dim + n <= total]

        return [
            self.check(
                s,
                "d1_d1_grades",
                lambda: [globe(1)],
                lambda d: _expect("D1⊗D1", list(tensor_polygraph(d, d).grades()), expected["d1_d1_grades"]),
            ),
            self.check(
                s,
                "cube_grades",
                lambda: sorted(expected["cube_grades"].items()),
                lambda item: _expect(f"cube({item[0]})", list(cube(int(item[0]), self.bounds).grades()), item[1]),
            ),
            self.check(
                s,
                "tensor_linear_laws",
                lambda: [(x, y) for x in factors() for y in factors() if x[1].dim + y[1].dim <= total],
                laws,
            ),
            self.check(
                s,
                "tensor_associative",
                lambda: [
                    (a, b, c)
                    for a in range(total + 1)
                    for b in range(total + 1)
                    for c in range(total + 1)
                    if a + b + c <= min(total, 3)
                ],
                associative,
            ),
            self.check(s, "tensor_unital", lambda: list(range(total + 1)), unital),
            self.check(
                s,
                "globe_to_tensor",
                lambda: [(n, m) for n in range(total + 1) for m in range(total + 1 - n)],
                globe_map,
            ),
            self.check(s, "regular_closure", plex_pairs, closure),
            self.observe(s, "positive_tensor_plex", positive_pairs, positive_tensor),
        ]

    def cone_suite(self) -> List[PropertyResult]:
        """Cones of plexes and the orientals."""
        expected = self.expected["orientals"]
        s = "cone"

        def cone_plex(pp: Polyplex) -> Optional[str]:
            res = build_cone(pp.underlying)
            pg = res.polygraph
            t = res.cells[ConeCell.cone(_top(pp.underlying))]
            if not is_polyplex(pg, Gen(t)):
                return f"cone of {pp!r} is not a polyplex on its top cell"
            if not shape_is_spherical(classify_cell(pg, t).shape):
                return f"cone of {pp!r} lacks spherical boundary"
            return None

        def positive_cone(ex: Example) -> str:
            res = build_cone(ex.polygraph)
            return _plex_outcome(res.polygraph, res.cells[ConeCell.cone(ex.arrow.cell)])

        def binomials(n: int) -> Optional[str]:
            got = list(oriental(n, self.bounds).grades())
            want = [comb(n + 1, k + 1) for k in range(n + 1)]
            if got != want:
                return _expect(f"O({n})", got, want)
            return _expect(f"O({n})", got, expected["grades"][str(n)])

        def faces(item: Tuple[int, int]) -> Optional[str]:
            n, cid = item
            o = oriental(n, self.bounds)
            vertices = _vertices(o.cell(cid).label)
            want = {subset_name(w) for r in range(1, len(vertices) + 1) for w in combinations(vertices, r)}
            got = {o.cell(i).label for i in classify_cell(o, cid).labels}
            return _expect(f"O({n}) cell {o.cell(cid).label}", sorted(got), sorted(want))

        top = min(expected["max_n"], self.bounds.max_oriental)
        poset_top = min(expected["poset_max_n"], top)
        return [
            self.check(s, "cone_of_plex", self.regular_plexes, cone_plex),
            self.check(s, "oriental_binomials", lambda: list(range(top + 1)), binomials),
            self.check(
                s,
                "oriental_face_poset",
                lambda: [(n, c.id) for n in range(poset_top + 1) for c in oriental(n, self.bounds)],
                faces,
            ),
            self.observe(s, "positive_cone_plex", self.positive_plexes, positive_cone),
        ]

    def anodyne_suite(self) -> List[PropertyResult]:
        """Pushout products, the cylinders and the occurrence lemma."""
        expected = self.expected["anodyne"]
        total = self._total_dim(4)
        s = "anodyne"

        def plexes() -> List[Factor]:
            found = [(f"D{n}", globe(n)) for n in range(total + 1)]
            found += [(f"O{n}", oriental(n, self.bounds)) for n in range(2, min(total, self.bounds.max_oriental) + 1)]
            return found

        def pairs() -> List[Tuple[Any, Any]]:
            cofibrations = [(name, c, generating_cofibration(c)) for name, c in plexes()]
            anodyne = [(name, c, gen) for name, c in plexes() if c.dim >= 1 for gen in horns(c)]
            return [(i, j) for i in cofibrations for j in anodyne if i[1].dim + j[1].dim <= total]

        def corner(item: Tuple[Any, Any]) -> Optional[str]:
            (an, a, i), (bn, b, gen) = item
            sub = pushout_product(i, gen.inclusion)
            label = f"∂{an} x Λ{bn}"
            if not recognize_anodyne_pushout(sub):
                return f"{label} is not a horn pushout"
            dims = sorted(sub.parent.dim_of(x) for x in sub.complement())
            return _expect(label, dims, [a.dim + b.dim - 1, a.dim + b.dim])

        def corner_d1(d: Polygraph) -> Optional[str]:
            sub = pushout_product(generating_cofibration(d), horn(d, "0-").inclusion)
            dims = sorted(sub.parent.dim_of(x) for x in sub.complement())
            return _expect("∂D1 x ΛD1", dims, expected["corner_missing_dims"])

        def d_prime(ex: Example) -> Optional[str]:
            p = ex.polygraph
            steps = anodyne_steps(SubPolygraph.of(p, [p.cell_by_name("*").id]))
            names = p.names()
            got = None if steps is None else [[names[st.cell], names[st.filler]] for st in steps]
            return _expect(
                ex.name,
                (list(p.grades()), got),
                (expected["d_prime_star_grades"], expected["d_prime_star_steps"]),
            )

        def cylinder(pp: Polyplex) -> Optional[str]:
            sub = cylinder_end(cylinder_relative(pp.underlying))
            if not recognize_anodyne_pushout(sub):
                return f"relative cylinder on {pp!r} is not a horn pushout"
            steps = anodyne_steps(sub)
            return None if steps is not None and len(steps) == 1 else f"relative cylinder on {pp!r}: steps {steps}"

        def occurrence(pp: Polyplex) -> Optional[str]:
            p = pp.underlying
            top = _top(p)
            faces = p.cells_of_dim(pp.dim - 1)
            bad = [c.label for c in faces if not occurs_once(p, top, c.id)]
            if bad:
                return f"{pp!r}: {bad} do not occur exactly once in exactly one boundary"
            return _expect(repr(pp), len(horns(p)), len(faces))

        return [
            self.check(s, "pushout_products", pairs, corner),
            self.check(s, "corner_missing_dims", lambda: [globe(1)], corner_d1),
            self.check(s, "d_prime_star_steps", lambda: [self.catalog.get("d_prime_star")], d_prime),
            self.check(s, "relative_cylinders", self.regular_plexes, cylinder),
            self.check(
                s, "occurrence_lemma", lambda: [pp for pp in self.regular_plexes() if pp.dim >= 1], occurrence
            ),
        ]

    def realize_suite(self) -> List[PropertyResult]:
        """Realizations, their homology and the orientals embedding."""
        expected = self.expected["realization"]
        s = "realize"

        def globe_counts(item: Tuple[int, List[int]]) -> Optional[str]:
            n, want = item
            return _expect(f"R(D{n})", list(realize(globe(n)).counts), want)

        def acyclic(pp: Polyplex) -> Optional[str]:
            r = realize(pp.underlying)
            if is_acyclic(r, self.bounds):
                return None
            groups = [str(g) for g in reduced_homology(r, bounds=self.bounds)]
            return f"{pp!r}: reduced homology {groups}"

        def circle(which: str) -> Optional[str]:
            if which == "oriental":
                o = oriental(2, self.bounds)
                r = realize(o.restrict((c.id for c in o if c.dim < 2), ClassTag.REGULAR))
            else:
                r = self.catalog.simplicial(which)
            got = [g.to_dict() for g in homology(r, max_deg=1, bounds=self.bounds)]
            return _expect(which, got, expected["triangle_boundary_homology"])

        def embed(n: int) -> Optional[str]:
            x = orientals_embed(simplex(n))
            message = _expect(f"embedded Δ{n}", list(x.grades()), list(oriental(n, self.bounds).grades()))
            if message:
                return message
            return None if is_acyclic(realize(x), self.bounds) else f"R of the embedded Δ{n} is not acyclic"

        def embed_fixture(item: Tuple[str, str]) -> Optional[str]:
            name, key = item
            return _expect(name, list(orientals_embed(self.catalog.simplicial(name)).grades()), expected[key])

        def coproduct(item: Tuple[Factor, Factor]) -> Optional[str]:
            (pn, p), (qn, q) = item
            union, _, _ = disjoint_union(p, q)
            a, b = realize(p).counts, realize(q).counts
            want = [
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(max(len(a), len(b)))
            ]
            return _expect(f"R({pn} + {qn})", list(realize(union).counts), want)

        def mono(item: Tuple[Polyplex, int, Sign]) -> Optional[str]:
            pp, k, sign = item
            check_mono(pp.boundary(k, sign)[1])
            return None

        def summands() -> List[Factor]:
            return [("D0", globe(0)), ("D1", globe(1)), ("D2", globe(2)), ("O2", oriental(2, self.bounds))]

        embed_top = min(expected["embed_max_n"], self.bounds.max_oriental)
        return [
            self.check(
                s,
                "globe_counts",
                lambda: [(0, expected["d0_counts"]), (1, expected["d1_counts"])],
                globe_counts,
            ),
            self.check(s, "plex_acyclic", self.regular_plexes, acyclic),
            self.check(s, "triangle_boundary_homology", lambda: ["oriental", "triangle_boundary"], circle),
            self.check(s, "orientals_embed_acyclic", lambda: list(range(embed_top + 1)), embed),
            self.check(
                s,
                "orientals_embed_fixtures",
                lambda: [
                    ("two_triangles", "two_triangles_embed_grades"),
                    ("triangle_boundary", "triangle_boundary_embed_grades"),
                ],
                embed_fixture,
            ),
            self.check(
                s,
                "realize_coproducts",
                lambda: [(a, b) for i, a in enumerate(summands()) for b in summands()[i:]],
                coproduct,
            ),
            self.check(
                s,
                "realize_monos",
                lambda: [
                    (pp, k, sign)
                    for pp in self.regular_plexes()
                    if pp.dim >= 1
                    for k in range(pp.dim)
                    for sign in SIGNS
                ],
                mono,
            ),
        ]
