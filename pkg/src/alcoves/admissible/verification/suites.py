"""
Verification suites. Each suite runs exhaustive checks of one group of statements about a case
and records them in a :class:`Report`.

Suites:

* maxwell - the face poset of the coweight polytope.
* hh - lengths, the length zero element and the obtuse cone description of Adm(mu).
* main1 - the faces Adm(mu)_{a,I} and the sets Lambda(w).
* main2 - interiors, fibers of the face map and centers.
* characterization - the face map as the order reversing map sending centers to their faces.
* lemmas - the Bruhat order machinery and the lemmas the face theorems rest on.
"""
import itertools
import logging
from collections import defaultdict
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from alcoves.admissible.core.admissible import (
    VerificationMode, adm_face, lambda_set, sub_length
)
from alcoves.admissible.core.affine_weyl import ExtAffineElt
from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.errors import (
    AdmissibleError, DegenerateInputError, IllegalParameterError
)
from alcoves.admissible.core.finite_weyl import FiniteWeylGroup, FiniteWeylElt, format_indices
from alcoves.admissible.core.polytope import FaceHandle, Pair
from alcoves.admissible.core.subsystem import SubRootSystem
from alcoves.admissible.verification.report import Report

ALL = 'all'
""" The name that selects every suite. """

MAX_A1A2_RANK = 4
MAX_COSET_CRITERION_RANK = 3


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


def _first(witnesses: Iterable[Optional[str]]) -> Optional[str]:
    for w in witnesses:
        if w is not None:
            return w
    return None


def _subsets(rank: int, proper: bool=False) -> Iterable[FrozenSet[int]]:
    for n in range(rank if proper else rank + 1):
        for combo in itertools.combinations(range(rank), n):
            yield frozenset(combo)


def _pair_str(a: FiniteWeylElt, indices: Iterable[int]) -> str:
    return '({}, {})'.format(a, format_indices(indices))


def _offset(w: ExtAffineElt, e) -> tuple:
    # w(e) - e
    return tuple(x - y for x, y in zip(w.act_point(e), e))


def maxwell(case: AdmissibleCase, report: Report) -> None:
    """ Checks of the face poset of the coweight polytope. """
    poset = case.poset
    weyl = case.weyl
    mu = case.mu

    def face_count():
        vertex_sets = set()
        for indices in _subsets(weyl.rank):
            wi = weyl.parabolic(indices)
            for a in weyl.min_coset_reps(indices):
                vertex_sets.add(frozenset((a * u).act(mu) for u in wi))
        if len(vertex_sets) != len(poset):
            return '{} vertex sets but {} double cosets'.format(len(vertex_sets), len(poset))
        return None

    def vertex_faces():
        wj = weyl.stabilizer(mu)
        expected = weyl.order() // len(wj)
        verts = poset.vertex_faces()
        if len(verts) != expected or len(poset.orbit) != expected:
            return '{} vertex faces, expected {}'.format(len(verts), expected)
        return _first(str(f) for f in verts
                      if f.indices or f.coset != frozenset(f.a * v for v in wj))

    def containment():
        for f1 in poset:
            for f2 in poset:
                poset.face_leq(f1, f2)
        return None

    def intersections():
        for f1 in poset:
            for f2 in poset:
                meet = poset.face_intersection(f1, f2)
                shared = f1.vertices & f2.vertices
                if (meet.vertices if meet else frozenset()) != shared:
                    return '{} and {}'.format(f1, f2)
        return None

    def smallest_faces():
        return _first(str(f) for f in poset if poset.smallest_face_containing(f.vertices) != f)

    def reduced_dimension():
        for f in poset:
            a, indices = poset.reduced_pair(f)
            if len(indices) != f.dim:
                return '{} has dimension {} but reduced pair {}'.format(
                    f, f.dim, _pair_str(a, indices))
        return None

    report.run('maxwell.face-count', face_count)
    report.run('maxwell.vertex-faces', vertex_faces)
    report.run('maxwell.containment', containment)
    report.run('maxwell.intersections', intersections)
    report.run('maxwell.smallest-face', smallest_faces)
    report.run('maxwell.reduced-dimension', reduced_dimension)


def hh(case: AdmissibleCase, report: Report) -> None:
    """ Checks of lengths, tau_mu and the obtuse cone description of Adm(mu). """
    g = case.group
    adm = case.adm
    mu = case.mu
    rd = case.root_datum
    elements = adm.sorted_elements()
    bound = g.length(adm.maxima[mu])
    coset_slice = sorted(g.bounded_coset_slice(adm.tau, bound), key=g.sort_key)
    zs = case.weyl.elements()
    depth = case.depth

    def lengths(ws: List[ExtAffineElt]):
        return lambda: _first(str(w) for w in ws
                              if g.length(w) != len(g.separating_hyperplanes(w)))

    def tau():
        zero = [w for w in elements if g.length(w) == 0]
        if zero != [adm.tau]:
            return ', '.join(str(w) for w in zero)
        return None

    def cones():
        for z in zs:
            top = g.translation(z.act(mu))
            for w in elements:
                if not g.obtuse_cone_member(w, top, z, depth):
                    return '{} is not in O({}, {})'.format(w, top, z)
        return None

    def bounded_equality():
        for w in coset_slice:
            inside = all(g.obtuse_cone_member(w, g.translation(z.act(mu)), z, depth)
                         for z in zs)
            if inside != (w in adm):
                return str(w)
        return None

    def lemma_part_1():
        e = rd.barycenter()
        for w in elements:
            off = _offset(w, e)
            for z in zs:
                img = z.inverse().act_point(off)
                lam = tuple(m - x for m, x in zip(mu.coords, img))
                if any(c < 0 for c in rd.to_coroot_basis(lam)):
                    return '{} with z = {}'.format(w, z)
        return None

    report.run('hh.length-hyperplanes', lengths(elements))
    report.run('hh.length-hyperplanes.slice', lengths(coset_slice))
    report.run('hh.tau', tau)
    report.run('hh.obtuse-cones', cones)
    report.run('hh.bounded-equality', bounded_equality)
    report.run('hh.lemma-1', lemma_part_1)


class _FaceSets:
    """ Adm(mu)_{a,I} per generating pair, computed on demand. """

    def __init__(self, case: AdmissibleCase) -> None:
        self.case = case
        self.sets: Dict[Pair, FrozenSet[ExtAffineElt]] = {}

    def get(self, a: FiniteWeylElt, indices: FrozenSet[int],
            mode: VerificationMode=VerificationMode.FAST) -> FrozenSet[ExtAffineElt]:
        key = (a, frozenset(indices))
        if key not in self.sets:
            self.sets[key] = adm_face(self.case.adm, a, indices, mode)
        return self.sets[key]

    def of(self, face: FaceHandle) -> FrozenSet[ExtAffineElt]:
        return self.get(face.a, face.indices)


def main1(case: AdmissibleCase, report: Report) -> None:
    """ Checks of the faces Adm(mu)_{a,I} against Lambda(w). """
    adm = case.adm
    g = case.group
    poset = case.poset
    weyl = case.weyl
    sets = _FaceSets(case)
    lambdas = {w: lambda_set(w, adm) for w in adm.elements}
    elements = adm.sorted_elements()

    def definitions():
        for indices in _subsets(weyl.rank):
            for a in weyl.min_coset_reps(indices):
                sets.get(a, indices, VerificationMode.FULL)
        return None

    def theorem():
        for f in poset:
            expected = frozenset(w for w in elements if lambdas[w] <= f.vertices)
            if sets.of(f) != expected:
                return str(f)
        return None

    def well_defined():
        for f in poset:
            if len({sets.get(a, indices) for a, indices in poset.pairs(f)}) != 1:
                return str(f)
        return None

    def intersections():
        for f1 in poset:
            for f2 in poset:
                meet = poset.face_intersection(f1, f2)
                expected = sets.of(meet) if meet else frozenset()
                if sets.of(f1) & sets.of(f2) != expected:
                    return '{} and {}'.format(f1, f2)
        return None

    def maxima():
        for f in poset:
            e = sets.of(f)
            tops = {w for w in e if not any(g.bruhat_less(w, v) for v in e)}
            if tops != {adm.maxima[v] for v in f.vertices}:
                return str(f)
        return None

    report.run('main1.definitions', definitions)
    report.run('main1.faces', theorem)
    report.run('main1.well-defined', well_defined)
    report.run('main1.intersections', intersections)
    report.run('main1.maxima', maxima)


def _face_map_table(case: AdmissibleCase, report: Report, prefix: str
                    ) -> Optional[Dict[ExtAffineElt, FaceHandle]]:
    try:
        decomp = case.decomposition
        table = {w: decomp.face_map(w) for w in case.adm.elements}
    except AdmissibleError as e:
        report.add(prefix + '.face-map', str(e))
        return None
    report.add(prefix + '.face-map', None)
    return table


def main2(case: AdmissibleCase, report: Report) -> None:
    """ Checks of the decomposition of Adm(mu) into face interiors. """
    fmap = _face_map_table(case, report, 'main2')
    if fmap is None:
        return
    adm = case.adm
    decomp = case.decomposition
    fibers: Dict[FaceHandle, set] = defaultdict(set)
    for w, f in fmap.items():
        fibers[f].add(w)

    def partition():
        seen: set = set()
        for af in decomp.adm_faces:
            if af.interior & seen:
                return str(af.face)
            seen |= af.interior
        return _first(str(w) for w in adm.sorted_elements() if w not in seen)

    def fiber_equality():
        return _first(str(af.face) for af in decomp.adm_faces
                      if frozenset(fibers.get(af.face, ())) != af.interior)

    def surjective():
        return _first(str(af.face) for af in decomp.adm_faces if not fibers.get(af.face))

    def centers():
        for af in decomp.adm_faces:
            c = af.center
            if c not in af.interior or sub_length(adm, c, af.subsystem) != 0:
                return str(af.face)
            if af.face.dim == 0 and c != adm.maxima[next(iter(af.face.vertices))]:
                return str(af.face)
        if decomp.adm_face_for(decomp.poset.top).center != adm.tau:
            return str(decomp.poset.top)
        return None

    report.run('main2.partition', partition)
    report.run('main2.fibers', fiber_equality)
    report.run('main2.surjective', surjective)
    report.run('main2.centers', centers)
    witness = decomp.non_injectivity_witness()
    report.info('main2.non-injective',
                '{} has {} interior elements'.format(witness.face, len(witness.interior))
                if witness else 'none')


def characterization(case: AdmissibleCase, report: Report) -> None:
    """ Checks that the face map is the order reversing map sending each center to its face. """
    fmap = _face_map_table(case, report, 'characterization')
    if fmap is None:
        return
    g = case.group
    decomp = case.decomposition
    poset = case.poset
    elements = case.adm.sorted_elements()

    def order_reversing():
        for w in elements:
            for v in elements:
                if g.bruhat_less(w, v) and not poset.face_leq(fmap[v], fmap[w]):
                    return '{} < {}'.format(w, v)
        return None

    def centers():
        return _first(str(af.face) for af in decomp.adm_faces
                      if decomp.face_map(af.center) != af.face)

    def reconstruction():
        for w in elements:
            by_center = {af.face for af in decomp.adm_faces if g.bruhat_leq(af.center, w)}
            by_elements = {af.face for af in decomp.adm_faces if w in af.elements}
            minimal = [f for f in by_center if all(poset.face_leq(f, h) for h in by_center)]
            if by_center != by_elements or minimal != [fmap[w]]:
                return str(w)
        return None

    report.run('characterization.order-reversing', order_reversing)
    report.run('characterization.centers', centers)
    report.run('characterization.reconstruction', reconstruction)


def lemma_a1a2(weyl: FiniteWeylGroup) -> Optional[str]:
    """
    Check that for every I strictly inside the simple roots and all positive roots
    alpha_1, alpha_2 outside Phi_I with s_alpha_1 s_alpha_2 in W_I, alpha_1 = alpha_2.

    :returns: a witness on failure, or None.
    """
    not_none(weyl, 'weyl')
    rd = weyl.root_datum
    refl = {alpha: weyl.reflection(alpha) for alpha in rd.pos_roots}
    for indices in _subsets(weyl.rank, proper=True):
        outside = [alpha for alpha in rd.pos_roots if not alpha.support() <= indices]
        for a1 in outside:
            for a2 in outside:
                if a1 != a2 and (refl[a1] * refl[a2]).support() <= indices:
                    return '{}, {} for I = {}'.format(a1, a2, format_indices(indices))
    return None


def _right_letters(weyl: FiniteWeylGroup, z: FiniteWeylElt) -> FrozenSet[int]:
    # letters of the reduced word found by greedy right descent
    letters = set()
    while not z.is_identity():
        i = min(z.right_descents())
        letters.add(i)
        z = z * weyl.simple_reflection(i)
    return frozenset(letters)


def lemmas(case: AdmissibleCase, report: Report) -> None:
    """ Checks of the Bruhat order machinery and of the lemmas behind the face theorems. """
    g = case.group
    adm = case.adm
    weyl = case.weyl
    rd = case.root_datum
    mu = case.mu
    ideal = sorted(g.lower_ideal(adm.maxima[mu]), key=g.sort_key)
    elements = adm.sorted_elements()
    faces: List[Tuple[FaceHandle, SubRootSystem, FrozenSet[ExtAffineElt]]] = []

    def bruhat_subword():
        ideals = {y: g.lower_ideal(y) for y in ideal}
        for x in ideal:
            for y in ideal:
                if g.bruhat_leq(x, y) != (x in ideals[y]):
                    return '{} <= {}'.format(x, y)
        return None

    def ideal_oracle():
        return _first(str(t) for t in adm.sorted_maxima()
                      if g.lower_ideal(t) != g.lower_ideal_by_covers(t))

    def face_sets():
        sets = _FaceSets(case)
        for f in case.poset:
            faces.append((f, SubRootSystem(weyl, f.a, f.indices), sets.of(f)))
        return None

    def upward_closure():
        for f, _, e in faces:
            for w1 in e:
                for w2 in elements:
                    if w2 not in e and g.bruhat_less(w1, w2):
                        return '{} < {} leaves {}'.format(w1, w2, f)
        return None

    def key():
        for f, sub, e in faces:
            for w in e:
                for w2 in elements:
                    if g.bruhat_less(w, w2):
                        ar = g.as_affine_reflection(w2 * w.inverse())
                        if ar is not None and not sub.contains_root(ar.alpha):
                            return '{} -> {} by {} in {}'.format(w, w2, ar, f)
        return None

    def lemma_part_2():
        e = rd.barycenter()
        for f, _, ws in faces:
            wi = weyl.parabolic(f.indices)
            for w in ws:
                off = _offset(w, e)
                for u in wi:
                    img = (f.a * u).inverse().act_point(off)
                    lam = rd.to_coroot_basis(tuple(m - x for m, x in zip(mu.coords, img)))
                    if any(c < 0 or (c and i not in f.indices) for i, c in enumerate(lam)):
                        return '{} with u = {} in {}'.format(w, u, f)
        return None

    def coset_criterion():
        for indices in _subsets(weyl.rank):
            wi = weyl.parabolic(indices)
            for z in weyl.elements():
                additive = all((z * u).length == z.length + u.length for u in wi)
                if additive != weyl.is_min_coset_rep(z, indices):
                    return _pair_str(z, indices)
        return None

    def support():
        return _first(str(z) for z in weyl.elements() if _right_letters(weyl, z) != z.support())

    def dyer():
        for f, sub, e in faces:
            sg = adm.sub_group(sub)
            for w1 in e:
                for w2 in e:
                    if sg.bruhat_leq(w1, w2) != g.bruhat_leq(w1, w2):
                        return '{}, {} in {}'.format(w1, w2, f)
        return None

    report.run('lemmas.bruhat-subword', bruhat_subword)
    report.run('lemmas.ideal-oracle', ideal_oracle)
    report.run('lemmas.face-sets', face_sets)
    report.run('lemmas.upward-closure', upward_closure)
    report.run('lemmas.key', key)
    report.run('lemmas.hh-2', lemma_part_2)
    if weyl.rank <= MAX_A1A2_RANK:
        report.run('lemmas.a1a2', lambda: lemma_a1a2(weyl))
    else:
        report.info('lemmas.a1a2', 'skipped above rank {}'.format(MAX_A1A2_RANK))
    if weyl.rank <= MAX_COSET_CRITERION_RANK:
        report.run('lemmas.coset-criterion', coset_criterion)
    else:
        report.info('lemmas.coset-criterion',
                    'skipped above rank {}'.format(MAX_COSET_CRITERION_RANK))
    report.run('lemmas.support', support)
    report.run('lemmas.dyer', dyer)


SUITES: Dict[str, Callable[[AdmissibleCase, Report], None]] = {
    'maxwell': maxwell,
    'hh': hh,
    'main1': main1,
    'main2': main2,
    'characterization': characterization,
    'lemmas': lemmas,
}
""" The suites in the order the 'all' suite runs them. """


def suite_names() -> List[str]:
    return list(SUITES) + [ALL]


def run_suite(case: AdmissibleCase, suite: str) -> Report:
    """
    Run a suite, or all suites, against a case.

    :param case: the case.
    :param suite: a suite name or 'all'.
    :raises IllegalParameterError: if the suite is unknown.
    :raises DegenerateInputError: if mu is zero.
    """
    not_none(case, 'case')
    if suite not in suite_names():
        raise IllegalParameterError('Unknown suite {}, expected one of {}'.format(
            suite, ', '.join(suite_names())))
    if case.mu.is_zero():
        raise DegenerateInputError('Verification needs a nonzero coweight')
    report = Report(case.label)
    for name in SUITES if suite == ALL else [suite]:
        SUITES[name](case, report)
        _log('Suite %s on %s: %s', name, case.label, 'pass' if report.passed else 'fail')
    return report


def verify_fibers(case: AdmissibleCase) -> Report:
    """ The fiber, partition and surjectivity checks of the face map. """
    return run_suite(case, 'main2')


def verify_characterization(case: AdmissibleCase) -> Report:
    """ The characterization checks of the face map. """
    return run_suite(case, 'characterization')
