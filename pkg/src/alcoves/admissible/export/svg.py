"""
SVG drawings of Adm(mu) in rank two: the alcove tiling around Adm(mu), its outline, the origin
and optionally the shading of faces or of the boundary.

Points of V are placed in the plane with an invariant inner product, so the pictures show the
usual angles between coroots. Floating point numbers are used for drawing only, all
combinatorics stays exact.
"""
import math
import xml.etree.ElementTree as ElementTree
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from alcoves.admissible.core.arg_check import not_none, no_Nones_in_iterable
from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.errors import UnsupportedOperationError
from alcoves.admissible.core.affine_weyl import ExtAffineElt
from alcoves.admissible.core.polytope import FaceHandle
from alcoves.admissible.core.root_datum import Point, RootDatum

DARK = '#707070'
LIGHT = '#d0d0d0'
DEFAULT_SCALE = 60

_SVG_NS = 'http://www.w3.org/2000/svg'


def _fmt(x: float) -> str:
    s = '{:.3f}'.format(x)
    return '0.000' if s == '-0.000' else s


class PlaneRealization:
    """
    Places the rank two space V in the plane, with the simple coroots at their natural lengths
    and angle.
    """

    def __init__(self, root_datum: RootDatum) -> None:
        '''
        :raises UnsupportedOperationError: if the rank is not two.
        '''
        not_none(root_datum, 'root_datum')
        if root_datum.rank != 2:
            raise UnsupportedOperationError('Rendering needs rank 2, got {}'.format(
                root_datum.cartan_type))
        self.root_datum = root_datum
        a = root_datum.cartan_matrix
        # half squared lengths of the coroots: (a_i^v, a_j^v) = <a_i^v, a_j> d_j symmetric
        d = [1.0, 1.0]
        if a[0][1]:
            d[1] = a[0][1] / a[1][0]
        gram = [[a[j][i] * d[j] for j in range(2)] for i in range(2)]
        e0 = (math.sqrt(gram[0][0]), 0.0)
        x = gram[0][1] / e0[0]
        self._basis = (e0, (x, math.sqrt(gram[1][1] - x * x)))
        # <alpha_i^vee, alpha_j> as a functional on coroot coordinates
        self._a = a

    def place(self, v: Sequence[Fraction]) -> Tuple[float, float]:
        """ The plane position of a point given in fundamental coweight coordinates. """
        c = self.root_datum.to_coroot_basis(v)
        (x0, y0), (x1, y1) = self._basis
        return (float(c[0]) * x0 + float(c[1]) * x1, float(c[0]) * y0 + float(c[1]) * y1)

    def hyperplane(self, alpha_coords: Sequence[int], k: int
                   ) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """
        A point on the line <v, alpha> = k and the direction of the line, in the plane.
        """
        # <v, alpha> with v = sum c_i alpha_i^vee is sum_i c_i sum_j <alpha_i^vee, alpha_j> b_j
        g = [sum(self._a[j][i] * b for j, b in enumerate(alpha_coords)) for i in range(2)]
        (x0, y0), (x1, y1) = self._basis
        det = x0 * y1 - x1 * y0
        # n = E^-T g for E the matrix with the basis as columns
        n = ((y1 * g[0] - y0 * g[1]) / det, (-x1 * g[0] + x0 * g[1]) / det)
        nn = n[0] * n[0] + n[1] * n[1]
        return (k * n[0] / nn, k * n[1] / nn), (-n[1], n[0])


def _cyclic(plane: PlaneRealization, vertices: List[Point]) -> List[Point]:
    pts = [plane.place(v) for v in vertices]
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    order = sorted(range(len(pts)), key=lambda i: math.atan2(pts[i][1] - cy, pts[i][0] - cx))
    return [vertices[i] for i in order]


def _outline(polygons: Iterable[List[Point]]) -> List[Tuple[Point, Point]]:
    # edges of the union: alcove edges that belong to exactly one alcove of the region
    count: Counter = Counter()
    for poly in polygons:
        for i, v in enumerate(poly):
            count[tuple(sorted((v, poly[(i + 1) % len(poly)])))] += 1
    return sorted(e for e, n in count.items() if n == 1)


def render_svg(
        case: AdmissibleCase,
        scale: int=DEFAULT_SCALE,
        face: Optional[FaceHandle]=None,
        boundary: bool=False,
        dark_faces: Iterable[FaceHandle]=(),
        light_faces: Iterable[FaceHandle]=()
        ) -> str:
    '''
    Draw Adm(mu) of a rank two case.

    :param case: the case.
    :param scale: pixels per unit length.
    :param face: a face whose interior is shaded dark and whose boundary is shaded light.
    :param boundary: shade the boundary of Adm(mu) light and the centers of the one
        dimensional faces dark.
    :param dark_faces: faces whose whole set Adm(mu)_F is shaded dark.
    :param light_faces: faces whose whole set Adm(mu)_F is shaded light. Elements also in a
        dark face stay dark.
    :raises UnsupportedOperationError: if the rank is not two.
    '''
    not_none(case, 'case')
    not_none(dark_faces, 'dark_faces')
    not_none(light_faces, 'light_faces')
    dark, light = list(dark_faces), list(light_faces)
    no_Nones_in_iterable(dark, 'dark_faces')
    no_Nones_in_iterable(light, 'light_faces')
    plane = PlaneRealization(case.root_datum)
    g = case.group
    elements = case.adm.sorted_elements()
    polygons = {w: _cyclic(plane, g.alcove(w).vertices) for w in elements}
    fills = _fills(case, face, boundary, dark, light)

    placed = [plane.place(v) for poly in polygons.values() for v in poly]
    margin = 1.0
    xmin = min(p[0] for p in placed) - margin
    xmax = max(p[0] for p in placed) + margin
    ymin = min(p[1] for p in placed) - margin
    ymax = max(p[1] for p in placed) + margin
    width = (xmax - xmin) * scale
    height = (ymax - ymin) * scale

    def px(p: Tuple[float, float]) -> Tuple[str, str]:
        return _fmt((p[0] - xmin) * scale), _fmt((ymax - p[1]) * scale)

    root = ElementTree.Element('svg', xmlns=_SVG_NS, version='1.1', width=_fmt(width),
                               height=_fmt(height),
                               viewBox='0 0 {} {}'.format(_fmt(width), _fmt(height)))
    ElementTree.SubElement(root, 'title').text = 'Adm({}) in type {}'.format(
        case.mu, case.root_datum.cartan_type)
    defs = ElementTree.SubElement(root, 'defs')
    clip = ElementTree.SubElement(defs, 'clipPath', id='window')
    ElementTree.SubElement(clip, 'rect', x='0', y='0', width=_fmt(width), height=_fmt(height))

    shade = ElementTree.SubElement(root, 'g', id='alcoves', stroke='none')
    for w in elements:
        if w in fills:
            ElementTree.SubElement(shade, 'polygon', fill=fills[w], points=' '.join(
                ','.join(px(plane.place(v))) for v in polygons[w]))

    lines = ElementTree.SubElement(root, 'g', id='hyperplanes', stroke='#999999',
                                   fill='none', **{'stroke-width': '1', 'clip-path':
                                                   'url(#window)'})
    corners = [(xmin, ymin), (xmin, ymax), (xmax, ymin), (xmax, ymax)]
    reach = math.hypot(xmax - xmin, ymax - ymin)
    for alpha in case.root_datum.pos_roots:
        for k in _levels(plane, alpha.coords, corners):
            p0, d = plane.hyperplane(alpha.coords, k)
            dl = math.hypot(d[0], d[1])
            ends = [(p0[0] + s * reach * d[0] / dl, p0[1] + s * reach * d[1] / dl)
                    for s in (-2, 2)]
            (x1, y1), (x2, y2) = px(ends[0]), px(ends[1])
            ElementTree.SubElement(lines, 'line', x1=x1, y1=y1, x2=x2, y2=y2)

    outline = ElementTree.SubElement(root, 'g', id='outline', stroke='#000000',
                                     **{'stroke-width': '3'})
    for v1, v2 in _outline(polygons.values()):
        (x1, y1), (x2, y2) = px(plane.place(v1)), px(plane.place(v2))
        ElementTree.SubElement(outline, 'line', x1=x1, y1=y1, x2=x2, y2=y2)

    ox, oy = px((0.0, 0.0))
    ElementTree.SubElement(root, 'circle', id='origin', cx=ox, cy=oy, r='5', fill='#000000')
    return ElementTree.tostring(root, encoding='unicode') + '\n'


def _levels(plane: PlaneRealization, alpha: Sequence[int],
            corners: List[Tuple[float, float]]) -> range:
    # integers k with the line <v, alpha> = k crossing the window
    p0, _ = plane.hyperplane(alpha, 1)
    nn = p0[0] * p0[0] + p0[1] * p0[1]
    values = [(c[0] * p0[0] + c[1] * p0[1]) / nn for c in corners]
    return range(math.floor(min(values)), math.ceil(max(values)) + 1)


def _fills(
        case: AdmissibleCase,
        face: Optional[FaceHandle],
        boundary: bool,
        dark_faces: Sequence[FaceHandle],
        light_faces: Sequence[FaceHandle]
        ) -> Dict[ExtAffineElt, str]:
    fills: Dict[ExtAffineElt, str] = {}
    if face is None and not boundary and not dark_faces and not light_faces:
        return fills
    decomp = case.decomposition
    if boundary:
        top = decomp.adm_face_for(case.poset.top)
        for w in top.boundary:
            fills[w] = LIGHT
        centers: Set[ExtAffineElt] = {af.center for af in decomp.adm_faces if af.face.dim == 1}
        for w in centers:
            fills[w] = DARK
    if face is not None:
        af = decomp.adm_face_for(face)
        for w in af.boundary:
            fills[w] = LIGHT
        for w in af.interior:
            fills[w] = DARK
    # whole faces; dark wins where a light and a dark face meet
    for shade, faces in [(LIGHT, light_faces), (DARK, dark_faces)]:
        for f in faces:
            for w in decomp.adm_face_for(f).elements:
                fills[w] = shade
    return fills
