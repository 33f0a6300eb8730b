"""
Graphviz DOT export of the Hasse diagrams of the face poset and of Adm(mu).

Render with e.g. ``dot -Tsvg faces.gv -o faces.svg``.
"""
from typing import Dict, List

from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.polytope import FaceHandle

# one fill color per face, cycled when there are more faces than colors
_PALETTE = [
    '#8dd3c7', '#ffffb3', '#bebada', '#fb8072', '#80b1d3', '#fdb462', '#b3de69', '#fccde5',
    '#d9d9d9', '#bc80bd', '#ccebc5', '#ffed6f',
]


def _quote(text: str) -> str:
    # labels carry DOT escapes such as \n
    return '"' + text.replace('"', '\\"') + '"'


def faces_dot(case: AdmissibleCase) -> str:
    """ The Hasse diagram of the face poset, smaller faces at the bottom. """
    not_none(case, 'case')
    poset = case.poset
    ids = {f: 'f{}'.format(i) for i, f in enumerate(poset.faces)}
    lines = ['digraph faces {', '\trankdir=BT;', '\tlabel={};'.format(_quote(case.label))]
    for f in poset.faces:
        lines.append('\t{} [label={}, shape=box];'.format(
            ids[f], _quote('{}\\ndim {}'.format(f, f.dim))))
    for lower, upper in poset.hasse_edges():
        lines.append('\t{} -> {};'.format(ids[lower], ids[upper]))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def admissible_dot(case: AdmissibleCase) -> str:
    """
    The Hasse diagram of Adm(mu), each element filled with the color of its face map value.

    :raises DegenerateInputError: if mu is zero.
    """
    not_none(case, 'case')
    decomp = case.decomposition
    colors: Dict[FaceHandle, str] = {
        f: _PALETTE[i % len(_PALETTE)] for i, f in enumerate(case.poset.faces)}
    elements = case.adm.sorted_elements()
    ids = {w: 'w{}'.format(i) for i, w in enumerate(elements)}
    lines: List[str] = ['digraph admissible {', '\trankdir=BT;',
                        '\tnode [style=filled];', '\tlabel={};'.format(_quote(case.label))]
    for w in elements:
        face = decomp.face_map(w)
        lines.append('\t{} [label={}, fillcolor={}, tooltip={}];'.format(
            ids[w], _quote(str(w)), _quote(colors[face]), _quote(str(face))))
    for lower, upper in case.adm.hasse_edges():
        lines.append('\t{} -> {};'.format(ids[lower], ids[upper]))
    lines.append('}')
    return '\n'.join(lines) + '\n'
