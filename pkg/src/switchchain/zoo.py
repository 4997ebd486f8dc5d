"""Shape catalogue for the labelled digraphs formed by disturbed arcs.

While a segment is being processed, an off-segment arc whose presence
differs from the state at the segment's start carries a label: -1 when
the arc was absent then and is present now, 2 in the opposite case.
Only a narrow family of labelled digraphs can occur.  Every member of
the family has, after reversing all arcs or not (r in {0, 1}), a centre
vertex w such that

  * at most three arcs leave w, and when all three are present they do
    not all carry the same label,
  * at most one arc enters w, say from u,
  * at most one arc avoids w entirely, and it must then leave u and
    carry the opposite label to the arc entering w.

The endpoints of the arcs leaving w may coincide with u or with the far
endpoint of the detached arc, so a member may contain a directed
2-cycle between w and u.  Subsets of members are again members, so the
matcher below is monotone under removing arcs.
"""

from __future__ import annotations

from switchchain.digraph import Arc, zeta_arc

LABELS = (-1, 2)


def _matches_at(arcs: list[tuple[Arc, int]], w: int) -> bool:
    fan, into, rest = [], [], []
    for arc, label in arcs:
        if arc[0] == w:
            fan.append((arc, label))
        elif arc[1] == w:
            into.append((arc, label))
        else:
            rest.append((arc, label))
    if len(fan) > 3 or len(into) > 1 or len(rest) > 1:
        return False
    if len(fan) == 3 and len({label for _, label in fan}) == 1:
        return False
    if into:
        (in_arc, in_label) = into[0]
        u = in_arc[0]
    if rest:
        (rest_arc, rest_label) = rest[0]
        if into:
            if rest_arc[0] != u or rest_label == in_label:
                return False
    return True


def matches_catalogue(labelled_arcs) -> bool:
    """Return True when the labelled arcs fit one of the allowed shapes."""
    arcs = list(labelled_arcs)
    for arc, label in arcs:
        if label not in LABELS:
            raise ValueError(f"bad label {label} on arc {arc}")
    if len({arc for arc, _ in arcs}) != len(arcs):
        raise ValueError("duplicate arcs in labelled set")
    if len(arcs) > 5:
        return False
    if len(arcs) <= 1:
        return True
    for r in (0, 1):
        view = [(zeta_arc(r, arc), label) for arc, label in arcs]
        vertices = {v for arc, _ in view for v in arc}
        if any(_matches_at(view, w) for w in vertices):
            return True
    return False


def five_arc_structure(labelled_arcs) -> tuple[int, int, int]:
    """For a five-arc configuration, return (r, w, u) witnessing the shape.

    r is the orientation flip applied, w the centre vertex (tail of the
    three-arc fan after applying r) and u the far endpoint of the arc
    entering w.  Raises ValueError when no witness exists.
    """
    arcs = list(labelled_arcs)
    if len(arcs) != 5:
        raise ValueError("expected exactly five labelled arcs")
    for r in (0, 1):
        view = [(zeta_arc(r, arc), label) for arc, label in arcs]
        vertices = {v for arc, _ in view for v in arc}
        for w in vertices:
            if not _matches_at(view, w):
                continue
            fan = [a for a, _ in view if a[0] == w]
            into = [a for a, _ in view if a[1] == w]
            if len(fan) == 3 and len(into) == 1:
                return (r, w, into[0][0])
    raise ValueError("five labelled arcs do not fit any catalogue shape")
