"""ASCII pictures of cup and circle diagrams."""
from .types import CircleDiagram, CupDiagram, WeightSequence


def _levels(diagram: CupDiagram) -> dict:
    # innermost cups sit on level 1
    levels = {}
    for cup in sorted(diagram.cups, key=lambda c: c[1] - c[0]):
        inner = [levels[other] for other in levels if diagram.encloses(cup, other)]
        levels[cup] = 1 + max(inner, default=0)
    return levels


def _rows(diagram: CupDiagram, corner: str):
    levels = _levels(diagram)
    depth = max(levels.values(), default=1)
    width = 2 * diagram.n - 1
    rows = []
    for level in range(1, depth + 1):
        row = [' '] * width
        for p in diagram.rays:
            row[2 * (p - 1)] = '|'
        for (a, b), cup_level in levels.items():
            left, right = 2 * (a - 1), 2 * (b - 1)
            if level < cup_level:
                row[left] = row[right] = '|'
            elif level == cup_level:
                row[left] = row[right] = corner
                for col in range(left + 1, right):
                    row[col] = '-'
        rows.append(''.join(row).rstrip())
    return rows


def _marker_row(n: int, weight: WeightSequence = None) -> str:
    if weight is None:
        return ' '.join('o' for _ in range(n))
    return ' '.join(mark.value for mark in weight.marks)


def render_cup(diagram: CupDiagram, weight: WeightSequence = None) -> str:
    """Point row on top, cups below it with the outermost lowest."""
    return '\n'.join([_marker_row(diagram.n, weight)] + _rows(diagram, "'"))


def render_circle(glued: CircleDiagram, weight: WeightSequence = None) -> str:
    caps = list(reversed(_rows(glued.top, ',')))
    return '\n'.join(caps + [_marker_row(glued.n, weight)] + _rows(glued.bottom, "'"))
