# coding: utf-8
#

"""Pictures of terms and strategies.

Layout is computed once into a Drawing (lines, arrows, circles, boxes and
labels in pixel coordinates) and emitted as SVG, PNG or ASCII text. A term
is drawn left to right, one column per slice; a strategy is drawn as two
columns of moves with an arrow per dependency and a circle-terminated stub
for every move without dependency.
"""

import dataclasses
import logging
import math
from typing import List, NamedTuple, Optional, Union

from lxml import etree
from PIL import Image, ImageDraw

from monopres._proto import Side
from monopres.games import MoveRef, Strategy
from monopres.terms import Term, boundary, slice_form
from monopres.theory import EqTheory, as_signature

logger = logging.getLogger(__name__)

MARGIN = 20
COLUMN = 60
ROW = 40
BOX_WIDTH = 30
STUB = 30
RADIUS = 4

# one ASCII character per CHAR_WIDTH × CHAR_HEIGHT pixels
CHAR_WIDTH = 6
CHAR_HEIGHT = 10


class Line(NamedTuple):
    x1: float
    y1: float
    x2: float
    y2: float


class Arrow(NamedTuple):
    x1: float
    y1: float
    x2: float
    y2: float


class Circle(NamedTuple):
    x: float
    y: float
    r: float


class Box(NamedTuple):
    x: float
    y: float
    w: float
    h: float
    label: str


class Label(NamedTuple):
    x: float
    y: float
    text: str


Primitive = Union[Line, Arrow, Circle, Box, Label]


@dataclasses.dataclass
class Drawing:
    width: int
    height: int
    items: List[Primitive] = dataclasses.field(default_factory=list)

    def add(self, item: Primitive):
        self.items.append(item)


## layout

def _wire_y(k: int) -> float:
    return MARGIN + k * ROW + ROW / 2


def term_drawing(t: Term, theory: EqTheory) -> Drawing:
    sig = as_signature(theory)
    source, target = boundary(t, sig)
    slices = slice_form(t, sig)
    words = [source]
    for s in slices:
        g = sig.generator(s.gen)
        words.append(s.left + g.target + s.right)
    rows = max(max(len(w) for w in words), 1)
    d = Drawing(2 * MARGIN + (len(slices) + 1) * COLUMN, 2 * MARGIN + rows * ROW)

    x = MARGIN
    for i, s in enumerate(slices):
        g = sig.generator(s.gen)
        cx = MARGIN + (i + 1) * COLUMN
        left, right = cx - BOX_WIDTH / 2, cx + BOX_WIDTH / 2
        for k in range(len(words[i])):
            d.add(Line(x, _wire_y(k), left, _wire_y(k)))
        p, a, b = len(s.left), len(g.source), len(g.target)
        for k in range(p):
            d.add(Line(left, _wire_y(k), right, _wire_y(k)))
        for j in range(len(s.right)):
            d.add(Line(left, _wire_y(p + a + j), right, _wire_y(p + b + j)))
        span = max(a, b, 1)
        d.add(Box(left, _wire_y(p) - ROW / 2 + 5, BOX_WIDTH, span * ROW - 10, s.gen))
        x = right
    for k in range(len(words[-1])):
        d.add(Line(x, _wire_y(k), d.width - MARGIN, _wire_y(k)))
    if not sig.is_pro:
        for k, atom in enumerate(source):
            d.add(Label(2, _wire_y(k) - 4, atom))
        for k, atom in enumerate(target):
            d.add(Label(d.width - MARGIN + 4, _wire_y(k) - 4, atom))
    return d


def strategy_drawing(s: Strategy) -> Drawing:
    rows = max(len(s.src), len(s.tgt), 1)
    width = 2 * MARGIN + 4 * COLUMN
    d = Drawing(width, 2 * MARGIN + rows * ROW)
    src_x, tgt_x = MARGIN + COLUMN, width - MARGIN - COLUMN

    def _at(ref: MoveRef):
        return (src_x if ref.side == Side.SRC else tgt_x), _wire_y(ref.index)

    touched = set()
    for a, b in s.sorted_deps():
        touched.update((a, b))
        (x1, y1), (x2, y2) = _at(a), _at(b)
        if a.side == b.side:
            # same column, bend towards the middle
            bend = x1 + (STUB if a.side == Side.SRC else -STUB)
            mid = (y1 + y2) / 2
            d.add(Line(x1, y1, bend, mid))
            d.add(Arrow(bend, mid, x2, y2))
        else:
            d.add(Arrow(x1, y1, x2, y2))
    for side, game in ((Side.SRC, s.src), (Side.TGT, s.tgt)):
        for i, letter in enumerate(game.moves):
            ref = MoveRef(side, i)
            x, y = _at(ref)
            label_x = x - 16 if side == Side.SRC else x + 8
            d.add(Label(label_x, y - 4, letter))
            if ref not in touched:
                end = x + STUB if side == Side.SRC else x - STUB
                d.add(Line(x, y, end, y))
                d.add(Circle(end, y, RADIUS))
    return d


## svg

SVG_NS = "http://www.w3.org/2000/svg"


def _el(parent, tag: str, **attrs) -> etree._Element:
    return etree.SubElement(parent, "{%s}%s" % (SVG_NS, tag), {k.replace("_", "-"): v for k, v in attrs.items()})


def to_svg(d: Drawing) -> str:
    root = etree.Element("{%s}svg" % SVG_NS, nsmap={None: SVG_NS},
                         width=str(d.width), height=str(d.height), viewBox="0 0 %d %d" % (d.width, d.height))
    defs = _el(root, "defs")
    marker = _el(defs, "marker", id="arrow", markerWidth="8", markerHeight="8",
                 refX="8", refY="4", orient="auto")
    _el(marker, "path", d="M0,0 L8,4 L0,8 z", fill="black")
    for item in d.items:
        if isinstance(item, (Line, Arrow)):
            e = _el(root, "line", x1=_num(item.x1), y1=_num(item.y1),
                    x2=_num(item.x2), y2=_num(item.y2), stroke="black")
            if isinstance(item, Arrow):
                e.set("marker-end", "url(#arrow)")
        elif isinstance(item, Circle):
            _el(root, "circle", cx=_num(item.x), cy=_num(item.y), r=_num(item.r),
                fill="white", stroke="black")
        elif isinstance(item, Box):
            _el(root, "rect", x=_num(item.x), y=_num(item.y), width=_num(item.w),
                height=_num(item.h), fill="white", stroke="black")
            text = _el(root, "text", x=_num(item.x + item.w / 2), y=_num(item.y + item.h / 2 + 4),
                       font_size="10", text_anchor="middle")
            text.text = item.label
        elif isinstance(item, Label):
            text = _el(root, "text", x=_num(item.x), y=_num(item.y + 8), font_size="10")
            text.text = item.text
    return etree.tostring(root, pretty_print=True, encoding="unicode")


def _num(v: float) -> str:
    return ("%.1f" % v).rstrip("0").rstrip(".")


## png

def to_png(d: Drawing) -> Image.Image:
    im = Image.new("RGB", (d.width, d.height), "white")
    draw = ImageDraw.Draw(im)
    for item in d.items:
        if isinstance(item, (Line, Arrow)):
            draw.line((item.x1, item.y1, item.x2, item.y2), fill="black", width=1)
            if isinstance(item, Arrow):
                draw.polygon(_arrow_head(item), fill="black")
        elif isinstance(item, Circle):
            draw.ellipse((item.x - item.r, item.y - item.r, item.x + item.r, item.y + item.r),
                         fill="white", outline="black")
        elif isinstance(item, Box):
            draw.rectangle((item.x, item.y, item.x + item.w, item.y + item.h), fill="white", outline="black")
            draw.text((item.x + 3, item.y + item.h / 2 - 5), item.label, fill="black")
        elif isinstance(item, Label):
            draw.text((item.x, item.y), item.text, fill="black")
    del draw
    return im


def _arrow_head(a: Arrow, size: float = 7):
    angle = math.atan2(a.y2 - a.y1, a.x2 - a.x1)
    left = (a.x2 - size * math.cos(angle - 0.4), a.y2 - size * math.sin(angle - 0.4))
    right = (a.x2 - size * math.cos(angle + 0.4), a.y2 - size * math.sin(angle + 0.4))
    return [(a.x2, a.y2), left, right]


## ascii

class _Grid(object):
    def __init__(self, width: int, height: int):
        self.cols = width // CHAR_WIDTH + 1
        self.rows = height // CHAR_HEIGHT + 1
        self.cells = [[" "] * self.cols for _ in range(self.rows)]

    def cell(self, x: float, y: float):
        return int(round(y / CHAR_HEIGHT)), int(round(x / CHAR_WIDTH))

    def put(self, x: float, y: float, ch: str, force: bool = False):
        r, c = self.cell(x, y)
        if 0 <= r < self.rows and 0 <= c < self.cols and (force or self.cells[r][c] == " "):
            self.cells[r][c] = ch

    def text(self, x: float, y: float, s: str):
        r, c = self.cell(x, y)
        for i, ch in enumerate(s):
            if 0 <= r < self.rows and 0 <= c + i < self.cols:
                self.cells[r][c + i] = ch

    def __str__(self):
        return "\n".join("".join(row).rstrip() for row in self.cells).strip("\n")


def _stroke(x1: float, y1: float, x2: float, y2: float) -> str:
    dx, dy = (x2 - x1) / CHAR_WIDTH, (y2 - y1) / CHAR_HEIGHT
    if abs(dy) < 0.5 * abs(dx) or (dx == 0 and dy == 0):
        return "-"
    if abs(dx) < 0.5 * abs(dy):
        return "|"
    return "\\" if dx * dy > 0 else "/"


def _head(a: Arrow) -> str:
    dx, dy = (a.x2 - a.x1) / CHAR_WIDTH, (a.y2 - a.y1) / CHAR_HEIGHT
    if abs(dx) >= abs(dy):
        return ">" if dx > 0 else "<"
    return "v" if dy > 0 else "^"


def to_ascii(d: Drawing) -> str:
    grid = _Grid(d.width, d.height)
    # boxes and labels first, strokes only fill blank cells
    for item in d.items:
        if isinstance(item, Box):
            top, bottom = item.y, item.y + item.h
            for y in _steps(top, bottom, CHAR_HEIGHT):
                grid.put(item.x, y, "[", force=True)
                grid.put(item.x + item.w, y, "]", force=True)
            grid.text(item.x + CHAR_WIDTH, (top + bottom) / 2, item.label[:max(int(item.w // CHAR_WIDTH) - 1, 1)])
        elif isinstance(item, Label):
            grid.text(item.x, item.y + 4, item.text)
    for item in d.items:
        if isinstance(item, (Line, Arrow)):
            ch = _stroke(*item[:4])
            n = max(int(max(abs(item.x2 - item.x1) / CHAR_WIDTH, abs(item.y2 - item.y1) / CHAR_HEIGHT)), 1)
            for k in range(n + 1):
                grid.put(item.x1 + (item.x2 - item.x1) * k / n, item.y1 + (item.y2 - item.y1) * k / n, ch)
            if isinstance(item, Arrow):
                grid.put(item.x2, item.y2, _head(item), force=True)
        elif isinstance(item, Circle):
            grid.put(item.x, item.y, "o", force=True)
    return str(grid)


def _steps(start: float, stop: float, step: float) -> List[float]:
    values = []
    v = start
    while v <= stop:
        values.append(v)
        v += step
    return values


def render(d: Drawing, fmt: str = "ascii", path: Optional[str] = None) -> Optional[str]:
    """
    Args:
        fmt: svg, png or ascii; png needs a path

    Returns:
        the text form for svg and ascii when path is None
    """
    if fmt == "png":
        if not path:
            raise ValueError("png output needs a path")
        to_png(d).save(path, "PNG")
        logger.debug("png %dx%d written to %s", d.width, d.height, path)
        return None
    text = to_svg(d) if fmt == "svg" else to_ascii(d)
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        logger.debug("%s written to %s", fmt, path)
        return None
    return text
