# coding: utf-8
#

import pytest
from lxml import etree
from PIL import Image

from monopres import render
from monopres.catalog import builtin_theory
from monopres.games import generator_strategy, make_strategy
from monopres.terms import parse_term

SVG = "{http://www.w3.org/2000/svg}"


def test_term_drawing():
    b = builtin_theory("B")
    d = render.term_drawing(parse_term("delta ; gamma ; mu", b), b)
    boxes = [item for item in d.items if isinstance(item, render.Box)]
    assert [box.label for box in boxes] == ["delta", "gamma", "mu"]
    assert d.width == 2 * render.MARGIN + 4 * render.COLUMN
    assert d.height == 2 * render.MARGIN + 2 * render.ROW
    # a PRO draws no wire labels
    assert not any(isinstance(item, render.Label) for item in d.items)

    g = builtin_theory("G")
    d = render.term_drawing(parse_term("gammaOP", g), g)
    labels = [item.text for item in d.items if isinstance(item, render.Label)]
    assert labels == ["P", "O", "O", "P"]


def test_strategy_drawing():
    d = render.strategy_drawing(generator_strategy("muP"))
    assert sum(isinstance(item, render.Arrow) for item in d.items) == 2
    assert not any(isinstance(item, render.Circle) for item in d.items)

    # moves without dependency end in a circle
    d = render.strategy_drawing(generator_strategy("etaP"))
    assert sum(isinstance(item, render.Circle) for item in d.items) == 1

    # a same-side dependency bends through the middle
    d = render.strategy_drawing(make_strategy("I", "OP", [("t0", "t1")]))
    assert sum(isinstance(item, render.Line) for item in d.items) == 1
    assert sum(isinstance(item, render.Arrow) for item in d.items) == 1


def test_to_svg():
    d = render.strategy_drawing(generator_strategy("gammaOP"))
    text = render.render(d, "svg")
    root = etree.fromstring(text.encode("utf-8"))
    assert root.tag == SVG + "svg"
    assert root.get("width") == str(d.width)
    assert len(root.findall(SVG + "line")) == 2
    assert all(e.get("marker-end") == "url(#arrow)" for e in root.findall(SVG + "line"))
    assert sorted(e.text for e in root.findall(SVG + "text")) == ["O", "O", "P", "P"]


def test_to_ascii():
    b = builtin_theory("B")
    text = render.render(render.term_drawing(parse_term("delta ; mu", b), b))
    assert "[" in text and "]" in text
    assert "-" in text
    text = render.render(render.strategy_drawing(generator_strategy("etaP")), "ascii")
    assert "o" in text
    assert "P" in text


def test_to_png(tmp_path):
    d = render.strategy_drawing(generator_strategy("deltaP"))
    path = tmp_path / "deltaP.png"
    assert render.render(d, "png", str(path)) is None
    im = Image.open(str(path))
    assert im.size == (d.width, d.height)

    with pytest.raises(ValueError):
        render.render(d, "png")


def test_render_to_file(tmp_path):
    d = render.strategy_drawing(generator_strategy("muO"))
    path = tmp_path / "muO.svg"
    assert render.render(d, "svg", str(path)) is None
    assert path.read_text(encoding="utf-8").startswith("<svg")
