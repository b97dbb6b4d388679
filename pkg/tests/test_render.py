import xml.etree.ElementTree as ET

from conftest import WORKED_PP
from macmahon.components import analyze
from macmahon.partitions import PlanePartition
from macmahon.render import CELL, ascii_render, svg_render

PP = PlanePartition.from_rows


def test_ascii_empty():
    assert ascii_render(PP([])) == ""


def test_ascii_square_of_ones():
    lines = ascii_render(PP([[1, 1], [1, 1]])).splitlines()
    assert lines[0].split() == ["entries", "components", "levels"]
    assert lines[1].split() == ["1", "1", "1", "1", "2", "1"]
    assert lines[2].split() == ["1", "1", "1", "1", "1", "1"]


def test_ascii_worked_example_shape():
    lines = ascii_render(PP(WORKED_PP)).splitlines()
    assert len(lines) == 1 + len(WORKED_PP)
    ids = {int(tok) for line in lines[1:] for tok in line.split()[len(line.split()) // 3:2 * len(line.split()) // 3]}
    assert ids == set(range(1, analyze(PP(WORKED_PP)).k + 1))


def test_svg_is_well_formed():
    pp = PP(WORKED_PP)
    root = ET.fromstring(svg_render(pp))
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == f"{ns}svg"
    assert len(root.findall(f"{ns}rect")) == len(list(pp.cells()))


def test_svg_single_box_is_outlined_on_all_sides():
    root = ET.fromstring(svg_render(PP([[1]])))
    lines = root.findall("{http://www.w3.org/2000/svg}line")
    assert len(lines) == 4
    lengths = {abs(float(l.get("x2")) - float(l.get("x1"))) + abs(float(l.get("y2")) - float(l.get("y1")))
               for l in lines}
    assert lengths == {CELL}


def test_svg_counts_bold_edges_between_border_components():
    # [[2,1]]: two components, every cell edge is a boundary
    root = ET.fromstring(svg_render(PP([[2, 1]])))
    assert len(root.findall("{http://www.w3.org/2000/svg}line")) == 8
    # [[1,1],[1,1]] has border components {(1,1)} and the other three cells
    root = ET.fromstring(svg_render(PP([[1, 1], [1, 1]])))
    assert len(root.findall("{http://www.w3.org/2000/svg}line")) == 4 * 4 - 2 * 2


def test_svg_empty():
    root = ET.fromstring(svg_render(PP([])))
    assert root.findall("{http://www.w3.org/2000/svg}rect") == []
