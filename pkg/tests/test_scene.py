import json

import pytest
from hypothesis import given, strategies as st

from distlab.kernel import Circle2, Line2, Line3, Point2, Point3
from distlab.scene import Scene, SceneFormatError, dumps_scene, load_scene, loads_scene, save_scene

from conftest import circles2, lines2, planes3, points2, points3, spheres3


def descartes():
    return Scene(circles2=[Circle2(Point2(0, 0), 4), Circle2(Point2(-1, 0), 1),
                           Circle2(Point2(1, 0), 1), Circle2(Point2(0, "4/3"), "4/9")])


def test_descartes_round_trip():
    s = descartes()
    text = dumps_scene(s)
    back, merged = loads_scene(text)
    assert back == s and merged == {}
    assert dumps_scene(back) == text


@given(st.lists(points2, max_size=4), st.lists(lines2, max_size=4), st.lists(circles2, max_size=3),
       st.lists(points3, max_size=3), st.lists(planes3, max_size=3), st.lists(spheres3, max_size=3))
def test_round_trip_byte_stable(p2, l2, c2, p3, pl3, s3):
    scene = Scene(p2, l2, c2, p3, pl3, [Line3(Point3(0, 0, 1), (1, 2, 3))], s3, {"k": "v"}).canonical()[0]
    text = dumps_scene(scene)
    back, _ = loads_scene(text)
    assert back == scene
    assert dumps_scene(back) == text


def test_duplicate_lines_merge():
    doc = {"lines2": [[1, 2, 3], [2, 4, 6]]}
    scene, merged = loads_scene(json.dumps(doc))
    assert scene.lines2 == [Line2(1, 2, 3)]
    assert merged == {"lines2": 1}


@pytest.mark.parametrize("doc, where", [
    ({"points2": [["1/0", 1]]}, "points2[0]"),
    ({"points2": [[0.5, 1]]}, "points2[0][0]"),
    ({"lines2": [[0, 0, 1]]}, "lines2[0]"),
    ({"circles2": [{"center": [0, 0], "r2": "-1"}]}, "circles2[0]"),
    ({"circles2": [{"center": [0, 0]}]}, "circles2[0]"),
    ({"bogus": []}, "bogus"),
])
def test_format_errors(doc, where):
    with pytest.raises(SceneFormatError, match=where.replace("[", r"\[").replace("]", r"\]")):
        loads_scene(json.dumps(doc))


def test_json_syntax_error_has_location():
    with pytest.raises(SceneFormatError, match=r"x\.json:1:"):
        loads_scene("{oops", "x.json")


def test_file_round_trip(tmp_path):
    path = tmp_path / "s.json"
    save_scene(descartes(), path)
    assert load_scene(path) == descartes()
