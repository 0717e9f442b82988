import json

import pytest

from magforest.errors import ParseError, TopologyError
from magforest.geometry import Circle, Polygon, Vector
from magforest.scene import load_scene, parse_scene

MINIMAL = '{"curve":{"type":"circle","center":[0,0],"radius":1},"sampling":{"count":360},"hiker":[0.25,0]}'


def test_minimal_document():
    s = parse_scene(MINIMAL)
    assert isinstance(s.curve, Circle)
    assert (s.count, s.phase, s.hiker, s.tie_eps, s.ang_tol) == (360, 0.0, Vector.of(0.25, 0), 1e-12, None)
    assert len(s.magnetized) == 360


def test_bowtie_rejected_with_segment_pair():
    with pytest.raises(TopologyError, match="segments 0 and 2"):
        parse_scene('{"curve":{"type":"polygon","vertices":[[0,0],[1,1],[1,0],[0,1]]}}')


def test_negative_radius_rejected():
    with pytest.raises(TopologyError):
        parse_scene('{"curve":{"type":"circle","center":[0,0],"radius":-1}}')


@pytest.mark.parametrize("text", [
    "{not json",
    "[]",
    '{"curve":{"type":"circle","center":[0,0],"radius":1},"colour":"red"}',
    '{"curve":{"type":"circle","center":[0,0],"radius":1,"vertices":[]}}',
    '{"curve":{"type":"ellipse"}}',
    '{"sampling":{"count":3}}',
    '{"curve":{"type":"circle","center":[0,0],"radius":1},"sampling":{"count":3.5}}',
    '{"curve":{"type":"circle","center":[0,0],"radius":1},"sampling":{"rate":3}}',
    '{"curve":{"type":"circle","center":[0,0],"radius":1},"hiker":[1]}',
    '{"curve":{"type":"circle","center":[0,0],"radius":"1"}}',
    '{"curve":{"type":"circle","center":[0,0],"radius":1},"tie_eps":-1}',
    '{"curve":{"type":"circle","center":[0,0],"radius":1},"ang_tol":0}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_scene(text)


def test_optional_fields():
    doc = {"curve": {"type": "polygon", "vertices": [[0, 0], [2, 0], [2, 1], [0, 1]]},
           "sampling": {"count": 12, "phase": 0.5}, "tie_eps": 0, "ang_tol": 0.1}
    s = parse_scene(json.dumps(doc))
    assert isinstance(s.curve, Polygon)
    assert (s.count, s.phase, s.hiker, s.tie_eps, s.ang_tol) == (12, 0.5, None, 0.0, 0.1)
    with pytest.raises(ParseError):
        s.require_hiker()


def test_load_scene(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(MINIMAL, encoding="utf-8")
    s = load_scene(p)
    assert s.name == str(p)
    assert (s.curve.center, s.curve.radius, s.count, s.hiker) == (Vector.of(0, 0), 1.0, 360, Vector.of(0.25, 0))
