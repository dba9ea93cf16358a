import pytest

from platkit.braids import BraidWord
from platkit.plats import plat_closure
from platkit.render import RenderSpec, render_svg


def test_unknot_render():
    svg = render_svg(plat_closure(BraidWord(2, ())))
    assert svg.startswith("<svg")
    assert svg.count('id="crossing-') == 0
    assert svg.count('id="cup-1"') == 1
    assert svg.count('id="cap-1"') == 1


def test_single_crossing():
    svg = render_svg(plat_closure(BraidWord(2, (1,))))
    assert svg.count('id="crossing-1"') == 1


def test_example_word_structure():
    svg = render_svg(plat_closure(BraidWord(6, (2, 4, 1, 3, 1))))
    assert svg.count('id="crossing-') == 5
    assert svg.count('id="cup-') == 3
    assert svg.count('id="cap-') == 3
    for k in range(1, 6):
        assert f'id="crossing-{k}"' in svg


def test_deterministic_output():
    p = plat_closure(BraidWord(6, (2, 4, 1, 3, 1)))
    spec = RenderSpec(labels=True)
    assert render_svg(p, spec) == render_svg(p, spec)
    assert render_svg(p, spec).encode() == render_svg(p, spec).encode()


def test_over_under_gap_differs_by_sign():
    pos = render_svg(plat_closure(BraidWord(2, (1,))))
    neg = render_svg(plat_closure(BraidWord(2, (-1,))))
    assert pos != neg


def test_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(strand_spacing=0)
    with pytest.raises(ValueError):
        RenderSpec(width=-5)
    spec = RenderSpec.from_json_dict({"labels": True, "margin": 30})
    assert spec.labels and spec.margin == 30


def test_labels_toggle():
    p = plat_closure(BraidWord(4, (2,)))
    with_labels = render_svg(p, RenderSpec(labels=True))
    without = render_svg(p, RenderSpec(labels=False))
    assert "<text" in with_labels and "<text" not in without
