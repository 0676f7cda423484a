import json

import pytest

from altbase.config import Caps, config_from_dict, load_config
from altbase.errors import ZeroNotInAlphabet
from test_cli import BETA65, PHI3, SQRT13


def test_load_configs():
    cfg = load_config(SQRT13)
    assert cfg.base.p == 2 and cfg.alphabets.p == 2
    assert cfg.field.degree == 2
    assert load_config(BETA65).caps.steps == 200
    assert load_config(PHI3).caps == Caps()


def test_inline_field_and_errors():
    obj = {"minpoly": [-1, -1, 1], "root_interval": ["1", "2"], "betas": [["0", "1"]]}
    cfg = config_from_dict(obj)
    assert cfg.base.delta == cfg.field.gen and cfg.alphabets is None
    with pytest.raises(ValueError):
        config_from_dict({"betas": [["2"]]})
    with pytest.raises(ValueError):
        config_from_dict(dict(obj, alphabets="[-1..1];[-1..1]"))
    with pytest.raises(ZeroNotInAlphabet):
        config_from_dict(dict(obj, alphabets=[[1, 2]]))


def test_round_trip(tmp_path):
    cfg = load_config(SQRT13)
    out = tmp_path / "c.json"
    out.write_text(json.dumps({"field": cfg.field.to_json(), **cfg.base.to_json(), "alphabets": "[-2..2];[-1..1]"}))
    again = load_config(out)
    assert again.base == cfg.base and again.alphabets == cfg.alphabets
