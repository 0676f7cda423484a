"""JSON configuration files for fields and bases."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .automata import DEFAULT_STATE_CAP
from .expansion import DEFAULT_STEP_CAP, AlternateBase
from .numberfield import NumberField
from .spectrum import DEFAULT_ELEMENT_CAP, AlphabetTuple, parse_alphabets


@dataclass
class Caps:
    steps: int = DEFAULT_STEP_CAP
    states: int = DEFAULT_STATE_CAP
    elements: int = DEFAULT_ELEMENT_CAP


@dataclass
class BaseConfig:
    field: NumberField
    base: AlternateBase | None = None
    alphabets: AlphabetTuple | None = None
    caps: Caps = field(default_factory=Caps)
    precision: int = 53


def _read(path) -> dict:
    with open(Path(path), encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return obj


def parse_alphabet_value(raw) -> AlphabetTuple:
    if isinstance(raw, str):
        return parse_alphabets(raw)
    return AlphabetTuple(tuple(tuple(d) for d in raw))


def config_from_dict(obj: dict) -> BaseConfig:
    if "minpoly" in obj:
        fld = NumberField.from_json(obj)
    elif "field" in obj:
        fld = NumberField.from_json(obj["field"])
    else:
        raise ValueError("config needs a field description")
    base = AlternateBase.from_json(obj, fld) if "betas" in obj else None
    alphabets = parse_alphabet_value(obj["alphabets"]) if "alphabets" in obj else None
    if alphabets is not None:
        alphabets.require_zero()
        if base is not None and alphabets.p != base.p:
            raise ValueError(f"{alphabets.p} alphabets for a base of length {base.p}")
    caps = Caps(**obj.get("caps", {}))
    return BaseConfig(fld, base, alphabets, caps, int(obj.get("precision", 53)))


def load_config(path) -> BaseConfig:
    return config_from_dict(_read(path))
