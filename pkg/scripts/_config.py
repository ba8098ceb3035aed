"""Dataclass configs with command-line overrides (``--field value``)."""
from __future__ import annotations

import argparse
import dataclasses
import typing


def _caster(tp):
    origin = typing.get_origin(tp)
    if origin in (list, tuple):
        (inner, *_) = typing.get_args(tp)
        return lambda s: [inner(x) for x in s.split(",") if x]
    return tp


def parse_config(cls, argv=None):
    hints = typing.get_type_hints(cls)
    p = argparse.ArgumentParser(description=cls.__doc__)
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        p.add_argument(f"--{f.name.replace('_', '-')}", type=_caster(hints[f.name]), default=default)
    return cls(**vars(p.parse_args(argv)))
