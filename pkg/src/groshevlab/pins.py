"""Regression pins: calibrated constants and oracle-run values.

Implied constants in the audited inequalities and floors for the Monte
Carlo experiments are never asserted a priori; they are calibrated once on
a frozen grid, stored here with provenance, and regression-tested as exact
values (rationals as "num/den" strings) thereafter.  `verify-suite
--recalibrate` regenerates the file.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

PINS_PATH = Path(__file__).parent / "data" / "pins.json"


def frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s.strip())


def load_pins(path: Path | None = None) -> dict:
    p = path or PINS_PATH
    with open(p, "r", encoding="utf-8") as fh:
        return json.load(fh)


def save_pins(pins: dict, path: Path | None = None) -> Path:
    p = path or PINS_PATH
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(pins, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return p
