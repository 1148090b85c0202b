"""Skew differential Goppa codes over finite field towers and a Niederreiter KEM."""

from __future__ import annotations

from .decoder import decode, decode_full, failure_certificate
from .errors import (
    FormatError,
    InvalidCryptogram,
    KeygenError,
    ParameterError,
    SkewGoppaError,
    UndecodableError,
)
from .field_tower import FieldTower, build_tower
from .goppa import GoppaCode, build_code, make_goppa_poly
from .kem import Params, PublicKey, decap, encap, keygen, search_parameters
from .ore_poly import OrePoly, OreRing
from .pindep import PointSet, maximal_p_independent

__version__ = "0.1.0"

__all__ = [
    "FieldTower",
    "FormatError",
    "GoppaCode",
    "InvalidCryptogram",
    "KeygenError",
    "OrePoly",
    "OreRing",
    "ParameterError",
    "Params",
    "PointSet",
    "PublicKey",
    "SkewGoppaError",
    "UndecodableError",
    "build_code",
    "build_tower",
    "decap",
    "decode",
    "decode_full",
    "encap",
    "failure_certificate",
    "keygen",
    "make_goppa_poly",
    "maximal_p_independent",
    "search_parameters",
]
