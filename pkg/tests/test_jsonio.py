"""Schema parsing strictness and the deterministic serializer."""

from __future__ import annotations

import math

import pytest

from negcoeff import ClassParams, NegativeCoefficient, SchemaViolation, make_series
from negcoeff.jsonio import (
    dumps,
    format_float,
    params_to_dict,
    parse_params,
    parse_series,
    series_to_dict,
)


class TestSeriesSchema:
    def test_roundtrip(self):
        f = make_series(1, {2: 0.5, 5: 0.1})
        doc = series_to_dict(f)
        assert doc == {"j": 1, "terms": {"2": 0.5, "5": 0.1}}
        assert parse_series(doc) == f

    def test_unknown_field_rejected(self):
        with pytest.raises(SchemaViolation):
            parse_series({"j": 1, "terms": {}, "comment": "hi"})

    def test_missing_field_rejected(self):
        with pytest.raises(SchemaViolation):
            parse_series({"j": 1})

    def test_non_integer_key_rejected(self):
        with pytest.raises(SchemaViolation):
            parse_series({"j": 1, "terms": {"2.5": 0.1}})

    def test_non_numeric_value_rejected(self):
        with pytest.raises(SchemaViolation):
            parse_series({"j": 1, "terms": {"2": "big"}})

    def test_domain_errors_pass_through(self):
        with pytest.raises(NegativeCoefficient):
            parse_series({"j": 1, "terms": {"2": -1.0}})

    def test_not_an_object(self):
        with pytest.raises(SchemaViolation):
            parse_series([1, 2])


class TestParamsSchema:
    def test_roundtrip(self):
        p = ClassParams(1, 2, 0.5, 1, "dual")
        doc = params_to_dict(p)
        assert doc == {"n": 1, "m": 2, "beta": 0.5, "j": 1, "mode": "dual"}
        assert parse_params(doc) == p

    def test_unknown_field_rejected(self):
        with pytest.raises(SchemaViolation):
            parse_params({"n": 1, "m": 1, "beta": 0.0, "j": 1, "mode": "dual", "x": 0})

    def test_bool_is_not_an_integer(self):
        with pytest.raises(SchemaViolation):
            parse_params({"n": True, "m": 1, "beta": 0.0, "j": 1, "mode": "dual"})

    def test_mode_must_be_string(self):
        with pytest.raises(SchemaViolation):
            parse_params({"n": 1, "m": 1, "beta": 0.0, "j": 1, "mode": 3})


class TestSerializer:
    def test_float_tokens(self):
        assert format_float(1.0) == "1.0"
        assert format_float(0.25) == "0.25"
        assert format_float(1.0 / 3.0) == "0.3333333333"
        assert format_float(1e-05) == "1e-05"
        assert format_float(-2.5) == "-2.5"
        assert format_float(float("inf")) == "null"
        assert format_float(float("nan")) == "null"

    def test_dumps_layout(self):
        payload = {"sigma": 1.0, "member": True, "ks": [2, 3], "note": None}
        assert dumps(payload) == '{"sigma":1.0,"member":true,"ks":[2,3],"note":null}'

    def test_dumps_deterministic(self):
        payload = {"value": 1.0 / 3.0, "inner": {"a": 0.1, "b": 2}}
        assert dumps(payload) == dumps(payload)

    def test_rejects_non_string_keys(self):
        with pytest.raises(TypeError):
            dumps({2: 1.0})
