"""Exact classification toolkit for wild forms over the rationals."""

import json as _json

from wildforms._core import (
    Form,
    WildformsError,
    apolar_algebra_json,
    catalog,
    fn_decomposition_json,
    gd_decomposition_json,
    is_gorenstein,
    limiting_scheme,
    verify_decomposition,
)

__all__ = [
    "Form",
    "WildformsError",
    "analyze",
    "apolar_algebra_json",
    "catalog",
    "fn_decomposition_json",
    "gd_decomposition_json",
    "is_gorenstein",
    "limiting_scheme",
    "verify_decomposition",
]


def analyze(form, **kwargs):
    """Full analysis report as a dict; `form` is a Form, catalog name or text."""
    if isinstance(form, str):
        try:
            form = Form.named(form)
        except WildformsError:
            form = Form.parse(form)
    return _json.loads(form.analyze_json(**kwargs))
