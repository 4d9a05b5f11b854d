"""Plane cubic curves over finite fields: points, group law, census, arcs."""

from .gf import FieldSpec, build_field, field_of_order
from .plane import ProjPoint, ProjLine
from .cubic import CubicForm, CubicCurve

__all__ = ["FieldSpec", "build_field", "field_of_order", "ProjPoint", "ProjLine", "CubicForm", "CubicCurve"]
