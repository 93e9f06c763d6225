"""
Shared Helper Functions
Formateo común para los renderizadores y la CLI

Los racionales se serializan siempre como "p/q" (o "p" si q = 1).
"""

import json
from fractions import Fraction
from typing import Any, Iterable, Tuple


def format_rational(value: Any) -> str:
    """
    Formatea un racional exacto

    Args:
        value: Fraction o entero

    Returns:
        String "p/q", o "p" si el denominador es 1
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_big_int(value: int, max_digits: int = 24) -> str:
    """Enteros enormes (2^2001) abreviados como 'dígitos... (N cifras)'"""
    text = str(value)
    if len(text) <= max_digits:
        return text
    return f"{text[:max_digits // 2]}...{text[-4:]} ({len(text)} cifras)"


def to_jsonable(value: Any) -> Any:
    """Convierte Fraction, tuplas, conjuntos y enteros numpy a tipos JSON"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if hasattr(value, "item"):
        return value.item()
    return value


def dumps_json(value: Any) -> str:
    """JSON determinista (claves ordenadas, indentado)"""
    return json.dumps(to_jsonable(value), indent=2, sort_keys=True)


def format_edge_list(edges: Iterable[Tuple[int, int]], header: str = "") -> str:
    """Una arista 'u v' por línea, con cabecera de comentario opcional"""
    lines = [f"# {header}"] if header else []
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


__all__ = [
    'format_rational',
    'format_big_int',
    'to_jsonable',
    'dumps_json',
    'format_edge_list',
]
