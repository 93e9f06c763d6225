"""
Validation & Parsing Module
Funciones para validar y parsear los formatos de texto de entrada

Convención común: líneas vacías y todo lo que sigue a '#' se ignoran.
Cualquier error de formato se reporta como ValidationError con el número
de línea, nunca como una excepción genérica.
"""

from fractions import Fraction
from typing import Any, Dict, Iterator, List, Tuple

from .errors import ValidationError


# ============================================================================
# LÍNEAS Y COMENTARIOS
# ============================================================================

def iter_content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """
    Itera las líneas con contenido

    Args:
        text: Contenido completo del fichero

    Returns:
        Pares (número de línea 1-based, línea sin comentario ni espacios)
    """
    if text is None:
        return
    for lineno, raw in enumerate(str(text).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_int(token: str, lineno: int, what: str = "entero") -> int:
    try:
        return int(token)
    except (ValueError, TypeError):
        raise ValidationError(f"Línea {lineno}: se esperaba un {what}, hay {token!r}")


# ============================================================================
# FORMATOS DE FICHERO
# ============================================================================

def parse_edge_list(text: str) -> List[Tuple[int, int]]:
    """
    Parsea una lista de aristas 'u v' (ids 0-based)

    No aplica reglas de simplicidad; eso corresponde a quien construye el grafo.
    """
    edges = []
    for lineno, line in iter_content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ValidationError(f"Línea {lineno}: se esperaba 'u v', hay {line!r}")
        u = _parse_int(tokens[0], lineno, "id de vértice")
        v = _parse_int(tokens[1], lineno, "id de vértice")
        if u < 0 or v < 0:
            raise ValidationError(f"Línea {lineno}: ids de vértice negativos")
        edges.append((u, v))
    return edges


def parse_rank_lines(text: str) -> List[int]:
    """Parsea un fichero de permutación: un rango por línea"""
    ranks = []
    for lineno, line in iter_content_lines(text):
        tokens = line.split()
        if len(tokens) != 1:
            raise ValidationError(f"Línea {lineno}: se esperaba un único rango")
        ranks.append(_parse_int(tokens[0], lineno, "rango"))
    return ranks


def parse_placement(text: str) -> Dict[int, str]:
    """
    Parsea una colocación: 'id-vértice cadena-binaria' por línea

    Returns:
        Dict id -> forma textual del vértice del cubo
    """
    placement: Dict[int, str] = {}
    for lineno, line in iter_content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ValidationError(f"Línea {lineno}: se esperaba 'id vértice', hay {line!r}")
        vid = _parse_int(tokens[0], lineno, "id de vértice")
        word = tokens[1]
        if not word or any(ch not in "01" for ch in word):
            raise ValidationError(f"Línea {lineno}: vértice binario inválido {word!r}")
        if vid in placement:
            raise ValidationError(f"Línea {lineno}: el vértice {vid} aparece dos veces")
        placement[vid] = word
    return placement


# ============================================================================
# VALORES ESCALARES
# ============================================================================

def parse_shape(text: Any) -> Tuple[int, ...]:
    """Parsea 'n1,n2,...' en una tupla de enteros positivos"""
    if text is None or not str(text).strip():
        raise ValidationError("Forma de rejilla vacía")
    dims = []
    for token in str(text).split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise ValidationError(f"Dimensión inválida en la forma: {token!r}")
        if value < 1:
            raise ValidationError(f"Dimensión no positiva en la forma: {value}")
        dims.append(value)
    return tuple(dims)


def parse_rational(text: Any) -> Fraction:
    """
    Parsea un racional exacto: 'p/q', entero o decimal ('0.18' -> 9/50)

    Nunca pasa por float.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"Racional inválido: {text!r}")


def parse_int_list(text: Any) -> List[int]:
    """Parsea '10,12,14'"""
    if text is None or not str(text).strip():
        return []
    try:
        return [int(tok.strip()) for tok in str(text).split(",")]
    except ValueError:
        raise ValidationError(f"Lista de enteros inválida: {text!r}")


__all__ = [
    'iter_content_lines',
    'parse_edge_list',
    'parse_rank_lines',
    'parse_placement',
    'parse_shape',
    'parse_rational',
    'parse_int_list',
]
