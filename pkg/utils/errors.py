"""
Errores de dominio
Jerarquía de excepciones compartida por todos los módulos

Todas heredan de ValueError para que el código que ya captura
ValueError siga funcionando.
"""

from typing import Optional


class HyperminorError(ValueError):
    """Error base de hyperminor"""


class DimensionError(HyperminorError):
    """Vértices del cubo con anchos distintos"""


class ParameterError(HyperminorError):
    """Parámetro escalar fuera de rango"""


class ValidationError(HyperminorError):
    """Entrada mal formada (permutación, grafo, colocación, fichero)"""


class InfeasibleError(HyperminorError):
    """La dimensión del hipercubo no alcanza para el grafo huésped"""

    def __init__(self, message: str, minimal_d: Optional[int] = None):
        super().__init__(message)
        self.minimal_d = minimal_d


class SizeError(HyperminorError):
    """Se supera el presupuesto de fuerza bruta"""


class RetryExhaustedError(HyperminorError):
    """Se agotaron los reintentos del modelo de configuración"""


class ConfigError(HyperminorError):
    """Valor de configuración inválido"""


__all__ = [
    'HyperminorError',
    'DimensionError',
    'ParameterError',
    'ValidationError',
    'InfeasibleError',
    'SizeError',
    'RetryExhaustedError',
    'ConfigError',
]
