"""
Hypercube Core
Vértices del hipercubo Q_d, ciclos de Gray y embebidos de ciclos pares

Convención de coordenadas (única en todo el proyecto):
- la coordenada i (1..d) es el bit (i-1) de la forma entera
- y el carácter i (de izquierda a derecha) de la forma textual

Ejemplo: en Q_3 el entero 1 se escribe "100" y el entero 4 se escribe "001".
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from utils.errors import DimensionError, ParameterError, ValidationError


# ============================================================================
# VÉRTICES
# ============================================================================

@dataclass(frozen=True, order=True)
class CubeVertex:
    """Vértice de Q_d con ancho fijo"""
    width: int
    value: int

    def __post_init__(self):
        if self.width < 0:
            raise ValidationError(f"Ancho negativo: {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValidationError(
                f"Valor {self.value} fuera de rango para ancho {self.width}"
            )

    @classmethod
    def from_int(cls, value: int, width: int) -> "CubeVertex":
        return cls(width=width, value=value)

    @classmethod
    def from_text(cls, text: str) -> "CubeVertex":
        """
        Construye un vértice desde su forma textual

        Args:
            text: cadena de '0'/'1', coordenada 1 a la izquierda

        Returns:
            CubeVertex del ancho de la cadena
        """
        if not isinstance(text, str) or any(ch not in "01" for ch in text):
            raise ValidationError(f"Vértice textual inválido: {text!r}")
        value = 0
        for pos, ch in enumerate(text):
            if ch == "1":
                value |= 1 << pos
        return cls(width=len(text), value=value)

    @property
    def text(self) -> str:
        return "".join("1" if (self.value >> pos) & 1 else "0" for pos in range(self.width))

    @property
    def coords(self) -> Tuple[int, ...]:
        return tuple((self.value >> pos) & 1 for pos in range(self.width))

    @property
    def weight(self) -> int:
        """Peso de Hamming (número de unos)"""
        return bin(self.value).count("1")

    def bit(self, i: int) -> int:
        """Valor de la coordenada i (1-based)"""
        self._check_coordinate(i)
        return (self.value >> (i - 1)) & 1

    def flip(self, i: int) -> "CubeVertex":
        """Vecino que difiere en la coordenada i (1-based)"""
        self._check_coordinate(i)
        return CubeVertex(self.width, self.value ^ (1 << (i - 1)))

    def lift(self, width: int, offset: int = 0) -> "CubeVertex":
        """
        Extiende con ceros a un cubo más ancho

        Args:
            width: ancho destino
            offset: número de coordenadas que se saltan a la izquierda
        """
        if width < self.width + offset:
            raise DimensionError(
                f"No cabe un vértice de ancho {self.width} con offset {offset} en ancho {width}"
            )
        return CubeVertex(width, self.value << offset)

    def _check_coordinate(self, i: int) -> None:
        if not 1 <= i <= self.width:
            raise ParameterError(f"Coordenada {i} fuera de 1..{self.width}")

    def __str__(self) -> str:
        return self.text


def _check_widths(u: CubeVertex, v: CubeVertex) -> None:
    if u.width != v.width:
        raise DimensionError(f"Anchos distintos: {u.width} y {v.width}")


def hamming(u: CubeVertex, v: CubeVertex) -> int:
    """
    Distancia de Hamming entre dos vértices del mismo ancho

    Raises:
        DimensionError si los anchos difieren
    """
    _check_widths(u, v)
    return bin(u.value ^ v.value).count("1")


def is_cube_edge(u: CubeVertex, v: CubeVertex) -> bool:
    """True si u y v son adyacentes en Q_d (sin lazos)"""
    return hamming(u, v) == 1


def neighbors(v: CubeVertex) -> Iterator[CubeVertex]:
    """Los d vecinos de v, en orden de coordenada"""
    for pos in range(v.width):
        yield CubeVertex(v.width, v.value ^ (1 << pos))


# ============================================================================
# CICLOS DE GRAY
# ============================================================================

@dataclass(frozen=True)
class GrayCycle:
    """Ciclo hamiltoniano de Q_k en orden de Gray reflejado"""
    k: int
    order: Tuple[CubeVertex, ...]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, idx):
        return self.order[idx]


def gray_code(i: int) -> int:
    """Código de Gray reflejado del índice i"""
    return i ^ (i >> 1)


def gray_cycle(k: int) -> GrayCycle:
    """
    Ciclo de Gray reflejado de Q_k

    Para k=1 se devuelve el 2-ciclo degenerado [0, 1]; los consumidores
    que necesitan un ciclo real exigen longitud >= 4.

    Raises:
        ParameterError si k < 1
    """
    if k < 1:
        raise ParameterError("Q_0 tiene un único vértice y ningún ciclo (k >= 1)")
    order = tuple(CubeVertex(k, gray_code(i)) for i in range(1 << k))
    return GrayCycle(k=k, order=order)


# ============================================================================
# EMBEBIDO DE CICLOS PARES
# ============================================================================

@dataclass(frozen=True)
class CycleEmbedding:
    """Etiquetado de C_L dentro de Q_k: la etiqueta t va al vértice label_to_vertex[t]"""
    L: int
    k: int
    label_to_vertex: Tuple[CubeVertex, ...]

    def __getitem__(self, label: int) -> CubeVertex:
        return self.label_to_vertex[label % self.L]

    def __len__(self) -> int:
        return self.L


def even_cycle_embedding(L: int, k: int) -> CycleEmbedding:
    """
    Embebe el ciclo par C_L en Q_k

    Se toma el prefijo de longitud L/2 del ciclo de Gray de Q_{k-1} y se
    cierra con la copia reflejada en la coordenada k.

    Args:
        L: longitud del ciclo, par, 4 <= L <= 2^k
        k: dimensión del cubo anfitrión

    Raises:
        ParameterError si L es impar, L < 4 o L > 2^k
    """
    if L % 2 != 0:
        raise ParameterError(f"La longitud del ciclo debe ser par (L={L})")
    if L < 4:
        raise ParameterError(f"Un ciclo necesita al menos 4 vértices (L={L})")
    if k < 2 or L > (1 << k):
        raise ParameterError(f"C_{L} no cabe en Q_{k}")

    half = L // 2
    top = 1 << (k - 1)
    prefix = [gray_code(i) for i in range(half)]
    values = prefix + [g + top for g in reversed(prefix)]
    return CycleEmbedding(L=L, k=k, label_to_vertex=tuple(CubeVertex(k, v) for v in values))


def is_cyclic_walk(vertices: List[CubeVertex]) -> bool:
    """True si los vértices consecutivos (cíclicamente) son adyacentes"""
    n = len(vertices)
    return n > 0 and all(is_cube_edge(vertices[i], vertices[(i + 1) % n]) for i in range(n))


__all__ = [
    'CubeVertex',
    'GrayCycle',
    'CycleEmbedding',
    'hamming',
    'is_cube_edge',
    'neighbors',
    'gray_code',
    'gray_cycle',
    'even_cycle_embedding',
    'is_cyclic_walk',
]
