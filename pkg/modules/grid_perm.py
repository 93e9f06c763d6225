"""
Grid Permutations
Descomposición de permutaciones de una rejilla en factores unidimensionales

Funcionalidades:
- Rejillas de radio mixto [n_1] x ... x [n_d] con rango row-major
  (la última coordenada varía más rápido)
- Permutaciones completas (GridPerm) y unidimensionales (OneDimPerm)
- Multigrafos bipartitos regulares y su partición en emparejamientos perfectos
- decompose: toda permutación es producto de 2d-1 permutaciones
  unidimensionales, con direcciones |d - i| + 1
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from utils.validation import parse_rank_lines, parse_shape
from utils.errors import ValidationError

log = logging.getLogger("hyperminor.grid_perm")

# (izquierda, derecha, etiqueta)
TaggedEdge = Tuple[int, int, int]
Matching = List[TaggedEdge]


# ============================================================================
# REJILLAS Y PUNTOS
# ============================================================================

@dataclass(frozen=True)
class GridShape:
    """Forma (n_1, ..., n_d) de la rejilla"""
    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) < 1:
            raise ValidationError("La rejilla necesita al menos una dimensión")
        if any(n < 1 for n in dims):
            raise ValidationError(f"Dimensiones no positivas en {dims}")
        if self.size >= 2 ** 62:
            raise ValidationError(f"Rejilla demasiado grande: {dims}")

    @classmethod
    def parse(cls, text: str) -> "GridShape":
        """Parsea 'n1,n2,...'"""
        return cls(parse_shape(text))

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        total = 1
        for n in self.dims:
            total *= n
        return total

    def rank(self, coords: Sequence[int]) -> int:
        """Rango row-major de un punto con coordenadas 1-based"""
        if len(coords) != self.d:
            raise ValidationError(f"Se esperaban {self.d} coordenadas, hay {len(coords)}")
        for c, n in zip(coords, self.dims):
            if not 1 <= c <= n:
                raise ValidationError(f"Punto {tuple(coords)} fuera de la rejilla {self.dims}")
        return int(np.ravel_multi_index(tuple(c - 1 for c in coords), self.dims))

    def point(self, rank: int) -> "GridPoint":
        if not 0 <= rank < self.size:
            raise ValidationError(f"Rango {rank} fuera de [0, {self.size})")
        coords = tuple(int(c) + 1 for c in np.unravel_index(rank, self.dims))
        return GridPoint(self, coords)

    def all_coords(self) -> np.ndarray:
        """Matriz d x |X| con las coordenadas 0-based de cada rango"""
        return np.array(np.unravel_index(np.arange(self.size), self.dims))

    def lines(self, direction: int) -> np.ndarray:
        """
        Rangos agrupados por líneas en la dirección dada

        Returns:
            Matriz (número de líneas) x n_j; las líneas siguen el orden row-major
            de sus coordenadas fijas y cada fila recorre la coordenada j en orden
        """
        self._check_direction(direction)
        grid = np.arange(self.size).reshape(self.dims)
        n_j = self.dims[direction - 1]
        return np.moveaxis(grid, direction - 1, -1).reshape(-1, n_j)

    def _check_direction(self, direction: int) -> None:
        if not 1 <= direction <= self.d:
            raise ValidationError(f"Dirección {direction} fuera de 1..{self.d}")


@dataclass(frozen=True)
class GridPoint:
    """Punto de la rejilla, coordenadas 1-based"""
    shape: GridShape
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        self.shape.rank(self.coords)

    @property
    def rank(self) -> int:
        return self.shape.rank(self.coords)


# ============================================================================
# PERMUTACIONES
# ============================================================================

def _as_permutation(image, size: int) -> np.ndarray:
    arr = np.array(image, dtype=np.int64)
    if arr.shape != (size,):
        raise ValidationError(f"La permutación debe tener {size} entradas, tiene {arr.size}")
    if not np.array_equal(np.sort(arr), np.arange(size)):
        raise ValidationError("La imagen no es una permutación de los rangos")
    return arr


@dataclass(eq=False)
class GridPerm:
    """Permutación de la rejilla: image[rank(x)] = rank(sigma(x))"""
    shape: GridShape
    image: np.ndarray

    def __post_init__(self):
        self.image = _as_permutation(self.image, self.shape.size)
        self.image.setflags(write=False)

    @classmethod
    def identity(cls, shape: GridShape) -> "GridPerm":
        return cls(shape, np.arange(shape.size))

    @classmethod
    def random(cls, shape: GridShape, seed: Optional[int] = None) -> "GridPerm":
        rng = np.random.default_rng(seed)
        return cls(shape, rng.permutation(shape.size))

    def inverse(self) -> "GridPerm":
        inv = np.empty_like(self.image)
        inv[self.image] = np.arange(self.shape.size)
        return GridPerm(self.shape, inv)

    def compose(self, other: "GridPerm") -> "GridPerm":
        """self ∘ other (primero other)"""
        if other.shape != self.shape:
            raise ValidationError("Formas incompatibles al componer")
        return GridPerm(self.shape, self.image[other.image])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GridPerm)
            and type(other) is type(self)
            and other.shape == self.shape
            and np.array_equal(other.image, self.image)
        )

    def __call__(self, rank: int) -> int:
        return int(self.image[rank])


@dataclass(eq=False)
class OneDimPerm:
    """Permutación que sólo mueve puntos a lo largo de la coordenada `direction`"""
    shape: GridShape
    direction: int
    image: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.shape._check_direction(self.direction)
        self.image = _as_permutation(self.image, self.shape.size)
        self.image.setflags(write=False)

        coords = self.shape.all_coords()
        moved = coords != coords[:, self.image]
        others = np.delete(moved, self.direction - 1, axis=0)
        if others.any():
            raise ValidationError(
                f"La permutación no es unidimensional en la dirección {self.direction}"
            )

    @classmethod
    def from_line_perms(cls, shape: GridShape, direction: int, line_perms) -> "OneDimPerm":
        """
        Construye el factor desde las permutaciones de cada línea

        Args:
            line_perms: matriz (líneas x n_j), valores 0-based; la fila k
                indica a qué posición va cada punto de la línea k
        """
        lines = shape.lines(direction)
        perms = np.asarray(line_perms, dtype=np.int64)
        if perms.shape != lines.shape:
            raise ValidationError(
                f"Se esperaban {lines.shape[0]} líneas de longitud {lines.shape[1]}"
            )
        for row in perms:
            if not np.array_equal(np.sort(row), np.arange(lines.shape[1])):
                raise ValidationError("Una línea no es una biyección")
        image = np.empty(shape.size, dtype=np.int64)
        image[lines] = np.take_along_axis(lines, perms, axis=1)
        return cls(shape, direction, image)

    @property
    def line_perms(self) -> np.ndarray:
        """Permutación (0-based) de cada línea, líneas en orden row-major"""
        lines = self.shape.lines(self.direction)
        coords = self.shape.all_coords()[self.direction - 1]
        return coords[self.image[lines]]

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.image, np.arange(self.shape.size)))

    def __call__(self, rank: int) -> int:
        return int(self.image[rank])


def apply(p: Union[OneDimPerm, GridPerm], x: GridPoint) -> GridPoint:
    """Imagen del punto x por la permutación p"""
    if x.shape != p.shape:
        raise ValidationError(f"El punto pertenece a {x.shape.dims}, la permutación a {p.shape.dims}")
    return p.shape.point(int(p.image[x.rank]))


def compose_equals(factors: Sequence[OneDimPerm], sigma: GridPerm) -> bool:
    """
    True si aplicar los factores de izquierda a derecha (primero factors[0])
    reproduce sigma en todos los puntos
    """
    current = np.arange(sigma.shape.size)
    for f in factors:
        if f.shape != sigma.shape:
            raise ValidationError(
                f"Factor de forma {f.shape.dims} frente a permutación de forma {sigma.shape.dims}"
            )
        current = f.image[current]
    return bool(np.array_equal(current, sigma.image))


# ============================================================================
# MULTIGRAFOS BIPARTITOS REGULARES
# ============================================================================

@dataclass
class RegularBipartiteMultigraph:
    """Multigrafo bipartito r-regular con aristas etiquetadas"""
    left_size: int
    right_size: int
    edges: List[TaggedEdge]

    @property
    def degree(self) -> int:
        if self.left_size <= 0:
            return 0
        return len(self.edges) // self.left_size

    def validate(self) -> None:
        if self.left_size < 1 or self.left_size != self.right_size:
            raise ValidationError(
                f"Los lados deben ser iguales y positivos ({self.left_size}, {self.right_size})"
            )
        tags = [tag for _, _, tag in self.edges]
        if len(set(tags)) != len(tags):
            raise ValidationError("Etiquetas de arista repetidas")

        left_deg = np.zeros(self.left_size, dtype=np.int64)
        right_deg = np.zeros(self.right_size, dtype=np.int64)
        for u, v, _ in self.edges:
            if not (0 <= u < self.left_size and 0 <= v < self.right_size):
                raise ValidationError(f"Arista ({u}, {v}) fuera de rango")
            left_deg[u] += 1
            right_deg[v] += 1

        r = self.degree
        if len(self.edges) != r * self.left_size or (left_deg != r).any() or (right_deg != r).any():
            raise ValidationError("El multigrafo no es regular")


def split_into_matchings(g: RegularBipartiteMultigraph) -> List[Matching]:
    """
    Parte un multigrafo bipartito r-regular en r emparejamientos perfectos

    Cada ronda calcula un emparejamiento máximo (Hopcroft-Karp) sobre el
    soporte simple de las aristas que quedan; por Hall es perfecto porque
    el resto sigue siendo regular. Entre aristas paralelas se consume la
    de menor etiqueta.

    Returns:
        r listas de aristas (izquierda, derecha, etiqueta), ordenadas por izquierda

    Raises:
        ValidationError si el multigrafo no es regular
    """
    g.validate()
    r = g.degree

    buckets: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for u, v, tag in g.edges:
        buckets[(u, v)].append(tag)
    for tags in buckets.values():
        tags.sort(reverse=True)

    support = nx.Graph()
    top = [("L", u) for u in range(g.left_size)]
    support.add_nodes_from(top)
    support.add_nodes_from(("R", v) for v in range(g.right_size))
    support.add_edges_from((("L", u), ("R", v)) for (u, v) in buckets)

    matchings: List[Matching] = []
    for _ in range(r):
        mate = nx.bipartite.hopcroft_karp_matching(support, top_nodes=top)
        matching: Matching = []
        for u in range(g.left_size):
            partner = mate.get(("L", u))
            assert partner is not None, "el resto regular debe admitir emparejamiento perfecto"
            v = partner[1]
            tags = buckets[(u, v)]
            matching.append((u, v, tags.pop()))
            if not tags:
                support.remove_edge(("L", u), ("R", v))
        matchings.append(matching)

    log.debug("multigrafo %d-regular con %d vértices por lado: %d emparejamientos",
              r, g.left_size, len(matchings))
    return matchings


# ============================================================================
# DESCOMPOSICIÓN
# ============================================================================

def decompose(sigma: GridPerm) -> List[OneDimPerm]:
    """
    Escribe sigma como sigma_{2d-1} ∘ ... ∘ sigma_1 con factores unidimensionales

    El factor i (1-based) tiene dirección |d - i| + 1. Siempre se devuelven
    exactamente 2d-1 factores, aunque alguno sea la identidad.

    Args:
        sigma: permutación válida de la rejilla

    Returns:
        Lista de factores en orden de aplicación (sigma_1 primero)
    """
    if not isinstance(sigma, GridPerm):
        raise ValidationError("decompose espera un GridPerm")

    shape = sigma.shape
    d = shape.d
    if d == 1:
        return [OneDimPerm(shape, 1, np.array(sigma.image))]

    n = shape.dims[-1]
    sub_shape = GridShape(shape.dims[:-1])
    ny = sub_shape.size
    ranks = np.arange(shape.size)
    left = ranks // n
    right = sigma.image // n

    # Una arista e_x por punto x: de pi_d(x) a pi_d(sigma(x))
    graph = RegularBipartiteMultigraph(
        left_size=ny,
        right_size=ny,
        edges=list(zip(left.tolist(), right.tolist(), ranks.tolist())),
    )
    layer = np.empty(shape.size, dtype=np.int64)
    for idx, matching in enumerate(split_into_matchings(graph)):
        for _, _, tag in matching:
            layer[tag] = idx

    first = np.empty(shape.size, dtype=np.int64)
    first[ranks] = left * n + layer

    # tau_l: permutación de Y inducida en cada capa
    sub_factors = []
    for ell in range(n):
        mask = layer == ell
        tau = np.empty(ny, dtype=np.int64)
        tau[left[mask]] = right[mask]
        sub_factors.append(decompose(GridPerm(sub_shape, tau)))

    ys = np.arange(ny)
    middle = []
    for i in range(2 * d - 3):
        image = np.empty(shape.size, dtype=np.int64)
        for ell in range(n):
            image[ys * n + ell] = sub_factors[ell][i].image * n + ell
        middle.append(OneDimPerm(shape, sub_factors[0][i].direction, image))

    last = np.empty(shape.size, dtype=np.int64)
    last[right * n + layer] = sigma.image

    return [OneDimPerm(shape, d, first), *middle, OneDimPerm(shape, d, last)]


def factor_directions(d: int) -> List[int]:
    """Direcciones |d - i| + 1 para i = 1..2d-1"""
    return [abs(d - i) + 1 for i in range(1, 2 * d)]


# ============================================================================
# FICHEROS
# ============================================================================

def read_perm_file(path: Union[str, Path], shape: GridShape) -> GridPerm:
    """
    Lee una permutación: la línea k (sin comentarios '#') es el rango de sigma(k)
    """
    text = Path(path).read_text(encoding="utf-8")
    return GridPerm(shape, parse_rank_lines(text))


def write_perm_file(path: Union[str, Path], sigma: GridPerm) -> None:
    lines = [f"# shape {','.join(str(n) for n in sigma.shape.dims)}"]
    lines.extend(str(int(r)) for r in sigma.image)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def format_factors(factors: Sequence[OneDimPerm]) -> str:
    """
    Serializa los factores: cabecera '# factor i direction j' y una línea
    por línea de la rejilla con su permutación 1-based
    """
    out = []
    for i, f in enumerate(factors, start=1):
        out.append(f"# factor {i} direction {f.direction}")
        for row in f.line_perms:
            out.append(" ".join(str(int(v) + 1) for v in row))
    return "\n".join(out) + "\n"


def write_factors(path: Union[str, Path], factors: Sequence[OneDimPerm]) -> None:
    Path(path).write_text(format_factors(factors), encoding="utf-8")


__all__ = [
    'GridShape',
    'GridPoint',
    'GridPerm',
    'OneDimPerm',
    'RegularBipartiteMultigraph',
    'apply',
    'compose_equals',
    'decompose',
    'split_into_matchings',
    'factor_directions',
    'read_perm_file',
    'write_perm_file',
    'format_factors',
    'write_factors',
]
