"""
Expander Bound Module
Herramientas de la cota inferior: grafos cúbicos aleatorios, expansión por
fuerza bruta, cota por número de vértices de la subdivisión, identidad de
los cortes por coordenada, cola de pesos de Hamming y la desigualdad final

Todas las razones son racionales exactos (0.18 es 9/50); nunca float.
"""

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice, permutations
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from utils.errors import ParameterError, RetryExhaustedError, SizeError, ValidationError
from .hypercube_core import CubeVertex, hamming
from .minor_embed import GuestGraph

log = logging.getLogger("hyperminor.expander")

DEFAULT_BETA = Fraction(9, 50)
EXPANSION_LIMIT = 28
CERTIFICATE_MAX_VERTICES = 6
CERTIFICATE_MAX_D = 4
MAX_RESAMPLES = 1000
CERTIFICATE_CHUNK = 100_000


# ============================================================================
# GRAFOS CÚBICOS
# ============================================================================

@dataclass
class CubicGraph(GuestGraph):
    """Grafo simple 3-regular con un número par de vértices (>= 4)"""

    def __post_init__(self):
        super().__post_init__()
        if self.n_vertices < 4 or self.n_vertices % 2:
            raise ValidationError(f"Un grafo cúbico necesita 2n >= 4 vértices (hay {self.n_vertices})")
        bad = [v for v in range(self.n_vertices) if self.degree(v) != 3]
        if bad:
            raise ValidationError(f"Vértices con grado distinto de 3: {bad[:10]}")

    @property
    def two_n(self) -> int:
        return self.n_vertices


def gen_cubic(two_n: int, seed: Optional[int] = None,
              max_resamples: int = MAX_RESAMPLES) -> CubicGraph:
    """
    Grafo cúbico aleatorio por el modelo de configuración

    Se emparejan 3·2n semipuntos al azar y se descarta el resultado si
    tiene lazos o aristas múltiples.

    Args:
        two_n: número de vértices, par y >= 4
        seed: semilla; la misma semilla da el mismo grafo
        max_resamples: intentos antes de rendirse

    Raises:
        ParameterError si two_n es impar o < 4
        RetryExhaustedError si se agotan los intentos
    """
    if two_n < 4 or two_n % 2:
        raise ParameterError(f"two_n debe ser par y >= 4 (two_n={two_n})")

    rng = random.Random(seed)
    points = [v for v in range(two_n) for _ in range(3)]
    for attempt in range(1, max_resamples + 1):
        rng.shuffle(points)
        edges = set()
        simple = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            key = (min(u, v), max(u, v))
            if u == v or key in edges:
                simple = False
                break
            edges.add(key)
        if simple:
            log.debug("gen_cubic: two_n=%d aceptado en el intento %d", two_n, attempt)
            return CubicGraph(n_vertices=two_n, edges=sorted(edges))
    raise RetryExhaustedError(
        f"Sin grafo cúbico simple tras {max_resamples} intentos (two_n={two_n})"
    )


def to_networkx(g: GuestGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n_vertices))
    graph.add_edges_from(g.edges)
    return graph


def is_connected(g: GuestGraph) -> bool:
    return nx.is_connected(to_networkx(g))


# ============================================================================
# EXPANSIÓN POR FUERZA BRUTA
# ============================================================================

@dataclass
class ExpansionReport:
    """Peor conjunto S (|S| <= n) para la razón |N(S)|/|S|"""
    passes: bool
    beta: Fraction
    worst_set: FrozenSet[int]
    worst_ratio: Fraction

    def to_dict(self) -> dict:
        return {
            "passes": self.passes,
            "beta": self.beta,
            "worst_set": sorted(self.worst_set),
            "worst_ratio": self.worst_ratio,
        }


def _subset_tables(adj: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """Para cada submáscara de los vértices dados: unión de vecindarios y cardinal"""
    size = 1 << len(adj)
    nbr = np.zeros(size, dtype=np.int64)
    card = np.zeros(size, dtype=np.int64)
    for b, mask in enumerate(adj):
        half = 1 << b
        nbr[half:2 * half] = nbr[:half] | mask
        card[half:2 * half] = card[:half] + 1
    return nbr, card


def _popcount_table() -> np.ndarray:
    table = np.zeros(1 << 16, dtype=np.int64)
    for b in range(16):
        half = 1 << b
        table[half:2 * half] = table[:half] + 1
    return table


_POP16 = _popcount_table()


def _popcount(values: np.ndarray) -> np.ndarray:
    return _POP16[values & 0xFFFF] + _POP16[(values >> 16) & 0xFFFF] + _POP16[(values >> 32) & 0xFFFF]


def check_expansion(g: GuestGraph, beta: Fraction = DEFAULT_BETA,
                    limit: int = EXPANSION_LIMIT) -> ExpansionReport:
    """
    Minimiza |N(S)|/|S| sobre todos los S no vacíos con |S| <= n

    N(S) son los vecinos de S fuera de S. Los vértices se parten en dos
    mitades; para cada máscara de la mitad alta se evalúa en bloque toda
    la mitad baja. Las razones se comparan como enteros escalados por
    mcm(1..n), así que la comparación es exacta. Entre empates gana la
    máscara menor.

    Raises:
        SizeError si el grafo tiene más de `limit` vértices
    """
    n_v = g.n_vertices
    if n_v > limit:
        raise SizeError(f"Fuerza bruta limitada a {limit} vértices (hay {n_v})")
    beta = Fraction(beta)
    n = n_v // 2
    if n < 1:
        raise ParameterError("Se necesitan al menos 2 vértices")

    adj = [0] * n_v
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    low_bits = (n_v + 1) // 2
    low_nbr, low_card = _subset_tables(adj[:low_bits])
    high_nbr, high_card = _subset_tables(adj[low_bits:])
    low_masks = np.arange(1 << low_bits, dtype=np.int64)

    scale = math.lcm(*range(1, n + 1))
    weight = np.zeros(n_v + 1, dtype=np.int64)
    for s in range(1, n + 1):
        weight[s] = scale // s
    sentinel = np.iinfo(np.int64).max

    best_key, best_mask = sentinel, None
    for high in range(len(high_nbr)):
        subset = low_masks | (high << low_bits)
        outside = (low_nbr | high_nbr[high]) & ~subset
        card = low_card + high_card[high]
        key = np.where((card >= 1) & (card <= n), _popcount(outside) * weight[card], sentinel)
        idx = int(np.argmin(key))
        if key[idx] < best_key:
            best_key, best_mask = int(key[idx]), int(subset[idx])

    worst = frozenset(v for v in range(n_v) if (best_mask >> v) & 1)
    nbhd = 0
    for v in worst:
        nbhd |= adj[v]
    nbhd &= ~best_mask
    ratio = Fraction(bin(nbhd).count("1"), len(worst))
    log.debug("check_expansion: 2n=%d peor razón %s con |S|=%d", n_v, ratio, len(worst))
    return ExpansionReport(passes=ratio >= beta, beta=beta, worst_set=worst, worst_ratio=ratio)


def expansion_survey(sizes: Sequence[int], samples: int = 100, seed: int = 0,
                     beta: Fraction = DEFAULT_BETA) -> pd.DataFrame:
    """
    Fracción empírica de grafos cúbicos aleatorios que cumplen la expansión

    La muestra i de cada tamaño usa la semilla seed + i.

    Returns:
        DataFrame con columnas two_n, samples, connected, passing, fraction
    """
    rows = []
    for two_n in sizes:
        connected = passing = 0
        for i in range(samples):
            g = gen_cubic(two_n, seed + i)
            if not is_connected(g):
                continue
            connected += 1
            if check_expansion(g, beta).passes:
                passing += 1
        rows.append({
            "two_n": two_n,
            "samples": samples,
            "connected": connected,
            "passing": passing,
            "fraction": Fraction(passing, samples) if samples else Fraction(0),
        })
    return pd.DataFrame(rows, columns=["two_n", "samples", "connected", "passing", "fraction"])


# ============================================================================
# COLOCACIONES Y COTA POR CONTEO
# ============================================================================

@dataclass
class Placement:
    """Asignación inyectiva vértice huésped -> vértice de Q_d"""
    assignment: Dict[int, CubeVertex]

    def __post_init__(self):
        widths = {x.width for x in self.assignment.values()}
        if len(widths) > 1:
            raise ValidationError(f"Colocación con anchos mezclados: {sorted(widths)}")
        seen: Dict[CubeVertex, int] = {}
        for v, x in sorted(self.assignment.items()):
            if x in seen:
                raise ValidationError(f"Colocación no inyectiva: {seen[x]} y {v} van a {x.text}")
            seen[x] = v

    @classmethod
    def from_texts(cls, texts: Mapping[int, str]) -> "Placement":
        return cls({int(v): CubeVertex.from_text(s) for v, s in texts.items()})

    @property
    def d(self) -> Optional[int]:
        return next(iter(self.assignment.values())).width if self.assignment else None

    def __getitem__(self, v: int) -> CubeVertex:
        return self.assignment[v]


@dataclass
class BoundReport:
    """Cadena de conteo para una colocación concreta"""
    hamming_sum: int
    lower_bound: int
    cut_sizes: Tuple[int, ...]
    side_sizes: Tuple[int, ...]
    host_capacity: int
    beta: Fraction = DEFAULT_BETA
    weight_sum: int = 0
    cut_expansion_ok: Tuple[bool, ...] = field(default_factory=tuple)
    expansion_lower_bound: Fraction = Fraction(0)

    @property
    def exceeds_host(self) -> bool:
        return self.lower_bound > self.host_capacity

    def to_dict(self) -> dict:
        return {
            "hamming_sum": self.hamming_sum,
            "lower_bound": self.lower_bound,
            "cut_sizes": list(self.cut_sizes),
            "side_sizes": list(self.side_sizes),
            "host_capacity": self.host_capacity,
            "beta": self.beta,
            "weight_sum": self.weight_sum,
            "cut_expansion_ok": list(self.cut_expansion_ok),
            "expansion_lower_bound": self.expansion_lower_bound,
        }


def bound_report(g: GuestGraph, placement: Placement, d: int,
                 beta: Fraction = DEFAULT_BETA) -> BoundReport:
    """
    Cota inferior de vértices de una subdivisión de g colocada en Q_d

    |E_i| cuenta las aristas cuyos extremos difieren en el bit i y |S_i| es
    el lado minoritario del corte por el bit i. Se comprueba siempre que
    la suma de los |E_i| coincide con la suma de distancias de Hamming.

    Raises:
        ValidationError si la colocación no cubre g o tiene otro ancho
        ParameterError si g tiene un número impar de vértices
    """
    if g.n_vertices % 2:
        raise ParameterError(f"El huésped necesita un número par de vértices (hay {g.n_vertices})")
    missing = [v for v in range(g.n_vertices) if v not in placement.assignment]
    if missing:
        raise ValidationError(f"Vértices sin colocar: {missing[:10]}")
    points = [placement[v] for v in range(g.n_vertices)]
    if any(x.width != d for x in points):
        raise ValidationError(f"La colocación no tiene ancho {d}")

    n = g.n_vertices // 2
    hamming_sum = sum(hamming(points[u], points[v]) for u, v in g.edges)
    cut_sizes = tuple(
        sum(1 for u, v in g.edges if points[u].bit(i) != points[v].bit(i)) for i in range(1, d + 1)
    )
    assert sum(cut_sizes) == hamming_sum, "identidad de cortes violada"

    side_sizes = []
    for i in range(1, d + 1):
        ones = sum(x.bit(i) for x in points)
        side_sizes.append(min(ones, len(points) - ones))
    assert all(2 * s <= len(points) for s in side_sizes)

    beta = Fraction(beta)
    weight_sum = sum(side_sizes)
    return BoundReport(
        hamming_sum=hamming_sum,
        lower_bound=hamming_sum - n,
        cut_sizes=cut_sizes,
        side_sizes=tuple(side_sizes),
        host_capacity=1 << d,
        beta=beta,
        weight_sum=weight_sum,
        cut_expansion_ok=tuple(e >= beta * s for e, s in zip(cut_sizes, side_sizes)),
        expansion_lower_bound=beta * weight_sum - n,
    )


@dataclass
class CertificateReport:
    """Resultado del certificado de no-menor; certified=False no es concluyente"""
    certified: bool
    min_lower_bound: Optional[int]
    host_capacity: int
    placements_checked: int

    def to_dict(self) -> dict:
        return {
            "certified": self.certified,
            "min_lower_bound": self.min_lower_bound,
            "host_capacity": self.host_capacity,
            "placements_checked": self.placements_checked,
        }


def subcubic_nonminor_certificate(g: GuestGraph, d: int,
                                  max_vertices: int = CERTIFICATE_MAX_VERTICES,
                                  max_d: int = CERTIFICATE_MAX_D) -> CertificateReport:
    """
    Certifica que un huésped de grado <= 3 no es menor de Q_d

    Con grado máximo 3, ser menor equivale a contener una subdivisión, y
    toda subdivisión colocada con s_v tiene al menos hamming_sum - n
    vértices. Se minimiza sobre todas las colocaciones inyectivas de V en
    Q_d, evaluadas por bloques con una tabla de distancias de Hamming.

    Raises:
        ParameterError si el grado máximo supera 3 o |V| es impar
        SizeError si se supera el presupuesto de fuerza bruta
    """
    if g.max_degree > 3:
        raise ParameterError(f"Grado máximo {g.max_degree} > 3: la reducción a subdivisiones no vale")
    if g.n_vertices % 2:
        raise ParameterError(f"El huésped necesita un número par de vértices (hay {g.n_vertices})")
    if d < 1:
        raise ParameterError(f"d debe ser >= 1 (d={d})")
    if g.n_vertices > max_vertices or d > max_d:
        raise SizeError(
            f"Presupuesto de fuerza bruta: |V| <= {max_vertices} y d <= {max_d} "
            f"(hay |V|={g.n_vertices}, d={d})"
        )

    capacity = 1 << d
    if g.n_vertices > capacity:
        return CertificateReport(certified=True, min_lower_bound=None,
                                 host_capacity=capacity, placements_checked=0)

    n = g.n_vertices // 2
    dist = np.array([[bin(x ^ y).count("1") for y in range(capacity)] for x in range(capacity)],
                    dtype=np.int64)
    us = np.array([u for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v in g.edges], dtype=np.int64)
    best = None
    checked = 0
    placements = permutations(range(capacity), g.n_vertices)
    while True:
        chunk = list(islice(placements, CERTIFICATE_CHUNK))
        if not chunk:
            break
        values = np.array(chunk, dtype=np.int64)
        totals = dist[values[:, us], values[:, vs]].sum(axis=1)
        chunk_best = int(totals.min())
        checked += len(chunk)
        if best is None or chunk_best < best:
            best = chunk_best
    min_lower_bound = best - n
    log.debug("certificado: %d colocaciones, cota mínima %d", checked, min_lower_bound)
    return CertificateReport(certified=min_lower_bound > capacity, min_lower_bound=min_lower_bound,
                             host_capacity=capacity, placements_checked=checked)


# ============================================================================
# ARITMÉTICA FINAL
# ============================================================================

def weight_tail(d: int) -> int:
    """Número de cadenas binarias de longitud d con a lo sumo d/4 unos"""
    if d < 1:
        raise ParameterError(f"d debe ser >= 1 (d={d})")
    return sum(math.comb(d, w) for w in range(d // 4 + 1))


@dataclass
class TheoremReport:
    """Evaluación exacta de la desigualdad final para un d concreto"""
    d: int
    lhs: Fraction
    rhs: int
    holds: bool
    tail_ok: bool
    order_interval: Tuple[int, int]
    edge_ceiling: Fraction

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "tail_ok": self.tail_ok,
            "order_interval": list(self.order_interval),
            "edge_ceiling": self.edge_ceiling,
        }


def theorem_inequality(d: int, beta: Fraction = DEFAULT_BETA) -> TheoremReport:
    """
    Evalúa beta·d·45·2^d/(8d) - 50·2^d/(2d) > 2^d en racionales exactos

    También comprueba la condición previa sobre la cola de pesos,
    weight_tail(d) < (45·2^d/d)/2, y el intervalo de órdenes pares
    [45·2^d/d, 50·2^d/d] de los huéspedes cúbicos.
    """
    if d < 1:
        raise ParameterError(f"d debe ser >= 1 (d={d})")
    host = 1 << d
    lhs = Fraction(beta) * d * 45 * host / (8 * d) - Fraction(50 * host, 2 * d)
    lo = -(-45 * host // d)
    hi = 50 * host // d
    lo += lo % 2
    hi -= hi % 2
    return TheoremReport(
        d=d,
        lhs=lhs,
        rhs=host,
        holds=lhs > host,
        tail_ok=weight_tail(d) < Fraction(45 * host, d) / 2,
        order_interval=(lo, hi),
        edge_ceiling=Fraction(100 * host, d),
    )


def theorem_scan(d_max: int, beta: Fraction = DEFAULT_BETA) -> Optional[int]:
    """Menor d <= d_max para el que la desigualdad final se cumple, o None"""
    for d in range(1, d_max + 1):
        host = 1 << d
        lhs = Fraction(beta) * 45 * host / 8 - Fraction(50 * host, 2 * d)
        if lhs > host:
            return d
    return None


def weight_tail_threshold(d_max: int) -> Tuple[Optional[int], Optional[int]]:
    """
    Umbrales de la condición weight_tail(d) < 2^d/d en 1..d_max

    Returns:
        (primer d que la cumple, menor d a partir del cual se cumple
        para todo d hasta d_max); None si no existe
    """
    holds = [weight_tail(d) * d < (1 << d) for d in range(1, d_max + 1)]
    first = next((i + 1 for i, ok in enumerate(holds) if ok), None)
    stable = None
    for i in range(len(holds) - 1, -1, -1):
        if not holds[i]:
            break
        stable = i + 1
    return first, stable


__all__ = [
    'CubicGraph',
    'ExpansionReport',
    'Placement',
    'BoundReport',
    'CertificateReport',
    'TheoremReport',
    'gen_cubic',
    'to_networkx',
    'is_connected',
    'check_expansion',
    'expansion_survey',
    'bound_report',
    'subcubic_nonminor_certificate',
    'weight_tail',
    'theorem_inequality',
    'theorem_scan',
    'weight_tail_threshold',
    'DEFAULT_BETA',
]
