"""
Minor Embedding Module
Construye modelos de menor explícitos de un grafo huésped dentro de Q_d

Flujo (embed):
1. feasible_params: elige a, L, k_t y la dimensión d
2. assign_ports: trocea el ciclo de Gray de Q_a en caminos P(v)
3. target_involution: sigma intercambia los puertos x_y <-> y_x
4. route_paths: descompone sigma en factores unidimensionales y avanza
   una ficha por arista del huésped a lo largo de la dimensión temporal,
   desviando por coordenadas de reserva los pares que se cruzan

Distribución de coordenadas en Q_d:
- 1..a           rejilla Q_a
- a+1..a+k_t     ciclo temporal C_L
- d-3..d         reservas (par A = d-1, d; par B = d-3, d-2)
- resto          siempre 0
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from utils.errors import InfeasibleError, ParameterError, ValidationError
from .grid_perm import GridPerm, GridShape, OneDimPerm, decompose
from .hypercube_core import CubeVertex, even_cycle_embedding, gray_cycle

log = logging.getLogger("hyperminor.minor_embed")

Edge = Tuple[int, int]


def ceil_log2(x: int) -> int:
    """Menor t con 2^t >= x (x >= 1)"""
    return (x - 1).bit_length()


# ============================================================================
# GRAFO HUÉSPED
# ============================================================================

@dataclass
class GuestGraph:
    """Grafo simple no dirigido sin vértices aislados, ids 0..n-1"""
    n_vertices: int
    edges: List[Edge]

    def __post_init__(self):
        normalized = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValidationError(f"Lazo en el vértice {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValidationError(f"Arista ({u}, {v}) fuera de 0..{self.n_vertices - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"Arista repetida {key}: sólo se admiten grafos simples")
            seen.add(key)
            normalized.append(key)
        if not normalized:
            raise ValidationError("El grafo huésped necesita al menos una arista")
        self.edges = sorted(normalized)

        self._adj: Dict[int, List[int]] = {v: [] for v in range(self.n_vertices)}
        for u, v in self.edges:
            self._adj[u].append(v)
            self._adj[v].append(u)
        isolated = [v for v, nbrs in self._adj.items() if not nbrs]
        if isolated:
            raise ValidationError(f"Vértices aislados no permitidos: {isolated[:10]}")
        for nbrs in self._adj.values():
            nbrs.sort()

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], n_vertices: Optional[int] = None) -> "GuestGraph":
        edges = [(int(u), int(v)) for u, v in edges]
        if n_vertices is None:
            n_vertices = 1 + max((max(u, v) for u, v in edges), default=-1)
        return cls(n_vertices=n_vertices, edges=edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> List[int]:
        return list(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self._adj.values())


def complete_graph(n: int) -> GuestGraph:
    return GuestGraph.from_edges(combinations(range(n), 2), n)


def path_graph(n: int) -> GuestGraph:
    """Camino con n vértices (P_3 tiene 3 vértices)"""
    return GuestGraph.from_edges(((i, i + 1) for i in range(n - 1)), n)


def cycle_graph(n: int) -> GuestGraph:
    return GuestGraph.from_edges(((i, (i + 1) % n) for i in range(n)), n)


def star_graph(k: int) -> GuestGraph:
    """K_{1,k} con centro 0"""
    return GuestGraph.from_edges(((0, i) for i in range(1, k + 1)), k + 1)


def petersen_graph() -> GuestGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return GuestGraph.from_edges(outer + spokes + inner, 10)


def random_guest(m: int, seed: Optional[int] = None) -> GuestGraph:
    """
    Grafo simple aleatorio con exactamente m aristas y sin vértices aislados

    Puede salir desconexo y con vértices de grado 1. Los vértices que
    quedan sin aristas se descartan y el resto se renumera en orden.
    """
    if m < 1:
        raise ParameterError("m debe ser >= 1")
    rng = random.Random(seed)
    lo = 2
    while lo * (lo - 1) // 2 < m:
        lo += 1
    n = rng.randint(lo, max(lo, 2 * m))
    pairs = list(combinations(range(n), 2))
    chosen = rng.sample(pairs, m)
    used = sorted({v for e in chosen for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    return GuestGraph.from_edges(((relabel[u], relabel[v]) for u, v in chosen), len(used))


# ============================================================================
# PARÁMETROS
# ============================================================================

@dataclass(frozen=True)
class EmbedParams:
    """Parámetros de la construcción"""
    d: int
    a: int
    L: int
    k_t: int

    @property
    def minimal_d(self) -> int:
        return self.a + self.k_t + 4

    @property
    def grid_coords(self) -> range:
        return range(1, self.a + 1)

    @property
    def temporal_coords(self) -> range:
        return range(self.a + 1, self.a + self.k_t + 1)

    @property
    def spare_a(self) -> Tuple[int, int]:
        return (self.d - 1, self.d)

    @property
    def spare_b(self) -> Tuple[int, int]:
        return (self.d - 3, self.d - 2)

    def spare_pair(self, step: int) -> Tuple[int, int]:
        """Par A en pasos impares, par B en pasos pares"""
        return self.spare_a if step % 2 == 1 else self.spare_b

    def to_dict(self) -> Dict[str, int]:
        return {"a": self.a, "L": self.L, "k_t": self.k_t, "d": self.d, "minimal_d": self.minimal_d}


def feasible_params(m: int, d_opt: Optional[int] = None) -> EmbedParams:
    """
    Calcula a, L y k_t para m aristas y valida (o elige) la dimensión

    a = max(2, ceil(log2(2m))), L = 2a, k_t = ceil(log2 L), d mínima = a + k_t + 4

    Raises:
        ParameterError si m < 1
        InfeasibleError si d_opt no alcanza la dimensión mínima
    """
    if m < 1:
        raise ParameterError(f"Se necesita al menos una arista (m={m})")
    a = max(2, ceil_log2(2 * m))
    L = 2 * a
    k_t = ceil_log2(L)
    minimal = a + k_t + 4

    if d_opt is None:
        d = minimal
    else:
        if d_opt < minimal:
            raise InfeasibleError(
                f"Q_{d_opt} no alcanza para {m} aristas: dimensión mínima {minimal}",
                minimal_d=minimal,
            )
        d = int(d_opt)
    return EmbedParams(d=d, a=a, L=L, k_t=k_t)


def max_edges_for_dimension(d: int) -> Tuple[int, Fraction]:
    """
    Mayor número de aristas que la construcción acepta en Q_d

    Returns:
        (m máximo, constante efectiva m*d/2^d); (0, 0) si d < 8
    """
    best = 0
    a = 2
    while a + ceil_log2(2 * a) + 4 <= d:
        best = 1 << (a - 1)
        a += 1
    return best, Fraction(best * d, 1 << d)


# ============================================================================
# PUERTOS
# ============================================================================

@dataclass
class PortAssignment:
    """Caminos P(v) sobre el ciclo de Gray de Q_a y puertos v_x"""
    params: EmbedParams
    arcs: Dict[int, List[CubeVertex]]
    ports: Dict[Edge, CubeVertex]

    def port(self, v: int, x: int) -> CubeVertex:
        return self.ports[(v, x)]


def assign_ports(g: GuestGraph, params: EmbedParams) -> PortAssignment:
    """
    Recorre el ciclo de Gray de Q_a y reparte arcos consecutivos

    Los vértices se procesan por id creciente; dentro de P(v) los puertos
    se asignan a los vecinos por id creciente a lo largo del arco.
    """
    if 2 * g.m > (1 << params.a):
        raise ParameterError(f"2m = {2 * g.m} no cabe en Q_{params.a}")

    cycle = gray_cycle(params.a).order
    arcs: Dict[int, List[CubeVertex]] = {}
    ports: Dict[Edge, CubeVertex] = {}
    pos = 0
    for v in range(g.n_vertices):
        nbrs = g.neighbors(v)
        arc = list(cycle[pos:pos + len(nbrs)])
        arcs[v] = arc
        for x, vertex in zip(nbrs, arc):
            ports[(v, x)] = vertex
        pos += len(nbrs)
    return PortAssignment(params=params, arcs=arcs, ports=ports)


# Rango row-major de la rejilla (2,...,2) <-> vértice de Q_a:
# la coordenada 1 es la más significativa del rango, igual que el carácter 1 del texto

def vertex_to_rank(v: CubeVertex) -> int:
    return int(v.text, 2) if v.width else 0


def rank_to_vertex(rank: int, a: int) -> CubeVertex:
    return CubeVertex.from_text(format(rank, f"0{a}b"))


def target_involution(ports: PortAssignment, params: EmbedParams) -> GridPerm:
    """
    Involución sigma de Q_a con sigma(x_y) = y_x, identidad fuera de los puertos
    """
    shape = GridShape((2,) * params.a)
    image = np.arange(shape.size)
    for (v, x), port in ports.ports.items():
        image[vertex_to_rank(port)] = vertex_to_rank(ports.port(x, v))
    return GridPerm(shape, image)


# ============================================================================
# MODELO DE MENOR
# ============================================================================

@dataclass
class MinorModel:
    """Conjuntos rama y caminos de conexión dentro de Q_d"""
    d: int
    branch_sets: Dict[int, List[CubeVertex]]
    connect_paths: Dict[Edge, List[CubeVertex]]
    detours: int = 0
    params: Optional[EmbedParams] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "branch_sets": {
                str(v): [x.text for x in verts] for v, verts in sorted(self.branch_sets.items())
            },
            "paths": [
                {"edge": [u, v], "vertices": [x.text for x in verts]}
                for (u, v), verts in sorted(self.connect_paths.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorModel":
        """
        Carga el formato JSON documentado

        Los anchos no se validan aquí (eso lo reporta el verificador);
        sí se rechazan cadenas que no sean binarias y las aristas con más
        de un camino (en cualquier orientación).
        """
        try:
            d = int(data["d"])
            branch_sets = {
                int(k): [CubeVertex.from_text(s) for s in verts]
                for k, verts in data["branch_sets"].items()
            }
            paths: Dict[Edge, List[CubeVertex]] = {}
            seen = set()
            for entry in data["paths"]:
                u, v = (int(x) for x in entry["edge"])
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise ValidationError(f"Modelo JSON: más de un camino para la arista {key}")
                seen.add(key)
                paths[(u, v)] = [CubeVertex.from_text(s) for s in entry["vertices"]]
        except (KeyError, TypeError, AttributeError) as e:
            raise ValidationError(f"Modelo JSON mal formado: {e}")
        except ValidationError:
            raise
        except ValueError as e:
            raise ValidationError(f"Modelo JSON mal formado: {e}")
        return cls(d=d, branch_sets=branch_sets, connect_paths=paths)

    def stats(self) -> Dict[str, int]:
        used = set()
        for verts in self.branch_sets.values():
            used.update(verts)
        for verts in self.connect_paths.values():
            used.update(verts)
        return {
            "host_vertices_used": len(used),
            "host_capacity": 1 << self.d,
            "longest_path": max((len(p) for p in self.connect_paths.values()), default=0),
            "detoured_segments": self.detours,
        }


# ============================================================================
# ENRUTADO
# ============================================================================

class _Router:
    """Estado del enrutado paso a paso (tabla de fichas)"""

    def __init__(self, params: EmbedParams):
        self.params = params
        self.temporal = even_cycle_embedding(params.L, params.k_t)
        self.grid_value = [rank_to_vertex(r, params.a).value for r in range(1 << params.a)]
        self.used = set()

    def host(self, rank: int, label: int, spare: int = 0) -> int:
        """Valor entero del vértice de Q_d"""
        value = self.grid_value[rank] | (self.temporal[label].value << self.params.a)
        if spare:
            value |= 1 << (spare - 1)
        return value

    def visit(self, path: List[int], value: int) -> None:
        assert value not in self.used, "los caminos deben ser disjuntos en vértices"
        self.used.add(value)
        path.append(value)


def route_paths(sigma: GridPerm, ports: PortAssignment, params: EmbedParams) -> MinorModel:
    """
    Construye un camino por arista del huésped entre sus dos puertos

    Cada ficha parte del puerto de menor valor entero. En el paso i avanza
    por la arista temporal de la etiqueta i-1 a la i y, si el factor i la
    mueve, por la arista de rejilla correspondiente. Dos fichas que se
    intercambian en el mismo paso se desvían a copias distintas volteando
    una coordenada de reserva cada una. El cierre vuelve a la etiqueta 0,
    que es el puerto destino.
    """
    factors: List[OneDimPerm] = decompose(sigma)
    router = _Router(params)
    steps = params.L - 1

    # ficha -> (arista huésped, rango actual, camino)
    tokens = []
    for u, v in sorted({(min(e), max(e)) for e in ports.ports}):
        pu = ports.port(u, v)
        pv = ports.port(v, u)
        from_u = pu.value <= pv.value
        start, dest = (pu, pv) if from_u else (pv, pu)
        tokens.append({"edge": (u, v), "pos": vertex_to_rank(start), "dest": vertex_to_rank(dest),
                       "reversed": not from_u, "path": []})

    for tok in tokens:
        router.visit(tok["path"], router.host(tok["pos"], 0))

    detours = 0
    for i in range(1, steps + 1):
        image = factors[i - 1].image if i <= len(factors) else None
        new_pos = [int(image[t["pos"]]) if image is not None else t["pos"] for t in tokens]

        where = {t["pos"]: idx for idx, t in enumerate(tokens)}
        spare_of: Dict[int, int] = {}
        s1, s2 = params.spare_pair(i)
        for idx, tok in enumerate(tokens):
            other = where.get(new_pos[idx])
            if other is None or other == idx or idx in spare_of:
                continue
            assert new_pos[other] == tok["pos"], "en rejillas binarias todo choque es un intercambio"
            first, second = sorted(
                (idx, other), key=lambda k: router.grid_value[tokens[k]["pos"]]
            )
            spare_of[first] = s1
            spare_of[second] = s2
        detours += len(spare_of) // 2

        for idx, tok in enumerate(tokens):
            prev, nxt = tok["pos"], new_pos[idx]
            spare = spare_of.get(idx, 0)
            path = tok["path"]
            if spare:
                router.visit(path, router.host(prev, i - 1, spare))
            router.visit(path, router.host(prev, i, spare))
            if nxt != prev:
                router.visit(path, router.host(nxt, i, spare))
            if spare:
                router.visit(path, router.host(nxt, i, 0))
            tok["pos"] = nxt

        if spare_of:
            log.debug("paso %d: %d pares desviados por %s", i, len(spare_of) // 2, (s1, s2))

    d = params.d
    connect_paths: Dict[Edge, List[CubeVertex]] = {}
    for tok in tokens:
        assert tok["pos"] == tok["dest"], "la ficha debe terminar en el puerto opuesto"
        router.visit(tok["path"], router.host(tok["pos"], 0))
        verts = [CubeVertex(d, value) for value in tok["path"]]
        if tok["reversed"]:
            verts.reverse()
        connect_paths[tok["edge"]] = verts

    branch_sets = {
        v: [CubeVertex(d, x.value) for x in arc] for v, arc in ports.arcs.items()
    }
    return MinorModel(d=d, branch_sets=branch_sets, connect_paths=connect_paths,
                      detours=detours, params=params)


def embed(g: GuestGraph, d_opt: Optional[int] = None) -> MinorModel:
    """
    Modelo de menor de g en Q_d

    Args:
        g: grafo huésped simple sin vértices aislados
        d_opt: dimensión del hipercubo; si falta se usa la mínima

    Raises:
        InfeasibleError si d_opt es demasiado pequeña
    """
    params = feasible_params(g.m, d_opt)
    log.info("embed: m=%d a=%d L=%d k_t=%d d=%d", g.m, params.a, params.L, params.k_t, params.d)
    ports = assign_ports(g, params)
    sigma = target_involution(ports, params)
    return route_paths(sigma, ports, params)


__all__ = [
    'GuestGraph',
    'EmbedParams',
    'PortAssignment',
    'MinorModel',
    'complete_graph',
    'path_graph',
    'cycle_graph',
    'star_graph',
    'petersen_graph',
    'random_guest',
    'feasible_params',
    'max_edges_for_dimension',
    'assign_ports',
    'target_involution',
    'route_paths',
    'embed',
    'vertex_to_rank',
    'rank_to_vertex',
    'ceil_log2',
]
