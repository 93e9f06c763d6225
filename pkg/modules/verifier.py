"""
Minor Model Verifier
Certificación independiente de que un MinorModel es un modelo de menor válido

Sólo usa la adyacencia de hypercube_core; no conoce cómo se construyó el
modelo. Los modelos mal formados producen violaciones, nunca excepciones.
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Set, Tuple

from .hypercube_core import CubeVertex, neighbors
from .minor_embed import GuestGraph, MinorModel


class ViolationCode(Enum):
    """Tipos de violación, en el orden en que se comprueban"""
    BAD_VERTEX_WIDTH = "BadVertexWidth"
    BRANCH_DISCONNECTED = "BranchDisconnected"
    BRANCH_OVERLAP = "BranchOverlap"
    PATH_NOT_PATH = "PathNotPath"
    PATH_ENDPOINT_WRONG = "PathEndpointWrong"
    PATH_INTERNAL_HITS_BRANCH = "PathInternalHitsBranch"
    PATHS_INTERSECT = "PathsIntersect"
    EDGE_MISSING = "EdgeMissing"


@dataclass
class VerifyReport:
    """Resultado de la verificación: válido si y sólo si no hay violaciones"""
    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def codes(self) -> Set[str]:
        return {code for code, _ in self.violations}

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"code": c, "detail": d} for c, d in self.violations],
        }


def _adjacent(u: CubeVertex, v: CubeVertex) -> bool:
    return u.width == v.width and bin(u.value ^ v.value).count("1") == 1


def _connected(vertices: Set[CubeVertex]) -> bool:
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in neighbors(x):
            if y in vertices and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(vertices)


def verify(g: GuestGraph, model: MinorModel) -> VerifyReport:
    """
    Comprueba un modelo de menor de g en Q_d

    Orden de las comprobaciones: anchos, conexión de los conjuntos rama,
    disjunción entre ramas, un camino por arista, caminos simples, extremos
    en las ramas correctas, interiores fuera de toda rama, caminos
    disjuntos entre sí (incluidos los extremos).

    Returns:
        VerifyReport con todas las violaciones encontradas, ordenadas
    """
    found: List[Tuple[str, str]] = []

    def report(code: ViolationCode, detail: str) -> None:
        found.append((code.value, detail))

    d = model.d

    # Anchos
    for v, verts in model.branch_sets.items():
        for x in verts:
            if x.width != d:
                report(ViolationCode.BAD_VERTEX_WIDTH, f"rama {v}: {x.text} no tiene ancho {d}")
    for edge, verts in model.connect_paths.items():
        for x in verts:
            if x.width != d:
                report(ViolationCode.BAD_VERTEX_WIDTH, f"camino {edge}: {x.text} no tiene ancho {d}")

    # Conjuntos rama
    branch: Dict[int, Set[CubeVertex]] = {}
    for v in range(g.n_vertices):
        verts = set(model.branch_sets.get(v, []))
        branch[v] = verts
        if not verts:
            report(ViolationCode.BRANCH_DISCONNECTED, f"rama {v} vacía")
        elif not _connected(verts):
            report(ViolationCode.BRANCH_DISCONNECTED, f"rama {v} no es conexa")
    for v, verts in model.branch_sets.items():
        if v not in branch:
            branch[v] = set(verts)

    owner: Dict[CubeVertex, int] = {}
    for v in sorted(branch):
        for x in sorted(branch[v]):
            if x in owner:
                report(ViolationCode.BRANCH_OVERLAP, f"{x.text} en las ramas {owner[x]} y {v}")
            else:
                owner[x] = v

    # Un camino por arista
    paths: Dict[Tuple[int, int], List[CubeVertex]] = {}
    guest_edges = set(g.edges)
    for (u, v), verts in model.connect_paths.items():
        key = (min(u, v), max(u, v))
        if key not in guest_edges:
            report(ViolationCode.PATH_ENDPOINT_WRONG, f"camino para la no-arista {(u, v)}")
            continue
        if key in paths:
            report(ViolationCode.PATH_ENDPOINT_WRONG, f"más de un camino para la arista {key}")
            continue
        paths[key] = list(verts) if (u, v) == key else list(reversed(verts))
    for key in sorted(guest_edges - set(paths)):
        report(ViolationCode.EDGE_MISSING, f"falta el camino de la arista {key}")

    # Cada camino por separado
    for (u, v), verts in sorted(paths.items()):
        if len(verts) < 2:
            report(ViolationCode.PATH_NOT_PATH, f"camino {(u, v)} con menos de dos vértices")
            continue
        if len(set(verts)) != len(verts):
            report(ViolationCode.PATH_NOT_PATH, f"camino {(u, v)} repite vértices")
        for a, b in zip(verts, verts[1:]):
            if not _adjacent(a, b):
                report(ViolationCode.PATH_NOT_PATH, f"camino {(u, v)}: {a.text}-{b.text} no es arista")
                break
        if verts[0] not in branch.get(u, ()) or verts[-1] not in branch.get(v, ()):
            report(ViolationCode.PATH_ENDPOINT_WRONG,
                   f"camino {(u, v)}: extremos {verts[0].text}, {verts[-1].text}")
        for x in verts[1:-1]:
            if x in owner:
                report(ViolationCode.PATH_INTERNAL_HITS_BRANCH,
                       f"camino {(u, v)}: {x.text} pertenece a la rama {owner[x]}")

    # Disjunción entre caminos
    used_by: Dict[CubeVertex, Tuple[int, int]] = {}
    for key, verts in sorted(paths.items()):
        for x in set(verts):
            other = used_by.get(x)
            if other is not None and other != key:
                report(ViolationCode.PATHS_INTERSECT, f"{x.text} en los caminos {other} y {key}")
            else:
                used_by[x] = key

    return VerifyReport(violations=sorted(found))


__all__ = ['ViolationCode', 'VerifyReport', 'verify']
