"""
Embedding Report Component
Texto plano / JSON para parámetros, embebidos, verificación y descomposición
"""

from typing import Optional, Sequence

import numpy as np
import pandas as pd

from modules.grid_perm import OneDimPerm
from modules.minor_embed import EmbedParams, MinorModel
from modules.verifier import VerifyReport
from utils.helpers import dumps_json, format_rational


def render_params(params: EmbedParams, m: int, mode: str = "plain") -> str:
    """Parámetros elegidos (a, L, k_t, d)"""
    data = {"m": m, **params.to_dict()}
    if mode == "json":
        return dumps_json(data)
    return f"m={m} a={params.a} L={params.L} k_t={params.k_t} d={params.d} (mínima {params.minimal_d})"


def render_embedding(model: MinorModel, m: int, mode: str = "plain") -> str:
    """
    Resumen de un embebido recién construido

    Args:
        model: modelo devuelto por embed
        m: número de aristas del huésped
        mode: "plain" o "json"
    """
    stats = model.stats()
    if mode == "json":
        params = model.params.to_dict() if model.params else {"d": model.d}
        return dumps_json({"m": m, "params": params, "stats": stats})

    lines = []
    if model.params is not None:
        lines.append(render_params(model.params, m))
    table = pd.DataFrame([stats]).T.rename(columns={0: "valor"})
    lines.append(table.to_string())
    return "\n".join(lines)


def render_verify(report: VerifyReport, mode: str = "plain") -> str:
    if mode == "json":
        return dumps_json(report.to_dict())
    if report.valid:
        return "válido"
    lines = [f"inválido: {len(report.violations)} violaciones"]
    lines.extend(f"{code}: {detail}" for code, detail in report.violations)
    return "\n".join(lines)


def render_decompose(factors: Sequence[OneDimPerm], checked: Optional[bool] = None, mode: str = "plain") -> str:
    """Una fila por factor: dirección y número de líneas movidas"""
    rows = [
        {
            "factor": i,
            "direction": f.direction,
            "moved_lines": sum(1 for row in f.line_perms if not np.array_equal(row, np.arange(len(row)))),
        }
        for i, f in enumerate(factors, start=1)
    ]
    if mode == "json":
        return dumps_json({"factors": rows, "checked": checked})
    out = pd.DataFrame(rows).to_string(index=False)
    if checked is not None:
        out += f"\ncomposición {'correcta' if checked else 'INCORRECTA'}"
    return out


def render_capacity(d: int, m: int, c_eff, mode: str = "plain") -> str:
    if mode == "json":
        return dumps_json({"d": d, "max_edges": m, "c_eff": c_eff})
    return f"d={d} m_max={m} c_eff={format_rational(c_eff)}"


__all__ = [
    'render_params',
    'render_embedding',
    'render_verify',
    'render_decompose',
    'render_capacity',
]
