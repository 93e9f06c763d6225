"""
Expander Report Component
Texto plano / JSON para expansión, cotas por conteo y aritmética final
"""

from typing import Optional, Tuple

import pandas as pd

from modules.expander import BoundReport, CertificateReport, ExpansionReport, TheoremReport
from utils.helpers import dumps_json, format_big_int, format_rational


def render_expansion(report: ExpansionReport, mode: str = "plain") -> str:
    if mode == "json":
        return dumps_json(report.to_dict())
    status = "cumple" if report.passes else "NO cumple"
    worst = ",".join(str(v) for v in sorted(report.worst_set))
    return (f"{status} beta={format_rational(report.beta)} "
            f"peor razón={format_rational(report.worst_ratio)} S={{{worst}}}")


def render_survey(table: pd.DataFrame, mode: str = "plain") -> str:
    """Tabla de la encuesta de expansión; las fracciones van como p/q"""
    shown = table.copy()
    shown["fraction"] = shown["fraction"].map(format_rational)
    if mode == "json":
        return dumps_json(shown.to_dict(orient="records"))
    return shown.to_string(index=False)


def render_bound(report: BoundReport, mode: str = "plain") -> str:
    """
    Cota por conteo de una colocación

    En texto plano se añade una tabla por coordenada con |E_i| y |S_i|.
    """
    if mode == "json":
        return dumps_json(report.to_dict())
    lines = [
        f"hamming_sum={report.hamming_sum} lower_bound={report.lower_bound} "
        f"host_capacity={report.host_capacity}",
        f"weight_sum={report.weight_sum} "
        f"cota por expansión={format_rational(report.expansion_lower_bound)}",
    ]
    per_bit = pd.DataFrame({
        "bit": range(1, len(report.cut_sizes) + 1),
        "E_i": report.cut_sizes,
        "S_i": report.side_sizes,
        "E_i >= beta*S_i": report.cut_expansion_ok,
    })
    lines.append(per_bit.to_string(index=False))
    return "\n".join(lines)


def render_certificate(report: CertificateReport, mode: str = "plain") -> str:
    if mode == "json":
        return dumps_json(report.to_dict())
    if report.certified and report.min_lower_bound is None:
        return f"certificado: más vértices que Q_d ({report.host_capacity})"
    verdict = "certificado: no es menor" if report.certified else "no concluyente"
    return (f"{verdict} (cota mínima {report.min_lower_bound} vs {report.host_capacity}, "
            f"{report.placements_checked} colocaciones)")


def render_theorem(report: TheoremReport, mode: str = "plain") -> str:
    if mode == "json":
        return dumps_json(report.to_dict())
    lo, hi = report.order_interval
    return "\n".join([
        f"d={report.d} holds={str(report.holds).lower()} tail_ok={str(report.tail_ok).lower()}",
        f"lhs={format_big_int(int(report.lhs))} rhs={format_big_int(report.rhs)}",
        f"2n en [{format_big_int(lo)}, {format_big_int(hi)}]",
    ])


def render_tail(d: int, value: int, mode: str = "plain") -> str:
    if mode == "json":
        return dumps_json({"d": d, "weight_tail": value})
    return f"d={d} weight_tail={value}"


def render_scan(d_max: int, theorem_d: Optional[int], tail: Tuple[Optional[int], Optional[int]],
                mode: str = "plain") -> str:
    first, stable = tail
    data = {"max_d": d_max, "theorem_min_d": theorem_d, "tail_first_d": first, "tail_stable_from": stable}
    if mode == "json":
        return dumps_json(data)
    return "\n".join(f"{k}={'-' if v is None else v}" for k, v in data.items())


__all__ = [
    'render_expansion',
    'render_survey',
    'render_bound',
    'render_certificate',
    'render_theorem',
    'render_tail',
    'render_scan',
]
