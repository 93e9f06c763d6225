"""
hyperminor - Report Components
Renderizadores de informes en texto plano y JSON
"""

from .embedding_report import (
    render_params,
    render_embedding,
    render_verify,
    render_decompose,
    render_capacity
)
from .expander_report import (
    render_expansion,
    render_survey,
    render_bound,
    render_certificate,
    render_theorem,
    render_tail,
    render_scan
)
