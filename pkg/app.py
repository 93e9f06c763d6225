"""
hyperminor
Embebidos de menores en el hipercubo Q_d y cotas por expansión

Uso:
    python app.py embed -i graph.txt [-d D] -o model.json
    python app.py verify -i graph.txt -m model.json
    python app.py decompose --shape 4,4 -i perm.txt -o factors.txt [--check]
    python app.py expander gen|check|survey ...
    python app.py bound place|certify|theorem|tail|scan ...
    python app.py params --m M [-d D]
    python app.py capacity --d D

Códigos de salida: 0 éxito, 1 verificación negativa, 2 error de entrada.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from modules.expander import (
    CubicGraph, Placement, bound_report, check_expansion, expansion_survey, gen_cubic,
    subcubic_nonminor_certificate, theorem_inequality, theorem_scan, weight_tail,
    weight_tail_threshold
)
from modules.grid_perm import GridShape, compose_equals, decompose, read_perm_file, write_factors
from modules.minor_embed import (
    GuestGraph, MinorModel, embed, feasible_params, max_edges_for_dimension
)
from modules.verifier import verify

from components.embedding_report import (
    render_capacity, render_decompose, render_embedding, render_params, render_verify
)
from components.expander_report import (
    render_bound, render_certificate, render_expansion, render_scan, render_survey,
    render_tail, render_theorem
)

from utils import (
    HyperminorError, ValidationError, dumps_json, format_edge_list, load_config,
    parse_edge_list, parse_int_list, parse_placement, parse_rational, setup_logging,
    verbosity_level
)

log = logging.getLogger("hyperminor.cli")


# ============================================================================
# LECTURA DE FICHEROS
# ============================================================================

def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_guest(path: str) -> GuestGraph:
    return GuestGraph.from_edges(parse_edge_list(_read_text(path)))


def load_cubic(path: str) -> CubicGraph:
    return CubicGraph.from_edges(parse_edge_list(_read_text(path)))


def load_model(path: str) -> MinorModel:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path}: JSON inválido ({e.msg}, línea {e.lineno})")
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: se esperaba un objeto JSON")
    return MinorModel.from_json(data)


# ============================================================================
# SUBCOMANDOS
# ============================================================================

def cmd_embed(args, config) -> int:
    g = load_guest(args.input)
    model = embed(g, args.d)
    Path(args.output).write_text(dumps_json(model.to_json()) + "\n", encoding="utf-8")
    print(render_embedding(model, g.m, config.output))
    return 0


def cmd_verify(args, config) -> int:
    g = load_guest(args.input)
    model = load_model(args.model)
    report = verify(g, model)
    if config.output == "json":
        print(render_verify(report, "json"))
    elif report.valid:
        print(render_verify(report))
    if not report.valid:
        for code, detail in report.violations:
            print(f"{code}: {detail}", file=sys.stderr)
        return 1
    return 0


def cmd_decompose(args, config) -> int:
    shape = GridShape.parse(args.shape)
    sigma = read_perm_file(args.input, shape)
    factors = decompose(sigma)
    write_factors(args.output, factors)
    checked = compose_equals(factors, sigma) if args.check else None
    print(render_decompose(factors, checked, config.output))
    return 1 if checked is False else 0


def cmd_expander_gen(args, config) -> int:
    seed = config.seed if args.seed is None else args.seed
    g = gen_cubic(args.n2, seed, config.cubic_max_resamples)
    header = f"cubic two_n={g.two_n} seed={seed}"
    Path(args.output).write_text(format_edge_list(g.edges, header), encoding="utf-8")
    if config.output == "json":
        print(dumps_json({"two_n": g.two_n, "seed": seed, "edges": g.edges}))
    else:
        print(header)
    return 0


def cmd_expander_check(args, config) -> int:
    g = load_cubic(args.input)
    beta = parse_rational(args.beta) if args.beta else config.beta_fraction
    report = check_expansion(g, beta, config.expansion_limit)
    print(render_expansion(report, config.output))
    return 0 if report.passes else 1


def cmd_expander_survey(args, config) -> int:
    seed = config.seed if args.seed is None else args.seed
    beta = parse_rational(args.beta) if args.beta else config.beta_fraction
    table = expansion_survey(parse_int_list(args.sizes), args.samples, seed, beta)
    print(render_survey(table, config.output))
    return 0


def cmd_bound_place(args, config) -> int:
    g = load_guest(args.input)
    placement = Placement.from_texts(parse_placement(_read_text(args.placement)))
    beta = parse_rational(args.beta) if args.beta else config.beta_fraction
    print(render_bound(bound_report(g, placement, args.d, beta), config.output))
    return 0


def cmd_bound_certify(args, config) -> int:
    g = load_guest(args.input)
    report = subcubic_nonminor_certificate(
        g, args.d, config.certificate_max_vertices, config.certificate_max_d
    )
    print(render_certificate(report, config.output))
    return 0


def cmd_bound_theorem(args, config) -> int:
    print(render_theorem(theorem_inequality(args.d), config.output))
    return 0


def cmd_bound_tail(args, config) -> int:
    print(render_tail(args.d, weight_tail(args.d), config.output))
    return 0


def cmd_bound_scan(args, config) -> int:
    print(render_scan(args.max_d, theorem_scan(args.max_d), weight_tail_threshold(args.max_d),
                      config.output))
    return 0


def cmd_params(args, config) -> int:
    print(render_params(feasible_params(args.m, args.d), args.m, config.output))
    return 0


def cmd_capacity(args, config) -> int:
    m, c_eff = max_edges_for_dimension(args.d)
    print(render_capacity(args.d, m, c_eff, config.output))
    return 0


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperminor",
        description="Embebidos de menores en Q_d y cotas por expansión.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output_mode", action="store_const", const="json",
                     help="Salida JSON")
    fmt.add_argument("--plain", dest="output_mode", action="store_const", const="plain",
                     help="Salida en texto plano")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v INFO, -vv DEBUG")
    parser.add_argument("--config", help="Fichero YAML de configuración")
    sub = parser.add_subparsers(dest="command")

    # -- embed --
    p = sub.add_parser("embed", help="Construye un modelo de menor en Q_d")
    p.add_argument("-i", "--input", required=True, help="Lista de aristas del huésped")
    p.add_argument("-d", type=int, help="Dimensión (por defecto la mínima)")
    p.add_argument("-o", "--output", required=True, help="Modelo JSON de salida")
    p.set_defaults(func=cmd_embed)

    # -- verify --
    p = sub.add_parser("verify", help="Verifica un modelo de menor")
    p.add_argument("-i", "--input", required=True, help="Lista de aristas del huésped")
    p.add_argument("-m", "--model", required=True, help="Modelo JSON")
    p.set_defaults(func=cmd_verify)

    # -- decompose --
    p = sub.add_parser("decompose", help="Factoriza una permutación de rejilla")
    p.add_argument("--shape", required=True, help="n1,n2,...")
    p.add_argument("-i", "--input", required=True, help="Fichero de permutación")
    p.add_argument("-o", "--output", required=True, help="Fichero de factores")
    p.add_argument("--check", action="store_true", help="Comprueba la composición")
    p.set_defaults(func=cmd_decompose)

    # -- expander --
    p_exp = sub.add_parser("expander", help="Grafos cúbicos y expansión")
    exp = p_exp.add_subparsers(dest="action")
    p = exp.add_parser("gen", help="Grafo cúbico aleatorio")
    p.add_argument("--n2", type=int, required=True, help="Número de vértices (par, >= 4)")
    p.add_argument("--seed", type=int, help="Semilla (por defecto la de la configuración)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_expander_gen)
    p = exp.add_parser("check", help="Expansión por fuerza bruta")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--beta", help="Razón p/q (por defecto 9/50)")
    p.set_defaults(func=cmd_expander_check)
    p = exp.add_parser("survey", help="Fracción de grafos aleatorios que expanden")
    p.add_argument("--sizes", default="10,12,14")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--beta")
    p.set_defaults(func=cmd_expander_survey)

    # -- bound --
    p_bound = sub.add_parser("bound", help="Cotas por conteo")
    bound = p_bound.add_subparsers(dest="action")
    p = bound.add_parser("place", help="Cota de una colocación concreta")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-p", "--placement", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--beta")
    p.set_defaults(func=cmd_bound_place)
    p = bound.add_parser("certify", help="Certificado de no-menor por fuerza bruta")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound_certify)
    p = bound.add_parser("theorem", help="Desigualdad final para un d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound_theorem)
    p = bound.add_parser("tail", help="Cadenas con a lo sumo d/4 unos")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound_tail)
    p = bound.add_parser("scan", help="Umbrales de la desigualdad y de la cola")
    p.add_argument("--max-d", type=int, required=True)
    p.set_defaults(func=cmd_bound_scan)

    # -- params / capacity --
    p = sub.add_parser("params", help="Parámetros factibles para m aristas")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-d", type=int)
    p.set_defaults(func=cmd_params)
    p = sub.add_parser("capacity", help="Aristas máximas para Q_d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_capacity)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Punto de entrada de la CLI

    Returns:
        0 éxito, 1 verificación negativa, 2 error de entrada o de uso
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return 2

    try:
        config = load_config(args.config).merged({"output": args.output_mode})
        setup_logging(verbosity_level(args.verbose, config.log_level))
        log.debug("comando %s con %s", args.command, config)
        return args.func(args, config)
    except (HyperminorError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
