"""
Smoke tests para hyperminor
Verifica que todos los módulos cargan y el flujo básico funciona
"""
import os
import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_imports():
    """Test que todos los módulos se pueden importar"""
    errors = []

    # Modules
    try:
        from modules.hypercube_core import CubeVertex, gray_cycle, even_cycle_embedding
    except Exception as e:
        errors.append(f"hypercube_core: {e}")

    try:
        from modules.grid_perm import GridShape, GridPerm, decompose, compose_equals
    except Exception as e:
        errors.append(f"grid_perm: {e}")

    try:
        from modules.minor_embed import GuestGraph, embed, feasible_params
    except Exception as e:
        errors.append(f"minor_embed: {e}")

    try:
        from modules.verifier import verify, ViolationCode
    except Exception as e:
        errors.append(f"verifier: {e}")

    try:
        from modules.expander import gen_cubic, check_expansion, theorem_inequality
    except Exception as e:
        errors.append(f"expander: {e}")

    # Utils
    try:
        from utils import (
            HyperminorError, parse_edge_list, parse_rational, load_config, setup_logging
        )
    except Exception as e:
        errors.append(f"utils: {e}")

    if errors:
        print("❌ Import errors:")
        for err in errors:
            print(f"  - {err}")
    assert not errors, errors
    print("✅ All imports successful")


def test_validation_functions():
    """Test funciones de validación"""
    from fractions import Fraction
    from utils.validation import parse_edge_list, parse_int_list, parse_rational

    assert parse_edge_list("# K2\n0 1\n") == [(0, 1)]
    assert parse_rational("0.18") == Fraction(9, 50)
    assert parse_int_list("10, 12,14") == [10, 12, 14]
    print("✅ Validation functions working correctly")


def test_embed_and_verify():
    """Embebido mínimo de K_2 y verificación"""
    from modules.minor_embed import complete_graph, embed
    from modules.verifier import verify

    g = complete_graph(2)
    model = embed(g)
    assert model.d == 8
    assert verify(g, model).valid
    print(f"✅ K2 embebido en Q_{model.d}")


def test_decompose():
    """Factorización de una permutación de rejilla pequeña"""
    from modules.grid_perm import GridPerm, GridShape, compose_equals, decompose

    sigma = GridPerm.random(GridShape((4, 4)), seed=1)
    factors = decompose(sigma)
    assert len(factors) == 3
    assert compose_equals(factors, sigma)
    print("✅ decompose working correctly")


def test_theorem_arithmetic():
    """La desigualdad final cambia de signo en d = 2001"""
    from modules.expander import theorem_inequality

    assert not theorem_inequality(2000).holds
    assert theorem_inequality(2001).holds
    print("✅ theorem_inequality working correctly")


def run_all_tests():
    """Ejecuta todos los tests"""
    print("\n" + "="*50)
    print("🧪 HYPERMINOR - SMOKE TESTS")
    print("="*50 + "\n")

    checks = [
        ("Imports", test_imports),
        ("Validation Functions", test_validation_functions),
        ("Embed + Verify", test_embed_and_verify),
        ("Decompose", test_decompose),
        ("Theorem Arithmetic", test_theorem_arithmetic),
    ]
    results = []
    for name, fn in checks:
        try:
            fn()
            results.append((name, True))
        except Exception as e:
            print(f"❌ {name}: {e}")
            results.append((name, False))

    print("\n" + "="*50)
    print("📊 RESULTADOS")
    print("="*50)

    passed = sum(1 for _, r in results if r)
    total = len(results)

    for name, result in results:
        status = "✅" if result else "❌"
        print(f"  {status} {name}")

    print(f"\n  Total: {passed}/{total} tests passed")
    print("="*50 + "\n")

    return passed == total


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
