import sys
import os
sys.path.insert(0, os.path.abspath('.'))

from src.cli.brauer import brauer_record
from src.core.log import configure_logging
from src.defo import build_j_ideal, matrix_power_closed_form, verify_power_lemma
from src.deformation import VerificationOptions, build_universal_lift_for, udr_presentation, verify_case
from src.nakayama import NakayamaSpec, ext1_dim, syzygy
from src.oracle import check_representability, tangent_dimension
from src.ring import TestRingFactory


def demo_structured_matrices():
    """Powers of N_n and the ideals J_n(m)"""
    print("\n🔢 Structured matrices")
    print("=" * 50)
    print(f"N_2^2 = {matrix_power_closed_form(2, 2).to_text()}")
    for n, m in [(1, 3), (2, 3), (2, 4), (3, 4)]:
        print(f"J_{n}({m}) = ({', '.join(build_j_ideal(n, m).text())})")
    report = verify_power_lemma(3, 8)
    print(f"power lemma n=3, ν<=8: {'✅' if report.passed else '❌'} ({len(report.checks)} checks)")


def demo_table(e: int, ell: int):
    """Every indecomposable module of N(e, ℓ) with its deformation ring"""
    spec = NakayamaSpec(e, ell)
    print(f"\n📋 Deformation rings over {spec}")
    print("=" * 50)
    for V in spec.modules():
        presentation = udr_presentation(V)
        partner = "-" if V.is_projective else str(syzygy(V).key)
        ext = "-" if V.is_projective else ext1_dim(V)
        print(f"  {V.key}  Ext1={ext}  Ω={partner:<8} {presentation.text}  (dim {presentation.k_dimension})")


def demo_universal_lift():
    """The explicit universal lift for a two-parameter ring"""
    V = NakayamaSpec(3, 13).module(1, 6)
    lift = build_universal_lift_for(V)
    print(f"\n🧮 Universal lift of {V}")
    print("=" * 50)
    print(f"ring: {udr_presentation(V).text}")
    for v in range(1, V.spec.e + 1):
        print(f"  α_{v} = {lift.arrow(v).to_text()}")


def demo_checks():
    """Symbolic verification and the finite oracle"""
    print("\n🔍 Checks")
    print("=" * 50)
    V = NakayamaSpec(2, 5).module(1, 2)
    report = verify_case(V, VerificationOptions(centralizer=False))
    print(f"{V}: {len(report.checks)} checks, {'✅ passed' if report.passed else '❌ failed'}")

    dual = TestRingFactory.create_ring("dual-numbers")
    oracle = check_representability(V, udr_presentation(V), dual)
    print(f"|Def(V, k[ε])| = {oracle.observations['deformations']}, "
          f"|Hom(R, k[ε])| = {oracle.observations['homomorphisms']}")
    print(f"tangent dimension: {tangent_dimension(V)}")

    record = brauer_record(3, 2, 2)
    print(f"Brauer tree e=3, m=2, d=2: n={record.n} m_V={record.m_v} {record.generators}")


def main():
    configure_logging("WARNING", "text")
    print("🚀 Universal deformation rings of self-injective Nakayama algebras")
    try:
        demo_structured_matrices()
        demo_table(2, 5)
        demo_table(3, 7)
        demo_universal_lift()
        demo_checks()
        print("\n🎉 Demo completed!")
    except KeyboardInterrupt:
        print("\n\n⚠️  Demo interrupted by user")
    except Exception as e:
        print(f"\n❌ Demo failed: {e}")
        import traceback
        traceback.print_exc()


if __name__ == "__main__":
    main()
