mod common;

use acyt::analysis::{analyze, Analysis};
use acyt::catalog::get_entry;
use acyt::exterior::Form;
use acyt::instanton::{verify_hull_theorem, verify_main_theorem};
use acyt::liealg::LieAlgebra6;
use acyt::su3::SU3Structure;
use acyt::Scalar;

/// Quantities that do not depend on the choice of orthonormal frame.
#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    g1: bool,
    hermitian: bool,
    balanced: bool,
    acyt: bool,
    instanton: bool,
    hull_instanton: bool,
    nabla_t_zero: bool,
    dt_zero: bool,
    holonomy_dim: usize,
    scal: Scalar,
    scal_g: Scalar,
    t_norm: Scalar,
    theta_norm: Scalar,
    einstein: Option<Scalar>,
}

fn invariants(a: &Analysis) -> Invariants {
    let ta = a.torsion.as_ref().expect("G1");
    Invariants {
        g1: a.class.is_g1,
        hermitian: a.class.is_hermitian,
        balanced: a.class.is_balanced,
        acyt: ta.acyt.is_acyt(),
        instanton: ta.instanton.first_pair_su3,
        hull_instanton: ta.instanton.hull_instanton,
        nabla_t_zero: ta.instanton.nabla_t_zero,
        dt_zero: ta.instanton.dt_zero,
        holonomy_dim: ta.instanton.holonomy_dim,
        scal: ta.curvature.scal.clone(),
        scal_g: ta.curvature.scal_g.clone(),
        t_norm: ta.t.norm_sq(),
        theta_norm: ta.theta.norm_sq(),
        einstein: ta.einstein.clone(),
    }
}

fn check_instance(label: &str, g: &LieAlgebra6, s: &SU3Structure) -> Analysis {
    let a = analyze(g, s).unwrap_or_else(|e| panic!("{label}: {e}"));
    assert!(a.consistency_failures().is_empty(), "{label}: {:?}", a.consistency_failures());
    let ta = a.torsion.as_ref().expect("G1");
    let acyt = &ta.acyt;
    assert_eq!(acyt.rho_zero, acyt.cycon_plus_ok && acyt.cycon_minus_ok, "{label}");
    assert_eq!(acyt.rho_zero, acyt.nabla_psi_zero, "{label}");
    for th in [&ta.main_theorem, &ta.main_theorem_compact, &ta.hull_theorem] {
        assert!(!th.applicable || th.holds(), "{label}: {th:?}");
    }
    a
}

#[test]
fn theorem_suite_on_catalog() {
    for name in acyt::catalog::NAMES {
        let entry = get_entry(name, &[]).unwrap();
        let a = check_instance(name, &entry.algebra, &entry.structure);
        assert!(a.torsion.unwrap().acyt.is_acyt(), "{name}");
        let main = verify_main_theorem(&entry.algebra, &entry.structure).unwrap();
        assert!(main.applicable && main.holds(), "{name}");
        let hull = verify_hull_theorem(&entry.algebra, &entry.structure).unwrap();
        assert!(hull.applicable && hull.holds(), "{name}");
    }
}

#[test]
fn theorem_suite_on_fuzzed_acyt_instances() {
    let mut applicable = 0;
    for (label, g, s) in common::acyt_instances(42) {
        let a = check_instance(&label, &g, &s);
        let ta = a.torsion.as_ref().unwrap();
        assert!(ta.acyt.is_acyt(), "{label}");
        if ta.main_theorem.applicable {
            applicable += 1;
        }
    }
    assert!(applicable >= 30, "only {applicable} instances with nabla theta = 0");
}

#[test]
fn isometric_transport_preserves_invariants() {
    let mut r = common::rng(9);
    for n in 0..12 {
        let entry = if n % 4 == 3 {
            get_entry("nilp_noncomplex", &[]).unwrap()
        } else {
            common::random_entry(&mut r)
        };
        let base = analyze(&entry.algebra, &entry.structure).unwrap();
        let phi = common::cayley(&mut r);
        let (g, s) = common::transport(&entry.algebra, &entry.structure, &phi);
        let moved = analyze(&g, &s).unwrap();
        assert_eq!(invariants(&base), invariants(&moved), "{} #{n}", entry.name);
        let t0 = &base.torsion.as_ref().unwrap().t;
        assert_eq!(&t0.pullback(&phi), &moved.torsion.as_ref().unwrap().t, "{} #{n}", entry.name);
    }
}

#[test]
fn cyt_with_nonzero_lee_form() {
    let g = common::su2_su2(1);
    let a = check_instance("su2+su2", &g, &SU3Structure::standard());
    let ta = a.torsion.as_ref().unwrap();
    assert!(a.class.is_hermitian && !a.class.is_balanced);
    assert!(ta.acyt.is_acyt());
    assert!(!ta.theta.is_zero());
    assert!(ta.instanton.dt_zero && ta.instanton.hull_instanton);
    let chern = ta.chern.as_ref().unwrap();
    assert!(chern.norm_identity_ok && chern.trace_identity_ok);
    assert!(ta.delta.as_ref().unwrap().all_passed());
}

#[test]
fn non_acyt_kahler_routes_agree() {
    let mut d: [Form; 6] = std::array::from_fn(|_| Form::zero(2));
    d[0] = acyt::exterior::e(&[1, 2]);
    let g = LieAlgebra6::new(d).unwrap();
    let a = check_instance("aff", &g, &SU3Structure::standard());
    let ta = a.torsion.as_ref().unwrap();
    assert!(a.class.is_kahler);
    assert!(!ta.acyt.is_acyt());
    assert!(!ta.main_theorem.applicable && !ta.hull_theorem.applicable);
    assert!(ta.delta.is_none());
    assert_eq!(a.predicate_status(), 1);
}

#[test]
fn non_g1_has_no_torsion_section() {
    let a = analyze(&common::non_g1(), &SU3Structure::standard()).unwrap();
    assert!(!a.class.is_g1);
    assert!(a.torsion.is_none());
    assert_eq!(a.predicate_status(), 1);
}
