//! Full analysis of one (Lie algebra, SU(3)-structure) pair, and comparison
//! of the result against a catalog entry's expected table.

use crate::catalog::{CatalogEntry, Convention, Expected};
use crate::connection::{
    d_nabla_t, einstein_check, sigma_t, torsion_connection, verify_curvature_identities,
    CurvatureData, IdentityReport,
};
use crate::error::Error;
use crate::exterior::{Form, Tensor};
use crate::instanton::{
    acyt_consequences, chern_appendix_checks, delta_torsion_identities, instanton_report, is_acyt,
    verify_hull_theorem, verify_main_theorem, verify_main_theorem_compact, AcytReport, ChernReport,
    DeltaTorsionReport, InstantonReport, TheoremReport,
};
use crate::liealg::LieAlgebra6;
use crate::su3::{classify, lambda_mu, nijenhuis, validate_su3, ClassFlags, Nijenhuis, SU3Structure};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub algebra: LieAlgebra6,
    pub structure: SU3Structure,
    pub unimodular: bool,
    pub su3_checks: Vec<(&'static str, bool)>,
    pub class: ClassFlags,
    pub nijenhuis: Nijenhuis,
    pub df: Form,
    pub dpsi_plus: Form,
    pub dpsi_minus: Form,
    /// Absent when the structure is not G1.
    pub torsion: Option<TorsionAnalysis>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionAnalysis {
    pub t: Form,
    pub dt: Form,
    pub sigma: Form,
    pub d_nabla_t: Form,
    pub gamma: Tensor,
    pub theta: Form,
    pub lambda: Scalar,
    pub mu: Scalar,
    pub curvature: CurvatureData,
    /// `Some(c)` when `Ric = c·g`.
    pub einstein: Option<Scalar>,
    pub acyt: AcytReport,
    pub instanton: InstantonReport,
    pub identities: IdentityReport,
    pub main_theorem: TheoremReport,
    pub main_theorem_compact: TheoremReport,
    pub hull_theorem: TheoremReport,
    /// Only on ACYT input.
    pub delta: Option<DeltaTorsionReport>,
    pub consequences: Option<Vec<(&'static str, bool)>>,
    /// Only on Hermitian input.
    pub chern: Option<ChernReport>,
}

impl Analysis {
    /// Exit status for a completed analysis: 0 when G1 and ACYT, 1 otherwise.
    pub fn predicate_status(&self) -> i32 {
        match &self.torsion {
            Some(t) if t.acyt.is_acyt() => 0,
            _ => 1,
        }
    }

    /// Failures that indicate a broken identity rather than a geometric
    /// finding.
    pub fn consistency_failures(&self) -> Vec<String> {
        let Some(ta) = &self.torsion else {
            return vec![];
        };
        let mut out: Vec<String> = ta
            .identities
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("identity {}", c.name))
            .collect();
        for (name, ok) in ta.delta.iter().flat_map(|d| d.checks.iter()) {
            if !ok {
                out.push(format!("codifferential identity {name}"));
            }
        }
        for (name, ok) in ta.consequences.iter().flatten() {
            if !ok {
                out.push(format!("ACYT consequence {name}"));
            }
        }
        if let (Some(c), true) = (&ta.chern, ta.acyt.is_acyt()) {
            if !(c.norm_identity_ok && c.trace_identity_ok && c.chern_torsion_is_c) {
                out.push("Chern identities".into());
            }
        }
        out
    }
}

/// Runs every computation the engine offers on `(g, s)`. Invalid input is an
/// error; a structure outside G1 yields an analysis without the torsion part.
pub fn analyze(g: &LieAlgebra6, s: &SU3Structure) -> Result<Analysis, Error> {
    if let Err(v) = g.validate() {
        return Err(Error::InvalidAlgebra(format!(
            "Jacobi identity fails: d(d e{}) = {}",
            v.k,
            v.dd.render()
        )));
    }
    let validation = validate_su3(s);
    if let Some(first) = validation.first_violation() {
        return Err(Error::InvalidStructure(format!("{first} fails")));
    }
    let class = classify(g, s)?;
    let n = nijenhuis(g, s);
    let torsion = if class.is_g1 {
        Some(torsion_analysis(g, s, &class)?)
    } else {
        None
    };
    Ok(Analysis {
        algebra: g.clone(),
        structure: s.clone(),
        unimodular: g.is_unimodular(),
        su3_checks: validation.checks,
        class,
        nijenhuis: n,
        df: g.exterior_derivative(s.f()),
        dpsi_plus: g.exterior_derivative(s.psi_plus()),
        dpsi_minus: g.exterior_derivative(s.psi_minus()),
        torsion,
    })
}

fn torsion_analysis(
    g: &LieAlgebra6,
    s: &SU3Structure,
    class: &ClassFlags,
) -> Result<TorsionAnalysis, Error> {
    let (conn, t) = torsion_connection(g, s)?;
    let acyt = is_acyt(g, s, &conn, &t)?;
    let n_form = nijenhuis(g, s).form().ok_or(Error::NoCharacteristicConnection)?;
    let (lambda, mu) = lambda_mu(s, &n_form, &t)?;
    let curvature = conn.curvature_su3(s);
    let (_, einstein) = einstein_check(&curvature.ric);
    let instanton = instanton_report(g, s, &conn, &t, &acyt.theta)?;
    let identities = verify_curvature_identities(&conn)?;
    let (delta, consequences) = if acyt.is_acyt() {
        (
            Some(delta_torsion_identities(g, s, &conn)?),
            Some(acyt_consequences(g, s, &conn, &acyt.theta)?),
        )
    } else {
        (None, None)
    };
    let chern = if class.is_hermitian {
        Some(chern_appendix_checks(g, s)?)
    } else {
        None
    };
    Ok(TorsionAnalysis {
        dt: g.exterior_derivative(&t),
        sigma: sigma_t(&t),
        d_nabla_t: d_nabla_t(&conn, &t)?,
        gamma: conn.gamma().clone(),
        theta: acyt.theta.clone(),
        lambda,
        mu,
        curvature,
        einstein,
        instanton,
        identities,
        main_theorem: verify_main_theorem(g, s)?,
        main_theorem_compact: verify_main_theorem_compact(g, s)?,
        hull_theorem: verify_hull_theorem(g, s)?,
        delta,
        consequences,
        chern,
        acyt,
        t,
    })
}

/// One row of a catalog comparison. Values are rendered in the entry's own
/// presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCheck {
    pub key: &'static str,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

/// Keys whose stored value flips sign between `(ω, Θ)` and `(F, Ψ)`.
const SIGN_SENSITIVE: [&str; 5] = ["dF", "dPsi+", "dPsi-", "(N,Psi+)", "(N,Psi-)"];

enum Computed {
    Form(Form),
    Bool(bool),
    Count(usize),
    Scalar(Scalar),
    Tensor(Tensor),
    Gamma(Tensor),
    Missing,
}

fn computed_value(a: &Analysis, key: &str) -> Computed {
    let ta = a.torsion.as_ref();
    let s = &a.structure;
    let inner_n = |psi: &Form| -> Computed {
        a.nijenhuis
            .form()
            .map(|n| Computed::Scalar(n.inner(psi).expect("degree 3")))
            .unwrap_or(Computed::Missing)
    };
    let with_t = |f: &dyn Fn(&TorsionAnalysis) -> Computed| ta.map(f).unwrap_or(Computed::Missing);
    match key {
        "dF" => Computed::Form(a.df.clone()),
        "dPsi+" => Computed::Form(a.dpsi_plus.clone()),
        "dPsi-" => Computed::Form(a.dpsi_minus.clone()),
        "nijenhuis" => a.nijenhuis.form().map(Computed::Form).unwrap_or(Computed::Missing),
        "nijenhuis_zero" => Computed::Bool(a.nijenhuis.is_zero()),
        "(N,Psi+)" => inner_n(s.psi_plus()),
        "(N,Psi-)" => inner_n(s.psi_minus()),
        "g1" => Computed::Bool(a.class.is_g1),
        "hermitian" => Computed::Bool(a.class.is_hermitian),
        "nearly_kahler" => Computed::Bool(a.class.is_nearly_kahler),
        "kahler" => Computed::Bool(a.class.is_kahler),
        "balanced" => Computed::Bool(a.class.is_balanced),
        "torsion" => with_t(&|t| Computed::Form(t.t.clone())),
        "dT" => with_t(&|t| Computed::Form(t.dt.clone())),
        "theta" => with_t(&|t| Computed::Form(t.theta.clone())),
        "acyt" => with_t(&|t| Computed::Bool(t.acyt.is_acyt())),
        "instanton" => with_t(&|t| Computed::Bool(t.instanton.first_pair_su3)),
        "nabla_T_zero" => with_t(&|t| Computed::Bool(t.instanton.nabla_t_zero)),
        "nabla_N_zero" => with_t(&|t| Computed::Bool(t.instanton.nabla_n_zero)),
        "holonomy_dim" => with_t(&|t| Computed::Count(t.instanton.holonomy_dim)),
        "ricci" => with_t(&|t| Computed::Tensor(t.curvature.ric.clone())),
        "scal" => with_t(&|t| Computed::Scalar(t.curvature.scal.clone())),
        "scal_g" => with_t(&|t| Computed::Scalar(t.curvature.scal_g.clone())),
        "connection_terms" => with_t(&|t| Computed::Gamma(t.gamma.clone())),
        _ => Computed::Missing,
    }
}

/// Compares every expected value of `entry` against `a`, translating the
/// sign-sensitive keys into the entry's presentation.
pub fn compare_expected(entry: &CatalogEntry, a: &Analysis) -> Vec<ExpectedCheck> {
    entry
        .expected
        .iter()
        .map(|ev| {
            let sign = if SIGN_SENSITIVE.contains(&ev.key) {
                entry.convention.form_sign()
            } else {
                Scalar::one()
            };
            let computed = computed_value(a, ev.key);
            let (passed, expected, computed) = match (&ev.value, computed) {
                (_, Computed::Missing) => (false, render_expected(&ev.value), "n/a".into()),
                (Expected::Form(f), Computed::Form(c)) => {
                    let c = c.scale(&sign);
                    (f == &c, f.render(), c.render())
                }
                (Expected::Bool(b), Computed::Bool(c)) => (*b == c, b.to_string(), c.to_string()),
                (Expected::Count(n), Computed::Count(c)) => (*n == c, n.to_string(), c.to_string()),
                (Expected::Scalar(x), Computed::Scalar(c)) => {
                    let c = &c * &sign;
                    (x == &c, x.to_string(), c.to_string())
                }
                (Expected::MetricMultiple(x), Computed::Tensor(ric)) => {
                    let (_, factor) = einstein_check(&ric);
                    let computed = factor.as_ref().map(|f| format!("{f}*g")).unwrap_or("not a multiple of g".into());
                    (factor.as_ref() == Some(x), format!("{x}*g"), computed)
                }
                (Expected::Coefficients(terms), Computed::Gamma(gamma)) => {
                    let got: Vec<String> = terms
                        .iter()
                        .map(|(i, j, k, _)| format_coefficient(*i, *j, *k, gamma.get(&[*i, *j, *k])))
                        .collect();
                    let ok = terms.iter().all(|(i, j, k, c)| gamma.get(&[*i, *j, *k]) == c);
                    (ok, render_expected(&ev.value), got.join(", "))
                }
                _ => (false, render_expected(&ev.value), "type mismatch".into()),
            };
            ExpectedCheck {
                key: ev.key,
                expected,
                computed,
                passed,
            }
        })
        .collect()
}

fn format_coefficient(i: usize, j: usize, k: usize, c: &Scalar) -> String {
    format!("nabla_e{} e{} . e{} = {c}", i + 1, j + 1, k + 1)
}

fn render_expected(v: &Expected) -> String {
    match v {
        Expected::Form(f) => f.render(),
        Expected::Bool(b) => b.to_string(),
        Expected::Count(n) => n.to_string(),
        Expected::Scalar(x) => x.to_string(),
        Expected::MetricMultiple(x) => format!("{x}*g"),
        Expected::Coefficients(terms) => terms
            .iter()
            .map(|(i, j, k, c)| format_coefficient(*i, *j, *k, c))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

/// Presentation of `F`, `Ψ±` and their derivatives under `conv`.
pub fn present(form: &Form, conv: Convention) -> Form {
    form.scale(&conv.form_sign())
}
