//! Acceptance criteria, one line each. Exact comparisons throughout.

mod common;

use std::fmt::Display;

use acyt::analysis::{analyze, Analysis};
use acyt::catalog::{get_entry, CatalogEntry, Convention, NAMES};
use acyt::cli::{parse, run, InputDocument};
use acyt::connection::{verify_curvature_identities, Connection, ConnectionKind};
use acyt::exterior::{e, Blade, Form, Tensor, DIM};
use acyt::instanton::is_acyt;
use acyt::liealg::LieAlgebra6;
use acyt::linalg::Matrix;
use acyt::su3::{
    check_prop_4form, iden_identities, project_lambda2, project_lambda3, validate_su3,
    SU3Structure,
};
use acyt::{Error, Scalar};

struct Criterion {
    id: usize,
    title: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: usize, title: &'static str) -> Criterion {
        Criterion {
            id,
            title,
            checked: 0,
            failures: vec![],
        }
    }

    fn check(&mut self, ok: bool, what: impl Display) {
        self.checked += 1;
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, what: &str, computed: &T, expected: &T) {
        self.check(
            computed == expected,
            format_args!("{what}: expected {expected}, computed {computed}"),
        );
    }

    fn report(&self) -> bool {
        let ok = self.failures.is_empty();
        let verdict = if ok { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {:2} {verdict}: {} ({} checks)", self.id, self.title, self.checked);
        if !ok {
            line.push_str(&format!("; {}", self.failures.join("; ")));
        }
        println!("{line}");
        ok
    }
}

struct Shown(Form);

impl Display for Shown {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0.render())
    }
}

impl PartialEq for Shown {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

/// `dα(X_0, …, X_p) = Σ_{i<j} (-1)^{i+j} α([X_i, X_j], X_0, …, X̂_i, …, X̂_j, …)`
/// evaluated on frame vectors.
fn d_oracle(g: &LieAlgebra6, alpha: &Form) -> Form {
    let p = alpha.degree();
    let mut out = Form::zero(p + 1);
    for b in Blade::all(p + 1) {
        let xs: Vec<usize> = b.indices().collect();
        let mut acc = Scalar::zero();
        for i in 0..xs.len() {
            for j in (i + 1)..xs.len() {
                let rest: Vec<usize> = (0..xs.len()).filter(|&k| k != i && k != j).map(|k| xs[k]).collect();
                for s in 0..DIM {
                    let mut args = vec![s];
                    args.extend(&rest);
                    let v = g.c(xs[i], xs[j], s) * &alpha.component(&args);
                    if (i + j) % 2 == 0 {
                        acc += v;
                    } else {
                        acc -= v;
                    }
                }
            }
        }
        out.add_term(b, acc);
    }
    out
}

fn entry(name: &str, params: &[(&str, Scalar)]) -> CatalogEntry {
    let params: Vec<(String, Scalar)> = params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    get_entry(name, &params).unwrap()
}

fn run_analysis(c: &mut Criterion, label: &str, e: &CatalogEntry) -> Option<Analysis> {
    match analyze(&e.algebra, &e.structure) {
        Ok(a) if a.torsion.is_some() => Some(a),
        Ok(_) => {
            c.check(false, format_args!("{label}: not G1"));
            None
        }
        Err(err) => {
            c.check(false, format_args!("{label}: {err}"));
            None
        }
    }
}

fn h3_family() -> Criterion {
    let mut c = Criterion::new(1, "h3 family");
    for t in [q(-1, 2), q(1, 1), q(3, 7), q(-5, 3), q(2, 1)] {
        let label = format!("h3 t={t}");
        let en = entry("h3", &[("t", t.clone())]);
        let Some(a) = run_analysis(&mut c, &label, &en) else { continue };
        let ta = a.torsion.as_ref().unwrap();
        let m2t = &Scalar::int(-2) * &t;
        let torsion = (&e(&[1, 2, 6]) - &e(&[3, 4, 6])).scale(&m2t);
        c.eq(&format!("{label} T"), &Shown(ta.t.clone()), &Shown(torsion));
        c.check(a.nijenhuis.is_zero(), format_args!("{label}: N != 0"));
        c.check(ta.theta.is_zero(), format_args!("{label}: theta != 0"));
        c.check(ta.acyt.is_acyt(), format_args!("{label}: not ACYT"));
        c.check(ta.instanton.nabla_t_zero, format_args!("{label}: nabla T != 0"));
        c.check(ta.instanton.first_pair_su3, format_args!("{label}: not an instanton"));
        c.eq(&format!("{label} holonomy dim"), &ta.instanton.holonomy_dim, &1);
        c.check(!ta.instanton.hull_instanton, format_args!("{label}: Hull connection is an instanton"));
        let oracle = d_oracle(&en.algebra, &ta.t);
        c.eq(&format!("{label} dT (oracle)"), &Shown(ta.dt.clone()), &Shown(oracle.clone()));
        let expected = e(&[1, 2, 3, 4]).scale(&(&Scalar::int(-8) * &(&t * &t)));
        c.eq(&format!("{label} dT = -8t^2 e1234"), &Shown(oracle), &Shown(expected));
    }
    c
}

fn g7_family() -> Criterion {
    let mut c = Criterion::new(2, "g7 family");
    for delta in [1, -1] {
        for (r, t) in [(q(1, 1), q(1, 1)), (q(3, 2), q(-2, 5)), (q(-2, 1), q(7, 3))] {
            let label = format!("g7 delta={delta} r={r} t={t}");
            let en = entry("g7", &[("delta", Scalar::int(delta)), ("r", r.clone()), ("t", t.clone())]);
            let Some(a) = run_analysis(&mut c, &label, &en) else { continue };
            let ta = a.torsion.as_ref().unwrap();
            let k = &(&(&Scalar::int(2 * delta) * &t) / &(&r * &r)) * &Scalar::int(-1);
            let torsion = (&e(&[1, 2, 6]) - &e(&[3, 4, 6])).scale(&k);
            c.eq(&format!("{label} T"), &Shown(ta.t.clone()), &Shown(torsion));
            c.check(a.class.is_balanced && ta.theta.is_zero(), format_args!("{label}: not balanced"));
            c.check(a.class.is_hermitian && ta.acyt.is_acyt(), format_args!("{label}: not CYT"));
            c.check(ta.instanton.first_pair_su3, format_args!("{label}: not an instanton"));
            c.check(ta.instanton.nabla_t_zero, format_args!("{label}: nabla T != 0"));
        }
    }
    c
}

fn sl2c_family() -> Criterion {
    let mut c = Criterion::new(3, "sl(2,C) family");
    for t in [q(1, 1), q(-1, 1), q(2, 3), q(-7, 4)] {
        let label = format!("sl2c t={t}");
        let en = entry("sl2c", &[("t", t.clone())]);
        let Some(a) = run_analysis(&mut c, &label, &en) else { continue };
        let ta = a.torsion.as_ref().unwrap();
        let torsion = (&(&(&e(&[1, 3, 5]).scale(&Scalar::int(3)) + &e(&[1, 4, 6])) + &e(&[2, 3, 6]))
            + &e(&[2, 4, 5]))
            .scale(&-&t.recip());
        c.eq(&format!("{label} T"), &Shown(ta.t.clone()), &Shown(torsion));
        c.check(a.class.is_balanced, format_args!("{label}: not balanced"));
        c.check(a.class.is_hermitian && ta.acyt.is_acyt(), format_args!("{label}: not CYT"));
        c.check(ta.instanton.first_pair_su3, format_args!("{label}: not an instanton"));
        c.check(ta.instanton.nabla_t_zero, format_args!("{label}: nabla T != 0"));
        c.eq(&format!("{label} holonomy dim"), &ta.instanton.holonomy_dim, &3);
    }
    c
}

fn noncomplex_example() -> Criterion {
    let mut c = Criterion::new(4, "non-complex nilpotent example");
    let en = entry("nilp_noncomplex", &[]);
    let s = &en.structure;
    let Some(a) = run_analysis(&mut c, "nilp", &en) else { return c };
    let ta = a.torsion.as_ref().unwrap();
    c.eq("dF", &Shown(a.df.clone()), &Shown(e(&[2, 3, 6]).scale(&Scalar::int(-3))));
    c.eq("dF (oracle)", &Shown(d_oracle(&en.algebra, s.f())), &Shown(a.df.clone()));
    let n = a.nijenhuis.form().unwrap_or_else(|| Form::zero(3));
    c.eq("N", &Shown(n.clone()), &Shown(-s.psi_minus()));
    c.eq("(N, Psi-)", &n.inner(s.psi_minus()).unwrap(), &Scalar::int(-4));
    let torsion = &(&(&e(&[1, 3, 6]) + &e(&[2, 3, 5])) - &e(&[2, 4, 6])) - &e(&[1, 4, 5]).scale(&Scalar::int(2));
    c.eq("T", &Shown(ta.t.clone()), &Shown(torsion));
    c.eq("dT", &Shown(ta.dt.clone()), &Shown(s.phi().scale(&Scalar::int(-2))));
    c.eq("dT (oracle)", &Shown(d_oracle(&en.algebra, &ta.t)), &Shown(ta.dt.clone()));
    // ∇_{e_i} e_j = c e_k, one-based.
    for (i, j, k, v) in [(1, 6, 3, -1), (5, 2, 3, 1), (4, 6, 2, -1), (4, 5, 1, -1), (5, 1, 4, -1), (1, 4, 5, -1)] {
        c.eq(
            &format!("nabla_e{i} e{j} . e{k}"),
            ta.gamma.get(&[i - 1, j - 1, k - 1]),
            &Scalar::int(v),
        );
    }
    c.check(
        ta.curvature.ric == Tensor::identity().scale(&Scalar::int(-2)),
        "Ric != -2g",
    );
    c.eq("Scal", &ta.curvature.scal, &Scalar::int(-12));
    c.eq("Scal^g", &ta.curvature.scal_g, &Scalar::int(1));
    c.check(ta.instanton.nabla_t_zero, "nabla T != 0");
    c.check(ta.instanton.nabla_n_zero, "nabla N != 0");
    c.check(ta.instanton.first_pair_su3, "not an instanton");
    c.check(!ta.instanton.hull_instanton, "Hull connection is an instanton");
    c
}

fn theorem_suite(instances: &[(String, LieAlgebra6, SU3Structure)]) -> Criterion {
    let mut c = Criterion::new(5, "theorem suite (catalog and fuzzed ACYT with nabla theta = 0)");
    let mut applicable = 0;
    for (label, g, s) in instances {
        let a = match analyze(g, s) {
            Ok(a) => a,
            Err(err) => {
                c.check(false, format_args!("{label}: {err}"));
                continue;
            }
        };
        let Some(ta) = &a.torsion else {
            c.check(false, format_args!("{label}: not G1"));
            continue;
        };
        for th in [&ta.main_theorem, &ta.hull_theorem] {
            if th.applicable {
                applicable += 1;
            }
            c.check(!th.applicable || th.holds(), format_args!("{label}: {th:?}"));
        }
        c.check(a.consistency_failures().is_empty(), format_args!("{label}: {:?}", a.consistency_failures()));
    }
    c.check(applicable >= instances.len(), format_args!("only {applicable} applicable theorem instances"));
    for name in NAMES {
        let out = run(["acyt", "verify", name]);
        c.eq(&format!("verify {name} exit code"), &out.code, &0);
    }
    c.check(
        Error::TheoremViolation(String::new()).is_consistency(),
        "theorem violations are not mapped to exit code 3",
    );
    c
}

fn identity_fuzz() -> Criterion {
    let mut c = Criterion::new(6, "identity fuzzing (100 random T on each of 5 algebras)");
    let algebras: Vec<(&str, LieAlgebra6)> = ["h3", "g7", "sl2c", "nilp_noncomplex"]
        .into_iter()
        .map(|n| (n, get_entry(n, &[]).unwrap().algebra))
        .chain([("su2+su2", common::su2_su2(1))])
        .collect();
    let wanted = [
        "1bi",
        "gen",
        "1bi1",
        "dh",
        "rics Ric^g",
        "rics skew part",
        "rics Scal^g",
        "inst1",
        "4form equivalence",
    ];
    for (k, (name, g)) in algebras.iter().enumerate() {
        let mut r = common::rng(500 + k as u64);
        for n in 0..100 {
            let t = common::skew3(&mut r);
            let conn = Connection::with_skew_torsion(g, &t, ConnectionKind::Custom);
            match verify_curvature_identities(&conn) {
                Ok(rep) => {
                    for w in wanted {
                        let passed = rep.get(w).is_some_and(|ch| ch.passed);
                        c.check(passed, format_args!("{name} sample {n}: {w}"));
                    }
                }
                Err(err) => c.check(false, format_args!("{name} sample {n}: {err}")),
            }
        }
    }
    c
}

fn span_dim(forms: impl Iterator<Item = Form>, degree: usize) -> usize {
    let blades = Blade::all(degree);
    let rows = forms.map(|f| blades.iter().map(|b| f.coeff(*b)).collect()).collect();
    Matrix::from_rows(rows).rank()
}

fn su3_suite() -> Criterion {
    let mut c = Criterion::new(7, "SU(3) linear algebra");
    let s = SU3Structure::standard();
    for (name, ok) in validate_su3(&s).checks {
        c.check(ok, format_args!("validation {name}"));
    }
    for (name, ok) in iden_identities(&s) {
        c.check(ok, format_args!("identity {name}"));
    }
    let two: Vec<_> = Blade::all(2)
        .into_iter()
        .map(|b| project_lambda2(&s, &Form::monomial(b, Scalar::one())))
        .collect();
    let ranks2 = (
        span_dim(two.iter().map(|p| p.one.clone()), 2),
        span_dim(two.iter().map(|p| p.six.clone()), 2),
        span_dim(two.iter().map(|p| p.eight.clone()), 2),
    );
    c.check(ranks2 == (1, 6, 8), format_args!("Lambda^2 ranks {ranks2:?}"));
    let three: Result<Vec<_>, _> = Blade::all(3)
        .into_iter()
        .map(|b| project_lambda3(&s, &Form::monomial(b, Scalar::one())))
        .collect();
    match three {
        Ok(three) => {
            let ranks3 = (
                span_dim(three.iter().map(|p| p.re.clone()), 3),
                span_dim(three.iter().map(|p| p.im.clone()), 3),
                span_dim(three.iter().map(|p| p.six.clone()), 3),
                span_dim(three.iter().map(|p| p.twelve.clone()), 3),
            );
            c.check(ranks3 == (1, 1, 6, 12), format_args!("Lambda^3 ranks {ranks3:?}"));
        }
        Err(err) => c.check(false, format_args!("Lambda^3 projection: {err}")),
    }
    match check_prop_4form(&s) {
        Ok(rank) => c.eq("4-form map rank", &rank, &15),
        Err(err) => c.check(false, format_args!("4-form map: {err}")),
    }
    c
}

fn acyt_equivalence(instances: &[(String, LieAlgebra6, SU3Structure)]) -> Criterion {
    let mut c = Criterion::new(8, "ACYT equivalence (rho = 0, dPsi equations, nabla Psi = 0)");
    let mut extra = vec![("aff+R4".to_string(), {
        let mut d: [Form; 6] = std::array::from_fn(|_| Form::zero(2));
        d[0] = e(&[1, 2]);
        LieAlgebra6::new(d).unwrap()
    }, SU3Structure::standard())];
    extra.extend(instances.iter().cloned());
    for (label, g, s) in &extra {
        let (conn, t) = match acyt::connection::torsion_connection(g, s) {
            Ok(x) => x,
            Err(err) => {
                c.check(false, format_args!("{label}: {err}"));
                continue;
            }
        };
        match is_acyt(g, s, &conn, &t) {
            Ok(rep) => {
                let cycon = rep.cycon_plus_ok && rep.cycon_minus_ok;
                c.check(
                    rep.rho_zero == cycon && cycon == rep.nabla_psi_zero,
                    format_args!("{label}: rho=0 {}, cycon {cycon}, nabla Psi=0 {}", rep.rho_zero, rep.nabla_psi_zero),
                );
            }
            Err(err) => c.check(false, format_args!("{label}: {err}")),
        }
    }
    c
}

fn appendix_suite() -> Criterion {
    let mut c = Criterion::new(9, "Chern appendix identities on h3 and g7");
    let cases = [
        entry("h3", &[]),
        entry("h3", &[("t", q(3, 5))]),
        entry("g7", &[]),
        entry("g7", &[("delta", Scalar::int(-1)), ("r", q(2, 3)), ("t", q(-3, 2))]),
    ];
    for en in &cases {
        let label = format!("{} {:?}", en.name, en.params);
        let Some(a) = run_analysis(&mut c, &label, en) else { continue };
        let ta = a.torsion.as_ref().unwrap();
        let Some(ch) = &ta.chern else {
            c.check(false, format_args!("{label}: no Chern section"));
            continue;
        };
        let t_norm = ta.t.to_tensor().norm_sq();
        c.eq(&format!("{label} ||T||^2"), &ch.t_norm_sq, &t_norm);
        c.eq(&format!("{label} ||C||^2"), &ch.c_norm_sq, &(&t_norm * &q(1, 3)));
        let theta_norm = ta.theta.norm_sq();
        let delta_theta = en.algebra.codifferential(&ta.theta).as_scalar();
        let rhs = &(&(&Scalar::int(8) * &theta_norm) + &(&Scalar::int(8) * &delta_theta)) - &(&q(4, 3) * &t_norm);
        c.eq(&format!("{label} trace rhs"), &ch.trace_rhs, &rhs);
        c.eq(&format!("{label} dT(e_j,Je_j,e_i,Je_i)"), &ch.trace_lhs, &rhs);
    }
    c
}

fn determinism() -> Criterion {
    let mut c = Criterion::new(10, "determinism and export round-trip");
    for name in NAMES {
        let a = run(["acyt", "catalog", "run", name, "--format", "machine"]);
        let b = run(["acyt", "catalog", "run", name, "--format", "machine"]);
        c.check(a == b, format_args!("{name}: machine reports differ"));
        for (flag, conv) in [("internal", Convention::InternalF), ("paper", Convention::PaperOmega)] {
            let en = get_entry(name, &[]).unwrap();
            let out = run(["acyt", "export", name, "--convention", flag]);
            match parse(&out.stdout) {
                Ok(doc) => {
                    c.check(doc == InputDocument::from_entry(&en, conv), format_args!("{name} {flag}: document differs"));
                    c.check(doc.algebra().ok() == Some(en.algebra.clone()), format_args!("{name} {flag}: algebra differs"));
                    c.check(doc.structure().ok() == Some(en.structure.clone()), format_args!("{name} {flag}: structure differs"));
                }
                Err(err) => c.check(false, format_args!("{name} {flag}: {err}")),
            }
        }
    }
    c
}

fn main() {
    let mut instances: Vec<(String, LieAlgebra6, SU3Structure)> = NAMES
        .iter()
        .map(|n| {
            let en = get_entry(n, &[]).unwrap();
            (n.to_string(), en.algebra, en.structure)
        })
        .collect();
    instances.extend(common::acyt_instances(2024));
    let criteria = [
        h3_family(),
        g7_family(),
        sl2c_family(),
        noncomplex_example(),
        theorem_suite(&instances),
        identity_fuzz(),
        su3_suite(),
        acyt_equivalence(&instances),
        appendix_suite(),
        determinism(),
    ];
    let passed = criteria.iter().filter(|c| c.report()).count();
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
