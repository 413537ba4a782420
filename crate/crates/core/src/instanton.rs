//! ACYT and SU(3)-instanton predicates, the theorem verifiers, the
//! codifferential-of-torsion identities, Chern-connection checks and the
//! infinitesimal holonomy algebra.

use crate::connection::{
    chern_connection, hull_connection, ricci, ricci_form, torsion_connection,
    torsion_from_cycon_data, Connection,
};
use crate::error::Error;
use crate::exterior::{hodge_star, Form, Tensor, DIM};
use crate::liealg::{LieAlgebra6, Mat6};
use crate::linalg::Subspace;
use crate::su3::{lambda_mu, lee_form, nijenhuis, project_lambda2, SU3Structure};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcytReport {
    pub is_g1: bool,
    pub rho_zero: bool,
    pub cycon_plus_ok: bool,
    pub cycon_minus_ok: bool,
    pub nabla_psi_zero: bool,
    pub torcy_ok: bool,
    pub theta: Form,
    pub lambda: Scalar,
    pub mu: Scalar,
}

impl AcytReport {
    pub fn is_acyt(&self) -> bool {
        self.is_g1 && self.rho_zero
    }
}

/// Decides ACYT by three independent routes: `ρ = 0`, the two `dΨ±`
/// equations, and `∇Ψ± = 0`. They must agree.
pub fn is_acyt(
    g: &LieAlgebra6,
    s: &SU3Structure,
    conn: &Connection,
    t: &Form,
) -> Result<AcytReport, Error> {
    let n = nijenhuis(g, s);
    let n_form = n.form().ok_or(Error::NoCharacteristicConnection)?;
    let theta = lee_form(g, s, t)?;
    let (lambda, mu) = lambda_mu(s, &n_form, t)?;
    let rho = ricci_form(&conn.riemann(), s);
    let star_f = hodge_star(s.f(), s.orientation());
    let cycon = |psi: &Form, c: &Scalar| -> bool {
        let rhs = &theta.wedge(psi).expect("deg 4") - &star_f.scale(c);
        g.exterior_derivative(psi) == rhs
    };
    let cycon_plus_ok = cycon(s.psi_plus(), &lambda);
    let cycon_minus_ok = cycon(s.psi_minus(), &mu);
    let nabla_psi_zero = conn.covariant_derivative_form(s.psi_plus()).is_zero()
        && conn.covariant_derivative_form(s.psi_minus()).is_zero();
    let rho_zero = rho.is_zero();
    if rho_zero != (cycon_plus_ok && cycon_minus_ok) || rho_zero != nabla_psi_zero {
        return Err(Error::InternalConsistency(format!(
            "ACYT routes disagree: rho=0 {rho_zero}, cycon ({cycon_plus_ok}, {cycon_minus_ok}), ∇Ψ=0 {nabla_psi_zero}"
        )));
    }
    let torcy_ok = torsion_from_cycon_data(g, s, &theta, &lambda, &mu) == *t;
    if rho_zero && !torcy_ok {
        return Err(Error::InternalConsistency(
            "torsion of an ACYT structure differs from -*dF + *(θ∧F) + λΨ⁺ + μΨ⁻".into(),
        ));
    }
    Ok(AcytReport {
        is_g1: true,
        rho_zero,
        cycon_plus_ok,
        cycon_minus_ok,
        nabla_psi_zero,
        torcy_ok,
        theta,
        lambda,
        mu,
    })
}

fn contract_pair(r: &Tensor, form: &Form, first: bool) -> Tensor {
    let pairs: &[(usize, usize)] = if first { &[(0, 0), (1, 1)] } else { &[(2, 0), (3, 1)] };
    r.contract(&form.to_tensor(), pairs)
        .expect("axes in range")
        .into_tensor()
        .expect("free axes remain")
}

fn su3_pair(s: &SU3Structure, r: &Tensor, first: bool) -> bool {
    contract_pair(r, s.psi_plus(), first).is_zero()
        && contract_pair(r, s.psi_minus(), first).is_zero()
        && contract_pair(r, s.f(), first).is_zero()
}

/// First-pair condition `R_{abij}Ψ±_{abc} = R_{abij}F_{ab} = 0`, checked
/// against `R(JX, JY, Z, V) = R(X, Y, Z, V)`, `R(e_i, Je_i, Z, V) = 0`.
pub fn is_su3_instanton(s: &SU3Structure, r: &Tensor) -> Result<bool, Error> {
    let contractions = su3_pair(s, r, true);
    let j = s.j();
    let mut invariant = true;
    let mut traceless = true;
    'outer: for z in 0..DIM {
        for v in 0..DIM {
            for x in 0..DIM {
                for y in 0..DIM {
                    let mut rot = Scalar::zero();
                    for a in 0..DIM {
                        if j[a][x].is_zero() {
                            continue;
                        }
                        for b in 0..DIM {
                            if !j[b][y].is_zero() {
                                rot += &(&j[a][x] * &j[b][y]) * r.get(&[a, b, z, v]);
                            }
                        }
                    }
                    if &rot != r.get(&[x, y, z, v]) {
                        invariant = false;
                        break 'outer;
                    }
                }
            }
            let tr: Scalar = (0..DIM)
                .flat_map(|i| (0..DIM).map(move |b| (i, b)))
                .filter(|&(i, b)| !j[b][i].is_zero())
                .map(|(i, b)| &j[b][i] * r.get(&[i, b, z, v]))
                .sum();
            if !tr.is_zero() {
                traceless = false;
            }
        }
    }
    let by_j = invariant && traceless;
    if by_j != contractions {
        return Err(Error::InternalConsistency(format!(
            "instanton routes disagree: contractions {contractions}, J-invariance {by_j}"
        )));
    }
    Ok(contractions)
}

/// Last-pair condition `R_{ijab}Ψ±_{abc} = R_{ijab}F_{ab} = 0` (curvature
/// endomorphisms in `su(3)`).
pub fn curvature_in_su3_last_pair(s: &SU3Structure, r: &Tensor) -> bool {
    su3_pair(s, r, false)
}

/// Span of the curvature endomorphisms closed under `[Λ_X, ·]` and the
/// commutator, as skew matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Holonomy {
    pub dim: usize,
    pub basis: Vec<Mat6>,
    /// Whether the span stopped growing within the round cap.
    pub stabilized: bool,
    pub rounds: usize,
}

const HOLONOMY_ROUNDS: usize = 15;

fn skew_coords(m: &Mat6) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(15);
    for a in 0..DIM {
        for b in (a + 1)..DIM {
            v.push(m[a][b].clone());
        }
    }
    v
}

fn from_skew_coords(v: &[Scalar]) -> Mat6 {
    let mut m: Mat6 = Default::default();
    let mut k = 0;
    for a in 0..DIM {
        for b in (a + 1)..DIM {
            m[a][b] = v[k].clone();
            m[b][a] = -&v[k];
            k += 1;
        }
    }
    m
}

fn mat_mul(a: &Mat6, b: &Mat6) -> Mat6 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..DIM)
                .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                .map(|k| &a[i][k] * &b[k][j])
                .sum()
        })
    })
}

fn commutator(a: &Mat6, b: &Mat6) -> Mat6 {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    std::array::from_fn(|i| std::array::from_fn(|j| &ab[i][j] - &ba[i][j]))
}

/// Infinitesimal holonomy: starts from `span{R(e_i, e_j)}` and adjoins
/// `[Λ_k, A]` (covariant derivatives of the curvature) and `[A, B]` until a
/// full round adds nothing.
pub fn infinitesimal_holonomy(conn: &Connection) -> Holonomy {
    let r = conn.riemann();
    let mut space = Subspace::new(15);
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            // (R(e_i, e_j))_{lk} = R_{ijkl}
            let m: Mat6 =
                std::array::from_fn(|l| std::array::from_fn(|k| r.get(&[i, j, k, l]).clone()));
            space.insert(&skew_coords(&m));
        }
    }
    let ops: Vec<Mat6> = (0..DIM).map(|i| conn.operator(i)).collect();
    let mut rounds = 0;
    let mut stabilized = false;
    while rounds < HOLONOMY_ROUNDS {
        rounds += 1;
        let current: Vec<Mat6> = space.basis().iter().map(|v| from_skew_coords(v)).collect();
        let mut grew = false;
        for a in &current {
            for op in &ops {
                grew |= space.insert(&skew_coords(&commutator(op, a)));
            }
            for b in &current {
                grew |= space.insert(&skew_coords(&commutator(a, b)));
            }
        }
        if !grew {
            stabilized = true;
            break;
        }
    }
    Holonomy {
        dim: space.dim(),
        basis: space.basis().iter().map(|v| from_skew_coords(v)).collect(),
        stabilized,
        rounds,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantonReport {
    pub first_pair_su3: bool,
    pub last_pair_su3: bool,
    pub nabla_t_zero: bool,
    pub nabla_n_zero: bool,
    pub nabla_theta_zero: bool,
    pub dt_zero: bool,
    pub hull_instanton: bool,
    pub pair_symmetric: bool,
    pub holonomy_dim: usize,
    pub holonomy_stabilized: bool,
}

pub fn instanton_report(
    g: &LieAlgebra6,
    s: &SU3Structure,
    conn: &Connection,
    t: &Form,
    theta: &Form,
) -> Result<InstantonReport, Error> {
    let r = conn.riemann();
    let first_pair_su3 = is_su3_instanton(s, &r)?;
    let last_pair_su3 = curvature_in_su3_last_pair(s, &r);
    let pair_symmetric = r == r.permute(&[2, 3, 0, 1]);
    if pair_symmetric && last_pair_su3 && !first_pair_su3 {
        return Err(Error::InternalConsistency(
            "pair-symmetric curvature in su(3) fails the first-pair condition".into(),
        ));
    }
    let n = nijenhuis(g, s);
    let hull = hull_connection(conn);
    let hol = infinitesimal_holonomy(conn);
    Ok(InstantonReport {
        first_pair_su3,
        last_pair_su3,
        nabla_t_zero: conn.covariant_derivative_form(t).is_zero(),
        nabla_n_zero: conn.covariant_derivative(&n.tensor).is_zero(),
        nabla_theta_zero: conn.covariant_derivative_form(theta).is_zero(),
        dt_zero: g.exterior_derivative(t).is_zero(),
        hull_instanton: is_su3_instanton(s, &hull.riemann())?,
        pair_symmetric,
        holonomy_dim: hol.dim,
        holonomy_stabilized: hol.stabilized,
    })
}

/// Outcome of checking `instanton ⟺ (∇T = 0)` (or, for the Hull theorem,
/// `Hull instanton ⟺ dT = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub applicable: bool,
    pub hypotheses: Vec<(&'static str, bool)>,
    pub lhs: bool,
    pub rhs: bool,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    fn enforce(self, name: &str) -> Result<TheoremReport, Error> {
        if self.applicable && !self.holds() {
            return Err(Error::TheoremViolation(format!(
                "{name}: left side {} but right side {}",
                self.lhs, self.rhs
            )));
        }
        Ok(self)
    }
}

struct AcytContext {
    conn: Connection,
    t: Form,
    acyt: AcytReport,
}

fn acyt_context(g: &LieAlgebra6, s: &SU3Structure) -> Result<AcytContext, Error> {
    let (conn, t) = torsion_connection(g, s)?;
    let acyt = is_acyt(g, s, &conn, &t)?;
    Ok(AcytContext { conn, t, acyt })
}

/// On ACYT input with `∇θ = 0` (the Nijenhuis norm is constant for invariant
/// data): the torsion connection is an instanton iff `∇T = 0`.
pub fn verify_main_theorem(g: &LieAlgebra6, s: &SU3Structure) -> Result<TheoremReport, Error> {
    let ctx = acyt_context(g, s)?;
    let nabla_theta_zero = ctx.conn.covariant_derivative_form(&ctx.acyt.theta).is_zero();
    let hypotheses = vec![
        ("acyt", ctx.acyt.is_acyt()),
        ("constant |N|", true),
        ("nabla theta = 0", nabla_theta_zero),
    ];
    TheoremReport {
        applicable: hypotheses.iter().all(|h| h.1),
        hypotheses,
        lhs: is_su3_instanton(s, &ctx.conn.riemann())?,
        rhs: ctx.conn.covariant_derivative_form(&ctx.t).is_zero(),
    }
    .enforce("instanton <=> parallel torsion")
}

/// Compact variant: unimodularity stands in for compactness of a quotient,
/// and `δθ = 0` is checked directly.
pub fn verify_main_theorem_compact(
    g: &LieAlgebra6,
    s: &SU3Structure,
) -> Result<TheoremReport, Error> {
    let ctx = acyt_context(g, s)?;
    let hypotheses = vec![
        ("acyt", ctx.acyt.is_acyt()),
        ("unimodular", g.is_unimodular()),
        ("delta theta = 0", g.codifferential(&ctx.acyt.theta).is_zero()),
    ];
    TheoremReport {
        applicable: hypotheses.iter().all(|h| h.1),
        hypotheses,
        lhs: is_su3_instanton(s, &ctx.conn.riemann())?,
        rhs: ctx.conn.covariant_derivative_form(&ctx.t).is_zero(),
    }
    .enforce("instanton <=> parallel torsion (compact)")
}

/// On ACYT input: the Hull connection is an instanton iff `dT = 0`. Also
/// requires `R(X,Y,Z,V) - R^h(Z,V,X,Y) = ½dT` on every index tuple.
pub fn verify_hull_theorem(g: &LieAlgebra6, s: &SU3Structure) -> Result<TheoremReport, Error> {
    let ctx = acyt_context(g, s)?;
    let hull = hull_connection(&ctx.conn);
    let r = ctx.conn.riemann();
    let rh = hull.riemann();
    let dt = g.exterior_derivative(&ctx.t);
    let lhs_t = &r - &rh.permute(&[2, 3, 0, 1]);
    if lhs_t != dt.to_tensor().scale(&Scalar::new(1, 2)) {
        return Err(Error::InternalConsistency(
            "R(X,Y,Z,V) - R^h(Z,V,X,Y) differs from ½dT".into(),
        ));
    }
    let hypotheses = vec![("acyt", ctx.acyt.is_acyt())];
    TheoremReport {
        applicable: ctx.acyt.is_acyt(),
        hypotheses,
        lhs: is_su3_instanton(s, &rh)?,
        rhs: dt.is_zero(),
    }
    .enforce("Hull instanton <=> dT = 0")
}

/// `e_i`-contraction `θ ⌟ T = Σ θ_i (e_i ⌟ T)`.
fn contract_vector(theta: &Form, t: &Form) -> Form {
    let mut acc = Form::zero(t.degree() - 1);
    for i in 0..DIM {
        let c = theta.component(&[i]);
        if !c.is_zero() {
            acc = &acc + &t.interior(i).scale(&c);
        }
    }
    acc
}

/// `(d^∇θ)(X, Y) = (∇_X θ)Y - (∇_Y θ)X`, which equals `dθ - θ⌟T`.
fn d_nabla_one_form(conn: &Connection, theta: &Form) -> Form {
    let nt = conn.covariant_derivative_form(theta);
    Form::from_tensor(&(&nt - &nt.permute(&[1, 0])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTorsionReport {
    pub checks: Vec<(&'static str, bool)>,
}

impl DeltaTorsionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

/// Identities for `δT` on ACYT input, with the `dλ`, `dμ` terms dropped
/// (they vanish for invariant data).
pub fn delta_torsion_identities(
    g: &LieAlgebra6,
    s: &SU3Structure,
    conn: &Connection,
) -> Result<DeltaTorsionReport, Error> {
    let t = conn.torsion_form().ok_or(Error::NotAntisymmetric(3))?;
    let theta = lee_form(g, s, &t)?;
    let dtheta = g.exterior_derivative(&theta);
    let delta_t = g.codifferential(&t);
    let theta_t = contract_vector(&theta, &t);
    let o = s.orientation();
    let tordel = &hodge_star(&dtheta.wedge(s.f())?, o) - &theta_t;
    // -(dθ ⌟ Φ)_{kl} = -½ dθ_{ij} Φ_{ijkl}
    let phi = s.phi().to_tensor();
    let dth = dtheta.to_tensor();
    let contr = Form::from_tensor(&Tensor::from_fn(2, |x| {
        let mut acc = Scalar::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                acc += dth.get(&[i, j]) * phi.get(&[i, j, x[0], x[1]]);
            }
        }
        &acc * &Scalar::new(1, 2)
    }));
    let tordel_phi = &(-contr) - &theta_t;
    let parts = project_lambda2(s, &dtheta);
    let checks = vec![
        ("delta T = *(d theta ^ F) - theta _| T", delta_t == tordel),
        ("delta T = -d theta _| Phi - theta _| T", delta_t == tordel_phi),
        ("delta T = d^nabla theta", delta_t == d_nabla_one_form(conn, &theta)),
        (
            "d theta in Lambda^2_8",
            parts.one.is_zero() && parts.six.is_zero(),
        ),
        (
            "d theta(X,Y) = d theta(JX,JY)",
            dtheta == dtheta.pullback(s.j()),
        ),
    ];
    Ok(DeltaTorsionReport { checks })
}

/// Further consequences checked on ACYT input: the Ricci formula through
/// `dT` and `Φ`, and, on instantons with `∇θ = 0`, `T(θ, X, Y) = T(θ, JX, JY)`.
pub fn acyt_consequences(
    g: &LieAlgebra6,
    s: &SU3Structure,
    conn: &Connection,
    theta: &Form,
) -> Result<Vec<(&'static str, bool)>, Error> {
    let t = conn.torsion_form().ok_or(Error::NotAntisymmetric(3))?;
    let r = conn.riemann();
    let ric = ricci(&r);
    let phi = s.phi().to_tensor();
    let dt = g.exterior_derivative(&t).to_tensor();
    let nth = conn.covariant_derivative_form(theta);
    let full3 = |a: &Tensor, i: usize, j: usize, skip_first: bool| -> Scalar {
        let mut acc = Scalar::zero();
        for x in 0..DIM {
            for y in 0..DIM {
                for z in 0..DIM {
                    let av = if skip_first { a.get(&[i, x, y, z]) } else { a.get(&[x, y, z, i]) };
                    if !av.is_zero() {
                        acc += av * phi.get(&[j, x, y, z]);
                    }
                }
            }
        }
        acc
    };
    let via_r = Tensor::from_fn(2, |x| &Scalar::new(1, 2) * &full3(&r, x[0], x[1], true));
    let via_dt = Tensor::from_fn(2, |x| {
        &(&Scalar::new(1, 12) * &full3(&dt, x[0], x[1], true)) - nth.get(&[x[0], x[1]])
    });
    let mut out = vec![
        ("Ric_ij = 1/2 R_iabc Phi_jabc", ric == via_r),
        ("Ric_ij = 1/12 dT_iabc Phi_jabc - nabla_i theta_j", ric == via_dt),
    ];
    let instanton = is_su3_instanton(s, &r)?;
    if instanton && nth.is_zero() {
        let tt = contract_vector(theta, &t);
        out.push(("T(theta,X,Y) = T(theta,JX,JY)", tt == tt.pullback(s.j())));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernReport {
    pub c_norm_sq: Scalar,
    pub t_norm_sq: Scalar,
    pub norm_identity_ok: bool,
    pub trace_lhs: Scalar,
    pub trace_rhs: Scalar,
    pub trace_identity_ok: bool,
    pub chern_torsion_is_c: bool,
    pub chern_instanton: bool,
    pub balanced: bool,
}

/// `C(Z; X, Y) = ½(T(Z, JX, JY) - T(Z, X, Y))` as the tensor `C_{zxy}`.
pub fn c_tensor(s: &SU3Structure, t: &Form) -> Tensor {
    let tt = t.to_tensor();
    let j = s.j();
    let half = Scalar::new(1, 2);
    Tensor::from_fn(3, |x| {
        let (z, a, b) = (x[0], x[1], x[2]);
        let mut rot = Scalar::zero();
        for p in 0..DIM {
            if j[p][a].is_zero() {
                continue;
            }
            for q in 0..DIM {
                if !j[q][b].is_zero() {
                    rot += &(&j[p][a] * &j[q][b]) * tt.get(&[z, p, q]);
                }
            }
        }
        &half * &(&rot - tt.get(&[z, a, b]))
    })
}

/// Hermitian-case identities: `||C||² = ⅓||T||²` and
/// `dT(e_j, Je_j, e_i, Je_i) = 8||θ||² + 8δθ - (4/3)||T||²` (full index sums).
pub fn chern_appendix_checks(g: &LieAlgebra6, s: &SU3Structure) -> Result<ChernReport, Error> {
    let chern = chern_connection(g, s)?;
    let (_, t) = torsion_connection(g, s)?;
    let c = c_tensor(s, &t);
    let tt = t.to_tensor();
    let c_norm_sq = c.norm_sq();
    let t_norm_sq = tt.norm_sq();
    let norm_identity_ok = c_norm_sq == &t_norm_sq * &Scalar::new(1, 3);

    let dt = g.exterior_derivative(&t).to_tensor();
    let j = s.j();
    let mut trace_lhs = Scalar::zero();
    for jj in 0..DIM {
        for a in 0..DIM {
            if j[a][jj].is_zero() {
                continue;
            }
            for i in 0..DIM {
                for b in 0..DIM {
                    if !j[b][i].is_zero() {
                        trace_lhs += &(&j[a][jj] * &j[b][i]) * dt.get(&[jj, a, i, b]);
                    }
                }
            }
        }
    }
    let theta = lee_form(g, s, &t)?;
    let delta_theta = g.codifferential(&theta).as_scalar();
    let trace_rhs = &(&(&Scalar::int(8) * &theta.norm_sq()) + &(&Scalar::int(8) * &delta_theta))
        - &(&Scalar::new(4, 3) * &t_norm_sq);
    // Chern torsion T^c(X, Y, Z) against C(Z; X, Y).
    let chern_torsion_is_c = chern.torsion_tensor() == c.permute(&[1, 2, 0]);
    Ok(ChernReport {
        norm_identity_ok,
        trace_identity_ok: trace_lhs == trace_rhs,
        c_norm_sq,
        t_norm_sq,
        trace_lhs,
        trace_rhs,
        chern_torsion_is_c,
        chern_instanton: is_su3_instanton(s, &chern.riemann())?,
        balanced: theta.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::e;
    use crate::scalar::q;

    fn h3(t: &Scalar) -> LieAlgebra6 {
        let mut d: [Form; 6] = std::array::from_fn(|_| Form::zero(2));
        d[5] = (&e(&[1, 2]) - &e(&[3, 4])).scale(&(Scalar::int(-2) * t));
        LieAlgebra6::new(d).unwrap()
    }

    #[test]
    fn h3_is_acyt_instanton_with_u1_holonomy() {
        let g = h3(&q(-1, 2));
        let s = SU3Structure::standard();
        let (conn, t) = torsion_connection(&g, &s).unwrap();
        let acyt = is_acyt(&g, &s, &conn, &t).unwrap();
        assert!(acyt.is_acyt() && acyt.torcy_ok);
        assert!(acyt.theta.is_zero());
        let rep = instanton_report(&g, &s, &conn, &t, &acyt.theta).unwrap();
        assert!(rep.first_pair_su3 && rep.last_pair_su3 && rep.nabla_t_zero);
        assert!(!rep.hull_instanton && !rep.dt_zero);
        assert_eq!(rep.holonomy_dim, 1);
        assert!(verify_main_theorem(&g, &s).unwrap().holds());
        assert!(verify_hull_theorem(&g, &s).unwrap().holds());
    }

    #[test]
    fn h3_levi_civita_not_in_su3() {
        let g = h3(&q(-1, 2));
        let s = SU3Structure::standard();
        assert!(!curvature_in_su3_last_pair(&s, &g.levi_civita().riemann()));
    }

    #[test]
    fn h3_chern_norms() {
        let t = q(-1, 2);
        let g = h3(&t);
        let rep = chern_appendix_checks(&g, &SU3Structure::standard()).unwrap();
        assert!(rep.norm_identity_ok && rep.trace_identity_ok && rep.chern_torsion_is_c);
        let t2 = &t * &t;
        assert_eq!(rep.t_norm_sq, &Scalar::int(48) * &t2);
        assert_eq!(rep.trace_lhs, &Scalar::int(-64) * &t2);
    }

    #[test]
    fn abelian_everything_trivial() {
        let g = LieAlgebra6::abelian();
        let s = SU3Structure::standard();
        let (conn, t) = torsion_connection(&g, &s).unwrap();
        assert!(t.is_zero());
        let acyt = is_acyt(&g, &s, &conn, &t).unwrap();
        let rep = instanton_report(&g, &s, &conn, &t, &acyt.theta).unwrap();
        assert!(rep.first_pair_su3 && rep.hull_instanton && rep.dt_zero);
        assert_eq!(rep.holonomy_dim, 0);
        assert!(rep.holonomy_stabilized);
        let c = chern_appendix_checks(&g, &s).unwrap();
        assert!(c.c_norm_sq.is_zero() && c.chern_instanton);
    }
}
