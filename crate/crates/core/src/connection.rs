//! Invariant metric connections in the orthonormal frame: constructors,
//! curvature, covariant derivatives and the curvature identities for
//! connections with totally skew-symmetric torsion.
//!
//! `Γ_{ijk} = g(∇_{e_i} e_j, e_k)`, `R_{ijkl} = g(R(e_i, e_j) e_k, e_l)` with
//! `R(X, Y) = [∇_X, ∇_Y] - ∇_{[X, Y]}`.

use crate::error::Error;
use crate::exterior::{hodge_star, Form, Orientation, Tensor, DIM};
use crate::liealg::{LieAlgebra6, Mat6};
use crate::su3::{nijenhuis, SU3Structure};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectionKind {
    LeviCivita,
    Torsion,
    Hull,
    Chern,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    algebra: LieAlgebra6,
    gamma: Tensor,
    kind: ConnectionKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureData {
    pub r: Tensor,
    /// `Ric(X, Y) = Σ_k R(e_k, X, Y, e_k)`.
    pub ric: Tensor,
    /// `ρ(X, Y) = ½ R(X, Y, e_i, Je_i)`; present when a structure was supplied.
    pub rho: Option<Form>,
    pub scal: Scalar,
    /// Scalar curvature of the Levi-Civita connection of the same metric.
    pub scal_g: Scalar,
}

impl Connection {
    pub fn from_gamma(algebra: LieAlgebra6, gamma: Tensor, kind: ConnectionKind) -> Connection {
        assert_eq!(gamma.rank(), 3);
        Connection {
            algebra,
            gamma,
            kind,
        }
    }

    /// `∇ = ∇^g + ½T` for a 3-form `T`.
    pub fn with_skew_torsion(algebra: &LieAlgebra6, t: &Form, kind: ConnectionKind) -> Connection {
        assert_eq!(t.degree(), 3);
        let lc = algebra.levi_civita();
        let half_t = t.to_tensor().scale(&Scalar::new(1, 2));
        Connection::from_gamma(algebra.clone(), &lc.gamma + &half_t, kind)
    }

    pub fn algebra(&self) -> &LieAlgebra6 {
        &self.algebra
    }

    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn kind(&self) -> ConnectionKind {
        self.kind
    }

    pub fn is_metric(&self) -> bool {
        self.gamma.is_antisymmetric_pair(1, 2)
    }

    /// `T_{ijk} = Γ_{ijk} - Γ_{jik} - c_{ijk}`.
    pub fn torsion_tensor(&self) -> Tensor {
        Tensor::from_fn(3, |x| {
            let (i, j, k) = (x[0], x[1], x[2]);
            &(self.gamma.get(&[i, j, k]) - self.gamma.get(&[j, i, k])) - self.algebra.c(i, j, k)
        })
    }

    /// The torsion as a 3-form, when it is totally skew-symmetric.
    pub fn torsion_form(&self) -> Option<Form> {
        Form::try_from_tensor(&self.torsion_tensor()).ok()
    }

    /// `Λ_i` with `(Λ_i)_{kj} = Γ_{ijk}`, the matrix of `∇_{e_i}`.
    pub fn operator(&self, i: usize) -> Mat6 {
        std::array::from_fn(|k| std::array::from_fn(|j| self.gamma.get(&[i, j, k]).clone()))
    }

    pub fn riemann(&self) -> Tensor {
        let g = &self.gamma;
        let c = self.algebra.structure_constants();
        Tensor::from_fn(4, |x| {
            let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
            let mut acc = Scalar::zero();
            for s in 0..DIM {
                let a = g.get(&[j, k, s]);
                if !a.is_zero() {
                    acc += a * g.get(&[i, s, l]);
                }
                let b = g.get(&[i, k, s]);
                if !b.is_zero() {
                    acc -= b * g.get(&[j, s, l]);
                }
                let cs = c.get(&[i, j, s]);
                if !cs.is_zero() {
                    acc -= cs * g.get(&[s, k, l]);
                }
            }
            acc
        })
    }

    pub fn curvature(&self) -> CurvatureData {
        let r = self.riemann();
        let ric = ricci(&r);
        let scal = trace(&ric);
        let scal_g = if self.kind == ConnectionKind::LeviCivita {
            scal.clone()
        } else {
            trace(&ricci(&self.algebra.levi_civita().riemann()))
        };
        CurvatureData {
            r,
            ric,
            rho: None,
            scal,
            scal_g,
        }
    }

    /// [`Connection::curvature`] with the Ricci form of `s` filled in.
    pub fn curvature_su3(&self, s: &SU3Structure) -> CurvatureData {
        let mut data = self.curvature();
        data.rho = Some(ricci_form(&data.r, s));
        data
    }

    /// `(∇A)_{i j₁…j_p} = (∇_{e_i} A)_{j₁…j_p} = -Σ_slots Γ_{i j_s m} A_{…m…}`.
    pub fn covariant_derivative(&self, a: &Tensor) -> Tensor {
        let p = a.rank();
        Tensor::from_fn(p + 1, |x| {
            let i = x[0];
            let idx = &x[1..];
            let mut acc = Scalar::zero();
            let mut buf = idx.to_vec();
            for slot in 0..p {
                for m in 0..DIM {
                    let gm = self.gamma.get(&[i, idx[slot], m]);
                    if gm.is_zero() {
                        continue;
                    }
                    buf[slot] = m;
                    let v = a.get(&buf);
                    if !v.is_zero() {
                        acc -= gm * v;
                    }
                }
                buf[slot] = idx[slot];
            }
            acc
        })
    }

    pub fn covariant_derivative_form(&self, a: &Form) -> Tensor {
        if a.degree() == 0 {
            return Tensor::zeros(1);
        }
        self.covariant_derivative(&a.to_tensor())
    }
}

/// `Ric_{xy} = Σ_k R_{kxyk}`.
pub fn ricci(r: &Tensor) -> Tensor {
    Tensor::from_fn(2, |x| (0..DIM).map(|k| r.get(&[k, x[0], x[1], k])).sum())
}

fn trace(m: &Tensor) -> Scalar {
    (0..DIM).map(|i| m.get(&[i, i])).sum()
}

/// `ρ_{xy} = ½ R_{xyik} F_{ki}`.
pub fn ricci_form(r: &Tensor, s: &SU3Structure) -> Form {
    let f = s.f();
    let half = Scalar::new(1, 2);
    let t = Tensor::from_fn(2, |x| {
        let mut acc = Scalar::zero();
        for i in 0..DIM {
            for k in 0..DIM {
                let fk = f.component(&[k, i]);
                if !fk.is_zero() {
                    acc += r.get(&[x[0], x[1], i, k]) * &fk;
                }
            }
        }
        &half * &acc
    });
    Form::from_tensor(&t)
}

/// The characteristic connection `∇ = ∇^g + ½T` with
/// `T = -dF(J·, J·, J·) + N`. Checks `∇F = 0` and that the torsion tensor
/// equals `T`.
pub fn torsion_connection(g: &LieAlgebra6, s: &SU3Structure) -> Result<(Connection, Form), Error> {
    let n = nijenhuis(g, s);
    let n_form = n.form().ok_or(Error::NoCharacteristicConnection)?;
    let df = g.exterior_derivative(s.f());
    let t = &n_form - &df.pullback(s.j());
    let conn = Connection::with_skew_torsion(g, &t, ConnectionKind::Torsion);
    if conn.torsion_tensor() != t.to_tensor() {
        return Err(Error::InternalConsistency(
            "torsion of ∇g + ½T differs from T".into(),
        ));
    }
    if !conn.covariant_derivative_form(s.f()).is_zero() {
        return Err(Error::InternalConsistency(format!(
            "torsion connection does not preserve F (T = {})",
            t.render()
        )));
    }
    Ok((conn, t))
}

/// Right-hand side of `T = -*dF + *(θ ∧ F) + ¼(N, Ψ⁺)Ψ⁺ + ¼(N, Ψ⁻)Ψ⁻`.
pub fn torsion_from_cycon_data(
    g: &LieAlgebra6,
    s: &SU3Structure,
    theta: &Form,
    lambda: &Scalar,
    mu: &Scalar,
) -> Form {
    let o = s.orientation();
    let a = -hodge_star(&g.exterior_derivative(s.f()), o);
    let b = hodge_star(&theta.wedge(s.f()).expect("deg 3"), o);
    &(&(&a + &b) + &s.psi_plus().scale(lambda)) + &s.psi_minus().scale(mu)
}

/// `∇^h = ∇ - T`, with torsion `-T`.
pub fn hull_connection(conn: &Connection) -> Connection {
    let t = conn.torsion_tensor();
    Connection::from_gamma(conn.algebra.clone(), &conn.gamma - &t, ConnectionKind::Hull)
}

/// `g(∇^c_X Y, Z) = g(∇^g_X Y, Z) + ½ dF(JX, Y, Z)` on Hermitian structures.
pub fn chern_connection(g: &LieAlgebra6, s: &SU3Structure) -> Result<Connection, Error> {
    if !nijenhuis(g, s).is_zero() {
        return Err(Error::NotIntegrable);
    }
    let df = g.exterior_derivative(s.f()).to_tensor();
    let lc = g.levi_civita();
    let j = s.j();
    let half = Scalar::new(1, 2);
    let gamma = Tensor::from_fn(3, |x| {
        let (i, y, z) = (x[0], x[1], x[2]);
        let jdf: Scalar = (0..DIM)
            .filter(|&a| !j[a][i].is_zero())
            .map(|a| &j[a][i] * df.get(&[a, y, z]))
            .sum();
        lc.gamma.get(&[i, y, z]) + &(&half * &jdf)
    });
    let conn = Connection::from_gamma(g.clone(), gamma, ConnectionKind::Chern);
    if !conn.covariant_derivative(&s.j_tensor()).is_zero() {
        return Err(Error::InternalConsistency(
            "Chern connection does not preserve J".into(),
        ));
    }
    Ok(conn)
}

/// `σ^T_{xyzv} = Σ_s (T_{sxy}T_{szv} - T_{sxz}T_{syv} + T_{sxv}T_{syz})`.
pub fn sigma_t(t: &Form) -> Form {
    let tt = t.to_tensor();
    let sig = Tensor::from_fn(4, |x| {
        let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
        let mut acc = Scalar::zero();
        for s in 0..DIM {
            acc += tt.get(&[s, a, b]) * tt.get(&[s, c, d]);
            acc -= tt.get(&[s, a, c]) * tt.get(&[s, b, d]);
            acc += tt.get(&[s, a, d]) * tt.get(&[s, b, c]);
        }
        acc
    });
    Form::from_tensor(&sig)
}

/// `σ^T = ½ Σ_j (e_j ⌟ T) ∧ (e_j ⌟ T)`, computed by wedging.
pub fn sigma_t_by_wedges(t: &Form) -> Form {
    let mut acc = Form::zero(4);
    for j in 0..DIM {
        let it = t.interior(j);
        acc = &acc + &it.wedge(&it).expect("deg 4");
    }
    acc.scale(&Scalar::new(1, 2))
}

/// Alternating sum `(∇_X T)(Y,Z,V) + (∇_Y T)(Z,X,V) + (∇_Z T)(X,Y,V) - (∇_V T)(X,Y,Z)`
/// as a rank-4 tensor.
pub fn d_nabla_t_tensor(nabla_t: &Tensor) -> Tensor {
    Tensor::from_fn(4, |x| {
        let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
        &(&(nabla_t.get(&[a, b, c, d]) + nabla_t.get(&[b, c, a, d])) + nabla_t.get(&[c, a, b, d]))
            - nabla_t.get(&[d, a, b, c])
    })
}

pub fn d_nabla_t(conn: &Connection, t: &Form) -> Result<Form, Error> {
    let tensor = d_nabla_t_tensor(&conn.covariant_derivative_form(t));
    Form::try_from_tensor(&tensor)
        .map_err(|_| Error::InternalConsistency("d∇T is not a 4-form".into()))
}

/// Pass/fail of one identity; `first_failure` is the first (zero-based)
/// index tuple in lexicographic order at which it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub first_failure: Option<Vec<usize>>,
}

impl IdentityCheck {
    fn compare(name: &'static str, lhs: &Tensor, rhs: &Tensor) -> IdentityCheck {
        let first_failure = lhs.first_difference(rhs);
        IdentityCheck {
            name,
            passed: first_failure.is_none(),
            first_failure,
        }
    }

    fn flag(name: &'static str, passed: bool) -> IdentityCheck {
        IdentityCheck {
            name,
            passed,
            first_failure: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    /// The three predicates of the pair-symmetry equivalence, in order:
    /// `∇T` is a 4-form, `R_{ijkl} = R_{klij}`, `dT = 4∇^g T`.
    pub pair_symmetry: [bool; 3],
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluates the curvature identities of a metric connection with totally
/// skew-symmetric torsion on every frame index tuple.
pub fn verify_curvature_identities(conn: &Connection) -> Result<IdentityReport, Error> {
    let t = conn
        .torsion_form()
        .ok_or(Error::NotAntisymmetric(3))?;
    let alg = &conn.algebra;
    let r = conn.riemann();
    let tt = t.to_tensor();
    let dt = alg.exterior_derivative(&t).to_tensor();
    let sigma = sigma_t(&t).to_tensor();
    let nt = conn.covariant_derivative(&tt);
    let lc = alg.levi_civita();
    let ngt = lc.covariant_derivative(&tt);
    let half = Scalar::new(1, 2);
    let quarter = Scalar::new(1, 4);

    let mut checks = vec![IdentityCheck::flag("metric", conn.is_metric())];
    checks.push(IdentityCheck::compare("R skew in first pair", &r, &-&r.permute(&[1, 0, 2, 3])));
    checks.push(IdentityCheck::compare("R skew in last pair", &r, &-&r.permute(&[0, 1, 3, 2])));

    // R(X,Y,Z,V) + R(Y,Z,X,V) + R(Z,X,Y,V)
    let cyc_first = &(&r + &r.permute(&[1, 2, 0, 3])) + &r.permute(&[2, 0, 1, 3]);
    // (∇_V T)(X,Y,Z) as a tensor in (X,Y,Z,V)
    let nt_last = nt.permute(&[1, 2, 3, 0]);
    checks.push(IdentityCheck::compare(
        "1bi",
        &cyc_first,
        &(&(&dt - &sigma) + &nt_last),
    ));
    // R(V,X,Y,Z) + R(V,Y,Z,X) + R(V,Z,X,Y) in (X,Y,Z,V)
    let cyc_last = &(&r.permute(&[1, 2, 3, 0]) + &r.permute(&[3, 1, 2, 0])) + &r.permute(&[2, 3, 1, 0]);
    let three_halves = Scalar::new(3, 2);
    checks.push(IdentityCheck::compare(
        "gen",
        &(&cyc_first - &cyc_last),
        &(&dt.scale(&three_halves) - &sigma),
    ));
    checks.push(IdentityCheck::compare(
        "1bi1",
        &cyc_last,
        &(&nt_last - &dt.scale(&half)),
    ));
    checks.push(IdentityCheck::compare(
        "dh",
        &dt,
        &(&d_nabla_t_tensor(&nt) + &sigma.scale(&Scalar::int(2))),
    ));
    checks.push(IdentityCheck::compare(
        "tsym",
        &ngt,
        &(&nt + &sigma.scale(&half)),
    ));

    // Ricci identities.
    let ric = ricci(&r);
    let ric_g = ricci(&lc.riemann());
    let delta_t = alg.codifferential(&t).to_tensor();
    let tt_contr = Tensor::from_fn(2, |x| {
        let mut acc = Scalar::zero();
        for k in 0..DIM {
            for l in 0..DIM {
                acc += tt.get(&[x[0], k, l]) * tt.get(&[x[1], k, l]);
            }
        }
        acc
    });
    checks.push(IdentityCheck::compare(
        "rics Ric^g",
        &ric_g,
        &(&(&ric + &delta_t.scale(&half)) + &tt_contr.scale(&quarter)),
    ));
    checks.push(IdentityCheck::compare(
        "rics skew part",
        &(&ric - &ric.permute(&[1, 0])),
        &-&delta_t,
    ));
    checks.push(IdentityCheck::flag(
        "rics Scal^g",
        trace(&ric_g) == &trace(&ric) + &(&quarter * &tt.norm_sq()),
    ));

    // 2R(X,Y,Z,V) - 2R(Z,V,X,Y)
    let two = Scalar::int(2);
    let lhs = (&r - &r.permute(&[2, 3, 0, 1])).scale(&two);
    let rhs = Tensor::from_fn(4, |x| {
        let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
        &(&(nt.get(&[a, b, c, d]) - nt.get(&[b, a, c, d])) - nt.get(&[c, a, b, d]))
            + nt.get(&[d, a, b, c])
    });
    checks.push(IdentityCheck::compare("inst1", &lhs, &rhs));

    let hull = hull_connection(conn);
    let rh = hull.riemann();
    checks.push(IdentityCheck::compare(
        "hust",
        &(&r - &rh.permute(&[2, 3, 0, 1])),
        &dt.scale(&half),
    ));

    let pair_symmetry = [
        nt.is_totally_antisymmetric(),
        r == r.permute(&[2, 3, 0, 1]),
        dt == ngt.scale(&Scalar::int(4)),
    ];
    checks.push(IdentityCheck::flag(
        "4form equivalence",
        pair_symmetry[0] == pair_symmetry[1] && pair_symmetry[1] == pair_symmetry[2],
    ));

    Ok(IdentityReport {
        checks,
        pair_symmetry,
    })
}

/// `Ric = c·g` exactly; returns `c`.
pub fn einstein_check(ric: &Tensor) -> (bool, Option<Scalar>) {
    let c = ric.get(&[0, 0]).clone();
    if *ric == Tensor::identity().scale(&c) {
        (true, Some(c))
    } else {
        (false, None)
    }
}

/// Hodge star with the default orientation, re-exported for the reporting
/// layer.
pub fn star(a: &Form) -> Form {
    hodge_star(a, &Orientation::default())
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
    fn levi_civita_is_metric_and_torsion_free() {
        let g = h3(&q(-1, 2));
        let lc = g.levi_civita();
        assert!(lc.is_metric());
        assert!(lc.torsion_tensor().is_zero());
    }

    #[test]
    fn bi_invariant_levi_civita_is_half_brackets() {
        // so(3) ⊕ so(3)-like: [e1,e2]=e3 cyclic, totally skew constants.
        let mut d: [Form; 6] = std::array::from_fn(|_| Form::zero(2));
        d[0] = -e(&[2, 3]);
        d[1] = e(&[1, 3]);
        d[2] = -e(&[1, 2]);
        let g = LieAlgebra6::new(d).unwrap();
        assert!(g.validate().is_ok());
        let c = g.structure_constants();
        assert!(c.is_totally_antisymmetric());
        assert_eq!(g.levi_civita().gamma(), &c.scale(&q(1, 2)));
    }

    #[test]
    fn h3_torsion_and_coefficients() {
        let t = q(-1, 2);
        let g = h3(&t);
        let s = SU3Structure::standard();
        let (conn, tor) = torsion_connection(&g, &s).unwrap();
        let m2t = Scalar::int(-2) * &t;
        assert_eq!(tor, (&e(&[1, 2, 6]) - &e(&[3, 4, 6])).scale(&m2t));
        // ∇_{e6} e1 = -2t e2
        assert_eq!(conn.gamma().get(&[5, 0, 1]), &m2t);
        assert_eq!(conn.gamma().get(&[5, 2, 3]), &-&m2t);
        assert!(conn.covariant_derivative_form(&tor).is_zero());
        assert!(d_nabla_t(&conn, &tor).unwrap().is_zero());
        let dt = g.exterior_derivative(&tor);
        let expected = e(&[1, 2, 3, 4]).scale(&(Scalar::int(-8) * &t * &t));
        assert_eq!(dt, expected);
        assert_eq!(sigma_t(&tor).scale(&Scalar::int(2)), dt);
    }

    #[test]
    fn sigma_of_simple_form_vanishes() {
        assert!(sigma_t(&e(&[1, 2, 3])).is_zero());
        assert!(sigma_t(&Form::zero(3)).is_zero());
        let t = &e(&[1, 2, 3]) + &e(&[1, 4, 5]).scale(&q(2, 3));
        assert_eq!(sigma_t(&t), sigma_t_by_wedges(&t));
    }

    #[test]
    fn hull_reverses_torsion() {
        let g = h3(&q(3, 5));
        let (conn, tor) = torsion_connection(&g, &SU3Structure::standard()).unwrap();
        let h = hull_connection(&conn);
        assert!(h.is_metric());
        assert_eq!(h.torsion_tensor(), -&tor.to_tensor());
        let flat = hull_connection(&LieAlgebra6::abelian().levi_civita());
        assert!(flat.gamma().is_zero());
    }

    #[test]
    fn identities_on_h3() {
        let g = h3(&q(-1, 2));
        let (conn, _) = torsion_connection(&g, &SU3Structure::standard()).unwrap();
        let rep = verify_curvature_identities(&conn).unwrap();
        for c in &rep.checks {
            assert!(c.passed, "{} failed at {:?}", c.name, c.first_failure);
        }
        assert_eq!(rep.pair_symmetry, [true, true, true]);
    }

    #[test]
    fn covariant_derivative_of_metric_vanishes() {
        let g = h3(&q(1, 3));
        let (conn, _) = torsion_connection(&g, &SU3Structure::standard()).unwrap();
        assert!(conn.covariant_derivative(&Tensor::identity()).is_zero());
    }

    #[test]
    fn chern_on_abelian_is_trivial() {
        let c = chern_connection(&LieAlgebra6::abelian(), &SU3Structure::standard()).unwrap();
        assert!(c.gamma().is_zero());
    }
}
