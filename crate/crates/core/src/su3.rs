//! SU(3)-structures `(F, Ψ⁺, Ψ⁻)` on the model space, their derived data and
//! the intrinsic-torsion quantities computed against a Lie algebra.
//!
//! `J` is read off `F(X, Y) = g(X, JY)`, so `J e_j = Σ_i F_{ij} e_i` and the
//! matrix of `J` coincides with the component matrix of `F`.

use crate::error::Error;
use crate::exterior::{hodge_star, Blade, Form, Orientation, Tensor, DIM};
use crate::liealg::{LieAlgebra6, Mat6};
use crate::linalg::Matrix;
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SU3Structure {
    f: Form,
    psi_plus: Form,
    psi_minus: Form,
    orientation: Orientation,
    j: Mat6,
    phi: Form,
}

impl SU3Structure {
    pub fn new(
        f: Form,
        psi_plus: Form,
        psi_minus: Form,
        orientation: Orientation,
    ) -> Result<SU3Structure, Error> {
        if f.degree() != 2 || psi_plus.degree() != 3 || psi_minus.degree() != 3 {
            return Err(Error::InvalidStructure(format!(
                "expected degrees (2, 3, 3), got ({}, {}, {})",
                f.degree(),
                psi_plus.degree(),
                psi_minus.degree()
            )));
        }
        let j = std::array::from_fn(|a| std::array::from_fn(|b| f.component(&[a, b])));
        let phi = f.wedge(&f).expect("degree 4").scale(&Scalar::new(1, 2));
        Ok(SU3Structure {
            f,
            psi_plus,
            psi_minus,
            orientation,
            j,
            phi,
        })
    }

    /// `F = -e12 - e34 - e56`, `Ψ⁺ = -e135 + e236 + e146 + e245`,
    /// `Ψ⁻ = -e136 - e145 - e235 + e246`.
    pub fn standard() -> SU3Structure {
        use crate::exterior::e;
        let f = -(&(&e(&[1, 2]) + &e(&[3, 4])) + &e(&[5, 6]));
        let psi_plus = &(&(&e(&[2, 3, 6]) + &e(&[1, 4, 6])) + &e(&[2, 4, 5])) - &e(&[1, 3, 5]);
        let psi_minus = &e(&[2, 4, 6]) - &(&(&e(&[1, 3, 6]) + &e(&[1, 4, 5])) + &e(&[2, 3, 5]));
        SU3Structure::new(f, psi_plus, psi_minus, Orientation::default()).expect("degrees")
    }

    pub fn f(&self) -> &Form {
        &self.f
    }

    pub fn psi_plus(&self) -> &Form {
        &self.psi_plus
    }

    pub fn psi_minus(&self) -> &Form {
        &self.psi_minus
    }

    /// `Φ = ½ F ∧ F`.
    pub fn phi(&self) -> &Form {
        &self.phi
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// Matrix of `J`: `j()[i][k]` is the `e_i` component of `J e_k`.
    pub fn j(&self) -> &Mat6 {
        &self.j
    }

    pub fn j_tensor(&self) -> Tensor {
        Tensor::from_fn(2, |x| self.j[x[0]][x[1]].clone())
    }

    pub fn apply_j(&self, v: &[Scalar; DIM]) -> [Scalar; DIM] {
        std::array::from_fn(|i| (0..DIM).map(|k| &self.j[i][k] * &v[k]).sum())
    }

    /// `Jβ = (-1)^p β(J·, …, J·)` on p-forms.
    pub fn j_form(&self, beta: &Form) -> Form {
        let pulled = beta.pullback(&self.j);
        if beta.degree().is_multiple_of(2) {
            pulled
        } else {
            -pulled
        }
    }

    /// Isometric transport along an orthogonal map, matching
    /// [`LieAlgebra6::transported`].
    pub fn transported(&self, phi: &Mat6) -> Result<SU3Structure, Error> {
        SU3Structure::new(
            self.f.pullback(phi),
            self.psi_plus.pullback(phi),
            self.psi_minus.pullback(phi),
            self.orientation,
        )
    }

    /// Multiplies `Ψ` by the unit complex number `a + ib` (`a² + b² = 1`).
    pub fn rotated_phase(&self, a: &Scalar, b: &Scalar) -> Result<SU3Structure, Error> {
        let pp = &self.psi_plus.scale(a) - &self.psi_minus.scale(b);
        let pm = &self.psi_plus.scale(b) + &self.psi_minus.scale(a);
        SU3Structure::new(self.f.clone(), pp, pm, self.orientation)
    }
}

fn vec1(f: &Form) -> [Scalar; DIM] {
    std::array::from_fn(|i| f.component(&[i]))
}

fn one_form(v: &[Scalar; DIM]) -> Form {
    let mut f = Form::zero(1);
    for (i, c) in v.iter().enumerate() {
        f.add_term(Blade::from_mask(1 << i), c.clone());
    }
    f
}

/// Outcome of [`validate_su3`]: identities in checking order, with the first
/// failure available through [`Su3Validation::first_violation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Su3Validation {
    pub checks: Vec<(&'static str, bool)>,
}

impl Su3Validation {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_violation(&self) -> Option<&'static str> {
        self.checks.iter().find(|(_, ok)| !ok).map(|(n, _)| *n)
    }
}

fn tensor_contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> Tensor {
    a.contract(b, pairs)
        .expect("axes in range")
        .into_tensor()
        .expect("free axes remain")
}

/// Contraction identities relating `F`, `Ψ±`, `Φ` with full index sums.
pub fn iden_identities(s: &SU3Structure) -> Vec<(&'static str, bool)> {
    let f = s.f.to_tensor();
    let pp = s.psi_plus.to_tensor();
    let pm = s.psi_minus.to_tensor();
    let phi = s.phi.to_tensor();
    let delta = Tensor::identity();
    let fs = |c: i64| f.scale(&Scalar::int(c));

    let phi_from_f = Tensor::from_fn(4, |x| {
        let (j, sx, l, m) = (x[0], x[1], x[2], x[3]);
        let g = |a: usize, b: usize| f.get(&[a, b]).clone();
        &(&(g(j, sx) * g(l, m)) + &(g(sx, l) * g(j, m))) + &(g(l, j) * g(sx, m))
    });
    let zero1 = Tensor::zeros(1);

    vec![
        ("Phi_jslm = F_js F_lm + F_sl F_jm + F_lj F_sm", phi == phi_from_f),
        ("Psi+_ipq F_pq = 0", tensor_contract(&pp, &f, &[(1, 0), (2, 1)]) == zero1),
        ("Psi-_ipq F_pq = 0", tensor_contract(&pm, &f, &[(1, 0), (2, 1)]) == zero1),
        (
            "Phi_ijkl Psi+_jkl = 0",
            tensor_contract(&phi, &pp, &[(1, 0), (2, 1), (3, 2)]) == zero1,
        ),
        (
            "Phi_ijkl Psi-_jkl = 0",
            tensor_contract(&phi, &pm, &[(1, 0), (2, 1), (3, 2)]) == zero1,
        ),
        ("F_ip F_pj = -delta_ij", tensor_contract(&f, &f, &[(1, 0)]) == -&delta),
        ("Psi+_ijs F_sk = -Psi-_ijk", tensor_contract(&pp, &f, &[(2, 0)]) == -&pm),
        ("Psi-_ijs F_sk = Psi+_ijk", tensor_contract(&pm, &f, &[(2, 0)]) == pp),
        (
            "Psi+_ipq Psi-_jpq = -4 F_ij",
            tensor_contract(&pp, &pm, &[(1, 1), (2, 2)]) == fs(-4),
        ),
        (
            "Psi+_ipq Psi+_jpq = 4 delta_ij",
            tensor_contract(&pp, &pp, &[(1, 1), (2, 2)]) == delta.scale(&Scalar::int(4)),
        ),
        (
            "Psi-_ipq Psi-_jpq = 4 delta_ij",
            tensor_contract(&pm, &pm, &[(1, 1), (2, 2)]) == delta.scale(&Scalar::int(4)),
        ),
        ("Phi_ijkl F_kl = 4 F_ij", tensor_contract(&phi, &f, &[(2, 0), (3, 1)]) == fs(4)),
        (
            "Phi_ijkl Psi+_klp = 2 Psi+_ijp",
            tensor_contract(&phi, &pp, &[(2, 0), (3, 1)]) == pp.scale(&Scalar::int(2)),
        ),
        (
            "Phi_ijkl Psi-_klp = 2 Psi-_ijp",
            tensor_contract(&phi, &pm, &[(2, 0), (3, 1)]) == pm.scale(&Scalar::int(2)),
        ),
    ]
}

/// Checks, in order: `J² = -1`, the Hodge relations, the wedge compatibility
/// relations and every contraction identity.
pub fn validate_su3(s: &SU3Structure) -> Su3Validation {
    let o = &s.orientation;
    let f = &s.f;
    let jj_ok = (0..DIM).all(|a| {
        (0..DIM).all(|b| {
            let v: Scalar = (0..DIM).map(|p| &s.j[a][p] * &s.j[p][b]).sum();
            v == if a == b { -Scalar::one() } else { Scalar::zero() }
        })
    });
    let f3 = f.wedge(f).and_then(|x| x.wedge(f)).expect("degree 6");
    let mut checks = vec![
        ("J^2 = -1", jj_ok),
        ("*F = -Phi", hodge_star(f, o) == -&s.phi),
        ("*Psi+ = Psi-", hodge_star(&s.psi_plus, o) == s.psi_minus),
        ("*Psi- = -Psi+", hodge_star(&s.psi_minus, o) == -&s.psi_plus),
        ("*Phi = -F", hodge_star(&s.phi, o) == -f),
        ("F ^ Psi+ = 0", f.wedge(&s.psi_plus).expect("deg 5").is_zero()),
        ("F ^ Psi- = 0", f.wedge(&s.psi_minus).expect("deg 5").is_zero()),
        (
            "Psi+ ^ Psi- = -2/3 F^3",
            s.psi_plus.wedge(&s.psi_minus).expect("deg 6") == f3.scale(&Scalar::new(-2, 3)),
        ),
    ];
    checks.extend(iden_identities(s));
    Su3Validation { checks }
}

/// Nijenhuis tensor `N(X, Y, Z) = g([JX, JY] - [X, Y] - J[JX, Y] - J[X, JY], Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nijenhuis {
    pub tensor: Tensor,
    /// Totally antisymmetric: the structure is of type G1.
    pub is_skew: bool,
}

impl Nijenhuis {
    pub fn form(&self) -> Option<Form> {
        self.is_skew.then(|| Form::from_tensor(&self.tensor))
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }
}

pub fn nijenhuis(g: &LieAlgebra6, s: &SU3Structure) -> Nijenhuis {
    let unit = |i: usize| -> [Scalar; DIM] {
        std::array::from_fn(|k| if k == i { Scalar::one() } else { Scalar::zero() })
    };
    let mut tensor = Tensor::zeros(3);
    for a in 0..DIM {
        for b in 0..DIM {
            let x = unit(a);
            let y = unit(b);
            let jx = s.apply_j(&x);
            let jy = s.apply_j(&y);
            let t1 = g.bracket(&jx, &jy);
            let t2 = g.bracket(&x, &y);
            let t3 = s.apply_j(&g.bracket(&jx, &y));
            let t4 = s.apply_j(&g.bracket(&x, &jy));
            for c in 0..DIM {
                tensor.set(&[a, b, c], &(&(&t1[c] - &t2[c]) - &t3[c]) - &t4[c]);
            }
        }
    }
    let is_skew = tensor.is_totally_antisymmetric();
    Nijenhuis { tensor, is_skew }
}

/// `θ = δF ∘ J`, i.e. `θ(X) = δF(JX)`.
pub fn lee_form_from_codifferential(g: &LieAlgebra6, s: &SU3Structure) -> Form {
    let df = vec1(&g.codifferential(&s.f));
    let theta: [Scalar; DIM] =
        std::array::from_fn(|x| (0..DIM).map(|a| &df[a] * &s.j[a][x]).sum());
    one_form(&theta)
}

/// Lee form of a G1 structure from its torsion. Three independent routes are
/// evaluated (`-½T(JX, e_i, Je_i)`, `½T_{sjk}F_{jk}F_{si}` and `δF∘J`, plus
/// `(1/6)T_{jkl}Φ_{jkli}`); any disagreement is an internal error.
pub fn lee_form(g: &LieAlgebra6, s: &SU3Structure, t: &Form) -> Result<Form, Error> {
    let tt = t.to_tensor();
    let f = s.f.to_tensor();
    let phi = s.phi.to_tensor();
    let j = &s.j;
    let liff: [Scalar; DIM] = std::array::from_fn(|x| {
        let mut acc = Scalar::zero();
        for a in 0..DIM {
            if j[a][x].is_zero() {
                continue;
            }
            for i in 0..DIM {
                for b in 0..DIM {
                    if !j[b][i].is_zero() {
                        acc += &(&j[a][x] * tt.get(&[a, i, b])) * &j[b][i];
                    }
                }
            }
        }
        &acc * &Scalar::new(-1, 2)
    });
    let tit: [Scalar; DIM] = std::array::from_fn(|i| {
        let mut acc = Scalar::zero();
        for sx in 0..DIM {
            for jx in 0..DIM {
                for k in 0..DIM {
                    acc += &(tt.get(&[sx, jx, k]) * f.get(&[jx, k])) * f.get(&[sx, i]);
                }
            }
        }
        &acc * &Scalar::new(1, 2)
    });
    let via_phi = tensor_contract(&tt, &phi, &[(0, 0), (1, 1), (2, 2)]).scale(&Scalar::new(1, 6));
    let via_phi: [Scalar; DIM] = std::array::from_fn(|i| via_phi.get(&[i]).clone());
    let via_delta = vec1(&lee_form_from_codifferential(g, s));
    if liff != tit || tit != via_phi || via_phi != via_delta {
        return Err(Error::InternalConsistency(format!(
            "Lee form routes disagree: liff={:?} tit={:?} phi={:?} deltaF∘J={:?}",
            liff, tit, via_phi, via_delta
        )));
    }
    Ok(one_form(&liff))
}

/// `λ = ¼(N, Ψ⁺)`, `μ = ¼(N, Ψ⁻)`, cross-checked against
/// `λ = (1/6)T_{klm}Ψ⁺_{klm}` (and likewise `μ`) and `N = λΨ⁺ + μΨ⁻`.
pub fn lambda_mu(s: &SU3Structure, n: &Form, t: &Form) -> Result<(Scalar, Scalar), Error> {
    let quarter = Scalar::new(1, 4);
    let lambda = &quarter * &n.inner(&s.psi_plus)?;
    let mu = &quarter * &n.inner(&s.psi_minus)?;
    // (1/6) full sum = sorted-tuple inner product
    let lambda_t = t.inner(&s.psi_plus)?;
    let mu_t = t.inner(&s.psi_minus)?;
    if lambda != lambda_t || mu != mu_t {
        return Err(Error::InternalConsistency(format!(
            "lambda/mu routes disagree: N gives ({lambda}, {mu}), T gives ({lambda_t}, {mu_t})"
        )));
    }
    let rebuilt = &s.psi_plus.scale(&lambda) + &s.psi_minus.scale(&mu);
    if &rebuilt != n {
        return Err(Error::InternalConsistency(format!(
            "N = lambda Psi+ + mu Psi- fails: N = {}, rebuilt = {}",
            n.render(),
            rebuilt.render()
        )));
    }
    Ok((lambda, mu))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda2Parts {
    pub one: Form,
    pub six: Form,
    pub eight: Form,
}

/// Splits a 2-form into its `Λ²₁ ⊕ Λ²₆ ⊕ Λ²₈` components.
pub fn project_lambda2(s: &SU3Structure, beta: &Form) -> Lambda2Parts {
    assert_eq!(beta.degree(), 2);
    let coef = &beta.inner(&s.f).expect("2-forms") / &s.f.norm_sq();
    let one = s.f.scale(&coef);
    let jb = s.j_form(beta);
    let half = Scalar::new(1, 2);
    let six = (beta - &jb).scale(&half);
    let eight = &(beta + &jb).scale(&half) - &one;
    Lambda2Parts { one, six, eight }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda3Parts {
    pub re: Form,
    pub im: Form,
    pub six: Form,
    /// The 1-form `α` with `six = α ∧ F`.
    pub six_alpha: Form,
    pub twelve: Form,
}

/// Splits a 3-form into `Λ³_Re ⊕ Λ³_Im ⊕ Λ³₆ ⊕ Λ³₁₂`. The `Λ³₆` part is found
/// by solving the normal equations for `α` in `α ∧ F`; the remainder is
/// checked to be annihilated by `F`, `Ψ⁺` and `Ψ⁻`.
pub fn project_lambda3(s: &SU3Structure, gamma: &Form) -> Result<Lambda3Parts, Error> {
    assert_eq!(gamma.degree(), 3);
    let re = s
        .psi_plus
        .scale(&(&gamma.inner(&s.psi_plus)? / &s.psi_plus.norm_sq()));
    let im = s
        .psi_minus
        .scale(&(&gamma.inner(&s.psi_minus)? / &s.psi_minus.norm_sq()));
    let rest = &(gamma - &re) - &im;
    let gens: Vec<Form> = (0..DIM)
        .map(|k| Form::basis(k).wedge(&s.f).expect("deg 3"))
        .collect();
    let gram = Matrix::from_rows(
        gens.iter()
            .map(|a| gens.iter().map(|b| a.inner(b).expect("deg 3")).collect())
            .collect(),
    );
    let rhs: Vec<Scalar> = gens.iter().map(|a| rest.inner(a).expect("deg 3")).collect();
    let alpha = gram.solve(&rhs).ok_or_else(|| {
        Error::InternalConsistency("singular Gram matrix for the Λ³₆ component".into())
    })?;
    let six_alpha = one_form(&alpha.try_into().expect("six entries"));
    let six = six_alpha.wedge(&s.f)?;
    let twelve = &rest - &six;
    let annihilated = twelve.wedge(&s.f)?.is_zero()
        && twelve.wedge(&s.psi_plus)?.is_zero()
        && twelve.wedge(&s.psi_minus)?.is_zero();
    if !annihilated {
        return Err(Error::InternalConsistency(format!(
            "Λ³₁₂ remainder {} is not annihilated by F, Ψ±",
            twelve.render()
        )));
    }
    Ok(Lambda3Parts {
        re,
        im,
        six,
        six_alpha,
        twelve,
    })
}

/// Rank of `A ↦ (Λ³_Re ⊕ Λ³_Im ⊕ Λ³₆ components of e_i ⌟ A)_{i=1..6}` on
/// 4-forms. Injectivity (rank 15) means `e_i ⌟ A ∈ Λ³₁₂` for all `i` forces
/// `A = 0`.
pub fn check_prop_4form(s: &SU3Structure) -> Result<usize, Error> {
    let basis = Blade::all(4);
    let threes = Blade::all(3);
    let mut columns = Vec::with_capacity(basis.len());
    for b in &basis {
        columns.push(prop_4form_image(s, &Form::monomial(*b, Scalar::one()))?);
    }
    let rows = (0..DIM * threes.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    Ok(Matrix::from_rows(rows).rank())
}

/// Image of a 4-form under the map used by [`check_prop_4form`], as 120
/// coefficients (six blocks of twenty).
pub fn prop_4form_image(s: &SU3Structure, a: &Form) -> Result<Vec<Scalar>, Error> {
    assert_eq!(a.degree(), 4);
    let threes = Blade::all(3);
    let mut out = Vec::with_capacity(DIM * threes.len());
    for i in 0..DIM {
        let parts = project_lambda3(s, &a.interior(i))?;
        let non12 = &(&parts.re + &parts.im) + &parts.six;
        out.extend(threes.iter().map(|b| non12.coeff(*b)));
    }
    Ok(out)
}

/// Gray–Hervella / Chiossi–Salamon class membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassFlags {
    pub is_g1: bool,
    pub is_hermitian: bool,
    pub is_balanced: bool,
    pub is_nearly_kahler: bool,
    pub is_kahler: bool,
    pub is_balanced_g1: bool,
}

pub fn classify(g: &LieAlgebra6, s: &SU3Structure) -> Result<ClassFlags, Error> {
    let n = nijenhuis(g, s);
    let df = g.exterior_derivative(&s.f);
    let theta = lee_form_from_codifferential(g, s);
    let parts = project_lambda3(s, &df)?;
    let df_plus_zero = parts.six.is_zero() && parts.twelve.is_zero();
    let is_g1 = n.is_skew;
    let is_hermitian = n.is_zero();
    let is_balanced = theta.is_zero();
    Ok(ClassFlags {
        is_g1,
        is_hermitian,
        is_balanced,
        is_nearly_kahler: is_g1 && !is_hermitian && df_plus_zero,
        is_kahler: is_hermitian && df.is_zero(),
        is_balanced_g1: is_g1 && is_balanced,
    })
}

/// `dF⁻(X, Y, Z) = ¾ N(JX, Y, Z)` on G1 structures, where `dF⁻` is the
/// `Λ³_Re ⊕ Λ³_Im` part of `dF`.
pub fn check_df_minus(g: &LieAlgebra6, s: &SU3Structure, n: &Nijenhuis) -> Result<bool, Error> {
    let parts = project_lambda3(s, &g.exterior_derivative(&s.f))?;
    let df_minus = (&parts.re + &parts.im).to_tensor();
    let three_quarters = Scalar::new(3, 4);
    let rhs = Tensor::from_fn(3, |x| {
        let v: Scalar = (0..DIM)
            .map(|a| &s.j[a][x[0]] * n.tensor.get(&[a, x[1], x[2]]))
            .sum();
        &three_quarters * &v
    });
    Ok(df_minus == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::e;

    #[test]
    fn standard_structure_validates() {
        let s = SU3Structure::standard();
        let v = validate_su3(&s);
        assert!(v.is_ok(), "{:?}", v.first_violation());
        assert_eq!(
            s.phi(),
            &(&(&e(&[1, 2, 3, 4]) + &e(&[1, 2, 5, 6])) + &e(&[3, 4, 5, 6]))
        );
        // J e1 = e2
        assert_eq!(s.j()[1][0], Scalar::one());
        assert_eq!(s.psi_plus().inner(s.psi_plus()).unwrap(), Scalar::int(4));
    }

    #[test]
    fn negated_psi_minus_breaks_star() {
        let s = SU3Structure::standard();
        let bad = SU3Structure::new(
            s.f().clone(),
            s.psi_plus().clone(),
            -s.psi_minus(),
            Orientation::default(),
        )
        .unwrap();
        assert_eq!(validate_su3(&bad).first_violation(), Some("*Psi+ = Psi-"));
    }

    #[test]
    fn doubled_f_breaks_j_squared() {
        let s = SU3Structure::standard();
        let bad = SU3Structure::new(
            s.f().scale(&Scalar::int(2)),
            s.psi_plus().clone(),
            s.psi_minus().clone(),
            Orientation::default(),
        )
        .unwrap();
        assert_eq!(validate_su3(&bad).first_violation(), Some("J^2 = -1"));
    }

    #[test]
    fn lambda2_of_f_and_e13() {
        let s = SU3Structure::standard();
        let p = project_lambda2(&s, s.f());
        assert_eq!(p.one, *s.f());
        assert!(p.six.is_zero() && p.eight.is_zero());

        let beta = e(&[1, 3]);
        let p = project_lambda2(&s, &beta);
        assert_eq!(&(&p.one + &p.six) + &p.eight, beta);
        assert!(p.one.is_zero());
        assert_eq!(s.j_form(&p.six), -&p.six);
        assert_eq!(s.j_form(&p.eight), p.eight);
        let f2 = s.f().wedge(s.f()).unwrap();
        assert!(p.eight.wedge(&f2).unwrap().is_zero());
        // Direct projector oracle: J e13 = e13(J·, J·) = e24, so
        // β6 = ½(e13 - e24), β8 = ½(e13 + e24).
        let half = Scalar::new(1, 2);
        assert_eq!(p.six, (&e(&[1, 3]) - &e(&[2, 4])).scale(&half));
        assert_eq!(p.eight, (&e(&[1, 3]) + &e(&[2, 4])).scale(&half));
    }

    fn span_dim(forms: impl Iterator<Item = Form>, degree: usize) -> usize {
        let blades = Blade::all(degree);
        let rows = forms
            .map(|f| blades.iter().map(|b| f.coeff(*b)).collect())
            .collect();
        Matrix::from_rows(rows).rank()
    }

    #[test]
    fn projector_ranks() {
        let s = SU3Structure::standard();
        let parts: Vec<Lambda2Parts> = Blade::all(2)
            .into_iter()
            .map(|b| project_lambda2(&s, &Form::monomial(b, Scalar::one())))
            .collect();
        assert_eq!(span_dim(parts.iter().map(|p| p.one.clone()), 2), 1);
        assert_eq!(span_dim(parts.iter().map(|p| p.six.clone()), 2), 6);
        assert_eq!(span_dim(parts.iter().map(|p| p.eight.clone()), 2), 8);

        let parts: Vec<Lambda3Parts> = Blade::all(3)
            .into_iter()
            .map(|b| project_lambda3(&s, &Form::monomial(b, Scalar::one())).unwrap())
            .collect();
        assert_eq!(span_dim(parts.iter().map(|p| p.re.clone()), 3), 1);
        assert_eq!(span_dim(parts.iter().map(|p| p.im.clone()), 3), 1);
        assert_eq!(span_dim(parts.iter().map(|p| p.six.clone()), 3), 6);
        assert_eq!(span_dim(parts.iter().map(|p| p.twelve.clone()), 3), 12);
    }

    #[test]
    fn lambda3_trivial_members() {
        let s = SU3Structure::standard();
        let p = project_lambda3(&s, s.psi_plus()).unwrap();
        assert_eq!(p.re, *s.psi_plus());
        assert!(p.im.is_zero() && p.six.is_zero() && p.twelve.is_zero());
        let g = Form::basis(0).wedge(s.f()).unwrap();
        let p = project_lambda3(&s, &g).unwrap();
        assert_eq!(p.six, g);
        assert_eq!(p.six_alpha, Form::basis(0));
        assert!(p.re.is_zero() && p.im.is_zero() && p.twelve.is_zero());
    }

    #[test]
    fn four_form_proposition() {
        let s = SU3Structure::standard();
        assert_eq!(check_prop_4form(&s).unwrap(), 15);
        let img = prop_4form_image(&s, s.phi()).unwrap();
        assert!(img.iter().any(|x| !x.is_zero()));
        let img = prop_4form_image(&s, &Form::zero(4)).unwrap();
        assert!(img.iter().all(Scalar::is_zero));
    }

    #[test]
    fn abelian_is_kahler() {
        let g = LieAlgebra6::abelian();
        let s = SU3Structure::standard();
        let flags = classify(&g, &s).unwrap();
        assert!(flags.is_kahler && flags.is_g1 && flags.is_hermitian && flags.is_balanced);
        assert!(!flags.is_nearly_kahler);
        let n = nijenhuis(&g, &s);
        assert!(n.is_zero() && n.is_skew);
    }
}
