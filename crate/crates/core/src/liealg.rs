//! Six-dimensional real Lie algebras given by the differentials of an
//! orthonormal coframe, and the calculus of left-invariant forms on them.
//!
//! Brackets are `[e_i, e_j] = c_{ijk} e_k`; for invariant 1-forms
//! `dα(X, Y) = -α([X, Y])`, hence `d e_k = -½ c_{ijk} e_i ∧ e_j`.

use crate::connection::{Connection, ConnectionKind};
use crate::error::Error;
use crate::exterior::{hodge_star, Blade, Form, Orientation, Tensor, DIM};
use crate::linalg::Matrix;
use crate::Scalar;

pub type Mat6 = [[Scalar; DIM]; DIM];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra6 {
    d1forms: [Form; DIM],
    c: Tensor,
}

/// First `k` (one-based) for which `d(d e_k)` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub k: usize,
    pub dd: Form,
}

impl LieAlgebra6 {
    /// From `d e_1, …, d e_6`. Each must be a 2-form.
    pub fn new(d1forms: [Form; DIM]) -> Result<LieAlgebra6, Error> {
        if let Some(k) = d1forms.iter().position(|f| f.degree() != 2) {
            return Err(Error::InvalidAlgebra(format!(
                "d e{} has degree {}, expected 2",
                k + 1,
                d1forms[k].degree()
            )));
        }
        let c = Tensor::from_fn(3, |idx| -d1forms[idx[2]].component(&idx[..2]));
        Ok(LieAlgebra6 { d1forms, c })
    }

    pub fn abelian() -> LieAlgebra6 {
        LieAlgebra6::new(std::array::from_fn(|_| Form::zero(2))).expect("2-forms")
    }

    pub fn d1forms(&self) -> &[Form; DIM] {
        &self.d1forms
    }

    /// `c_{ijk} = g([e_i, e_j], e_k)`.
    pub fn structure_constants(&self) -> &Tensor {
        &self.c
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.c.get(&[i, j, k])
    }

    pub fn bracket(&self, u: &[Scalar; DIM], v: &[Scalar; DIM]) -> [Scalar; DIM] {
        let mut out: [Scalar; DIM] = Default::default();
        for i in 0..DIM {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let cijk = self.c(i, j, k);
                    if !cijk.is_zero() {
                        *o += &uv * cijk;
                    }
                }
            }
        }
        out
    }

    /// Jacobi identity, checked as `d² e_k = 0`.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        for k in 0..DIM {
            let dd = self.exterior_derivative(&self.d1forms[k]);
            if !dd.is_zero() {
                return Err(JacobiViolation { k: k + 1, dd });
            }
        }
        Ok(())
    }

    /// Exterior derivative of an invariant form, via the Leibniz rule on
    /// monomials.
    pub fn exterior_derivative(&self, alpha: &Form) -> Form {
        let p = alpha.degree();
        let mut out = Form::zero((p + 1).min(DIM));
        if p == DIM {
            return Form::zero(DIM);
        }
        for (b, coeff) in alpha.terms() {
            let idx: Vec<usize> = b.indices().collect();
            for (pos, &k) in idx.iter().enumerate() {
                if self.d1forms[k].is_zero() {
                    continue;
                }
                let mut term = Form::scalar(if pos % 2 == 0 {
                    coeff.clone()
                } else {
                    -coeff
                });
                for (q, &i) in idx.iter().enumerate() {
                    let factor = if q == pos {
                        self.d1forms[k].clone()
                    } else {
                        Form::basis(i)
                    };
                    term = term.wedge(&factor).expect("degree ≤ 6");
                }
                out = &out + &term;
            }
        }
        out
    }

    /// `δ = -*d*`, the formal adjoint of `d` in even dimension.
    pub fn codifferential(&self, alpha: &Form) -> Form {
        let o = Orientation::default();
        if alpha.degree() == 0 {
            return Form::zero(0);
        }
        -hodge_star(&self.exterior_derivative(&hodge_star(alpha, &o)), &o)
    }

    /// `trace(ad_{e_j}) = Σ_i c_{jii}` vanishes for every `j`.
    pub fn is_unimodular(&self) -> bool {
        (0..DIM).all(|j| (0..DIM).map(|i| self.c(j, i, i)).sum::<Scalar>().is_zero())
    }

    /// Koszul formula `Γ_{ijk} = ½(c_{ijk} - c_{jki} + c_{kij})`.
    pub fn levi_civita(&self) -> Connection {
        let half = Scalar::new(1, 2);
        let gamma = Tensor::from_fn(3, |x| {
            let (i, j, k) = (x[0], x[1], x[2]);
            &half * &(&(self.c(i, j, k) - self.c(j, k, i)) + self.c(k, i, j))
        });
        Connection::from_gamma(self.clone(), gamma, ConnectionKind::LeviCivita)
    }

    /// Isometric copy along an orthogonal map `phi` (columns are images of
    /// the frame): `[x, y]' = phi⁻¹[phi x, phi y]`. Forms transported with
    /// [`Form::pullback`] by the same map describe the same geometry.
    pub fn transported(&self, phi: &Mat6) -> Result<LieAlgebra6, Error> {
        let inv = invert(phi).ok_or_else(|| Error::InvalidAlgebra("singular frame change".into()))?;
        let d = std::array::from_fn(|k| {
            let mut acc = Form::zero(2);
            for j in 0..DIM {
                if !inv[k][j].is_zero() {
                    acc = &acc + &self.d1forms[j].scale(&inv[k][j]);
                }
            }
            acc.pullback(phi)
        });
        LieAlgebra6::new(d)
    }

    /// Scales every bracket by `s` (a homothety of the metric Lie algebra).
    pub fn scaled(&self, s: &Scalar) -> LieAlgebra6 {
        LieAlgebra6::new(std::array::from_fn(|k| self.d1forms[k].scale(s))).expect("2-forms")
    }
}

pub fn invert(m: &Mat6) -> Option<Mat6> {
    let a = Matrix::from_rows(m.iter().map(|r| r.to_vec()).collect());
    let mut out: Mat6 = Default::default();
    for col in 0..DIM {
        let mut unit = vec![Scalar::zero(); DIM];
        unit[col] = Scalar::one();
        let x = a.solve(&unit)?;
        for (row, v) in x.into_iter().enumerate() {
            out[row][col] = v;
        }
    }
    Some(out)
}

/// Full antisymmetric 3-form `dα(X0, X1, X2, …)` via the bracket formula,
/// used to cross-check the Leibniz implementation.
pub fn exterior_derivative_by_brackets(g: &LieAlgebra6, alpha: &Form) -> Form {
    let p = alpha.degree();
    let mut out = Form::zero(p + 1);
    for b in Blade::all(p + 1) {
        let xs: Vec<usize> = b.indices().collect();
        let mut acc = Scalar::zero();
        for i in 0..xs.len() {
            for j in (i + 1)..xs.len() {
                let rest: Vec<usize> = xs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x)
                    .collect();
                for s in 0..DIM {
                    let cs = g.c(xs[i], xs[j], s);
                    if cs.is_zero() {
                        continue;
                    }
                    let mut args = vec![s];
                    args.extend_from_slice(&rest);
                    let term = cs * &alpha.component(&args);
                    if (i + j) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
        }
        out.add_term(b, acc);
    }
    out
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
    fn abelian_is_valid_and_flat() {
        let g = LieAlgebra6::abelian();
        assert!(g.validate().is_ok());
        assert!(g.is_unimodular());
        assert!(g.levi_civita().gamma().is_zero());
        assert!(g.exterior_derivative(&e(&[1, 2, 3])).is_zero());
        assert!(g.codifferential(&e(&[4])).is_zero());
    }

    #[test]
    fn tampered_h3_fails_jacobi_at_k6() {
        let g = h3(&q(-1, 2));
        assert!(g.validate().is_ok());
        let mut d = g.d1forms().clone();
        d[0] = e(&[2, 6]);
        let bad = LieAlgebra6::new(d).unwrap();
        let v = bad.validate().unwrap_err();
        // d(de6) = -2t(de1∧e2) = -2t e26∧e2 = 0, so the first failure is
        // d(de1) = d(e26) = -e2∧de6 = -2t e234 (here t = -1/2).
        assert_eq!(v.k, 1);
        assert_eq!(v.dd, e(&[2, 3, 4]));
        assert!(bad.exterior_derivative(&bad.d1forms()[5]).is_zero());
    }

    #[test]
    fn h3_derivative_of_e126() {
        let t = q(-1, 2);
        let g = h3(&t);
        let expected = e(&[1, 2, 3, 4]).scale(&(Scalar::int(2) * &t));
        assert_eq!(g.exterior_derivative(&e(&[1, 2, 6])), expected);
    }

    #[test]
    fn unimodularity() {
        assert!(h3(&Scalar::one()).is_unimodular());
        let mut d: [Form; 6] = std::array::from_fn(|_| Form::zero(2));
        d[0] = e(&[1, 2]);
        let g = LieAlgebra6::new(d).unwrap();
        assert!(g.validate().is_ok());
        assert!(!g.is_unimodular());
    }

    #[test]
    fn bracket_reads_structure_constants() {
        let g = h3(&Scalar::one());
        let mut e1: [Scalar; 6] = Default::default();
        let mut e2: [Scalar; 6] = Default::default();
        e1[0] = Scalar::one();
        e2[1] = Scalar::one();
        // de6 = -2(e12 - e34)  =>  [e1, e2] = 2 e6
        let b = g.bracket(&e1, &e2);
        assert_eq!(b[5], Scalar::int(2));
    }

    #[test]
    fn non_two_form_rejected() {
        let mut d: [Form; 6] = std::array::from_fn(|_| Form::zero(2));
        d[2] = e(&[1]);
        assert!(matches!(LieAlgebra6::new(d), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn leibniz_matches_bracket_formula() {
        let g = h3(&q(3, 7));
        for b in Blade::all(2).into_iter().chain(Blade::all(3)) {
            let f = Form::monomial(b, Scalar::one());
            assert_eq!(g.exterior_derivative(&f), exterior_derivative_by_brackets(&g, &f));
        }
    }
}
