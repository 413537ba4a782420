//! Sparse exterior forms on the oriented Euclidean 6-space.
//!
//! A basis monomial `e_{i1..ip}` (with `i1 < .. < ip`) is a [`Blade`], stored
//! as a bitmask. Forms evaluate with the determinant convention, so
//! `e12(e1, e2) = 1` and the full antisymmetric component of a form on an
//! unsorted tuple is the sorted coefficient times the sorting sign.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::exterior::tensor::Tensor;
use crate::exterior::DIM;
use crate::Scalar;

/// Sorted index tuple, zero-based internally.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u8);

impl Blade {
    pub const EMPTY: Blade = Blade(0);
    pub const FULL: Blade = Blade(0b11_1111);

    pub fn from_mask(mask: u8) -> Blade {
        debug_assert!(mask < 64);
        Blade(mask)
    }

    /// Builds a blade from zero-based indices, returning the sign of the
    /// sorting permutation, or `None` on repeated or out-of-range indices.
    pub fn from_indices(indices: &[usize]) -> Option<(Blade, i8)> {
        let mut mask = 0u8;
        let mut sign = 1i8;
        for (pos, &i) in indices.iter().enumerate() {
            if i >= DIM || mask & (1 << i) != 0 {
                return None;
            }
            // Each earlier index larger than i is one inversion.
            let inv = indices[..pos].iter().filter(|&&j| j > i).count();
            if inv % 2 == 1 {
                sign = -sign;
            }
            mask |= 1 << i;
        }
        Some((Blade(mask), sign))
    }

    /// Blade from strictly increasing one-based indices, as written in the
    /// literature (`e_{125}` is `Blade::of(&[1, 2, 5])`).
    pub fn of(one_based: &[usize]) -> Blade {
        let zero: Vec<usize> = one_based.iter().map(|i| i - 1).collect();
        assert!(
            zero.windows(2).all(|w| w[0] < w[1]),
            "indices must be strictly increasing"
        );
        Blade::from_indices(&zero).expect("index out of range").0
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..DIM).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn complement(self) -> Blade {
        Blade(!self.0 & Blade::FULL.0)
    }

    /// Sign of `e_self ∧ e_other` relative to the sorted blade of the union,
    /// or `None` when they share an index.
    pub fn wedge_sign(self, other: Blade) -> Option<i8> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        for j in other.indices() {
            inversions += (self.0 >> (j + 1)).count_ones();
        }
        Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
    }

    /// All blades of the given degree in lexicographic order.
    pub fn all(degree: usize) -> Vec<Blade> {
        let mut out: Vec<Blade> = (0u8..64)
            .map(Blade)
            .filter(|b| b.degree() == degree)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Blade {
    /// Degree first, then lexicographic on the sorted index tuple.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e")?;
        for i in self.indices() {
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// A homogeneous p-form with exact coefficients. Only nonzero coefficients
/// are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    degree: usize,
    terms: BTreeMap<Blade, Scalar>,
}

impl Form {
    pub fn zero(degree: usize) -> Form {
        assert!(degree <= DIM, "form degree {degree} exceeds {DIM}");
        Form {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: Scalar) -> Form {
        Form::monomial(Blade::EMPTY, c)
    }

    pub fn monomial(blade: Blade, c: Scalar) -> Form {
        let mut f = Form::zero(blade.degree());
        f.add_term(blade, c);
        f
    }

    /// `e_i` for a zero-based index.
    pub fn basis(i: usize) -> Form {
        Form::monomial(Blade(1 << i), Scalar::one())
    }

    /// Builds a form from `(coefficient, one-based sorted indices)` terms.
    pub fn from_terms(degree: usize, terms: &[(Scalar, &[usize])]) -> Form {
        let mut f = Form::zero(degree);
        for (c, idx) in terms {
            assert_eq!(idx.len(), degree, "term degree mismatch");
            f.add_term(Blade::of(idx), c.clone());
        }
        f
    }

    /// Full volume form `e123456` times `c`.
    pub fn volume(c: Scalar) -> Form {
        Form::monomial(Blade::FULL, c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, blade: Blade, c: Scalar) {
        assert_eq!(blade.degree(), self.degree, "blade degree mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    /// Antisymmetric component on an arbitrary zero-based index tuple.
    pub fn component(&self, indices: &[usize]) -> Scalar {
        assert_eq!(indices.len(), self.degree);
        match Blade::from_indices(indices) {
            None => Scalar::zero(),
            Some((b, s)) => {
                let c = self.coeff(b);
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        if c.is_zero() {
            return Form::zero(self.degree);
        }
        Form {
            degree: self.degree,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Form) -> Result<Form, Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    /// Exterior product. Errors when the total degree exceeds 6.
    pub fn wedge(&self, other: &Form) -> Result<Form, Error> {
        let degree = self.degree + other.degree;
        if degree > DIM {
            return Err(Error::DegreeOverflow(degree));
        }
        let mut out = Form::zero(degree);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some(s) = a.wedge_sign(b) {
                    let p = x * y;
                    out.add_term(Blade(a.0 | b.0), if s < 0 { -p } else { p });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `e_i ⌟ α` for a zero-based frame index.
    pub fn interior(&self, i: usize) -> Form {
        if self.degree == 0 {
            return Form::zero(0);
        }
        let mut out = Form::zero(self.degree - 1);
        for (b, c) in self.terms() {
            if b.contains(i) {
                let before = (b.0 & ((1u8 << i) - 1)).count_ones();
                let rest = Blade(b.0 & !(1 << i));
                out.add_term(rest, if before.is_multiple_of(2) { c.clone() } else { -c });
            }
        }
        out
    }

    /// Interior product with a vector given by components.
    pub fn interior_vec(&self, v: &[Scalar; DIM]) -> Form {
        let mut out = Form::zero(self.degree.saturating_sub(1));
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                out = out.try_add(&self.interior(i).scale(vi)).expect("same degree");
            }
        }
        out
    }

    /// Inner product `(1/p!) Σ α_{i1..ip} β_{i1..ip}`, i.e. the sum over sorted
    /// tuples of coefficient products.
    pub fn inner(&self, other: &Form) -> Result<Scalar, Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(self
            .terms()
            .map(|(b, x)| x * &other.coeff(b))
            .sum())
    }

    pub fn norm_sq(&self) -> Scalar {
        self.terms.values().map(|c| c * c).sum()
    }

    /// Pullback by a linear map `M`, where column `i` of `M` holds the image of
    /// `e_i`: `(M^*α)(X1, ..) = α(M X1, ..)`.
    pub fn pullback(&self, m: &[[Scalar; DIM]; DIM]) -> Form {
        // M^* e_k = Σ_i M[k][i] e_i
        let images: Vec<Form> = (0..DIM)
            .map(|k| {
                let mut f = Form::zero(1);
                for (i, c) in m[k].iter().enumerate() {
                    f.add_term(Blade(1 << i), c.clone());
                }
                f
            })
            .collect();
        let mut out = Form::zero(self.degree);
        for (b, c) in self.terms() {
            let mut acc = Form::scalar(c.clone());
            for k in b.indices() {
                acc = acc.wedge(&images[k]).expect("degree within bounds");
            }
            out = out.try_add(&acc).expect("same degree");
        }
        out
    }

    /// Dense totally antisymmetric tensor of rank `degree` (degree ≥ 1).
    pub fn to_tensor(&self) -> Tensor {
        assert!(self.degree >= 1, "0-forms have no tensor representation");
        Tensor::from_fn(self.degree, |idx| self.component(idx))
    }

    /// Reads the sorted components of a tensor. No antisymmetry check.
    pub fn from_tensor(t: &Tensor) -> Form {
        let mut f = Form::zero(t.rank());
        for b in Blade::all(t.rank()) {
            let idx: Vec<usize> = b.indices().collect();
            f.add_term(b, t.get(&idx).clone());
        }
        f
    }

    /// As `from_tensor` but fails if the tensor is not totally antisymmetric.
    pub fn try_from_tensor(t: &Tensor) -> Result<Form, Error> {
        if !t.is_totally_antisymmetric() {
            return Err(Error::NotAntisymmetric(t.rank()));
        }
        Ok(Form::from_tensor(t))
    }

    pub fn as_scalar(&self) -> Scalar {
        assert_eq!(self.degree, 0);
        self.coeff(Blade::EMPTY)
    }

    /// Human-readable rendering with one-based indices, e.g. `-2*e126 + e346`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (b, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let name = format!("{b:?}");
            if b.degree() == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        out
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-form({})", self.degree, self.render())
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("adding forms of different degree")
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self.try_add(&-rhs).expect("subtracting forms of different degree")
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            degree: self.degree,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

/// Shorthand: `e(&[1, 2, 6])` is the monomial `e_{126}` with coefficient 1.
pub fn e(one_based: &[usize]) -> Form {
    Form::monomial(Blade::of(one_based), Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn wedge_examples() {
        assert_eq!(e(&[1, 2]).wedge(&e(&[3, 4])).unwrap(), e(&[1, 2, 3, 4]));
        assert!(e(&[1]).wedge(&e(&[1])).unwrap().is_zero());
        let a = &e(&[1, 2]) - &e(&[3, 4]);
        assert_eq!(
            a.wedge(&a).unwrap(),
            e(&[1, 2, 3, 4]).scale(&Scalar::int(-2))
        );
        assert_eq!(e(&[2]).wedge(&e(&[1])).unwrap(), -e(&[1, 2]));
    }

    #[test]
    fn wedge_degree_overflow() {
        let r = e(&[1, 2, 3, 4]).wedge(&e(&[1, 2, 5]));
        assert!(matches!(r, Err(Error::DegreeOverflow(7))));
    }

    #[test]
    fn interior_examples() {
        assert_eq!(e(&[1, 2, 3]).interior(0), e(&[2, 3]));
        assert_eq!(e(&[1, 2, 3]).interior(1), -e(&[1, 3]));
        assert!(e(&[1, 2, 3]).interior(3).is_zero());
    }

    #[test]
    fn inner_examples() {
        assert_eq!(e(&[1, 2]).inner(&e(&[1, 2])).unwrap(), Scalar::one());
        let t = q(-1, 2);
        // T = -2t(e126 - e346)
        let tt = (&e(&[1, 2, 6]) - &e(&[3, 4, 6])).scale(&(Scalar::int(-2) * &t));
        assert_eq!(tt.inner(&tt).unwrap(), Scalar::int(2));
        assert!(matches!(
            e(&[1]).inner(&e(&[1, 2])),
            Err(Error::DegreeMismatch(1, 2))
        ));
    }

    #[test]
    fn component_signs() {
        let f = e(&[1, 2, 6]);
        assert_eq!(f.component(&[0, 1, 5]), Scalar::one());
        assert_eq!(f.component(&[1, 0, 5]), -Scalar::one());
        assert_eq!(f.component(&[5, 0, 1]), Scalar::one());
        assert_eq!(f.component(&[0, 0, 5]), Scalar::zero());
    }

    #[test]
    fn blade_ordering_is_lexicographic() {
        let all = Blade::all(3);
        assert_eq!(all.len(), 20);
        assert_eq!(format!("{:?}", all[0]), "e123");
        assert_eq!(format!("{:?}", all[1]), "e124");
        assert_eq!(format!("{:?}", all[19]), "e456");
    }

    #[test]
    fn render() {
        let f = &e(&[1, 4, 5]).scale(&Scalar::int(-2)) + &e(&[1, 3, 6]);
        assert_eq!(f.render(), "e136 - 2*e145");
        assert_eq!(Form::zero(2).render(), "0");
    }
}
