//! Exact multilinear algebra on the oriented Euclidean 6-space with the
//! identity metric in the working frame.

pub mod form;
pub mod tensor;

pub use form::{e, Blade, Form};
pub use tensor::{Contracted, Tensor};

use crate::error::Error;
use crate::Scalar;

/// Real dimension of the model space.
pub const DIM: usize = 6;

/// Orientation fixed by an ordering of the frame. The volume form is
/// `e_{σ(1)} ∧ … ∧ e_{σ(6)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    volume_tuple: [usize; DIM],
    sign: i8,
}

impl Default for Orientation {
    fn default() -> Self {
        Orientation {
            volume_tuple: [1, 2, 3, 4, 5, 6],
            sign: 1,
        }
    }
}

impl Orientation {
    /// From a one-based permutation of `1..=6`.
    pub fn from_tuple(tuple: [usize; DIM]) -> Result<Orientation, Error> {
        let zero: Vec<usize> = tuple.iter().map(|&i| i.wrapping_sub(1)).collect();
        match Blade::from_indices(&zero) {
            Some((b, s)) if b == Blade::FULL => Ok(Orientation {
                volume_tuple: tuple,
                sign: s,
            }),
            _ => Err(Error::BadOrientation(tuple.to_vec())),
        }
    }

    pub fn volume_tuple(&self) -> [usize; DIM] {
        self.volume_tuple
    }

    /// `+1` when the volume form is `e123456`, `-1` otherwise.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn volume(&self) -> Form {
        Form::volume(Scalar::int(self.sign as i64))
    }
}

/// Euclidean Hodge star, characterised by `α ∧ *β = ⟨α, β⟩ vol`.
pub fn hodge_star(alpha: &Form, o: &Orientation) -> Form {
    let mut out = Form::zero(DIM - alpha.degree());
    for (b, c) in alpha.terms() {
        let comp = b.complement();
        let s = b.wedge_sign(comp).expect("disjoint") * o.sign();
        out.add_term(comp, if s < 0 { -c } else { c.clone() });
    }
    out
}

pub fn wedge(a: &Form, b: &Form) -> Result<Form, Error> {
    a.wedge(b)
}

pub fn interior(i: usize, a: &Form) -> Form {
    a.interior(i)
}

pub fn inner(a: &Form, b: &Form) -> Result<Scalar, Error> {
    a.inner(b)
}

pub fn contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> Result<Contracted, Error> {
    a.contract(b, pairs)
}
