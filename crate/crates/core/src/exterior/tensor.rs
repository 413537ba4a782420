//! Dense covariant tensors on the 6-dimensional frame.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::exterior::DIM;
use crate::Scalar;

/// A rank-k tensor with `6^k` exact entries, indexed by zero-based tuples.
/// No symmetry is assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    rank: usize,
    data: Vec<Scalar>,
}

/// Result of a contraction: what remains when every axis has been paired is
/// a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contracted {
    Tensor(Tensor),
    Scalar(Scalar),
}

impl Contracted {
    pub fn into_tensor(self) -> Option<Tensor> {
        match self {
            Contracted::Tensor(t) => Some(t),
            Contracted::Scalar(_) => None,
        }
    }

    pub fn into_scalar(self) -> Option<Scalar> {
        match self {
            Contracted::Scalar(s) => Some(s),
            Contracted::Tensor(_) => None,
        }
    }
}

fn flat(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * DIM + i)
}

fn unflat(mut n: usize, rank: usize, out: &mut [usize]) {
    for k in (0..rank).rev() {
        out[k] = n % DIM;
        n /= DIM;
    }
}

impl Tensor {
    pub fn zeros(rank: usize) -> Tensor {
        Tensor {
            rank,
            data: vec![Scalar::zero(); DIM.pow(rank as u32)],
        }
    }

    pub fn from_fn(rank: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Tensor {
        let mut idx = vec![0usize; rank];
        let n = DIM.pow(rank as u32);
        let data = (0..n)
            .map(|k| {
                unflat(k, rank, &mut idx);
                f(&idx)
            })
            .collect();
        Tensor { rank, data }
    }

    /// Kronecker delta.
    pub fn identity() -> Tensor {
        Tensor::from_fn(2, |i| if i[0] == i[1] { Scalar::one() } else { Scalar::zero() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        debug_assert_eq!(idx.len(), self.rank);
        &self.data[flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        debug_assert_eq!(idx.len(), self.rank);
        let k = flat(idx);
        self.data[k] = v;
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Iterates over `(index tuple, entry)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> {
        let rank = self.rank;
        self.data.iter().enumerate().map(move |(k, v)| {
            let mut idx = vec![0; rank];
            unflat(k, rank, &mut idx);
            (idx, v)
        })
    }

    /// First index tuple where `self` and `other` differ.
    pub fn first_difference(&self, other: &Tensor) -> Option<Vec<usize>> {
        assert_eq!(self.rank, other.rank);
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| {
                let mut idx = vec![0; self.rank];
                unflat(k, self.rank, &mut idx);
                idx
            })
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            rank: self.rank,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Reorders axes: entry `out[i_0..]` equals `self[j]` where
    /// `j[perm[k]] = i_k`, i.e. axis `k` of the result is axis `perm[k]` of
    /// `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.rank);
        let mut src = vec![0; self.rank];
        Tensor::from_fn(self.rank, |idx| {
            for (k, &p) in perm.iter().enumerate() {
                src[p] = idx[k];
            }
            self.get(&src).clone()
        })
    }

    /// Antisymmetric under every transposition of adjacent axes.
    pub fn is_totally_antisymmetric(&self) -> bool {
        (0..self.rank.saturating_sub(1)).all(|a| {
            let mut perm: Vec<usize> = (0..self.rank).collect();
            perm.swap(a, a + 1);
            self.permute(&perm) == -self
        })
    }

    pub fn is_symmetric_pair(&self, a: usize, b: usize) -> bool {
        let mut perm: Vec<usize> = (0..self.rank).collect();
        perm.swap(a, b);
        self.permute(&perm) == *self
    }

    pub fn is_antisymmetric_pair(&self, a: usize, b: usize) -> bool {
        let mut perm: Vec<usize> = (0..self.rank).collect();
        perm.swap(a, b);
        self.permute(&perm) == -self
    }

    /// Einstein summation of `self` against `other` over the listed
    /// `(axis of self, axis of other)` pairs. Free axes of `self` come first,
    /// then free axes of `other`, each in their original order.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Contracted, Error> {
        for &(a, b) in pairs {
            if a >= self.rank || b >= other.rank {
                return Err(Error::AxisOutOfRange {
                    axis: if a >= self.rank { a } else { b },
                    rank: if a >= self.rank { self.rank } else { other.rank },
                });
            }
        }
        let mut seen_a = vec![false; self.rank];
        let mut seen_b = vec![false; other.rank];
        for &(a, b) in pairs {
            if std::mem::replace(&mut seen_a[a], true) || std::mem::replace(&mut seen_b[b], true) {
                return Err(Error::RepeatedAxis);
            }
        }
        let free_a: Vec<usize> = (0..self.rank).filter(|&k| !seen_a[k]).collect();
        let free_b: Vec<usize> = (0..other.rank).filter(|&k| !seen_b[k]).collect();
        let out_rank = free_a.len() + free_b.len();
        let np = pairs.len();
        let mut ia = vec![0; self.rank];
        let mut ib = vec![0; other.rank];
        let mut summed = vec![0; np];
        let mut eval = |out_idx: &[usize]| -> Scalar {
            for (k, &ax) in free_a.iter().enumerate() {
                ia[ax] = out_idx[k];
            }
            for (k, &ax) in free_b.iter().enumerate() {
                ib[ax] = out_idx[free_a.len() + k];
            }
            let mut acc = Scalar::zero();
            for n in 0..DIM.pow(np as u32) {
                unflat(n, np, &mut summed);
                for (p, &(a, b)) in pairs.iter().enumerate() {
                    ia[a] = summed[p];
                    ib[b] = summed[p];
                }
                let x = self.get(&ia);
                if x.is_zero() {
                    continue;
                }
                let y = other.get(&ib);
                if !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        };
        if out_rank == 0 {
            Ok(Contracted::Scalar(eval(&[])))
        } else {
            Ok(Contracted::Tensor(Tensor::from_fn(out_rank, |i| eval(i))))
        }
    }

    /// Sum of squares of all entries (full index sum).
    pub fn norm_sq(&self) -> Scalar {
        self.data.iter().map(|x| x * x).sum()
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor(rank {}, nonzero: [", self.rank)?;
        let mut first = true;
        for (idx, v) in self.entries() {
            if !v.is_zero() {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                let one: Vec<usize> = idx.iter().map(|i| i + 1).collect();
                write!(f, "{one:?}: {v}")?;
            }
        }
        write!(f, "])")
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        Tensor {
            rank: self.rank,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        Tensor {
            rank: self.rank,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor {
            rank: self.rank,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}
