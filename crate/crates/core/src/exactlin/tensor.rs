use std::ops::{Index, IndexMut};

use num_traits::Zero;

use super::{vector, Rational};
use crate::error::{dim_mismatch, Result};

/// Dense multi-index array of rationals, row-major.
///
/// Structure constants are stored with the output component as the last
/// axis, so `fiber(&[i, j])` is the vector `l(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            shape: shape.to_vec(),
            data: vector::zeros(shape.iter().product()),
        }
    }

    pub fn from_data(shape: &[usize], data: Vec<Rational>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if data.len() != n {
            return Err(dim_mismatch("Tensor::from_data", n, data.len()));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "tensor index arity");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "tensor index {i} out of range {n}");
            acc * n + i
        })
    }

    fn fiber_offset(&self, lead: &[usize]) -> usize {
        assert_eq!(lead.len() + 1, self.shape.len(), "tensor index arity");
        let last = self.shape[lead.len()];
        lead.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "tensor index {i} out of range {n}");
            acc * n + i
        }) * last
    }

    /// The contiguous slice along the last axis at the given leading indices.
    pub fn fiber(&self, lead: &[usize]) -> &[Rational] {
        let last = *self.shape.last().expect("fiber of a scalar tensor");
        let o = self.fiber_offset(lead);
        &self.data[o..o + last]
    }

    pub fn fiber_mut(&mut self, lead: &[usize]) -> &mut [Rational] {
        let last = *self.shape.last().expect("fiber of a scalar tensor");
        let o = self.fiber_offset(lead);
        &mut self.data[o..o + last]
    }

    pub fn set_fiber(&mut self, lead: &[usize], v: &[Rational]) {
        self.fiber_mut(lead).clone_from_slice(v);
    }

    /// `Σ x_i y_j T[i, j, ·]` for a rank-3 tensor.
    pub fn eval2(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.shape.len(), 3, "eval2 needs a rank-3 tensor");
        assert_eq!((x.len(), y.len()), (self.shape[0], self.shape[1]));
        let mut out = vector::zeros(self.shape[2]);
        for (i, a) in vector::nonzeros(x) {
            for (j, b) in vector::nonzeros(y) {
                vector::axpy(&mut out, &(a * b), self.fiber(&[i, j]));
            }
        }
        out
    }

    /// `Σ x_i y_j z_k T[i, j, k, ·]` for a rank-4 tensor.
    pub fn eval3(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.shape.len(), 4, "eval3 needs a rank-4 tensor");
        assert_eq!(
            (x.len(), y.len(), z.len()),
            (self.shape[0], self.shape[1], self.shape[2])
        );
        let mut out = vector::zeros(self.shape[3]);
        for (i, a) in vector::nonzeros(x) {
            for (j, b) in vector::nonzeros(y) {
                let ab = a * b;
                for (k, c) in vector::nonzeros(z) {
                    vector::axpy(&mut out, &(&ab * c), self.fiber(&[i, j, k]));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: vector::scale(c, &self.data),
        }
    }

    pub fn checked_add(&self, other: &Tensor) -> Result<Tensor> {
        if self.shape != other.shape {
            return Err(dim_mismatch(
                "tensor sum",
                format!("{:?}", self.shape),
                format!("{:?}", other.shape),
            ));
        }
        Ok(Tensor {
            shape: self.shape.clone(),
            data: vector::add(&self.data, &other.data),
        })
    }

    /// All index tuples in lexicographic order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        tuples(&self.shape)
    }

    /// Index tuples of nonzero entries.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.indices().filter(|i| !self[i.as_slice()].is_zero()).collect()
    }
}

/// All tuples in `0..shape[0] × 0..shape[1] × ...`, lexicographically.
pub(crate) fn tuples(shape: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    let shape = shape.to_vec();
    let total: usize = shape.iter().product();
    (0..total).map(move |mut k| {
        let mut idx = vec![0; shape.len()];
        for a in (0..shape.len()).rev() {
            idx[a] = k % shape[a];
            k /= shape[a];
        }
        idx
    })
}

impl Index<&[usize]> for Tensor {
    type Output = Rational;

    fn index(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }
}

impl IndexMut<&[usize]> for Tensor {
    fn index_mut(&mut self, idx: &[usize]) -> &mut Rational {
        let o = self.offset(idx);
        &mut self.data[o]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn fibers_and_eval() {
        let mut t = Tensor::zeros(&[2, 2, 2]);
        t.set_fiber(&[0, 1], &[int(1), int(2)]);
        t[&[1, 0, 1][..]] = int(3);
        assert_eq!(t.fiber(&[0, 1]), &[int(1), int(2)]);
        let v = t.eval2(&[int(1), int(1)], &[int(1), int(1)]);
        assert_eq!(v, vec![int(1), int(5)]);
        assert_eq!(t.support().len(), 3);
    }

    #[test]
    fn tuple_order() {
        let all: Vec<_> = tuples(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(tuples(&[]).count(), 1);
        assert_eq!(tuples(&[0, 2]).count(), 0);
    }
}
