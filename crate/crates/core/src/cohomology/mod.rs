//! Lie algebra cohomology with values in a representation, the two-slot
//! construction of skeletal L∞-algebras, the Killing form and the `g_ħ`
//! family, and classification of Lie 2-algebras by `H³`.

mod classify;
mod cochain;
mod examples;

use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{vector, RMatrix, Rational, Tensor};
use crate::report::{Sweep, VerificationReport};

pub use classify::{classes_match, classify, gauge_equivalence, ClassifyingQuadruple};
pub use cochain::{
    coboundary, coboundary_matrix, coboundary_preimage, cohomologous, cohomology_dim, combinations, is_coboundary,
    is_cocycle, Cochain,
};
pub use examples::{
    abelian, build_cross_product, build_g_hbar, build_two_slot, killing_form, sl2, so3, triple_product_cochain, TwoSlot,
};

/// A candidate Lie algebra given by structure constants:
/// `bracket[i][j][k]` is the `e_k` coefficient of `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    bracket: Tensor,
}

impl LieAlgebra {
    pub fn new(bracket: Tensor) -> Result<Self> {
        match bracket.shape() {
            [a, b, c] if a == b && b == c => Ok(LieAlgebra { bracket }),
            s => Err(dim_mismatch("bracket", "[n, n, n]", format!("{s:?}"))),
        }
    }

    /// Builds from `(i, j, [(k, c)])` entries meaning `[e_i, e_j] ∋ c e_k`;
    /// the entry for `[e_j, e_i]` is filled in with the opposite sign.
    pub fn from_antisymmetric_entries(dim: usize, entries: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let mut t = Tensor::zeros(&[dim, dim, dim]);
        for &(i, j, terms) in entries {
            for &(k, c) in terms {
                t.fiber_mut(&[i, j])[k] = Rational::from_integer(c.into());
                t.fiber_mut(&[j, i])[k] = Rational::from_integer((-c).into());
            }
        }
        LieAlgebra { bracket: t }
    }

    pub fn dim(&self) -> usize {
        self.bracket.shape()[0]
    }

    pub fn bracket(&self) -> &Tensor {
        &self.bracket
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.bracket.eval2(x, y)
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        vector::unit(self.dim(), i)
    }

    /// `ad(x)`, the matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> RMatrix {
        let n = self.dim();
        let cols: Vec<_> = (0..n).map(|j| self.br(x, &self.basis(j))).collect();
        RMatrix::from_columns(n, &cols).expect("sized")
    }

    pub fn antisymmetry_sweep(&self) -> crate::report::CheckResult {
        let n = self.dim();
        let mut s = Sweep::new("antisymmetry");
        for i in 0..n {
            for j in 0..n {
                s.record(
                    &[i, j],
                    vector::add(self.bracket.fiber(&[i, j]), self.bracket.fiber(&[j, i])),
                );
            }
        }
        s.finish()
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]` on every basis triple.
    pub fn jacobi_sweep(&self) -> crate::report::CheckResult {
        let n = self.dim();
        let mut s = Sweep::new("jacobi");
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                    let mut r = self.br(&self.br(&x, &y), &z);
                    r = vector::add(&r, &self.br(&self.br(&y, &z), &x));
                    r = vector::add(&r, &self.br(&self.br(&z, &x), &y));
                    s.record(&[i, j, k], r);
                }
            }
        }
        s.finish()
    }

    pub fn check(&self) -> VerificationReport {
        [self.antisymmetry_sweep(), self.jacobi_sweep()].into_iter().collect()
    }

    /// The same bracket in the basis given by the columns of `p`:
    /// `[x, y]′ = p⁻¹[p x, p y]`.
    pub fn transport(&self, p: &RMatrix) -> Result<LieAlgebra> {
        let n = self.dim();
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Invalid("basis change is singular".into()))?;
        let mut t = Tensor::zeros(&[n, n, n]);
        for i in 0..n {
            for j in 0..n {
                let b = self.br(&p.column(i), &p.column(j));
                t.set_fiber(&[i, j], &pinv.mul_vec(&b));
            }
        }
        Ok(LieAlgebra { bracket: t })
    }
}

/// A candidate representation: `rho[i]` is the matrix of `ρ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim_v: usize,
    rho: Vec<RMatrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, dim_v: usize, rho: Vec<RMatrix>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(dim_mismatch("rho", algebra.dim(), rho.len()));
        }
        for m in &rho {
            if m.shape() != (dim_v, dim_v) {
                return Err(dim_mismatch(
                    "rho matrix",
                    format!("({dim_v}, {dim_v})"),
                    format!("{:?}", m.shape()),
                ));
            }
        }
        Ok(Representation { algebra, dim_v, rho })
    }

    pub fn trivial(algebra: &LieAlgebra, dim_v: usize) -> Self {
        Representation {
            rho: vec![RMatrix::zeros(dim_v, dim_v); algebra.dim()],
            algebra: algebra.clone(),
            dim_v,
        }
    }

    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        Representation {
            rho: (0..algebra.dim()).map(|i| algebra.ad(&algebra.basis(i))).collect(),
            algebra: algebra.clone(),
            dim_v: algebra.dim(),
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho(&self) -> &[RMatrix] {
        &self.rho
    }

    pub fn rho_of(&self, x: &[Rational]) -> RMatrix {
        let mut m = RMatrix::zeros(self.dim_v, self.dim_v);
        for (c, r) in x.iter().zip(&self.rho) {
            if !num_traits::Zero::is_zero(c) {
                m = &m + &r.scale(c);
            }
        }
        m
    }

    pub fn act(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vector::zeros(self.dim_v);
        for (c, r) in x.iter().zip(&self.rho) {
            if !num_traits::Zero::is_zero(c) {
                vector::axpy(&mut out, c, &r.mul_vec(v));
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.rho.iter().all(RMatrix::is_zero)
    }

    /// `ρ([e_i,e_j]) − [ρ(e_i), ρ(e_j)]` on every basis pair, entries
    /// flattened row-major.
    pub fn check(&self) -> VerificationReport {
        let g = &self.algebra;
        let mut s = Sweep::new("rep_law");
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let lhs = self.rho_of(&g.br(&g.basis(i), &g.basis(j)));
                let comm = &(&self.rho[i] * &self.rho[j]) - &(&self.rho[j] * &self.rho[i]);
                s.record(&[i, j], (&lhs - &comm).data().to_vec());
            }
        }
        let mut out = g.check();
        out.push(s.finish());
        out
    }
}
