use std::sync::Arc;

use super::cochain::{coboundary, combinations, Cochain};
use super::{LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{frac, RMatrix, Rational, Tensor};
use crate::lie2::SemistrictLie2Algebra;
use crate::linfty::TwoTermLInfinity;
use crate::report::{Sweep, VerificationReport};
use crate::twoterm::TwoTermComplex;

/// `so₃` with `[e₁,e₂] = e₃` and cyclic permutations.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(3, &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])])
}

/// `sl₂` in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(3, &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])])
}

pub fn abelian(dim: usize) -> LieAlgebra {
    LieAlgebra::new(Tensor::zeros(&[dim, dim, dim])).expect("cubic shape")
}

/// `⟨x, y⟩ = tr(ad x ad y)`.
///
/// ```
/// use lie2::cohomology::{killing_form, so3};
/// use lie2::exactlin::{int, RMatrix};
/// assert_eq!(killing_form(&so3()), RMatrix::identity(3).scale(&int(-2)));
/// ```
pub fn killing_form(g: &LieAlgebra) -> RMatrix {
    let n = g.dim();
    let ads: Vec<RMatrix> = (0..n).map(|i| g.ad(&g.basis(i))).collect();
    let mut k = RMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let p = &ads[i] * &ads[j];
            let mut tr = Rational::from_integer(0.into());
            for d in 0..n {
                tr += &p[(d, d)];
            }
            k[(i, j)] = tr;
        }
    }
    k
}

/// The `ℚ`-valued 3-cochain `c·⟨x, [y, z]⟩` for the trivial representation.
pub fn triple_product_cochain(g: &LieAlgebra, c: &Rational) -> Cochain {
    let rep = Arc::new(Representation::trivial(g, 1));
    let k = killing_form(g);
    let values = combinations(g.dim(), 3)
        .into_iter()
        .map(|t| {
            let yz = g.br(&g.basis(t[1]), &g.basis(t[2]));
            let v = k.row(t[0]).iter().zip(&yz).map(|(a, b)| a * b).sum::<Rational>();
            vec![c * v]
        })
        .collect();
    Cochain::from_values(&rep, 3, values).expect("sized")
}

/// A Lie algebra, a representation on `V`, and an `(n+2)`-cochain: the data
/// of an L∞-algebra concentrated in degrees 0 and `n` with `d = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSlot {
    pub n: usize,
    pub cochain: Cochain,
}

impl TwoSlot {
    pub fn rep(&self) -> &Arc<Representation> {
        self.cochain.rep()
    }

    /// Jacobi, the representation law, and the cocycle condition.
    pub fn check(&self) -> VerificationReport {
        let mut out = self.rep().check();
        let mut s = Sweep::new("cocycle");
        let dw = coboundary(&self.cochain);
        for (t, v) in dw.tuples().iter().zip(dw.values()) {
            s.record(t, v.clone());
        }
        out.push(s.finish());
        out
    }

    /// The 2-term L∞-algebra for `n = 1`: `d = 0`, `l₂ = [·,·]` and `ρ`,
    /// `l₃` the cochain.
    pub fn to_linfty(&self) -> Result<TwoTermLInfinity> {
        if self.n != 1 {
            return Err(Error::DegreeMismatch(format!(
                "a 2-term L∞-algebra needs n = 1, got {}",
                self.n
            )));
        }
        let rep = self.rep();
        let g = rep.algebra();
        let (n0, n1) = (g.dim(), rep.dim_v());
        let mut l2_01 = Tensor::zeros(&[n0, n1, n1]);
        for i in 0..n0 {
            for j in 0..n1 {
                l2_01.set_fiber(&[i, j], &rep.rho()[i].column(j));
            }
        }
        let mut l3 = Tensor::zeros(&[n0, n0, n0, n1]);
        for i in 0..n0 {
            for j in 0..n0 {
                for k in 0..n0 {
                    l3.set_fiber(&[i, j, k], &self.cochain.eval_basis(&[i, j, k]));
                }
            }
        }
        TwoTermLInfinity::new(TwoTermComplex::zero(n0, n1), g.bracket().clone(), l2_01, l3)
    }
}

/// Pairs an `(n+2)`-cochain with its representation.
pub fn build_two_slot(n: usize, w: &Cochain) -> Result<TwoSlot> {
    if n == 0 || w.degree() != n + 2 {
        return Err(Error::DegreeMismatch(format!(
            "two-slot data with n = {n} needs a cochain of degree {}, got {}",
            n + 2,
            w.degree()
        )));
    }
    Ok(TwoSlot { n, cochain: w.clone() })
}

/// `g_ħ`: `V₀ = g`, `V₁ = ℚ` with the trivial action, `l₃ = ħ⟨x,[y,z]⟩`.
pub fn build_g_hbar(g: &LieAlgebra, hbar: &Rational) -> SemistrictLie2Algebra {
    let w = triple_product_cochain(g, hbar);
    let v = build_two_slot(1, &w)
        .and_then(|t| t.to_linfty())
        .expect("degree 3 cochain");
    SemistrictLie2Algebra::from_linfty(v)
}

/// `ℚ³` with the cross product and `l₃(x,y,z) = x·(y×z)`.
pub fn build_cross_product() -> SemistrictLie2Algebra {
    build_g_hbar(&so3(), &frac(-1, 2))
}
