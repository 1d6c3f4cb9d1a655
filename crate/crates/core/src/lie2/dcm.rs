//! Differential crossed modules and strict Lie 2-algebras.

use super::SemistrictLie2Algebra;
use crate::cohomology::LieAlgebra;
use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{vector, RMatrix, Rational, Tensor};
use crate::linfty::TwoTermLInfinity;
use crate::report::{Sweep, VerificationReport};
use crate::twoterm::TwoTermComplex;

/// `(g, h, t, α)` with `t: h → g` and `alpha[i][j][k]` the `h_k`
/// coefficient of `α(g_i)(h_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialCrossedModule {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    pub t: RMatrix,
    pub alpha: Tensor,
}

impl DifferentialCrossedModule {
    pub fn new(g: LieAlgebra, h: LieAlgebra, t: RMatrix, alpha: Tensor) -> Result<Self> {
        let m = DifferentialCrossedModule { g, h, t, alpha };
        m.check_shapes()?;
        Ok(m)
    }

    /// `g` acting on itself by `ad`, with `t` the identity.
    pub fn adjoint(g: &LieAlgebra) -> Self {
        DifferentialCrossedModule {
            g: g.clone(),
            h: g.clone(),
            t: RMatrix::identity(g.dim()),
            alpha: g.bracket().clone(),
        }
    }

    pub fn alpha_of(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.alpha.eval2(x, y)
    }

    fn check_shapes(&self) -> Result<()> {
        let (dg, dh) = (self.g.dim(), self.h.dim());
        if self.t.shape() != (dg, dh) {
            return Err(dim_mismatch("t", format!("{dg}x{dh}"), format!("{:?}", self.t.shape())));
        }
        if self.alpha.shape() != [dg, dh, dh] {
            return Err(dim_mismatch(
                "alpha",
                format!("[{dg}, {dh}, {dh}]"),
                format!("{:?}", self.alpha.shape()),
            ));
        }
        Ok(())
    }
}

/// Lie axioms on `g` and `h`, and the sweeps `t_hom`, `alpha_derivation`,
/// `alpha_lie_map`, `equivariance` (`t(α(x)y) = [x, ty]`) and `peiffer`
/// (`α(ty)y′ = [y, y′]`).
pub fn check_crossed_module(m: &DifferentialCrossedModule) -> Result<VerificationReport> {
    m.check_shapes()?;
    let (g, h) = (&m.g, &m.h);
    let (dg, dh) = (g.dim(), h.dim());
    let t = |y: &[Rational]| m.t.mul_vec(y);
    let a = |x: &[Rational], y: &[Rational]| m.alpha_of(x, y);
    let mut out = VerificationReport::new();
    out.absorb("g", g.check());
    out.absorb("h", h.check());

    let mut hom = Sweep::new("t_hom");
    let mut peiffer = Sweep::new("peiffer");
    for i in 0..dh {
        for j in 0..dh {
            let (y, z) = (h.basis(i), h.basis(j));
            hom.record(&[i, j], vector::sub(&t(&h.br(&y, &z)), &g.br(&t(&y), &t(&z))));
            peiffer.record(&[i, j], vector::sub(&a(&t(&y), &z), &h.br(&y, &z)));
        }
    }

    let mut der = Sweep::new("alpha_derivation");
    for i in 0..dg {
        for j in 0..dh {
            for k in 0..dh {
                let (x, y, z) = (g.basis(i), h.basis(j), h.basis(k));
                let lhs = a(&x, &h.br(&y, &z));
                let rhs = vector::add(&h.br(&a(&x, &y), &z), &h.br(&y, &a(&x, &z)));
                der.record(&[i, j, k], vector::sub(&lhs, &rhs));
            }
        }
    }

    let mut lie = Sweep::new("alpha_lie_map");
    for i in 0..dg {
        for j in 0..dg {
            for k in 0..dh {
                let (x, w, y) = (g.basis(i), g.basis(j), h.basis(k));
                let lhs = a(&g.br(&x, &w), &y);
                let rhs = vector::sub(&a(&x, &a(&w, &y)), &a(&w, &a(&x, &y)));
                lie.record(&[i, j, k], vector::sub(&lhs, &rhs));
            }
        }
    }

    let mut equi = Sweep::new("equivariance");
    for i in 0..dg {
        for j in 0..dh {
            let (x, y) = (g.basis(i), h.basis(j));
            equi.record(&[i, j], vector::sub(&t(&a(&x, &y)), &g.br(&x, &t(&y))));
        }
    }

    for s in [hom, der, lie, equi, peiffer] {
        out.push(s.finish());
    }
    Ok(out)
}

/// `V₀ = g`, `V₁ = h`, `d = t`, `l₂` on `V₀ ⊗ V₀` the bracket of `g`,
/// `l₂` on `V₀ ⊗ V₁` given by `α`, and `l₃ = 0`.
pub fn from_crossed_module(m: &DifferentialCrossedModule) -> Result<SemistrictLie2Algebra> {
    m.check_shapes()?;
    let (dg, dh) = (m.g.dim(), m.h.dim());
    let complex = TwoTermComplex::new(dg, dh, m.t.clone())?;
    let data = TwoTermLInfinity::new(
        complex,
        m.g.bracket().clone(),
        m.alpha.clone(),
        Tensor::zeros(&[dg, dg, dg, dh]),
    )?;
    Ok(SemistrictLie2Algebra::from_linfty(data))
}

/// The inverse reading. The bracket on `h` is recovered as
/// `[y, y′] = α(ty)(y′)`.
pub fn to_crossed_module(l: &SemistrictLie2Algebra) -> Result<DifferentialCrossedModule> {
    if !l.is_strict() {
        return Err(Error::NotStrict);
    }
    let v = l.data();
    let n1 = v.dim1();
    let mut hb = Tensor::zeros(&[n1, n1, n1]);
    for i in 0..n1 {
        for j in 0..n1 {
            hb.set_fiber(&[i, j], &v.br01(&v.d(&v.e1(i)), &v.e1(j)));
        }
    }
    DifferentialCrossedModule::new(
        LieAlgebra::new(v.l2_00().clone())?,
        LieAlgebra::new(hb)?,
        v.d_matrix().clone(),
        v.l2_01().clone(),
    )
}
