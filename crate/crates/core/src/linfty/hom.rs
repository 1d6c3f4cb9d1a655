//! Homomorphisms and 2-homomorphisms of 2-term L∞-algebras.

use std::sync::Arc;

use super::TwoTermLInfinity;
use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{vector, RMatrix, Rational, Tensor};
use crate::report::{Sweep, VerificationReport};
use crate::twoterm::{
    check_chain_map, check_homotopy, compose_chain_maps, horizontal_homotopy, vertical_homotopy, ChainHomotopy,
    ChainMap,
};

/// A candidate homomorphism `(φ₀, φ₁, φ₂)`. `phi2[i][j][k]` is the `f′_k`
/// coefficient of `φ₂(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInfHom {
    pub source: Arc<TwoTermLInfinity>,
    pub target: Arc<TwoTermLInfinity>,
    pub chain: ChainMap,
    pub phi2: Tensor,
}

impl LInfHom {
    pub fn new(
        source: Arc<TwoTermLInfinity>,
        target: Arc<TwoTermLInfinity>,
        phi0: RMatrix,
        phi1: RMatrix,
        phi2: Tensor,
    ) -> Result<Self> {
        let chain = ChainMap::new(source.complex().clone(), target.complex().clone(), phi0, phi1)?;
        let f = LInfHom {
            source,
            target,
            chain,
            phi2,
        };
        f.check_shapes()?;
        Ok(f)
    }

    pub fn identity(v: &Arc<TwoTermLInfinity>) -> Self {
        let n0 = v.dim0();
        LInfHom {
            source: v.clone(),
            target: v.clone(),
            chain: ChainMap::identity(v.complex()),
            phi2: Tensor::zeros(&[n0, n0, v.dim1()]),
        }
    }

    pub fn phi0(&self) -> &RMatrix {
        &self.chain.phi0
    }

    pub fn phi1(&self) -> &RMatrix {
        &self.chain.phi1
    }

    pub fn phi2_eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.phi2.eval2(x, y)
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.chain.check_shapes()?;
        if &self.chain.source != self.source.complex() || &self.chain.target != self.target.complex() {
            return Err(Error::EndpointMismatch(
                "chain map endpoints differ from the algebras".into(),
            ));
        }
        let want = [self.source.dim0(), self.source.dim0(), self.target.dim1()];
        if self.phi2.shape() != want {
            return Err(dim_mismatch(
                "phi2",
                format!("{want:?}"),
                format!("{:?}", self.phi2.shape()),
            ));
        }
        Ok(())
    }
}

/// The chain map condition, antisymmetry of `φ₂`, and the three
/// compatibility equations with `l₂` and `l₃`.
pub fn check_hom(f: &LInfHom) -> Result<VerificationReport> {
    f.check_shapes()?;
    let (v, w) = (&*f.source, &*f.target);
    let n0 = v.dim0();
    let p0 = |x: &[Rational]| f.phi0().mul_vec(x);
    let p1 = |h: &[Rational]| f.phi1().mul_vec(h);
    let p2 = |x: &[Rational], y: &[Rational]| f.phi2_eval(x, y);
    let mut out = VerificationReport::new();
    out.absorb("", check_chain_map(&f.chain)?);

    let mut anti = Sweep::new("phi2_antisymmetric");
    for i in 0..n0 {
        for j in 0..n0 {
            anti.record(&[i, j], vector::add(f.phi2.fiber(&[i, j]), f.phi2.fiber(&[j, i])));
        }
    }
    out.push(anti.finish());

    let mut b00 = Sweep::new("bracket_00");
    for i in 0..n0 {
        for j in 0..n0 {
            let (x, y) = (v.e0(i), v.e0(j));
            let lhs = w.d(&p2(&x, &y));
            let rhs = vector::sub(&p0(&v.br00(&x, &y)), &w.br00(&p0(&x), &p0(&y)));
            b00.record(&[i, j], vector::sub(&lhs, &rhs));
        }
    }
    out.push(b00.finish());

    let mut b01 = Sweep::new("bracket_01");
    for i in 0..n0 {
        for j in 0..v.dim1() {
            let (x, h) = (v.e0(i), v.e1(j));
            let lhs = p2(&x, &v.d(&h));
            let rhs = vector::sub(&p1(&v.br01(&x, &h)), &w.br01(&p0(&x), &p1(&h)));
            b01.record(&[i, j], vector::sub(&lhs, &rhs));
        }
    }
    out.push(b01.finish());

    let mut l3 = Sweep::new("l3_compat");
    for i in 0..n0 {
        for j in 0..n0 {
            for k in 0..n0 {
                let (x, y, z) = (v.e0(i), v.e0(j), v.e0(k));
                let (fx, fy, fz) = (p0(&x), p0(&y), p0(&z));
                let lhs = [
                    w.br10(&p2(&x, &y), &fz),
                    p2(&v.br00(&x, &y), &z),
                    p1(&v.l3_eval(&x, &y, &z)),
                ];
                let rhs = [
                    w.l3_eval(&fx, &fy, &fz),
                    w.br01(&fx, &p2(&y, &z)),
                    w.br10(&p2(&x, &z), &fy),
                    p2(&x, &v.br00(&y, &z)),
                    p2(&v.br00(&x, &z), &y),
                ];
                let mut r = vector::zeros(w.dim1());
                for t in &lhs {
                    r = vector::add(&r, t);
                }
                for t in &rhs {
                    r = vector::sub(&r, t);
                }
                l3.record(&[i, j, k], r);
            }
        }
    }
    out.push(l3.finish());
    Ok(out)
}

/// First `f`, then `g`: `(fg)₂(x,y) = g₂(f₀x, f₀y) + g₁(f₂(x,y))`.
pub fn compose_homs(f: &LInfHom, g: &LInfHom) -> Result<LInfHom> {
    f.check_shapes()?;
    g.check_shapes()?;
    if f.target != g.source {
        return Err(Error::EndpointMismatch(
            "target of the first homomorphism differs from source of the second".into(),
        ));
    }
    let chain = compose_chain_maps(&f.chain, &g.chain)?;
    let n0 = f.source.dim0();
    let mut phi2 = Tensor::zeros(&[n0, n0, g.target.dim1()]);
    for i in 0..n0 {
        for j in 0..n0 {
            let fx = f.phi0().column(i);
            let fy = f.phi0().column(j);
            let a = g.phi2_eval(&fx, &fy);
            let b = g.phi1().mul_vec(f.phi2.fiber(&[i, j]));
            phi2.set_fiber(&[i, j], &vector::add(&a, &b));
        }
    }
    Ok(LInfHom {
        source: f.source.clone(),
        target: g.target.clone(),
        chain,
        phi2,
    })
}

/// A candidate 2-homomorphism `τ: from ⇒ to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInfTwoHom {
    pub from: LInfHom,
    pub to: LInfHom,
    pub tau: ChainHomotopy,
}

impl LInfTwoHom {
    pub fn new(from: LInfHom, to: LInfHom, tau: RMatrix) -> Result<Self> {
        let t = LInfTwoHom {
            tau: ChainHomotopy {
                from: from.chain.clone(),
                to: to.chain.clone(),
                tau,
            },
            from,
            to,
        };
        t.check_shapes()?;
        Ok(t)
    }

    pub fn identity(f: &LInfHom) -> Self {
        LInfTwoHom {
            from: f.clone(),
            to: f.clone(),
            tau: ChainHomotopy::identity(&f.chain),
        }
    }

    pub fn tau_matrix(&self) -> &RMatrix {
        &self.tau.tau
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.from.check_shapes()?;
        self.to.check_shapes()?;
        if self.from.source != self.to.source || self.from.target != self.to.target {
            return Err(Error::EndpointMismatch(
                "2-homomorphism between non-parallel homomorphisms".into(),
            ));
        }
        if self.tau.from != self.from.chain || self.tau.to != self.to.chain {
            return Err(Error::EndpointMismatch(
                "homotopy endpoints differ from the homomorphisms".into(),
            ));
        }
        self.tau.check_shapes()
    }
}

/// The homotopy equations and
/// `φ₂(x,y) − ψ₂(x,y) = [φ₀x, τy] + [τx, ψ₀y] − τ[x,y]`.
pub fn check_two_hom(t: &LInfTwoHom) -> Result<VerificationReport> {
    t.check_shapes()?;
    let (v, w) = (&*t.from.source, &*t.from.target);
    let tau = |x: &[Rational]| t.tau_matrix().mul_vec(x);
    let mut out = check_homotopy(&t.tau)?;
    let mut s = Sweep::new("two_hom_bracket");
    for i in 0..v.dim0() {
        for j in 0..v.dim0() {
            let (x, y) = (v.e0(i), v.e0(j));
            let lhs = vector::sub(&t.from.phi2_eval(&x, &y), &t.to.phi2_eval(&x, &y));
            let mut rhs = w.br01(&t.from.phi0().mul_vec(&x), &tau(&y));
            rhs = vector::add(&rhs, &w.br10(&tau(&x), &t.to.phi0().mul_vec(&y)));
            rhs = vector::sub(&rhs, &tau(&v.br00(&x, &y)));
            s.record(&[i, j], vector::sub(&lhs, &rhs));
        }
    }
    out.push(s.finish());
    Ok(out)
}

/// `a: φ ⇒ ψ` then `b: ψ ⇒ χ`, with homotopy `τ_a + τ_b`.
pub fn vertical_two_hom(a: &LInfTwoHom, b: &LInfTwoHom) -> Result<LInfTwoHom> {
    a.check_shapes()?;
    b.check_shapes()?;
    if a.to != b.from {
        return Err(Error::EndpointMismatch(
            "vertical composite needs a.to == b.from".into(),
        ));
    }
    Ok(LInfTwoHom {
        from: a.from.clone(),
        to: b.to.clone(),
        tau: vertical_homotopy(&a.tau, &b.tau)?,
    })
}

/// `a: φ ⇒ ψ` on `V → V′` beside `b: φ′ ⇒ ψ′` on `V′ → V″`.
pub fn horizontal_two_hom(a: &LInfTwoHom, b: &LInfTwoHom) -> Result<LInfTwoHom> {
    a.check_shapes()?;
    b.check_shapes()?;
    Ok(LInfTwoHom {
        from: compose_homs(&a.from, &b.from)?,
        to: compose_homs(&a.to, &b.to)?,
        tau: horizontal_homotopy(&a.tau, &b.tau)?,
    })
}
