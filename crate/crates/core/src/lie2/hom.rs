//! Homomorphisms and 2-homomorphisms of Lie 2-algebras.

use std::sync::Arc;

use super::{compose_or_gap, SemistrictLie2Algebra};
use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{vector, RMatrix, Rational, Tensor};
use crate::linfty::{LInfHom, LInfTwoHom};
use crate::report::{Sweep, VerificationReport};
use crate::twovect::{
    check_functor, check_nat_trans, compose_functors, horizontal_nat, s_on_functor, t_on_chain_map, t_on_homotopy,
    vertical_nat, LinearFunctor, LinearNatTrans,
};

/// A candidate homomorphism: a linear functor and `F₂(x,y)`, stored as the
/// full morphism `F₂(e_i, e_j) ∈ L′₁` in `f2[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Hom {
    pub source: Arc<SemistrictLie2Algebra>,
    pub target: Arc<SemistrictLie2Algebra>,
    pub functor: LinearFunctor,
    pub f2: Tensor,
}

impl Lie2Hom {
    pub fn new(
        source: Arc<SemistrictLie2Algebra>,
        target: Arc<SemistrictLie2Algebra>,
        functor: LinearFunctor,
        f2: Tensor,
    ) -> Result<Self> {
        let f = Lie2Hom {
            source,
            target,
            functor,
            f2,
        };
        f.check_shapes()?;
        Ok(f)
    }

    pub fn identity(l: &Arc<SemistrictLie2Algebra>) -> Self {
        let n0 = l.dim0();
        let mut f2 = Tensor::zeros(&[n0, n0, l.space().dim1()]);
        for i in 0..n0 {
            for j in 0..n0 {
                let b = l.bracket_objects(&l.data().e0(i), &l.data().e0(j));
                f2.set_fiber(&[i, j], &l.space().identity_vec(&b));
            }
        }
        Lie2Hom {
            source: l.clone(),
            target: l.clone(),
            functor: LinearFunctor::identity(l.space()),
            f2,
        }
    }

    /// `T(φ)`: the functor `(φ₀, φ₀ ⊕ φ₁)` and `F₂(x,y) = ([φ₀x, φ₀y], φ₂(x,y))`.
    pub fn from_linfty_hom(phi: &LInfHom) -> Result<Self> {
        let source = Arc::new(SemistrictLie2Algebra::from_linfty((*phi.source).clone()));
        let target = Arc::new(SemistrictLie2Algebra::from_linfty((*phi.target).clone()));
        let t = t_on_chain_map(&phi.chain)?;
        let functor = LinearFunctor::new(source.space().clone(), target.space().clone(), t.f0, t.f1)?;
        let n0 = source.dim0();
        let mut f2 = Tensor::zeros(&[n0, n0, target.space().dim1()]);
        for i in 0..n0 {
            for j in 0..n0 {
                let (fx, fy) = (phi.phi0().column(i), phi.phi0().column(j));
                let m = vector::concat(&target.bracket_objects(&fx, &fy), phi.phi2.fiber(&[i, j]));
                f2.set_fiber(&[i, j], &m);
            }
        }
        Lie2Hom::new(source, target, functor, f2)
    }

    /// `S(F)`: `φ₀ = F₀`, `φ₁` = `F₁` on arrows, `φ₂` = arrow part of `F₂`.
    pub fn to_linfty_hom(&self) -> Result<LInfHom> {
        self.check_shapes()?;
        let chain = s_on_functor(&self.functor)?;
        let (n0, m0) = (self.source.dim0(), self.target.dim0());
        let m1 = self.target.data().dim1();
        let mut phi2 = Tensor::zeros(&[n0, n0, m1]);
        for i in 0..n0 {
            for j in 0..n0 {
                let m = self.f2.fiber(&[i, j]);
                let arrow = self.target.space().arrow(m);
                phi2.set_fiber(&[i, j], &arrow[m0..]);
            }
        }
        LInfHom::new(
            Arc::new(self.source.to_linfty()),
            Arc::new(self.target.to_linfty()),
            chain.phi0,
            chain.phi1,
            phi2,
        )
    }

    pub fn f0(&self) -> &RMatrix {
        &self.functor.f0
    }

    pub fn f1(&self) -> &RMatrix {
        &self.functor.f1
    }

    pub fn f2_eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.f2.eval2(x, y)
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.functor.check_shapes()?;
        if &self.functor.source != self.source.space() || &self.functor.target != self.target.space() {
            return Err(Error::EndpointMismatch(
                "functor endpoints differ from the Lie 2-algebras".into(),
            ));
        }
        let want = [self.source.dim0(), self.source.dim0(), self.target.space().dim1()];
        if self.f2.shape() != want {
            return Err(dim_mismatch(
                "F2",
                format!("{want:?}"),
                format!("{:?}", self.f2.shape()),
            ));
        }
        Ok(())
    }
}

fn residual_of(space: &crate::twovect::TwoVectorSpace, lhs: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Vec<Rational> {
    let chain = |ms: &[Vec<Rational>]| -> std::result::Result<Vec<Rational>, Vec<Rational>> {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = compose_or_gap(space, &acc, m)?;
        }
        Ok(acc)
    };
    match (chain(lhs), chain(rhs)) {
        (Ok(a), Ok(b)) => vector::sub(&a, &b),
        (Err(gap), _) | (_, Err(gap)) => {
            let mut r = gap;
            r.resize(space.dim1(), Rational::from_integer(0.into()));
            r
        }
    }
}

/// Functor laws, antisymmetry of `F₂`, its source and target, its
/// naturality in each slot, and the hexagon.
pub fn check_lie2_hom(f: &Lie2Hom) -> Result<VerificationReport> {
    f.check_shapes()?;
    let (l, lp) = (&*f.source, &*f.target);
    let sp = lp.space();
    let (n0, n1) = (l.dim0(), l.data().dim1());
    let e = |i: usize| l.data().e0(i);
    let f0 = |x: &[Rational]| f.f0().mul_vec(x);
    let f1 = |m: &[Rational]| f.f1().mul_vec(m);
    let f2 = |x: &[Rational], y: &[Rational]| f.f2_eval(x, y);
    let mut out = VerificationReport::new();
    out.absorb("functor", check_functor(&f.functor)?);

    let mut anti = Sweep::new("f2_antisymmetric");
    let mut src = Sweep::new("f2_source");
    let mut tgt = Sweep::new("f2_target");
    for i in 0..n0 {
        for j in 0..n0 {
            let m = f.f2.fiber(&[i, j]);
            anti.record(&[i, j], vector::add(m, f.f2.fiber(&[j, i])));
            src.record(
                &[i, j],
                vector::sub(&sp.source(m), &lp.bracket_objects(&f0(&e(i)), &f0(&e(j)))),
            );
            tgt.record(
                &[i, j],
                vector::sub(&sp.target(m), &f0(&l.bracket_objects(&e(i), &e(j)))),
            );
        }
    }
    out.push(anti.finish());
    out.push(src.finish());
    out.push(tgt.finish());

    // [F₁m₁, F₁m₂] then F₂ at the targets equals F₂ at the sources then
    // F₁[m₁, m₂], for an arrow in one slot and an identity in the other.
    let mut nat = Sweep::new("f2_naturality");
    let lsp = l.space();
    for slot in 0..2 {
        for a in 0..n1 {
            for b in 0..n0 {
                let arrow = l.arrow_morphism(a);
                let ident = lsp.identity_vec(&e(b));
                let (m1, m2) = if slot == 0 { (arrow, ident) } else { (ident, arrow) };
                let lhs = [
                    lp.bracket_vecs(&f1(&m1), &f1(&m2)),
                    f2(&lsp.target(&m1), &lsp.target(&m2)),
                ];
                let rhs = [f2(&lsp.source(&m1), &lsp.source(&m2)), f1(&l.bracket_vecs(&m1, &m2))];
                nat.record(&[slot, a, b], residual_of(sp, &lhs, &rhs));
            }
        }
    }
    out.push(nat.finish());

    let mut hex = Sweep::new("hexagon");
    for i in 0..n0 {
        for j in 0..n0 {
            for k in 0..n0 {
                let (x, y, z) = (e(i), e(j), e(k));
                let (fx, fy, fz) = (f0(&x), f0(&y), f0(&z));
                let id = |p: &[Rational]| sp.identity_vec(p);
                let b = |p: &[Rational], q: &[Rational]| l.bracket_objects(p, q);
                let top = [
                    lp.jacobiator_vec(&fx, &fy, &fz),
                    vector::add(
                        &lp.bracket_vecs(&id(&fx), &f2(&y, &z)),
                        &lp.bracket_vecs(&f2(&x, &z), &id(&fy)),
                    ),
                    vector::add(&f2(&x, &b(&y, &z)), &f2(&b(&x, &z), &y)),
                ];
                let bottom = [
                    lp.bracket_vecs(&f2(&x, &y), &id(&fz)),
                    f2(&b(&x, &y), &z),
                    f1(&l.jacobiator_vec(&x, &y, &z)),
                ];
                hex.record(&[i, j, k], residual_of(sp, &top, &bottom));
            }
        }
    }
    out.push(hex.finish());
    Ok(out)
}

/// First `f`, then `g`: `(fg)₂(x,y)` is `g₂(f₀x, f₀y)` followed by `g₁(f₂(x,y))`.
pub fn compose_lie2_homs(f: &Lie2Hom, g: &Lie2Hom) -> Result<Lie2Hom> {
    f.check_shapes()?;
    g.check_shapes()?;
    if f.target != g.source {
        return Err(Error::EndpointMismatch(
            "target of the first homomorphism differs from source of the second".into(),
        ));
    }
    let functor = compose_functors(&f.functor, &g.functor)?;
    let n0 = f.source.dim0();
    let sp = g.target.space();
    let mut f2 = Tensor::zeros(&[n0, n0, sp.dim1()]);
    for i in 0..n0 {
        for j in 0..n0 {
            let a = g.f2_eval(&f.f0().column(i), &f.f0().column(j));
            let b = g.f1().mul_vec(f.f2.fiber(&[i, j]));
            f2.set_fiber(&[i, j], &sp.compose_vecs(&a, &b)?);
        }
    }
    Ok(Lie2Hom {
        source: f.source.clone(),
        target: g.target.clone(),
        functor,
        f2,
    })
}

/// A candidate 2-homomorphism: a natural transformation between the
/// underlying functors of parallel homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2TwoHom {
    pub from: Lie2Hom,
    pub to: Lie2Hom,
    pub nat: LinearNatTrans,
}

impl Lie2TwoHom {
    pub fn new(from: Lie2Hom, to: Lie2Hom, theta: RMatrix) -> Result<Self> {
        let t = Lie2TwoHom {
            nat: LinearNatTrans {
                from: from.functor.clone(),
                to: to.functor.clone(),
                theta,
            },
            from,
            to,
        };
        t.check_shapes()?;
        Ok(t)
    }

    pub fn identity(f: &Lie2Hom) -> Self {
        Lie2TwoHom {
            from: f.clone(),
            to: f.clone(),
            nat: LinearNatTrans::identity(&f.functor),
        }
    }

    /// `T(τ)`, with components `θ_x = (φ₀x, τx)`.
    pub fn from_linfty_two_hom(t: &LInfTwoHom) -> Result<Self> {
        let from = Lie2Hom::from_linfty_hom(&t.from)?;
        let to = Lie2Hom::from_linfty_hom(&t.to)?;
        let nat = t_on_homotopy(&t.tau)?;
        Lie2TwoHom::new(from, to, nat.theta)
    }

    /// `S(θ)`: the arrow parts of the components.
    pub fn to_linfty_two_hom(&self) -> Result<LInfTwoHom> {
        let from = self.from.to_linfty_hom()?;
        let to = self.to.to_linfty_hom()?;
        let sp = self.from.target.space();
        let m0 = self.from.target.dim0();
        let cols: Vec<Vec<Rational>> = (0..self.nat.theta.cols())
            .map(|c| sp.arrow(&self.nat.theta.column(c))[m0..].to_vec())
            .collect();
        let tau = RMatrix::from_columns(self.from.target.data().dim1(), &cols)?;
        LInfTwoHom::new(from, to, tau)
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.from.check_shapes()?;
        self.to.check_shapes()?;
        if self.from.source != self.to.source || self.from.target != self.to.target {
            return Err(Error::EndpointMismatch(
                "2-homomorphism between non-parallel homomorphisms".into(),
            ));
        }
        if self.nat.from != self.from.functor || self.nat.to != self.to.functor {
            return Err(Error::EndpointMismatch(
                "natural transformation endpoints differ from the homomorphisms".into(),
            ));
        }
        self.nat.check_shapes()
    }
}

/// Naturality of `θ` and the square: `F₂` then `θ_{[x,y]}` equals
/// `[θ_x, θ_y]` then `G₂`.
pub fn check_lie2_two_hom(t: &Lie2TwoHom) -> Result<VerificationReport> {
    t.check_shapes()?;
    let l = &*t.from.source;
    let lp = &*t.from.target;
    let sp = lp.space();
    let mut out = VerificationReport::new();
    out.absorb("nat", check_nat_trans(&t.nat)?);
    let theta = |x: &[Rational]| t.nat.component(x);
    let mut s = Sweep::new("square");
    for i in 0..l.dim0() {
        for j in 0..l.dim0() {
            let (x, y) = (l.data().e0(i), l.data().e0(j));
            let lhs = [t.from.f2_eval(&x, &y), theta(&l.bracket_objects(&x, &y))];
            let rhs = [lp.bracket_vecs(&theta(&x), &theta(&y)), t.to.f2_eval(&x, &y)];
            s.record(&[i, j], residual_of(sp, &lhs, &rhs));
        }
    }
    out.push(s.finish());
    Ok(out)
}

pub fn vertical_lie2_two_hom(a: &Lie2TwoHom, b: &Lie2TwoHom) -> Result<Lie2TwoHom> {
    if a.to != b.from {
        return Err(Error::EndpointMismatch(
            "vertical composite needs a.to == b.from".into(),
        ));
    }
    Ok(Lie2TwoHom {
        from: a.from.clone(),
        to: b.to.clone(),
        nat: vertical_nat(&a.nat, &b.nat)?,
    })
}

pub fn horizontal_lie2_two_hom(a: &Lie2TwoHom, b: &Lie2TwoHom) -> Result<Lie2TwoHom> {
    Ok(Lie2TwoHom {
        from: compose_lie2_homs(&a.from, &b.from)?,
        to: compose_lie2_homs(&a.to, &b.to)?,
        nat: horizontal_nat(&a.nat, &b.nat)?,
    })
}
