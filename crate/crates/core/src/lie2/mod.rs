//! Semistrict Lie 2-algebras presented categorically. The stored data is
//! the 2-term L∞-algebra; the 2-vector space, the bracket functor and the
//! Jacobiator are derived from it. Morphisms of `L₁ = V₀ ⊕ V₁` are
//! vectors `(source, arrow part)`.

mod dcm;
mod hom;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Rational};
use crate::linfty::TwoTermLInfinity;
use crate::report::{Sweep, VerificationReport};
use crate::twovect::{functor_t, Morphism, TwoVectorSpace};

pub use dcm::{check_crossed_module, from_crossed_module, to_crossed_module, DifferentialCrossedModule};
pub use hom::{
    check_lie2_hom, check_lie2_two_hom, compose_lie2_homs, horizontal_lie2_two_hom, vertical_lie2_two_hom, Lie2Hom,
    Lie2TwoHom,
};

#[derive(Clone, Debug)]
pub struct SemistrictLie2Algebra {
    data: TwoTermLInfinity,
    space: Arc<TwoVectorSpace>,
}

impl PartialEq for SemistrictLie2Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Eq for SemistrictLie2Algebra {}

impl SemistrictLie2Algebra {
    /// Builds the categorical layer for any data, valid or not; the checks
    /// report what fails.
    pub fn from_linfty(data: TwoTermLInfinity) -> Self {
        let space = Arc::new(functor_t(data.complex()));
        SemistrictLie2Algebra { data, space }
    }

    pub fn to_linfty(&self) -> TwoTermLInfinity {
        self.data.clone()
    }

    pub fn data(&self) -> &TwoTermLInfinity {
        &self.data
    }

    pub fn space(&self) -> &Arc<TwoVectorSpace> {
        &self.space
    }

    pub fn dim0(&self) -> usize {
        self.data.dim0()
    }

    /// The morphism with the given source and arrow part.
    pub fn morphism(&self, source: &[Rational], arrow: &[Rational]) -> Result<Morphism<'_>> {
        self.space.morphism(vector::concat(source, arrow))
    }

    pub fn identity(&self, x: &[Rational]) -> Morphism<'_> {
        self.space.identity_morphism(x)
    }

    fn split<'v>(&self, f: &'v [Rational]) -> (&'v [Rational], &'v [Rational]) {
        f.split_at(self.dim0())
    }

    pub fn bracket_objects(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.data.br00(x, y)
    }

    /// `[f, g] = ([x,a], l₂(f̄,a) + l₂(y,ḡ))` for `f: x → y`, `g: a → b`.
    pub fn bracket_vecs(&self, f: &[Rational], g: &[Rational]) -> Vec<Rational> {
        let (x, fbar) = self.split(f);
        let (a, gbar) = self.split(g);
        let y = self.space.target(f);
        let arrow = vector::add(&self.data.br10(fbar, a), &self.data.br01(&y, gbar));
        vector::concat(&self.data.br00(x, a), &arrow)
    }

    /// The other formula, `([x,a], l₂(x,ḡ) + l₂(f̄,b))`. Equal to
    /// [`Self::bracket_vecs`] exactly when condition (f) holds on the arrows.
    pub fn bracket_vecs_alt(&self, f: &[Rational], g: &[Rational]) -> Vec<Rational> {
        let (x, fbar) = self.split(f);
        let (a, gbar) = self.split(g);
        let b = self.space.target(g);
        let arrow = vector::add(&self.data.br01(x, gbar), &self.data.br10(fbar, &b));
        vector::concat(&self.data.br00(x, a), &arrow)
    }

    /// ```
    /// use lie2::cohomology::{build_g_hbar, so3};
    /// use lie2::exactlin::int;
    /// let l = build_g_hbar(&so3(), &int(1));
    /// let e = |i| l.data().e0(i);
    /// let f = l.morphism(&e(0), &[int(1)]).unwrap();
    /// let g = l.identity(&e(1));
    /// let fg = l.bracket_morphisms(&f, &g).unwrap();
    /// assert_eq!(fg.vec, vec![int(0), int(0), int(1), int(0)]);
    /// ```
    pub fn bracket_morphisms<'a>(&'a self, f: &Morphism<'_>, g: &Morphism<'_>) -> Result<Morphism<'a>> {
        if f.space != &*self.space || g.space != &*self.space {
            return Err(Error::IllTyped("morphisms from a different 2-vector space".into()));
        }
        self.space.morphism(self.bracket_vecs(&f.vec, &g.vec))
    }

    /// `J_{x,y,z} = ([[x,y],z], l₃(x,y,z))`, trilinear in the objects.
    pub fn jacobiator_vec(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let s = self.data.br00(&self.data.br00(x, y), z);
        vector::concat(&s, &self.data.l3_eval(x, y, z))
    }

    pub fn jacobiator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Morphism<'_> {
        self.space.morphism(self.jacobiator_vec(x, y, z)).expect("sized")
    }

    /// `[x,[y,z]] + [[x,z],y]`, the intended target of `J_{x,y,z}`.
    pub fn jacobiator_codomain(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let b = |p: &[Rational], q: &[Rational]| self.data.br00(p, q);
        vector::add(&b(x, &b(y, z)), &b(&b(x, z), y))
    }

    pub fn is_strict(&self) -> bool {
        self.data.is_strict()
    }

    pub fn is_skeletal(&self) -> bool {
        self.data.is_skeletal()
    }

    fn basis_morphisms(&self) -> Vec<Vec<Rational>> {
        (0..self.space.dim1())
            .map(|i| vector::unit(self.space.dim1(), i))
            .collect()
    }

    fn arrow_morphism(&self, j: usize) -> Vec<Rational> {
        vector::concat(&vector::zeros(self.dim0()), &self.data.e1(j))
    }
}

/// A path of morphisms where each step is padded with the identity on
/// whatever part of the current object it does not touch.
struct Walk<'a> {
    l: &'a SemistrictLie2Algebra,
    start: Vec<Rational>,
    current: Vec<Rational>,
    arrow: Vec<Rational>,
}

impl<'a> Walk<'a> {
    fn new(l: &'a SemistrictLie2Algebra, start: Vec<Rational>) -> Self {
        Walk {
            l,
            current: start.clone(),
            start,
            arrow: vector::zeros(l.data.dim1()),
        }
    }

    fn step(mut self, core: &[Rational]) -> Self {
        let space = &self.l.space;
        let rest = vector::sub(&self.current, &space.source(core));
        let padded = vector::add(core, &space.identity_vec(&rest));
        self.arrow = vector::add(&self.arrow, self.l.split(&padded).1);
        self.current = space.target(&padded);
        self
    }

    fn morphism(&self) -> Vec<Rational> {
        vector::concat(&self.start, &self.arrow)
    }
}

/// Both sides of the Jacobiator identity at objects `w, x, y, z`, as
/// morphisms out of `[[[w,x],y],z]`.
pub fn octagon_sides(
    l: &SemistrictLie2Algebra,
    w: &[Rational],
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> (Vec<Rational>, Vec<Rational>) {
    let b = |p: &[Rational], q: &[Rational]| l.bracket_objects(p, q);
    let j = |p: &[Rational], q: &[Rational], r: &[Rational]| l.jacobiator_vec(p, q, r);
    let id = |p: &[Rational]| l.space.identity_vec(p);
    let start = b(&b(&b(w, x), y), z);

    let lhs = Walk::new(l, start.clone())
        .step(&j(&b(w, x), y, z))
        .step(&l.bracket_vecs(&j(w, x, z), &id(y)))
        .step(&vector::add(
            &vector::add(&j(w, &b(x, z), y), &j(&b(w, z), x, y)),
            &j(w, x, &b(y, z)),
        ));
    let rhs = Walk::new(l, start)
        .step(&l.bracket_vecs(&j(w, x, y), &id(z)))
        .step(&vector::add(&j(&b(w, y), x, z), &j(w, &b(x, y), z)))
        .step(&l.bracket_vecs(&j(w, y, z), &id(x)))
        .step(&l.bracket_vecs(&id(w), &j(x, y, z)));
    (lhs.morphism(), rhs.morphism())
}

/// The Jacobiator identity on every basis 4-tuple, composing both sides of
/// the octagon from bracket and Jacobiator morphisms.
pub fn check_jacobiator_identity_categorical(l: &SemistrictLie2Algebra) -> VerificationReport {
    let n = l.dim0();
    let e = |i: usize| l.data.e0(i);
    let mut s = Sweep::new("jacobiator_identity");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let (lhs, rhs) = octagon_sides(l, &e(a), &e(b), &e(c), &e(d));
                    s.record(&[a, b, c, d], vector::sub(&lhs, &rhs));
                }
            }
        }
    }
    [s.finish()].into_iter().collect()
}

/// `f` then `g`, or the mismatch between `t(f)` and `s(g)`.
fn compose_or_gap(
    space: &TwoVectorSpace,
    f: &[Rational],
    g: &[Rational],
) -> std::result::Result<Vec<Rational>, Vec<Rational>> {
    space
        .compose_vecs(f, g)
        .map_err(|_| vector::sub(&space.target(f), &space.source(g)))
}

/// Functoriality of the bracket, agreement of its two formulas, and the
/// source, target, antisymmetry and naturality of the Jacobiator.
pub fn check_lie2_algebra(l: &SemistrictLie2Algebra) -> VerificationReport {
    let space = &l.space;
    let n0 = l.dim0();
    let n1 = l.data.dim1();
    let e = |i: usize| l.data.e0(i);
    let basis = l.basis_morphisms();
    let mut out = VerificationReport::new();

    let mut ids = Sweep::new("bracket_identities");
    for i in 0..n0 {
        for j in 0..n0 {
            let got = l.bracket_vecs(&space.identity_vec(&e(i)), &space.identity_vec(&e(j)));
            ids.record(
                &[i, j],
                vector::sub(&got, &space.identity_vec(&l.bracket_objects(&e(i), &e(j)))),
            );
        }
    }
    out.push(ids.finish());

    let mut targets = Sweep::new("bracket_target");
    let mut agree = Sweep::new("bracket_formulas_agree");
    for (p, f) in basis.iter().enumerate() {
        for (q, g) in basis.iter().enumerate() {
            let fg = l.bracket_vecs(f, g);
            let want = l.bracket_objects(&space.target(f), &space.target(g));
            targets.record(&[p, q], vector::sub(&space.target(&fg), &want));
            agree.record(&[p, q], vector::sub(&fg, &l.bracket_vecs_alt(f, g)));
        }
    }
    out.push(targets.finish());
    out.push(agree.finish());

    // [f f′, g g′] = [f, g][f′, g′] with f: e_i → e_i + d f_j, f′ an arrow
    // f_k out of its target, and likewise for g.
    let mut comp = Sweep::new("bracket_composition");
    let chain = |i: usize, j: usize, k: usize| {
        let f = vector::concat(&e(i), &l.data.e1(j));
        let f2 = vector::concat(&space.target(&f), &l.data.e1(k));
        (f, f2)
    };
    for i in 0..n0 {
        for j in 0..n1 {
            for k in 0..n1 {
                let (f, f2) = chain(i, j, k);
                let ff = space.compose_vecs(&f, &f2).expect("chained by construction");
                for a in 0..n0 {
                    for b in 0..n1 {
                        for c in 0..n1 {
                            let (g, g2) = chain(a, b, c);
                            let gg = space.compose_vecs(&g, &g2).expect("chained by construction");
                            let lhs = l.bracket_vecs(&ff, &gg);
                            let r = match compose_or_gap(space, &l.bracket_vecs(&f, &g), &l.bracket_vecs(&f2, &g2)) {
                                Ok(rhs) => vector::sub(&lhs, &rhs),
                                Err(gap) => vector::concat(&gap, &vector::zeros(n1)),
                            };
                            comp.record(&[i, j, k, a, b, c], r);
                        }
                    }
                }
            }
        }
    }
    out.push(comp.finish());

    let mut jt = Sweep::new("jacobiator_target");
    let mut ja = Sweep::new("jacobiator_antisymmetry");
    for a in 0..n0 {
        for b in 0..n0 {
            for c in 0..n0 {
                let (x, y, z) = (e(a), e(b), e(c));
                let jv = l.jacobiator_vec(&x, &y, &z);
                jt.record(
                    &[a, b, c],
                    vector::sub(&space.target(&jv), &l.jacobiator_codomain(&x, &y, &z)),
                );
                let arrow =
                    |p: &[Rational], q: &[Rational], r: &[Rational]| l.split(&l.jacobiator_vec(p, q, r)).1.to_vec();
                let r1 = vector::add(&arrow(&x, &y, &z), &arrow(&y, &x, &z));
                let r2 = vector::add(&arrow(&x, &y, &z), &arrow(&x, &z, &y));
                ja.record(&[a, b, c], vector::concat(&r1, &r2));
            }
        }
    }
    out.push(jt.finish());
    out.push(ja.finish());
    out.push(jacobiator_naturality(l));
    out
}

/// For an arrow `f` in one slot and identities in the others:
/// `[[m₁,m₂],m₃]` then `J` at the targets equals `J` at the sources then
/// `[m₁,[m₂,m₃]] + [[m₁,m₃],m₂]`. Tuples are `(slot, i, j, k)` with the
/// slot's entry indexing `V₁`.
pub fn jacobiator_naturality(l: &SemistrictLie2Algebra) -> crate::report::CheckResult {
    let space = &l.space;
    let (n0, n1) = (l.dim0(), l.data.dim1());
    let mut s = Sweep::new("jacobiator_naturality");
    for slot in 0..3 {
        let ranges: Vec<usize> = (0..3).map(|p| if p == slot { n1 } else { n0 }).collect();
        for t in crate::exactlin::tuples(&ranges) {
            let ms: Vec<Vec<Rational>> = (0..3)
                .map(|p| {
                    if p == slot {
                        l.arrow_morphism(t[p])
                    } else {
                        space.identity_vec(&l.data.e0(t[p]))
                    }
                })
                .collect();
            let (m1, m2, m3) = (&ms[0], &ms[1], &ms[2]);
            let src: Vec<_> = ms.iter().map(|m| space.source(m)).collect();
            let tgt: Vec<_> = ms.iter().map(|m| space.target(m)).collect();
            let p_m = l.bracket_vecs(&l.bracket_vecs(m1, m2), m3);
            let q_m = vector::add(
                &l.bracket_vecs(m1, &l.bracket_vecs(m2, m3)),
                &l.bracket_vecs(&l.bracket_vecs(m1, m3), m2),
            );
            let j_t = l.jacobiator_vec(&tgt[0], &tgt[1], &tgt[2]);
            let j_s = l.jacobiator_vec(&src[0], &src[1], &src[2]);
            let mut tuple = vec![slot];
            tuple.extend(&t);
            let r = match (compose_or_gap(space, &p_m, &j_t), compose_or_gap(space, &j_s, &q_m)) {
                (Ok(a), Ok(b)) => vector::sub(&a, &b),
                (Err(gap), _) | (_, Err(gap)) => vector::concat(&gap, &vector::zeros(n1)),
            };
            s.record(&tuple, r);
        }
    }
    s.finish()
}

#[cfg(test)]
mod tests;
