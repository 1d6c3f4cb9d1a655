//! 2-vector spaces: categories internal to Vect, stored as
//! `(V₀, V₁, s, t, i)` with composition derived from arrow parts.
//!
//! A morphism `f ∈ V₁` has source `s f`, target `t f` and arrow part
//! `f̄ = f − i s f`. Composites add arrow parts:
//! `f g = i(s f) + f̄ + ḡ` whenever `t f = s g`. Order is diagrammatic
//! throughout, for morphisms, functors and natural transformations alike.

mod expr;

use std::sync::{Arc, OnceLock};

use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{kron, rank_kernel, solve_linear, vector, RMatrix, Rational};
use crate::report::{Sweep, VerificationReport};
use crate::twoterm::{ChainHomotopy, ChainMap, TwoTermComplex};

pub use expr::{compare_two_cells, eval_two_cell, FunctorExpr, TwoCellExpr};

#[derive(Clone, Debug)]
pub struct TwoVectorSpace {
    dim0: usize,
    dim1: usize,
    s: RMatrix,
    t: RMatrix,
    i: RMatrix,
    kernel: OnceLock<RMatrix>,
}

impl PartialEq for TwoVectorSpace {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.dim0 == other.dim0
                && self.dim1 == other.dim1
                && self.s == other.s
                && self.t == other.t
                && self.i == other.i)
    }
}

impl Eq for TwoVectorSpace {}

impl TwoVectorSpace {
    /// Validates shapes only; use [`TwoVectorSpace::check`] for the
    /// identity-morphism laws.
    pub fn new(s: RMatrix, t: RMatrix, i: RMatrix) -> Result<Self> {
        let (dim0, dim1) = s.shape();
        if t.shape() != (dim0, dim1) {
            return Err(dim_mismatch("t", format!("{dim0}x{dim1}"), format!("{:?}", t.shape())));
        }
        if i.shape() != (dim1, dim0) {
            return Err(dim_mismatch("i", format!("{dim1}x{dim0}"), format!("{:?}", i.shape())));
        }
        Ok(TwoVectorSpace {
            dim0,
            dim1,
            s,
            t,
            i,
            kernel: OnceLock::new(),
        })
    }

    pub fn dim0(&self) -> usize {
        self.dim0
    }

    pub fn dim1(&self) -> usize {
        self.dim1
    }

    pub fn s(&self) -> &RMatrix {
        &self.s
    }

    pub fn t(&self) -> &RMatrix {
        &self.t
    }

    pub fn i(&self) -> &RMatrix {
        &self.i
    }

    /// `s i = 1` and `t i = 1`.
    pub fn check(&self) -> VerificationReport {
        let eye = RMatrix::identity(self.dim0);
        let mut out = VerificationReport::new();
        for (name, m) in [("source_of_identity", &self.s), ("target_of_identity", &self.t)] {
            let r = &(m * &self.i) - &eye;
            let mut sw = Sweep::new(name);
            for c in 0..r.cols() {
                sw.record(&[c], r.column(c));
            }
            out.push(sw.finish());
        }
        out
    }

    /// Basis of `ker s` as columns, in the echelon convention of
    /// [`rank_kernel`]. Computed once.
    pub fn kernel_basis(&self) -> &RMatrix {
        self.kernel.get_or_init(|| {
            let (_, ker) = rank_kernel(&self.s);
            RMatrix::from_columns(self.dim1, &ker).expect("kernel vectors have length dim1")
        })
    }

    /// Coordinates of `v ∈ ker s` in [`TwoVectorSpace::kernel_basis`].
    pub fn kernel_coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        solve_linear(self.kernel_basis(), v)?.ok_or_else(|| Error::Invalid("vector does not lie in ker s".into()))
    }

    pub fn source(&self, f: &[Rational]) -> Vec<Rational> {
        self.s.mul_vec(f)
    }

    pub fn target(&self, f: &[Rational]) -> Vec<Rational> {
        self.t.mul_vec(f)
    }

    pub fn arrow(&self, f: &[Rational]) -> Vec<Rational> {
        vector::sub(f, &self.i.mul_vec(&self.s.mul_vec(f)))
    }

    pub fn identity_vec(&self, x: &[Rational]) -> Vec<Rational> {
        self.i.mul_vec(x)
    }

    /// Composite of morphism vectors `f` then `g`.
    pub fn compose_vecs(&self, f: &[Rational], g: &[Rational]) -> Result<Vec<Rational>> {
        if f.len() != self.dim1 || g.len() != self.dim1 {
            return Err(dim_mismatch("morphism", self.dim1, f.len().max(g.len())));
        }
        let sg = self.source(g);
        if self.target(f) != sg {
            return Err(Error::NotComposable(
                "target of the first morphism differs from source of the second".into(),
            ));
        }
        Ok(vector::sub(&vector::add(f, g), &self.i.mul_vec(&sg)))
    }

    /// Composite of a nonempty chain of morphism vectors.
    pub fn compose_chain(&self, fs: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| Error::Invalid("empty composite".into()))?;
        rest.iter().try_fold(first.clone(), |acc, g| self.compose_vecs(&acc, g))
    }

    pub fn morphism(&self, vec: Vec<Rational>) -> Result<Morphism<'_>> {
        if vec.len() != self.dim1 {
            return Err(dim_mismatch("morphism", self.dim1, vec.len()));
        }
        Ok(Morphism { space: self, vec })
    }

    pub fn identity_morphism(&self, x: &[Rational]) -> Morphism<'_> {
        Morphism {
            space: self,
            vec: self.identity_vec(x),
        }
    }
}

/// A morphism of a 2-vector space, compared by its vector in `V₁`.
#[derive(Clone, Debug)]
pub struct Morphism<'a> {
    pub space: &'a TwoVectorSpace,
    pub vec: Vec<Rational>,
}

impl PartialEq for Morphism<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.vec == other.vec
    }
}

impl Morphism<'_> {
    pub fn source(&self) -> Vec<Rational> {
        self.space.source(&self.vec)
    }

    pub fn target(&self) -> Vec<Rational> {
        self.space.target(&self.vec)
    }

    pub fn arrow(&self) -> Vec<Rational> {
        self.space.arrow(&self.vec)
    }

    pub fn is_identity(&self) -> bool {
        vector::is_zero(&self.arrow())
    }
}

/// `f` then `g`.
///
/// ```
/// use lie2::exactlin::{int, RMatrix};
/// use lie2::twoterm::TwoTermComplex;
/// use lie2::twovect::{compose_morphisms, functor_t};
/// let v = functor_t(&TwoTermComplex::from_differential(RMatrix::from_ints(&[[1]])));
/// // morphisms are (source, arrow part)
/// let f = v.morphism(vec![int(0), int(1)]).unwrap();
/// let g = v.morphism(vec![int(1), int(2)]).unwrap();
/// let fg = compose_morphisms(&f, &g).unwrap();
/// assert_eq!(fg.vec, vec![int(0), int(3)]);
/// assert_eq!(fg.target(), vec![int(3)]);
/// ```
pub fn compose_morphisms<'a>(f: &Morphism<'a>, g: &Morphism<'a>) -> Result<Morphism<'a>> {
    if f.space != g.space {
        return Err(Error::NotComposable("morphisms live in different spaces".into()));
    }
    Ok(Morphism {
        space: f.space,
        vec: f.space.compose_vecs(&f.vec, &g.vec)?,
    })
}

/// A candidate linear functor `(F₀, F₁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctor {
    pub source: Arc<TwoVectorSpace>,
    pub target: Arc<TwoVectorSpace>,
    pub f0: RMatrix,
    pub f1: RMatrix,
}

impl LinearFunctor {
    pub fn new(source: Arc<TwoVectorSpace>, target: Arc<TwoVectorSpace>, f0: RMatrix, f1: RMatrix) -> Result<Self> {
        let f = LinearFunctor { source, target, f0, f1 };
        f.check_shapes()?;
        Ok(f)
    }

    pub fn identity(v: &Arc<TwoVectorSpace>) -> Self {
        LinearFunctor {
            source: v.clone(),
            target: v.clone(),
            f0: RMatrix::identity(v.dim0),
            f1: RMatrix::identity(v.dim1),
        }
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        let w0 = (self.target.dim0, self.source.dim0);
        let w1 = (self.target.dim1, self.source.dim1);
        if self.f0.shape() != w0 {
            return Err(dim_mismatch("F0", format!("{w0:?}"), format!("{:?}", self.f0.shape())));
        }
        if self.f1.shape() != w1 {
            return Err(dim_mismatch("F1", format!("{w1:?}"), format!("{:?}", self.f1.shape())));
        }
        Ok(())
    }
}

fn record_columns(sw: &mut Sweep, r: &RMatrix) {
    for c in 0..r.cols() {
        sw.record(&[c], r.column(c));
    }
}

/// `s′F₁ = F₀s`, `t′F₁ = F₀t` and `F₁i = i′F₀`, column by column.
pub fn check_functor(f: &LinearFunctor) -> Result<VerificationReport> {
    f.check_shapes()?;
    let (v, w) = (&f.source, &f.target);
    let rs = &(w.s() * &f.f1) - &(&f.f0 * v.s());
    let rt = &(w.t() * &f.f1) - &(&f.f0 * v.t());
    let ri = &(&f.f1 * v.i()) - &(w.i() * &f.f0);
    let mut out = VerificationReport::new();
    for (name, r) in [
        ("preserves_source", rs),
        ("preserves_target", rt),
        ("preserves_identity", ri),
    ] {
        let mut sw = Sweep::new(name);
        record_columns(&mut sw, &r);
        out.push(sw.finish());
    }
    Ok(out)
}

/// `f` then `g`.
pub fn compose_functors(f: &LinearFunctor, g: &LinearFunctor) -> Result<LinearFunctor> {
    f.check_shapes()?;
    g.check_shapes()?;
    if f.target != g.source {
        return Err(Error::EndpointMismatch(
            "target of the first functor differs from source of the second".into(),
        ));
    }
    Ok(LinearFunctor {
        source: f.source.clone(),
        target: g.target.clone(),
        f0: &g.f0 * &f.f0,
        f1: &g.f1 * &f.f1,
    })
}

/// A candidate natural transformation `θ: F ⇒ G`, stored by its component
/// map `V₀ → V₁′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearNatTrans {
    pub from: LinearFunctor,
    pub to: LinearFunctor,
    pub theta: RMatrix,
}

impl LinearNatTrans {
    /// The identity 2-cell on `F`: `x ↦ 1_{F₀x}`.
    pub fn identity(f: &LinearFunctor) -> Self {
        LinearNatTrans {
            from: f.clone(),
            to: f.clone(),
            theta: f.target.i() * &f.f0,
        }
    }

    pub fn component(&self, x: &[Rational]) -> Vec<Rational> {
        self.theta.mul_vec(x)
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.from.check_shapes()?;
        self.to.check_shapes()?;
        if self.from.source != self.to.source || self.from.target != self.to.target {
            return Err(Error::EndpointMismatch(
                "natural transformation between non-parallel functors".into(),
            ));
        }
        let want = (self.from.target.dim1, self.from.source.dim0);
        if self.theta.shape() != want {
            return Err(dim_mismatch(
                "theta",
                format!("{want:?}"),
                format!("{:?}", self.theta.shape()),
            ));
        }
        Ok(())
    }
}

/// `s′θ = F₀`, `t′θ = G₀`, and naturality in the linear form
/// `arrow(θ(t h)) = (G₁ − F₁) h` for `h` in the kernel basis of `s`.
pub fn check_nat_trans(n: &LinearNatTrans) -> Result<VerificationReport> {
    n.check_shapes()?;
    let v = &n.from.source;
    let w = &n.from.target;
    let rs = &(w.s() * &n.theta) - &n.from.f0;
    let rt = &(w.t() * &n.theta) - &n.to.f0;
    let mut out = VerificationReport::new();
    for (name, r) in [("component_source", rs), ("component_target", rt)] {
        let mut sw = Sweep::new(name);
        record_columns(&mut sw, &r);
        out.push(sw.finish());
    }
    let k = v.kernel_basis();
    let g_minus_f = &n.to.f1 - &n.from.f1;
    let mut sw = Sweep::new("naturality");
    for j in 0..k.cols() {
        let h = k.column(j);
        let lhs = w.arrow(&n.theta.mul_vec(&v.t.mul_vec(&h)));
        sw.record(&[j], vector::sub(&lhs, &g_minus_f.mul_vec(&h)));
    }
    out.push(sw.finish());
    Ok(out)
}

/// `θ: F ⇒ G` then `η: G ⇒ H`; components compose in the target space.
pub fn vertical_nat(a: &LinearNatTrans, b: &LinearNatTrans) -> Result<LinearNatTrans> {
    a.check_shapes()?;
    b.check_shapes()?;
    if a.to != b.from {
        return Err(Error::EndpointMismatch(
            "vertical composite needs a.to == b.from".into(),
        ));
    }
    let w = &a.from.target;
    let theta = &(&a.theta + &b.theta) - &(w.i() * &a.to.f0);
    Ok(LinearNatTrans {
        from: a.from.clone(),
        to: b.to.clone(),
        theta,
    })
}

/// Whiskering by a functor applied first: `P θ: P F ⇒ P G`, component at
/// `x` is `θ_{P₀x}`.
pub fn whisker_left(p: &LinearFunctor, n: &LinearNatTrans) -> Result<LinearNatTrans> {
    Ok(LinearNatTrans {
        from: compose_functors(p, &n.from)?,
        to: compose_functors(p, &n.to)?,
        theta: &n.theta * &p.f0,
    })
}

/// Whiskering by a functor applied afterwards: `θ Q: F Q ⇒ G Q`, component
/// at `x` is `Q₁(θ_x)`.
pub fn whisker_right(n: &LinearNatTrans, q: &LinearFunctor) -> Result<LinearNatTrans> {
    Ok(LinearNatTrans {
        from: compose_functors(&n.from, q)?,
        to: compose_functors(&n.to, q)?,
        theta: &q.f1 * &n.theta,
    })
}

/// Horizontal composite of `θ: F ⇒ G` and `θ′: F′ ⇒ G′`, component
/// `θ′_{F₀x}` followed by `G′₁(θ_x)`.
pub fn horizontal_nat(a: &LinearNatTrans, b: &LinearNatTrans) -> Result<LinearNatTrans> {
    vertical_nat(&whisker_left(&a.from, b)?, &whisker_right(a, &b.to)?)
}

/// The other form of the horizontal composite: `F′₁(θ_x)` followed by
/// `θ′_{G₀x}`. Agrees with [`horizontal_nat`] on natural inputs.
pub fn horizontal_nat_alt(a: &LinearNatTrans, b: &LinearNatTrans) -> Result<LinearNatTrans> {
    vertical_nat(&whisker_right(a, &b.from)?, &whisker_left(&a.to, b)?)
}

// ----- the equivalence with 2-term complexes -----

/// `S(V)`: `C₀ = V₀`, `C₁ = ker s`, `d = t` restricted to `ker s`.
pub fn functor_s(v: &TwoVectorSpace) -> TwoTermComplex {
    TwoTermComplex::from_differential(v.t() * v.kernel_basis())
}

/// `T(C)`: `V₀ = C₀`, `V₁ = C₀ ⊕ C₁`, `s(x, h) = x`, `t(x, h) = x + dh`,
/// `i(x) = (x, 0)`.
pub fn functor_t(c: &TwoTermComplex) -> TwoVectorSpace {
    let (n0, n1) = (c.dim0(), c.dim1());
    let eye = RMatrix::identity(n0);
    let s = RMatrix::hstack(&[&eye, &RMatrix::zeros(n0, n1)]).expect("rows agree");
    let t = RMatrix::hstack(&[&eye, c.d()]).expect("rows agree");
    let i = RMatrix::vstack(&[&eye, &RMatrix::zeros(n1, n0)]).expect("cols agree");
    TwoVectorSpace::new(s, t, i).expect("shapes are consistent")
}

/// Kernel coordinates of the arrow parts of the columns of `m`.
fn arrow_coords(space: &TwoVectorSpace, m: &RMatrix) -> Result<RMatrix> {
    let cols: Result<Vec<_>> = (0..m.cols())
        .map(|c| space.kernel_coords(&space.arrow(&m.column(c))))
        .collect();
    RMatrix::from_columns(space.kernel_basis().cols(), &cols?)
}

/// `S(F)`: `φ₀ = F₀`, `φ₁` = `F₁` on `ker s` projected to `ker s′`.
pub fn s_on_functor(f: &LinearFunctor) -> Result<ChainMap> {
    f.check_shapes()?;
    let img = &f.f1 * f.source.kernel_basis();
    ChainMap::new(
        functor_s(&f.source),
        functor_s(&f.target),
        f.f0.clone(),
        arrow_coords(&f.target, &img)?,
    )
}

/// `S(θ)(x) = θ̄ₓ` in kernel coordinates.
pub fn s_on_nat(n: &LinearNatTrans) -> Result<ChainHomotopy> {
    n.check_shapes()?;
    Ok(ChainHomotopy {
        from: s_on_functor(&n.from)?,
        to: s_on_functor(&n.to)?,
        tau: arrow_coords(&n.from.target, &n.theta)?,
    })
}

/// `T(φ)`: `F₀ = φ₀`, `F₁ = φ₀ ⊕ φ₁`.
pub fn t_on_chain_map(f: &ChainMap) -> Result<LinearFunctor> {
    f.check_shapes()?;
    LinearFunctor::new(
        Arc::new(functor_t(&f.source)),
        Arc::new(functor_t(&f.target)),
        f.phi0.clone(),
        RMatrix::block_diag(&[&f.phi0, &f.phi1]),
    )
}

/// `T(τ)(x) = (φ₀x, τx)`.
pub fn t_on_homotopy(h: &ChainHomotopy) -> Result<LinearNatTrans> {
    h.check_shapes()?;
    Ok(LinearNatTrans {
        from: t_on_chain_map(&h.from)?,
        to: t_on_chain_map(&h.to)?,
        theta: RMatrix::vstack(&[&h.from.phi0, &h.tau])?,
    })
}

/// The isomorphism `T(S(V)) → V`, `(x, h̄) ↦ i(x) + h̄`.
pub fn alpha(v: &Arc<TwoVectorSpace>) -> LinearFunctor {
    let ts = Arc::new(functor_t(&functor_s(v)));
    LinearFunctor {
        source: ts,
        target: v.clone(),
        f0: RMatrix::identity(v.dim0),
        f1: RMatrix::hstack(&[v.i(), v.kernel_basis()]).expect("rows agree"),
    }
}

/// The inverse of [`alpha`], `f ↦ (s f, f̄)`.
pub fn alpha_inverse(v: &Arc<TwoVectorSpace>) -> Result<LinearFunctor> {
    let ts = Arc::new(functor_t(&functor_s(v)));
    let arrows = arrow_coords(v, &RMatrix::identity(v.dim1))?;
    Ok(LinearFunctor {
        source: v.clone(),
        target: ts,
        f0: RMatrix::identity(v.dim0),
        f1: RMatrix::vstack(&[v.s(), &arrows])?,
    })
}

/// The isomorphism `S(T(C)) → C`, identifying `ker s = {(0, h)}` with `C₁`.
pub fn beta(c: &TwoTermComplex) -> ChainMap {
    let tc = functor_t(c);
    let proj =
        RMatrix::hstack(&[&RMatrix::zeros(c.dim1(), c.dim0()), &RMatrix::identity(c.dim1())]).expect("rows agree");
    ChainMap {
        source: functor_s(&tc),
        target: c.clone(),
        phi0: RMatrix::identity(c.dim0()),
        phi1: &proj * tc.kernel_basis(),
    }
}

// ----- sums, tensors, ground field -----

/// `K`: one object and only identity morphisms.
pub fn ground_field() -> TwoVectorSpace {
    let one = RMatrix::identity(1);
    TwoVectorSpace::new(one.clone(), one.clone(), one).expect("1x1")
}

/// A direct sum with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub space: Arc<TwoVectorSpace>,
    pub inl: LinearFunctor,
    pub inr: LinearFunctor,
    pub pl: LinearFunctor,
    pub pr: LinearFunctor,
}

pub fn direct_sum(v: &Arc<TwoVectorSpace>, w: &Arc<TwoVectorSpace>) -> DirectSum {
    let space = Arc::new(
        TwoVectorSpace::new(
            RMatrix::block_diag(&[v.s(), w.s()]),
            RMatrix::block_diag(&[v.t(), w.t()]),
            RMatrix::block_diag(&[v.i(), w.i()]),
        )
        .expect("block shapes"),
    );
    let inj = |n_before: usize, n: usize, n_after: usize| {
        RMatrix::vstack(&[
            &RMatrix::zeros(n_before, n),
            &RMatrix::identity(n),
            &RMatrix::zeros(n_after, n),
        ])
        .expect("cols agree")
    };
    let (a0, a1, b0, b1) = (v.dim0, v.dim1, w.dim0, w.dim1);
    let inl = LinearFunctor {
        source: v.clone(),
        target: space.clone(),
        f0: inj(0, a0, b0),
        f1: inj(0, a1, b1),
    };
    let inr = LinearFunctor {
        source: w.clone(),
        target: space.clone(),
        f0: inj(a0, b0, 0),
        f1: inj(a1, b1, 0),
    };
    let pl = LinearFunctor {
        source: space.clone(),
        target: v.clone(),
        f0: inl.f0.transpose(),
        f1: inl.f1.transpose(),
    };
    let pr = LinearFunctor {
        source: space.clone(),
        target: w.clone(),
        f0: inr.f0.transpose(),
        f1: inr.f1.transpose(),
    };
    DirectSum {
        space,
        inl,
        inr,
        pl,
        pr,
    }
}

/// `V ⊗ W` with `s ⊗ s′`, `t ⊗ t′`, `i ⊗ i′`.
pub fn tensor_2vs(v: &TwoVectorSpace, w: &TwoVectorSpace) -> TwoVectorSpace {
    TwoVectorSpace::new(kron(&v.s, &w.s), kron(&v.t, &w.t), kron(&v.i, &w.i)).expect("kron shapes")
}

/// `V^{⊗n}` for `n ≥ 1`.
pub fn tensor_power(v: &TwoVectorSpace, n: usize) -> TwoVectorSpace {
    assert!(n >= 1, "tensor_power needs n >= 1");
    (1..n).fold(v.clone(), |acc, _| tensor_2vs(&acc, v))
}

/// `F ⊗ G` between the tensor products of the given spaces.
pub fn tensor_functor(
    f: &LinearFunctor,
    g: &LinearFunctor,
    source: Arc<TwoVectorSpace>,
    target: Arc<TwoVectorSpace>,
) -> Result<LinearFunctor> {
    LinearFunctor::new(source, target, kron(&f.f0, &g.f0), kron(&f.f1, &g.f1))
}

/// `ℓ_V: K ⊗ V → V`, `a ⊗ v ↦ av`.
pub fn left_unitor(v: &Arc<TwoVectorSpace>) -> LinearFunctor {
    LinearFunctor {
        source: Arc::new(tensor_2vs(&ground_field(), v)),
        target: v.clone(),
        f0: RMatrix::identity(v.dim0),
        f1: RMatrix::identity(v.dim1),
    }
}

/// `r_V: V ⊗ K → V`, `v ⊗ a ↦ av`.
pub fn right_unitor(v: &Arc<TwoVectorSpace>) -> LinearFunctor {
    LinearFunctor {
        source: Arc::new(tensor_2vs(v, &ground_field())),
        target: v.clone(),
        f0: RMatrix::identity(v.dim0),
        f1: RMatrix::identity(v.dim1),
    }
}
