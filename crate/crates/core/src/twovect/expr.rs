//! Symbolic functors and 2-cells over 2-vector spaces, evaluated lazily.
//!
//! Large tensor powers make dense composites expensive, so tensor products
//! of functors are applied slot by slot and composites are applied factor
//! by factor. Only small factors are ever materialized.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use rayon::prelude::*;

use super::{LinearFunctor, LinearNatTrans, Morphism, TwoVectorSpace};
use crate::error::{Error, Result};
use crate::exactlin::{vector, RMatrix, Rational};
use crate::report::{Sweep, VerificationReport};

type SparseCols = Vec<Vec<(usize, Rational)>>;

fn sparse_cols(m: &RMatrix) -> SparseCols {
    (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .filter(|&r| !m[(r, c)].is_zero())
                .map(|r| (r, m[(r, c)].clone()))
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Level {
    Objects,
    Morphisms,
}

struct Slot {
    expr: FunctorExpr,
    /// Column-sparse matrices on objects and morphisms; `None` for identity
    /// slots, which are skipped.
    cols: Option<[SparseCols; 2]>,
}

enum FNode {
    Dense(LinearFunctor),
    Identity,
    Compose(Vec<FunctorExpr>),
    Tensor(Vec<Slot>),
}

struct FInner {
    node: FNode,
    source: Arc<TwoVectorSpace>,
    target: Arc<TwoVectorSpace>,
    dense: OnceLock<LinearFunctor>,
}

/// A linear functor built from dense pieces by composition and tensoring.
#[derive(Clone)]
pub struct FunctorExpr(Arc<FInner>);

impl fmt::Debug for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.node {
            FNode::Dense(_) => write!(f, "Dense"),
            FNode::Identity => write!(f, "Id"),
            FNode::Compose(ps) => f.debug_tuple("Compose").field(ps).finish(),
            FNode::Tensor(ss) => {
                let parts: Vec<_> = ss.iter().map(|s| &s.expr).collect();
                f.debug_tuple("Tensor").field(&parts).finish()
            }
        }
    }
}

impl FunctorExpr {
    fn wrap(node: FNode, source: Arc<TwoVectorSpace>, target: Arc<TwoVectorSpace>) -> Self {
        FunctorExpr(Arc::new(FInner {
            node,
            source,
            target,
            dense: OnceLock::new(),
        }))
    }

    pub fn dense(f: LinearFunctor) -> Result<Self> {
        f.check_shapes()?;
        let (s, t) = (f.source.clone(), f.target.clone());
        Ok(Self::wrap(FNode::Dense(f), s, t))
    }

    pub fn identity(v: &Arc<TwoVectorSpace>) -> Self {
        Self::wrap(FNode::Identity, v.clone(), v.clone())
    }

    /// Diagrammatic composite: `parts[0]` first.
    pub fn compose(parts: Vec<FunctorExpr>) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::IllTyped("empty composite".into()))?;
        for (k, w) in parts.windows(2).enumerate() {
            if w[0].target() != w[1].source() {
                return Err(Error::IllTyped(format!(
                    "composite factor {k} ends where factor {} does not start",
                    k + 1
                )));
            }
        }
        if parts.len() == 1 {
            return Ok(first.clone());
        }
        let (s, t) = (first.0.source.clone(), parts.last().expect("nonempty").0.target.clone());
        Ok(Self::wrap(FNode::Compose(parts), s, t))
    }

    /// Tensor product of `parts` acting between the supplied spaces, which
    /// must be the tensor products of the factor spaces (only their
    /// dimensions are checked).
    pub fn tensor(parts: Vec<FunctorExpr>, source: Arc<TwoVectorSpace>, target: Arc<TwoVectorSpace>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::IllTyped("empty tensor product".into()));
        }
        let prod = |f: &dyn Fn(&FunctorExpr) -> usize| parts.iter().map(f).product::<usize>();
        let dims_ok = prod(&|p| p.source().dim0()) == source.dim0()
            && prod(&|p| p.source().dim1()) == source.dim1()
            && prod(&|p| p.target().dim0()) == target.dim0()
            && prod(&|p| p.target().dim1()) == target.dim1();
        if !dims_ok {
            return Err(Error::IllTyped(
                "tensor factors do not match the dimensions of the given spaces".into(),
            ));
        }
        let slots = parts
            .into_iter()
            .map(|expr| {
                let cols = if expr.is_identity() {
                    None
                } else {
                    let d = expr.materialize();
                    Some([sparse_cols(&d.f0), sparse_cols(&d.f1)])
                };
                Slot { expr, cols }
            })
            .collect();
        Ok(Self::wrap(FNode::Tensor(slots), source, target))
    }

    pub fn source(&self) -> &Arc<TwoVectorSpace> {
        &self.0.source
    }

    pub fn target(&self) -> &Arc<TwoVectorSpace> {
        &self.0.target
    }

    fn is_identity(&self) -> bool {
        match &self.0.node {
            FNode::Identity => true,
            FNode::Compose(ps) => ps.iter().all(FunctorExpr::is_identity),
            FNode::Tensor(ss) => ss.iter().all(|s| s.cols.is_none()),
            FNode::Dense(_) => false,
        }
    }

    pub fn apply0(&self, x: &[Rational]) -> Vec<Rational> {
        self.apply(Level::Objects, x)
    }

    pub fn apply1(&self, f: &[Rational]) -> Vec<Rational> {
        self.apply(Level::Morphisms, f)
    }

    fn apply(&self, level: Level, x: &[Rational]) -> Vec<Rational> {
        match &self.0.node {
            FNode::Dense(f) => match level {
                Level::Objects => f.f0.mul_vec(x),
                Level::Morphisms => f.f1.mul_vec(x),
            },
            FNode::Identity => x.to_vec(),
            FNode::Compose(ps) => ps.iter().fold(x.to_vec(), |v, p| p.apply(level, &v)),
            FNode::Tensor(slots) => apply_slots(slots, level, x),
        }
    }

    /// The dense functor this expression denotes. Computed once.
    pub fn materialize(&self) -> &LinearFunctor {
        self.0.dense.get_or_init(|| {
            let (s, t) = (&self.0.source, &self.0.target);
            let cols = |level: Level, n: usize| -> Vec<Vec<Rational>> {
                (0..n).map(|j| self.apply(level, &vector::unit(n, j))).collect()
            };
            LinearFunctor {
                source: s.clone(),
                target: t.clone(),
                f0: RMatrix::from_columns(t.dim0(), &cols(Level::Objects, s.dim0())).expect("image length"),
                f1: RMatrix::from_columns(t.dim1(), &cols(Level::Morphisms, s.dim1())).expect("image length"),
            }
        })
    }

    /// Equality as linear functors, compared column by column without
    /// materializing either side.
    pub fn same_functor(&self, other: &FunctorExpr) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.source() != other.source() || self.target() != other.target() {
            return false;
        }
        let (n0, n1) = (self.source().dim0(), self.source().dim1());
        let agree = |level: Level, n: usize| {
            (0..n).into_par_iter().all(|j| {
                let e = vector::unit(n, j);
                self.apply(level, &e) == other.apply(level, &e)
            })
        };
        agree(Level::Objects, n0) && agree(Level::Morphisms, n1)
    }
}

fn dims(slots: &[Slot], level: Level, source: bool) -> Vec<usize> {
    slots
        .iter()
        .map(|s| {
            let v = if source { s.expr.source() } else { s.expr.target() };
            match level {
                Level::Objects => v.dim0(),
                Level::Morphisms => v.dim1(),
            }
        })
        .collect()
}

fn apply_slots(slots: &[Slot], level: Level, x: &[Rational]) -> Vec<Rational> {
    let mut cur_dims = dims(slots, level, true);
    let out_dims = dims(slots, level, false);
    let mut cur = x.to_vec();
    for (a, slot) in slots.iter().enumerate() {
        let Some(cols) = &slot.cols else { continue };
        let cols = &cols[level as usize];
        let outer: usize = cur_dims[..a].iter().product();
        let inner: usize = cur_dims[a + 1..].iter().product();
        let (mid_in, mid_out) = (cur_dims[a], out_dims[a]);
        let mut next = vector::zeros(outer * mid_out * inner);
        for (idx, val) in vector::nonzeros(&cur) {
            let o = idx / (mid_in * inner);
            let m = (idx / inner) % mid_in;
            let n = idx % inner;
            for (p, c) in &cols[m] {
                next[(o * mid_out + p) * inner + n] += c * val;
            }
        }
        cur = next;
        cur_dims[a] = mid_out;
    }
    cur
}

enum CNode {
    Leaf(LinearNatTrans),
    Identity,
    Vertical(Vec<TwoCellExpr>),
    WhiskerLeft(FunctorExpr, TwoCellExpr),
    WhiskerRight(TwoCellExpr, FunctorExpr),
    Tensor(Vec<TwoCellExpr>),
}

struct CInner {
    node: CNode,
    from: FunctorExpr,
    to: FunctorExpr,
}

/// A 2-cell built from leaves by vertical composition, whiskering and
/// tensoring. Every constructor type-checks its endpoints.
#[derive(Clone)]
pub struct TwoCellExpr(Arc<CInner>);

impl fmt::Debug for TwoCellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.node {
            CNode::Leaf(_) => write!(f, "Leaf"),
            CNode::Identity => write!(f, "Id({:?})", self.0.from),
            CNode::Vertical(cs) => f.debug_tuple("Vertical").field(cs).finish(),
            CNode::WhiskerLeft(p, c) => f.debug_tuple("WhiskerLeft").field(p).field(c).finish(),
            CNode::WhiskerRight(c, q) => f.debug_tuple("WhiskerRight").field(c).field(q).finish(),
            CNode::Tensor(cs) => f.debug_tuple("Tensor").field(cs).finish(),
        }
    }
}

impl TwoCellExpr {
    fn wrap(node: CNode, from: FunctorExpr, to: FunctorExpr) -> Self {
        TwoCellExpr(Arc::new(CInner { node, from, to }))
    }

    pub fn leaf(n: LinearNatTrans) -> Result<Self> {
        n.check_shapes()?;
        let from = FunctorExpr::dense(n.from.clone())?;
        let to = FunctorExpr::dense(n.to.clone())?;
        Ok(Self::wrap(CNode::Leaf(n), from, to))
    }

    pub fn identity(f: &FunctorExpr) -> Self {
        Self::wrap(CNode::Identity, f.clone(), f.clone())
    }

    /// `cells[0]` first; adjacent endpoints must agree as functors.
    pub fn vertical(cells: Vec<TwoCellExpr>) -> Result<Self> {
        let first = cells
            .first()
            .ok_or_else(|| Error::IllTyped("empty vertical composite".into()))?;
        for (k, w) in cells.windows(2).enumerate() {
            if !w[0].to().same_functor(w[1].from()) {
                return Err(Error::IllTyped(format!(
                    "vertical factor {k} ends at a functor different from where factor {} starts",
                    k + 1
                )));
            }
        }
        if cells.len() == 1 {
            return Ok(first.clone());
        }
        let from = first.from().clone();
        let to = cells.last().expect("nonempty").to().clone();
        Ok(Self::wrap(CNode::Vertical(cells), from, to))
    }

    /// `P ∘ θ`: component at `x` is `θ_{P₀x}`.
    pub fn whisker_left(p: &FunctorExpr, c: &TwoCellExpr) -> Result<Self> {
        let from = FunctorExpr::compose(vec![p.clone(), c.from().clone()])?;
        let to = FunctorExpr::compose(vec![p.clone(), c.to().clone()])?;
        Ok(Self::wrap(CNode::WhiskerLeft(p.clone(), c.clone()), from, to))
    }

    /// `θ ∘ Q`: component at `x` is `Q₁(θ_x)`.
    pub fn whisker_right(c: &TwoCellExpr, q: &FunctorExpr) -> Result<Self> {
        let from = FunctorExpr::compose(vec![c.from().clone(), q.clone()])?;
        let to = FunctorExpr::compose(vec![c.to().clone(), q.clone()])?;
        Ok(Self::wrap(CNode::WhiskerRight(c.clone(), q.clone()), from, to))
    }

    /// Tensor product of 2-cells between the given tensor-product spaces.
    pub fn tensor(cells: Vec<TwoCellExpr>, source: Arc<TwoVectorSpace>, target: Arc<TwoVectorSpace>) -> Result<Self> {
        let from = FunctorExpr::tensor(
            cells.iter().map(|c| c.from().clone()).collect(),
            source.clone(),
            target.clone(),
        )?;
        let to = FunctorExpr::tensor(cells.iter().map(|c| c.to().clone()).collect(), source, target)?;
        Ok(Self::wrap(CNode::Tensor(cells), from, to))
    }

    /// Horizontal composite of `a: F ⇒ G` and `b: F′ ⇒ G′`: component
    /// `b_{F₀x}` followed by `G′₁(a_x)`.
    pub fn horizontal(a: &TwoCellExpr, b: &TwoCellExpr) -> Result<Self> {
        Self::vertical(vec![Self::whisker_left(a.from(), b)?, Self::whisker_right(a, b.to())?])
    }

    pub fn from(&self) -> &FunctorExpr {
        &self.0.from
    }

    pub fn to(&self) -> &FunctorExpr {
        &self.0.to
    }

    pub fn source_space(&self) -> &Arc<TwoVectorSpace> {
        self.0.from.source()
    }

    pub fn target_space(&self) -> &Arc<TwoVectorSpace> {
        self.0.from.target()
    }

    /// The component at an arbitrary object vector, extended linearly.
    pub fn component(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        match &self.0.node {
            CNode::Leaf(n) => Ok(n.component(x)),
            CNode::Identity => Ok(self.target_space().identity_vec(&self.0.from.apply0(x))),
            CNode::Vertical(cells) => {
                let w = self.target_space();
                let comps: Result<Vec<_>> = cells.iter().map(|c| c.component(x)).collect();
                w.compose_chain(&comps?)
            }
            CNode::WhiskerLeft(p, c) => c.component(&p.apply0(x)),
            CNode::WhiskerRight(c, q) => Ok(q.apply1(&c.component(x)?)),
            CNode::Tensor(cells) => {
                let dims: Vec<usize> = cells.iter().map(|c| c.source_space().dim0()).collect();
                let mut memo: Vec<Vec<Option<Vec<Rational>>>> = dims.iter().map(|&n| vec![None; n]).collect();
                let mut out = vector::zeros(self.target_space().dim1());
                for (idx, coeff) in vector::nonzeros(x) {
                    let mut rest = idx;
                    let mut multi = vec![0; dims.len()];
                    for a in (0..dims.len()).rev() {
                        multi[a] = rest % dims[a];
                        rest /= dims[a];
                    }
                    let mut acc = vec![coeff.clone()];
                    for (a, &j) in multi.iter().enumerate() {
                        if memo[a][j].is_none() {
                            memo[a][j] = Some(cells[a].component(&vector::unit(dims[a], j))?);
                        }
                        acc = vector::kron(&acc, memo[a][j].as_ref().expect("filled"));
                    }
                    for (o, v) in out.iter_mut().zip(acc) {
                        if !v.is_zero() {
                            *o += v;
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

/// The component of `e` at the basis object `index` of its source space.
pub fn eval_two_cell(e: &TwoCellExpr, index: usize) -> Result<Morphism<'_>> {
    let n = e.source_space().dim0();
    if index >= n {
        return Err(Error::OutOfRange(format!("basis object {index} of {n}")));
    }
    let vec = e.component(&vector::unit(n, index))?;
    Ok(Morphism {
        space: e.target_space(),
        vec,
    })
}

/// Compares two parallel 2-cells on every basis object of their source.
///
/// Violations are reported at the multi-index of the basis object under
/// `tuple_shape` (pass `&[n]` for plain indices).
pub fn compare_two_cells(
    name: &str,
    a: &TwoCellExpr,
    b: &TwoCellExpr,
    tuple_shape: &[usize],
) -> Result<VerificationReport> {
    if !a.from().same_functor(b.from()) || !a.to().same_functor(b.to()) {
        return Err(Error::IllTyped("compared 2-cells are not parallel".into()));
    }
    let n = a.source_space().dim0();
    if tuple_shape.iter().product::<usize>() != n {
        return Err(Error::Invalid("tuple shape does not cover the basis".into()));
    }
    let residuals: Result<Vec<Vec<Rational>>> = (0..n)
        .into_par_iter()
        .map(|k| {
            let x = vector::unit(n, k);
            Ok(vector::sub(&a.component(&x)?, &b.component(&x)?))
        })
        .collect();
    let mut sw = Sweep::new(name);
    for (k, r) in residuals?.into_iter().enumerate() {
        let mut rest = k;
        let mut multi = vec![0; tuple_shape.len()];
        for i in (0..tuple_shape.len()).rev() {
            multi[i] = rest % tuple_shape[i];
            rest /= tuple_shape[i];
        }
        sw.record(&multi, r);
    }
    Ok([sw.finish()].into_iter().collect())
}
