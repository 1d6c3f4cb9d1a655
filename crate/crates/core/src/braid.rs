//! The Yang–Baxter operator of a bracket, and its categorified version:
//! the braiding `B` on `K ⊕ L` for a Lie 2-algebra `L`, the 2-cell `Y`
//! built from the Jacobiator, and the Zamolodchikov tetrahedron equation.
//!
//! Basis order: index 0 is the ground slot, then the basis of `L`; tensor
//! products use lexicographic indexing.

use std::sync::Arc;

use crate::cohomology::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{kron, vector, RMatrix, Rational};
use crate::lie2::{check_lie2_algebra, SemistrictLie2Algebra};
use crate::report::{Sweep, VerificationReport};
use crate::twovect::{
    check_functor, check_nat_trans, compare_two_cells, direct_sum, ground_field, tensor_power, FunctorExpr,
    LinearFunctor, LinearNatTrans, TwoCellExpr, TwoVectorSpace,
};

/// `B((a,x) ⊗ (b,y)) = (b,y) ⊗ (a,x) + (1,0) ⊗ (0,[x,y])` on
/// `(k ⊕ g)^{⊗2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YBOperator {
    pub base: LieAlgebra,
    pub b: RMatrix,
}

/// The matrix of `u ⊗ v ↦ v ⊗ u + (1,0) ⊗ (0, br(u, v))` where `br` takes
/// basis indices of an `m`-dimensional space with ground slot 0.
fn braid_matrix(m: usize, br: impl Fn(usize, usize) -> Vec<Rational>) -> RMatrix {
    let mut b = RMatrix::zeros(m * m, m * m);
    for p in 0..m {
        for q in 0..m {
            let col = p * m + q;
            b[(q * m + p, col)] += &Rational::from_integer(1.into());
            for (r, c) in vector::nonzeros(&br(p, q)) {
                b[(r, col)] += c;
            }
        }
    }
    b
}

/// Fails only if the bracket is not antisymmetric; Jacobi is not required.
pub fn build_b_vect(g: &LieAlgebra) -> Result<YBOperator> {
    let anti = g.antisymmetry_sweep();
    if !anti.passed {
        return Err(Error::Invalid("bracket is not antisymmetric".into()));
    }
    let n = g.dim();
    let m = n + 1;
    let b = braid_matrix(m, |p, q| {
        if p == 0 || q == 0 {
            return vec![];
        }
        // (1,0) ⊗ (0, [x,y]) sits at indices 0·m + 1 + k
        let xy = g.br(&g.basis(p - 1), &g.basis(q - 1));
        let mut out = vector::zeros(m);
        out[1..].clone_from_slice(&xy);
        out
    });
    Ok(YBOperator { base: g.clone(), b })
}

/// `(B⊗1)(1⊗B)(B⊗1) = (1⊗B)(B⊗1)(1⊗B)` column by column; tuples index the
/// basis of `(k ⊕ g)^{⊗3}`.
pub fn check_ybe(op: &YBOperator) -> VerificationReport {
    let m = op.base.dim() + 1;
    let id = RMatrix::identity(m);
    let b1 = kron(&op.b, &id);
    let b2 = kron(&id, &op.b);
    let lhs = &(&b1 * &b2) * &b1;
    let rhs = &(&b2 * &b1) * &b2;
    let diff = &lhs - &rhs;
    let mut s = Sweep::new("ybe");
    for c in 0..diff.cols() {
        s.record(&[c / (m * m), (c / m) % m, c % m], diff.column(c));
    }
    [s.finish()].into_iter().collect()
}

/// `L′ = K ⊕ L` with the braiding functor `B` on `L′ ⊗ L′` and the 2-cell
/// `Y: (B⊗1)(1⊗B)(B⊗1) ⇒ (1⊗B)(B⊗1)(1⊗B)` built from `J`.
#[derive(Clone, Debug)]
pub struct TetraY {
    pub l: Arc<SemistrictLie2Algebra>,
    pub lp: Arc<TwoVectorSpace>,
    /// `L′^{⊗2}`, `L′^{⊗3}`, `L′^{⊗4}`.
    pub powers: [Arc<TwoVectorSpace>; 3],
    pub bf: LinearFunctor,
    /// `J` as a 2-cell between functors `L^{⊗3} → L`.
    pub jacobiator: LinearNatTrans,
    pub y: LinearNatTrans,
}

/// Builds `B` from the bracket on objects and morphisms, and
/// `Y = (p⊗p⊗p) ∘ J ∘ j` padded by the identity on the summands of
/// `(B⊗1)(1⊗B)(B⊗1)` that `J` does not touch.
pub fn build_y(l: &Arc<SemistrictLie2Algebra>) -> Result<TetraY> {
    let lsp = l.space().clone();
    let k = Arc::new(ground_field());
    let sum = direct_sum(&k, &lsp);
    let lp = sum.space.clone();
    let (m0, m1) = (lp.dim0(), lp.dim1());
    let powers = [
        Arc::new(tensor_power(&lp, 2)),
        Arc::new(tensor_power(&lp, 3)),
        Arc::new(tensor_power(&lp, 4)),
    ];

    // L-parts of L′ basis vectors; index 0 is the ground slot
    let obj = |p: usize| l.data().e0(p - 1);
    let mor = |p: usize| vector::unit(lsp.dim1(), p - 1);
    let embed = |v: Vec<Rational>| vector::concat(&[Rational::from_integer(0.into())], &v);
    let b0 = braid_matrix(m0, |p, q| {
        if p == 0 || q == 0 {
            return vec![];
        }
        embed(l.bracket_objects(&obj(p), &obj(q)))
    });
    let b1 = braid_matrix(m1, |p, q| {
        if p == 0 || q == 0 {
            return vec![];
        }
        embed(l.bracket_vecs(&mor(p), &mor(q)))
    });
    let bf = LinearFunctor::new(powers[0].clone(), powers[0].clone(), b0, b1)?;

    let b = FunctorExpr::dense(bf.clone())?;
    let idf = FunctorExpr::identity(&lp);
    let on3 = |parts: Vec<FunctorExpr>| FunctorExpr::tensor(parts, powers[1].clone(), powers[1].clone());
    let b_1 = on3(vec![b.clone(), idf.clone()])?;
    let b_2 = on3(vec![idf.clone(), b.clone()])?;
    let s = FunctorExpr::compose(vec![b_1.clone(), b_2.clone(), b_1.clone()])?
        .materialize()
        .clone();
    let t = FunctorExpr::compose(vec![b_2.clone(), b_1, b_2])?.materialize().clone();

    // J as a 2-cell between functors L^{⊗3} → L
    let l3 = Arc::new(tensor_power(&lsp, 3));
    let (n0, nm) = (lsp.dim0(), lsp.dim1());
    let cols0 = |f: &dyn Fn(&[Rational], &[Rational], &[Rational]) -> Vec<Rational>| -> Vec<Vec<Rational>> {
        crate::exactlin::tuples(&[n0, n0, n0])
            .map(|t| f(&l.data().e0(t[0]), &l.data().e0(t[1]), &l.data().e0(t[2])))
            .collect()
    };
    let cols1 = |f: &dyn Fn(&[Rational], &[Rational], &[Rational]) -> Vec<Rational>| -> Vec<Vec<Rational>> {
        crate::exactlin::tuples(&[nm, nm, nm])
            .map(|t| {
                f(
                    &vector::unit(nm, t[0]),
                    &vector::unit(nm, t[1]),
                    &vector::unit(nm, t[2]),
                )
            })
            .collect()
    };
    let bo = |x: &[Rational], y: &[Rational]| l.bracket_objects(x, y);
    let bm = |x: &[Rational], y: &[Rational]| l.bracket_vecs(x, y);
    let j_from = LinearFunctor::new(
        l3.clone(),
        lsp.clone(),
        RMatrix::from_columns(n0, &cols0(&|x, y, z| bo(&bo(x, y), z)))?,
        RMatrix::from_columns(nm, &cols1(&|x, y, z| bm(&bm(x, y), z)))?,
    )?;
    let j_to = LinearFunctor::new(
        l3.clone(),
        lsp.clone(),
        RMatrix::from_columns(n0, &cols0(&|x, y, z| vector::add(&bo(x, &bo(y, z)), &bo(&bo(x, z), y))))?,
        RMatrix::from_columns(nm, &cols1(&|x, y, z| vector::add(&bm(x, &bm(y, z)), &bm(&bm(x, z), y))))?,
    )?;
    let jac = RMatrix::from_columns(nm, &cols0(&|x, y, z| l.jacobiator_vec(x, y, z)))?;

    // p⊗p⊗p and j
    let pr = &sum.pr;
    let p3_0 = kron(&kron(&pr.f0, &pr.f0), &pr.f0);
    let ground = |n: usize| RMatrix::from_columns(n, &[vector::unit(n, 0)]).expect("column");
    let j0 = kron(&kron(&ground(m0), &ground(m0)), &sum.inr.f0);
    let j1 = kron(&kron(&ground(m1), &ground(m1)), &sum.inr.f1);

    // Y_u = j(J_{p u}) + 1_{S u − j[[·,·],·](p u)}
    let pj = &j1 * &(&jac * &p3_0);
    let untouched = &s.f0 - &(&j0 * &(&j_from.f0 * &p3_0));
    let theta = &pj + &(powers[1].i() * &untouched);
    let y = LinearNatTrans { from: s, to: t, theta };
    Ok(TetraY {
        l: l.clone(),
        lp,
        powers,
        bf,
        jacobiator: LinearNatTrans {
            from: j_from,
            to: j_to,
            theta: jac,
        },
        y,
    })
}

/// The hypotheses under which `Y` is a 2-cell: antisymmetric functorial
/// bracket, antisymmetric natural Jacobiator, and `B` a functor.
pub fn check_tetra_hypotheses(ty: &TetraY) -> Result<VerificationReport> {
    let mut out = check_lie2_algebra(&ty.l);
    out.absorb("J", check_nat_trans(&ty.jacobiator)?);
    out.absorb("B", check_functor(&ty.bf)?);
    Ok(out)
}

/// Both sides of the tetrahedron equation as 2-cell expressions over
/// `L′^{⊗4}`, composed left to right.
pub fn tetrahedron_sides(ty: &TetraY) -> Result<(TwoCellExpr, TwoCellExpr)> {
    let p4 = &ty.powers[2];
    let lp = &ty.lp;
    let b = FunctorExpr::dense(ty.bf.clone())?;
    let id = FunctorExpr::identity(lp);
    let on4 = |parts: Vec<FunctorExpr>| FunctorExpr::tensor(parts, p4.clone(), p4.clone());
    let b1 = on4(vec![b.clone(), id.clone(), id.clone()])?;
    let b2 = on4(vec![id.clone(), b.clone(), id.clone()])?;
    let b3 = on4(vec![id.clone(), id.clone(), b])?;
    let y = TwoCellExpr::leaf(ty.y.clone())?;
    let one = TwoCellExpr::identity(&id);
    let y_1 = TwoCellExpr::tensor(vec![y.clone(), one.clone()], p4.clone(), p4.clone())?;
    let y_2 = TwoCellExpr::tensor(vec![one, y], p4.clone(), p4.clone())?;
    let comp = |fs: &[&FunctorExpr]| FunctorExpr::compose(fs.iter().map(|f| (*f).clone()).collect());
    // P ∘ c ∘ Q
    let whisk = |p: Option<FunctorExpr>, c: &TwoCellExpr, q: Option<FunctorExpr>| -> Result<TwoCellExpr> {
        let mut c = c.clone();
        if let Some(q) = q {
            c = TwoCellExpr::whisker_right(&c, &q)?;
        }
        if let Some(p) = p {
            c = TwoCellExpr::whisker_left(&p, &c)?;
        }
        Ok(c)
    };

    let lhs = TwoCellExpr::vertical(vec![
        whisk(None, &y_1, Some(comp(&[&b3, &b2, &b1])?))?,
        whisk(Some(comp(&[&b2, &b1])?), &y_2, Some(b1.clone()))?,
        whisk(Some(comp(&[&b2, &b3])?), &y_1, Some(b3.clone()))?,
        whisk(None, &y_2, Some(comp(&[&b1, &b2, &b3])?))?,
    ])?;
    let rhs = TwoCellExpr::vertical(vec![
        whisk(Some(comp(&[&b1, &b2, &b3])?), &y_1, None)?,
        whisk(Some(b1.clone()), &y_2, Some(comp(&[&b1, &b2])?))?,
        whisk(Some(b3.clone()), &y_1, Some(comp(&[&b3, &b2])?))?,
        whisk(Some(comp(&[&b3, &b2, &b1])?), &y_2, None)?,
    ])?;
    Ok((lhs, rhs))
}

/// Compares both sides of the tetrahedron equation on every basis object
/// of `L′^{⊗4}`; tuples are the four `L′` basis indices.
pub fn check_zamolodchikov(ty: &TetraY) -> Result<VerificationReport> {
    let (lhs, rhs) = tetrahedron_sides(ty)?;
    let m = ty.lp.dim0();
    compare_two_cells("zamolodchikov", &lhs, &rhs, &[m, m, m, m])
}
