//! Moving an L∞ structure along an invertible homomorphism, and adding an
//! acyclic summand.

use std::sync::Arc;

use super::{LInfHom, TwoTermLInfinity};
use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{vector, RMatrix, Tensor};
use crate::twoterm::TwoTermComplex;

/// Given invertible `p0`, `p1` and an antisymmetric `phi2`, the unique
/// structure `W` on `V₁′ --p0 d p1⁻¹--> V₀′` making `(p0, p1, phi2)` a
/// homomorphism `V → W`.
pub fn transport(
    v: &Arc<TwoTermLInfinity>,
    p0: &RMatrix,
    p1: &RMatrix,
    phi2: &Tensor,
) -> Result<(Arc<TwoTermLInfinity>, LInfHom)> {
    let (n0, n1) = (v.dim0(), v.dim1());
    if p0.shape() != (n0, n0) || p1.shape() != (n1, n1) {
        return Err(dim_mismatch(
            "basis change",
            format!("({n0},{n0}) and ({n1},{n1})"),
            format!("{:?} and {:?}", p0.shape(), p1.shape()),
        ));
    }
    let q0 = p0.inverse().ok_or_else(|| Error::Invalid("p0 is singular".into()))?;
    let q1 = p1.inverse().ok_or_else(|| Error::Invalid("p1 is singular".into()))?;
    let dw = &(p0 * v.d_matrix()) * &q1;
    let complex = TwoTermComplex::new(n0, n1, dw.clone())?;
    let f2 = |x: &[_], y: &[_]| phi2.eval2(x, y);

    let mut l2_00 = Tensor::zeros(&[n0, n0, n0]);
    let mut l2_01 = Tensor::zeros(&[n0, n1, n1]);
    for i in 0..n0 {
        let x = q0.column(i);
        for j in 0..n0 {
            let y = q0.column(j);
            let b = vector::sub(&p0.mul_vec(&v.br00(&x, &y)), &dw.mul_vec(&f2(&x, &y)));
            l2_00.set_fiber(&[i, j], &b);
        }
        for j in 0..n1 {
            let h = q1.column(j);
            let b = vector::sub(&p1.mul_vec(&v.br01(&x, &h)), &f2(&x, &v.d(&h)));
            l2_01.set_fiber(&[i, j], &b);
        }
    }
    let mut w = TwoTermLInfinity::new(complex, l2_00, l2_01, Tensor::zeros(&[n0, n0, n0, n1]))?;

    let mut l3 = Tensor::zeros(&[n0, n0, n0, n1]);
    for i in 0..n0 {
        for j in 0..n0 {
            for k in 0..n0 {
                let (x, y, z) = (q0.column(i), q0.column(j), q0.column(k));
                let (fx, fy, fz) = (w.e0(i), w.e0(j), w.e0(k));
                let plus = [
                    w.br10(&f2(&x, &y), &fz),
                    f2(&v.br00(&x, &y), &z),
                    p1.mul_vec(&v.l3_eval(&x, &y, &z)),
                ];
                let minus = [
                    w.br01(&fx, &f2(&y, &z)),
                    w.br10(&f2(&x, &z), &fy),
                    f2(&x, &v.br00(&y, &z)),
                    f2(&v.br00(&x, &z), &y),
                ];
                let mut r = vector::zeros(n1);
                for t in &plus {
                    r = vector::add(&r, t);
                }
                for t in &minus {
                    r = vector::sub(&r, t);
                }
                l3.set_fiber(&[i, j, k], &r);
            }
        }
    }
    *w.l3_mut() = l3;
    let w = Arc::new(w);
    let f = LInfHom::new(v.clone(), w.clone(), p0.clone(), p1.clone(), phi2.clone())?;
    Ok((w, f))
}

/// `V ⊕ (ℚᵏ --id--> ℚᵏ)` with brackets vanishing on the new summand, and
/// the inclusion of `V`, which is an equivalence.
pub fn inflate(v: &Arc<TwoTermLInfinity>, k: usize) -> (Arc<TwoTermLInfinity>, LInfHom) {
    let (n0, n1) = (v.dim0(), v.dim1());
    let (m0, m1) = (n0 + k, n1 + k);
    let d = RMatrix::block_diag(&[v.d_matrix(), &RMatrix::identity(k)]);
    let mut l2_00 = Tensor::zeros(&[m0, m0, m0]);
    let mut l2_01 = Tensor::zeros(&[m0, m1, m1]);
    let mut l3 = Tensor::zeros(&[m0, m0, m0, m1]);
    let pad = |f: &[crate::exactlin::Rational], len: usize| {
        let mut out = f.to_vec();
        out.resize(len, crate::exactlin::int(0));
        out
    };
    for i in 0..n0 {
        for j in 0..n0 {
            l2_00.set_fiber(&[i, j], &pad(v.l2_00().fiber(&[i, j]), m0));
            for m in 0..n0 {
                l3.set_fiber(&[i, j, m], &pad(v.l3().fiber(&[i, j, m]), m1));
            }
        }
        for j in 0..n1 {
            l2_01.set_fiber(&[i, j], &pad(v.l2_01().fiber(&[i, j]), m1));
        }
    }
    let complex = TwoTermComplex::from_differential(d);
    let w = Arc::new(TwoTermLInfinity::new(complex, l2_00, l2_01, l3).expect("shapes"));
    let inc0 = RMatrix::vstack(&[&RMatrix::identity(n0), &RMatrix::zeros(k, n0)]).expect("cols");
    let inc1 = RMatrix::vstack(&[&RMatrix::identity(n1), &RMatrix::zeros(k, n1)]).expect("cols");
    let f = LInfHom::new(v.clone(), w.clone(), inc0, inc1, Tensor::zeros(&[n0, n0, m1])).expect("shapes");
    (w, f)
}
