use std::sync::Arc;

use super::cochain::{coboundary_preimage, cohomologous, combinations, is_coboundary, Cochain};
use super::examples::TwoSlot;
use super::{LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{vector, RMatrix, Rational, Tensor};
use crate::lie2::SemistrictLie2Algebra;
use crate::linfty::{check_axioms, LInfHom, TwoTermLInfinity};
use crate::twoterm::{skeletalize_complex, ChainMap};

/// `(g, V, ρ, l₃)` read off a skeletal model, with the homomorphism from
/// the skeletal model back to the input.
#[derive(Clone, Debug)]
pub struct ClassifyingQuadruple {
    pub algebra: LieAlgebra,
    pub rep: Arc<Representation>,
    pub cocycle: Cochain,
    pub skeletal: Arc<TwoTermLInfinity>,
    /// An equivalence from the skeletal model to the input.
    pub include: LInfHom,
    /// The chain-level inverse of `include`, from the input to the
    /// skeletal complex.
    pub project: ChainMap,
}

/// Skeletalizes the underlying complex and transfers `l₂`, `l₃` to it,
/// so that the inclusion extends to a homomorphism with
/// `φ₂(x,y) = −τ[x,y]`.
///
/// ```
/// use lie2::cohomology::{build_g_hbar, classify, so3, triple_product_cochain};
/// use lie2::exactlin::int;
/// let q = classify(&build_g_hbar(&so3(), &int(1))).unwrap();
/// assert_eq!(q.cocycle, triple_product_cochain(&so3(), &int(1)));
/// assert!(q.rep.is_trivial());
/// ```
pub fn classify(l: &SemistrictLie2Algebra) -> Result<ClassifyingQuadruple> {
    let v = l.data();
    let report = check_axioms(v);
    if !report.passed() {
        return Err(Error::Invalid(format!("input fails conditions {:?}", report.failing())));
    }
    let sk = skeletalize_complex(v.complex());
    let (u, p, tau) = (&sk.include, &sk.project, &sk.homotopy.tau);
    let (n0, n1) = (sk.skeletal.dim0(), sk.skeletal.dim1());
    let u0 = |x: &[Rational]| u.phi0.mul_vec(x);
    let u1 = |h: &[Rational]| u.phi1.mul_vec(h);

    let mut l2_00 = Tensor::zeros(&[n0, n0, n0]);
    let mut l2_01 = Tensor::zeros(&[n0, n1, n1]);
    let mut phi2 = Tensor::zeros(&[n0, n0, v.dim1()]);
    let e0 = |i: usize| vector::unit(n0, i);
    for i in 0..n0 {
        for j in 0..n0 {
            let b = v.br00(&u0(&e0(i)), &u0(&e0(j)));
            l2_00.set_fiber(&[i, j], &p.phi0.mul_vec(&b));
            phi2.set_fiber(&[i, j], &vector::neg(&tau.mul_vec(&b)));
        }
        for j in 0..n1 {
            let b = v.br01(&u0(&e0(i)), &u1(&vector::unit(n1, j)));
            l2_01.set_fiber(&[i, j], &p.phi1.mul_vec(&b));
        }
    }
    let mut w = TwoTermLInfinity::new(sk.skeletal.clone(), l2_00, l2_01, Tensor::zeros(&[n0, n0, n0, n1]))?;

    let u2 = |x: &[Rational], y: &[Rational]| phi2.eval2(x, y);
    let mut l3 = Tensor::zeros(&[n0, n0, n0, n1]);
    for i in 0..n0 {
        for j in 0..n0 {
            for k in 0..n0 {
                let (x, y, z) = (e0(i), e0(j), e0(k));
                let (ux, uy, uz) = (u0(&x), u0(&y), u0(&z));
                let plus = [
                    v.l3_eval(&ux, &uy, &uz),
                    v.br01(&ux, &u2(&y, &z)),
                    v.br10(&u2(&x, &z), &uy),
                    u2(&x, &w.br00(&y, &z)),
                    u2(&w.br00(&x, &z), &y),
                ];
                let minus = [v.br10(&u2(&x, &y), &uz), u2(&w.br00(&x, &y), &z)];
                let mut r = vector::zeros(v.dim1());
                for t in &plus {
                    r = vector::add(&r, t);
                }
                for t in &minus {
                    r = vector::sub(&r, t);
                }
                if !vector::is_zero(&v.d(&r)) {
                    return Err(Error::Invalid("transferred l3 does not lie in ker d".into()));
                }
                l3.set_fiber(&[i, j, k], &p.phi1.mul_vec(&r));
            }
        }
    }
    *w.l3_mut() = l3;
    let skeletal = Arc::new(w);
    let include = LInfHom::new(
        skeletal.clone(),
        Arc::new(v.clone()),
        u.phi0.clone(),
        u.phi1.clone(),
        phi2,
    )?;

    let algebra = LieAlgebra::new(skeletal.l2_00().clone())?;
    let rho = (0..n0).map(|i| skeletal.action(&e0(i))).collect();
    let rep = Arc::new(Representation::new(algebra.clone(), n1, rho)?);
    let values = combinations(n0, 3)
        .into_iter()
        .map(|t| skeletal.l3().fiber(&t).to_vec())
        .collect();
    let cocycle = Cochain::from_values(&rep, 3, values)?;
    Ok(ClassifyingQuadruple {
        algebra,
        rep,
        cocycle,
        skeletal,
        include,
        project: sk.project.clone(),
    })
}

/// Whether `f: L₁ → L₂` induces an isomorphism of quadruples under which the
/// two cocycles are cohomologous. The induced maps are
/// `project₂ ∘ f ∘ include₁` in each degree; the second cocycle is pulled
/// back along them.
pub fn classes_match(q1: &ClassifyingQuadruple, q2: &ClassifyingQuadruple, f: &LInfHom) -> Result<bool> {
    if f.source != q1.include.target || f.target != q2.include.target {
        return Err(Error::EndpointMismatch(
            "homomorphism does not connect the classified algebras".into(),
        ));
    }
    let g0 = &(&q2.project.phi0 * f.phi0()) * q1.include.phi0();
    let g1 = &(&q2.project.phi1 * f.phi1()) * q1.include.phi1();
    let Some(g1_inv) = g1.inverse() else {
        return Ok(false);
    };
    if !g0.is_invertible() {
        return Ok(false);
    }
    let (a1, a2) = (&q1.algebra, &q2.algebra);
    for i in 0..a1.dim() {
        let x = a1.basis(i);
        let gx = g0.mul_vec(&x);
        if &g1 * &q1.rep.rho()[i] != &q2.rep.rho_of(&gx) * &g1 {
            return Ok(false);
        }
        for j in 0..a1.dim() {
            let y = a1.basis(j);
            if g0.mul_vec(&a1.br(&x, &y)) != a2.br(&gx, &g0.mul_vec(&y)) {
                return Ok(false);
            }
        }
    }
    let pulled = pull_back(&q2.cocycle, &q1.rep, &g0, &g1_inv)?;
    cohomologous(&q1.cocycle, &pulled)
}

/// `x₁…xₙ ↦ g1_inv ω(g0 x₁, …, g0 xₙ)` as a cochain for `rep`.
fn pull_back(w: &Cochain, rep: &Arc<Representation>, g0: &RMatrix, g1_inv: &RMatrix) -> Result<Cochain> {
    let values = combinations(rep.algebra().dim(), w.degree())
        .into_iter()
        .map(|t| {
            let args: Vec<Vec<Rational>> = t.iter().map(|&i| g0.column(i)).collect();
            g1_inv.mul_vec(&w.eval(&args))
        })
        .collect();
    Cochain::from_values(rep, w.degree(), values)
}

/// For two-slot data with `ω_a − ω_b = δθ`, the homomorphism
/// `(1, 1, θ)` between the corresponding L∞-algebras.
pub fn gauge_equivalence(a: &TwoSlot, b: &TwoSlot) -> Result<Option<LInfHom>> {
    let diff = a.cochain.checked_sub(&b.cochain)?;
    if !is_coboundary(&diff) {
        return Ok(None);
    }
    let theta = if diff.is_zero() {
        Cochain::zero(diff.rep(), 2)
    } else {
        coboundary_preimage(&diff).expect("coboundary has a preimage")
    };
    let va = Arc::new(a.to_linfty()?);
    let vb = Arc::new(b.to_linfty()?);
    let n0 = va.dim0();
    let mut phi2 = Tensor::zeros(&[n0, n0, va.dim1()]);
    for i in 0..n0 {
        for j in 0..n0 {
            phi2.set_fiber(&[i, j], &theta.eval_basis(&[i, j]));
        }
    }
    let (i0, i1) = (RMatrix::identity(n0), RMatrix::identity(va.dim1()));
    Ok(Some(LInfHom::new(va, vb, i0, i1, phi2)?))
}
