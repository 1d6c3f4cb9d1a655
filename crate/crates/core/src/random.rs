//! Seeded generators of random instances, used by the property tests and
//! the acceptance suite.
//!
//! Every generator takes an explicit RNG so runs are reproducible.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{abelian, sl2, so3, LieAlgebra};
use crate::exactlin::{frac, int, rank_kernel, vector, RMatrix, Rational, Tensor};
use crate::lie2::{from_crossed_module, to_crossed_module, DifferentialCrossedModule, SemistrictLie2Algebra};
use crate::linfty::{compose_homs, inflate, transport, LInfHom, LInfTwoHom, TwoTermLInfinity};
use crate::twoterm::{ChainHomotopy, ChainMap, TwoTermComplex};
use crate::twovect::{
    alpha, alpha_inverse, compose_functors, functor_s, functor_t, s_on_functor, t_on_chain_map, t_on_homotopy,
    whisker_left, whisker_right, LinearFunctor, LinearNatTrans, TwoVectorSpace,
};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small integer, occasionally a fraction with denominator 2 or 3.
pub fn scalar(rng: &mut impl Rng) -> Rational {
    let n = rng.random_range(-3..=3);
    if rng.random_bool(0.15) {
        frac(n, rng.random_range(2..=3))
    } else {
        int(n)
    }
}

/// A scalar that is zero with probability `1 − density`.
pub fn sparse_scalar(rng: &mut impl Rng, density: f64) -> Rational {
    if rng.random_bool(density) {
        scalar(rng)
    } else {
        int(0)
    }
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| scalar(rng)).collect()
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RMatrix {
    let data = (0..rows * cols).map(|_| sparse_scalar(rng, 0.6)).collect();
    RMatrix::new(rows, cols, data).expect("sized")
}

/// A matrix of rank at most `rank`.
pub fn low_rank_matrix(rng: &mut impl Rng, rows: usize, cols: usize, rank: usize) -> RMatrix {
    &matrix(rng, rows, rank) * &matrix(rng, rank, cols)
}

pub fn invertible_matrix(rng: &mut impl Rng, n: usize) -> RMatrix {
    loop {
        // unipotent factors keep entries small
        let mut l = RMatrix::identity(n);
        let mut u = RMatrix::identity(n);
        for r in 0..n {
            for c in 0..r {
                l[(r, c)] = int(rng.random_range(-2..=2));
                u[(c, r)] = int(rng.random_range(-2..=2));
            }
        }
        let mut dmat = RMatrix::identity(n);
        for k in 0..n {
            dmat[(k, k)] = [int(1), int(-1), int(2), frac(1, 2)][rng.random_range(0..4)].clone();
        }
        let m = &(&l * &dmat) * &u;
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random combination of the given basis vectors.
pub fn combination(rng: &mut impl Rng, basis: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vector::zeros(len);
    for b in basis {
        vector::axpy(&mut out, &scalar(rng), b);
    }
    out
}

/// A complex whose differential has random rank.
pub fn complex(rng: &mut impl Rng, dim0: usize, dim1: usize) -> TwoTermComplex {
    let r = rng.random_range(0..=dim0.min(dim1));
    TwoTermComplex::from_differential(low_rank_matrix(rng, dim0, dim1, r))
}

/// A random chain map, sampled from the solution space of `d′φ₁ = φ₀d`.
pub fn chain_map(rng: &mut impl Rng, c: &TwoTermComplex, c2: &TwoTermComplex) -> ChainMap {
    let (n0, n1, m0, m1) = (c.dim0(), c.dim1(), c2.dim0(), c2.dim1());
    // unknowns: φ₀ (m0×n0) then φ₁ (m1×n1), row-major
    let unknowns = m0 * n0 + m1 * n1;
    let mut eqs = RMatrix::zeros(m0 * n1, unknowns);
    for r in 0..m0 {
        for col in 0..n1 {
            let row = r * n1 + col;
            for k in 0..m1 {
                eqs[(row, m0 * n0 + k * n1 + col)] += &c2.d()[(r, k)];
            }
            for k in 0..n0 {
                eqs[(row, r * n0 + k)] -= &c.d()[(k, col)];
            }
        }
    }
    let (_, ker) = rank_kernel(&eqs);
    let x = combination(rng, &ker, unknowns);
    let phi0 = RMatrix::new(m0, n0, x[..m0 * n0].to_vec()).expect("sized");
    let phi1 = RMatrix::new(m1, n1, x[m0 * n0..].to_vec()).expect("sized");
    ChainMap {
        source: c.clone(),
        target: c2.clone(),
        phi0,
        phi1,
    }
}

/// A random homotopy out of `f`; its target is `f + (d′τ, τd)`.
pub fn homotopy_from(rng: &mut impl Rng, f: &ChainMap) -> ChainHomotopy {
    let tau = matrix(rng, f.target.dim1(), f.source.dim0());
    let to = ChainMap {
        source: f.source.clone(),
        target: f.target.clone(),
        phi0: &f.phi0 + &(f.target.d() * &tau),
        phi1: &f.phi1 + &(&tau * f.source.d()),
    };
    ChainHomotopy {
        from: f.clone(),
        to,
        tau,
    }
}

/// `T(C)` for a random complex, with a random change of basis on
/// morphisms so that `s`, `t`, `i` are not in normal form.
pub fn two_vector_space(rng: &mut impl Rng, dim0: usize, dim1: usize) -> TwoVectorSpace {
    let v = functor_t(&complex(rng, dim0, dim1));
    let p = invertible_matrix(rng, v.dim1());
    let pinv = p.inverse().expect("invertible");
    TwoVectorSpace::new(v.s() * &p, v.t() * &p, &pinv * v.i()).expect("shapes")
}

/// A random linear functor `V → W`, obtained by transporting a random chain
/// map along the equivalence with 2-term complexes.
pub fn functor(rng: &mut impl Rng, v: &Arc<TwoVectorSpace>, w: &Arc<TwoVectorSpace>) -> LinearFunctor {
    let f = chain_map(rng, &functor_s(v), &functor_s(w));
    let tf = t_on_chain_map(&f).expect("valid chain map");
    let a = alpha_inverse(v).expect("kernel coordinates exist");
    let tf = LinearFunctor {
        source: a.target.clone(),
        target: Arc::new((*tf.target).clone()),
        ..tf
    };
    let b = alpha(w);
    let tf = LinearFunctor {
        target: b.source.clone(),
        ..tf
    };
    compose_functors(&compose_functors(&a, &tf).expect("endpoints"), &b).expect("endpoints")
}

/// A random natural transformation out of `f`, transported from a random
/// homotopy.
pub fn nat_trans_from(rng: &mut impl Rng, f: &LinearFunctor) -> LinearNatTrans {
    let phi = s_on_functor(f).expect("valid functor");
    let h = homotopy_from(rng, &phi);
    let th = t_on_homotopy(&h).expect("valid homotopy");
    let a = alpha_inverse(&f.source).expect("kernel coordinates exist");
    let b = alpha(&f.target);
    let retarget = |g: &LinearFunctor| LinearFunctor {
        source: a.target.clone(),
        target: b.source.clone(),
        f0: g.f0.clone(),
        f1: g.f1.clone(),
    };
    let th = LinearNatTrans {
        from: retarget(&th.from),
        to: retarget(&th.to),
        theta: th.theta,
    };
    let n = whisker_right(&whisker_left(&a, &th).expect("endpoints"), &b).expect("endpoints");
    // The transported source functor agrees with f as a linear map; reuse f
    // itself so that the result is a 2-cell out of f.
    LinearNatTrans {
        from: f.clone(),
        to: LinearFunctor {
            source: f.source.clone(),
            target: f.target.clone(),
            f0: n.to.f0,
            f1: n.to.f1,
        },
        theta: n.theta,
    }
}

/// A tensor of shape `[n, n, m]` with `t[i][j] = −t[j][i]`.
pub fn antisymmetric_tensor(rng: &mut impl Rng, n: usize, m: usize) -> Tensor {
    let mut t = Tensor::zeros(&[n, n, m]);
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<Rational> = (0..m).map(|_| sparse_scalar(rng, 0.5)).collect();
            t.set_fiber(&[i, j], &v);
            t.set_fiber(&[j, i], &vector::neg(&v));
        }
    }
    t
}

/// A structure equivalent to `v`: an inflation by `k` acyclic dimensions
/// followed by a random invertible change of coordinates with a random
/// `φ₂`. Returns the new structure and the equivalence out of `v`.
pub fn equivalent_linfty(rng: &mut impl Rng, v: &Arc<TwoTermLInfinity>, k: usize) -> (Arc<TwoTermLInfinity>, LInfHom) {
    let (w, inc) = inflate(v, k);
    let (n0, n1) = (w.dim0(), w.dim1());
    let phi2 = antisymmetric_tensor(rng, n0, n1);
    let (w2, f) = transport(&w, &invertible_matrix(rng, n0), &invertible_matrix(rng, n1), &phi2)
        .expect("invertible basis change");
    (w2, compose_homs(&inc, &f).expect("composable"))
}

/// A strict structure: the inputs' `l₃` must vanish; `φ₂ = 0` keeps it so.
pub fn strict_variant(rng: &mut impl Rng, v: &Arc<TwoTermLInfinity>, k: usize) -> Arc<TwoTermLInfinity> {
    let (w, _) = inflate(v, k);
    let (n0, n1) = (w.dim0(), w.dim1());
    let zero = Tensor::zeros(&[n0, n0, n1]);
    transport(&w, &invertible_matrix(rng, n0), &invertible_matrix(rng, n1), &zero)
        .expect("invertible basis change")
        .0
}

/// A valid differential crossed module built from one of a few strict
/// seeds by inflation and a change of basis.
pub fn crossed_module(rng: &mut impl Rng) -> DifferentialCrossedModule {
    let seeds = [
        DifferentialCrossedModule::adjoint(&so3()),
        DifferentialCrossedModule::adjoint(&sl2()),
        DifferentialCrossedModule {
            g: so3(),
            h: abelian(3),
            t: RMatrix::zeros(3, 3),
            alpha: so3().bracket().clone(),
        },
        DifferentialCrossedModule {
            g: sl2(),
            h: abelian(2),
            t: RMatrix::zeros(3, 2),
            alpha: Tensor::zeros(&[3, 2, 2]),
        },
    ];
    let seed = &seeds[rng.random_range(0..seeds.len())];
    let l = from_crossed_module(seed).expect("valid seed");
    let k = rng.random_range(0..=1);
    let w = strict_variant(rng, &Arc::new(l.to_linfty()), k);
    to_crossed_module(&SemistrictLie2Algebra::from_linfty((*w).clone())).expect("strict")
}

/// A rotation with rational entries, `(I − A)(I + A)⁻¹` for a random
/// antisymmetric `A`.
pub fn rotation3(rng: &mut impl Rng) -> RMatrix {
    let (a, b, c) = (scalar(rng), scalar(rng), scalar(rng));
    let zero = int(0);
    let m = RMatrix::from_rows(
        3,
        vec![
            vec![zero.clone(), a.clone(), b.clone()],
            vec![-a, zero.clone(), c.clone()],
            vec![-b, -c, zero],
        ],
    )
    .expect("sized");
    let i = RMatrix::identity(3);
    let inv = (&i + &m).inverse().expect("I + A is invertible for antisymmetric A");
    &(&i - &m) * &inv
}

/// An endomorphism of `g_ħ(so₃, ħ)`: a rotation on `V₀`, the identity on
/// `V₁`, and `φ₂(x, y) = λ([x, y])` for a random functional `λ`.
pub fn ghbar_endomorphism(rng: &mut impl Rng, v: &Arc<TwoTermLInfinity>) -> LInfHom {
    let r = rotation3(rng);
    let lambda = vector(rng, 3);
    let mut phi2 = Tensor::zeros(&[3, 3, 1]);
    for i in 0..3 {
        for j in 0..3 {
            let b = v.br00(&v.e0(i), &v.e0(j));
            let val: Rational = b.iter().zip(&lambda).map(|(p, q)| p * q).sum();
            phi2.set_fiber(&[i, j], &[val]);
        }
    }
    LInfHom::new(v.clone(), v.clone(), r, RMatrix::identity(1), phi2).expect("shapes")
}

/// A random 2-homomorphism out of `f`, with target determined by `τ`.
pub fn two_hom_from(rng: &mut impl Rng, f: &LInfHom) -> LInfTwoHom {
    let (src, tgt) = (&f.source, &f.target);
    let (n0, m1) = (src.dim0(), tgt.dim1());
    let tau = matrix(rng, m1, n0);
    let psi0 = f.phi0() + &(tgt.d_matrix() * &tau);
    let psi1 = f.phi1() + &(&tau * src.d_matrix());
    let mut psi2 = Tensor::zeros(&[n0, n0, m1]);
    for i in 0..n0 {
        for j in 0..n0 {
            let (x, y) = (src.e0(i), src.e0(j));
            let (tx, ty) = (tau.mul_vec(&x), tau.mul_vec(&y));
            let mut r = tgt.br01(&f.phi0().mul_vec(&x), &ty);
            r = vector::add(&r, &tgt.br10(&tx, &psi0.mul_vec(&y)));
            r = vector::sub(&r, &tau.mul_vec(&src.br00(&x, &y)));
            psi2.set_fiber(&[i, j], &vector::sub(f.phi2.fiber(&[i, j]), &r));
        }
    }
    let g = LInfHom::new(src.clone(), tgt.clone(), psi0, psi1, psi2).expect("shapes");
    LInfTwoHom::new(f.clone(), g, tau).expect("shapes")
}

/// Adds a nonzero amount to one random structure constant, keeping the
/// bracket on `V₀` antisymmetric.
pub fn perturb_linfty(rng: &mut impl Rng, v: &TwoTermLInfinity) -> TwoTermLInfinity {
    let mut w = v.clone();
    let (n0, n1) = (v.dim0(), v.dim1());
    let bump = if rng.random_bool(0.5) { int(1) } else { frac(-1, 2) };
    match rng.random_range(0..3) {
        0 if n0 >= 2 => {
            let i = rng.random_range(0..n0);
            let j = (i + rng.random_range(1..n0)) % n0;
            let k = rng.random_range(0..n0);
            w.l2_00_mut().fiber_mut(&[i, j])[k] += &bump;
            w.l2_00_mut().fiber_mut(&[j, i])[k] -= &bump;
        }
        1 if n1 >= 1 => {
            let idx = [rng.random_range(0..n0), rng.random_range(0..n1)];
            w.l2_01_mut().fiber_mut(&idx)[rng.random_range(0..n1)] += &bump;
        }
        _ if n1 >= 1 => {
            let idx = [
                rng.random_range(0..n0),
                rng.random_range(0..n0),
                rng.random_range(0..n0),
            ];
            w.l3_mut().fiber_mut(&idx)[rng.random_range(0..n1)] += &bump;
        }
        _ => {}
    }
    w
}

/// An antisymmetric bracket on `ℚⁿ`, `n ≤ 4`: a random change of basis of
/// a known Lie algebra, perturbed in one structure constant half the time.
pub fn antisymmetric_bracket(rng: &mut impl Rng) -> LieAlgebra {
    let seeds = [
        so3(),
        sl2(),
        abelian(rng.random_range(1..=4)),
        // [e₁,e₂] = e₂
        LieAlgebra::from_antisymmetric_entries(2, &[(0, 1, &[(1, 1)])]),
        // Heisenberg: [e₁,e₂] = e₃
        LieAlgebra::from_antisymmetric_entries(3, &[(0, 1, &[(2, 1)])]),
        // so₃ ⊕ ℚ
        LieAlgebra::from_antisymmetric_entries(4, &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])]),
        // [e₁,e₂] = e₂, [e₁,e₃] = e₃ + e₄, [e₁,e₄] = e₄
        LieAlgebra::from_antisymmetric_entries(4, &[(0, 1, &[(1, 1)]), (0, 2, &[(2, 1), (3, 1)]), (0, 3, &[(3, 1)])]),
    ];
    let g = seeds[rng.random_range(0..seeds.len())].clone();
    let n = g.dim();
    let g = g.transport(&invertible_matrix(rng, n)).expect("invertible");
    if n < 2 || rng.random_bool(0.5) {
        return g;
    }
    let mut t = g.bracket().clone();
    let i = rng.random_range(0..n);
    let j = (i + rng.random_range(1..n)) % n;
    let k = rng.random_range(0..n);
    t.fiber_mut(&[i, j])[k] += int(1);
    t.fiber_mut(&[j, i])[k] -= int(1);
    LieAlgebra::new(t).expect("cubic")
}
