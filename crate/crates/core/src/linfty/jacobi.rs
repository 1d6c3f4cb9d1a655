//! The generalized Jacobi identity evaluated directly on the graded space
//! `V₀ ⊕ V₁`, independent of the conditions (a) to (i).
//!
//! Graded basis index `g` is `e_g` for `g < dim0` and `f_{g−dim0}` otherwise.

use super::signs::{permutations, unshuffles, SignedPermutation};
use super::TwoTermLInfinity;
use crate::exactlin::{tuples, vector, Rational};
use crate::report::{CheckResult, Sweep, VerificationReport};

#[derive(Clone, Debug)]
struct Graded {
    deg: u8,
    vec: Vec<Rational>,
}

fn basis(v: &TwoTermLInfinity, g: usize) -> Graded {
    if g < v.dim0() {
        Graded { deg: 0, vec: v.e0(g) }
    } else {
        Graded {
            deg: 1,
            vec: v.e1(g - v.dim0()),
        }
    }
}

/// `l_k` on graded arguments; `None` when the result is zero for degree
/// reasons.
fn bracket(v: &TwoTermLInfinity, args: &[&Graded]) -> Option<Graded> {
    match args {
        [a] => (a.deg == 1).then(|| Graded {
            deg: 0,
            vec: v.d(&a.vec),
        }),
        [a, b] => match (a.deg, b.deg) {
            (0, 0) => Some(Graded {
                deg: 0,
                vec: v.br00(&a.vec, &b.vec),
            }),
            (0, 1) => Some(Graded {
                deg: 1,
                vec: v.br01(&a.vec, &b.vec),
            }),
            (1, 0) => Some(Graded {
                deg: 1,
                vec: v.br10(&a.vec, &b.vec),
            }),
            _ => None,
        },
        [a, b, c] => (a.deg == 0 && b.deg == 0 && c.deg == 0).then(|| Graded {
            deg: 1,
            vec: v.l3_eval(&a.vec, &b.vec, &c.vec),
        }),
        _ => None,
    }
}

fn dim_of(v: &TwoTermLInfinity, deg: u8) -> usize {
    if deg == 0 {
        v.dim0()
    } else {
        v.dim1()
    }
}

/// `Σ_{i+j=n+1} Σ_σ χ(σ)(−1)^{i(j−1)} l_j(l_i(x_σ(1..i)), x_σ(i+1..n))`
/// at one graded tuple, or `None` when the output degree is outside {0, 1}.
fn jacobi_sum(v: &TwoTermLInfinity, xs: &[Graded]) -> Option<Vec<Rational>> {
    let n = xs.len();
    let total: i64 = xs.iter().map(|x| x.deg as i64).sum::<i64>() + n as i64 - 3;
    if !(0..=1).contains(&total) {
        return None;
    }
    let out_deg = total as u8;
    let degrees: Vec<u8> = xs.iter().map(|x| x.deg).collect();
    let mut acc = vector::zeros(dim_of(v, out_deg));
    for i in 1..=n {
        let j = n + 1 - i;
        let outer_sign = if (i * (j - 1)) % 2 == 0 { 1 } else { -1 };
        for perm in unshuffles(i, n).expect("1 <= i <= n") {
            let inner: Vec<&Graded> = perm[..i].iter().map(|&k| &xs[k]).collect();
            let Some(y) = bracket(v, &inner) else { continue };
            let mut outer: Vec<&Graded> = vec![&y];
            outer.extend(perm[i..].iter().map(|&k| &xs[k]));
            let Some(z) = bracket(v, &outer) else { continue };
            debug_assert_eq!(z.deg, out_deg);
            let chi = SignedPermutation::new(perm, degrees.clone()).unwrap().chi();
            let c = Rational::from_integer((chi * outer_sign).into());
            vector::axpy(&mut acc, &c, &z.vec);
        }
    }
    Some(acc)
}

/// The generalized Jacobi sum of arity `n` on every graded basis tuple.
pub fn generalized_jacobi(v: &TwoTermLInfinity, n: usize) -> CheckResult {
    let total = v.dim0() + v.dim1();
    let mut sweep = Sweep::new(&format!("jacobi_arity_{n}"));
    for t in tuples(&vec![total; n]) {
        let xs: Vec<Graded> = t.iter().map(|&g| basis(v, g)).collect();
        if let Some(r) = jacobi_sum(v, &xs) {
            sweep.record(&t, r);
        }
    }
    sweep.finish()
}

/// Graded antisymmetry `l_k(x_σ(1), …, x_σ(k)) = χ(σ) l_k(x_1, …, x_k)` of
/// the stored brackets, for `k = 2, 3` and every permutation.
pub fn check_antisymmetry_graded(v: &TwoTermLInfinity) -> CheckResult {
    let total = v.dim0() + v.dim1();
    let mut sweep = Sweep::new("graded_antisymmetry");
    for k in 2..=3 {
        for t in tuples(&vec![total; k]) {
            let xs: Vec<Graded> = t.iter().map(|&g| basis(v, g)).collect();
            let refs: Vec<&Graded> = xs.iter().collect();
            let Some(base) = bracket(v, &refs) else { continue };
            let degrees: Vec<u8> = xs.iter().map(|x| x.deg).collect();
            for perm in permutations(k).into_iter().skip(1) {
                let permuted: Vec<&Graded> = perm.iter().map(|&p| &xs[p]).collect();
                let chi = SignedPermutation::new(perm, degrees.clone()).unwrap().chi();
                let lhs = bracket(v, &permuted)
                    .map(|g| g.vec)
                    .unwrap_or_else(|| vector::zeros(base.vec.len()));
                let rhs = vector::scale(&Rational::from_integer(chi.into()), &base.vec);
                sweep.record(&t, vector::sub(&lhs, &rhs));
            }
        }
    }
    sweep.finish()
}

/// Antisymmetry plus the generalized Jacobi identity in arities 1 to 4.
/// Passes exactly when [`super::check_axioms`] does.
pub fn jacobi_oracle(v: &TwoTermLInfinity) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.push(check_antisymmetry_graded(v));
    for n in 1..=4 {
        r.push(generalized_jacobi(v, n));
    }
    r
}
