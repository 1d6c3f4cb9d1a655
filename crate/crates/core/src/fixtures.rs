//! Small named structures used by the tests, the acceptance suite and the
//! shipped JSON corpus.

use crate::cohomology::LieAlgebra;
use crate::exactlin::{int, RMatrix, Tensor};
use crate::linfty::TwoTermLInfinity;
use crate::twoterm::TwoTermComplex;

/// `V₀ = ℚ⁴`, `V₁ = ℚ`, `d = 0`, zero bracket on `V₀`, `e₄` acting on
/// `V₁` by 1 and `l₃ = e₁*∧e₂*∧e₃*`. Fails only condition (i), at
/// `(e₁, e₂, e₃, e₄)`.
pub fn broken_abelian4() -> TwoTermLInfinity {
    let mut v = TwoTermLInfinity::abelian(TwoTermComplex::zero(4, 1));
    v.l2_01_mut().fiber_mut(&[3, 0])[0] = int(1);
    set_alternating(v.l3_mut(), [0, 1, 2], 0);
    v
}

/// An antisymmetric bracket on `ℚ³` violating Jacobi:
/// `[e₁,e₂] = e₃`, `[e₁,e₃] = e₁`, `[e₂,e₃] = 0`.
pub fn broken_jacobi3() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(0, 1)])])
}

/// `V₀ = ℚ³`, `V₁ = ℚ²`, `d f₁ = e₁`, `d f₂ = 0`, zero brackets and
/// `l₃ = e₁*∧e₂*∧e₃* · f₂`. Fails only condition (h).
pub fn only_h_broken() -> TwoTermLInfinity {
    let d = RMatrix::from_ints(&[[1, 0], [0, 0], [0, 0]]);
    let mut v = TwoTermLInfinity::abelian(TwoTermComplex::from_differential(d));
    set_alternating(v.l3_mut(), [0, 1, 2], 1);
    v
}

/// Sets `l₃(e_σ(a), e_σ(b), e_σ(c))` to `sgn(σ) f_m`.
fn set_alternating(l3: &mut Tensor, [a, b, c]: [usize; 3], m: usize) {
    for (p, s) in [
        ([a, b, c], 1),
        ([b, c, a], 1),
        ([c, a, b], 1),
        ([b, a, c], -1),
        ([a, c, b], -1),
        ([c, b, a], -1),
    ] {
        l3.fiber_mut(&p)[m] = int(s);
    }
}
