use std::sync::Arc;

use super::*;
use crate::cohomology::{build_g_hbar, sl2, so3, LieAlgebra};
use crate::error::Error;
use crate::exactlin::{frac, int};
use crate::fixtures;
use crate::random;
use crate::twoterm::check_homotopy;

fn ghbar(h: Rational) -> Arc<TwoTermLInfinity> {
    Arc::new(build_g_hbar(&so3(), &h).to_linfty())
}

fn one_term(g: &LieAlgebra) -> TwoTermLInfinity {
    let c = TwoTermComplex::zero(g.dim(), 0);
    let n = g.dim();
    TwoTermLInfinity::new(
        c,
        g.bracket().clone(),
        Tensor::zeros(&[n, 0, 0]),
        Tensor::zeros(&[n, n, n, 0]),
    )
    .unwrap()
}

#[test]
fn ghbar_passes_all_conditions() {
    for h in [int(0), int(1), int(2), frac(-1, 2)] {
        let v = ghbar(h);
        let r = check_axioms(&v);
        assert!(r.passed(), "{:?}", r.failing());
        assert!(jacobi_oracle(&v).passed());
    }
    let v = build_g_hbar(&sl2(), &int(1)).to_linfty();
    assert!(check_axioms(&v).passed());
    assert!(jacobi_oracle(&v).passed());
}

#[test]
fn lie_algebras_are_one_term_structures() {
    assert!(check_axioms(&one_term(&so3())).passed());
    assert!(check_axioms(&one_term(&sl2())).passed());
    let bad = one_term(&fixtures::broken_jacobi3());
    assert_eq!(check_axioms(&bad).failing(), vec!["g"]);
    assert!(!jacobi_oracle(&bad).passed());
}

#[test]
fn broken_abelian4_fails_only_i() {
    let v = fixtures::broken_abelian4();
    let r = check_axioms(&v);
    assert_eq!(r.failing(), vec!["i"]);
    let viol = r.check("i").unwrap().first_violation.clone().unwrap();
    assert_eq!(viol.tuple, vec![0, 1, 2, 3]);
    assert_eq!(viol.residual, vec![int(-1)]);
    assert!(!jacobi_oracle(&v).passed());
}

#[test]
fn only_h_broken_fails_only_h() {
    let v = fixtures::only_h_broken();
    assert_eq!(check_axioms(&v).failing(), vec!["h"]);
}

#[test]
fn increasing_sweep_matches_full_sweep() {
    let opts = AxiomOptions { increasing_only: true };
    for v in [
        (*ghbar(int(1))).clone(),
        fixtures::broken_abelian4(),
        fixtures::only_h_broken(),
    ] {
        assert_eq!(check_axioms(&v).failing(), check_axioms_with(&v, opts).failing());
    }
}

#[test]
fn oracle_agrees_on_random_instances() {
    let mut rng = random::rng(21);
    let seeds = [ghbar(int(1)), ghbar(int(0)), Arc::new(fixtures::broken_abelian4())];
    let mut seen = [0usize; 2];
    for n in 0..24 {
        let (w, _) = random::equivalent_linfty(&mut rng, &seeds[n % 3], n % 2);
        let w = if n % 4 == 1 {
            random::perturb_linfty(&mut rng, &w)
        } else {
            (*w).clone()
        };
        let axioms = check_axioms(&w).passed();
        assert_eq!(axioms, jacobi_oracle(&w).passed(), "instance {n}");
        seen[axioms as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn oracle_arity_one_and_two_are_vacuous_for_valid_data() {
    let v = ghbar(int(2));
    assert!(generalized_jacobi(&v, 1).passed);
    assert!(generalized_jacobi(&v, 2).passed);
}

#[test]
fn transport_and_inflation_preserve_validity() {
    let mut rng = random::rng(22);
    for _ in 0..5 {
        let v = ghbar(int(1));
        let (w, f) = random::equivalent_linfty(&mut rng, &v, 1);
        assert!(check_axioms(&w).passed());
        assert!(check_hom(&f).unwrap().passed());
    }
}

#[test]
fn identity_hom_is_a_unit() {
    let mut rng = random::rng(23);
    let v = ghbar(int(1));
    let one = LInfHom::identity(&v);
    assert!(check_hom(&one).unwrap().passed());
    let f = random::ghbar_endomorphism(&mut rng, &v);
    assert_eq!(compose_homs(&one, &f).unwrap(), f);
    assert_eq!(compose_homs(&f, &one).unwrap(), f);
}

#[test]
fn composition_is_associative_and_closed() {
    let mut rng = random::rng(24);
    let v = ghbar(int(1));
    for _ in 0..10 {
        let f = random::ghbar_endomorphism(&mut rng, &v);
        let g = random::ghbar_endomorphism(&mut rng, &v);
        let h = random::ghbar_endomorphism(&mut rng, &v);
        for x in [&f, &g, &h] {
            assert!(check_hom(x).unwrap().passed());
        }
        let fg = compose_homs(&f, &g).unwrap();
        assert!(check_hom(&fg).unwrap().passed());
        assert_eq!(
            compose_homs(&fg, &h).unwrap(),
            compose_homs(&f, &compose_homs(&g, &h).unwrap()).unwrap()
        );
    }
}

#[test]
fn corrupted_hom_fails_located() {
    let mut rng = random::rng(25);
    let v = ghbar(int(1));
    let mut f = random::ghbar_endomorphism(&mut rng, &v);
    f.phi2.fiber_mut(&[0, 1])[0] += int(1);
    let r = check_hom(&f).unwrap();
    assert!(r.failing().contains(&"phi2_antisymmetric"));
}

#[test]
fn two_homs_between_random_homs() {
    let mut rng = random::rng(26);
    let v = ghbar(int(1));
    for _ in 0..6 {
        let (w, f) = random::equivalent_linfty(&mut rng, &v, 1);
        let t = random::two_hom_from(&mut rng, &f);
        assert!(check_hom(&t.to).unwrap().passed());
        assert!(check_two_hom(&t).unwrap().passed());
        assert!(check_homotopy(&t.tau).unwrap().passed());
        let u = random::two_hom_from(&mut rng, &t.to);
        let vert = vertical_two_hom(&t, &u).unwrap();
        assert!(check_two_hom(&vert).unwrap().passed());
        let one = LInfTwoHom::identity(&LInfHom::identity(&w));
        let hor = horizontal_two_hom(&t, &one).unwrap();
        assert!(check_two_hom(&hor).unwrap().passed());
    }
    let one = LInfTwoHom::identity(&LInfHom::identity(&v));
    assert!(check_two_hom(&one).unwrap().passed());
}

#[test]
fn mismatched_endpoints_are_errors() {
    let a = ghbar(int(1));
    let b = Arc::new(fixtures::broken_abelian4());
    let f = LInfHom::identity(&a);
    let g = LInfHom::identity(&b);
    assert!(matches!(compose_homs(&f, &g), Err(Error::EndpointMismatch(_))));
}
