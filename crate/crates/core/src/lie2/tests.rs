use super::*;
use crate::cohomology::{abelian, build_g_hbar, sl2, so3};
use crate::exactlin::{frac, int, RMatrix, Tensor};
use crate::fixtures;
use crate::linfty::{check_axioms, LInfHom, TwoTermLInfinity};
use crate::random;
use crate::twoterm::TwoTermComplex;

fn ghbar(h: Rational) -> Arc<SemistrictLie2Algebra> {
    Arc::new(build_g_hbar(&so3(), &h))
}

fn octagon_passes(l: &SemistrictLie2Algebra) -> bool {
    check_jacobiator_identity_categorical(l).passed()
}

#[test]
fn bracket_examples() {
    let l = ghbar(int(1));
    let e = |i| l.data().e0(i);
    let f = vector::concat(&e(0), &[int(1)]);
    let g = l.space().identity_vec(&e(1));
    assert_eq!(l.bracket_vecs(&f, &g), vector::concat(&e(2), &[int(0)]));
    for i in 0..3 {
        for j in 0..3 {
            let got = l.bracket_vecs(&l.space().identity_vec(&e(i)), &l.space().identity_vec(&e(j)));
            assert_eq!(got, l.space().identity_vec(&l.bracket_objects(&e(i), &e(j))));
        }
    }
}

#[test]
fn jacobiator_of_ghbar() {
    let l = ghbar(int(1));
    let e = |i| l.data().e0(i);
    assert_eq!(
        l.jacobiator_vec(&e(0), &e(1), &e(2)),
        vec![int(0), int(0), int(0), int(-2)]
    );
    assert_eq!(
        l.jacobiator_vec(&e(1), &e(0), &e(2)),
        vec![int(0), int(0), int(0), int(2)]
    );
}

#[test]
fn valid_structures_pass_categorical_checks() {
    for h in [int(0), int(1), int(2), frac(-1, 2)] {
        let l = ghbar(h);
        let r = check_lie2_algebra(&l);
        assert!(r.passed(), "{:?}", r.failing());
        assert!(octagon_passes(&l));
    }
    let l = build_g_hbar(&sl2(), &int(1));
    assert!(check_lie2_algebra(&l).passed());
    assert!(octagon_passes(&l));
}

#[test]
fn octagon_agrees_with_condition_i() {
    let mut rng = random::rng(31);
    let mut family: Vec<TwoTermLInfinity> = vec![
        ghbar(int(1)).to_linfty(),
        ghbar(int(2)).to_linfty(),
        fixtures::broken_abelian4(),
        fixtures::only_h_broken(),
        from_crossed_module(&DifferentialCrossedModule::adjoint(&so3()))
            .unwrap()
            .to_linfty(),
    ];
    for k in 0..6 {
        let seed = Arc::new(family[k % 3].clone());
        family.push((*random::equivalent_linfty(&mut rng, &seed, k % 2).0).clone());
    }
    for v in family {
        let i_ok = check_axioms(&v).passed_check("i");
        let l = SemistrictLie2Algebra::from_linfty(v);
        assert_eq!(octagon_passes(&l), i_ok);
    }
}

#[test]
fn octagon_locates_the_broken_tuple() {
    let l = SemistrictLie2Algebra::from_linfty(fixtures::broken_abelian4());
    let r = check_jacobiator_identity_categorical(&l);
    let v = r.check("jacobiator_identity").unwrap().first_violation.clone().unwrap();
    assert_eq!(v.tuple, vec![0, 1, 2, 3]);
}

#[test]
fn jacobiator_naturality_tracks_condition_h() {
    let l = SemistrictLie2Algebra::from_linfty(fixtures::only_h_broken());
    let r = check_lie2_algebra(&l);
    assert_eq!(r.failing(), vec!["jacobiator_naturality"]);
}

#[test]
fn round_trip_is_exact() {
    let v = ghbar(int(2)).to_linfty();
    assert_eq!(SemistrictLie2Algebra::from_linfty(v.clone()).to_linfty(), v);
}

#[test]
fn zero_structure_is_strict_and_skeletal() {
    let l = SemistrictLie2Algebra::from_linfty(TwoTermLInfinity::abelian(TwoTermComplex::zero(2, 2)));
    assert!(l.is_strict() && l.is_skeletal());
    let g = ghbar(int(1));
    assert!(!g.is_strict() && g.is_skeletal());
    let m = from_crossed_module(&DifferentialCrossedModule::adjoint(&so3())).unwrap();
    assert!(m.is_strict() && !m.is_skeletal());
}

#[test]
fn identity_hom_is_valid_and_a_unit() {
    let mut rng = random::rng(32);
    let l = ghbar(int(1));
    let one = Lie2Hom::identity(&l);
    assert!(check_lie2_hom(&one).unwrap().passed());
    let phi = random::ghbar_endomorphism(&mut rng, &Arc::new(l.to_linfty()));
    let f = Lie2Hom::from_linfty_hom(&phi).unwrap();
    assert_eq!(Lie2Hom::from_linfty_hom(&LInfHom::identity(&phi.source)).unwrap(), one);
    assert_eq!(compose_lie2_homs(&one, &f).unwrap(), f);
    assert_eq!(compose_lie2_homs(&f, &one).unwrap(), f);
}

#[test]
fn images_of_linfty_homs_are_valid() {
    let mut rng = random::rng(33);
    let v = Arc::new(ghbar(int(1)).to_linfty());
    for _ in 0..6 {
        let (_, phi) = random::equivalent_linfty(&mut rng, &v, 1);
        let f = Lie2Hom::from_linfty_hom(&phi).unwrap();
        let r = check_lie2_hom(&f).unwrap();
        assert!(r.passed(), "{:?}", r.failing());
        assert_eq!(f.to_linfty_hom().unwrap(), phi);
    }
}

#[test]
fn composites_of_lie2_homs_are_valid() {
    let mut rng = random::rng(34);
    let v = Arc::new(ghbar(int(1)).to_linfty());
    for _ in 0..5 {
        let (w, phi) = random::equivalent_linfty(&mut rng, &v, 1);
        let (_, psi) = random::equivalent_linfty(&mut rng, &w, 0);
        let f = Lie2Hom::from_linfty_hom(&phi).unwrap();
        let g = Lie2Hom::from_linfty_hom(&psi).unwrap();
        let fg = compose_lie2_homs(&f, &g).unwrap();
        assert!(check_lie2_hom(&fg).unwrap().passed());
        let both = crate::linfty::compose_homs(&phi, &psi).unwrap();
        assert_eq!(fg, Lie2Hom::from_linfty_hom(&both).unwrap());
    }
}

#[test]
fn corrupted_f2_fails_located() {
    let l = ghbar(int(1));
    let mut f = Lie2Hom::identity(&l);
    f.f2.fiber_mut(&[0, 1])[0] += int(1);
    f.f2.fiber_mut(&[1, 0])[0] -= int(1);
    let r = check_lie2_hom(&f).unwrap();
    assert!(r.failing().contains(&"f2_target"));
    let v = r.check("f2_target").unwrap().first_violation.clone().unwrap();
    assert_eq!(v.tuple, vec![0, 1]);
}

#[test]
fn two_homs_from_linfty_two_homs() {
    let mut rng = random::rng(35);
    let v = Arc::new(ghbar(int(1)).to_linfty());
    for _ in 0..4 {
        let (_, phi) = random::equivalent_linfty(&mut rng, &v, 1);
        let t = random::two_hom_from(&mut rng, &phi);
        let u = random::two_hom_from(&mut rng, &t.to);
        let tt = Lie2TwoHom::from_linfty_two_hom(&t).unwrap();
        let uu = Lie2TwoHom::from_linfty_two_hom(&u).unwrap();
        assert!(check_lie2_two_hom(&tt).unwrap().passed());
        assert_eq!(tt.to_linfty_two_hom().unwrap(), t);
        let vert = vertical_lie2_two_hom(&tt, &uu).unwrap();
        assert!(check_lie2_two_hom(&vert).unwrap().passed());
        let one = Lie2TwoHom::identity(&Lie2Hom::identity(&tt.from.target));
        let hor = horizontal_lie2_two_hom(&tt, &one).unwrap();
        assert!(check_lie2_two_hom(&hor).unwrap().passed());
    }
}

#[test]
fn adjoint_crossed_module_is_valid() {
    for g in [so3(), sl2()] {
        let m = DifferentialCrossedModule::adjoint(&g);
        assert!(check_crossed_module(&m).unwrap().passed());
        let l = from_crossed_module(&m).unwrap();
        assert!(check_axioms(l.data()).passed());
        assert!(octagon_passes(&l));
        assert_eq!(to_crossed_module(&l).unwrap(), m);
    }
}

#[test]
fn abelian_kernel_crossed_module() {
    let m = |g: crate::cohomology::LieAlgebra| DifferentialCrossedModule {
        t: RMatrix::zeros(g.dim(), 2),
        alpha: Tensor::zeros(&[g.dim(), 2, 2]),
        h: abelian(2),
        g,
    };
    assert!(check_crossed_module(&m(so3())).unwrap().passed());
    assert!(!check_crossed_module(&m(fixtures::broken_jacobi3())).unwrap().passed());
}

#[test]
fn equivariance_failure_shows_as_condition_e() {
    let mut m = DifferentialCrossedModule::adjoint(&so3());
    m.alpha.fiber_mut(&[0, 0])[0] += int(1);
    let r = check_crossed_module(&m).unwrap();
    assert!(r.failing().contains(&"equivariance"));
    let l = from_crossed_module(&m).unwrap();
    assert!(check_axioms(l.data()).failing().contains(&"e"));
}

#[test]
fn random_crossed_modules_round_trip() {
    let mut rng = random::rng(36);
    for _ in 0..10 {
        let m = random::crossed_module(&mut rng);
        assert!(check_crossed_module(&m).unwrap().passed());
        let l = from_crossed_module(&m).unwrap();
        assert!(check_axioms(l.data()).passed());
        assert_eq!(to_crossed_module(&l).unwrap(), m);
        let back = from_crossed_module(&to_crossed_module(&l).unwrap()).unwrap();
        assert_eq!(back, l);
    }
}

#[test]
fn non_strict_input_is_rejected() {
    assert_eq!(to_crossed_module(&ghbar(int(1))), Err(Error::NotStrict));
}
