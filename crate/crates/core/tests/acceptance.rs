//! The acceptance criteria, run in order with one PASS/FAIL line each.
//!
//! `cargo test -p lie2 --test acceptance -- --nocapture` shows the lines.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;

use lie2::braid::{build_b_vect, build_y, check_ybe, check_zamolodchikov};
use lie2::cohomology::{
    abelian, build_cross_product, build_g_hbar, classes_match, classify, coboundary, cohomology_dim, is_coboundary,
    is_cocycle, killing_form, sl2, so3, triple_product_cochain, LieAlgebra, Representation,
};
use lie2::exactlin::{frac, int, vector, RMatrix, Rational, Tensor};
use lie2::fixtures::{broken_abelian4, broken_jacobi3};
use lie2::lie2::{
    check_crossed_module, check_jacobiator_identity_categorical, check_lie2_hom, compose_lie2_homs,
    from_crossed_module, to_crossed_module, DifferentialCrossedModule, Lie2Hom, SemistrictLie2Algebra,
};
use lie2::linfty::{check_axioms, check_hom, compose_homs, jacobi_oracle, LInfHom, TwoTermLInfinity};
use lie2::random;
use lie2::twoterm::{check_chain_map, check_homotopy, compose_chain_maps, ChainHomotopy, ChainMap};
use lie2::twovect::{
    alpha, alpha_inverse, beta, check_functor, check_nat_trans, compare_two_cells, compose_functors, functor_s,
    functor_t, horizontal_nat, s_on_functor, s_on_nat, t_on_chain_map, t_on_homotopy, vertical_nat, whisker_left,
    whisker_right, LinearFunctor, LinearNatTrans, TwoCellExpr, TwoVectorSpace,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ghbar(h: Rational) -> Arc<TwoTermLInfinity> {
    Arc::new(build_g_hbar(&so3(), &h).to_linfty())
}

fn hbars() -> [Rational; 4] {
    [int(0), int(1), int(2), frac(-1, 2)]
}

fn criterion_1() -> Outcome {
    let mut family: Vec<(String, Arc<TwoTermLInfinity>)> = hbars()
        .into_iter()
        .map(|h| (format!("so3 hbar={h}"), ghbar(h)))
        .collect();
    family.push(("sl2 hbar=1".into(), Arc::new(build_g_hbar(&sl2(), &int(1)).to_linfty())));
    for (name, v) in &family {
        let r = check_axioms(v);
        ensure!(r.passed(), "{name} fails {:?}", r.failing());
        ensure!(r.checks.len() == 9, "{name}: expected conditions a..i");
        let o = jacobi_oracle(v);
        ensure!(o.passed(), "{name}: oracle fails {:?}", o.failing());
    }
    // Bit-identical verdicts on the broken fixture and random relatives.
    let mut rng = random::rng(101);
    let mut compared = 0;
    let mut failing = 0;
    let seeds = [family[1].1.clone(), Arc::new(broken_abelian4())];
    for n in 0..16 {
        let (w, _) = random::equivalent_linfty(&mut rng, &seeds[n % 2], n % 2);
        let w = if n % 3 == 0 {
            random::perturb_linfty(&mut rng, &w)
        } else {
            (*w).clone()
        };
        let (a, o) = (check_axioms(&w).passed(), jacobi_oracle(&w).passed());
        ensure!(a == o, "instance {n}: axioms {a}, oracle {o}");
        compared += 1;
        failing += usize::from(!a);
    }
    ensure!(failing > 0, "no failing instance in the comparison family");
    Ok(format!(
        "5 structures pass a..i and the oracle; {compared} further verdicts agree ({failing} failing)"
    ))
}

/// `⟨x,y⟩` by the Killing matrix.
fn pair(k: &RMatrix, x: &[Rational], y: &[Rational]) -> Rational {
    vector::dot(x, &k.mul_vec(y))
}

fn criterion_2() -> Outcome {
    let g = so3();
    let k = killing_form(&g);
    let w = triple_product_cochain(&g, &int(1));
    let dw = coboundary(&w);
    ensure!(dw.is_zero(), "coboundary of the triple product is nonzero");

    // The six-term expansion on random vectors, its simplified form and 0.
    let mut rng = random::rng(102);
    let l3 = |x: &[Rational], y: &[Rational], z: &[Rational]| pair(&k, x, &g.br(y, z));
    let cross_l3 = |x: &[Rational], y: &[Rational], z: &[Rational]| vector::dot(x, &g.br(y, z));
    for _ in 0..10 {
        let [a, b, c, d]: [Vec<Rational>; 4] = std::array::from_fn(|_| random::vector(&mut rng, 3));
        for (name, f) in [
            (
                "killing",
                &l3 as &dyn Fn(&[Rational], &[Rational], &[Rational]) -> Rational,
            ),
            ("cross", &cross_l3),
        ] {
            let six = -f(&g.br(&a, &b), &c, &d) + f(&g.br(&a, &c), &b, &d)
                - f(&g.br(&a, &d), &b, &c)
                - f(&g.br(&b, &c), &a, &d)
                + f(&g.br(&b, &d), &a, &c)
                - f(&g.br(&c, &d), &a, &b);
            ensure!(six == int(0), "{name}: six-term sum {six}");
        }
        let pairs = -pair(&k, &g.br(&a, &b), &g.br(&c, &d)) + pair(&k, &g.br(&a, &c), &g.br(&b, &d))
            - pair(&k, &g.br(&a, &d), &g.br(&b, &c));
        ensure!(pairs == int(0), "paired form {pairs}");
        let jac = vector::add(
            &vector::add(&g.br(&b, &g.br(&c, &d)), &g.br(&c, &g.br(&d, &b))),
            &g.br(&d, &g.br(&b, &c)),
        );
        ensure!(vector::is_zero(&jac), "Jacobi sum nonzero");
        ensure!(
            dw.eval(&[a, b, c, d]) == vec![int(0)],
            "library coboundary nonzero on vectors"
        );
    }
    let cross = classify(&build_cross_product()).map_err(|e| e.to_string())?;
    ensure!(is_cocycle(&cross.cocycle), "cross-product cochain is not closed");
    ensure!(!is_coboundary(&w), "triple product is a coboundary");
    let h3 = cohomology_dim(w.rep(), 3);
    ensure!(h3 == 1, "H3(so3) = {h3}");
    Ok("delta of both triple products is 0; not a coboundary; dim H3(so3, Q) = 1".into())
}

fn criterion_3() -> Outcome {
    let ad = Arc::new(Representation::adjoint(&sl2()));
    let triv = Arc::new(Representation::trivial(&so3(), 1));
    let dims = [
        cohomology_dim(&ad, 3),
        cohomology_dim(&triv, 1),
        cohomology_dim(&triv, 2),
    ];
    ensure!(dims == [0, 0, 0], "dims {dims:?}");
    // Sanity: the method does see nonzero groups.
    ensure!(
        cohomology_dim(&triv, 3) == 1 && cohomology_dim(&ad, 0) == 0,
        "control dimensions off"
    );
    Ok("H3(sl2, ad) = H1(so3, Q) = H2(so3, Q) = 0".into())
}

fn criterion_4() -> Outcome {
    let mut family: Vec<LieAlgebra> = vec![so3(), sl2(), abelian(1), abelian(3), abelian(4), broken_jacobi3()];
    let mut rng = random::rng(104);
    family.extend((0..20).map(|_| random::antisymmetric_bracket(&mut rng)));
    let mut disagreements = 0;
    let mut verdicts = [0usize; 2];
    for g in &family {
        ensure!(g.dim() <= 4, "dimension {}", g.dim());
        let ybe = check_ybe(&build_b_vect(g).map_err(|e| e.to_string())?).passed();
        let jac = g.jacobi_sweep().passed;
        disagreements += usize::from(ybe != jac);
        verdicts[jac as usize] += 1;
    }
    ensure!(disagreements == 0, "{disagreements} disagreements");
    ensure!(
        verdicts[0] > 0 && verdicts[1] > 0,
        "family lacks both verdicts: {verdicts:?}"
    );
    Ok(format!(
        "{} brackets, {} Lie and {} not, zero disagreements",
        family.len(),
        verdicts[1],
        verdicts[0]
    ))
}

/// `V₀ = ℚ⁴` abelian with `e₄` acting by 1 on `V₁ = ℚ` and a random
/// alternating `l₃`.
fn abelian4_variant(rng: &mut impl Rng) -> TwoTermLInfinity {
    let mut v = broken_abelian4();
    let mut l3 = Tensor::zeros(&[4, 4, 4, 1]);
    for t in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        let c = if rng.random_bool(0.5) {
            int(0)
        } else {
            random::scalar(rng)
        };
        for (p, sign) in permutations3(t) {
            l3.fiber_mut(&p)[0] = if sign { c.clone() } else { -c.clone() };
        }
    }
    *v.l3_mut() = l3;
    v
}

fn permutations3([a, b, c]: [usize; 3]) -> [([usize; 3], bool); 6] {
    [
        ([a, b, c], true),
        ([b, c, a], true),
        ([c, a, b], true),
        ([b, a, c], false),
        ([a, c, b], false),
        ([c, b, a], false),
    ]
}

fn criterion_5() -> Outcome {
    let target = Arc::new(build_g_hbar(&so3(), &int(1)));
    let start = Instant::now();
    let z = check_zamolodchikov(&build_y(&target).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(z.passed(), "g_hbar(so3, 1) fails: {:?}", z.checks[0].first_violation);
    ensure!(z.checks[0].checked == 256, "swept {} objects", z.checks[0].checked);
    ensure!(elapsed < Duration::from_secs(60), "256-object sweep took {elapsed:?}");

    let mut family: Vec<(String, TwoTermLInfinity)> = hbars()
        .into_iter()
        .map(|h| (format!("so3 hbar={h}"), (*ghbar(h)).clone()))
        .collect();
    family.push(("sl2 hbar=1".into(), build_g_hbar(&sl2(), &int(1)).to_linfty()));
    family.push(("cross product".into(), build_cross_product().to_linfty()));
    family.push(("broken_abelian4".into(), broken_abelian4()));
    let mut rng = random::rng(105);
    for n in 0..3 {
        family.push((format!("abelian4 variant {n}"), abelian4_variant(&mut rng)));
    }
    let mut verdicts = [0usize; 2];
    for (name, v) in family {
        let axioms = check_axioms(&v);
        let others: Vec<&str> = axioms.failing().into_iter().filter(|c| *c != "i").collect();
        ensure!(others.is_empty(), "{name}: family member fails {others:?}");
        let i_ok = axioms.passed_check("i");
        let l = Arc::new(SemistrictLie2Algebra::from_linfty(v));
        let oct = check_jacobiator_identity_categorical(&l).passed();
        let tet = check_zamolodchikov(&build_y(&l).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .passed();
        ensure!(
            tet == i_ok && oct == i_ok,
            "{name}: tetrahedron {tet}, octagon {oct}, condition i {i_ok}"
        );
        if name == "broken_abelian4" {
            ensure!(!tet, "broken_abelian4 passes the tetrahedron equation");
        }
        verdicts[i_ok as usize] += 1;
    }
    Ok(format!(
        "256 objects in {:.1} s; {} structures agree ({} pass, {} fail)",
        elapsed.as_secs_f64(),
        verdicts[0] + verdicts[1],
        verdicts[1],
        verdicts[0]
    ))
}

fn invert(f: &ChainMap) -> ChainMap {
    ChainMap::new(
        f.target.clone(),
        f.source.clone(),
        f.phi0.inverse().expect("invertible"),
        f.phi1.inverse().expect("invertible"),
    )
    .expect("shapes")
}

fn nonzero_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RMatrix {
    loop {
        let m = random::matrix(rng, rows, cols);
        if !m.is_zero() || rows * cols == 0 {
            return m;
        }
    }
}

fn passes_chain(f: &ChainMap) -> bool {
    check_chain_map(f).is_ok_and(|r| r.passed())
}

fn passes_functor(f: &LinearFunctor) -> bool {
    check_functor(f).is_ok_and(|r| r.passed())
}

fn criterion_6() -> Outcome {
    let mut rng = random::rng(106);
    let mut transported = [0usize; 4];
    for n in 0..20 {
        let dims = |rng: &mut random::Rng64| (rng.random_range(1..=5), rng.random_range(0..=5));

        // T then S: β is an isomorphism S(T(C)) → C natural in chain maps.
        let (a0, a1) = dims(&mut rng);
        let (b0, b1) = dims(&mut rng);
        let c = random::complex(&mut rng, a0, a1);
        let d = random::complex(&mut rng, b0, b1);
        let (bc, bd) = (beta(&c), beta(&d));
        ensure!(
            passes_chain(&bc) && bc.phi0.is_invertible() && bc.phi1.is_invertible(),
            "beta not an iso ({n})"
        );
        ensure!(functor_s(&functor_t(&c)) == bc.source, "S(T(C)) mismatch ({n})");
        let f = random::chain_map(&mut rng, &c, &d);
        let stf = s_on_functor(&t_on_chain_map(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let conj = compose_chain_maps(&compose_chain_maps(&bc, &f).unwrap(), &invert(&bd)).unwrap();
        ensure!(stf == conj, "S(T(f)) is not beta-conjugate to f ({n})");

        // Chain maps and homotopies, valid and corrupted, keep their verdict
        // under T and under conjugation by β.
        let h = random::homotopy_from(&mut rng, &f);
        let mut bad_f = f.clone();
        bad_f.phi1 = bad_f.phi1.checked_add(&nonzero_matrix(&mut rng, b1, a1)).unwrap();
        for g in [&f, &bad_f] {
            let ok = passes_chain(g);
            let tg = t_on_chain_map(g).map_err(|e| e.to_string())?;
            let back = compose_chain_maps(&compose_chain_maps(&bc, g).unwrap(), &invert(&bd)).unwrap();
            ensure!(
                passes_functor(&tg) == ok && passes_chain(&back) == ok,
                "chain map verdict changed ({n})"
            );
            transported[0] += 1;
        }
        let mut bad_h = h.clone();
        bad_h.tau = bad_h.tau.checked_add(&nonzero_matrix(&mut rng, b1, a0)).unwrap();
        bad_h.to.phi0 = bad_h.to.phi0.checked_add(&nonzero_matrix(&mut rng, b0, a0)).unwrap();
        for k in [&h, &bad_h] {
            let ok = check_homotopy(k).is_ok_and(|r| r.passed());
            let tk = t_on_homotopy(k).map_err(|e| e.to_string())?;
            let ok_t = check_nat_trans(&tk).is_ok_and(|r| r.passed());
            let bdi = invert(&bd);
            let moved = ChainHomotopy {
                from: compose_chain_maps(&compose_chain_maps(&bc, &k.from).unwrap(), &bdi).unwrap(),
                to: compose_chain_maps(&compose_chain_maps(&bc, &k.to).unwrap(), &bdi).unwrap(),
                tau: &(&bdi.phi1 * &k.tau) * &bc.phi0,
            };
            let ok_b = check_homotopy(&moved).is_ok_and(|r| r.passed());
            ensure!(
                ok_t == ok && ok_b == ok,
                "homotopy verdict changed ({n}): {ok} {ok_t} {ok_b}"
            );
            transported[1] += 1;
        }

        // S then T: α is an isomorphism T(S(V)) → V natural in functors.
        let (p0, p1) = dims(&mut rng);
        let (q0, q1) = dims(&mut rng);
        let v = Arc::new(random::two_vector_space(&mut rng, p0, p1.max(p0)));
        let w = Arc::new(random::two_vector_space(&mut rng, q0, q1.max(q0)));
        let (av, avi) = (alpha(&v), alpha_inverse(&v).map_err(|e| e.to_string())?);
        let awi = alpha_inverse(&w).map_err(|e| e.to_string())?;
        ensure!(passes_functor(&av) && passes_functor(&avi), "alpha invalid ({n})");
        let id1 = compose_functors(&av, &avi).unwrap();
        let id2 = compose_functors(&avi, &av).unwrap();
        ensure!(
            id1.f0.is_identity() && id1.f1.is_identity() && id2.f0.is_identity() && id2.f1.is_identity(),
            "alpha and its inverse do not compose to identities ({n})"
        );
        let g = random::functor(&mut rng, &v, &w);
        let tsg = t_on_chain_map(&s_on_functor(&g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let conj = compose_functors(&compose_functors(&av, &g).unwrap(), &awi).unwrap();
        ensure!(tsg == conj, "T(S(F)) is not alpha-conjugate to F ({n})");

        let theta = random::nat_trans_from(&mut rng, &g);
        let tst = t_on_homotopy(&s_on_nat(&theta).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let moved = whisker_left(&av, &whisker_right(&theta, &awi).unwrap()).unwrap();
        ensure!(tst == moved, "T(S(theta)) is not alpha-conjugate to theta ({n})");

        let mut bad_g = g.clone();
        bad_g.f1 = bad_g
            .f1
            .checked_add(&nonzero_matrix(&mut rng, w.dim1(), v.dim1()))
            .unwrap();
        for h in [&g, &bad_g] {
            let ok = passes_functor(h);
            let moved = compose_functors(&compose_functors(&av, h).unwrap(), &awi).unwrap();
            ensure!(passes_functor(&moved) == ok, "functor verdict changed ({n})");
            transported[2] += 1;
        }
        let mut bad_t = theta.clone();
        bad_t.theta = bad_t
            .theta
            .checked_add(&nonzero_matrix(&mut rng, w.dim1(), v.dim0()))
            .unwrap();
        for t in [&theta, &bad_t] {
            let ok = check_nat_trans(t).is_ok_and(|r| r.passed());
            let moved = whisker_left(&av, &whisker_right(t, &awi).unwrap()).unwrap();
            ensure!(
                check_nat_trans(&moved).is_ok_and(|r| r.passed()) == ok,
                "nat-trans verdict changed ({n})"
            );
            transported[3] += 1;
        }
    }
    Ok(format!(
        "20 complexes and 20 2-vector spaces; {} chain maps, {} homotopies, {} functors, {} nat-trans keep their verdicts",
        transported[0], transported[1], transported[2], transported[3]
    ))
}

fn criterion_7() -> Outcome {
    for (g, name) in [(so3(), "so3"), (sl2(), "sl2")] {
        for h in hbars() {
            let q = classify(&build_g_hbar(&g, &h)).map_err(|e| e.to_string())?;
            ensure!(q.algebra == g, "{name} hbar={h}: algebra differs");
            ensure!(
                q.rep.dim_v() == 1 && q.rep.is_trivial(),
                "{name} hbar={h}: module is not trivial Q"
            );
            ensure!(
                q.cocycle == triple_product_cochain(&g, &h),
                "{name} hbar={h}: cocycle differs"
            );
        }
    }
    let mut rng = random::rng(107);
    let seeds: Vec<Arc<TwoTermLInfinity>> = vec![
        ghbar(int(1)),
        ghbar(frac(-1, 2)),
        Arc::new(build_g_hbar(&sl2(), &int(3)).to_linfty()),
        Arc::new(build_cross_product().to_linfty()),
        Arc::new(
            from_crossed_module(&random::crossed_module(&mut rng))
                .unwrap()
                .to_linfty(),
        ),
    ];
    let mut pairs = 0;
    for n in 0..12 {
        let v = &seeds[n % seeds.len()];
        let (w, f) = random::equivalent_linfty(&mut rng, v, 1 + n % 2);
        ensure!(
            !w.is_skeletal() || v.dim1() == 0,
            "pair {n}: inflation left the complex skeletal"
        );
        let q1 = classify(&SemistrictLie2Algebra::from_linfty((**v).clone())).map_err(|e| e.to_string())?;
        let q2 = classify(&SemistrictLie2Algebra::from_linfty((*w).clone())).map_err(|e| e.to_string())?;
        ensure!(
            is_cocycle(&q1.cocycle) && is_cocycle(&q2.cocycle),
            "pair {n}: output is not a cocycle"
        );
        ensure!(
            classes_match(&q1, &q2, &f).map_err(|e| e.to_string())?,
            "pair {n}: classes differ"
        );
        pairs += 1;
    }
    Ok(format!(
        "g_hbar quadruples exact for so3 and sl2; {pairs} equivalent pairs cohomologous"
    ))
}

/// Adds `±1` to one entry of `g`, `t` or `α`.
fn perturb_dcm(rng: &mut impl Rng, m: &DifferentialCrossedModule) -> (DifferentialCrossedModule, &'static str) {
    let mut p = m.clone();
    let (dg, dh) = (m.g.dim(), m.h.dim());
    let bump = if rng.random_bool(0.5) { int(1) } else { int(-1) };
    loop {
        match rng.random_range(0..3) {
            0 if dg >= 2 => {
                let mut b = m.g.bracket().clone();
                let i = rng.random_range(0..dg);
                let j = (i + rng.random_range(1..dg)) % dg;
                let k = rng.random_range(0..dg);
                b.fiber_mut(&[i, j])[k] += &bump;
                b.fiber_mut(&[j, i])[k] -= &bump;
                p.g = LieAlgebra::new(b).unwrap();
                return (p, "g");
            }
            1 if dh >= 1 => {
                let mut rows = m.t.to_rows();
                rows[rng.random_range(0..dg)][rng.random_range(0..dh)] += &bump;
                p.t = RMatrix::from_rows(dh, rows).unwrap();
                return (p, "t");
            }
            2 if dh >= 1 => {
                let idx = [rng.random_range(0..dg), rng.random_range(0..dh)];
                p.alpha.fiber_mut(&idx)[rng.random_range(0..dh)] += &bump;
                return (p, "alpha");
            }
            _ => {}
        }
    }
}

fn criterion_8() -> Outcome {
    let mut rng = random::rng(108);
    let mut modules = vec![
        DifferentialCrossedModule::adjoint(&so3()),
        DifferentialCrossedModule::adjoint(&sl2()),
    ];
    modules.extend((0..10).map(|_| random::crossed_module(&mut rng)));
    for (n, m) in modules.iter().enumerate() {
        let r = check_crossed_module(m).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "module {n} invalid: {:?}", r.failing());
        let l = from_crossed_module(m).map_err(|e| e.to_string())?;
        ensure!(
            l.is_strict() && check_axioms(l.data()).passed(),
            "module {n}: image is not a valid strict structure"
        );
        let back = to_crossed_module(&l).map_err(|e| e.to_string())?;
        ensure!(&back == m, "module {n}: DCM round trip differs");
        let again = from_crossed_module(&back).map_err(|e| e.to_string())?;
        ensure!(again.data() == l.data(), "module {n}: strict round trip differs");
    }

    let mut failures = 0;
    let mut mapping = std::collections::BTreeMap::<String, std::collections::BTreeSet<String>>::new();
    for n in 0..60 {
        let base = &modules[n % modules.len()];
        let (m, what) = perturb_dcm(&mut rng, base);
        let dcm = check_crossed_module(&m).map_err(|e| e.to_string())?;
        if dcm.passed() {
            continue;
        }
        failures += 1;
        let image = check_axioms(from_crossed_module(&m).map_err(|e| e.to_string())?.data());
        let named = image.failing();
        ensure!(
            !named.is_empty(),
            "perturbed {what} of module {}: DCM fails {:?}, image passes",
            n % modules.len(),
            dcm.failing()
        );
        for c in dcm.failing() {
            mapping
                .entry(c.to_string())
                .or_default()
                .extend(named.iter().map(|s| s.to_string()));
        }
    }
    ensure!(failures >= 10, "only {failures} failing perturbations");
    let table: Vec<String> = mapping
        .iter()
        .map(|(k, v)| format!("{k}->{}", v.iter().cloned().collect::<Vec<_>>().join("/")))
        .collect();
    Ok(format!(
        "{} round trips exact; {failures} failing perturbations of g, t, alpha all fail in the image ({})",
        modules.len(),
        table.join(", ")
    ))
}

/// Changing only the `h` bracket leaves the image unchanged, so those
/// failures have nothing to map to. Reported, not asserted.
fn h_bracket_note() -> String {
    let m = DifferentialCrossedModule::adjoint(&so3());
    let mut p = m.clone();
    p.h = LieAlgebra::new(m.h.bracket().scale(&int(2))).unwrap();
    let dcm = check_crossed_module(&p).unwrap();
    let same = from_crossed_module(&p).unwrap().data() == from_crossed_module(&m).unwrap().data();
    format!(
        "note: doubling only the h bracket of so3 adjoint fails {:?} while the image is {}",
        dcm.failing(),
        if same { "unchanged and valid" } else { "changed" }
    )
}

fn criterion_9() -> Outcome {
    let mut rng = random::rng(109);
    let mut pairs = 0;
    for n in 0..24 {
        let v = match n % 3 {
            0 => ghbar(int(1)),
            1 => ghbar(frac(-1, 2)),
            _ => Arc::new(build_g_hbar(&sl2(), &int(2)).to_linfty()),
        };
        let (f, g): (LInfHom, LInfHom) = if n % 2 == 0 {
            (
                random::ghbar_endomorphism(&mut rng, &v),
                random::ghbar_endomorphism(&mut rng, &v),
            )
        } else {
            let (w, f) = random::equivalent_linfty(&mut rng, &v, 1);
            let (_, g) = random::equivalent_linfty(&mut rng, &w, n % 4 / 2);
            (f, g)
        };
        if n % 2 == 0 && n % 3 == 2 {
            continue;
        }
        for h in [&f, &g] {
            ensure!(
                check_hom(h).map_err(|e| e.to_string())?.passed(),
                "pair {n}: input hom invalid"
            );
        }
        let fg = compose_homs(&f, &g).map_err(|e| e.to_string())?;
        let r = check_hom(&fg).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "pair {n}: L-infinity composite fails {:?}", r.failing());
        let (lf, lg) = (
            Lie2Hom::from_linfty_hom(&f).map_err(|e| e.to_string())?,
            Lie2Hom::from_linfty_hom(&g).map_err(|e| e.to_string())?,
        );
        let lfg = compose_lie2_homs(&lf, &lg).map_err(|e| e.to_string())?;
        let r = check_lie2_hom(&lfg).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "pair {n}: Lie 2-algebra composite fails {:?}", r.failing());
        pairs += 1;
    }
    ensure!(pairs >= 20, "only {pairs} pairs");

    let mut squares = 0;
    for n in 0..20 {
        let dims: [(usize, usize); 3] = std::array::from_fn(|_| (rng.random_range(1..=3), rng.random_range(1..=3)));
        let [u, v, w]: [Arc<TwoVectorSpace>; 3] = dims.map(|(a, b)| Arc::new(random::two_vector_space(&mut rng, a, b)));
        let f = random::functor(&mut rng, &u, &v);
        let a1 = random::nat_trans_from(&mut rng, &f);
        let a2 = random::nat_trans_from(&mut rng, &a1.to);
        let g = random::functor(&mut rng, &v, &w);
        let b1 = random::nat_trans_from(&mut rng, &g);
        let b2 = random::nat_trans_from(&mut rng, &b1.to);
        let dense = |x: &LinearNatTrans, y: &LinearNatTrans| horizontal_nat(x, y).unwrap();
        let lhs = dense(&vertical_nat(&a1, &a2).unwrap(), &vertical_nat(&b1, &b2).unwrap());
        let rhs = vertical_nat(&dense(&a1, &b1), &dense(&a2, &b2)).unwrap();
        ensure!(lhs == rhs, "interchange fails on dense 2-cells ({n})");
        ensure!(
            check_nat_trans(&lhs).is_ok_and(|r| r.passed()),
            "composite 2-cell invalid ({n})"
        );
        let leaf = |x: &LinearNatTrans| TwoCellExpr::leaf(x.clone()).unwrap();
        let el = TwoCellExpr::horizontal(
            &TwoCellExpr::vertical(vec![leaf(&a1), leaf(&a2)]).unwrap(),
            &TwoCellExpr::vertical(vec![leaf(&b1), leaf(&b2)]).unwrap(),
        )
        .unwrap();
        let er = TwoCellExpr::vertical(vec![
            TwoCellExpr::horizontal(&leaf(&a1), &leaf(&b1)).unwrap(),
            TwoCellExpr::horizontal(&leaf(&a2), &leaf(&b2)).unwrap(),
        ])
        .unwrap();
        let r = compare_two_cells("interchange", &el, &er, &[u.dim0()]).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "interchange fails on expressions ({n})");
        squares += 1;
    }
    Ok(format!(
        "{pairs} composable pairs closed in both settings; interchange holds on {squares} instances"
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom suite", criterion_1),
        ("cocycle reproduction", criterion_2),
        ("Whitehead spot-check", criterion_3),
        ("YBE bi-implication", criterion_4),
        ("tetrahedron bi-implication", criterion_5),
        ("equivalence functors", criterion_6),
        ("classification", criterion_7),
        ("strict/DCM round trip", criterion_8),
        ("closure properties", criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {}: PASS {name} [{secs:.1} s]: {detail}", n + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name} [{secs:.1} s]: {why}", n + 1);
                failed.push(n + 1);
            }
        }
        if n == 7 {
            println!("    {}", h_bracket_note());
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
