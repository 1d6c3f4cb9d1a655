//! The 2-category of 2-term chain complexes `C₁ --d--> C₀`, chain maps and
//! chain homotopies.
//!
//! Composition of chain maps is written diagrammatically:
//! `compose_chain_maps(f, g)` is "first `f`, then `g`".

use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{rank_kernel, RMatrix};
use crate::report::{Sweep, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermComplex {
    dim0: usize,
    dim1: usize,
    d: RMatrix,
}

impl TwoTermComplex {
    pub fn new(dim0: usize, dim1: usize, d: RMatrix) -> Result<Self> {
        if d.shape() != (dim0, dim1) {
            return Err(dim_mismatch(
                "differential d",
                format!("{dim0}x{dim1}"),
                format!("{}x{}", d.rows(), d.cols()),
            ));
        }
        Ok(TwoTermComplex { dim0, dim1, d })
    }

    /// The complex whose differential is `d`, with dimensions read off its
    /// shape.
    pub fn from_differential(d: RMatrix) -> Self {
        TwoTermComplex {
            dim0: d.rows(),
            dim1: d.cols(),
            d,
        }
    }

    pub fn zero(dim0: usize, dim1: usize) -> Self {
        Self::from_differential(RMatrix::zeros(dim0, dim1))
    }

    pub fn dim0(&self) -> usize {
        self.dim0
    }

    pub fn dim1(&self) -> usize {
        self.dim1
    }

    pub fn d(&self) -> &RMatrix {
        &self.d
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }
}

/// A candidate chain map. Fields are public so that broken candidates can
/// be built and checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: TwoTermComplex,
    pub target: TwoTermComplex,
    pub phi0: RMatrix,
    pub phi1: RMatrix,
}

impl ChainMap {
    pub fn new(source: TwoTermComplex, target: TwoTermComplex, phi0: RMatrix, phi1: RMatrix) -> Result<Self> {
        let f = ChainMap {
            source,
            target,
            phi0,
            phi1,
        };
        f.check_shapes()?;
        Ok(f)
    }

    pub fn identity(c: &TwoTermComplex) -> Self {
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            phi0: RMatrix::identity(c.dim0),
            phi1: RMatrix::identity(c.dim1),
        }
    }

    pub fn zero(source: &TwoTermComplex, target: &TwoTermComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            phi0: RMatrix::zeros(target.dim0, source.dim0),
            phi1: RMatrix::zeros(target.dim1, source.dim1),
        }
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        let want0 = (self.target.dim0, self.source.dim0);
        let want1 = (self.target.dim1, self.source.dim1);
        if self.phi0.shape() != want0 {
            return Err(dim_mismatch(
                "phi0",
                format!("{want0:?}"),
                format!("{:?}", self.phi0.shape()),
            ));
        }
        if self.phi1.shape() != want1 {
            return Err(dim_mismatch(
                "phi1",
                format!("{want1:?}"),
                format!("{:?}", self.phi1.shape()),
            ));
        }
        Ok(())
    }
}

/// A candidate homotopy `τ: C₀ → C₁′` from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainHomotopy {
    pub from: ChainMap,
    pub to: ChainMap,
    pub tau: RMatrix,
}

impl ChainHomotopy {
    /// The zero homotopy from a chain map to itself.
    pub fn identity(f: &ChainMap) -> Self {
        ChainHomotopy {
            from: f.clone(),
            to: f.clone(),
            tau: RMatrix::zeros(f.target.dim1, f.source.dim0),
        }
    }

    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.from.check_shapes()?;
        self.to.check_shapes()?;
        if self.from.source != self.to.source || self.from.target != self.to.target {
            return Err(Error::EndpointMismatch(
                "homotopy between chain maps with different endpoints".into(),
            ));
        }
        let want = (self.from.target.dim1, self.from.source.dim0);
        if self.tau.shape() != want {
            return Err(dim_mismatch(
                "tau",
                format!("{want:?}"),
                format!("{:?}", self.tau.shape()),
            ));
        }
        Ok(())
    }
}

fn record_cells(sweep: &mut Sweep, residual: &RMatrix) {
    for r in 0..residual.rows() {
        for c in 0..residual.cols() {
            sweep.record(&[r, c], vec![residual[(r, c)].clone()]);
        }
    }
}

/// Checks `d′φ₁ = φ₀d` cell by cell.
///
/// ```
/// use lie2::exactlin::RMatrix;
/// use lie2::twoterm::{check_chain_map, ChainMap, TwoTermComplex};
/// let c = TwoTermComplex::from_differential(RMatrix::from_ints(&[[1]]));
/// let c2 = TwoTermComplex::from_differential(RMatrix::from_ints(&[[0]]));
/// let one = RMatrix::identity(1);
/// let f = ChainMap::new(c, c2, one.clone(), one).unwrap();
/// let report = check_chain_map(&f).unwrap();
/// assert!(!report.passed());
/// ```
pub fn check_chain_map(f: &ChainMap) -> Result<VerificationReport> {
    f.check_shapes()?;
    let residual = &(f.target.d() * &f.phi1) - &(&f.phi0 * f.source.d());
    let mut s = Sweep::new("chain_map");
    record_cells(&mut s, &residual);
    Ok([s.finish()].into_iter().collect())
}

/// Checks `d′τ = ψ₀ − φ₀` and `τd = ψ₁ − φ₁`.
pub fn check_homotopy(h: &ChainHomotopy) -> Result<VerificationReport> {
    h.check_shapes()?;
    let r0 = &(h.from.target.d() * &h.tau) - &(&h.to.phi0 - &h.from.phi0);
    let r1 = &(&h.tau * h.from.source.d()) - &(&h.to.phi1 - &h.from.phi1);
    let mut s0 = Sweep::new("homotopy_degree0");
    record_cells(&mut s0, &r0);
    let mut s1 = Sweep::new("homotopy_degree1");
    record_cells(&mut s1, &r1);
    Ok([s0.finish(), s1.finish()].into_iter().collect())
}

/// First `f`, then `g`.
pub fn compose_chain_maps(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
    f.check_shapes()?;
    g.check_shapes()?;
    if f.target != g.source {
        return Err(Error::EndpointMismatch(
            "target of the first chain map differs from source of the second".into(),
        ));
    }
    Ok(ChainMap {
        source: f.source.clone(),
        target: g.target.clone(),
        phi0: &g.phi0 * &f.phi0,
        phi1: &g.phi1 * &f.phi1,
    })
}

/// `h1: φ ⇒ ψ` followed by `h2: ψ ⇒ χ`; the composite homotopy is `τ₁ + τ₂`.
pub fn vertical_homotopy(h1: &ChainHomotopy, h2: &ChainHomotopy) -> Result<ChainHomotopy> {
    h1.check_shapes()?;
    h2.check_shapes()?;
    if h1.to != h2.from {
        return Err(Error::EndpointMismatch(
            "vertical composite needs h1.to == h2.from".into(),
        ));
    }
    Ok(ChainHomotopy {
        from: h1.from.clone(),
        to: h2.to.clone(),
        tau: &h1.tau + &h2.tau,
    })
}

/// `h1: φ ⇒ ψ` on `C → C′` beside `h2: φ′ ⇒ ψ′` on `C′ → C″`, giving
/// `φφ′ ⇒ ψψ′` with `x ↦ τ′(φ₀x) + ψ′₁(τx)`.
pub fn horizontal_homotopy(h1: &ChainHomotopy, h2: &ChainHomotopy) -> Result<ChainHomotopy> {
    h1.check_shapes()?;
    h2.check_shapes()?;
    if h1.from.target != h2.from.source {
        return Err(Error::EndpointMismatch(
            "horizontal composite needs matching middle complex".into(),
        ));
    }
    Ok(ChainHomotopy {
        from: compose_chain_maps(&h1.from, &h2.from)?,
        to: compose_chain_maps(&h1.to, &h2.to)?,
        tau: &(&h2.tau * &h1.from.phi0) + &(&h2.to.phi1 * &h1.tau),
    })
}

/// A skeletal complex equivalent to a given one, with the witnessing data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeletalization {
    /// `C₁′ = ker d --0--> C₀′`, where `C₀′` complements `im d`.
    pub skeletal: TwoTermComplex,
    /// `u: C′ → C`, the inclusions.
    pub include: ChainMap,
    /// `v: C → C′`, projecting along `im d` in degree 0 and along a
    /// complement of `ker d` in degree 1.
    pub project: ChainMap,
    /// From "first `v`, then `u`" to the identity of `C`.
    pub homotopy: ChainHomotopy,
    /// From "first `u`, then `v`" (which is exactly the identity of `C′`)
    /// to the identity of `C′`; always zero.
    pub retraction: ChainHomotopy,
    /// Pivot columns of `d`; the standard vectors at these positions span
    /// the chosen complement of `ker d`.
    pub complement_ker: Vec<usize>,
    /// Positions of the standard vectors spanning `C₀′`.
    pub complement_im: Vec<usize>,
}

/// Splits `C₀ = im d ⊕ C₀′` and `C₁ = X ⊕ ker d` using echelon pivots and
/// returns the skeletal complex `ker d --0--> C₀′` with its equivalence
/// data.
pub fn skeletalize_complex(c: &TwoTermComplex) -> Skeletalization {
    let (n0, n1) = (c.dim0, c.dim1);
    let d = c.d();
    let (_, piv_d) = d.rref();
    let r = piv_d.len();
    let (_, ker) = rank_kernel(d);
    let k = ker.len();

    let aug = RMatrix::hstack(&[d, &RMatrix::identity(n0)]).expect("same row count");
    let (_, piv_aug) = aug.rref();
    let complement_im: Vec<usize> = piv_aug.iter().filter(|&&p| p >= n1).map(|p| p - n1).collect();
    let m = complement_im.len();
    debug_assert_eq!(m + r, n0);

    let eye0 = RMatrix::identity(n0);
    let eye1 = RMatrix::identity(n1);
    let w = eye0.select_columns(&complement_im);
    let kmat = RMatrix::from_columns(n1, &ker).expect("kernel vectors have length dim1");
    let ex = eye1.select_columns(&piv_d);
    let dx = d.select_columns(&piv_d);

    // C₀ = im d ⊕ C₀′ in the basis [d e_p | w].
    let basis0 = RMatrix::hstack(&[&dx, &w]).expect("same row count");
    let inv0 = basis0.inverse().expect("pivot columns and complement form a basis");
    let top0 = inv0.select_rows(&(0..r).collect::<Vec<_>>());
    let v0 = inv0.select_rows(&(r..n0).collect::<Vec<_>>());

    // C₁ = X ⊕ ker d in the basis [e_p | ker].
    let basis1 = RMatrix::hstack(&[&ex, &kmat]).expect("same row count");
    let inv1 = basis1.inverse().expect("pivot columns complement the kernel");
    let v1 = inv1.select_rows(&(r..n1).collect::<Vec<_>>());

    let skeletal = TwoTermComplex::zero(m, k);
    let include = ChainMap {
        source: skeletal.clone(),
        target: c.clone(),
        phi0: w,
        phi1: kmat,
    };
    let project = ChainMap {
        source: c.clone(),
        target: skeletal.clone(),
        phi0: v0,
        phi1: v1,
    };
    let vu = compose_chain_maps(&project, &include).expect("endpoints match");
    let uv = compose_chain_maps(&include, &project).expect("endpoints match");
    let homotopy = ChainHomotopy {
        from: vu,
        to: ChainMap::identity(c),
        tau: &ex * &top0,
    };
    let retraction = ChainHomotopy::identity(&uv);
    Skeletalization {
        skeletal,
        include,
        project,
        homotopy,
        retraction,
        complement_ker: piv_d,
        complement_im,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn cx(rows: &[&[i64]], dim0: usize, dim1: usize) -> TwoTermComplex {
        if rows.is_empty() {
            return TwoTermComplex::zero(dim0, dim1);
        }
        TwoTermComplex::from_differential(RMatrix::from_ints(rows))
    }

    #[test]
    fn chain_map_examples() {
        let c = cx(&[&[1, 2], &[0, 1]], 2, 2);
        assert!(check_chain_map(&ChainMap::identity(&c)).unwrap().passed());
        assert!(check_chain_map(&ChainMap::zero(&c, &c)).unwrap().passed());

        let f = ChainMap::new(
            cx(&[&[1]], 1, 1),
            cx(&[&[0]], 1, 1),
            RMatrix::identity(1),
            RMatrix::identity(1),
        )
        .unwrap();
        let rep = check_chain_map(&f).unwrap();
        let v = rep.check("chain_map").unwrap().first_violation.clone().unwrap();
        assert_eq!(v.tuple, vec![0, 0]);
        // d′φ₁ − φ₀d = 0 − 1
        assert_eq!(v.residual, vec![int(-1)]);
    }

    #[test]
    fn homotopy_examples() {
        let c = cx(&[&[1, 0]], 1, 2);
        let id = ChainMap::identity(&c);
        assert!(check_homotopy(&ChainHomotopy::identity(&id)).unwrap().passed());

        let zero = ChainMap::zero(&c, &c);
        let h = ChainHomotopy {
            from: zero.clone(),
            to: id.clone(),
            tau: RMatrix::zeros(2, 1),
        };
        assert!(!check_homotopy(&h).unwrap().passed());

        let z = TwoTermComplex::zero(2, 2);
        let h = ChainHomotopy {
            from: ChainMap::identity(&z),
            to: ChainMap::identity(&z),
            tau: RMatrix::from_ints(&[[3, 1], [4, 1]]),
        };
        assert!(check_homotopy(&h).unwrap().passed());

        let other = TwoTermComplex::zero(1, 1);
        let bad = ChainHomotopy {
            from: ChainMap::identity(&z),
            to: ChainMap::zero(&z, &other),
            tau: RMatrix::zeros(2, 2),
        };
        assert!(matches!(check_homotopy(&bad), Err(Error::EndpointMismatch(_))));
    }

    #[test]
    fn horizontal_unit_law() {
        let c = cx(&[&[1, 0], &[0, 0]], 2, 2);
        let id = ChainMap::identity(&c);
        let zero = ChainMap::zero(&c, &c);
        // τ: 0 ⇒ ψ with ψ₀ = dτ, ψ₁ = τd
        let tau = RMatrix::from_ints(&[[1, 2], [0, 3]]);
        let psi = ChainMap {
            source: c.clone(),
            target: c.clone(),
            phi0: c.d() * &tau,
            phi1: &tau * c.d(),
        };
        let h = ChainHomotopy {
            from: zero,
            to: psi,
            tau: tau.clone(),
        };
        assert!(check_homotopy(&h).unwrap().passed());
        let unit = ChainHomotopy::identity(&id);
        let hh = horizontal_homotopy(&h, &unit).unwrap();
        assert_eq!(hh.tau, tau);
        let hh = horizontal_homotopy(&unit, &h).unwrap();
        assert_eq!(hh.tau, tau);
        let v = vertical_homotopy(&ChainHomotopy::identity(&id), &unit).unwrap();
        assert!(v.tau.is_zero());
    }

    #[test]
    fn skeletalize_examples() {
        let c = cx(&[], 2, 3);
        let s = skeletalize_complex(&c);
        assert_eq!(s.skeletal, c);
        assert!(s.include.phi0.is_identity() && s.include.phi1.is_identity());

        let s = skeletalize_complex(&cx(&[&[1]], 1, 1));
        assert_eq!((s.skeletal.dim0(), s.skeletal.dim1()), (0, 0));

        let c = cx(&[&[1, 0], &[0, 0]], 2, 2);
        let s = skeletalize_complex(&c);
        assert_eq!((s.skeletal.dim0(), s.skeletal.dim1()), (1, 1));
        for f in [&s.include, &s.project] {
            assert!(check_chain_map(f).unwrap().passed());
        }
        assert!(check_homotopy(&s.homotopy).unwrap().passed());
        assert!(check_homotopy(&s.retraction).unwrap().passed());
        assert_eq!(s.retraction.from, ChainMap::identity(&s.skeletal));
    }
}
