use std::sync::Arc;

use num_traits::Zero;

use super::Representation;
use crate::error::{dim_mismatch, Error, Result};
use crate::exactlin::{rank_kernel, solve_linear, vector, RMatrix, Rational};

/// Strictly increasing `k`-tuples from `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Lexicographic rank of a strictly increasing tuple among `k`-subsets of `0..n`.
fn combination_rank(n: usize, c: &[usize]) -> usize {
    let k = c.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &ci) in c.iter().enumerate() {
        for v in prev..ci {
            rank += binom(n - 1 - v, k - 1 - i);
        }
        prev = ci + 1;
    }
    rank
}

/// Sorts a basis tuple, returning the permutation sign, or `None` when an
/// index repeats.
fn sort_with_sign(t: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = t.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

/// A `V`-valued `n`-cochain, stored on strictly increasing basis tuples in
/// the order of [`combinations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    rep: Arc<Representation>,
    values: Vec<Vec<Rational>>,
}

impl Cochain {
    pub fn zero(rep: &Arc<Representation>, degree: usize) -> Self {
        let count = binom(rep.algebra().dim(), degree);
        Cochain {
            degree,
            rep: rep.clone(),
            values: vec![vector::zeros(rep.dim_v()); count],
        }
    }

    /// `values[r]` is the value on the `r`-th increasing tuple.
    pub fn from_values(rep: &Arc<Representation>, degree: usize, values: Vec<Vec<Rational>>) -> Result<Self> {
        let count = binom(rep.algebra().dim(), degree);
        if values.len() != count {
            return Err(dim_mismatch("cochain values", count, values.len()));
        }
        if let Some(v) = values.iter().find(|v| v.len() != rep.dim_v()) {
            return Err(dim_mismatch("cochain value", rep.dim_v(), v.len()));
        }
        Ok(Cochain {
            degree,
            rep: rep.clone(),
            values,
        })
    }

    /// Flat coordinates `tuple_rank * dim V + component`.
    pub fn from_flat(rep: &Arc<Representation>, degree: usize, flat: &[Rational]) -> Result<Self> {
        let m = rep.dim_v();
        let count = binom(rep.algebra().dim(), degree);
        if flat.len() != count * m {
            return Err(dim_mismatch("flat cochain", count * m, flat.len()));
        }
        let values = if m == 0 {
            vec![Vec::new(); count]
        } else {
            flat.chunks(m).map(<[Rational]>::to_vec).collect()
        };
        Ok(Cochain {
            degree,
            rep: rep.clone(),
            values,
        })
    }

    pub fn to_flat(&self) -> Vec<Rational> {
        self.values.concat()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        combinations(self.rep.algebra().dim(), self.degree)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vector::is_zero(v))
    }

    /// Value at an arbitrary basis tuple, with the permutation sign.
    pub fn eval_basis(&self, t: &[usize]) -> Vec<Rational> {
        assert_eq!(t.len(), self.degree, "tuple length");
        match sort_with_sign(t) {
            None => vector::zeros(self.rep.dim_v()),
            Some((s, odd)) => {
                let v = &self.values[combination_rank(self.rep.algebra().dim(), &s)];
                if odd {
                    vector::neg(v)
                } else {
                    v.clone()
                }
            }
        }
    }

    /// `ω(x, e_{rest…})` for a vector `x` in the first slot.
    pub fn eval_first(&self, x: &[Rational], rest: &[usize]) -> Vec<Rational> {
        let mut out = vector::zeros(self.rep.dim_v());
        let mut t = Vec::with_capacity(rest.len() + 1);
        for (m, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            t.clear();
            t.push(m);
            t.extend_from_slice(rest);
            vector::axpy(&mut out, c, &self.eval_basis(&t));
        }
        out
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.degree, "argument count");
        let mut out = vector::zeros(self.rep.dim_v());
        let mut idx = Vec::with_capacity(args.len());
        self.eval_rec(args, &mut idx, Rational::from_integer(1.into()), &mut out);
        out
    }

    fn eval_rec(&self, args: &[Vec<Rational>], idx: &mut Vec<usize>, coef: Rational, out: &mut [Rational]) {
        let k = idx.len();
        if k == args.len() {
            vector::axpy(out, &coef, &self.eval_basis(idx));
            return;
        }
        for (m, c) in args[k].iter().enumerate() {
            if c.is_zero() || idx.contains(&m) {
                continue;
            }
            idx.push(m);
            self.eval_rec(args, idx, &coef * c, out);
            idx.pop();
        }
    }

    pub fn checked_add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        Ok(Cochain {
            degree: self.degree,
            rep: self.rep.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| vector::add(a, b))
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.checked_add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        Cochain {
            degree: self.degree,
            rep: self.rep.clone(),
            values: self.values.iter().map(|v| vector::scale(c, v)).collect(),
        }
    }

    fn same_space(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree, other.degree)));
        }
        if self.rep != other.rep {
            return Err(Error::Invalid("cochains for different representations".into()));
        }
        Ok(())
    }
}

/// `(δω)(v₁…v_{n+1}) = Σᵢ (−1)^{i+1} ρ(vᵢ) ω(…v̂ᵢ…)
///  + Σ_{j<k} (−1)^{j+k} ω([v_j,v_k], …v̂_j…v̂_k…)`.
///
/// ```
/// use std::sync::Arc;
/// use lie2::cohomology::{coboundary, so3, Cochain, Representation};
/// use lie2::exactlin::int;
/// let rep = Arc::new(Representation::trivial(&so3(), 1));
/// // ω = e₁*
/// let w = Cochain::from_values(&rep, 1, vec![vec![int(1)], vec![int(0)], vec![int(0)]]).unwrap();
/// let dw = coboundary(&w);
/// assert_eq!(dw.eval_basis(&[1, 2]), vec![int(-1)]);
/// ```
pub fn coboundary(w: &Cochain) -> Cochain {
    let rep = &w.rep;
    let g = rep.algebra();
    let n = w.degree;
    let tuples = combinations(g.dim(), n + 1);
    let values = tuples
        .iter()
        .map(|t| {
            let mut acc = vector::zeros(rep.dim_v());
            for i in 0..t.len() {
                let rest: Vec<usize> = t.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &v)| v).collect();
                let term = rep.rho()[t[i]].mul_vec(&w.eval_basis(&rest));
                if i % 2 == 0 {
                    acc = vector::add(&acc, &term);
                } else {
                    acc = vector::sub(&acc, &term);
                }
            }
            for j in 0..t.len() {
                for k in (j + 1)..t.len() {
                    let b = g.br(&g.basis(t[j]), &g.basis(t[k]));
                    let rest: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != j && p != k)
                        .map(|(_, &v)| v)
                        .collect();
                    let term = w.eval_first(&b, &rest);
                    if (j + k) % 2 == 0 {
                        acc = vector::add(&acc, &term);
                    } else {
                        acc = vector::sub(&acc, &term);
                    }
                }
            }
            acc
        })
        .collect();
    Cochain {
        degree: n + 1,
        rep: rep.clone(),
        values,
    }
}

/// The matrix of `δ: Cⁿ → Cⁿ⁺¹` in flat coordinates.
pub fn coboundary_matrix(rep: &Arc<Representation>, n: usize) -> RMatrix {
    let m = rep.dim_v();
    let dim_g = rep.algebra().dim();
    let cols_n = binom(dim_g, n) * m;
    let rows_n = binom(dim_g, n + 1) * m;
    let cols: Vec<Vec<Rational>> = (0..cols_n)
        .map(|c| {
            let w = Cochain::from_flat(rep, n, &vector::unit(cols_n, c)).expect("sized");
            coboundary(&w).to_flat()
        })
        .collect();
    RMatrix::from_columns(rows_n, &cols).expect("sized")
}

pub fn is_cocycle(w: &Cochain) -> bool {
    coboundary(w).is_zero()
}

/// Whether `ω = δθ` for some `(n−1)`-cochain `θ`, solved exactly.
pub fn is_coboundary(w: &Cochain) -> bool {
    if w.degree == 0 {
        return w.is_zero();
    }
    let m = coboundary_matrix(&w.rep, w.degree - 1);
    matches!(solve_linear(&m, &w.to_flat()), Ok(Some(_)))
}

/// A `θ` with `δθ = ω`, if one exists.
pub fn coboundary_preimage(w: &Cochain) -> Option<Cochain> {
    if w.degree == 0 {
        return None;
    }
    let m = coboundary_matrix(&w.rep, w.degree - 1);
    let theta = solve_linear(&m, &w.to_flat()).ok()??;
    Cochain::from_flat(&w.rep, w.degree - 1, &theta).ok()
}

pub fn cohomologous(a: &Cochain, b: &Cochain) -> Result<bool> {
    Ok(is_coboundary(&a.checked_sub(b)?))
}

/// `dim Hⁿ = dim ker δₙ − rank δₙ₋₁`.
pub fn cohomology_dim(rep: &Arc<Representation>, n: usize) -> usize {
    let dn = coboundary_matrix(rep, n);
    let (rank_n, _) = rank_kernel(&dn);
    let ker = dn.cols() - rank_n;
    let rank_prev = if n == 0 {
        0
    } else {
        coboundary_matrix(rep, n - 1).rank()
    };
    ker - rank_prev
}
