//! Unshuffles and graded permutation signs.
//!
//! Permutations are 0-based one-line arrays: `perm[p] = σ(p)`, so the
//! permuted argument list is `x_σ(0), …, x_σ(n−1)`.

use crate::error::{Error, Result};
use crate::exactlin::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    degrees: Vec<u8>,
}

impl SignedPermutation {
    /// `degrees[k]` is the degree of the original argument `x_k`.
    pub fn new(perm: Vec<usize>, degrees: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        if degrees.len() != n {
            return Err(Error::DimensionMismatch {
                context: "degrees".into(),
                expected: n.to_string(),
                found: degrees.len().to_string(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if degrees.iter().any(|&d| d > 1) {
            return Err(Error::OutOfRange("degrees must be 0 or 1".into()));
        }
        Ok(SignedPermutation { perm, degrees })
    }

    pub fn ungraded(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![0; n])
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn degrees(&self) -> &[u8] {
        &self.degrees
    }

    fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.perm.len();
        (0..n).flat_map(move |p| {
            ((p + 1)..n)
                .filter(move |&q| self.perm[p] > self.perm[q])
                .map(move |q| (self.perm[p], self.perm[q]))
        })
    }

    pub fn sign(&self) -> i32 {
        if self.inversions().count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn epsilon(&self) -> i32 {
        let odd = self
            .inversions()
            .filter(|&(a, b)| self.degrees[a] == 1 && self.degrees[b] == 1)
            .count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn chi(&self) -> i32 {
        self.sign() * self.epsilon()
    }
}

/// Koszul sign `ε(σ)`.
pub fn koszul_epsilon(p: &SignedPermutation) -> Rational {
    int(p.epsilon() as i64)
}

/// `χ(σ) = sgn(σ)·ε(σ)`.
pub fn koszul_chi(p: &SignedPermutation) -> Rational {
    int(p.chi() as i64)
}

/// The `(j, n−j)`-unshuffles in lexicographic order of their one-line form.
/// `j = n` is accepted and yields only the identity.
///
/// ```
/// use lie2::linfty::{cycle_notation, unshuffles};
/// let u: Vec<String> = unshuffles(1, 3).unwrap().iter().map(|p| cycle_notation(p)).collect();
/// assert_eq!(u, ["id", "(12)", "(132)"]);
/// ```
pub fn unshuffles(j: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    if j == 0 || j > n {
        return Err(Error::OutOfRange(format!("unshuffle block {j} of {n}")));
    }
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(j);
    choose(0, n, j, &mut pick, &mut out);
    out.sort();
    Ok(out)
}

fn choose(start: usize, n: usize, j: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pick.len() == j {
        let mut perm = pick.clone();
        perm.extend((0..n).filter(|k| !pick.contains(k)));
        out.push(perm);
        return;
    }
    for k in start..n {
        pick.push(k);
        choose(k + 1, n, j, pick, out);
        pick.pop();
    }
}

/// Cycle notation with 1-based labels, e.g. `(132)`; `id` for the identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut s = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        s.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            s.push_str(&(k + 1).to_string());
            k = perm[k];
        }
        s.push(')');
    }
    if s.is_empty() {
        "id".into()
    } else {
        s
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unshuffle_examples() {
        assert_eq!(
            unshuffles(1, 3).unwrap(),
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 0, 1]]
        );
        assert_eq!(unshuffles(2, 2).unwrap(), vec![vec![0, 1]]);
        assert_eq!(unshuffles(2, 4).unwrap().len(), 6);
        assert!(unshuffles(0, 3).is_err());
        assert!(unshuffles(4, 3).is_err());
    }

    #[test]
    fn unshuffles_are_increasing_on_blocks() {
        for n in 1..=6 {
            for j in 1..=n {
                let all = unshuffles(j, n).unwrap();
                let binom = (0..j).fold(1usize, |acc, k| acc * (n - k) / (k + 1));
                assert_eq!(all.len(), binom);
                for p in all {
                    assert!(p[..j].windows(2).all(|w| w[0] < w[1]));
                    assert!(p[j..].windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn chi_examples() {
        let id = SignedPermutation::new(vec![0, 1], vec![0, 0]).unwrap();
        assert_eq!(koszul_chi(&id), int(1));
        let t00 = SignedPermutation::new(vec![1, 0], vec![0, 0]).unwrap();
        assert_eq!(koszul_chi(&t00), int(-1));
        let t11 = SignedPermutation::new(vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(koszul_epsilon(&t11), int(-1));
        assert_eq!(koszul_chi(&t11), int(1));
        assert!(SignedPermutation::new(vec![0, 0], vec![0, 0]).is_err());
    }

    #[test]
    fn permutations_enumerates_factorial() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[5], vec![2, 1, 0]);
    }
}
