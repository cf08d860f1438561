//! Type `A_n` root-system primitives.
//!
//! Every root of `A_n` is a signed interval `±α_{lo,hi} = ±(α_lo + ⋯ + α_hi)`, so roots
//! are stored as intervals. Reflections go through the coefficient representation
//! transiently and are converted back, which keeps equality exact and `O(1)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A (signed) root `±α_{lo,hi}` of `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub lo: usize,
    pub hi: usize,
    pub positive: bool,
}

impl Root {
    /// The positive interval root `α_{lo,hi}`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "interval root needs lo <= hi");
        Root { lo, hi, positive: true }
    }

    /// The simple root `α_i`.
    pub fn simple(i: usize) -> Self {
        Root::interval(i, i)
    }

    /// The root with the opposite sign.
    pub fn negate(self) -> Self {
        Root { positive: !self.positive, ..self }
    }

    /// Height of the root (number of simple roots in the interval), signed.
    pub fn height(self) -> i64 {
        let h = (self.hi - self.lo + 1) as i64;
        if self.positive {
            h
        } else {
            -h
        }
    }

    /// Coefficients on the simple roots, indexed `0..n` for nodes `1..=n`.
    pub fn coefficients(self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        let s = if self.positive { 1 } else { -1 };
        for c in &mut v[self.lo - 1..self.hi] {
            *c = s;
        }
        v
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "" } else { "-" };
        if self.lo == self.hi {
            write!(f, "{sign}a{}", self.lo)
        } else {
            write!(f, "{sign}a{},{}", self.lo, self.hi)
        }
    }
}

/// The rank context: the root system `A_n`.
///
/// Every operation that depends on `n` hangs off this value so that data built for
/// different ranks cannot be silently mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeA {
    pub n: usize,
}

impl TypeA {
    /// The root system `A_n`; `n` must be at least 1.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadNode { i: 0, n });
        }
        Ok(TypeA { n })
    }

    /// Number of positive roots, `N = n(n+1)/2`.
    pub fn num_positive_roots(self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// Validates a node index.
    pub fn check_node(self, i: usize) -> Result<usize> {
        if (1..=self.n).contains(&i) {
            Ok(i)
        } else {
            Err(Error::BadNode { i, n: self.n })
        }
    }

    /// The diagram involution `i* = n + 1 - i`.
    pub fn star(self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        self.n + 1 - i
    }

    /// All positive roots, sorted by `(lo, hi)`.
    pub fn positive_roots(self) -> Vec<Root> {
        let mut out = Vec::with_capacity(self.num_positive_roots());
        for lo in 1..=self.n {
            for hi in lo..=self.n {
                out.push(Root::interval(lo, hi));
            }
        }
        out
    }

    /// Converts a coefficient vector back into a signed interval root.
    fn root_from_coefficients(self, coeffs: &[i64]) -> Result<Root> {
        let support: Vec<usize> = (0..self.n).filter(|&m| coeffs[m] != 0).collect();
        let (Some(&first), Some(&last)) = (support.first(), support.last()) else {
            return Err(Error::NotARoot("zero vector".into()));
        };
        let s = coeffs[first];
        if s.abs() != 1 || support.len() != last - first + 1 || support.iter().any(|&m| coeffs[m] != s) {
            return Err(Error::NotARoot(format!("{coeffs:?}")));
        }
        Ok(Root { lo: first + 1, hi: last + 1, positive: s > 0 })
    }

    /// The pairing `⟨β, α_i^∨⟩` computed from the Cartan matrix of `A_n`.
    pub fn pairing(self, r: Root, i: usize) -> i64 {
        let c = r.coefficients(self.n);
        let at = |m: usize| if (1..=self.n).contains(&m) { c[m - 1] } else { 0 };
        2 * at(i) - at(i.wrapping_sub(1)) - at(i + 1)
    }

    /// The simple reflection `s_i` applied to a root.
    pub fn reflect(self, i: usize, r: Root) -> Result<Root> {
        self.check_node(i)?;
        let mut c = r.coefficients(self.n);
        c[i - 1] -= self.pairing(r, i);
        self.root_from_coefficients(&c)
    }

    /// The inversion sequence `β_k = s_{i_1}⋯s_{i_{k-1}}(α_{i_k})` of a word.
    ///
    /// Fails with [`Error::NotReduced`] if some `β_k` is negative or repeats.
    pub fn inversion_sequence(self, word: &[usize]) -> Result<Vec<Root>> {
        let mut out = Vec::with_capacity(word.len());
        let mut seen = std::collections::HashSet::new();
        for (k, &ik) in word.iter().enumerate() {
            self.check_node(ik)?;
            let mut beta = Root::simple(ik);
            for &ij in word[..k].iter().rev() {
                beta = self.reflect(ij, beta)?;
            }
            if !beta.positive || !seen.insert(beta) {
                return Err(Error::NotReduced);
            }
            out.push(beta);
        }
        Ok(out)
    }

    /// `true` iff all inversion roots of the word are positive and pairwise distinct.
    pub fn is_reduced(self, word: &[usize]) -> bool {
        self.inversion_sequence(word).is_ok()
    }

    /// `true` iff the word is a reduced word of the longest element `w₀`.
    pub fn is_longest_word(self, word: &[usize]) -> bool {
        word.len() == self.num_positive_roots() && self.is_reduced(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        let a5 = TypeA::new(5).unwrap();
        assert_eq!(a5.star(2), 4);
        assert_eq!(a5.star(3), 3);
        assert_eq!(TypeA::new(7).unwrap().star(1), 7);
    }

    #[test]
    fn reflect_examples() {
        let a3 = TypeA::new(3).unwrap();
        assert_eq!(a3.reflect(1, Root::simple(1)).unwrap(), Root::simple(1).negate());
        assert_eq!(a3.reflect(1, Root::simple(2)).unwrap(), Root::interval(1, 2));
        assert_eq!(a3.reflect(2, Root::interval(1, 3)).unwrap(), Root::interval(1, 3));
    }

    #[test]
    fn inversion_examples() {
        let a2 = TypeA::new(2).unwrap();
        assert_eq!(
            a2.inversion_sequence(&[1, 2, 1]).unwrap(),
            vec![Root::simple(1), Root::interval(1, 2), Root::simple(2)]
        );
        assert_eq!(
            a2.inversion_sequence(&[2, 1, 2]).unwrap(),
            vec![Root::simple(2), Root::interval(1, 2), Root::simple(1)]
        );
        let a1 = TypeA::new(1).unwrap();
        assert_eq!(a1.inversion_sequence(&[1]).unwrap(), vec![Root::simple(1)]);
        assert!(!a1.is_reduced(&[1, 1]));
        assert!(a2.is_longest_word(&[1, 2, 1]));
    }
}
