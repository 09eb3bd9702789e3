//! Immutable structural data of pe(n): root lists, the shifted Weyl vector,
//! the all-ones weight and the distinguished block representatives.

use num::Zero;

use crate::error::{Error, Result};
use crate::weights::Weight;
use crate::Rat;

/// Rank-n structural data, immutable after construction.
#[derive(Clone, Debug)]
pub struct RankContext {
    n: usize,
    rho: Weight,
    omega: Weight,
    even_positive_roots: Vec<Weight>,
    odd_roots_plus: Vec<Weight>,
    odd_roots_minus: Vec<Weight>,
}

/// Builds the rank-n context. Root lists are ordered lexicographically by
/// (i, j) so downstream output is deterministic.
pub fn make_context(n: usize) -> Result<RankContext> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let rho = Weight::new(
        (0..n)
            .map(|i| Rat::from_integer((n - 1 - i) as i64))
            .collect(),
    );
    let omega = Weight::from_ints(&vec![1i64; n]);

    let eps = |i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i - 1] = Rat::from_integer(1);
        v
    };
    let pair = |i: usize, j: usize, sign: i64| -> Weight {
        let mut v = eps(i);
        for (k, x) in eps(j).into_iter().enumerate() {
            v[k] += x;
        }
        Weight::new(v).scale(Rat::from_integer(sign))
    };

    let mut even_positive_roots = Vec::new();
    let mut odd_roots_plus = Vec::new();
    let mut odd_roots_minus = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i < j {
                let mut v = eps(i);
                for (k, x) in eps(j).into_iter().enumerate() {
                    v[k] -= x;
                }
                even_positive_roots.push(Weight::new(v));
                odd_roots_minus.push(pair(i, j, -1));
            }
            odd_roots_plus.push(pair(i, j, 1));
        }
    }

    Ok(RankContext {
        n,
        rho,
        omega,
        even_positive_roots,
        odd_roots_plus,
        odd_roots_minus,
    })
}

impl RankContext {
    pub fn n(&self) -> usize {
        self.n
    }

    /// rho = (n-1, n-2, ..., 1, 0).
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// omega = (1, 1, ..., 1).
    pub fn omega(&self) -> &Weight {
        &self.omega
    }

    /// {e_i - e_j : i < j}.
    pub fn even_positive_roots(&self) -> &[Weight] {
        &self.even_positive_roots
    }

    /// Roots of g_1: {e_i + e_j : i <= j}, including 2e_i.
    pub fn odd_roots_plus(&self) -> &[Weight] {
        &self.odd_roots_plus
    }

    /// Roots of g_{-1}: {-(e_i + e_j) : i < j}. No -2e_i terms.
    pub fn odd_roots_minus(&self) -> &[Weight] {
        &self.odd_roots_minus
    }

    /// The i-th distinguished weight (i, i-1, ..., 1, 0, ..., 0), 0 <= i <= n.
    pub fn distinguished_weight(&self, i: usize) -> Result<Weight> {
        if i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(Weight::new(
            (0..self.n)
                .map(|k| {
                    if k < i {
                        Rat::from_integer((i - k) as i64)
                    } else {
                        Rat::zero()
                    }
                })
                .collect(),
        ))
    }

    /// The i-th simple even root e_i - e_{i+1}, 1 <= i <= n-1.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mut v = vec![Rat::zero(); self.n];
        v[i - 1] = Rat::from_integer(1);
        v[i] = Rat::from_integer(-1);
        Ok(Weight::new(v))
    }
}
