//! Weight arithmetic: the dot action, pairings against coroots, typicality,
//! dominance classification, the hat involution and the highest-weight
//! partial order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::structure::RankContext;
use crate::weyl::WeylElem;
use crate::Rat;

/// A weight in the epsilon-basis of h*, with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight {
            coords: v.iter().map(|&x| Rat::from_integer(x)).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); n],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Coordinate on epsilon_i, 1-based.
    pub fn coord(&self, i: usize) -> Rat {
        self.coords[i - 1]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn coordinate_sum(&self) -> Rat {
        self.coords.iter().sum()
    }

    /// All pairwise coordinate differences are integers. This is the
    /// integrality condition against the even coroots.
    pub fn is_integral(&self) -> bool {
        match self.coords.first() {
            None => true,
            Some(first) => self.coords.iter().all(|c| (c - first).is_integer()),
        }
    }

    /// Every coordinate is an integer.
    pub fn is_integer(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates as i64s, or an error if any is fractional.
    pub fn to_ints(&self) -> Result<Vec<i64>> {
        if !self.is_integer() {
            return Err(Error::NonIntegerDifference);
        }
        Ok(self.coords.iter().map(|c| c.to_integer()).collect())
    }

    /// Parses a comma-separated list of rational literals ("p/q" or integer).
    pub fn parse(s: &str, n: usize) -> Result<Weight> {
        let coords: Result<Vec<Rat>> = s
            .split(',')
            .map(|tok| {
                Rat::from_str(tok.trim())
                    .map_err(|e| Error::Parse(format!("bad rational {tok:?}: {e}")))
            })
            .collect();
        let coords = coords?;
        if coords.len() != n {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                n,
                coords.len()
            )));
        }
        Ok(Weight { coords })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The shifted action w.lam = w(lam + rho) - rho.
pub fn dot_action(ctx: &RankContext, w: &WeylElem, lam: &Weight) -> Result<Weight> {
    if w.rank() != ctx.n() || lam.rank() != ctx.n() {
        return Err(Error::RankMismatch(w.rank(), lam.rank()));
    }
    let shifted = lam.add(ctx.rho());
    let permuted = Weight::new(w.permute(shifted.coords()));
    Ok(permuted.sub(ctx.rho()))
}

/// <lam, alpha_vee> with alpha_vee = 2 alpha / <alpha, alpha> under the
/// orthonormal form on the epsilon basis.
pub fn pairing(lam: &Weight, alpha: &Weight) -> Result<Rat> {
    if lam.rank() != alpha.rank() {
        return Err(Error::RankMismatch(lam.rank(), alpha.rank()));
    }
    let norm: Rat = alpha.coords().iter().map(|a| a * a).sum();
    if norm.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let ip: Rat = lam
        .coords()
        .iter()
        .zip(alpha.coords())
        .map(|(a, b)| a * b)
        .sum();
    Ok(ip * Rat::from_integer(2) / norm)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Typicality {
    Typical,
    Atypical,
}

/// Evaluates T(lam) = prod_{i<j} (lam_i - lam_j + j - i + 1)(lam_i - lam_j + j - i - 1).
/// The weight is typical exactly when the product is nonzero.
pub fn typicality(ctx: &RankContext, lam: &Weight) -> (Typicality, Rat) {
    let n = ctx.n();
    let mut t = Rat::from_integer(1);
    let one = Rat::from_integer(1);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let d = lam.coord(i) - lam.coord(j) + Rat::from_integer((j as i64) - (i as i64));
            t *= (d + one) * (d - one);
        }
    }
    let label = if t.is_zero() {
        Typicality::Atypical
    } else {
        Typicality::Typical
    };
    (label, t)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DominanceClass {
    Dominant,
    AntiDominant,
    Both,
    Neither,
}

pub fn dominance_class(ctx: &RankContext, lam: &Weight) -> DominanceClass {
    let shifted = lam.add(ctx.rho());
    let mut dominant = true;
    let mut anti = true;
    for alpha in ctx.even_positive_roots() {
        let p = pairing(&shifted, alpha).expect("even root is nonzero");
        if p.is_integer() {
            if p.is_positive() {
                anti = false;
            }
            if p.is_negative() {
                dominant = false;
            }
        }
    }
    match (dominant, anti) {
        (true, true) => DominanceClass::Both,
        (true, false) => DominanceClass::Dominant,
        (false, true) => DominanceClass::AntiDominant,
        (false, false) => DominanceClass::Neither,
    }
}

pub fn is_anti_dominant(ctx: &RankContext, lam: &Weight) -> bool {
    matches!(
        dominance_class(ctx, lam),
        DominanceClass::AntiDominant | DominanceClass::Both
    )
}

/// No repeated entry in lam + rho.
pub fn is_regular(ctx: &RankContext, lam: &Weight) -> bool {
    let shifted = lam.add(ctx.rho());
    let mut seen = shifted.coords().to_vec();
    seen.sort();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// The hat involution -w_0(lam): negate and reverse the coordinates.
pub fn hat(_ctx: &RankContext, lam: &Weight) -> Weight {
    let mut coords: Vec<Rat> = lam.coords().iter().map(|c| -c).collect();
    coords.reverse();
    Weight::new(coords)
}

/// Highest-weight partial order: mu <= lam iff lam - mu is a nonnegative
/// integer combination of {e_i - e_j : i < j} and {e_i + e_j : i <= j}.
pub fn order_leq(ctx: &RankContext, mu: &Weight, lam: &Weight) -> Result<bool> {
    if mu.rank() != lam.rank() || mu.rank() != ctx.n() {
        return Err(Error::RankMismatch(mu.rank(), lam.rank()));
    }
    let diff = lam.sub(mu);
    let d = diff.to_ints()?;
    let n = ctx.n();
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut g = vec![0i64; n];
            g[i] += 1;
            g[j] += 1;
            gens.push(g);
        }
    }
    let mut memo = HashMap::new();
    Ok(cone_member(&gens, d, &mut memo))
}

fn in_even_cone(d: &[i64]) -> bool {
    let mut acc = 0i64;
    for &x in d {
        acc += x;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

fn cone_member(gens: &[Vec<i64>], d: Vec<i64>, memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    let total: i64 = d.iter().sum();
    if total == 0 {
        return in_even_cone(&d);
    }
    if total < 0 || total % 2 != 0 {
        return false;
    }
    if let Some(&v) = memo.get(&d) {
        return v;
    }
    // Each remaining odd generator raises a prefix sum by at most 2.
    let mut acc = 0i64;
    let mut feasible = true;
    for &x in &d {
        acc += x;
        if acc < -total {
            feasible = false;
            break;
        }
    }
    let ans = feasible
        && gens.iter().any(|g| {
            let nd: Vec<i64> = d.iter().zip(g).map(|(a, b)| a - b).collect();
            cone_member(gens, nd, memo)
        });
    memo.insert(d, ans);
    ans
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::make_context;
    use crate::weyl;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn dot_action_examples() {
        let ctx = make_context(2).unwrap();
        let s1 = WeylElem::simple(2, 1).unwrap();
        let out = dot_action(&ctx, &s1, &w(&[0, 2])).unwrap();
        assert_eq!(out, w(&[1, 1]));

        let ctx3 = make_context(3).unwrap();
        let id = WeylElem::identity(3);
        let lam = w(&[-2, 1, 4]);
        assert_eq!(dot_action(&ctx3, &id, &lam).unwrap(), lam);
        // lam + rho = (0,2,4); swap the first two entries, subtract rho.
        let s1 = WeylElem::simple(3, 1).unwrap();
        assert_eq!(dot_action(&ctx3, &s1, &lam).unwrap(), w(&[0, -1, 4]));
    }

    #[test]
    fn pairing_examples() {
        let alpha = w(&[1, -1]);
        assert_eq!(
            pairing(&w(&[1, 2]), &alpha).unwrap(),
            Rat::from_integer(-1)
        );
        assert_eq!(pairing(&w(&[0, 0]), &alpha).unwrap(), Rat::zero());
        assert_eq!(pairing(&alpha, &alpha).unwrap(), Rat::from_integer(2));
        assert!(matches!(
            pairing(&w(&[1, 2]), &w(&[0, 0])),
            Err(Error::ZeroRoot)
        ));
    }

    #[test]
    fn typicality_examples() {
        let ctx = make_context(2).unwrap();
        let (t, val) = typicality(&ctx, &w(&[0, 2]));
        assert_eq!(t, Typicality::Atypical);
        assert!(val.is_zero());

        for n in 1..=6usize {
            let ctx = make_context(n).unwrap();
            let lam = ctx.distinguished_weight(n - 1).unwrap();
            assert_eq!(typicality(&ctx, &lam).0, Typicality::Typical);
        }

        let ctx3 = make_context(3).unwrap();
        assert_eq!(typicality(&ctx3, &w(&[-2, 1, 4])).0, Typicality::Typical);
    }

    #[test]
    fn dominance_examples() {
        let ctx3 = make_context(3).unwrap();
        assert_eq!(
            dominance_class(&ctx3, &w(&[-2, 0, 2])),
            DominanceClass::AntiDominant
        );
        let ctx2 = make_context(2).unwrap();
        assert_eq!(
            dominance_class(&ctx2, &w(&[0, 0])),
            DominanceClass::Dominant
        );
        let third = Weight::new(vec![Rat::new(1, 3), Rat::zero()]);
        assert_eq!(dominance_class(&ctx2, &third), DominanceClass::Both);
    }

    #[test]
    fn hat_examples() {
        let ctx = make_context(2).unwrap();
        assert_eq!(hat(&ctx, &w(&[3, -5])), w(&[5, -3]));
        assert_eq!(hat(&ctx, &w(&[0, 0])), w(&[0, 0]));
        let lam = w(&[7, -2]);
        assert_eq!(hat(&ctx, &hat(&ctx, &lam)), lam);
    }

    #[test]
    fn order_leq_examples() {
        let ctx = make_context(2).unwrap();
        assert!(order_leq(&ctx, &w(&[0, 2]), &w(&[1, 1])).unwrap());
        assert!(order_leq(&ctx, &w(&[0, 0]), &w(&[1, 1])).unwrap());
        assert!(!order_leq(&ctx, &w(&[2, 0]), &w(&[1, 1])).unwrap());
        assert!(matches!(
            order_leq(&ctx, &Weight::new(vec![Rat::new(1, 2), Rat::zero()]), &w(&[0, 0])),
            Err(Error::NonIntegerDifference)
        ));
    }

    #[test]
    fn anti_dominance_matches_pairing_definition() {
        let ctx = make_context(3).unwrap();
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                for c in -2..=2i64 {
                    let lam = w(&[a, b, c]);
                    let shifted = lam.add(ctx.rho());
                    let by_def = ctx.even_positive_roots().iter().all(|al| {
                        let p = pairing(&shifted, al).unwrap();
                        !(p.is_integer() && p.is_positive())
                    });
                    assert_eq!(is_anti_dominant(&ctx, &lam), by_def);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn dot_action_is_a_group_action(
            n in 2usize..=5,
            seed_w in proptest::collection::vec(0usize..100, 8),
            seed_v in proptest::collection::vec(0usize..100, 8),
            coords in proptest::collection::vec(-6i64..=6, 8),
        ) {
            let ctx = make_context(n).unwrap();
            let word_w: Vec<usize> = seed_w.iter().map(|x| 1 + x % (n - 1)).collect();
            let word_v: Vec<usize> = seed_v.iter().map(|x| 1 + x % (n - 1)).collect();
            let w1 = weyl::from_reduced_word(n, &word_w).unwrap();
            let w2 = weyl::from_reduced_word(n, &word_v).unwrap();
            let lam = Weight::from_ints(&coords[..n]);
            let lhs = dot_action(&ctx, &w1.compose(&w2).unwrap(), &lam).unwrap();
            let rhs = dot_action(&ctx, &w1, &dot_action(&ctx, &w2, &lam).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn typicality_is_dot_invariant(
            n in 2usize..=5,
            seed_w in proptest::collection::vec(0usize..100, 6),
            coords in proptest::collection::vec(-5i64..=5, 8),
        ) {
            let ctx = make_context(n).unwrap();
            let word: Vec<usize> = seed_w.iter().map(|x| 1 + x % (n - 1)).collect();
            let w1 = weyl::from_reduced_word(n, &word).unwrap();
            let lam = Weight::from_ints(&coords[..n]);
            let moved = dot_action(&ctx, &w1, &lam).unwrap();
            prop_assert_eq!(typicality(&ctx, &lam).0, typicality(&ctx, &moved).0);
        }

        #[test]
        fn order_leq_is_reflexive_and_antisymmetric(
            a in proptest::collection::vec(-3i64..=3, 3),
            b in proptest::collection::vec(-3i64..=3, 3),
        ) {
            let ctx = make_context(3).unwrap();
            let mu = Weight::from_ints(&a);
            let lam = Weight::from_ints(&b);
            prop_assert!(order_leq(&ctx, &mu, &mu).unwrap());
            if mu != lam
                && order_leq(&ctx, &mu, &lam).unwrap()
            {
                prop_assert!(!order_leq(&ctx, &lam, &mu).unwrap());
            }
        }
    }

    #[test]
    fn order_leq_transitive_spot_checks() {
        let ctx = make_context(3).unwrap();
        let lam = w(&[2, 1, 1]);
        let mid = w(&[1, 1, 0]);
        let lo = w(&[0, 0, 0]);
        assert!(order_leq(&ctx, &mid, &lam).unwrap());
        assert!(order_leq(&ctx, &lo, &mid).unwrap());
        assert!(order_leq(&ctx, &lo, &lam).unwrap());
    }
}
