//! Block classification of integral weights: the complete invariant is the
//! multiset of entries of lam + rho reduced mod 2, since Weyl dot moves
//! permute the entries and the +-2e_k moves shift one entry by 2.

use std::collections::BTreeSet;

use num::Zero;

use crate::error::{Error, Result};
use crate::structure::RankContext;
use crate::weights::Weight;
use crate::Rat;

/// Canonical block invariant of an integral weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BlockKey {
    n: usize,
    residues: Vec<Rat>,
    coset: Rat,
    atypical: bool,
    partial_index: Option<usize>,
}

impl BlockKey {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Sorted multiset of lam + rho entries reduced to [0, 2).
    pub fn residues(&self) -> &[Rat] {
        &self.residues
    }

    /// Common residue class mod 1 of the entries, in [0, 1).
    pub fn coset(&self) -> Rat {
        self.coset
    }

    pub fn atypical(&self) -> bool {
        self.atypical
    }

    /// i such that this is the key of the distinguished weight
    /// i e_1 + (i-1) e_2 + ...; populated only for integer-coset keys.
    pub fn partial_index(&self) -> Option<usize> {
        self.partial_index
    }
}

fn mod2(x: Rat) -> Rat {
    let two = Rat::from_integer(2);
    x - two * (x / two).floor()
}

pub fn block_key(ctx: &RankContext, lam: &Weight) -> Result<BlockKey> {
    if lam.rank() != ctx.n() {
        return Err(Error::RankMismatch(lam.rank(), ctx.n()));
    }
    if !lam.is_integral() {
        return Err(Error::NonIntegral);
    }
    let shifted = lam.add(ctx.rho());
    let mut residues: Vec<Rat> = shifted.coords().iter().map(|&c| mod2(c)).collect();
    residues.sort();
    let coset = residues
        .first()
        .map(|r| r - r.floor())
        .unwrap_or_else(Rat::zero);
    let atypical = residues.iter().any(|a| {
        residues
            .iter()
            .any(|b| (a - b) == Rat::from_integer(1) || (b - a) == Rat::from_integer(1))
    });
    let partial_index = if coset.is_zero() {
        // Integer residues lie in {0, 1}; the count of odd entries matches
        // exactly one distinguished weight.
        let odd = residues
            .iter()
            .filter(|r| **r == Rat::from_integer(1))
            .count();
        (0..=ctx.n()).find(|&i| {
            let d = ctx.distinguished_weight(i).expect("i in range");
            let ds = d.add(ctx.rho());
            let d_odd = ds
                .coords()
                .iter()
                .filter(|c| mod2(**c) == Rat::from_integer(1))
                .count();
            d_odd == odd
        })
    } else {
        None
    };
    Ok(BlockKey {
        n: ctx.n(),
        residues,
        coset,
        atypical,
        partial_index,
    })
}

pub fn same_block(ctx: &RankContext, lam: &Weight, mu: &Weight) -> Result<bool> {
    Ok(block_key(ctx, lam)? == block_key(ctx, mu)?)
}

pub fn block_atypical(key: &BlockKey) -> bool {
    key.atypical
}

/// Distinct keys of integer-coordinate weights in the box [-radius, radius]^n.
pub fn census(ctx: &RankContext, radius: i64) -> Result<Vec<BlockKey>> {
    let n = ctx.n();
    let mut keys = BTreeSet::new();
    let mut coords = vec![-radius; n];
    loop {
        keys.insert(block_key(ctx, &Weight::from_ints(&coords))?);
        let mut k = 0;
        loop {
            if k == n {
                return Ok(keys.into_iter().collect());
            }
            coords[k] += 1;
            if coords[k] <= radius {
                break;
            }
            coords[k] = -radius;
            k += 1;
        }
    }
}
