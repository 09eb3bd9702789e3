//! Grothendieck-group classes: integer combinations of basis symbols indexed
//! by weights, the expansion of a super Verma module into g0-Vermas, basis
//! conversion through the Kazhdan-Lusztig matrices, and truncated weight
//! multiplicities via Kostant partition counting.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::kl::{self, KlTable};
use crate::structure::RankContext;
use crate::weights::{self, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisTag {
    VermaG0,
    SimpleG0,
    VermaSuper,
    KacSimple,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::VermaG0 => "verma-g0",
            BasisTag::SimpleG0 => "simple-g0",
            BasisTag::VermaSuper => "verma-super",
            BasisTag::KacSimple => "kac-simple",
        };
        write!(f, "{s}")
    }
}

/// A finite integer-linear combination of basis symbols indexed by weights.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GClass {
    basis: BasisTag,
    n: usize,
    terms: BTreeMap<Weight, i64>,
}

impl GClass {
    pub fn empty(basis: BasisTag, n: usize) -> Self {
        GClass {
            basis,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: BasisTag, weight: Weight, coeff: i64) -> Self {
        let mut cls = GClass::empty(basis, weight.rank());
        cls.add_term(weight, coeff);
        cls
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, weight: &Weight) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    /// Total coefficient mass (sum of coefficients with sign).
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, weight: Weight, coeff: i64) {
        assert_eq!(weight.rank(), self.n);
        let new = self.terms.get(&weight).copied().unwrap_or(0) + coeff;
        if new == 0 {
            self.terms.remove(&weight);
        } else {
            self.terms.insert(weight, new);
        }
    }

    pub fn scaled(&self, c: i64) -> GClass {
        if c == 0 {
            return GClass::empty(self.basis, self.n);
        }
        GClass {
            basis: self.basis,
            n: self.n,
            terms: self.terms.iter().map(|(w, &k)| (w.clone(), k * c)).collect(),
        }
    }
}

/// Integer-linear combination ca*a + cb*b; the basis tags must agree.
pub fn combine(a: &GClass, b: &GClass, scalars: (i64, i64)) -> Result<GClass> {
    if a.basis != b.basis {
        return Err(Error::BasisMismatch(a.basis.to_string(), b.basis.to_string()));
    }
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    let mut out = GClass::empty(a.basis, a.n);
    for (w, c) in a.terms() {
        out.add_term(w.clone(), c * scalars.0);
    }
    for (w, c) in b.terms() {
        out.add_term(w.clone(), c * scalars.1);
    }
    Ok(out)
}

/// ch of the super Verma module in the g0-Verma basis: one term per subset of
/// the g_{-1} roots, with coefficients accumulated on subset-sum collisions.
pub fn verma_super_expand(ctx: &RankContext, lam: &Weight) -> Result<GClass> {
    let roots = ctx.odd_roots_minus();
    let bits = roots.len();
    if bits > 22 {
        return Err(Error::Unsupported(format!(
            "super Verma expansion has 2^{bits} terms; rank too large"
        )));
    }
    let mut out = GClass::empty(BasisTag::VermaG0, ctx.n());
    for mask in 0u64..(1 << bits) {
        let mut w = lam.clone();
        for (k, root) in roots.iter().enumerate() {
            if mask & (1 << k) != 0 {
                w = w.add(root);
            }
        }
        out.add_term(w, 1);
    }
    Ok(out)
}

/// Applies the super Verma expansion termwise to a g0-Verma class: the
/// character effect of Kac induction.
pub fn kac_expand_class(ctx: &RankContext, cls: &GClass) -> Result<GClass> {
    if cls.basis() != BasisTag::VermaG0 {
        return Err(Error::BasisMismatch(
            cls.basis().to_string(),
            BasisTag::VermaG0.to_string(),
        ));
    }
    let mut out = GClass::empty(BasisTag::VermaG0, cls.rank());
    for (w, c) in cls.terms() {
        let exp = verma_super_expand(ctx, w)?;
        out = combine(&out, &exp, (1, c))?;
    }
    Ok(out)
}

/// ch K(L(mu)) in the g0-Verma basis. Licensed for anti-dominant mu (where
/// L(mu) = M(mu)) and for regular mu via the Kazhdan-Lusztig expansion.
pub fn kac_simple_expand(
    table: &KlTable,
    ctx: &RankContext,
    mu: &Weight,
) -> Result<GClass> {
    if weights::is_anti_dominant(ctx, mu) {
        return verma_super_expand(ctx, mu);
    }
    if !mu.is_integral() || !weights::is_regular(ctx, mu) {
        return Err(Error::Unsupported(
            "Kac-simple expansion needs an anti-dominant or regular integral weight".into(),
        ));
    }
    let (base, w) = kl::orbit_decomposition(ctx, mu)?;
    let g0 = kl::simple_in_verma(table, ctx, &base, &w)?;
    kac_expand_class(ctx, &g0)
}

/// Basis change between the g0-Verma and g0-simple bases of a regular
/// integral block with anti-dominant base point.
pub fn convert(
    table: &KlTable,
    ctx: &RankContext,
    cls: &GClass,
    target: BasisTag,
    base: &Weight,
) -> Result<GClass> {
    let source = cls.basis();
    let supported = |t: BasisTag| matches!(t, BasisTag::VermaG0 | BasisTag::SimpleG0);
    if !supported(source) || !supported(target) {
        return Err(Error::Unsupported(
            "conversion is defined between the g0-Verma and g0-simple bases".into(),
        ));
    }
    if source == target {
        return Ok(cls.clone());
    }
    let mut out = GClass::empty(target, cls.rank());
    for (mu, c) in cls.terms() {
        let w = kl::orbit_element(ctx, base, mu)?;
        let expanded = match target {
            BasisTag::SimpleG0 => kl::verma_in_simple(table, ctx, base, &w)?,
            BasisTag::VermaG0 => kl::simple_in_verma(table, ctx, base, &w)?,
            _ => unreachable!(),
        };
        out = combine(&out, &expanded, (1, c))?;
    }
    Ok(out)
}

/// Kostant partition counting with a memo keyed by the difference vector.
/// Counts decompositions into nonnegative combinations of {e_i - e_j : i < j}.
pub struct KostantCounter {
    n: usize,
    memo: Mutex<HashMap<(usize, Vec<i64>), u64>>,
}

impl KostantCounter {
    pub fn new(n: usize) -> Self {
        KostantCounter {
            n,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn count(&self, diff: &Weight) -> Result<u64> {
        if diff.rank() != self.n {
            return Err(Error::RankMismatch(diff.rank(), self.n));
        }
        let v = diff.to_ints()?;
        Ok(self.count_suffix(0, v))
    }

    // count_suffix(k, d): d is the adjusted remaining vector on coordinates
    // k..n-1, where d[0] is the amount that must flow out of coordinate k.
    fn count_suffix(&self, k: usize, d: Vec<i64>) -> u64 {
        if k + 1 == self.n || d.len() == 1 {
            return u64::from(d.iter().all(|&x| x == 0));
        }
        let out = d[0];
        if out < 0 {
            return 0;
        }
        if let Some(&v) = self.memo.lock().unwrap().get(&(k, d.clone())) {
            return v;
        }
        let rest = &d[1..];
        let mut total = 0u64;
        // Distribute `out` units among the later coordinates.
        let mut comp = vec![0i64; rest.len()];
        total += self.distribute(k, rest, &mut comp, 0, out);
        self.memo.lock().unwrap().insert((k, d), total);
        total
    }

    fn distribute(&self, k: usize, rest: &[i64], comp: &mut Vec<i64>, idx: usize, left: i64) -> u64 {
        if idx + 1 == comp.len() {
            comp[idx] = left;
            let next: Vec<i64> = rest.iter().zip(comp.iter()).map(|(a, b)| a + b).collect();
            comp[idx] = 0;
            return self.count_suffix(k + 1, next);
        }
        let mut total = 0u64;
        for take in 0..=left {
            comp[idx] = take;
            total += self.distribute(k, rest, comp, idx + 1, left - take);
        }
        comp[idx] = 0;
        total
    }
}

/// Truncated weight multiplicity of a g0-Verma class at nu:
/// sum over terms of coeff * K(mu - nu).
pub fn weight_multiplicity(
    counter: &KostantCounter,
    cls: &GClass,
    nu: &Weight,
) -> Result<i64> {
    if cls.basis() != BasisTag::VermaG0 {
        return Err(Error::BasisMismatch(
            cls.basis().to_string(),
            BasisTag::VermaG0.to_string(),
        ));
    }
    let mut total = 0i64;
    for (mu, c) in cls.terms() {
        let k = counter.count(&mu.sub(nu))? as i64;
        total += c * k;
    }
    Ok(total)
}
