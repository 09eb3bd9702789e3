//! Kazhdan-Lusztig polynomials for the symmetric group, computed by the
//! classical length recursion with a shared memo, plus the Verma/simple
//! basis-change expansions of a regular integral g0-block.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, BufWriter, Write as IoWrite};
use std::path::Path;
use std::sync::Mutex;

use crate::characters::{BasisTag, GClass};
use crate::error::{Error, Result};
use crate::structure::RankContext;
use crate::weights::{self, Weight};
use crate::weyl::{self, WeylElem};

/// An integer polynomial in q, coefficients in ascending powers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KlPoly {
    coeffs: Vec<i64>,
}

impl KlPoly {
    pub fn zero() -> Self {
        KlPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        KlPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        KlPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &KlPoly) -> KlPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        KlPoly::from_coeffs((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &KlPoly) -> KlPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> KlPoly {
        KlPoly::from_coeffs(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: usize) -> KlPoly {
        if self.is_zero() {
            return KlPoly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        KlPoly { coeffs }
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "q")?,
                1 => write!(f, "{c}q")?,
                _ if c == 1 => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

const CACHE_HEADER: &str = "peo-klcache 1";

/// Memoized Kazhdan-Lusztig polynomial table for one symmetric group rank.
/// The memo behaves as a single logical map under concurrent access.
pub struct KlTable {
    n: usize,
    memo: Mutex<HashMap<(WeylElem, WeylElem), KlPoly>>,
    elements: Vec<WeylElem>,
}

impl KlTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(KlTable {
            n,
            memo: Mutex::new(HashMap::new()),
            elements: weyl::all_elements(n),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// P_{x,y}; the zero polynomial when x is not below y in Bruhat order.
    pub fn polynomial(&self, x: &WeylElem, y: &WeylElem) -> Result<KlPoly> {
        if x.rank() != self.n || y.rank() != self.n {
            return Err(Error::RankMismatch(x.rank(), y.rank()));
        }
        if !weyl::bruhat_leq(x, y)? {
            return Ok(KlPoly::zero());
        }
        if x == y {
            return Ok(KlPoly::one());
        }
        if let Some(p) = self.memo.lock().unwrap().get(&(x.clone(), y.clone())) {
            return Ok(p.clone());
        }
        let i = (1..self.n)
            .find(|&i| y.has_right_descent(i))
            .expect("y is not the identity");
        let p = if !x.has_right_descent(i) {
            // P_{x,y} = P_{xs,y} when ys < y and xs > x.
            self.polynomial(&x.mul_simple_right(i), y)?
        } else {
            let ys = y.mul_simple_right(i);
            let xs = x.mul_simple_right(i);
            let mut p = self
                .polynomial(&xs, &ys)?
                .add(&self.polynomial(x, &ys)?.shift(1));
            for z in &self.elements {
                if !z.has_right_descent(i)
                    || !weyl::bruhat_leq(x, z)?
                    || !weyl::bruhat_leq(z, &ys)?
                {
                    continue;
                }
                let m = self.mu(z, &ys)?;
                if m != 0 {
                    let e = (y.length() - z.length()) / 2;
                    p = p.sub(&self.polynomial(x, z)?.shift(e).scale(m));
                }
            }
            p
        };
        self.memo
            .lock()
            .unwrap()
            .insert((x.clone(), y.clone()), p.clone());
        Ok(p)
    }

    /// The mu coefficient: coefficient of q^((l(y)-l(x)-1)/2) in P_{x,y}.
    pub fn mu(&self, x: &WeylElem, y: &WeylElem) -> Result<i64> {
        if x == y || !weyl::bruhat_leq(x, y)? {
            return Ok(0);
        }
        let d = y.length() - x.length();
        if d % 2 == 0 {
            return Ok(0);
        }
        Ok(self.polynomial(x, y)?.coeff((d - 1) / 2))
    }

    /// Writes every memoized record to a versioned cache file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        let mut out = BufWriter::new(file);
        writeln!(out, "{CACHE_HEADER}")?;
        let memo = self.memo.lock().unwrap();
        for ((x, y), p) in memo.iter() {
            let fmt_perm = |w: &WeylElem| {
                w.images()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            let coeffs = if p.is_zero() {
                "-".to_string()
            } else {
                p.coeffs()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(out, "{} {} {} {}", self.n, fmt_perm(x), fmt_perm(y), coeffs)?;
        }
        Ok(())
    }

    /// Loads records for this table's rank; records at other ranks are
    /// skipped. Malformed files are rejected.
    pub fn load(&self, path: &Path) -> Result<usize> {
        let file = std::fs::File::open(path)?;
        let mut lines = std::io::BufReader::new(file).lines();
        match lines.next() {
            Some(Ok(header)) if header == CACHE_HEADER => {}
            _ => return Err(Error::Parse("bad cache header".into())),
        }
        let parse_perm = |s: &str| -> Result<WeylElem> {
            let images: std::result::Result<Vec<usize>, _> =
                s.split(',').map(|t| t.parse::<usize>()).collect();
            WeylElem::from_images(
                images.map_err(|e| Error::Parse(format!("bad permutation: {e}")))?,
            )
        };
        let mut loaded = 0usize;
        let mut memo = self.memo.lock().unwrap();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::Parse(format!("bad cache record: {line}")));
            }
            let n: usize = fields[0]
                .parse()
                .map_err(|e| Error::Parse(format!("bad rank: {e}")))?;
            if n != self.n {
                continue;
            }
            let x = parse_perm(fields[1])?;
            let y = parse_perm(fields[2])?;
            let poly = if fields[3] == "-" {
                KlPoly::zero()
            } else {
                let coeffs: std::result::Result<Vec<i64>, _> =
                    fields[3].split(',').map(|t| t.parse::<i64>()).collect();
                KlPoly::from_coeffs(
                    coeffs.map_err(|e| Error::Parse(format!("bad coefficients: {e}")))?,
                )
            };
            memo.insert((x, y), poly);
            loaded += 1;
        }
        Ok(loaded)
    }
}

/// Checks that base is an anti-dominant regular integral base point:
/// base + rho strictly increasing with integer pairwise differences.
pub fn check_base(ctx: &RankContext, base: &Weight) -> Result<()> {
    if base.rank() != ctx.n() {
        return Err(Error::RankMismatch(base.rank(), ctx.n()));
    }
    if !base.is_integral() {
        return Err(Error::Unsupported("base point must be integral".into()));
    }
    let shifted = base.add(ctx.rho());
    if !shifted.coords().windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Unsupported(
            "base point must be anti-dominant and regular".into(),
        ));
    }
    Ok(())
}

/// The Weyl element w with mu = w . base, for a regular integral base.
pub fn orbit_element(ctx: &RankContext, base: &Weight, mu: &Weight) -> Result<WeylElem> {
    check_base(ctx, base)?;
    if mu.rank() != ctx.n() {
        return Err(Error::RankMismatch(mu.rank(), ctx.n()));
    }
    let b = base.add(ctx.rho());
    let t = mu.add(ctx.rho());
    let mut images = Vec::with_capacity(ctx.n());
    for bi in b.coords() {
        match t.coords().iter().position(|ti| ti == bi) {
            Some(j) => images.push(j + 1),
            None => {
                return Err(Error::Unsupported(format!(
                    "weight {mu} is not in the dot orbit of {base}"
                )))
            }
        }
    }
    WeylElem::from_images(images)
}

/// Sorts lam into its anti-dominant orbit representative and the Weyl
/// element carrying the representative to lam.
pub fn orbit_decomposition(ctx: &RankContext, lam: &Weight) -> Result<(Weight, WeylElem)> {
    let mut shifted = lam.add(ctx.rho()).coords().to_vec();
    shifted.sort();
    let base = Weight::new(shifted).sub(ctx.rho());
    let w = orbit_element(ctx, &base, lam)?;
    Ok((base, w))
}

/// [L(w.base)] = sum over x <= w of (-1)^(l(w)-l(x)) P_{x,w}(1) [M(x.base)].
pub fn simple_in_verma(
    table: &KlTable,
    ctx: &RankContext,
    base: &Weight,
    w: &WeylElem,
) -> Result<GClass> {
    expand(table, ctx, base, w, BasisTag::VermaG0, true)
}

/// [M(w.base)] = sum over x <= w of P_{w0 w, w0 x}(1) [L(x.base)]: the
/// inverse of the alternating expansion, per the Kazhdan-Lusztig inversion
/// formula.
pub fn verma_in_simple(
    table: &KlTable,
    ctx: &RankContext,
    base: &Weight,
    w: &WeylElem,
) -> Result<GClass> {
    expand(table, ctx, base, w, BasisTag::SimpleG0, false)
}

fn expand(
    table: &KlTable,
    ctx: &RankContext,
    base: &Weight,
    w: &WeylElem,
    target: BasisTag,
    alternating: bool,
) -> Result<GClass> {
    check_base(ctx, base)?;
    if w.rank() != ctx.n() || table.rank() != ctx.n() {
        return Err(Error::RankMismatch(w.rank(), ctx.n()));
    }
    let w0 = weyl::longest_element(ctx.n());
    let mut out = GClass::empty(target, ctx.n());
    for x in &table.elements {
        if !weyl::bruhat_leq(x, w)? {
            continue;
        }
        let c = if alternating {
            let p = table.polynomial(x, w)?.eval_at_one();
            if (w.length() - x.length()) % 2 == 1 {
                -p
            } else {
                p
            }
        } else {
            table
                .polynomial(&w0.compose(w)?, &w0.compose(x)?)?
                .eval_at_one()
        };
        out.add_term(weights::dot_action(ctx, x, base)?, c);
    }
    Ok(out)
}
