//! Test-only oracles, independent of the library's recursions: a Hecke
//! algebra over Laurent polynomials in v (q = v^2) whose canonical basis
//! yields Kazhdan-Lusztig polynomials by direct multiplication, and a BFS
//! reachability oracle for block equivalence.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use peo::structure::RankContext;
use peo::weights::{dot_action, Weight};
use peo::weyl::{all_elements, WeylElem};

/// Integer Laurent polynomial in v; coeffs[k] is the coefficient of
/// v^(lo + k).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent {
    lo: i64,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { lo: 0, coeffs: vec![] }
    }

    pub fn monomial(c: i64, exp: i64) -> Self {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent { lo: exp, coeffs: vec![c] }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        while self.coeffs.first() == Some(&0) {
            self.coeffs.remove(0);
            self.lo += 1;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        if exp < self.lo {
            return 0;
        }
        self.coeffs.get((exp - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let coeffs = (lo..hi).map(|e| self.coeff(e) + other.coeff(e)).collect();
        Laurent { lo, coeffs }.trim()
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let lo = self.lo + other.lo;
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent { lo, coeffs }.trim()
    }
}

/// Hecke algebra element in the T-basis.
#[derive(Clone, Debug)]
pub struct HeckeElt {
    pub terms: BTreeMap<WeylElem, Laurent>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        HeckeElt { terms: BTreeMap::new() }
    }

    pub fn unit(w: WeylElem) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Laurent::monomial(1, 0));
        HeckeElt { terms }
    }

    fn add_term(&mut self, w: WeylElem, c: Laurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Laurent::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            let entry = out.terms.entry(w.clone()).or_insert_with(Laurent::zero);
            *entry = entry.add(c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, a) in &self.terms {
            let prod = a.mul(c);
            if !prod.is_zero() {
                out.terms.insert(w.clone(), prod);
            }
        }
        out
    }

    /// Right multiplication by T_s: T_w T_s = T_{ws} if ws > w, else
    /// q T_{ws} + (q - 1) T_w with q = v^2.
    pub fn mul_ts(&self, i: usize) -> HeckeElt {
        let q = Laurent::monomial(1, 2);
        let q_minus_1 = q.add(&Laurent::monomial(-1, 0));
        let mut out = HeckeElt::zero();
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            if ws.length() > w.length() {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.mul(&q));
                out.add_term(w.clone(), c.mul(&q_minus_1));
            }
        }
        out
    }

    /// Right multiplication by C'_s = v^{-1} (T_s + T_e).
    pub fn mul_cs(&self, i: usize) -> HeckeElt {
        let v_inv = Laurent::monomial(1, -1);
        self.mul_ts(i).add(self).scale(&v_inv)
    }
}

/// All canonical basis elements C'_w for the Hecke algebra of S_n, computed
/// by the defining algorithm: multiply C'_{ws} by C'_s, then strip the lower
/// canonical terms (their coefficients read off at v^{-l(z)}).
pub fn canonical_basis(n: usize) -> HashMap<WeylElem, HeckeElt> {
    let mut elems = all_elements(n);
    elems.sort_by_key(|w| w.length());
    let mut basis: HashMap<WeylElem, HeckeElt> = HashMap::new();
    for w in elems {
        if w.is_identity() {
            basis.insert(w.clone(), HeckeElt::unit(w));
            continue;
        }
        let i = (1..n).find(|&i| w.has_right_descent(i)).unwrap();
        let ws = w.mul_simple_right(i);
        let mut x = basis[&ws].clone().mul_cs(i);
        // Strip lower terms in decreasing length order; each m_z is the
        // v^{-l(z)} coefficient of T_z, which only C'_z itself contributes
        // at that depth once longer corrections are gone.
        let mut lower: Vec<WeylElem> = x
            .terms
            .keys()
            .filter(|z| **z != w)
            .cloned()
            .collect();
        lower.sort_by_key(|z| std::cmp::Reverse(z.length()));
        for z in lower {
            let m = x
                .terms
                .get(&z)
                .map(|c| c.coeff(-(z.length() as i64)))
                .unwrap_or(0);
            if m != 0 {
                x = x.add(&basis[&z].scale(&Laurent::monomial(-m, 0)));
            }
        }
        basis.insert(w, x);
    }
    basis
}

/// P_{x,y} coefficients (ascending in q) read from the canonical basis:
/// the T_x coefficient of C'_y is v^{-l(y)} P_{x,y}(v^2).
pub fn kl_from_canonical(basis: &HashMap<WeylElem, HeckeElt>, x: &WeylElem, y: &WeylElem) -> Vec<i64> {
    let c = match basis[y].terms.get(x) {
        Some(c) => c.clone(),
        None => return vec![],
    };
    let l = y.length() as i64;
    let mut out = Vec::new();
    let mut exp = -l;
    loop {
        let a = c.coeff(exp);
        let hi = c.lo + c.coeffs.len() as i64;
        if exp >= hi {
            break;
        }
        out.push(a);
        // Only even shifts can be populated (powers of q).
        assert_eq!(c.coeff(exp + 1), 0, "odd power of v in P");
        exp += 2;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// BFS reachability inside a box under the block-equivalence generator
/// moves: simple dot reflections and +-2 e_k shifts.
// Shared across integration-test binaries; not every binary uses every oracle.
#[allow(dead_code)]
pub fn bfs_same_block(
    ctx: &RankContext,
    start: &Weight,
    target: &Weight,
    radius: i64,
    padding: i64,
) -> bool {
    let n = ctx.n();
    let bound = radius + padding;
    let in_box = |w: &Weight| {
        w.coords().iter().all(|c| {
            *c >= peo::Rat::from_integer(-bound) && *c <= peo::Rat::from_integer(bound)
        })
    };
    if !in_box(start) || !in_box(target) {
        return false;
    }
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(cur) = queue.pop_front() {
        if &cur == target {
            return true;
        }
        let mut nexts = Vec::new();
        for i in 1..n {
            let s = WeylElem::simple(n, i).unwrap();
            nexts.push(dot_action(ctx, &s, &cur).unwrap());
        }
        for k in 0..n {
            for sign in [2i64, -2] {
                let mut shift = vec![0i64; n];
                shift[k] = sign;
                nexts.push(cur.add(&Weight::from_ints(&shift)));
            }
        }
        for nx in nexts {
            if in_box(&nx) && seen.insert(nx.clone()) {
                queue.push_back(nx);
            }
        }
    }
    false
}
