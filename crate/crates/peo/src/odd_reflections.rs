//! The fixed chain of Borel subalgebras connecting b^r to b, the transport of
//! highest weights along it, and the socle of a Kac module read off from the
//! reverse chain.

use crate::error::Result;
use crate::structure::RankContext;
use crate::weights::Weight;
use crate::Rat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepKind {
    OddReflection,
    Inclusion,
}

/// One step of the Borel chain: the odd root alpha = e_p + e_q (p <= q) and
/// its kind (inclusion exactly when p = q).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainStep {
    pub alpha: Weight,
    pub kind: StepKind,
    pub p: usize,
    pub q: usize,
}

/// One step of a highest-weight transport: the chain step plus the weight
/// after the step (unchanged unless an odd reflection fires).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub alpha: Weight,
    pub kind: StepKind,
    pub weight_after: Weight,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddReflectionTrace {
    pub start: Weight,
    pub end: Weight,
    pub steps: Vec<TraceStep>,
}

/// The chain of n(n+1)/2 odd roots: for q = 1..n, the roots e_p + e_q with
/// p = 1..q, so 2e_1, e_1+e_2, 2e_2, e_1+e_3, e_2+e_3, 2e_3, ...
pub fn borel_chain(ctx: &RankContext) -> Vec<ChainStep> {
    let n = ctx.n();
    let mut steps = Vec::with_capacity(n * (n + 1) / 2);
    for q in 1..=n {
        for p in 1..=q {
            let mut coords = vec![Rat::from_integer(0); n];
            coords[p - 1] += Rat::from_integer(1);
            coords[q - 1] += Rat::from_integer(1);
            steps.push(ChainStep {
                alpha: Weight::new(coords),
                kind: if p == q {
                    StepKind::Inclusion
                } else {
                    StepKind::OddReflection
                },
                p,
                q,
            });
        }
    }
    steps
}

/// Transports a b^r-highest weight to the b-highest weight of the same
/// simple module: at each odd reflection e_p + e_q, add alpha exactly when
/// the current p-th and q-th coordinates differ.
pub fn br_to_b(ctx: &RankContext, lam: &Weight) -> Result<(Weight, OddReflectionTrace)> {
    check_rank(ctx, lam)?;
    let mut cur = lam.clone();
    let mut steps = Vec::new();
    for step in borel_chain(ctx) {
        if step.kind == StepKind::OddReflection && cur.coord(step.p) != cur.coord(step.q) {
            cur = cur.add(&step.alpha);
        }
        steps.push(TraceStep {
            alpha: step.alpha,
            kind: step.kind,
            weight_after: cur.clone(),
        });
    }
    let trace = OddReflectionTrace {
        start: lam.clone(),
        end: cur.clone(),
        steps,
    };
    Ok((cur, trace))
}

/// Inverse transport. A firing step adds 1 to both coordinates, preserving
/// whether they differ, so the reverse pass can re-read the firing condition.
pub fn b_to_br(ctx: &RankContext, nu: &Weight) -> Result<Weight> {
    check_rank(ctx, nu)?;
    let mut cur = nu.clone();
    for step in borel_chain(ctx).into_iter().rev() {
        if step.kind == StepKind::OddReflection && cur.coord(step.p) != cur.coord(step.q) {
            cur = cur.sub(&step.alpha);
        }
    }
    Ok(cur)
}

/// b-highest weight of the socle of the Kac module K(L(mu)):
/// br_to_b(mu - (n-1) omega_n).
pub fn socle_of_kac(ctx: &RankContext, mu: &Weight) -> Result<Weight> {
    check_rank(ctx, mu)?;
    let shift = ctx.omega().scale(Rat::from_integer(ctx.n() as i64 - 1));
    Ok(br_to_b(ctx, &mu.sub(&shift))?.0)
}

fn check_rank(ctx: &RankContext, lam: &Weight) -> Result<()> {
    if lam.rank() != ctx.n() {
        return Err(crate::error::Error::RankMismatch(lam.rank(), ctx.n()));
    }
    Ok(())
}
