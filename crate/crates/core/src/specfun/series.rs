//! Shared power-series summation engine.
//!
//! Both the three-parameter Mittag-Leffler function and the Wright function
//! are entire series of the form Σ c_k z^k / Γ(a + b k). Terms are carried
//! in double-double precision so that alternating-series cancellation costs
//! no accuracy beyond the 1/Γ evaluations themselves; for argument families
//! where consecutive Γ arguments differ by exactly 1 (ρ = 1 chains, or the
//! Wright function with α = 1/M, M a power of two) even the 1/Γ factors are
//! carried through exact double-double recurrences, leaving a single f64
//! seed as the only rounding source.
//!
//! Truncation rule: stop at the first k with |t_k| < tol·|S_k| and
//! |t_{k+1}| <= |t_k|; the discarded tail is bounded geometrically from
//! the first discarded term.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::specfun::gamma::recip_gamma;

/// Relative accuracy of one f64 `recip_gamma` evaluation (Lanczos, with
/// margin for the term multiplication).
const GAMMA_EPS: f64 = 5e-16;
/// Relative accuracy of a double-double chain seed (`recip_gamma_dd`).
const SEED_EPS: f64 = 2e-30;
/// Residual relative error of double-double recurrences.
const DD_EPS: f64 = 1e-30;

#[derive(Debug, Clone, Copy)]
pub struct SeriesAccum {
    pub value: f64,
    /// Bound on |computed - exact|: truncated tail plus rounding exposure.
    pub err_estimate: f64,
    pub terms_used: usize,
}

/// Running state for the stop rule and the error model.
struct Tracker {
    sum: Dd,
    abs_sum: f64,
    terms: usize,
    last_pushed: f64,
    prev_pushed: f64,
    max_pushed: f64,
}

impl Tracker {
    fn new() -> Self {
        Tracker {
            sum: Dd::ZERO,
            abs_sum: 0.0,
            terms: 0,
            last_pushed: 0.0,
            prev_pushed: 0.0,
            max_pushed: 0.0,
        }
    }

    fn push(&mut self, t: Dd) {
        self.sum = self.sum.add(t);
        self.abs_sum += t.abs();
        self.terms += 1;
        self.prev_pushed = self.last_pushed;
        self.last_pushed = t.abs();
        self.max_pushed = self.max_pushed.max(self.last_pushed);
    }

    /// Stop once the current term is below tolerance relative to the partial
    /// sum and the following term does not grow.
    fn should_stop(&self, cur: f64, next: f64, tol: f64) -> bool {
        (cur <= tol * self.sum.abs() || cur == 0.0) && next <= cur
    }

    fn overflowed(&self, cur: f64) -> bool {
        !cur.is_finite() || self.abs_sum > 1e300
    }
}

/// Geometric bound on the discarded tail given the first two omitted
/// magnitudes.
fn tail_bound(first_omitted: f64, prev: f64) -> f64 {
    if first_omitted == 0.0 {
        return 0.0;
    }
    let r = if prev > 0.0 { first_omitted / prev } else { 0.5 };
    first_omitted / (1.0 - r.min(0.5))
}

/// Sum Σ_k coef_k · rg(a + b k) where coef follows the double-double
/// recurrence coef_{k+1} = coef_k · num(k)/den(k) and rg is the f64
/// reciprocal gamma. Used for the general-parameter paths.
pub fn sum_f64_gamma(
    tol: f64,
    max_terms: usize,
    a: f64,
    b: f64,
    coef0: Dd,
    mut step: impl FnMut(Dd, usize) -> Dd,
    what: &str,
) -> Result<SeriesAccum> {
    let mut tr = Tracker::new();
    let mut coef = coef0;
    let mut cur = coef.mul_f64(recip_gamma(a));
    for k in 0..max_terms {
        if tr.overflowed(cur.abs()) {
            // the reflection 1/Γ factor saturates f64 near argument -170.
            // Terms several orders below their peak certify the
            // superexponential envelope decay (the |sin| reflection factor
            // wobbles term to term, so no pairwise test works); what
            // overflowed is then only a representation of the shrinking far
            // tail, charged to the error estimate. A series still near its
            // peak at the boundary is a genuine escape.
            let envelope = tr.last_pushed.max(tr.prev_pushed);
            if !cur.abs().is_finite() && tr.terms > 10 && envelope < tr.max_pushed * 1e-6 {
                return Ok(SeriesAccum {
                    value: tr.sum.value(),
                    err_estimate: 10.0 * envelope
                        + GAMMA_EPS * tr.abs_sum
                        + f64::EPSILON * tr.sum.abs(),
                    terms_used: tr.terms,
                });
            }
            return Err(Error::NonConvergent {
                what: format!("{what} (overflow)"),
                terms: tr.terms,
                err_estimate: f64::INFINITY,
            });
        }
        tr.push(cur);
        coef = step(coef, k);
        let next = coef.mul_f64(recip_gamma(a + b * (k + 1) as f64));
        if tr.should_stop(cur.abs(), next.abs(), tol) {
            let err = tail_bound(next.abs(), cur.abs())
                + GAMMA_EPS * tr.abs_sum
                + f64::EPSILON * tr.sum.abs();
            return Ok(SeriesAccum {
                value: tr.sum.value(),
                err_estimate: err,
                terms_used: tr.terms,
            });
        }
        cur = next;
    }
    Err(Error::NonConvergent {
        what: what.to_string(),
        terms: tr.terms,
        err_estimate: GAMMA_EPS * tr.abs_sum,
    })
}

/// Sum one residue chain whose terms follow a fully double-double
/// recurrence (the 1/Γ factor folded into the coefficient). `seed_scale`
/// is the single f64 factor (the chain's 1/Γ seed) multiplied in at the
/// end, so its rounding enters uniformly rather than per-term.
pub struct ChainSum {
    pub sum: Dd,
    pub abs_sum: f64,
    pub terms: usize,
    pub tail: f64,
}

pub fn sum_dd_chain(
    tol: f64,
    max_terms: usize,
    term0: Dd,
    mut step: impl FnMut(Dd, usize) -> Dd,
    what: &str,
) -> Result<ChainSum> {
    let mut tr = Tracker::new();
    let mut cur = term0;
    for k in 0..max_terms {
        if tr.overflowed(cur.abs()) {
            return Err(Error::NonConvergent {
                what: format!("{what} (overflow)"),
                terms: tr.terms,
                err_estimate: f64::INFINITY,
            });
        }
        tr.push(cur);
        let next = step(cur, k);
        if tr.should_stop(cur.abs(), next.abs(), tol) {
            return Ok(ChainSum {
                sum: tr.sum,
                abs_sum: tr.abs_sum,
                terms: tr.terms,
                tail: tail_bound(next.abs(), cur.abs()),
            });
        }
        cur = next;
    }
    Err(Error::NonConvergent {
        what: what.to_string(),
        terms: tr.terms,
        err_estimate: DD_EPS * tr.abs_sum,
    })
}

/// Error exposure of a set of chain subtotals: the double-double seeds
/// enter each chain uniformly, so only the chain totals (not the cancelled
/// mass inside them) multiply the seed error; the unevaluated inter-chain
/// cancellation is covered by the DD_EPS term on the raw magnitude sum.
pub fn chain_error(chains: &[ChainSum]) -> f64 {
    let seed_exposure: f64 = chains.iter().map(|c| c.sum.abs()).sum();
    let dd_exposure: f64 = chains.iter().map(|c| c.abs_sum).sum();
    let tails: f64 = chains.iter().map(|c| c.tail).sum();
    tails + SEED_EPS * seed_exposure + DD_EPS * dd_exposure
}
