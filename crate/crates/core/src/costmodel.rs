//! Running-time bases of the solvers as functions of c, where the enumerated family has
//! O(cⁿ) members.
//!
//! Each function returns the base b of a bound O*(bⁿ).

use serde::Serialize;

use crate::dnc::StrategyTag;
use crate::error::{Error, Result};

/// Lower end of the α range for the third-level strategy.
pub const SMALLC2_ALPHA_MIN: f64 = 0.1303;
/// Upper end of the c range for the third-level strategy.
pub const SMALLC2_C_MAX: f64 = 1.0872;

const TOL: f64 = 1e-9;

/// Binary entropy.
pub fn entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Base of C(n, n/4).
pub fn binomial_quarter() -> f64 {
    2f64.powf(entropy(0.25))
}

fn check_c(c: f64) -> Result<()> {
    if !(1.0..=2.0).contains(&c) {
        return Err(Error::Precondition(format!("c must lie in [1, 2], got {c}")));
    }
    Ok(())
}

/// Divide, divide, enumerate: max(2^H(1/4), √(2+c)).
pub fn base_main(c: f64) -> f64 {
    binomial_quarter().max((2.0 + c).sqrt())
}

/// Enumerate, then divide: max(2^H(1/4), (1+c)^(3/4)).
pub fn base_smallc(c: f64) -> f64 {
    binomial_quarter().max((1.0 + c).powf(0.75))
}

/// Search cost of the third-level strategy with a table on the α-small subsets.
pub fn smallc2_search(c: f64, alpha: f64) -> f64 {
    (1.0 + c).powf(0.75)
        * c.powf(alpha / 2.0)
        * (1.0 - 4.0 * alpha).powf((4.0 * alpha - 1.0) / 8.0)
        * (4.0 * alpha).powf(-alpha / 2.0)
}

/// Cost of building the table on the α-small subsets.
pub fn smallc2_preprocessing(alpha: f64) -> f64 {
    alpha.powf(-alpha) * (1.0 - alpha).powf(alpha - 1.0)
}

/// Optimal (α, base) of the third-level strategy, balancing search against preprocessing.
pub fn base_smallc2(c: f64) -> Result<(f64, f64)> {
    if !(1.0..=SMALLC2_C_MAX).contains(&c) {
        return Err(Error::Precondition(format!(
            "third-level bound needs 1 ≤ c ≤ {SMALLC2_C_MAX}, got {c}"
        )));
    }
    let f = |a: f64| smallc2_search(c, a).max(smallc2_preprocessing(a));
    let (mut lo, mut hi) = (SMALLC2_ALPHA_MIN, 0.25);
    while hi - lo > TOL {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let a = (lo + hi) / 2.0;
    Ok((a, f(a)))
}

fn bisect(mut lo: f64, mut hi: f64, g: impl Fn(f64) -> f64) -> f64 {
    let glo = g(lo);
    while hi - lo > TOL {
        let mid = (lo + hi) / 2.0;
        if (g(mid) > 0.0) == (glo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Crossovers {
    /// √(2+c) reaches 2^H(1/4).
    pub c1: f64,
    /// The third-level search term at α = 1/4 reaches 2^H(1/4).
    pub c2: f64,
    /// (1+c)^(3/4) reaches √(2+c).
    pub c3: f64,
}

pub fn crossovers() -> Crossovers {
    let b = binomial_quarter();
    Crossovers {
        c1: bisect(1.0, 2.0, |c| (2.0 + c).sqrt() - b),
        c2: bisect(1.0, 2.0, |c| (1.0 + c).powf(0.75) * c.powf(0.125) - 4.0 / 3f64.powf(0.75)),
        c3: bisect(1.0, 2.0, |c| (1.0 + c).powf(0.75) - (2.0 + c).sqrt()),
    }
}

/// The fastest strategy at c and its base.
pub fn best_base(c: f64) -> Result<(StrategyTag, f64)> {
    check_c(c)?;
    let mut best = (StrategyTag::DivideDivideEnumerate, base_main(c));
    let etd = base_smallc(c);
    if etd < best.1 {
        best = (StrategyTag::EnumerateThenDivide, etd);
    }
    if c <= SMALLC2_C_MAX {
        let (_, third) = base_smallc2(c)?;
        if third < best.1 {
            best = (StrategyTag::ThirdLevel, third);
        }
    }
    Ok(best)
}

/// Base of the chromatic-number pipeline, √13 / (2^(7/13) · 3^(23/78)).
pub fn chromatic_exponent() -> f64 {
    13f64.sqrt() / (2f64.powf(7.0 / 13.0) * 3f64.powf(23.0 / 78.0))
}

/// The small-prefix case written with entropies: √(2^H(7/13) · 1.5622^(14/13)).
pub fn small_prefix_case_base() -> f64 {
    (2f64.powf(entropy(7.0 / 13.0)) * 1.5622f64.powf(14.0 / 13.0)).sqrt()
}

#[derive(Clone, Debug, Serialize)]
pub struct CostRow {
    pub c: f64,
    /// Optimal α of the third-level strategy, when it applies.
    pub alpha_star: Option<f64>,
    pub base_main: f64,
    pub base_smallc: f64,
    pub base_smallc2: Option<f64>,
    pub best: f64,
    pub strategy: StrategyTag,
}

pub fn cost_row(c: f64) -> Result<CostRow> {
    let (strategy, best) = best_base(c)?;
    let third = if c <= SMALLC2_C_MAX { Some(base_smallc2(c)?) } else { None };
    Ok(CostRow {
        c,
        alpha_star: third.map(|t| t.0),
        base_main: base_main(c),
        base_smallc: base_smallc(c),
        base_smallc2: third.map(|t| t.1),
        best,
        strategy,
    })
}

/// Rows for c = cmin, cmin + step, … up to cmax.
pub fn cost_table(cmin: f64, cmax: f64, step: f64) -> Result<Vec<CostRow>> {
    if step.is_nan() || step <= 0.0 || cmin > cmax {
        return Err(Error::Precondition(format!("bad range {cmin}..{cmax} step {step}")));
    }
    let count = ((cmax - cmin) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| cost_row(cmin + i as f64 * step)).collect()
}
