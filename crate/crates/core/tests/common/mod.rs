//! Test-only oracles and generators. Nothing here calls into the closed-form
//! demand or production code it is used to check.

#![allow(dead_code)]

pub mod golden;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use shortside::economy::{Preferences, PriceVector};

/// A rich agent's decision problem.
#[derive(Debug, Clone, Copy)]
pub struct RichProblem {
    pub prices: PriceVector,
    pub capital: f64,
    pub prefs: Preferences,
    pub time_endowment: f64,
}

impl RichProblem {
    pub fn full_income(&self) -> f64 {
        self.prices.p_ok * self.capital + self.prices.p_w * self.time_endowment
    }

    /// Whether the free-time demand of the unconstrained problem exceeds
    /// the endowment.
    pub fn corner_expected(&self) -> bool {
        self.prefs.alpha_three * self.full_income() / self.prices.p_w > self.time_endowment
    }

    fn log_utility(&self, consumer: f64, new_capital: f64, free_time: f64) -> f64 {
        if consumer <= 0.0 || new_capital <= 0.0 || free_time <= 0.0 {
            return f64::NEG_INFINITY;
        }
        self.prefs.scale_c.ln()
            + self.prefs.alpha_one * consumer.ln()
            + self.prefs.alpha_two * new_capital.ln()
            + self.prefs.alpha_three * free_time.ln()
    }

    /// Log utility of spending shares `(e_c, e_nk, e_f)` of full income, or
    /// `None` when the free time bought exceeds the endowment.
    fn share_log_utility(&self, e_c: f64, e_nk: f64, e_f: f64) -> Option<f64> {
        let m = self.full_income();
        let free = e_f * m / self.prices.p_w;
        if free > self.time_endowment * (1.0 + 1e-15) || e_c < 0.0 || e_nk < 0.0 || e_f < 0.0 {
            return None;
        }
        Some(self.log_utility(
            e_c * m / self.prices.p_c,
            e_nk * m / self.prices.p_nk,
            free.min(self.time_endowment),
        ))
    }

    /// Best log utility over a grid on the budget simplex, refined
    /// coarse-to-fine until the step is at most `resolution`. The free-time
    /// share is also tried exactly on the time-endowment boundary.
    pub fn grid_best_log_utility(&self, resolution: f64) -> f64 {
        let m = self.full_income();
        let f_cap = (self.time_endowment * self.prices.p_w / m).min(1.0);
        let mut step: f64 = 0.02;
        let (mut c_lo, mut c_hi, mut f_lo, mut f_hi): (f64, f64, f64, f64) = (0.0, 1.0, 0.0, 1.0);
        let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
        loop {
            let nc = ((c_hi - c_lo) / step).round() as usize;
            let nf = ((f_hi - f_lo) / step).round() as usize;
            let mut fs: Vec<f64> = (0..=nf).map(|j| f_lo + j as f64 * step).collect();
            if f_cap >= f_lo && f_cap <= f_hi {
                fs.push(f_cap);
            }
            for &e_f in &fs {
                for i in 0..=nc {
                    let e_c = c_lo + i as f64 * step;
                    let e_nk = 1.0 - e_c - e_f;
                    if let Some(u) = self.share_log_utility(e_c, e_nk, e_f) {
                        if u > best.0 {
                            best = (u, e_c, e_f);
                        }
                    }
                }
            }
            if step <= resolution {
                return best.0;
            }
            c_lo = (best.1 - 2.0 * step).max(0.0);
            c_hi = (best.1 + 2.0 * step).min(1.0);
            f_lo = (best.2 - 2.0 * step).max(0.0);
            f_hi = (best.2 + 2.0 * step).min(1.0);
            step /= 10.0;
        }
    }
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo.ln()..hi.ln()).exp()
}

pub fn random_prices(rng: &mut ChaCha8Rng) -> PriceVector {
    PriceVector::new(
        log_uniform(rng, 0.05, 20.0),
        log_uniform(rng, 0.05, 20.0),
        log_uniform(rng, 0.05, 20.0),
        log_uniform(rng, 0.05, 20.0),
    )
}

pub fn random_prefs(rng: &mut ChaCha8Rng) -> Preferences {
    let raw: [f64; 3] = [
        rng.gen_range(0.05..1.0),
        rng.gen_range(0.05..1.0),
        rng.gen_range(0.05..1.0),
    ];
    let sum: f64 = raw.iter().sum();
    let alpha_one = raw[0] / sum;
    let alpha_two = raw[1] / sum;
    Preferences {
        scale_c: log_uniform(rng, 0.1, 10.0),
        alpha_one,
        alpha_two,
        alpha_three: 1.0 - alpha_one - alpha_two,
    }
}

/// Random problem; every other draw is pushed past the labor corner.
pub fn random_problem(rng: &mut ChaCha8Rng, index: usize) -> RichProblem {
    let prices = random_prices(rng);
    let prefs = random_prefs(rng);
    let time_endowment = log_uniform(rng, 0.5, 50.0);
    // capital at which the corner binds, from a3 (p_ok k + p_w T) = p_w T
    let threshold =
        (1.0 - prefs.alpha_three) * prices.p_w * time_endowment / (prefs.alpha_three * prices.p_ok);
    let capital = if index.is_multiple_of(2) {
        threshold * rng.gen_range(1.05..20.0)
    } else {
        threshold * rng.gen_range(0.0..0.95)
    };
    RichProblem {
        prices,
        capital,
        prefs,
        time_endowment,
    }
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
