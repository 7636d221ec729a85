//! Closed-form expectations, upper/lower bounds on the expected face count,
//! and seeded Monte Carlo estimation.
//!
//! Everything compared against an exact oracle value stays in rational
//! arithmetic; the two transcendental bounds (pi^2 n / 6 and n ln n) are
//! evaluated and compared in f64, whose error is far below any margin that
//! matters here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::multigraph::{DartId, GraphSummary, MultiGraph};
use crate::process::{Sampler, Strategy};

/// Exact rational from an integer pair.
pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Render a rational as `p/q`, even when q = 1.
pub fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Format with a fixed number of significant digits, positional notation.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Harmonic number `H_m = 1 + 1/2 + ... + 1/m`, with `H_0 = 0`.
pub fn harmonic(m: u64) -> BigRational {
    let mut h = BigRational::zero();
    for k in 1..=m {
        h += BigRational::new(BigInt::one(), BigInt::from(k));
    }
    h
}

/// Exact expected face count of the dipole with `mu` parallel edges:
/// `H_{mu-1} + 1/ceil(mu/2)`. Panics when `mu = 0` (no such graph).
pub fn dipole_expected_faces(mu: u64) -> BigRational {
    assert!(mu >= 1, "dipole needs at least one edge");
    harmonic(mu - 1) + BigRational::new(BigInt::one(), BigInt::from(mu.div_ceil(2)))
}

/// The main upper bound `n + sum_i H_{mu_i}` over all vertices, where
/// `mu_i` is the largest multiplicity incident with vertex i.
pub fn bound_main(g: &MultiGraph) -> BigRational {
    let mut b = BigRational::from(BigInt::from(g.vertex_count()));
    for v in 1..=g.vertex_count() {
        b += harmonic(g.mu_at(v) as u64);
    }
    b
}

/// The coarser corollary bound `n (H_mu + 1)`.
pub fn bound_corollary(g: &MultiGraph) -> BigRational {
    let n = BigRational::from(BigInt::from(g.vertex_count()));
    n * (harmonic(g.mu() as u64) + BigRational::one())
}

/// Upper bound `pi^2 n / 6` for simple graphs.
pub fn bound_simple(n: usize) -> f64 {
    std::f64::consts::PI.powi(2) * n as f64 / 6.0
}

/// Stahl's `n ln n` bound for simple graphs; vacuous below n = 2.
pub fn bound_stahl(n: usize) -> f64 {
    assert!(n >= 2, "n log n bound needs n >= 2");
    n as f64 * (n as f64).ln()
}

/// Lower bound `2|C| / (d-1)^l` from a set of `cycle_count` cycles of
/// length at most `max_len` in a graph of maximum degree `max_degree`.
pub fn lower_bound_cycles(
    cycle_count: u64,
    max_len: u32,
    max_degree: u32,
) -> Result<f64, String> {
    if max_degree < 2 {
        return Err(format!("cycle lower bound needs max degree >= 2, got {max_degree}"));
    }
    if max_len < 1 {
        return Err("cycle lower bound needs max cycle length >= 1".into());
    }
    Ok(2.0 * cycle_count as f64 / ((max_degree - 1) as f64).powi(max_len as i32))
}

/// `H_{|E|} + 3/|E|` for loop-free stars of parallel edges (all edges share
/// one center vertex). Informational only; None when the shape doesn't
/// apply.
pub fn star_parallel_bound(g: &MultiGraph) -> Option<BigRational> {
    g.parallel_star_center().map(|_| {
        let m = g.edge_count() as u64;
        harmonic(m) + BigRational::new(BigInt::from(3), BigInt::from(m))
    })
}

/// Monte Carlo estimate of E[F] with a normal-approximation CI.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub ci95: (f64, f64),
    pub trials: u64,
    pub seed: u64,
    pub strategy: Strategy,
}

/// Trials per RNG stream; each batch owns one ChaCha stream derived from
/// (seed, batch index), so results are independent of thread scheduling.
const MC_BATCH: u64 = 8192;

fn batch_ranges(trials: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < trials {
        let len = MC_BATCH.min(trials - start);
        out.push((start / MC_BATCH, len));
        start += len;
    }
    out
}

/// Mean face count over `trials` independent runs of the pairing process.
/// Deterministic in (graph, trials, seed, strategy): face counts are summed
/// as exact integers, so the worker count cannot perturb the result.
pub fn monte_carlo_expected_faces(
    g: &MultiGraph,
    trials: u64,
    seed: u64,
    strategy: Strategy,
) -> McEstimate {
    assert!(trials >= 1, "need at least one trial");
    let batches = batch_ranges(trials);
    let sums: Vec<(u128, u128)> = batches
        .par_iter()
        .map(|&(stream, len)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let mut sampler = Sampler::new(g);
            let mut sum = 0u128;
            let mut sq = 0u128;
            for _ in 0..len {
                sampler.run(strategy, &mut rng);
                let f = sampler.faces() as u128;
                sum += f;
                sq += f * f;
            }
            (sum, sq)
        })
        .collect();
    let (sum, sq) = sums
        .into_iter()
        .fold((0u128, 0u128), |(a, b), (s, q)| (a + s, b + q));

    let n = trials as f64;
    let mean = sum as f64 / n;
    let var = if trials > 1 {
        let num = (trials as u128 * sq) as f64 - (sum as f64) * (sum as f64);
        (num / (n * (n - 1.0))).max(0.0)
    } else {
        0.0
    };
    let std_error = (var / n).sqrt();
    McEstimate {
        mean,
        std_error,
        ci95: (mean - 1.96 * std_error, mean + 1.96 * std_error),
        trials,
        seed,
        strategy,
    }
}

/// Empirical distribution over final rotation systems, keyed by the
/// successor permutation. Batched the same way as the estimator, so counts
/// are reproducible under any worker count.
pub fn empirical_rotation_distribution(
    g: &MultiGraph,
    strategy: Strategy,
    trials: u64,
    seed: u64,
) -> BTreeMap<Vec<DartId>, u64> {
    let batches = batch_ranges(trials);
    batches
        .par_iter()
        .map(|&(stream, len)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let mut sampler = Sampler::new(g);
            let mut counts: BTreeMap<Vec<DartId>, u64> = BTreeMap::new();
            for _ in 0..len {
                sampler.run(strategy, &mut rng);
                *counts.entry(sampler.rotation().to_vec()).or_insert(0) += 1;
            }
            counts
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Total-variation distance between observed class counts and the uniform
/// distribution over `classes` equiprobable classes.
pub fn tv_from_uniform(counts: &BTreeMap<Vec<DartId>, u64>, classes: u64, trials: u64) -> f64 {
    assert!(counts.len() as u64 <= classes, "more classes observed than exist");
    let p = 1.0 / classes as f64;
    let observed: f64 = counts
        .values()
        .map(|&c| (c as f64 / trials as f64 - p).abs())
        .sum();
    let missing = (classes - counts.len() as u64) as f64 * p;
    (observed + missing) / 2.0
}

/// An expected-faces value: exact from enumeration or estimated.
#[derive(Debug, Clone)]
pub enum FaceValue {
    Exact(BigRational),
    Estimate(McEstimate),
}

/// Cycle-set description for the lower bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CycleData {
    pub cycle_count: u64,
    pub max_len: u32,
    pub max_degree: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    /// `p/q` for rationals, 12 significant digits otherwise.
    pub value: String,
    pub satisfied: bool,
    /// A hard bound must hold for every exact value; violations fail the run.
    pub hard: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub graph: GraphSummary,
    pub value_kind: &'static str,
    /// `p/q` when exact, the estimate mean otherwise.
    pub expected_faces: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimate: Option<McEstimate>,
    pub bounds: Vec<BoundEntry>,
}

impl BoundsReport {
    /// True when an exact value violates one of the hard bounds.
    pub fn hard_violation(&self) -> bool {
        self.value_kind == "exact" && self.bounds.iter().any(|b| b.hard && !b.satisfied)
    }
}

fn rational_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Evaluate every applicable bound against `value` and flag each one.
///
/// Exact values are compared in rational arithmetic (or converted once to
/// f64 for the two transcendental bounds); Monte Carlo values are flagged
/// only when they sit more than 3 standard errors on the wrong side.
pub fn bounds_report(g: &MultiGraph, value: &FaceValue, cycles: Option<CycleData>) -> BoundsReport {
    let (value_kind, expected_faces, estimate) = match value {
        FaceValue::Exact(r) => ("exact", rational_str(r), None),
        FaceValue::Estimate(e) => ("monte_carlo", fmt_sig(e.mean, 12), Some(e.clone())),
    };
    // satisfied-with-slack comparators
    let upper_ok_rat = |bound: &BigRational| match value {
        FaceValue::Exact(r) => r <= bound,
        FaceValue::Estimate(e) => e.mean - 3.0 * e.std_error <= rational_f64(bound),
    };
    let upper_ok_f64 = |bound: f64, strict: bool| match value {
        FaceValue::Exact(r) => {
            let v = rational_f64(r);
            if strict {
                v < bound
            } else {
                v <= bound
            }
        }
        FaceValue::Estimate(e) => e.mean - 3.0 * e.std_error <= bound,
    };

    let mut bounds = Vec::new();
    let main = bound_main(g);
    bounds.push(BoundEntry {
        name: "main",
        satisfied: upper_ok_rat(&main),
        value: rational_str(&main),
        hard: true,
    });
    let corollary = bound_corollary(g);
    bounds.push(BoundEntry {
        name: "corollary",
        satisfied: upper_ok_rat(&corollary),
        value: rational_str(&corollary),
        hard: true,
    });
    if g.is_simple() {
        let b = bound_simple(g.vertex_count());
        bounds.push(BoundEntry {
            name: "simple_pi2",
            value: fmt_sig(b, 12),
            satisfied: upper_ok_f64(b, true),
            hard: true,
        });
        if g.vertex_count() >= 2 {
            let b = bound_stahl(g.vertex_count());
            bounds.push(BoundEntry {
                name: "stahl_nlogn",
                value: fmt_sig(b, 12),
                satisfied: upper_ok_f64(b, false),
                hard: false,
            });
        }
    }
    if g.is_dipole() {
        let form = dipole_expected_faces(g.mu() as u64);
        let satisfied = match value {
            FaceValue::Exact(r) => *r == form,
            FaceValue::Estimate(e) => (e.mean - rational_f64(&form)).abs() <= 3.0 * e.std_error,
        };
        bounds.push(BoundEntry {
            name: "dipole_closed_form",
            value: rational_str(&form),
            satisfied,
            hard: false,
        });
    }
    if let Some(c) = cycles {
        if let Ok(lb) = lower_bound_cycles(c.cycle_count, c.max_len, c.max_degree) {
            let satisfied = match value {
                FaceValue::Exact(r) => rational_f64(r) >= lb,
                FaceValue::Estimate(e) => e.mean + 3.0 * e.std_error >= lb,
            };
            bounds.push(BoundEntry {
                name: "cycle_lower",
                value: fmt_sig(lb, 12),
                satisfied,
                hard: false,
            });
        }
    }
    if let Some(star) = star_parallel_bound(g) {
        bounds.push(BoundEntry {
            name: "star_parallel_info",
            satisfied: upper_ok_rat(&star),
            value: rational_str(&star),
            hard: false,
        });
    }
    BoundsReport {
        graph: g.summary(),
        value_kind,
        expected_faces,
        estimate,
        bounds,
    }
}
