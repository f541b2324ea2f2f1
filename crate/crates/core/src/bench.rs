//! Timing harness for the quadratic-time claims.

use std::time::Instant;

use crate::canonical::canonical_string;
use crate::formula::Alphabet;
use crate::generate::{random_tree, rng_from_seed};
use crate::mode::Mode;
use crate::pruning::prune;
use crate::solver::Solver;
use crate::tree::SigmaTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchOp {
    /// Parse, evaluate and compare two formulas with `size / 2` edges each.
    Eq,
    /// Parse, evaluate and prune one formula with `size` edges.
    Prune,
}

impl BenchOp {
    pub fn name(self) -> &'static str {
        match self {
            BenchOp::Eq => "eq",
            BenchOp::Prune => "prune",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Timing {
    pub op: BenchOp,
    pub size: usize,
    pub mean_seconds: f64,
    pub median_seconds: f64,
}

/// Times `op` on `reps` fresh random instances of each size.
pub fn measure(op: BenchOp, sizes: &[usize], reps: usize, seed: u64) -> Vec<Timing> {
    let alphabet = Alphabet::new("ab".chars()).expect("static alphabet");
    let solver = Solver::new(alphabet.clone(), Mode::ADEQUATE_MONOID);
    let mut rng = rng_from_seed(seed);
    sizes
        .iter()
        .map(|&size| {
            let mut samples: Vec<f64> = (0..reps)
                .map(|_| match op {
                    BenchOp::Eq => {
                        let lhs = canonical_string(&random_tree(&mut rng, &alphabet, size / 2));
                        let rhs = canonical_string(&random_tree(&mut rng, &alphabet, size - size / 2));
                        let clock = Instant::now();
                        let verdict = solver.equal_str(&lhs, &rhs).expect("generated formulas parse");
                        let elapsed = clock.elapsed().as_secs_f64();
                        std::hint::black_box(verdict);
                        elapsed
                    }
                    BenchOp::Prune => {
                        let text = canonical_string(&random_tree(&mut rng, &alphabet, size));
                        let clock = Instant::now();
                        let formula = solver.parse(&text).expect("generated formula parses");
                        let tree = SigmaTree::evaluate(&formula, &alphabet).expect("admissible");
                        let pruned = prune(&tree);
                        let elapsed = clock.elapsed().as_secs_f64();
                        std::hint::black_box(pruned);
                        elapsed
                    }
                })
                .collect();
            samples.sort_by(f64::total_cmp);
            Timing {
                op,
                size,
                mean_seconds: samples.iter().sum::<f64>() / reps as f64,
                median_seconds: samples[reps / 2],
            }
        })
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = logs.iter().map(|&(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let var: f64 = logs.iter().map(|&(x, _)| (x - mean_x).powi(2)).sum();
    cov / var
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [1.0, 2.0, 4.0, 8.0].iter().map(|&x| (x, 3.0 * x * x)).collect();
        assert!((loglog_slope(&pts) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn measure_shapes() {
        let rows = measure(BenchOp::Prune, &[10, 20], 2, 1);
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.mean_seconds >= 0.0));
    }
}
