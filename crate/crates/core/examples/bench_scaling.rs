//! Measure how equality testing and pruning scale with tree size.

use adequate::bench::{loglog_slope, measure, BenchOp};

fn main() {
    let sizes = [250, 500, 1000, 2000, 4000];
    for op in [BenchOp::Eq, BenchOp::Prune] {
        let rows = measure(op, &sizes, 5, 1);
        for r in &rows {
            println!("{:<6}{:>6} edges  median {:>10.6}s", op.name(), r.size, r.median_seconds);
        }
        let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.size as f64, r.median_seconds)).collect();
        println!("{:<6}log-log slope {:.2}\n", op.name(), loglog_slope(&points));
    }
}
