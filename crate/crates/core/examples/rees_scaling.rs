//! Times congruence computation on Rees matrix semigroups of growing size
//! and fits the exponent of a power law to the timings.
//!
//! cargo run --release --example rees_scaling [max_group_order]

use std::time::{Duration, Instant};

use finalg::{all_congruences, rees_matrix_semigroup};

fn best_of(repeats: usize, f: impl Fn() -> usize) -> (Duration, usize) {
    let mut best = Duration::MAX;
    let mut result = 0;
    for _ in 0..repeats {
        let t = Instant::now();
        result = f();
        best = best.min(t.elapsed());
    }
    (best, result)
}

fn main() {
    let max_g: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(15);
    let (rows, cols) = (2, 3);
    let mut points = Vec::new();
    for g in (5..=max_g).step_by(5) {
        let s = rees_matrix_semigroup(g, rows, cols, None, 1).unwrap();
        let (t, count) = best_of(3, || all_congruences(&s).len());
        println!("n = {:3}  congruences = {:5}  {:8.1} ms", s.size(), count, t.as_secs_f64() * 1e3);
        points.push(((s.size() as f64).ln(), t.as_secs_f64().ln()));
    }
    if points.len() >= 2 {
        let k = points.len() as f64;
        let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
        let my = points.iter().map(|p| p.1).sum::<f64>() / k;
        let num: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let den: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
        println!("log-log slope {:.2}", num / den);
    }
}
