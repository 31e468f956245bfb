//! Timing harness for the linear-cost maps ♦, ♠ and ♣.
//!
//! Instances are a fixed LR tableau in a `4 × 7` box scaled by `k`: recording matrix
//! and inner shape multiplied by `k` inside a `4 × 7k` box, so `|λ/μ| = 11k`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::oracle::enumerate_lr;
use crate::shapes::{BinaryWord, Partition, Rect};
use crate::symmetries::{club, lozenge, lozenge_by_word, spade};
use crate::tableaux::{Boundary, RecordingMatrix, SkewTableau};
use crate::{Error, Result};

const BASE_INNER: [usize; 4] = [4, 2, 1, 0];
const BASE_MATRIX: [[usize; 3]; 4] = [[3, 0, 0], [1, 2, 0], [0, 2, 1], [1, 0, 1]];
const BASE_SIZE: usize = 11;

/// Scaled instance with `|λ/μ| = 11k`.
pub fn scaled_instance(k: usize) -> Result<SkewTableau> {
    if k == 0 {
        return Err(Error::Shape("scale factor must be positive".into()));
    }
    let rect = Rect::new(4, 7 * k)?;
    let m = RecordingMatrix::new(BASE_MATRIX.iter().map(|r| r.iter().map(|&a| a * k).collect()).collect())?;
    let inner: Vec<usize> = BASE_INNER.iter().map(|&a| a * k).collect();
    let t = SkewTableau::from_matrix(&m, rect, &inner)?;
    if !t.is_lr() {
        return Err(Error::Invariant("scaled instance is not LR".into()));
    }
    Ok(t)
}

/// Instance whose size is the largest multiple of 11 not above `size`.
pub fn instance_of_size(size: usize) -> Result<SkewTableau> {
    scaled_instance((size / BASE_SIZE).max(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BenchOp {
    Lozenge,
    Spade,
    Club,
}

impl BenchOp {
    pub const ALL: [BenchOp; 3] = [BenchOp::Lozenge, BenchOp::Spade, BenchOp::Club];

    pub fn name(self) -> &'static str {
        match self {
            BenchOp::Lozenge => "lozenge",
            BenchOp::Spade => "spade",
            BenchOp::Club => "club",
        }
    }

    pub fn run(self, t: &SkewTableau) -> Result<SkewTableau> {
        match self {
            BenchOp::Lozenge => lozenge(t),
            BenchOp::Spade => spade(t),
            BenchOp::Club => club(t),
        }
    }
}

/// Mean seconds per call, repeating until at least `budget` has elapsed; the
/// fastest of three such batches is kept.
pub fn time_op(op: BenchOp, t: &SkewTableau, budget: Duration) -> Result<f64> {
    let mut best = f64::INFINITY;
    for _ in 0..3 {
        let start = Instant::now();
        let mut reps = 0u32;
        while reps == 0 || start.elapsed() < budget {
            std::hint::black_box(op.run(std::hint::black_box(t))?);
            reps += 1;
        }
        best = best.min(start.elapsed().as_secs_f64() / reps as f64);
    }
    Ok(best)
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub op: BenchOp,
    pub sizes: Vec<usize>,
    pub seconds: Vec<f64>,
    pub slope: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn max_slope(&self) -> f64 {
        self.rows.iter().map(|r| r.slope).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn to_table(&self) -> String {
        let mut s = String::from("op       size       seconds\n");
        for r in &self.rows {
            for (n, t) in r.sizes.iter().zip(&r.seconds) {
                s += &format!("{:<8} {:<10} {:.3e}\n", r.op.name(), n, t);
            }
            s += &format!("{:<8} slope      {:.3}\n", r.op.name(), r.slope);
        }
        s
    }
}

/// Times each map on instances of the given sizes; needs at least two sizes.
pub fn run_benchmark(sizes: &[usize], budget: Duration) -> Result<BenchReport> {
    if sizes.len() < 2 {
        return Err(Error::Mismatch("a slope needs at least two sizes".into()));
    }
    let instances: Vec<SkewTableau> = sizes.iter().map(|&s| instance_of_size(s)).collect::<Result<_>>()?;
    let actual: Vec<usize> = instances.iter().map(SkewTableau::size).collect();
    let mut rows = Vec::new();
    for op in BenchOp::ALL {
        let seconds: Vec<f64> = instances.iter().map(|t| time_op(op, t, budget)).collect::<Result<_>>()?;
        let xs: Vec<f64> = actual.iter().map(|&s| s as f64).collect();
        rows.push(BenchRow { op, sizes: actual.clone(), slope: loglog_slope(&xs, &seconds), seconds });
    }
    Ok(BenchReport { rows })
}

/// Compares the matrix and word routes of ♦ on random LR tableaux with `n ≤ max_n`.
/// Returns the number of disagreements.
pub fn lozenge_agreement(trials: usize, max_n: usize, seed: u64) -> Result<usize> {
    if max_n < 2 {
        return Err(Error::Shape("need n ≥ 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0;
    let mut done = 0;
    while done < trials {
        let n = rng.gen_range(2..=max_n);
        let d = rng.gen_range(1..n);
        let ts = enumerate_lr(&sample_boundary(n, d, &mut rng));
        let Some(t) = ts.choose(&mut rng) else { continue };
        mismatches += (lozenge(t)? != lozenge_by_word(t)?) as usize;
        done += 1;
    }
    Ok(mismatches)
}

fn sample_boundary(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Boundary {
    let parts: Vec<Partition> =
        BinaryWord::all(n, d).iter().map(|w| Partition::from_word(w).expect("word with d ones")).collect();
    loop {
        let mu = parts.choose(rng).expect("at least one word").clone();
        let nu = parts.choose(rng).expect("at least one word").clone();
        // nonzero coefficients need |μ| + |ν| + |λ| = d(n-d)
        let Some(rest) = (d * (n - d)).checked_sub(mu.size() + nu.size()) else { continue };
        let fits: Vec<&Partition> = parts.iter().filter(|l| l.size() == rest).collect();
        if let Some(&lam) = fits.choose(rng) {
            return Boundary::new(mu, nu, lam.clone()).expect("common rectangle");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_instances_are_lr() {
        for k in [1, 2, 5] {
            let t = scaled_instance(k).unwrap();
            assert_eq!(t.size(), BASE_SIZE * k);
            for op in BenchOp::ALL {
                assert!(op.run(&t).unwrap().is_lr());
            }
        }
    }

    #[test]
    fn slope_of_a_line() {
        let xs = [1.0, 10.0, 100.0];
        let ys = [3.0, 30.0, 300.0];
        assert!((loglog_slope(&xs, &ys) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn routes_agree_on_a_few_random_instances() {
        assert_eq!(lozenge_agreement(20, 6, 7).unwrap(), 0);
    }
}
