//! Parallel Monte-Carlo driver and the `TrialRecord` CSV format.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use recolor_core::experiments::{run_trial, witness_rate, MonteCarloError, MonteCarloPlan};
use recolor_core::TrialRecord;

/// CSV header. `path_len` is empty when no path was built.
pub const CSV_HEADER: &str =
    "trial,seed,n,k,m,alpha,beta,residual_size,residual_core_size,witness,path_len";

/// Appended to [`CSV_HEADER`] when timing is on. Timings are not reproducible.
pub const TIMING_COLUMN: &str = "wall_time_us";

#[derive(Debug, Clone, PartialEq)]
pub struct TimedRecord {
    pub record: TrialRecord,
    pub wall_time_us: Option<u128>,
}

/// Runs every trial of `plan`, in parallel when `parallel` is set. Output is
/// in trial order either way and, timings aside, identical.
pub fn run(
    plan: &MonteCarloPlan,
    parallel: bool,
    timing: bool,
) -> Result<Vec<TimedRecord>, MonteCarloError> {
    let one = |i: u64| {
        let t = Instant::now();
        let record = run_trial(plan, i)?;
        Ok(TimedRecord {
            record,
            wall_time_us: timing.then(|| t.elapsed().as_micros()),
        })
    };
    if parallel {
        (0..plan.trials).into_par_iter().map(one).collect()
    } else {
        (0..plan.trials).map(one).collect()
    }
}

pub fn csv_row(r: &TimedRecord) -> String {
    let t = &r.record;
    let mut s = format!(
        "{},{},{},{},{},{},{},{},{},{},",
        t.trial,
        t.seed,
        t.n,
        t.k,
        t.m,
        t.alpha,
        t.beta,
        t.residual_size,
        t.residual_core_size,
        u8::from(t.witness)
    );
    if let Some(l) = t.path_len {
        let _ = write!(s, "{l}");
    }
    if let Some(us) = r.wall_time_us {
        let _ = write!(s, ",{us}");
    }
    s
}

pub fn to_csv(records: &[TimedRecord], timing: bool) -> String {
    let mut s = String::from(CSV_HEADER);
    if timing {
        s.push(',');
        s.push_str(TIMING_COLUMN);
    }
    s.push('\n');
    for r in records {
        s.push_str(&csv_row(r));
        s.push('\n');
    }
    s
}

/// Aggregate lines for the text format.
pub fn summary(plan: &MonteCarloPlan, records: &[TimedRecord]) -> String {
    let recs: Vec<TrialRecord> = records.iter().map(|r| r.record.clone()).collect();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n {}  k {}  m {}  alpha {}  beta {}",
        plan.n, plan.k, plan.m, plan.alpha, plan.beta
    );
    if let Some(n0) = plan.n0 {
        let _ = writeln!(s, "n0 {n0:.6e}");
    }
    let _ = writeln!(s, "trials {}", recs.len());
    let _ = writeln!(s, "witness_rate {:.6}", witness_rate(&recs));
    if !recs.is_empty() {
        let mean = recs.iter().map(|r| r.residual_size as f64).sum::<f64>() / recs.len() as f64;
        let max = recs.iter().map(|r| r.residual_size).max().unwrap_or(0);
        let _ = writeln!(s, "residual_size mean {mean:.3} max {max}");
        if let Some(n0) = plan.n0 {
            let over = recs.iter().filter(|r| r.residual_size as f64 > n0).count();
            let _ = writeln!(s, "residual_above_n0 {over}");
        }
    }
    let lens: Vec<usize> = recs.iter().filter_map(|r| r.path_len).collect();
    if !lens.is_empty() {
        let mean = lens.iter().sum::<usize>() as f64 / lens.len() as f64;
        let _ = writeln!(
            s,
            "path_len count {} mean {mean:.3} max {} per_n {:.4}",
            lens.len(),
            lens.iter().max().unwrap(),
            mean / plan.n as f64
        );
    }
    s
}
