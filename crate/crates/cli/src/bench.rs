//! Wall-clock comparison of the engines. Operands are generated before
//! timing starts; each configuration is timed serially.

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use kaluza::{
    build_pipeline, count_operations, mul_fast, mul_naive, Engine, KaluzaNumber, OpCount,
    OperandSampler, Uncounted,
};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

/// One timed configuration. `mean_ns * reps` is within one nanosecond per
/// repetition of `total_ns`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub engine: &'static str,
    pub mode: &'static str,
    pub reps: u64,
    pub total_ns: u128,
    pub mean_ns: u128,
    /// Per product, including right-operand preprocessing.
    pub ops: OpCount,
}

impl BenchRecord {
    fn new(
        engine: &'static str,
        mode: &'static str,
        reps: u64,
        total_ns: u128,
        ops: OpCount,
    ) -> Self {
        BenchRecord {
            engine,
            mode,
            reps,
            total_ns,
            mean_ns: total_ns / u128::from(reps),
            ops,
        }
    }
}

fn time<F: FnMut()>(mut body: F) -> u128 {
    let start = Instant::now();
    body();
    start.elapsed().as_nanos()
}

pub fn measure(reps: u64, seed: u64) -> Result<Vec<BenchRecord>, CliError> {
    let mut sampler = OperandSampler::new(seed);
    let pairs: Vec<(KaluzaNumber, KaluzaNumber)> = (0..reps)
        .map(|_| (sampler.real(), sampler.real()))
        .collect();
    let fixed_right = pairs[0].1;
    let naive_ops = count_operations(Engine::Naive, true)?;
    let fast_ops = count_operations(Engine::Fast, true)?;

    let naive_ns = time(|| {
        for (a, b) in &pairs {
            black_box(mul_naive(black_box(a), black_box(b), &mut Uncounted));
        }
    });

    let reuse_pipeline = build_pipeline(&fixed_right, &mut Uncounted)?;
    let reuse_ns = time(|| {
        for (a, _) in &pairs {
            black_box(mul_fast(black_box(a), &reuse_pipeline, &mut Uncounted));
        }
    });

    let mut failure = None;
    let rebuild_ns = time(|| {
        for (a, b) in &pairs {
            match build_pipeline(black_box(b), &mut Uncounted) {
                Ok(p) => {
                    black_box(mul_fast(black_box(a), &p, &mut Uncounted));
                }
                Err(e) => failure = Some(e),
            }
        }
    });
    if let Some(e) = failure {
        return Err(e.into());
    }

    Ok(vec![
        BenchRecord::new("naive", "direct", reps, naive_ns, naive_ops),
        BenchRecord::new("fast", "reuse", reps, reuse_ns, fast_ops),
        BenchRecord::new("fast", "rebuild", reps, rebuild_ns, fast_ops),
    ])
}

pub fn run(reps: u64, seed: u64, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let records = measure(reps, seed)?;
    match format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record([
                "engine", "mode", "reps", "total_ns", "mean_ns", "muls", "adds",
            ])?;
            for r in &records {
                writer.write_record([
                    r.engine.to_string(),
                    r.mode.to_string(),
                    r.reps.to_string(),
                    r.total_ns.to_string(),
                    r.mean_ns.to_string(),
                    r.ops.multiplications.to_string(),
                    r.ops.additions.to_string(),
                ])?;
            }
            writer.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "{:<6} {:<8} {:>8} {:>14} {:>10} {:>6} {:>6}",
                "engine", "mode", "reps", "total_ns", "mean_ns", "muls", "adds"
            )?;
            for r in &records {
                writeln!(
                    out,
                    "{:<6} {:<8} {:>8} {:>14} {:>10} {:>6} {:>6}",
                    r.engine,
                    r.mode,
                    r.reps,
                    r.total_ns,
                    r.mean_ns,
                    r.ops.multiplications,
                    r.ops.additions
                )?;
            }
            let naive = records[0].total_ns as f64;
            for r in &records[1..] {
                writeln!(
                    out,
                    "naive/{} time ratio: {:.2}",
                    r.mode,
                    naive / (r.total_ns.max(1) as f64)
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_consistent() {
        let records = measure(50, 3).unwrap();
        assert_eq!(records.len(), 3);
        for r in &records {
            assert_eq!(r.reps, 50);
            let drift = r.total_ns - r.mean_ns * 50;
            assert!(drift < 50);
        }
        assert_eq!(records[0].ops, OpCount::new(1024, 992));
        assert_eq!(records[1].ops, OpCount::new(512, 576));
        assert_eq!(records[2].ops, OpCount::new(512, 576));
    }
}
