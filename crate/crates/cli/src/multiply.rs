use std::io::Write;

use kaluza::{build_pipeline, mul_fast, mul_naive, KaluzaNumber, Uncounted};

use crate::error::CliError;
use crate::operand;
use crate::EngineArg;

pub fn run(
    left: &str,
    right: &str,
    engine: EngineArg,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let a = operand::load(left)?;
    let b = operand::load(right)?;
    let fast = || -> Result<KaluzaNumber, CliError> {
        let pipeline = build_pipeline(&b, &mut Uncounted)?;
        Ok(mul_fast(&a, &pipeline, &mut Uncounted))
    };
    match engine {
        EngineArg::Naive => writeln!(out, "{}", mul_naive(&a, &b, &mut Uncounted))?,
        EngineArg::Fast => writeln!(out, "{}", fast()?)?,
        EngineArg::Both => {
            let naive = mul_naive(&a, &b, &mut Uncounted);
            let fast = fast()?;
            writeln!(out, "{naive}")?;
            writeln!(out, "{fast}")?;
            writeln!(out, "max abs difference: {}", (naive - fast).max_abs())?;
        }
    }
    Ok(())
}
