use std::io::Write;

use clap::ValueEnum;
use kaluza::linops::{matrix_to_text, LinearStage};
use kaluza::{build_mul_matrix, build_pipeline, CayleyTable, DiagonalSpec, Quadrant, Uncounted};

use crate::error::CliError;
use crate::operand;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Cayley table, or one quadrant with --quadrant.
    #[value(alias = "table-quadrant")]
    Table,
    /// 32x32 multiplication matrix of --operand.
    MulMatrix,
    /// Dense permutation and pairwise Hadamard factors; the diagonal too with --operand.
    Factors,
    /// 512-entry diagonal of --operand, one block of 32 per line.
    Diagonal,
}

fn require<'a>(operand: Option<&'a str>, target: &str) -> Result<&'a str, CliError> {
    operand.ok_or_else(|| CliError::Usage(format!("`dump {target}` requires --operand")))
}

pub fn run(
    target: Target,
    quadrant: Option<Quadrant>,
    operand: Option<&str>,
    symbolic: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match target {
        Target::Table => {
            let table = CayleyTable::kaluza();
            match quadrant {
                Some(q) => write!(out, "{}", table.dump_quadrant(q))?,
                None => write!(out, "{}", table.to_text())?,
            }
        }
        Target::MulMatrix => {
            let b = operand::load(require(operand, "mul-matrix")?)?;
            write!(out, "{}", matrix_to_text(&build_mul_matrix(&b).to_dense()))?;
        }
        Target::Factors => {
            let p = LinearStage::Permute(kaluza::Permutation32::kaluza());
            let w = LinearStage::HadamardPairs { pairs: 16 };
            writeln!(out, "# P32")?;
            write!(out, "{}", matrix_to_text(&p.materialize()))?;
            writeln!(out, "# W32")?;
            write!(out, "{}", matrix_to_text(&w.materialize()))?;
            if let Some(arg) = operand {
                let pipeline = build_pipeline(&operand::load(arg)?, &mut Uncounted)?;
                writeln!(out, "# D512")?;
                write_blocks(pipeline.diagonal(), out)?;
            }
        }
        Target::Diagonal => {
            if symbolic {
                write!(out, "{}", DiagonalSpec::kaluza()?.to_text())?;
            } else {
                let b = operand::load(require(operand, "diagonal")?)?;
                let pipeline = build_pipeline(&b, &mut Uncounted)?;
                write_blocks(pipeline.diagonal(), out)?;
            }
        }
    }
    Ok(())
}

fn write_blocks(diagonal: &[f64], out: &mut dyn Write) -> Result<(), CliError> {
    for block in diagonal.chunks(32) {
        let cells: Vec<String> = block
            .iter()
            .map(|&v| kaluza::linops::format_entry(v))
            .collect();
        writeln!(out, "{}", cells.join(" "))?;
    }
    Ok(())
}
