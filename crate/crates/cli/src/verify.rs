//! Deterministic consistency report. Fixture mismatches are warnings; any
//! other failing section makes the command exit with status 1.

use std::io::Write;

use kaluza::cayley::{unit_symbol, PRINTED_CORRECTIONS};
use kaluza::fastmul::{bisymmetry_failures, compare_printed_diagonal};
use kaluza::kaluza::{compare_printed_blocks, compare_symbolic};
use kaluza::{
    build_mul_matrix, build_pipeline, count_operations, mul_fast, mul_naive, CayleyTable, Engine,
    KaluzaNumber, OperandSampler, Permutation32, SymbolicMatrix, Uncounted, DIM,
};

use crate::error::CliError;

const REAL_RELATIVE_TOLERANCE: f64 = 1e-12;
const MATERIALIZATION_TOLERANCE: f64 = 1e-12;
const RANDOM_FACTORIZATION_OPERANDS: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        }
    }
}

struct Section {
    name: &'static str,
    status: Status,
    summary: String,
    details: Vec<String>,
}

impl Section {
    fn new(name: &'static str, ok: bool, summary: String) -> Self {
        Section {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            summary,
            details: Vec::new(),
        }
    }

    fn with_details(mut self, details: Vec<String>) -> Self {
        self.details = details;
        self
    }
}

fn table_section() -> Section {
    let table = CayleyTable::kaluza();
    let violations = table.validate();
    let negative = (0..DIM)
        .filter(|&i| table.get(i, i).sign.as_i8() < 0)
        .count();
    let mut details: Vec<String> = PRINTED_CORRECTIONS
        .iter()
        .map(|&(i, j, printed, used)| {
            format!(
                "cell e{i}*e{j} uses {} (transcription reads {})",
                unit_symbol(used),
                unit_symbol(printed)
            )
        })
        .collect();
    details.extend(violations.iter().map(ToString::to_string));
    Section::new(
        "table",
        violations.is_empty(),
        format!(
            "{} violations, {} squares are -1, {} associativity failures",
            violations.len(),
            negative,
            table.associativity_failures().len()
        ),
    )
    .with_details(details)
}

fn basis_section() -> Result<Section, CliError> {
    let mut mismatches = Vec::new();
    for j in 0..DIM {
        let b = KaluzaNumber::basis(j);
        let pipeline = build_pipeline(&b, &mut Uncounted)?;
        for i in 0..DIM {
            let a = KaluzaNumber::basis(i);
            if mul_fast(&a, &pipeline, &mut Uncounted) != mul_naive(&a, &b, &mut Uncounted) {
                mismatches.push(format!("e{i} * e{j}"));
            }
        }
    }
    Ok(Section::new(
        "basis-pairs",
        mismatches.is_empty(),
        format!("{}/1024 pairs bit-exact", 1024 - mismatches.len()),
    )
    .with_details(mismatches))
}

fn bisymmetry_section() -> Section {
    let permuted =
        SymbolicMatrix::from_table(CayleyTable::kaluza()).permuted(&Permutation32::kaluza());
    let failures = bisymmetry_failures(&permuted);
    Section::new(
        "bisymmetry",
        failures.is_empty(),
        format!("{}/256 blocks bisymmetric", 256 - failures.len()),
    )
    .with_details(
        failures
            .iter()
            .map(|(r, k)| format!("block row {r}, block column {k}"))
            .collect(),
    )
}

fn factorization_section(seed: u64) -> Result<Section, CliError> {
    let mut operands: Vec<KaluzaNumber> = (0..DIM).map(KaluzaNumber::basis).collect();
    let mut sampler = OperandSampler::new(seed);
    operands.extend((0..RANDOM_FACTORIZATION_OPERANDS).map(|_| sampler.real()));
    let mut worst = 0.0f64;
    for b in &operands {
        let pipeline = build_pipeline(b, &mut Uncounted)?;
        worst = worst.max((pipeline.materialize() - build_mul_matrix(b).to_dense()).amax());
    }
    Ok(Section::new(
        "factorization",
        worst <= MATERIALIZATION_TOLERANCE,
        format!(
            "{} operands, max entrywise difference {worst:e} (limit {MATERIALIZATION_TOLERANCE:e})",
            operands.len()
        ),
    ))
}

fn fixtures_section() -> Result<Section, CliError> {
    let table = CayleyTable::kaluza();
    let mut details: Vec<String> = compare_printed_blocks(table)
        .iter()
        .map(|m| format!("multiplication matrix {m}"))
        .collect();
    let permuted = SymbolicMatrix::from_table(table).permuted(&Permutation32::kaluza());
    details.extend(
        compare_symbolic(&permuted, kaluza::printed::permuted_matrix())
            .iter()
            .map(|m| format!("permuted matrix {m}")),
    );
    details.extend(
        compare_printed_diagonal()?
            .iter()
            .map(|m| format!("diagonal {m}")),
    );
    let mut section = Section::new(
        "fixtures",
        true,
        format!("{} mismatches against printed matrices", details.len()),
    );
    if !details.is_empty() {
        section.status = Status::Warn;
    }
    Ok(section.with_details(details))
}

fn op_count_section() -> Result<Section, CliError> {
    let naive = count_operations(Engine::Naive, true)?;
    let fast = count_operations(Engine::Fast, true)?;
    let ok = (
        naive.multiplications,
        naive.additions,
        fast.multiplications,
        fast.additions,
    ) == (1024, 992, 512, 576);
    let reduction = 100.0 * (1.0 - fast.total() as f64 / naive.total() as f64);
    Ok(
        Section::new("op-counts", ok, format!("naive: {naive}; fast: {fast}")).with_details(vec![
            format!(
                "total {} vs {}: {reduction:.1}% fewer operations",
                fast.total(),
                naive.total()
            ),
        ]),
    )
}

fn random_section(trials: u64, seed: u64) -> Result<Section, CliError> {
    let mut sampler = OperandSampler::new(seed);
    let mut integer_failures = 0u64;
    for _ in 0..trials {
        let a = sampler.integer();
        let b = sampler.integer();
        let pipeline = build_pipeline(&b, &mut Uncounted)?;
        if mul_fast(&a, &pipeline, &mut Uncounted) != mul_naive(&a, &b, &mut Uncounted) {
            integer_failures += 1;
        }
    }
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let a = sampler.real();
        let b = sampler.real();
        let pipeline = build_pipeline(&b, &mut Uncounted)?;
        let naive = mul_naive(&a, &b, &mut Uncounted);
        let diff = (mul_fast(&a, &pipeline, &mut Uncounted) - naive).max_abs();
        worst = worst.max(diff / naive.max_abs().max(f64::MIN_POSITIVE));
    }
    Ok(Section::new(
        "random",
        integer_failures == 0 && worst <= REAL_RELATIVE_TOLERANCE,
        format!("seed {seed}, {trials} integer pairs and {trials} real pairs"),
    )
    .with_details(vec![
        format!(
            "integer pairs bit-exact: {}/{trials}",
            trials - integer_failures
        ),
        format!("real pairs max relative error: {worst:.3e} (limit {REAL_RELATIVE_TOLERANCE:e})"),
    ]))
}

pub fn run(trials: u64, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let sections = [
        table_section(),
        basis_section()?,
        bisymmetry_section(),
        factorization_section(seed)?,
        fixtures_section()?,
        op_count_section()?,
        random_section(trials, seed)?,
    ];
    for section in &sections {
        writeln!(
            out,
            "[{}] {}: {}",
            section.status.label(),
            section.name,
            section.summary
        )?;
        for line in &section.details {
            writeln!(out, "    {line}")?;
        }
    }
    let failed = sections.iter().filter(|s| s.status == Status::Fail).count();
    if failed == 0 {
        writeln!(out, "result: PASS")?;
        Ok(())
    } else {
        writeln!(out, "result: FAIL ({failed} sections)")?;
        Err(CliError::VerificationFailed(failed))
    }
}
