//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use kaluza::fastmul::{bisymmetry_failures, compare_printed_diagonal};
use kaluza::kaluza::{compare_printed_blocks, compare_symbolic};
use kaluza::{
    build_mul_matrix, build_pipeline, count_operations, mul_fast, mul_naive, CayleyTable, Engine,
    KaluzaNumber, OpCount, OperandSampler, Permutation32, SymbolicMatrix, Uncounted, DIM,
};

const SEED: u64 = 1;
const RANDOM_PAIRS: usize = 10_000;
const INTEGER_BOUND: i64 = 1 << 10;
const REAL_RELATIVE_TOLERANCE: f64 = 1e-12;
const MATERIALIZATION_TOLERANCE: f64 = 1e-12;
const RANDOM_FACTORIZATION_OPERANDS: usize = 20;
const ORACLE_TIME_LIMIT_SECS: f64 = 60.0;
const EXPECTED_REDUCTION_PERMILLE: u64 = 460;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(condition: bool, detail: String) -> Outcome {
    if condition {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn counts() -> (OpCount, OpCount) {
    let naive = count_operations(Engine::Naive, true).expect("naive engine has no preconditions");
    let fast = count_operations(Engine::Fast, true).expect("diagonal derives from the table");
    (naive, fast)
}

fn criterion_1() -> Outcome {
    let (naive, fast) = counts();
    check(
        naive.multiplications == 1024 && fast.multiplications == 512,
        format!(
            "multiplications: naive {}, fast {}",
            naive.multiplications, fast.multiplications
        ),
    )
}

fn criterion_2() -> Outcome {
    let (naive, fast) = counts();
    let pipeline_only = count_operations(Engine::Fast, false).map_err(|e| e.to_string())?;
    check(
        naive.additions == 992 && fast.additions == 576 && pipeline_only.additions == 544,
        format!(
            "additions: naive {}, fast {} ({} pipeline + {} preprocessing)",
            naive.additions,
            fast.additions,
            pipeline_only.additions,
            fast.additions - pipeline_only.additions
        ),
    )
}

fn criterion_3() -> Outcome {
    let (naive, fast) = counts();
    let (n, f) = (naive.total(), fast.total());
    // round(1000 * (1 - f/n)) in integers
    let permille = (2000 * (n - f) + n) / (2 * n);
    check(
        n == 2016 && f == 1088 && permille == EXPECTED_REDUCTION_PERMILLE,
        format!("1 - {f}/{n} = {}.{}%", permille / 10, permille % 10),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut basis_failures = 0;
    for j in 0..DIM {
        let b = KaluzaNumber::basis(j);
        let pipeline = build_pipeline(&b, &mut Uncounted).map_err(|e| e.to_string())?;
        for i in 0..DIM {
            let a = KaluzaNumber::basis(i);
            if mul_fast(&a, &pipeline, &mut Uncounted) != mul_naive(&a, &b, &mut Uncounted) {
                basis_failures += 1;
            }
        }
    }

    let mut sampler = OperandSampler::new(SEED);
    let mut integer_failures = 0;
    for _ in 0..RANDOM_PAIRS {
        let a = sampler.integer_with_bound(INTEGER_BOUND);
        let b = sampler.integer_with_bound(INTEGER_BOUND);
        let pipeline = build_pipeline(&b, &mut Uncounted).map_err(|e| e.to_string())?;
        if mul_fast(&a, &pipeline, &mut Uncounted) != mul_naive(&a, &b, &mut Uncounted) {
            integer_failures += 1;
        }
    }

    let mut worst = 0.0f64;
    for _ in 0..RANDOM_PAIRS {
        let a = sampler.real();
        let b = sampler.real();
        let pipeline = build_pipeline(&b, &mut Uncounted).map_err(|e| e.to_string())?;
        let naive = mul_naive(&a, &b, &mut Uncounted);
        let diff = (mul_fast(&a, &pipeline, &mut Uncounted) - naive).max_abs();
        worst = worst.max(diff / naive.max_abs());
    }
    let elapsed = start.elapsed().as_secs_f64();

    check(
        basis_failures == 0
            && integer_failures == 0
            && worst <= REAL_RELATIVE_TOLERANCE
            && elapsed < ORACLE_TIME_LIMIT_SECS,
        format!(
            "basis mismatches {basis_failures}/1024, integer mismatches {integer_failures}/{RANDOM_PAIRS}, \
             max real relative error {worst:.3e} (limit {REAL_RELATIVE_TOLERANCE:e}), {elapsed:.2}s"
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut operands: Vec<KaluzaNumber> = (0..DIM).map(KaluzaNumber::basis).collect();
    let mut sampler = OperandSampler::new(SEED);
    operands.extend((0..RANDOM_FACTORIZATION_OPERANDS).map(|_| sampler.real()));
    let mut worst = 0.0f64;
    for b in &operands {
        let pipeline = build_pipeline(b, &mut Uncounted).map_err(|e| e.to_string())?;
        let diff = pipeline.materialize() - build_mul_matrix(b).to_dense();
        worst = worst.max(diff.amax());
    }
    check(
        worst <= MATERIALIZATION_TOLERANCE,
        format!(
            "{} operands, max entrywise difference {worst:.3e} (limit {MATERIALIZATION_TOLERANCE:e})",
            operands.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let permuted =
        SymbolicMatrix::from_table(CayleyTable::kaluza()).permuted(&Permutation32::kaluza());
    let failures = bisymmetry_failures(&permuted);
    check(
        failures.is_empty(),
        format!(
            "{} of 256 blocks bisymmetric {:?}",
            256 - failures.len(),
            failures
        ),
    )
}

fn criterion_7() -> Outcome {
    let p = Permutation32::kaluza();
    let composed = p.then(&p);
    let fixed = (0..DIM)
        .filter(|&i| composed.map()[i] as usize == i)
        .count();
    check(fixed == DIM, format!("P∘P fixes {fixed} of {DIM} indices"))
}

fn criterion_8() -> Outcome {
    let table = CayleyTable::kaluza();
    let blocks = compare_printed_blocks(table);
    let permuted = compare_symbolic(
        &SymbolicMatrix::from_table(table).permuted(&Permutation32::kaluza()),
        kaluza::printed::permuted_matrix(),
    );
    let diagonal = compare_printed_diagonal().map_err(|e| e.to_string())?;
    for m in &blocks {
        println!("  warning: multiplication matrix {m}");
    }
    for m in &permuted {
        println!("  warning: permuted matrix {m}");
    }
    for m in &diagonal {
        println!("  warning: diagonal {m}");
    }
    Ok(format!(
        "report produced: {} multiplication-matrix, {} permuted-matrix, {} diagonal mismatches (warnings)",
        blocks.len(),
        permuted.len(),
        diagonal.len()
    ))
}

fn criterion_9() -> Outcome {
    let table = CayleyTable::kaluza();
    let violations = table.validate();
    for v in &violations {
        println!("  violation: {v}");
    }
    let squares: Vec<i8> = (0..DIM)
        .map(|i| {
            let p = table.get(i, i);
            if p.index() == 0 {
                p.sign.as_i8()
            } else {
                0
            }
        })
        .collect();
    let negative = squares.iter().filter(|&&s| s == -1).count();
    check(
        violations.is_empty() && squares.iter().all(|&s| s != 0),
        format!(
            "{} violations; e_i^2 = +1 for {}, -1 for {negative}",
            violations.len(),
            DIM - negative
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("operation counts, multiplication", criterion_1),
        ("operation counts, addition", criterion_2),
        ("total reduction", criterion_3),
        ("oracle equivalence", criterion_4),
        ("factorization identity", criterion_5),
        ("bisymmetric blocks", criterion_6),
        ("involution", criterion_7),
        ("fixture concordance", criterion_8),
        ("cayley table validity", criterion_9),
    ];
    for (i, j, printed, used) in kaluza::cayley::PRINTED_CORRECTIONS {
        println!(
            "note: table cell e{i}*e{j} uses {} (transcription reads {}); associativity failures with transcription: {}",
            kaluza::cayley::unit_symbol(used),
            kaluza::cayley::unit_symbol(printed),
            CayleyTable::printed().associativity_failures().len()
        );
    }
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
