//! Operands come from a file when the argument names an existing file, and
//! are parsed inline otherwise. Inline values are either a single basis
//! symbol (`1`, `e6`, `-e6`) or 32 decimals separated by whitespace or
//! commas.

use std::fs;
use std::path::Path;

use kaluza::cayley::parse_unit_symbol;
use kaluza::KaluzaNumber;

use crate::error::CliError;

pub fn load(argument: &str) -> Result<KaluzaNumber, CliError> {
    let path = Path::new(argument);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|error| CliError::Read {
            path: path.to_path_buf(),
            error,
        })?;
        return text.parse().map_err(|error| CliError::Operand {
            source_name: path.display().to_string(),
            error,
        });
    }
    let trimmed = argument.trim();
    if let Some(unit) = parse_unit_symbol(trimmed) {
        let mut x = KaluzaNumber::zero();
        x[unit.index()] = unit.sign.apply(1.0);
        return Ok(x);
    }
    // same length, so reported columns still point into the argument
    argument
        .replace(',', " ")
        .parse()
        .map_err(|error| CliError::Operand {
            source_name: "inline operand".into(),
            error,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_forms() {
        assert_eq!(load("1").unwrap(), KaluzaNumber::one());
        assert_eq!(load("-e6").unwrap(), -KaluzaNumber::basis(6));
        let listed: Vec<String> = (0..32).map(|k| k.to_string()).collect();
        let x = load(&listed.join(",")).unwrap();
        assert_eq!(x[31], 31.0);
        assert!(matches!(load("e32"), Err(CliError::Operand { .. })));
    }
}
