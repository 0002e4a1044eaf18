//! Signed references to a coefficient or basis slot.

use std::fmt;
use std::ops::Neg;

/// Sign of a table entry. Multiplying by a sign is a negation, never a
/// counted arithmetic operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(value: i8) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    #[inline]
    pub fn apply(self, value: f64) -> f64 {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// `±x_index` for some family of symbols `x` (basis units, coefficients of
/// the right operand, entries of the c-vector).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedIndex {
    pub sign: Sign,
    pub index: u8,
}

impl SignedIndex {
    pub const fn plus(index: u8) -> Self {
        SignedIndex {
            sign: Sign::Plus,
            index,
        }
    }

    pub const fn minus(index: u8) -> Self {
        SignedIndex {
            sign: Sign::Minus,
            index,
        }
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    /// Resolves the reference against concrete values.
    #[inline]
    pub fn eval(self, values: &[f64]) -> f64 {
        self.sign.apply(values[self.index as usize])
    }

    /// Renders as `x3` / `-x3` for the given symbol letter.
    pub fn symbol(self, letter: char) -> String {
        match self.sign {
            Sign::Plus => format!("{letter}{}", self.index),
            Sign::Minus => format!("-{letter}{}", self.index),
        }
    }

    /// Parses the output of [`SignedIndex::symbol`]; a leading `+` is accepted.
    pub fn parse_symbol(text: &str, letter: char) -> Option<Self> {
        let (sign, rest) = match text.as_bytes().first()? {
            b'-' => (Sign::Minus, &text[1..]),
            b'+' => (Sign::Plus, &text[1..]),
            _ => (Sign::Plus, text),
        };
        let digits = rest.strip_prefix(letter)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let index: u8 = digits.parse().ok()?;
        Some(SignedIndex { sign, index })
    }
}

impl Neg for SignedIndex {
    type Output = SignedIndex;

    fn neg(self) -> SignedIndex {
        SignedIndex {
            sign: -self.sign,
            index: self.index,
        }
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        write!(f, "{}", self.index)
    }
}
