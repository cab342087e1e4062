use rug::Integer;

use crate::error::{Error, Result};

/// Working precision for every multiprecision value in the crate.
///
/// The binary precision is the smallest number of bits that can hold the
/// requested number of decimal digits, i.e. `ceil(decimal_digits * log2 10)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    decimal_digits: u32,
    binary_precision: u32,
}

impl PrecisionContext {
    /// Double precision carries a little under 16 significant digits; nothing
    /// below that is accepted.
    pub const MIN_DIGITS: u32 = 16;

    pub fn new(decimal_digits: u32) -> Result<Self> {
        if decimal_digits < Self::MIN_DIGITS {
            return Err(Error::InvalidPrecision {
                digits: decimal_digits,
                min: Self::MIN_DIGITS,
            });
        }
        Ok(Self {
            decimal_digits,
            binary_precision: bits_for_digits(decimal_digits),
        })
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    pub fn binary_precision(&self) -> u32 {
        self.binary_precision
    }

    /// A context `extra` decimal digits wider than this one.
    pub fn with_guard_digits(&self, extra: u32) -> Self {
        let digits = self.decimal_digits + extra;
        Self {
            decimal_digits: digits,
            binary_precision: bits_for_digits(digits),
        }
    }

    /// Context matching an existing value's binary precision. The decimal
    /// figure is the number of digits that precision fully represents.
    pub(crate) fn from_bits(bits: u32) -> Self {
        let digits = (bits as f64 * std::f64::consts::LOG10_2).floor() as u32;
        Self {
            decimal_digits: digits,
            binary_precision: bits,
        }
    }

    /// `10^(-decimal_digits + offset)` as an f64, handy for tolerances.
    pub fn tolerance(&self, offset: i32) -> f64 {
        10f64.powi(offset - self.decimal_digits as i32)
    }
}

// 10^d is never a power of two for d >= 1, so its bit length is exactly
// ceil(log2(10^d)).
fn bits_for_digits(digits: u32) -> u32 {
    Integer::from(Integer::u_pow_u(10, digits)).significant_bits()
}
