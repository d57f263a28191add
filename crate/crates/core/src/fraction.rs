//! Exact rational averages.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

/// Exact rational number used for every average in the crate.
pub type Fraction = Ratio<i64>;

/// Formats as `p/q`, always with an explicit denominator.
pub fn format_fraction(value: &Fraction) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn parse_fraction(text: &str) -> Option<Fraction> {
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (text.trim().parse().ok()?, 1),
    };
    if q == 0 {
        return None;
    }
    Some(Fraction::new(p, q))
}

pub fn mean(total: i64, count: usize) -> Fraction {
    Fraction::new(total, count as i64)
}

/// Serde adapter writing a [`Fraction`] as `"p/q"`.
pub fn serialize<S: Serializer>(value: &Fraction, serializer: S) -> Result<S::Ok, S::Error> {
    format_fraction(value).serialize(serializer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_has_denominator() {
        assert_eq!(format_fraction(&Fraction::new(2, 2)), "1/1");
        assert_eq!(format_fraction(&Fraction::new(3, 6)), "1/2");
        assert_eq!(parse_fraction("4/8"), Some(Fraction::new(1, 2)));
        assert_eq!(parse_fraction("3"), Some(Fraction::from_integer(3)));
        assert_eq!(parse_fraction("1/0"), None);
    }
}
