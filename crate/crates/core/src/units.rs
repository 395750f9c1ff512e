//! Parsing of unit-suffixed quantity strings such as `"0.979 uA"`.
//!
//! Config files and CLI inputs carry every dimensional scalar as a string
//! with an explicit unit suffix; this module converts them to SI. Unit names
//! are case-sensitive (`mA` is milliampere, not megaampere). Frequencies are
//! cyclic (Hz); conversion to angular frequency is the caller's concern.

use crate::error::{Error, Result};

/// Physical dimension a quantity is expected to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Current,
    Capacitance,
    Resistance,
    Temperature,
    Frequency,
    RampRate,
    Voltage,
    Time,
    Angle,
}

impl Dimension {
    pub fn name(self) -> &'static str {
        match self {
            Dimension::Current => "current",
            Dimension::Capacitance => "capacitance",
            Dimension::Resistance => "resistance",
            Dimension::Temperature => "temperature",
            Dimension::Frequency => "frequency",
            Dimension::RampRate => "ramp rate",
            Dimension::Voltage => "voltage",
            Dimension::Time => "time",
            Dimension::Angle => "angle",
        }
    }
}

const UNITS: &[(&str, Dimension, f64)] = &[
    ("A", Dimension::Current, 1.0),
    ("mA", Dimension::Current, 1e-3),
    ("uA", Dimension::Current, 1e-6),
    ("nA", Dimension::Current, 1e-9),
    ("F", Dimension::Capacitance, 1.0),
    ("nF", Dimension::Capacitance, 1e-9),
    ("pF", Dimension::Capacitance, 1e-12),
    ("fF", Dimension::Capacitance, 1e-15),
    ("Ohm", Dimension::Resistance, 1.0),
    ("kOhm", Dimension::Resistance, 1e3),
    ("MOhm", Dimension::Resistance, 1e6),
    ("K", Dimension::Temperature, 1.0),
    ("mK", Dimension::Temperature, 1e-3),
    ("Hz", Dimension::Frequency, 1.0),
    ("kHz", Dimension::Frequency, 1e3),
    ("MHz", Dimension::Frequency, 1e6),
    ("GHz", Dimension::Frequency, 1e9),
    ("A/s", Dimension::RampRate, 1.0),
    ("mA/s", Dimension::RampRate, 1e-3),
    ("uA/s", Dimension::RampRate, 1e-6),
    ("V", Dimension::Voltage, 1.0),
    ("mV", Dimension::Voltage, 1e-3),
    ("uV", Dimension::Voltage, 1e-6),
    ("s", Dimension::Time, 1.0),
    ("ms", Dimension::Time, 1e-3),
    ("us", Dimension::Time, 1e-6),
    ("ns", Dimension::Time, 1e-9),
    ("ps", Dimension::Time, 1e-12),
    ("rad", Dimension::Angle, 1.0),
];

/// Parse `"<number> <unit>"` into an SI value of the expected dimension.
///
/// ```
/// use cbjj_core::units::{parse_quantity, Dimension};
/// let ic = parse_quantity("0.979 uA", Dimension::Current).unwrap();
/// assert!((ic - 0.979e-6).abs() < 1e-18);
/// ```
pub fn parse_quantity(text: &str, expected: Dimension) -> Result<f64> {
    let trimmed = text.trim();
    let mut parts = trimmed.split_whitespace();
    let number = parts
        .next()
        .ok_or_else(|| Error::parse(format!("empty quantity for {}", expected.name()), None))?;
    let unit = parts.next().ok_or_else(|| {
        Error::parse(
            format!("missing unit suffix in {trimmed:?} ({} expected)", expected.name()),
            None,
        )
    })?;
    if parts.next().is_some() {
        return Err(Error::parse(
            format!("trailing tokens in quantity {trimmed:?}"),
            None,
        ));
    }
    let value: f64 = number
        .parse()
        .map_err(|_| Error::parse(format!("invalid number {number:?} in {trimmed:?}"), None))?;
    if !value.is_finite() {
        return Err(Error::parse(format!("non-finite quantity {trimmed:?}"), None));
    }
    match UNITS.iter().find(|(name, _, _)| *name == unit) {
        Some((_, dim, factor)) if *dim == expected => Ok(value * factor),
        Some((_, dim, _)) => Err(Error::parse(
            format!(
                "unit {unit:?} is a {} but {} was expected in {trimmed:?}",
                dim.name(),
                expected.name()
            ),
            None,
        )),
        None => Err(Error::parse(format!("unknown unit {unit:?} in {trimmed:?}"), None)),
    }
}

/// Format an SI value back into a quantity string using the given unit.
pub fn format_quantity(value_si: f64, unit: &str) -> Result<String> {
    match UNITS.iter().find(|(name, _, _)| *name == unit) {
        Some((_, _, factor)) => Ok(format!("{} {}", value_si / factor, unit)),
        None => Err(Error::parse(format!("unknown unit {unit:?}"), None)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_quantities() {
        assert_eq!(parse_quantity("290 Ohm", Dimension::Resistance).unwrap(), 290.0);
        assert_eq!(parse_quantity("50 mK", Dimension::Temperature).unwrap(), 0.05);
        assert_eq!(parse_quantity("2.595 GHz", Dimension::Frequency).unwrap(), 2.595e9);
        assert_eq!(parse_quantity("190 uA/s", Dimension::RampRate).unwrap(), 190e-6);
        assert_eq!(parse_quantity("  11.18 pF ", Dimension::Capacitance).unwrap(), 11.18e-12);
    }

    #[test]
    fn rejects_missing_or_wrong_units() {
        assert!(parse_quantity("0.979", Dimension::Current).is_err());
        assert!(parse_quantity("0.979 pF", Dimension::Current).is_err());
        assert!(parse_quantity("0.979 furlong", Dimension::Current).is_err());
        assert!(parse_quantity("abc uA", Dimension::Current).is_err());
        assert!(parse_quantity("1 uA extra", Dimension::Current).is_err());
    }

    #[test]
    fn round_trips_formatting() {
        let s = format_quantity(0.979e-6, "uA").unwrap();
        assert_eq!(parse_quantity(&s, Dimension::Current).unwrap(), 0.979e-6);
    }
}
