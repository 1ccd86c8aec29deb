//! Unit tokens accepted in spec files and their SI conversion factors.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Length,
    Modulus,
    Stiffness,
    Force,
    TemperatureChange,
    Expansion,
}

impl Dimension {
    pub fn describe(self) -> &'static str {
        match self {
            Dimension::Length => "length (m, mm)",
            Dimension::Modulus => "modulus (GPa, MPa, Pa)",
            Dimension::Stiffness => "spring stiffness (MPa/m, Pa/m)",
            Dimension::Force => "force (MN, kN, N)",
            Dimension::TemperatureChange => "temperature change (degC)",
            Dimension::Expansion => "thermal expansion (1/degC)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Meter,
    Millimeter,
    GigaPascal,
    MegaPascal,
    Pascal,
    MegaPascalPerMeter,
    PascalPerMeter,
    MegaNewton,
    KiloNewton,
    Newton,
    DegC,
    PerDegC,
}

const ALL: [Unit; 12] = [
    Unit::Meter,
    Unit::Millimeter,
    Unit::GigaPascal,
    Unit::MegaPascal,
    Unit::Pascal,
    Unit::MegaPascalPerMeter,
    Unit::PascalPerMeter,
    Unit::MegaNewton,
    Unit::KiloNewton,
    Unit::Newton,
    Unit::DegC,
    Unit::PerDegC,
];

impl Unit {
    pub fn token(self) -> &'static str {
        match self {
            Unit::Meter => "m",
            Unit::Millimeter => "mm",
            Unit::GigaPascal => "GPa",
            Unit::MegaPascal => "MPa",
            Unit::Pascal => "Pa",
            Unit::MegaPascalPerMeter => "MPa/m",
            Unit::PascalPerMeter => "Pa/m",
            Unit::MegaNewton => "MN",
            Unit::KiloNewton => "kN",
            Unit::Newton => "N",
            Unit::DegC => "degC",
            Unit::PerDegC => "1/degC",
        }
    }

    /// Case-sensitive: `MN` and `mN` are different things.
    pub fn parse(token: &str) -> Option<Self> {
        ALL.into_iter().find(|u| u.token() == token)
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Unit::Meter | Unit::Millimeter => Dimension::Length,
            Unit::GigaPascal | Unit::MegaPascal | Unit::Pascal => Dimension::Modulus,
            Unit::MegaPascalPerMeter | Unit::PascalPerMeter => Dimension::Stiffness,
            Unit::MegaNewton | Unit::KiloNewton | Unit::Newton => Dimension::Force,
            Unit::DegC => Dimension::TemperatureChange,
            Unit::PerDegC => Dimension::Expansion,
        }
    }

    pub fn si_factor(self) -> f64 {
        match self {
            Unit::Meter | Unit::Pascal | Unit::PascalPerMeter | Unit::Newton => 1.0,
            Unit::Millimeter => 1e-3,
            Unit::GigaPascal => 1e9,
            Unit::MegaPascal | Unit::MegaPascalPerMeter | Unit::MegaNewton => 1e6,
            Unit::KiloNewton => 1e3,
            Unit::DegC | Unit::PerDegC => 1.0,
        }
    }
}

/// A number with its unit, keeping the literal as written.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantity {
    literal: String,
    value: f64,
    unit: Unit,
}

impl Quantity {
    /// Parses `"<number> <unit>"`.
    pub fn parse(text: &str, expected: Dimension) -> Result<Self, String> {
        let mut parts = text.split_whitespace();
        let (Some(number), unit, None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("expected '<number> <unit>', got '{text}'"));
        };
        let Some(unit) = unit else {
            return Err(format!("missing unit for '{number}'; expected {}", expected.describe()));
        };
        let value: f64 = number
            .parse()
            .map_err(|_| format!("'{number}' is not a number"))?;
        if !value.is_finite() {
            return Err(format!("'{number}' is not finite"));
        }
        let unit = Unit::parse(unit).ok_or_else(|| format!("unknown unit token '{unit}'"))?;
        if unit.dimension() != expected {
            return Err(format!(
                "unit '{}' is not a {}",
                unit.token(),
                expected.describe()
            ));
        }
        Ok(Self { literal: number.to_string(), value, unit })
    }

    /// Builds a quantity from an SI value, expressed in `unit`.
    pub fn from_si(si: f64, unit: Unit) -> Self {
        let value = si / unit.si_factor();
        Self { literal: format!("{value}"), value, unit }
    }

    pub fn si(&self) -> f64 {
        self.value * self.unit.si_factor()
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.literal, self.unit.token())
    }
}
