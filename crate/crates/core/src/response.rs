//! Frequency sweeps and Bode-data output.

use std::f64::consts::PI;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::Complex;
use crate::tf::{eval_tf, EvalError, FracTF};

/// Upper bound on the number of samples a grid may produce.
pub const MAX_GRID_POINTS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GridError {
    #[error("{name} = {value} must be finite and positive")]
    InvalidBound { name: &'static str, value: f64 },
    #[error("omega_min = {min} must be below omega_max = {max}")]
    EmptyRange { min: f64, max: f64 },
    #[error("points per decade must be at least 1")]
    ZeroDensity,
    #[error("grid would have more than {MAX_GRID_POINTS} points")]
    TooManyPoints,
}

/// Logarithmically spaced angular frequencies in `[omega_min, omega_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid {
    omega_min: f64,
    omega_max: f64,
    points_per_decade: u32,
}

impl Default for FrequencyGrid {
    /// `[0.01, 100]` rad/s at 20 points per decade.
    fn default() -> Self {
        FrequencyGrid {
            omega_min: 0.01,
            omega_max: 100.0,
            points_per_decade: 20,
        }
    }
}

impl FrequencyGrid {
    pub fn new(omega_min: f64, omega_max: f64, points_per_decade: u32) -> Result<Self, GridError> {
        for (name, value) in [("omega_min", omega_min), ("omega_max", omega_max)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(GridError::InvalidBound { name, value });
            }
        }
        if omega_min >= omega_max {
            return Err(GridError::EmptyRange {
                min: omega_min,
                max: omega_max,
            });
        }
        if points_per_decade == 0 {
            return Err(GridError::ZeroDensity);
        }
        let grid = FrequencyGrid {
            omega_min,
            omega_max,
            points_per_decade,
        };
        if grid.intervals() >= MAX_GRID_POINTS {
            return Err(GridError::TooManyPoints);
        }
        Ok(grid)
    }

    pub fn omega_min(&self) -> f64 {
        self.omega_min
    }

    pub fn omega_max(&self) -> f64 {
        self.omega_max
    }

    pub fn points_per_decade(&self) -> u32 {
        self.points_per_decade
    }

    /// Number of log-spaced intervals: `decades · ppd` when that is integral
    /// (to within 1e-9), rounded up otherwise.
    fn intervals(&self) -> usize {
        let decades = self.omega_max.log10() - self.omega_min.log10();
        let span = decades * f64::from(self.points_per_decade);
        let nearest = span.round();
        let n = if (span - nearest).abs() <= 1e-9 * nearest.max(1.0) {
            nearest
        } else {
            span.ceil()
        };
        (n.max(1.0)).min(MAX_GRID_POINTS as f64) as usize
    }

    /// Sample frequencies in ascending order, both endpoints exact.
    pub fn frequencies(&self) -> Vec<f64> {
        let steps = self.intervals();
        let lo = self.omega_min.log10();
        let hi = self.omega_max.log10();
        (0..=steps)
            .map(|i| match i {
                0 => self.omega_min,
                _ if i == steps => self.omega_max,
                _ => 10f64.powf(lo + (hi - lo) * i as f64 / steps as f64),
            })
            .collect()
    }
}

/// One sample of `H(jω)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResponsePoint {
    pub omega: f64,
    pub mag_linear: f64,
    pub mag_db: f64,
    pub phase_rad: f64,
    pub phase_deg: f64,
}

impl ResponsePoint {
    /// Fails when `value` is zero, where the phase is undefined.
    pub fn from_value(omega: f64, value: Complex) -> Result<Self, EvalError> {
        let phase_rad = value
            .argument()
            .map_err(|_| EvalError::ZeroResponse { omega })?;
        let mag_linear = value.magnitude();
        Ok(ResponsePoint {
            omega,
            mag_linear,
            mag_db: 20.0 * mag_linear.log10(),
            phase_rad,
            phase_deg: phase_rad * 180.0 / PI,
        })
    }
}

/// Evaluates `tf` at every grid frequency, in ascending order. The first
/// failing frequency aborts the sweep.
pub fn sweep(tf: &FracTF, grid: &FrequencyGrid) -> Result<Vec<ResponsePoint>, EvalError> {
    grid.frequencies()
        .into_iter()
        .map(|omega| ResponsePoint::from_value(omega, eval_tf(tf, omega)?))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown output format '{0}', expected csv or json")]
pub struct UnknownFormat(String);

impl FromStr for OutputFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

pub const CSV_HEADER: &str = "omega,mag_linear,mag_db,phase_rad,phase_deg";

const SIGNIFICANT_DIGITS: i32 = 15;

/// Decimal with 15 significant digits; switches to scientific notation
/// outside `[1e-5, 1e15)`.
fn format_number(v: f64) -> String {
    if v == 0.0 {
        return format!("{:.*}", (SIGNIFICANT_DIGITS - 1) as usize, 0.0);
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (SIGNIFICANT_DIGITS - 1 - exp) as usize, v)
    } else {
        format!("{:.*e}", (SIGNIFICANT_DIGITS - 1) as usize, v)
    }
}

pub fn write_csv<W: Write>(points: &[ResponsePoint], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for p in points {
        writeln!(
            out,
            "{},{},{},{},{}",
            format_number(p.omega),
            format_number(p.mag_linear),
            format_number(p.mag_db),
            format_number(p.phase_rad),
            format_number(p.phase_deg)
        )?;
    }
    Ok(())
}

pub fn write_json<W: Write>(points: &[ResponsePoint], mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, points)?;
    writeln!(out)
}

pub fn write_points<W: Write>(
    points: &[ResponsePoint],
    format: OutputFormat,
    out: W,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(points, out),
        OutputFormat::Json => write_json(points, out),
    }
}

/// Serialized sweep output.
pub fn emit(points: &[ResponsePoint], format: OutputFormat) -> Vec<u8> {
    let mut buf = Vec::new();
    write_points(points, format, &mut buf).expect("writing to a Vec cannot fail");
    buf
}
