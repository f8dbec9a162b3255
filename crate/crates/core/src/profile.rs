//! Shared result records for profile families and crossover searches.

use serde::{Deserialize, Serialize};

/// One sample of a candidate family: its parameter, weighted area and
/// weighted perimeter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfilePoint {
    pub parameter: f64,
    pub area: f64,
    pub perimeter: f64,
}

impl ProfilePoint {
    pub fn new(parameter: f64, area: f64, perimeter: f64) -> Self {
        ProfilePoint { parameter, area, perimeter }
    }

    /// P² / A.
    pub fn isoperimetric_ratio(&self) -> f64 {
        self.perimeter * self.perimeter / self.area
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileCurve {
    pub family: String,
    pub lambda: f64,
    pub points: Vec<ProfilePoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossoverReport {
    /// The two families compared, lower-volume winner first.
    pub pair: (String, String),
    pub lambda: Option<f64>,
    pub bracket: (f64, f64),
    pub volume: f64,
    /// Perimeter difference of the pair at `volume`.
    pub residual: f64,
    pub iterations: u32,
}
