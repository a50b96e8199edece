//! Gaussian limit laws from the movement of the singularity with a marker.

use std::fmt;

use rug::Float;
use serde::{Deserialize, Serialize};

use super::int;
use super::tower::{solve_tower_singularity, Route};
use crate::class::GraphClass;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stat {
    Edges,
    K5Count,
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stat::Edges => "edges",
            Stat::K5Count => "k5_count",
        })
    }
}

/// Mean `kappa n` and variance `lambda n` of the statistic.
#[derive(Debug, Clone)]
pub struct LimitLawConstants {
    pub stat: Stat,
    pub kappa: Float,
    pub lambda: Float,
}

/// `rho` at the marker value `1 + e` for the chosen statistic.
fn rho_at(class: GraphClass, stat: Stat, e: &Float, p: u32, route: Route) -> Result<Float> {
    let one = int(p, 1);
    let moved = Float::with_val(p, &one + e);
    let (q, y) = match stat {
        Stat::Edges => (one, moved),
        Stat::K5Count => (moved, one),
    };
    Ok(solve_tower_singularity(class, &q, &y, p, route)?.rho)
}

/// `kappa = -rho'/rho` and `lambda = -rho''/rho - rho'/rho + (rho'/rho)^2` at
/// marker value 1, by central differences with step `2^(-p/4)`.
pub fn limit_law(class: GraphClass, stat: Stat, p: u32, route: Route) -> Result<LimitLawConstants> {
    let h = Float::with_val(p, Float::i_exp(1, -(p as i32) / 4));
    let r0 = rho_at(class, stat, &Float::new(p), p, route)?;
    let rp = rho_at(class, stat, &h, p, route)?;
    let rm = rho_at(class, stat, &Float::with_val(p, -&h), p, route)?;
    let d1 = Float::with_val(p, &rp - &rm) / Float::with_val(p, &h * 2u32);
    let d2 = Float::with_val(p, &rp - Float::with_val(p, &r0 * 2u32) + &rm) / Float::with_val(p, h.square_ref());
    let s1 = Float::with_val(p, &d1 / &r0);
    let s2 = Float::with_val(p, &d2 / &r0);
    let kappa = Float::with_val(p, -&s1);
    let lambda = Float::with_val(p, -&s2) - &s1 + Float::with_val(p, s1.square_ref());
    if !kappa.is_finite() || !lambda.is_finite() {
        return Err(Error::NoConvergence { what: format!("limit law for {stat}") });
    }
    Ok(LimitLawConstants { stat, kappa, lambda })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: &Float, b: f64) -> f64 {
        ((a.to_f64() - b) / b).abs()
    }

    #[test]
    fn edge_law() {
        let l = limit_law(GraphClass::K33, Stat::Edges, 256, Route::Expansion).unwrap();
        assert!(rel(&l.kappa, 2.213_381_5) < 1e-7);
        assert!(rel(&l.lambda, 0.430_444_2) < 1e-6);
        assert!(l.kappa > 2 && l.kappa < 3 && l.lambda > 0);
    }

    #[test]
    fn routes_agree_on_edges() {
        let a = limit_law(GraphClass::K33, Stat::Edges, 192, Route::Expansion).unwrap();
        let b = limit_law(GraphClass::K33, Stat::Edges, 192, Route::ClosedForm).unwrap();
        assert!(Float::with_val(192, &a.kappa - &b.kappa).abs() < 1e-20);
        assert!(Float::with_val(192, &a.lambda - &b.lambda).abs() < 1e-20);
    }

    #[test]
    fn k5_law_is_small_and_positive() {
        let l = limit_law(GraphClass::K33, Stat::K5Count, 192, Route::Expansion).unwrap();
        assert!(rel(&l.kappa, 0.909_399e-4) < 1e-5);
        assert!(l.lambda > 0 && l.lambda > l.kappa);
    }
}
