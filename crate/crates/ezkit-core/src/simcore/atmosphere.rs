//! International Standard Atmosphere, sea level to 30 km.
//!
//! Two layers are modeled: the linear-lapse troposphere up to 11 km and the
//! isothermal lower stratosphere above it. That covers the whole input box
//! (target altitudes stay below 50 kft ≈ 15.2 km) with margin.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sea-level standard pressure, Pa.
const P0: f64 = 101_325.0;
/// Sea-level standard temperature, K.
const T0: f64 = 288.15;
/// Tropospheric lapse rate, K/m.
const LAPSE: f64 = 0.0065;
/// Specific gas constant for dry air, J/(kg·K).
const R_AIR: f64 = 287.05287;
/// Ratio of specific heats for air.
const GAMMA: f64 = 1.4;
/// Geopotential altitude of the tropopause, m.
const TROPOPAUSE_M: f64 = 11_000.0;

const MIN_ALT_M: f64 = -500.0;
const MAX_ALT_M: f64 = 30_000.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtmosphereSample {
    /// Air density, kg/m³.
    pub density: f64,
    /// Speed of sound, m/s.
    pub speed_of_sound: f64,
    /// Air temperature, K.
    pub temperature: f64,
}

/// ISA state at a geopotential altitude above sea level.
pub fn isa_atmosphere(altitude_m: f64) -> Result<AtmosphereSample> {
    if !(MIN_ALT_M..=MAX_ALT_M).contains(&altitude_m) || altitude_m.is_nan() {
        return Err(Error::Domain(format!(
            "altitude {altitude_m} m outside supported band [{MIN_ALT_M}, {MAX_ALT_M}] m"
        )));
    }

    let g_over_lr = crate::units::G0 / (LAPSE * R_AIR);
    let (temperature, pressure) = if altitude_m <= TROPOPAUSE_M {
        let t = T0 - LAPSE * altitude_m;
        let p = P0 * (t / T0).powf(g_over_lr);
        (t, p)
    } else {
        let t_trop = T0 - LAPSE * TROPOPAUSE_M;
        let p_trop = P0 * (t_trop / T0).powf(g_over_lr);
        let t = t_trop;
        let p = p_trop
            * (-crate::units::G0 * (altitude_m - TROPOPAUSE_M) / (R_AIR * t)).exp();
        (t, p)
    };

    Ok(AtmosphereSample {
        density: pressure / (R_AIR * temperature),
        speed_of_sound: (GAMMA * R_AIR * temperature).sqrt(),
        temperature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Reference values cross-checked against published ISA tables.
    #[test]
    fn sea_level() {
        let s = isa_atmosphere(0.0).unwrap();
        assert_relative_eq!(s.density, 1.225, max_relative = 1e-4);
        assert_relative_eq!(s.speed_of_sound, 340.29, max_relative = 1e-4);
        assert_relative_eq!(s.temperature, 288.15, max_relative = 1e-12);
    }

    #[test]
    fn tropopause_temperature() {
        let s = isa_atmosphere(11_000.0).unwrap();
        assert_relative_eq!(s.temperature, 216.65, max_relative = 1e-10);
    }

    #[test]
    fn isothermal_above_tropopause() {
        let lo = isa_atmosphere(12_000.0).unwrap();
        let hi = isa_atmosphere(20_000.0).unwrap();
        assert_eq!(lo.temperature, hi.temperature);
        assert!(hi.density < lo.density);
    }

    #[test]
    fn pure_function() {
        let a = isa_atmosphere(7_432.5).unwrap();
        let b = isa_atmosphere(7_432.5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn density_monotone_non_increasing() {
        let mut prev = f64::INFINITY;
        for i in 0..=300 {
            let alt = i as f64 * 100.0;
            let s = isa_atmosphere(alt).unwrap();
            assert!(s.density <= prev, "density increased at {alt} m");
            assert!(s.density > 0.0 && s.speed_of_sound > 0.0);
            prev = s.density;
        }
    }

    #[test]
    fn out_of_band_rejected() {
        assert!(isa_atmosphere(-501.0).is_err());
        assert!(isa_atmosphere(30_001.0).is_err());
        assert!(isa_atmosphere(f64::NAN).is_err());
    }
}
