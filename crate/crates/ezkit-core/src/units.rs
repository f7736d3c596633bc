//! Unit conversions between the interface units (ft, kt, deg, nm) and the
//! SI units used internally by the simulation (m, m/s, rad).

/// Standard gravity, m/s².
pub const G0: f64 = 9.80665;

/// International foot, m.
pub const FT_TO_M: f64 = 0.3048;

/// Knot (international nautical mile per hour), m/s.
pub const KT_TO_MS: f64 = 1852.0 / 3600.0;

/// International nautical mile, m.
pub const NM_TO_M: f64 = 1852.0;

/// Launcher site altitude above sea level, m (5,000 ft). Target elevations
/// are given relative to the launcher, so the lowest target in the input
/// box (-5,000 ft) sits exactly at sea level.
pub const SITE_ALTITUDE_M: f64 = 5000.0 * FT_TO_M;

pub fn ft_to_m(ft: f64) -> f64 {
    ft * FT_TO_M
}

pub fn m_to_ft(m: f64) -> f64 {
    m / FT_TO_M
}

pub fn kt_to_ms(kt: f64) -> f64 {
    kt * KT_TO_MS
}

pub fn nm_to_m(nm: f64) -> f64 {
    nm * NM_TO_M
}

pub fn m_to_nm(m: f64) -> f64 {
    m / NM_TO_M
}
