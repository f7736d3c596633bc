//! Missile archetype definitions and the versioned TOML config format.
//!
//! Two synthetic archetypes ship as embedded presets: `sam_a`, a
//! medium-range high-agility interceptor, and `sam_b`, a heavier long-range
//! system. Their constants are plausible stand-ins, not any real system.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CONFIG_FORMAT_VERSION: u32 = 1;

const SAM_A_TOML: &str = include_str!("../../presets/sam_a.toml");
const SAM_B_TOML: &str = include_str!("../../presets/sam_b.toml");

/// Piecewise-linear drag coefficient vs Mach, clamped at the table ends.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdTable {
    pub mach: Vec<f64>,
    pub cd: Vec<f64>,
}

impl CdTable {
    pub fn lookup(&self, mach: f64) -> f64 {
        let m = &self.mach;
        let c = &self.cd;
        if mach <= m[0] {
            return c[0];
        }
        if mach >= m[m.len() - 1] {
            return c[c.len() - 1];
        }
        // m is strictly increasing, so the bracketing interval exists.
        let hi = m.partition_point(|&b| b <= mach);
        let (m0, m1) = (m[hi - 1], m[hi]);
        let frac = (mach - m0) / (m1 - m0);
        c[hi - 1] + frac * (c[hi] - c[hi - 1])
    }

    fn validate(&self, what: &str) -> Result<()> {
        if self.mach.is_empty() || self.mach.len() != self.cd.len() {
            return Err(Error::InvalidParams(format!(
                "{what}: mach and cd arrays must be non-empty and equal length"
            )));
        }
        if !self.mach.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "{what}: mach breakpoints must be strictly increasing"
            )));
        }
        if !self.cd.iter().all(|&c| c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidParams(format!("{what}: all cd must be > 0")));
        }
        Ok(())
    }
}

/// One SAM archetype: propulsion, aerodynamics, guidance, seeker and
/// limit constants. All values SI.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MissileParams {
    /// Archetype tag carried through datasets, models and reports.
    pub name: String,
    pub launch_mass: f64,
    pub propellant_mass_boost: f64,
    pub propellant_mass_sustain: f64,
    pub boost_thrust: f64,
    pub boost_duration: f64,
    pub sustain_thrust: f64,
    pub sustain_duration: f64,
    pub ref_area: f64,
    pub cd_powered: CdTable,
    pub cd_coast: CdTable,
    /// Proportional-navigation constant N.
    pub nav_constant: f64,
    /// Maximum lateral acceleration, in multiples of g.
    pub g_limit: f64,
    /// Commanded flight-path angle during the loft climb, deg.
    pub loft_pitch_deg: f64,
    pub loft_duration: f64,
    pub seeker_activation_range: f64,
    /// Miss-distance threshold for a kill, m.
    pub hit_radius: f64,
    pub max_flight_time: f64,
    /// Below this speed the missile is considered inert, m/s.
    pub min_speed: f64,
}

impl MissileParams {
    pub fn total_propellant(&self) -> f64 {
        self.propellant_mass_boost + self.propellant_mass_sustain
    }

    pub fn burnout_mass(&self) -> f64 {
        self.launch_mass - self.total_propellant()
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("launch_mass", self.launch_mass),
            ("propellant_mass_boost", self.propellant_mass_boost),
            ("propellant_mass_sustain", self.propellant_mass_sustain),
            ("boost_thrust", self.boost_thrust),
            ("boost_duration", self.boost_duration),
            ("sustain_thrust", self.sustain_thrust),
            ("sustain_duration", self.sustain_duration),
            ("ref_area", self.ref_area),
            ("nav_constant", self.nav_constant),
            ("g_limit", self.g_limit),
            ("loft_duration", self.loft_duration),
            ("seeker_activation_range", self.seeker_activation_range),
            ("hit_radius", self.hit_radius),
            ("max_flight_time", self.max_flight_time),
            ("min_speed", self.min_speed),
        ];
        for (field, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidParams(format!(
                    "{field} must be strictly positive, got {value}"
                )));
            }
        }
        if self.total_propellant() >= self.launch_mass {
            return Err(Error::InvalidParams(format!(
                "propellant masses ({} kg) must sum below launch mass ({} kg)",
                self.total_propellant(),
                self.launch_mass
            )));
        }
        if self.seeker_activation_range <= self.hit_radius {
            return Err(Error::InvalidParams(
                "seeker_activation_range must exceed hit_radius".into(),
            ));
        }
        self.cd_powered.validate("cd_powered")?;
        self.cd_coast.validate("cd_coast")?;
        Ok(())
    }
}

/// Per-archetype envelope-solver defaults carried in the config file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverPreset {
    pub scan_max_nm: Option<f64>,
    pub scan_step_nm: Option<f64>,
    pub tolerance_nm: Option<f64>,
    pub dt_s: Option<f64>,
}

#[derive(Debug, Deserialize)]
struct ConfigFile {
    format_version: u32,
    missile: MissileToml,
    #[serde(default)]
    solver: SolverPreset,
}

/// On-disk field names carry their units.
#[derive(Debug, Deserialize)]
struct MissileToml {
    name: String,
    launch_mass_kg: f64,
    propellant_mass_boost_kg: f64,
    propellant_mass_sustain_kg: f64,
    boost_thrust_n: f64,
    boost_duration_s: f64,
    sustain_thrust_n: f64,
    sustain_duration_s: f64,
    ref_area_m2: f64,
    cd_powered: CdTable,
    /// Defaults to the powered table shifted up by 0.05.
    cd_coast: Option<CdTable>,
    nav_constant: f64,
    g_limit: f64,
    loft_pitch_deg: f64,
    loft_duration_s: f64,
    seeker_activation_range_m: f64,
    hit_radius_m: f64,
    max_flight_time_s: f64,
    min_speed_ms: f64,
}

/// Parse a missile config from TOML text. Returns the validated parameters
/// plus any solver defaults declared alongside them.
pub fn parse_config(text: &str) -> Result<(MissileParams, SolverPreset)> {
    let file: ConfigFile =
        toml::from_str(text).map_err(|e| Error::parse("missile config", e.to_string()))?;
    if file.format_version != CONFIG_FORMAT_VERSION {
        return Err(Error::parse(
            "missile config",
            format!(
                "unsupported format_version {} (expected {})",
                file.format_version, CONFIG_FORMAT_VERSION
            ),
        ));
    }
    let m = file.missile;
    let cd_coast = m.cd_coast.unwrap_or_else(|| CdTable {
        mach: m.cd_powered.mach.clone(),
        cd: m.cd_powered.cd.iter().map(|c| c + 0.05).collect(),
    });
    let params = MissileParams {
        name: m.name,
        launch_mass: m.launch_mass_kg,
        propellant_mass_boost: m.propellant_mass_boost_kg,
        propellant_mass_sustain: m.propellant_mass_sustain_kg,
        boost_thrust: m.boost_thrust_n,
        boost_duration: m.boost_duration_s,
        sustain_thrust: m.sustain_thrust_n,
        sustain_duration: m.sustain_duration_s,
        ref_area: m.ref_area_m2,
        cd_powered: m.cd_powered,
        cd_coast,
        nav_constant: m.nav_constant,
        g_limit: m.g_limit,
        loft_pitch_deg: m.loft_pitch_deg,
        loft_duration: m.loft_duration_s,
        seeker_activation_range: m.seeker_activation_range_m,
        hit_radius: m.hit_radius_m,
        max_flight_time: m.max_flight_time_s,
        min_speed: m.min_speed_ms,
    };
    params.validate()?;
    Ok((params, file.solver))
}

/// Load a missile config file from disk.
pub fn load_config(path: &std::path::Path) -> Result<(MissileParams, SolverPreset)> {
    parse_config(&std::fs::read_to_string(path)?)
}

/// Look up an embedded preset by name (`sam_a`, `sam_b`).
pub fn preset(name: &str) -> Result<(MissileParams, SolverPreset)> {
    match name {
        "sam_a" => parse_config(SAM_A_TOML),
        "sam_b" => parse_config(SAM_B_TOML),
        other => Err(Error::parse(
            "preset",
            format!("unknown preset '{other}' (available: sam_a, sam_b)"),
        )),
    }
}

pub fn preset_names() -> &'static [&'static str] {
    &["sam_a", "sam_b"]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse_and_validate() {
        for name in preset_names() {
            let (p, solver) = preset(name).unwrap();
            assert_eq!(&p.name, name);
            assert!(p.validate().is_ok());
            assert!(solver.scan_max_nm.unwrap() > 0.0);
        }
    }

    #[test]
    fn coast_cd_defaults_to_powered_plus_offset() {
        let (p, _) = preset("sam_a").unwrap();
        for (on, off) in p.cd_powered.cd.iter().zip(&p.cd_coast.cd) {
            assert!((off - on - 0.05).abs() < 1e-12);
        }
    }

    #[test]
    fn cd_interpolation_hits_breakpoints_and_clamps() {
        let t = CdTable {
            mach: vec![0.0, 1.0, 2.0],
            cd: vec![0.3, 0.5, 0.4],
        };
        assert_eq!(t.lookup(1.0), 0.5);
        assert_eq!(t.lookup(0.5), 0.4);
        assert_eq!(t.lookup(-1.0), 0.3);
        assert_eq!(t.lookup(9.0), 0.4);
    }

    #[test]
    fn validation_rejects_bad_params() {
        let (mut p, _) = preset("sam_a").unwrap();
        p.propellant_mass_boost = p.launch_mass;
        assert!(p.validate().is_err());

        let (mut p, _) = preset("sam_a").unwrap();
        p.seeker_activation_range = p.hit_radius;
        assert!(p.validate().is_err());

        let (mut p, _) = preset("sam_a").unwrap();
        p.cd_powered.mach[1] = p.cd_powered.mach[0];
        assert!(p.validate().is_err());
    }

    #[test]
    fn version_mismatch_rejected() {
        let text = SAM_A_TOML.replace("format_version = 1", "format_version = 99");
        assert!(parse_config(&text).is_err());
    }
}
