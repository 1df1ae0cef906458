use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub struct ManifestError(pub String);

impl std::fmt::Display for ManifestError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid manifest: {}", self.0)
    }
}

impl std::error::Error for ManifestError {}

fn bad<T>(msg: impl Into<String>) -> Result<T, ManifestError> {
    Err(ManifestError(msg.into()))
}

/// One experiment, one document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u32,
    pub seed: u64,
    #[serde(default)]
    pub output: Output,
    pub experiment: Experiment,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    #[serde(default = "default_dir")]
    pub dir: PathBuf,
    #[serde(default)]
    pub format: Format,
}

fn default_dir() -> PathBuf {
    PathBuf::from("out")
}

impl Default for Output {
    fn default() -> Self {
        Self {
            dir: default_dir(),
            format: Format::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Experiment {
    Verify(Verify),
    Orbit(Orbit),
    Membership(Membership),
    Figure(Figure),
    Torus(Torus),
    Patching(Patching),
    Probe(Probe),
}

impl Experiment {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Verify(_) => "verify",
            Self::Orbit(_) => "orbit",
            Self::Membership(_) => "membership",
            Self::Figure(_) => "figure",
            Self::Torus(_) => "torus",
            Self::Patching(_) => "patching",
            Self::Probe(_) => "probe",
        }
    }
}

fn tol_default() -> f64 {
    1e-9
}

/// Trace relation and induced-map identities on random rank-3 representations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verify {
    #[serde(default = "Verify::default_samples")]
    pub samples: usize,
    #[serde(default = "tol_default")]
    pub tolerance: f64,
}

impl Verify {
    fn default_samples() -> usize {
        10_000
    }
}

impl Default for Verify {
    fn default() -> Self {
        Self {
            samples: Self::default_samples(),
            tolerance: tol_default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Start {
    #[default]
    Haar,
    Identity,
}

/// Statistic expected to stay fixed (`tolerance`) or to move (`min_drift`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Conserve {
    /// A recorded column, or `boundary-multiset`.
    pub statistic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_drift: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reference {
    Semicircle,
    Uniform,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Equidistribute {
    pub statistic: String,
    pub reference: Reference,
    pub max_ks: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orbit {
    pub rank: usize,
    pub generators: Vec<String>,
    pub steps: usize,
    #[serde(default = "Orbit::default_burn_in")]
    pub burn_in: usize,
    #[serde(default = "Orbit::default_walkers")]
    pub walkers: usize,
    pub statistics: Vec<String>,
    #[serde(default)]
    pub start: Start,
    /// Rank 2 only: start each walker on `κ⁻¹(t)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa_level: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conserve: Vec<Conserve>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equidistribute: Option<Equidistribute>,
}

impl Orbit {
    fn default_burn_in() -> usize {
        1000
    }

    fn default_walkers() -> usize {
        1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Realizable,
    Unrealizable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipCase {
    /// `(a, b, c, d) = (tr X_1, tr X_2, tr X_3, tr X_0)`.
    pub quadruple: [f64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Membership {
    pub cases: Vec<MembershipCase>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum FigureKind {
    Tetrahedron,
    Foliation,
    Ellipse,
    EllipseFamily,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Figure {
    pub figure: FigureKind,
    /// Level for `ellipse`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    /// Range of levels for `ellipse-family`, `[0, 1.8]` by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<[f64; 2]>,
    #[serde(default = "Figure::default_resolution")]
    pub resolution: usize,
}

impl Figure {
    fn default_resolution() -> usize {
        64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusMatrix {
    Cat,
    Alpha,
    #[serde(untagged)]
    Rows(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Torus {
    pub map: TorusMatrix,
    pub start: Vec<f64>,
    pub steps: usize,
    /// Coordinates tested for equidistribution; all of them by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<usize>>,
    #[serde(default = "Torus::default_max_ks")]
    pub max_ks: f64,
}

impl Torus {
    fn default_max_ks() -> f64 {
        0.02
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Patching {
    #[serde(default = "Patching::default_rank")]
    pub rank: usize,
    #[serde(default = "Patching::default_pairs")]
    pub pairs: usize,
}

impl Patching {
    fn default_rank() -> usize {
        4
    }

    fn default_pairs() -> usize {
        1000
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Probe {
    #[serde(default = "Probe::default_a0")]
    pub a0: f64,
    #[serde(default = "Probe::default_d0")]
    pub d0: f64,
    #[serde(default = "Probe::default_pairs")]
    pub pairs: usize,
    #[serde(default = "Probe::default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "Probe::default_min_success")]
    pub min_success: f64,
}

impl Probe {
    fn default_a0() -> f64 {
        0.5
    }

    fn default_d0() -> f64 {
        0.3
    }

    fn default_pairs() -> usize {
        100
    }

    fn default_epsilon() -> f64 {
        1e-3
    }

    fn default_min_success() -> f64 {
        0.95
    }
}

impl Default for Probe {
    fn default() -> Self {
        Self {
            a0: Self::default_a0(),
            d0: Self::default_d0(),
            pairs: Self::default_pairs(),
            epsilon: Self::default_epsilon(),
            min_success: Self::default_min_success(),
        }
    }
}

impl Manifest {
    pub fn new(seed: u64, experiment: Experiment) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            seed,
            output: Output::default(),
            experiment,
        }
    }

    pub fn parse(text: &str) -> Result<Self, ManifestError> {
        let m: Self = toml::from_str(text).map_err(|e| ManifestError(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self, ManifestError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ManifestError(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifest serializes")
    }

    pub fn validate(&self) -> Result<(), ManifestError> {
        if self.schema_version != SCHEMA_VERSION {
            return bad(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                self.schema_version
            ));
        }
        match &self.experiment {
            Experiment::Verify(v) if v.samples == 0 => bad("verify needs samples > 0"),
            Experiment::Orbit(o) => {
                if o.rank < 2 {
                    return bad("orbit rank must be at least 2");
                }
                if o.steps <= o.burn_in {
                    return bad("orbit steps must exceed burn_in");
                }
                if o.walkers == 0 {
                    return bad("orbit needs at least one walker");
                }
                if o.statistics.is_empty() {
                    return bad("orbit needs at least one statistic");
                }
                if o.kappa_level.is_some() && o.rank != 2 {
                    return bad("kappa_level applies to rank 2 only");
                }
                for c in &o.conserve {
                    if c.tolerance.is_some() && c.min_drift.is_some() {
                        return bad(format!("{}: give tolerance or min_drift, not both", c.statistic));
                    }
                }
                Ok(())
            }
            Experiment::Membership(m) if m.cases.is_empty() => bad("membership needs cases"),
            Experiment::Figure(f) => {
                if f.resolution < 4 {
                    return bad("figure resolution must be at least 4");
                }
                if f.figure == FigureKind::Ellipse && f.y.is_none() {
                    return bad("ellipse figure needs y");
                }
                Ok(())
            }
            Experiment::Torus(t) if t.steps == 0 => bad("torus needs steps > 0"),
            Experiment::Patching(p) if p.rank < 2 => bad("patching rank must be at least 2"),
            Experiment::Probe(p) if p.pairs == 0 => bad("probe needs pairs > 0"),
            _ => Ok(()),
        }
    }
}
