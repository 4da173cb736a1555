use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbols::Engine;

/// Orders added by `full_sweep`.
pub const EXTENDED_ORDERS: [usize; 3] = [512, 1024, 2048];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum EngineChoice {
    #[default]
    Quadrature,
    Fft,
}

impl FromStr for EngineChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quadrature" => Ok(Self::Quadrature),
            "fft" | "fft-sampling" => Ok(Self::Fft),
            other => Err(Error::Config(format!("unknown engine '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// Settings shared by every experiment. Read from a TOML file whose keys
/// are the field names below; missing keys take the defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Orders for the tables.
    pub n_list: Vec<usize>,
    /// Order for `figure1` and `coeffs`.
    pub n: usize,
    pub engine: EngineChoice,
    /// Absolute accuracy requested from the coefficient engine.
    pub tol: f64,
    #[serde(alias = "out")]
    pub output_dir: PathBuf,
    pub format: OutputFormat,
    /// Base seed of the randomized sandwich suite.
    pub seed: u64,
    pub oversample: usize,
    /// Appends 512, 1024 and 2048 to `n_list`.
    pub full_sweep: bool,
    /// `[c_*, c^*]` for the random sandwich configurations.
    pub c_range: (f64, f64),
    /// `[d_*, d^*]`.
    pub d_range: (f64, f64),
    /// Number of seeds in the sandwich suite.
    pub num_seeds: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n_list: vec![64, 128, 256],
            n: 1024,
            engine: EngineChoice::Quadrature,
            tol: 1e-12,
            output_dir: PathBuf::from("out"),
            format: OutputFormat::Csv,
            seed: 0,
            oversample: crate::symbols::DEFAULT_OVERSAMPLE,
            full_sweep: false,
            c_range: (0.5, 2.0),
            d_range: (0.25, 4.0),
            num_seeds: 10,
        }
    }
}

/// Command-line values; `Some` entries replace what the file says.
#[derive(Debug, Clone, Default)]
pub struct ConfigOverrides {
    pub n_list: Option<Vec<usize>>,
    pub n: Option<usize>,
    pub engine: Option<EngineChoice>,
    pub tol: Option<f64>,
    pub output_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub seed: Option<u64>,
    pub oversample: Option<usize>,
    pub full_sweep: Option<bool>,
}

impl ExperimentConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// File (or defaults), then overrides, then validation.
    pub fn resolve(file: Option<&Path>, overrides: ConfigOverrides) -> Result<Self> {
        let mut cfg = match file {
            Some(p) => Self::from_file(p)?,
            None => Self::default(),
        };
        cfg.apply(overrides);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, o: ConfigOverrides) {
        if let Some(v) = o.n_list {
            self.n_list = v;
        }
        if let Some(v) = o.n {
            self.n = v;
        }
        if let Some(v) = o.engine {
            self.engine = v;
        }
        if let Some(v) = o.tol {
            self.tol = v;
        }
        if let Some(v) = o.output_dir {
            self.output_dir = v;
        }
        if let Some(v) = o.format {
            self.format = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = o.oversample {
            self.oversample = v;
        }
        if let Some(v) = o.full_sweep {
            self.full_sweep = v;
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.n_list.is_empty() {
            return bad("n_list is empty".into());
        }
        if self.n_list.contains(&0) || self.n == 0 {
            return bad("orders must be at least 1".into());
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return bad(format!("tol = {} must be positive", self.tol));
        }
        if self.oversample < 2 {
            return bad(format!("oversample = {} must be at least 2", self.oversample));
        }
        for (name, (lo, hi)) in [("c_range", self.c_range), ("d_range", self.d_range)] {
            if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
                return bad(format!("{name} = [{lo}, {hi}] needs 0 < lower <= upper"));
            }
        }
        if self.num_seeds == 0 {
            return bad("num_seeds must be at least 1".into());
        }
        Ok(())
    }

    pub fn engine(&self) -> Engine {
        match self.engine {
            EngineChoice::Quadrature => Engine::Quadrature,
            EngineChoice::Fft => Engine::FftSampling {
                oversample: self.oversample,
            },
        }
    }

    /// Sorted, deduplicated table orders.
    pub fn orders(&self) -> Vec<usize> {
        let mut ns = self.n_list.clone();
        if self.full_sweep {
            ns.extend(EXTENDED_ORDERS);
        }
        ns.sort_unstable();
        ns.dedup();
        ns
    }
}
