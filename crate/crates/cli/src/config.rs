use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use gdj_core::{
    run_dj_uninit, run_gdj1, run_gdj2, Algorithm, AuxSpec, Error as CoreError, FunctionTable, RunReport, Transform,
    C64,
};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Where a run's function table comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableSource {
    Path(PathBuf),
    Inline(FunctionTable),
}

impl TableSource {
    pub fn load(&self, base: Option<&Path>) -> Result<FunctionTable, CliError> {
        match self {
            TableSource::Inline(f) => Ok(f.clone()),
            TableSource::Path(p) => {
                let path = match base {
                    Some(dir) if p.is_relative() => dir.join(p),
                    _ => p.clone(),
                };
                read_table(&path)
            }
        }
    }
}

pub fn read_table(path: &Path) -> Result<FunctionTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

/// `--aux` argument: `fourier-xi`, `product:a0,b0,a1,b1,...` or
/// `vector-file:PATH`. Amplitudes accept complex literals such as `0.6`,
/// `-0.8i` or `0.3+0.4i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum AuxArg {
    FourierXi,
    Product(Vec<(C64, C64)>),
    VectorFile(PathBuf),
}

impl fmt::Display for AuxArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuxArg::FourierXi => f.write_str("fourier-xi"),
            AuxArg::Product(pairs) => {
                let parts: Vec<String> = pairs.iter().flat_map(|(a, b)| [a.to_string(), b.to_string()]).collect();
                write!(f, "product:{}", parts.join(","))
            }
            AuxArg::VectorFile(p) => write!(f, "vector-file:{}", p.display()),
        }
    }
}

impl From<AuxArg> for String {
    fn from(a: AuxArg) -> Self {
        a.to_string()
    }
}

impl TryFrom<String> for AuxArg {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl FromStr for AuxArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "fourier-xi" {
            return Ok(AuxArg::FourierXi);
        }
        if let Some(rest) = s.strip_prefix("product:") {
            let amps = rest
                .split(',')
                .map(|t| Complex::<f64>::from_str(t.trim()).map_err(|e| format!("bad amplitude {t:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            if amps.is_empty() || amps.len() % 2 != 0 {
                return Err("product: expects an even number of amplitudes a0,b0,a1,b1,...".into());
            }
            return Ok(AuxArg::Product(amps.chunks(2).map(|c| (c[0], c[1])).collect()));
        }
        if let Some(path) = s.strip_prefix("vector-file:") {
            return Ok(AuxArg::VectorFile(PathBuf::from(path)));
        }
        Err(format!("unknown aux spec {s:?}: expected fourier-xi, product:... or vector-file:PATH"))
    }
}

fn read_vector(path: &Path) -> Result<Vec<C64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let pairs: Vec<[f64; 2]> = serde_json::from_str(&text).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(pairs.into_iter().map(|[re, im]| C64::new(re, im)).collect())
}

fn default_xi() -> usize {
    1
}

/// One experiment: everything that determines a run report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub table: TableSource,
    #[serde(default = "default_algorithm")]
    pub algorithm: Algorithm,
    #[serde(default = "default_xi")]
    pub xi: usize,
    #[serde(default)]
    pub transform: Transform,
    #[serde(default)]
    pub aux: Option<AuxArg>,
    #[serde(default)]
    pub shots: u64,
    #[serde(default)]
    pub seed: u64,
}

fn default_algorithm() -> Algorithm {
    Algorithm::Gdj1
}

impl ExperimentConfig {
    /// Execute the configured algorithm. Relative paths resolve against `base`.
    pub fn execute(&self, base: Option<&Path>) -> Result<RunReport, CliError> {
        let f = self.table.load(base)?;
        let resolve = |p: &PathBuf| match base {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p.clone(),
        };
        let report = match self.algorithm {
            Algorithm::Gdj1 => match &self.aux {
                None | Some(AuxArg::FourierXi) => run_gdj1::<f64>(&f, self.xi, self.transform, self.shots, self.seed)?,
                Some(other) => {
                    return Err(CliError::Precondition(format!(
                        "gdj1 prepares the auxiliary register as F|-xi>; --aux {other} is not supported"
                    )))
                }
            },
            Algorithm::DjUninit => {
                let (a, b) = match &self.aux {
                    None => minus_pair(),
                    Some(AuxArg::FourierXi) => {
                        let v = AuxSpec::<f64>::FourierOfMinusXi(1).vector(f.shape())?;
                        (v[0], v[1])
                    }
                    Some(AuxArg::Product(pairs)) if pairs.len() == 1 => pairs[0],
                    Some(AuxArg::Product(pairs)) => {
                        return Err(CoreError::AuxQubitCount {
                            expected: 1,
                            found: pairs.len(),
                        }
                        .into())
                    }
                    Some(AuxArg::VectorFile(p)) => match read_vector(&resolve(p))?.as_slice() {
                        [a, b] => (*a, *b),
                        other => {
                            return Err(CoreError::LengthMismatch {
                                expected: 2,
                                found: other.len(),
                            }
                            .into())
                        }
                    },
                };
                if self.transform != Transform::Walsh {
                    return Err(CliError::Precondition("dj-uninit only supports --transform walsh".into()));
                }
                run_dj_uninit(&f, a, b, self.shots, self.seed)?
            }
            Algorithm::Gdj2 => {
                let aux = match &self.aux {
                    None => AuxSpec::minus_product(f.m()),
                    Some(AuxArg::Product(pairs)) => AuxSpec::ProductState(pairs.clone()),
                    Some(AuxArg::FourierXi) => return Err(CoreError::NonProductAux.into()),
                    Some(AuxArg::VectorFile(p)) => {
                        // Validate the file, then refuse: gdj2 only takes product states.
                        read_vector(&resolve(p))?;
                        return Err(CoreError::NonProductAux.into());
                    }
                };
                run_gdj2(&f, &aux, self.transform, self.shots, self.seed)?
            }
        };
        Ok(report)
    }
}

fn minus_pair() -> (C64, C64) {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    (C64::new(h, 0.0), C64::new(-h, 0.0))
}
