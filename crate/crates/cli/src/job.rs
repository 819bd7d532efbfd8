use anyhow::{bail, Context};
use peterson::rootdata::{ParabolicData, RootDatum};

pub const BUDGET_ENV: &str = "PETERSON_BUDGET";

/// Raised for invalid user input; mapped to exit code 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "configuration error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Tsv,
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub datum: RootDatum,
    pub parabolic: ParabolicData,
    pub equivariant: bool,
    pub seeds: Vec<u64>,
    pub budget: usize,
}

/// `--parabolic` lists the simple roots of the Levi factor, 1-based and
/// comma-separated; the empty string is the Borel.
pub fn parse_levi(spec: &str, rank: usize) -> Result<Vec<usize>, ConfigError> {
    let mut levi = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i: usize = part.parse().map_err(|_| ConfigError(format!("bad simple-root index {part:?}")))?;
        if i == 0 || i > rank {
            return Err(ConfigError(format!("simple-root index {i} out of range 1..={rank}")));
        }
        if levi.contains(&(i - 1)) {
            return Err(ConfigError(format!("simple-root index {i} repeated")));
        }
        levi.push(i - 1);
    }
    levi.sort_unstable();
    Ok(levi)
}

pub fn datum(lie_type: &str, rank: usize) -> anyhow::Result<RootDatum> {
    Ok(RootDatum::parse(lie_type, rank)?)
}

pub fn parabolic(datum: &RootDatum, spec: &str) -> anyhow::Result<ParabolicData> {
    let levi = parse_levi(spec, datum.rank)?;
    let excluded: Vec<usize> = (0..datum.rank).filter(|i| !levi.contains(i)).collect();
    Ok(datum.parabolic(&excluded)?)
}

/// The flag value wins over the environment, which wins over the default.
pub fn budget(flag: Option<usize>) -> anyhow::Result<usize> {
    let b = match flag {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .with_context(|| format!("{BUDGET_ENV}={s:?} is not a number"))
                .map_err(|e| ConfigError(e.to_string()))?,
            Err(_) => polyalg::DEFAULT_BUDGET,
        },
    };
    if b == 0 {
        bail!(ConfigError("budget must be positive".into()));
    }
    Ok(b)
}

pub fn seeds(list: &[u64]) -> anyhow::Result<Vec<u64>> {
    if list.is_empty() {
        bail!(ConfigError("at least one seed is required".into()));
    }
    Ok(list.to_vec())
}
