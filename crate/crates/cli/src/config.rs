//! Run configuration: command-line flags over the environment over a
//! `key = value` file over defaults.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use jquartic::counting::HeightPolicy;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const THREADS_ENV: &str = "JQUARTIC_THREADS";

pub const DEFAULT_LADDER: [i128; 4] = [1_000_000, 100_000_000, 10_000_000_000, 1_000_000_000_000];
pub const DEFAULT_SEED: u64 = 20240601;
/// Above this `X` the `abs-i-leq` policy is not attempted for `count-m`.
pub const DEFAULT_ABS_I_LIMIT: i128 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

/// Which policies a count runs under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolicyChoice {
    One(HeightPolicy),
    Both,
}

impl Serialize for PolicyChoice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PolicyChoice::One(p) => s.serialize_str(p.name()),
            PolicyChoice::Both => s.serialize_str("both"),
        }
    }
}

impl PolicyChoice {
    pub fn policies(self) -> Vec<HeightPolicy> {
        match self {
            PolicyChoice::One(p) => vec![p],
            PolicyChoice::Both => vec![HeightPolicy::DiscriminantLeq, HeightPolicy::AbsILeq],
        }
    }
}

fn parse_policy(s: &str) -> Result<PolicyChoice, CliError> {
    if s == "both" {
        return Ok(PolicyChoice::Both);
    }
    s.parse::<HeightPolicy>()
        .map(PolicyChoice::One)
        .map_err(|_| CliError::Config(format!("unknown policy {s:?} (discriminant-leq, abs-i-leq, both)")))
}

pub fn parse_ladder(s: &str) -> Result<Vec<i128>, CliError> {
    let xs = s
        .split(',')
        .map(|t| parse_int(t.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    check_ladder(&xs)?;
    Ok(xs)
}

/// Integers, also in the forms `1e6` and `10^6`.
pub fn parse_int(s: &str) -> Result<i128, CliError> {
    let bad = || CliError::Config(format!("not an integer: {s:?}"));
    let pow = |base: &str, exp: &str| -> Result<i128, CliError> {
        let b: i128 = base.parse().map_err(|_| bad())?;
        let e: u32 = exp.parse().map_err(|_| bad())?;
        b.checked_pow(e).ok_or_else(bad)
    };
    if let Some((m, e)) = s.split_once('e') {
        let m: i128 = m.parse().map_err(|_| bad())?;
        return m.checked_mul(pow("10", e)?).ok_or_else(bad);
    }
    if let Some((b, e)) = s.split_once('^') {
        return pow(b, e);
    }
    s.replace('_', "").parse().map_err(|_| bad())
}

fn check_ladder(xs: &[i128]) -> Result<(), CliError> {
    if xs.is_empty() {
        return Err(CliError::Config("empty ladder".into()));
    }
    if xs.iter().any(|&x| x < 1) {
        return Err(CliError::Config("ladder values must be positive".into()));
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Config("ladder must be strictly increasing".into()));
    }
    Ok(())
}

/// Values read from a config file, all optional.
#[derive(Debug, Clone, Default)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

const KEYS: [&str; 10] =
    ["seed", "ladder", "policy", "height", "bmat", "threads", "out", "format", "xmax", "abs_i_limit"];

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            let k = k.trim().replace('-', "_");
            if !KEYS.contains(&k.as_str()) {
                return Err(CliError::Config(format!("line {}: unknown key {k:?}", n + 1)));
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    fn get(&self, k: &str) -> Option<&str> {
        self.values.get(k).map(String::as_str)
    }
}

/// Flags that may also come from the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub ladder: Option<String>,
    pub policy: Option<String>,
    pub height: Option<i128>,
    pub bmat: Option<i128>,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub xmax: Option<i128>,
    pub abs_i_limit: Option<i128>,
}

/// Everything a run depends on. Thread count, output location and format do
/// not change results and are left out of the hash.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub args: Vec<String>,
    pub ladder: Vec<i128>,
    pub policy: PolicyChoice,
    pub height: i128,
    pub bmat: i128,
    pub seed: u64,
    pub xmax: Option<i128>,
    pub abs_i_limit: i128,
    #[serde(skip)]
    pub threads: Option<usize>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub format: Format,
}

impl RunConfig {
    pub fn build(
        command: &str,
        args: Vec<String>,
        default_policy: PolicyChoice,
        flags: Overrides,
        file: &FileConfig,
        env_threads: Option<String>,
    ) -> Result<Self, CliError> {
        let ladder = match flags.ladder.as_deref().or(file.get("ladder")) {
            Some(s) => parse_ladder(s)?,
            None => DEFAULT_LADDER.to_vec(),
        };
        let policy = match flags.policy.as_deref().or(file.get("policy")) {
            Some(s) => parse_policy(s)?,
            None => default_policy,
        };
        let int = |flag: Option<i128>, key: &str, default: i128| -> Result<i128, CliError> {
            match (flag, file.get(key)) {
                (Some(v), _) => Ok(v),
                (None, Some(s)) => parse_int(s),
                (None, None) => Ok(default),
            }
        };
        let height = int(flags.height, "height", 30)?;
        let bmat = int(flags.bmat, "bmat", jquartic::oracle::DEFAULT_BMAT)?;
        let abs_i_limit = int(flags.abs_i_limit, "abs_i_limit", DEFAULT_ABS_I_LIMIT)?;
        let xmax = match (flags.xmax, file.get("xmax")) {
            (Some(v), _) => Some(v),
            (None, Some(s)) => Some(parse_int(s)?),
            (None, None) => None,
        };
        let seed = match (flags.seed, file.get("seed")) {
            (Some(v), _) => v,
            (None, Some(s)) => s.parse().map_err(|_| CliError::Config(format!("bad seed {s:?}")))?,
            (None, None) => DEFAULT_SEED,
        };
        let parse_threads = |s: &str| -> Result<usize, CliError> {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| CliError::Config(format!("bad thread count {s:?}")))
        };
        let threads = match (flags.threads, env_threads, file.get("threads")) {
            (Some(n), _, _) => Some(n),
            (None, Some(s), _) => Some(parse_threads(&s)?),
            (None, None, Some(s)) => Some(parse_threads(s)?),
            (None, None, None) => None,
        };
        let format = match (flags.format, file.get("format")) {
            (Some(f), _) => f,
            (None, Some("json")) | (None, None) => Format::Json,
            (None, Some("csv")) => Format::Csv,
            (None, Some(s)) => return Err(CliError::Config(format!("bad format {s:?}"))),
        };
        let out = flags.out.or_else(|| file.get("out").map(PathBuf::from));
        if height < 0 || bmat < 1 {
            return Err(CliError::Config("height must be ≥ 0 and bmat ≥ 1".into()));
        }
        Ok(RunConfig {
            command: command.to_string(),
            args,
            ladder,
            policy,
            height,
            bmat,
            seed,
            xmax,
            abs_i_limit,
            threads,
            out,
            format,
        })
    }

    pub fn hash(&self) -> String {
        let text = serde_json::to_string(self).expect("config serializes");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(flags: Overrides, file: &str, env: Option<&str>) -> Result<RunConfig, CliError> {
        RunConfig::build(
            "count-n",
            vec![],
            PolicyChoice::One(HeightPolicy::DiscriminantLeq),
            flags,
            &FileConfig::parse(file)?,
            env.map(String::from),
        )
    }

    #[test]
    fn integers() {
        assert_eq!(parse_int("1e6").unwrap(), 1_000_000);
        assert_eq!(parse_int("10^12").unwrap(), 1_000_000_000_000);
        assert_eq!(parse_int("20_000").unwrap(), 20_000);
        assert!(parse_int("x").is_err());
    }

    #[test]
    fn ladders() {
        assert_eq!(parse_ladder("1e6, 1e8").unwrap(), vec![1_000_000, 100_000_000]);
        assert!(parse_ladder("1e8,1e6").is_err());
        assert!(parse_ladder("5,5").is_err());
    }

    #[test]
    fn precedence() {
        let file = "seed = 7\nthreads = 2\nladder = 10, 20 # comment\n";
        let c = build(Overrides::default(), file, None).unwrap();
        assert_eq!((c.seed, c.threads, c.ladder.clone()), (7, Some(2), vec![10, 20]));
        let c = build(Overrides::default(), file, Some("3")).unwrap();
        assert_eq!(c.threads, Some(3));
        let c = build(Overrides { threads: Some(4), seed: Some(1), ..Default::default() }, file, Some("3")).unwrap();
        assert_eq!((c.threads, c.seed), (Some(4), 1));
        assert!(build(Overrides::default(), "nonsense", None).is_err());
        assert!(build(Overrides::default(), "colour = red", None).is_err());
        assert!(build(Overrides::default(), "", Some("0")).is_err());
    }

    #[test]
    fn hash_ignores_presentation() {
        let a = build(Overrides::default(), "", None).unwrap();
        let b = build(Overrides { threads: Some(8), format: Some(Format::Csv), ..Default::default() }, "", None).unwrap();
        assert_eq!(a.hash(), b.hash());
        let c = build(Overrides { seed: Some(2), ..Default::default() }, "", None).unwrap();
        assert_ne!(a.hash(), c.hash());
    }
}
