//! Wall-clock timing of the consensus methods over a (k, n) grid.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use phylo_consensus::generate::random_profile;
use phylo_consensus::{
    frequency_difference_consensus, majority_plus_consensus, FilterImpl, FreqDiffOptions, Profile,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{CliError, Result};

/// The algorithm being timed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    MajorityPlus,
    FreqDiff(FreqDiffOptions),
}

impl BenchMethod {
    pub fn name(&self) -> &'static str {
        match self {
            Self::MajorityPlus => "majority-plus",
            Self::FreqDiff(o) if o.filter == FilterImpl::Naive => "freqdiff-naive",
            Self::FreqDiff(_) => "freqdiff",
        }
    }

    pub fn run(&self, profile: &Profile) -> phylo_consensus::Result<()> {
        match self {
            Self::MajorityPlus => majority_plus_consensus(profile).map(drop),
            Self::FreqDiff(o) => frequency_difference_consensus(profile, *o).map(drop),
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub k: usize,
    pub n: usize,
    pub median: Duration,
    pub reps: usize,
}

/// Parses `k1,n1;k2,n2;...`. An empty string is an empty grid.
pub fn parse_grid(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let bad = || CliError::Usage(format!("bad grid entry {pair:?}; expected k,n"));
            let (k, n) = pair.split_once(',').ok_or_else(bad)?;
            let k = k.trim().parse().map_err(|_| bad())?;
            let n = n.trim().parse().map_err(|_| bad())?;
            Ok((k, n))
        })
        .collect()
}

pub fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let m = samples.len();
    if m == 0 {
        Duration::ZERO
    } else if m % 2 == 1 {
        samples[m / 2]
    } else {
        (samples[m / 2 - 1] + samples[m / 2]) / 2
    }
}

/// Median time of `reps` runs of `method` on one seeded random profile.
pub fn time_point(
    method: BenchMethod,
    k: usize,
    n: usize,
    reps: usize,
    seed: u64,
    contract_prob: f64,
) -> Result<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32) ^ n as u64);
    let profile = random_profile(&mut rng, k, n, contract_prob)?;
    method.run(&profile)?;
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        method.run(&profile)?;
        samples.push(start.elapsed());
    }
    Ok(BenchRow {
        k,
        n,
        median: median(samples),
        reps,
    })
}

pub const CSV_HEADER: &str = "method,k,n,median_seconds,reps";

pub fn to_csv(method: BenchMethod, rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{:.6},{}",
            method.name(),
            r.k,
            r.n,
            r.median.as_secs_f64(),
            r.reps
        )
        .expect("writing to a String cannot fail");
    }
    out
}
