use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use phylo_consensus::generate::{random_profile, DEFAULT_CONTRACT_PROB};
use phylo_consensus::oracle::{
    oracle_freq_diff, oracle_majority, oracle_majority_plus, oracle_strict,
};
use phylo_consensus::phylo::{tree_from_clusters, write_newick};
use phylo_consensus::{
    frequency_difference_consensus, majority_plus_consensus, Cluster, FilterImpl, FreqDiffOptions,
    Profile, Tree, WeightsMethod,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::{parse_grid, time_point, to_csv, BenchMethod};
use crate::io::{emit, format_trees, read_profile};
use crate::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "phylocons",
    version,
    about = "Majority rule (+) and frequency difference consensus trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a consensus tree from a file with one Newick tree per line.
    Consensus(ConsensusArgs),
    /// Write k random trees on n leaves.
    Gen(GenArgs),
    /// Time a method over a grid of (k, n) points and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    MajorityPlus,
    Freqdiff,
    MajorityOracle,
    StrictOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Naive,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightsArg {
    Bitvec,
    Day,
    Auto,
}

#[derive(Debug, Args)]
pub struct ConsensusArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "freqdiff")]
    pub method: Method,
    #[arg(long, value_enum)]
    pub filter_impl: Option<FilterArg>,
    #[arg(long, value_enum)]
    pub weights_method: Option<WeightsArg>,
    /// Recompute the cluster set by brute force and fail on any difference.
    #[arg(long)]
    pub oracle_check: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CONTRACT_PROB)]
    pub contract_prob: f64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "majority-plus")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "fast")]
    pub filter_impl: FilterArg,
    #[arg(long, value_enum, default_value = "auto")]
    pub weights_method: WeightsArg,
    /// Grid points as `k1,n1;k2,n2;...`.
    #[arg(long, default_value = "")]
    pub grid: String,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CONTRACT_PROB)]
    pub contract_prob: f64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn freq_diff_options(filter: Option<FilterArg>, weights: Option<WeightsArg>) -> FreqDiffOptions {
    FreqDiffOptions {
        filter: match filter {
            Some(FilterArg::Naive) => FilterImpl::Naive,
            _ => FilterImpl::Fast,
        },
        weights: match weights {
            Some(WeightsArg::Bitvec) => WeightsMethod::Bitvec,
            Some(WeightsArg::Day) => WeightsMethod::Day,
            _ => WeightsMethod::Auto,
        },
    }
}

/// Consensus tree of `profile` by `method`.
pub fn consensus(profile: &Profile, method: Method, options: FreqDiffOptions) -> Result<Tree> {
    let from_set = |set: BTreeSet<Cluster>| -> Result<Tree> {
        let family: Vec<Cluster> = set.into_iter().collect();
        Ok(tree_from_clusters(&family, profile.universe())?)
    };
    match method {
        Method::MajorityPlus => Ok(majority_plus_consensus(profile)?),
        Method::Freqdiff => Ok(frequency_difference_consensus(profile, options)?),
        Method::MajorityOracle => from_set(oracle_majority(profile)),
        Method::StrictOracle => from_set(oracle_strict(profile)),
    }
}

fn oracle_set(profile: &Profile, method: Method) -> BTreeSet<Cluster> {
    match method {
        Method::MajorityPlus => oracle_majority_plus(profile),
        Method::Freqdiff => oracle_freq_diff(profile),
        Method::MajorityOracle => oracle_majority(profile),
        Method::StrictOracle => oracle_strict(profile),
    }
}

pub fn cmd_consensus(args: &ConsensusArgs) -> Result<()> {
    if args.method != Method::Freqdiff
        && (args.filter_impl.is_some() || args.weights_method.is_some())
    {
        return Err(CliError::Usage(
            "--filter-impl and --weights-method only apply to --method freqdiff".into(),
        ));
    }
    let profile = read_profile(&args.input)?;
    let options = freq_diff_options(args.filter_impl, args.weights_method);
    let tree = consensus(&profile, args.method, options)?;
    if args.oracle_check {
        let want = oracle_set(&profile, args.method);
        let have = tree.cluster_collection();
        if have != want {
            return Err(CliError::OracleMismatch {
                missing: want.difference(&have).count(),
                extra: have.difference(&want).count(),
            });
        }
    }
    let mut text = write_newick(&tree);
    text.push('\n');
    emit(args.output.as_deref(), &text)
}

pub fn cmd_gen(args: &GenArgs) -> Result<()> {
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    if args.n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let profile = random_profile(&mut rng, args.k, args.n, args.contract_prob)?;
    emit(args.output.as_deref(), &format_trees(profile.trees()))
}

pub fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let method = match args.method {
        Method::MajorityPlus => BenchMethod::MajorityPlus,
        Method::Freqdiff => BenchMethod::FreqDiff(freq_diff_options(
            Some(args.filter_impl),
            Some(args.weights_method),
        )),
        _ => {
            return Err(CliError::Usage(
                "bench supports majority-plus and freqdiff".into(),
            ))
        }
    };
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let grid = parse_grid(&args.grid)?;
    let mut rows = Vec::with_capacity(grid.len());
    for (k, n) in grid {
        rows.push(time_point(
            method,
            k,
            n,
            args.reps,
            args.seed,
            args.contract_prob,
        )?);
    }
    emit(args.output.as_deref(), &to_csv(method, &rows))
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Consensus(a) => cmd_consensus(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
    }
}
