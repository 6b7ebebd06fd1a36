//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL
//! line; the process exits non-zero if any criterion fails. Runs without
//! the libtest harness so that timing criteria run alone.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use phylo_consensus::freq_diff::{
    compute_weights_bitvec, filter_clusters_fast, filter_clusters_naive,
};
use phylo_consensus::generate::{numbered_universe, random_profile, random_tree_over};
use phylo_consensus::majority_plus::majority_plus_candidates;
use phylo_consensus::oracle::{census, oracle_freq_diff, oracle_majority, oracle_majority_plus};
use phylo_consensus::phylo::{parse_newick, tree_from_clusters, trees_isomorphic};
use phylo_consensus::{
    frequency_difference_consensus, majority_plus_consensus, Cluster, Error, FilterImpl,
    FreqDiffOptions, LabelUniverse, Profile, Tree, WeightsMethod,
};
use phylo_consensus_cli::bench::{time_point, BenchMethod};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROFILES: usize = 1000;
const TRIPLES: usize = 1000;
const REPS: usize = 5;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fixture() -> Profile {
    let u = Arc::new(LabelUniverse::sorted(["a", "b", "c", "d", "e"]).unwrap());
    let trees = [
        "(((a,b),(c,d)),e);",
        "((a,b),(c,d),e);",
        "((((a,b),c),d),e);",
        "((a,c),(b,d,e));",
    ]
    .iter()
    .map(|s| parse_newick(s, Some(&u)).unwrap())
    .collect();
    Profile::new(trees).unwrap()
}

fn named(p: &Profile, sets: &[&[&str]]) -> BTreeSet<Cluster> {
    sets.iter()
        .map(|names| Cluster::from_names(p.universe(), names.iter().copied()).unwrap())
        .collect()
}

fn nontrivial(set: BTreeSet<Cluster>) -> BTreeSet<Cluster> {
    set.into_iter().filter(|c| !c.is_trivial()).collect()
}

fn reference_fixture() -> Outcome {
    let start = Instant::now();
    let p = fixture();
    let k = p.k();
    let maj = named(&p, &[&["a", "b"]]);
    let plus = named(&p, &[&["a", "b"], &["a", "b", "c", "d"]]);
    let fd = named(&p, &[&["a", "b"], &["a", "b", "c", "d"], &["c", "d"]]);

    let abcd = Cluster::from_names(p.universe(), ["a", "b", "c", "d"]).unwrap();
    let entry = census(&p)[&abcd];
    let compatible_share = (k - entry.q) as f64 / k as f64;
    let fixture_ok = nontrivial(oracle_majority(&p)) == maj
        && nontrivial(oracle_majority_plus(&p)) == plus
        && nontrivial(oracle_freq_diff(&p)) == fd
        && compatible_share == 0.75;

    let mut algo_ok = majority_plus_consensus(&p).unwrap().nontrivial_clusters() == plus;
    for filter in [FilterImpl::Naive, FilterImpl::Fast] {
        for weights in [WeightsMethod::Bitvec, WeightsMethod::Day] {
            let t =
                frequency_difference_consensus(&p, FreqDiffOptions { filter, weights }).unwrap();
            algo_ok &= t.nontrivial_clusters() == fd;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        fixture_ok && algo_ok && secs < 1.0,
        format!(
            "expected cluster sets confirmed by census: {fixture_ok}; {{a,b,c,d}} compatible with {:.0}% of trees; algorithms reproduce them: {algo_ok}; {secs:.3}s",
            compatible_share * 100.0
        ),
    )
}

fn oracle_tree(p: &Profile, set: &BTreeSet<Cluster>) -> Tree {
    tree_from_clusters(set, p.universe()).expect("oracle cluster sets are laminar")
}

/// The shared random profiles of criteria 2, 4, 7 and 8.
fn profiles() -> Vec<Profile> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..PROFILES)
        .map(|_| {
            let k = rng.gen_range(1..=8);
            let n = rng.gen_range(4..=12);
            let prob = rng.gen_range(0.0..0.6);
            random_profile(&mut rng, k, n, prob).unwrap()
        })
        .collect()
}

const VARIANTS: [(FilterImpl, WeightsMethod); 4] = [
    (FilterImpl::Naive, WeightsMethod::Bitvec),
    (FilterImpl::Naive, WeightsMethod::Day),
    (FilterImpl::Fast, WeightsMethod::Bitvec),
    (FilterImpl::Fast, WeightsMethod::Day),
];

fn oracle_equivalence(profiles: &[Profile]) -> Outcome {
    let start = Instant::now();
    let mut mismatches = 0;
    for p in profiles {
        let plus = oracle_tree(p, &oracle_majority_plus(p));
        if !trees_isomorphic(&majority_plus_consensus(p).unwrap(), &plus) {
            mismatches += 1;
        }
        let fd = oracle_tree(p, &oracle_freq_diff(p));
        for (filter, weights) in VARIANTS {
            let got = frequency_difference_consensus(p, FreqDiffOptions { filter, weights });
            if !got.is_ok_and(|t| trees_isomorphic(&t, &fd)) {
                mismatches += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 120.0,
        format!(
            "{} profiles x 5 runs, {mismatches} mismatches, {secs:.1}s",
            profiles.len()
        ),
    )
}

/// A tree keeping a random subset of `base`'s clusters.
fn contraction_of<R: Rng>(rng: &mut R, base: &Tree) -> Tree {
    let keep: Vec<Cluster> = base
        .nontrivial_clusters()
        .into_iter()
        .filter(|_| rng.gen_bool(0.6))
        .collect();
    tree_from_clusters(&keep, base.universe_arc()).unwrap()
}

fn filter_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xf1175);
    let mut mismatches = 0;
    for _ in 0..TRIPLES {
        let n = rng.gen_range(2..=64);
        let u = numbered_universe(n);
        // contractions of a few shared trees give clusters a spread of weights
        let bases: Vec<Tree> = (0..rng.gen_range(1..=3))
            .map(|_| random_tree_over(&mut rng, &u, 0.0))
            .collect();
        let k = rng.gen_range(2..=8);
        let trees: Vec<Tree> = (0..k)
            .map(|_| {
                let base = &bases[rng.gen_range(0..bases.len())];
                contraction_of(&mut rng, base)
            })
            .collect();
        let p = Profile::new(trees).unwrap();
        let w = compute_weights_bitvec(&p);
        let i = rng.gen_range(0..k);
        let j = rng.gen_range(0..k);
        let (a, b) = (&p.trees()[i], &p.trees()[j]);
        let naive = filter_clusters_naive(a, b, &w).unwrap();
        let fast = filter_clusters_fast(a, b, &w).unwrap();
        if !trees_isomorphic(&naive, &fast) {
            mismatches += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 120.0,
        format!("{TRIPLES} triples with n <= 64, {mismatches} mismatches, {secs:.1}s"),
    )
}

fn nesting(profiles: &[Profile]) -> Outcome {
    let mut violations = 0;
    for p in profiles {
        let maj = oracle_majority(p);
        let plus = majority_plus_consensus(p).unwrap().cluster_collection();
        let fd = frequency_difference_consensus(p, FreqDiffOptions::default())
            .unwrap()
            .cluster_collection();
        if !(maj.is_subset(&plus) && plus.is_subset(&fd)) {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("{} profiles, {violations} violations", profiles.len()),
    )
}

fn ratio(method: BenchMethod, small: (usize, usize), large: (usize, usize)) -> (f64, f64, f64) {
    let a = time_point(method, small.0, small.1, REPS, 1, 0.25)
        .unwrap()
        .median
        .as_secs_f64();
    let b = time_point(method, large.0, large.1, REPS, 1, 0.25)
        .unwrap()
        .median
        .as_secs_f64();
    (a, b, b / a)
}

fn majority_plus_scaling() -> Outcome {
    let start = Instant::now();
    let m = BenchMethod::MajorityPlus;
    let (a1, b1, rn) = ratio(m, (100, 500), (100, 4000));
    let (a2, b2, rk) = ratio(m, (500, 100), (4000, 100));
    let secs = start.elapsed().as_secs_f64();
    let inside = |r: f64| (4.0..=16.0).contains(&r);
    outcome(
        inside(rn) && inside(rk) && secs < 300.0,
        format!(
            "n 500->4000: {a1:.3}s -> {b1:.3}s (x{rn:.2}); k 500->4000: {a2:.3}s -> {b2:.3}s (x{rk:.2}); required [4, 16]"
        ),
    )
}

fn fast_filter_growth() -> Outcome {
    let start = Instant::now();
    let m = BenchMethod::FreqDiff(FreqDiffOptions {
        filter: FilterImpl::Fast,
        weights: WeightsMethod::Auto,
    });
    let (a, b, r) = ratio(m, (16, 1024), (16, 4096));
    let secs = start.elapsed().as_secs_f64();
    outcome(
        r <= 6.5 && secs < 300.0,
        format!("k=16, n 1024->4096: {a:.3}s -> {b:.3}s (x{r:.2}); required <= 6.5"),
    )
}

fn phase_one_superset(profiles: &[Profile]) -> Outcome {
    let mut violations = 0;
    for p in profiles {
        let (cand, _) = majority_plus_candidates(p).unwrap();
        if !oracle_majority_plus(p).is_subset(&cand.cluster_collection()) {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("{} profiles, {violations} violations", profiles.len()),
    )
}

fn merge_obligation(profiles: &[Profile]) -> Outcome {
    let mut violations = 0;
    let mut runs = 0;
    for p in profiles {
        for (filter, weights) in VARIANTS {
            runs += 1;
            if let Err(Error::MergeIncompatible(_)) =
                frequency_difference_consensus(p, FreqDiffOptions { filter, weights })
            {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{runs} runs, {violations} incompatible merges"),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let profiles = profiles();
    let criteria: Vec<Criterion<'_>> = vec![
        ("1 reference fixture", Box::new(reference_fixture)),
        (
            "2 oracle equivalence",
            Box::new(|| oracle_equivalence(&profiles)),
        ),
        ("3 filter equivalence", Box::new(filter_equivalence)),
        ("4 nesting invariant", Box::new(|| nesting(&profiles))),
        ("5 majority (+) scaling", Box::new(majority_plus_scaling)),
        ("6 fast filter growth", Box::new(fast_filter_growth)),
        (
            "7 phase-1 superset",
            Box::new(|| phase_one_superset(&profiles)),
        ),
        (
            "8 merge compatibility",
            Box::new(|| merge_obligation(&profiles)),
        ),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        println!(
            "{} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
