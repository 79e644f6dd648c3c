use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::verify::{evaluate_graph, Claim, VerifyOptions};
use super::Mode;
use crate::betti::{ring_properties, BettiTable};
use crate::graphs::Graph;
use crate::homology::FieldSpec;
use crate::ideals::{complementary_edge_ideal, IdealError};

pub const SWEEP_MIN_N: usize = 4;
pub const SWEEP_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("sweep range {0}..{1} must satisfy 4 <= n_min <= n_max <= 7")]
    Range(usize, usize),
    #[error("at least one worker is required")]
    NoWorkers,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub field: FieldSpec,
    pub mode: Mode,
    /// Run every graph over GF(2), GF(3) and ℚ instead of `field` alone.
    pub cross_field: bool,
    pub verify: VerifyOptions,
    pub workers: usize,
}

impl SweepConfig {
    pub fn new(n_min: usize, n_max: usize, field: FieldSpec, mode: Mode) -> Self {
        SweepConfig {
            n_min,
            n_max,
            field,
            mode,
            cross_field: false,
            verify: VerifyOptions::default(),
            workers: 1,
        }
    }

    fn fields(&self) -> Vec<FieldSpec> {
        if self.cross_field {
            vec![FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rational]
        } else {
            vec![self.field]
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub graph6: String,
    pub field: FieldSpec,
    pub claim: Claim,
    pub predicted: String,
    pub computed: String,
}

/// A graph whose Betti tables differ between coefficient fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDisagreement {
    pub graph6: String,
    pub tables: Vec<BettiTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: Mode,
    pub fields: Vec<FieldSpec>,
    pub graph_count: u64,
    pub graphs_per_n: BTreeMap<usize, u64>,
    pub tallies: BTreeMap<FieldSpec, BTreeMap<Claim, Tally>>,
    pub mismatches: Vec<Mismatch>,
    pub field_disagreements: Vec<FieldDisagreement>,
    /// Not serialized, so reports from different runs compare byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn has_mismatches(&self) -> bool {
        !self.mismatches.is_empty()
    }

    /// Pass/fail summed over fields.
    pub fn tally(&self, claim: Claim) -> Tally {
        self.tallies
            .values()
            .filter_map(|t| t.get(&claim))
            .fold(Tally::default(), |a, t| Tally {
                pass: a.pass + t.pass,
                fail: a.fail + t.fail,
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepProgress {
    pub chunks_done: usize,
    pub chunks_total: usize,
    pub graphs_done: u64,
}

#[derive(Default)]
struct Partial {
    graphs_per_n: BTreeMap<usize, u64>,
    tallies: BTreeMap<FieldSpec, BTreeMap<Claim, Tally>>,
    mismatches: Vec<Mismatch>,
    disagreements: Vec<FieldDisagreement>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        for (n, c) in other.graphs_per_n {
            *self.graphs_per_n.entry(n).or_default() += c;
        }
        for (f, claims) in other.tallies {
            let mine = self.tallies.entry(f).or_default();
            for (claim, t) in claims {
                let e = mine.entry(claim).or_default();
                e.pass += t.pass;
                e.fail += t.fail;
            }
        }
        self.mismatches.extend(other.mismatches);
        self.disagreements.extend(other.disagreements);
    }
}

fn pair_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

fn covers_all_vertices(n: usize, mask: u64) -> bool {
    let mut seen = 0u64;
    for (k, (i, j)) in Graph::pairs(n).enumerate() {
        if (mask >> k) & 1 == 1 {
            seen |= (1 << i) | (1 << j);
        }
    }
    seen == (1u64 << n) - 1
}

/// Every labeled graph on `[n]` without isolated vertices, by increasing edge mask.
pub fn graphs_without_isolated_vertices(n: usize) -> impl Iterator<Item = Graph> {
    graphs_in_range(n, 0, 1u64 << pair_count(n))
}

fn graphs_in_range(n: usize, lo: u64, hi: u64) -> impl Iterator<Item = Graph> {
    (lo..hi)
        .filter(move |&m| covers_all_vertices(n, m))
        .map(move |m| Graph::from_edge_mask(n, m))
}

/// Number of graphs [`graphs_without_isolated_vertices`] yields.
pub fn count_graphs_without_isolated_vertices(n: usize) -> u64 {
    (0..1u64 << pair_count(n))
        .filter(|&m| covers_all_vertices(n, m))
        .count() as u64
}

fn run_chunk(cfg: &SweepConfig, fields: &[FieldSpec], n: usize, lo: u64, hi: u64) -> Result<Partial, IdealError> {
    let mut part = Partial::default();
    for g in graphs_in_range(n, lo, hi) {
        *part.graphs_per_n.entry(n).or_default() += 1;
        let mut tables: Vec<BettiTable> = Vec::with_capacity(fields.len());
        for &field in fields {
            let ev = evaluate_graph(&g, field, cfg.mode, &cfg.verify)?;
            let tally = part.tallies.entry(field).or_default();
            for o in &ev.consistency.outcomes {
                let t = tally.entry(o.claim).or_default();
                if o.matched {
                    t.pass += 1;
                } else {
                    t.fail += 1;
                    part.mismatches.push(Mismatch {
                        graph6: ev.consistency.graph6.clone(),
                        field,
                        claim: o.claim,
                        predicted: o.predicted.clone(),
                        computed: o.computed.clone(),
                    });
                }
            }
            tables.push(ev.table);
        }
        if tables.windows(2).any(|w| !w[0].same_numbers(&w[1])) {
            part.disagreements.push(FieldDisagreement {
                graph6: g.to_graph6(),
                tables,
            });
        }
    }
    Ok(part)
}

/// Runs the sweep on `cfg.workers` threads. The edge-mask space of each `n` is
/// cut into contiguous chunks; results are merged and sorted, so the report
/// does not depend on the worker count.
pub fn run_sweep(
    cfg: &SweepConfig,
    progress: Option<&(dyn Fn(SweepProgress) + Sync)>,
) -> Result<SweepReport, SweepError> {
    if !(SWEEP_MIN_N <= cfg.n_min && cfg.n_min <= cfg.n_max && cfg.n_max <= SWEEP_MAX_N) {
        return Err(SweepError::Range(cfg.n_min, cfg.n_max));
    }
    if cfg.workers == 0 {
        return Err(SweepError::NoWorkers);
    }
    let start = Instant::now();
    let fields = cfg.fields();
    let pieces = (cfg.workers * 4).max(8) as u64;
    let mut chunks: Vec<(usize, u64, u64)> = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let total = 1u64 << pair_count(n);
        let step = total.div_ceil(pieces).max(1);
        let mut lo = 0;
        while lo < total {
            chunks.push((n, lo, (lo + step).min(total)));
            lo += step;
        }
    }
    let next = AtomicUsize::new(0);
    let merged = Mutex::new((Partial::default(), 0usize, 0u64));
    let failure: Mutex<Option<IdealError>> = Mutex::new(None);
    std::thread::scope(|s| {
        for _ in 0..cfg.workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(n, lo, hi)) = chunks.get(k) else { break };
                match run_chunk(cfg, &fields, n, lo, hi) {
                    Ok(part) => {
                        let mut guard = merged.lock().unwrap();
                        let (acc, done, graphs) = &mut *guard;
                        *graphs += part.graphs_per_n.values().sum::<u64>();
                        *done += 1;
                        acc.absorb(part);
                        if let Some(cb) = progress {
                            cb(SweepProgress {
                                chunks_done: *done,
                                chunks_total: chunks.len(),
                                graphs_done: *graphs,
                            });
                        }
                    }
                    Err(e) => {
                        failure.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e.into());
    }
    let (mut acc, _, _) = merged.into_inner().unwrap();
    acc.mismatches.sort_by(|a, b| {
        (&a.graph6, a.field, a.claim).cmp(&(&b.graph6, b.field, b.claim))
    });
    acc.disagreements.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    for n in cfg.n_min..=cfg.n_max {
        acc.graphs_per_n.entry(n).or_default();
    }
    Ok(SweepReport {
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        mode: cfg.mode,
        fields,
        graph_count: acc.graphs_per_n.values().sum(),
        graphs_per_n: acc.graphs_per_n,
        tallies: acc.tallies,
        mismatches: acc.mismatches,
        field_disagreements: acc.disagreements,
        wall_time: start.elapsed(),
    })
}

pub fn sweep(
    n_min: usize,
    n_max: usize,
    field: FieldSpec,
    mode: Mode,
    cross_field: bool,
) -> Result<SweepReport, SweepError> {
    let mut cfg = SweepConfig::new(n_min, n_max, field, mode);
    cfg.cross_field = cross_field;
    run_sweep(&cfg, None)
}

/// graph6 strings of the graphs on `[n]` whose quotient ring is Gorenstein.
pub fn gorenstein_census(n: usize, field: FieldSpec) -> Result<Vec<String>, SweepError> {
    if !(SWEEP_MIN_N..=SWEEP_MAX_N).contains(&n) {
        return Err(SweepError::Range(n, n));
    }
    let mut out = Vec::new();
    for g in graphs_without_isolated_vertices(n) {
        let ideal = complementary_edge_ideal(&g)?;
        if ring_properties(&ideal, field)?.gorenstein {
            out.push(g.to_graph6());
        }
    }
    out.sort();
    Ok(out)
}
