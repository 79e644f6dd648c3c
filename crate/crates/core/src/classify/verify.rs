use std::fmt;

use serde::{Deserialize, Serialize};

use super::{classify_graph, ClassificationReport, Mode};
use crate::betti::{
    betti_positions_check, hochster_betti, koszul_betti, koszul_multigraded_betti, BettiTable,
    PropertyReport,
};
use crate::complexes::{
    facet_complex, gamma_complex, stanley_reisner_complex, stanley_reisner_ideal,
    well_ordered_covers,
};
use crate::graphs::Graph;
use crate::homology::FieldSpec;
use crate::ideals::{
    alexander_dual, complementary_edge_ideal, height, is_linear_quotient_order,
    is_linearly_related, lcm_graph, linear_quotient_order, minimal_primes,
    search_linear_quotient_order, IdealError, SqfIdeal, SqfMonomial,
};
use crate::vertex_set::VertexSet;

/// One checked statement about `I_c(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Minimal primes are exactly `P(T)` for nonedges and triangles `T`.
    MinimalPrimes,
    Height,
    Unmixed,
    /// Dual generators are the nonedges (degree 2) and triangles (degree 3).
    DualDecomposition,
    StanleyReisnerRoundTrip,
    LcmGraphIsLineGraph,
    /// `β_{0,n-2} = |E(G)|`.
    GeneratorCount,
    /// Dual componentwise linear (equivalently sequentially CM) iff chordal.
    ComponentwiseLinearDual,
    CohenMacaulay,
    Gorenstein,
    LinearResolution,
    LinearQuotients,
    LinearlyRelated,
    /// The constructive order is a valid certificate, or fails with the components.
    OrderCertificate,
    BettiPositions,
    /// The three nonvanishing statements for disconnected forests.
    ForestBetti,
    PureResolution,
    Level,
    PdRegBounds,
    PdReg,
    /// Hochster and upper-Koszul tables agree.
    OracleAgreement,
    /// Well-ordered facet covers certify nonzero multigraded Betti numbers.
    FacetCovers,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(v.as_str().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub matched: bool,
    pub predicted: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyResult {
    pub graph6: String,
    pub field: FieldSpec,
    pub mode: Mode,
    pub outcomes: Vec<ClaimOutcome>,
}

impl ConsistencyResult {
    pub fn mismatches(&self) -> impl Iterator<Item = &ClaimOutcome> {
        self.outcomes.iter().filter(|o| !o.matched)
    }

    pub fn all_match(&self) -> bool {
        self.outcomes.iter().all(|o| o.matched)
    }

    pub fn outcome(&self, claim: Claim) -> Option<&ClaimOutcome> {
        self.outcomes.iter().find(|o| o.claim == claim)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    /// Recompute the table with the upper-Koszul oracle and compare.
    pub cross_check: bool,
    /// Check facet covers of up to this many facets (0 disables).
    pub facet_cover_limit: usize,
}

/// Everything computed for one graph over one field.
#[derive(Debug, Clone)]
pub struct GraphEvaluation {
    pub ideal: SqfIdeal,
    pub table: BettiTable,
    pub properties: PropertyReport,
    pub classification: ClassificationReport,
    pub consistency: ConsistencyResult,
}

/// A multidegree where a well-ordered cover of `i` facets exists but
/// `β_{i-1,σ}` vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverViolation {
    pub sigma: VertexSet,
    pub cover: Vec<VertexSet>,
}

fn sets_str(sets: &[VertexSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort_by_key(|s| (s.len(), *s));
    v
}

struct Recorder(Vec<ClaimOutcome>);

impl Recorder {
    fn push(&mut self, claim: Claim, matched: bool, predicted: String, computed: String) {
        self.0.push(ClaimOutcome {
            claim,
            matched,
            predicted,
            computed,
        });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, claim: Claim, predicted: T, computed: T) {
        let matched = predicted == computed;
        self.push(claim, matched, format!("{predicted:?}"), format!("{computed:?}"));
    }
}

/// Outcome of [`check_facet_covers`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoverCheck {
    /// `(σ, cover)` pairs examined.
    pub checked: usize,
    pub violations: Vec<CoverViolation>,
}

/// For every `σ` with `V(Λ^σ) = σ`, each well-ordered facet cover of `Λ^σ` of
/// cardinality `i ≤ limit` must come with `β_{i-1,σ} ≠ 0`.
pub fn check_facet_covers(g: &Graph, field: FieldSpec, limit: usize) -> Result<CoverCheck, IdealError> {
    let ideal = complementary_edge_ideal(g)?;
    let lambda = facet_complex(g)?;
    let mut out = CoverCheck::default();
    for sigma in VertexSet::full(g.n()).subsets() {
        let sub = lambda.induced_subcollection(sigma);
        if sub.is_void() || sub.vertex_set() != sigma {
            continue;
        }
        let covers = well_ordered_covers(&sub, limit);
        if covers.is_empty() {
            continue;
        }
        let betti = koszul_multigraded_betti(&ideal, sigma, field);
        for cover in covers {
            out.checked += 1;
            let i = cover.len() - 1;
            if !betti.iter().any(|&(k, b)| k == i && b > 0) {
                out.violations.push(CoverViolation {
                    sigma,
                    cover: cover.0,
                });
            }
        }
    }
    Ok(out)
}

pub fn evaluate_graph(
    g: &Graph,
    field: FieldSpec,
    mode: Mode,
    opts: &VerifyOptions,
) -> Result<GraphEvaluation, IdealError> {
    let classification = classify_graph(g, mode)?;
    let d = &classification.descriptors;
    let p = &classification.predicted;
    let n = g.n();
    let ideal = complementary_edge_ideal(g)?;
    let table = hochster_betti(&ideal, field)?;
    let props = crate::betti::properties_from_table(&ideal, &table, field)?;
    let mut rec = Recorder(Vec::new());

    let nonedges = g.nonedge_sets();
    let triangles = g.triangles();
    let described = sorted(nonedges.iter().chain(&triangles).copied().collect());
    let primes = sorted(minimal_primes(&ideal)?);
    rec.push(
        Claim::MinimalPrimes,
        primes == described,
        sets_str(&described),
        sets_str(&primes),
    );
    rec.eq(Claim::Height, p.height, height(&ideal)?);
    rec.eq(Claim::Unmixed, p.unmixed, props.unmixed);

    let dual = sorted(alexander_dual(&ideal)?.supports());
    rec.push(
        Claim::DualDecomposition,
        dual == described,
        sets_str(&described),
        sets_str(&dual),
    );

    let gamma = gamma_complex(g)?;
    let round_trip =
        stanley_reisner_ideal(&gamma) == ideal && stanley_reisner_complex(&ideal) == gamma;
    rec.eq(Claim::StanleyReisnerRoundTrip, true, round_trip);

    let lcm = lcm_graph(&ideal)?;
    let index: Vec<usize> = g
        .edge_sets()
        .iter()
        .map(|e| {
            ideal
                .index_of(SqfMonomial::new(e.complement(n)))
                .expect("each edge gives a generator")
        })
        .collect();
    let line = g.line_graph_adjacency();
    let same = (0..index.len())
        .all(|a| (0..index.len()).all(|b| lcm.adjacent(index[a], index[b]) == line[a][b]));
    rec.eq(Claim::LcmGraphIsLineGraph, true, same);

    rec.eq(Claim::GeneratorCount, d.edge_count as u64, table.get(0, n - 2));
    rec.eq(
        Claim::ComponentwiseLinearDual,
        p.sequentially_cohen_macaulay,
        props.componentwise_linear_dual,
    );
    rec.eq(Claim::CohenMacaulay, p.cohen_macaulay, props.cohen_macaulay);
    rec.eq(Claim::Gorenstein, p.gorenstein, props.gorenstein);
    rec.eq(Claim::LinearResolution, p.linear_resolution, props.linear_resolution);
    rec.eq(
        Claim::LinearQuotients,
        p.linear_quotients,
        search_linear_quotient_order(&ideal).is_some(),
    );

    // linear first syzygies read off the table must agree with the lcm-graph test
    let related = is_linearly_related(&ideal)?;
    let related_by_table = table.row(1).all(|(j, _)| j == n - 1);
    rec.push(
        Claim::LinearlyRelated,
        related == p.linearly_related && related == related_by_table,
        format!("{}", p.linearly_related),
        format!("lcm graph {related}, Betti table {related_by_table}"),
    );

    let cert_ok = match linear_quotient_order(g) {
        Ok(cert) => is_linear_quotient_order(&ideal, &cert.order),
        Err(IdealError::NoOrderExists { components }) => {
            !d.connected && components == g.connected_components()
        }
        Err(e) => return Err(e),
    };
    rec.eq(Claim::OrderCertificate, true, cert_ok);

    rec.eq(Claim::BettiPositions, true, betti_positions_check(&table));

    if d.forest && !d.connected {
        let b0 = table.get(0, n - 2);
        let b1n = table.get(1, n);
        let b1n1 = table.get(1, n - 1);
        let others = table
            .entries()
            .filter(|&(pos, _)| ![(0, n - 2), (1, n - 1), (1, n)].contains(&pos))
            .count();
        let expect_b1n1 = !d.disjoint_union_of_edges;
        let ok = b0 == (n - d.component_count) as u64
            && b1n > 0
            && (b1n1 > 0) == expect_b1n1
            && others == 0;
        rec.push(
            Claim::ForestBetti,
            ok,
            format!(
                "b(0,{})={} b(1,{n})>0 b(1,{}){} no other entries",
                n - 2,
                n - d.component_count,
                n - 1,
                if expect_b1n1 { ">0" } else { "=0" }
            ),
            format!("{table:?}"),
        );
    }

    rec.eq(Claim::PureResolution, p.pure_resolution, props.pure_resolution);
    rec.eq(Claim::Level, p.level, props.level);
    let bounds = (1..=2).contains(&props.pd) && (n - 2..=n - 1).contains(&props.reg);
    rec.push(
        Claim::PdRegBounds,
        bounds,
        format!("1<=pd<=2, {}<=reg<={}", n - 2, n - 1),
        format!("({}, {})", props.pd, props.reg),
    );
    rec.eq(Claim::PdReg, (p.pd, p.reg), (props.pd, props.reg));

    if opts.cross_check {
        let oracle = koszul_betti(&ideal, field)?;
        rec.push(
            Claim::OracleAgreement,
            oracle == table,
            format!("{table:?}"),
            format!("{oracle:?}"),
        );
    }
    if opts.facet_cover_limit > 0 {
        let bad = check_facet_covers(g, field, opts.facet_cover_limit)?.violations;
        let detail: Vec<String> = bad
            .iter()
            .map(|v| format!("{}: {}", v.sigma, sets_str(&v.cover)))
            .collect();
        rec.push(
            Claim::FacetCovers,
            bad.is_empty(),
            "no violations".to_string(),
            format!("[{}]", detail.join(", ")),
        );
    }

    let consistency = ConsistencyResult {
        graph6: classification.graph6.clone(),
        field,
        mode,
        outcomes: rec.0,
    };
    Ok(GraphEvaluation {
        ideal,
        table,
        properties: props,
        classification,
        consistency,
    })
}

pub fn verify_graph(g: &Graph, field: FieldSpec, mode: Mode) -> Result<ConsistencyResult, IdealError> {
    Ok(evaluate_graph(g, field, mode, &VerifyOptions::default())?.consistency)
}
