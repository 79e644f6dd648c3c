use std::fmt::Write as _;

use compedge::betti::{hochster_betti, koszul_betti, BettiTable, PropertyReport};
use compedge::classify::{
    evaluate_graph, ClassificationReport, ConsistencyResult, Mode, SweepReport, VerifyOptions,
};
use compedge::graphs::{to_edge_list, Graph};
use compedge::ideals::{
    alexander_dual, complementary_edge_ideal, linear_quotient_order, minimal_primes,
    IdealError, MonomialOrderCert, SqfMonomial,
};
use compedge::{FieldSpec, VertexSet};
use serde::{Deserialize, Serialize};

/// Bumped whenever a document's JSON shape changes.
pub const SCHEMA_VERSION: u32 = 1;

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn ideal_str(gens: &[SqfMonomial]) -> String {
    format!("({})", join(gens, ", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub n: usize,
    pub graph6: String,
    pub edge_list: String,
    /// 1-based endpoints
    pub edges: Vec<(usize, usize)>,
}

impl InputEcho {
    fn of(g: &Graph) -> Self {
        InputEcho {
            n: g.n(),
            graph6: g.to_graph6(),
            edge_list: to_edge_list(g),
            edges: g.edges().into_iter().map(|(i, j)| (i + 1, j + 1)).collect(),
        }
    }
}

/// Dual generators, split by degree into nonedges and triangles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSplit {
    pub generators: Vec<SqfMonomial>,
    pub nonedges: Vec<SqfMonomial>,
    pub triangles: Vec<SqfMonomial>,
    /// Whether the split is exactly the nonedges and triangles of the graph.
    pub matches_graph: bool,
}

impl DualSplit {
    fn of(g: &Graph) -> Result<Self, IdealError> {
        let dual = alexander_dual(&complementary_edge_ideal(g)?)?;
        let generators = dual.gens().to_vec();
        let by_degree = |d: usize| -> Vec<SqfMonomial> {
            generators.iter().copied().filter(|m| m.degree() == d).collect()
        };
        let nonedges = by_degree(2);
        let triangles = by_degree(3);
        let mut expected_nonedges: Vec<SqfMonomial> =
            g.nonedge_sets().into_iter().map(SqfMonomial::new).collect();
        expected_nonedges.sort();
        let mut expected_triangles: Vec<SqfMonomial> =
            g.triangles().into_iter().map(SqfMonomial::new).collect();
        expected_triangles.sort();
        let matches_graph = nonedges == expected_nonedges
            && triangles == expected_triangles
            && nonedges.len() + triangles.len() == generators.len();
        Ok(DualSplit {
            generators,
            nonedges,
            triangles,
            matches_graph,
        })
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "dual:          {}", ideal_str(&self.generators));
        let _ = writeln!(out, "  nonedges:    {}", ideal_str(&self.nonedges));
        let _ = writeln!(out, "  triangles:   {}", ideal_str(&self.triangles));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema_version: u32,
    pub input: InputEcho,
    pub field: FieldSpec,
    pub mode: Mode,
    pub generators: Vec<SqfMonomial>,
    pub minimal_primes: Vec<VertexSet>,
    pub dual: DualSplit,
    pub betti: BettiTable,
    pub properties: PropertyReport,
    pub classification: ClassificationReport,
    pub consistency: ConsistencyResult,
}

impl AnalysisDocument {
    pub fn build(g: &Graph, field: FieldSpec, mode: Mode, opts: &VerifyOptions) -> Result<Self, IdealError> {
        let ev = evaluate_graph(g, field, mode, opts)?;
        Ok(AnalysisDocument {
            schema_version: SCHEMA_VERSION,
            input: InputEcho::of(g),
            field,
            mode,
            generators: ev.ideal.gens().to_vec(),
            minimal_primes: minimal_primes(&ev.ideal)?,
            dual: DualSplit::of(g)?,
            betti: ev.table,
            properties: ev.properties,
            classification: ev.classification,
            consistency: ev.consistency,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let p = &self.properties;
        let _ = writeln!(out, "graph6:        {}", self.input.graph6);
        let _ = writeln!(out, "n:             {}", self.input.n);
        let edges: Vec<String> = self.input.edges.iter().map(|(i, j)| format!("{i}{j}")).collect();
        let _ = writeln!(out, "edges:         {}", edges.join(" "));
        let _ = writeln!(out, "I_c(G):        {}", ideal_str(&self.generators));
        let _ = writeln!(out, "minimal primes: {}", join(&self.minimal_primes, " "));
        self.dual.render(&mut out);
        let _ = writeln!(out, "field:         {}", self.field);
        let _ = writeln!(out, "betti table:");
        for line in self.betti.render_text().lines() {
            let _ = writeln!(out, "  {line}");
        }
        let _ = writeln!(out, "(pd, reg):     ({}, {})", p.pd, p.reg);
        let flags = [
            ("linear_resolution", p.linear_resolution),
            ("pure_resolution", p.pure_resolution),
            ("unmixed", p.unmixed),
            ("cohen_macaulay", p.cohen_macaulay),
            ("gorenstein", p.gorenstein),
            ("level", p.level),
            ("componentwise_linear_dual", p.componentwise_linear_dual),
            ("sequentially_cohen_macaulay", p.sequentially_cohen_macaulay),
        ];
        for (name, v) in flags {
            let _ = writeln!(out, "{name:<28} {v}");
        }
        let bad: Vec<_> = self.consistency.mismatches().collect();
        let _ = writeln!(
            out,
            "checks ({} mode): {} claims, {} mismatches",
            self.mode,
            self.consistency.outcomes.len(),
            bad.len()
        );
        for m in bad {
            let _ = writeln!(out, "  MISMATCH {}: predicted {}, computed {}", m.claim, m.predicted, m.computed);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDocument {
    pub schema_version: u32,
    pub graph6: String,
    pub table: BettiTable,
    /// Present when the upper-Koszul oracle was run.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_agrees: Option<bool>,
}

impl BettiDocument {
    pub fn build(g: &Graph, field: FieldSpec, cross_check: bool) -> Result<Self, IdealError> {
        let ideal = complementary_edge_ideal(g)?;
        let table = hochster_betti(&ideal, field)?;
        let oracle_agrees = if cross_check {
            Some(koszul_betti(&ideal, field)? == table)
        } else {
            None
        };
        Ok(BettiDocument {
            schema_version: SCHEMA_VERSION,
            graph6: g.to_graph6(),
            table,
            oracle_agrees,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = self.table.render_text();
        if let Some(ok) = self.oracle_agrees {
            let _ = writeln!(out, "oracle agrees: {ok}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualDocument {
    pub schema_version: u32,
    pub graph6: String,
    pub dual: DualSplit,
}

impl DualDocument {
    pub fn build(g: &Graph) -> Result<Self, IdealError> {
        Ok(DualDocument {
            schema_version: SCHEMA_VERSION,
            graph6: g.to_graph6(),
            dual: DualSplit::of(g)?,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.dual.render(&mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderOutcome {
    Certificate(MonomialOrderCert),
    NoOrderExists { components: Vec<VertexSet> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDocument {
    pub schema_version: u32,
    pub graph6: String,
    pub outcome: OrderOutcome,
}

impl OrderDocument {
    pub fn build(g: &Graph) -> Result<Self, IdealError> {
        let outcome = match linear_quotient_order(g) {
            Ok(cert) => OrderOutcome::Certificate(cert),
            Err(IdealError::NoOrderExists { components }) => OrderOutcome::NoOrderExists { components },
            Err(e) => return Err(e),
        };
        Ok(OrderDocument {
            schema_version: SCHEMA_VERSION,
            graph6: g.to_graph6(),
            outcome,
        })
    }

    pub fn render_text(&self) -> String {
        match &self.outcome {
            OrderOutcome::NoOrderExists { components } => {
                format!("NoOrderExists: components {}\n", join(components, ","))
            }
            OrderOutcome::Certificate(cert) => {
                let mut out = String::new();
                for (k, (m, colon)) in cert.monomials.iter().zip(&cert.colon_gens).enumerate() {
                    let c = if k == 0 { "-".to_string() } else { ideal_str(colon) };
                    let _ = writeln!(out, "{:>3}  {m:<20} {c}", k + 1);
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub schema_version: u32,
    pub report: SweepReport,
}

impl SweepDocument {
    pub fn new(report: SweepReport) -> Self {
        SweepDocument {
            schema_version: SCHEMA_VERSION,
            report,
        }
    }

    pub fn render_text(&self) -> String {
        let r = &self.report;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sweep n={}..{} mode={} fields={}",
            r.n_min,
            r.n_max,
            r.mode,
            join(&r.fields, ",")
        );
        for (n, c) in &r.graphs_per_n {
            let _ = writeln!(out, "  n={n}: {c} graphs");
        }
        for (field, claims) in &r.tallies {
            let _ = writeln!(out, "{field}:");
            for (claim, t) in claims {
                let _ = writeln!(out, "  {:<28} pass {:>7}  fail {:>5}", claim.to_string(), t.pass, t.fail);
            }
        }
        let _ = writeln!(out, "mismatches: {}", r.mismatches.len());
        for m in &r.mismatches {
            let _ = writeln!(
                out,
                "  {} {} {}: predicted {}, computed {}",
                m.graph6, m.field, m.claim, m.predicted, m.computed
            );
        }
        if r.fields.len() > 1 {
            let _ = writeln!(out, "field disagreements: {}", r.field_disagreements.len());
            for d in &r.field_disagreements {
                let _ = writeln!(out, "  {}", d.graph6);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDocument {
    pub schema_version: u32,
    pub n: usize,
    pub field: FieldSpec,
    pub count: usize,
    pub graphs: Vec<String>,
}

impl CensusDocument {
    pub fn new(n: usize, field: FieldSpec, graphs: Vec<String>) -> Self {
        CensusDocument {
            schema_version: SCHEMA_VERSION,
            n,
            field,
            count: graphs.len(),
            graphs,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("n={} field={}: {} Gorenstein\n", self.n, self.field, self.count);
        for g in &self.graphs {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}
