//! Structural predictions for `I_c(G)` and their comparison with computed
//! invariants, one graph at a time or exhaustively over small `n`.

mod sweep;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graphs::{validate_standing_assumptions, Graph, GraphError};

pub use self::sweep::{
    count_graphs_without_isolated_vertices, gorenstein_census, graphs_without_isolated_vertices,
    run_sweep, sweep, FieldDisagreement, Mismatch, SweepConfig, SweepError, SweepProgress,
    SweepReport, Tally,
};
pub use self::verify::{
    check_facet_covers, evaluate_graph, verify_graph, Claim, ClaimOutcome, ConsistencyResult,
    CoverCheck, CoverViolation, GraphEvaluation, VerifyOptions,
};

/// How the `(pd, reg)` classification treats complete graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Complete graphs predicted at `(2, n-2)`, matching the computed Veronese resolution.
    #[default]
    Corrected,
    /// Complete graphs predicted at `(1, n-2)`, as the classification is literally stated.
    PaperLiteral,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Corrected => "corrected",
            Mode::PaperLiteral => "paper-literal",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "corrected" => Ok(Mode::Corrected),
            "paper-literal" => Ok(Mode::PaperLiteral),
            _ => Err(format!("unknown mode {s:?}: expected corrected or paper-literal")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptors {
    pub n: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub complete: bool,
    pub forest: bool,
    pub tree: bool,
    pub chordal: bool,
    pub triangle_free: bool,
    pub disjoint_union_of_edges: bool,
    pub component_count: usize,
    pub has_cycle: bool,
}

impl GraphDescriptors {
    pub fn of(g: &Graph) -> Self {
        let forest = g.is_forest();
        GraphDescriptors {
            n: g.n(),
            edge_count: g.edge_count(),
            connected: g.is_connected(),
            complete: g.is_complete(),
            forest,
            tree: g.is_tree(),
            chordal: g.is_chordal(),
            triangle_free: g.is_triangle_free(),
            disjoint_union_of_edges: g.is_disjoint_union_of_edges(),
            component_count: g.connected_components().len(),
            has_cycle: !forest,
        }
    }

    /// Exactly two disjoint edges and nothing else.
    pub fn is_two_k2(&self) -> bool {
        self.disjoint_union_of_edges && self.edge_count == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predictions {
    pub height: usize,
    pub unmixed: bool,
    pub sequentially_cohen_macaulay: bool,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub linear_resolution: bool,
    pub linear_quotients: bool,
    pub linearly_related: bool,
    pub pure_resolution: bool,
    pub level: bool,
    pub pd: usize,
    pub reg: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub graph6: String,
    pub mode: Mode,
    pub descriptors: GraphDescriptors,
    pub predicted: Predictions,
}

pub fn predict(d: &GraphDescriptors, mode: Mode) -> Predictions {
    let n = d.n;
    let (pd, reg) = if d.complete {
        match mode {
            Mode::Corrected => (2, n - 2),
            Mode::PaperLiteral => (1, n - 2),
        }
    } else if d.tree {
        (1, n - 2)
    } else if d.forest {
        (1, n - 1)
    } else if d.connected {
        (2, n - 2)
    } else {
        (2, n - 1)
    };
    Predictions {
        height: if d.complete { 3 } else { 2 },
        unmixed: d.complete || d.triangle_free,
        sequentially_cohen_macaulay: d.chordal,
        cohen_macaulay: d.complete || d.forest,
        gorenstein: d.is_two_k2(),
        linear_resolution: d.connected,
        linear_quotients: d.connected,
        linearly_related: d.connected,
        pure_resolution: d.connected || d.disjoint_union_of_edges,
        level: d.complete || d.tree || d.disjoint_union_of_edges,
        pd,
        reg,
    }
}

pub fn classify_graph(g: &Graph, mode: Mode) -> Result<ClassificationReport, GraphError> {
    validate_standing_assumptions(g)?;
    let descriptors = GraphDescriptors::of(g);
    Ok(ClassificationReport {
        graph6: g.to_graph6(),
        mode,
        predicted: predict(&descriptors, mode),
        descriptors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_four_vertices() {
        let p = classify_graph(&Graph::path(4), Mode::Corrected).unwrap().predicted;
        assert!(p.cohen_macaulay && p.level && p.linear_resolution && !p.gorenstein);
        assert_eq!((p.pd, p.reg), (1, 2));
    }

    #[test]
    fn path_plus_edge() {
        let g = Graph::from_labeled_edges(5, &[(1, 2), (2, 3), (4, 5)]);
        let r = classify_graph(&g, Mode::Corrected).unwrap();
        let p = r.predicted;
        assert!(p.cohen_macaulay && !p.level && !p.pure_resolution);
        assert_eq!((p.pd, p.reg), (1, 4));
        assert_eq!(r.descriptors.component_count, 2);
    }

    #[test]
    fn four_cycle() {
        let p = classify_graph(&Graph::cycle(4), Mode::Corrected).unwrap().predicted;
        assert!(!p.cohen_macaulay && p.linear_resolution && p.pure_resolution && p.unmixed);
        assert!(!p.sequentially_cohen_macaulay);
        assert_eq!((p.pd, p.reg), (2, 2));
    }

    #[test]
    fn complete_graphs_depend_on_mode() {
        let k5 = Graph::complete(5);
        let c = classify_graph(&k5, Mode::Corrected).unwrap().predicted;
        let l = classify_graph(&k5, Mode::PaperLiteral).unwrap().predicted;
        assert_eq!((c.pd, c.reg), (2, 3));
        assert_eq!((l.pd, l.reg), (1, 3));
        assert_eq!(c.height, 3);
    }

    #[test]
    fn disconnected_with_cycle() {
        let g = Graph::from_labeled_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6)]);
        let p = classify_graph(&g, Mode::Corrected).unwrap().predicted;
        assert_eq!((p.pd, p.reg), (2, 5));
        assert!(!p.unmixed && !p.cohen_macaulay && !p.pure_resolution);
    }

    #[test]
    fn standing_assumptions_propagate() {
        let g = Graph::from_labeled_edges(4, &[(1, 2), (2, 3)]);
        assert!(matches!(
            classify_graph(&g, Mode::Corrected),
            Err(GraphError::IsolatedVertex(4))
        ));
    }

    #[test]
    fn mode_strings() {
        assert_eq!("paper-literal".parse::<Mode>(), Ok(Mode::PaperLiteral));
        assert_eq!(Mode::Corrected.to_string(), "corrected");
        assert!("literal".parse::<Mode>().is_err());
        assert_eq!(serde_json::to_string(&Mode::PaperLiteral).unwrap(), "\"paper-literal\"");
    }
}
