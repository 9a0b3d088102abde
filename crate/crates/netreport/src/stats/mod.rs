//! Point statistics: one number (or an explicit reason why not) per
//! statistic per network.

pub mod assortativity;
pub mod kcore;
pub mod power_law;
pub mod triangles;

use crate::exec::Execution;
use crate::graph::{weak_components, strong_components, DegreeMode, Graph};
use crate::spectral::{
    algebraic_connectivity, pagerank, spectral_radius, top_singular_values, DanglingPolicy,
    PageRankOptions, PageRankResult, SingularValues,
};
use crate::stats::triangles::TriangleCensus;

/// A statistic that either has a value or an explicit reason it does not.
#[derive(Clone, Debug, PartialEq)]
pub enum StatValue {
    Value(f64),
    NotAvailable(String),
}

impl StatValue {
    pub fn na(reason: impl Into<String>) -> Self {
        StatValue::NotAvailable(reason.into())
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            StatValue::Value(x) => Some(*x),
            StatValue::NotAvailable(_) => None,
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            StatValue::Value(_) => None,
            StatValue::NotAvailable(r) => Some(r),
        }
    }
}

/// How heavy solvers and estimators are tuned.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub exec: Execution,
    /// Convergence tolerance for the iterative eigensolvers.
    pub tol: f64,
    /// PageRank damping factor.
    pub alpha: f64,
    /// How many leading singular values to compute.
    pub top_singular: usize,
    /// Override for the smallest degree included in the power-law fit.
    pub power_law_d_min: Option<usize>,
    pub dangling: DanglingPolicy,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            exec: Execution::default(),
            tol: 1e-10,
            alpha: 0.85,
            top_singular: 20,
            power_law_d_min: None,
            dangling: DanglingPolicy::Uniform,
        }
    }
}

/// The point-statistics table for one network.
#[derive(Clone, Debug, PartialEq)]
pub struct PointStats {
    pub num_nodes: u64,
    pub num_edges_raw: u64,
    pub num_edges_simplified: u64,
    pub average_degree: f64,
    pub average_degree_simplified: f64,
    pub lcc_fraction_weak: f64,
    pub lcc_fraction_strong: StatValue,
    pub power_law_exponent: StatValue,
    pub spectral_radius: StatValue,
    pub spectral_radius_is_upper_bound: bool,
    pub algebraic_connectivity: StatValue,
    pub total_triangles: u64,
    pub average_triangles_per_node: f64,
    pub global_clustering: StatValue,
    pub mean_local_clustering: f64,
    pub degree_assortativity: StatValue,
    pub degree_assortativity_node_mean: StatValue,
    pub max_k_core: u64,
    /// Free-form remarks that belong next to the table.
    pub notes: Vec<String>,
}

/// A field as rendered: an exact count, a real value that may be absent,
/// or a flag.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Count(u64),
    Real(StatValue),
    Flag(bool),
}

impl PointStats {
    /// Every statistic in canonical order under its canonical key. The
    /// renderers iterate this so nothing is ever dropped or reordered.
    pub fn fields(&self) -> Vec<(&'static str, FieldValue)> {
        use FieldValue::{Count, Flag, Real};
        let real = |v: &StatValue| Real(v.clone());
        vec![
            ("num_nodes", Count(self.num_nodes)),
            ("num_edges_raw", Count(self.num_edges_raw)),
            ("num_edges_simplified", Count(self.num_edges_simplified)),
            ("average_degree", Real(StatValue::Value(self.average_degree))),
            (
                "average_degree_simplified",
                Real(StatValue::Value(self.average_degree_simplified)),
            ),
            ("lcc_fraction_weak", Real(StatValue::Value(self.lcc_fraction_weak))),
            ("lcc_fraction_strong", real(&self.lcc_fraction_strong)),
            ("power_law_exponent", real(&self.power_law_exponent)),
            ("spectral_radius", real(&self.spectral_radius)),
            ("spectral_radius_is_upper_bound", Flag(self.spectral_radius_is_upper_bound)),
            ("algebraic_connectivity", real(&self.algebraic_connectivity)),
            ("total_triangles", Count(self.total_triangles)),
            (
                "average_triangles_per_node",
                Real(StatValue::Value(self.average_triangles_per_node)),
            ),
            ("global_clustering", real(&self.global_clustering)),
            (
                "mean_local_clustering",
                Real(StatValue::Value(self.mean_local_clustering)),
            ),
            ("degree_assortativity", real(&self.degree_assortativity)),
            (
                "degree_assortativity_node_mean",
                real(&self.degree_assortativity_node_mean),
            ),
            ("max_k_core", Count(self.max_k_core)),
        ]
    }
}

/// Point statistics plus the per-node vectors the distributions reuse.
#[derive(Clone, Debug)]
pub struct NetworkAnalysis {
    pub point: PointStats,
    pub local_clustering: Vec<f64>,
    pub pagerank: PageRankResult,
    pub singular: SingularValues,
}

/// Compute the point-statistics table alone.
pub fn point_stats(graph: &Graph, cfg: &AnalysisConfig) -> PointStats {
    point_stats_with_census(graph, cfg).0
}

/// Full pass: point statistics, local clustering, PageRank and leading
/// singular values.
pub fn analyze(graph: &Graph, cfg: &AnalysisConfig) -> crate::Result<NetworkAnalysis> {
    let (point, census) = point_stats_with_census(graph, cfg);
    let pagerank = pagerank(
        graph,
        &PageRankOptions {
            alpha: cfg.alpha,
            tol: cfg.tol.max(1e-12),
            max_iter: 10_000,
            dangling: cfg.dangling,
            exec: cfg.exec,
        },
    )?;
    let singular = top_singular_values(graph, cfg.top_singular, cfg.exec, cfg.tol);
    Ok(NetworkAnalysis { point, local_clustering: census.local, pagerank, singular })
}

fn point_stats_with_census(graph: &Graph, cfg: &AnalysisConfig) -> (PointStats, TriangleCensus) {
    let n = graph.node_count();
    let n_f = n as f64;
    let mut notes: Vec<String> = Vec::new();

    let weak = weak_components(graph);
    let lcc_fraction_weak = weak.largest_size() as f64 / n_f;
    let lcc_fraction_strong = if graph.is_directed() {
        let strong = strong_components(graph);
        StatValue::Value(strong.largest_size() as f64 / n_f)
    } else {
        StatValue::na("undirected network")
    };

    let m_raw = graph.edge_count_raw() as f64;
    let m_simple = graph.edge_count_simplified() as f64;
    let ends = if graph.is_directed() { 1.0 } else { 2.0 };
    let average_degree = ends * m_raw / n_f;
    let average_degree_simplified = ends * m_simple / n_f;

    let degrees = graph.degrees(DegreeMode::Total);
    let positive = degrees.iter().filter(|&&d| d > 0).count();
    let power_law_exponent = if positive < 10 {
        StatValue::na("fewer than 10 nodes with positive degree")
    } else {
        match power_law::estimate_exponent(&degrees, cfg.power_law_d_min) {
            Ok(fit) => StatValue::Value(fit.gamma),
            Err(reason) => StatValue::na(reason),
        }
    };

    let census = triangles::triangle_census(graph, cfg.exec);
    let global_clustering = match census.global {
        Some(c) => StatValue::Value(c),
        None => {
            notes.push(
                "the network has no wedges, so the global clustering coefficient is reported as 0"
                    .to_string(),
            );
            StatValue::Value(0.0)
        }
    };

    let rho = spectral_radius(graph, cfg.exec, cfg.tol);
    if rho.is_upper_bound {
        notes.push(
            "the directed spectral radius iteration did not converge; the value shown is an upper bound"
                .to_string(),
        );
    } else if !rho.converged {
        notes.push(
            "the spectral radius iteration hit its step budget; the value shown is a lower bound"
                .to_string(),
        );
    }

    let algebraic = if graph.is_directed() {
        StatValue::na("directed network")
    } else if weak.count() > 1 {
        StatValue::Value(0.0)
    } else {
        let outcome = algebraic_connectivity(graph, cfg.exec, cfg.tol);
        if !outcome.converged {
            notes.push(
                "the algebraic connectivity iteration hit its step budget; the value shown is an upper bound"
                    .to_string(),
            );
        }
        StatValue::Value(outcome.value)
    };

    let assort = assortativity::degree_assortativity(graph);
    let assort_nm = assortativity::degree_assortativity_node_mean(graph);
    let degenerate = "every edge end has the same degree";

    let point = PointStats {
        num_nodes: n as u64,
        num_edges_raw: graph.edge_count_raw() as u64,
        num_edges_simplified: graph.edge_count_simplified() as u64,
        average_degree,
        average_degree_simplified,
        lcc_fraction_weak,
        lcc_fraction_strong,
        power_law_exponent,
        spectral_radius: StatValue::Value(rho.value),
        spectral_radius_is_upper_bound: rho.is_upper_bound,
        algebraic_connectivity: algebraic,
        total_triangles: census.total,
        average_triangles_per_node: 3.0 * census.total as f64 / n_f,
        global_clustering,
        mean_local_clustering: census.mean_local,
        degree_assortativity: match assort {
            Some(r) => StatValue::Value(r),
            None => StatValue::na(degenerate),
        },
        degree_assortativity_node_mean: match assort_nm {
            Some(r) => StatValue::Value(r),
            None => StatValue::na(degenerate),
        },
        max_k_core: kcore::max_core(graph) as u64,
        notes,
    };
    (point, census)
}

/// Mean, population standard deviation and coverage of one field across
/// the members of a multi-network dataset.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldAggregate {
    pub name: &'static str,
    pub mean: Option<f64>,
    pub std: Option<f64>,
    /// Members where the field had a value.
    pub present: usize,
    pub total: usize,
}

/// Aggregate the statistics tables of several member networks, skipping
/// absent values field by field.
pub fn aggregate(members: &[PointStats]) -> Vec<FieldAggregate> {
    let total = members.len();
    if total == 0 {
        return Vec::new();
    }
    let per_member: Vec<Vec<(&'static str, FieldValue)>> =
        members.iter().map(|m| m.fields()).collect();
    let field_count = per_member[0].len();
    let mut out = Vec::with_capacity(field_count);
    for i in 0..field_count {
        let name = per_member[0][i].0;
        let values: Vec<f64> = per_member
            .iter()
            .filter_map(|fields| match &fields[i].1 {
                FieldValue::Count(c) => Some(*c as f64),
                FieldValue::Real(v) => v.value(),
                FieldValue::Flag(b) => Some(f64::from(*b)),
            })
            .collect();
        let present = values.len();
        let (mean, std) = if present == 0 {
            (None, None)
        } else {
            let mean = values.iter().sum::<f64>() / present as f64;
            let var =
                values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / present as f64;
            (Some(mean), Some(var.sqrt()))
        };
        out.push(FieldAggregate { name, mean, std, present, total });
    }
    out
}
