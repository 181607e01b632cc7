//! The directed graph view of a square matrix: vertex `i` has an edge to
//! vertex `j` valued `a_ij`.
//!
//! Vertices are zero-based in this API. Walks may revisit vertices, since
//! the limit arguments splice circuits into paths.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::Dfs;

use crate::error::{IfmError, Result};
use crate::ifn::{check_lambda, star_scalar, ComponentPair, Components};
use crate::matrix::Ifm;
use crate::scalar::Scalar;

/// A walk `i0 -> i1 -> ... -> ik` with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathSpec {
    vertices: Vec<usize>,
}

impl PathSpec {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(IfmError::BadPath(format!(
                "a path needs at least two vertices, got {}",
                vertices.len()
            )));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    fn edge_values<T: Scalar>(&self, a: &Ifm<T>) -> Result<Vec<ComponentPair<T>>> {
        let n = a.require_square()?;
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= n) {
            return Err(IfmError::BadPath(format!(
                "vertex {v} out of range for order {n}"
            )));
        }
        Ok(self.edges().map(|(i, j)| a.get(i, j)).collect())
    }
}

/// Weights of the edges of a `k`-edge walk in the closed-form path weight:
/// `lambda^(k-1)` for the first edge, then `lambda^(k-1-i) (1 - lambda)`.
/// They sum to one.
pub fn path_coefficients<T: Scalar>(lambda: T, k: usize) -> Vec<T> {
    assert!(k >= 1, "a path has at least one edge");
    let last = (k - 1) as i32;
    (0..k)
        .map(|i| {
            let lead = lambda.powi(last - i as i32);
            if i == 0 {
                lead
            } else {
                lead * (T::one() - lambda)
            }
        })
        .collect()
}

fn closed_form<T: Scalar>(coeffs: &[T], values: impl Iterator<Item = T>, p: T) -> T {
    let mut acc = T::zero();
    let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
    for (&c, x) in coeffs.iter().zip(values) {
        if c == T::zero() {
            continue;
        }
        if p < T::zero() && x == T::zero() {
            return T::zero();
        }
        lo = lo.min(x);
        hi = hi.max(x);
        acc = acc + c * x.powf(p);
    }
    acc.powf(p.recip()).max(lo).min(hi)
}

/// Closed-form generalized-mean weight of a walk:
/// `w = (sum_i c_i a_i^p)^(1/p)` per component with [`path_coefficients`].
pub fn path_weight_gen<T: Scalar>(
    a: &Ifm<T>,
    path: &PathSpec,
    lambda: T,
    p: T,
) -> Result<ComponentPair<T>> {
    if p == T::zero() {
        return Err(IfmError::ZeroP);
    }
    check_lambda(lambda)?;
    let edges = path.edge_values(a)?;
    let coeffs = path_coefficients(lambda, edges.len());
    let mu = closed_form(&coeffs, edges.iter().map(|e| e.mu()), p);
    let nu = closed_form(&coeffs, edges.iter().map(|e| e.nu()), p);
    Ok(ComponentPair::from_parts(mu, nu))
}

/// Star weight of a walk: `a_01 * a_12 * ... * a_(k-1)k`, folded from the left.
pub fn path_weight_star<T: Scalar>(
    a: &Ifm<T>,
    path: &PathSpec,
    lambda: T,
) -> Result<ComponentPair<T>> {
    check_lambda(lambda)?;
    let edges = path.edge_values(a)?;
    let (first, rest) = edges.split_first().expect("non-empty path");
    rest.iter()
        .try_fold(*first, |acc, e| star_scalar(&acc, e, lambda))
}

/// Edges valued exactly `<1, 0>` and what they imply for the limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalStructure {
    pub critical_edges: BTreeSet<(usize, usize)>,
    /// Vertices on a cycle (self-loops included) of critical edges.
    pub critical_vertices: BTreeSet<usize>,
    /// `reachable_columns[j]`: some critical vertex reaches `j` along
    /// critical edges.
    pub reachable_columns: Vec<bool>,
}

pub fn critical_structure<T: Scalar>(a: &Ifm<T>) -> Result<CriticalStructure> {
    let n = a.require_square()?;
    let mut graph = DiGraph::<(), ()>::with_capacity(n, n * n);
    let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
    let mut critical_edges = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if a.is_top_at(i, j) {
                critical_edges.insert((i, j));
                graph.add_edge(nodes[i], nodes[j], ());
            }
        }
    }

    let mut critical_vertices = BTreeSet::new();
    for component in tarjan_scc(&graph) {
        let on_cycle = component.len() > 1
            || component
                .first()
                .is_some_and(|&v| critical_edges.contains(&(v.index(), v.index())));
        if on_cycle {
            critical_vertices.extend(component.iter().map(|v| v.index()));
        }
    }

    let mut reachable_columns = vec![false; n];
    for &start in &critical_vertices {
        if reachable_columns[start] {
            continue;
        }
        let mut dfs = Dfs::new(&graph, nodes[start]);
        while let Some(v) = dfs.next(&graph) {
            reachable_columns[v.index()] = true;
        }
    }

    Ok(CriticalStructure {
        critical_edges,
        critical_vertices,
        reachable_columns,
    })
}

/// Columns whose limit entries are all `<1, 0>`.
pub fn predict_column_limits<T: Scalar>(a: &Ifm<T>) -> Result<Vec<bool>> {
    Ok(critical_structure(a)?.reachable_columns)
}

/// The limit is the universal matrix iff every column holds an exact `<1, 0>`.
pub fn predict_universal<T: Scalar>(a: &Ifm<T>) -> Result<bool> {
    let n = a.require_square()?;
    Ok((0..n).all(|j| (0..n).any(|i| a.is_top_at(i, j))))
}

#[derive(Debug, Clone)]
pub struct DotOptions {
    pub graph_name: String,
    /// Decimal places in edge labels.
    pub precision: usize,
}

impl Default for DotOptions {
    fn default() -> Self {
        Self {
            graph_name: "G".into(),
            precision: 5,
        }
    }
}

/// Rounds to `precision` decimals and drops trailing zeros: `1`, `0.5`,
/// `0.93326`.
pub fn format_rounded<T: Scalar>(x: T, precision: usize) -> String {
    let s = format!("{:.*}", precision, x.to_f64().unwrap_or(f64::NAN));
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Graphviz digraph of `a`. Edges with `mu > 0` or `nu < 1` are drawn;
/// critical edges are bold and critical vertices double-circled. Vertex
/// names are one-based (`v1`, `v2`, ...).
pub fn export_dot<T: Scalar>(a: &Ifm<T>, opts: &DotOptions) -> Result<String> {
    let n = a.require_square()?;
    let cs = critical_structure(a)?;
    let mut out = String::new();
    writeln!(
        out,
        "digraph \"{}\" {{",
        opts.graph_name.replace('"', "\\\"")
    )
    .unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..n {
        let shape = if cs.critical_vertices.contains(&v) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  v{} [label=\"v{}\", shape={}];", v + 1, v + 1, shape).unwrap();
    }
    for i in 0..n {
        for j in 0..n {
            let e = a.get(i, j);
            if !(e.mu() > T::zero() || e.nu() < T::one()) {
                continue;
            }
            let label = format!(
                "⟨{},{}⟩",
                format_rounded(e.mu(), opts.precision),
                format_rounded(e.nu(), opts.precision)
            );
            let style = if cs.critical_edges.contains(&(i, j)) {
                ", style=bold"
            } else {
                ""
            };
            writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"{}];",
                i + 1,
                j + 1,
                label,
                style
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}
