//! State graphs of reachable frontiers and their transfer matrices.
//!
//! Nodes are the frontier profiles reachable from the flat profile, edges
//! record single-tile placements, and the edge multiplicity counts the
//! distinct orientations realizing the same transition. Closed walks that
//! start and end at the flat profile are in bijection with complete tilings,
//! one step per tile.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::frontier::{Frontier, MAX_LONG_EDGE};
use crate::shapes::Shape;

/// Default ceiling on the number of reachable states.
pub const DEFAULT_NODE_CAP: usize = 10_000_000;

/// A placement transition `from -> to` realized by `multiplicity` distinct
/// orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: u32,
    pub to: u32,
    pub multiplicity: u32,
}

/// The reachable frontier digraph for one shape and cross section.
///
/// Node 0 is always the flat frontier and node numbering is BFS discovery
/// order, so two builds of the same input are identical.
#[derive(Debug, Clone)]
pub struct StateGraph {
    shape: Shape,
    k: usize,
    m: usize,
    frontiers: Vec<Frontier>,
    edges: Vec<Edge>,
    alive: Vec<bool>,
}

/// Hash key for a frontier; small grids pack into an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum StateKey {
    Packed(u128),
    Bytes(Box<[u8]>),
}

fn state_key(f: &Frontier, bits_per_cell: u32) -> StateKey {
    let heights = f.heights();
    if bits_per_cell as usize * heights.len() <= 128 {
        let mut packed = 0u128;
        for &h in heights {
            packed = (packed << bits_per_cell) | h as u128;
        }
        StateKey::Packed(packed)
    } else {
        StateKey::Bytes(heights.into())
    }
}

impl StateGraph {
    /// Breadth-first exploration from the flat frontier with the default
    /// node cap.
    pub fn build(shape: Shape, k: usize, m: usize) -> Result<Self> {
        Self::build_capped(shape, k, m, DEFAULT_NODE_CAP)
    }

    pub fn build_capped(shape: Shape, k: usize, m: usize, node_cap: usize) -> Result<Self> {
        assert!(k >= 1 && m >= 1);
        if shape.long_edge() > MAX_LONG_EDGE {
            return Err(Error::Unsupported(format!(
                "shape {shape} has long edge {} > {MAX_LONG_EDGE}",
                shape.long_edge()
            )));
        }
        let orientations = shape.orientations();
        let bits_per_cell = u32::BITS - shape.long_edge().leading_zeros();

        let flat = Frontier::flat(k, m);
        let mut index: HashMap<StateKey, u32> = HashMap::new();
        index.insert(state_key(&flat, bits_per_cell), 0);
        let mut frontiers = vec![flat];
        let mut edges = Vec::new();

        let mut cursor = 0usize;
        while cursor < frontiers.len() {
            let current = frontiers[cursor].clone();
            // successors in orientation order, multiplicities aggregated
            let mut outgoing: Vec<(u32, u32)> = Vec::with_capacity(orientations.len());
            for &o in &orientations {
                let Some(next) = current.place(o) else {
                    continue;
                };
                let key = state_key(&next, bits_per_cell);
                let to = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if frontiers.len() >= node_cap {
                            return Err(Error::NodeCapExceeded {
                                cap: node_cap,
                                bound: state_count_bound(shape, k, m).to_string(),
                            });
                        }
                        let id = frontiers.len() as u32;
                        index.insert(key, id);
                        frontiers.push(next);
                        id
                    }
                };
                match outgoing.iter_mut().find(|(t, _)| *t == to) {
                    Some((_, mult)) => *mult += 1,
                    None => outgoing.push((to, 1)),
                }
            }
            for (to, multiplicity) in outgoing {
                edges.push(Edge {
                    from: cursor as u32,
                    to,
                    multiplicity,
                });
            }
            cursor += 1;
        }

        let alive = vec![true; frontiers.len()];
        Ok(StateGraph {
            shape,
            k,
            m,
            frontiers,
            edges,
            alive,
        })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn cross_section(&self) -> (usize, usize) {
        (self.k, self.m)
    }

    pub fn node_count(&self) -> usize {
        self.frontiers.len()
    }

    pub fn alive_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, node: usize) -> String {
        self.frontiers[node].encode()
    }

    pub fn labels(&self) -> Vec<String> {
        self.frontiers.iter().map(Frontier::encode).collect()
    }

    pub fn is_alive(&self, node: usize) -> bool {
        self.alive[node]
    }

    /// Outdegree counting multiplicities, over live edges only.
    pub fn outdegree(&self, node: usize) -> u32 {
        self.edges
            .iter()
            .filter(|e| {
                e.from == node as u32 && self.alive[e.from as usize] && self.alive[e.to as usize]
            })
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Marks every node that cannot contribute to a closed walk through the
    /// flat frontier as dead: first the zero-outdegree dead ends (repeatedly,
    /// since removing one can strand its predecessors), then everything that
    /// still cannot reach node 0. Node 0 itself is never removed.
    pub fn prune(&self) -> StateGraph {
        let n = self.node_count();
        let mut outdeg = vec![0u32; n];
        let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
        for e in &self.edges {
            outdeg[e.from as usize] += 1;
            reverse[e.to as usize].push(e.from);
        }

        let mut dead = vec![false; n];
        let mut stack: Vec<u32> = (1..n as u32).filter(|&v| outdeg[v as usize] == 0).collect();
        while let Some(v) = stack.pop() {
            if dead[v as usize] {
                continue;
            }
            dead[v as usize] = true;
            for &u in &reverse[v as usize] {
                outdeg[u as usize] -= 1;
                if outdeg[u as usize] == 0 && u != 0 && !dead[u as usize] {
                    stack.push(u);
                }
            }
        }

        // keep only nodes that reach node 0 through live nodes
        let mut alive = vec![false; n];
        alive[0] = true;
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            for &u in &reverse[v as usize] {
                if !alive[u as usize] && !dead[u as usize] {
                    alive[u as usize] = true;
                    stack.push(u);
                }
            }
        }

        StateGraph {
            alive,
            ..self.clone()
        }
    }

    /// The sparse transfer matrix over live nodes. Entry `(row, col)` is the
    /// multiplicity of the step `col -> row`, matching the convention that a
    /// column belongs to the start of a step and a row to its end.
    pub fn transfer_matrix(&self) -> TransferMatrix {
        let mut dense_index = vec![u32::MAX; self.node_count()];
        let mut dim = 0u32;
        for (v, &is_alive) in self.alive.iter().enumerate() {
            if is_alive {
                dense_index[v] = dim;
                dim += 1;
            }
        }
        let mut rows: Vec<Vec<(u32, u64)>> = vec![Vec::new(); dim as usize];
        for e in &self.edges {
            let (from, to) = (dense_index[e.from as usize], dense_index[e.to as usize]);
            if from != u32::MAX && to != u32::MAX {
                rows[to as usize].push((from, e.multiplicity as u64));
            }
        }
        TransferMatrix {
            dim: dim as usize,
            rows,
            shape: self.shape,
            cross: (self.k, self.m),
        }
    }

    /// DOT rendering of the graph; dead nodes and their edges are dashed when
    /// `show_dead` is set and omitted otherwise.
    pub fn to_dot(&self, show_dead: bool) -> String {
        let mut out = String::from("digraph states {\n  rankdir=LR;\n");
        for (v, f) in self.frontiers.iter().enumerate() {
            if self.alive[v] {
                let _ = writeln!(out, "  n{v} [label=\"{}\"];", f.encode());
            } else if show_dead {
                let _ = writeln!(out, "  n{v} [label=\"{}\", style=dashed];", f.encode());
            }
        }
        for e in &self.edges {
            let live = self.alive[e.from as usize] && self.alive[e.to as usize];
            if !live && !show_dead {
                continue;
            }
            let mut attrs = Vec::new();
            if e.multiplicity > 1 {
                attrs.push(format!("label=\"{}\"", e.multiplicity));
            }
            if !live {
                attrs.push("style=dashed".to_string());
            }
            if attrs.is_empty() {
                let _ = writeln!(out, "  n{} -> n{};", e.from, e.to);
            } else {
                let _ = writeln!(out, "  n{} -> n{} [{}];", e.from, e.to, attrs.join(", "));
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON dump `{nodes, edges, alive}` with edges as `[from, to, mult]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.labels(),
            "edges": self.edges.iter().map(|e| [e.from, e.to, e.multiplicity]).collect::<Vec<_>>(),
            "alive": self.alive,
        })
    }
}

/// Crude state-count bound `(1 + t_n)^(k*m)`; reported when the cap trips.
pub fn state_count_bound(shape: Shape, k: usize, m: usize) -> BigUint {
    let base = BigUint::from(shape.long_edge() + 1);
    let mut bound = BigUint::one();
    for _ in 0..k * m {
        bound *= &base;
    }
    bound
}

/// Sparse nonnegative integer matrix applied by rows; the weight `z` per
/// step is implicit, the series engine tracks powers of `z` by iterating.
#[derive(Debug, Clone)]
pub struct TransferMatrix {
    dim: usize,
    rows: Vec<Vec<(u32, u64)>>,
    shape: Shape,
    cross: (usize, usize),
}

impl TransferMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn cross_section(&self) -> (usize, usize) {
        self.cross
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.rows[row]
            .iter()
            .find(|&&(c, _)| c as usize == col)
            .map_or(0, |&(_, m)| m)
    }

    pub fn nonzero_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn row_product(&self, row: usize, load: &[BigUint]) -> BigUint {
        let mut acc = BigUint::from(0u32);
        for &(col, mult) in &self.rows[row] {
            acc += &load[col as usize] * mult;
        }
        acc
    }

    /// One matrix-vector step, sequentially.
    pub fn apply_sequential(&self, load: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(load.len(), self.dim);
        (0..self.dim).map(|r| self.row_product(r, load)).collect()
    }

    /// One matrix-vector step with rows evaluated in parallel. Each row is
    /// summed in the same order as the sequential path, so results are
    /// bit-identical.
    #[cfg(feature = "parallel")]
    pub fn apply_parallel(&self, load: &[BigUint]) -> Vec<BigUint> {
        use rayon::prelude::*;
        assert_eq!(load.len(), self.dim);
        (0..self.dim)
            .into_par_iter()
            .map(|r| self.row_product(r, load))
            .collect()
    }

    /// One matrix-vector step using the parallel path when compiled in.
    pub fn apply(&self, load: &[BigUint]) -> Vec<BigUint> {
        #[cfg(feature = "parallel")]
        {
            self.apply_parallel(load)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.apply_sequential(load)
        }
    }
}
