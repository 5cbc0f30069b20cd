//! Toric ideals of graphs: incidence configurations, the 4-cycle move
//! calculus of complete bipartite graphs, and the exhaustive spanning-tree
//! cover check on complete graphs.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

use crate::config::{Configuration, MoveVector};
use crate::error::Error;
use crate::linalg::IntMatrix;
use crate::markov::{FiberComponents, MinimalSystem};

/// A finite simple graph with an optional bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    bipartition: Option<Vec<bool>>,
}

impl SimpleGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a >= vertices || b >= vertices {
                return Err(Error::IndexOutOfRange(format!("edge ({a},{b})")));
            }
            if a == b {
                return Err(Error::InvalidPartition(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidPartition(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        Ok(SimpleGraph {
            vertices,
            edges: normalized,
            bipartition: None,
        })
    }

    /// Complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        SimpleGraph {
            vertices: n,
            edges,
            bipartition: None,
        }
    }

    /// Complete bipartite graph on parts of sizes `m` and `n`. Part one is
    /// vertices `0..m`, part two `m..m+n`; edges ordered lexicographically
    /// by (part-one index, part-two index).
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..m {
            for i in 0..n {
                edges.push((a, m + i));
            }
        }
        let bipartition = Some((0..m + n).map(|v| v >= m).collect());
        SimpleGraph {
            vertices: m + n,
            edges,
            bipartition,
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bipartition(&self) -> Option<&[bool]> {
        self.bipartition.as_deref()
    }
}

/// The incidence configuration of a graph: one column per edge with unit
/// entries at the two endpoint vertices. Pointed, because the all-ones
/// functional gives every column degree 2.
pub fn config_from_graph(g: &SimpleGraph) -> Result<Configuration, Error> {
    let mut m = IntMatrix::zero(g.vertices, g.edges.len());
    for (j, &(a, b)) in g.edges.iter().enumerate() {
        m[(a, j)] = BigInt::one();
        m[(b, j)] = BigInt::one();
    }
    Configuration::new(m)
}

/// The move of the 4-cycle through rows `a`, `b` of part one and columns
/// `i`, `j` of part two of `K_{m,n}`: `+1` at edges `(a,i)` and `(b,j)`,
/// `-1` at `(b,i)` and `(a,j)`, sign-normalized. Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleMove {
    pub a: usize,
    pub b: usize,
    pub i: usize,
    pub j: usize,
    pub vector: MoveVector,
}

pub fn cycle_move(
    m: usize,
    n: usize,
    a: usize,
    b: usize,
    i: usize,
    j: usize,
) -> Result<CycleMove, Error> {
    if a >= m || b >= m {
        return Err(Error::IndexOutOfRange(format!(
            "row indices ({a},{b}) with m={m}"
        )));
    }
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange(format!(
            "column indices ({i},{j}) with n={n}"
        )));
    }
    if a == b || i == j {
        return Err(Error::DegenerateCycle);
    }
    let mut v = vec![BigInt::zero(); m * n];
    v[a * n + i] += 1;
    v[b * n + i] -= 1;
    v[b * n + j] += 1;
    v[a * n + j] -= 1;
    let vector = MoveVector::new(v)?;
    Ok(CycleMove {
        a: a.min(b),
        b: a.max(b),
        i: i.min(j),
        j: i.max(j),
        vector,
    })
}

/// The unique minimal system of `I_{K_{m,n}}`: one move per choice of two
/// rows and two columns, with the two-matching fibers as Betti data. Every
/// generator is indispensable.
pub fn four_cycle_system(m: usize, n: usize) -> Result<MinimalSystem, Error> {
    if m < 2 || n < 2 {
        return Err(Error::IndexOutOfRange(format!(
            "K_{{{m},{n}}} needs both parts >= 2"
        )));
    }
    let mut moves = BTreeSet::new();
    let mut betti = BTreeMap::new();
    for a in 0..m {
        for b in a + 1..m {
            for i in 0..n {
                for j in i + 1..n {
                    let mv = cycle_move(m, n, a, b, i, j)?.vector;
                    // Degree: one unit at each of the four cycle vertices.
                    let mut degree = vec![BigInt::zero(); m + n];
                    degree[a] = BigInt::one();
                    degree[b] = BigInt::one();
                    degree[m + i] = BigInt::one();
                    degree[m + j] = BigInt::one();
                    let e1 = mv.positive_part();
                    let e2 = mv.negative_part();
                    betti.insert(
                        degree.clone(),
                        FiberComponents::of_fiber(&degree, &[e1, e2]),
                    );
                    moves.insert(mv);
                }
            }
        }
    }
    MinimalSystem::from_parts_unchecked(moves.clone(), betti, moves)
}

/// Exhaustively checks that for every pair of subgraphs covering the edges
/// of `K_n` (each edge in the first, the second, or both) at least one of
/// the two contains a spanning tree. `3^(n(n-1)/2)` cases.
pub fn tree_cover_check(n: usize) -> Result<bool, Error> {
    tree_cover_check_with_limit(n, 5)
}

pub fn tree_cover_check_with_limit(n: usize, limit: usize) -> Result<bool, Error> {
    if n < 2 {
        return Err(Error::IndexOutOfRange("need at least two vertices".into()));
    }
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let edges = SimpleGraph::complete(n).edges().to_vec();
    let e = edges.len();
    let total = 3usize.pow(e as u32);
    let mut assignment = vec![0u8; e];
    for _ in 0..total {
        // 0 = first subgraph only, 1 = second only, 2 = both.
        let g1: Vec<(usize, usize)> = edges
            .iter()
            .zip(&assignment)
            .filter(|(_, &s)| s == 0 || s == 2)
            .map(|(&e, _)| e)
            .collect();
        let g2: Vec<(usize, usize)> = edges
            .iter()
            .zip(&assignment)
            .filter(|(_, &s)| s == 1 || s == 2)
            .map(|(&e, _)| e)
            .collect();
        if !spans_all_vertices(n, &g1) && !spans_all_vertices(n, &g2) {
            return Ok(false);
        }
        // Increment the base-3 counter.
        for slot in assignment.iter_mut() {
            if *slot == 2 {
                *slot = 0;
            } else {
                *slot += 1;
                break;
            }
        }
    }
    Ok(true)
}

/// Connectivity over all `n` vertices, i.e. the edge set contains a
/// spanning tree.
fn spans_all_vertices(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let mut components = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}
