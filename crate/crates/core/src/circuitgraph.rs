//! The fundamental circuit incidence matrix of a basic form `(B | A)` and
//! its bipartite graph on row vertices `r_i` and column vertices `c_j`.
//!
//! An edge `{r_i, c_j}` is a nonzero entry `a_ij`. Vertices are ordered
//! `r_1 < ... < r_d < c_{d+1} < ... < c_N`; every traversal and tie-break
//! below follows that order.

use std::collections::VecDeque;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// Row position in the incidence matrix.
    Row(usize),
    /// Column position in the incidence matrix.
    Col(usize),
}

/// An edge of the bipartite graph, i.e. a nonzero entry of `A`, addressed by
/// its row and column position in the incidence matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub row: usize,
    pub col: usize,
}

impl Edge {
    pub fn new(row: usize, col: usize) -> Self {
        Edge { row, col }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (Vertex::Row(self.row), Vertex::Col(self.col))
    }

    pub fn touches(self, v: Vertex) -> bool {
        match v {
            Vertex::Row(i) => i == self.row,
            Vertex::Col(j) => j == self.col,
        }
    }

    fn other(self, v: Vertex) -> Vertex {
        match v {
            Vertex::Row(_) => Vertex::Col(self.col),
            Vertex::Col(_) => Vertex::Row(self.row),
        }
    }
}

/// Support matrix of `A` with ground-set labels for rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitIncidence {
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
    entries: Vec<bool>,
}

impl CircuitIncidence {
    /// Support of `a`; `row_labels` and `col_labels` are zero-based ground
    /// set indices of the basis elements and the non-basis elements.
    pub fn from_support(a: &IntMatrix, row_labels: Vec<usize>, col_labels: Vec<usize>) -> Self {
        assert_eq!(row_labels.len(), a.rows());
        assert_eq!(col_labels.len(), a.cols());
        let entries = (0..a.rows())
            .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
            .map(|(i, j)| !a.get(i, j).is_zero())
            .collect();
        CircuitIncidence {
            row_labels,
            col_labels,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rows() + self.cols()
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.col_labels
    }

    pub fn contains(&self, e: Edge) -> bool {
        e.row < self.rows() && e.col < self.cols() && self.entries[e.row * self.cols() + e.col]
    }

    /// All edges, sorted by (row, col).
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.rows())
            .flat_map(|i| (0..self.cols()).map(move |j| Edge::new(i, j)))
            .filter(|&e| self.contains(e))
            .collect()
    }

    /// Neighbours in increasing vertex order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        match v {
            Vertex::Row(i) => (0..self.cols())
                .filter(|&j| self.contains(Edge::new(i, j)))
                .map(Vertex::Col)
                .collect(),
            Vertex::Col(j) => (0..self.rows())
                .filter(|&i| self.contains(Edge::new(i, j)))
                .map(Vertex::Row)
                .collect(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.rows())
            .map(Vertex::Row)
            .chain((0..self.cols()).map(Vertex::Col))
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let data = self.entries.iter().map(|&b| u8::from(b).into()).collect();
        IntMatrix::new(self.rows(), self.cols(), data).expect("shape")
    }

    /// One-based display name, e.g. `r1` or `c4`.
    pub fn vertex_name(&self, v: Vertex) -> String {
        match v {
            Vertex::Row(i) => format!("r{}", self.row_labels[i] + 1),
            Vertex::Col(j) => format!("c{}", self.col_labels[j] + 1),
        }
    }

    /// One-based entry name `a_ij` in ground-set labels, e.g. `a14`, or
    /// `a3,12` once a label has two digits.
    pub fn edge_name(&self, e: Edge) -> String {
        let (i, j) = (self.row_labels[e.row] + 1, self.col_labels[e.col] + 1);
        if i < 10 && j < 10 {
            format!("a{i}{j}")
        } else {
            format!("a{i},{j}")
        }
    }

    fn vertex_index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Row(i) => i,
            Vertex::Col(j) => self.rows() + j,
        }
    }
}

impl fmt::Display for CircuitIncidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_matrix())
    }
}

/// Incidence matrix of `a` with the default labelling: rows `0..d`, columns
/// `d..d + cols`.
pub fn incidence(a: &IntMatrix) -> CircuitIncidence {
    let d = a.rows();
    CircuitIncidence::from_support(a, (0..d).collect(), (d..d + a.cols()).collect())
}

/// Number of connected components, isolated vertices included.
pub fn kappa(c: &CircuitIncidence) -> usize {
    let mut seen = vec![false; c.vertex_count()];
    let mut components = 0;
    for start in c.vertices() {
        if std::mem::replace(&mut seen[c.vertex_index(start)], true) {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in c.neighbors(v) {
                if !std::mem::replace(&mut seen[c.vertex_index(w)], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    components
}

/// A forest in the bipartite graph on `rows + cols` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    rows: usize,
    cols: usize,
    edges: Vec<Edge>,
}

impl Forest {
    /// Checks ranges, duplicates and acyclicity. Edges are stored sorted.
    pub fn new(rows: usize, cols: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut parent: Vec<usize> = (0..rows + cols).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &edges {
            if e.row >= rows || e.col >= cols {
                return Err(Error::PathMismatch(format!("edge {e:?} out of range")));
            }
            let (a, b) = (find(&mut parent, e.row), find(&mut parent, rows + e.col));
            if a == b {
                return Err(Error::PathMismatch(format!("edge {e:?} closes a cycle")));
            }
            parent[a] = b;
        }
        Ok(Forest { rows, cols, edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Components of the forest itself; equals `kappa` of the graph when the
    /// forest is spanning.
    pub fn kappa(&self) -> usize {
        self.rows + self.cols - self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True when every edge belongs to `c` and the forest spans every
    /// component of `c`.
    pub fn is_spanning_forest_of(&self, c: &CircuitIncidence) -> bool {
        self.rows == c.rows()
            && self.cols == c.cols()
            && self.edges.iter().all(|&e| c.contains(e))
            && self.kappa() == kappa(c)
    }

    fn degree(&self, alive: &[bool], v: Vertex) -> usize {
        self.edges
            .iter()
            .zip(alive)
            .filter(|(e, &a)| a && e.touches(v))
            .count()
    }

    fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.rows)
            .map(Vertex::Row)
            .chain((0..self.cols).map(Vertex::Col))
    }
}

/// Depth-first spanning forest: each component is rooted at its lowest
/// vertex and neighbours are visited in increasing order.
pub fn coordinatizing_path(c: &CircuitIncidence) -> Forest {
    let mut seen = vec![false; c.vertex_count()];
    let mut edges = Vec::new();
    for root in c.vertices() {
        if std::mem::replace(&mut seen[c.vertex_index(root)], true) {
            continue;
        }
        let mut stack: Vec<(Vertex, Vec<Vertex>, usize)> = vec![(root, c.neighbors(root), 0)];
        while let Some((v, nbrs, next)) = stack.last_mut() {
            if *next == nbrs.len() {
                stack.pop();
                continue;
            }
            let w = nbrs[*next];
            *next += 1;
            if std::mem::replace(&mut seen[c.vertex_index(w)], true) {
                continue;
            }
            edges.push(match (*v, w) {
                (Vertex::Row(i), Vertex::Col(j)) | (Vertex::Col(j), Vertex::Row(i)) => {
                    Edge::new(i, j)
                }
                _ => unreachable!("bipartite"),
            });
            stack.push((w, c.neighbors(w), 0));
        }
    }
    Forest::new(c.rows(), c.cols(), edges).expect("depth-first tree edges are acyclic")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    /// Vertex of degree one removed at this step.
    pub vertex: Vertex,
    /// Its unique remaining forest edge.
    pub edge: Edge,
}

/// Leaf-removal sequence of a forest: at each step the named vertex has
/// degree one among the edges not yet removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    steps: Vec<EliminationStep>,
}

impl EliminationOrder {
    /// Validates a caller-chosen vertex sequence against `forest`.
    pub fn from_vertices(forest: &Forest, vertices: &[Vertex]) -> Result<Self> {
        let mut alive = vec![true; forest.len()];
        let mut steps = Vec::with_capacity(vertices.len());
        for &v in vertices {
            let incident: Vec<usize> = (0..forest.len())
                .filter(|&k| alive[k] && forest.edges[k].touches(v))
                .collect();
            let [k] = incident[..] else {
                return Err(Error::BadEliminationOrder(format!(
                    "{v:?} has degree {} when eliminated",
                    incident.len()
                )));
            };
            alive[k] = false;
            steps.push(EliminationStep {
                vertex: v,
                edge: forest.edges[k],
            });
        }
        if alive.iter().any(|&a| a) {
            return Err(Error::BadEliminationOrder(
                "forest edges remain after the last step".into(),
            ));
        }
        Ok(EliminationOrder { steps })
    }

    pub fn steps(&self) -> &[EliminationStep] {
        &self.steps
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Repeatedly removes the lowest vertex of degree one.
pub fn elimination_order(forest: &Forest) -> EliminationOrder {
    let mut alive = vec![true; forest.len()];
    let mut steps = Vec::with_capacity(forest.len());
    while alive.iter().any(|&a| a) {
        let v = forest
            .vertices()
            .find(|&v| forest.degree(&alive, v) == 1)
            .expect("a nonempty forest has a leaf");
        let k = (0..forest.len())
            .find(|&k| alive[k] && forest.edges[k].touches(v))
            .expect("leaf edge");
        alive[k] = false;
        steps.push(EliminationStep {
            vertex: v,
            edge: forest.edges[k],
        });
    }
    EliminationOrder { steps }
}

/// The unique cycle of `forest ∪ {e}`: the forest path from `r_i` to `c_j`
/// followed by `e` itself.
pub fn coordinatizing_circuit(forest: &Forest, e: Edge) -> Result<Vec<Edge>> {
    if e.row >= forest.rows || e.col >= forest.cols {
        return Err(Error::PathMismatch(format!("edge {e:?} out of range")));
    }
    if forest.contains(e) {
        return Err(Error::EdgeInForest);
    }
    let index = |v: Vertex| match v {
        Vertex::Row(i) => i,
        Vertex::Col(j) => forest.rows + j,
    };
    let (start, goal) = e.endpoints();
    let mut via: Vec<Option<Edge>> = vec![None; forest.rows + forest.cols];
    let mut seen = vec![false; forest.rows + forest.cols];
    seen[index(start)] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if v == goal {
            break;
        }
        for &f in forest.edges.iter().filter(|f| f.touches(v)) {
            let w = f.other(v);
            if !std::mem::replace(&mut seen[index(w)], true) {
                via[index(w)] = Some(f);
                queue.push_back(w);
            }
        }
    }
    if !seen[index(goal)] {
        return Err(Error::NotSameComponent);
    }
    let mut path = Vec::new();
    let mut v = goal;
    while v != start {
        let f = via[index(v)].expect("bfs parent");
        path.push(f);
        v = f.other(v);
    }
    path.reverse();
    path.push(e);
    Ok(path)
}
