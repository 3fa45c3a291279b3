//! Combinatorial model of clovers.
//!
//! A clover is a graph whose vertices are leaves (univalent) or trivalent,
//! with loops at trivalent vertices allowed (a loop counts twice toward the
//! degree). Only the combinatorics are modelled: class membership, the
//! orientations used to split the surgery link into two trivial sublinks,
//! the resulting tail/head partition, and the component count of the
//! Kirby move performed at each non-fork leaf.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CloverError {
    #[error("malformed clover: {0}")]
    Malformed(String),

    #[error("clover has {0} connected components; orient one component at a time")]
    Disconnected(usize),

    #[error("no admissible orientation: {0}")]
    Infeasible(String),

    #[error("orientation rejected: {0}")]
    InvalidOrientation(String),

    #[error("vertex {vertex} is a fork")]
    Fork { vertex: usize },

    #[error("clover is not in class c^1: {0}")]
    NotInClass(String),
}

type Result<T> = std::result::Result<T, CloverError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VertexKind {
    Trivalent,
    Leaf {
        /// The leaf bounds a disk meeting the knot exactly once.
        #[serde(default = "yes")]
        simple: bool,
    },
}

fn yes() -> bool {
    true
}

impl VertexKind {
    pub fn leaf() -> Self {
        VertexKind::Leaf { simple: true }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, VertexKind::Leaf { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct CloverGraph {
    vertices: Vec<VertexKind>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<VertexKind>,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for CloverGraph {
    type Error = CloverError;

    fn try_from(raw: RawGraph) -> Result<Self> {
        CloverGraph::new(raw.vertices, raw.edges)
    }
}

impl From<CloverGraph> for RawGraph {
    fn from(g: CloverGraph) -> Self {
        RawGraph { vertices: g.vertices, edges: g.edges }
    }
}

impl CloverGraph {
    pub fn new(vertices: Vec<VertexKind>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(CloverError::Malformed("no vertices".into()));
        }
        let mut deg = vec![0usize; vertices.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(CloverError::Malformed(format!("edge {i} = ({a}, {b}) is out of range")));
            }
            deg[a] += 1;
            deg[b] += 1;
        }
        for (v, kind) in vertices.iter().enumerate() {
            let want = if kind.is_leaf() { 1 } else { 3 };
            if deg[v] != want {
                return Err(CloverError::Malformed(format!(
                    "vertex {v} has degree {} but should have degree {want}",
                    deg[v]
                )));
            }
        }
        Ok(CloverGraph { vertices, edges })
    }

    /// A wheel: `n` trivalent vertices on a circle, each with one leg
    /// ending in a simple leaf. For `n = 1` the circle is a loop.
    pub fn wheel(n: usize) -> Self {
        assert!(n >= 1);
        let mut vertices = vec![VertexKind::Trivalent; n];
        vertices.extend(std::iter::repeat_n(VertexKind::leaf(), n));
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n + i)));
        Self::new(vertices, edges).expect("wheel is well formed")
    }

    /// One trivalent vertex with a loop and a single leg.
    pub fn loop_with_leaf() -> Self {
        Self::wheel(1)
    }

    /// One trivalent vertex with three legs.
    pub fn y_graph() -> Self {
        Self::new(
            vec![VertexKind::Trivalent, VertexKind::leaf(), VertexKind::leaf(), VertexKind::leaf()],
            vec![(0, 1), (0, 2), (0, 3)],
        )
        .unwrap()
    }

    pub fn vertices(&self) -> &[VertexKind] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.vertices[v].is_leaf()
    }

    pub fn leaf_count(&self) -> usize {
        self.vertices.iter().filter(|k| k.is_leaf()).count()
    }

    /// Edges with a leaf endpoint.
    pub fn is_leaf_edge(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        self.is_leaf(a) || self.is_leaf(b)
    }

    /// `(edge, other endpoint)` for every half-edge at `v`; a loop appears twice.
    fn incidences(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push((e, b));
            }
            if b == v {
                out.push((e, a));
            }
        }
        out
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(vec![]);
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    fn fork_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| !self.is_leaf(v))
            .filter(|&v| {
                self.incidences(v).iter().filter(|(e, _)| self.is_leaf_edge(*e)).count() >= 2
            })
            .collect()
    }

    fn is_internal(&self, v: usize) -> bool {
        !self.is_leaf(v) && self.incidences(v).iter().all(|(e, _)| !self.is_leaf_edge(*e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    /// First Betti number `E - V + 1`.
    pub betti: usize,
    pub internal_vertices: Vec<usize>,
    pub simple_leaves: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloverClass {
    pub components: Vec<ComponentInfo>,
    pub all_leaves_simple: bool,
    pub forks: Vec<usize>,
    pub in_c1: bool,
    pub in_c2: bool,
    pub in_civ: bool,
    pub in_c1nf: bool,
}

impl CloverClass {
    pub fn fork_count(&self) -> usize {
        self.forks.len()
    }

    pub fn loop_counts(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.betti).collect()
    }

    /// Class `c^n`: simple leaves and every component with `β₁ >= n`.
    pub fn in_cn(&self, n: usize) -> bool {
        self.all_leaves_simple && self.components.iter().all(|c| c.betti >= n)
    }
}

/// Class flags of a clover.
///
/// `c^iv` asks every component for an internal trivalent vertex (none of
/// its edges reaches a leaf) and for a simple leaf, so that a simple set of
/// leaves with one leaf per component exists.
pub fn classify(g: &CloverGraph) -> CloverClass {
    let mut components = Vec::new();
    for vs in g.components() {
        let edge_count = g.edges.iter().filter(|(a, _)| vs.binary_search(a).is_ok()).count();
        let betti = edge_count + 1 - vs.len();
        let internal_vertices = vs.iter().copied().filter(|&v| g.is_internal(v)).collect();
        let simple_leaves = vs
            .iter()
            .filter(|&&v| matches!(g.vertices[v], VertexKind::Leaf { simple: true }))
            .count();
        components.push(ComponentInfo { vertices: vs, edge_count, betti, internal_vertices, simple_leaves });
    }
    let all_leaves_simple = g
        .vertices
        .iter()
        .all(|k| !matches!(k, VertexKind::Leaf { simple: false }));
    let forks = g.fork_vertices();
    let mut class = CloverClass {
        components,
        all_leaves_simple,
        forks,
        in_c1: false,
        in_c2: false,
        in_civ: false,
        in_c1nf: false,
    };
    class.in_c1 = class.in_cn(1);
    class.in_c2 = class.in_cn(2);
    class.in_civ = class
        .components
        .iter()
        .all(|c| !c.internal_vertices.is_empty() && c.simple_leaves > 0);
    class.in_c1nf = class.in_c1 && class.forks.is_empty();
    class
}

/// Direction of every edge as `(tail, head)`, indexed like the graph's edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeOrientation {
    pub directions: Vec<(usize, usize)>,
}

/// Orients a connected clover with `β₁ >= 1` so that no trivalent vertex is
/// a source or a sink and every leaf edge points at its leaf.
///
/// Leaf edges are forced. The remaining core graph (trivalent vertices and
/// the edges between them) is oriented by a depth-first search rooted at a
/// vertex on a cycle: tree edges point away from the root and all other
/// edges point back up the tree. Every 2-edge-connected block then becomes
/// strongly connected, and each bridge points away from the root's block,
/// giving every remaining vertex an incoming edge from its parent and, if
/// it has no leaf edge, outgoing edges to its children. Ties are broken by
/// edge index, so the output is deterministic.
pub fn orient_edges(g: &CloverGraph) -> Result<EdgeOrientation> {
    let comps = g.components();
    if comps.len() != 1 {
        return Err(CloverError::Disconnected(comps.len()));
    }
    let n = g.vertices.len();
    let m = g.edges.len();
    if let Some(e) = (0..m).find(|&e| {
        let (a, b) = g.edges[e];
        g.is_leaf(a) && g.is_leaf(b)
    }) {
        return Err(CloverError::Infeasible(format!(
            "edge {e} joins two leaves and cannot point toward both"
        )));
    }
    if m + 1 == n {
        return Err(CloverError::Infeasible(
            "the clover is a tree (β₁ = 0): its trivalent vertices outnumber the edges between \
             them, so after pointing every leaf edge outward some trivalent vertex is a source"
                .into(),
        ));
    }

    let core_adj: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|v| {
            if g.is_leaf(v) {
                vec![]
            } else {
                g.incidences(v).into_iter().filter(|(e, _)| !g.is_leaf_edge(*e)).collect()
            }
        })
        .collect();

    let bridges = find_bridges(&core_adj, m);
    let root = (0..n)
        .filter(|&v| !g.is_leaf(v))
        .find(|&v| core_adj[v].iter().any(|&(e, _)| !bridges[e]))
        .expect("β₁ >= 1 puts some trivalent vertex on a cycle");

    let mut dir: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut visited = vec![false; n];
    // Iterative DFS; each frame keeps its position in the adjacency list.
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    visited[root] = true;
    while let Some(frame) = stack.last_mut() {
        let (u, pos) = *frame;
        if pos == core_adj[u].len() {
            stack.pop();
            continue;
        }
        frame.1 += 1;
        let (e, w) = core_adj[u][pos];
        if dir[e].is_some() {
            continue;
        }
        dir[e] = Some((u, w));
        if !visited[w] {
            visited[w] = true;
            stack.push((w, 0));
        }
    }
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        if g.is_leaf(b) {
            dir[e] = Some((a, b));
        } else if g.is_leaf(a) {
            dir[e] = Some((b, a));
        }
    }
    let o = EdgeOrientation {
        directions: dir.into_iter().map(|d| d.expect("every edge oriented")).collect(),
    };
    debug_assert!(check_orientation(g, &o).is_ok());
    Ok(o)
}

/// Orients every connected component separately with [`orient_edges`].
pub fn orient_each_component(g: &CloverGraph) -> Result<EdgeOrientation> {
    let mut directions = vec![(0, 0); g.edges.len()];
    for (c, vs) in g.components().iter().enumerate() {
        let local = |v: usize| vs.binary_search(&v).expect("vertex in component");
        let edge_ids: Vec<usize> = (0..g.edges.len()).filter(|&e| vs.binary_search(&g.edges[e].0).is_ok()).collect();
        let sub = CloverGraph {
            vertices: vs.iter().map(|&v| g.vertices[v]).collect(),
            edges: edge_ids.iter().map(|&e| (local(g.edges[e].0), local(g.edges[e].1))).collect(),
        };
        let o = orient_edges(&sub).map_err(|err| match err {
            CloverError::Infeasible(why) => CloverError::Infeasible(format!("component {c}: {why}")),
            other => other,
        })?;
        for (i, &e) in edge_ids.iter().enumerate() {
            let (a, b) = o.directions[i];
            directions[e] = (vs[a], vs[b]);
        }
    }
    Ok(EdgeOrientation { directions })
}

/// Bridge flags for the core multigraph (loops are never bridges).
fn find_bridges(adj: &[Vec<(usize, usize)>], m: usize) -> Vec<bool> {
    let n = adj.len();
    let mut bridge = vec![false; m];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    for s in 0..n {
        if disc[s] != usize::MAX || adj[s].is_empty() {
            continue;
        }
        // (vertex, edge used to enter, adjacency position)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(s, None, 0)];
        disc[s] = time;
        low[s] = time;
        time += 1;
        while let Some(&mut (u, via, ref mut pos)) = stack.last_mut() {
            if *pos < adj[u].len() {
                let (e, w) = adj[u][*pos];
                *pos += 1;
                if Some(e) == via || w == u {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        bridge[e] = true;
                    }
                }
            }
        }
    }
    bridge
}

/// Verifies the two orientation conditions: no trivalent source or sink,
/// and every leaf edge directed toward its leaf.
pub fn check_orientation(g: &CloverGraph, o: &EdgeOrientation) -> Result<()> {
    let bad = |s: String| Err(CloverError::InvalidOrientation(s));
    if o.directions.len() != g.edges.len() {
        return bad(format!("{} directions for {} edges", o.directions.len(), g.edges.len()));
    }
    let n = g.vertices.len();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for (e, (&(a, b), &(tail, head))) in g.edges.iter().zip(&o.directions).enumerate() {
        if !((tail, head) == (a, b) || (tail, head) == (b, a)) {
            return bad(format!("direction ({tail}, {head}) does not match edge {e} = ({a}, {b})"));
        }
        if g.is_leaf(tail) {
            return bad(format!("leaf edge {e} points away from leaf {tail}"));
        }
        outdeg[tail] += 1;
        indeg[head] += 1;
    }
    for v in (0..n).filter(|&v| !g.is_leaf(v)) {
        if indeg[v] == 0 {
            return bad(format!("trivalent vertex {v} is a source"));
        }
        if outdeg[v] == 0 {
            return bad(format!("trivalent vertex {v} is a sink"));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeEnd {
    Tail,
    Head,
}

/// `L′` collects the tails, `L″` the heads (leaf components included).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    #[serde(rename = "L'")]
    Prime,
    #[serde(rename = "L''")]
    DoublePrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkComponent {
    pub edge: usize,
    pub end: EdgeEnd,
    /// Vertex at this end of the edge.
    pub vertex: usize,
    pub part: Part,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkPartition {
    pub components: Vec<LinkComponent>,
}

impl LinkPartition {
    pub fn part_size(&self, part: Part) -> usize {
        self.components.iter().filter(|c| c.part == part).count()
    }

    /// Parts of the components meeting vertex `v`.
    pub fn parts_at(&self, v: usize) -> Vec<Part> {
        self.components.iter().filter(|c| c.vertex == v).map(|c| c.part).collect()
    }
}

impl fmt::Display for LinkPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} components: |L'| = {}, |L''| = {}",
            self.components.len(),
            self.part_size(Part::Prime),
            self.part_size(Part::DoublePrime)
        )
    }
}

/// Assigns each edge's tail component to `L′` and head component to `L″`.
/// At every trivalent vertex the three components met are then split
/// between both parts.
pub fn split_link(g: &CloverGraph, o: &EdgeOrientation) -> Result<LinkPartition> {
    check_orientation(g, o)?;
    let mut components = Vec::with_capacity(2 * g.edges.len());
    for (e, &(tail, head)) in o.directions.iter().enumerate() {
        components.push(LinkComponent { edge: e, end: EdgeEnd::Tail, vertex: tail, part: Part::Prime });
        components.push(LinkComponent { edge: e, end: EdgeEnd::Head, vertex: head, part: Part::DoublePrime });
    }
    let partition = LinkPartition { components };
    for v in (0..g.vertices.len()).filter(|&v| !g.is_leaf(v)) {
        let parts = partition.parts_at(v);
        debug_assert_eq!(parts.len(), 3);
        if parts.iter().all(|&p| p == parts[0]) {
            return Err(CloverError::InvalidOrientation(format!(
                "all components at vertex {v} fall in one part"
            )));
        }
    }
    Ok(partition)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirbyReduction {
    pub leaves: usize,
    pub components_before: usize,
    pub components_after: usize,
}

/// Component count of the surgery link before and after the Kirby move at
/// every leaf: four components near a non-fork leaf become two.
pub fn leaf_kirby_reduce(g: &CloverGraph) -> Result<KirbyReduction> {
    let class = classify(g);
    if let Some(&vertex) = class.forks.first() {
        return Err(CloverError::Fork { vertex });
    }
    if !class.in_c1 {
        let why = if class.all_leaves_simple {
            "some component has no loop"
        } else {
            "some leaf is not simple"
        };
        return Err(CloverError::NotInClass(why.into()));
    }
    let e = g.edges.len();
    let leaves = g.leaf_count();
    Ok(KirbyReduction {
        leaves,
        components_before: 2 * e,
        components_after: 2 * e - 2 * leaves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_with_leaf_class() {
        let g = CloverGraph::loop_with_leaf();
        let c = classify(&g);
        assert_eq!(c.loop_counts(), vec![1]);
        assert!(c.in_c1 && c.in_c1nf && !c.in_c2 && !c.in_civ);
        assert_eq!(c.fork_count(), 0);
    }

    #[test]
    fn y_graph_class() {
        let c = classify(&CloverGraph::y_graph());
        assert_eq!(c.loop_counts(), vec![0]);
        assert!(!c.in_c1);
        assert_eq!(c.forks, vec![0]);
    }

    #[test]
    fn wheel_class() {
        let c = classify(&CloverGraph::wheel(2));
        assert_eq!(c.loop_counts(), vec![1]);
        assert!(c.in_c1 && !c.in_civ && c.in_c1nf);
        assert_eq!(c.fork_count(), 0);
    }

    #[test]
    fn theta_with_tail_has_internal_vertex() {
        // Theta graph with one edge subdivided and a leg hung there.
        let g = CloverGraph::new(
            vec![VertexKind::Trivalent, VertexKind::Trivalent, VertexKind::Trivalent, VertexKind::leaf()],
            vec![(0, 1), (0, 1), (0, 2), (2, 1), (2, 3)],
        )
        .unwrap();
        let c = classify(&g);
        assert_eq!(c.loop_counts(), vec![2]);
        assert!(c.in_c2 && c.in_civ);
        assert_eq!(c.components[0].internal_vertices, vec![0, 1]);
    }

    #[test]
    fn non_simple_leaf_leaves_the_class() {
        let g = CloverGraph::new(
            vec![VertexKind::Trivalent, VertexKind::Leaf { simple: false }],
            vec![(0, 0), (0, 1)],
        )
        .unwrap();
        let c = classify(&g);
        assert!(!c.in_c1 && !c.in_c1nf);
        assert!(matches!(leaf_kirby_reduce(&g), Err(CloverError::NotInClass(_))));
    }

    #[test]
    fn malformed_inputs() {
        assert!(CloverGraph::new(vec![VertexKind::Trivalent], vec![(0, 0)]).is_err());
        assert!(CloverGraph::new(vec![VertexKind::leaf()], vec![(0, 0)]).is_err());
        assert!(CloverGraph::new(vec![VertexKind::leaf(), VertexKind::leaf()], vec![(0, 2)]).is_err());
        assert!(CloverGraph::new(vec![], vec![]).is_err());
    }

    #[test]
    fn orient_loop_with_leaf() {
        let g = CloverGraph::loop_with_leaf();
        let o = orient_edges(&g).unwrap();
        assert_eq!(o.directions, vec![(0, 0), (0, 1)]);
        check_orientation(&g, &o).unwrap();
    }

    #[test]
    fn orient_y_graph_is_infeasible() {
        assert!(matches!(orient_edges(&CloverGraph::y_graph()), Err(CloverError::Infeasible(_))));
    }

    #[test]
    fn orient_wheel() {
        let g = CloverGraph::wheel(2);
        let o = orient_edges(&g).unwrap();
        check_orientation(&g, &o).unwrap();
        // Circle coherent, legs outward.
        assert_eq!(o.directions, vec![(0, 1), (1, 0), (0, 2), (1, 3)]);
    }

    // Brute force over all 2^4 orientations of the two-legged wheel.
    #[test]
    fn wheel_brute_force_agrees() {
        let g = CloverGraph::wheel(2);
        let valid = (0..16u32)
            .filter(|mask| {
                let dirs = g
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(e, &(a, b))| if mask >> e & 1 == 0 { (a, b) } else { (b, a) })
                    .collect();
                check_orientation(&g, &EdgeOrientation { directions: dirs }).is_ok()
            })
            .count();
        assert_eq!(valid, 2);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let mut vertices = CloverGraph::wheel(1).vertices().to_vec();
        vertices.extend(CloverGraph::wheel(1).vertices());
        let g = CloverGraph::new(vertices, vec![(0, 0), (0, 1), (2, 2), (2, 3)]).unwrap();
        assert_eq!(orient_edges(&g), Err(CloverError::Disconnected(2)));
        let o = orient_each_component(&g).unwrap();
        check_orientation(&g, &o).unwrap();
        assert_eq!(o.directions, vec![(0, 0), (0, 1), (2, 2), (2, 3)]);
        assert_eq!(classify(&g).loop_counts(), vec![1, 1]);
    }

    #[test]
    fn bridge_between_two_cycles() {
        // Two loops joined by a bridge: 0 -loop, 0-1 bridge, 1 -loop.
        let g = CloverGraph::new(vec![VertexKind::Trivalent; 2], vec![(0, 0), (0, 1), (1, 1)]).unwrap();
        let o = orient_edges(&g).unwrap();
        check_orientation(&g, &o).unwrap();
    }

    #[test]
    fn split_examples() {
        let g = CloverGraph::loop_with_leaf();
        let p = split_link(&g, &orient_edges(&g).unwrap()).unwrap();
        assert_eq!(p.components.len(), 4);
        assert_eq!((p.part_size(Part::Prime), p.part_size(Part::DoublePrime)), (2, 2));
        let mut at0 = p.parts_at(0);
        at0.sort_by_key(|p| *p == Part::DoublePrime);
        assert_eq!(at0, vec![Part::Prime, Part::Prime, Part::DoublePrime]);

        let g = CloverGraph::wheel(2);
        let p = split_link(&g, &orient_edges(&g).unwrap()).unwrap();
        assert_eq!((p.part_size(Part::Prime), p.part_size(Part::DoublePrime)), (4, 4));
    }

    #[test]
    fn split_rejects_bad_orientation() {
        let g = CloverGraph::wheel(2);
        let o = EdgeOrientation { directions: vec![(0, 1), (0, 1), (0, 2), (1, 3)] };
        assert!(matches!(split_link(&g, &o), Err(CloverError::InvalidOrientation(_))));
        let o = EdgeOrientation { directions: vec![(0, 1), (1, 0), (2, 0), (1, 3)] };
        assert!(matches!(split_link(&g, &o), Err(CloverError::InvalidOrientation(_))));
    }

    #[test]
    fn kirby_counts() {
        let r = leaf_kirby_reduce(&CloverGraph::wheel(2)).unwrap();
        assert_eq!((r.components_before, r.components_after), (8, 4));
        let r = leaf_kirby_reduce(&CloverGraph::wheel(5)).unwrap();
        assert_eq!((r.components_before, r.components_after), (20, 10));
        let r = leaf_kirby_reduce(&CloverGraph::loop_with_leaf()).unwrap();
        assert_eq!((r.components_before, r.components_after), (4, 2));
        assert_eq!(leaf_kirby_reduce(&CloverGraph::y_graph()), Err(CloverError::Fork { vertex: 0 }));
    }

    #[test]
    fn json_schema() {
        let g: CloverGraph = serde_json::from_str(
            r#"{"vertices":[{"kind":"trivalent"},{"kind":"leaf"}],"edges":[[0,0],[0,1]]}"#,
        )
        .unwrap();
        assert_eq!(g, CloverGraph::loop_with_leaf());
        let bad: std::result::Result<CloverGraph, _> =
            serde_json::from_str(r#"{"vertices":[{"kind":"trivalent"}],"edges":[[0,0]]}"#);
        assert!(bad.is_err());
    }
}
