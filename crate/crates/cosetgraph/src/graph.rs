use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

use permgroup::action::Action;
use permgroup::{ActionError, GroupError, Perm, PermGroup};

/// Default cap on the number of vertices (cosets of H).
pub const VERTEX_BOUND: u64 = 100_000;
/// Default cap on the number of edges.
pub const EDGE_BOUND: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("H is not a subgroup of G")]
    HNotSubgroup,
    #[error("K is not a subgroup of G")]
    KNotSubgroup,
    #[error("|K : H∩K| = {0}, expected 2")]
    IndexTwoFailed(BigUint),
    #[error("edge count {count} exceeds bound {bound}")]
    EdgeBoundExceeded { count: u64, bound: u64 },
    #[error("adjacency is not regular: vertex {vertex} has degree {got}, expected {expected}")]
    NotRegular { vertex: u32, got: usize, expected: usize },
    #[error("edge ({0}, {1}) is not present")]
    NoSuchEdge(u32, u32),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Other,
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::Complete(n) => write!(f, "complete({n})"),
            Shape::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Shape::Other => write!(f, "other"),
        }
    }
}

/// The graph on the right cosets of H in G whose edge set is the G-orbit
/// of the base edge {H, Hx} for a fixed x in K \ H. Vertices are coset
/// labels from the coset action; edges are stored as (min, max) pairs.
pub struct CosetGraph {
    group: PermGroup,
    h: PermGroup,
    k: PermGroup,
    vertex_action: Action,
    adjacency: Vec<Vec<u32>>,
    base_edge: (u32, u32),
    edges: Vec<(u32, u32)>,
    edge_index: HashMap<(u32, u32), u32>,
    valency: usize,
}

impl CosetGraph {
    /// Builds Cos(G, H, K). Checks H, K <= G and |K : H∩K| = 2; the coset
    /// index bound is `vertex_bound` and the edge orbit is capped by
    /// `edge_bound`.
    pub fn build(
        group: &PermGroup,
        h: &PermGroup,
        k: &PermGroup,
        vertex_bound: u64,
        edge_bound: u64,
    ) -> Result<CosetGraph, GraphError> {
        if !h.is_subgroup_of(group)? {
            return Err(GraphError::HNotSubgroup);
        }
        if !k.is_subgroup_of(group)? {
            return Err(GraphError::KNotSubgroup);
        }
        let vertex_action = Action::on_cosets(group, h, vertex_bound)?;
        let n = vertex_action.domain_size();

        // K-orbit of the base vertex must be {H, Hx}: exactly the index-2
        // condition |K : H∩K| = 2, and it hands us the base edge.
        let korb = vertex_action.orbit_in(k, 0);
        if korb.len() != 2 {
            let hk = vertex_action.stabilizer_in(k, 0);
            return Err(GraphError::IndexTwoFailed(k.order() / hk.order()));
        }
        let w = korb[1];
        let base_edge = (0u32.min(w), 0u32.max(w));

        // edge set: G-orbit of the base edge under the vertex action
        let gen_images = vertex_action.gen_images();
        let mut edges: Vec<(u32, u32)> = vec![base_edge];
        let mut edge_index: HashMap<(u32, u32), u32> = HashMap::new();
        edge_index.insert(base_edge, 0);
        let mut i = 0usize;
        while i < edges.len() {
            let (a, b) = edges[i];
            for g in gen_images {
                let (x, y) = (g.apply(a), g.apply(b));
                let e = (x.min(y), x.max(y));
                if !edge_index.contains_key(&e) {
                    if edges.len() as u64 >= edge_bound {
                        return Err(GraphError::EdgeBoundExceeded {
                            count: edges.len() as u64 + 1,
                            bound: edge_bound,
                        });
                    }
                    edge_index.insert(e, edges.len() as u32);
                    edges.push(e);
                }
            }
            i += 1;
        }

        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for row in adjacency.iter_mut() {
            row.sort_unstable();
        }
        let valency = adjacency[0].len();
        for (v, row) in adjacency.iter().enumerate() {
            if row.len() != valency {
                return Err(GraphError::NotRegular {
                    vertex: v as u32,
                    got: row.len(),
                    expected: valency,
                });
            }
        }

        // neighborhood identification: the H-orbit of the base edge's far
        // end is exactly the base vertex's neighborhood
        let mut horb = vertex_action.orbit_in(h, w);
        horb.sort_unstable();
        debug_assert_eq!(horb, adjacency[0], "H-orbit of Hx must be the neighborhood");

        Ok(CosetGraph {
            group: group.clone(),
            h: h.clone(),
            k: k.clone(),
            vertex_action,
            adjacency,
            base_edge,
            edges,
            edge_index,
            valency,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn h(&self) -> &PermGroup {
        &self.h
    }

    pub fn k(&self) -> &PermGroup {
        &self.k
    }

    pub fn vertex_action(&self) -> &Action {
        &self.vertex_action
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn base_vertex(&self) -> u32 {
        0
    }

    pub fn base_edge(&self) -> (u32, u32) {
        self.base_edge
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn valency(&self) -> usize {
        self.valency
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edge_index.contains_key(&(u.min(v), u.max(v)))
    }

    /// BFS connectivity from the base vertex, cross-checked against
    /// order(<H, K>) = order(G); the two are equivalent for coset graphs.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0u32];
        let mut count = 1usize;
        while let Some(v) = queue.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push(w);
                }
            }
        }
        let bfs_connected = count == n;
        let mut gens = self.h.gens().to_vec();
        gens.extend_from_slice(self.k.gens());
        let joined = PermGroup::new(self.group.degree(), gens).expect("same degree");
        let generates = joined.order() == self.group.order();
        assert_eq!(
            bfs_connected, generates,
            "BFS connectivity must agree with <H,K> = G"
        );
        bfs_connected
    }

    /// 2-coloring if the graph is bipartite: part sizes (a, b).
    pub fn bipartition(&self) -> Option<(usize, usize)> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for start in 0..n as u32 {
            if color[start as usize] != u8::MAX {
                continue;
            }
            color[start as usize] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[v as usize];
                        queue.push(w);
                    } else if color[w as usize] == color[v as usize] {
                        return None;
                    }
                }
            }
        }
        let a = color.iter().filter(|&&c| c == 0).count();
        Some((a, n - a))
    }

    pub fn classify_shape(&self) -> Shape {
        let n = self.vertex_count();
        if self.valency == n - 1 {
            return Shape::Complete(n);
        }
        if let Some((a, b)) = self.bipartition() {
            // complete bipartite iff every cross pair is an edge
            if self.edge_count() == a * b {
                return Shape::CompleteBipartite(a, b);
            }
        }
        Shape::Other
    }

    /// Stabilizer of a vertex in G, pulled back through the coset table.
    pub fn vertex_stabilizer(&self, v: u32) -> PermGroup {
        if v == 0 {
            return self.h.clone();
        }
        let rep = self
            .vertex_action
            .coset_table()
            .expect("vertex action is a coset action")
            .rep(v);
        self.h.conjugate_by(rep)
    }

    /// Setwise stabilizer in G of an edge {u, v}, computed in the vertex
    /// action: the pointwise stabilizer extended by a swapping element
    /// when one exists. For the base edge its order must equal |K|.
    pub fn edge_stabilizer(&self, u: u32, v: u32) -> Result<PermGroup, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        Ok(self.pair_stabilizer(u, v))
    }

    /// Setwise stabilizer of an arbitrary vertex pair (edge or not).
    pub fn pair_stabilizer(&self, u: u32, v: u32) -> PermGroup {
        let su = self.vertex_stabilizer(u);
        let (orbit, trans, guv) = self.orbit_transversal_stabilizer(&su, v);
        // t maps u to v
        let table = self
            .vertex_action
            .coset_table()
            .expect("vertex action is a coset action");
        let t = table.rep(u).inverse().compose(table.rep(v));
        debug_assert_eq!(self.vertex_action.apply(&t, u), v);
        let target = self.vertex_action.apply(&t.inverse(), u);
        match orbit.iter().position(|&x| x == target) {
            Some(i) => {
                let swap = trans[i].compose(&t);
                debug_assert_eq!(self.vertex_action.apply(&swap, u), v);
                debug_assert_eq!(self.vertex_action.apply(&swap, v), u);
                let mut gens = guv.gens().to_vec();
                gens.push(swap);
                PermGroup::new(self.group.degree(), gens).expect("same degree")
            }
            None => guv,
        }
    }

    /// Orbit of a domain point under `sub`, with transversal and the
    /// point stabilizer from Schreier generators.
    pub(crate) fn orbit_transversal_stabilizer(
        &self,
        sub: &PermGroup,
        pt: u32,
    ) -> (Vec<u32>, Vec<Perm>, PermGroup) {
        let n = self.group.degree();
        let act = &self.vertex_action;
        let mut orbit = vec![pt];
        let mut pos: HashMap<u32, usize> = HashMap::new();
        pos.insert(pt, 0);
        let mut trans: Vec<Perm> = vec![Perm::identity(n)];
        let mut schreier: Vec<Perm> = Vec::new();
        let mut i = 0;
        while i < orbit.len() {
            for g in sub.gens() {
                let q = act.apply(g, orbit[i]);
                match pos.get(&q) {
                    None => {
                        pos.insert(q, orbit.len());
                        let t = trans[i].compose(g);
                        orbit.push(q);
                        trans.push(t);
                    }
                    Some(&j) => {
                        let u = trans[i].compose(g).compose(&trans[j].inverse());
                        if !u.is_identity() && !schreier.contains(&u) {
                            schreier.push(u);
                        }
                    }
                }
            }
            i += 1;
        }
        let stab = PermGroup::new(n, schreier).expect("same degree").shrink_generators();
        debug_assert_eq!(stab.order() * BigUint::from(orbit.len()), sub.order());
        (orbit, trans, stab)
    }

    /// Pointwise stabilizer of a vertex inside `sub` (subgroup of G).
    pub fn stabilizer_in(&self, sub: &PermGroup, v: u32) -> PermGroup {
        self.orbit_transversal_stabilizer(sub, v).2
    }

    /// The largest s <= s_max such that, level by level, the pointwise
    /// stabilizer of a fixed base path is transitive on the forward
    /// extensions. With vertex transitivity this is exactly
    /// "s-arc-transitive but not (s+1)-arc-transitive" when s < s_max.
    pub fn max_arc_transitivity(&self, s_max: usize) -> usize {
        let mut s = 0;
        let mut stab = self.h.clone();
        let mut path: Vec<u32> = vec![0];
        loop {
            let vk = *path.last().unwrap();
            let prev = if path.len() >= 2 {
                Some(path[path.len() - 2])
            } else {
                None
            };
            let nbrs: Vec<u32> = self
                .neighbors(vk)
                .iter()
                .copied()
                .filter(|&w| Some(w) != prev)
                .collect();
            if nbrs.is_empty() {
                return s;
            }
            let orbit = self.vertex_action.orbit_in(&stab, nbrs[0]);
            if orbit.len() != nbrs.len() {
                return s;
            }
            s += 1;
            if s >= s_max {
                return s;
            }
            let next = nbrs[0];
            stab = self.stabilizer_in(&stab, next);
            path.push(next);
        }
    }

    /// The action of G on the edge set (raw images; edge i is edges[i]).
    pub fn edge_action(&self) -> Action {
        let images: Vec<Perm> = self
            .vertex_action
            .gen_images()
            .iter()
            .map(|g| self.edge_image_of(g))
            .collect();
        Action::from_images(&self.group, self.edges.len(), images)
    }

    fn edge_image_of(&self, vertex_image: &Perm) -> Perm {
        let imgs: Vec<u32> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (vertex_image.apply(a), vertex_image.apply(b));
                self.edge_index[&(x.min(y), x.max(y))]
            })
            .collect();
        Perm::from_images(imgs).expect("edges permuted bijectively")
    }

    /// Edge-primitivity: the edge action is primitive. The stabilizer of
    /// the base edge is K, so K's edge images seed the block search.
    pub fn is_edge_primitive(&self) -> Result<bool, GraphError> {
        let base_id = self.edge_index[&self.base_edge];
        let act = self.edge_action();
        let k_images: Vec<Perm> = self
            .k
            .gens()
            .iter()
            .map(|g| {
                let vi = self.vertex_action.image_of_element(g);
                self.edge_image_of(&vi)
            })
            .collect();
        Ok(act.is_primitive_given_stabilizer(base_id, &k_images)?)
    }

    /// Adjacency-list export, 1-based: `vertex: neighbors...`.
    pub fn export_adjacency(&self) -> String {
        let mut out = String::new();
        for (v, row) in self.adjacency.iter().enumerate() {
            let _ = write!(out, "{}:", v + 1);
            for &w in row {
                let _ = write!(out, " {}", w + 1);
            }
            out.push('\n');
        }
        out
    }

    /// Edge-list export, 1-based, one `u v` pair per line.
    pub fn export_edge_list(&self) -> String {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        let mut out = String::new();
        for (a, b) in sorted {
            let _ = writeln!(out, "{} {}", a + 1, b + 1);
        }
        out
    }
}
