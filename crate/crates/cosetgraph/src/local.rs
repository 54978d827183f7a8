use num_bigint::BigUint;


use permgroup::action::Action;
use permgroup::{biguint_prime_factors, GroupError, Perm, PermGroup};

use crate::graph::CosetGraph;

/// Outcome of one order-bounded computation: either the value, or a
/// skip marker naming the bound that stopped it. Never a guess.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bounded<T> {
    Value(T),
    Skipped(String),
}

impl<T> Bounded<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Bounded::Value(v) => Some(v),
            Bounded::Skipped(_) => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Bounded::Skipped(_))
    }
}

fn bounded<T>(r: Result<T, GroupError>) -> Result<Bounded<T>, GroupError> {
    match r {
        Ok(v) => Ok(Bounded::Value(v)),
        Err(GroupError::EnumerationBoundExceeded { order, bound }) => {
            Ok(Bounded::Skipped(format!("order {order} exceeds bound {bound}")))
        }
        Err(e) => Err(e),
    }
}

/// Per-prime report for the neighborhood-order primes r | d: the orders
/// of O_r of the vertex kernel, the arc stabilizer and the vertex
/// stabilizer, and whether the triviality/elementary-abelian pattern
/// required of a 2-arc-transitive edge-primitive graph holds.
#[derive(Debug, Clone)]
pub struct PrimeCoreReport {
    pub r: u64,
    pub core_kernel_order: Bounded<BigUint>,
    pub core_arc_order: Bounded<BigUint>,
    pub core_vertex_order: Bounded<BigUint>,
    /// O_r(G_v^[1]) = 1 and O_r(G_uv) = 1
    pub kernels_trivial: Bounded<bool>,
    /// O_r(G_v) = 1, or d = r^e with O_r(G_v) elementary abelian of order d
    pub vertex_core_shape_ok: Bounded<bool>,
}

/// Stabilizer data local to one edge {u, v} with u the base vertex.
#[derive(Debug)]
pub struct LocalStructure {
    pub d: usize,
    pub vertex_stab_order: BigUint,
    pub local_group_order: BigUint,
    pub local_point_stab_order: BigUint,
    pub kernel_order: BigUint,
    pub arc_kernel_order: BigUint,
    pub arc_stab_order: BigUint,
    pub edge_stab_order: BigUint,
    pub edge_over_arc_index: BigUint,
    pub vertex_stab_soluble: bool,
    pub local_group_soluble: bool,
    pub edge_stab_soluble: bool,
    pub local_point_stab_soluble: bool,
    pub p_core_reports: Vec<PrimeCoreReport>,
    pub vertex_kernel: PermGroup,
    pub arc_stab: PermGroup,
    pub edge_stab: PermGroup,
}

impl LocalStructure {
    /// Solubility transfer along the local action: the edge stabilizer is
    /// soluble iff the local point stabilizer is, and the vertex
    /// stabilizer is soluble iff the local group is.
    pub fn solubility_biconditionals_hold(&self) -> bool {
        self.edge_stab_soluble == self.local_point_stab_soluble
            && self.vertex_stab_soluble == self.local_group_soluble
    }

    /// All prime-core patterns verified (skipped entries do not count as
    /// verified; the caller decides how to report them).
    pub fn prime_cores_hold(&self) -> Bounded<bool> {
        let mut all = true;
        for rep in &self.p_core_reports {
            match (&rep.kernels_trivial, &rep.vertex_core_shape_ok) {
                (Bounded::Value(a), Bounded::Value(b)) => all &= a & b,
                _ => return Bounded::Skipped("prime-core fields skipped".into()),
            }
        }
        Bounded::Value(all)
    }
}

/// Computes the local structure at the base edge (u, v) = (0, w).
pub fn local_structure(graph: &CosetGraph, enum_bound: u64) -> Result<LocalStructure, GroupError> {
    let h = graph.h().clone();
    let (u, v) = graph.base_edge();
    debug_assert_eq!(u, graph.base_vertex());
    let nbrs: Vec<u32> = graph.neighbors(u).to_vec();
    let d = nbrs.len();

    // local action of the vertex stabilizer on the neighborhood
    let local = local_action(graph, &h, &nbrs);
    let local_group = local.induced_group();
    let local_group_order = local_group.order();
    let kernel = neighborhood_kernel(graph, &h, &nbrs);
    let kernel_order = kernel.order();
    assert_eq!(
        h.order(),
        kernel_order.clone() * local_group_order.clone(),
        "vertex stabilizer must be kernel-by-local-group"
    );

    // arc stabilizer G_uv and the independent edge stabilizer
    let arc_stab = graph.stabilizer_in(&h, v);
    let edge_stab = graph.pair_stabilizer(u, v);
    let edge_over_arc_index = edge_stab.order() / arc_stab.order();

    // arc kernel: fixes both closed neighborhoods pointwise
    let mut both: Vec<u32> = nbrs.clone();
    both.extend_from_slice(graph.neighbors(v));
    both.sort_unstable();
    both.dedup();
    let mut arc_kernel = arc_stab.clone();
    for w in both {
        if arc_kernel.is_trivial() {
            break;
        }
        arc_kernel = graph.stabilizer_in(&arc_kernel, w);
    }

    // image of the arc stabilizer inside the local action
    let local_point = local_action(graph, &arc_stab, &nbrs).induced_group();
    let local_point_stab_order = local_point.order();
    debug_assert_eq!(
        local_point_stab_order.clone() * BigUint::from(d),
        local_group_order.clone(),
        "local group must be transitive on the neighborhood"
    );

    // prime-core reports for r | d
    let mut reports = Vec::new();
    for r in biguint_prime_factors(&BigUint::from(d)) {
        let core_kernel = bounded(kernel.p_core(r, enum_bound))?;
        let core_arc = bounded(arc_stab.p_core(r, enum_bound))?;
        let core_vertex = bounded(h.p_core(r, enum_bound))?;
        let kernels_trivial = match (&core_kernel, &core_arc) {
            (Bounded::Value(a), Bounded::Value(b)) => {
                Bounded::Value(a.is_trivial() && b.is_trivial())
            }
            _ => Bounded::Skipped("kernel cores skipped".into()),
        };
        let vertex_core_shape_ok = match &core_vertex {
            Bounded::Value(core) => Bounded::Value(vertex_core_shape(core, r, d)),
            Bounded::Skipped(s) => Bounded::Skipped(s.clone()),
        };
        reports.push(PrimeCoreReport {
            r,
            core_kernel_order: map_order(&core_kernel),
            core_arc_order: map_order(&core_arc),
            core_vertex_order: map_order(&core_vertex),
            kernels_trivial,
            vertex_core_shape_ok,
        });
    }

    Ok(LocalStructure {
        d,
        vertex_stab_order: h.order(),
        local_group_order,
        local_point_stab_order,
        kernel_order,
        arc_kernel_order: arc_kernel.order(),
        arc_stab_order: arc_stab.order(),
        edge_stab_order: edge_stab.order(),
        edge_over_arc_index,
        vertex_stab_soluble: h.is_soluble(),
        local_group_soluble: local_group.is_soluble(),
        edge_stab_soluble: edge_stab.is_soluble(),
        local_point_stab_soluble: local_point.is_soluble(),
        p_core_reports: reports,
        vertex_kernel: kernel,
        arc_stab,
        edge_stab,
    })
}

fn map_order(b: &Bounded<PermGroup>) -> Bounded<BigUint> {
    match b {
        Bounded::Value(g) => Bounded::Value(g.order()),
        Bounded::Skipped(s) => Bounded::Skipped(s.clone()),
    }
}

/// O_r(G_v) is trivial, or d = r^e and O_r(G_v) is elementary abelian of
/// order exactly d.
fn vertex_core_shape(core: &PermGroup, r: u64, d: usize) -> bool {
    if core.is_trivial() {
        return true;
    }
    let mut dd = d as u64;
    while dd % r == 0 {
        dd /= r;
    }
    if dd != 1 {
        return false; // d not a power of r, yet O_r nontrivial
    }
    if core.order() != BigUint::from(d) {
        return false;
    }
    // elementary abelian: generators of order r, pairwise commuting
    core.gens().iter().all(|g| g.order() == r as u128)
        && core
            .gens()
            .iter()
            .enumerate()
            .all(|(i, a)| core.gens()[i + 1..].iter().all(|b| a.commutator(b).is_identity()))
}

/// The action of `sub` (a subgroup of G fixing the base vertex) on the
/// base vertex's neighborhood, relabeled to 0..d-1 in sorted order.
pub fn local_action(graph: &CosetGraph, sub: &PermGroup, nbrs: &[u32]) -> Action {
    let index = |x: u32| nbrs.iter().position(|&y| y == x).expect("neighbor") as u32;
    let images: Vec<Perm> = sub
        .gens()
        .iter()
        .map(|g| {
            let v: Vec<u32> = nbrs
                .iter()
                .map(|&w| index(graph.vertex_action().apply(g, w)))
                .collect();
            Perm::from_images(v).expect("stabilizer permutes the neighborhood")
        })
        .collect();
    Action::from_images(sub, nbrs.len(), images)
}

/// Kernel of the vertex stabilizer acting on the neighborhood.
fn neighborhood_kernel(graph: &CosetGraph, h: &PermGroup, nbrs: &[u32]) -> PermGroup {
    let mut s = h.clone();
    for &w in nbrs {
        if s.is_trivial() {
            break;
        }
        s = graph.stabilizer_in(&s, w);
    }
    s
}

/// Fitting-subgroup check at the base edge. Preconditions: the arc
/// kernel is trivial and d - 1 is a prime power p^k; then Fit(G_uv) must
/// equal O_p(G_uv) and Fit(G_{u,v}) must contain O_p(G_{u,v}) with index
/// at most 2.
#[derive(Debug)]
pub struct FittingReport {
    pub p: u64,
    pub fit_arc_order: Bounded<BigUint>,
    pub core_arc_order: Bounded<BigUint>,
    pub fit_edge_order: Bounded<BigUint>,
    pub core_edge_order: Bounded<BigUint>,
    pub arc_fitting_is_p_core: Bounded<bool>,
    pub edge_index_at_most_2: Bounded<bool>,
}

#[derive(Debug)]
pub enum FittingOutcome {
    /// d-1 is not a prime power or the arc kernel is nontrivial: the
    /// hypothesis does not apply to this edge.
    NotApplicable(String),
    Report(FittingReport),
}

pub fn fitting_check(
    local: &LocalStructure,
    enum_bound: u64,
) -> Result<FittingOutcome, GroupError> {
    use num_traits::One;
    if !local.arc_kernel_order.is_one() {
        return Ok(FittingOutcome::NotApplicable(format!(
            "arc kernel has order {}",
            local.arc_kernel_order
        )));
    }
    let dm1 = (local.d - 1) as u64;
    let p = match prime_power_base(dm1) {
        Some(p) => p,
        None => {
            return Ok(FittingOutcome::NotApplicable(format!(
                "d-1 = {dm1} is not a prime power"
            )))
        }
    };
    let fit_arc = bounded(local.arc_stab.fitting_subgroup(enum_bound))?;
    let core_arc = bounded(local.arc_stab.p_core(p, enum_bound))?;
    let fit_edge = bounded(local.edge_stab.fitting_subgroup(enum_bound))?;
    let core_edge = bounded(local.edge_stab.p_core(p, enum_bound))?;
    let arc_ok = match (&fit_arc, &core_arc) {
        (Bounded::Value(f), Bounded::Value(c)) => Bounded::Value(f.order() == c.order()),
        _ => Bounded::Skipped("orders exceed bound".into()),
    };
    let edge_ok = match (&fit_edge, &core_edge) {
        (Bounded::Value(f), Bounded::Value(c)) => {
            Bounded::Value(f.order() <= c.order() * BigUint::from(2u32))
        }
        _ => Bounded::Skipped("orders exceed bound".into()),
    };
    Ok(FittingOutcome::Report(FittingReport {
        p,
        fit_arc_order: map_order(&fit_arc),
        core_arc_order: map_order(&core_arc),
        fit_edge_order: map_order(&fit_edge),
        core_edge_order: map_order(&core_edge),
        arc_fitting_is_p_core: arc_ok,
        edge_index_at_most_2: edge_ok,
    }))
}

fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut rest = n;
            while rest % p == 0 {
                rest /= p;
            }
            return if rest == 1 { Some(p) } else { None };
        }
        p += 1;
    }
    Some(n)
}

/// The 2-transitivity comparison behind the neighborhood identification:
/// H on the cosets of H∩K, and the local action on the neighborhood,
/// must agree.
pub fn h_is_2_transitive_on_cosets(
    graph: &CosetGraph,
    coset_bound: u64,
) -> Result<bool, permgroup::ActionError> {
    let h = graph.h();
    let hk = graph.stabilizer_in(graph.k(), graph.base_vertex());
    let act = Action::on_cosets(h, &hk, coset_bound)?;
    Ok(act.is_2_transitive())
}
