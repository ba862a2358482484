//! The two kernelization rules and their algorithm wrappers.
//!
//! Rule 0 (bounded degree): keep the vertices within
//! `(1 + log_{2Δ/(2Δ-1)} k) * D` of the vertices lying on induced family
//! members. Rule 1 (`K_t`-free hosts, family containing `K_{1,s}`): the
//! center set also includes every vertex of degree above the Ramsey cap
//! `d = R(s, t-1) - 1`, and the radius is `(2 + log_{2d/(2d-1)} k) * D`.
//!
//! These radii are measured from the rule's center set. The size bounds are
//! proved with a larger radius measured from the endpoints of the first
//! deletion layer, which is one more `D` away; the two are not the same
//! quantity.
//!
//! The wrappers then compare the kept vertex count against the size bound and
//! fall back to a fixed no-instance when it is exceeded.

use serde::{Deserialize, Serialize};

use crate::bounds::{exponent_p, keep_radius, size_bound, threshold_value, SizeBound};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{builtin_pattern, is_family_free, occupied_vertices, PatternFamily};
use crate::ramsey::degree_cap;
use crate::solver::ProblemInstance;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    /// Δ in bounded-degree mode, the Ramsey cap `d` in Rule 1 mode.
    pub delta: usize,
    pub diameter: usize,
    pub budget: usize,
    pub exponent_p: f64,
}

impl KernelParams {
    pub fn new(delta: usize, diameter: usize, budget: usize) -> Self {
        KernelParams { delta, diameter, budget, exponent_p: exponent_p(delta) }
    }

    fn check(&self) -> Result<()> {
        if self.budget == 0 {
            return invalid("threshold needs k >= 1");
        }
        if self.delta < 2 {
            return invalid(format!("degree parameter must be at least 2, got {}", self.delta));
        }
        if self.diameter == 0 {
            return invalid("diameter must be at least 1");
        }
        Ok(())
    }
}

/// A real keep-threshold and the integer radius it admits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Threshold {
    pub value: f64,
    pub radius: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleApplied {
    Rule0,
    Rule1,
    TrivialYes,
    TrivialNo,
}

/// Which restricted input class Rule 1 is run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HostClass {
    /// Family contains `K_{1,s}`, input is `K_t`-free.
    CliqueFree { t: usize },
    /// Family contains `K_t`, input has no induced `K_{1,s}`.
    StarFree { s: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelResult {
    pub instance: ProblemInstance,
    pub rule: RuleApplied,
    /// Input vertices absent from the output graph.
    pub removed: VertexSet,
    /// Center set the rule measured distances from.
    pub centers: VertexSet,
    pub threshold: Option<Threshold>,
    pub bound: Option<SizeBound>,
    pub params: Option<KernelParams>,
}

impl KernelResult {
    fn trivial_yes(inst: &ProblemInstance) -> Self {
        KernelResult {
            instance: ProblemInstance::new(Graph::new(), inst.budget),
            rule: RuleApplied::TrivialYes,
            removed: inst.graph.vertex_set(),
            centers: VertexSet::new(),
            threshold: None,
            bound: None,
            params: None,
        }
    }

    fn trivial_no(inst: &ProblemInstance, member: &Graph) -> Self {
        KernelResult {
            instance: ProblemInstance::new(member.clone(), 0),
            rule: RuleApplied::TrivialNo,
            removed: inst.graph.vertex_set(),
            centers: VertexSet::new(),
            threshold: None,
            bound: None,
            params: None,
        }
    }

    fn into_trivial_no(self, inst: &ProblemInstance, member: &Graph) -> Self {
        KernelResult {
            threshold: self.threshold,
            bound: self.bound,
            params: self.params,
            centers: self.centers,
            ..KernelResult::trivial_no(inst, member)
        }
    }
}

pub fn rule0_threshold(params: &KernelParams) -> Result<Threshold> {
    params.check()?;
    Ok(Threshold {
        value: threshold_value(params.delta, params.diameter, params.budget, 1),
        radius: keep_radius(params.delta, params.diameter, params.budget, 1),
    })
}

pub fn rule1_threshold(params: &KernelParams) -> Result<Threshold> {
    params.check()?;
    Ok(Threshold {
        value: threshold_value(params.delta, params.diameter, params.budget, 2),
        radius: keep_radius(params.delta, params.diameter, params.budget, 2),
    })
}

/// `ceil(2 Δ^(2D+1) k^(pD+1))`.
pub fn kernel_bound_rule0(params: &KernelParams) -> Result<SizeBound> {
    params.check()?;
    let exp = 2 * params.diameter as u32 + 1;
    Ok(size_bound(2, params.delta, exp, params.budget, params.diameter))
}

/// `ceil(8 d^(3D+1) k^(pD+1))`.
pub fn kernel_bound_rule1(params: &KernelParams) -> Result<SizeBound> {
    params.check()?;
    let exp = 3 * params.diameter as u32 + 1;
    Ok(size_bound(8, params.delta, exp, params.budget, params.diameter))
}

/// Vertices of degree at least `d + 1`.
pub fn high_degree_vertices(g: &Graph, d: usize) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) > d).collect()
}

fn keep_within(
    inst: &ProblemInstance,
    centers: VertexSet,
    rule: RuleApplied,
    params: KernelParams,
    threshold: Threshold,
    bound: SizeBound,
) -> Result<KernelResult> {
    let dist = inst.graph.bfs_distances(&centers)?;
    let keep: VertexSet =
        dist.iter().filter(|(_, d)| d.is_some_and(|d| d <= threshold.radius)).map(|(&v, _)| v).collect();
    let removed = inst.graph.vertices().filter(|v| !keep.contains(v)).collect();
    Ok(KernelResult {
        instance: ProblemInstance::new(inst.graph.induced_subgraph(&keep), inst.budget),
        rule,
        removed,
        centers,
        threshold: Some(threshold),
        bound: Some(bound),
        params: Some(params),
    })
}

/// Degree parameter used by Rule 0: the measured maximum degree, raised to 2
/// when smaller.
pub fn effective_delta(g: &Graph) -> usize {
    g.max_degree().max(2)
}

/// Rule 0: delete every vertex farther than the keep-threshold from the
/// vertices on induced members. A family-free input gives `trivial_yes`.
pub fn apply_rule0(inst: &ProblemInstance, fam: &PatternFamily) -> Result<KernelResult> {
    apply_rule0_with_delta(inst, fam, effective_delta(&inst.graph))
}

/// Rule 0 with an explicit degree parameter, which must be at least 2 and at
/// least the maximum degree of the input. Re-running on a kernel with the
/// parameter of the first run keeps every vertex.
pub fn apply_rule0_with_delta(inst: &ProblemInstance, fam: &PatternFamily, delta: usize) -> Result<KernelResult> {
    let measured = inst.graph.max_degree();
    if delta < measured {
        return invalid(format!("degree parameter {delta} is below the maximum degree {measured}"));
    }
    let centers = occupied_vertices(&inst.graph, fam);
    if centers.is_empty() {
        return Ok(KernelResult::trivial_yes(inst));
    }
    let params = KernelParams::new(delta, fam.max_diameter(), inst.budget);
    let threshold = rule0_threshold(&params)?;
    let bound = kernel_bound_rule0(&params)?;
    keep_within(inst, centers, RuleApplied::Rule0, params, threshold, bound)
}

/// Kernel for bounded-degree inputs.
pub fn kernelize_bounded_degree(inst: &ProblemInstance, fam: &PatternFamily) -> KernelResult {
    let smallest = &fam.members()[fam.smallest_member()];
    if is_family_free(&inst.graph, fam) {
        return KernelResult::trivial_yes(inst);
    }
    if inst.budget == 0 {
        return KernelResult::trivial_no(inst, smallest);
    }
    let reduced = apply_rule0(inst, fam).expect("k >= 1 and the family has members");
    let bound = reduced.bound.expect("rule 0 records its bound");
    if reduced.instance.graph.vertex_count() as u64 > bound.value {
        return reduced.into_trivial_no(inst, smallest);
    }
    reduced
}

/// As [`kernelize_bounded_degree`], after asserting the input respects a
/// caller-supplied degree cap. The cap does not influence the thresholds.
pub fn kernelize_bounded_degree_with_cap(
    inst: &ProblemInstance,
    fam: &PatternFamily,
    cap: usize,
) -> Result<KernelResult> {
    let measured = inst.graph.max_degree();
    if measured > cap {
        return invalid(format!("input has maximum degree {measured}, above the stated cap {cap}"));
    }
    Ok(kernelize_bounded_degree(inst, fam))
}

struct Rule1Setup {
    d: usize,
    trivial_no: Graph,
}

fn rule1_setup(g: &Graph, fam: &PatternFamily, host: HostClass) -> Result<Rule1Setup> {
    let (s, t, member) = match host {
        HostClass::CliqueFree { t } => {
            if t < 3 {
                return invalid(format!("clique bound t must be at least 3, got {t}"));
            }
            let Some(s) = fam.star_arity() else {
                return invalid("family contains no star K1,s with s >= 2");
            };
            if !g.is_clique_free(t)? {
                return invalid(format!("input graph contains K{t}"));
            }
            (s, t, fam.star_member(s).unwrap())
        }
        HostClass::StarFree { s } => {
            if s < 2 {
                return invalid(format!("star bound s must be at least 2, got {s}"));
            }
            let Some(t) = fam.clique_order() else {
                return invalid("family contains no clique Kt with t >= 3");
            };
            let star = PatternFamily::new(vec![builtin_pattern(&format!("K1,{s}"))?])?;
            if !is_family_free(g, &star) {
                return invalid(format!("input graph contains an induced K1,{s}"));
            }
            (s, t, fam.clique_member(t).unwrap())
        }
    };
    Ok(Rule1Setup { d: degree_cap(s, t)?.max(2), trivial_no: fam.members()[member].clone() })
}

fn rule1_with_setup(inst: &ProblemInstance, fam: &PatternFamily, setup: &Rule1Setup) -> Result<KernelResult> {
    let mut centers = occupied_vertices(&inst.graph, fam);
    if centers.is_empty() {
        return Ok(KernelResult::trivial_yes(inst));
    }
    centers.extend(high_degree_vertices(&inst.graph, setup.d));
    let params = KernelParams::new(setup.d, fam.max_diameter(), inst.budget);
    let threshold = rule1_threshold(&params)?;
    let bound = kernel_bound_rule1(&params)?;
    keep_within(inst, centers, RuleApplied::Rule1, params, threshold, bound)
}

/// Rule 1 on a `K_t`-free input.
pub fn apply_rule1(inst: &ProblemInstance, fam: &PatternFamily, t: usize) -> Result<KernelResult> {
    apply_rule1_on(inst, fam, HostClass::CliqueFree { t })
}

pub fn apply_rule1_on(inst: &ProblemInstance, fam: &PatternFamily, host: HostClass) -> Result<KernelResult> {
    let setup = rule1_setup(&inst.graph, fam, host)?;
    rule1_with_setup(inst, fam, &setup)
}

/// Kernel for `K_t`-free inputs when the family contains a star.
pub fn kernelize_ktfree(inst: &ProblemInstance, fam: &PatternFamily, t: usize) -> Result<KernelResult> {
    kernelize_restricted(inst, fam, HostClass::CliqueFree { t })
}

/// Kernel for inputs without an induced `K_{1,s}` when the family contains a
/// clique.
pub fn kernelize_starfree(inst: &ProblemInstance, fam: &PatternFamily, s: usize) -> Result<KernelResult> {
    kernelize_restricted(inst, fam, HostClass::StarFree { s })
}

pub fn kernelize_restricted(inst: &ProblemInstance, fam: &PatternFamily, host: HostClass) -> Result<KernelResult> {
    let setup = rule1_setup(&inst.graph, fam, host)?;
    if is_family_free(&inst.graph, fam) {
        return Ok(KernelResult::trivial_yes(inst));
    }
    if inst.budget == 0 {
        return Ok(KernelResult::trivial_no(inst, &setup.trivial_no));
    }
    let reduced = rule1_with_setup(inst, fam, &setup)?;
    let bound = reduced.bound.expect("rule 1 records its bound");
    if reduced.instance.graph.vertex_count() as u64 > bound.value {
        return Ok(reduced.into_trivial_no(inst, &setup.trivial_no));
    }
    Ok(reduced)
}

/// Vertex-count bound from breadth-first trees of branching at most `d`:
/// `|V_1| d^(c+1) + |N[V_2]| d^c`, where `V_2` are the centers of degree above
/// `d`, `V_1` the other centers and `c` the largest distance of any vertex
/// from the centers. Every vertex of degree above `d` must be a center.
pub fn tree_count_bound(g: &Graph, centers: &VertexSet, d: usize) -> Result<u128> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > d && !centers.contains(&v)) {
        return invalid(format!("vertex {v} has degree above {d} but is not a center"));
    }
    let dist = g.bfs_distances(centers)?;
    let mut c = 0;
    for d in dist.values() {
        match d {
            Some(d) => c = c.max(*d),
            None => return invalid("some vertex is unreachable from the centers"),
        }
    }
    let (high, low): (VertexSet, VertexSet) = centers.iter().partition(|&&v| g.degree(v) > d);
    let high_nbhd = g.closed_neighborhood(&high)?;
    let d = d as u128;
    Ok(low.len() as u128 * d.pow(c as u32 + 1) + high_nbhd.len() as u128 * d.pow(c as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{minimum_deletion_size, solve_bruteforce};

    fn fam(spec: &str) -> PatternFamily {
        PatternFamily::from_builtin_names(spec).unwrap()
    }

    fn vs(items: &[u32]) -> VertexSet {
        items.iter().copied().collect()
    }

    /// Triangle 1-2-3 with the path 3-4-5-6.
    fn triangle_with_tail() -> Graph {
        Graph::from_edges(1..=6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6)]).unwrap()
    }

    /// Claw centred at 1 with leaves 2, 3, 4 and a path of 7 more vertices
    /// hanging from leaf 2: 2-5-6-7-8-9-10-11.
    fn claw_with_tail() -> Graph {
        let mut edges = vec![(1, 2), (1, 3), (1, 4), (2, 5)];
        edges.extend((5..11).map(|i| (i, i + 1)));
        Graph::from_edges(1..=11, edges).unwrap()
    }

    #[test]
    fn rule0_thresholds() {
        let t = rule0_threshold(&KernelParams::new(3, 1, 1)).unwrap();
        assert_eq!((t.value, t.radius), (1.0, 1));
        let t = rule0_threshold(&KernelParams::new(3, 2, 1)).unwrap();
        assert_eq!((t.value, t.radius), (2.0, 2));
        // 1 + ln 2 / ln 1.2, frozen from a 60-digit evaluation
        let t = rule0_threshold(&KernelParams::new(3, 1, 2)).unwrap();
        assert!((t.value - 4.801_784_016_923_93).abs() < 1e-12);
        assert_eq!(t.radius, 4);
        assert!(rule0_threshold(&KernelParams::new(3, 1, 0)).is_err());
        assert!(rule0_threshold(&KernelParams::new(1, 1, 1)).is_err());
    }

    #[test]
    fn rule0_bounds() {
        let b = |delta, diameter, k| kernel_bound_rule0(&KernelParams::new(delta, diameter, k)).unwrap();
        assert_eq!(b(3, 1, 1), SizeBound { value: 54, saturated: false });
        assert_eq!(b(2, 1, 1).value, 16);
        // ceil(54 * 2^(p+1)), p = log_1.2 3; 60-digit value 7036.16...
        assert_eq!(b(3, 1, 2).value, 7037);
    }

    #[test]
    fn rule1_thresholds_and_bounds() {
        let t = rule1_threshold(&KernelParams::new(5, 2, 1)).unwrap();
        assert_eq!((t.value, t.radius), (4.0, 4));
        let t = rule1_threshold(&KernelParams::new(5, 1, 1)).unwrap();
        assert_eq!((t.value, t.radius), (2.0, 2));
        // (2 + ln 3 / ln(10/9)) * 2, 60-digit value 24.854...
        let t = rule1_threshold(&KernelParams::new(5, 2, 3)).unwrap();
        assert!((t.value - 24.854_345_326_782_833).abs() < 1e-12);
        assert_eq!(t.radius, 24);

        let b = |d, diameter, k| kernel_bound_rule1(&KernelParams::new(d, diameter, k)).unwrap();
        assert_eq!(b(5, 2, 1).value, 625_000);
        assert_eq!(b(2, 1, 1).value, 128);
        // ceil(625000 * 2^(2p+1)), p = log_{10/9} 5; 60-digit value
        // 1966511927293971.323...
        assert_eq!(b(5, 2, 2).value, 1_966_511_927_293_972);
        assert!(rule1_threshold(&KernelParams::new(5, 2, 0)).is_err());
    }

    #[test]
    fn rule0_on_triangle_with_tail() {
        let inst = ProblemInstance::new(triangle_with_tail(), 1);
        let r = apply_rule0(&inst, &fam("K3")).unwrap();
        assert_eq!(r.rule, RuleApplied::Rule0);
        assert_eq!(r.instance.graph.vertex_set(), vs(&[1, 2, 3, 4]));
        assert_eq!(r.removed, vs(&[5, 6]));
        assert_eq!(r.instance.budget, 1);
        assert_eq!(r.centers, vs(&[1, 2, 3]));

        let k = kernelize_bounded_degree(&inst, &fam("K3"));
        assert_eq!(k, r);
        assert!(k.instance.graph.vertex_count() as u64 <= k.bound.unwrap().value);
    }

    #[test]
    fn rule0_trivial_cases() {
        let c5 = builtin_pattern("C5").unwrap();
        let r = apply_rule0(&ProblemInstance::new(c5.clone(), 2), &fam("K3")).unwrap();
        assert_eq!(r.rule, RuleApplied::TrivialYes);
        assert_eq!(r.removed, c5.vertex_set());
        assert!(r.instance.graph.is_empty());

        let k3 = builtin_pattern("K3").unwrap();
        let r = apply_rule0(&ProblemInstance::new(k3.clone(), 1), &fam("K3")).unwrap();
        assert_eq!(r.instance.graph, k3);
        assert!(r.removed.is_empty());

        let r = kernelize_bounded_degree(&ProblemInstance::new(c5, 0), &fam("K3"));
        assert_eq!(r.rule, RuleApplied::TrivialYes);
        assert_eq!(r.instance.budget, 0);

        let r = kernelize_bounded_degree(&ProblemInstance::new(k3.clone(), 0), &fam("K3"));
        assert_eq!(r.rule, RuleApplied::TrivialNo);
        assert_eq!(r.instance, ProblemInstance::new(k3.clone(), 0));

        assert!(apply_rule0(&ProblemInstance::new(k3, 0), &fam("K3")).is_err());
    }

    #[test]
    fn trivial_no_uses_smallest_member() {
        let g = builtin_pattern("C4").unwrap();
        let r = kernelize_bounded_degree(&ProblemInstance::new(g, 0), &fam("C4,K1,3,P3"));
        assert_eq!(r.instance.graph, builtin_pattern("P3").unwrap());
        assert!(solve_bruteforce(&r.instance, &fam("C4,K1,3,P3")).is_none());
    }

    #[test]
    fn degree_cap_assertion() {
        let inst = ProblemInstance::new(triangle_with_tail(), 1);
        assert!(kernelize_bounded_degree_with_cap(&inst, &fam("K3"), 3).is_ok());
        assert!(kernelize_bounded_degree_with_cap(&inst, &fam("K3"), 2).is_err());
    }

    #[test]
    fn high_degree() {
        let star6 = builtin_pattern("K1,6").unwrap();
        assert_eq!(high_degree_vertices(&star6, 5), vs(&[1]));
        assert!(high_degree_vertices(&triangle_with_tail(), 3).is_empty());
        let mut two = star6.clone();
        for v in 11..=16 {
            two.add_edge(10, v).unwrap();
        }
        assert_eq!(high_degree_vertices(&two, 5), vs(&[1, 10]));
    }

    #[test]
    fn rule1_on_claw_with_tail() {
        let g = claw_with_tail();
        let inst = ProblemInstance::new(g.clone(), 1);
        let r = apply_rule1(&inst, &fam("K1,3"), 4).unwrap();
        assert_eq!(r.rule, RuleApplied::Rule1);
        assert_eq!(r.centers, vs(&[1, 2, 3, 4]));
        // leaf 2 is at distance 0, so the tail keeps 5..=8 (distances 1..4)
        assert_eq!(r.instance.graph.vertex_set(), vs(&[1, 2, 3, 4, 5, 6, 7, 8]));
        assert_eq!(r.removed, vs(&[9, 10, 11]));
        assert_eq!(r.params.unwrap().delta, 5);

        let k = kernelize_ktfree(&inst, &fam("K1,3"), 4).unwrap();
        assert_eq!(k, r);
        assert!(k.instance.graph.vertex_count() as u64 <= k.bound.unwrap().value);

        // radius 4 around the claw: nothing removed
        let small = g.induced_subgraph(&vs(&[1, 2, 3, 4, 5, 6, 7, 8]));
        let r = apply_rule1(&ProblemInstance::new(small.clone(), 1), &fam("K1,3"), 4).unwrap();
        assert!(r.removed.is_empty());
        assert_eq!(r.instance.graph, small);
    }

    #[test]
    fn rule1_trivial_and_errors() {
        let c5 = builtin_pattern("C5").unwrap();
        let r = apply_rule1(&ProblemInstance::new(c5.clone(), 1), &fam("K1,3"), 4).unwrap();
        assert_eq!(r.rule, RuleApplied::TrivialYes);
        let r = kernelize_ktfree(&ProblemInstance::new(c5, 0), &fam("K1,3"), 4).unwrap();
        assert_eq!(r.rule, RuleApplied::TrivialYes);

        let claw = builtin_pattern("K1,3").unwrap();
        let r = kernelize_ktfree(&ProblemInstance::new(claw_with_tail(), 0), &fam("K1,3"), 4).unwrap();
        assert_eq!(r.rule, RuleApplied::TrivialNo);
        assert_eq!(r.instance, ProblemInstance::new(claw, 0));

        let k4 = builtin_pattern("K4").unwrap();
        assert!(apply_rule1(&ProblemInstance::new(k4, 1), &fam("K1,3"), 4).is_err());
        assert!(apply_rule1(&ProblemInstance::new(claw_with_tail(), 1), &fam("K3"), 4).is_err());
        assert!(apply_rule1(&ProblemInstance::new(claw_with_tail(), 1), &fam("K1,3"), 2).is_err());
    }

    #[test]
    fn starfree_variant() {
        // two triangles joined by a long path: claw-free, K3 in the family
        let mut g = Graph::from_edges(1..=3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        for i in 3..12 {
            g.add_edge(i, i + 1).unwrap();
        }
        for (u, v) in [(12, 13), (13, 14), (12, 14)] {
            g.add_edge(u, v).unwrap();
        }
        let inst = ProblemInstance::new(g.clone(), 1);
        let r = kernelize_starfree(&inst, &fam("K3"), 3).unwrap();
        assert_eq!(r.rule, RuleApplied::Rule1);
        let before = minimum_deletion_size(&g, &fam("K3")) <= 1;
        let after = solve_bruteforce(&r.instance, &fam("K3")).is_some();
        assert_eq!(before, after);

        let claw = builtin_pattern("K1,3").unwrap();
        assert!(kernelize_starfree(&ProblemInstance::new(claw, 1), &fam("K3"), 3).is_err());
        assert!(kernelize_starfree(&inst, &fam("P4"), 3).is_err());
    }

    #[test]
    fn tree_count_bound_holds_on_examples() {
        let inst = ProblemInstance::new(triangle_with_tail(), 1);
        let r = kernelize_bounded_degree(&inst, &fam("K3"));
        let delta = r.params.unwrap().delta;
        let b = tree_count_bound(&r.instance.graph, &r.centers, delta).unwrap();
        assert!(r.instance.graph.vertex_count() as u128 <= b);

        let star6 = builtin_pattern("K1,6").unwrap();
        assert!(tree_count_bound(&star6, &vs(&[2]), 5).is_err());
        assert_eq!(tree_count_bound(&star6, &vs(&[1]), 5).unwrap(), 7 * 5);
    }
}
