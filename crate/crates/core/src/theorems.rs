//! Closed formulas for the metric dimension of point-attaching
//! constructions, each checked against the exact search.
//!
//! Every report lists the hypotheses it evaluated. Hypothesis failures never
//! abort: they yield [`Verdict::HypothesesUnmet`]. [`Verdict::Refuted`] is
//! reserved for "every hypothesis holds yet the formula disagrees with the
//! exact value" and always indicates a bug.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::composer::{
    build_family_f, build_tree_t, corona, cota_generator, rooted_product_family,
    rooted_product_uniform, Composition, SubgraphClass,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, StandardKind};
use crate::metrics::{all_pairs_distances, metric_profile, tree_profile};
use crate::resolver::{Limits, Resolver, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    FormulaMatches,
    BoundHolds,
    HypothesesUnmet,
    Refuted,
    /// Hypotheses hold but the graph is too large for the exact search.
    Unverified,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        matches!(self, Verdict::FormulaMatches | Verdict::BoundHolds)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub hypotheses: BTreeMap<String, bool>,
    pub formula: Option<i64>,
    pub oracle: Option<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl VerificationReport {
    fn new(statement: &str) -> Self {
        VerificationReport {
            statement: statement.to_string(),
            hypotheses: BTreeMap::new(),
            formula: None,
            oracle: None,
            verdict: Verdict::HypothesesUnmet,
            details: BTreeMap::new(),
        }
    }

    fn hypothesis(&mut self, name: &str, holds: bool) -> &mut Self {
        self.hypotheses.insert(name.to_string(), holds);
        self
    }

    fn detail(&mut self, name: &str, value: Value) -> &mut Self {
        self.details.insert(name.to_string(), value);
        self
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.values().all(|&h| h)
    }

    /// Sets the verdict for an equality statement.
    fn settle_equality(&mut self, oracle: impl FnOnce() -> Result<Option<usize>>) -> Result<()> {
        if !self.hypotheses_hold() {
            self.verdict = Verdict::HypothesesUnmet;
            return Ok(());
        }
        self.oracle = oracle()?;
        self.verdict = match (self.formula, self.oracle) {
            (_, None) => Verdict::Unverified,
            (Some(f), Some(o)) if f == o as i64 => Verdict::FormulaMatches,
            _ => Verdict::Refuted,
        };
        Ok(())
    }
}

/// Exact dimension, or `None` when the graph is beyond the search ceiling.
pub fn oracle_dim(g: &Graph, limits: Limits) -> Result<Option<usize>> {
    if g.order() > MAX_ORDER {
        return Ok(None);
    }
    Resolver::with_limits(g, limits)?.dim().map(Some)
}

fn sum_dim_star(c: &Composition, limits: Limits) -> Result<Vec<usize>> {
    (0..c.len()).map(|i| c.dim_star(i, limits)).collect()
}

/// Hypotheses shared by the equality theorem and its corollaries.
fn equality_hypotheses(c: &Composition, r: &mut VerificationReport) {
    let profiles = c.profiles();
    r.hypothesis("k>=3", c.len() >= 3);
    r.hypothesis(
        "internal-p1",
        profiles
            .iter()
            .filter(|p| p.class == SubgraphClass::Internal)
            .all(|p| p.satisfies_p1),
    );
    r.hypothesis("end-p2", ends_satisfy_p2(c));
    r.hypothesis("end-disjoint", ends_disjoint(c));
}

fn ends_satisfy_p2(c: &Composition) -> bool {
    c.end_components().all(|i| c.profile(i).satisfies_p2)
}

fn ends_disjoint(c: &Composition) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    c.end_components()
        .all(|i| c.attachment_images(i).into_iter().all(|v| seen.insert(v)))
}

/// `dim(G) >= Σ dim*(G_i)`, unconditionally.
pub fn lower_bound_report(c: &Composition, limits: Limits) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("lower-bound");
    let stars = sum_dim_star(c, limits)?;
    let rhs: usize = stars.iter().sum();
    r.formula = Some(rhs as i64);
    r.detail("dim_star", json!(stars));
    r.oracle = oracle_dim(c.graph(), limits)?;
    r.verdict = match r.oracle {
        None => Verdict::Unverified,
        Some(lhs) if lhs >= rhs => Verdict::BoundHolds,
        Some(_) => Verdict::Refuted,
    };
    Ok(r)
}

/// `dim(G) = Σ dim*(G_i)` under the point-attaching hypotheses.
pub fn main_equality_report(c: &Composition, limits: Limits) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("main-equality");
    equality_hypotheses(c, &mut r);
    let stars = sum_dim_star(c, limits)?;
    r.formula = Some(stars.iter().sum::<usize>() as i64);
    r.detail("dim_star", json!(stars));
    r.settle_equality(|| oracle_dim(c.graph(), limits))?;
    Ok(r)
}

/// `dim(G) = Σ (dim(G_i) - τ_i)` when additionally `dim = dim⁺` on every
/// component that is not entirely attachment vertices.
pub fn extremal_report(c: &Composition, limits: Limits) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("extremal");
    equality_hypotheses(c, &mut r);
    let mut dims = Vec::new();
    let mut taus = Vec::new();
    let mut upper_ok = true;
    for i in 0..c.len() {
        let g = c.component(i);
        let resolver = Resolver::with_limits(g, limits)?;
        let dim = resolver.dim()?;
        if c.profile(i).attachment.len() != g.order() {
            upper_ok &= resolver.upper_metric_dimension()? == dim;
        }
        dims.push(dim);
        taus.push(resolver.tau(&c.profile(i).attachment)?);
    }
    r.hypothesis("dim=dim+", upper_ok);
    r.formula = Some(dims.iter().zip(&taus).map(|(d, t)| (d - t) as i64).sum());
    r.detail("dim", json!(dims)).detail("tau", json!(taus));
    r.settle_equality(|| oracle_dim(c.graph(), limits))?;
    Ok(r)
}

/// `dim(G) = Σ_{|A|<r_i} (r_i - |A(K_{r_i})| - 1)` for block graphs.
pub fn block_formula_report(c: &Composition, limits: Limits) -> Result<VerificationReport> {
    if let Some(i) = (0..c.len()).find(|&i| !c.component(i).is_complete()) {
        return Err(Error::Composition(format!("component {i} is not a clique")));
    }
    let mut r = VerificationReport::new("block");
    r.hypothesis("k>=3", c.len() >= 3);
    r.hypothesis(
        "no-end-k2",
        c.end_components().all(|i| c.component(i).order() != 2),
    );
    r.hypothesis("end-disjoint", ends_disjoint(c));
    let formula: usize = (0..c.len())
        .map(|i| (c.component(i).order(), c.profile(i).attachment.len()))
        .filter(|&(size, a)| a < size)
        .map(|(size, a)| size - a - 1)
        .sum();
    r.formula = Some(formula as i64);
    r.settle_equality(|| oracle_dim(c.graph(), limits))?;
    Ok(r)
}

/// Rooted product `G(H)`: `Σ_{H_1} dim(H_i) + Σ_{H_2} (dim(H_i) - 1)` where
/// `H_2` collects the `H_i` whose root lies in some metric basis.
pub fn rooted_family_report(
    g: &Graph,
    rooted: &[(Graph, usize)],
    limits: Limits,
) -> Result<VerificationReport> {
    let product = rooted_product_family(g, rooted)?;
    let mut r = VerificationReport::new("rooted-family");
    let mut p2 = true;
    let mut members = Vec::new();
    let mut formula = 0i64;
    for (h, root) in rooted {
        p2 &= crate::composer::satisfies_p2(h, &[*root])?;
        let resolver = Resolver::with_limits(h, limits)?;
        let dim = resolver.dim()? as i64;
        let member = resolver.basis_membership(*root)?;
        members.push(member);
        formula += if member { dim - 1 } else { dim };
    }
    r.hypothesis("roots-p2", p2);
    r.formula = Some(formula);
    r.detail("root_in_basis", json!(members));
    r.settle_equality(|| oracle_dim(product.graph(), limits))?;
    Ok(r)
}

pub fn rooted_uniform_report(
    g: &Graph,
    h: &Graph,
    root: usize,
    limits: Limits,
) -> Result<VerificationReport> {
    let rooted: Vec<_> = g.vertices().map(|_| (h.clone(), root)).collect();
    rooted_family_report(g, &rooted, limits)
}

/// Lower and upper bounds for `G ∘_v P` with `v` a leaf of `P`:
/// `dim(G) <= dim(G ∘_v P)` and `2 dim(G ∘_v P) <= dim(G) + n - I(G)`,
/// plus equality with `dim(G)` when `I(G) = n - dim(G)`.
pub fn cota_bounds_report(g: &Graph, p_len: usize, limits: Limits) -> Result<VerificationReport> {
    let (product, generator) = cota_generator(g, p_len, limits)?;
    let mut r = VerificationReport::new("cota");
    let resolver = Resolver::with_limits(g, limits)?;
    let dim = resolver.dim()?;
    let iso = resolver.isolation_index()?;
    let n = g.order();
    r.hypothesis("root-is-leaf", true);
    r.formula = Some(dim as i64);
    let extremal = iso == n - dim;
    r.detail("dim_g", json!(dim))
        .detail("isolation_index", json!(iso))
        .detail("order", json!(n))
        .detail("upper_bound_doubled", json!(dim + n - iso))
        .detail("equality_case", json!(extremal))
        .detail("generator", json!(generator.generator))
        .detail("generator_resolving", json!(generator.resolving))
        .detail("generator_within_bound", json!(generator.within_bound));
    r.oracle = oracle_dim(product.graph(), limits)?;
    r.verdict = match r.oracle {
        None => Verdict::Unverified,
        Some(o) => {
            let holds = dim <= o
                && 2 * o <= dim + n - iso
                && generator.resolving
                && generator.within_bound
                && (!extremal || o == dim);
            if holds {
                Verdict::BoundHolds
            } else {
                Verdict::Refuted
            }
        }
    };
    Ok(r)
}

/// `dim(T) = n_1(T) - ex(T)` for trees that are not paths.
pub fn tree_dim_report(t: &Graph, limits: Limits) -> Result<VerificationReport> {
    let profile = tree_profile(t)?;
    if t.is_path() {
        return Err(Error::InvalidParameters(
            "tree formula does not apply to paths".into(),
        ));
    }
    let mut r = VerificationReport::new("tree");
    r.hypothesis("tree", true).hypothesis("not-path", true);
    r.formula = Some(profile.leaves as i64 - profile.exterior_major_count() as i64);
    r.detail("leaves", json!(profile.leaves))
        .detail("exterior_major", json!(profile.exterior_major_count()));
    r.settle_equality(|| oracle_dim(t, limits))?;
    Ok(r)
}

/// Corona `G ⊙ H`: `Σ_{H_1} dim(K_1+H_i) + Σ_{H_2} (dim(K_1+H_i) - 1)`
/// where `H_2` collects the `H_i` whose join has the `K_1` vertex in some
/// metric basis.
pub fn corona_report(g: &Graph, family: &[Graph], limits: Limits) -> Result<VerificationReport> {
    if let Some(h) = family.iter().find(|h| h.order() < 2) {
        return Err(Error::InvalidParameters(format!(
            "corona family members must be nontrivial, got order {}",
            h.order()
        )));
    }
    let product = corona(g, family)?;
    let mut r = VerificationReport::new("corona");
    let mut formula = 0i64;
    let mut members = Vec::new();
    let mut joins = Vec::new();
    for h in family {
        let join = Graph::join_with_k1(h);
        let resolver = Resolver::with_limits(&join, limits)?;
        let dim = resolver.dim()?;
        let member = resolver.basis_membership(h.order())?;
        formula += if member { dim as i64 - 1 } else { dim as i64 };
        members.push(member);
        joins.push(dim);
    }
    r.hypothesis("nontrivial-family", true);
    r.formula = Some(formula);
    r.detail("join_dim", json!(joins))
        .detail("k1_in_basis", json!(members));
    if family.windows(2).all(|w| w[0] == w[1]) {
        let n = g.order() as i64;
        let uniform = if members[0] {
            n * (joins[0] as i64 - 1)
        } else {
            n * joins[0] as i64
        };
        r.detail("uniform_formula", json!(uniform));
    }
    r.settle_equality(|| oracle_dim(product.graph(), limits))?;
    Ok(r)
}

pub fn corona_uniform_report(g: &Graph, h: &Graph, limits: Limits) -> Result<VerificationReport> {
    let family = vec![h.clone(); g.order()];
    corona_report(g, &family, limits)
}

/// If `r(H) >= 4` or `dim(K_1+H) > Δ(H) + 1`, the `K_1` vertex lies in no
/// metric basis of `K_1 + H`. When the antecedent fails the check is
/// inconclusive (the converse does not hold).
pub fn k1_lemma_check(h: &Graph, limits: Limits) -> Result<VerificationReport> {
    let profile = metric_profile(h)?;
    let join = Graph::join_with_k1(h);
    let resolver = Resolver::with_limits(&join, limits)?;
    let dim = resolver.dim()?;
    let member = resolver.basis_membership(h.order())?;
    let antecedent = profile.radius >= 4 || dim > profile.max_degree + 1;
    let mut r = VerificationReport::new("k1-lemma");
    r.hypothesis("antecedent", antecedent);
    r.oracle = Some(dim);
    r.detail("radius", json!(profile.radius))
        .detail("max_degree", json!(profile.max_degree))
        .detail("k1_in_basis", json!(member));
    r.verdict = match (antecedent, member) {
        (false, _) => Verdict::HypothesesUnmet,
        (true, false) => Verdict::FormulaMatches,
        (true, true) => Verdict::Refuted,
    };
    Ok(r)
}

/// Chains whose internal links are entered and left at diametral vertices:
/// `dim(G) = Σ dim*(G_i)`.
pub fn chain_report(c: &Composition, limits: Limits) -> Result<VerificationReport> {
    let chain_shaped = c
        .steps()
        .iter()
        .enumerate()
        .all(|(j, s)| s.component == j + 1 && c.images(j).contains(&s.host));
    if !chain_shaped {
        return Err(Error::Composition("composition is not a chain".into()));
    }
    let k = c.len();
    let mut r = VerificationReport::new("chain");
    r.hypothesis("k>=3", k >= 3);
    r.hypothesis(
        "ends-p2",
        c.profile(0).satisfies_p2 && c.profile(k - 1).satisfies_p2,
    );
    let diametral = (1..k.saturating_sub(1)).all(|i| {
        let a = &c.profile(i).attachment;
        if a.len() != 2 {
            return false;
        }
        let d = all_pairs_distances(c.component(i));
        let diameter = c
            .component(i)
            .vertices()
            .flat_map(|u| d.row(u).iter().copied())
            .max()
            .unwrap_or(0);
        d.get(a[0], a[1]) == diameter
    });
    r.hypothesis("internal-diametral", diametral);
    let stars = sum_dim_star(c, limits)?;
    r.formula = Some(stars.iter().sum::<usize>() as i64);
    r.detail("dim_star", json!(stars));
    r.settle_equality(|| oracle_dim(c.graph(), limits))?;
    Ok(r)
}

/// Closed forms of `dim*` for paths, cycles and complete graphs with
/// attachment set `a`. The complete-graph value `n - |A| - 1` is clamped at
/// zero for `A = V(K_n)`.
pub fn closed_form_dim_star(kind: StandardKind, size: usize, a: &[usize]) -> Result<usize> {
    let g = Graph::standard(kind, size)?;
    g.check_vertices(a)?;
    let mut set: Vec<usize> = a.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(Error::InvalidParameters(
            "attachment set must be nonempty".into(),
        ));
    }
    Ok(match kind {
        StandardKind::Path => usize::from(set.len() == 1 && g.degree(set[0]) == 2),
        StandardKind::Cycle => {
            let antipodal_pair =
                set.len() == 2 && size.is_multiple_of(2) && set[1] - set[0] == size / 2;
            usize::from(set.len() == 1 || antipodal_pair)
        }
        StandardKind::Complete => (size - set.len()).saturating_sub(1),
        StandardKind::Star => {
            return Err(Error::InvalidParameters("no closed form for stars".into()))
        }
    })
}

/// `T(a,b,n)` has dimension `a` and `T(a,b,n) ∘_v P_2` has dimension `b`.
pub fn tree_t_report(a: usize, b: usize, n: usize, limits: Limits) -> Result<VerificationReport> {
    let t = build_tree_t(a, b, n)?;
    let product = rooted_product_uniform(&t, &Graph::path(2)?, 0)?;
    let profile = tree_profile(&t)?;
    let mut r = VerificationReport::new("treeT");
    r.hypothesis("2<=a<b<=(a+n)/2", true);
    r.formula = Some(a as i64);
    r.oracle = oracle_dim(&t, limits)?;
    let product_dim = oracle_dim(product.graph(), limits)?;
    r.detail("leaves", json!(profile.leaves))
        .detail("exterior_major", json!(profile.exterior_major_count()))
        .detail("product_formula", json!(b))
        .detail("product_oracle", json!(product_dim));
    r.verdict = match (r.oracle, product_dim) {
        (Some(d), Some(p)) if d == a && p == b => Verdict::FormulaMatches,
        (Some(_), Some(_)) => Verdict::Refuted,
        _ => Verdict::Unverified,
    };
    Ok(r)
}

/// `G_t` has dimension `t`, `X = {x_1..x_t}` is a basis, and
/// `I(G_t) = n - dim(G_t) = t + 1`.
pub fn family_f_report(t: usize, limits: Limits) -> Result<VerificationReport> {
    let g = build_family_f(t)?;
    let resolver = Resolver::with_limits(&g, limits)?;
    let x: Vec<usize> = (1..=t).collect();
    let x_resolves = resolver.is_resolving(&x)?;
    let dim = resolver.dim()?;
    let iso = resolver.isolation_index()?;
    let mut r = VerificationReport::new("familyF");
    r.hypothesis("t>=3", true);
    r.formula = Some(t as i64);
    r.oracle = Some(dim);
    r.detail("x_resolving", json!(x_resolves))
        .detail("isolation_index", json!(iso))
        .detail("isolation_formula", json!(t + 1));
    r.verdict = if dim == t && x_resolves && iso == t + 1 && iso == g.order() - dim {
        Verdict::FormulaMatches
    } else {
        Verdict::Refuted
    };
    Ok(r)
}

/// `G ∘_v H` for a root `v` in no metric basis of `H` has dimension
/// `n · dim(H)`; it equals `n` exactly when `H` is a path rooted at a
/// non-leaf.
pub fn dim_equals_n_report(
    g: &Graph,
    h: &Graph,
    root: usize,
    limits: Limits,
) -> Result<VerificationReport> {
    let resolver = Resolver::with_limits(h, limits)?;
    let member = resolver.basis_membership(root)?;
    let product = rooted_product_uniform(g, h, root)?;
    let mut r = VerificationReport::new("dim-equals-n");
    r.hypothesis("root-in-no-basis", !member);
    let predicted = h.is_path() && h.degree(root) != 1;
    r.formula = Some(if predicted { g.order() as i64 } else { -1 });
    r.detail("path_with_inner_root", json!(predicted));
    if !r.hypotheses_hold() {
        r.verdict = Verdict::HypothesesUnmet;
        return Ok(r);
    }
    r.oracle = oracle_dim(product.graph(), limits)?;
    r.verdict = match r.oracle {
        None => Verdict::Unverified,
        Some(o) if (o == g.order()) == predicted => Verdict::FormulaMatches,
        Some(_) => Verdict::Refuted,
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composer::{block_graph, chain, AttachStep, ChainLink, CompositionBuilder};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            closed_form_dim_star(StandardKind::Path, 6, &[2]).unwrap(),
            1
        );
        assert_eq!(
            closed_form_dim_star(StandardKind::Path, 6, &[0]).unwrap(),
            0
        );
        assert_eq!(
            closed_form_dim_star(StandardKind::Cycle, 6, &[0, 3]).unwrap(),
            1
        );
        assert_eq!(
            closed_form_dim_star(StandardKind::Cycle, 6, &[0, 2]).unwrap(),
            0
        );
        assert_eq!(
            closed_form_dim_star(StandardKind::Complete, 5, &[0, 4]).unwrap(),
            2
        );
        assert_eq!(
            closed_form_dim_star(StandardKind::Complete, 3, &[0, 1, 2]).unwrap(),
            0
        );
        assert!(closed_form_dim_star(StandardKind::Cycle, 2, &[0]).is_err());
        assert!(closed_form_dim_star(StandardKind::Path, 4, &[]).is_err());
    }

    #[test]
    fn k2_composition_fails_k() {
        let mut b = CompositionBuilder::new(Graph::cycle(5).unwrap()).unwrap();
        b.attach(0, Graph::cycle(5).unwrap(), 0).unwrap();
        let r = main_equality_report(&b.finalize().unwrap(), lim()).unwrap();
        assert!(!r.hypotheses["k>=3"]);
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);
    }

    #[test]
    fn shared_end_attachment_fails_disjointness() {
        let mut b = CompositionBuilder::new(Graph::cycle(4).unwrap()).unwrap();
        b.attach(0, Graph::cycle(4).unwrap(), 0).unwrap();
        b.attach(0, Graph::cycle(4).unwrap(), 0).unwrap();
        let r = main_equality_report(&b.finalize().unwrap(), lim()).unwrap();
        assert!(!r.hypotheses["end-disjoint"]);
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);
    }

    #[test]
    fn two_path_chain_lower_bound() {
        let link = ChainLink {
            graph: Graph::path(3).unwrap(),
            entry: 0,
            exit: 2,
        };
        let c = chain(&[link.clone(), link]).unwrap();
        let r = lower_bound_report(&c, lim()).unwrap();
        assert_eq!(r.verdict, Verdict::BoundHolds);
    }

    #[test]
    fn p5_end_breaks_upper_equality() {
        // K_3 - K_3 - P_5 entered at an interior vertex
        let mut b = CompositionBuilder::new(Graph::complete(3).unwrap()).unwrap();
        b.attach(0, Graph::complete(3).unwrap(), 0).unwrap();
        b.attach(1, Graph::path(5).unwrap(), 2).unwrap();
        let r = extremal_report(&b.finalize().unwrap(), lim()).unwrap();
        assert!(!r.hypotheses["dim=dim+"]);
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);
    }

    #[test]
    fn block_reports() {
        // K_3 - K_4 - K_3, glued at distinct K_4 vertices
        let glue = [
            AttachStep {
                host: 2,
                component: 1,
                vertex: 0,
            },
            AttachStep {
                host: 5,
                component: 2,
                vertex: 0,
            },
        ];
        let c = block_graph(&[3, 4, 3], &glue).unwrap();
        assert_eq!(c.graph().order(), 8);
        let r = block_formula_report(&c, lim()).unwrap();
        assert_eq!((r.formula, r.oracle), (Some(3), Some(3)));
        assert_eq!(r.verdict, Verdict::FormulaMatches);
        let e = extremal_report(&c, lim()).unwrap();
        assert_eq!(e.verdict, Verdict::FormulaMatches);

        // K_5 with three K_3 pendants
        let glue: Vec<_> = (0..3)
            .map(|i| AttachStep {
                host: i,
                component: i + 1,
                vertex: 0,
            })
            .collect();
        let c = block_graph(&[5, 3, 3, 3], &glue).unwrap();
        let r = block_formula_report(&c, lim()).unwrap();
        assert_eq!((r.formula, r.oracle), (Some(4), Some(4)));

        let glue = [
            AttachStep {
                host: 0,
                component: 1,
                vertex: 0,
            },
            AttachStep {
                host: 1,
                component: 2,
                vertex: 0,
            },
        ];
        let c = block_graph(&[4, 2, 3], &glue).unwrap();
        let r = block_formula_report(&c, lim()).unwrap();
        assert!(!r.hypotheses["no-end-k2"]);
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);

        let mut b = CompositionBuilder::new(Graph::cycle(4).unwrap()).unwrap();
        b.attach(0, Graph::complete(3).unwrap(), 0).unwrap();
        assert!(block_formula_report(&b.finalize().unwrap(), lim()).is_err());
    }

    #[test]
    fn tree_reports() {
        let r = tree_dim_report(&Graph::star(4).unwrap(), lim()).unwrap();
        assert_eq!((r.formula, r.oracle), (Some(3), Some(3)));
        let r = tree_dim_report(&build_tree_t(3, 7, 12).unwrap(), lim()).unwrap();
        assert_eq!((r.formula, r.oracle), (Some(3), Some(3)));
        assert!(tree_dim_report(&Graph::path(6).unwrap(), lim()).is_err());
    }

    #[test]
    fn k1_lemma_on_long_path() {
        let r = k1_lemma_check(&Graph::path(9).unwrap(), lim()).unwrap();
        assert!(r.hypotheses["antecedent"]);
        assert_eq!(r.details["k1_in_basis"], json!(false));
        assert_eq!(r.verdict, Verdict::FormulaMatches);
    }

    #[test]
    fn corona_of_k2() {
        let r = corona_uniform_report(&Graph::path(2).unwrap(), &Graph::path(2).unwrap(), lim())
            .unwrap();
        assert_eq!((r.formula, r.oracle), (Some(2), Some(2)));
        assert!(
            corona_uniform_report(&Graph::path(2).unwrap(), &Graph::empty(1).unwrap(), lim())
                .is_err()
        );
    }

    #[test]
    fn c4_corona_k2() {
        let r = corona_uniform_report(&Graph::cycle(4).unwrap(), &Graph::path(2).unwrap(), lim())
            .unwrap();
        assert_eq!((r.formula, r.oracle), (Some(4), Some(4)));
        assert_eq!(r.details["uniform_formula"], json!(4));
    }

    #[test]
    fn rooted_reports() {
        let r = rooted_uniform_report(
            &Graph::path(4).unwrap(),
            &Graph::cycle(3).unwrap(),
            0,
            lim(),
        )
        .unwrap();
        assert_eq!((r.formula, r.oracle), (Some(4), Some(4)));
        let r = rooted_uniform_report(
            &Graph::cycle(3).unwrap(),
            &Graph::path(4).unwrap(),
            1,
            lim(),
        )
        .unwrap();
        assert_eq!((r.formula, r.oracle), (Some(3), Some(3)));
        let r = rooted_uniform_report(
            &Graph::cycle(3).unwrap(),
            &Graph::path(4).unwrap(),
            0,
            lim(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);
        // K_4 roots: Σ (r_i - 2)
        let r = rooted_uniform_report(
            &Graph::path(3).unwrap(),
            &Graph::complete(4).unwrap(),
            0,
            lim(),
        )
        .unwrap();
        assert_eq!((r.formula, r.oracle), (Some(6), Some(6)));
    }

    #[test]
    fn cota_on_c4_and_k3() {
        let r = cota_bounds_report(&Graph::cycle(4).unwrap(), 2, lim()).unwrap();
        assert_eq!(r.oracle, Some(2));
        assert_eq!(r.details["isolation_index"], json!(0));
        assert_eq!(r.verdict, Verdict::BoundHolds);
        let r = cota_bounds_report(&Graph::complete(3).unwrap(), 2, lim()).unwrap();
        assert_eq!(r.oracle, Some(2));
        assert_eq!(r.verdict, Verdict::BoundHolds);
    }

    #[test]
    fn report_json_shape() {
        let r = tree_dim_report(&Graph::star(3).unwrap(), lim()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["statement"], "tree");
        assert_eq!(v["verdict"], "formula-matches");
        assert_eq!(v["formula"], 2);
        assert_eq!(v["oracle"], 2);
        assert!(v["hypotheses"].is_object());
    }
}
