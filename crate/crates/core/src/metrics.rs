//! Distance, degree, domination and tree invariants.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::cover::{mask_to_vec, BitSet, SetCover};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or [`Self::UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::UNREACHABLE)
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistMatrix {
    let n = g.order();
    let mut d = vec![DistMatrix::UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == DistMatrix::UNREACHABLE {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistMatrix { n, d }
}

pub(crate) fn connected_distances(g: &Graph) -> Result<DistMatrix> {
    let d = all_pairs_distances(g);
    if d.is_connected() {
        Ok(d)
    } else {
        Err(Error::Disconnected)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub degree: Vec<usize>,
    pub max_degree: usize,
}

pub fn metric_profile(g: &Graph) -> Result<MetricProfile> {
    let d = connected_distances(g)?;
    let eccentricity: Vec<u32> = g
        .vertices()
        .map(|u| d.row(u).iter().copied().max().unwrap_or(0))
        .collect();
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    Ok(MetricProfile {
        radius: *eccentricity.iter().min().unwrap(),
        diameter: *eccentricity.iter().max().unwrap(),
        max_degree: *degree.iter().max().unwrap(),
        eccentricity,
        degree,
    })
}

/// Every vertex has exactly one vertex at distance equal to the diameter.
pub fn is_two_antipodal(g: &Graph) -> Result<bool> {
    let d = connected_distances(g)?;
    let diameter = (0..g.order())
        .flat_map(|u| d.row(u).iter().copied())
        .max()
        .unwrap_or(0);
    Ok(g.vertices()
        .all(|u| d.row(u).iter().filter(|&&x| x == diameter).count() == 1))
}

/// Vertices outside `x` whose neighbours all lie in `x`, i.e. the isolated
/// vertices of the subgraph induced by `V - x`. Sorted.
pub fn isolated_after_removal(g: &Graph, x: &[usize]) -> Result<Vec<usize>> {
    g.check_vertices(x)?;
    let mut removed = vec![false; g.order()];
    for &v in x {
        removed[v] = true;
    }
    Ok(g.vertices()
        .filter(|&v| !removed[v] && g.neighbors(v).iter().all(|&w| removed[w]))
        .collect())
}

pub(crate) const MAX_DOMINATION_ORDER: usize = 64;

/// Minimum dominating set size together with the lexicographically least
/// minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.order();
    if n > MAX_DOMINATION_ORDER {
        return Err(Error::TooLarge {
            order: n,
            limit: MAX_DOMINATION_ORDER,
        });
    }
    let sets = g
        .closed_neighborhood_masks()
        .into_iter()
        .map(|m| {
            let mut b = BitSet::zeros(n);
            crate::cover::BitIter(m).for_each(|v| b.insert(v));
            b
        })
        .collect();
    let sc = SetCover::new(n, sets);
    let size = sc
        .minimum(0, sc.all())
        .expect("V(g) dominates itself")
        .count_ones() as usize;
    let witness = sc
        .lex_least(0, sc.all(), size)
        .expect("minimum is attainable");
    Ok((size, mask_to_vec(witness)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    /// Number of leaves, `n_1(T)`.
    pub leaves: usize,
    /// Exterior major vertex -> terminal degree.
    pub exterior_major: BTreeMap<usize, usize>,
    /// For each leaf, the major vertex it is terminal to (if any).
    pub terminal_of: BTreeMap<usize, usize>,
}

impl TreeProfile {
    /// `ex(T)`
    pub fn exterior_major_count(&self) -> usize {
        self.exterior_major.len()
    }
}

pub fn tree_profile(g: &Graph) -> Result<TreeProfile> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if g.order() < 3 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            min: 3,
        });
    }
    let d = all_pairs_distances(g);
    let leaves: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let majors: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut exterior_major = BTreeMap::new();
    let mut terminal_of = BTreeMap::new();
    for &u in &leaves {
        let Some(&nearest) = majors.iter().min_by_key(|&&m| d.get(u, m)) else {
            continue;
        };
        let best = d.get(u, nearest);
        if majors.iter().filter(|&&m| d.get(u, m) == best).count() == 1 {
            terminal_of.insert(u, nearest);
            *exterior_major.entry(nearest).or_insert(0) += 1;
        }
    }
    Ok(TreeProfile {
        leaves: leaves.len(),
        exterior_major,
        terminal_of,
    })
}
