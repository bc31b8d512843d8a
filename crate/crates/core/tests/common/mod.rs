#![allow(dead_code)]

use std::path::PathBuf;

use cutdim::io::{load_recipe, Built};
use cutdim::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load(name: &str) -> Built {
    load_recipe(&fixture(name)).unwrap().build().unwrap()
}

/// Uniform-ish random tree: vertex `i` hangs off a random earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let tree = random_tree(rng, n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges
                .iter()
                .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
                && rng.gen_bool(p)
            {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let d = cutdim::metrics::all_pairs_distances(g);
    g.vertices().map(|u| d.row(u).to_vec()).collect()
}

pub fn resolves(d: &[Vec<u32>], w: &[usize]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    (0..d.len()).all(|x| seen.insert(w.iter().map(|&s| d[s][x]).collect::<Vec<_>>()))
}

/// Metric dimension by trying subsets in order of size.
pub fn brute_dim(g: &Graph) -> usize {
    let d = distances(g);
    let n = g.order();
    (1..=n)
        .find(|&k| (0u32..1 << n).any(|m| m.count_ones() as usize == k && resolves(&d, &bits(m))))
        .unwrap()
}

pub fn bits(m: u32) -> Vec<usize> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

pub fn brute_domination(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&m| {
            g.vertices()
                .all(|v| m >> v & 1 == 1 || g.neighbors(v).iter().any(|&w| m >> w & 1 == 1))
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}
