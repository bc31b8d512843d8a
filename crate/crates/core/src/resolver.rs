//! Exact metric dimension and its variants.
//!
//! A vertex `v` distinguishes the pair `{x, y}` when `d(v,x) != d(v,y)`.
//! A resolving set is a set cover of all unordered pairs by these
//! "distinguishes" sets, so every query here runs on [`SetCover`].

use serde::Serialize;

use crate::cover::{lex_cmp, mask_of, mask_to_vec, BitIter, BitSet, SetCover};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{connected_distances, DistMatrix};

/// Search guardrails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by basis enumeration, upper dimension and
    /// isolation index.
    pub max_enum_order: usize,
    /// Maximum number of bases kept by an enumeration.
    pub basis_cap: usize,
}

/// Hard ceiling on graph order: vertex sets are 64-bit masks.
pub const MAX_ORDER: usize = 64;
pub const DEFAULT_MAX_ENUM_ORDER: usize = 24;
pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum_order: DEFAULT_MAX_ENUM_ORDER,
            basis_cap: DEFAULT_BASIS_CAP,
        }
    }
}

/// A minimum resolving set, or a minimum attaching generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Basis {
    pub size: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolveReport {
    pub dim: usize,
    pub bases: Vec<Vec<usize>>,
    pub truncated: bool,
    pub upper_dim: Option<usize>,
    /// `membership[v]`: `v` lies in some metric basis.
    pub membership: Vec<bool>,
    pub isolation_index: Option<usize>,
}

/// Precomputed distance data for one connected graph.
pub struct Resolver {
    n: usize,
    dist: DistMatrix,
    cover: SetCover,
    limits: Limits,
}

impl Resolver {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_limits(g, Limits::default())
    }

    pub fn with_limits(g: &Graph, limits: Limits) -> Result<Self> {
        let n = g.order();
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                limit: MAX_ORDER,
            });
        }
        let dist = connected_distances(g)?;
        let pairs = n * (n - 1) / 2;
        let mut sets = vec![BitSet::zeros(pairs); n];
        let mut p = 0;
        for x in 0..n {
            for y in x + 1..n {
                for (v, set) in sets.iter_mut().enumerate() {
                    if dist.get(v, x) != dist.get(v, y) {
                        set.insert(p);
                    }
                }
                p += 1;
            }
        }
        Ok(Resolver {
            n,
            dist,
            cover: SetCover::new(pairs, sets),
            limits,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &DistMatrix {
        &self.dist
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    fn check(&self, vs: &[usize]) -> Result<u64> {
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
        }
        Ok(mask_of(vs))
    }

    fn require_nontrivial(&self) -> Result<()> {
        if self.n < 2 {
            Err(Error::OrderTooSmall {
                order: self.n,
                min: 2,
            })
        } else {
            Ok(())
        }
    }

    fn require_enumerable(&self) -> Result<()> {
        self.require_nontrivial()?;
        if self.n > self.limits.max_enum_order {
            Err(Error::TooLarge {
                order: self.n,
                limit: self.limits.max_enum_order,
            })
        } else {
            Ok(())
        }
    }

    pub fn is_resolving(&self, w: &[usize]) -> Result<bool> {
        let m = self.check(w)?;
        Ok(self.cover.covers(m))
    }

    /// Metric dimension with the lexicographically least metric basis.
    pub fn metric_dimension(&self) -> Result<Basis> {
        self.require_nontrivial()?;
        let all = self.cover.all();
        let size = self
            .cover
            .minimum(0, all)
            .expect("V(g) resolves")
            .count_ones() as usize;
        let witness = self
            .cover
            .lex_least(0, all, size)
            .expect("minimum attainable");
        Ok(Basis {
            size,
            vertices: mask_to_vec(witness),
        })
    }

    pub fn dim(&self) -> Result<usize> {
        self.metric_dimension().map(|b| b.size)
    }

    /// `dim*`: minimum `|W|` with `W ∪ a` resolving; `W` is drawn from
    /// `V - a` and the witness is lexicographically least.
    pub fn attaching_dimension(&self, a: &[usize]) -> Result<Basis> {
        self.require_nontrivial()?;
        let forced = self.check(a)?;
        let allowed = self.cover.all() & !forced;
        let size = self
            .cover
            .minimum(forced, allowed)
            .expect("V(g) resolves")
            .count_ones() as usize;
        let witness = self
            .cover
            .lex_least(forced, allowed, size)
            .expect("minimum attainable");
        Ok(Basis {
            size,
            vertices: mask_to_vec(witness),
        })
    }

    /// Some metric basis contains `v`.
    pub fn basis_membership(&self, v: usize) -> Result<bool> {
        let dim = self.dim()?;
        let forced = self.check(&[v])?;
        Ok(self
            .cover
            .within(forced, self.cover.all() & !forced, dim - 1)
            .is_some())
    }

    fn bases_masks(&self, dim: usize) -> (Vec<u64>, bool) {
        self.cover
            .enumerate(self.cover.all(), dim, self.limits.basis_cap)
    }

    /// All metric bases in lexicographic order, truncated at the cap.
    pub fn enumerate_bases(&self) -> Result<ResolveReport> {
        self.require_enumerable()?;
        let dim = self.dim()?;
        let (bases, truncated) = self.bases_masks(dim);
        let membership = if truncated {
            (0..self.n)
                .map(|v| self.basis_membership(v))
                .collect::<Result<_>>()?
        } else {
            let union = bases.iter().fold(0u64, |m, &b| m | b);
            (0..self.n).map(|v| union >> v & 1 == 1).collect()
        };
        let isolation_index = if truncated {
            None
        } else {
            Some(self.isolation_from(&bases))
        };
        Ok(ResolveReport {
            dim,
            bases: bases.into_iter().map(mask_to_vec).collect(),
            truncated,
            upper_dim: None,
            membership,
            isolation_index,
        })
    }

    /// [`Self::enumerate_bases`] plus the upper dimension.
    pub fn full_report(&self) -> Result<ResolveReport> {
        let mut r = self.enumerate_bases()?;
        r.upper_dim = Some(self.upper_metric_dimension()?);
        Ok(r)
    }

    fn exact_bases(&self) -> Result<Vec<u64>> {
        self.require_enumerable()?;
        let (bases, truncated) = self.bases_masks(self.dim()?);
        if truncated {
            return Err(Error::Truncated {
                cap: self.limits.basis_cap,
            });
        }
        Ok(bases)
    }

    /// Max over metric bases `B` of `|a ∩ B|`.
    pub fn tau(&self, a: &[usize]) -> Result<usize> {
        let am = self.check(a)?;
        Ok(self
            .exact_bases()?
            .iter()
            .map(|b| (b & am).count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    fn isolation_from(&self, bases: &[u64]) -> usize {
        bases
            .iter()
            .map(|&b| self.isolated_count(b))
            .max()
            .unwrap_or(0)
    }

    fn isolated_count(&self, s: u64) -> usize {
        // a vertex outside s is isolated in <V - s> iff every neighbour is in s
        (0..self.n)
            .filter(|&v| s >> v & 1 == 0)
            .filter(|&v| (0..self.n).all(|w| self.dist.get(v, w) != 1 || s >> w & 1 == 1))
            .count()
    }

    /// `I(G)`: max over metric bases `S` of the number of isolated vertices
    /// of `<V - S>`.
    pub fn isolation_index(&self) -> Result<usize> {
        Ok(self.isolation_from(&self.exact_bases()?))
    }

    /// Lexicographically least metric basis maximizing the isolated count.
    pub fn max_isolation_basis(&self) -> Result<(Vec<usize>, usize)> {
        let bases = self.exact_bases()?;
        let mut best: Option<(u64, usize)> = None;
        for b in bases {
            let k = self.isolated_count(b);
            match best {
                Some((bb, bk)) if k < bk || (k == bk && lex_cmp(b, bb).is_ge()) => {}
                _ => best = Some((b, k)),
            }
        }
        let (b, k) = best.expect("a connected graph of order >= 2 has a basis");
        Ok((mask_to_vec(b), k))
    }

    /// Largest minimal resolving set.
    pub fn upper_metric_dimension(&self) -> Result<usize> {
        self.require_enumerable()?;
        let mut search = UpperSearch {
            cover: &self.cover,
            n: self.n,
            best: 0,
        };
        search.run(0, 0, self.cover.all());
        Ok(search.best)
    }
}

/// Include/exclude search over vertices for the largest irredundant
/// resolving set. A member is irredundant while it distinguishes some pair
/// no other member does; that property is lost monotonically as members are
/// added, which justifies pruning at the moment of inclusion.
struct UpperSearch<'a> {
    cover: &'a SetCover,
    n: usize,
    best: usize,
}

impl UpperSearch<'_> {
    fn irredundant(&self, s: u64) -> bool {
        BitIter(s).all(|v| {
            let others = s & !(1 << v);
            let left = self.cover.uncovered(others);
            self.cover.set(v).iter().any(|p| left.contains(p))
        })
    }

    /// `next`: first undecided vertex; `open`: chosen plus undecided.
    fn run(&mut self, next: usize, chosen: u64, open: u64) {
        if open.count_ones() as usize <= self.best {
            return;
        }
        if !self.cover.covers(open) {
            return;
        }
        if next == self.n {
            // open == chosen here, resolving and irredundant
            self.best = chosen.count_ones() as usize;
            return;
        }
        let bit = 1u64 << next;
        let with = chosen | bit;
        if self.irredundant(with) {
            self.run(next + 1, with, open);
        }
        self.run(next + 1, chosen, open & !bit);
    }
}

/// `resolver` convenience wrappers over a one-off [`Resolver`].
pub fn is_resolving(g: &Graph, w: &[usize]) -> Result<bool> {
    g.check_vertices(w)?;
    Resolver::new(g)?.is_resolving(w)
}

pub fn metric_dimension(g: &Graph) -> Result<Basis> {
    Resolver::new(g)?.metric_dimension()
}

pub fn enumerate_bases(g: &Graph, cap: usize) -> Result<ResolveReport> {
    if cap == 0 {
        return Err(Error::InvalidParameters("basis cap must be >= 1".into()));
    }
    let limits = Limits {
        basis_cap: cap,
        ..Limits::default()
    };
    Resolver::with_limits(g, limits)?.enumerate_bases()
}

pub fn upper_metric_dimension(g: &Graph) -> Result<usize> {
    Resolver::new(g)?.upper_metric_dimension()
}

pub fn attaching_dimension(g: &Graph, a: &[usize]) -> Result<Basis> {
    g.check_vertices(a)?;
    Resolver::new(g)?.attaching_dimension(a)
}

pub fn tau(g: &Graph, a: &[usize]) -> Result<usize> {
    g.check_vertices(a)?;
    Resolver::new(g)?.tau(a)
}

pub fn basis_membership(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Resolver::new(g)?.basis_membership(v)
}

pub fn isolation_index(g: &Graph) -> Result<usize> {
    Resolver::new(g)?.isolation_index()
}
