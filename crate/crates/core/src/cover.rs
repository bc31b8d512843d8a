//! Exact minimum set cover over at most 64 candidate sets.
//!
//! Candidates are identified by index `0..64` and chosen sets are `u64`
//! masks. The universe is an arbitrary-length bitset. Both metric dimension
//! (universe = vertex pairs, candidates = vertices) and domination
//! (universe = vertices, candidates = closed neighbourhoods) reduce to this.

use std::cmp::Ordering;

/// Fixed-length bitset over the universe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct BitSet {
    words: Box<[u64]>,
}

impl BitSet {
    pub fn zeros(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut s = Self::zeros(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[cfg(test)]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self \ other`
    pub fn minus(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }
}

/// Iterates set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

pub(crate) fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn mask_to_vec(m: u64) -> Vec<usize> {
    BitIter(m).collect()
}

/// Mask of every candidate strictly above `v`.
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// Compares two equal-size masks as sorted vertex lists.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    mask_to_vec(a).cmp(&mask_to_vec(b))
}

/// A set cover instance.
pub(crate) struct SetCover {
    universe: usize,
    /// Elements covered by each candidate.
    sets: Vec<BitSet>,
    /// Candidates covering each element.
    coverers: Vec<u64>,
}

impl SetCover {
    pub fn new(universe: usize, sets: Vec<BitSet>) -> Self {
        assert!(sets.len() <= 64, "at most 64 candidates");
        let mut coverers = vec![0u64; universe];
        for (c, s) in sets.iter().enumerate() {
            for e in s.iter() {
                coverers[e] |= 1 << c;
            }
        }
        SetCover {
            universe,
            sets,
            coverers,
        }
    }

    #[cfg(test)]
    pub fn candidates(&self) -> usize {
        self.sets.len()
    }

    pub fn all(&self) -> u64 {
        match self.sets.len() {
            64 => !0,
            k => (1u64 << k) - 1,
        }
    }

    pub fn set(&self, c: usize) -> &BitSet {
        &self.sets[c]
    }

    /// Elements left uncovered by `chosen`.
    pub fn uncovered(&self, chosen: u64) -> BitSet {
        let mut u = BitSet::ones(self.universe);
        for c in BitIter(chosen) {
            u.subtract(&self.sets[c]);
        }
        u
    }

    pub fn covers(&self, chosen: u64) -> bool {
        self.uncovered(chosen).is_empty()
    }

    /// Lower bound on the number of further candidates from `allowed`
    /// needed for `uncovered`: a greedy packing of elements whose coverer
    /// sets are pairwise disjoint. `None` when some element is uncoverable.
    fn lower_bound(&self, uncovered: &BitSet, allowed: u64) -> Option<usize> {
        let mut used = 0u64;
        let mut lb = 0;
        for e in uncovered.iter() {
            let c = self.coverers[e] & allowed;
            if c == 0 {
                return None;
            }
            if c & used == 0 {
                used |= c;
                lb += 1;
            }
        }
        Some(lb)
    }

    fn greedy(&self, forced: u64, allowed: u64) -> Option<u64> {
        let mut uncovered = self.uncovered(forced);
        let mut chosen = 0u64;
        let mut pool = allowed;
        while !uncovered.is_empty() {
            let mut best: Option<(usize, usize)> = None;
            for c in BitIter(pool) {
                let gain = self.sets[c]
                    .iter()
                    .filter(|&e| uncovered.contains(e))
                    .count();
                if gain > 0 && best.is_none_or(|(g, _)| gain > g) {
                    best = Some((gain, c));
                }
            }
            let (_, c) = best?;
            chosen |= 1 << c;
            pool &= !(1 << c);
            uncovered.subtract(&self.sets[c]);
        }
        Some(chosen)
    }

    /// Minimum `T ⊆ allowed` such that `forced ∪ T` covers the universe.
    pub fn minimum(&self, forced: u64, allowed: u64) -> Option<u64> {
        let allowed = allowed & !forced;
        let start = self.greedy(forced, allowed)?;
        let mut best = Best {
            size: start.count_ones() as usize,
            set: start,
            found: true,
            stop_at_first: false,
        };
        let uncovered = self.uncovered(forced);
        self.branch(&uncovered, allowed, 0, &mut best);
        Some(best.set)
    }

    /// Some `T ⊆ allowed` with `|T| <= budget` such that `forced ∪ T`
    /// covers the universe.
    pub fn within(&self, forced: u64, allowed: u64, budget: usize) -> Option<u64> {
        let allowed = allowed & !forced;
        let uncovered = self.uncovered(forced);
        if uncovered.is_empty() {
            return Some(0);
        }
        if let Some(g) = self.greedy(forced, allowed) {
            if g.count_ones() as usize <= budget {
                return Some(g);
            }
        }
        let mut best = Best {
            size: budget + 1,
            set: 0,
            found: false,
            stop_at_first: true,
        };
        self.branch(&uncovered, allowed, 0, &mut best);
        best.found.then_some(best.set)
    }

    fn branch(&self, uncovered: &BitSet, allowed: u64, chosen: u64, best: &mut Best) {
        let count = chosen.count_ones() as usize;
        if uncovered.is_empty() {
            if count < best.size {
                best.size = count;
                best.set = chosen;
                best.found = true;
            }
            return;
        }
        let Some(lb) = self.lower_bound(uncovered, allowed) else {
            return;
        };
        if count + lb.max(1) >= best.size {
            return;
        }
        // branch on the element with the fewest remaining coverers
        let mut pick = 0u64;
        let mut fewest = u32::MAX;
        for e in uncovered.iter() {
            let c = self.coverers[e] & allowed;
            let k = c.count_ones();
            if k < fewest {
                fewest = k;
                pick = c;
                if k <= 1 {
                    break;
                }
            }
        }
        let mut pool = allowed;
        for c in BitIter(pick) {
            pool &= !(1 << c);
            let next = uncovered.minus(&self.sets[c]);
            self.branch(&next, pool, chosen | 1 << c, best);
            if best.stop_at_first && best.found {
                return;
            }
        }
    }

    /// Lexicographically least `T ⊆ allowed` of exactly `size` candidates
    /// such that `forced ∪ T` covers, assuming no smaller one exists.
    pub fn lex_least(&self, forced: u64, allowed: u64, size: usize) -> Option<u64> {
        let allowed = allowed & !forced;
        self.within(forced, allowed, size)?;
        let mut chosen = 0u64;
        let mut remaining = size;
        for c in BitIter(allowed) {
            if remaining == 0 {
                break;
            }
            let rest = allowed & above(c);
            if self
                .within(forced | chosen | 1 << c, rest, remaining - 1)
                .is_some()
            {
                chosen |= 1 << c;
                remaining -= 1;
            }
        }
        self.covers(forced | chosen).then_some(chosen)
    }

    /// Every cover `T ⊆ allowed` with exactly `size` candidates, in
    /// lexicographic order, stopping after `cap` results. Returns the list
    /// and whether it was truncated. Only covers that contain no smaller
    /// cover are minimal; callers pass the minimum size.
    pub fn enumerate(&self, allowed: u64, size: usize, cap: usize) -> (Vec<u64>, bool) {
        let mut out = Vec::new();
        let uncovered = BitSet::ones(self.universe);
        let truncated = !self.enumerate_from(&uncovered, allowed, 0, size, cap, &mut out);
        (out, truncated)
    }

    /// Returns false once `cap` is exceeded.
    fn enumerate_from(
        &self,
        uncovered: &BitSet,
        allowed: u64,
        chosen: u64,
        remaining: usize,
        cap: usize,
        out: &mut Vec<u64>,
    ) -> bool {
        if remaining == 0 {
            if uncovered.is_empty() {
                if out.len() == cap {
                    return false;
                }
                out.push(chosen);
            }
            return true;
        }
        match self.lower_bound(uncovered, allowed) {
            Some(lb) if lb <= remaining => {}
            _ => return true,
        }
        for c in BitIter(allowed) {
            if (allowed & above(c)).count_ones() + 1 < remaining as u32 {
                break;
            }
            let next = uncovered.minus(&self.sets[c]);
            if !self.enumerate_from(
                &next,
                allowed & above(c),
                chosen | 1 << c,
                remaining - 1,
                cap,
                out,
            ) {
                return false;
            }
        }
        true
    }
}

struct Best {
    size: usize,
    set: u64,
    found: bool,
    stop_at_first: bool,
}
