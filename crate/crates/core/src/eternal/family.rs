//! The greatest-fixed-point family of eternally defensible guard
//! configurations.
//!
//! Configurations are indexed by colex rank into a flat membership
//! bitmap. Starting from the dominating k-subsets, synchronous sweeps
//! delete every configuration with an undefendable attack until a sweep
//! deletes nothing. Each sweep reads only the previous bitmap and writes
//! disjoint words of the next one, so parallel execution is
//! observationally identical to the sequential sweep.

use super::combin::{self, Binom};
use super::EternalError;
use crate::bits;
use crate::graph::Graph;
use rayon::prelude::*;

/// Caps for the fixed-point solver. `rank_cap` bounds the number of
/// k-subset ranks (memory honesty), `sweep_cap` bounds deletion sweeps.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub rank_cap: u64,
    pub sweep_cap: u64,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            rank_cap: 1 << 28,
            sweep_cap: 1 << 20,
        }
    }
}

/// A k-subset of vertices holding the guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardConfig {
    verts: Vec<usize>,
}

impl GuardConfig {
    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn k(&self) -> usize {
        self.verts.len()
    }
}

/// The set of all eternally defensible k-configurations, stored as a
/// membership bitmap over colex ranks.
pub struct SafeFamily {
    n: usize,
    k: usize,
    ranks: u64,
    bitmap: Vec<u64>,
    count: u64,
    binom: Binom,
}

impl SafeFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Membership probe for a sorted configuration.
    pub fn contains(&self, verts: &[usize]) -> bool {
        if verts.len() != self.k || verts.iter().any(|&v| v >= self.n) {
            return false;
        }
        bits::test(&self.bitmap, combin::rank(&self.binom, verts) as usize)
    }

    /// Member configurations in ascending colex-rank order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let mut verts: Vec<usize> = (0..self.k).collect();
        let mut rank = 0u64;
        let mut started = false;
        std::iter::from_fn(move || {
            loop {
                if started {
                    if !combin::next_subset(&mut verts, self.n) {
                        return None;
                    }
                    rank += 1;
                } else {
                    if self.ranks == 0 {
                        return None;
                    }
                    started = true;
                }
                if bits::test(&self.bitmap, rank as usize) {
                    return Some(verts.clone());
                }
            }
        })
    }
}

impl std::fmt::Debug for SafeFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SafeFamily(n={}, k={}, count={}/{})",
            self.n, self.k, self.count, self.ranks
        )
    }
}

/// Result of the fixed-point computation: the family plus the number of
/// sweeps it took to stabilize (including the final fixpoint-confirming
/// sweep) and the size of the initial dominating family.
#[derive(Debug)]
pub struct FixedPointRun {
    pub family: SafeFamily,
    pub sweeps: u64,
    pub initial_count: u64,
}

fn check_args(g: &Graph, k: usize) -> Result<(), EternalError> {
    if k == 0 || k > g.n() {
        return Err(EternalError::BadGuardCount { k, n: g.n() });
    }
    Ok(())
}

/// Streams exactly the dominating k-subsets of `g`, in colex rank order.
pub fn dominating_configs(g: &Graph, k: usize) -> Result<DominatingConfigs<'_>, EternalError> {
    check_args(g, k)?;
    Ok(DominatingConfigs {
        g,
        verts: (0..k).collect(),
        exhausted: false,
        fresh: true,
    })
}

pub struct DominatingConfigs<'g> {
    g: &'g Graph,
    verts: Vec<usize>,
    exhausted: bool,
    fresh: bool,
}

impl Iterator for DominatingConfigs<'_> {
    type Item = GuardConfig;

    fn next(&mut self) -> Option<GuardConfig> {
        if self.exhausted {
            return None;
        }
        let words = self.g.words();
        let mut closed = vec![0u64; words];
        let mut full = vec![0u64; words];
        bits::fill_all(&mut full, self.g.n());
        loop {
            if self.fresh {
                self.fresh = false;
            } else if !combin::next_subset(&mut self.verts, self.g.n()) {
                self.exhausted = true;
                return None;
            }
            closed.iter_mut().for_each(|w| *w = 0);
            for &v in &self.verts {
                bits::set(&mut closed, v);
                for (acc, w) in closed.iter_mut().zip(self.g.row(v)) {
                    *acc |= w;
                }
            }
            if closed == full {
                return Some(GuardConfig {
                    verts: self.verts.clone(),
                });
            }
        }
    }
}

const CHUNK_WORDS: usize = 256;

struct SweepCtx<'g> {
    g: &'g Graph,
    k: usize,
    binom: Binom,
    ranks: u64,
    full: Vec<u64>,
}

impl SweepCtx<'_> {
    fn occupancy(&self, verts: &[usize], occ: &mut [u64]) {
        occ.iter_mut().for_each(|w| *w = 0);
        for &v in verts {
            bits::set(occ, v);
        }
    }

    fn is_dominating(&self, verts: &[usize], occ: &[u64], scratch: &mut [u64]) -> bool {
        scratch.copy_from_slice(occ);
        for &v in verts {
            for (acc, w) in scratch.iter_mut().zip(self.g.row(v)) {
                *acc |= w;
            }
        }
        scratch == &self.full[..]
    }

    /// One defended round: every unoccupied vertex admits a defender
    /// whose move lands in the previous family.
    fn survives(&self, verts: &[usize], occ: &[u64], prev: &[u64]) -> bool {
        let words = occ.len();
        for wi in 0..words {
            let mut attacks = self.full[wi] & !occ[wi];
            while attacks != 0 {
                let v = wi * 64 + attacks.trailing_zeros() as usize;
                attacks &= attacks - 1;
                let row = self.g.row(v);
                let mut defended = false;
                'defense: for wj in 0..words {
                    let mut defenders = row[wj] & occ[wj];
                    while defenders != 0 {
                        let u = wj * 64 + defenders.trailing_zeros() as usize;
                        defenders &= defenders - 1;
                        let succ = combin::rank_after_move(&self.binom, verts, u, v);
                        if bits::test(prev, succ as usize) {
                            defended = true;
                            break 'defense;
                        }
                    }
                }
                if !defended {
                    return false;
                }
            }
        }
        true
    }

    /// Runs `keep` over the ranks of one output chunk, writing the
    /// surviving bits. Pure function of `prev`, so chunks are
    /// independent and the result is thread-count independent.
    fn run_chunk(
        &self,
        chunk_idx: usize,
        out: &mut [u64],
        mut keep: impl FnMut(&Self, &[usize], &[u64], &mut [u64]) -> bool,
        prev: Option<&[u64]>,
    ) {
        let gwords = self.g.words();
        let start = (chunk_idx * CHUNK_WORDS * 64) as u64;
        if start >= self.ranks {
            out.iter_mut().for_each(|w| *w = 0);
            return;
        }
        let mut verts = vec![0usize; self.k];
        combin::unrank(&self.binom, start, self.g.n(), &mut verts);
        let mut occ = vec![0u64; gwords];
        let mut scratch = vec![0u64; gwords];
        let mut rank = start;
        let mut live = true;
        for word in out.iter_mut() {
            let mut acc = 0u64;
            for bit in 0..64 {
                if !live || rank >= self.ranks {
                    break;
                }
                let member = match prev {
                    Some(prev) => bits::test(prev, rank as usize),
                    None => true,
                };
                if member {
                    self.occupancy(&verts, &mut occ);
                    if keep(self, &verts, &occ, &mut scratch) {
                        acc |= 1u64 << bit;
                    }
                }
                rank += 1;
                if rank < self.ranks {
                    live = combin::next_subset(&mut verts, self.g.n());
                    debug_assert!(live);
                }
            }
            *word = acc;
        }
    }
}

/// Computes the greatest fixed point of eternally defensible
/// k-configurations by synchronous deletion sweeps.
pub fn safe_family(g: &Graph, k: usize, limits: &Limits) -> Result<FixedPointRun, EternalError> {
    check_args(g, k)?;
    let n = g.n();
    let binom = Binom::new(n, k);
    let ranks = binom.c(n, k);
    if ranks > limits.rank_cap {
        return Err(EternalError::RankCapExceeded {
            n,
            k,
            ranks,
            cap: limits.rank_cap,
        });
    }
    let words = (ranks as usize).div_ceil(64).max(1);
    let mut full = vec![0u64; g.words()];
    bits::fill_all(&mut full, n);
    let ctx = SweepCtx {
        g,
        k,
        binom,
        ranks,
        full,
    };

    // initial family: the dominating configurations
    let mut prev = vec![0u64; words];
    prev.par_chunks_mut(CHUNK_WORDS)
        .enumerate()
        .for_each(|(ci, out)| {
            ctx.run_chunk(ci, out, |c, verts, occ, scratch| c.is_dominating(verts, occ, scratch), None);
        });
    let initial_count = bits::count(&prev);

    let mut next = vec![0u64; words];
    let mut count = initial_count;
    let mut sweeps = 0u64;
    while count > 0 {
        if sweeps >= limits.sweep_cap {
            return Err(EternalError::SweepCapExceeded { cap: limits.sweep_cap });
        }
        {
            let prev_ref: &[u64] = &prev;
            next.par_chunks_mut(CHUNK_WORDS)
                .enumerate()
                .for_each(|(ci, out)| {
                    ctx.run_chunk(
                        ci,
                        out,
                        |c, verts, occ, _| c.survives(verts, occ, prev_ref),
                        Some(prev_ref),
                    );
                });
        }
        sweeps += 1;
        let new_count = bits::count(&next);
        std::mem::swap(&mut prev, &mut next);
        if new_count == count {
            break;
        }
        count = new_count;
    }

    Ok(FixedPointRun {
        family: SafeFamily {
            n,
            k,
            ranks,
            bitmap: prev,
            count,
            binom: ctx.binom,
        },
        sweeps,
        initial_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph, Graph};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn dominating_configs_examples() {
        let k3 = complete_graph(3).unwrap();
        let configs: Vec<_> = dominating_configs(&k3, 1).unwrap().collect();
        assert_eq!(configs.len(), 3);

        let p3 = path(3);
        let configs: Vec<_> = dominating_configs(&p3, 1).unwrap().collect();
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].verts(), &[1]);

        // C_5: exactly the 5 non-adjacent pairs dominate (brute-forced below)
        let c5 = cycle(5);
        let configs: Vec<_> = dominating_configs(&c5, 2).unwrap().collect();
        let mut brute = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                let dominated = (0..5).all(|x| {
                    x == u || x == v || c5.has_edge(x, u) || c5.has_edge(x, v)
                });
                if dominated {
                    brute.push(vec![u, v]);
                }
            }
        }
        assert_eq!(brute.len(), 5);
        let got: Vec<Vec<usize>> = configs.iter().map(|c| c.verts().to_vec()).collect();
        for b in &brute {
            assert!(got.contains(b));
        }
        assert_eq!(got.len(), 5);
    }

    #[test]
    fn dominating_configs_rejects_bad_k() {
        let k3 = complete_graph(3).unwrap();
        assert!(dominating_configs(&k3, 0).is_err());
        assert!(dominating_configs(&k3, 4).is_err());
    }

    #[test]
    fn safe_family_complete_graph() {
        let k4 = complete_graph(4).unwrap();
        let run = safe_family(&k4, 1, &Limits::default()).unwrap();
        assert_eq!(run.family.count(), 4);
        let members: Vec<_> = run.family.iter().collect();
        assert_eq!(members, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn safe_family_p3_empty() {
        // one guard is forced off the center and then loses
        let run = safe_family(&path(3), 1, &Limits::default()).unwrap();
        assert!(run.family.is_empty());
        assert_eq!(run.initial_count, 1);
    }

    #[test]
    fn safe_family_c5_two_guards_empty() {
        // adjacent pairs never dominate; spread pairs lose after one attack
        let run = safe_family(&cycle(5), 2, &Limits::default()).unwrap();
        assert!(run.family.is_empty());
        assert_eq!(run.initial_count, 5);
    }

    #[test]
    fn safe_family_c5_three_guards() {
        let run = safe_family(&cycle(5), 3, &Limits::default()).unwrap();
        assert!(!run.family.is_empty());
        for verts in run.family.iter() {
            assert!(run.family.contains(&verts));
        }
    }

    #[test]
    fn empty_graph_cannot_be_guarded_below_n() {
        let e3 = empty_graph(3).unwrap();
        let run = safe_family(&e3, 2, &Limits::default()).unwrap();
        assert_eq!(run.initial_count, 0);
        assert!(run.family.is_empty());
        let run = safe_family(&e3, 3, &Limits::default()).unwrap();
        assert_eq!(run.family.count(), 1);
    }

    #[test]
    fn rank_cap_is_honored() {
        let c5 = cycle(5);
        let tight = Limits { rank_cap: 4, sweep_cap: 1 << 20 };
        match safe_family(&c5, 3, &tight) {
            Err(EternalError::RankCapExceeded { ranks: 10, cap: 4, .. }) => {}
            other => panic!("expected rank cap error, got {other:?}"),
        }
    }
}
