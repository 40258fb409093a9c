//! Test-only game oracles, independent of the library's solver
//! internals: no colex ranks, no synchronous sweeps, plain bitmask
//! states.

use guardcover::Graph;
use std::collections::HashSet;

/// Adjacency masks for oracle use; n must fit a machine word.
pub fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |acc, u| acc | 1 << u))
        .collect()
}

fn dominates(c: u64, adj: &[u64], full: u64) -> bool {
    let mut closed = c;
    let mut bits = c;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        closed |= adj[v];
    }
    closed == full
}

/// Exhaustive backward-induction decision of eternal k-guardability.
///
/// Solves the attack/defense game over all k-subsets (as mask-indexed
/// states): a state is attacker-won iff some attack on an unoccupied
/// vertex leaves every one-edge defense in an attacker-won state
/// (undefendable attacks included). Iterates to the least fixed point,
/// then asks whether any dominating state survives.
pub fn oracle_guardable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    assert!((1..=n).contains(&k) && n <= 20);
    let adj = adjacency_masks(g);
    let full: u64 = (1 << n) - 1;
    let size = 1usize << n;
    let mut win = vec![false; size];
    let states: Vec<u64> = (0..size as u64)
        .filter(|c| c.count_ones() as usize == k)
        .collect();
    loop {
        let mut changed = false;
        for &c in &states {
            if win[c as usize] {
                continue;
            }
            let mut attacks = full & !c;
            'attack: while attacks != 0 {
                let v = attacks.trailing_zeros() as usize;
                attacks &= attacks - 1;
                let mut defenders = adj[v] & c;
                if defenders == 0 {
                    win[c as usize] = true;
                    changed = true;
                    break 'attack;
                }
                while defenders != 0 {
                    let u = defenders.trailing_zeros() as usize;
                    defenders &= defenders - 1;
                    let succ = (c ^ (1 << u)) | (1 << v);
                    if !win[succ as usize] {
                        continue 'attack;
                    }
                }
                win[c as usize] = true;
                changed = true;
                break 'attack;
            }
        }
        if !changed {
            break;
        }
    }
    states
        .iter()
        .any(|&c| !win[c as usize] && dominates(c, &adj, full))
}

/// Recursive game-tree decision of eternal k-guardability, with
/// memoization of attacker wins.
///
/// The attacker wins from a configuration iff some attack leaves every
/// one-edge defense losing; a defense that revisits a configuration on
/// the current line lets the guards repeat forever, so that line
/// survives. Attacker wins are certified by finite forcing trees and are
/// safe to memoize; survivals depend on the line and are not. Worst-case
/// exponential, so only used on very small graphs to cross-validate
/// [`oracle_guardable`].
pub fn oracle_guardable_dfs(g: &Graph, k: usize) -> bool {
    let n = g.n();
    assert!((1..=n).contains(&k) && n <= 16);
    let adj = adjacency_masks(g);
    let full: u64 = (1 << n) - 1;

    fn attacker_wins(
        c: u64,
        adj: &[u64],
        full: u64,
        path: &mut Vec<u64>,
        known_wins: &mut HashSet<u64>,
    ) -> bool {
        if known_wins.contains(&c) {
            return true;
        }
        let mut attacks = full & !c;
        while attacks != 0 {
            let v = attacks.trailing_zeros() as usize;
            attacks &= attacks - 1;
            let mut defenders = adj[v] & c;
            let mut all_defenses_lose = true;
            while defenders != 0 {
                let u = defenders.trailing_zeros() as usize;
                defenders &= defenders - 1;
                let succ = (c ^ (1 << u)) | (1 << v);
                if path.contains(&succ) {
                    all_defenses_lose = false;
                    break;
                }
                path.push(succ);
                let lost = attacker_wins(succ, adj, full, path, known_wins);
                path.pop();
                if !lost {
                    all_defenses_lose = false;
                    break;
                }
            }
            if all_defenses_lose {
                known_wins.insert(c);
                return true;
            }
        }
        false
    }

    let mut known_wins = HashSet::new();
    for c in 0u64..1 << n {
        if c.count_ones() as usize != k || !dominates(c, &adj, full) {
            continue;
        }
        let mut path = vec![c];
        if !attacker_wins(c, &adj, full, &mut path, &mut known_wins) {
            return true;
        }
    }
    false
}

/// Brute-force maximum independent set size by subset enumeration.
pub fn oracle_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj = adjacency_masks(g);
    let mut best = 0;
    for mask in 0u64..1 << n {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let mut ok = true;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if adj[v] & mask != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = mask.count_ones() as usize;
        }
    }
    best
}
