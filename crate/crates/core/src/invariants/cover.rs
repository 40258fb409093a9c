//! Clique covers through complement coloring. Witnesses are always
//! partitions: the color classes of a proper coloring of the complement
//! are cliques partitioning V(G), and any cover refines to a partition
//! of the same size, so nothing is lost.

use super::{chromatic_number, is_clique, Budget, BudgetExceeded};
use crate::graph::{complement, Graph};

/// A partition of V(G) into cliques. Blocks are sorted internally and
/// ordered by their smallest vertex, so equal covers have equal text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    pub blocks: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub(crate) fn new(mut blocks: Vec<Vec<usize>>) -> CliqueCover {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        CliqueCover { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn singleton_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    /// True iff the blocks are cliques of `g` partitioning its vertex set.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        let mut total = 0;
        for block in &self.blocks {
            if block.is_empty() || !is_clique(g, block) {
                return false;
            }
            for &v in block {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
                total += 1;
            }
        }
        total == g.n()
    }

    /// Witness text form: `theta k` header, then one block per line as
    /// sorted vertex indices.
    pub fn to_text(&self) -> String {
        let mut out = format!("theta {}\n", self.blocks.len());
        for block in &self.blocks {
            let line: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Exact θ(G) = χ(complement(G)), with the complement coloring's color
/// classes as the cover witness.
pub fn clique_cover_number(
    g: &Graph,
    budget: &mut Budget,
) -> Result<(usize, CliqueCover), BudgetExceeded> {
    if g.n() == 0 {
        return Ok((0, CliqueCover { blocks: Vec::new() }));
    }
    let (theta, coloring) = chromatic_number(&complement(g), budget)?;
    let cover = CliqueCover::new(coloring.classes());
    debug_assert!(cover.is_valid(g));
    Ok((theta, cover))
}

fn theta_only(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    if g.n() == 0 {
        return Ok(0);
    }
    Ok(chromatic_number(&complement(g), budget)?.0)
}

/// Runs `f` on every `size`-subset of `items`, stopping early when `f`
/// returns `Some`.
fn first_combination<T>(
    items: &[usize],
    size: usize,
    f: &mut impl FnMut(&[usize]) -> Result<Option<T>, BudgetExceeded>,
) -> Result<Option<T>, BudgetExceeded> {
    if size > items.len() {
        return Ok(None);
    }
    fn rec<T>(
        items: &[usize],
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Result<Option<T>, BudgetExceeded>,
    ) -> Result<Option<T>, BudgetExceeded> {
        if cur.len() == size {
            return f(cur);
        }
        let need = size - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            cur.push(items[i]);
            if let Some(hit) = rec(items, size, i + 1, cur, f)? {
                cur.pop();
                return Ok(Some(hit));
            }
            cur.pop();
        }
        Ok(None)
    }
    rec(items, size, 0, &mut Vec::with_capacity(size), f)
}

/// The singleton parameter of the prism cover identity: the maximum
/// number of size-1 blocks over all minimum clique covers, together with
/// a minimum cover realizing it.
///
/// Uses the deletion characterization: a vertex set `D` is exactly the
/// singleton-eligible part of some minimum cover iff
/// `θ(G − D) = θ(G) − |D|`, and every `v ∈ D` must individually satisfy
/// `θ(G − v) = θ(G) − 1`. The search descends from the largest feasible
/// `|D|`, so the first hit is the maximum.
pub fn max_singletons_q(
    g: &Graph,
    budget: &mut Budget,
) -> Result<(usize, CliqueCover), BudgetExceeded> {
    let (theta, base_cover) = clique_cover_number(g, budget)?;
    let mut candidates = Vec::new();
    for v in 0..g.n() {
        if theta_only(&g.delete_vertices(&[v]), budget)? == theta - 1 {
            candidates.push(v);
        }
    }
    let max_size = candidates.len().min(theta);
    for size in (1..=max_size).rev() {
        let hit = first_combination(&candidates, size, &mut |d: &[usize]| {
            let rest = g.delete_vertices(d);
            if theta_only(&rest, budget)? != theta - size {
                return Ok(None);
            }
            // rebuild a full cover: singletons for D, a minimum cover of G - D
            let keep: Vec<usize> = (0..g.n()).filter(|v| !d.contains(v)).collect();
            let (_, sub_cover) = clique_cover_number(&rest, budget)?;
            let mut blocks: Vec<Vec<usize>> =
                d.iter().map(|&v| vec![v]).collect();
            for block in sub_cover.blocks {
                blocks.push(block.into_iter().map(|v| keep[v]).collect());
            }
            Ok(Some(CliqueCover::new(blocks)))
        })?;
        if let Some(cover) = hit {
            debug_assert!(cover.is_valid(g) && cover.len() == theta);
            return Ok((size, cover));
        }
    }
    Ok((0, base_cover))
}

/// A minimum clique cover in which `w`'s block is exactly `{w}`, when
/// one exists. Nonexistence is a result, not an error.
pub fn min_cover_isolating(
    g: &Graph,
    w: usize,
    budget: &mut Budget,
) -> Result<Option<CliqueCover>, BudgetExceeded> {
    assert!(w < g.n(), "vertex {w} out of range");
    let theta = theta_only(g, budget)?;
    let rest = g.delete_vertices(&[w]);
    if theta_only(&rest, budget)? != theta - 1 {
        return Ok(None);
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| v != w).collect();
    let (_, sub_cover) = clique_cover_number(&rest, budget)?;
    let mut blocks = vec![vec![w]];
    for block in sub_cover.blocks {
        blocks.push(block.into_iter().map(|v| keep[v]).collect());
    }
    let cover = CliqueCover::new(blocks);
    debug_assert!(cover.is_valid(g) && cover.len() == theta);
    Ok(Some(cover))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph, mycielskian, Graph};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cover_examples() {
        let mut b = Budget::unlimited();
        let (theta, cover) = clique_cover_number(&empty_graph(4).unwrap(), &mut b).unwrap();
        assert_eq!(theta, 4);
        assert_eq!(cover.singleton_count(), 4);

        // H = complement(Grötzsch): theta = 4
        let (grotzsch, _) = mycielskian(&cycle(5));
        let h = crate::graph::complement(&grotzsch);
        let (theta, cover) = clique_cover_number(&h, &mut b).unwrap();
        assert_eq!(theta, 4);
        assert!(cover.is_valid(&h));
    }

    #[test]
    fn q_examples() {
        let mut b = Budget::unlimited();
        let (q, cover) = max_singletons_q(&empty_graph(3).unwrap(), &mut b).unwrap();
        assert_eq!(q, 3);
        assert_eq!(cover.singleton_count(), 3);

        let (q, cover) = max_singletons_q(&complete_graph(2).unwrap(), &mut b).unwrap();
        assert_eq!(q, 0);
        assert_eq!(cover.len(), 1);

        // C_5: theta = 3, some minimum cover has one singleton
        let (q, cover) = max_singletons_q(&cycle(5), &mut b).unwrap();
        assert_eq!(q, 1);
        assert_eq!(cover.singleton_count(), 1);
        assert_eq!(cover.len(), 3);
    }

    #[test]
    fn q_matches_direct_cover_enumeration() {
        // oracle: enumerate every partition of V into cliques, take the
        // minimum size, then the maximum singleton count at that size
        fn brute_q(g: &Graph) -> (usize, usize) {
            fn rec(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut Vec<(usize, usize)>) {
                if v == g.n() {
                    let singles = blocks.iter().filter(|b| b.len() == 1).count();
                    best.push((blocks.len(), singles));
                    return;
                }
                for i in 0..blocks.len() {
                    if blocks[i].iter().all(|&u| g.has_edge(u, v)) {
                        blocks[i].push(v);
                        rec(g, v + 1, blocks, best);
                        blocks[i].pop();
                    }
                }
                blocks.push(vec![v]);
                rec(g, v + 1, blocks, best);
                blocks.pop();
            }
            let mut outcomes = Vec::new();
            rec(g, 0, &mut Vec::new(), &mut outcomes);
            let theta = outcomes.iter().map(|&(t, _)| t).min().unwrap();
            let q = outcomes
                .iter()
                .filter(|&&(t, _)| t == theta)
                .map(|&(_, s)| s)
                .max()
                .unwrap();
            (theta, q)
        }

        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .collect();
        for code in 0u32..1 << 10 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, edges).unwrap();
            let (theta_brute, q_brute) = brute_q(&g);
            let mut b = Budget::unlimited();
            let (theta, _) = clique_cover_number(&g, &mut b).unwrap();
            let (q, cover) = max_singletons_q(&g, &mut b).unwrap();
            assert_eq!(theta, theta_brute, "theta mismatch for code {code}");
            assert_eq!(q, q_brute, "q mismatch for code {code}");
            assert_eq!(cover.singleton_count(), q);
            assert_eq!(cover.len(), theta);
            assert!(cover.is_valid(&g));
        }
    }

    #[test]
    fn isolating_cover_examples() {
        let mut b = Budget::unlimited();
        let e2 = empty_graph(2).unwrap();
        let cover = min_cover_isolating(&e2, 0, &mut b).unwrap().unwrap();
        assert_eq!(cover.blocks, vec![vec![0], vec![1]]);

        let k2 = complete_graph(2).unwrap();
        assert!(min_cover_isolating(&k2, 0, &mut b).unwrap().is_none());

        // every vertex of H = complement(Grötzsch) admits a singleton cover
        let (grotzsch, _) = mycielskian(&cycle(5));
        let h = crate::graph::complement(&grotzsch);
        for w in 0..h.n() {
            let cover = min_cover_isolating(&h, w, &mut b).unwrap().unwrap();
            assert_eq!(cover.len(), 4);
            assert!(cover.blocks.contains(&vec![w]));
            assert!(cover.is_valid(&h));
        }
    }
}
