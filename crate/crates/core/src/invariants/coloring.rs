//! Exact chromatic number via iterated k-colorability decisions:
//! backtracking with a maximum clique pre-colored, DSATUR-style dynamic
//! vertex selection, and color-symmetry breaking (a vertex may open at
//! most one fresh color). Node-budgeted; exceeding the budget is an
//! error, never a wrong answer.

use super::{max_clique, Budget, BudgetExceeded};
use crate::graph::Graph;

/// A proper coloring witness with colors `0..color_count-1`, canonical
/// in the sense that colors are numbered by first occurrence along the
/// vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn color_count(&self) -> usize {
        self.colors.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Color classes as sorted vertex lists, ordered by color index.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.color_count()];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    fn canonicalize(&mut self) {
        let mut relabel = vec![usize::MAX; self.colors.len().max(self.color_count())];
        let mut next = 0;
        for c in self.colors.iter_mut() {
            if relabel[*c] == usize::MAX {
                relabel[*c] = next;
                next += 1;
            }
            *c = relabel[*c];
        }
    }

    /// Witness text form: `chi k` header, then one `vertex color` line
    /// per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("chi {}\n", self.color_count());
        for (v, c) in self.colors.iter().enumerate() {
            out.push_str(&format!("{v} {c}\n"));
        }
        out
    }
}

struct ColorSearch<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    // one bit row per color, marking the vertices that carry it
    class_rows: Vec<Vec<u64>>,
    used: usize,
    uncolored: usize,
}

const UNCOLORED: usize = usize::MAX;

impl ColorSearch<'_> {
    fn saturation(&self, v: usize) -> usize {
        let row = self.g.row(v);
        self.class_rows[..self.used]
            .iter()
            .filter(|class| class.iter().zip(row).any(|(a, b)| a & b != 0))
            .count()
    }

    /// Next vertex to color: maximum saturation, then maximum degree,
    /// then lowest index. Deterministic.
    fn select(&self) -> usize {
        let mut best = UNCOLORED;
        let mut best_key = (0usize, 0usize);
        for v in 0..self.g.n() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let key = (self.saturation(v), self.g.degree(v));
            if best == UNCOLORED || key > best_key {
                best = v;
                best_key = key;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        crate::bits::set(&mut self.class_rows[c], v);
        self.used = self.used.max(c + 1);
        self.uncolored -= 1;
    }

    fn unassign(&mut self, v: usize, c: usize, used_before: usize) {
        self.colors[v] = UNCOLORED;
        self.class_rows[c][v / 64] &= !(1u64 << (v % 64));
        self.used = used_before;
        self.uncolored += 1;
    }

    fn solve(&mut self, budget: &mut Budget) -> Result<bool, BudgetExceeded> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        let v = self.select();
        let row = self.g.row(v);
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.class_rows[c].iter().zip(row).any(|(a, b)| a & b != 0) {
                continue;
            }
            budget.charge(1)?;
            let used_before = self.used;
            self.assign(v, c);
            if self.solve(budget)? {
                return Ok(true);
            }
            self.unassign(v, c, used_before);
        }
        Ok(false)
    }
}

/// Decides whether `g` is properly `k`-colorable; returns a canonical
/// witness on success.
pub fn k_colorable(
    g: &Graph,
    k: usize,
    budget: &mut Budget,
) -> Result<Option<Coloring>, BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring { colors: Vec::new() }));
    }
    if k == 0 {
        return Ok(None);
    }
    let (omega, clique) = max_clique(g);
    if omega > k {
        return Ok(None);
    }
    let words = g.words();
    let mut search = ColorSearch {
        g,
        k,
        colors: vec![UNCOLORED; n],
        class_rows: vec![vec![0u64; words]; k],
        used: 0,
        uncolored: n,
    };
    // seed: pre-color a maximum clique, ascending vertex order
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    if search.solve(budget)? {
        let mut coloring = Coloring { colors: search.colors };
        coloring.canonicalize();
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

/// Exact χ(G): iterates k upward from ω(G) until a coloring exists.
pub fn chromatic_number(
    g: &Graph,
    budget: &mut Budget,
) -> Result<(usize, Coloring), BudgetExceeded> {
    if g.n() == 0 {
        return Ok((0, Coloring { colors: Vec::new() }));
    }
    let (omega, _) = max_clique(g);
    for k in omega.max(1)..=g.n() {
        if let Some(coloring) = k_colorable(g, k, budget)? {
            return Ok((k, coloring));
        }
    }
    unreachable!("every graph is n-colorable")
}

/// Decides vertex-criticality: χ(G−v) < χ(G) for every vertex. On
/// failure reports a vertex whose deletion preserves χ.
pub fn is_vertex_critical(
    g: &Graph,
    budget: &mut Budget,
) -> Result<(bool, Option<usize>), BudgetExceeded> {
    let (chi, _) = chromatic_number(g, budget)?;
    for v in 0..g.n() {
        let reduced = g.delete_vertices(&[v]);
        // enough to decide (chi-1)-colorability: deletion cannot raise χ
        if k_colorable(&reduced, chi - 1, budget)?.is_none() {
            return Ok((false, Some(v)));
        }
    }
    Ok((true, None))
}
