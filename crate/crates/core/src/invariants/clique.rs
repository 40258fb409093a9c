//! Exhaustive maximum-clique search: branch and bound with greedy
//! coloring upper bounds on the candidate set (Tomita-style).

use crate::bits;
use crate::graph::{complement, Graph};

struct Search<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    cur: Vec<usize>,
}

impl Search<'_> {
    /// Greedy-colors the candidate set and returns `(vertex, bound)`
    /// pairs where `bound` is the color index + 1; iterating them in
    /// reverse gives the classic largest-bound-first branching order.
    fn color_order(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let words = self.g.words();
        let mut classes: Vec<Vec<u64>> = Vec::new();
        let mut out = Vec::new();
        for v in bits::BitIter::new(cand) {
            let row = self.g.row(v);
            let mut placed = false;
            for (c, class) in classes.iter_mut().enumerate() {
                if class.iter().zip(row).all(|(a, b)| a & b == 0) {
                    bits::set(class, v);
                    out.push((v, c + 1));
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut class = vec![0u64; words];
                bits::set(&mut class, v);
                classes.push(class);
                out.push((v, classes.len()));
            }
        }
        out.sort_by_key(|&(v, c)| (c, v));
        out
    }

    fn expand(&mut self, cand: &[u64]) {
        if bits::count(cand) == 0 {
            if self.cur.len() > self.best.len() {
                self.best = self.cur.clone();
            }
            return;
        }
        let order = self.color_order(cand);
        let mut cand = cand.to_vec();
        for &(v, bound) in order.iter().rev() {
            if self.cur.len() + bound <= self.best.len() {
                return;
            }
            let next: Vec<u64> = cand
                .iter()
                .zip(self.g.row(v))
                .map(|(a, b)| a & b)
                .collect();
            self.cur.push(v);
            self.expand(&next);
            self.cur.pop();
            // v is processed; drop it from the candidate set
            cand[v / 64] &= !(1u64 << (v % 64));
        }
    }
}

/// Maximum clique size ω(G) with a witness clique (sorted ascending).
/// Always exact; exponential worst case but fast at desk scale.
pub fn max_clique(g: &Graph) -> (usize, Vec<usize>) {
    if g.n() == 0 {
        return (0, Vec::new());
    }
    let mut all = vec![0u64; g.words()];
    bits::fill_all(&mut all, g.n());
    let mut search = Search {
        g,
        best: Vec::new(),
        cur: Vec::new(),
    };
    search.expand(&all);
    let mut witness = search.best;
    witness.sort_unstable();
    (witness.len(), witness)
}

/// Independence number α(G) = ω(complement(G)), with an independent-set
/// witness in `g`.
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    max_clique(&complement(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph, mycielskian, Graph};
    use crate::invariants::{is_clique, is_independent};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn clique_examples() {
        let (w, wit) = max_clique(&complete_graph(4).unwrap());
        assert_eq!(w, 4);
        assert_eq!(wit, vec![0, 1, 2, 3]);

        // Grötzsch graph is triangle-free
        let (grotzsch, _) = mycielskian(&cycle(5));
        let (w, wit) = max_clique(&grotzsch);
        assert_eq!(w, 2);
        assert!(is_clique(&grotzsch, &wit));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&empty_graph(5).unwrap()).0, 5);
        let c5 = cycle(5);
        let (a, wit) = independence_number(&c5);
        assert_eq!(a, 2);
        assert!(is_independent(&c5, &wit));
    }

    #[test]
    fn brute_force_agreement_small() {
        // every labeled graph on 5 vertices, clique via subset enumeration
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
            let mut brute = 0;
            for mask in 0u32..1 << 5 {
                let set: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
                if is_clique(&g, &set) {
                    brute = brute.max(set.len());
                }
            }
            let (w, wit) = max_clique(&g);
            assert_eq!(w, brute);
            assert!(is_clique(&g, &wit) && wit.len() == w);
        }
    }
}
