//! Colexicographic ranking of k-subsets.
//!
//! A subset {c₁ < c₂ < … < c_k} has rank Σᵢ C(cᵢ, i), which enumerates
//! all k-subsets of 0..n-1 as 0..C(n,k). Ranks index flat membership
//! bitmaps, so the fixed-point sweep gets O(1) membership probes with no
//! hashing nondeterminism.

/// Binomial coefficients C(i, j) for i ≤ n, j ≤ k, saturating at
/// `u64::MAX` so oversized instances compare correctly against caps.
pub(crate) struct Binom {
    cols: usize,
    table: Vec<u64>,
}

impl Binom {
    pub(crate) fn new(n: usize, k: usize) -> Binom {
        let cols = k + 1;
        let mut table = vec![0u64; (n + 1) * cols];
        for i in 0..=n {
            table[i * cols] = 1;
            for j in 1..=k.min(i) {
                let above = table[(i - 1) * cols + j];
                let diag = table[(i - 1) * cols + j - 1];
                table[i * cols + j] = above.saturating_add(diag);
            }
        }
        Binom { cols, table }
    }

    #[inline]
    pub(crate) fn c(&self, i: usize, j: usize) -> u64 {
        debug_assert!(j < self.cols);
        self.table[i * self.cols + j]
    }
}

/// Rank of the sorted subset `verts` in colex order.
pub(crate) fn rank(binom: &Binom, verts: &[usize]) -> u64 {
    verts
        .iter()
        .enumerate()
        .map(|(i, &c)| binom.c(c, i + 1))
        .sum()
}

/// Rank of `verts` with `out` replaced by `inn`, without materializing
/// the successor set. `out` must be a member, `inn` a non-member.
#[inline]
pub(crate) fn rank_after_move(binom: &Binom, verts: &[usize], out: usize, inn: usize) -> u64 {
    let mut r = 0u64;
    let mut pos = 1usize;
    let mut placed = false;
    for &c in verts {
        if c == out {
            continue;
        }
        if !placed && inn < c {
            r += binom.c(inn, pos);
            pos += 1;
            placed = true;
        }
        r += binom.c(c, pos);
        pos += 1;
    }
    if !placed {
        r += binom.c(inn, pos);
    }
    r
}

/// Writes the subset of the given rank into `out` (ascending).
pub(crate) fn unrank(binom: &Binom, mut r: u64, n: usize, out: &mut [usize]) {
    let k = out.len();
    let mut c = n;
    for i in (1..=k).rev() {
        loop {
            c -= 1;
            if binom.c(c, i) <= r {
                break;
            }
        }
        out[i - 1] = c;
        r -= binom.c(c, i);
        c += 1; // next search starts strictly below this value
    }
    debug_assert_eq!(r, 0);
}

/// Advances `verts` to its colex successor among subsets of 0..n-1.
/// Returns false at the last subset.
#[inline]
pub(crate) fn next_subset(verts: &mut [usize], n: usize) -> bool {
    let k = verts.len();
    for i in 0..k {
        let limit = if i + 1 < k { verts[i + 1] } else { n };
        if verts[i] + 1 < limit {
            verts[i] += 1;
            for (j, slot) in verts[..i].iter_mut().enumerate() {
                *slot = j;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        let b = Binom::new(30, 7);
        assert_eq!(b.c(0, 0), 1);
        assert_eq!(b.c(5, 2), 10);
        assert_eq!(b.c(30, 7), 2_035_800);
        assert_eq!(b.c(3, 3), 1);
        assert_eq!(b.c(2, 3), 0);
    }

    #[test]
    fn binomial_saturates() {
        let b = Binom::new(200, 100);
        assert_eq!(b.c(200, 100), u64::MAX);
        assert_eq!(b.c(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn enumeration_matches_rank() {
        let (n, k) = (8, 3);
        let b = Binom::new(n, k);
        let mut verts: Vec<usize> = (0..k).collect();
        let mut expected = 0u64;
        loop {
            assert_eq!(rank(&b, &verts), expected);
            let mut copy = vec![0usize; k];
            unrank(&b, expected, n, &mut copy);
            assert_eq!(copy, verts);
            expected += 1;
            if !next_subset(&mut verts, n) {
                break;
            }
        }
        assert_eq!(expected, b.c(n, k));
    }

    #[test]
    fn rank_after_move_matches_rank() {
        let (n, k) = (9, 4);
        let b = Binom::new(n, k);
        let mut verts: Vec<usize> = (0..k).collect();
        loop {
            for out in verts.clone() {
                for inn in 0..n {
                    if verts.contains(&inn) {
                        continue;
                    }
                    let mut moved: Vec<usize> =
                        verts.iter().copied().filter(|&v| v != out).collect();
                    moved.push(inn);
                    moved.sort_unstable();
                    assert_eq!(
                        rank_after_move(&b, &verts, out, inn),
                        rank(&b, &moved),
                        "verts {verts:?} out {out} inn {inn}"
                    );
                }
            }
            if !next_subset(&mut verts, n) {
                break;
            }
        }
    }
}
