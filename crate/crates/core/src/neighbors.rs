//! Deterministic nearest-neighbor queries over a point cloud.
//!
//! Points are sorted by their first coordinate once; each query scans
//! outward from the query point's rank and prunes candidates whose
//! first-coordinate gap already exceeds the best distance found. On
//! embedded attractors (low intrinsic dimension, spread along the first
//! coordinate) this is close to O(log n) per query and never worse than
//! a full scan.

/// Index over `n` points of dimension `dim` stored row-major in `data`.
pub(crate) struct NeighborIndex<'a> {
    data: &'a [f64],
    dim: usize,
    n: usize,
    /// Point indices sorted by (first coordinate, index).
    order: Vec<u32>,
    /// rank[i] = position of point i in `order`.
    rank: Vec<u32>,
}

impl<'a> NeighborIndex<'a> {
    pub fn new(data: &'a [f64], dim: usize) -> Self {
        assert!(dim >= 1 && data.len() % dim == 0);
        let n = data.len() / dim;
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by(|&a, &b| {
            let va = data[a as usize * dim];
            let vb = data[b as usize * dim];
            va.total_cmp(&vb).then(a.cmp(&b))
        });
        let mut rank = vec![0u32; n];
        for (pos, &i) in order.iter().enumerate() {
            rank[i as usize] = pos as u32;
        }
        Self {
            data,
            dim,
            n,
            order,
            rank,
        }
    }

    #[inline]
    fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    #[inline]
    fn dist2(&self, i: usize, j: usize) -> f64 {
        let a = self.point(i);
        let b = self.point(j);
        let mut s = 0.0;
        for k in 0..self.dim {
            let d = a[k] - b[k];
            s += d * d;
        }
        s
    }

    /// Nearest neighbor of point `i` among points `j` with |i - j| >= min_sep,
    /// as `(index, squared distance)`. Exact ties are broken toward the lowest
    /// index. Returns `None` when no candidate satisfies the separation.
    pub fn nearest(&self, i: usize, min_sep: usize) -> Option<(usize, f64)> {
        let min_sep = min_sep.max(1);
        let xi = self.data[i * self.dim];
        let r = self.rank[i] as usize;
        let mut best_d2 = f64::INFINITY;
        let mut best_j = usize::MAX;

        // Scan left of the query rank, then right; each side stops once the
        // first-coordinate gap alone rules out any improvement.
        let mut consider = |j: usize, best_d2: &mut f64, best_j: &mut usize| {
            if i.abs_diff(j) < min_sep {
                return;
            }
            let d2 = self.dist2(i, j);
            if d2 < *best_d2 || (d2 == *best_d2 && j < *best_j) {
                *best_d2 = d2;
                *best_j = j;
            }
        };

        let mut l = r;
        while l > 0 {
            l -= 1;
            let j = self.order[l] as usize;
            let dx = xi - self.data[j * self.dim];
            if dx * dx > best_d2 {
                break;
            }
            consider(j, &mut best_d2, &mut best_j);
        }
        let mut rr = r + 1;
        while rr < self.n {
            let j = self.order[rr] as usize;
            let dx = self.data[j * self.dim] - xi;
            if dx * dx > best_d2 {
                break;
            }
            consider(j, &mut best_d2, &mut best_j);
            rr += 1;
        }

        if best_j == usize::MAX {
            None
        } else {
            Some((best_j, best_d2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(data: &[f64], dim: usize, i: usize, min_sep: usize) -> Option<(usize, f64)> {
        let n = data.len() / dim;
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if i.abs_diff(j) < min_sep.max(1) {
                continue;
            }
            let d2: f64 = (0..dim)
                .map(|k| {
                    let d = data[i * dim + k] - data[j * dim + k];
                    d * d
                })
                .sum();
            best = match best {
                None => Some((j, d2)),
                Some((bj, bd)) if d2 < bd || (d2 == bd && j < bj) => Some((j, d2)),
                other => other,
            };
        }
        best
    }

    #[test]
    fn matches_brute_force() {
        let mut state = 0.37_f64;
        let mut data = Vec::new();
        for _ in 0..600 {
            state = 3.97 * state * (1.0 - state);
            data.push(state);
            data.push(1.0 - 2.0 * state);
        }
        let idx = NeighborIndex::new(&data, 2);
        for i in 0..300 {
            for min_sep in [1, 3, 10] {
                assert_eq!(idx.nearest(i, min_sep), brute(&data, 2, i, min_sep));
            }
        }
    }

    #[test]
    fn duplicate_points_tie_break_to_lowest_index() {
        // Three identical points plus one far away.
        let data = [1.0, 1.0, 1.0, 9.0];
        let idx = NeighborIndex::new(&data, 1);
        assert_eq!(idx.nearest(2, 1), Some((0, 0.0)));
        assert_eq!(idx.nearest(1, 1), Some((0, 0.0)));
    }

    #[test]
    fn separation_excludes_all() {
        let data = [0.0, 1.0, 2.0];
        let idx = NeighborIndex::new(&data, 1);
        assert_eq!(idx.nearest(1, 5), None);
    }
}
