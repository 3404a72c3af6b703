//! Depth-first enumeration of lattice points in a ball (Fincke-Pohst).
//!
//! Works over any real basis. The bound used for pruning carries a relative
//! slack of `1e-9`, so callers that need exact answers re-check leaves with
//! exact arithmetic.

use super::gso::GsoData;

const SLACK: f64 = 1e-9;

/// What the visitor wants next.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Visit {
    Continue,
    /// Continue with a smaller squared radius.
    Shrink(f64),
    Stop,
}

/// Calls `visit(x, dist_sq)` for every integer `x` with `||B x - center||^2 <= radius_sq`
/// (up to slack). Returns the number of tree nodes explored.
pub fn for_each_in_ball<F>(gso: &GsoData, center: &[f64], radius_sq: f64, mut visit: F) -> u64
where
    F: FnMut(&[i64], f64) -> Visit,
{
    let n = gso.n();
    let gamma = gso.project(center);
    let mut state = Search {
        gso,
        gamma,
        x: vec![0i64; n],
        bound: radius_sq,
        nodes: 0,
        stopped: false,
    };
    if n > 0 {
        state.descend(n - 1, 0.0, &mut visit);
    }
    state.nodes
}

struct Search<'a> {
    gso: &'a GsoData,
    gamma: Vec<f64>,
    x: Vec<i64>,
    bound: f64,
    nodes: u64,
    stopped: bool,
}

impl Search<'_> {
    fn limit(&self) -> f64 {
        self.bound * (1.0 + SLACK) + SLACK
    }

    fn descend<F>(&mut self, level: usize, partial: f64, visit: &mut F)
    where
        F: FnMut(&[i64], f64) -> Visit,
    {
        let g = self.gso;
        let c = self.gamma[level]
            - (level + 1..g.n())
                .map(|i| g.mu[i][level] * self.x[i] as f64)
                .sum::<f64>();
        let sq = g.bstar_sq[level];
        let room = self.limit() - partial;
        if room < 0.0 {
            return;
        }
        let r = (room / sq).sqrt();
        let lo = (c - r).ceil() as i64;
        let hi = (c + r).floor() as i64;
        for xi in lo..=hi {
            self.nodes += 1;
            let d = xi as f64 - c;
            let p = partial + sq * d * d;
            if p > self.limit() {
                continue;
            }
            self.x[level] = xi;
            if level == 0 {
                match visit(&self.x, p) {
                    Visit::Continue => {}
                    Visit::Shrink(b) => self.bound = self.bound.min(b),
                    Visit::Stop => self.stopped = true,
                }
            } else {
                self.descend(level - 1, p, visit);
            }
            if self.stopped {
                return;
            }
        }
        self.x[level] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::gram_schmidt_real;

    #[test]
    fn counts_points_of_z2() {
        let g = gram_schmidt_real(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let mut pts = Vec::new();
        for_each_in_ball(&g, &[0.0, 0.0], 1.0, |x, _| {
            pts.push(x.to_vec());
            Visit::Continue
        });
        assert_eq!(pts.len(), 5);
        let mut n = 0;
        for_each_in_ball(&g, &[0.0, 0.0], 2.0, |_, _| {
            n += 1;
            Visit::Continue
        });
        assert_eq!(n, 9);
    }

    #[test]
    fn skewed_basis_matches_box_search() {
        let cols = vec![vec![3.0, 1.0, 0.0], vec![1.0, 4.0, 1.0], vec![-2.0, 1.0, 5.0]];
        let g = gram_schmidt_real(&cols).unwrap();
        let center = [0.3, -1.2, 2.1];
        let r2 = 40.0;
        let mut found = 0;
        for_each_in_ball(&g, &center, r2, |_, _| {
            found += 1;
            Visit::Continue
        });
        let mut brute = 0;
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                for c in -10i64..=10 {
                    let v: Vec<f64> = (0..3)
                        .map(|k| a as f64 * cols[0][k] + b as f64 * cols[1][k] + c as f64 * cols[2][k] - center[k])
                        .collect();
                    if v.iter().map(|x| x * x).sum::<f64>() <= r2 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(found, brute);
    }
}
