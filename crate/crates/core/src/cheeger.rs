//! Exact isoperimetric number of a small graph by exhaustive search.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHEEGER_LIMIT: usize = 24;

/// `h(G) = min |∂A| / |A|` over non-empty `A` with `|A| ≤ v/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheegerConstant {
    pub numerator: u64,
    pub denominator: u64,
    /// Minimising set with the smallest bitmask.
    pub witness: Vec<usize>,
}

impl CheegerConstant {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

pub fn graph_cheeger(g: &Graph) -> Result<CheegerConstant> {
    let n = g.vertex_count();
    if n > CHEEGER_LIMIT {
        return Err(Error::TooLarge {
            vertices: n,
            limit: CHEEGER_LIMIT,
        });
    }
    if n < 2 {
        return Err(Error::DomainError(format!(
            "isoperimetric number needs at least 2 vertices, got {n}"
        )));
    }
    // Walk all subsets in Gray-code order, updating the boundary per flip.
    let mut mask = 0u64;
    let mut boundary = 0i64;
    let mut size = 0usize;
    let mut best: Option<(u64, u64, u64)> = None;
    for step in 1u64..(1 << n) {
        let x = step.trailing_zeros() as usize;
        let inside = g
            .neighbors(x)
            .iter()
            .filter(|&&u| mask >> u & 1 == 1)
            .count() as i64;
        let deg = g.degree(x) as i64;
        if mask >> x & 1 == 1 {
            boundary -= deg - 2 * inside;
            size -= 1;
        } else {
            boundary += deg - 2 * inside;
            size += 1;
        }
        mask ^= 1 << x;
        if 2 * size > n {
            continue;
        }
        let (b, s) = (boundary as u64, size as u64);
        let better = match best {
            None => true,
            Some((bb, bs, bm)) => {
                let (lhs, rhs) = (b * bs, bb * s);
                lhs < rhs || (lhs == rhs && mask < bm)
            }
        };
        if better {
            best = Some((b, s, mask));
        }
    }
    let (b, s, m) = best.expect("some subset has at most half the vertices");
    let r = Ratio::new(b, s);
    Ok(CheegerConstant {
        numerator: *r.numer(),
        denominator: *r.denom(),
        witness: (0..n).filter(|&v| m >> v & 1 == 1).collect(),
    })
}
