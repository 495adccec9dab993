use num_rational::Ratio;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`edge_expansion`].
pub const EXPANSION_CAP: usize = 24;

/// Exact edge expansion `h(G) = min |dS| / |S|` over `0 < |S| <= v/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub h: Ratio<u64>,
    /// A minimizing vertex set, sorted.
    pub witness: Vec<usize>,
}

impl ExpansionResult {
    /// Number of edges leaving `witness`.
    pub fn boundary(&self, g: &Graph) -> u64 {
        let inside: Vec<bool> = (0..g.vertex_count())
            .map(|x| self.witness.binary_search(&x).is_ok())
            .collect();
        g.edges().filter(|&(a, b)| inside[a] != inside[b]).count() as u64
    }
}

/// Minimises over all subsets in Gray-code order, updating the boundary size
/// one vertex flip at a time.
pub fn edge_expansion(g: &Graph) -> Result<ExpansionResult> {
    let v = g.vertex_count();
    if v > EXPANSION_CAP {
        return Err(Error::TooLarge { v, cap: EXPANSION_CAP });
    }
    if v < 2 {
        return Err(Error::InvalidArgument(
            "edge expansion needs at least two vertices".into(),
        ));
    }
    let nbr: Vec<u32> = (0..v)
        .map(|x| g.neighbors(x).iter().fold(0u32, |m, &y| m | 1 << y))
        .collect();
    let half = v / 2;
    let mut set = 0u32;
    let mut size = 0usize;
    let mut boundary = 0i64;
    let mut best: Option<(u64, u64, u32)> = None;
    for step in 1u64..(1u64 << v) {
        let x = step.trailing_zeros() as usize;
        let inside = (nbr[x] & set).count_ones() as i64;
        let delta = g.degree(x) as i64 - 2 * inside;
        if set & (1 << x) == 0 {
            set |= 1 << x;
            size += 1;
            boundary += delta;
        } else {
            set &= !(1 << x);
            size -= 1;
            boundary -= delta;
        }
        if size == 0 || size > half {
            continue;
        }
        let (b, s) = (boundary as u64, size as u64);
        if best.is_none_or(|(bb, bs, _)| b * bs < bb * s) {
            best = Some((b, s, set));
        }
    }
    let (b, s, mask) = best.expect("v >= 2 admits a singleton");
    Ok(ExpansionResult {
        h: Ratio::new(b, s),
        witness: (0..v).filter(|&x| mask & (1 << x) != 0).collect(),
    })
}
