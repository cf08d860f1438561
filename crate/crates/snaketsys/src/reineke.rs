//! Reineke's algorithm for the crystal string functions `ε_j` and `ε*_j`.
//!
//! For data on the canonical window `Γ^(δ)` with `δ = j mod 2`,
//! `ε_j(c) = max_Σ Σ_{(i,k) ∈ Σ} (c_{i,k} - c_{i,k-2})`, the maximum running over the
//! lower-closed subsets `Σ` of `Ω_j = {v : (j, 1) ⪯ v ⪯ (j*, n)}`. With the other
//! parity, `(j, 0)` is the first letter of the adapted word and `ε_j(c) = c_{j,0}`.
//!
//! The maximization is a maximum-weight closure problem; [`epsilon`] solves it by a
//! minimum cut and [`epsilon_brute`] by exhaustive enumeration of lower-closed subsets,
//! which serves as the reference implementation.

use crate::closure::max_weight_closure;
use crate::error::{Error, Result};
use crate::lusztig::{star_vertex_datum, Carrier, VertexDatum};
use crate::quiver::{HeightFunction, Vertex};
use crate::roots::TypeA;
use std::collections::HashMap;

/// The poset `Ω_j` inside `Γ^(j mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaPoset {
    pub j: usize,
    pub delta: u8,
    /// Elements in `(k, i)` order, which is a linear extension of `⪯`.
    pub vertices: Vec<Vertex>,
    /// `below[a]` lists the indices `b ≠ a` with `vertices[b] ⪯ vertices[a]`.
    pub below: Vec<Vec<usize>>,
}

/// Parity `j mod 2` as a carrier index.
pub fn parity(j: usize) -> u8 {
    (j % 2) as u8
}

/// Largest `Ω_j` the brute-force enumeration accepts.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// `Ω_j` for `A_n`.
pub fn omega(n: usize, j: usize) -> Result<OmegaPoset> {
    let ta = TypeA::new(n)?;
    ta.check_node(j)?;
    let delta = parity(j);
    let xi = HeightFunction::canonical(n, delta)?;
    let (lo, hi) = (Vertex::int(j, 1), Vertex::int(ta.star(j), n as i64));
    let vertices: Vec<Vertex> = xi
        .gamma_window()
        .into_iter()
        .filter(|&v| xi.preceq(lo, v) && xi.preceq(v, hi))
        .collect();
    let below = vertices
        .iter()
        .enumerate()
        .map(|(a, &va)| {
            (0..vertices.len())
                .filter(|&b| b != a && xi.preceq(vertices[b], va))
                .collect()
        })
        .collect();
    Ok(OmegaPoset { j, delta, vertices, below })
}

fn delta_of(c: &VertexDatum) -> Result<(usize, u8)> {
    match c.carrier() {
        Carrier::Delta { n, delta } => Ok((n, delta)),
        other => Err(Error::WrongCarrier(format!("Reineke's formula needs a canonical window, got {other}"))),
    }
}

/// Weights `c_{i,k} - c_{i,k-2}` on `Ω_j` (absent keys count as zero).
fn omega_weights(om: &OmegaPoset, c: &VertexDatum) -> Vec<i64> {
    om.vertices
        .iter()
        .map(|&v| c.get(v) as i64 - c.get(v.shifted(-4)) as i64)
        .collect()
}

fn check_parity(j: usize, c: &VertexDatum) -> Result<usize> {
    let (n, delta) = delta_of(c)?;
    TypeA::new(n)?.check_node(j)?;
    if parity(j) != delta {
        return Err(Error::ParityMismatch { j, delta });
    }
    Ok(n)
}

/// `ε_j(c)` for `c` on `Γ^(δ)` with `δ = j mod 2`, by maximum-weight closure.
pub fn epsilon(j: usize, c: &VertexDatum) -> Result<u64> {
    let n = check_parity(j, c)?;
    let om = omega(n, j)?;
    let (best, _) = max_weight_closure(&omega_weights(&om, c), &om.below);
    Ok(best as u64)
}

/// `ε_j(c)` by exhaustive enumeration of the lower-closed subsets of `Ω_j`.
///
/// Limited to `|Ω_j| ≤ 20`; larger posets are rejected.
pub fn epsilon_brute(j: usize, c: &VertexDatum) -> Result<u64> {
    let n = check_parity(j, c)?;
    let om = omega(n, j)?;
    if om.vertices.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::WrongCarrier(format!(
            "|Omega_{j}| = {} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}",
            om.vertices.len()
        )));
    }
    let w = omega_weights(&om, c);
    // Decide elements in linear-extension order; an element may be included only if
    // everything below it already is. Memoize on (position, chosen mask).
    fn go(idx: usize, mask: u32, w: &[i64], below: &[Vec<usize>], memo: &mut HashMap<(usize, u32), i64>) -> i64 {
        if idx == w.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(idx, mask)) {
            return v;
        }
        let mut best = go(idx + 1, mask, w, below, memo);
        if below[idx].iter().all(|&b| mask & (1 << b) != 0) {
            best = best.max(w[idx] + go(idx + 1, mask | (1 << idx), w, below, memo));
        }
        memo.insert((idx, mask), best);
        best
    }
    Ok(go(0, 0, &w, &om.below, &mut HashMap::new()) as u64)
}

/// `ε_j(c)` for `c` on `Γ^(δ)` with `δ ≠ j mod 2`: the first-letter value `c_{j,0}`.
pub fn epsilon_other_parity(j: usize, c: &VertexDatum) -> Result<u64> {
    let (n, delta) = delta_of(c)?;
    TypeA::new(n)?.check_node(j)?;
    if parity(j) == delta {
        return Err(Error::ParityMismatch { j, delta });
    }
    Ok(c.get(Vertex::int(j, 0)))
}

/// `ε_j(c)` for `c` on either canonical window, dispatching on the parity.
pub fn epsilon_any(j: usize, c: &VertexDatum) -> Result<u64> {
    let (_, delta) = delta_of(c)?;
    if parity(j) == delta {
        epsilon(j, c)
    } else {
        epsilon_other_parity(j, c)
    }
}

/// `ε*_j(c) = ε_j(c∨)`, where `c∨_{(i,k)} = c_{(i*, n-k)}` lives on the dual window.
pub fn epsilon_star(j: usize, c: &VertexDatum) -> Result<u64> {
    epsilon_any(j, &star_vertex_datum(c)?)
}
