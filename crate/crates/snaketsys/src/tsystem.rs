//! Extended T-system relations and the `tfd` values that justify them.
//!
//! For a prime snake `P = (P_1, …, P_p)`, `p ≥ 2`, there is a short exact sequence
//!
//! ```text
//! 0 → S(Q) ⊗ S(R) → S(P[1,p-1]) ⊗ S(P[2,p]) → S(P) ⊗ S(P[2,p-1]) → 0
//! ```
//!
//! with `(Q, R)` the Q/R sequences of `P`. This module emits the six terms, and evaluates
//! the invariant `tfd` between a cuspidal module and a snake module in two independent
//! ways: by the case analysis on snake positions, and through Reineke's `ε` after moving
//! the configuration into a canonical window (for twisted data, through the translation
//! `P ↦ P†` into the untwisted window `Γ^θ`). The module category itself is never
//! modelled; only these combinatorial shadows are.

use crate::error::{Error, Result};
use crate::lusztig::{Carrier, VertexDatum};
use crate::quiver::{fmt_half, Flavor, HeightFunction, Region, Vertex};
use crate::reineke::{epsilon_any, epsilon_star, parity};
use crate::snakes::{in_prime_snake_position, in_snake_position, is_prime_snake, is_snake, qr_sequences, translate_twisted};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Primality and reality of a snake module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// Snake modules are always real.
    pub real: bool,
    /// Prime exactly for prime snakes.
    pub prime: bool,
}

/// Flags of a snake.
pub fn flags(xi: &HeightFunction, p: &[Vertex]) -> Result<Flags> {
    if !is_snake(xi, p) {
        return Err(Error::NotSnake(format!("{p:?}")));
    }
    Ok(Flags { real: true, prime: is_prime_snake(xi, p) })
}

/// The six terms of an extended T-system relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TSystemRelation {
    pub flavor: Flavor,
    pub p: Vec<Vertex>,
    /// `P[1, p-1]`.
    pub b: Vec<Vertex>,
    /// `P[2, p]`.
    pub c: Vec<Vertex>,
    /// `P` itself.
    pub a: Vec<Vertex>,
    /// `P[2, p-1]`, empty (the unit) when `p = 2`.
    pub d: Vec<Vertex>,
    pub q: Vec<Vertex>,
    pub r: Vec<Vertex>,
    pub flags: Flags,
    /// `S(Q)` and `S(R)` strongly commute; recorded, not checked.
    pub first_term_strongly_commuting: bool,
}

/// The extended T-system relation of a prime snake of length at least 2.
pub fn extended_tsystem(xi: &HeightFunction, p: &[Vertex]) -> Result<TSystemRelation> {
    if p.len() < 2 {
        return Err(Error::TooShort(p.len()));
    }
    let (q, r) = qr_sequences(xi, p)?;
    let len = p.len();
    Ok(TSystemRelation {
        flavor: xi.flavor(),
        p: p.to_vec(),
        b: p[..len - 1].to_vec(),
        c: p[1..].to_vec(),
        a: p.to_vec(),
        d: p[1..len - 1].to_vec(),
        q,
        r,
        flags: flags(xi, p)?,
        first_term_strongly_commuting: true,
    })
}

fn latex_points(p: &[Vertex]) -> String {
    p.iter()
        .map(|v| format!("({},{})", v.i, fmt_half(v.k2)))
        .collect::<Vec<_>>()
        .join(",")
}

impl TSystemRelation {
    /// The relation as a LaTeX short exact sequence of snake modules.
    pub fn to_latex(&self) -> String {
        let sup = if self.flavor == Flavor::Twisted { "^{\\Theta}" } else { "" };
        let s = |p: &[Vertex]| {
            if p.is_empty() {
                "\\mathbf{1}".to_string()
            } else {
                format!("\\mathbf{{S}}{sup}\\big({}\\big)", latex_points(p))
            }
        };
        format!(
            "0 \\to {} \\otimes {} \\to {} \\otimes {} \\to {} \\otimes {} \\to 0",
            s(&self.q),
            s(&self.r),
            s(&self.b),
            s(&self.c),
            s(&self.a),
            s(&self.d)
        )
    }
}

impl fmt::Display for TSystemRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |p: &[Vertex]| {
            if p.is_empty() {
                "1".to_string()
            } else {
                format!("S({})", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            }
        };
        write!(
            f,
            "0 -> {} (x) {} -> {} (x) {} -> {} (x) {} -> 0",
            s(&self.q),
            s(&self.r),
            s(&self.b),
            s(&self.c),
            s(&self.a),
            s(&self.d)
        )
    }
}

/// A predicted value of `tfd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tfd {
    Zero,
    One,
    Indeterminate,
}

impl Tfd {
    /// The value as an integer, when determined.
    pub fn value(self) -> Option<u64> {
        match self {
            Tfd::Zero => Some(0),
            Tfd::One => Some(1),
            Tfd::Indeterminate => None,
        }
    }
}

/// `2Θ_i` of the canonical twisted function.
fn theta2(xi: &HeightFunction, i: usize) -> i64 {
    let n0 = xi.n0().expect("twisted");
    HeightFunction::big_theta(n0).expect("n0 >= 2").value2(i)
}

/// Case analysis for `tfd(S_v, S(P))` when `v ≺ P_1`.
///
/// Untwisted: 1 if `P_1` is in prime snake position w.r.t. `v`; 0 if `P_1 = (j ± r, l + r)`
/// (not in snake position). Twisted: 1 in the prime case; 0 if `Θ_{i_1} = Θ_j ± r` and
/// `k_1 = l + r`; 0 if `v ∈ U` and `P_1 ∈ Gt ⊔ U`, or `v ∈ D` and `P_1 ∈ Lt ⊔ D`.
/// Indeterminate otherwise (including when `v ⊀ P_1`).
pub fn predicted_tfd_left(xi: &HeightFunction, v: Vertex, p: &[Vertex]) -> Tfd {
    let Some(&first) = p.first() else { return Tfd::Zero };
    if !xi.prec(v, first) {
        return Tfd::Indeterminate;
    }
    if in_prime_snake_position(xi, v, first) {
        return Tfd::One;
    }
    let r2 = first.k2 - v.k2;
    match xi.flavor() {
        Flavor::Untwisted => {
            if r2 > 0 && 2 * first.i.abs_diff(v.i) as i64 == r2 {
                return Tfd::Zero;
            }
        }
        Flavor::Twisted => {
            if r2 > 0 && (theta2(xi, first.i) - theta2(xi, v.i)).abs() == r2 {
                return Tfd::Zero;
            }
            let (rv, rf) = (xi.region(v).expect("vertex"), xi.region(first).expect("vertex"));
            if (rv == Region::U && matches!(rf, Region::Gt | Region::U))
                || (rv == Region::D && matches!(rf, Region::Lt | Region::D))
            {
                return Tfd::Zero;
            }
        }
    }
    Tfd::Indeterminate
}

/// Case analysis for `tfd(S(P), S_v)` when `P_p ≺ v`; the mirror image of
/// [`predicted_tfd_left`].
pub fn predicted_tfd_right(xi: &HeightFunction, p: &[Vertex], v: Vertex) -> Tfd {
    let Some(&last) = p.last() else { return Tfd::Zero };
    if !xi.prec(last, v) {
        return Tfd::Indeterminate;
    }
    if in_prime_snake_position(xi, last, v) {
        return Tfd::One;
    }
    let r2 = v.k2 - last.k2;
    match xi.flavor() {
        Flavor::Untwisted => {
            if r2 > 0 && 2 * last.i.abs_diff(v.i) as i64 == r2 {
                return Tfd::Zero;
            }
        }
        Flavor::Twisted => {
            if r2 > 0 && (theta2(xi, v.i) - theta2(xi, last.i)).abs() == r2 {
                return Tfd::Zero;
            }
            let (rl, rv) = (xi.region(last).expect("vertex"), xi.region(v).expect("vertex"));
            if (rv == Region::U && rl.is_lower_group()) || (rv == Region::D && !rl.is_lower_group()) {
                return Tfd::Zero;
            }
        }
    }
    Tfd::Indeterminate
}

/// `Σ e_v` over shifted points, on the canonical window `Γ^(δ)`; `None` if a point falls
/// outside the window.
fn canonical_datum(n: usize, delta: u8, points: &[Vertex], t2: i64) -> Option<VertexDatum> {
    let shifted: Vec<Vertex> = points.iter().map(|v| v.shifted(t2)).collect();
    VertexDatum::indicator(Carrier::Delta { n, delta }, &shifted).ok()
}

/// `tfd(S_v, S(P))` for untwisted `ξ` and `v ≺ P_1`, through Reineke's `ε`.
///
/// Points not below `D^{-1}(v)` strongly commute with all `D^{-r} S_v` and are dropped;
/// the rest is shifted so that `v = (j, -1)`, where it lies in `Γ^(δ)` with `δ = j mod 2`,
/// and `tfd = ε_j(Σ e_{P_s})`. Returns `None` when the route does not apply.
pub fn epsilon_tfd_left_untwisted(xi: &HeightFunction, v: Vertex, p: &[Vertex]) -> Option<u64> {
    if xi.is_twisted() || !xi.is_vertex(v) || !is_snake(xi, p) {
        return None;
    }
    let Some(&first) = p.first() else { return Some(0) };
    if !xi.prec(v, first) {
        return None;
    }
    let top = xi.dual_inv(v);
    let kept: Vec<Vertex> = p.iter().copied().take_while(|&u| xi.preceq(u, top)).collect();
    let c = canonical_datum(xi.n(), parity(v.i), &kept, -2 - v.k2)?;
    epsilon_any(v.i, &c).ok()
}

/// `tfd(S(P), S_v)` for untwisted `ξ` and `P_p ≺ v`, through Reineke's `ε*`.
///
/// Points not above `D(v)` are dropped; the rest is shifted so that `v = (j, n+1)`, where
/// it lies in `Γ^(δ)` with `δ = (n - j) mod 2`, and `tfd = ε*_{j*}(Σ e_{P_s})`.
pub fn epsilon_tfd_right_untwisted(xi: &HeightFunction, p: &[Vertex], v: Vertex) -> Option<u64> {
    if xi.is_twisted() || !xi.is_vertex(v) || !is_snake(xi, p) {
        return None;
    }
    let Some(&last) = p.last() else { return Some(0) };
    if !xi.prec(last, v) {
        return None;
    }
    let bottom = xi.dual(v);
    let n = xi.n();
    let kept: Vec<Vertex> = p.iter().copied().filter(|&u| xi.preceq(bottom, u)).collect();
    let c = canonical_datum(n, parity(n - v.i), &kept, 2 * (n as i64 + 1) - v.k2)?;
    epsilon_star(n + 1 - v.i, &c).ok()
}

/// Moves a twisted configuration into `Q̂^Θ` with the probe in `Gt ⊔ U`: an alignment shift,
/// an optional application of `D` (which preserves `tfd`), and an even shift placing the
/// probe at doubled height `target2(probe)`.
fn normalize_twisted(
    xi: &HeightFunction,
    v: Vertex,
    p: &[Vertex],
    target2: impl Fn(Vertex, i64) -> i64,
) -> Option<(HeightFunction, Vertex, Vec<Vertex>)> {
    let n0 = xi.n0()?;
    let big = HeightFunction::big_theta(n0).ok()?;
    let align = (big.value2(1) - xi.value2(1)).rem_euclid(4);
    let mut v = v.shifted(align);
    let mut p: Vec<Vertex> = p.iter().map(|u| u.shifted(align)).collect();
    if matches!(big.region(v).ok()?, Region::Lt | Region::D) {
        v = big.dual(v);
        p = p.into_iter().map(|u| big.dual(u)).collect();
    }
    let t2 = target2(v, big.value2(v.i)) - v.k2;
    if t2.rem_euclid(4) != 0 {
        return None;
    }
    let v = v.shifted(t2);
    let p = p.into_iter().map(|u| u.shifted(t2)).collect();
    Some((big, v, p))
}

/// `tfd(S_v, S(P))` for twisted `ξ` and `v ≺ P_1`, through the translation to `Γ^θ`.
///
/// After [`normalize_twisted`] the probe is `(j, Θ_j - d_j)` with `j > n₀` or `j = n₀`
/// (region U); the truncated snake lies in `Γ^Θ`, and `S^Θ_v ≅ S^θ_y` with `y = (j, j-4)`
/// or `(n₀, n₀-2)` respectively. The value is then `tfd(S^θ_y, S^θ(P†))`.
pub fn epsilon_tfd_left_twisted(xi: &HeightFunction, v: Vertex, p: &[Vertex]) -> Option<u64> {
    let n0 = xi.n0()?;
    if !xi.is_vertex(v) || !is_snake(xi, p) {
        return None;
    }
    let Some(&first) = p.first() else { return Some(0) };
    if !xi.prec(v, first) {
        return None;
    }
    let (big, v, p) = normalize_twisted(xi, v, p, |v, theta2| theta2 - big_d2(n0, v.i))?;
    let top = big.dual_inv(v);
    let kept: Vec<Vertex> = p.iter().copied().take_while(|&u| big.preceq(u, top)).collect();
    if !kept.iter().all(|&u| big.in_window(u)) {
        return None;
    }
    let dagger = translate_twisted(&big, &kept).ok()?;
    let theta = HeightFunction::theta(n0).ok()?;
    let j = v.i as i64;
    let y = if v.i > n0 { Vertex::int(v.i, j - 4) } else { Vertex::int(n0, n0 as i64 - 2) };
    epsilon_tfd_left_untwisted(&theta, y, &dagger)
}

/// `tfd(S(P), S_v)` for twisted `ξ` and `P_p ≺ v`, through the translation to `Γ^θ`.
///
/// After [`normalize_twisted`] the probe is `D^{-1}` of a bottom vertex of `Γ^Θ` (in `Lt`
/// or region D), so `S^Θ_v ≅ S^θ_y` with `y = (j, 2n+2-j)` for `j > n₀` and `y = (1, 2n+1)`
/// for the U case. The value is then `tfd(S^θ(P†), S^θ_y)`.
pub fn epsilon_tfd_right_twisted(xi: &HeightFunction, p: &[Vertex], v: Vertex) -> Option<u64> {
    let n0 = xi.n0()?;
    if !xi.is_vertex(v) || !is_snake(xi, p) {
        return None;
    }
    let Some(&last) = p.last() else { return Some(0) };
    if !xi.prec(last, v) {
        return None;
    }
    let n = xi.n() as i64;
    let (big, v, p) = normalize_twisted(xi, v, p, |v, _| {
        if v.i > n0 {
            2 * (2 * n + 1 - v.i as i64)
        } else {
            2 * (n0 as i64 + n) - 1
        }
    })?;
    let bottom = big.dual(v);
    let kept: Vec<Vertex> = p.iter().copied().filter(|&u| big.preceq(bottom, u)).collect();
    if !kept.iter().all(|&u| big.in_window(u)) {
        return None;
    }
    let dagger = translate_twisted(&big, &kept).ok()?;
    let theta = HeightFunction::theta(n0).ok()?;
    let y = if v.i > n0 { Vertex::int(v.i, 2 * n + 2 - v.i as i64) } else { Vertex::int(1, 2 * n + 1) };
    epsilon_tfd_right_untwisted(&theta, &dagger, y)
}

fn big_d2(n0: usize, i: usize) -> i64 {
    if i == n0 {
        2
    } else {
        4
    }
}

/// `tfd(S_v, S(P))` through `ε`, for either flavour; `None` when the route does not apply.
pub fn epsilon_tfd_left(xi: &HeightFunction, v: Vertex, p: &[Vertex]) -> Option<u64> {
    match xi.flavor() {
        Flavor::Untwisted => epsilon_tfd_left_untwisted(xi, v, p),
        Flavor::Twisted => epsilon_tfd_left_twisted(xi, v, p),
    }
}

/// `tfd(S(P), S_v)` through `ε*`, for either flavour; `None` when the route does not apply.
pub fn epsilon_tfd_right(xi: &HeightFunction, p: &[Vertex], v: Vertex) -> Option<u64> {
    match xi.flavor() {
        Flavor::Untwisted => epsilon_tfd_right_untwisted(xi, p, v),
        Flavor::Twisted => epsilon_tfd_right_twisted(xi, p, v),
    }
}

/// Which of the two families of hypotheses a check belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `tfd(S_{P_a}, S(P[a+1, b]))`.
    Left,
    /// `tfd(S(P[a, b-1]), S_{P_b})`.
    Right,
}

/// One evaluated hypothesis (1-based slice bounds).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub a: usize,
    pub b: usize,
    pub side: Side,
    pub predicted: Tfd,
    pub epsilon: Option<u64>,
    /// The case-analysis value when determined, otherwise the `ε` value.
    pub value: Option<u64>,
    /// `true` when both evaluations exist and disagree.
    pub conflict: bool,
}

/// The full sweep of hypotheses over all sub-slices of a snake.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesReport {
    pub checks: Vec<HypothesisCheck>,
    /// `true` iff every check has value 1 and no check has a conflict.
    pub all_one: bool,
}

/// Evaluates `tfd(S_{P_a}, S(P[a+1,b])) = 1` and `tfd(S(P[a,b-1]), S_{P_b}) = 1` for
/// all `a < b`, by the case analysis and through `ε`.
pub fn check_theorem_a_hypotheses(xi: &HeightFunction, p: &[Vertex]) -> Result<HypothesesReport> {
    if !is_snake(xi, p) {
        return Err(Error::NotSnake(format!("{p:?}")));
    }
    let mut checks = Vec::new();
    let mk = |a: usize, b: usize, side: Side, predicted: Tfd, epsilon: Option<u64>| {
        let conflict = matches!((predicted.value(), epsilon), (Some(x), Some(y)) if x != y);
        HypothesisCheck { a: a + 1, b: b + 1, side, predicted, epsilon, value: predicted.value().or(epsilon), conflict }
    };
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let tail = &p[a + 1..=b];
            checks.push(mk(a, b, Side::Left, predicted_tfd_left(xi, p[a], tail), epsilon_tfd_left(xi, p[a], tail)));
            let head = &p[a..b];
            checks.push(mk(a, b, Side::Right, predicted_tfd_right(xi, head, p[b]), epsilon_tfd_right(xi, head, p[b])));
        }
    }
    let all_one = checks.iter().all(|c| c.value == Some(1) && !c.conflict);
    Ok(HypothesesReport { checks, all_one })
}

/// `true` iff `w` is in snake position after `v` but not in prime snake position.
pub fn is_non_prime_step(xi: &HeightFunction, v: Vertex, w: Vertex) -> bool {
    in_snake_position(xi, v, w) && !in_prime_snake_position(xi, v, w)
}
