//! Snakes, prime snakes, Q/R sequences and the twisted-to-untwisted translation.
//!
//! A sequence of vertices is a *snake* when every point is in snake position with respect
//! to its predecessor, and a *prime snake* when every point is in prime snake position.
//! For two points in prime snake position the sequences `Q` and `R` locate the two factors
//! of the socle of the tensor product of the corresponding cuspidal modules; this module
//! computes them for both flavours of height function.
//!
//! All the closed formulas below are covariant under shifting `k`: the untwisted ones only
//! involve node indices, and the twisted ones are evaluated with the values of the
//! canonical twisted function `Θ`, whatever the concrete height function.

use crate::error::{Error, Result};
use crate::quiver::{Flavor, HeightFunction, Region, Vertex};
use rand::seq::IndexedRandom;
use rand::Rng;

/// `v` and `w`, with `w` in snake position with respect to `v`.
pub fn in_snake_position(xi: &HeightFunction, v: Vertex, w: Vertex) -> bool {
    if !xi.is_vertex(v) || !xi.is_vertex(w) {
        return false;
    }
    match xi.flavor() {
        Flavor::Untwisted => xi.preceq(v.shifted(4), w),
        Flavor::Twisted => {
            let step = if xi.n0() == Some(v.i) { 2 } else { 4 };
            if !xi.preceq(v.shifted(step), w) {
                return false;
            }
            let rv = xi.region(v).expect("vertex checked above");
            let rw = xi.region(w).expect("vertex checked above");
            // The groups Lt ⊔ U and Gt ⊔ D partition the quiver, so exactly one clause applies.
            if rv.is_lower_group() {
                matches!(rw, Region::Lt | Region::D)
            } else {
                matches!(rw, Region::Gt | Region::U)
            }
        }
    }
}

/// `w` in prime snake position with respect to `v`: snake position and `w ⪯ D^{-1}(v)`.
pub fn in_prime_snake_position(xi: &HeightFunction, v: Vertex, w: Vertex) -> bool {
    in_snake_position(xi, v, w) && xi.preceq(w, xi.dual_inv(v))
}

/// `true` iff every point is in snake position with respect to its predecessor.
pub fn is_snake(xi: &HeightFunction, p: &[Vertex]) -> bool {
    p.iter().all(|&v| xi.is_vertex(v)) && p.windows(2).all(|w| in_snake_position(xi, w[0], w[1]))
}

/// `true` iff every point is in prime snake position with respect to its predecessor.
pub fn is_prime_snake(xi: &HeightFunction, p: &[Vertex]) -> bool {
    p.iter().all(|&v| xi.is_vertex(v)) && p.windows(2).all(|w| in_prime_snake_position(xi, w[0], w[1]))
}

fn check_snake(xi: &HeightFunction, p: &[Vertex]) -> Result<()> {
    if let Some(v) = p.iter().find(|&&v| !xi.is_vertex(v)) {
        return Err(Error::NotAVertex(*v));
    }
    if let Some(s) = (1..p.len()).find(|&s| !in_snake_position(xi, p[s - 1], p[s])) {
        return Err(Error::NotSnake(format!("{} is not in snake position with respect to {}", p[s], p[s - 1])));
    }
    Ok(())
}

/// Start positions (0-based) of the maximal prime segments of a snake.
pub fn prime_split_points(xi: &HeightFunction, p: &[Vertex]) -> Vec<usize> {
    let mut starts = vec![0];
    starts.extend((1..p.len()).filter(|&s| !in_prime_snake_position(xi, p[s - 1], p[s])));
    starts
}

/// Splits a snake into its maximal prime segments.
pub fn split_prime(xi: &HeightFunction, p: &[Vertex]) -> Result<Vec<Vec<Vertex>>> {
    check_snake(xi, p)?;
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let mut starts = prime_split_points(xi, p);
    starts.push(p.len());
    Ok(starts.windows(2).map(|w| p[w[0]..w[1]].to_vec()).collect())
}

/// Exact division used by the closed formulas; a remainder means a broken precondition.
fn div_exact(a: i64, b: i64) -> i64 {
    assert!(a % b == 0, "closed formula produced a non-integral coordinate ({a}/{b})");
    a / b
}

fn node(x: i64) -> Option<usize> {
    usize::try_from(x).ok()
}

/// Untwisted `Q` and `R` for a prime pair `w` after `v`.
///
/// `Q = (½(i+i'+k-k'), ½(i-i'+k+k'))` unless `k'-k = i+i'`, and
/// `R = (½(i+i'-k+k'), ½(-i+i'+k+k'))` unless `k'-k = 2n+2-i-i'`.
pub fn qr_untwisted(xi: &HeightFunction, v: Vertex, w: Vertex) -> Result<(Option<Vertex>, Option<Vertex>)> {
    if xi.is_twisted() {
        return Err(Error::WrongFlavor("qr_untwisted needs an untwisted height function".into()));
    }
    if !in_prime_snake_position(xi, v, w) {
        return Err(Error::NotPrimeSnakePair { v, w });
    }
    let (i, ip, kk, kkp) = (v.i as i64, w.i as i64, v.k2, w.k2);
    let n = xi.n() as i64;
    let diff2 = kkp - kk;
    let q = (diff2 != 2 * (i + ip)).then(|| {
        Vertex::new(
            node(div_exact(2 * (i + ip) + kk - kkp, 4)).expect("node is positive"),
            div_exact(2 * (i - ip) + kk + kkp, 2),
        )
    });
    let r = (diff2 != 2 * (2 * n + 2 - i - ip)).then(|| {
        Vertex::new(
            node(div_exact(2 * (i + ip) - kk + kkp, 4)).expect("node is positive"),
            div_exact(2 * (ip - i) + kk + kkp, 2),
        )
    });
    Ok((q, r))
}

/// `2Θ_i` for the canonical twisted function on `A_{2n₀-1}`.
fn big_theta2(n0: usize, i: usize) -> i64 {
    let (i, n0) = (i as i64, n0 as i64);
    match i.cmp(&n0) {
        std::cmp::Ordering::Less => 2 * i,
        std::cmp::Ordering::Equal => 2 * i - 1,
        std::cmp::Ordering::Greater => 2 * i - 2,
    }
}

/// The Lt ⊔ U branch of the twisted Q/R formulas (no precondition checks).
fn qr_twisted_lower(n0: usize, v: Vertex, w: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let (i, ip) = (v.i, w.i);
    let (kk, kkp) = (v.k2, w.k2);
    let (t, tp) = (big_theta2(n0, i), big_theta2(n0, ip));
    let n0i = n0 as i64;
    let mut q = Vec::new();
    if kkp - kk != t + tp {
        q.push(Vertex::new(
            node(div_exact(t + tp + kk - kkp, 4)).expect("node is positive"),
            div_exact(t - tp + kk + kkp, 2),
        ));
    }
    let low = |i: usize| Vertex::new(n0, -2 * i as i64 + kk + 2 * n0i - 1);
    let high = |ip: usize| Vertex::new(n0, 2 * ip as i64 + kkp - 2 * n0i + 1);
    let r = if i < n0 && ip < n0 {
        if kkp - kk < 2 * (2 * n0i - i as i64 - ip as i64) {
            vec![Vertex::new(
                node(div_exact(2 * (i + ip) as i64 - kk + kkp, 4)).expect("node is positive"),
                div_exact(2 * (ip as i64 - i as i64) + kk + kkp, 2),
            )]
        } else {
            vec![low(i), high(ip)]
        }
    } else if i < n0 && ip == n0 {
        vec![low(i)]
    } else if i == n0 && ip < n0 {
        vec![high(ip)]
    } else {
        Vec::new()
    };
    (q, r)
}

/// Twisted `Q` and `R` (each a sequence of at most two vertices) for a prime pair.
///
/// When `v ∈ Lt ⊔ U` the closed formulas are used; when `v ∈ Gt ⊔ D` the pair is
/// conjugated by the duality: `Q = D^{-1} R_{Dv}^{Dw}` and `R = D^{-1} Q_{Dv}^{Dw}`.
pub fn qr_twisted(xi: &HeightFunction, v: Vertex, w: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let n0 = xi
        .n0()
        .ok_or_else(|| Error::WrongFlavor("qr_twisted needs a twisted height function".into()))?;
    if !in_prime_snake_position(xi, v, w) {
        return Err(Error::NotPrimeSnakePair { v, w });
    }
    if xi.region(v)?.is_lower_group() {
        Ok(qr_twisted_lower(n0, v, w))
    } else {
        let (dv, dw) = (xi.dual(v), xi.dual(w));
        let (q, r) = qr_twisted_lower(n0, dv, dw);
        let back = |s: Vec<Vertex>| s.into_iter().map(|u| xi.dual_inv(u)).collect::<Vec<_>>();
        Ok((back(r), back(q)))
    }
}

/// Q/R of a prime pair for either flavour, as sequences.
pub fn qr_pair(xi: &HeightFunction, v: Vertex, w: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    match xi.flavor() {
        Flavor::Untwisted => {
            let (q, r) = qr_untwisted(xi, v, w)?;
            Ok((q.into_iter().collect(), r.into_iter().collect()))
        }
        Flavor::Twisted => qr_twisted(xi, v, w),
    }
}

/// The sequences `Q` and `R` of a prime snake: concatenations of the pairwise outputs.
pub fn qr_sequences(xi: &HeightFunction, p: &[Vertex]) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    if p.len() < 2 {
        return Err(Error::TooShort(p.len()));
    }
    check_snake(xi, p)?;
    if !is_prime_snake(xi, p) {
        return Err(Error::NotPrimeSnake { split_points: prime_split_points(xi, p) });
    }
    let (mut q, mut r) = (Vec::new(), Vec::new());
    for pair in p.windows(2) {
        let (qq, rr) = qr_pair(xi, pair[0], pair[1])?;
        q.extend(qq);
        r.extend(rr);
    }
    Ok((q, r))
}

/// The translation `P ↦ P†` from snakes in `Γ^Θ` to snakes in `Γ^θ`.
///
/// Points in `Lt` are kept; each maximal run of points in `Gt ⊔ U ⊔ D` is replaced by
/// `X⁻` of its first point, `X` of each consecutive pair, and `X⁺` of its last point,
/// dropping empty entries. Debug builds check the result against `ρ(e(P)) = e(P†)`.
pub fn translate_twisted(xi: &HeightFunction, p: &[Vertex]) -> Result<Vec<Vertex>> {
    let n0 = xi
        .n0()
        .ok_or_else(|| Error::WrongFlavor("translation needs the twisted function Theta".into()))?;
    if *xi != HeightFunction::big_theta(n0)? {
        return Err(Error::WrongFlavor("translation is defined on the window of Theta".into()));
    }
    if let Some(v) = p.iter().find(|&&v| !xi.in_window(v)) {
        return Err(Error::OutsideWindow(*v));
    }
    check_snake(xi, p)?;
    let n = xi.n() as i64;
    let t2 = |v: Vertex| big_theta2(n0, v.i);
    let x_minus = |v: Vertex| -> Result<Option<Vertex>> {
        Ok(match xi.region(v)? {
            Region::D => None,
            _ => Some(Vertex::new(
                node(div_exact(t2(v) + v.k2 + 4, 4)).expect("node is positive"),
                div_exact(t2(v) + v.k2 - 4, 2),
            )),
        })
    };
    let x_plus = |v: Vertex| -> Result<Option<Vertex>> {
        Ok(match xi.region(v)? {
            Region::U => None,
            _ => Some(Vertex::new(
                node(div_exact(t2(v) - v.k2 + 4 * n, 4)).expect("node is positive"),
                div_exact(-t2(v) + v.k2 + 4 * n, 2),
            )),
        })
    };
    let x_mid = |v: Vertex, w: Vertex| -> Result<Option<Vertex>> {
        Ok(match xi.region(v)? {
            Region::U => None,
            _ => Some(Vertex::new(
                node(div_exact(t2(v) + t2(w) - v.k2 + w.k2, 4)).expect("node is positive"),
                div_exact(-t2(v) + t2(w) + v.k2 + w.k2, 2),
            )),
        })
    };
    let mut out = Vec::new();
    let mut s = 0;
    while s < p.len() {
        if p[s].i < n0 {
            out.push(p[s]);
            s += 1;
            continue;
        }
        let start = s;
        while s < p.len() && p[s].i >= n0 {
            s += 1;
        }
        let run = &p[start..s];
        out.extend(x_minus(run[0])?);
        for pair in run.windows(2) {
            out.extend(x_mid(pair[0], pair[1])?);
        }
        out.extend(x_plus(run[run.len() - 1])?);
    }
    #[cfg(debug_assertions)]
    {
        // The translation is characterized by ρ(e(P)) = e(P†); check it in debug builds.
        use crate::lusztig::{rho, Carrier, VertexDatum};
        let lhs = VertexDatum::indicator(Carrier::GammaBigTheta { n0 }, p).and_then(|d| rho(&d));
        let rhs = VertexDatum::indicator(Carrier::GammaTheta { n0 }, &out);
        debug_assert_eq!(lhs.ok(), rhs.ok(), "translation disagrees with rho on {p:?}");
    }
    Ok(out)
}

/// Vertices with doubled heights in `[k2_lo, k2_hi]`, in `(k, i)` order.
pub fn vertices_between(xi: &HeightFunction, k2_lo: i64, k2_hi: i64) -> Vec<Vertex> {
    let mut out = Vec::new();
    for k2 in k2_lo..=k2_hi {
        for i in 1..=xi.n() {
            let v = Vertex::new(i, k2);
            if xi.is_vertex(v) {
                out.push(v);
            }
        }
    }
    out
}

/// Candidates for the next point of a (prime) snake after `v`, within `k2 ≤ k2_max`.
pub fn snake_successors(xi: &HeightFunction, v: Vertex, prime: bool, k2_max: i64) -> Vec<Vertex> {
    let reach = if prime { xi.ntilde2() } else { 2 * xi.ntilde2() };
    vertices_between(xi, v.k2 + 1, (v.k2 + reach).min(k2_max))
        .into_iter()
        .filter(|&w| {
            if prime {
                in_prime_snake_position(xi, v, w)
            } else {
                in_snake_position(xi, v, w)
            }
        })
        .collect()
}

/// `true` when the Q- or R-part of a prime pair is shorter than generic (an emptiness case).
fn is_boundary_pair(xi: &HeightFunction, v: Vertex, w: Vertex) -> bool {
    match qr_pair(xi, v, w) {
        Ok((q, r)) => q.is_empty() || r.is_empty() || (xi.is_twisted() && r.len() == 2),
        Err(_) => false,
    }
}

/// A random snake grown forward from a random start with `k2` in `[k2_lo, k2_hi]`.
///
/// Prime snakes favour pairs on the boundary of the prime region (where `Q` or `R` is
/// empty) with probability 1/3 per step, so that degenerate cases are well covered.
pub fn random_snake<R: Rng + ?Sized>(
    xi: &HeightFunction,
    rng: &mut R,
    len: usize,
    prime: bool,
    k2_lo: i64,
    k2_hi: i64,
) -> Vec<Vertex> {
    let starts = vertices_between(xi, k2_lo, k2_hi);
    let mut p = vec![*starts.choose(rng).expect("window is nonempty")];
    while p.len() < len {
        let last = *p.last().expect("nonempty");
        let cands = snake_successors(xi, last, prime, i64::MAX);
        if prime && rng.random_bool(1.0 / 3.0) {
            let boundary: Vec<Vertex> = cands.iter().copied().filter(|&w| is_boundary_pair(xi, last, w)).collect();
            if let Some(&w) = boundary.choose(rng) {
                p.push(w);
                continue;
            }
        }
        match cands.choose(rng) {
            Some(&w) => p.push(w),
            None => break,
        }
    }
    p
}

/// A random snake contained in the window `Γ^ξ`, of length between 1 and `max_len`.
pub fn random_window_snake<R: Rng + ?Sized>(xi: &HeightFunction, rng: &mut R, max_len: usize) -> Vec<Vertex> {
    let window = xi.gamma_window();
    let target = rng.random_range(1..=max_len.max(1));
    let mut p = vec![*window.choose(rng).expect("window is nonempty")];
    while p.len() < target {
        let last = *p.last().expect("nonempty");
        let cands: Vec<Vertex> = window.iter().copied().filter(|&w| in_snake_position(xi, last, w)).collect();
        match cands.choose(rng) {
            Some(&w) => p.push(w),
            None => break,
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize, k2: i64) -> Vertex {
        Vertex::new(i, k2)
    }

    #[test]
    fn untwisted_positions_and_qr() {
        let xi = HeightFunction::untwisted(&[1, 2, 3]).unwrap();
        assert!(in_prime_snake_position(&xi, v(2, 0), v(2, 4)));
        assert!(in_prime_snake_position(&xi, v(2, 4), v(1, 10)));
        let p = [v(2, 0), v(2, 4), v(1, 10)];
        assert!(is_snake(&xi, &p) && is_prime_snake(&xi, &p));
        assert!(!is_snake(&xi, &[v(2, 0), v(3, 2)]));
        assert_eq!(qr_untwisted(&xi, v(2, 0), v(2, 4)).unwrap(), (Some(v(1, 2)), Some(v(3, 2))));
        assert_eq!(qr_untwisted(&xi, v(2, 4), v(1, 10)).unwrap(), (None, Some(v(3, 6))));
        assert_eq!(qr_sequences(&xi, &p).unwrap(), (vec![v(1, 2)], vec![v(3, 2), v(3, 6)]));
        assert_eq!(split_prime(&xi, &[v(2, 0), v(2, 12)]).unwrap(), vec![vec![v(2, 0)], vec![v(2, 12)]]);
        let five = HeightFunction::canonical(5, 1).unwrap();
        assert_eq!(qr_untwisted(&five, v(2, 0), v(4, 8)).unwrap(), (Some(v(1, 2)), Some(v(5, 6))));
    }

    #[test]
    fn twisted_worked_example() {
        let xi = HeightFunction::big_theta(2).unwrap();
        assert_eq!(qr_twisted(&xi, v(3, 4), v(2, 9)).unwrap(), (vec![v(2, 5)], vec![]));
        assert_eq!(qr_twisted(&xi, v(2, 9), v(2, 11)).unwrap(), (vec![v(1, 10)], vec![]));
        let p = [v(3, 4), v(2, 9), v(2, 11)];
        assert_eq!(qr_sequences(&xi, &p).unwrap(), (vec![v(2, 5), v(1, 10)], vec![]));
    }

    #[test]
    fn translation_goldens() {
        let xi = HeightFunction::big_theta(4).unwrap();
        let p = [v(5, 8), v(5, 12), v(4, 17), v(4, 19)];
        assert_eq!(translate_twisted(&xi, &p).unwrap(), vec![v(5, 6), v(5, 10), v(5, 14), v(4, 20)]);
        let xi = HeightFunction::big_theta(8).unwrap();
        let p = [v(9, 16), v(9, 20), v(8, 25), v(7, 30), v(8, 35), v(9, 40)];
        assert_eq!(
            translate_twisted(&xi, &p).unwrap(),
            vec![v(9, 14), v(9, 18), v(9, 22), v(7, 30), v(9, 38), v(9, 42)]
        );
    }

    #[test]
    fn translation_agrees_with_rho_on_random_window_snakes() {
        use crate::lusztig::{rho, Carrier, VertexDatum};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n0 in 2..=4 {
            let xi = HeightFunction::big_theta(n0).unwrap();
            for _ in 0..50 {
                let p = random_window_snake(&xi, &mut rng, 6);
                let dagger = translate_twisted(&xi, &p).unwrap();
                let lhs = rho(&VertexDatum::indicator(Carrier::GammaBigTheta { n0 }, &p).unwrap()).unwrap();
                let rhs = VertexDatum::indicator(Carrier::GammaTheta { n0 }, &dagger).unwrap();
                assert_eq!(lhs, rhs, "P = {p:?}");
            }
        }
    }
}
