//! Height functions, repetition quivers and their finite windows.
//!
//! A height function `ξ` on the nodes `1..=n` of `A_n` determines the repetition quiver
//! `Q̂^ξ`: vertices are the pairs `(i, k)` with `k - ξ_i ∈ d_i Z`, and arrows join
//! `(i, k) → (j, l)` whenever `|i - j| = 1` and `l - k = min(d_i, d_j)/2`. Untwisted
//! height functions have `d_i = 2` everywhere; twisted ones live on `A_{2n₀-1}` and have
//! `d_{n₀} = 1`, which makes the `n₀`-row half-integral.
//!
//! Half-integers are stored doubled (`k2 = 2k`) everywhere so all arithmetic is exact.

use crate::error::{Error, Result};
use crate::roots::{Root, TypeA};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

/// Formats a doubled coordinate as an integer or a half-integer `a/2`.
pub fn fmt_half(k2: i64) -> String {
    if k2 % 2 == 0 {
        format!("{}", k2 / 2)
    } else {
        format!("{k2}/2")
    }
}

/// A vertex `(i, k)` of a repetition quiver, with `k` stored doubled.
///
/// Vertices order by `(k2, i)`, which is the tie-break used for compatible readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub i: usize,
    pub k2: i64,
}

impl Vertex {
    /// The vertex `(i, k2/2)`.
    pub const fn new(i: usize, k2: i64) -> Self {
        Vertex { i, k2 }
    }

    /// The vertex `(i, k)` with integral `k`.
    pub const fn int(i: usize, k: i64) -> Self {
        Vertex { i, k2: 2 * k }
    }

    /// The same vertex with `k` shifted by `t2/2`.
    pub const fn shifted(self, t2: i64) -> Self {
        Vertex { i: self.i, k2: self.k2 + t2 }
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.k2, self.i).cmp(&(other.k2, other.i))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, fmt_half(self.k2))
    }
}

/// Untwisted or twisted height function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Untwisted,
    Twisted,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Untwisted => write!(f, "untwisted"),
            Flavor::Twisted => write!(f, "twisted"),
        }
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "untwisted" => Ok(Flavor::Untwisted),
            "twisted" => Ok(Flavor::Twisted),
            other => Err(Error::Parse(format!("unknown flavor `{other}`"))),
        }
    }
}

/// The four regions of a twisted repetition quiver.
///
/// `Lt`/`Gt` are the rows below/above `n₀`; the `n₀`-row splits into `D` (vertices with a
/// downward arrow to row `n₀+1`) and `U` (those with an arrow to row `n₀-1` only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    Lt,
    Gt,
    U,
    D,
}

impl Region {
    /// `true` for the group `Lt ⊔ U`, the complement of `Gt ⊔ D`.
    pub fn is_lower_group(self) -> bool {
        matches!(self, Region::Lt | Region::U)
    }
}

/// A height function `ξ`, stored with doubled values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeightFunction {
    flavor: Flavor,
    n: usize,
    n0: Option<usize>,
    xi2: Vec<i64>,
}

impl HeightFunction {
    /// Builds and validates a height function from doubled values `xi2[i-1] = 2ξ_i`.
    ///
    /// For the twisted flavour `n0` must be given and `n = 2n₀ - 1`.
    pub fn from_doubled(flavor: Flavor, xi2: Vec<i64>, n0: Option<usize>) -> Result<Self> {
        let n = xi2.len();
        TypeA::new(n).map_err(|_| Error::InvalidHeight("empty height function".into()))?;
        let bad = |msg: String| Err(Error::InvalidHeight(msg));
        match flavor {
            Flavor::Untwisted => {
                if n0.is_some() {
                    return bad("n0 is only meaningful for twisted height functions".into());
                }
                if xi2.iter().any(|x| x % 2 != 0) {
                    return bad("untwisted values must be integers".into());
                }
                for i in 1..n {
                    if (xi2[i - 1] - xi2[i]).abs() != 2 {
                        return bad(format!("|xi_{} - xi_{}| != 1", i, i + 1));
                    }
                }
            }
            Flavor::Twisted => {
                let Some(n0) = n0 else {
                    return bad("twisted height function needs n0".into());
                };
                if n0 < 2 || n != 2 * n0 - 1 {
                    return bad(format!("twisted height function needs n = 2*n0 - 1 with n0 >= 2 (n = {n}, n0 = {n0})"));
                }
                let x = |i: usize| xi2[i - 1];
                for i in 1..=n {
                    if i != n0 && x(i) % 2 != 0 {
                        return bad(format!("xi_{i} must be an integer"));
                    }
                }
                for i in 1..n {
                    if i + 1 == n0 || i == n0 {
                        continue;
                    }
                    if (x(i) - x(i + 1)).abs() != 2 {
                        return bad(format!("|xi_{} - xi_{}| != 1", i, i + 1));
                    }
                }
                if (x(n0 - 1) - x(n0 + 1)).abs() != 2 {
                    return bad(format!("|xi_{} - xi_{}| != 1", n0 - 1, n0 + 1));
                }
                if (x(n0) - x(n0 - 1).min(x(n0 + 1))).abs() != 1 {
                    return bad(format!("|xi_{n0} - min(xi_{}, xi_{})| != 1/2", n0 - 1, n0 + 1));
                }
            }
        }
        Ok(HeightFunction { flavor, n, n0, xi2 })
    }

    /// An untwisted height function from integer values `ξ_1, …, ξ_n`.
    pub fn untwisted(xi: &[i64]) -> Result<Self> {
        Self::from_doubled(Flavor::Untwisted, xi.iter().map(|x| 2 * x).collect(), None)
    }

    /// The canonical untwisted height function `ξ^(δ)`: values in `{0, 1}` with `ξ_1 = δ`.
    pub fn canonical(n: usize, delta: u8) -> Result<Self> {
        let xi: Vec<i64> = (1..=n).map(|i| ((delta as i64) + i as i64 - 1).rem_euclid(2)).collect();
        Self::untwisted(&xi)
    }

    /// The untwisted function `θ` on `A_{2n₀-1}`: `θ_i = i` for `i ≤ n₀`, `i - 2` above.
    pub fn theta(n0: usize) -> Result<Self> {
        let n = 2 * n0 - 1;
        let xi: Vec<i64> = (1..=n).map(|i| if i <= n0 { i as i64 } else { i as i64 - 2 }).collect();
        Self::untwisted(&xi)
    }

    /// The twisted function `Θ` on `A_{2n₀-1}`: `Θ_i = i` below `n₀`, `Θ_{n₀} = n₀ - 1/2`,
    /// and `Θ_i = i - 1` above.
    pub fn big_theta(n0: usize) -> Result<Self> {
        let n = 2 * n0 - 1;
        let xi2: Vec<i64> = (1..=n)
            .map(|i| {
                let i = i as i64;
                match i.cmp(&(n0 as i64)) {
                    std::cmp::Ordering::Less => 2 * i,
                    std::cmp::Ordering::Equal => 2 * i - 1,
                    std::cmp::Ordering::Greater => 2 * i - 2,
                }
            })
            .collect();
        Self::from_doubled(Flavor::Twisted, xi2, Some(n0))
    }

    /// A random untwisted height function on `A_n` with `ξ_1 ∈ [-3, 3]`.
    pub fn random_untwisted<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut xi = vec![rng.random_range(-3..=3)];
        while xi.len() < n {
            let last = *xi.last().expect("nonempty");
            xi.push(if rng.random_bool(0.5) { last + 1 } else { last - 1 });
        }
        Self::untwisted(&xi)
    }

    /// A random twisted height function on `A_{2n₀-1}` with `ξ_1 ∈ [-3, 3]`.
    pub fn random_twisted<R: Rng + ?Sized>(n0: usize, rng: &mut R) -> Result<Self> {
        let n = 2 * n0 - 1;
        // Integer rows form a path 1, …, n₀-1, n₀+1, …, n; row n₀ hangs off its two neighbours.
        let rows: Vec<usize> = (1..=n).filter(|&i| i != n0).collect();
        let mut xi2 = vec![0i64; n];
        let mut cur = 2 * rng.random_range(-3i64..=3);
        for &i in &rows {
            if i != 1 {
                cur += if rng.random_bool(0.5) { 2 } else { -2 };
            }
            xi2[i - 1] = cur;
        }
        let low = xi2[n0 - 2].min(xi2[n0]);
        xi2[n0 - 1] = if rng.random_bool(0.5) { low + 1 } else { low - 1 };
        Self::from_doubled(Flavor::Twisted, xi2, Some(n0))
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n₀` for twisted height functions.
    pub fn n0(&self) -> Option<usize> {
        self.n0
    }

    pub fn is_twisted(&self) -> bool {
        self.flavor == Flavor::Twisted
    }

    pub fn type_a(&self) -> TypeA {
        TypeA { n: self.n }
    }

    /// `i* = n + 1 - i`.
    pub fn star(&self, i: usize) -> usize {
        self.n + 1 - i
    }

    /// The doubled values `2ξ_1, …, 2ξ_n`.
    pub fn values2(&self) -> &[i64] {
        &self.xi2
    }

    /// `2ξ_i`.
    pub fn value2(&self, i: usize) -> i64 {
        self.xi2[i - 1]
    }

    /// `2d_i`: 4 everywhere, except 2 at `n₀` for twisted functions.
    pub fn d2(&self, i: usize) -> i64 {
        if self.n0 == Some(i) {
            2
        } else {
            4
        }
    }

    /// `2ñ`, where `ñ = n + 1` (untwisted) or `n` (twisted).
    pub fn ntilde2(&self) -> i64 {
        match self.flavor {
            Flavor::Untwisted => 2 * (self.n as i64 + 1),
            Flavor::Twisted => 2 * self.n as i64,
        }
    }

    /// The height function with every value shifted by `t2/2`.
    pub fn shifted(&self, t2: i64) -> Result<Self> {
        Self::from_doubled(self.flavor, self.xi2.iter().map(|x| x + t2).collect(), self.n0)
    }

    /// If this is one of the canonical functions `ξ^(δ)`, returns `δ`.
    pub fn canonical_delta(&self) -> Option<u8> {
        (0..=1).find(|&d| Self::canonical(self.n, d).ok().as_ref() == Some(self))
    }

    /// Membership test `k - ξ_i ∈ d_i Z`.
    pub fn is_vertex(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v.i) && (v.k2 - self.value2(v.i)).rem_euclid(self.d2(v.i)) == 0
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.is_vertex(v) {
            Ok(())
        } else {
            Err(Error::NotAVertex(v))
        }
    }

    fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        [i.wrapping_sub(1), i + 1].into_iter().filter(move |j| (1..=self.n).contains(j))
    }

    /// Sinks: nodes with `ξ_i < ξ_j` for every neighbour `j`.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.neighbours(i).all(|j| self.value2(i) < self.value2(j)))
            .collect()
    }

    /// Sources: nodes with `ξ_i - d_i > ξ_j - d_j` for every neighbour `j`.
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| {
                self.neighbours(i)
                    .all(|j| self.value2(i) - self.d2(i) > self.value2(j) - self.d2(j))
            })
            .collect()
    }

    /// The reflection `s_i ξ`: adds `d_i` at a sink, subtracts it at a source.
    pub fn reflect_height(&self, i: usize) -> Result<Self> {
        self.type_a().check_node(i)?;
        let mut xi2 = self.xi2.clone();
        if self.sinks().contains(&i) {
            xi2[i - 1] += self.d2(i);
        } else if self.sources().contains(&i) {
            xi2[i - 1] -= self.d2(i);
        } else {
            return Err(Error::NotSinkOrSource(i));
        }
        Self::from_doubled(self.flavor, xi2, self.n0)
    }

    /// Doubled length `min(d_i, d_j)` of the arrow between rows `i` and `j`.
    fn arrow_step2(&self, i: usize, j: usize) -> i64 {
        self.d2(i).min(self.d2(j)) / 2
    }

    /// `true` iff `v → w` is an arrow of `Q̂^ξ`.
    pub fn has_arrow(&self, v: Vertex, w: Vertex) -> bool {
        self.is_vertex(v)
            && self.is_vertex(w)
            && v.i.abs_diff(w.i) == 1
            && w.k2 - v.k2 == self.arrow_step2(v.i, w.i)
    }

    /// Heads of the arrows leaving `v`.
    pub fn successors(&self, v: Vertex) -> Vec<Vertex> {
        self.neighbours(v.i)
            .map(|j| Vertex::new(j, v.k2 + self.arrow_step2(v.i, j)))
            .filter(|&w| self.is_vertex(w))
            .collect()
    }

    /// `v ⪯ w`: there is an oriented path from `v` to `w` (the empty path included).
    ///
    /// Arrows strictly increase `k`, so a breadth-first search bounded by `w.k2` decides it.
    /// For `A_1` the quiver has no arrows; there the order is taken along the single row
    /// (`(1, k) ⪯ (1, l)` iff `k ≤ l`), which is the order the paths through a second row
    /// would give for `n ≥ 2`.
    pub fn preceq(&self, v: Vertex, w: Vertex) -> bool {
        if !self.is_vertex(v) || !self.is_vertex(w) || w.k2 < v.k2 {
            return false;
        }
        if v == w || self.n == 1 {
            return true;
        }
        let span = (w.k2 - v.k2) as usize + 1;
        let idx = |u: Vertex| (u.i - 1) * span + (u.k2 - v.k2) as usize;
        let mut seen = vec![false; self.n * span];
        let mut queue = VecDeque::from([v]);
        seen[idx(v)] = true;
        while let Some(u) = queue.pop_front() {
            for s in self.successors(u) {
                if s == w {
                    return true;
                }
                if s.k2 < w.k2 && !seen[idx(s)] {
                    seen[idx(s)] = true;
                    queue.push_back(s);
                }
            }
        }
        false
    }

    /// `v ≺ w`: `v ⪯ w` and `v ≠ w`.
    pub fn prec(&self, v: Vertex, w: Vertex) -> bool {
        v != w && self.preceq(v, w)
    }

    /// The duality `D^sign`, with `D(i, k) = (i*, k - ñ)`.
    pub fn dualize_vertex(&self, v: Vertex, sign: i64) -> Vertex {
        Vertex::new(self.star(v.i), v.k2 - sign * self.ntilde2())
    }

    /// `D(v)`.
    pub fn dual(&self, v: Vertex) -> Vertex {
        self.dualize_vertex(v, 1)
    }

    /// `D^{-1}(v)`.
    pub fn dual_inv(&self, v: Vertex) -> Vertex {
        self.dualize_vertex(v, -1)
    }

    /// Region of a vertex of a twisted quiver.
    pub fn region(&self, v: Vertex) -> Result<Region> {
        let n0 = self.n0.ok_or_else(|| Error::WrongFlavor("regions need a twisted height function".into()))?;
        self.check_vertex(v)?;
        Ok(match v.i.cmp(&n0) {
            std::cmp::Ordering::Less => Region::Lt,
            std::cmp::Ordering::Greater => Region::Gt,
            std::cmp::Ordering::Equal => {
                if self.is_vertex(Vertex::new(n0 + 1, v.k2 + 1)) {
                    Region::D
                } else {
                    Region::U
                }
            }
        })
    }

    /// Doubled bounds `[2ξ_i, 2(n - 1 + ξ_{i*})]` of row `i` of the window `Γ^ξ`.
    pub fn window_row_bounds2(&self, i: usize) -> (i64, i64) {
        (self.value2(i), 2 * (self.n as i64 - 1) + self.value2(self.star(i)))
    }

    /// `true` iff `v ∈ Γ^ξ`.
    pub fn in_window(&self, v: Vertex) -> bool {
        if !self.is_vertex(v) {
            return false;
        }
        let (lo, hi) = self.window_row_bounds2(v.i);
        lo <= v.k2 && v.k2 <= hi
    }

    /// The window `Γ^ξ = {(i, k) : ξ_i ≤ k ≤ n - 1 + ξ_{i*}}`, sorted by `(k, i)`.
    pub fn gamma_window(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.type_a().num_positive_roots());
        for i in 1..=self.n {
            let (lo, hi) = self.window_row_bounds2(i);
            let mut k2 = lo;
            while k2 <= hi {
                out.push(Vertex::new(i, k2));
                k2 += self.d2(i);
            }
        }
        out.sort();
        out
    }

    /// A compatible reading of `Γ^ξ` and its word.
    ///
    /// Arrows strictly increase `k`, so ordering by `(k, i)` is a topological order.
    pub fn compatible_reading(&self) -> (Vec<Vertex>, Vec<usize>) {
        let reading = self.gamma_window();
        let word = reading.iter().map(|v| v.i).collect();
        (reading, word)
    }

    /// The labelling `φ_ξ : Γ^ξ → Φ⁺` obtained from the inversion sequence of the
    /// compatible reading.
    pub fn phi_map(&self) -> Result<BTreeMap<Vertex, Root>> {
        let (reading, word) = self.compatible_reading();
        let roots = self.type_a().inversion_sequence(&word)?;
        Ok(reading.into_iter().zip(roots).collect())
    }

    /// `φ_ξ(v)` for `v ∈ Γ^ξ`.
    pub fn phi(&self, v: Vertex) -> Result<Root> {
        if !self.in_window(v) {
            return Err(Error::OutsideWindow(v));
        }
        Ok(self.phi_map()?[&v])
    }

    /// The inverse labelling `Φ⁺ → Γ^ξ`.
    pub fn phi_inverse_map(&self) -> Result<HashMap<Root, Vertex>> {
        Ok(self.phi_map()?.into_iter().map(|(v, r)| (r, v)).collect())
    }

    /// DOT rendering of the arrows of `Q̂^ξ` between doubled heights `k2_lo..=k2_hi`.
    ///
    /// Vertices are labelled `i:k2`; vertices of `Γ^ξ` carry their `φ` label.
    pub fn to_dot(&self, k2_lo: i64, k2_hi: i64) -> Result<String> {
        let labels = self.phi_map()?;
        let mut s = String::from("digraph Q {\n  rankdir=LR;\n");
        let mut vertices = Vec::new();
        for i in 1..=self.n {
            for k2 in k2_lo..=k2_hi {
                let v = Vertex::new(i, k2);
                if self.is_vertex(v) {
                    vertices.push(v);
                }
            }
        }
        vertices.sort();
        for v in &vertices {
            let name = format!("{}:{}", v.i, v.k2);
            match labels.get(v) {
                Some(r) => s.push_str(&format!("  \"{name}\" [label=\"{name}\\n{r}\", shape=box];\n")),
                None => s.push_str(&format!("  \"{name}\";\n")),
            }
        }
        for v in &vertices {
            for w in self.successors(*v) {
                if w.k2 <= k2_hi {
                    s.push_str(&format!("  \"{}:{}\" -> \"{}:{}\";\n", v.i, v.k2, w.i, w.k2));
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

/// Closed form of `φ` on the canonical window `Γ^(δ)`: `φ(i, k) = α_{x,y}` with
/// `x = i - k` if `i - k > 0` else `k - i + 1`, and `y = i + k` if `i + k ≤ n` else
/// `2n + 1 - i - k`.
pub fn canonical_phi_closed_form(n: usize, v: Vertex) -> Root {
    let (i, k) = (v.i as i64, v.k2 / 2);
    let n = n as i64;
    let x = if i - k > 0 { i - k } else { k - i + 1 };
    let y = if i + k <= n { i + k } else { 2 * n + 1 - i - k };
    Root::interval(x.min(y) as usize, x.max(y) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_xi() -> HeightFunction {
        HeightFunction::untwisted(&[2, 1, 2, 3, 4]).unwrap()
    }

    fn twisted_example() -> HeightFunction {
        HeightFunction::from_doubled(Flavor::Twisted, vec![-2, 0, -1, 2, 4], Some(3)).unwrap()
    }

    #[test]
    fn vertex_membership() {
        let xi = paper_xi();
        assert!(xi.is_vertex(Vertex::int(2, 1)));
        assert!(!xi.is_vertex(Vertex::int(2, 2)));
        assert!(twisted_example().is_vertex(Vertex::new(3, 1)));
    }

    #[test]
    fn sinks_sources_and_reflection() {
        let xi = paper_xi();
        assert!(xi.sinks().contains(&2));
        assert_eq!(xi.reflect_height(2).unwrap().values2(), &[4, 6, 4, 6, 8]);
        let inc = HeightFunction::untwisted(&[1, 2, 3]).unwrap();
        assert_eq!(inc.sinks(), vec![1]);
        assert_eq!(inc.reflect_height(1).unwrap().values2(), &[6, 4, 6]);
        assert!(twisted_example().sinks().contains(&1));
        assert_eq!(inc.reflect_height(2), Err(Error::NotSinkOrSource(2)));
    }

    #[test]
    fn twisted_sink_at_n0_moves_by_one() {
        // n0 = 2: Θ-like function with a sink at the middle node.
        let xi = HeightFunction::from_doubled(Flavor::Twisted, vec![2, -1, 0], Some(2)).unwrap();
        assert!(xi.sinks().contains(&2));
        assert_eq!(xi.reflect_height(2).unwrap().value2(2), 1);
    }

    #[test]
    fn arrows_and_paths() {
        let xi = paper_xi();
        assert!(xi.has_arrow(Vertex::int(2, 1), Vertex::int(1, 2)));
        assert!(!xi.has_arrow(Vertex::int(1, 2), Vertex::int(3, 3)));
        assert!(twisted_example().has_arrow(Vertex::new(3, -1), Vertex::int(2, 0)));
        let c = HeightFunction::canonical(5, 1).unwrap();
        assert!(c.preceq(Vertex::int(2, 0), Vertex::int(4, 4)));
        assert!(c.preceq(Vertex::int(2, 0), Vertex::int(2, 0)));
        assert!(!xi.preceq(Vertex::int(1, 2), Vertex::int(1, 3)));
    }

    #[test]
    fn windows_and_readings() {
        let xi = paper_xi();
        let g = xi.gamma_window();
        assert_eq!(g.len(), 15);
        assert!(g.contains(&Vertex::int(2, 1)) && g.contains(&Vertex::int(1, 8)));
        let (_, word) = xi.compatible_reading();
        assert_eq!(word[0], 2);
        let n2 = HeightFunction::untwisted(&[1, 2]).unwrap();
        assert_eq!(n2.compatible_reading().1, vec![1, 2, 1]);
        let n1 = HeightFunction::untwisted(&[0]).unwrap();
        assert_eq!(n1.gamma_window(), vec![Vertex::int(1, 0)]);
        assert_eq!(HeightFunction::big_theta(3).unwrap().gamma_window().len(), 15);
    }

    #[test]
    fn duality_examples() {
        let c5 = HeightFunction::canonical(5, 0).unwrap();
        assert_eq!(c5.dual(Vertex::int(1, 2)), Vertex::int(5, -4));
        let c3 = HeightFunction::untwisted(&[1, 2, 3]).unwrap();
        assert_eq!(c3.dual_inv(Vertex::int(2, 0)), Vertex::int(2, 4));
        let t = HeightFunction::big_theta(2).unwrap();
        assert_eq!(t.dual_inv(Vertex::int(3, 2)), Vertex::int(1, 5));
    }

    #[test]
    fn regions() {
        let tw = twisted_example();
        assert_eq!(tw.region(Vertex::new(3, 1)).unwrap(), Region::D);
        assert_eq!(tw.region(Vertex::new(3, -1)).unwrap(), Region::U);
        let t = HeightFunction::big_theta(2).unwrap();
        assert_eq!(t.region(Vertex::new(2, 9)).unwrap(), Region::U);
        assert_eq!(t.region(Vertex::int(1, 5)).unwrap(), Region::Lt);
    }

    #[test]
    fn invalid_heights_are_rejected() {
        assert!(HeightFunction::untwisted(&[0, 2]).is_err());
        assert!(HeightFunction::from_doubled(Flavor::Twisted, vec![0, 1, 2, 3], Some(2)).is_err());
        assert!(HeightFunction::from_doubled(Flavor::Twisted, vec![2, 2, 0], Some(2)).is_err());
    }
}
