//! Lusztig data and their transition maps.
//!
//! A Lusztig datum is a tuple of nonnegative integers attached to a reduced word of the
//! longest element `w₀`. Changing the word by a commutation (2-move) permutes the tuple;
//! changing it by a braid relation (3-move) acts by the tropical map
//! `(a, b, c) ↦ (b + c - m, m, a + b - m)` with `m = min(a, c)`.
//!
//! Data attached to adapted words are more conveniently keyed by quiver vertices: this is
//! [`VertexDatum`]. The map `ρ` translating data from the twisted window `Γ^Θ` to the
//! untwisted window `Γ^θ` is a composite of 3-moves along a chain of vertex sets
//! `V⟨n₀⟩ = Γ^Θ, V⟨n₀+1⟩, …, V⟨n+1⟩ = Γ^θ`. Since 2-moves act trivially on vertex-keyed
//! data, only the 3-moves are ever applied; braid triples are located by their keys.

use crate::error::{Error, Result};
use crate::quiver::{HeightFunction, Vertex};
use crate::roots::TypeA;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The tropical 3-move `(a, b, c) ↦ (b + c - m, m, a + b - m)` with `m = min(a, c)`.
pub fn three_move(a: u64, b: u64, c: u64) -> (u64, u64, u64) {
    let m = a.min(c);
    (b + c - m, m, a + b - m)
}

/// A reduced word together with its Lusztig datum.
///
/// Words and counts are bound in one value so that transitions cannot desynchronize them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordDatum {
    ta: TypeA,
    word: Vec<usize>,
    counts: Vec<u64>,
}

impl WordDatum {
    /// Binds a reduced word to a datum of the same length.
    pub fn new(ta: TypeA, word: Vec<usize>, counts: Vec<u64>) -> Result<Self> {
        if word.len() != counts.len() {
            return Err(Error::Parse(format!(
                "word has {} letters but datum has {} entries",
                word.len(),
                counts.len()
            )));
        }
        ta.inversion_sequence(&word)?;
        Ok(WordDatum { ta, word, counts })
    }

    pub fn type_a(&self) -> TypeA {
        self.ta
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The weight `Σ_r c_r β_r` as a coefficient vector on the simple roots.
    pub fn weight(&self) -> Vec<i64> {
        let roots = self.ta.inversion_sequence(&self.word).expect("word is reduced by construction");
        let mut w = vec![0i64; self.ta.n];
        for (beta, &c) in roots.iter().zip(&self.counts) {
            for m in beta.lo..=beta.hi {
                w[m - 1] += c as i64;
            }
        }
        w
    }

    /// The 2-move at positions `r, r+1` (0-based): swaps letters and counts.
    pub fn two_move(&self, r: usize) -> Result<Self> {
        if r + 1 >= self.word.len() || self.word[r].abs_diff(self.word[r + 1]) < 2 {
            return Err(Error::NotCommuting(r, r + 1));
        }
        let mut out = self.clone();
        out.word.swap(r, r + 1);
        out.counts.swap(r, r + 1);
        Ok(out)
    }

    /// The 3-move centred at position `r` (0-based): letters `(i, j, i)` at `r-1, r, r+1`
    /// become `(j, i, j)` and the counts are transformed by [`three_move`].
    pub fn apply_three_move(&self, r: usize) -> Result<Self> {
        if r == 0 || r + 1 >= self.word.len() {
            return Err(Error::NotBraidPattern(r));
        }
        let (i, j, i2) = (self.word[r - 1], self.word[r], self.word[r + 1]);
        if i != i2 || i.abs_diff(j) != 1 {
            return Err(Error::NotBraidPattern(r));
        }
        let mut out = self.clone();
        out.word[r - 1] = j;
        out.word[r] = i;
        out.word[r + 1] = j;
        let (a, b, c) = three_move(self.counts[r - 1], self.counts[r], self.counts[r + 1]);
        out.counts[r - 1] = a;
        out.counts[r] = b;
        out.counts[r + 1] = c;
        Ok(out)
    }

    /// The dual datum: word `(i_N*, …, i_1*)` with counts `(c_N, …, c_1)`.
    pub fn star_datum(&self) -> Result<Self> {
        if !self.ta.is_longest_word(&self.word) {
            return Err(Error::NotLongestWord);
        }
        Ok(WordDatum {
            ta: self.ta,
            word: self.word.iter().rev().map(|&i| self.ta.star(i)).collect(),
            counts: self.counts.iter().rev().copied().collect(),
        })
    }
}

/// The vertex sets on which vertex-keyed data live.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Carrier {
    /// `Γ^θ` on `A_{2n₀-1}`; equal to `V⟨n+1⟩`.
    GammaTheta { n0: usize },
    /// `Γ^Θ` on `A_{2n₀-1}`; equal to `V⟨n₀⟩`.
    GammaBigTheta { n0: usize },
    /// An intermediate set `V⟨j⟩`, `n₀ < j ≤ n`.
    Vj { n0: usize, j: usize },
    /// The canonical untwisted window `Γ^(δ)` of `A_n`.
    Delta { n: usize, delta: u8 },
}

impl Carrier {
    /// `V⟨j⟩` for `j ∈ [n₀, n+1]`, normalized so that the two ends are the windows.
    pub fn vj(n0: usize, j: usize) -> Result<Self> {
        let n = 2 * n0 - 1;
        if n0 < 2 || j < n0 || j > n + 1 {
            return Err(Error::WrongCarrier(format!("V<{j}> needs n0 <= j <= n+1 (n0 = {n0})")));
        }
        Ok(if j == n0 {
            Carrier::GammaBigTheta { n0 }
        } else if j == n + 1 {
            Carrier::GammaTheta { n0 }
        } else {
            Carrier::Vj { n0, j }
        })
    }

    /// Rank `n` of the underlying root system.
    pub fn n(&self) -> usize {
        match *self {
            Carrier::GammaTheta { n0 } | Carrier::GammaBigTheta { n0 } | Carrier::Vj { n0, .. } => 2 * n0 - 1,
            Carrier::Delta { n, .. } => n,
        }
    }

    /// `n₀` for the carriers of the `ρ` chain.
    pub fn n0(&self) -> Option<usize> {
        match *self {
            Carrier::GammaTheta { n0 } | Carrier::GammaBigTheta { n0 } | Carrier::Vj { n0, .. } => Some(n0),
            Carrier::Delta { .. } => None,
        }
    }

    /// The index `j` with `self = V⟨j⟩`, for chain carriers.
    pub fn chain_index(&self) -> Option<usize> {
        match *self {
            Carrier::GammaBigTheta { n0 } => Some(n0),
            Carrier::GammaTheta { n0 } => Some(2 * n0),
            Carrier::Vj { j, .. } => Some(j),
            Carrier::Delta { .. } => None,
        }
    }

    /// The height function whose window this carrier is, when it is one.
    pub fn height_function(&self) -> Option<HeightFunction> {
        match *self {
            Carrier::GammaTheta { n0 } => HeightFunction::theta(n0).ok(),
            Carrier::GammaBigTheta { n0 } => HeightFunction::big_theta(n0).ok(),
            Carrier::Delta { n, delta } => HeightFunction::canonical(n, delta).ok(),
            Carrier::Vj { .. } => None,
        }
    }

    /// The vertices of the carrier, sorted by `(k, i)`.
    pub fn vertices(&self) -> Vec<Vertex> {
        if let Some(xi) = self.height_function() {
            return xi.gamma_window();
        }
        let Carrier::Vj { n0, j } = *self else { unreachable!() };
        let n = 2 * n0 - 1;
        let theta = HeightFunction::theta(n0).expect("theta is valid for n0 >= 2");
        let mut out: Vec<Vertex> = theta.gamma_window().into_iter().filter(|v| v.i < j).collect();
        for k in 0..=(2 * n - 2 * j + 1) as i64 {
            out.push(Vertex::new(j, 2 * j as i64 - 3 + 2 * k));
        }
        for i in j + 1..=n {
            for k in 0..=(n - i) as i64 {
                out.push(Vertex::new(i, 2 * (i as i64 - 1 + 2 * k)));
            }
        }
        out.sort();
        out
    }

    /// The word read off the carrier in `(k, i)` order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.vertices().iter().map(|v| v.i).collect()
    }

    /// Parses the JSON tag: `gamma-theta`, `gamma-THETA`, `vj:<j>` (with `n₀` from the
    /// context) or `delta:<0|1>` (with `n` from the context).
    pub fn parse(tag: &str, n: usize) -> Result<Self> {
        let n0 = n.div_ceil(2);
        let need_odd = || {
            if n % 2 == 1 && n >= 3 {
                Ok(())
            } else {
                Err(Error::WrongCarrier(format!("carrier `{tag}` needs odd n >= 3, got {n}")))
            }
        };
        match tag {
            "gamma-theta" => need_odd().map(|_| Carrier::GammaTheta { n0 }),
            "gamma-THETA" => need_odd().map(|_| Carrier::GammaBigTheta { n0 }),
            _ => {
                if let Some(j) = tag.strip_prefix("vj:") {
                    need_odd()?;
                    let j = j.parse().map_err(|_| Error::Parse(format!("bad carrier `{tag}`")))?;
                    Carrier::vj(n0, j)
                } else if let Some(d) = tag.strip_prefix("delta:") {
                    match d {
                        "0" => Ok(Carrier::Delta { n, delta: 0 }),
                        "1" => Ok(Carrier::Delta { n, delta: 1 }),
                        _ => Err(Error::Parse(format!("bad carrier `{tag}`"))),
                    }
                } else {
                    Err(Error::Parse(format!("unknown carrier `{tag}`")))
                }
            }
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::GammaTheta { .. } => write!(f, "gamma-theta"),
            Carrier::GammaBigTheta { .. } => write!(f, "gamma-THETA"),
            Carrier::Vj { j, .. } => write!(f, "vj:{j}"),
            Carrier::Delta { delta, .. } => write!(f, "delta:{delta}"),
        }
    }
}

/// A Lusztig datum keyed by the vertices of a carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexDatum {
    carrier: Carrier,
    counts: BTreeMap<Vertex, u64>,
}

impl VertexDatum {
    /// Builds a datum whose keys must be exactly the carrier.
    pub fn new(carrier: Carrier, counts: BTreeMap<Vertex, u64>) -> Result<Self> {
        let keys: BTreeSet<Vertex> = counts.keys().copied().collect();
        let expected: BTreeSet<Vertex> = carrier.vertices().into_iter().collect();
        if keys != expected {
            let extra: Vec<String> = keys.difference(&expected).map(|v| v.to_string()).collect();
            let missing: Vec<String> = expected.difference(&keys).map(|v| v.to_string()).collect();
            return Err(Error::WrongCarrier(format!(
                "keys do not match {carrier}: extra [{}], missing [{}]",
                extra.join(" "),
                missing.join(" ")
            )));
        }
        Ok(VertexDatum { carrier, counts })
    }

    /// The zero datum on a carrier.
    pub fn zero(carrier: Carrier) -> Self {
        let counts = carrier.vertices().into_iter().map(|v| (v, 0)).collect();
        VertexDatum { carrier, counts }
    }

    /// Builds a datum from sparse entries; unlisted keys are zero.
    pub fn from_sparse(carrier: Carrier, entries: impl IntoIterator<Item = (Vertex, u64)>) -> Result<Self> {
        let mut d = Self::zero(carrier);
        for (v, c) in entries {
            match d.counts.get_mut(&v) {
                Some(slot) => *slot += c,
                None => return Err(Error::WrongCarrier(format!("{v} is not in {carrier}"))),
            }
        }
        Ok(d)
    }

    /// `e(P) = Σ_s e_{P_s}` for a sequence of carrier vertices.
    pub fn indicator(carrier: Carrier, points: &[Vertex]) -> Result<Self> {
        Self::from_sparse(carrier, points.iter().map(|&v| (v, 1)))
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn counts(&self) -> &BTreeMap<Vertex, u64> {
        &self.counts
    }

    /// `c_v`, or 0 if `v` is not a key.
    pub fn get(&self, v: Vertex) -> u64 {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    /// Keys with nonzero count, in `(k, i)` order.
    pub fn support(&self) -> Vec<Vertex> {
        self.counts.iter().filter(|(_, &c)| c > 0).map(|(&v, _)| v).collect()
    }

    /// Total of all counts.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Serializes to the word of the carrier read in `(k, i)` order.
    pub fn to_word_datum(&self) -> Result<WordDatum> {
        let ta = TypeA::new(self.carrier.n())?;
        let (word, counts) = self.counts.iter().map(|(v, &c)| (v.i, c)).unzip();
        WordDatum::new(ta, word, counts)
    }

    /// Re-keys a word datum on the window of `xi`: each position is sent to the vertex
    /// whose `φ_ξ`-label is that position's inversion root.
    ///
    /// This is valid exactly when the word is commutation-equivalent to an adapted word
    /// of `xi`; otherwise some root is attached to a different position and the result is
    /// meaningless, so callers use it only in that situation.
    pub fn from_word_datum(carrier: Carrier, wd: &WordDatum) -> Result<Self> {
        let xi = carrier
            .height_function()
            .ok_or_else(|| Error::WrongCarrier(format!("{carrier} is not the window of a height function")))?;
        if xi.n() != wd.type_a().n {
            return Err(Error::RankMismatch { expected: xi.n(), got: wd.type_a().n });
        }
        let inv = xi.phi_inverse_map()?;
        let roots = wd.type_a().inversion_sequence(wd.word())?;
        let mut counts = BTreeMap::new();
        for (beta, &c) in roots.iter().zip(wd.counts()) {
            let v = inv.get(beta).ok_or(Error::NotLongestWord)?;
            counts.insert(*v, c);
        }
        Self::new(carrier, counts)
    }
}

/// Keys of the braid triple `r` of `ρ⟨j⟩`, before and after the move.
///
/// Before: `(j, j+2r-1/2), (j+1, j+2r), (j, j+2r+1/2)`; after:
/// `(j+1, j+2r-1/2), (j, j+2r), (j+1, j+2r+1/2)`.
pub fn rho_triple_keys(j: usize, r: usize) -> ([Vertex; 3], [Vertex; 3]) {
    let m2 = 2 * (j + 2 * r) as i64;
    (
        [Vertex::new(j, m2 - 1), Vertex::new(j + 1, m2), Vertex::new(j, m2 + 1)],
        [Vertex::new(j + 1, m2 - 1), Vertex::new(j, m2), Vertex::new(j + 1, m2 + 1)],
    )
}

/// Re-keyed boundary entries of `ρ⟨j⟩`: `(j, j-3/2) ↦ (j, j-2)` and
/// `(j, 2n-j-1/2) ↦ (j, 2n-j)`.
pub fn rho_boundary_keys(n: usize, j: usize) -> [(Vertex, Vertex); 2] {
    let (j2, n2) = (2 * j as i64, 2 * n as i64);
    [
        (Vertex::new(j, j2 - 3), Vertex::new(j, j2 - 4)),
        (Vertex::new(j, 2 * n2 - j2 - 1), Vertex::new(j, 2 * n2 - j2)),
    ]
}

/// One step `ρ⟨j⟩ : V⟨j⟩ → V⟨j+1⟩`, applying the triples in the given order of `r`.
///
/// The triples are pairwise disjoint, so the order does not matter; it is a parameter only
/// so that this independence can be tested.
pub fn rho_step_ordered(j: usize, d: &VertexDatum, order: &[usize]) -> Result<VertexDatum> {
    let n0 = d
        .carrier
        .n0()
        .ok_or_else(|| Error::WrongCarrier("rho needs a carrier of the V<j> chain".into()))?;
    let n = 2 * n0 - 1;
    if j < n0 || j > n || d.carrier != Carrier::vj(n0, j)? {
        return Err(Error::WrongCarrier(format!("rho step {j} cannot act on a datum on {}", d.carrier)));
    }
    let target = Carrier::vj(n0, j + 1)?;
    let mut sources = d.counts.clone();
    let mut out = BTreeMap::new();
    let put = |out: &mut BTreeMap<Vertex, u64>, v: Vertex, c: u64| -> Result<()> {
        if out.insert(v, c).is_some() {
            return Err(Error::WrongCarrier(format!("two sources map onto {v} in rho step {j}")));
        }
        Ok(())
    };
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n - j).collect::<Vec<_>>() {
        return Err(Error::WrongCarrier(format!("triple order must permute 0..{}", n - j)));
    }
    for &r in order {
        let (before, after) = rho_triple_keys(j, r);
        let mut take = |v: Vertex| {
            sources
                .remove(&v)
                .ok_or_else(|| Error::WrongCarrier(format!("braid key {v} missing from {}", d.carrier)))
        };
        let (a, b, c) = (take(before[0])?, take(before[1])?, take(before[2])?);
        let (a2, b2, c2) = three_move(a, b, c);
        put(&mut out, after[0], a2)?;
        put(&mut out, after[1], b2)?;
        put(&mut out, after[2], c2)?;
    }
    for (from, to) in rho_boundary_keys(n, j) {
        if let Some(c) = sources.remove(&from) {
            put(&mut out, to, c)?;
        }
    }
    for (v, c) in sources {
        put(&mut out, v, c)?;
    }
    VertexDatum::new(target, out)
}

/// One step `ρ⟨j⟩ : V⟨j⟩ → V⟨j+1⟩` with the triples applied in ascending `r`.
pub fn rho_step(j: usize, d: &VertexDatum) -> Result<VertexDatum> {
    let n0 = d.carrier.n0().unwrap_or(0);
    let count = (2 * n0).saturating_sub(1).saturating_sub(j);
    rho_step_ordered(j, d, &(0..count).collect::<Vec<_>>())
}

/// `ρ = ρ⟨n⟩ ∘ ⋯ ∘ ρ⟨n₀⟩`, translating a datum on `Γ^Θ` to a datum on `Γ^θ`.
pub fn rho(d: &VertexDatum) -> Result<VertexDatum> {
    let Carrier::GammaBigTheta { n0 } = d.carrier else {
        return Err(Error::WrongCarrier(format!("rho needs a datum on gamma-THETA, got {}", d.carrier)));
    };
    let mut cur = d.clone();
    for j in n0..=2 * n0 - 1 {
        cur = rho_step(j, &cur)?;
    }
    Ok(cur)
}

/// All intermediate data `V⟨n₀⟩, …, V⟨n+1⟩` of `ρ`.
pub fn rho_chain(d: &VertexDatum) -> Result<Vec<VertexDatum>> {
    let Carrier::GammaBigTheta { n0 } = d.carrier else {
        return Err(Error::WrongCarrier(format!("rho needs a datum on gamma-THETA, got {}", d.carrier)));
    };
    let mut chain = vec![d.clone()];
    for j in n0..=2 * n0 - 1 {
        let next = rho_step(j, chain.last().expect("chain is nonempty"))?;
        chain.push(next);
    }
    Ok(chain)
}

/// The dual carrier parity `δ∨ = 1 - δ` of the canonical windows.
pub fn dual_delta(delta: u8) -> u8 {
    1 - delta
}

/// Star duality on `Γ^(δ)`-keyed data: `c∨_{(i,k)} = c_{(i*, n-k)}` on `Γ^(δ∨)`.
pub fn star_vertex_datum(d: &VertexDatum) -> Result<VertexDatum> {
    let Carrier::Delta { n, delta } = d.carrier else {
        return Err(Error::WrongCarrier(format!("star duality needs a canonical window, got {}", d.carrier)));
    };
    let target = Carrier::Delta { n, delta: dual_delta(delta) };
    let n2 = 2 * n as i64;
    let counts = d
        .counts
        .iter()
        .map(|(v, &c)| (Vertex::new(n + 1 - v.i, n2 - v.k2), c))
        .collect();
    VertexDatum::new(target, counts)
}
