//! Randomized property suites behind the `verify` command.
//!
//! Each suite draws its inputs from a seeded generator, checks one family of properties,
//! and reports pass/fail counts together with the first counterexample found:
//!
//! * `moves`: 2-moves and 3-moves are involutions and preserve the weight, along random
//!   walks of moves starting from reduced words of the longest element;
//! * `rho`: `ρ(e(P)) = e(P†)` for random snakes in `Γ^Θ`;
//! * `reineke`: the min-cut and brute-force evaluations of `ε` agree, and the `ε`
//!   evaluation of `tfd` agrees with every determinate case-analysis prediction;
//! * `qr`: `Q` and `R` of random prime snakes are disjoint snakes, and the untwisted
//!   formulas are equivariant under the duality (`Q∘D = D∘R`, `R∘D = D∘Q`).

use crate::error::{Error, Result};
use crate::lusztig::{rho, Carrier, VertexDatum, WordDatum};
use crate::quiver::{Flavor, HeightFunction, Vertex};
use crate::reineke::{epsilon, epsilon_brute, omega, parity, BRUTE_FORCE_LIMIT};
use crate::roots::TypeA;
use crate::snakes::{
    in_prime_snake_position, is_snake, qr_sequences, qr_untwisted, random_snake, random_window_snake, translate_twisted,
    vertices_between,
};
use crate::tsystem::{epsilon_tfd_left, epsilon_tfd_right, predicted_tfd_left, predicted_tfd_right};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Moves,
    Rho,
    Reineke,
    Qr,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moves" => Ok(Suite::Moves),
            "rho" => Ok(Suite::Rho),
            "reineke" => Ok(Suite::Reineke),
            "qr" => Ok(Suite::Qr),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}` (expected moves, rho, reineke, qr or all)"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Moves => "moves",
            Suite::Rho => "rho",
            Suite::Reineke => "reineke",
            Suite::Qr => "qr",
            Suite::All => "all",
        };
        write!(f, "{s}")
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite, passed: 0, failed: 0, first_counterexample: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} passed, {} failed", self.suite, self.passed, self.failed)?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "; first counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Runs a suite (or all of them) with `trials` random inputs per property family.
pub fn run(suite: Suite, trials: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match suite {
        Suite::Moves => vec![moves(trials, &mut rng)?],
        Suite::Rho => vec![rho_suite(trials, &mut rng)?],
        Suite::Reineke => vec![reineke_suite(trials, &mut rng)?],
        Suite::Qr => vec![qr_suite(trials, &mut rng)?],
        Suite::All => vec![
            moves(trials, &mut rng)?,
            rho_suite(trials, &mut rng)?,
            reineke_suite(trials, &mut rng)?,
            qr_suite(trials, &mut rng)?,
        ],
    })
}

/// The reduced word `(1, …, n, 1, …, n-1, …, 1, 2, 1)` of the longest element.
pub fn longest_word(n: usize) -> Vec<usize> {
    (0..n).flat_map(|m| 1..=n - m).collect()
}

/// Every 2-move and 3-move applicable to `w`, as `(is_three_move, position)`.
pub fn applicable_moves(w: &[usize]) -> Vec<(bool, usize)> {
    let mut out = Vec::new();
    for r in 0..w.len().saturating_sub(1) {
        if w[r].abs_diff(w[r + 1]) >= 2 {
            out.push((false, r));
        }
        if r >= 1 && w[r - 1] == w[r + 1] && w[r].abs_diff(w[r - 1]) == 1 {
            out.push((true, r));
        }
    }
    out
}

fn apply_move(d: &WordDatum, (three, r): (bool, usize)) -> Result<WordDatum> {
    if three {
        d.apply_three_move(r)
    } else {
        d.two_move(r)
    }
}

/// A random datum on the longest word of `A_n` with entries in `0..=max`.
pub fn random_word_datum<R: Rng + ?Sized>(n: usize, max: u64, rng: &mut R) -> Result<WordDatum> {
    let ta = TypeA::new(n)?;
    let word = longest_word(n);
    let counts = (0..word.len()).map(|_| rng.random_range(0..=max)).collect();
    WordDatum::new(ta, word, counts)
}

/// A random datum on a carrier with entries in `0..=max` (each entry zero with probability ½).
pub fn random_vertex_datum<R: Rng + ?Sized>(carrier: Carrier, max: u64, rng: &mut R) -> Result<VertexDatum> {
    let entries: Vec<(Vertex, u64)> = carrier
        .vertices()
        .into_iter()
        .map(|v| (v, if rng.random_bool(0.5) { 0 } else { rng.random_range(0..=max) }))
        .collect();
    VertexDatum::from_sparse(carrier, entries)
}

fn moves<R: Rng + ?Sized>(trials: usize, rng: &mut R) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Moves);
    for _ in 0..trials {
        let n = rng.random_range(1..=6);
        let mut d = random_word_datum(n, 5, rng)?;
        for _ in 0..200 {
            let ms = applicable_moves(d.word());
            let Some(&mv) = ms.choose(rng) else { break };
            let e = apply_move(&d, mv)?;
            let back = apply_move(&e, mv)?;
            rep.record(back == d && e.weight() == d.weight(), || format!("move {mv:?} on {d:?}"));
            d = e;
        }
    }
    Ok(rep)
}

fn rho_suite<R: Rng + ?Sized>(trials: usize, rng: &mut R) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Rho);
    for n0 in 2..=5 {
        let xi = HeightFunction::big_theta(n0)?;
        for _ in 0..trials {
            let p = random_window_snake(&xi, rng, 2 * n0);
            let lhs = rho(&VertexDatum::indicator(Carrier::GammaBigTheta { n0 }, &p)?)?;
            let rhs = VertexDatum::indicator(Carrier::GammaTheta { n0 }, &translate_twisted(&xi, &p)?)?;
            rep.record(lhs == rhs, || format!("n0 = {n0}, P = {p:?}"));
        }
    }
    Ok(rep)
}

fn random_height<R: Rng + ?Sized>(flavor: Flavor, rng: &mut R) -> Result<HeightFunction> {
    match flavor {
        Flavor::Untwisted => HeightFunction::random_untwisted(rng.random_range(1..=6), rng),
        Flavor::Twisted => HeightFunction::random_twisted(rng.random_range(2..=4), rng),
    }
}

fn reineke_suite<R: Rng + ?Sized>(trials: usize, rng: &mut R) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Reineke);
    for n in 2..=6 {
        for _ in 0..trials.div_ceil(5) {
            let delta = rng.random_range(0..=1u8);
            let c = random_vertex_datum(Carrier::Delta { n, delta }, 3, rng)?;
            for j in (1..=n).filter(|&j| parity(j) == delta) {
                if omega(n, j)?.vertices.len() > BRUTE_FORCE_LIMIT {
                    continue;
                }
                let (a, b) = (epsilon(j, &c)?, epsilon_brute(j, &c)?);
                rep.record(a == b, || format!("j = {j}, c = {c:?}: min-cut {a}, brute force {b}"));
            }
        }
    }
    for flavor in [Flavor::Untwisted, Flavor::Twisted] {
        let mut done = 0;
        while done < trials {
            let xi = random_height(flavor, rng)?;
            let len = rng.random_range(1..=3);
            let prime = rng.random_bool(0.5);
            let p = random_snake(&xi, rng, len, prime, 0, 8);
            let first = p[0];
            let last = *p.last().expect("nonempty");
            let v = *vertices_between(&xi, first.k2 - 12, first.k2 - 1).choose(rng).expect("rows are infinite");
            if xi.prec(v, first) {
                if let (Some(x), Some(e)) = (predicted_tfd_left(&xi, v, &p).value(), epsilon_tfd_left(&xi, v, &p)) {
                    done += 1;
                    rep.record(x == e, || format!("left: xi = {xi:?}, v = {v}, P = {p:?}: predicted {x}, epsilon {e}"));
                }
            }
            let w = *vertices_between(&xi, last.k2 + 1, last.k2 + 12).choose(rng).expect("rows are infinite");
            if xi.prec(last, w) {
                if let (Some(x), Some(e)) = (predicted_tfd_right(&xi, &p, w).value(), epsilon_tfd_right(&xi, &p, w)) {
                    done += 1;
                    rep.record(x == e, || format!("right: xi = {xi:?}, w = {w}, P = {p:?}: predicted {x}, epsilon {e}"));
                }
            }
        }
    }
    Ok(rep)
}

fn disjoint(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|v| !b.contains(v))
}

/// Checks `Q∘D = D∘R` and `R∘D = D∘Q` on every prime pair with first point in `[k2_lo, k2_hi]`.
pub fn check_qr_duality(xi: &HeightFunction, k2_lo: i64, k2_hi: i64) -> Result<(usize, Option<String>)> {
    let mut count = 0;
    for v in vertices_between(xi, k2_lo, k2_hi) {
        for w in vertices_between(xi, v.k2 + 1, v.k2 + xi.ntilde2()) {
            if !in_prime_snake_position(xi, v, w) {
                continue;
            }
            count += 1;
            let (q, r) = qr_untwisted(xi, v, w)?;
            let (qd, rd) = qr_untwisted(xi, xi.dual(v), xi.dual(w))?;
            let d = |u: Option<Vertex>| u.map(|u| xi.dual(u));
            if qd != d(r) || rd != d(q) {
                return Ok((count, Some(format!("xi = {xi:?}, v = {v}, w = {w}"))));
            }
        }
    }
    Ok((count, None))
}

fn qr_suite<R: Rng + ?Sized>(trials: usize, rng: &mut R) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Qr);
    for flavor in [Flavor::Untwisted, Flavor::Twisted] {
        for _ in 0..trials {
            let xi = random_height(flavor, rng)?;
            let len = rng.random_range(2..=5);
            let p = random_snake(&xi, rng, len, true, -8, 8);
            if p.len() < 2 {
                continue;
            }
            let (q, r) = qr_sequences(&xi, &p)?;
            rep.record(is_snake(&xi, &q) && is_snake(&xi, &r) && disjoint(&q, &r), || {
                format!("xi = {xi:?}, P = {p:?}: Q = {q:?}, R = {r:?}")
            });
        }
    }
    for n in 1..=6 {
        for delta in 0..=1 {
            let xi = HeightFunction::canonical(n, delta)?;
            let (count, bad) = check_qr_duality(&xi, 0, 4 * xi.ntilde2())?;
            rep.record(bad.is_none() && count > 0, || bad.unwrap_or_else(|| format!("no prime pairs for n = {n}")));
        }
    }
    Ok(rep)
}
