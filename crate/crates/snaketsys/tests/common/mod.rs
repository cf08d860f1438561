//! Reference implementations shared by the integration tests.
//!
//! Nothing here calls the library code being checked: the Weyl group is modelled by
//! permutations of `1..=n+1`, quiver arrows and windows are rebuilt from the defining
//! inequalities, and word transformations use only the primitive 2-moves and 3-moves.

#![allow(dead_code)]

use rand::Rng;
use snaketsys::lusztig::WordDatum;
use snaketsys::quiver::{HeightFunction, Vertex};
use snaketsys::roots::Root;
use std::collections::BTreeMap;

/// Doubled row step `2d_i`, from the height function values alone.
fn step2(xi: &HeightFunction, i: usize) -> i64 {
    if xi.n0() == Some(i) {
        2
    } else {
        4
    }
}

/// Rows of the window `{ξ_i ≤ k ≤ n - 1 + ξ_{i*}}`, keyed by node.
pub fn rows_of(xi: &HeightFunction) -> BTreeMap<usize, Vec<i64>> {
    let n = xi.n();
    let x = xi.values2();
    (1..=n)
        .map(|i| {
            let (lo, hi) = (x[i - 1], 2 * (n as i64 - 1) + x[n - i]);
            (i, (0..).map(|m| lo + m * step2(xi, i)).take_while(|&k2| k2 <= hi).collect())
        })
        .collect()
}

/// Arrow `(i, k) → (j, l)` iff `|i - j| = 1` and `l - k = min(d_i, d_j)/2`.
fn arrow(xi: &HeightFunction, a: Vertex, b: Vertex) -> bool {
    a.i.abs_diff(b.i) == 1 && b.k2 - a.k2 == step2(xi, a.i).min(step2(xi, b.i)) / 2
}

/// A uniformly random choice among the sources at each step of Kahn's algorithm.
pub fn random_reading<R: Rng + ?Sized>(xi: &HeightFunction, rng: &mut R) -> Vec<Vertex> {
    let mut left: Vec<Vertex> = rows_of(xi)
        .into_iter()
        .flat_map(|(i, ks)| ks.into_iter().map(move |k2| Vertex::new(i, k2)))
        .collect();
    let mut out = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let ready: Vec<usize> = (0..left.len())
            .filter(|&a| !left.iter().any(|&b| arrow(xi, b, left[a])))
            .collect();
        let pick = ready[rng.random_range(0..ready.len())];
        out.push(left.remove(pick));
    }
    out
}

/// Inversion roots of a word, with `s_j` acting on `e_1, …, e_{n+1}` by swapping `j, j+1`.
pub fn permutation_inversions(word: &[usize]) -> Vec<Root> {
    word.iter()
        .enumerate()
        .map(|(k, &ik)| {
            let (mut a, mut b) = (ik, ik + 1);
            for &j in word[..k].iter().rev() {
                let s = |x: usize| if x == j { j + 1 } else if x == j + 1 { j } else { x };
                a = s(a);
                b = s(b);
            }
            assert!(a < b, "word is not reduced");
            Root::interval(a, b - 1)
        })
        .collect()
}

/// `φ_ξ` computed from a random compatible reading with the permutation model.
pub fn oracle_phi<R: Rng + ?Sized>(xi: &HeightFunction, rng: &mut R) -> BTreeMap<Vertex, Root> {
    let reading = random_reading(xi, rng);
    let word: Vec<usize> = reading.iter().map(|v| v.i).collect();
    reading.into_iter().zip(permutation_inversions(&word)).collect()
}

/// Untwisted `Q`/`R` as the corners of the rectangle spanned by `v` and `w`: `Q` is reached
/// from `v` going up-right and reaches `w` going down-right; `R` symmetrically. A corner on
/// row `0` or `n + 1` is empty.
pub fn qr_corner_oracle(xi: &HeightFunction, v: Vertex, w: Vertex) -> (Option<Vertex>, Option<Vertex>) {
    let n = xi.n() as i64;
    let corner = |dir: i64| {
        let mut s = 0i64;
        loop {
            let (i, k2) = (v.i as i64 + dir * s, v.k2 + 2 * s);
            let t = (w.k2 - k2) / 2;
            if t < 0 {
                panic!("no corner between {v} and {w}");
            }
            if w.i as i64 - i == -dir * t {
                return (1..=n).contains(&i).then(|| Vertex::new(i as usize, k2));
            }
            s += 1;
        }
    };
    (corner(-1), corner(1))
}

/// Moves letter `s` to position `start` of a reduced word for which `s` is a left descent
/// of the suffix starting there, touching only positions `≥ start`.
///
/// If the suffix starts with `t ≠ s`, both are left descents, so the suffix admits a
/// reduced word starting with the longest element of `⟨s, t⟩`; build it recursively and
/// flip it with one 2-move or 3-move.
fn bring_to_front(wd: &mut WordDatum, start: usize, s: usize) {
    let t = wd.word()[start];
    if t == s {
        return;
    }
    bring_to_front(wd, start + 1, s);
    if t.abs_diff(s) >= 2 {
        *wd = wd.two_move(start).unwrap();
    } else {
        bring_to_front(wd, start + 2, t);
        *wd = wd.apply_three_move(start + 1).unwrap();
    }
}

/// Transforms a datum to the given reduced word of the same element by 2-moves and 3-moves.
pub fn convert_word(wd: &WordDatum, target: &[usize]) -> WordDatum {
    let mut out = wd.clone();
    for (p, &s) in target.iter().enumerate() {
        bring_to_front(&mut out, p, s);
    }
    out
}

/// Parses `"1"` as `α_1` and `"2,5"` as `α_2 + ⋯ + α_5`.
pub fn parse_root(label: &str) -> Root {
    let parts: Vec<usize> = label.split(',').map(|s| s.parse().unwrap()).collect();
    Root::interval(parts[0], *parts.last().unwrap())
}

/// Vertex labels given row by row as `(k, label)` with integral `k`.
pub fn labels(rows: &[(usize, &[(i64, &str)])]) -> Vec<(Vertex, Root)> {
    rows.iter()
        .flat_map(|&(i, entries)| entries.iter().map(move |&(k, label)| (Vertex::int(i, k), parse_root(label))))
        .collect()
}
