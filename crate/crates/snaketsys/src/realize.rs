//! Dominant-monomial realizations of snake modules.
//!
//! A realization assigns to every cuspidal module `S_v` the dominant monomial of a simple
//! module of a quantum affine algebra:
//!
//! * [`Realization::QDatumA`]: untwisted `ξ`, `S_{i,k} ↦ Y_{i,-k}` (type `A^{(1)}_n`);
//! * [`Realization::QDatumB`]: twisted `ξ`, `S_{i,k} ↦ Y_{î,-2k}` with `î = min(i, i*)`
//!   (type `B^{(1)}_{n₀}`);
//! * [`Realization::Custom`]: a user table on the window `Γ^ξ`, extended to the whole quiver
//!   by the duality rule `D: Y_{j,l} ↦ Y_{j*, l + h∨}`.
//!
//! Spectral parameters are bare integers: the anchor of the spectral shifts is implicit.

use crate::error::{Error, Result};
use crate::quiver::{HeightFunction, Vertex};
use crate::tsystem::TSystemRelation;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent monomial in the variables `Y_{i,k}`; zero exponents are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: BTreeMap<(i64, i64), i64>,
}

impl Monomial {
    /// The unit monomial.
    pub fn one() -> Self {
        Self::default()
    }

    /// The variable `Y_{node, spectral}`.
    pub fn y(node: i64, spectral: i64) -> Self {
        Self::from_factors([((node, spectral), 1)])
    }

    /// Builds a monomial from `((node, spectral), exponent)` pairs; repeated keys add up.
    pub fn from_factors(factors: impl IntoIterator<Item = ((i64, i64), i64)>) -> Self {
        let mut m = Self::one();
        for (key, e) in factors {
            m.add_exponent(key, e);
        }
        m
    }

    fn add_exponent(&mut self, key: (i64, i64), e: i64) {
        let entry = self.factors.entry(key).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.factors.remove(&key);
        }
    }

    /// The nonzero exponents, keyed by `(node, spectral)`.
    pub fn factors(&self) -> &BTreeMap<(i64, i64), i64> {
        &self.factors
    }

    /// Exponent of `Y_{node, spectral}`.
    pub fn exponent(&self, node: i64, spectral: i64) -> i64 {
        self.factors.get(&(node, spectral)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// All exponents are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.factors.values().all(|&e| e >= 0)
    }

    /// The product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (&key, &e) in &other.factors {
            m.add_exponent(key, e);
        }
        m
    }

    /// The product of a sequence of monomials.
    pub fn product<'a>(ms: impl IntoIterator<Item = &'a Monomial>) -> Monomial {
        ms.into_iter().fold(Monomial::one(), |acc, m| acc.mul(m))
    }

    /// Applies `Y_{j,l} ↦ Y_{j*, l + t·h∨}` (the image under `D^t`).
    ///
    /// Each application of `D` stars the node; `t` applications star it `|t|` times.
    pub fn d_shift(&self, t: i64, h_dual: i64, star: StarRule) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|(&(j, l), &e)| {
            let node = if t.rem_euclid(2) == 1 { star.apply(j, h_dual) } else { j };
            ((node, l + t * h_dual), e)
        }))
    }

    /// Factors in display order: decreasing spectral parameter, then decreasing node.
    fn display_order(&self) -> Vec<((i64, i64), i64)> {
        let mut fs: Vec<_> = self.factors.iter().map(|(&k, &e)| (k, e)).collect();
        fs.sort_by(|((a, x), _), ((b, y), _)| y.cmp(x).then(b.cmp(a)));
        fs
    }

    /// LaTeX rendering, e.g. `Y_{2,0}Y_{2,-2}^{2}`; the unit renders as `1`.
    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.display_order()
            .into_iter()
            .map(|((i, k), e)| if e == 1 { format!("Y_{{{i},{k}}}") } else { format!("Y_{{{i},{k}}}^{{{e}}}") })
            .collect()
    }
}

impl fmt::Display for Monomial {
    /// Plain-text rendering, e.g. `Y[2,0]Y[2,-2]^2`; the unit renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for ((i, k), e) in self.display_order() {
            write!(f, "Y[{i},{k}]")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The involution `j ↦ j*` of the realizing Dynkin diagram used by the duality rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarRule {
    /// Type-A star `j* = h∨ - j`.
    #[default]
    TypeA,
    /// Trivial star, as for types B, C, D with even rank, etc.
    Identity,
}

impl StarRule {
    pub fn apply(self, j: i64, h_dual: i64) -> i64 {
        match self {
            StarRule::TypeA => h_dual - j,
            StarRule::Identity => j,
        }
    }
}

/// A table of cuspidal monomials on the window `Γ^ξ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomTable {
    pub h_dual: i64,
    pub star: StarRule,
    pub entries: BTreeMap<Vertex, Monomial>,
}

impl CustomTable {
    /// Checks that the table covers every vertex of `Γ^ξ`.
    pub fn check_covers(&self, xi: &HeightFunction) -> Result<()> {
        match xi.gamma_window().into_iter().find(|v| !self.entries.contains_key(v)) {
            Some(v) => Err(Error::MissingTableEntry(v)),
            None => Ok(()),
        }
    }
}

/// How cuspidal modules are realized as dominant monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    QDatumA,
    QDatumB,
    Custom(CustomTable),
}

impl Realization {
    /// `true` when snake monomials are genuine highest monomials.
    pub fn is_exact(&self) -> bool {
        !matches!(self, Realization::Custom(_))
    }
}

/// The dominant monomial of `S_v`.
pub fn cuspidal_monomial(real: &Realization, xi: &HeightFunction, v: Vertex) -> Result<Monomial> {
    if !xi.is_vertex(v) {
        return Err(Error::NotAVertex(v));
    }
    match real {
        Realization::QDatumA => {
            if xi.is_twisted() {
                return Err(Error::WrongFlavor("the A-type Q-datum realization needs an untwisted height function".into()));
            }
            Ok(Monomial::y(v.i as i64, -v.k2 / 2))
        }
        Realization::QDatumB => {
            if !xi.is_twisted() {
                return Err(Error::WrongFlavor("the B-type Q-datum realization needs a twisted height function".into()));
            }
            Ok(Monomial::y(v.i.min(xi.star(v.i)) as i64, -v.k2))
        }
        Realization::Custom(table) => {
            // Find u in the window and t with v = D^t(u); the window is a fundamental
            // domain for D, and D lowers k by ñ.
            let (mut u, mut t) = (v, 0i64);
            let limit = v.k2.abs() / xi.ntilde2() + 2 * xi.n() as i64 + 4;
            while !xi.in_window(u) {
                if t.abs() > limit {
                    return Err(Error::MissingTableEntry(v));
                }
                if u.k2 < xi.window_row_bounds2(u.i).0 {
                    u = xi.dual_inv(u);
                    t += 1;
                } else {
                    u = xi.dual(u);
                    t -= 1;
                }
            }
            let m = table.entries.get(&u).ok_or(Error::MissingTableEntry(u))?;
            Ok(m.d_shift(t, table.h_dual, table.star))
        }
    }
}

/// The monomial of `S(P)` as the product of its cuspidal monomials, with an exactness flag.
///
/// Along a snake the spectral parameters decrease, so in the Q-datum realizations the
/// product is the highest monomial of the snake module (`exact = true`). For custom tables
/// it is only a formal product (`exact = false`).
pub fn snake_monomial(real: &Realization, xi: &HeightFunction, p: &[Vertex]) -> Result<(Monomial, bool)> {
    let ms = p.iter().map(|&v| cuspidal_monomial(real, xi, v)).collect::<Result<Vec<_>>>()?;
    Ok((Monomial::product(&ms), real.is_exact()))
}

/// Monomials of the six terms of a T-system relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMonomials {
    pub a: Monomial,
    pub b: Monomial,
    pub c: Monomial,
    pub d: Monomial,
    pub q: Monomial,
    pub r: Monomial,
    pub exact: bool,
}

/// Monomials of a relation; `m(B)·m(C) = m(A)·m(D)` holds exactly and is checked.
pub fn relation_monomials(rel: &TSystemRelation, real: &Realization, xi: &HeightFunction) -> Result<RelationMonomials> {
    let m = |p: &[Vertex]| snake_monomial(real, xi, p).map(|(m, _)| m);
    let out = RelationMonomials {
        a: m(&rel.a)?,
        b: m(&rel.b)?,
        c: m(&rel.c)?,
        d: m(&rel.d)?,
        q: m(&rel.q)?,
        r: m(&rel.r)?,
        exact: real.is_exact(),
    };
    assert_eq!(out.b.mul(&out.c), out.a.mul(&out.d), "slice multiset identity violated");
    Ok(out)
}

impl RelationMonomials {
    /// `m(B)m(C) = m(A)m(D)` (always true).
    pub fn balanced(&self) -> bool {
        self.b.mul(&self.c) == self.a.mul(&self.d)
    }

    /// The Grothendieck-ring identity `[B][C] = [A][D] + [Q][R]` with `L(m)` symbols.
    pub fn to_latex(&self) -> String {
        let l = |m: &Monomial| format!("[L({})]", m.to_latex());
        format!(
            "{}{} = {}{} + {}{}",
            l(&self.b),
            l(&self.c),
            l(&self.a),
            l(&self.d),
            l(&self.q),
            l(&self.r)
        )
    }
}

impl fmt::Display for RelationMonomials {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[L({})][L({})] = [L({})][L({})] + [L({})][L({})]",
            self.b, self.c, self.a, self.d, self.q, self.r
        )?;
        if !self.exact {
            write!(f, "  (formal products)")?;
        }
        Ok(())
    }
}
