//! JSON interchange formats.
//!
//! * Snakes: `{"flavor", "xi": [doubled values], "n0", "points": [{"i", "k2"}]}`.
//! * Vertex data: `{"carrier", "n", "entries": [{"i", "k2", "c"}]}`; `n` may be omitted
//!   when the reader supplies it from context, and zero entries may be omitted.
//! * T-system relations: `{"flavor", "P", "B", "C", "A", "D", "Q", "R", "flags",
//!   "hypotheses_ok"}` with point lists in the snake point format.
//! * Reineke queries: `{"j", "epsilon", "epsilon_star"}`.
//! * Custom monomial tables: `{"h_dual", "star", "entries": [{"i", "k2",
//!   "monomial": [{"node", "spectral", "exp"}]}]}`; `star` is optional.
//!
//! All heights are doubled (`k2 = 2k`), so every file is exact integer JSON.

use crate::error::{Error, Result};
use crate::lusztig::{Carrier, VertexDatum};
use crate::quiver::{Flavor, HeightFunction, Vertex};
use crate::realize::{CustomTable, Monomial, RelationMonomials, StarRule};
use crate::tsystem::{Flags, TSystemRelation};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parses any of the formats of this module, mapping failures to [`Error::Parse`].
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data always serializes")
}

/// A vertex `(i, k2/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub i: usize,
    pub k2: i64,
}

impl From<Vertex> for PointJson {
    fn from(v: Vertex) -> Self {
        PointJson { i: v.i, k2: v.k2 }
    }
}

impl From<PointJson> for Vertex {
    fn from(p: PointJson) -> Self {
        Vertex::new(p.i, p.k2)
    }
}

fn points(vs: &[Vertex]) -> Vec<PointJson> {
    vs.iter().copied().map(PointJson::from).collect()
}

fn vertices(ps: &[PointJson]) -> Vec<Vertex> {
    ps.iter().copied().map(Vertex::from).collect()
}

/// A snake together with its height function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakeJson {
    pub flavor: Flavor,
    pub xi: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n0: Option<usize>,
    pub points: Vec<PointJson>,
}

impl SnakeJson {
    pub fn new(xi: &HeightFunction, p: &[Vertex]) -> Self {
        SnakeJson { flavor: xi.flavor(), xi: xi.values2().to_vec(), n0: xi.n0(), points: points(p) }
    }

    /// The validated height function.
    pub fn height_function(&self) -> Result<HeightFunction> {
        HeightFunction::from_doubled(self.flavor, self.xi.clone(), self.n0)
    }

    /// The points, checked to be vertices of the quiver.
    pub fn vertices(&self) -> Result<Vec<Vertex>> {
        let xi = self.height_function()?;
        let vs = vertices(&self.points);
        match vs.iter().find(|&&v| !xi.is_vertex(v)) {
            Some(&v) => Err(Error::NotAVertex(v)),
            None => Ok(vs),
        }
    }
}

/// One entry of a vertex datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumEntryJson {
    pub i: usize,
    pub k2: i64,
    pub c: u64,
}

/// A vertex datum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    pub carrier: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub entries: Vec<DatumEntryJson>,
}

impl DatumJson {
    /// The nonzero entries of `d`.
    pub fn new(d: &VertexDatum) -> Self {
        DatumJson {
            carrier: d.carrier().to_string(),
            n: Some(d.carrier().n()),
            entries: d.support().into_iter().map(|v| DatumEntryJson { i: v.i, k2: v.k2, c: d.get(v) }).collect(),
        }
    }

    /// The datum, with `n` taken from the file or else from `n_context`.
    pub fn to_datum(&self, n_context: Option<usize>) -> Result<VertexDatum> {
        let n = self
            .n
            .or(n_context)
            .ok_or_else(|| Error::Parse("datum needs `n` (in the file or from the command line)".into()))?;
        if let (Some(a), Some(b)) = (self.n, n_context) {
            if a != b {
                return Err(Error::RankMismatch { expected: b, got: a });
            }
        }
        let carrier = Carrier::parse(&self.carrier, n)?;
        VertexDatum::from_sparse(carrier, self.entries.iter().map(|e| (Vertex::new(e.i, e.k2), e.c)))
    }
}

/// A T-system relation with the outcome of the hypothesis sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub flavor: Flavor,
    #[serde(rename = "P")]
    pub p: Vec<PointJson>,
    #[serde(rename = "B")]
    pub b: Vec<PointJson>,
    #[serde(rename = "C")]
    pub c: Vec<PointJson>,
    #[serde(rename = "A")]
    pub a: Vec<PointJson>,
    #[serde(rename = "D")]
    pub d: Vec<PointJson>,
    #[serde(rename = "Q")]
    pub q: Vec<PointJson>,
    #[serde(rename = "R")]
    pub r: Vec<PointJson>,
    pub flags: Flags,
    pub hypotheses_ok: bool,
    /// Rendered monomials of the six terms, when a realization was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomials: Option<BTreeMap<String, String>>,
}

impl RelationJson {
    pub fn new(rel: &TSystemRelation, hypotheses_ok: bool, monomials: Option<&RelationMonomials>) -> Self {
        RelationJson {
            flavor: rel.flavor,
            p: points(&rel.p),
            b: points(&rel.b),
            c: points(&rel.c),
            a: points(&rel.a),
            d: points(&rel.d),
            q: points(&rel.q),
            r: points(&rel.r),
            flags: rel.flags,
            hypotheses_ok,
            monomials: monomials.map(|m| {
                [("A", &m.a), ("B", &m.b), ("C", &m.c), ("D", &m.d), ("Q", &m.q), ("R", &m.r)]
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect()
            }),
        }
    }

    /// The relation carried by the file.
    pub fn relation(&self) -> TSystemRelation {
        TSystemRelation {
            flavor: self.flavor,
            p: vertices(&self.p),
            b: vertices(&self.b),
            c: vertices(&self.c),
            a: vertices(&self.a),
            d: vertices(&self.d),
            q: vertices(&self.q),
            r: vertices(&self.r),
            flags: self.flags,
            first_term_strongly_commuting: true,
        }
    }
}

/// The answer to a Reineke query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReinekeJson {
    pub j: usize,
    pub epsilon: u64,
    pub epsilon_star: u64,
}

/// One factor `Y_{node, spectral}^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub node: i64,
    pub spectral: i64,
    pub exp: i64,
}

/// One table entry `S_{i,k} ↦ monomial`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub i: usize,
    pub k2: i64,
    pub monomial: Vec<FactorJson>,
}

/// A custom monomial table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub h_dual: i64,
    #[serde(default)]
    pub star: StarRule,
    pub entries: Vec<TableEntryJson>,
}

/// The factors of a monomial in the table format.
pub fn monomial_factors(m: &Monomial) -> Vec<FactorJson> {
    m.factors().iter().map(|(&(node, spectral), &exp)| FactorJson { node, spectral, exp }).collect()
}

impl TableJson {
    pub fn new(t: &CustomTable) -> Self {
        TableJson {
            h_dual: t.h_dual,
            star: t.star,
            entries: t
                .entries
                .iter()
                .map(|(v, m)| TableEntryJson { i: v.i, k2: v.k2, monomial: monomial_factors(m) })
                .collect(),
        }
    }

    pub fn table(&self) -> CustomTable {
        CustomTable {
            h_dual: self.h_dual,
            star: self.star,
            entries: self
                .entries
                .iter()
                .map(|e| {
                    let m = Monomial::from_factors(e.monomial.iter().map(|f| ((f.node, f.spectral), f.exp)));
                    (Vertex::new(e.i, e.k2), m)
                })
                .collect(),
        }
    }
}
