//! The quasi-crystal abstraction: extended integers, explicit finite
//! quasi-crystal tables, axiom and seminormality validators, the standard
//! quasi-crystals of types A and C, and homomorphism/isomorphism checks.
//!
//! A quasi-crystal is a set Q with a weight map wt : Q → Λ, partial raising
//! and lowering operators ë_i, f̈_i, and maps ε̈_i, φ̈_i : Q → ℤ ∪ {−∞, +∞}
//! satisfying six conditions:
//!
//! 1. φ̈_i(x) = ε̈_i(x) + ⟨wt(x), α_i^∨⟩ (with ±∞ absorbing);
//! 2. ë_i(x) defined ⇒ wt shifts by +α_i, ε̈_i drops by 1, φ̈_i rises by 1;
//! 3. f̈_i(x) defined ⇒ wt shifts by −α_i, ε̈_i rises by 1, φ̈_i drops by 1;
//! 4. ë_i(x) = y ⟺ f̈_i(y) = x;
//! 5. ε̈_i(x) = −∞ ⇒ ë_i, f̈_i undefined at x;
//! 6. ε̈_i(x) = +∞ ⇒ ë_i, f̈_i undefined at x.

use crate::rootsys::{RootData, RootError, RootKind, Weight};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// An integer extended with −∞ and +∞; the codomain of ε̈_i and φ̈_i.
/// The derived order is total with NegInf < every Finite < PosInf.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtInt {
    /// −∞.
    NegInf,
    /// A finite integer.
    Finite(i64),
    /// +∞.
    PosInf,
}

/// Errors raised by qc_core operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum QcError {
    /// (+∞) + (−∞) has no value.
    #[error("cannot add +inf and -inf")]
    OppositeInfinities,
    /// Standard quasi-crystals need alphabet size at least 2.
    #[error("alphabet size {0} too small; need at least 2")]
    RankTooSmall(usize),
    /// An element id not present in the table.
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    /// Two tables built over different root data.
    #[error("tables have mismatched root data")]
    MismatchedType,
    /// An operation that requires seminormality received a non-seminormal table.
    #[error("table is not seminormal")]
    NotSeminormal,
    /// Malformed table data.
    #[error("invalid table data: {0}")]
    InvalidData(String),
    /// Underlying root-system error.
    #[error(transparent)]
    Root(#[from] RootError),
}

impl ExtInt {
    /// Exact addition; errors on (+∞) + (−∞).
    pub fn checked_add(self, other: ExtInt) -> Result<ExtInt, QcError> {
        use ExtInt::*;
        match (self, other) {
            (PosInf, NegInf) | (NegInf, PosInf) => Err(QcError::OppositeInfinities),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (Finite(a), Finite(b)) => Ok(Finite(a + b)),
        }
    }

    /// Add a finite integer; infinities absorb.
    pub fn add_finite(self, k: i64) -> ExtInt {
        match self {
            ExtInt::Finite(a) => ExtInt::Finite(a + k),
            inf => inf,
        }
    }

    /// True iff this is a finite value.
    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::NegInf => s.serialize_str("-inf"),
            ExtInt::Finite(v) => s.serialize_i64(*v),
            ExtInt::PosInf => s.serialize_str("+inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ExtInt::Finite(v)),
            Raw::Str(s) if s == "-inf" => Ok(ExtInt::NegInf),
            Raw::Str(s) if s == "+inf" => Ok(ExtInt::PosInf),
            Raw::Str(s) => Err(D::Error::custom(format!("bad extended integer {s:?}"))),
        }
    }
}

/// A finite explicit quasi-crystal: element list with wt/ε̈/φ̈ values and
/// partial ë_i/f̈_i maps. Internally index-based; element ids are opaque
/// strings used for lookup and serialization.
#[derive(Clone, Debug)]
pub struct QuasiCrystalTable {
    /// Root-system data shared by all structure maps.
    pub root: RootData,
    /// Ordered element ids.
    pub elements: Vec<String>,
    /// wt, indexed by element.
    pub wt: Vec<Weight>,
    /// ε̈ values, indexed `[element][i-1]`.
    pub eps: Vec<Vec<ExtInt>>,
    /// φ̈ values, indexed `[element][i-1]`.
    pub phi: Vec<Vec<ExtInt>>,
    /// ë images (element indices), indexed `[element][i-1]`.
    pub e_map: Vec<Vec<Option<usize>>>,
    /// f̈ images (element indices), indexed `[element][i-1]`.
    pub f_map: Vec<Vec<Option<usize>>>,
    index_of: HashMap<String, usize>,
}

impl PartialEq for QuasiCrystalTable {
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root
            && self.elements == other.elements
            && self.wt == other.wt
            && self.eps == other.eps
            && self.phi == other.phi
            && self.e_map == other.e_map
            && self.f_map == other.f_map
    }
}

impl QuasiCrystalTable {
    /// Assemble a table from raw parts, checking shapes and id uniqueness.
    pub fn new(
        root: RootData,
        elements: Vec<String>,
        wt: Vec<Weight>,
        eps: Vec<Vec<ExtInt>>,
        phi: Vec<Vec<ExtInt>>,
        e_map: Vec<Vec<Option<usize>>>,
        f_map: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, QcError> {
        let m = elements.len();
        let k = root.index_count();
        let shape_ok = wt.len() == m
            && [&eps, &phi].iter().all(|v| v.len() == m)
            && [&e_map, &f_map].iter().all(|v| v.len() == m)
            && eps.iter().chain(&phi).all(|row| row.len() == k)
            && e_map.iter().chain(&f_map).all(|row| row.len() == k);
        if !shape_ok {
            return Err(QcError::InvalidData("table shape mismatch".into()));
        }
        if wt.iter().any(|w| w.dim() != root.dim) {
            return Err(QcError::InvalidData("weight dimension mismatch".into()));
        }
        let valid_targets = e_map
            .iter()
            .chain(&f_map)
            .flatten()
            .all(|o| o.map_or(true, |j| j < m));
        if !valid_targets {
            return Err(QcError::InvalidData("operator target out of range".into()));
        }
        let mut index_of = HashMap::with_capacity(m);
        for (j, id) in elements.iter().enumerate() {
            if index_of.insert(id.clone(), j).is_some() {
                return Err(QcError::InvalidData(format!("duplicate element id {id:?}")));
            }
        }
        Ok(QuasiCrystalTable {
            root,
            elements,
            wt,
            eps,
            phi,
            e_map,
            f_map,
            index_of,
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True iff the table has no elements.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Look up an element id.
    pub fn index_of(&self, id: &str) -> Result<usize, QcError> {
        self.index_of
            .get(id)
            .copied()
            .ok_or_else(|| QcError::UnknownElement(id.to_string()))
    }

    /// ë_i image by element index (i is a 1-based root index).
    pub fn e(&self, x: usize, i: usize) -> Option<usize> {
        self.e_map[x][i - 1]
    }

    /// f̈_i image by element index.
    pub fn f(&self, x: usize, i: usize) -> Option<usize> {
        self.f_map[x][i - 1]
    }

    /// ε̈_i value by element index.
    pub fn eps_of(&self, x: usize, i: usize) -> ExtInt {
        self.eps[x][i - 1]
    }

    /// φ̈_i value by element index.
    pub fn phi_of(&self, x: usize, i: usize) -> ExtInt {
        self.phi[x][i - 1]
    }

    /// Serialize to the documented JSON form.
    pub fn to_json(&self) -> String {
        let by_id = |v: &Vec<Vec<ExtInt>>| -> serde_json::Map<String, serde_json::Value> {
            self.elements
                .iter()
                .zip(v)
                .map(|(id, row)| (id.clone(), serde_json::to_value(row).unwrap()))
                .collect()
        };
        let ops = |v: &Vec<Vec<Option<usize>>>| -> serde_json::Map<String, serde_json::Value> {
            self.elements
                .iter()
                .zip(v)
                .map(|(id, row)| {
                    let row: Vec<serde_json::Value> = row
                        .iter()
                        .map(|o| match o {
                            Some(j) => serde_json::Value::String(self.elements[*j].clone()),
                            None => serde_json::Value::Null,
                        })
                        .collect();
                    (id.clone(), serde_json::Value::Array(row))
                })
                .collect()
        };
        let wt: serde_json::Map<String, serde_json::Value> = self
            .elements
            .iter()
            .zip(&self.wt)
            .map(|(id, w)| (id.clone(), serde_json::to_value(&w.0).unwrap()))
            .collect();
        let root = serde_json::json!({
            "kind": match self.root.kind {
                RootKind::TypeA => "A",
                RootKind::TypeC => "C",
                RootKind::Explicit => "explicit",
            },
            "n": self.root.alphabet_size,
            "dim": self.root.dim,
            "simple_roots": self.root.simple_roots.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "coroot_norms": self.root.coroot_norms.iter().map(|q| {
                if q.is_integer() { q.to_integer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) }
            }).collect::<Vec<_>>(),
        });
        serde_json::json!({
            "root": root,
            "elements": self.elements,
            "wt": wt,
            "eps": by_id(&self.eps),
            "phi": by_id(&self.phi),
            "e": ops(&self.e_map),
            "f": ops(&self.f_map),
        })
        .to_string()
    }

    /// Load a table from the documented JSON form.
    pub fn from_json(text: &str) -> Result<Self, QcError> {
        #[derive(Deserialize)]
        struct RootDoc {
            kind: String,
            #[serde(default)]
            n: usize,
            dim: usize,
            simple_roots: Vec<Vec<i64>>,
            coroot_norms: Vec<String>,
        }
        #[derive(Deserialize)]
        struct TableDoc {
            root: RootDoc,
            elements: Vec<String>,
            wt: HashMap<String, Vec<i64>>,
            eps: HashMap<String, Vec<ExtInt>>,
            phi: HashMap<String, Vec<ExtInt>>,
            e: HashMap<String, Vec<Option<String>>>,
            f: HashMap<String, Vec<Option<String>>>,
        }
        let doc: TableDoc =
            serde_json::from_str(text).map_err(|e| QcError::InvalidData(e.to_string()))?;
        let root = match doc.root.kind.as_str() {
            "A" => RootData::type_a(doc.root.n)?,
            "C" => RootData::type_c(doc.root.n)?,
            "explicit" => {
                let rd_json = serde_json::json!({
                    "dim": doc.root.dim,
                    "simple_roots": doc.root.simple_roots,
                    "coroot_norms": doc.root.coroot_norms,
                });
                RootData::from_json(&rd_json.to_string())?
            }
            other => return Err(QcError::InvalidData(format!("bad root kind {other:?}"))),
        };
        let idx: HashMap<&str, usize> = doc
            .elements
            .iter()
            .enumerate()
            .map(|(j, id)| (id.as_str(), j))
            .collect();
        let m = doc.elements.len();
        let missing = |id: &str| QcError::InvalidData(format!("missing data for element {id:?}"));
        let mut wt = Vec::with_capacity(m);
        let mut eps = Vec::with_capacity(m);
        let mut phi = Vec::with_capacity(m);
        let mut e_map = Vec::with_capacity(m);
        let mut f_map = Vec::with_capacity(m);
        for id in &doc.elements {
            wt.push(Weight(doc.wt.get(id).ok_or_else(|| missing(id))?.clone()));
            eps.push(doc.eps.get(id).ok_or_else(|| missing(id))?.clone());
            phi.push(doc.phi.get(id).ok_or_else(|| missing(id))?.clone());
            let resolve = |row: &Vec<Option<String>>| -> Result<Vec<Option<usize>>, QcError> {
                row.iter()
                    .map(|o| match o {
                        None => Ok(None),
                        Some(t) => idx
                            .get(t.as_str())
                            .copied()
                            .map(Some)
                            .ok_or_else(|| QcError::UnknownElement(t.clone())),
                    })
                    .collect()
            };
            e_map.push(resolve(doc.e.get(id).ok_or_else(|| missing(id))?)?);
            f_map.push(resolve(doc.f.get(id).ok_or_else(|| missing(id))?)?);
        }
        QuasiCrystalTable::new(root, doc.elements, wt, eps, phi, e_map, f_map)
    }
}

/// One violated quasi-crystal axiom clause with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QcViolation {
    /// Clause number 1–6.
    pub clause: u8,
    /// Witness description.
    pub witness: String,
}

/// Outcome of [`validate_quasicrystal`]: empty means the table is a
/// quasi-crystal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QcReport {
    /// All violations found (the validator never stops early).
    pub violations: Vec<QcViolation>,
}

impl QcReport {
    /// True iff no clause is violated.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn add(&mut self, clause: u8, witness: String) {
        self.violations.push(QcViolation { clause, witness });
    }
}

/// Check all six defining clauses of a quasi-crystal on an explicit table.
/// Total and report-based: every violation is listed with a witness.
pub fn validate_quasicrystal(t: &QuasiCrystalTable) -> QcReport {
    let mut report = QcReport::default();
    let k = t.root.index_count();
    for x in 0..t.len() {
        let id = &t.elements[x];
        for i in 1..=k {
            let eps = t.eps_of(x, i);
            let phi = t.phi_of(x, i);
            // Clause 1: φ̈_i(x) = ε̈_i(x) + ⟨wt(x), α_i^∨⟩.
            match t.root.pairing(&t.wt[x], i) {
                Ok(p) => {
                    if phi != eps.add_finite(p) {
                        report.add(
                            1,
                            format!("element {id:?}, i={i}: phi={phi}, eps={eps}, pairing={p}"),
                        );
                    }
                }
                Err(e) => report.add(1, format!("element {id:?}, i={i}: {e}")),
            }
            // Clause 2: ë_i(x) = y ⇒ wt(y)=wt(x)+α_i, ε̈(y)=ε̈(x)−1, φ̈(y)=φ̈(x)+1.
            if let Some(y) = t.e(x, i) {
                let yid = &t.elements[y];
                let alpha = &t.root.simple_roots[i - 1];
                if t.wt[y] != t.wt[x].add(alpha) {
                    report.add(2, format!("e_{i}({id:?})={yid:?}: weight not raised by alpha"));
                }
                if t.eps_of(y, i) != eps.add_finite(-1) || !eps.is_finite() {
                    report.add(2, format!("e_{i}({id:?})={yid:?}: eps not decremented"));
                }
                if t.phi_of(y, i) != phi.add_finite(1) || !phi.is_finite() {
                    report.add(2, format!("e_{i}({id:?})={yid:?}: phi not incremented"));
                }
            }
            // Clause 3: f̈_i(x) = y ⇒ wt(y)=wt(x)−α_i, ε̈(y)=ε̈(x)+1, φ̈(y)=φ̈(x)−1.
            if let Some(y) = t.f(x, i) {
                let yid = &t.elements[y];
                let alpha = &t.root.simple_roots[i - 1];
                if t.wt[y] != t.wt[x].sub(alpha) {
                    report.add(3, format!("f_{i}({id:?})={yid:?}: weight not lowered by alpha"));
                }
                if t.eps_of(y, i) != eps.add_finite(1) || !eps.is_finite() {
                    report.add(3, format!("f_{i}({id:?})={yid:?}: eps not incremented"));
                }
                if t.phi_of(y, i) != phi.add_finite(-1) || !phi.is_finite() {
                    report.add(3, format!("f_{i}({id:?})={yid:?}: phi not decremented"));
                }
            }
            // Clause 4: ë_i(x)=y ⟺ f̈_i(y)=x.
            if let Some(y) = t.e(x, i) {
                if t.f(y, i) != Some(x) {
                    report.add(
                        4,
                        format!("e_{i}({id:?})={:?} but f_{i} does not return", t.elements[y]),
                    );
                }
            }
            if let Some(y) = t.f(x, i) {
                if t.e(y, i) != Some(x) {
                    report.add(
                        4,
                        format!("f_{i}({id:?})={:?} but e_{i} does not return", t.elements[y]),
                    );
                }
            }
            // Clauses 5/6: infinite ε̈ forces both operators undefined.
            if !eps.is_finite() && (t.e(x, i).is_some() || t.f(x, i).is_some()) {
                let clause = if eps == ExtInt::NegInf { 5 } else { 6 };
                report.add(
                    clause,
                    format!("element {id:?}, i={i}: eps={eps} but an operator is defined"),
                );
            }
        }
    }
    report
}

/// True iff the table is seminormal: wherever ε̈_i(x) ≠ +∞, ε̈_i(x) counts
/// the exact number of times ë_i applies at x and φ̈_i(x) the exact number of
/// times f̈_i applies.
pub fn is_seminormal(t: &QuasiCrystalTable) -> bool {
    let k = t.root.index_count();
    for x in 0..t.len() {
        for i in 1..=k {
            if t.eps_of(x, i) == ExtInt::PosInf {
                continue;
            }
            let mut up = 0i64;
            let mut cur = x;
            while let Some(y) = t.e(cur, i) {
                up += 1;
                cur = y;
                if up > t.len() as i64 {
                    return false; // operator cycle; cannot be seminormal
                }
            }
            let mut down = 0i64;
            cur = x;
            while let Some(y) = t.f(cur, i) {
                down += 1;
                cur = y;
                if down > t.len() as i64 {
                    return false;
                }
            }
            if t.eps_of(x, i) != ExtInt::Finite(up) || t.phi_of(x, i) != ExtInt::Finite(down) {
                return false;
            }
        }
    }
    true
}

/// Highest/lowest/isolated flags for one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    /// All ë_i undefined.
    pub highest_weight: bool,
    /// All f̈_i undefined.
    pub lowest_weight: bool,
    /// Both of the above: a singleton component.
    pub isolated: bool,
}

/// Classify an element as highest-weight / lowest-weight / isolated.
pub fn element_class(t: &QuasiCrystalTable, id: &str) -> Result<ElementClass, QcError> {
    let x = t.index_of(id)?;
    let k = t.root.index_count();
    let highest = (1..=k).all(|i| t.e(x, i).is_none());
    let lowest = (1..=k).all(|i| t.f(x, i).is_none());
    Ok(ElementClass {
        highest_weight: highest,
        lowest_weight: lowest,
        isolated: highest && lowest,
    })
}

/// The standard quasi-crystal of type A on the alphabet {1 < … < n}:
/// wt(x) = e_x; ë_i(i+1) = i, f̈_i(i) = i+1; ε̈_i(x) = δ_{x,i+1},
/// φ̈_i(x) = δ_{x,i}.
pub fn standard_a(n: usize) -> Result<QuasiCrystalTable, QcError> {
    let root = RootData::type_a(n)?;
    let k = root.index_count();
    let elements: Vec<String> = (1..=n).map(|x| x.to_string()).collect();
    let wt: Vec<Weight> = (1..=n).map(|x| Weight::basis(x, n)).collect();
    let mut eps = vec![vec![ExtInt::Finite(0); k]; n];
    let mut phi = vec![vec![ExtInt::Finite(0); k]; n];
    let mut e_map = vec![vec![None; k]; n];
    let mut f_map = vec![vec![None; k]; n];
    for i in 1..=k {
        eps[i][i - 1] = ExtInt::Finite(1); // element i+1 (index i)
        phi[i - 1][i - 1] = ExtInt::Finite(1); // element i (index i−1)
        e_map[i][i - 1] = Some(i - 1);
        f_map[i - 1][i - 1] = Some(i);
    }
    QuasiCrystalTable::new(root, elements, wt, eps, phi, e_map, f_map)
}

/// The standard quasi-crystal of type C on {1 < … < n < n̄ < … < 1̄}
/// (barred letters are ids "-k"): wt(x) = e_x, wt(x̄) = −e_x; for i < n,
/// ë_i(i+1) = i and ë_i(ī) = (i+1)-bar; ë_n(n̄) = n; f̈ maps are the
/// inverses; ε̈/φ̈ are the indicator sums of the raisable/lowerable letters.
pub fn standard_c(n: usize) -> Result<QuasiCrystalTable, QcError> {
    let root = RootData::type_c(n)?;
    let k = root.index_count(); // = n
    let m = 2 * n;
    // Rank order: index r holds letter r+1 for r < n, and -(2n−r) for r ≥ n.
    let letter = |r: usize| -> i64 {
        if r < n {
            (r + 1) as i64
        } else {
            -((m - r) as i64)
        }
    };
    let rank = |x: i64| -> usize {
        if x > 0 {
            (x - 1) as usize
        } else {
            m - (-x) as usize
        }
    };
    let elements: Vec<String> = (0..m).map(|r| letter(r).to_string()).collect();
    let wt: Vec<Weight> = (0..m)
        .map(|r| {
            let x = letter(r);
            if x > 0 {
                Weight::basis(x as usize, n)
            } else {
                Weight::basis((-x) as usize, n).neg()
            }
        })
        .collect();
    let mut eps = vec![vec![ExtInt::Finite(0); k]; m];
    let mut phi = vec![vec![ExtInt::Finite(0); k]; m];
    let mut e_map = vec![vec![None; k]; m];
    let mut f_map = vec![vec![None; k]; m];
    let mut link = |i: usize, lo: i64, hi: i64| {
        // ë_i(hi) = lo, f̈_i(lo) = hi in the rank order.
        let (rl, rh) = (rank(lo), rank(hi));
        e_map[rh][i - 1] = Some(rl);
        f_map[rl][i - 1] = Some(rh);
        eps[rh][i - 1] = ExtInt::Finite(1);
        phi[rl][i - 1] = ExtInt::Finite(1);
    };
    for i in 1..n {
        let i64i = i as i64;
        link(i, i64i, i64i + 1); // i → i+1
        link(i, -(i64i + 1), -i64i); // (i+1)-bar → ī
    }
    link(n, n as i64, -(n as i64)); // n → n̄
    QuasiCrystalTable::new(root, elements, wt, eps, phi, e_map, f_map)
}

/// Result of [`check_homomorphism`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomCheck {
    /// The map satisfies the homomorphism conditions.
    pub is_hom: bool,
    /// The map is a quasi-crystal isomorphism.
    pub is_iso: bool,
}

/// Check whether a partial element map ψ : Q ⊔ {⊥} → Q' ⊔ {⊥} (absent key
/// means ψ(x) = ⊥) is a quasi-crystal homomorphism and/or isomorphism.
///
/// Homomorphism conditions: ψ(⊥) = ⊥ (built into the representation); where
/// ψ(x) is defined it preserves wt, ε̈_i, φ̈_i; and ψ commutes with ë_i / f̈_i
/// whenever x, ψ(x), the operator image, and the operator at ψ(x) are all
/// defined. Isomorphism additionally requires totality, bijectivity, and
/// full commutation with the operators including definedness.
pub fn check_homomorphism(
    src: &QuasiCrystalTable,
    dst: &QuasiCrystalTable,
    map: &HashMap<String, String>,
) -> Result<HomCheck, QcError> {
    if src.root != dst.root {
        return Err(QcError::MismatchedType);
    }
    let k = src.root.index_count();
    // Resolve the map to indices, validating ids.
    let mut psi: Vec<Option<usize>> = vec![None; src.len()];
    for (a, b) in map {
        psi[src.index_of(a)?] = Some(dst.index_of(b)?);
    }

    let mut is_hom = true;
    for x in 0..src.len() {
        let Some(xp) = psi[x] else { continue };
        if src.wt[x] != dst.wt[xp] {
            is_hom = false;
        }
        for i in 1..=k {
            if src.eps_of(x, i) != dst.eps_of(xp, i) || src.phi_of(x, i) != dst.phi_of(xp, i) {
                is_hom = false;
            }
            // Commutation where everything in sight is defined.
            if let (Some(y), Some(yp)) = (src.e(x, i), dst.e(xp, i)) {
                if psi[y] != Some(yp) {
                    is_hom = false;
                }
            }
            if let (Some(y), Some(yp)) = (src.f(x, i), dst.f(xp, i)) {
                if psi[y] != Some(yp) {
                    is_hom = false;
                }
            }
        }
    }

    // Isomorphism: total, bijective, hom, and operator definedness matches.
    let mut is_iso = is_hom && src.len() == dst.len() && psi.iter().all(|o| o.is_some());
    if is_iso {
        let mut seen = vec![false; dst.len()];
        for o in &psi {
            let j = o.unwrap();
            if seen[j] {
                is_iso = false;
                break;
            }
            seen[j] = true;
        }
    }
    if is_iso {
        'outer: for x in 0..src.len() {
            let xp = psi[x].unwrap();
            for i in 1..=k {
                let e_ok = match (src.e(x, i), dst.e(xp, i)) {
                    (Some(y), Some(yp)) => psi[y] == Some(yp),
                    (None, None) => true,
                    _ => false,
                };
                let f_ok = match (src.f(x, i), dst.f(xp, i)) {
                    (Some(y), Some(yp)) => psi[y] == Some(yp),
                    (None, None) => true,
                    _ => false,
                };
                if !e_ok || !f_ok {
                    is_iso = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(HomCheck { is_hom, is_iso })
}

/// The two-element quasi-crystal Q of type A with alphabet size 2 that is a
/// quasi-crystal but not seminormal: a and b carry the letter weights and
/// ε̈/φ̈ values of 1 and 2 but no operators at all.
pub fn fixture_q2() -> QuasiCrystalTable {
    let root = RootData::type_a(2).expect("alphabet size 2");
    QuasiCrystalTable::new(
        root,
        vec!["a".into(), "b".into()],
        vec![Weight::basis(1, 2), Weight::basis(2, 2)],
        vec![vec![ExtInt::Finite(0)], vec![ExtInt::Finite(1)]],
        vec![vec![ExtInt::Finite(1)], vec![ExtInt::Finite(0)]],
        vec![vec![None], vec![None]],
        vec![vec![None], vec![None]],
    )
    .expect("fixture is well-formed")
}

/// The 9-element quasi-tensor square of the standard type-A table with
/// alphabet size 3, shipped verbatim as an explicit table. Element ids are
/// "(x,y)" in row-major order.
pub fn fixture_a3_squared() -> QuasiCrystalTable {
    let root = RootData::type_a(3).expect("alphabet size 3");
    let id = |x: usize, y: usize| format!("({x},{y})");
    let elements: Vec<String> = (1..=3).flat_map(|x| (1..=3).map(move |y| id(x, y))).collect();
    let idx = |x: usize, y: usize| (x - 1) * 3 + (y - 1);
    let e = |x: usize| Weight::basis(x, 3);
    let wt = vec![
        e(1).add(&e(1)), // (1,1)
        e(1).add(&e(2)), // (1,2)
        e(1).add(&e(3)), // (1,3)
        e(2).add(&e(1)), // (2,1)
        e(2).add(&e(2)), // (2,2)
        e(2).add(&e(3)), // (2,3)
        e(3).add(&e(1)), // (3,1)
        e(3).add(&e(2)), // (3,2)
        e(3).add(&e(3)), // (3,3)
    ];
    use ExtInt::{Finite as F, PosInf};
    let eps = vec![
        vec![F(0), F(0)],    // (1,1)
        vec![PosInf, F(0)],  // (1,2)
        vec![F(0), F(1)],    // (1,3)
        vec![F(1), F(0)],    // (2,1)
        vec![F(2), F(0)],    // (2,2)
        vec![F(1), PosInf],  // (2,3)
        vec![F(0), F(1)],    // (3,1)
        vec![F(1), F(1)],    // (3,2)
        vec![F(0), F(2)],    // (3,3)
    ];
    let phi = vec![
        vec![F(2), F(0)],    // (1,1)
        vec![PosInf, F(1)],  // (1,2)
        vec![F(1), F(0)],    // (1,3)
        vec![F(1), F(1)],    // (2,1)
        vec![F(0), F(2)],    // (2,2)
        vec![F(0), PosInf],  // (2,3)
        vec![F(1), F(0)],    // (3,1)
        vec![F(0), F(1)],    // (3,2)
        vec![F(0), F(0)],    // (3,3)
    ];
    let mut e_map = vec![vec![None; 2]; 9];
    let mut f_map = vec![vec![None; 2]; 9];
    let set = |op: &mut Vec<Vec<Option<usize>>>, from: (usize, usize), i: usize, to: (usize, usize)| {
        op[idx(from.0, from.1)][i - 1] = Some(idx(to.0, to.1));
    };
    // ë entries.
    set(&mut e_map, (1, 3), 2, (1, 2));
    set(&mut e_map, (2, 1), 1, (1, 1));
    set(&mut e_map, (2, 2), 1, (2, 1));
    set(&mut e_map, (2, 3), 1, (1, 3));
    set(&mut e_map, (3, 1), 2, (2, 1));
    set(&mut e_map, (3, 2), 1, (3, 1));
    set(&mut e_map, (3, 2), 2, (2, 2));
    set(&mut e_map, (3, 3), 2, (3, 2));
    // f̈ entries.
    set(&mut f_map, (1, 1), 1, (2, 1));
    set(&mut f_map, (1, 2), 2, (1, 3));
    set(&mut f_map, (1, 3), 1, (2, 3));
    set(&mut f_map, (2, 1), 1, (2, 2));
    set(&mut f_map, (2, 1), 2, (3, 1));
    set(&mut f_map, (2, 2), 2, (3, 2));
    set(&mut f_map, (3, 1), 1, (3, 2));
    set(&mut f_map, (3, 2), 2, (3, 3));
    QuasiCrystalTable::new(root, elements, wt, eps, phi, e_map, f_map)
        .expect("fixture is well-formed")
}
