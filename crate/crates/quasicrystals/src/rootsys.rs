//! Root-system data for types A and C, plus validation of the abstract
//! root-system axioms on explicit finite data.
//!
//! Conventions: "type A with alphabet size n" has index set {1, …, n−1} with
//! simple roots α_i = e_i − e_{i+1}; "type C with alphabet size n" has index
//! set {1, …, n} with α_i = e_i − e_{i+1} for i < n and α_n = 2e_n. The
//! weight lattice is ℤ^n for both. All arithmetic is exact: integers for
//! weights, rationals for pairings and linear solving.

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Exact rational scalar used for pairings and linear algebra.
pub type Rat = Ratio<i64>;

/// An element of the weight lattice ℤ^d.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    /// The zero weight of dimension `d`.
    pub fn zero(d: usize) -> Self {
        Weight(vec![0; d])
    }

    /// The standard basis vector e_k (1-based) in dimension `d`.
    pub fn basis(k: usize, d: usize) -> Self {
        assert!(k >= 1 && k <= d, "basis index out of range");
        let mut v = vec![0; d];
        v[k - 1] = 1;
        Weight(v)
    }

    /// Dimension of the ambient lattice.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinatewise sum.
    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Coordinatewise difference.
    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Coordinatewise negation.
    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// Standard (Euclidean) dot product, exact over ℤ.
    pub fn dot(&self, other: &Weight) -> i64 {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// True if all coordinates are zero.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Which family of root-system data this is.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RootKind {
    /// Type A with a named alphabet size.
    TypeA,
    /// Type C with a named alphabet size.
    TypeC,
    /// Explicit simple-root data loaded from JSON.
    Explicit,
}

/// Errors raised by root-system operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    /// A pairing ⟨λ, α_i^∨⟩ is not an integer (violates WL3 on explicit data).
    #[error("pairing of {weight} with coroot {index} is not an integer")]
    NonIntegralPairing {
        /// Offending weight, rendered for the message.
        weight: String,
        /// 1-based simple-root index.
        index: usize,
    },
    /// A simple-root index outside 1..=index_count.
    #[error("simple-root index {index} out of range 1..={count}")]
    IndexOutOfRange {
        /// Offending index.
        index: usize,
        /// Number of simple roots.
        count: usize,
    },
    /// Named alphabets need size at least 2.
    #[error("alphabet size {0} too small; need at least 2")]
    RankTooSmall(usize),
    /// A weight has the wrong dimension for this root system.
    #[error("weight dimension {got} does not match lattice dimension {want}")]
    DimensionMismatch {
        /// Dimension of the supplied weight.
        got: usize,
        /// Expected lattice dimension.
        want: usize,
    },
    /// Malformed explicit root data.
    #[error("invalid root data: {0}")]
    InvalidData(String),
}

/// Simple-root data: the simple roots α_i, their squared norms ⟨α_i, α_i⟩,
/// and the ambient lattice dimension.
#[derive(Clone, PartialEq, Debug)]
pub struct RootData {
    /// Family tag.
    pub kind: RootKind,
    /// Alphabet size for named kinds (n letters); 0 for explicit data.
    pub alphabet_size: usize,
    /// Lattice dimension d (Λ = ℤ^d).
    pub dim: usize,
    /// Simple roots α_1, …, α_{|I|}.
    pub simple_roots: Vec<Weight>,
    /// Squared norms ⟨α_i, α_i⟩ as exact rationals.
    pub coroot_norms: Vec<Rat>,
}

impl RootData {
    /// Root data of type A with alphabet {1, …, n}: index set {1, …, n−1},
    /// α_i = e_i − e_{i+1}, Λ = ℤ^n.
    pub fn type_a(n: usize) -> Result<Self, RootError> {
        if n < 2 {
            return Err(RootError::RankTooSmall(n));
        }
        let simple_roots: Vec<Weight> = (1..n)
            .map(|i| Weight::basis(i, n).sub(&Weight::basis(i + 1, n)))
            .collect();
        let coroot_norms = simple_roots.iter().map(|a| Rat::from(a.dot(a))).collect();
        Ok(RootData {
            kind: RootKind::TypeA,
            alphabet_size: n,
            dim: n,
            simple_roots,
            coroot_norms,
        })
    }

    /// Root data of type C with alphabet {1, …, n, n̄, …, 1̄}: index set
    /// {1, …, n}, α_i = e_i − e_{i+1} for i < n and α_n = 2e_n, Λ = ℤ^n.
    pub fn type_c(n: usize) -> Result<Self, RootError> {
        if n < 2 {
            return Err(RootError::RankTooSmall(n));
        }
        let mut simple_roots: Vec<Weight> = (1..n)
            .map(|i| Weight::basis(i, n).sub(&Weight::basis(i + 1, n)))
            .collect();
        let mut last = vec![0; n];
        last[n - 1] = 2;
        simple_roots.push(Weight(last));
        let coroot_norms = simple_roots.iter().map(|a| Rat::from(a.dot(a))).collect();
        Ok(RootData {
            kind: RootKind::TypeC,
            alphabet_size: n,
            dim: n,
            simple_roots,
            coroot_norms,
        })
    }

    /// Explicit root data from raw simple roots and squared norms.
    pub fn explicit(simple_roots: Vec<Weight>, coroot_norms: Vec<Rat>) -> Result<Self, RootError> {
        if simple_roots.is_empty() {
            return Err(RootError::InvalidData("no simple roots".into()));
        }
        let dim = simple_roots[0].dim();
        if simple_roots.iter().any(|r| r.dim() != dim) {
            return Err(RootError::InvalidData(
                "simple roots have mixed dimensions".into(),
            ));
        }
        if coroot_norms.len() != simple_roots.len() {
            return Err(RootError::InvalidData(
                "coroot_norms length differs from simple_roots length".into(),
            ));
        }
        if coroot_norms.iter().any(|q| !q.is_positive()) {
            return Err(RootError::InvalidData(
                "coroot norms must be positive".into(),
            ));
        }
        Ok(RootData {
            kind: RootKind::Explicit,
            alphabet_size: 0,
            dim,
            simple_roots,
            coroot_norms,
        })
    }

    /// Number of simple roots |I|.
    pub fn index_count(&self) -> usize {
        self.simple_roots.len()
    }

    fn check_index(&self, i: usize) -> Result<(), RootError> {
        if i >= 1 && i <= self.index_count() {
            Ok(())
        } else {
            Err(RootError::IndexOutOfRange {
                index: i,
                count: self.index_count(),
            })
        }
    }

    fn check_dim(&self, w: &Weight) -> Result<(), RootError> {
        if w.dim() == self.dim {
            Ok(())
        } else {
            Err(RootError::DimensionMismatch {
                got: w.dim(),
                want: self.dim,
            })
        }
    }

    /// The coroot pairing ⟨λ, α_i^∨⟩ = 2⟨λ, α_i⟩ / ⟨α_i, α_i⟩, exact.
    ///
    /// Errors if the result is not an integer (possible only for explicit
    /// data violating the lattice integrality axiom WL3).
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64, RootError> {
        self.check_index(i)?;
        self.check_dim(lambda)?;
        let num = Rat::from(2 * lambda.dot(&self.simple_roots[i - 1]));
        let q = num / self.coroot_norms[i - 1];
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(RootError::NonIntegralPairing {
                weight: lambda.to_string(),
                index: i,
            })
        }
    }

    /// The simple reflection s_i(v) = v − ⟨v, α_i^∨⟩ α_i, exact over ℚ.
    pub fn simple_reflection(&self, v: &Weight, i: usize) -> Result<Weight, RootError> {
        let c = self.pairing(v, i)?;
        let alpha = &self.simple_roots[i - 1];
        Ok(Weight(
            v.0.iter()
                .zip(&alpha.0)
                .map(|(vj, aj)| vj - c * aj)
                .collect(),
        ))
    }

    /// Dominance order: true iff λ − μ = Σ k_i α_i with every k_i ≥ 0,
    /// solved exactly over ℚ (the solution is unique when it exists, since
    /// the simple roots are linearly independent). Returns false when λ − μ
    /// lies outside the span of the simple roots.
    pub fn weight_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        if mu.dim() != self.dim || lambda.dim() != self.dim {
            return false;
        }
        let diff = lambda.sub(mu);
        match solve_in_root_span(&self.simple_roots, &diff) {
            Some(ks) => ks.iter().all(|k| !k.is_negative()),
            None => false,
        }
    }

    /// Enumerate the full root set Φ for the named types:
    /// type A: {e_i − e_j | i ≠ j}; type C: {±e_i ± e_j | i < j} ∪ {±2e_i}.
    pub fn generate_roots(&self) -> Result<Vec<Weight>, RootError> {
        let n = self.dim;
        let mut roots = Vec::new();
        match self.kind {
            RootKind::TypeA => {
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            roots.push(Weight::basis(i, n).sub(&Weight::basis(j, n)));
                        }
                    }
                }
            }
            RootKind::TypeC => {
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        let ei = Weight::basis(i, n);
                        let ej = Weight::basis(j, n);
                        roots.push(ei.add(&ej));
                        roots.push(ei.sub(&ej));
                        roots.push(ej.sub(&ei));
                        roots.push(ei.neg().sub(&ej));
                    }
                    let two_ei = Weight(
                        Weight::basis(i, n)
                            .0
                            .iter()
                            .map(|c| 2 * c)
                            .collect::<Vec<_>>(),
                    );
                    roots.push(two_ei.neg());
                    roots.push(two_ei);
                }
            }
            RootKind::Explicit => {
                return Err(RootError::InvalidData(
                    "cannot enumerate roots for explicit data; supply them".into(),
                ))
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(roots)
    }

    /// Load explicit root data from its JSON document form:
    /// `{dim, simple_roots: [[int]], coroot_norms: ["p/q" | "p"]}`.
    pub fn from_json(text: &str) -> Result<Self, RootError> {
        let doc: RootDataJson =
            serde_json::from_str(text).map_err(|e| RootError::InvalidData(e.to_string()))?;
        let simple_roots: Vec<Weight> = doc.simple_roots.into_iter().map(Weight).collect();
        if simple_roots.iter().any(|r| r.dim() != doc.dim) {
            return Err(RootError::InvalidData(
                "simple root dimension differs from dim".into(),
            ));
        }
        let coroot_norms = doc
            .coroot_norms
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::explicit(simple_roots, coroot_norms)
    }

    /// Serialize to the JSON document form used by [`RootData::from_json`].
    pub fn to_json(&self) -> String {
        let doc = RootDataJson {
            dim: self.dim,
            simple_roots: self.simple_roots.iter().map(|w| w.0.clone()).collect(),
            coroot_norms: self
                .coroot_norms
                .iter()
                .map(|q| {
                    if q.is_integer() {
                        q.to_integer().to_string()
                    } else {
                        format!("{}/{}", q.numer(), q.denom())
                    }
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("root data serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct RootDataJson {
    dim: usize,
    simple_roots: Vec<Vec<i64>>,
    coroot_norms: Vec<String>,
}

fn parse_rat(s: &str) -> Result<Rat, RootError> {
    let bad = || RootError::InvalidData(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from(s.trim().parse::<i64>().map_err(|_| bad())?)),
    }
}

/// Solve `target = Σ k_i basis_i` exactly over ℚ by Gaussian elimination.
/// Returns the coefficient vector when the system is consistent (unique when
/// the basis is linearly independent), or `None` when inconsistent.
fn solve_in_root_span(basis: &[Weight], target: &Weight) -> Option<Vec<Rat>> {
    let rows = target.dim();
    let cols = basis.len();
    // Augmented matrix [basis columns | target].
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = basis.iter().map(|b| Rat::from(b.0[r])).collect();
            row.push(Rat::from(target.0[r]));
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c];
        for v in m[rank].iter_mut() {
            *v /= inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c];
                for j in 0..=cols {
                    let sub = factor * m[rank][j];
                    m[r][j] -= sub;
                }
            }
        }
        pivot_of_col[c] = rank;
        rank += 1;
    }
    // Inconsistent if a zero row has nonzero target entry.
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    // Free columns get coefficient 0 (only relevant for dependent bases).
    let mut ks = vec![Rat::zero(); cols];
    for c in 0..cols {
        if pivot_of_col[c] != usize::MAX {
            ks[c] = m[pivot_of_col[c]][cols];
        }
    }
    // Verify the candidate (guards the free-column convention).
    for r in 0..rows {
        let mut acc = Rat::zero();
        for c in 0..cols {
            acc += ks[c] * Rat::from(basis[c].0[r]);
        }
        if acc != Rat::from(target.0[r]) {
            return None;
        }
    }
    Some(ks)
}

/// One violated axiom with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    /// Axiom tag: RS1–RS4, SR1–SR2, WL1–WL3.
    pub axiom: String,
    /// Witness description.
    pub witness: String,
}

/// Outcome of [`validate_root_axioms`]: empty means every axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// All violations found (the validator never stops early).
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    /// True iff no axiom is violated.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn add(&mut self, axiom: &str, witness: String) {
        self.violations.push(AxiomViolation {
            axiom: axiom.to_string(),
            witness,
        });
    }
}

/// Check the root-system axioms RS1–RS4, the simple-root axioms SR1–SR2, and
/// the weight-lattice axioms WL1–WL3 on an explicit finite root set, with
/// Λ = ℤ^d and the standard dot product. Violations are reported with
/// witnesses; the validator never fails early.
pub fn validate_root_axioms(rd: &RootData, roots: &[Weight]) -> AxiomReport {
    let mut report = AxiomReport::default();
    let d = rd.dim;

    // RS1: nonempty, finite (given), 0 ∉ Φ.
    if roots.is_empty() {
        report.add("RS1", "root set is empty".into());
    }
    for a in roots {
        if a.is_zero() {
            report.add("RS1", "0 is in the root set".into());
        }
        if a.dim() != d {
            report.add("RS1", format!("root {a} has wrong dimension"));
        }
    }
    let ok_dims = roots.iter().all(|a| a.dim() == d && !a.is_zero());
    if !ok_dims || roots.is_empty() {
        return report; // remaining checks assume well-formed nonzero roots
    }

    // Reflection image as exact rationals: r_α(β) = β − ⟨β, α^∨⟩ α.
    let reflect = |alpha: &Weight, beta: &Weight| -> Vec<Rat> {
        let c = Rat::new(2 * beta.dot(alpha), alpha.dot(alpha));
        beta.0
            .iter()
            .zip(&alpha.0)
            .map(|(b, a)| Rat::from(*b) - c * Rat::from(*a))
            .collect()
    };
    let contains = |v: &[Rat]| -> bool {
        roots.iter().any(|r| {
            r.0.iter()
                .zip(v)
                .all(|(c, q)| q.is_integer() && q.to_integer() == *c)
        })
    };

    for a in roots {
        for b in roots {
            // RS2: r_α(β) ∈ Φ.
            let img = reflect(a, b);
            if !contains(&img) {
                report.add("RS2", format!("r_{a}({b}) is not a root"));
            }
            // RS3: ⟨α, β^∨⟩ ∈ ℤ.
            let p = Rat::new(2 * a.dot(b), b.dot(b));
            if !p.is_integer() {
                report.add("RS3", format!("pairing of {a} with coroot of {b} is {p}"));
            }
            // RS4: proportional roots have ratio ±1.
            if a != b {
                if let Some(k) = proportionality(a, b) {
                    if k != Rat::from(1) && k != Rat::from(-1) {
                        report.add("RS4", format!("{b} = {k}·{a}"));
                    }
                }
            }
        }
    }

    // SR1: simple roots linearly independent.
    if !linearly_independent(&rd.simple_roots) {
        report.add("SR1", "simple roots are linearly dependent".into());
    }

    // SR2: each root expands over the simple roots with all-nonnegative or
    // all-nonpositive integer coefficients.
    for b in roots {
        match solve_in_root_span(&rd.simple_roots, b) {
            Some(ks) => {
                let all_int = ks.iter().all(|k| k.is_integer());
                let all_nonneg = ks.iter().all(|k| !k.is_negative());
                let all_nonpos = ks.iter().all(|k| !k.is_positive());
                if !(all_int && (all_nonneg || all_nonpos)) {
                    report.add("SR2", format!("{b} has mixed or non-integer coefficients"));
                }
            }
            None => report.add("SR2", format!("{b} is outside the simple-root span")),
        }
    }

    // WL1: ℤ^d spans ℝ^d — holds whenever d ≥ 1.
    if d == 0 {
        report.add("WL1", "lattice dimension is zero".into());
    }
    // WL2: Φ ⊆ Λ — integer coordinates, guaranteed by the Weight type.
    // WL3: ⟨e_j, α^∨⟩ ∈ ℤ for every basis weight and every root.
    for a in roots {
        for j in 1..=d {
            let p = Rat::new(2 * Weight::basis(j, d).dot(a), a.dot(a));
            if !p.is_integer() {
                report.add("WL3", format!("pairing of e_{j} with coroot of {a} is {p}"));
            }
        }
    }

    report
}

/// If `b = k·a` for a rational k, return k.
fn proportionality(a: &Weight, b: &Weight) -> Option<Rat> {
    let mut k: Option<Rat> = None;
    for (x, y) in a.0.iter().zip(&b.0) {
        match (*x, *y) {
            (0, 0) => {}
            (0, _) | (_, 0) if *x != 0 || *y != 0 => return None,
            _ => {
                let r = Rat::new(*y, *x);
                match k {
                    None => k = Some(r),
                    Some(prev) if prev == r => {}
                    Some(_) => return None,
                }
            }
        }
    }
    k
}

fn linearly_independent(vs: &[Weight]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let rows = vs[0].dim();
    let cols = vs.len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| vs.iter().map(|v| Rat::from(v.0[r])).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            return false; // a column with no pivot ⇒ dependent
        };
        m.swap(rank, p);
        let inv = m[rank][c];
        for v in m[rank].iter_mut() {
            *v /= inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c];
                for j in 0..cols {
                    let sub = factor * m[rank][j];
                    m[r][j] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank == cols
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let a2 = RootData::type_a(2).unwrap();
        assert_eq!(a2.pairing(&Weight::basis(1, 2), 1).unwrap(), 1);
        assert_eq!(a2.pairing(&Weight::basis(2, 2), 1).unwrap(), -1);
        let c2 = RootData::type_c(2).unwrap();
        assert_eq!(c2.pairing(&Weight::basis(2, 2), 2).unwrap(), 1);
    }

    #[test]
    fn weight_leq_examples() {
        let a3 = RootData::type_a(3).unwrap();
        assert!(a3.weight_leq(&Weight(vec![0, 1, 0]), &Weight(vec![1, 0, 0])));
        let c2 = RootData::type_c(2).unwrap();
        assert!(c2.weight_leq(&Weight(vec![1, 2]), &Weight(vec![2, 1])));
        let a2 = RootData::type_a(2).unwrap();
        assert!(!a2.weight_leq(&Weight(vec![1, 0]), &Weight(vec![0, 1])));
    }

    #[test]
    fn generated_root_systems_pass() {
        for n in 2..=4 {
            let a = RootData::type_a(n).unwrap();
            let roots = a.generate_roots().unwrap();
            assert!(validate_root_axioms(&a, &roots).passed(), "A, n={n}");
            let c = RootData::type_c(n).unwrap();
            let roots = c.generate_roots().unwrap();
            assert!(validate_root_axioms(&c, &roots).passed(), "C, n={n}");
        }
    }

    #[test]
    fn doubled_root_breaks_rs4() {
        let a2 = RootData::type_a(2).unwrap();
        let mut roots = a2.generate_roots().unwrap();
        roots.push(Weight(vec![2, -2]));
        let report = validate_root_axioms(&a2, &roots);
        assert!(report.violations.iter().any(|v| v.axiom == "RS4"));
    }

    #[test]
    fn reflection_is_involutive() {
        let c3 = RootData::type_c(3).unwrap();
        let samples = [
            Weight(vec![1, -2, 3]),
            Weight(vec![0, 0, 1]),
            Weight(vec![5, 4, -1]),
        ];
        for w in &samples {
            for i in 1..=3 {
                let once = c3.simple_reflection(w, i).unwrap();
                let twice = c3.simple_reflection(&once, i).unwrap();
                assert_eq!(&twice, w);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"dim":2,"simple_roots":[[1,-1],[0,2]],"coroot_norms":["2","4"]}"#;
        let rd = RootData::from_json(text).unwrap();
        assert_eq!(rd.index_count(), 2);
        assert_eq!(rd.pairing(&Weight(vec![0, 1]), 2).unwrap(), 1);
        let again = RootData::from_json(&rd.to_json()).unwrap();
        assert_eq!(rd, again);
    }
}
