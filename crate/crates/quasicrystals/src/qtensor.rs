//! The monoid-with-zero Z_0 of i-signatures and the quasi-tensor product of
//! seminormal quasi-crystal tables.
//!
//! Z_0 is the monoid with zero presented by ⟨−, + | (+−, 0)⟩: every nonzero
//! element has the canonical form −^a +^b, and a product collapses to zero
//! exactly when a + meets a − from the right. The i-signature of an element
//! x is 0 when ε̈_i(x) = +∞ and −^{ε̈_i(x)} +^{φ̈_i(x)} otherwise; it is
//! multiplicative across quasi-tensor products and word concatenation.

use crate::qc_core::{is_seminormal, ExtInt, QcError, QuasiCrystalTable};
use serde::Serialize;

/// An element of Z_0 in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sig {
    /// The zero of the monoid.
    Zero,
    /// The nonzero element −^minus +^plus.
    Pair {
        /// Number of − symbols.
        minus: u64,
        /// Number of + symbols.
        plus: u64,
    },
}

impl Sig {
    /// The identity −^0 +^0.
    pub fn one() -> Sig {
        Sig::Pair { minus: 0, plus: 0 }
    }
}

/// Multiply two signatures: zero absorbs; −^a +^b · −^c +^d collapses to
/// zero when b > 0 and c > 0, and is −^{a+c} +^{b+d} otherwise.
pub fn sig_mul(s: Sig, t: Sig) -> Sig {
    match (s, t) {
        (Sig::Zero, _) | (_, Sig::Zero) => Sig::Zero,
        (Sig::Pair { minus: a, plus: b }, Sig::Pair { minus: c, plus: d }) => {
            if b > 0 && c > 0 {
                Sig::Zero
            } else {
                Sig::Pair {
                    minus: a + c,
                    plus: b + d,
                }
            }
        }
    }
}

/// The i-signature of an element of a seminormal table: Zero iff
/// ε̈_i(x) = +∞, else −^{ε̈_i(x)} +^{φ̈_i(x)}.
pub fn sig_of(t: &QuasiCrystalTable, x: usize, i: usize) -> Result<Sig, QcError> {
    match (t.eps_of(x, i), t.phi_of(x, i)) {
        (ExtInt::PosInf, _) => Ok(Sig::Zero),
        (ExtInt::Finite(a), ExtInt::Finite(b)) if a >= 0 && b >= 0 => Ok(Sig::Pair {
            minus: a as u64,
            plus: b as u64,
        }),
        _ => Err(QcError::NotSeminormal),
    }
}

/// The quasi-tensor product of two seminormal tables over the same root
/// data. The element set is the ordered pairs x ⊗ x' (ids "(a,b)") in
/// row-major order; wt adds; when φ̈_i(x) > 0 and ε̈_i(x') > 0 the operators
/// are undefined and ε̈ = φ̈ = +∞; otherwise ε̈ and φ̈ add, f̈ acts on the
/// left factor iff φ̈_i(x) > 0, and ë acts on the right factor iff
/// ε̈_i(x') > 0. The result is again seminormal.
pub fn qtensor(
    t1: &QuasiCrystalTable,
    t2: &QuasiCrystalTable,
) -> Result<QuasiCrystalTable, QcError> {
    if t1.root != t2.root {
        return Err(QcError::MismatchedType);
    }
    if !is_seminormal(t1) || !is_seminormal(t2) {
        return Err(QcError::NotSeminormal);
    }
    let root = t1.root.clone();
    let k = root.index_count();
    let (m1, m2) = (t1.len(), t2.len());
    let m = m1 * m2;
    let idx = |x: usize, y: usize| x * m2 + y;

    let mut elements = Vec::with_capacity(m);
    let mut wt = Vec::with_capacity(m);
    for x in 0..m1 {
        for y in 0..m2 {
            elements.push(format!("({},{})", t1.elements[x], t2.elements[y]));
            wt.push(t1.wt[x].add(&t2.wt[y]));
        }
    }

    let mut eps = vec![vec![ExtInt::Finite(0); k]; m];
    let mut phi = vec![vec![ExtInt::Finite(0); k]; m];
    let mut e_map = vec![vec![None; k]; m];
    let mut f_map = vec![vec![None; k]; m];
    for x in 0..m1 {
        for y in 0..m2 {
            let z = idx(x, y);
            for i in 1..=k {
                match sig_mul(sig_of(t1, x, i)?, sig_of(t2, y, i)?) {
                    Sig::Zero => {
                        eps[z][i - 1] = ExtInt::PosInf;
                        phi[z][i - 1] = ExtInt::PosInf;
                    }
                    Sig::Pair { minus, plus } => {
                        eps[z][i - 1] = ExtInt::Finite(minus as i64);
                        phi[z][i - 1] = ExtInt::Finite(plus as i64);
                        // ë acts on the right factor iff it is i-raisable.
                        let right_raisable = t2.eps_of(y, i) > ExtInt::Finite(0);
                        e_map[z][i - 1] = if right_raisable {
                            t2.e(y, i).map(|yy| idx(x, yy))
                        } else {
                            t1.e(x, i).map(|xx| idx(xx, y))
                        };
                        // f̈ acts on the left factor iff it is i-lowerable.
                        let left_lowerable = t1.phi_of(x, i) > ExtInt::Finite(0);
                        f_map[z][i - 1] = if left_lowerable {
                            t1.f(x, i).map(|xx| idx(xx, y))
                        } else {
                            t2.f(y, i).map(|yy| idx(x, yy))
                        };
                    }
                }
            }
        }
    }
    QuasiCrystalTable::new(root, elements, wt, eps, phi, e_map, f_map)
}
