//! The free quasi-crystal monoid Q* over a seminormal alphabet: word-level
//! wt, ε̈, φ̈, ë, f̈ via the signature rule, with direct inversion-based
//! formulas for the standard type-A and type-C alphabets, plus the bar
//! involution for type C.
//!
//! Letters of the standard alphabets encode as signed integers: k ↔ k and
//! k̄ ↔ −k, with the order 1 < 2 < … < n < n̄ < … < 1̄ realized by
//! rank(k) = k and rank(−k) = 2n + 1 − k. Words over an explicit table
//! alphabet carry element indices instead.
//!
//! The m-fold operator rule: with p = max{k : ε̈_i(x_k) > 0} and
//! q = min{l : φ̈_i(x_l) > 0}, the word signature is zero (ε̈ = φ̈ = +∞,
//! operators undefined) iff some letter has signature zero or p > q;
//! otherwise ë_i acts at position p, f̈_i at position q, ε̈_i sums the
//! letter values up to p and φ̈_i from q on. The empty max is encoded as
//! p = 0 (ë undefined) and the empty min as q = m + 1 (f̈ undefined).

use crate::qc_core::{is_seminormal, ExtInt, QuasiCrystalTable};
use crate::qtensor::{sig_mul, sig_of, Sig};
use crate::rootsys::{RootData, Weight};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Errors raised by word operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    /// The operation needs a standard (or type-C) alphabet.
    #[error("operation not supported on this alphabet")]
    UnsupportedAlphabet,
    /// A letter outside the alphabet.
    #[error("letter {0} is not in the alphabet")]
    BadLetter(i64),
    /// Malformed word text.
    #[error("cannot parse word: {0}")]
    Parse(String),
    /// Table alphabets must be seminormal.
    #[error("alphabet table is not seminormal")]
    NotSeminormal,
    /// Named alphabets need size at least 2.
    #[error("alphabet size {0} too small; need at least 2")]
    RankTooSmall(usize),
}

/// A seminormal alphabet: a standard type-A or type-C alphabet of a given
/// size, or an arbitrary seminormal explicit table.
#[derive(Clone, Debug)]
pub enum Alphabet {
    /// Standard type-A alphabet {1 < … < n}.
    A(usize),
    /// Standard type-C alphabet {1 < … < n < n̄ < … < 1̄}.
    C(usize),
    /// An explicit seminormal table; letters are element indices.
    Table(Arc<QuasiCrystalTable>),
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Alphabet::A(a), Alphabet::A(b)) | (Alphabet::C(a), Alphabet::C(b)) => a == b,
            (Alphabet::Table(a), Alphabet::Table(b)) => {
                Arc::ptr_eq(a, b) || a.as_ref() == b.as_ref()
            }
            _ => false,
        }
    }
}
impl Eq for Alphabet {}

impl Alphabet {
    /// Standard type-A alphabet of size n (n ≥ 2).
    pub fn a(n: usize) -> Result<Self, WordError> {
        if n < 2 {
            return Err(WordError::RankTooSmall(n));
        }
        Ok(Alphabet::A(n))
    }

    /// Standard type-C alphabet of size n (n ≥ 2).
    pub fn c(n: usize) -> Result<Self, WordError> {
        if n < 2 {
            return Err(WordError::RankTooSmall(n));
        }
        Ok(Alphabet::C(n))
    }

    /// Wrap an explicit table as an alphabet; the table must be seminormal.
    pub fn from_table(t: QuasiCrystalTable) -> Result<Self, WordError> {
        if !is_seminormal(&t) {
            return Err(WordError::NotSeminormal);
        }
        Ok(Alphabet::Table(Arc::new(t)))
    }

    /// Root data governing this alphabet.
    pub fn root_data(&self) -> RootData {
        match self {
            Alphabet::A(n) => RootData::type_a(*n).expect("size checked at construction"),
            Alphabet::C(n) => RootData::type_c(*n).expect("size checked at construction"),
            Alphabet::Table(t) => t.root.clone(),
        }
    }

    /// Number of simple-root indices |I|.
    pub fn index_count(&self) -> usize {
        match self {
            Alphabet::A(n) => n - 1,
            Alphabet::C(n) => *n,
            Alphabet::Table(t) => t.root.index_count(),
        }
    }

    /// Weight-lattice dimension.
    pub fn dim(&self) -> usize {
        match self {
            Alphabet::A(n) | Alphabet::C(n) => *n,
            Alphabet::Table(t) => t.root.dim,
        }
    }

    /// True iff `x` is a letter of this alphabet.
    pub fn contains(&self, x: i64) -> bool {
        match self {
            Alphabet::A(n) => x >= 1 && x <= *n as i64,
            Alphabet::C(n) => x != 0 && x.unsigned_abs() <= *n as u64,
            Alphabet::Table(t) => x >= 0 && (x as usize) < t.len(),
        }
    }

    /// All letters in rank order.
    pub fn letters(&self) -> Vec<i64> {
        match self {
            Alphabet::A(n) => (1..=*n as i64).collect(),
            Alphabet::C(n) => {
                let n = *n as i64;
                (1..=n).chain((1..=n).rev().map(|k| -k)).collect()
            }
            Alphabet::Table(t) => (0..t.len() as i64).collect(),
        }
    }

    /// Weight of one letter.
    pub fn letter_wt(&self, x: i64) -> Weight {
        debug_assert!(self.contains(x));
        match self {
            Alphabet::A(n) => Weight::basis(x as usize, *n),
            Alphabet::C(n) => {
                if x > 0 {
                    Weight::basis(x as usize, *n)
                } else {
                    Weight::basis((-x) as usize, *n).neg()
                }
            }
            Alphabet::Table(t) => t.wt[x as usize].clone(),
        }
    }

    /// ε̈_i of one letter (finite for standard alphabets).
    fn letter_eps(&self, x: i64, i: usize) -> ExtInt {
        match self {
            Alphabet::A(_) => ExtInt::Finite((x == i as i64 + 1) as i64),
            Alphabet::C(n) => {
                let hit = if i < *n {
                    x == i as i64 + 1 || x == -(i as i64)
                } else {
                    x == -(*n as i64)
                };
                ExtInt::Finite(hit as i64)
            }
            Alphabet::Table(t) => t.eps_of(x as usize, i),
        }
    }

    /// φ̈_i of one letter.
    fn letter_phi(&self, x: i64, i: usize) -> ExtInt {
        match self {
            Alphabet::A(_) => ExtInt::Finite((x == i as i64) as i64),
            Alphabet::C(n) => {
                let hit = if i < *n {
                    x == i as i64 || x == -(i as i64 + 1)
                } else {
                    x == *n as i64
                };
                ExtInt::Finite(hit as i64)
            }
            Alphabet::Table(t) => t.phi_of(x as usize, i),
        }
    }

    /// ë_i of one letter.
    fn letter_e(&self, x: i64, i: usize) -> Option<i64> {
        match self {
            Alphabet::A(_) => (x == i as i64 + 1).then(|| x - 1),
            Alphabet::C(n) => {
                let i = i as i64;
                if (i as usize) < *n {
                    if x == i + 1 {
                        Some(i)
                    } else if x == -i {
                        Some(-(i + 1))
                    } else {
                        None
                    }
                } else if x == -(*n as i64) {
                    Some(*n as i64)
                } else {
                    None
                }
            }
            Alphabet::Table(t) => t.e(x as usize, i).map(|j| j as i64),
        }
    }

    /// f̈_i of one letter.
    fn letter_f(&self, x: i64, i: usize) -> Option<i64> {
        match self {
            Alphabet::A(_) => (x == i as i64).then(|| x + 1),
            Alphabet::C(n) => {
                let i = i as i64;
                if (i as usize) < *n {
                    if x == i {
                        Some(i + 1)
                    } else if x == -(i + 1) {
                        Some(-i)
                    } else {
                        None
                    }
                } else if x == *n as i64 {
                    Some(-(*n as i64))
                } else {
                    None
                }
            }
            Alphabet::Table(t) => t.f(x as usize, i).map(|j| j as i64),
        }
    }

    /// i-signature of one letter.
    pub fn letter_sig(&self, x: i64, i: usize) -> Sig {
        match self {
            Alphabet::Table(t) => {
                sig_of(t, x as usize, i).expect("table seminormality checked at construction")
            }
            _ => match (self.letter_eps(x, i), self.letter_phi(x, i)) {
                (ExtInt::Finite(a), ExtInt::Finite(b)) => Sig::Pair {
                    minus: a as u64,
                    plus: b as u64,
                },
                _ => unreachable!("standard letters have finite signature"),
            },
        }
    }
}

/// A word over an alphabet: the empty sequence is ε, the monoid identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    /// The alphabet every letter belongs to.
    pub alphabet: Alphabet,
    /// The letter sequence.
    pub letters: Vec<i64>,
}

impl Word {
    /// Build a word, validating every letter.
    pub fn new(alphabet: Alphabet, letters: Vec<i64>) -> Result<Self, WordError> {
        for &x in &letters {
            if !alphabet.contains(x) {
                return Err(WordError::BadLetter(x));
            }
        }
        Ok(Word { alphabet, letters })
    }

    /// The empty word ε.
    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Parse a space- or comma-separated list of signed integers.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let x: i64 = tok
                .parse()
                .map_err(|_| WordError::Parse(format!("bad letter token {tok:?}")))?;
            letters.push(x);
        }
        Word::new(alphabet, letters)
    }

    /// Length |w|.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True iff this is ε.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation u · v (same alphabet).
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert!(self.alphabet == other.alphabet);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    /// Pretty form with overbars on barred letters (e.g. `2 1̄`).
    pub fn pretty(&self) -> String {
        if self.is_empty() {
            return "ε".to_string();
        }
        self.letters
            .iter()
            .map(|&x| {
                if x < 0 {
                    format!("{}\u{0304}", -x)
                } else {
                    x.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Weight of a word: the sum of its letter weights (ε ↦ 0).
pub fn word_wt(w: &Word) -> Weight {
    let mut acc = Weight::zero(w.alphabet.dim());
    for &x in &w.letters {
        acc = acc.add(&w.alphabet.letter_wt(x));
    }
    acc
}

/// True iff the word has an i-inversion: a letter of {i, (i+1)-bar} strictly
/// before a letter of {i+1, ī} (type C), or an i strictly before an i+1
/// (type A). The symbols n+1 and (n+1)-bar never occur and are skipped.
pub fn has_inversion(w: &Word, i: usize) -> Result<bool, WordError> {
    let (x_set, y_set): (Vec<i64>, Vec<i64>) = match &w.alphabet {
        Alphabet::A(_) => (vec![i as i64], vec![i as i64 + 1]),
        Alphabet::C(n) => {
            let i = i as i64;
            if (i as usize) < *n {
                (vec![i, -(i + 1)], vec![i + 1, -i])
            } else {
                (vec![i], vec![-i])
            }
        }
        Alphabet::Table(_) => return Err(WordError::UnsupportedAlphabet),
    };
    let mut seen_x = false;
    for &c in &w.letters {
        if seen_x && y_set.contains(&c) {
            return Ok(true);
        }
        if x_set.contains(&c) {
            seen_x = true;
        }
    }
    Ok(false)
}

/// i-signature of a word: the sig_mul-fold of its letter signatures. Zero
/// iff ε̈_i(w) = +∞; otherwise Pair(ε̈_i(w), φ̈_i(w)).
pub fn word_sig(w: &Word, i: usize) -> Sig {
    let mut acc = Sig::one();
    for &x in &w.letters {
        acc = sig_mul(acc, w.alphabet.letter_sig(x, i));
        if acc == Sig::Zero {
            return Sig::Zero;
        }
    }
    acc
}

/// ε̈_i of a word as an extended integer.
pub fn word_eps(w: &Word, i: usize) -> ExtInt {
    match word_sig(w, i) {
        Sig::Zero => ExtInt::PosInf,
        Sig::Pair { minus, .. } => ExtInt::Finite(minus as i64),
    }
}

/// φ̈_i of a word as an extended integer.
pub fn word_phi(w: &Word, i: usize) -> ExtInt {
    match word_sig(w, i) {
        Sig::Zero => ExtInt::PosInf,
        Sig::Pair { plus, .. } => ExtInt::Finite(plus as i64),
    }
}

/// ë_i of a word: acts on the letter at p = max{k : ε̈_i(x_k) > 0};
/// undefined iff the signature is zero or no letter is raisable.
pub fn word_e(w: &Word, i: usize) -> Option<Word> {
    if word_sig(w, i) == Sig::Zero {
        return None;
    }
    let p = w.letters.iter().rposition(|&x| {
        w.alphabet.letter_eps(x, i) > ExtInt::Finite(0)
    })?;
    let mut letters = w.letters.clone();
    letters[p] = w
        .alphabet
        .letter_e(letters[p], i)
        .expect("raisable letter has an e-image");
    Some(Word {
        alphabet: w.alphabet.clone(),
        letters,
    })
}

/// f̈_i of a word: acts on the letter at q = min{l : φ̈_i(x_l) > 0};
/// undefined iff the signature is zero or no letter is lowerable.
pub fn word_f(w: &Word, i: usize) -> Option<Word> {
    if word_sig(w, i) == Sig::Zero {
        return None;
    }
    let q = w.letters.iter().position(|&x| {
        w.alphabet.letter_phi(x, i) > ExtInt::Finite(0)
    })?;
    let mut letters = w.letters.clone();
    letters[q] = w
        .alphabet
        .letter_f(letters[q], i)
        .expect("lowerable letter has an f-image");
    Some(Word {
        alphabet: w.alphabet.clone(),
        letters,
    })
}

/// The bar involution on type-C words: reverse the word and bar each letter.
pub fn bar(w: &Word) -> Result<Word, WordError> {
    match w.alphabet {
        Alphabet::C(_) => Ok(Word {
            alphabet: w.alphabet.clone(),
            letters: w.letters.iter().rev().map(|&x| -x).collect(),
        }),
        _ => Err(WordError::UnsupportedAlphabet),
    }
}

/// Highest/lowest/isolated flags for a word, computed from operator
/// definedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WordClass {
    /// All ë_i undefined.
    pub highest_weight: bool,
    /// All f̈_i undefined.
    pub lowest_weight: bool,
    /// Both: a singleton component.
    pub isolated: bool,
}

/// Classify a word as highest-weight / lowest-weight / isolated.
pub fn word_class(w: &Word) -> WordClass {
    let k = w.alphabet.index_count();
    let highest = (1..=k).all(|i| word_e(w, i).is_none());
    let lowest = (1..=k).all(|i| word_f(w, i).is_none());
    WordClass {
        highest_weight: highest,
        lowest_weight: lowest,
        isolated: highest && lowest,
    }
}
