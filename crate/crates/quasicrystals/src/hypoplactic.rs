//! Hypoplactic-monoid semantics on top of the congruence: the classical
//! rank-n hypoplactic oracle for type A, classification of commutative and
//! idempotent elements for type C, the rank-2 type-C normal form, identity
//! checking, and the embedding homomorphisms between hypoplactic monoids.

use crate::qgraph::{congruent, explore, GraphError};
use crate::rootsys::Weight;
use crate::word_monoid::{has_inversion, word_class, word_wt, Alphabet, Word, WordError};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use thiserror::Error;

/// Errors raised by hypoplactic operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypoError {
    /// (λ, δ) violates the commutative-element bijection conditions.
    #[error("weight/inversion pair does not describe a commutative element: {0}")]
    InvalidPair(String),
    /// Embeddings need target alphabet size at least 3.
    #[error("alphabet size {0} too small; need at least 3")]
    RankTooSmall(usize),
    /// The operation needs a specific standard alphabet.
    #[error("operation not supported on this alphabet")]
    UnsupportedAlphabet,
    /// Abstract-word syntax error in identity checking.
    #[error("bad identity pattern: {0}")]
    BadPattern(String),
    /// Underlying graph error (budget).
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// Underlying word error.
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Decide the classical hypoplactic congruence on type-A words: the
/// congruence generated by the Knuth relations
/// R1 = {(yzx, yxz), (xzy, zxy) : x < y < z},
/// R2 = {(xyx, xxy), (xyy, yxy) : x < y}
/// and the quartic relations
/// R3 = {(xzty, zxyt) : t ≤ x < y ≤ z},
/// R4 = {(ytzx, tyxz) : t < x ≤ y < z}.
///
/// All four families preserve length and letter multiset, so the rewriting
/// closure of u is contained in the finite set of anagrams of u; a BFS over
/// that set applying each relation at each position in both directions
/// decides membership.
pub fn classical_congruent_a(u: &Word, v: &Word) -> Result<bool, HypoError> {
    match (&u.alphabet, &v.alphabet) {
        (Alphabet::A(a), Alphabet::A(b)) if a == b => {}
        _ => return Err(HypoError::UnsupportedAlphabet),
    }
    if u.letters.len() != v.letters.len() {
        return Ok(false);
    }
    let mut cu = u.letters.clone();
    let mut cv = v.letters.clone();
    cu.sort_unstable();
    cv.sort_unstable();
    if cu != cv {
        return Ok(false);
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    seen.insert(u.letters.clone());
    queue.push_back(u.letters.clone());
    while let Some(cur) = queue.pop_front() {
        if cur == v.letters {
            return Ok(true);
        }
        for next in knuth_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// All single-step rewrites of a type-A word under R1–R4, in both
/// directions.
fn knuth_neighbors(w: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let m = w.len();
    // Cubic relations on windows (a, b, c) starting at position p.
    for p in 0..m.saturating_sub(2) {
        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
        // R1 first pair: yzx ↔ yxz (x < y < z) — swap the last two letters
        // when the first lies strictly between them.
        let r1_first = b.min(c) < a && a < b.max(c);
        // R2 first pair: xyx ↔ xxy (x < y) — also a last-two swap.
        let r2_first = (a == c && a < b) || (a == b && a < c);
        if r1_first || r2_first {
            let mut next = w.to_vec();
            next.swap(p + 1, p + 2);
            out.push(next);
        }
        // R1 second pair: xzy ↔ zxy (x < y < z) — swap the first two
        // letters when the last lies strictly between them.
        let r1_second = a.min(b) < c && c < a.max(b);
        // R2 second pair: xyy ↔ yxy (x < y) — also a first-two swap.
        let r2_second = (b == c && a < b) || (a == c && b < a);
        if r1_second || r2_second {
            let mut next = w.to_vec();
            next.swap(p, p + 1);
            out.push(next);
        }
    }
    // Quartic relations on windows (a, b, c, d): both R3 and R4 exchange
    // positions 1↔2 and 3↔4; the relation and direction are read off the
    // letter order.
    for p in 0..m.saturating_sub(3) {
        let (a, b, c, d) = (w[p], w[p + 1], w[p + 2], w[p + 3]);
        // R3: xzty ↔ zxyt with t ≤ x < y ≤ z.
        let r3 = (c <= a && a < d && d <= b) || (d <= b && b < c && c <= a);
        // R4: ytzx ↔ tyxz with t < x ≤ y < z.
        let r4 = (b < d && d <= a && a < c) || (a < c && c <= b && b < d);
        if r3 || r4 {
            let mut next = w.to_vec();
            next.swap(p, p + 1);
            next.swap(p + 2, p + 3);
            out.push(next);
        }
    }
    out
}

/// A word is a commutative element of the hypoplactic monoid iff it is
/// isolated (a singleton component).
pub fn is_commutative(w: &Word) -> bool {
    word_class(w).isolated
}

/// A word is idempotent iff it is isolated and has weight zero.
pub fn is_idempotent(w: &Word) -> bool {
    word_class(w).isolated && word_wt(w).is_zero()
}

/// The inversion signature of a type-C word: bit i set iff the word has an
/// i-inversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvSignature {
    /// δ_1, …, δ_n.
    pub delta: Vec<u8>,
}

/// Compute the inversion signature of a type-C word.
pub fn inv_signature(w: &Word) -> Result<InvSignature, HypoError> {
    let Alphabet::C(n) = w.alphabet else {
        return Err(HypoError::UnsupportedAlphabet);
    };
    let delta = (1..=n)
        .map(|i| has_inversion(w, i).map(|b| b as u8))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InvSignature { delta })
}

/// Construct the isolated type-C word with weight λ and inversion signature
/// δ from the commutative-element bijection: the pair must satisfy
///
/// 1. λ_i ≠ 0 ⇒ δ_i = 1, and additionally δ_{i−1} = 1 when i ≥ 2;
/// 2. δ_i = 1 for i ∈ {2, …, n} ⇒ δ_{i−1} = 1, or i ≤ n−1 and δ_{i+1} = 1.
///
/// The word is built exactly as in the bijection proof: a prefix of blocks
/// (1 1̄ when δ_1 = 1; i ī i ī when δ_{i−1} = δ_i = 1) followed by the
/// weight suffix 1^{a_1} … n^{a_n} n̄^{b_n} … 1̄^{b_1}.
pub fn commutative_witness(n: usize, lambda: &Weight, delta: &InvSignature) -> Result<Word, HypoError> {
    if lambda.dim() != n || delta.delta.len() != n {
        return Err(HypoError::InvalidPair(format!(
            "expected dimension {n}, got weight {} and signature {}",
            lambda.dim(),
            delta.delta.len()
        )));
    }
    let d = &delta.delta;
    for i in 1..=n {
        if lambda.0[i - 1] != 0 {
            if d[i - 1] != 1 || (i >= 2 && d[i - 2] != 1) {
                return Err(HypoError::InvalidPair(format!(
                    "lambda_{i} = {} requires delta_{i} = 1{}",
                    lambda.0[i - 1],
                    if i >= 2 {
                        format!(" and delta_{} = 1", i - 1)
                    } else {
                        String::new()
                    }
                )));
            }
        }
        if i >= 2 && d[i - 1] == 1 {
            let prev = d[i - 2] == 1;
            let next = i <= n - 1 && d[i] == 1;
            if !prev && !next {
                return Err(HypoError::InvalidPair(format!(
                    "delta_{i} = 1 requires delta_{} = 1 or delta_{} = 1",
                    i - 1,
                    i + 1
                )));
            }
        }
    }
    let alpha = Alphabet::c(n).map_err(HypoError::Word)?;
    let mut letters: Vec<i64> = Vec::new();
    if d[0] == 1 {
        letters.extend([1, -1]);
    }
    for i in 2..=n {
        if d[i - 2] == 1 && d[i - 1] == 1 {
            let i = i as i64;
            letters.extend([i, -i, i, -i]);
        }
    }
    for i in 1..=n {
        let a = lambda.0[i - 1].max(0);
        letters.extend(std::iter::repeat(i as i64).take(a as usize));
    }
    for i in (1..=n).rev() {
        let b = (-lambda.0[i - 1]).max(0);
        letters.extend(std::iter::repeat(-(i as i64)).take(b as usize));
    }
    Ok(Word::new(alpha, letters)?)
}

/// The four normal-form families of the rank-2 type-C hypoplactic monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum C2Family {
    /// 1^{m}.
    Power1,
    /// 2^{m1} 1^{m2+1} 2^{m3+1} 1^{m4}.
    Family2121,
    /// 1^{m1+1} 2^{m2} 1̄^{m3+1} with m1 = 0 or m3 = 0.
    Family12bar1,
    /// 1^{m1+1} 2^{m2+1} 2̄^{m3+1} 1̄^{m4+1} with m1 = 0 or m4 = 0 and
    /// m2 = 0 or m3 = 0.
    Family12bar2bar1,
}

/// A computed rank-2 normal form: the family, its exponent parameters, and
/// the canonical representative word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C2NormalForm {
    /// Which of the four families.
    pub family: C2Family,
    /// The m_i exponents, in family order.
    pub params: Vec<i64>,
    /// The canonical representative, congruent to the input.
    pub word: Word,
}

fn c2_word(letters: Vec<i64>) -> Word {
    Word::new(Alphabet::c(2).unwrap(), letters).expect("letters drawn from {±1, ±2}")
}

fn repeats(x: i64, k: i64) -> impl Iterator<Item = i64> {
    std::iter::repeat(x).take(k.max(0) as usize)
}

/// Raise a word to a highest-weight word of its component by greedily
/// applying ë_i with labels ascending until no operator applies.
fn raise_to_highest(w: &Word) -> Word {
    let k = w.alphabet.index_count();
    let mut cur = w.clone();
    loop {
        let mut moved = false;
        for i in 1..=k {
            while let Some(up) = crate::word_monoid::word_e(&cur, i) {
                cur = up;
                moved = true;
            }
        }
        if !moved {
            return cur;
        }
    }
}

/// Decompose a {1,2}-word as 2^{p1} (alternating runs) 1^{p4} and return
/// the exponents (p1, p2, p3, p4) of its congruent canonical form
/// 2^{p1} 1^{p2} 2^{p3} 1^{p4}: p1 = leading 2-run, p4 = trailing 1-run,
/// p2 = remaining 1s, p3 = remaining 2s.
fn one_two_exponents(letters: &[i64]) -> (i64, i64, i64, i64) {
    debug_assert!(letters.iter().all(|&x| x == 1 || x == 2));
    let p1 = letters.iter().take_while(|&&x| x == 2).count() as i64;
    let p4 = letters.iter().rev().take_while(|&&x| x == 1).count() as i64;
    let ones = letters.iter().filter(|&&x| x == 1).count() as i64;
    let twos = letters.iter().filter(|&&x| x == 2).count() as i64;
    // A word that is a single 2-run followed by a single 1-run is its own
    // canonical form; the run counts would otherwise be double-counted.
    if p1 + p4 == letters.len() as i64 {
        (p1, 0, 0, p4)
    } else {
        (p1, ones - p4, twos - p1, p4)
    }
}

/// Compute the rank-2 normal form of a type-C word.
///
/// The family and parameters come from the classification proof's case
/// analysis applied to a highest-weight word w_h of the component:
/// 2̄ occurs in w_h ⇒ family (iv) with exponents from the letter-count
/// balances; otherwise 1̄ occurs with w_h = 1̄^p·u for u ∈ {1,2}* ⇒ family
/// (ii) with the leading 1̄-run folded into the 2-run; otherwise 1̄ occurs
/// ⇒ family (iii) with exponents from the weight; otherwise 2 occurs ⇒
/// family (ii); otherwise family (i). The returned representative is the
/// unique vertex r of the canonical component with w ∼̈ r.
pub fn normal_form_c2(w: &Word) -> Result<C2NormalForm, HypoError> {
    if w.alphabet != Alphabet::C(2) {
        return Err(HypoError::UnsupportedAlphabet);
    }
    let wh = raise_to_highest(w);
    let count = |x: i64| wh.letters.iter().filter(|&&c| c == x).count() as i64;
    let balance = |i: i64| -> (i64, i64) {
        let d = count(i) - count(-i);
        (d.max(0), (-d).max(0))
    };
    let (family, params, canonical): (C2Family, Vec<i64>, Vec<i64>) = if count(-2) > 0 {
        let (m1, m4) = balance(1);
        let (m2, m3) = balance(2);
        let letters = repeats(1, m1 + 1)
            .chain(repeats(2, m2 + 1))
            .chain(repeats(-2, m3 + 1))
            .chain(repeats(-1, m4 + 1))
            .collect();
        (C2Family::Family12bar2bar1, vec![m1, m2, m3, m4], letters)
    } else if count(-1) > 0 {
        let p = wh.letters.iter().take_while(|&&x| x == -1).count();
        if p > 0 && wh.letters[p..].iter().all(|&x| x == 1 || x == 2) {
            // w_h = 1̄^p u with u ∈ {1,2}*: fold the 1̄-run into the
            // leading 2-run of u's canonical form.
            let (q1, q2, q3, q4) = one_two_exponents(&wh.letters[p..]);
            let (m1, m2, m3, m4) = (p as i64 + q1, q2 - 1, q3 - 1, q4);
            let letters = repeats(2, m1)
                .chain(repeats(1, m2 + 1))
                .chain(repeats(2, m3 + 1))
                .chain(repeats(1, m4))
                .collect();
            (C2Family::Family2121, vec![m1, m2, m3, m4], letters)
        } else {
            // A 1 precedes a 1̄, or the word matches 2…1̄…1…2.
            let (m1, m3) = balance(1);
            let m2 = count(2);
            let letters = repeats(1, m1 + 1)
                .chain(repeats(2, m2))
                .chain(repeats(-1, m3 + 1))
                .collect();
            (C2Family::Family12bar1, vec![m1, m2, m3], letters)
        }
    } else if count(2) > 0 {
        let (p1, p2, p3, p4) = one_two_exponents(&wh.letters);
        let (m1, m2, m3, m4) = (p1, p2 - 1, p3 - 1, p4);
        let letters = repeats(2, m1)
            .chain(repeats(1, m2 + 1))
            .chain(repeats(2, m3 + 1))
            .chain(repeats(1, m4))
            .collect();
        (C2Family::Family2121, vec![m1, m2, m3, m4], letters)
    } else {
        let m = wh.len() as i64;
        (C2Family::Power1, vec![m], repeats(1, m).collect())
    };
    let component = explore(&c2_word(canonical))?;
    for vertex in &component.vertices {
        if congruent(w, vertex)? {
            return Ok(C2NormalForm {
                family,
                params,
                word: vertex.clone(),
            });
        }
    }
    unreachable!("the canonical component contains a vertex congruent to the input")
}

/// One counterexample substitution for an identity: variable ↦ word.
pub type Substitution = Vec<(char, Word)>;

/// Check an identity lhs = rhs between abstract words over variables by
/// exhaustively substituting all words of length ≤ max_len per variable in
/// length-lexicographic order (letters in rank order) and testing the
/// congruence. Returns the first counterexample, or None if the identity
/// holds up to the bound — "None" never means "holds unconditionally".
pub fn check_identity(
    lhs: &str,
    rhs: &str,
    alphabet: &Alphabet,
    max_len: usize,
) -> Result<Option<Substitution>, HypoError> {
    let parse_pattern = |s: &str| -> Result<Vec<char>, HypoError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.iter().any(|c| !c.is_ascii_alphabetic()) {
            return Err(HypoError::BadPattern(format!(
                "variables must be letters, got {s:?}"
            )));
        }
        Ok(chars)
    };
    let lhs_pat = parse_pattern(lhs)?;
    let rhs_pat = parse_pattern(rhs)?;
    let mut vars: Vec<char> = Vec::new();
    for &c in lhs_pat.iter().chain(&rhs_pat) {
        if !vars.contains(&c) {
            vars.push(c);
        }
    }
    if vars.is_empty() {
        return Err(HypoError::BadPattern("no variables".into()));
    }
    // All words of length ≤ max_len in length-lexicographic order.
    let letters = alphabet.letters();
    let mut words: Vec<Vec<i64>> = vec![Vec::new()];
    let mut level: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_level = Vec::new();
        for base in &level {
            for &l in &letters {
                let mut w = base.clone();
                w.push(l);
                next_level.push(w);
            }
        }
        words.extend(next_level.iter().cloned());
        level = next_level;
    }
    // Enumerate substitution tuples in lexicographic order over that list.
    let mut choice = vec![0usize; vars.len()];
    loop {
        let subst: Substitution = vars
            .iter()
            .zip(&choice)
            .map(|(&v, &c)| {
                (
                    v,
                    Word::new(alphabet.clone(), words[c].clone()).expect("letters valid"),
                )
            })
            .collect();
        let apply = |pat: &[char]| -> Word {
            let mut acc = Word::empty(alphabet.clone());
            for c in pat {
                let (_, w) = subst.iter().find(|(v, _)| v == c).expect("var bound");
                acc = acc.concat(w);
            }
            acc
        };
        let left = apply(&lhs_pat);
        let right = apply(&rhs_pat);
        if left != right && !congruent(&left, &right)? {
            return Ok(Some(subst));
        }
        // Advance the odometer.
        let mut k = vars.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < words.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// The embedding of the type-A hypoplactic monoid on the alphabet of size
/// n−1 into the type-C one of size n (n ≥ 3): ε ↦ ε and w ↦ w · n n̄ n n̄.
pub fn embed_a_to_c(w: &Word, n: usize) -> Result<Word, HypoError> {
    let Alphabet::A(src) = w.alphabet else {
        return Err(HypoError::UnsupportedAlphabet);
    };
    if n < 3 {
        return Err(HypoError::RankTooSmall(n));
    }
    if src != n - 1 {
        return Err(HypoError::UnsupportedAlphabet);
    }
    let alpha = Alphabet::c(n).map_err(HypoError::Word)?;
    if w.is_empty() {
        return Ok(Word::empty(alpha));
    }
    let mut letters = w.letters.clone();
    let n = n as i64;
    letters.extend([n, -n, n, -n]);
    Ok(Word::new(alpha, letters)?)
}

/// The embedding of the type-C hypoplactic monoid of size n−1 into the one
/// of size n (n ≥ 3): letterwise x ↦ (x+1) · 1 1̄ and x̄ ↦ (x+1)-bar · 1 1̄.
pub fn embed_c_to_c(w: &Word, n: usize) -> Result<Word, HypoError> {
    let Alphabet::C(src) = w.alphabet else {
        return Err(HypoError::UnsupportedAlphabet);
    };
    if n < 3 {
        return Err(HypoError::RankTooSmall(n));
    }
    if src != n - 1 {
        return Err(HypoError::UnsupportedAlphabet);
    }
    let alpha = Alphabet::c(n).map_err(HypoError::Word)?;
    let mut letters = Vec::with_capacity(3 * w.len());
    for &x in &w.letters {
        let shifted = if x > 0 { x + 1 } else { x - 1 };
        letters.extend([shifted, 1, -1]);
    }
    Ok(Word::new(alpha, letters)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw(n: usize, letters: &[i64]) -> Word {
        Word::new(Alphabet::a(n).unwrap(), letters.to_vec()).unwrap()
    }

    fn cw(n: usize, letters: &[i64]) -> Word {
        Word::new(Alphabet::c(n).unwrap(), letters.to_vec()).unwrap()
    }

    #[test]
    fn classical_relations() {
        assert!(classical_congruent_a(&aw(3, &[1, 3, 2]), &aw(3, &[3, 1, 2])).unwrap());
        assert!(classical_congruent_a(&aw(2, &[1, 2, 1]), &aw(2, &[1, 1, 2])).unwrap());
        assert!(!classical_congruent_a(&aw(2, &[1, 2]), &aw(2, &[2, 1])).unwrap());
        // R1 first pair: yzx ~ yxz with (x,y,z) = (1,2,3).
        assert!(classical_congruent_a(&aw(3, &[2, 3, 1]), &aw(3, &[2, 1, 3])).unwrap());
        // R2 second pair: xyy ~ yxy.
        assert!(classical_congruent_a(&aw(2, &[1, 2, 2]), &aw(2, &[2, 1, 2])).unwrap());
        // R3 with t=x=1, y=z=2: xzty = 1212, zxyt = 2121.
        assert!(classical_congruent_a(&aw(2, &[1, 2, 1, 2]), &aw(2, &[2, 1, 2, 1])).unwrap());
        // R4 with t=1, x=y=2, z=3: ytzx = 2132, tyxz = 1223.
        assert!(classical_congruent_a(&aw(3, &[2, 1, 3, 2]), &aw(3, &[1, 2, 2, 3])).unwrap());
    }

    #[test]
    fn commutative_and_idempotent() {
        let w = cw(3, &[1, 2]);
        let www = |u: &Word| {
            let b = crate::word_monoid::bar(u).unwrap();
            u.concat(&b).concat(u)
        };
        assert!(is_commutative(&www(&w)));
        assert!(is_idempotent(&cw(2, &[1, -1])));
        // Over the two-letter type-A alphabet 12 is isolated (it has a
        // 1-inversion and there is no other index), hence commutative.
        assert!(is_commutative(&aw(2, &[1, 2])));
        // Over the three-letter alphabet f̈_2 applies, so it is not.
        assert!(!is_commutative(&aw(3, &[1, 2])));
    }

    #[test]
    fn inversion_signatures() {
        assert_eq!(
            inv_signature(&cw(2, &[1, 2, -2, -1])).unwrap().delta,
            vec![1, 1]
        );
        assert_eq!(
            inv_signature(&Word::empty(Alphabet::c(2).unwrap())).unwrap().delta,
            vec![0, 0]
        );
        assert_eq!(
            inv_signature(&cw(2, &[1, -1, 1, -1])).unwrap().delta,
            vec![1, 0]
        );
    }

    #[test]
    fn witness_construction() {
        let w = commutative_witness(
            2,
            &Weight(vec![0, 0]),
            &InvSignature { delta: vec![1, 0] },
        )
        .unwrap();
        assert_eq!(w.letters, vec![1, -1]);
        assert!(commutative_witness(
            2,
            &Weight(vec![1, 0]),
            &InvSignature { delta: vec![0, 0] },
        )
        .is_err());
        let w = commutative_witness(
            2,
            &Weight(vec![0, 0]),
            &InvSignature { delta: vec![0, 0] },
        )
        .unwrap();
        assert!(w.is_empty());
        // A nontrivial pair: λ = (2, −1), δ = (1, 1).
        let lam = Weight(vec![2, -1]);
        let sig = InvSignature { delta: vec![1, 1] };
        let w = commutative_witness(2, &lam, &sig).unwrap();
        assert!(is_commutative(&w));
        assert_eq!(word_wt(&w), lam);
        assert_eq!(inv_signature(&w).unwrap(), sig);
    }

    #[test]
    fn normal_forms() {
        let nf = normal_form_c2(&cw(2, &[1, -1, 1, -1])).unwrap();
        assert_eq!(nf.family, C2Family::Family12bar1);
        assert_eq!(nf.params, vec![0, 0, 0]);
        assert_eq!(nf.word.letters, vec![1, -1]);

        let nf = normal_form_c2(&cw(2, &[2, -1, 1, 2])).unwrap();
        assert_eq!(nf.family, C2Family::Family12bar1);
        assert_eq!(nf.word.letters, vec![1, 2, 2, -1]);

        let nf = normal_form_c2(&cw(2, &[1, 1, 1])).unwrap();
        assert_eq!(nf.family, C2Family::Power1);
        assert_eq!(nf.word.letters, vec![1, 1, 1]);

        // 21 raises to 11, so it lives in the component of 1²: its class
        // representative inside that component is 21 itself.
        let nf = normal_form_c2(&cw(2, &[2, 1])).unwrap();
        assert_eq!(nf.family, C2Family::Power1);
        assert_eq!(nf.params, vec![2]);
        assert_eq!(nf.word.letters, vec![2, 1]);

        // 12 is highest-weight in {1,2}* with a 1-inversion: family (ii).
        let nf = normal_form_c2(&cw(2, &[1, 2])).unwrap();
        assert_eq!(nf.family, C2Family::Family2121);
        assert_eq!(nf.params, vec![0, 0, 0, 0]);
        assert_eq!(nf.word.letters, vec![1, 2]);
    }

    #[test]
    fn identity_checks() {
        let c2 = Alphabet::c(2).unwrap();
        assert_eq!(
            check_identity("xyxyxy", "xyyxxy", &c2, 1).unwrap(),
            None
        );
        let cx = check_identity("xy", "yx", &c2, 1).unwrap().unwrap();
        assert_eq!(cx[0].1.letters, vec![1]);
        assert_eq!(cx[1].1.letters, vec![2]);
        let c3 = Alphabet::c(3).unwrap();
        let cx = check_identity("xyxyxy", "xyyxxy", &c3, 1).unwrap().unwrap();
        assert_eq!(cx[0].1.letters, vec![1]);
        assert_eq!(cx[1].1.letters, vec![2]);
    }

    #[test]
    fn embeddings() {
        assert!(embed_a_to_c(&Word::empty(Alphabet::a(2).unwrap()), 3)
            .unwrap()
            .is_empty());
        assert_eq!(
            embed_a_to_c(&aw(2, &[1, 2]), 3).unwrap().letters,
            vec![1, 2, 3, -3, 3, -3]
        );
        assert_eq!(embed_c_to_c(&cw(2, &[1]), 3).unwrap().letters, vec![2, 1, -1]);
        assert_eq!(
            embed_c_to_c(&cw(2, &[-1]), 3).unwrap().letters,
            vec![-2, 1, -1]
        );
        assert!(embed_a_to_c(&aw(2, &[1]), 2).is_err());
    }

    #[test]
    fn embedding_is_multiplicative_up_to_congruence() {
        let u = aw(2, &[1]);
        let v = aw(2, &[2]);
        let uv = u.concat(&v);
        let lhs = embed_a_to_c(&uv, 3).unwrap();
        let rhs = embed_a_to_c(&u, 3)
            .unwrap()
            .concat(&embed_a_to_c(&v, 3).unwrap());
        assert!(congruent(&lhs, &rhs).unwrap());
    }

    #[test]
    fn non_finite_presentation_witnesses() {
        let w = |l: &[i64]| cw(2, l);
        assert!(congruent(&w(&[1, 2, 1, 1, 1, 1, 2]), &w(&[1, 1, 1, 1, 1, 2, 2])).unwrap());
        let u = cw(3, &[1, 1, 1, 1, 1, 1, 2, 2, 2, -2, -2, -2, -1, -1, -1]);
        let v = cw(3, &[1, 1, 1, 2, 2, 2, 1, 1, 1, -2, -2, -2, -1, -1, -1]);
        assert!(congruent(&u, &v).unwrap());
    }

    #[test]
    fn normal_form_is_congruence_invariant_and_idempotent() {
        let samples: Vec<Vec<i64>> = vec![
            vec![],
            vec![1],
            vec![2, 1],
            vec![1, 2, 1],
            vec![2, -1, 1, 2],
            vec![1, -1, 2],
            vec![1, 2, -2, -1],
            vec![-2, -1],
            vec![2, 2, -2],
        ];
        for letters in samples {
            let w = cw(2, &letters);
            let nf = normal_form_c2(&w).unwrap();
            assert!(congruent(&w, &nf.word).unwrap(), "w = {w}");
            let again = normal_form_c2(&nf.word).unwrap();
            assert_eq!(nf.family, again.family, "w = {w}");
            assert_eq!(nf.params, again.params, "w = {w}");
            assert_eq!(nf.word, again.word, "w = {w}");
            let comp = explore(&nf.word).unwrap();
            let hits = comp
                .vertices
                .iter()
                .filter(|v| congruent(&w, v).unwrap())
                .count();
            assert_eq!(hits, 1, "w = {w}");
        }
    }
}
