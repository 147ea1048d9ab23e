//! Helpers shared by the integration test suites.
#![allow(dead_code)] // not every suite uses every helper

use quasicrystals::qgraph::explore;
use quasicrystals::{Alphabet, Word};
use std::collections::HashSet;

/// All words over `a` of length 0..=max_len, in length-lexicographic order
/// (letters in rank order).
pub fn words_up_to(a: &Alphabet, max_len: usize) -> Vec<Word> {
    let letters = a.letters();
    let mut out = vec![Word::empty(a.clone())];
    let mut level: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for &x in &letters {
                let mut v = w.clone();
                v.push(x);
                out.push(Word::new(a.clone(), v.clone()).unwrap());
                next.push(v);
            }
        }
        level = next;
    }
    out
}

/// Build a word over `a` from a letter slice.
pub fn w(a: &Alphabet, letters: &[i64]) -> Word {
    Word::new(a.clone(), letters.to_vec()).unwrap()
}

/// Brute-force decision of u ∼̈ v: enumerate all weight-preserving vertex
/// bijections between the two components that send u to v, and accept if
/// one preserves every labelled edge and loop. Independent of the paired
/// breadth-first search used by `qgraph::congruent`.
pub fn iso_oracle(u: &Word, v: &Word) -> bool {
    let cu = explore(u).unwrap();
    let cv = explore(v).unwrap();
    let n = cu.vertices.len();
    if n != cv.vertices.len() || cu.edges.len() != cv.edges.len() || cu.loops.len() != cv.loops.len()
    {
        return false;
    }
    // Candidate images: equal weight. The root (vertex 0 on both sides) is
    // pinned, since the isomorphism must send u to v.
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            if i == 0 {
                vec![0]
            } else {
                (1..n).filter(|&j| cv.weights[j] == cu.weights[i]).collect()
            }
        })
        .collect();
    let edge_set: HashSet<(usize, usize, usize)> = cv.edges.iter().copied().collect();
    let loop_set: HashSet<(usize, usize)> = cv.loops.iter().copied().collect();
    let mut assign: Vec<usize> = vec![usize::MAX; n];
    let mut used: Vec<bool> = vec![false; n];
    fn backtrack(
        k: usize,
        n: usize,
        candidates: &[Vec<usize>],
        cu: &quasicrystals::qgraph::Component,
        edge_set: &HashSet<(usize, usize, usize)>,
        loop_set: &HashSet<(usize, usize)>,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == n {
            return cu
                .edges
                .iter()
                .all(|&(a, b, l)| edge_set.contains(&(assign[a], assign[b], l)))
                && cu.loops.iter().all(|&(a, l)| loop_set.contains(&(assign[a], l)));
        }
        for &j in &candidates[k] {
            if used[j] {
                continue;
            }
            assign[k] = j;
            used[j] = true;
            if backtrack(k + 1, n, candidates, cu, edge_set, loop_set, assign, used) {
                return true;
            }
            used[j] = false;
        }
        assign[k] = usize::MAX;
        false
    }
    backtrack(0, n, &candidates, &cu, &edge_set, &loop_set, &mut assign, &mut used)
}
