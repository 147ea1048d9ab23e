//! Connected-component exploration of quasi-crystal graphs of free
//! quasi-crystal monoids, the rooted congruence decision, and graph export.
//!
//! The quasi-crystal graph has an i-labelled edge u → v whenever
//! f̈_i(u) = v and an i-labelled loop at x whenever ε̈_i(x) = +∞. Two words
//! are congruent iff there is an isomorphism of their connected components
//! (as weighted labelled digraphs) sending one root to the other; since
//! every label acts as a partial injection, the rooted question is decided
//! exactly by a paired breadth-first search.

use crate::qc_core::ExtInt;
use crate::word_monoid::{word_e, word_eps, word_f, word_phi, word_wt, Alphabet, Word};
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

/// Default vertex budget when `QCK_BUDGET` is unset.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Errors raised by graph exploration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// The vertex cap was hit; never a silent truncation.
    #[error("component exploration exceeded the vertex budget of {0}")]
    BudgetExceeded(usize),
    /// The two words live over different alphabets.
    #[error("words have mismatched alphabets")]
    MismatchedAlphabet,
}

/// The vertex budget: `QCK_BUDGET` if set and parseable, else the default.
pub fn default_budget() -> usize {
    std::env::var("QCK_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&b| b >= 1)
        .unwrap_or(DEFAULT_BUDGET)
}

/// The connected component of a word: vertices in deterministic BFS order
/// (root first, labels ascending, ë before f̈), all f̈-edges among them,
/// and all ε̈ = +∞ loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// The word the exploration started from (vertex 0).
    pub root_word: Word,
    /// Vertices in BFS order.
    pub vertices: Vec<Word>,
    /// Vertex weights, parallel to `vertices`.
    pub weights: Vec<crate::rootsys::Weight>,
    /// Non-loop edges (from, to, label).
    pub edges: Vec<(usize, usize, usize)>,
    /// Loops (vertex, label).
    pub loops: Vec<(usize, usize)>,
}

/// Explore the connected component of `w` under all defined ë_i/f̈_i, up to
/// `budget` vertices.
pub fn explore_with_budget(w: &Word, budget: usize) -> Result<Component, GraphError> {
    let k = w.alphabet.index_count();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut vertices: Vec<Word> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    index.insert(w.letters.clone(), 0);
    vertices.push(w.clone());
    queue.push_back(0);
    while let Some(v) = queue.pop_front() {
        for i in 1..=k {
            let cur = vertices[v].clone();
            for next in [word_e(&cur, i), word_f(&cur, i)].into_iter().flatten() {
                if !index.contains_key(&next.letters) {
                    if vertices.len() >= budget {
                        return Err(GraphError::BudgetExceeded(budget));
                    }
                    index.insert(next.letters.clone(), vertices.len());
                    vertices.push(next);
                    queue.push_back(vertices.len() - 1);
                }
            }
        }
    }
    let weights = vertices.iter().map(word_wt).collect();
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for (v, word) in vertices.iter().enumerate() {
        for i in 1..=k {
            if let Some(next) = word_f(word, i) {
                edges.push((v, index[&next.letters], i));
            }
            if word_eps(word, i) == ExtInt::PosInf {
                loops.push((v, i));
            }
        }
    }
    Ok(Component {
        root_word: w.clone(),
        vertices,
        weights,
        edges,
        loops,
    })
}

/// Explore with the default budget.
pub fn explore(w: &Word) -> Result<Component, GraphError> {
    explore_with_budget(w, default_budget())
}

/// Decide the hypoplactic congruence u ∼̈ v by paired BFS: reject if the
/// root weights differ; at each visited pair require equal ε̈_i/φ̈_i as
/// extended integers for every i (this synchronizes operator definedness
/// and loops); propagate through ë_i/f̈_i, maintaining forward and backward
/// vertex maps and rejecting on any conflict.
pub fn congruent_with_budget(u: &Word, v: &Word, budget: usize) -> Result<bool, GraphError> {
    if u.alphabet != v.alphabet {
        return Err(GraphError::MismatchedAlphabet);
    }
    if word_wt(u) != word_wt(v) {
        return Ok(false);
    }
    let k = u.alphabet.index_count();
    let mut forward: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut backward: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue: VecDeque<(Word, Word)> = VecDeque::new();
    forward.insert(u.letters.clone(), v.letters.clone());
    backward.insert(v.letters.clone(), u.letters.clone());
    queue.push_back((u.clone(), v.clone()));
    let mut visited = 1usize;
    while let Some((a, b)) = queue.pop_front() {
        for i in 1..=k {
            if word_eps(&a, i) != word_eps(&b, i) || word_phi(&a, i) != word_phi(&b, i) {
                return Ok(false);
            }
            for (na, nb) in [
                (word_e(&a, i), word_e(&b, i)),
                (word_f(&a, i), word_f(&b, i)),
            ] {
                match (na, nb) {
                    (None, None) => {}
                    (Some(na), Some(nb)) => {
                        let seen_fwd = forward.get(&na.letters);
                        let seen_bwd = backward.get(&nb.letters);
                        match (seen_fwd, seen_bwd) {
                            (Some(mapped), Some(mapped_back)) => {
                                if mapped != &nb.letters || mapped_back != &na.letters {
                                    return Ok(false);
                                }
                            }
                            (None, None) => {
                                visited += 1;
                                if visited > budget {
                                    return Err(GraphError::BudgetExceeded(budget));
                                }
                                forward.insert(na.letters.clone(), nb.letters.clone());
                                backward.insert(nb.letters.clone(), na.letters.clone());
                                queue.push_back((na, nb));
                            }
                            _ => return Ok(false),
                        }
                    }
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// Decide congruence with the default budget.
pub fn congruent(u: &Word, v: &Word) -> Result<bool, GraphError> {
    congruent_with_budget(u, v, default_budget())
}

/// Highest-weight words of a component: vertices with no incoming non-loop
/// edge.
pub fn hw_words(c: &Component) -> Vec<Word> {
    let mut has_in = vec![false; c.vertices.len()];
    for &(_, to, _) in &c.edges {
        has_in[to] = true;
    }
    c.vertices
        .iter()
        .zip(&has_in)
        .filter(|(_, &b)| !b)
        .map(|(w, _)| w.clone())
        .collect()
}

/// Lowest-weight words of a component: vertices with no outgoing non-loop
/// edge.
pub fn lw_words(c: &Component) -> Vec<Word> {
    let mut has_out = vec![false; c.vertices.len()];
    for &(from, _, _) in &c.edges {
        has_out[from] = true;
    }
    c.vertices
        .iter()
        .zip(&has_out)
        .filter(|(_, &b)| !b)
        .map(|(w, _)| w.clone())
        .collect()
}

/// Render a component as a DOT digraph with stable vertex ids v0..vk,
/// vertex labels "word\nweight", edge labels i, and loops as self-edges.
pub fn export_dot(c: &Component) -> String {
    let mut out = String::from("digraph component {\n");
    for (v, word) in c.vertices.iter().enumerate() {
        let label = if word.is_empty() {
            "ε".to_string()
        } else {
            word.to_string()
        };
        writeln!(out, "  v{v} [label=\"{label}\\n{}\"];", c.weights[v]).unwrap();
    }
    for &(from, to, i) in &c.edges {
        writeln!(out, "  v{from} -> v{to} [label=\"{i}\"];").unwrap();
    }
    for &(v, i) in &c.loops {
        writeln!(out, "  v{v} -> v{v} [label=\"{i}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Render a component as JSON:
/// `{alphabet, root, vertices:[{id, word, weight, eps, phi}], edges, loops}`.
/// Byte-stable across runs (deterministic ordering throughout).
pub fn export_json(c: &Component) -> String {
    let k = c.root_word.alphabet.index_count();
    let alphabet = match &c.root_word.alphabet {
        Alphabet::A(n) => serde_json::json!({"kind": "A", "n": n}),
        Alphabet::C(n) => serde_json::json!({"kind": "C", "n": n}),
        Alphabet::Table(t) => serde_json::json!({"kind": "explicit", "n": t.len()}),
    };
    let vertices: Vec<serde_json::Value> = c
        .vertices
        .iter()
        .enumerate()
        .map(|(v, word)| {
            let eps: Vec<ExtInt> = (1..=k).map(|i| word_eps(word, i)).collect();
            let phi: Vec<ExtInt> = (1..=k).map(|i| word_phi(word, i)).collect();
            serde_json::json!({
                "id": v,
                "word": word.letters,
                "weight": c.weights[v].0,
                "eps": eps,
                "phi": phi,
            })
        })
        .collect();
    let edges: Vec<serde_json::Value> = c
        .edges
        .iter()
        .map(|&(from, to, label)| serde_json::json!({"from": from, "to": to, "label": label}))
        .collect();
    let loops: Vec<serde_json::Value> = c
        .loops
        .iter()
        .map(|&(v, label)| serde_json::json!({"vertex": v, "label": label}))
        .collect();
    serde_json::json!({
        "alphabet": alphabet,
        "root": c.root_word.letters,
        "vertices": vertices,
        "edges": edges,
        "loops": loops,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cw(n: usize, letters: &[i64]) -> Word {
        Word::new(Alphabet::c(n).unwrap(), letters.to_vec()).unwrap()
    }

    #[test]
    fn component_of_121_matches_figure() {
        let c = explore(&cw(2, &[1, 2, 1])).unwrap();
        let words: HashSet<Vec<i64>> = c.vertices.iter().map(|w| w.letters.clone()).collect();
        let expect: HashSet<Vec<i64>> = [
            vec![1, 2, 1],
            vec![1, -2, 1],
            vec![2, -2, 1],
            vec![2, -1, 1],
            vec![-2, -1, 1],
            vec![2, -1, 2],
            vec![-2, -1, 2],
            vec![-2, -1, -2],
        ]
        .into_iter()
        .collect();
        assert_eq!(words, expect);
        assert_eq!(c.edges.len(), 7);
        assert_eq!(c.loops.len(), 5);
        let loop_words: HashSet<(Vec<i64>, usize)> = c
            .loops
            .iter()
            .map(|&(v, i)| (c.vertices[v].letters.clone(), i))
            .collect();
        assert!(loop_words.contains(&(vec![1, 2, 1], 1)));
        assert!(loop_words.contains(&(vec![2, -2, 1], 2)));
    }

    #[test]
    fn trivial_components() {
        let empty = Word::empty(Alphabet::c(2).unwrap());
        let c = explore(&empty).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert!(c.loops.is_empty() && c.edges.is_empty());
        let c = explore(&cw(2, &[1, -1])).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert_eq!(c.loops, vec![(0, 1)]);
    }

    #[test]
    fn budget_is_enforced() {
        let err = explore_with_budget(&cw(2, &[1, 2, 1]), 3).unwrap_err();
        assert_eq!(err, GraphError::BudgetExceeded(3));
    }

    #[test]
    fn congruence_examples() {
        let alpha = Alphabet::c(2).unwrap();
        let w = |l: &[i64]| Word::new(alpha.clone(), l.to_vec()).unwrap();
        assert!(congruent(&w(&[1, 2, 1, 1, 2]), &w(&[1, 1, 1, 2, 2])).unwrap());
        assert!(congruent(&w(&[1, -1, 1, -1]), &w(&[1, -1])).unwrap());
        assert!(!congruent(&w(&[1, -1]), &w(&[])).unwrap());
        assert!(!congruent(&w(&[1, 2]), &w(&[2, 1])).unwrap());
    }

    #[test]
    fn highest_and_lowest_words() {
        let c = explore(&cw(2, &[2, 1, 2])).unwrap();
        let hw: HashSet<Vec<i64>> = hw_words(&c).iter().map(|w| w.letters.clone()).collect();
        let expect: HashSet<Vec<i64>> = [vec![2, 1, 2], vec![-1, 1, 2]].into_iter().collect();
        assert_eq!(hw, expect);
        let c = explore(&cw(2, &[1, 2, 1])).unwrap();
        let hw: Vec<Vec<i64>> = hw_words(&c).iter().map(|w| w.letters.clone()).collect();
        assert_eq!(hw, vec![vec![1, 2, 1]]);
        let lw = lw_words(&c);
        assert!(!lw.is_empty());
    }

    #[test]
    fn component_of_212_matches_figure() {
        let c = explore(&cw(2, &[2, 1, 2])).unwrap();
        let words: HashSet<Vec<i64>> = c.vertices.iter().map(|w| w.letters.clone()).collect();
        let expect: HashSet<Vec<i64>> = [
            vec![2, 1, 2],
            vec![-2, 1, 2],
            vec![-2, 1, -2],
            vec![-1, 1, 2],
            vec![-1, 1, -2],
            vec![-1, 2, -2],
            vec![-1, 2, -1],
            vec![-1, -2, -1],
        ]
        .into_iter()
        .collect();
        assert_eq!(words, expect);
        assert_eq!(c.edges.len(), 7);
        assert_eq!(c.loops.len(), 5);
    }

    #[test]
    fn export_is_stable_and_complete() {
        let c = explore(&cw(2, &[1, 2, 1])).unwrap();
        let dot = export_dot(&c);
        assert_eq!(dot.matches("->").count(), 12); // 7 edges + 5 loops
        assert_eq!(export_dot(&c), dot);
        let json = export_json(&c);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(v["edges"].as_array().unwrap().len(), 7);
        assert_eq!(v["loops"].as_array().unwrap().len(), 5);
        assert_eq!(export_json(&c), json);
    }
}
