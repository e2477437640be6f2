//! Reference implementations used as test oracles. Each one follows the
//! textbook definition directly and shares no algorithm with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use foldsys::cfg::{Grammar, Symbol};
use foldsys::regular::RegexAst;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, symbols: &[char], len: usize) -> String {
    (0..len)
        .map(|_| symbols[rng.gen_range(0..symbols.len())])
        .collect()
}

/// Every word of length `n`, in the order induced by `symbols`.
pub fn all_words(symbols: &[char], n: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| symbols.iter().map(move |c| format!("{w}{c}")))
            .collect();
    }
    words
}

/// Folding by the recursive definition: the last symbol goes in front of
/// the fold of the prefix for `u`, behind it for `d`.
pub fn fold_rec(w: &str, v: &str) -> Option<String> {
    let w: Vec<char> = w.chars().collect();
    let v: Vec<char> = v.chars().collect();
    if w.len() != v.len() {
        return None;
    }
    fn go(w: &[char], v: &[char]) -> String {
        match (w.split_last(), v.split_last()) {
            (None, _) => String::new(),
            (Some((a, wr)), Some((b, vr))) => {
                let inner = go(wr, vr);
                if *b == 'u' {
                    format!("{a}{inner}")
                } else {
                    format!("{inner}{a}")
                }
            }
            _ => unreachable!(),
        }
    }
    Some(go(&w, &v))
}

/// End positions reachable by matching `ast` from `start`.
fn regex_ends(ast: &RegexAst, s: &[char], start: usize) -> BTreeSet<usize> {
    match ast {
        RegexAst::Empty => BTreeSet::new(),
        RegexAst::Epsilon => BTreeSet::from([start]),
        RegexAst::Literal(c) => {
            if s.get(start) == Some(c) {
                BTreeSet::from([start + 1])
            } else {
                BTreeSet::new()
            }
        }
        RegexAst::Concat(items) => {
            let mut cur = BTreeSet::from([start]);
            for item in items {
                cur = cur.iter().flat_map(|&p| regex_ends(item, s, p)).collect();
            }
            cur
        }
        RegexAst::Union(items) => items.iter().flat_map(|i| regex_ends(i, s, start)).collect(),
        RegexAst::Star(inner) => {
            let mut seen = BTreeSet::from([start]);
            let mut frontier = vec![start];
            while let Some(p) = frontier.pop() {
                for q in regex_ends(inner, s, p) {
                    if seen.insert(q) {
                        frontier.push(q);
                    }
                }
            }
            seen
        }
        RegexAst::Plus(inner) => {
            let star = RegexAst::Star(inner.clone());
            regex_ends(inner, s, start)
                .into_iter()
                .flat_map(|p| regex_ends(&star, s, p))
                .collect()
        }
        RegexAst::Optional(inner) => {
            let mut out = regex_ends(inner, s, start);
            out.insert(start);
            out
        }
    }
}

pub fn regex_matches(ast: &RegexAst, w: &str) -> bool {
    let s: Vec<char> = w.chars().collect();
    regex_ends(ast, &s, 0).contains(&s.len())
}

/// Membership in the original grammar, empty and unit rules included:
/// `derives[A][i][j]` is grown to a fixed point.
pub fn grammar_derives(g: &Grammar, w: &str) -> bool {
    let s: Vec<char> = w.chars().collect();
    let n = s.len();
    let k = g.nonterminals.len();
    let mut d = vec![vec![vec![false; n + 1]; n + 1]; k];
    loop {
        let mut changed = false;
        for p in &g.productions {
            for i in 0..=n {
                // positions reachable after matching a prefix of the rhs
                let mut reach = vec![false; n + 1];
                reach[i] = true;
                for sym in &p.rhs {
                    let mut next = vec![false; n + 1];
                    for a in i..=n {
                        if !reach[a] {
                            continue;
                        }
                        match sym {
                            Symbol::Terminal(c) => {
                                if a < n && s[a] == *c {
                                    next[a + 1] = true;
                                }
                            }
                            Symbol::Nonterminal(b) => {
                                for e in a..=n {
                                    if d[*b][a][e] {
                                        next[e] = true;
                                    }
                                }
                            }
                        }
                    }
                    reach = next;
                }
                for j in i..=n {
                    if reach[j] && !d[p.lhs][i][j] {
                        d[p.lhs][i][j] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return d[g.start][0][n];
        }
    }
}

/// The folded language by brute force: every pair of equal-length words
/// accepted by the two predicates, folded by the recursive definition.
pub fn brute_fold_language(
    sigma: &[char],
    core: impl Fn(&str) -> bool,
    procedure: impl Fn(&str) -> bool,
    max_len: usize,
) -> Vec<String> {
    let mut out = Vec::new();
    for n in 0..=max_len {
        let cores: Vec<String> = all_words(sigma, n)
            .into_iter()
            .filter(|w| core(w))
            .collect();
        let procs: Vec<String> = all_words(&['u', 'd'], n)
            .into_iter()
            .filter(|w| procedure(w))
            .collect();
        let mut level = BTreeSet::new();
        for r in &cores {
            for s in &procs {
                level.insert(fold_rec(r, s).unwrap());
            }
        }
        let rank = |w: &String| -> Vec<usize> {
            w.chars()
                .map(|c| sigma.iter().position(|&x| x == c).unwrap())
                .collect()
        };
        let mut level: Vec<String> = level.into_iter().collect();
        level.sort_by_key(rank);
        out.extend(level);
    }
    out
}
