//! Context-free languages: grammar parsing, normal form, CYK membership,
//! per-length enumeration and parse-tree pumping decomposition.

mod grammar;
mod normal;

pub use grammar::{Grammar, GrammarError, Production, Symbol};
pub use normal::{to_normal_form, NormalFormGrammar};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::limit::LimitExceeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfgDecomposeError {
    #[error("'{0}' is not in the language")]
    NotMember(String),
    #[error("the parse tree of '{0}' repeats no nonterminal on its longest path")]
    TooShort(String),
}

/// `w = u v x y z` with `u v^i x y^i z` in the language for every `i`.
/// Either of `v`, `y` may be empty, never both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfgDecomposition {
    pub u: String,
    pub v: String,
    pub x: String,
    pub y: String,
    pub z: String,
}

impl CfgDecomposition {
    pub fn pump(&self, i: usize) -> String {
        format!(
            "{}{}{}{}{}",
            self.u,
            self.v.repeat(i),
            self.x,
            self.y.repeat(i),
            self.z
        )
    }
}

/// Flattened CYK table: one bit row of nonterminals per (span length, start).
struct Chart {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Chart {
    fn new(n: usize, nonterminals: usize) -> Self {
        let words = nonterminals.div_ceil(64).max(1);
        Chart {
            n,
            words,
            bits: vec![0; (n + 1) * n.max(1) * words],
        }
    }

    fn offset(&self, len: usize, start: usize) -> usize {
        (len * self.n + start) * self.words
    }

    fn row(&self, len: usize, start: usize) -> &[u64] {
        let o = self.offset(len, start);
        &self.bits[o..o + self.words]
    }

    fn has(&self, len: usize, start: usize, nt: usize) -> bool {
        self.row(len, start)[nt / 64] & (1 << (nt % 64)) != 0
    }

    fn set(&mut self, len: usize, start: usize, nt: usize) {
        let o = self.offset(len, start);
        self.bits[o + nt / 64] |= 1 << (nt % 64);
    }
}

struct Node {
    nt: usize,
    start: usize,
    len: usize,
    children: Option<Box<(Node, Node)>>,
}

impl Node {
    fn height(&self) -> usize {
        match &self.children {
            None => 0,
            Some(kids) => 1 + kids.0.height().max(kids.1.height()),
        }
    }
}

/// A context-free language: the source grammar and its normal form.
#[derive(Debug, Clone)]
pub struct ContextFreeLang {
    grammar: Grammar,
    nf: NormalFormGrammar,
}

impl ContextFreeLang {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, GrammarError> {
        Ok(Self::new(Grammar::parse(text, alphabet)?))
    }

    pub fn new(grammar: Grammar) -> Self {
        let nf = to_normal_form(&grammar);
        ContextFreeLang { grammar, nf }
    }

    pub fn grammar(&self) -> &Grammar {
        &self.grammar
    }

    pub fn normal_form(&self) -> &NormalFormGrammar {
        &self.nf
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.nf.alphabet
    }

    fn chart(&self, word: &[u8]) -> Chart {
        let n = word.len();
        let k = self.nf.nonterminal_count();
        let mut chart = Chart::new(n, k);
        for (i, &a) in word.iter().enumerate() {
            for &(lhs, t) in &self.nf.terminal {
                if t == a {
                    chart.set(1, i, lhs);
                }
            }
        }
        for len in 2..=n {
            for i in 0..=n - len {
                for split in 1..len {
                    if chart.row(split, i).iter().all(|&w| w == 0)
                        || chart.row(len - split, i + split).iter().all(|&w| w == 0)
                    {
                        continue;
                    }
                    for &(a, b, c) in &self.nf.binary {
                        if chart.has(split, i, b) && chart.has(len - split, i + split, c) {
                            chart.set(len, i, a);
                        }
                    }
                }
            }
        }
        chart
    }

    fn accepts(&self, word: &[u8]) -> bool {
        if word.is_empty() {
            return self.nf.start_eps;
        }
        self.chart(word).has(word.len(), 0, self.nf.start)
    }

    /// CYK membership; foreign symbols make a word a non-member.
    pub fn member(&self, w: &str) -> bool {
        self.alphabet()
            .try_encode(w)
            .is_some_and(|word| self.accepts(&word))
    }

    /// Leftmost derivation tree: at every node the first binary production
    /// (in sorted order) and then the shortest left span that succeed.
    fn tree(&self, chart: &Chart, nt: usize, start: usize, len: usize) -> Node {
        if len == 1 {
            return Node {
                nt,
                start,
                len,
                children: None,
            };
        }
        for &(a, b, c) in &self.nf.binary {
            if a != nt {
                continue;
            }
            for split in 1..len {
                if chart.has(split, start, b) && chart.has(len - split, start + split, c) {
                    let left = self.tree(chart, b, start, split);
                    let right = self.tree(chart, c, start + split, len - split);
                    return Node {
                        nt,
                        start,
                        len,
                        children: Some(Box::new((left, right))),
                    };
                }
            }
        }
        unreachable!("chart entry without a derivation")
    }

    /// 2^(k+1) for a normal form with k nonterminals.
    pub fn pumping_length(&self) -> usize {
        let k = self.nf.nonterminal_count() as u32 + 1;
        2usize.checked_pow(k).unwrap_or(usize::MAX)
    }

    /// Walks the longest root-to-leaf path of the leftmost parse tree and
    /// takes the lowest pair of equal nonterminals on it: the upper one
    /// spans `v x y`, the lower one spans `x`.
    pub fn decompose(&self, w: &str) -> Result<CfgDecomposition, CfgDecomposeError> {
        let word = match self.alphabet().try_encode(w) {
            Some(word) if !word.is_empty() => word,
            _ => {
                return Err(if self.member(w) {
                    CfgDecomposeError::TooShort(w.to_string())
                } else {
                    CfgDecomposeError::NotMember(w.to_string())
                })
            }
        };
        let chart = self.chart(&word);
        if !chart.has(word.len(), 0, self.nf.start) {
            return Err(CfgDecomposeError::NotMember(w.to_string()));
        }
        let root = self.tree(&chart, self.nf.start, 0, word.len());

        let mut path: Vec<&Node> = vec![&root];
        while let Some(kids) = &path.last().unwrap().children {
            let (l, r) = (&kids.0, &kids.1);
            path.push(if r.height() > l.height() { r } else { l });
        }
        for upper in (0..path.len()).rev() {
            let Some(lower) = (upper + 1..path.len()).find(|&t| path[t].nt == path[upper].nt)
            else {
                continue;
            };
            let (up, lo) = (path[upper], path[lower]);
            let a = self.alphabet();
            return Ok(CfgDecomposition {
                u: a.decode(&word[..up.start]),
                v: a.decode(&word[up.start..lo.start]),
                x: a.decode(&word[lo.start..lo.start + lo.len]),
                y: a.decode(&word[lo.start + lo.len..up.start + up.len]),
                z: a.decode(&word[up.start + up.len..]),
            });
        }
        Err(CfgDecomposeError::TooShort(w.to_string()))
    }

    /// All members of length `n`, lexicographic by alphabet order. Built by
    /// dynamic programming over (nonterminal, length); every intermediate
    /// set is bounded by `cap`.
    pub fn enumerate_length(&self, n: usize, cap: usize) -> Result<Vec<String>, LimitExceeded> {
        if n == 0 {
            return Ok(if self.nf.start_eps {
                vec![String::new()]
            } else {
                vec![]
            });
        }
        let k = self.nf.nonterminal_count();
        let mut sets: Vec<Vec<BTreeSet<Vec<u8>>>> = vec![vec![BTreeSet::new(); k]; n + 1];
        for &(a, t) in &self.nf.terminal {
            sets[1][a].insert(vec![t]);
        }
        for len in 2..=n {
            for &(a, b, c) in &self.nf.binary {
                for split in 1..len {
                    let (left, right) = (&sets[split][b], &sets[len - split][c]);
                    if left.is_empty() || right.is_empty() {
                        continue;
                    }
                    let mut made = Vec::new();
                    for x in left {
                        for y in right {
                            let mut w = Vec::with_capacity(len);
                            w.extend_from_slice(x);
                            w.extend_from_slice(y);
                            made.push(w);
                        }
                    }
                    let target = &mut sets[len][a];
                    target.extend(made);
                    if target.len() > cap {
                        return Err(LimitExceeded::new(
                            format!("derivable words of length {len} for one nonterminal"),
                            cap,
                        ));
                    }
                }
            }
        }
        let a = self.alphabet();
        Ok(sets[n][self.nf.start].iter().map(|w| a.decode(w)).collect())
    }

    /// The lexicographically smallest member of length `n`.
    pub fn first_of_length(&self, n: usize) -> Option<String> {
        if n == 0 {
            return self.nf.start_eps.then(String::new);
        }
        let k = self.nf.nonterminal_count();
        let mut best: Vec<Vec<Option<Vec<u8>>>> = vec![vec![None; k]; n + 1];
        for &(a, t) in &self.nf.terminal {
            let slot = &mut best[1][a];
            if slot.as_ref().is_none_or(|cur| vec![t] < *cur) {
                *slot = Some(vec![t]);
            }
        }
        for len in 2..=n {
            for &(a, b, c) in &self.nf.binary {
                for split in 1..len {
                    let (Some(x), Some(y)) = (&best[split][b], &best[len - split][c]) else {
                        continue;
                    };
                    let mut w = x.clone();
                    w.extend_from_slice(y);
                    let slot = &mut best[len][a];
                    if slot.as_ref().is_none_or(|cur| w < *cur) {
                        *slot = Some(w);
                    }
                }
            }
        }
        best[n][self.nf.start]
            .as_ref()
            .map(|w| self.alphabet().decode(w))
    }

    pub fn nonempty_lengths(&self, max: usize) -> Vec<bool> {
        let k = self.nf.nonterminal_count();
        let mut gen = vec![vec![false; k]; max + 1];
        for &(a, _) in &self.nf.terminal {
            if max >= 1 {
                gen[1][a] = true;
            }
        }
        for len in 2..=max {
            for &(a, b, c) in &self.nf.binary {
                if !gen[len][a] && (1..len).any(|s| gen[s][b] && gen[len - s][c]) {
                    gen[len][a] = true;
                }
            }
        }
        let mut out: Vec<bool> = gen.iter().map(|row| row[self.nf.start]).collect();
        out[0] = self.nf.start_eps;
        out
    }

    /// Infinite iff the (pruned) normal form's dependency graph has a cycle.
    pub fn is_infinite(&self) -> bool {
        let k = self.nf.nonterminal_count();
        // 0 = unvisited, 1 = on stack, 2 = done
        fn visit(a: usize, nf: &NormalFormGrammar, mark: &mut [u8]) -> bool {
            mark[a] = 1;
            for &(lhs, b, c) in &nf.binary {
                if lhs != a {
                    continue;
                }
                for next in [b, c] {
                    if mark[next] == 1 || (mark[next] == 0 && visit(next, nf, mark)) {
                        return true;
                    }
                }
            }
            mark[a] = 2;
            false
        }
        let mut mark = vec![0u8; k];
        (0..k).any(|a| mark[a] == 0 && visit(a, &self.nf, &mut mark))
    }
}
