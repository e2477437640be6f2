//! Regex to complete minimal DFA: Thompson construction, subset
//! construction, Moore partition refinement.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::alphabet::Alphabet;
use crate::limit::LimitExceeded;

use super::regex::RegexAst;

#[derive(Default)]
struct Nfa {
    eps: Vec<Vec<usize>>,
    edges: Vec<Vec<(u8, usize)>>,
}

impl Nfa {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.edges.push(Vec::new());
        self.eps.len() - 1
    }

    /// Builds a fragment for `ast`, returning (entry, exit).
    fn build(&mut self, ast: &RegexAst, alphabet: &Alphabet) -> (usize, usize) {
        match ast {
            RegexAst::Empty => (self.state(), self.state()),
            RegexAst::Epsilon => {
                let s = self.state();
                (s, s)
            }
            RegexAst::Literal(c) => {
                let (s, t) = (self.state(), self.state());
                let sym = alphabet.index_of(*c).expect("literal validated by parser");
                self.edges[s].push((sym, t));
                (s, t)
            }
            RegexAst::Concat(items) => {
                let s = self.state();
                let mut cur = s;
                for item in items {
                    let (a, b) = self.build(item, alphabet);
                    self.eps[cur].push(a);
                    cur = b;
                }
                (s, cur)
            }
            RegexAst::Union(items) => {
                let (s, t) = (self.state(), self.state());
                for item in items {
                    let (a, b) = self.build(item, alphabet);
                    self.eps[s].push(a);
                    self.eps[b].push(t);
                }
                (s, t)
            }
            RegexAst::Star(child) => {
                let s = self.state();
                let (a, b) = self.build(child, alphabet);
                self.eps[s].push(a);
                self.eps[b].push(s);
                (s, s)
            }
            RegexAst::Plus(child) => {
                let (a, b) = self.build(child, alphabet);
                let t = self.state();
                self.eps[b].push(a);
                self.eps[b].push(t);
                (a, t)
            }
            RegexAst::Optional(child) => {
                let (s, t) = (self.state(), self.state());
                let (a, b) = self.build(child, alphabet);
                self.eps[s].push(a);
                self.eps[s].push(t);
                self.eps[b].push(t);
                (s, t)
            }
        }
    }

    fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        let mut stack: Vec<usize> = seeds.into_iter().collect();
        while let Some(q) = stack.pop() {
            if set.insert(q) {
                stack.extend(self.eps[q].iter().copied());
            }
        }
        set
    }
}

/// A deterministic, complete automaton over an alphabet's symbol indices.
/// State 0 is the start state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    trans: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn compile(ast: &RegexAst, alphabet: &Alphabet) -> Dfa {
        let mut nfa = Nfa::default();
        let (entry, exit) = nfa.build(ast, alphabet);
        let k = alphabet.len();

        let start = nfa.closure([entry]);
        let mut ids: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut sets = vec![start.clone()];
        ids.insert(start, 0);
        let mut trans: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            let mut row = Vec::with_capacity(k);
            for sym in 0..k as u8 {
                let targets = sets[i]
                    .iter()
                    .flat_map(|&q| nfa.edges[q].iter())
                    .filter(|&&(s, _)| s == sym)
                    .map(|&(_, t)| t);
                let next = nfa.closure(targets);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len();
                        ids.insert(next.clone(), id);
                        sets.push(next);
                        id
                    }
                };
                row.push(id);
            }
            trans.push(row);
            i += 1;
        }
        let accepting = sets.iter().map(|s| s.contains(&exit)).collect();
        Dfa {
            alphabet: alphabet.clone(),
            trans,
            accepting,
        }
        .minimized()
    }

    /// Moore refinement followed by breadth-first renumbering from the start.
    fn minimized(&self) -> Dfa {
        let n = self.trans.len();
        let mut class: Vec<usize> = self.accepting.iter().map(|&a| a as usize).collect();
        loop {
            let mut sig_ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let next: Vec<usize> = (0..n)
                .map(|q| {
                    let sig = (class[q], self.trans[q].iter().map(|&t| class[t]).collect());
                    let len = sig_ids.len();
                    *sig_ids.entry(sig).or_insert(len)
                })
                .collect();
            let before = class.iter().collect::<BTreeSet<_>>().len();
            let after = sig_ids.len();
            class = next;
            if after == before {
                break;
            }
        }
        // renumber classes in BFS order from the start state
        let mut order: BTreeMap<usize, usize> = BTreeMap::new();
        let mut rep: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        order.insert(class[0], 0);
        rep.push(0);
        while let Some(q) = queue.pop_front() {
            for &t in &self.trans[q] {
                if let std::collections::btree_map::Entry::Vacant(slot) = order.entry(class[t]) {
                    slot.insert(rep.len());
                    rep.push(t);
                    queue.push_back(t);
                }
            }
        }
        let trans = rep
            .iter()
            .map(|&q| self.trans[q].iter().map(|&t| order[&class[t]]).collect())
            .collect();
        let accepting = rep.iter().map(|&q| self.accepting[q]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            trans,
            accepting,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.trans.len()
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn step(&self, state: usize, symbol: u8) -> usize {
        self.trans[state][symbol as usize]
    }

    /// The states visited while reading `word`, starting with state 0.
    pub fn run(&self, word: &[u8]) -> Vec<usize> {
        let mut states = Vec::with_capacity(word.len() + 1);
        let mut q = 0;
        states.push(q);
        for &a in word {
            q = self.step(q, a);
            states.push(q);
        }
        states
    }

    pub fn accepts(&self, word: &[u8]) -> bool {
        let q = word.iter().fold(0, |q, &a| self.step(q, a));
        self.accepting[q]
    }

    /// `table[k][q]`: some accepting state is reachable from `q` in exactly
    /// `k` steps.
    fn completion_table(&self, n: usize) -> Vec<Vec<bool>> {
        let mut table = vec![self.accepting.clone()];
        for k in 1..=n {
            let prev = &table[k - 1];
            let row = self
                .trans
                .iter()
                .map(|ts| ts.iter().any(|&t| prev[t]))
                .collect();
            table.push(row);
        }
        table
    }

    /// All accepted words of length `n` in lexicographic order.
    pub fn enumerate_length(&self, n: usize, cap: usize) -> Result<Vec<Vec<u8>>, LimitExceeded> {
        let table = self.completion_table(n);
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        self.descend(0, n, &table, &mut word, &mut out, cap)?;
        Ok(out)
    }

    fn descend(
        &self,
        q: usize,
        remaining: usize,
        table: &[Vec<bool>],
        word: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
        cap: usize,
    ) -> Result<(), LimitExceeded> {
        if !table[remaining][q] {
            return Ok(());
        }
        if remaining == 0 {
            if out.len() == cap {
                return Err(LimitExceeded::new(
                    format!("words of length {} in the regular language", word.len()),
                    cap,
                ));
            }
            out.push(word.clone());
            return Ok(());
        }
        for sym in 0..self.alphabet.len() as u8 {
            word.push(sym);
            self.descend(self.step(q, sym), remaining - 1, table, word, out, cap)?;
            word.pop();
        }
        Ok(())
    }

    /// The lexicographically smallest accepted word of length `n`.
    pub fn first_of_length(&self, n: usize) -> Option<Vec<u8>> {
        let table = self.completion_table(n);
        if !table[n][0] {
            return None;
        }
        let mut q = 0;
        let mut word = Vec::with_capacity(n);
        for remaining in (0..n).rev() {
            let sym = (0..self.alphabet.len() as u8)
                .find(|&s| table[remaining][self.step(q, s)])
                .expect("completion table guarantees a continuation");
            word.push(sym);
            q = self.step(q, sym);
        }
        Some(word)
    }

    /// `out[n]`: the language has a word of length `n`, for `n <= max`.
    pub fn nonempty_lengths(&self, max: usize) -> Vec<bool> {
        let mut reach = vec![false; self.state_count()];
        reach[0] = true;
        let mut out = Vec::with_capacity(max + 1);
        for _ in 0..=max {
            out.push(reach.iter().zip(&self.accepting).any(|(&r, &a)| r && a));
            let mut next = vec![false; self.state_count()];
            for (q, &r) in reach.iter().enumerate() {
                if r {
                    for &t in &self.trans[q] {
                        next[t] = true;
                    }
                }
            }
            reach = next;
        }
        out
    }

    /// Infinite iff a cycle passes through a state that is both reachable
    /// and co-reachable.
    pub fn is_infinite(&self) -> bool {
        let n = self.state_count();
        // every state of a BFS-renumbered DFA is reachable, so useful means
        // productive
        let useful = self
            .completion_table(n)
            .iter()
            .fold(vec![false; n], |acc, row| {
                acc.iter()
                    .zip(row)
                    .map(|(&a, &b)| a || b)
                    .collect::<Vec<bool>>()
            });
        // Kahn's algorithm on the useful subgraph; leftovers lie on a cycle
        let mut indeg = vec![0usize; n];
        for q in (0..n).filter(|&q| useful[q]) {
            for &t in &self.trans[q] {
                if useful[t] {
                    indeg[t] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| useful[q] && indeg[q] == 0).collect();
        let mut removed = 0;
        while let Some(q) = queue.pop_front() {
            removed += 1;
            for &t in &self.trans[q] {
                if useful[t] {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        removed < useful.iter().filter(|&&u| u).count()
    }
}
