//! Conversion to a binary normal form: every production is `A -> B C` or
//! `A -> a`, and the empty string is derivable only through a flag on the
//! start symbol, which then never occurs on a right-hand side.

use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::Alphabet;

use super::grammar::{Grammar, Production, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormGrammar {
    pub alphabet: Alphabet,
    pub names: Vec<String>,
    pub start: usize,
    pub start_eps: bool,
    /// `(A, B, C)` for `A -> B C`, sorted.
    pub binary: Vec<(usize, usize, usize)>,
    /// `(A, a)` for `A -> a` with `a` a symbol index, sorted.
    pub terminal: Vec<(usize, u8)>,
}

impl NormalFormGrammar {
    pub fn nonterminal_count(&self) -> usize {
        self.names.len()
    }
}

struct Work {
    names: Vec<String>,
    start: usize,
    prods: BTreeSet<(usize, Vec<Symbol>)>,
}

impl Work {
    fn fresh(&mut self, base: &str) -> usize {
        let mut name = base.to_string();
        while self.names.contains(&name) {
            name.push('\'');
        }
        self.names.push(name);
        self.names.len() - 1
    }

    fn generating(&self) -> Vec<bool> {
        let mut gen = vec![false; self.names.len()];
        loop {
            let mut changed = false;
            for (lhs, rhs) in &self.prods {
                if !gen[*lhs]
                    && rhs.iter().all(|s| match s {
                        Symbol::Terminal(_) => true,
                        Symbol::Nonterminal(n) => gen[*n],
                    })
                {
                    gen[*lhs] = true;
                    changed = true;
                }
            }
            if !changed {
                return gen;
            }
        }
    }

    /// Drops non-generating symbols, then unreachable ones.
    fn prune(&mut self) {
        let gen = self.generating();
        self.prods.retain(|(lhs, rhs)| {
            gen[*lhs]
                && rhs.iter().all(|s| match s {
                    Symbol::Terminal(_) => true,
                    Symbol::Nonterminal(n) => gen[*n],
                })
        });
        let mut reach = vec![false; self.names.len()];
        reach[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(a) = stack.pop() {
            for (_, rhs) in self.prods.range((a, vec![])..).take_while(|(l, _)| *l == a) {
                for s in rhs {
                    if let Symbol::Nonterminal(n) = s {
                        if !reach[*n] {
                            reach[*n] = true;
                            stack.push(*n);
                        }
                    }
                }
            }
        }
        self.prods.retain(|(lhs, _)| reach[*lhs]);
    }

    fn mentions_start(&self) -> bool {
        self.prods
            .iter()
            .any(|(_, rhs)| rhs.contains(&Symbol::Nonterminal(self.start)))
    }
}

pub fn to_normal_form(g: &Grammar) -> NormalFormGrammar {
    let mut w = Work {
        names: g.nonterminals.clone(),
        start: g.start,
        prods: g
            .productions
            .iter()
            .map(|Production { lhs, rhs }| (*lhs, rhs.clone()))
            .collect(),
    };
    w.prune();

    // fresh start symbol
    if w.mentions_start() {
        let old = w.start;
        let base = format!("{}0", w.names[old]);
        w.start = w.fresh(&base);
        w.prods.insert((w.start, vec![Symbol::Nonterminal(old)]));
    }

    // terminals inside long right-hand sides
    let mut term_nt: BTreeMap<char, usize> = BTreeMap::new();
    let prods: Vec<_> = std::mem::take(&mut w.prods).into_iter().collect();
    for (lhs, rhs) in prods {
        if rhs.len() < 2 {
            w.prods.insert((lhs, rhs));
            continue;
        }
        let rhs = rhs
            .into_iter()
            .map(|s| match s {
                Symbol::Terminal(c) => {
                    let id = match term_nt.get(&c) {
                        Some(&id) => id,
                        None => {
                            let id = w.fresh(&format!("T_{c}"));
                            term_nt.insert(c, id);
                            id
                        }
                    };
                    Symbol::Nonterminal(id)
                }
                other => other,
            })
            .collect();
        w.prods.insert((lhs, rhs));
    }
    for (&c, &id) in &term_nt {
        w.prods.insert((id, vec![Symbol::Terminal(c)]));
    }

    // binarize
    let prods: Vec<_> = std::mem::take(&mut w.prods).into_iter().collect();
    for (lhs, rhs) in prods {
        if rhs.len() <= 2 {
            w.prods.insert((lhs, rhs));
            continue;
        }
        let mut head = lhs;
        let last = rhs.len() - 2;
        for (k, s) in rhs[..=last].iter().enumerate() {
            if k == last {
                w.prods.insert((head, vec![*s, rhs[k + 1]]));
            } else {
                let base = format!("{}_{}", w.names[lhs], k + 1);
                let next = w.fresh(&base);
                w.prods.insert((head, vec![*s, Symbol::Nonterminal(next)]));
                head = next;
            }
        }
    }

    // remove empty productions
    let mut nullable = vec![false; w.names.len()];
    loop {
        let mut changed = false;
        for (lhs, rhs) in &w.prods {
            if !nullable[*lhs]
                && rhs
                    .iter()
                    .all(|s| matches!(s, Symbol::Nonterminal(n) if nullable[*n]))
            {
                nullable[*lhs] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let start_eps = nullable[w.start];
    let prods: Vec<_> = std::mem::take(&mut w.prods).into_iter().collect();
    for (lhs, rhs) in prods {
        let optional: Vec<bool> = rhs
            .iter()
            .map(|s| matches!(s, Symbol::Nonterminal(n) if nullable[*n]))
            .collect();
        for mask in 0u32..(1 << rhs.len()) {
            // a set bit drops that (nullable) symbol
            if (0..rhs.len()).any(|i| mask & (1 << i) != 0 && !optional[i]) {
                continue;
            }
            let kept: Vec<Symbol> = (0..rhs.len())
                .filter(|i| mask & (1 << i) == 0)
                .map(|i| rhs[i])
                .collect();
            if !kept.is_empty() {
                w.prods.insert((lhs, kept));
            }
        }
    }

    // remove unit productions
    let n = w.names.len();
    let mut unit = vec![vec![false; n]; n];
    for (a, row) in unit.iter_mut().enumerate() {
        row[a] = true;
    }
    loop {
        let mut changed = false;
        for (lhs, rhs) in &w.prods {
            if let [Symbol::Nonterminal(b)] = rhs.as_slice() {
                for row in unit.iter_mut() {
                    if row[*lhs] && !row[*b] {
                        row[*b] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let proper: Vec<_> = w
        .prods
        .iter()
        .filter(|(_, rhs)| !matches!(rhs.as_slice(), [Symbol::Nonterminal(_)]))
        .cloned()
        .collect();
    w.prods = BTreeSet::new();
    for (a, row) in unit.iter().enumerate() {
        for (b, &reach) in row.iter().enumerate() {
            if reach {
                for (lhs, rhs) in &proper {
                    if *lhs == b {
                        w.prods.insert((a, rhs.clone()));
                    }
                }
            }
        }
    }
    w.prune();

    // renumber the surviving nonterminals, keeping their relative order
    let mut used = vec![false; w.names.len()];
    used[w.start] = true;
    for (lhs, rhs) in &w.prods {
        used[*lhs] = true;
        for s in rhs {
            if let Symbol::Nonterminal(n) = s {
                used[*n] = true;
            }
        }
    }
    let mut remap = vec![usize::MAX; w.names.len()];
    let mut names = Vec::new();
    for (old, name) in w.names.iter().enumerate() {
        if used[old] {
            remap[old] = names.len();
            names.push(name.clone());
        }
    }
    let mut binary = Vec::new();
    let mut terminal = Vec::new();
    for (lhs, rhs) in &w.prods {
        match rhs.as_slice() {
            [Symbol::Terminal(c)] => terminal.push((
                remap[*lhs],
                g.alphabet
                    .index_of(*c)
                    .expect("validated by the grammar parser"),
            )),
            [Symbol::Nonterminal(b), Symbol::Nonterminal(c)] => {
                binary.push((remap[*lhs], remap[*b], remap[*c]))
            }
            other => unreachable!("not in normal form: {other:?}"),
        }
    }
    binary.sort_unstable();
    terminal.sort_unstable();
    NormalFormGrammar {
        alphabet: g.alphabet.clone(),
        names,
        start: remap[w.start],
        start_eps,
        binary,
        terminal,
    }
}
