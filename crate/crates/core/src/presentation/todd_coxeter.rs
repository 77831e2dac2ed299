//! Right-regular Todd-Coxeter enumeration for finite monoid presentations.
//!
//! Node 0 stands for the empty word. Nodes are processed in order; at each
//! live node every relation is traced in full (defining nodes on demand)
//! before the node's row is completed. Coincidences are merged with a
//! union-find that keeps the smaller index, and stale table entries are
//! resolved lazily through `find`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::schema::{Kind, Presentation};
use super::symbol::Symbol;

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Complete,
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub status: Status,
    /// Size of the presented monoid (or semigroup, for semigroup kinds).
    pub size: usize,
    /// Compacted right Cayley table over the presentation alphabet; row 0
    /// is the empty word. Empty when exhausted.
    pub table: Vec<Vec<u32>>,
    pub nodes_defined: usize,
}

struct Enumerator {
    gens: usize,
    rows: Vec<Vec<u32>>,
    parent: Vec<u32>,
    queue: VecDeque<(u32, u32)>,
    budget: usize,
    exhausted: bool,
}

impl Enumerator {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn get(&mut self, c: u32, x: usize) -> Option<u32> {
        match self.rows[c as usize][x] {
            UNDEF => None,
            t => Some(self.find(t)),
        }
    }

    fn new_node(&mut self) -> Option<u32> {
        if self.rows.len() >= self.budget {
            self.exhausted = true;
            return None;
        }
        let id = self.rows.len() as u32;
        self.rows.push(vec![UNDEF; self.gens]);
        self.parent.push(id);
        Some(id)
    }

    /// Follow `word` from `c`, defining missing edges.
    fn trace_define(&mut self, mut c: u32, word: &[usize]) -> Option<u32> {
        for &x in word {
            c = match self.get(c, x) {
                Some(t) => t,
                None => {
                    let t = self.new_node()?;
                    self.rows[c as usize][x] = t;
                    t
                }
            };
        }
        Some(c)
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.push_back((a, b));
        while let Some((a, b)) = self.queue.pop_front() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, lose) = (a.min(b), a.max(b));
            self.parent[lose as usize] = keep;
            for x in 0..self.gens {
                let t = self.rows[lose as usize][x];
                if t == UNDEF {
                    continue;
                }
                match self.rows[keep as usize][x] {
                    UNDEF => self.rows[keep as usize][x] = t,
                    s => self.queue.push_back((s, t)),
                }
            }
        }
    }

    /// Make `c·u = c·v` hold.
    fn push_relation(&mut self, c: u32, u: &[usize], v: &[usize]) -> Option<()> {
        match (u.split_last(), v.split_last()) {
            (None, None) => Some(()),
            (None, Some(_)) | (Some(_), None) => {
                let w = if u.is_empty() { v } else { u };
                let end = self.trace_define(c, w)?;
                let c = self.find(c);
                self.coincidence(c, end);
                Some(())
            }
            (Some((&x, up)), Some((&y, vp))) => {
                let p = self.trace_define(c, up)?;
                let q = self.trace_define(c, vp)?;
                let (p, q) = (self.find(p), self.find(q));
                match (self.get(p, x), self.get(q, y)) {
                    (Some(a), Some(b)) => self.coincidence(a, b),
                    (Some(a), None) => self.rows[q as usize][y] = a,
                    (None, Some(b)) => self.rows[p as usize][x] = b,
                    (None, None) => {
                        let t = self.new_node()?;
                        self.rows[p as usize][x] = t;
                        self.rows[q as usize][y] = t;
                    }
                }
                Some(())
            }
        }
    }
}

fn encode(p: &Presentation) -> Vec<(Vec<usize>, Vec<usize>)> {
    let index: HashMap<Symbol, usize> = p
        .alphabet
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    let enc = |w: &[Symbol]| w.iter().map(|s| index[s]).collect::<Vec<_>>();
    p.relations.iter().map(|(u, v)| (enc(u), enc(v))).collect()
}

/// Enumerate the monoid (or semigroup) given by `p`, defining at most
/// `budget` nodes in total.
pub fn enumerate_presented(p: &Presentation, budget: usize) -> EnumerationResult {
    let rels = encode(p);
    let gens = p.alphabet.len();
    let mut e = Enumerator {
        gens,
        rows: Vec::new(),
        parent: Vec::new(),
        queue: VecDeque::new(),
        budget: budget.max(1),
        exhausted: false,
    };
    e.new_node();
    let mut c = 0u32;
    'outer: while (c as usize) < e.rows.len() {
        if e.alive(c) {
            for (u, v) in &rels {
                if e.push_relation(c, u, v).is_none() {
                    break 'outer;
                }
                if !e.alive(c) {
                    break;
                }
            }
            if e.alive(c) {
                for x in 0..gens {
                    if e.rows[c as usize][x] == UNDEF {
                        match e.new_node() {
                            Some(t) => e.rows[c as usize][x] = t,
                            None => break 'outer,
                        }
                    }
                }
            }
        }
        c += 1;
    }
    let nodes_defined = e.rows.len();
    if e.exhausted {
        return EnumerationResult {
            status: Status::Exhausted,
            size: 0,
            table: vec![],
            nodes_defined,
        };
    }
    let table = compact(&mut e);
    let size = table.len() - usize::from(p.kind == Kind::Semigroup);
    EnumerationResult {
        status: Status::Complete,
        size,
        table,
        nodes_defined,
    }
}

fn compact(e: &mut Enumerator) -> Vec<Vec<u32>> {
    let n = e.rows.len() as u32;
    let live: Vec<u32> = (0..n).filter(|&c| e.alive(c)).collect();
    let mut rename = vec![UNDEF; n as usize];
    for (i, &c) in live.iter().enumerate() {
        rename[c as usize] = i as u32;
    }
    live.iter()
        .map(|&c| {
            (0..e.gens)
                .map(|x| {
                    let t = e.get(c, x).expect("complete row");
                    rename[t as usize]
                })
                .collect()
        })
        .collect()
}

/// Every relation holds at every node of a complete table.
pub fn table_is_consistent(p: &Presentation, table: &[Vec<u32>]) -> bool {
    let rels = encode(p);
    let walk = |mut c: u32, w: &[usize]| {
        for &x in w {
            c = table[c as usize][x];
        }
        c
    };
    (0..table.len() as u32).all(|c| rels.iter().all(|(u, v)| walk(c, u) == walk(c, v)))
}
