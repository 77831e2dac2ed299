//! Finite monoids generated by partitions: breadth-first closure with
//! interning, Cayley tables, shortlex representative words, Green's
//! relations and band predicates.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::partition::Partition;

/// Default cap on the number of elements (and presentation nodes).
pub const DEFAULT_BUDGET: usize = 2_000_000;

const NONE: u32 = u32::MAX;

#[derive(Debug)]
pub struct FiniteMonoid {
    degree: usize,
    elements: Vec<Partition>,
    index: HashMap<Partition, u32>,
    labels: Vec<String>,
    generators: Vec<u32>,
    right: Vec<u32>,
    parent: Vec<(u32, u32)>,
    identity_is_product: bool,
    left: OnceLock<Vec<u32>>,
    words: OnceLock<Vec<Box<[u32]>>>,
}

impl FiniteMonoid {
    /// Monoid generated by `generators` (identity included). Elements are
    /// numbered in the shortlex order of their first words.
    pub fn closure(
        degree: usize,
        generators: Vec<(String, Partition)>,
        budget: usize,
    ) -> Result<FiniteMonoid> {
        if let Some((_, g)) = generators.iter().find(|(_, g)| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let k = generators.len();
        let (labels, gens): (Vec<String>, Vec<Partition>) = generators.into_iter().unzip();
        let mut elements = vec![Partition::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u32);
        let mut parent = vec![(NONE, NONE)];
        let mut right = Vec::new();
        let mut cur = 0;
        while cur < elements.len() {
            for (g, gen) in gens.iter().enumerate() {
                let y = elements[cur].multiply(gen);
                let id = match index.get(&y) {
                    Some(&id) => id,
                    None => {
                        if elements.len() >= budget {
                            return Err(Error::BudgetExhausted(budget));
                        }
                        let id = elements.len() as u32;
                        index.insert(y.clone(), id);
                        elements.push(y);
                        parent.push((cur as u32, g as u32));
                        id
                    }
                };
                right.push(id);
            }
            cur += 1;
        }
        let generator_ids = (0..k).map(|g| right[g]).collect();
        let identity_is_product = right.contains(&0);
        Ok(FiniteMonoid {
            degree,
            elements,
            index,
            labels,
            generators: generator_ids,
            right,
            parent,
            identity_is_product,
            left: OnceLock::new(),
            words: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Partition {
        &self.elements[i]
    }

    pub fn index_of(&self, a: &Partition) -> Option<usize> {
        self.index.get(a).map(|&i| i as usize)
    }

    pub fn contains(&self, a: &Partition) -> bool {
        self.index.contains_key(a)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.labels
    }

    /// Element index of generator `g`.
    pub fn generator(&self, g: usize) -> usize {
        self.generators[g] as usize
    }

    /// Whether the identity is a product of one or more generators, i.e.
    /// whether it lies in the generated subsemigroup.
    pub fn identity_is_product(&self) -> bool {
        self.identity_is_product
    }

    /// Elements of the subsemigroup generated (the identity only if it is a
    /// product of generators).
    pub fn semigroup_elements(&self) -> Vec<usize> {
        let skip = usize::from(!self.identity_is_product);
        (skip..self.len()).collect()
    }

    /// `x · g`
    pub fn right(&self, x: usize, g: usize) -> usize {
        self.right[x * self.generators.len() + g] as usize
    }

    /// `g · x`, from a table built on first use.
    pub fn left(&self, x: usize, g: usize) -> usize {
        let k = self.generators.len();
        let table = self.left.get_or_init(|| {
            let mut t = vec![0u32; self.len() * k];
            for x in 0..self.len() {
                for g in 0..k {
                    t[x * k + g] = self.walk(self.generator(g), self.word(x)) as u32;
                }
            }
            t
        });
        table[x * k + g] as usize
    }

    fn walk(&self, mut x: usize, word: &[u32]) -> usize {
        for &g in word {
            x = self.right(x, g as usize);
        }
        x
    }

    /// Generator indices of the shortlex representative of element `x`.
    pub fn word(&self, x: usize) -> &[u32] {
        let words = self.words.get_or_init(|| {
            let mut words: Vec<Box<[u32]>> = Vec::with_capacity(self.len());
            words.push(Box::new([]));
            for &(p, g) in &self.parent[1..] {
                let mut w = words[p as usize].to_vec();
                w.push(g);
                words.push(w.into());
            }
            words
        });
        &words[x]
    }

    /// Representative word of `a` as generator labels.
    pub fn word_for(&self, a: &Partition) -> Result<Vec<String>> {
        let x = self.index_of(a).ok_or_else(|| Error::NotMember {
            element: a.to_string(),
            set: "the generated monoid".into(),
        })?;
        Ok(self
            .word(x)
            .iter()
            .map(|&g| self.labels[g as usize].clone())
            .collect())
    }

    /// Product of two elements by index, read off the right Cayley table.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.walk(a, self.word(b))
    }

    /// Elements satisfying `pred`, in index order.
    pub fn select(&self, pred: impl Fn(&Partition) -> bool) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| pred(&self.elements[i]))
            .collect()
    }

    pub fn green(&self) -> GreenData {
        let k = self.generator_count();
        let right = canonical_labels(&scc(self.len(), |x, out| {
            out.extend((0..k).map(|g| self.right(x, g)))
        }));
        let left = canonical_labels(&scc(self.len(), |x, out| {
            out.extend((0..k).map(|g| self.left(x, g)))
        }));
        let two_sided = canonical_labels(&scc(self.len(), |x, out| {
            out.extend((0..k).map(|g| self.right(x, g)));
            out.extend((0..k).map(|g| self.left(x, g)));
        }));
        GreenData {
            r_class: right,
            l_class: left,
            j_class: two_sided,
        }
    }

    /// The group of units and its complement.
    pub fn units_and_singular(&self) -> Units {
        // x is a unit iff the identity is reachable from x in the right graph
        let k = self.generator_count();
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); self.len()];
        for x in 0..self.len() {
            for g in 0..k {
                preds[self.right(x, g)].push(x as u32);
            }
        }
        let mut unit = vec![false; self.len()];
        unit[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(y) = queue.pop_front() {
            for &x in &preds[y] {
                if !std::mem::replace(&mut unit[x as usize], true) {
                    queue.push_back(x as usize);
                }
            }
        }
        let units: Vec<usize> = (0..self.len()).filter(|&x| unit[x]).collect();
        let singular: Vec<usize> = (0..self.len()).filter(|&x| !unit[x]).collect();
        let singular_is_ideal = singular
            .iter()
            .all(|&s| (0..k).all(|g| !unit[self.right(s, g)] && !unit[self.left(s, g)]));
        Units {
            units,
            singular,
            singular_is_ideal,
        }
    }

    pub fn band_type(&self, exec: Exec) -> BandType {
        let n = self.len();
        if !exec.all(n, |x| self.mul(x, x) == x) {
            return BandType::NotBand;
        }
        if exec.all(n, |x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x))) {
            return BandType::Semilattice;
        }
        if exec.all(n, |x| {
            (0..n).all(|y| self.mul(self.mul(x, y), x) == self.mul(y, x))
        }) {
            return BandType::RightRegularBand;
        }
        BandType::Band
    }

    pub fn cayley_graph(&self, side: Side) -> CayleyGraph {
        let k = self.generator_count();
        let mut edges = Vec::with_capacity(self.len() * k);
        for x in 0..self.len() {
            for g in 0..k {
                let to = match side {
                    Side::Right => self.right(x, g),
                    Side::Left => self.left(x, g),
                };
                edges.push(CayleyEdge {
                    from: x,
                    to,
                    generator: self.labels[g].clone(),
                });
            }
        }
        CayleyGraph {
            side,
            elements: self.elements.iter().map(|e| e.to_string()).collect(),
            generators: self.labels.clone(),
            edges,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, Serialize)]
pub struct CayleyEdge {
    pub from: usize,
    pub to: usize,
    pub generator: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CayleyGraph {
    pub side: Side,
    pub elements: Vec<String>,
    pub generators: Vec<String>,
    pub edges: Vec<CayleyEdge>,
}

impl CayleyGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cayley graph serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cayley {\n");
        for (i, e) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{e}\"];\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"];\n",
                e.from, e.to, e.generator
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenData {
    pub r_class: Vec<u32>,
    pub l_class: Vec<u32>,
    pub j_class: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Units {
    pub units: Vec<usize>,
    pub singular: Vec<usize>,
    pub singular_is_ideal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BandType {
    NotBand,
    Band,
    RightRegularBand,
    Semilattice,
}

/// Strongly connected components (iterative Tarjan); returns a component id
/// per vertex.
fn scc(n: usize, succ: impl Fn(usize, &mut Vec<usize>)) -> Vec<u32> {
    let mut index = vec![NONE; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack = Vec::new();
    let mut next_index = 0u32;
    let mut next_comp = 0u32;
    let mut adj: Vec<Vec<usize>> = Vec::new();
    // call frames: (vertex, position in its successor list)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        frames.push((root, 0));
        adj.push(Vec::new());
        succ(root, adj.last_mut().unwrap());
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, pos)) = frames.last() {
            let depth = frames.len() - 1;
            if pos < adj[depth].len() {
                let w = adj[depth][pos];
                frames[depth].1 += 1;
                if index[w] == NONE {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                    if adj.len() <= depth + 1 {
                        adj.push(Vec::new());
                    }
                    adj[depth + 1].clear();
                    succ(w, &mut adj[depth + 1]);
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
        adj.clear();
    }
    comp
}

/// Relabel class ids by order of first occurrence.
fn canonical_labels(raw: &[u32]) -> Vec<u32> {
    let mut map = HashMap::new();
    raw.iter()
        .map(|&c| {
            let next = map.len() as u32;
            *map.entry(c).or_insert(next)
        })
        .collect()
}
