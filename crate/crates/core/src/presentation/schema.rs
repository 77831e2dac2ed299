//! Relation schemas expanded at a given degree.
//!
//! Relations are first produced as chains `w_1 = w_2 = ... = w_k`. A chain
//! contributes the consecutive pairs `(w_i, w_{i+1})`. Sub-schemas keep the
//! members of each chain that are words over their smaller alphabet before
//! pairing, so that e.g. `t² = t = et = s_1 t` restricts to
//! `t² = t = s_1 t`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::symbol::{Symbol, Word};
use crate::catalog::Family;
use crate::error::{Error, Result};

use Symbol::{Cap, E12 as E, F, G, H, S, T12 as T};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Monoid,
    Semigroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    /// Idempotent generators `e_ij`, `t_ij` of the singular full-domain part.
    SingXR,
    /// `s_i, e, t` for the full-domain monoid.
    FullYQ,
    /// `f_i, g_i, h_i` for the planar full-domain monoid.
    PlanarZO,
    /// `h_ij` for the right regular band D_n.
    Dn,
    En,
    SingTn,
    Tn,
    Fn,
    On,
    /// `f_i, g_i, h_ij` with the commutation and absorption relations of the
    /// action pair (D_n, O_n).
    PlanarIntermediate,
}

pub const ALL_SCHEMAS: [Schema; 10] = [
    Schema::SingXR,
    Schema::FullYQ,
    Schema::PlanarZO,
    Schema::Dn,
    Schema::En,
    Schema::SingTn,
    Schema::Tn,
    Schema::Fn,
    Schema::On,
    Schema::PlanarIntermediate,
];

impl Schema {
    pub fn name(self) -> &'static str {
        match self {
            Schema::SingXR => "sing-xr",
            Schema::FullYQ => "full-yq",
            Schema::PlanarZO => "planar-zo",
            Schema::Dn => "dn",
            Schema::En => "en",
            Schema::SingTn => "sing-tn",
            Schema::Tn => "tn",
            Schema::Fn => "fn",
            Schema::On => "on",
            Schema::PlanarIntermediate => "planar-intermediate",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Schema::SingXR | Schema::SingTn => Kind::Semigroup,
            _ => Kind::Monoid,
        }
    }

    /// The concrete family the schema presents.
    pub fn target(self) -> Family {
        match self {
            Schema::SingXR => Family::SingPnFd,
            Schema::FullYQ => Family::PnFd,
            Schema::PlanarZO | Schema::PlanarIntermediate => Family::PPnFd,
            Schema::Dn => Family::Dn,
            Schema::En => Family::En,
            Schema::SingTn => Family::SingTn,
            Schema::Tn => Family::Tn,
            Schema::Fn => Family::Fn,
            Schema::On => Family::On,
        }
    }

    pub fn alphabet(self, n: usize) -> Vec<Symbol> {
        let adj = 1..n;
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let ordered: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let es = pairs.iter().map(|&(i, j)| Symbol::E(i, j));
        let ts = ordered.iter().map(|&(i, j)| Symbol::T(i, j));
        let caps = pairs.iter().map(|&(i, j)| Cap(i, j));
        match self {
            Schema::SingXR => es.chain(ts).collect(),
            Schema::FullYQ => adj.map(S).chain([E, T]).collect(),
            Schema::PlanarZO => adj
                .clone()
                .map(F)
                .chain(adj.clone().map(G))
                .chain(adj.map(H))
                .collect(),
            Schema::Dn => caps.collect(),
            Schema::En => es.collect(),
            Schema::SingTn => ts.collect(),
            Schema::Tn => adj.map(S).chain([T]).collect(),
            Schema::Fn => adj.map(S).chain([E]).collect(),
            Schema::On => adj.clone().map(F).chain(adj.map(G)).collect(),
            Schema::PlanarIntermediate => {
                adj.clone().map(F).chain(adj.map(G)).chain(caps).collect()
            }
        }
    }

    fn chains(self, n: usize) -> Vec<Vec<Word>> {
        match self {
            Schema::SingXR => {
                let mut c = tt_chains(n);
                c.extend(ee_chains(n));
                c.extend(et_chains(n));
                c
            }
            Schema::FullYQ => yq_chains(n),
            Schema::PlanarZO => zo_chains(n),
            Schema::Dn => dn_chains(n),
            Schema::En => ee_chains(n),
            Schema::SingTn => tt_chains(n),
            Schema::Tn => {
                let mut c = restrict(yq_chains(n), &self.alphabet(n));
                if n >= 3 {
                    c.push(vec![vec![T, S(2), T, S(2)], vec![T, S(2), T]]);
                }
                c
            }
            Schema::Fn => restrict(yq_chains(n), &self.alphabet(n)),
            Schema::On => restrict(zo_chains(n), &self.alphabet(n)),
            Schema::PlanarIntermediate => {
                let mut c = restrict(zo_chains(n), &Schema::On.alphabet(n));
                c.extend(dn_chains(n));
                c.extend(commutation_chains(n));
                c.extend((1..n).map(|i| vec![vec![F(i), Cap(i, i + 1)], vec![Cap(i, i + 1)]]));
                c
            }
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Schema {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "xr" | "sing-pnfd" => Some(Schema::SingXR),
            "yq" | "pnfd" => Some(Schema::FullYQ),
            "zo" | "ppnfd" => Some(Schema::PlanarZO),
            "intermediate" => Some(Schema::PlanarIntermediate),
            _ => None,
        };
        alias
            .or_else(|| ALL_SCHEMAS.iter().copied().find(|x| x.name() == s))
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }
}

/// A finite presentation expanded at a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub kind: Kind,
    pub alphabet: Vec<Symbol>,
    pub relations: Vec<(Word, Word)>,
    pub schema: String,
    pub n: usize,
}

impl Presentation {
    /// Expand `schema` at degree `n` (n >= 2).
    pub fn schema(schema: Schema, n: usize) -> Result<Presentation> {
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        let mut relations: Vec<(Word, Word)> = Vec::new();
        for chain in schema.chains(n) {
            for w in chain.windows(2) {
                let pair = (w[0].clone(), w[1].clone());
                if pair.0 != pair.1 && !relations.contains(&pair) {
                    relations.push(pair);
                }
            }
        }
        Ok(Presentation {
            kind: schema.kind(),
            alphabet: schema.alphabet(n),
            relations,
            schema: schema.name().to_string(),
            n,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }
}

fn restrict(chains: Vec<Vec<Word>>, alphabet: &[Symbol]) -> Vec<Vec<Word>> {
    chains
        .into_iter()
        .map(|c| {
            c.into_iter()
                .filter(|w| w.iter().all(|s| alphabet.contains(s)))
                .collect()
        })
        .filter(|c: &Vec<Word>| c.len() >= 2)
        .collect()
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter().enumerate().all(|(a, x)| !xs[a + 1..].contains(x))
}

fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (1..=n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn distinct_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    tuples(n, k).into_iter().filter(|t| distinct(t)).collect()
}

fn tt_chains(n: usize) -> Vec<Vec<Word>> {
    let t = |i: usize, j: usize| Symbol::T(i, j);
    let mut c = Vec::new();
    for v in distinct_tuples(n, 2) {
        let (i, j) = (v[0], v[1]);
        c.push(vec![
            vec![t(i, j), t(i, j)],
            vec![t(i, j)],
            vec![t(j, i), t(i, j)],
        ]);
    }
    for v in distinct_tuples(n, 4) {
        let (i, j, k, l) = (v[0], v[1], v[2], v[3]);
        c.push(vec![vec![t(i, j), t(k, l)], vec![t(k, l), t(i, j)]]);
    }
    for v in distinct_tuples(n, 3) {
        let (i, j, k) = (v[0], v[1], v[2]);
        c.push(vec![vec![t(i, k), t(j, k)], vec![t(i, k)]]);
    }
    for v in distinct_tuples(n, 3) {
        let (i, j, k) = (v[0], v[1], v[2]);
        c.push(vec![
            vec![t(i, j), t(i, k)],
            vec![t(i, k), t(i, j)],
            vec![t(j, k), t(i, j)],
        ]);
    }
    for v in distinct_tuples(n, 3) {
        let (i, j, k) = (v[0], v[1], v[2]);
        c.push(vec![
            vec![t(k, i), t(i, j), t(j, k)],
            vec![t(i, k), t(k, j), t(j, i), t(i, k)],
        ]);
    }
    for v in distinct_tuples(n, 4) {
        let (i, j, k, l) = (v[0], v[1], v[2], v[3]);
        c.push(vec![
            vec![t(k, i), t(i, j), t(j, k), t(k, l)],
            vec![t(i, k), t(k, l), t(l, i), t(i, j), t(j, l)],
        ]);
    }
    c
}

fn ee_chains(n: usize) -> Vec<Vec<Word>> {
    let e = Symbol::e;
    let mut c = Vec::new();
    for v in distinct_tuples(n, 2) {
        c.push(vec![
            vec![e(v[0], v[1]), e(v[0], v[1])],
            vec![e(v[0], v[1])],
        ]);
    }
    for v in tuples(n, 4) {
        let (i, j, k, l) = (v[0], v[1], v[2], v[3]);
        if i != j && k != l {
            c.push(vec![vec![e(i, j), e(k, l)], vec![e(k, l), e(i, j)]]);
        }
    }
    for v in distinct_tuples(n, 3) {
        let (i, j, k) = (v[0], v[1], v[2]);
        c.push(vec![vec![e(i, j), e(j, k)], vec![e(j, k), e(k, i)]]);
    }
    c
}

fn et_chains(n: usize) -> Vec<Vec<Word>> {
    let e = Symbol::e;
    let t = |i: usize, j: usize| Symbol::T(i, j);
    let mut c = Vec::new();
    for v in distinct_tuples(n, 2) {
        c.push(vec![
            vec![e(v[0], v[1]), t(v[0], v[1])],
            vec![t(v[0], v[1])],
        ]);
    }
    for v in distinct_tuples(n, 3) {
        let (i, j, k) = (v[0], v[1], v[2]);
        c.push(vec![vec![e(j, k), t(i, j)], vec![t(i, j), e(i, k)]]);
    }
    for v in distinct_tuples(n, 4) {
        let (i, j, k, l) = (v[0], v[1], v[2], v[3]);
        c.push(vec![vec![e(k, l), t(i, j)], vec![t(i, j), e(k, l)]]);
    }
    for v in distinct_tuples(n, 2) {
        c.push(vec![
            vec![t(v[0], v[1]), e(v[0], v[1])],
            vec![e(v[0], v[1])],
        ]);
    }
    c
}

fn yq_chains(n: usize) -> Vec<Vec<Word>> {
    let m = n - 1; // s_1..s_m
    let mut c = Vec::new();
    for i in 1..=m {
        c.push(vec![vec![S(i), S(i)], vec![]]);
    }
    for i in 1..=m {
        for j in 1..=m {
            if i.abs_diff(j) > 1 {
                c.push(vec![vec![S(i), S(j)], vec![S(j), S(i)]]);
            }
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            if i.abs_diff(j) == 1 {
                c.push(vec![vec![S(i), S(j), S(i)], vec![S(j), S(i), S(j)]]);
            }
        }
    }
    c.push(vec![vec![T, T], vec![T], vec![E, T], vec![S(1), T]]);
    c.push(vec![
        vec![E, E],
        vec![E],
        vec![T, E],
        vec![S(1), E],
        vec![E, S(1)],
    ]);
    for i in 3..=m {
        c.push(vec![vec![S(i), T], vec![T, S(i)]]);
    }
    for i in 3..=m {
        c.push(vec![vec![S(i), E], vec![E, S(i)]]);
    }
    if m >= 2 {
        c.push(vec![vec![T, S(1), S(2), T], vec![T, S(1), S(2), S(1)]]);
        c.push(vec![vec![T, S(2), T, S(2)], vec![S(2), T, S(2), T]]);
        c.push(vec![vec![E, S(2), E, S(2)], vec![S(2), E, S(2), E]]);
        c.push(vec![vec![T, S(2), E, S(2)], vec![S(2), E, S(2), T]]);
    }
    if m >= 3 {
        let w = [S(2), S(3), S(1), S(2)];
        let cat = |parts: &[&[Symbol]]| parts.concat();
        c.push(vec![cat(&[&[T], &w, &[T], &w]), cat(&[&w, &[T], &w, &[T]])]);
        c.push(vec![cat(&[&[E], &w, &[E], &w]), cat(&[&w, &[E], &w, &[E]])]);
        c.push(vec![cat(&[&[T], &w, &[E], &w]), cat(&[&w, &[E], &w, &[T]])]);
    }
    c
}

fn zo_chains(n: usize) -> Vec<Vec<Word>> {
    let m = n - 1;
    let idx = || 1..=m;
    let mut c = Vec::new();
    let kinds: [fn(usize) -> Symbol; 3] = [F, G, H];
    for i in idx() {
        for x in kinds {
            for y in kinds {
                c.push(vec![vec![x(i), y(i)], vec![y(i)]]);
            }
        }
    }
    for (a, b) in [(F as fn(usize) -> Symbol, F as fn(usize) -> Symbol), (G, G)] {
        for i in idx() {
            for j in idx() {
                if i.abs_diff(j) > 1 {
                    c.push(vec![vec![a(i), b(j)], vec![b(j), a(i)]]);
                }
            }
        }
    }
    for i in idx() {
        for j in idx() {
            if i != j {
                c.push(vec![vec![H(i), H(j)], vec![H(j), H(i)]]);
            }
        }
    }
    for i in 1..m {
        c.push(vec![
            vec![F(i), F(i + 1), F(i)],
            vec![F(i + 1), F(i), F(i + 1)],
            vec![F(i + 1), F(i)],
        ]);
        c.push(vec![
            vec![G(i), G(i + 1), G(i)],
            vec![G(i + 1), G(i), G(i + 1)],
            vec![G(i), G(i + 1)],
        ]);
    }
    for i in idx() {
        for j in idx() {
            if j != i && j != i + 1 {
                c.push(vec![vec![F(i), G(j)], vec![G(j), F(i)]]);
            }
        }
    }
    for i in idx() {
        for j in idx() {
            if j != i && j + 1 != i {
                c.push(vec![vec![H(i), F(j)], vec![F(j), H(i)]]);
            }
        }
    }
    for i in idx() {
        for j in idx() {
            if j != i && j != i + 1 {
                c.push(vec![vec![H(i), G(j)], vec![G(j), H(i)]]);
            }
        }
    }
    for i in 1..m {
        c.push(vec![vec![F(i), G(i + 1)], vec![F(i)]]);
        c.push(vec![vec![G(i + 1), F(i)], vec![G(i + 1)]]);
        c.push(vec![vec![H(i), G(i + 1)], vec![H(i + 1), F(i)]]);
    }
    c
}

fn dn_chains(n: usize) -> Vec<Vec<Word>> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut c = Vec::new();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if k <= i && j <= l {
                c.push(vec![vec![Cap(i, j), Cap(k, l)], vec![Cap(k, l)]]);
            }
        }
    }
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if j <= k {
                c.push(vec![vec![Cap(i, j), Cap(k, l)], vec![Cap(k, l), Cap(i, j)]]);
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                c.push(vec![
                    vec![Cap(i, j), Cap(j, k)],
                    vec![Cap(i, k), Cap(i, j)],
                    vec![Cap(i, k), Cap(j, k)],
                ]);
            }
        }
    }
    c
}

/// `h_ij` with the convention `h_ii = 1`.
fn cap_word(i: usize, j: usize) -> Word {
    if i == j {
        vec![]
    } else {
        vec![Cap(i, j)]
    }
}

fn commutation_chains(n: usize) -> Vec<Vec<Word>> {
    let mut c = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..n {
                let rhs = if k + 1 == i {
                    cap_word(i - 1, j)
                } else if k + 1 == j {
                    cap_word(i, j - 1)
                } else {
                    cap_word(i, j)
                };
                c.push(vec![vec![Cap(i, j), F(k)], [vec![F(k)], rhs].concat()]);
            }
            for k in 1..n {
                let rhs = if k == i {
                    cap_word(i + 1, j)
                } else if k == j {
                    cap_word(i, j + 1)
                } else {
                    cap_word(i, j)
                };
                c.push(vec![vec![Cap(i, j), G(k)], [vec![G(k)], rhs].concat()]);
            }
        }
    }
    c
}
