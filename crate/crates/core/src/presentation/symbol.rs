use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalog::{self, sym2};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A generator symbol of one of the alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `e_ij = e_ji`, stored with `i < j`.
    E(usize, usize),
    /// `t_ij`, the map `j ↦ i`.
    T(usize, usize),
    /// `s_i`, the transposition of `i` and `i + 1`.
    S(usize),
    /// `e = e_12` in the permutation-based alphabet.
    E12,
    /// `t = t_12` in the permutation-based alphabet.
    T12,
    /// `f_i`: `i + 1 ↦ i`.
    F(usize),
    /// `g_i`: `i ↦ i + 1`.
    G(usize),
    /// `h_i = h_{i,i+1}` in the planar alphabet.
    H(usize),
    /// `h_ij`, `i < j`.
    Cap(usize, usize),
}

pub type Word = Vec<Symbol>;

impl Symbol {
    pub fn e(i: usize, j: usize) -> Symbol {
        Symbol::E(i.min(j), i.max(j))
    }

    /// The standard partition image at degree `n`.
    pub fn image(self, n: usize) -> Result<Partition> {
        let bad = || Err(Error::OutOfRange(format!("{self} at n = {n}")));
        let pair_ok = |i: usize, j: usize| i != j && (1..=n).contains(&i) && (1..=n).contains(&j);
        let adj_ok = |i: usize| i >= 1 && i < n;
        match self {
            Symbol::E(i, j) if pair_ok(i, j) => Ok(catalog::projection(n, i, j)),
            Symbol::T(i, j) if pair_ok(i, j) => Ok(catalog::merge(n, i, j)),
            Symbol::S(i) if adj_ok(i) => Ok(catalog::transposition(n, i)),
            Symbol::E12 if n >= 2 => Ok(catalog::projection(n, 1, 2)),
            Symbol::T12 if n >= 2 => Ok(catalog::merge(n, 1, 2)),
            Symbol::F(i) if adj_ok(i) => Ok(catalog::shift_down(n, i)),
            Symbol::G(i) if adj_ok(i) => Ok(catalog::shift_up(n, i)),
            Symbol::H(i) if adj_ok(i) => Ok(catalog::cap(n, i, i + 1)),
            Symbol::Cap(i, j) if i < j && pair_ok(i, j) => Ok(catalog::cap(n, i, j)),
            _ => bad(),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Symbol::E(i, j) => f.write_str(&sym2("e", i, j)),
            Symbol::T(i, j) => f.write_str(&sym2("t", i, j)),
            Symbol::S(i) => write!(f, "s_{i}"),
            Symbol::E12 => f.write_str("e"),
            Symbol::T12 => f.write_str("t"),
            Symbol::F(i) => write!(f, "f_{i}"),
            Symbol::G(i) => write!(f, "g_{i}"),
            Symbol::H(i) => write!(f, "h_{i}"),
            Symbol::Cap(i, j) => write!(f, "h_{i}_{j}"),
        }
    }
}

fn index(s: &str) -> Option<usize> {
    s.parse().ok().filter(|&x| x > 0)
}

/// `"12"` → (1, 2); `"1_12"` → (1, 12).
fn index_pair(s: &str) -> Option<(usize, usize)> {
    if let Some((a, b)) = s.split_once('_') {
        return Some((index(a)?, index(b)?));
    }
    let b = s.as_bytes();
    if b.len() == 2 && b.iter().all(u8::is_ascii_digit) {
        return Some(((b[0] - b'0') as usize, (b[1] - b'0') as usize));
    }
    None
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        let unknown = || Error::Unknown(s.to_string());
        match s {
            "e" => return Ok(Symbol::E12),
            "t" => return Ok(Symbol::T12),
            _ => {}
        }
        let (head, rest) = s.split_once('_').ok_or_else(unknown)?;
        let sym = match head {
            "e" => index_pair(rest).map(|(i, j)| Symbol::e(i, j)),
            "t" => index_pair(rest).map(|(i, j)| Symbol::T(i, j)),
            "s" => index(rest).map(Symbol::S),
            "f" => index(rest).map(Symbol::F),
            "g" => index(rest).map(Symbol::G),
            "h" if rest.contains('_') => index_pair(rest).map(|(i, j)| Symbol::Cap(i, j)),
            "h" => index(rest).map(Symbol::H),
            _ => None,
        };
        sym.ok_or_else(unknown)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Whitespace-separated symbols; an empty string is the empty word.
/// Whitespace-separated letters; "1" (or nothing) is the empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    if text.trim() == "1" {
        return Ok(Word::new());
    }
    text.split_whitespace().map(str::parse).collect()
}

pub fn format_word(w: &[Symbol]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
