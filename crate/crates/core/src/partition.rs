//! Partitions of `{1..n} ∪ {1'..n'}` in canonical block-index form.
//!
//! Position `i - 1` holds the block of upper vertex `i`, position `n + i - 1`
//! holds the block of lower vertex `i'`. Block indices are a restricted
//! growth string, so structural equality is equality of partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dsu::Dsu;
use crate::equivalence::Equivalence;
use crate::error::{Error, Result};
use crate::rgs;

/// Largest supported degree (block indices are stored as bytes).
pub const MAX_DEGREE: usize = 127;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Box<[u8]>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        let mut blocks = Vec::with_capacity(2 * n);
        blocks.extend(0..n as u8);
        blocks.extend(0..n as u8);
        Partition {
            blocks: blocks.into(),
        }
    }

    /// Build from any labelling of the 2n positions; labels are canonicalized.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Self {
        assert!(labels.len().is_multiple_of(2) && labels.len() <= 2 * MAX_DEGREE);
        Partition {
            blocks: rgs::canonicalize(labels).into(),
        }
    }

    /// Build from an already canonical block-index sequence.
    pub fn from_rgs(blocks: Vec<u8>) -> Result<Self> {
        if !blocks.len().is_multiple_of(2) || blocks.len() > 2 * MAX_DEGREE {
            return Err(Error::Domain(format!("{} positions", blocks.len())));
        }
        if !rgs::is_rgs(&blocks) {
            return Err(Error::Domain("block indices are not canonical".into()));
        }
        Ok(Partition {
            blocks: blocks.into(),
        })
    }

    /// Build from signed vertex lists (positive upper, negative lower).
    pub fn from_blocks(blocks: &[Vec<i64>]) -> Result<Self> {
        let n = blocks
            .iter()
            .flatten()
            .map(|v| v.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        Self::from_blocks_with_degree(n, blocks)
    }

    pub fn from_blocks_with_degree(n: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::Domain(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut labels = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            for &v in block {
                let a = v.unsigned_abs() as usize;
                if v == 0 || a > n {
                    return Err(Error::Domain(format!(
                        "vertex {v} out of range for n = {n}"
                    )));
                }
                let pos = if v > 0 { a - 1 } else { n + a - 1 };
                if labels[pos] != usize::MAX {
                    return Err(Error::Domain(format!("vertex {v} repeated")));
                }
                labels[pos] = b;
            }
        }
        if let Some(pos) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Domain(format!(
                "vertex {} missing",
                vertex_name(n, pos)
            )));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let blocks: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_blocks(&blocks)
    }

    pub fn degree(&self) -> usize {
        self.blocks.len() / 2
    }

    /// Raw canonical block indices, upper row then lower row.
    pub fn as_slice(&self) -> &[u8] {
        &self.blocks
    }

    pub fn upper(&self) -> &[u8] {
        &self.blocks[..self.degree()]
    }

    pub fn lower(&self) -> &[u8] {
        &self.blocks[self.degree()..]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as signed vertex lists in canonical order.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let n = self.degree();
        let mut out = vec![Vec::new(); self.block_count()];
        for (pos, &b) in self.blocks.iter().enumerate() {
            let v = if pos < n {
                pos as i64 + 1
            } else {
                -((pos - n) as i64 + 1)
            };
            out[b as usize].push(v);
        }
        out
    }

    /// Per block: (meets upper row, meets lower row).
    fn row_presence(&self) -> Vec<(bool, bool)> {
        let mut seen = vec![(false, false); self.block_count()];
        for &b in self.upper() {
            seen[b as usize].0 = true;
        }
        for &b in self.lower() {
            seen[b as usize].1 = true;
        }
        seen
    }

    pub fn try_multiply(&self, other: &Partition) -> Result<Partition> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.multiply(other))
    }

    /// Product via the three-row product graph. Panics on degree mismatch;
    /// use [`Partition::try_multiply`] for a checked version.
    pub fn multiply(&self, other: &Partition) -> Partition {
        let n = self.degree();
        assert_eq!(n, other.degree(), "degree mismatch");
        // nodes: upper 0..n, middle n..2n, lower 2n..3n
        let mut dsu = Dsu::new(3 * n);
        let mut first = vec![u32::MAX; 2 * n];
        for (pos, &b) in self.blocks.iter().enumerate() {
            let node = pos; // upper i -> i, lower i' -> middle
            let f = &mut first[b as usize];
            if *f == u32::MAX {
                *f = node as u32;
            } else {
                dsu.union(*f as usize, node);
            }
        }
        first.iter_mut().for_each(|f| *f = u32::MAX);
        for (pos, &b) in other.blocks.iter().enumerate() {
            let node = n + pos; // upper i -> middle, lower i' -> lower
            let f = &mut first[b as usize];
            if *f == u32::MAX {
                *f = node as u32;
            } else {
                dsu.union(*f as usize, node);
            }
        }
        let mut label = vec![u8::MAX; 3 * n];
        let mut next = 0u8;
        let mut out = Vec::with_capacity(2 * n);
        for node in (0..n).chain(2 * n..3 * n) {
            let r = dsu.find(node);
            if label[r] == u8::MAX {
                label[r] = next;
                next += 1;
            }
            out.push(label[r]);
        }
        Partition { blocks: out.into() }
    }

    /// Non-crossing test in the boundary order `1..n, n'..1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.degree();
        let order = (0..n).chain((n..2 * n).rev());
        let k = self.block_count();
        let mut last = vec![0usize; k];
        for (t, pos) in order.clone().enumerate() {
            last[self.blocks[pos] as usize] = t;
        }
        let mut stack: Vec<u8> = Vec::new();
        let mut open = vec![false; k];
        for (t, pos) in order.enumerate() {
            let b = self.blocks[pos];
            if open[b as usize] {
                if stack.last() != Some(&b) {
                    return false;
                }
            } else {
                open[b as usize] = true;
                stack.push(b);
            }
            if last[b as usize] == t {
                stack.pop();
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.row_presence().iter().filter(|&&(u, l)| u && l).count()
    }

    /// Upper points lying in transversals (1-based, ascending).
    pub fn domain(&self) -> Vec<usize> {
        let seen = self.row_presence();
        (1..=self.degree())
            .filter(|&i| seen[self.upper()[i - 1] as usize].1)
            .collect()
    }

    /// Lower points lying in transversals (1-based, ascending).
    pub fn codomain(&self) -> Vec<usize> {
        let seen = self.row_presence();
        (1..=self.degree())
            .filter(|&i| seen[self.lower()[i - 1] as usize].0)
            .collect()
    }

    pub fn is_full_domain(&self) -> bool {
        let seen = self.row_presence();
        self.upper().iter().all(|&b| seen[b as usize].1)
    }

    pub fn kernel(&self) -> Equivalence {
        Equivalence::from_labels(self.upper())
    }

    pub fn cokernel(&self) -> Equivalence {
        Equivalence::from_labels(self.lower())
    }

    pub fn structure(&self) -> StructureSummary {
        StructureSummary {
            dom: self.domain(),
            codom: self.codomain(),
            ker: self.kernel(),
            coker: self.cokernel(),
            rank: self.rank(),
        }
    }

    /// Transversals as (upper points, lower points), 1-based and ascending,
    /// in canonical block order.
    pub fn transversals(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.degree();
        let mut parts = vec![(Vec::new(), Vec::new()); self.block_count()];
        for i in 0..n {
            parts[self.blocks[i] as usize].0.push(i + 1);
            parts[self.blocks[n + i] as usize].1.push(i + 1);
        }
        parts
            .into_iter()
            .filter(|(u, l)| !u.is_empty() && !l.is_empty())
            .collect()
    }

    pub fn is_idempotent(&self) -> bool {
        self.multiply(self) == *self
    }

    pub fn classify(&self) -> Membership {
        let n = self.degree();
        let seen = self.row_presence();
        let all_transversal = seen.iter().all(|&(u, l)| u && l);
        let full_domain = self.upper().iter().all(|&b| seen[b as usize].1);
        let coker_trivial = distinct(self.lower());
        let ker_trivial = distinct(self.upper());
        let transformation = full_domain && coker_trivial;
        let order_preserving = transformation
            && self.upper().windows(2).all(|w| {
                let y0 = self.lower().iter().position(|&b| b == w[0]).unwrap();
                let y1 = self.lower().iter().position(|&b| b == w[1]).unwrap();
                y0 <= y1
            });
        let planar = self.is_planar();
        let mut sizes = vec![(0usize, 0usize); seen.len()];
        for &b in self.upper() {
            sizes[b as usize].0 += 1;
        }
        for &b in self.lower() {
            sizes[b as usize].1 += 1;
        }
        let uniform = all_transversal && sizes.iter().all(|&(u, l)| u == l);
        let projection = all_transversal && self.upper() == self.lower();
        let capped = planar
            && full_domain
            && self
                .transversals()
                .iter()
                .all(|(a, b)| a.first() == b.first() && a.last() == b.last());
        Membership {
            symmetric: self.rank() == n,
            transformation,
            order_preserving,
            projection,
            uniform,
            partial_bijection: ker_trivial && coker_trivial,
            block_bijection: all_transversal,
            full_domain,
            planar,
            planar_full_domain: planar && full_domain,
            capped,
        }
    }

    pub fn from_transformation(f: &Transformation) -> Partition {
        let n = f.degree();
        let mut labels = Vec::with_capacity(2 * n);
        labels.extend(f.image().iter().copied());
        let hit = f.image_set();
        labels.extend((1..=n).map(|y| if hit[y] { y } else { n + y }));
        Partition::from_labels(&labels)
    }

    pub fn to_transformation(&self) -> Result<Transformation> {
        if !self.classify().transformation {
            return Err(Error::NotMember {
                element: self.to_string(),
                set: "T_n".into(),
            });
        }
        let image = self
            .upper()
            .iter()
            .map(|&b| self.lower().iter().position(|&c| c == b).unwrap() + 1)
            .collect();
        Transformation::new(image)
    }
}

fn distinct(row: &[u8]) -> bool {
    let mut seen = [false; 256];
    row.iter()
        .all(|&b| !std::mem::replace(&mut seen[b as usize], true))
}

fn vertex_name(n: usize, pos: usize) -> String {
    if pos < n {
        format!("{}", pos + 1)
    } else {
        format!("-{}", pos - n + 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Partition::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl std::ops::Mul for &Partition {
    type Output = Partition;

    fn mul(self, rhs: &Partition) -> Partition {
        self.multiply(rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSummary {
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: Equivalence,
    pub coker: Equivalence,
    pub rank: usize,
}

/// Membership in the named submonoids of P_n.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Membership {
    /// S_n
    pub symmetric: bool,
    /// T_n
    pub transformation: bool,
    /// O_n
    pub order_preserving: bool,
    /// E_n: `a = id_{ker a}`
    pub projection: bool,
    /// F_n
    pub uniform: bool,
    /// I_n
    pub partial_bijection: bool,
    /// J_n
    pub block_bijection: bool,
    pub full_domain: bool,
    pub planar: bool,
    pub planar_full_domain: bool,
    /// D_n: planar, full domain, and every transversal's upper part is the
    /// interval spanned by its lower part.
    pub capped: bool,
}

/// A self-map of `{1..n}`, acting on the right: `x(fg) = (xf)g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Transformation {
    image: Vec<usize>,
}

impl Transformation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if let Some(&y) = image.iter().find(|&&y| y == 0 || y > n) {
            return Err(Error::OutOfRange(format!("image value {y} for n = {n}")));
        }
        Ok(Transformation { image })
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            image: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `x ↦ xf`, 1-based.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1]
    }

    fn image_set(&self) -> Vec<bool> {
        let mut hit = vec![false; self.degree() + 1];
        for &y in &self.image {
            hit[y] = true;
        }
        hit
    }

    pub fn is_order_preserving(&self) -> bool {
        self.image.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_permutation(&self) -> bool {
        self.image_set().iter().skip(1).all(|&h| h)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation {
            image: self.image.iter().map(|&y| other.apply(y)).collect(),
        }
    }

    /// All n^n maps in lexicographic order of image sequences.
    pub fn all(n: usize) -> impl Iterator<Item = Transformation> {
        let total = (n as u32).checked_pow(n as u32).unwrap_or(0) as usize;
        let total = if n == 0 { 1 } else { total };
        (0..total).map(move |mut code| {
            let mut image = vec![1; n];
            for slot in image.iter_mut().rev() {
                *slot = code % n + 1;
                code /= n;
            }
            Transformation { image }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_rejects_repeats_and_gaps() {
        assert!(matches!(
            Partition::parse("[[1,2],[1,-1]]"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Partition::parse("[[1,2],[-1]]"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Partition::parse("[[1,0],[-1]]"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(Partition::parse("[[1,-1]"), Err(Error::Parse(_))));
        assert!(matches!(
            Partition::parse("[[1],[]]"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn format_orders_blocks_by_first_position() {
        let a = p("[[-3],[5,6],[-1,-6,-2],[1,4],[2,-5,-4,3]]");
        assert_eq!(a.to_string(), "[[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]");
        assert_eq!(Partition::identity(2).to_string(), "[[1,-1],[2,-2]]");
    }

    #[test]
    fn planarity_of_small_cases() {
        assert!(Partition::identity(4).is_planar());
        // {1,2'} and {2,1'} cross
        assert!(!p("[[1,-2],[2,-1]]").is_planar());
        // {1,3} with {2,-1}: 2 sits between 1 and 3, -1 outside
        assert!(!p("[[1,3],[2,-1],[-2],[-3]]").is_planar());
        assert!(p("[[1,3],[2],[-1,-2,-3]]").is_planar());
    }

    #[test]
    fn transformation_round_trip() {
        let f = Transformation::new(vec![1, 1, 3]).unwrap();
        let a = Partition::from_transformation(&f);
        assert_eq!(a.to_string(), "[[1,2,-1],[3,-3],[-2]]");
        assert_eq!(a.to_transformation().unwrap(), f);
        assert!(Partition::identity(3).to_transformation().unwrap() == Transformation::identity(3));
    }
}
