//! Equivalence relations on `{1..n}` in restricted-growth form, with the
//! planar/convex special cases and their associated diagram elements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::partition::{Partition, Transformation, MAX_DEGREE};
use crate::rgs::{self, RgsIter};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Equivalence {
    class_of: Box<[u8]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqFilter {
    All,
    Planar,
    Convex,
}

impl Equivalence {
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Self {
        Equivalence {
            class_of: rgs::canonicalize(labels).into(),
        }
    }

    /// The equality relation Δ.
    pub fn trivial(n: usize) -> Self {
        Equivalence {
            class_of: (0..n as u8).collect(),
        }
    }

    /// The universal relation ∇.
    pub fn universal(n: usize) -> Self {
        Equivalence {
            class_of: vec![0; n].into(),
        }
    }

    /// The equivalence whose only non-trivial class is `{i, j}`.
    pub fn atom(i: usize, j: usize, n: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::OutOfRange(format!("atom({i},{j}) for n = {n}")));
        }
        let labels: Vec<usize> = (1..=n).map(|x| if x == j { i } else { x }).collect();
        Ok(Self::from_labels(&labels))
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::Domain(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut labels = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Domain("empty class".into()));
            }
            for &x in class {
                if x == 0 || x > n {
                    return Err(Error::Domain(format!("point {x} out of range for n = {n}")));
                }
                if labels[x - 1] != usize::MAX {
                    return Err(Error::Domain(format!("point {x} repeated")));
                }
                labels[x - 1] = c;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Domain(format!("point {} missing", x + 1)));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let classes: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(v) = classes.iter().flatten().find(|&&v| v <= 0) {
            return Err(Error::Domain(format!("point {v} is not positive")));
        }
        let classes: Vec<Vec<usize>> = classes
            .iter()
            .map(|c| c.iter().map(|&v| v as usize).collect())
            .collect();
        let n = classes.iter().flatten().copied().max().unwrap_or(0);
        Self::from_classes(n, &classes)
    }

    pub fn degree(&self) -> usize {
        self.class_of.len()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.class_of
    }

    /// Class index of point `x` (1-based).
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x - 1] as usize
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x - 1] == self.class_of[y - 1]
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Classes as ascending 1-based point lists, ordered by least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(x + 1);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.class_count() == self.degree()
    }

    pub fn join(&self, other: &Equivalence) -> Result<Equivalence> {
        let n = self.degree();
        if n != other.degree() {
            return Err(Error::DegreeMismatch(n, other.degree()));
        }
        let mut dsu = Dsu::new(n);
        for rel in [self, other] {
            let mut first = vec![usize::MAX; n];
            for (x, &c) in rel.class_of.iter().enumerate() {
                match first[c as usize] {
                    usize::MAX => first[c as usize] = x,
                    f => {
                        dsu.union(f, x);
                    }
                }
            }
        }
        Ok(Self::from_labels(&dsu.labels(n)))
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Equivalence) -> bool {
        self.degree() == other.degree()
            && self
                .classes()
                .iter()
                .all(|c| c.iter().all(|&x| other.related(x, c[0])))
    }

    /// Classes pairwise separated or nested (no interleaving).
    pub fn is_planar(&self) -> bool {
        let n = self.degree();
        let k = self.class_count();
        let mut last = vec![0; k];
        for (x, &c) in self.class_of.iter().enumerate() {
            last[c as usize] = x;
        }
        let mut open = vec![false; k];
        let mut stack = Vec::new();
        for x in 0..n {
            let c = self.class_of[x];
            if open[c as usize] {
                if stack.last() != Some(&c) {
                    return false;
                }
            } else {
                open[c as usize] = true;
                stack.push(c);
            }
            if last[c as usize] == x {
                stack.pop();
            }
        }
        true
    }

    /// Every class is an interval.
    pub fn is_convex(&self) -> bool {
        let mut seen = vec![false; self.class_count()];
        let mut prev = None;
        for &c in self.class_of.iter() {
            if prev != Some(c) {
                if seen[c as usize] {
                    return false;
                }
                seen[c as usize] = true;
            }
            prev = Some(c);
        }
        true
    }

    /// The projection `id_ε`: blocks `A ∪ A'` for each class `A`.
    pub fn embed(&self) -> Partition {
        let mut labels = self.class_of.to_vec();
        labels.extend_from_slice(&self.class_of);
        Partition::from_labels(&labels)
    }

    /// Classes not nested inside another class, in order.
    fn outer_classes(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_planar() {
            return Err(Error::NotPlanar);
        }
        let classes = self.classes();
        Ok(classes
            .iter()
            .filter(|a| {
                !classes
                    .iter()
                    .any(|b| b[0] < a[0] && a[a.len() - 1] < b[b.len() - 1])
            })
            .cloned()
            .collect())
    }

    /// The D_n element with cokernel `self`: each outer class `B` gives the
    /// transversal `[min B, max B] ∪ B'`, nested classes stay in the lower row.
    pub fn d_element(&self) -> Result<Partition> {
        let n = self.degree();
        let outer = self.outer_classes()?;
        let mut labels = vec![0usize; 2 * n];
        for (i, b) in outer.iter().enumerate() {
            for x in b[0]..=b[b.len() - 1] {
                labels[x - 1] = i;
            }
        }
        for x in 1..=n {
            let c = self.class_of(x);
            let top = outer.iter().position(|b| self.class_of(b[0]) == c);
            labels[n + x - 1] = match top {
                Some(i) => i,
                None => n + c,
            };
        }
        Ok(Partition::from_labels(&labels))
    }

    /// The convex equivalence whose classes are the spans of the outer classes
    /// (the kernel of [`Equivalence::d_element`]).
    pub fn hull(&self) -> Result<Equivalence> {
        let outer = self.outer_classes()?;
        let mut labels = vec![0; self.degree()];
        for (i, b) in outer.iter().enumerate() {
            for x in b[0]..=b[b.len() - 1] {
                labels[x - 1] = i;
            }
        }
        Ok(Self::from_labels(&labels))
    }

    /// Next point of the class of `x` above `x`, or `x` at the class maximum.
    pub fn successor(&self, x: usize) -> Result<usize> {
        let n = self.degree();
        if x == 0 || x > n {
            return Err(Error::OutOfRange(format!("point {x} for n = {n}")));
        }
        let c = self.class_of[x - 1];
        Ok((x + 1..=n)
            .find(|&y| self.class_of[y - 1] == c)
            .unwrap_or(x))
    }

    /// `h_{1,suc(1)} ⋯ h_{n,suc(n)}` with the identity letters dropped.
    pub fn normal_word(&self) -> Result<BlockWord> {
        if !self.is_planar() {
            return Err(Error::NotPlanar);
        }
        let mut letters = Vec::new();
        for x in 1..=self.degree() {
            let k = self.successor(x)?;
            if k != x {
                letters.push((x, k));
            }
        }
        Ok(BlockWord { letters })
    }

    /// The normal word cut at the interval boundaries of [`Equivalence::hull`];
    /// empty pieces are omitted.
    pub fn bricks(&self) -> Result<Vec<BlockWord>> {
        let word = self.normal_word()?;
        let hull = self.hull()?;
        let mut out: Vec<BlockWord> = Vec::new();
        let mut current: Option<usize> = None;
        for &(i, j) in &word.letters {
            let c = hull.class_of(i);
            if current != Some(c) {
                out.push(BlockWord::default());
                current = Some(c);
            }
            out.last_mut().unwrap().letters.push((i, j));
        }
        Ok(out)
    }

    /// For a convex equivalence, the map sending each point to the least
    /// point of its class.
    pub fn collapse_to_min(&self) -> Result<Transformation> {
        if !self.is_convex() {
            return Err(Error::NotConvex);
        }
        let classes = self.classes();
        let image = (1..=self.degree())
            .map(|x| classes[self.class_of(x)][0])
            .collect();
        Transformation::new(image)
    }

    /// All equivalences on `n` points passing `filter`, in lexicographic
    /// restricted-growth order.
    pub fn enumerate(n: usize, filter: EqFilter) -> impl Iterator<Item = Equivalence> {
        RgsIter::new(n)
            .map(|s| Equivalence { class_of: s.into() })
            .filter(move |e| match filter {
                EqFilter::All => true,
                EqFilter::Planar => e.is_planar(),
                EqFilter::Convex => e.is_convex(),
            })
    }
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self
            .classes()
            .iter()
            .map(|c| {
                let items: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", classes.join(","))
    }
}

impl fmt::Debug for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Equivalence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Equivalence::parse(s)
    }
}

impl Serialize for Equivalence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Equivalence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Equivalence::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// A word over the letters `h_{ij}` (`i < j`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockWord {
    pub letters: Vec<(usize, usize)>,
}

impl BlockWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product of the D_n elements `d_{η_ij}` for each letter.
    pub fn evaluate(&self, n: usize) -> Result<Partition> {
        let mut acc = Partition::identity(n);
        for &(i, j) in &self.letters {
            acc = acc.multiply(&Equivalence::atom(i, j, n)?.d_element()?);
        }
        Ok(acc)
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(i, j)| format!("h_{i}_{j}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(
            Equivalence::atom(1, 2, 3).unwrap().classes(),
            vec![vec![1, 2], vec![3]]
        );
        assert_eq!(
            Equivalence::atom(2, 4, 5).unwrap().classes(),
            vec![vec![1], vec![2, 4], vec![3], vec![5]]
        );
        assert!(Equivalence::atom(2, 2, 3).is_err());
        assert!(Equivalence::atom(1, 4, 3).is_err());
    }

    #[test]
    fn join_of_chain_is_universal() {
        let a = Equivalence::atom(1, 2, 3).unwrap();
        let b = Equivalence::atom(2, 3, 3).unwrap();
        assert_eq!(a.join(&b).unwrap(), Equivalence::universal(3));
        assert_eq!(a.join(&Equivalence::trivial(3)).unwrap(), a);
    }

    #[test]
    fn convexity() {
        let e: Equivalence = "[[1,5,6],[2,3],[4],[7,8]]".parse().unwrap();
        assert!(e.is_planar());
        assert!(!e.is_convex());
        assert!(Equivalence::trivial(4).is_convex());
        assert!(!Equivalence::parse("[[1,3],[2,4]]").unwrap().is_planar());
    }
}
