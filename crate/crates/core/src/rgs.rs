//! Restricted growth strings: `s[0] = 0` and `s[i] <= 1 + max(s[..i])`.
//! They encode set partitions of `0..len` canonically.

/// Relabel arbitrary labels into restricted-growth form.
pub fn canonicalize<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Vec<u8> {
    let mut seen: Vec<T> = Vec::new();
    labels
        .iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(i) => i as u8,
            None => {
                seen.push(*l);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

pub fn is_rgs(s: &[u8]) -> bool {
    let mut next = 0u8;
    for &x in s {
        if x > next {
            return false;
        }
        if x == next {
            next += 1;
        }
    }
    true
}

/// Lexicographic iterator over all restricted growth strings of a fixed
/// length that extend a given (valid) prefix.
#[derive(Clone, Debug)]
pub struct RgsIter {
    cur: Vec<u8>,
    // running max+1 of cur[..=i]
    bound: Vec<u8>,
    fixed: usize,
    done: bool,
}

impl RgsIter {
    pub fn new(len: usize) -> Self {
        Self::with_prefix(len, &[])
    }

    pub fn with_prefix(len: usize, prefix: &[u8]) -> Self {
        assert!(prefix.len() <= len && is_rgs(prefix));
        let mut cur = prefix.to_vec();
        cur.resize(len, 0);
        let mut bound = Vec::with_capacity(len);
        let mut b = 0u8;
        for &x in &cur {
            b = b.max(x + 1);
            bound.push(b);
        }
        RgsIter {
            cur,
            bound,
            fixed: prefix.len(),
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.cur.len();
        let mut i = len;
        while i > self.fixed.max(1) {
            i -= 1;
            let prev = self.bound[i - 1];
            if self.cur[i] < prev {
                self.cur[i] += 1;
                self.bound[i] = prev.max(self.cur[i] + 1);
                for k in i + 1..len {
                    self.cur[k] = 0;
                    self.bound[k] = self.bound[k - 1];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RgsIter {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// All valid prefixes of length `k` (for splitting enumeration into chunks).
pub fn prefixes(len: usize, k: usize) -> Vec<Vec<u8>> {
    let k = k.min(len);
    RgsIter::new(k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_small_bell_numbers() {
        let counts: Vec<usize> = (0..7).map(|n| RgsIter::new(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn prefix_chunks_reassemble_in_order() {
        let whole: Vec<_> = RgsIter::new(6).collect();
        let chunked: Vec<_> = prefixes(6, 3)
            .iter()
            .flat_map(|p| RgsIter::with_prefix(6, p))
            .collect();
        assert_eq!(whole, chunked);
        assert!(whole.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonicalize_relabels_by_first_occurrence() {
        assert_eq!(canonicalize(&[7, 3, 7, 9]), vec![0, 1, 0, 2]);
    }
}
