//! Named submonoids of P_n: membership predicates, standard generating
//! sets, closed-form sizes, and independent brute-force constructions.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{bell, binomial, catalan, factorial, order_preserving_maps, power};
use crate::equivalence::{EqFilter, Equivalence};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::par::Exec;
use crate::partition::{Partition, Transformation};
use crate::rgs::{self, RgsIter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Pn,
    PnFd,
    SingPnFd,
    PPn,
    PPnFd,
    Sn,
    Tn,
    SingTn,
    On,
    En,
    PEn,
    Fn,
    In,
    Jn,
    Dn,
}

pub const ALL_FAMILIES: [Family; 15] = [
    Family::Pn,
    Family::PnFd,
    Family::SingPnFd,
    Family::PPn,
    Family::PPnFd,
    Family::Sn,
    Family::Tn,
    Family::SingTn,
    Family::On,
    Family::En,
    Family::PEn,
    Family::Fn,
    Family::In,
    Family::Jn,
    Family::Dn,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Pn => "pn",
            Family::PnFd => "pnfd",
            Family::SingPnFd => "sing-pnfd",
            Family::PPn => "ppn",
            Family::PPnFd => "ppnfd",
            Family::Sn => "sn",
            Family::Tn => "tn",
            Family::SingTn => "sing-tn",
            Family::On => "on",
            Family::En => "en",
            Family::PEn => "pen",
            Family::Fn => "fn",
            Family::In => "in",
            Family::Jn => "jn",
            Family::Dn => "dn",
        }
    }

    /// Families that are semigroups without identity (for n >= 1).
    pub fn is_semigroup(self) -> bool {
        matches!(self, Family::SingPnFd | Family::SingTn)
    }

    pub fn contains(self, a: &Partition) -> bool {
        let m = a.classify();
        match self {
            Family::Pn => true,
            Family::PnFd => m.full_domain,
            Family::SingPnFd => m.full_domain && !m.symmetric,
            Family::PPn => m.planar,
            Family::PPnFd => m.planar_full_domain,
            Family::Sn => m.symmetric,
            Family::Tn => m.transformation,
            Family::SingTn => m.transformation && !m.symmetric,
            Family::On => m.order_preserving,
            Family::En => m.projection,
            Family::PEn => m.projection && m.planar,
            Family::Fn => m.uniform,
            Family::In => m.partial_bijection,
            Family::Jn => m.block_bijection,
            Family::Dn => m.capped,
        }
    }

    /// Size from a closed formula, where one is known.
    pub fn closed_form(self, n: usize) -> Option<u128> {
        let k = n as u32;
        Some(match self {
            Family::Pn => bell(2 * k),
            Family::PPn => catalan(2 * k),
            Family::Sn => factorial(k),
            Family::Tn => power(k, k),
            Family::SingTn => power(k, k) - factorial(k),
            Family::On => order_preserving_maps(k),
            Family::En => bell(k),
            Family::PEn => {
                if k == 0 {
                    1
                } else {
                    1 << (k - 1)
                }
            }
            Family::Dn => catalan(k),
            Family::In => (0..=k).map(|r| binomial(k, r).pow(2) * factorial(r)).sum(),
            _ => return None,
        })
    }

    /// A generating set (as a monoid; for semigroup families, as a
    /// semigroup). `None` where no standard set is provided.
    pub fn generators(self, n: usize) -> Option<Vec<(String, Partition)>> {
        let s = |i: usize| (format!("s_{i}"), transposition(n, i));
        let f = |i: usize| (format!("f_{i}"), shift_down(n, i));
        let g = |i: usize| (format!("g_{i}"), shift_up(n, i));
        let h = |i: usize| (format!("h_{i}"), cap(n, i, i + 1));
        let p = |i: usize| (format!("p_{i}"), puncture(n, i));
        let lower = 1..n;
        let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
        let mut out = Vec::new();
        match self {
            Family::Pn => {
                out.extend(lower.clone().map(s));
                if n >= 2 {
                    out.push(("e".into(), projection(n, 1, 2)));
                }
                if n >= 1 {
                    out.push(p(1));
                }
            }
            Family::PnFd => {
                out.extend(lower.clone().map(s));
                if n >= 2 {
                    out.push(("e".into(), projection(n, 1, 2)));
                    out.push(("t".into(), merge(n, 1, 2)));
                }
            }
            Family::SingPnFd => {
                for (i, j) in pairs() {
                    out.push((sym2("e", i, j), projection(n, i, j)));
                    out.push((sym2("t", i, j), merge(n, i, j)));
                    out.push((sym2("t", j, i), merge(n, j, i)));
                }
            }
            Family::PPn => {
                out.extend(lower.clone().map(h));
                out.extend((1..=n).map(p));
            }
            Family::PPnFd => {
                out.extend(lower.clone().map(f));
                out.extend(lower.clone().map(g));
                out.extend(lower.clone().map(h));
            }
            Family::Sn => out.extend(lower.clone().map(s)),
            Family::Tn => {
                out.extend(lower.clone().map(s));
                if n >= 2 {
                    out.push(("t".into(), merge(n, 1, 2)));
                }
            }
            Family::SingTn => {
                for (i, j) in pairs() {
                    out.push((sym2("t", i, j), merge(n, i, j)));
                    out.push((sym2("t", j, i), merge(n, j, i)));
                }
            }
            Family::On => {
                out.extend(lower.clone().map(f));
                out.extend(lower.clone().map(g));
            }
            Family::En => out.extend(pairs().map(|(i, j)| (sym2("e", i, j), projection(n, i, j)))),
            Family::PEn => out.extend(lower.clone().map(h)),
            Family::Fn => {
                out.extend(lower.clone().map(s));
                if n >= 2 {
                    out.push(("e".into(), projection(n, 1, 2)));
                }
            }
            Family::In => {
                out.extend(lower.clone().map(s));
                if n >= 1 {
                    out.push(p(1));
                }
            }
            Family::Jn => return None,
            Family::Dn => out.extend(pairs().map(|(i, j)| (format!("h_{i}_{j}"), cap(n, i, j)))),
        }
        Some(out)
    }

    /// Closure of the standard generators. For semigroup families the
    /// carrier is S¹ (the identity is adjoined).
    pub fn closure(self, n: usize, budget: usize) -> Result<FiniteMonoid> {
        let gens = self
            .generators(n)
            .ok_or_else(|| Error::Unknown(format!("generating set for {self}")))?;
        FiniteMonoid::closure(n, gens, budget)
    }

    /// Exhaustive filter of P_n, in canonical order.
    pub fn brute_force(self, n: usize, exec: Exec) -> Vec<Partition> {
        all_partitions_filtered(n, exec, |a| self.contains(a))
    }

    /// The family built without using its generating set: a structural
    /// construction where one exists, otherwise the brute-force filter.
    /// Sorted canonically.
    pub fn concrete(self, n: usize, exec: Exec) -> Vec<Partition> {
        let maps = || Transformation::all(n).map(|f| Partition::from_transformation(&f));
        let mut out: Vec<Partition> = match self {
            Family::Sn => maps().filter(|a| a.classify().symmetric).collect(),
            Family::Tn => maps().collect(),
            Family::SingTn => maps().filter(|a| !a.classify().symmetric).collect(),
            Family::On => Transformation::all(n)
                .filter(|f| f.is_order_preserving())
                .map(|f| Partition::from_transformation(&f))
                .collect(),
            Family::En => Equivalence::enumerate(n, EqFilter::All)
                .map(|e| e.embed())
                .collect(),
            Family::PEn => Equivalence::enumerate(n, EqFilter::Convex)
                .map(|e| e.embed())
                .collect(),
            Family::Dn => Equivalence::enumerate(n, EqFilter::Planar)
                .map(|e| e.d_element().expect("planar"))
                .collect(),
            _ => return self.brute_force(n, exec),
        };
        out.sort();
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }
}

/// Every partition of degree `n` passing `keep`, in canonical order.
pub fn all_partitions_filtered(
    n: usize,
    exec: Exec,
    keep: impl Fn(&Partition) -> bool + Sync + Send,
) -> Vec<Partition> {
    let len = 2 * n;
    let chunks = rgs::prefixes(len, len.min(6));
    exec.flat_map(&chunks, |prefix| {
        RgsIter::with_prefix(len, prefix)
            .map(|s| Partition::from_rgs(s).expect("restricted growth string"))
            .filter(|a| keep(a))
            .collect()
    })
}

pub(crate) fn sym2(name: &str, i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{name}_{i}{j}")
    } else {
        format!("{name}_{i}_{j}")
    }
}

fn from_map(n: usize, image: impl Fn(usize) -> usize) -> Partition {
    let f = Transformation::new((1..=n).map(image).collect()).expect("valid image");
    Partition::from_transformation(&f)
}

/// Swaps `i` and `i + 1`.
pub fn transposition(n: usize, i: usize) -> Partition {
    from_map(n, |x| {
        if x == i {
            i + 1
        } else if x == i + 1 {
            i
        } else {
            x
        }
    })
}

/// Sends `j` to `i`, fixing everything else.
pub fn merge(n: usize, i: usize, j: usize) -> Partition {
    from_map(n, |x| if x == j { i } else { x })
}

/// Sends `i + 1` to `i`.
pub fn shift_down(n: usize, i: usize) -> Partition {
    merge(n, i, i + 1)
}

/// Sends `i` to `i + 1`.
pub fn shift_up(n: usize, i: usize) -> Partition {
    merge(n, i + 1, i)
}

/// The projection `id` of the equivalence joining `i` and `j`.
pub fn projection(n: usize, i: usize, j: usize) -> Partition {
    let (i, j) = (i.min(j), i.max(j));
    Equivalence::atom(i, j, n).expect("valid atom").embed()
}

/// The D_n element with block `[i, j] ∪ {i', j'}`.
pub fn cap(n: usize, i: usize, j: usize) -> Partition {
    Equivalence::atom(i, j, n)
        .expect("valid atom")
        .d_element()
        .expect("atoms are planar")
}

/// The identity with `{i, i'}` split into two singletons.
pub fn puncture(n: usize, i: usize) -> Partition {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.extend((0..n).map(|x| if x == i - 1 { n } else { x }));
    Partition::from_labels(&labels)
}
