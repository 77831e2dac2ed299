//! The unary operations `D`, `R`, `ρ` on partitions and exhaustive checkers
//! for the identities they satisfy, action pairs, and the left congruences
//! `θ_u = {(s, t) : su = tu}`.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, Side};
use crate::par::Exec;
use crate::partition::Partition;
use crate::report::{CheckReport, Witness};

/// `D(a) = id_{ker a}`.
pub fn domain_projection(a: &Partition) -> Partition {
    a.kernel().embed()
}

/// `R(a) = id_{coker a}`.
pub fn range_projection(a: &Partition) -> Partition {
    a.cokernel().embed()
}

/// `ρ(a) = d_{coker a}`, defined on planar full-domain partitions.
pub fn capped_range(a: &Partition) -> Result<Partition> {
    if !a.classify().planar_full_domain {
        return Err(Error::NotMember {
            element: a.to_string(),
            set: "PP_n^fd".into(),
        });
    }
    a.cokernel().d_element()
}

/// Which of the restriction identities to check: `aD(b) = D(ab)a` (left)
/// or `R(a)b = bR(ab)` (right).
pub fn restriction_law_holds(a: &Partition, b: &Partition, side: Side) -> bool {
    let ab = a.multiply(b);
    match side {
        Side::Left => a.multiply(&domain_projection(b)) == domain_projection(&ab).multiply(a),
        Side::Right => range_projection(a).multiply(b) == b.multiply(&range_projection(&ab)),
    }
}

type Law<'a> = (
    &'static str,
    Box<dyn Fn(usize, usize) -> bool + Sync + Send + 'a>,
);

/// First violation over all pairs in lexicographic order, law by law.
fn first_violation(
    m: &FiniteMonoid,
    exec: Exec,
    laws: &[Law<'_>],
) -> Option<(&'static str, usize, usize)> {
    let n = m.len();
    laws.iter().find_map(|(label, law)| {
        exec.find_first(n, |a| (0..n).find(|&b| !law(a, b)).map(|b| (a, b)))
            .map(|(a, b)| (*label, a, b))
    })
}

/// Index table of a unary map, or the first element whose image escapes.
fn unary_table(
    m: &FiniteMonoid,
    exec: Exec,
    op: impl Fn(&Partition) -> Partition + Sync + Send,
) -> std::result::Result<Vec<u32>, (usize, Partition)> {
    let images = exec.map(m.len(), |i| {
        let img = op(m.element(i));
        m.index_of(&img).map(|j| j as u32).ok_or((i, img))
    });
    images.into_iter().collect()
}

fn unary_closure_failure(
    report: CheckReport,
    m: &FiniteMonoid,
    label: &str,
    (i, img): (usize, Partition),
) -> CheckReport {
    report.fail(Witness::new(
        format!("not closed under {label}"),
        [m.element(i), &img],
    ))
}

/// Axioms (E1)-(E8) and their duals over every element and pair.
pub fn check_ehresmann(m: &FiniteMonoid, exec: Exec) -> CheckReport {
    let report = CheckReport::new("ehresmann").count("elements", m.len());
    let d = match unary_table(m, exec, domain_projection) {
        Ok(t) => t,
        Err(e) => return unary_closure_failure(report, m, "D", e),
    };
    let r = match unary_table(m, exec, range_projection) {
        Ok(t) => t,
        Err(e) => return unary_closure_failure(report, m, "R", e),
    };
    let d = |x: usize| d[x] as usize;
    let r = |x: usize| r[x] as usize;
    let mul = |x: usize, y: usize| m.mul(x, y);
    let laws: Vec<Law<'_>> = vec![
        ("E1 (D)", Box::new(move |a, _| mul(d(a), a) == a)),
        ("E1 (R)", Box::new(move |a, _| mul(a, r(a)) == a)),
        (
            "E2 (D)",
            Box::new(move |a, b| mul(d(a), d(b)) == mul(d(b), d(a))),
        ),
        (
            "E2 (R)",
            Box::new(move |a, b| mul(r(a), r(b)) == mul(r(b), r(a))),
        ),
        (
            "E3 (D)",
            Box::new(move |a, b| d(mul(a, b)) == d(mul(a, d(b)))),
        ),
        (
            "E3 (R)",
            Box::new(move |a, b| r(mul(a, b)) == r(mul(r(a), b))),
        ),
        (
            "E4 (D)",
            Box::new(move |a, b| d(mul(a, b)) == mul(d(a), d(mul(a, b)))),
        ),
        (
            "E4 (R)",
            Box::new(move |a, b| r(mul(a, b)) == mul(r(mul(a, b)), r(b))),
        ),
        ("E5 (D)", Box::new(move |a, _| r(d(a)) == d(a))),
        ("E5 (R)", Box::new(move |a, _| d(r(a)) == r(a))),
        ("E6 (D)", Box::new(move |a, _| d(d(a)) == d(a))),
        ("E6 (R)", Box::new(move |a, _| r(r(a)) == r(a))),
        ("E7 (D)", Box::new(move |a, _| mul(d(a), d(a)) == d(a))),
        ("E7 (R)", Box::new(move |a, _| mul(r(a), r(a)) == r(a))),
        (
            "E8 (D)",
            Box::new(move |a, b| mul(d(a), d(b)) == d(mul(d(a), d(b)))),
        ),
        (
            "E8 (R)",
            Box::new(move |a, b| mul(r(a), r(b)) == r(mul(r(a), r(b)))),
        ),
    ];
    let report = report
        .count("pairs", m.len() * m.len())
        .count("laws", laws.len());
    match first_violation(m, exec, &laws) {
        None => report,
        Some((label, a, b)) => report.fail(Witness::new(label, [m.element(a), m.element(b)])),
    }
}

/// `(L) aD(b) = D(ab)a` or `(R) R(a)b = bR(ab)` over every pair.
pub fn check_restriction(m: &FiniteMonoid, side: Side, exec: Exec) -> CheckReport {
    let name = match side {
        Side::Left => "restriction-left",
        Side::Right => "restriction-right",
    };
    let report = CheckReport::new(name).count("pairs", m.len() * m.len());
    let (label, op): (&str, fn(&Partition) -> Partition) = match side {
        Side::Left => ("D", domain_projection),
        Side::Right => ("R", range_projection),
    };
    let u = match unary_table(m, exec, op) {
        Ok(t) => t,
        Err(e) => return unary_closure_failure(report, m, label, e),
    };
    let u = |x: usize| u[x] as usize;
    let mul = |x: usize, y: usize| m.mul(x, y);
    let law: Law<'_> = match side {
        Side::Left => (
            "L",
            Box::new(move |a, b| mul(a, u(b)) == mul(u(mul(a, b)), a)),
        ),
        Side::Right => (
            "R",
            Box::new(move |a, b| mul(u(a), b) == mul(b, u(mul(a, b)))),
        ),
    };
    let found = first_violation(m, exec, &[law]);
    match found {
        None => report,
        Some((label, a, b)) => report.fail(Witness::new(label, [m.element(a), m.element(b)])),
    }
}

/// The sets `T = {R(a) = 1}`, `I = {D(a) ≠ 1}` and `Tf = T ∩ I`, with the
/// closure properties they are expected to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parts {
    pub t: Vec<usize>,
    pub i: Vec<usize>,
    pub tf: Vec<usize>,
    pub t_is_submonoid: bool,
    pub i_is_right_ideal: bool,
    pub tf_is_subsemigroup: bool,
}

pub fn parts(m: &FiniteMonoid) -> Parts {
    let one = Partition::identity(m.degree());
    let in_t: Vec<bool> = m
        .elements()
        .iter()
        .map(|a| range_projection(a) == one)
        .collect();
    let in_i: Vec<bool> = m
        .elements()
        .iter()
        .map(|a| domain_projection(a) != one)
        .collect();
    let pick = |f: &dyn Fn(usize) -> bool| (0..m.len()).filter(|&x| f(x)).collect::<Vec<_>>();
    let t = pick(&|x| in_t[x]);
    let i = pick(&|x| in_i[x]);
    let tf = pick(&|x| in_t[x] && in_i[x]);
    let closed = |set: &[usize], mem: &dyn Fn(usize) -> bool| {
        set.iter().all(|&a| set.iter().all(|&b| mem(m.mul(a, b))))
    };
    Parts {
        t_is_submonoid: in_t[0] && closed(&t, &|x| in_t[x]),
        i_is_right_ideal: i
            .iter()
            .all(|&a| (0..m.generator_count()).all(|g| in_i[m.right(a, g)])),
        tf_is_subsemigroup: closed(&tf, &|x| in_t[x] && in_i[x]),
        t,
        i,
        tf,
    }
}

/// Checks (A1) `Us ⊆ sU` for all `s ∈ S` and (A2) `su = tv ⇒ u = v`.
/// On success the count `action_equals_range` records how many pairs have
/// `u^s = R(us)`.
pub fn check_action_pair(u: &[usize], s: &[usize], m: &FiniteMonoid, exec: Exec) -> CheckReport {
    let report = CheckReport::new("action-pair")
        .count("u", u.len())
        .count("s", s.len())
        .count("pairs", u.len() * s.len());
    let mut in_u = vec![false; m.len()];
    u.iter().for_each(|&x| in_u[x] = true);
    let mut in_s = vec![false; m.len()];
    s.iter().for_each(|&x| in_s[x] = true);
    if !in_u[m.identity()] {
        return report.fail(Witness::new("U lacks the identity", []));
    }
    for (set, mem, label) in [(u, &in_u, "U not closed"), (s, &in_s, "S not closed")] {
        let bad = exec.find_first(set.len(), |i| {
            set.iter()
                .find(|&&b| !mem[m.mul(set[i], b)])
                .map(|&b| (set[i], b))
        });
        if let Some((a, b)) = bad {
            return report.fail(Witness::new(label, [m.element(a), m.element(b)]));
        }
    }
    // for each s: the map sv -> v over v in U
    let right_mult: Vec<HashMap<usize, usize>> = exec.map(s.len(), |j| {
        let mut map = HashMap::new();
        for &v in u {
            map.entry(m.mul(s[j], v)).or_insert(v);
        }
        map
    });
    let a1 = exec.find_first(u.len(), |i| {
        (0..s.len())
            .find(|&j| !right_mult[j].contains_key(&m.mul(u[i], s[j])))
            .map(|j| (u[i], s[j]))
    });
    if let Some((x, y)) = a1 {
        return report.fail(Witness::new("A1", [m.element(x), m.element(y)]));
    }
    let mut seen: HashMap<usize, (usize, usize)> = HashMap::new();
    for &t in s {
        for &v in u {
            let p = m.mul(t, v);
            match seen.get(&p) {
                Some(&(t0, v0)) if v0 != v => {
                    return report.fail(Witness::new(
                        "A2",
                        [m.element(t0), m.element(v0), m.element(t), m.element(v)],
                    ));
                }
                Some(_) => {}
                None => {
                    seen.insert(p, (t, v));
                }
            }
        }
    }
    let matches: usize = exec
        .map(u.len(), |i| {
            (0..s.len())
                .filter(|&j| {
                    let us = m.mul(u[i], s[j]);
                    let v = right_mult[j][&us];
                    *m.element(v) == range_projection(m.element(us))
                })
                .count()
        })
        .into_iter()
        .sum();
    report.count("action_equals_range", matches)
}

/// Identities (G1)-(G8) for `ρ` over every element and pair.
pub fn check_grrac(m: &FiniteMonoid, exec: Exec) -> CheckReport {
    let report = CheckReport::new("grrac").count("elements", m.len());
    if let Some(i) = (0..m.len()).find(|&i| !m.element(i).classify().planar_full_domain) {
        return report.fail(Witness::new("outside PP_n^fd", [m.element(i)]));
    }
    let p = match unary_table(m, exec, |a| capped_range(a).expect("planar full domain")) {
        Ok(t) => t,
        Err(e) => return unary_closure_failure(report, m, "rho", e),
    };
    let p = |x: usize| p[x] as usize;
    let mul = |x: usize, y: usize| m.mul(x, y);
    let laws: Vec<Law<'_>> = vec![
        ("G1", Box::new(move |a, _| mul(a, p(a)) == a)),
        ("G2", Box::new(move |a, _| p(p(a)) == p(a))),
        (
            "G3",
            Box::new(move |a, b| p(mul(p(a), p(b))) == mul(p(a), p(b))),
        ),
        (
            "G4",
            Box::new(move |a, b| mul(mul(p(a), p(b)), p(a)) == mul(p(b), p(a))),
        ),
        ("G5", Box::new(move |a, _| mul(p(a), p(a)) == p(a))),
        (
            "G6",
            Box::new(move |a, b| mul(p(mul(a, b)), p(b)) == p(mul(a, b))),
        ),
        ("G7", Box::new(move |a, b| p(mul(a, b)) == p(mul(p(a), b)))),
        (
            "G8",
            Box::new(move |a, b| mul(p(a), b) == mul(b, p(mul(a, b)))),
        ),
    ];
    let report = report
        .count("pairs", m.len() * m.len())
        .count("laws", laws.len());
    match first_violation(m, exec, &laws) {
        None => report,
        Some((label, a, b)) => report.fail(Witness::new(label, [m.element(a), m.element(b)])),
    }
}

/// A left congruence on the carrier `S¹` of a [`FiniteMonoid`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftCongruence {
    class_of: Vec<u32>,
    carrier: u64,
}

fn fingerprint(m: &FiniteMonoid) -> u64 {
    let mut h = DefaultHasher::new();
    m.elements().hash(&mut h);
    h.finish()
}

impl LeftCongruence {
    pub fn equality(m: &FiniteMonoid) -> Self {
        LeftCongruence {
            class_of: (0..m.len() as u32).collect(),
            carrier: fingerprint(m),
        }
    }

    /// `θ_u`: the fibres of `s ↦ su`.
    pub fn theta(u: &Partition, m: &FiniteMonoid) -> Result<Self> {
        if u.degree() != m.degree() {
            return Err(Error::DegreeMismatch(u.degree(), m.degree()));
        }
        let mut ids: HashMap<Partition, u32> = HashMap::new();
        let class_of = m
            .elements()
            .iter()
            .map(|s| {
                let next = ids.len() as u32;
                *ids.entry(s.multiply(u)).or_insert(next)
            })
            .collect();
        Ok(LeftCongruence {
            class_of,
            carrier: fingerprint(m),
        })
    }

    /// The least left congruence containing the given index pairs.
    pub fn generated(m: &FiniteMonoid, pairs: &[(usize, usize)]) -> Self {
        let mut dsu = Dsu::new(m.len());
        let mut work: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((a, b)) = work.pop() {
            if dsu.union(a, b) {
                for g in 0..m.generator_count() {
                    work.push((m.left(a, g), m.left(b, g)));
                }
            }
        }
        LeftCongruence {
            class_of: dsu.labels(m.len()),
            carrier: fingerprint(m),
        }
    }

    /// Least equivalence containing all the given ones, re-checked for left
    /// compatibility.
    pub fn join(m: &FiniteMonoid, list: &[LeftCongruence]) -> Result<Self> {
        let carrier = fingerprint(m);
        if list
            .iter()
            .any(|c| c.carrier != carrier || c.class_of.len() != m.len())
        {
            return Err(Error::CarrierMismatch);
        }
        let mut dsu = Dsu::new(m.len());
        for c in list {
            let mut first = vec![u32::MAX; m.len()];
            for (x, &k) in c.class_of.iter().enumerate() {
                match first[k as usize] {
                    u32::MAX => first[k as usize] = x as u32,
                    f => {
                        dsu.union(f as usize, x);
                    }
                }
            }
        }
        let joined = LeftCongruence {
            class_of: dsu.labels(m.len()),
            carrier,
        };
        if !joined.is_left_compatible(m) {
            return Err(Error::Domain("join is not left compatible".into()));
        }
        Ok(joined)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> &[u32] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |&k| k as usize + 1)
    }

    /// `class(a) = class(b) ⇒ class(ga) = class(gb)` for every generator `g`.
    pub fn is_left_compatible(&self, m: &FiniteMonoid) -> bool {
        (0..m.generator_count()).all(|g| {
            let mut image = vec![u32::MAX; self.class_count()];
            (0..m.len()).all(|x| {
                let k = self.class_of[x] as usize;
                let target = self.class_of[m.left(x, g)];
                std::mem::replace(&mut image[k], target) == u32::MAX || image[k] == target
            })
        })
    }
}

/// `θ_{uv} = θ_u ∨ θ_v` for all `u, v` in `projections`.
pub fn check_theta_join(m: &FiniteMonoid, projections: &[Partition], exec: Exec) -> CheckReport {
    let report = CheckReport::new("theta-join")
        .count("carrier", m.len())
        .count("pairs", projections.len() * projections.len());
    let thetas: Vec<LeftCongruence> = exec.map(projections.len(), |i| {
        LeftCongruence::theta(&projections[i], m).expect("same degree")
    });
    let k = projections.len();
    let bad = exec.find_first(k, |i| {
        (0..k)
            .find(|&j| {
                let uv = projections[i].multiply(&projections[j]);
                let lhs = LeftCongruence::theta(&uv, m).expect("same degree");
                let rhs = LeftCongruence::join(m, &[thetas[i].clone(), thetas[j].clone()]);
                rhs.map_or(true, |r| r != lhs)
            })
            .map(|j| (i, j))
    });
    match bad {
        None => report,
        Some((i, j)) => report.fail(Witness::new("join", [&projections[i], &projections[j]])),
    }
}

/// `θ_u = (1, f)ℓ` for each listed pair `(u, f)` with `f` in the carrier.
pub fn check_theta_principal(
    m: &FiniteMonoid,
    cases: &[(Partition, Partition)],
    exec: Exec,
) -> CheckReport {
    let report = CheckReport::new("theta-principal")
        .count("carrier", m.len())
        .count("cases", cases.len());
    let bad = exec.find_first(cases.len(), |i| {
        let (u, f) = &cases[i];
        let ok = m.index_of(f).is_some_and(|fi| {
            LeftCongruence::theta(u, m).ok()
                == Some(LeftCongruence::generated(m, &[(m.identity(), fi)]))
        });
        (!ok).then_some(i)
    });
    match bad {
        None => report,
        Some(i) => report.fail(Witness::new("principal", [&cases[i].0, &cases[i].1])),
    }
}

/// For each `u` in the monoid `band` (a submonoid of the ambient
/// partitions): `θ_u` equals the join of `θ_v` over those `v` in `basis`
/// with `u ≤_R v` in `band`. The empty join is equality.
pub fn check_theta_decomposition(
    m: &FiniteMonoid,
    band: &FiniteMonoid,
    basis: &[Partition],
    exec: Exec,
) -> CheckReport {
    let report = CheckReport::new("theta-decomposition")
        .count("carrier", m.len())
        .count("elements", band.len())
        .count("basis", basis.len());
    let basis_theta: Vec<LeftCongruence> = basis
        .iter()
        .map(|v| LeftCongruence::theta(v, m).expect("same degree"))
        .collect();
    let bad = exec.find_first(band.len(), |x| {
        let u = band.element(x);
        let below: Vec<LeftCongruence> = basis
            .iter()
            .zip(&basis_theta)
            .filter(|(v, _)| {
                // u ≤_R v  ⇔  u ∈ v·band
                band.elements().iter().any(|w| v.multiply(w) == *u)
            })
            .map(|(_, t)| t.clone())
            .collect();
        let join = if below.is_empty() {
            LeftCongruence::equality(m)
        } else {
            LeftCongruence::join(m, &below).expect("same carrier")
        };
        (LeftCongruence::theta(u, m).ok() != Some(join)).then_some(x)
    });
    match bad {
        None => report,
        Some(x) => report.fail(Witness::new("decomposition", [band.element(x)])),
    }
}
