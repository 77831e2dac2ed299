//! Finite presentations: relation schemas, word evaluation, soundness,
//! exact enumeration and end-to-end verification against the concrete
//! monoids.

mod schema;
mod symbol;
mod todd_coxeter;

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

pub use schema::{Kind, Presentation, Schema, ALL_SCHEMAS};
pub use symbol::{format_word, parse_word, Symbol, Word};
pub use todd_coxeter::{enumerate_presented, table_is_consistent, EnumerationResult, Status};

use crate::ehresmann::range_projection;
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::par::Exec;
use crate::partition::{Partition, Transformation};
use crate::report::{CheckReport, Witness};

/// Symbol images, all of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorAssignment {
    pub n: usize,
    pub images: BTreeMap<Symbol, Partition>,
}

impl GeneratorAssignment {
    pub fn new(n: usize, images: BTreeMap<Symbol, Partition>) -> Result<Self> {
        if let Some(bad) = images.values().find(|a| a.degree() != n) {
            return Err(Error::DegreeMismatch(n, bad.degree()));
        }
        Ok(GeneratorAssignment { n, images })
    }

    /// Standard images of the schema's alphabet.
    pub fn standard(schema: Schema, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        let images = schema
            .alphabet(n)
            .into_iter()
            .map(|s| Ok((s, s.image(n)?)))
            .collect::<Result<_>>()?;
        Ok(GeneratorAssignment { n, images })
    }

    /// Left-to-right product of images; the empty word is the identity.
    pub fn eval(&self, w: &[Symbol]) -> Result<Partition> {
        let mut acc = Partition::identity(self.n);
        for s in w {
            let img = self
                .images
                .get(s)
                .ok_or_else(|| Error::Unknown(s.to_string()))?;
            acc = acc.multiply(img);
        }
        Ok(acc)
    }

    fn labelled(&self) -> Vec<(String, Partition)> {
        self.images
            .iter()
            .map(|(s, a)| (s.to_string(), a.clone()))
            .collect()
    }
}

pub fn standard_assignment(schema: Schema, n: usize) -> Result<GeneratorAssignment> {
    GeneratorAssignment::standard(schema, n)
}

pub fn eval_word(asg: &GeneratorAssignment, w: &[Symbol]) -> Result<Partition> {
    asg.eval(w)
}

/// Evaluate both sides of every relation; the first failing relation is
/// reported with both values.
pub fn check_soundness(p: &Presentation, asg: &GeneratorAssignment) -> CheckReport {
    let report = CheckReport::new(format!("soundness {} n={}", p.schema, p.n))
        .count("relations", p.relations.len());
    for (u, v) in &p.relations {
        let (a, b) = match (asg.eval(u), asg.eval(v)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                return report.fail(Witness {
                    label: e.to_string(),
                    elements: vec![],
                })
            }
        };
        if a != b {
            let label = format!("{} = {}", format_word(u), format_word(v));
            return report.fail(Witness::new(label, [&a, &b]));
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedWord {
    /// `c_ij = (s_2 ⋯ s_{j-1})(s_1 ⋯ s_{i-1})`.
    Conj,
    /// `c_ij⁻¹`, the reversal of `c_ij`.
    ConjInverse,
    /// `ε_ij = c_ij⁻¹ e c_ij`.
    Epsilon,
    /// `τ_ij = c_ij⁻¹ t c_ij` for `i < j`; for `i > j` this is
    /// `c_ji⁻¹ t s_1 c_ji`.
    Tau,
    /// `α_ij = h_i g_{i+1} ⋯ g_{j-1}`.
    Alpha,
    /// `β_ij = h_{j-1} f_{j-2} ⋯ f_i`.
    Beta,
}

pub fn derived_word(kind: DerivedWord, i: usize, j: usize, n: usize) -> Result<Word> {
    let (lo, hi) = (i.min(j), i.max(j));
    if lo < 1 || hi > n || lo == hi || (i > j && kind != DerivedWord::Tau) {
        return Err(Error::OutOfRange(format!("({i}, {j}) at n = {n}")));
    }
    let conj = || -> Word { (2..hi).chain(1..lo).map(Symbol::S).collect() };
    let inv = || -> Word { conj().into_iter().rev().collect() };
    let sandwich = |mid: &[Symbol]| [inv(), mid.to_vec(), conj()].concat();
    Ok(match kind {
        DerivedWord::Conj => conj(),
        DerivedWord::ConjInverse => inv(),
        DerivedWord::Epsilon => sandwich(&[Symbol::E12]),
        DerivedWord::Tau if i < j => sandwich(&[Symbol::T12]),
        DerivedWord::Tau => sandwich(&[Symbol::T12, Symbol::S(1)]),
        DerivedWord::Alpha => std::iter::once(Symbol::H(i))
            .chain((i + 1..j).map(Symbol::G))
            .collect(),
        DerivedWord::Beta => std::iter::once(Symbol::H(j - 1))
            .chain((i..j - 1).rev().map(Symbol::F))
            .collect(),
    })
}

/// Rewrite a word over `e_ij, t_ij` into `s_i, e, t`.
pub fn hat(w: &[Symbol], n: usize) -> Result<Word> {
    let mut out = Vec::new();
    for &s in w {
        match s {
            Symbol::E(i, j) => out.extend(derived_word(DerivedWord::Epsilon, i, j, n)?),
            Symbol::T(i, j) => out.extend(derived_word(DerivedWord::Tau, i, j, n)?),
            other => return Err(Error::Unknown(other.to_string())),
        }
    }
    Ok(out)
}

/// Rewrite a word over `h_ij` into `h_i, g_i`.
pub fn lift_caps(w: &[Symbol], n: usize) -> Result<Word> {
    let mut out = Vec::new();
    for &s in w {
        match s {
            Symbol::Cap(i, j) => out.extend(derived_word(DerivedWord::Alpha, i, j, n)?),
            other => return Err(Error::Unknown(other.to_string())),
        }
    }
    Ok(out)
}

/// Soundness, then surjectivity onto the concrete target, then equality of
/// the presented and concrete sizes. Budget exhaustion is an error, not a
/// failed verdict.
pub fn verify_presentation(
    schema: Schema,
    n: usize,
    budget: usize,
    exec: Exec,
) -> Result<CheckReport> {
    let p = Presentation::schema(schema, n)?;
    let asg = GeneratorAssignment::standard(schema, n)?;
    let mut report = CheckReport::new(format!("presentation {schema} n={n}"))
        .count("alphabet", p.alphabet.len())
        .count("relations", p.relations.len());

    let sound = check_soundness(&p, &asg);
    if !sound.holds {
        report.witness = sound.witness;
        report.holds = false;
        return Ok(report);
    }

    let concrete = schema.target().concrete(n, exec);
    report = report.count("concrete_size", concrete.len());
    let closure = FiniteMonoid::closure(n, asg.labelled(), budget)?;
    let image: Vec<&Partition> = match schema.kind() {
        Kind::Monoid => closure.elements().iter().collect(),
        Kind::Semigroup => closure
            .semigroup_elements()
            .into_iter()
            .map(|i| closure.element(i))
            .collect(),
    };
    report = report.count("image_size", image.len());
    let target: HashSet<&Partition> = concrete.iter().collect();
    let got: HashSet<&Partition> = image.iter().copied().collect();
    if got != target {
        let mut stray: Vec<&Partition> = got.symmetric_difference(&target).copied().collect();
        stray.sort();
        return Ok(report.fail(Witness::new(
            "image differs from target",
            stray.into_iter().take(1),
        )));
    }

    let result = enumerate_presented(&p, budget);
    if result.status == Status::Exhausted {
        return Err(Error::BudgetExhausted(result.nodes_defined));
    }
    report = report
        .count("presented_size", result.size)
        .count("nodes_defined", result.nodes_defined);
    if result.size != concrete.len() {
        let label = format!(
            "presented size {} != concrete size {}",
            result.size,
            concrete.len()
        );
        return Ok(report.fail(Witness {
            label,
            elements: vec![],
        }));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorMode {
    /// `a = b R(a)` with `b ∈ T_n`, for full-domain `a`.
    TnEn,
    /// `a = f d_{coker a}` with `f ∈ O_n`, for planar full-domain `a`.
    OnDn,
}

/// Split `a` into (left, right) and confirm the product.
pub fn factor_product(a: &Partition, mode: FactorMode) -> Result<(Partition, Partition)> {
    let m = a.classify();
    let n = a.degree();
    let (ok, set) = match mode {
        FactorMode::TnEn => (m.full_domain, "P_n^fd"),
        FactorMode::OnDn => (m.planar_full_domain, "PP_n^fd"),
    };
    if !ok {
        return Err(Error::NotMember {
            element: a.to_string(),
            set: set.into(),
        });
    }
    let mut image = vec![0; n];
    for (upper, lower) in a.transversals() {
        for x in upper {
            image[x - 1] = lower[0];
        }
    }
    let left = Partition::from_transformation(&Transformation::new(image)?);
    let right = match mode {
        FactorMode::TnEn => range_projection(a),
        FactorMode::OnDn => a.cokernel().d_element()?,
    };
    debug_assert!(mode == FactorMode::TnEn || left.classify().order_preserving);
    if left.multiply(&right) != *a {
        return Err(Error::Domain(format!(
            "factorisation of {a} does not multiply back"
        )));
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let d3 = Presentation::schema(Schema::Dn, 3).unwrap();
        assert_eq!(d3.alphabet.len(), 3);
        let r = enumerate_presented(&d3, 1000);
        assert_eq!((r.status, r.size), (Status::Complete, 5));
        assert!(table_is_consistent(&d3, &r.table));
        let zo = Presentation::schema(Schema::PlanarZO, 2).unwrap();
        assert_eq!(enumerate_presented(&zo, 1000).size, 4);
        let trivial = Presentation {
            kind: Kind::Monoid,
            alphabet: vec![Symbol::S(1)],
            relations: vec![(vec![Symbol::S(1)], vec![])],
            schema: "trivial".into(),
            n: 2,
        };
        assert_eq!(enumerate_presented(&trivial, 10).size, 1);
    }

    #[test]
    fn derived_basics() {
        assert!(derived_word(DerivedWord::Conj, 1, 2, 3).unwrap().is_empty());
        assert_eq!(
            derived_word(DerivedWord::Epsilon, 1, 2, 3).unwrap(),
            vec![Symbol::E12]
        );
        assert_eq!(
            derived_word(DerivedWord::Alpha, 2, 3, 3).unwrap(),
            vec![Symbol::H(2)]
        );
        assert_eq!(
            derived_word(DerivedWord::Beta, 2, 3, 3).unwrap(),
            vec![Symbol::H(2)]
        );
    }
}
