//! Batch drivers behind the command-line tool. Each target maps onto one
//! library operation; nothing here adds algebra of its own.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{self, Family};
use crate::ehresmann::{
    check_action_pair, check_ehresmann, check_grrac, check_restriction, check_theta_decomposition,
    check_theta_join, check_theta_principal,
};
use crate::equivalence::{EqFilter, Equivalence};
use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, Side, DEFAULT_BUDGET};
use crate::par::Exec;
use crate::partition::Partition;
use crate::presentation::{verify_presentation, Schema, ALL_SCHEMAS};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Presentation(Schema),
    Ehresmann,
    Restriction,
    ActionPair,
    Grrac,
    ThetaLaws,
}

pub const TARGET_NAMES: [&str; 15] = [
    "sing-xr",
    "full-yq",
    "planar-zo",
    "dn",
    "en",
    "sing-tn",
    "tn",
    "fn",
    "on",
    "planar-intermediate",
    "ehresmann",
    "restriction",
    "action-pair",
    "grrac",
    "theta-laws",
];

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ehresmann" => Target::Ehresmann,
            "restriction" => Target::Restriction,
            "action-pair" => Target::ActionPair,
            "grrac" => Target::Grrac,
            "theta-laws" => Target::ThetaLaws,
            _ => Target::Presentation(s.parse()?),
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Presentation(s) => write!(f, "{s}"),
            Target::Ehresmann => f.write_str("ehresmann"),
            Target::Restriction => f.write_str("restriction"),
            Target::ActionPair => f.write_str("action-pair"),
            Target::Grrac => f.write_str("grrac"),
            Target::ThetaLaws => f.write_str("theta-laws"),
        }
    }
}

/// Which (U, S) pair, and inside which ambient monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSelector {
    /// (E_n, T_n) in P_n^fd.
    EnTn,
    /// (E_n, Sing T_n) in P_n^fd.
    EnSingTn,
    /// (D_n, O_n) in PP_n^fd.
    DnOn,
    /// (PE_n, PT_n) in PP_n^fd.
    PenPtn,
}

impl FromStr for PairSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "en-tn" => Ok(PairSelector::EnTn),
            "en-sing-tn" => Ok(PairSelector::EnSingTn),
            "dn-on" => Ok(PairSelector::DnOn),
            "pen-ptn" => Ok(PairSelector::PenPtn),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub target: Target,
    /// Monoid or pair selector; each target has its own default.
    pub monoid: Option<String>,
    pub budget: usize,
    pub seed: u64,
    pub side: Side,
    pub exec: Exec,
}

impl RunConfig {
    pub fn new(target: Target, n: usize) -> Self {
        RunConfig {
            n,
            target,
            monoid: None,
            budget: DEFAULT_BUDGET,
            seed: 0,
            side: Side::Right,
            exec: Exec::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::Domain("budget must be at least 1".into()));
        }
        if self.n < 2 && matches!(self.target, Target::Presentation(_)) {
            return Err(Error::DegreeTooSmall(self.n));
        }
        Ok(())
    }

    fn family_or(&self, default: Family) -> Result<Family> {
        self.monoid.as_deref().map_or(Ok(default), str::parse)
    }
}

/// The monoid closure of a family's standard generators, or of all its
/// elements where it has no standard generating set.
pub fn monoid_of(family: Family, n: usize, budget: usize, exec: Exec) -> Result<FiniteMonoid> {
    match family.generators(n) {
        Some(gens) => FiniteMonoid::closure(n, gens, budget),
        None => {
            let gens = family
                .concrete(n, exec)
                .into_iter()
                .enumerate()
                .map(|(i, a)| (format!("x_{i}"), a))
                .collect();
            FiniteMonoid::closure(n, gens, budget)
        }
    }
}

/// Run one verification target. `Err(BudgetExhausted)` means inconclusive.
pub fn verify(cfg: &RunConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let (n, budget, exec) = (cfg.n, cfg.budget, cfg.exec);
    let report = match cfg.target {
        Target::Presentation(s) => verify_presentation(s, n, budget, exec)?,
        Target::Ehresmann => {
            let family = cfg.family_or(Family::Pn)?;
            check_ehresmann(&monoid_of(family, n, budget, exec)?, exec)
        }
        Target::Restriction => {
            let family = cfg.family_or(Family::PnFd)?;
            check_restriction(&monoid_of(family, n, budget, exec)?, cfg.side, exec)
        }
        Target::ActionPair => {
            let selector = cfg
                .monoid
                .as_deref()
                .map_or(Ok(PairSelector::EnTn), str::parse)?;
            action_pair(selector, n, budget, exec)?
        }
        Target::Grrac => check_grrac(&monoid_of(Family::PPnFd, n, budget, exec)?, exec),
        Target::ThetaLaws => theta_laws(n, budget, exec)?,
    };
    let mut report = report;
    report.name = format!("{} n={n}", cfg.target);
    Ok(report)
}

pub fn action_pair(sel: PairSelector, n: usize, budget: usize, exec: Exec) -> Result<CheckReport> {
    let ambient = match sel {
        PairSelector::EnTn | PairSelector::EnSingTn => Family::PnFd,
        PairSelector::DnOn | PairSelector::PenPtn => Family::PPnFd,
    };
    let m = monoid_of(ambient, n, budget, exec)?;
    let (u, s) = match sel {
        PairSelector::EnTn => (Family::En, Family::Tn),
        PairSelector::EnSingTn => (Family::En, Family::SingTn),
        PairSelector::DnOn => (Family::Dn, Family::On),
        PairSelector::PenPtn => (Family::PEn, Family::Tn),
    };
    let u = m.select(|a| u.contains(a));
    let s = m.select(|a| s.contains(a));
    Ok(check_action_pair(&u, &s, &m, exec))
}

/// Collect sub-reports into one: counts are prefixed by the sub-report
/// name, and the first failing sub-report supplies the witness.
fn combine(name: &str, parts: Vec<CheckReport>) -> CheckReport {
    let mut out = CheckReport::new(name);
    for p in parts {
        for (k, v) in &p.counts {
            out.counts.insert(format!("{}.{k}", p.name), *v);
        }
        if !p.holds && out.holds {
            out.holds = false;
            out.witness = p.witness.map(|mut w| {
                w.label = format!("{}: {}", p.name, w.label);
                w
            });
        }
    }
    out
}

/// The left-congruence laws at degree `n`: joins over E_n for S = T_n and
/// Sing T_n, the principal generators for `ē_ij` and `d_μ`, and the
/// decomposition over the adjacent caps.
pub fn theta_laws(n: usize, budget: usize, exec: Exec) -> Result<CheckReport> {
    let en = Family::En.concrete(n, exec);
    let tn = monoid_of(Family::Tn, n, budget, exec)?;
    let sing = monoid_of(Family::SingTn, n, budget, exec)?;
    let on = monoid_of(Family::On, n, budget, exec)?;
    let dn = monoid_of(Family::Dn, n, budget, exec)?;

    let mut join_t = check_theta_join(&tn, &en, exec);
    join_t.name = "join-tn".into();
    let mut join_s = check_theta_join(&sing, &en, exec);
    join_s.name = "join-sing-tn".into();

    let atoms: Vec<(Partition, Partition)> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| (catalog::projection(n, i, j), catalog::merge(n, i, j)))
        .collect();
    let mut principal_e = check_theta_principal(&tn, &atoms, exec);
    principal_e.name = "principal-en".into();

    let caps = Equivalence::enumerate(n, EqFilter::Planar)
        .map(|mu| {
            let u = mu.d_element()?;
            let f = u.kernel().collapse_to_min()?;
            Ok((u, Partition::from_transformation(&f)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut principal_d = check_theta_principal(&on, &caps, exec);
    principal_d.name = "principal-dn".into();

    let basis: Vec<Partition> = (1..n).map(|i| catalog::cap(n, i, i + 1)).collect();
    let mut decomposition = check_theta_decomposition(&on, &dn, &basis, exec);
    decomposition.name = "decomposition".into();

    Ok(combine(
        "theta-laws",
        vec![join_t, join_s, principal_e, principal_d, decomposition],
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub monoid: String,
    pub n: usize,
    pub size: usize,
    pub closed_form: Option<u128>,
    /// Size of the closure of the standard generators, where there are any.
    pub generated_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

/// Count a family, cross-checking the closed form and the generated
/// closure when they exist.
pub fn enumerate(
    family: Family,
    n: usize,
    budget: usize,
    exec: Exec,
    list: bool,
) -> Result<EnumerationReport> {
    let elements = family.concrete(n, exec);
    let closed_form = family.closed_form(n);
    if let Some(c) = closed_form {
        if c != elements.len() as u128 {
            return Err(Error::Domain(format!(
                "{family} at n = {n}: {} elements, closed form {c}",
                elements.len()
            )));
        }
    }
    let generated_size = match family.generators(n) {
        Some(_) => {
            let m = family.closure(n, budget)?;
            Some(if family.is_semigroup() {
                m.semigroup_elements().len()
            } else {
                m.len()
            })
        }
        None => None,
    };
    Ok(EnumerationReport {
        monoid: family.name().to_string(),
        n,
        size: elements.len(),
        closed_form,
        generated_size,
        elements: list.then(|| elements.iter().map(|a| a.to_string()).collect()),
    })
}

/// The fixed battery used for reproducibility checks: every target at a
/// small degree.
pub fn standard_suite(exec: Exec) -> Vec<RunConfig> {
    let mut out: Vec<RunConfig> = ALL_SCHEMAS
        .iter()
        .map(|&s| RunConfig {
            exec,
            ..RunConfig::new(Target::Presentation(s), 3)
        })
        .collect();
    out.push(RunConfig {
        exec,
        ..RunConfig::new(Target::Ehresmann, 2)
    });
    for side in [Side::Left, Side::Right] {
        out.push(RunConfig {
            exec,
            side,
            ..RunConfig::new(Target::Restriction, 3)
        });
    }
    for sel in ["en-tn", "en-sing-tn", "dn-on", "pen-ptn"] {
        out.push(RunConfig {
            exec,
            monoid: Some(sel.into()),
            ..RunConfig::new(Target::ActionPair, 3)
        });
    }
    out.push(RunConfig {
        exec,
        ..RunConfig::new(Target::Grrac, 3)
    });
    out.push(RunConfig {
        exec,
        ..RunConfig::new(Target::ThetaLaws, 3)
    });
    out
}

/// Run a batch and serialise every report into one JSON array.
pub fn run_suite(configs: &[RunConfig]) -> Result<String> {
    let reports = configs.iter().map(verify).collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_string_pretty(&reports).expect("reports serialize"))
}
