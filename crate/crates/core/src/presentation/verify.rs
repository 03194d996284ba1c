//! Mechanical checks of a presentation at small arity.
//!
//! Soundness: each relation holds under `φ`. Canonical forms: enumeration
//! matches normalization and `φ` is injective on canonical trees. Image: the
//! canonical values are exactly the primitive part of `Q_G` found by
//! saturating the norm generators. Completeness: the congruence closure of the
//! relations on a bounded universe of primitive trees has one canonical tree
//! per class. The first failure is reported as a counterexample.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{is_canonical, recover_tree_c3, Presented};
use crate::error::Result;
use crate::free_operad::{congruence_classes, enumerate_trees, CongruenceOptions, OpTree, UniverseRule};
use crate::norms::{generated_suboperad, qg_generators, DEFAULT_SATURATION_CAP};
use crate::perm::{all_perms, is_separable, Perm};
use crate::pg_operad::PGElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_arity: usize,
    /// Highest arity for the congruence-closure oracle.
    pub oracle_arity: usize,
    /// Highest arity for the saturation of the norm generators.
    pub saturation_arity: usize,
    /// Unreduced-node bound of the oracle universe.
    pub max_unreduced: usize,
}

impl VerifyOptions {
    /// Defaults sized to finish in seconds.
    pub fn quick(p: Presented, max_arity: usize) -> VerifyOptions {
        let (oracle, saturation) = match p {
            Presented::C2 => (4, 5),
            Presented::C3 => (3, 4),
        };
        VerifyOptions {
            max_arity,
            oracle_arity: oracle.min(max_arity),
            saturation_arity: saturation.min(max_arity),
            max_unreduced: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ArityReport {
    pub arity: usize,
    pub canonical_trees: usize,
    pub distinct_values: usize,
    pub saturation_primitive: Option<usize>,
    pub oracle_universe: Option<usize>,
    pub oracle_classes: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    UnsoundRelation { relation: String, lhs: String, rhs: String, lhs_value: PGElement, rhs_value: PGElement },
    NotNormalForm { tree: String, canonicalized: String },
    Collision { arity: usize, first: String, second: String, value: PGElement },
    MissingFromImage { arity: usize, element: PGElement },
    OutsideSuboperad { arity: usize, tree: String, value: PGElement },
    SeparableMismatch { arity: usize, permutation: Perm, separable: bool, hit: bool },
    RecoveryMismatch { tree: String, recovered: String },
    ClassMismatch { arity: usize, canonical_in_class: Vec<String>, class_sample: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub group: Presented,
    pub relations: Vec<String>,
    pub arities: Vec<ArityReport>,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn verified(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn verify_presentation(p: Presented, opts: &VerifyOptions) -> Result<VerifyReport> {
    let sig = p.signature();
    let relations = p.relations();
    let mut report = VerifyReport {
        group: p,
        relations: relations.iter().map(|r| format!("{}: {} = {}", r.name, r.lhs, r.rhs)).collect(),
        arities: Vec::new(),
        counterexample: None,
    };
    for r in &relations {
        let (l, rv) = (r.lhs.evaluate(&sig)?, r.rhs.evaluate(&sig)?);
        if l != rv {
            report.counterexample = Some(Counterexample::UnsoundRelation {
                relation: r.name.clone(),
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
                lhs_value: l,
                rhs_value: rv,
            });
            return Ok(report);
        }
    }
    let saturation = if opts.saturation_arity > 0 {
        Some(generated_suboperad(&qg_generators(sig.group())?, opts.saturation_arity, DEFAULT_SATURATION_CAP)?)
    } else {
        None
    };

    for n in 0..=opts.max_arity {
        let trees = p.enumerate_canonical(n);
        let mut by_value: HashMap<Vec<Perm>, &OpTree> = HashMap::new();
        let mut row = ArityReport {
            arity: n,
            canonical_trees: trees.len(),
            distinct_values: 0,
            saturation_primitive: None,
            oracle_universe: None,
            oracle_classes: None,
        };
        for t in &trees {
            let canon = p.canonicalize(t)?;
            if &canon != t || !is_canonical(t) {
                report.counterexample = Some(Counterexample::NotNormalForm { tree: t.to_string(), canonicalized: canon.to_string() });
                return Ok(report);
            }
            let value = t.evaluate(&sig)?;
            if let Some(first) = by_value.insert(value.values().to_vec(), t) {
                report.counterexample =
                    Some(Counterexample::Collision { arity: n, first: first.to_string(), second: t.to_string(), value });
                return Ok(report);
            }
            if p == Presented::C3 {
                let back = recover_tree_c3(&value).map(|r| r.to_string()).unwrap_or_else(|e| e.to_string());
                if back != t.to_string() {
                    report.counterexample = Some(Counterexample::RecoveryMismatch { tree: t.to_string(), recovered: back });
                    return Ok(report);
                }
            }
            if let Some(sat) = saturation.as_ref().filter(|_| n <= opts.saturation_arity) {
                if !sat.contains(&value) {
                    report.counterexample = Some(Counterexample::OutsideSuboperad { arity: n, tree: t.to_string(), value });
                    return Ok(report);
                }
            }
        }
        row.distinct_values = by_value.len();
        if let Some(sat) = saturation.as_ref().filter(|_| n <= opts.saturation_arity) {
            row.saturation_primitive = Some(sat.primitive_count(n));
            if let Some(missing) = sat.primitive(n).iter().find(|f| !by_value.contains_key(f.values())) {
                report.counterexample = Some(Counterexample::MissingFromImage { arity: n, element: missing.clone() });
                return Ok(report);
            }
        }
        if p == Presented::C2 && n <= 8 {
            let at_g: HashSet<&Perm> = by_value.keys().map(|v| &v[1]).collect();
            for sigma in all_perms(n) {
                let separable = n == 0 || is_separable(&sigma)?;
                let hit = at_g.contains(&sigma);
                if separable != hit {
                    report.counterexample = Some(Counterexample::SeparableMismatch { arity: n, permutation: sigma, separable, hit });
                    return Ok(report);
                }
            }
        }
        if n <= opts.oracle_arity {
            let seeds = enumerate_trees(&sig, &UniverseRule::primitive(n, opts.max_unreduced))?;
            let copts = CongruenceOptions { max_unreduced: opts.max_unreduced, ..CongruenceOptions::default() };
            let partition = congruence_classes(&sig, &seeds, &relations, copts)?;
            let mut canonical_per_class: Vec<Vec<String>> = vec![Vec::new(); partition.class_count()];
            let mut sample: Vec<Option<String>> = vec![None; partition.class_count()];
            for (t, &c) in partition.trees.iter().zip(&partition.class_of) {
                if is_canonical(t) {
                    canonical_per_class[c].push(t.to_string());
                }
                sample[c].get_or_insert_with(|| t.to_string());
            }
            row.oracle_universe = Some(partition.trees.len());
            row.oracle_classes = Some(partition.class_count());
            if let Some(c) = canonical_per_class.iter().position(|v| v.len() != 1) {
                report.counterexample = Some(Counterexample::ClassMismatch {
                    arity: n,
                    canonical_in_class: canonical_per_class[c].clone(),
                    class_sample: sample[c].clone().unwrap_or_default(),
                });
                return Ok(report);
            }
        }
        report.arities.push(row);
    }
    Ok(report)
}
