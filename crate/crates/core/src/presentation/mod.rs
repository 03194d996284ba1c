//! Presentations of `Q_{C2}` and `Q_{C3}` by generators `e, ⊗, ⊠` and relations.
//!
//! Canonical trees are the normal forms of a rewriting system that removes
//! `e`-graftings and rotates right-grafted binary nodes of the same shape to
//! the left. For `C2` the canonical trees biject with separable permutations;
//! for `C3` a canonical tree is read back off the two matrices of its value by
//! peeling uncovered nodes.

mod canonical;
mod recovery;
mod schroeder;
mod separable;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_operad::{parse_tree, OpTree, Relation, Signature};

pub use canonical::{is_canonical, rewrite_steps};
pub use recovery::{find_uncovered_patterns, recover_tree_c3, uncompose, EssentialNode};
pub use schroeder::{schroeder, SchroederTable};
pub use separable::{c2_separable_to_tree, c2_tree_to_separable};
pub use verify::{verify_presentation, ArityReport, Counterexample, VerifyOptions, VerifyReport};

/// The two groups for which a presentation is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Presented {
    C2,
    C3,
}

impl Presented {
    pub const ALL: [Presented; 2] = [Presented::C2, Presented::C3];

    pub fn signature(self) -> Signature {
        match self {
            Presented::C2 => Signature::c2(),
            Presented::C3 => Signature::c3(),
        }
    }

    pub fn relations(self) -> Vec<Relation> {
        match self {
            Presented::C2 => relations_c2(),
            Presented::C3 => relations_c3(),
        }
    }

    /// Rewrites a primitive tree to the canonical tree of its class.
    pub fn canonicalize(self, t: &OpTree) -> Result<OpTree> {
        t.validate(&self.signature())?;
        if !t.is_primitive() {
            return Err(Error::NonPrimitiveTree(t.to_string()));
        }
        Ok(OpTree::primitive(canonical::canonical_node(t.body())))
    }

    /// Every canonical tree of arity `n`, in a fixed order.
    pub fn enumerate_canonical(self, n: usize) -> Vec<OpTree> {
        canonical::Enumerator::new(&self.signature()).level(n).iter().cloned().map(OpTree::primitive).collect()
    }

    /// Number of canonical trees of arity `n`, by enumeration.
    pub fn canonical_count(self, n: usize) -> usize {
        canonical::Enumerator::new(&self.signature()).level(n).len()
    }
}

impl fmt::Display for Presented {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Presented::C2 => "c2",
            Presented::C3 => "c3",
        })
    }
}

impl FromStr for Presented {
    type Err = Error;

    fn from_str(s: &str) -> Result<Presented> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c2" | "cyclic:2" => Ok(Presented::C2),
            "c3" | "cyclic:3" => Ok(Presented::C3),
            other => Err(Error::Unsupported(format!("no presentation is known for `{other}`; use c2 or c3"))),
        }
    }
}

pub fn canonicalize_c2(t: &OpTree) -> Result<OpTree> {
    Presented::C2.canonicalize(t)
}

pub fn canonicalize_c3(t: &OpTree) -> Result<OpTree> {
    Presented::C3.canonicalize(t)
}

pub fn enumerate_canonical(p: Presented, n: usize) -> Vec<OpTree> {
    p.enumerate_canonical(n)
}

fn rel(name: &str, lhs: &str, rhs: &str) -> Relation {
    Relation::new(name, parse_tree(lhs).expect("relation text"), parse_tree(rhs).expect("relation text")).expect("equal arity")
}

/// `γ(◇; ◇, 𝟙) = γ(◇; 𝟙, ◇)` for a binary tree `◇`.
fn associativity(name: &str, diamond: &OpTree) -> Relation {
    let lhs = diamond.gamma(&[diamond.clone(), OpTree::unit()]).expect("binary");
    let rhs = diamond.gamma(&[OpTree::unit(), diamond.clone()]).expect("binary");
    Relation::new(name, lhs, rhs).expect("equal arity")
}

/// Unit, associativity and group-action relations for `C2`.
pub fn relations_c2() -> Vec<Relation> {
    let mut out = vec![
        rel("unit ⊠ right", "⊠(□,e)", "□"),
        rel("unit ⊠ left", "⊠(e,□)", "□"),
        rel("unit ⊗ right", "⊗(□,e)", "□"),
        rel("unit ⊗ left", "⊗(e,□)", "□"),
    ];
    out.push(associativity("assoc ⊗", &parse_tree("⊗(□,□)").expect("tree")));
    out.push(associativity("assoc ⊠", &parse_tree("⊠(□,□)").expect("tree")));
    out.extend([
        rel("action ⊠", "g·⊠(□,□)", "⊠(□,□)·(1 2)"),
        rel("action ⊗", "g·⊗(□,□)", "⊗(□,□)"),
        rel("action e", "g·e", "e"),
    ]);
    out
}

/// Reduction, associativity for the four primitive binary trees, and group-action relations for `C3`.
pub fn relations_c3() -> Vec<Relation> {
    let mut out = vec![
        rel("reduce ⊠(□,e,e)", "⊠(□,e,e)", "□"),
        rel("reduce ⊠(e,□,e)", "⊠(e,□,e)", "□"),
        rel("reduce ⊠(e,e,□)", "⊠(e,e,□)", "□"),
        rel("reduce ⊗(□,e)", "⊗(□,e)", "□"),
        rel("reduce ⊗(e,□)", "⊗(e,□)", "□"),
    ];
    for node in EssentialNode::BINARY {
        out.push(associativity(&format!("assoc {node}"), &node.tree()));
    }
    out.extend([
        rel("action ⊠", "g·⊠(□,□,□)", "⊠(□,□,□)·(1 2 3)"),
        rel("action ⊗", "g·⊗(□,□)", "⊗(□,□)"),
        rel("action e", "g·e", "e"),
    ]);
    out
}
