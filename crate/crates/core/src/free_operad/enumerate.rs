//! Bounded enumeration of trees of a fixed arity.

use std::collections::HashMap;
use std::rc::Rc;

use itertools::Itertools;

use super::{Node, OpTree, Signature, Symbol};
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::perm::all_perms;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelMode {
    /// Identity group labels and identity root.
    #[default]
    Primitive,
    /// Every assignment of group labels and every root permutation.
    Labeled,
}

/// Which trees of a given arity to enumerate. At least one bound must be set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct UniverseRule {
    pub arity: usize,
    /// Upper bound on [`Node::unreduced_count`].
    pub max_unreduced: Option<usize>,
    /// Upper bound on [`Node::node_count`].
    pub max_nodes: Option<usize>,
    pub labels: LabelMode,
}

impl UniverseRule {
    pub fn primitive(arity: usize, max_unreduced: usize) -> UniverseRule {
        UniverseRule { arity, max_unreduced: Some(max_unreduced), ..UniverseRule::default() }
    }

    pub fn admits(&self, t: &OpTree) -> bool {
        t.arity() == self.arity
            && self.max_unreduced.map_or(true, |u| t.body().unreduced_count() <= u)
            && self.max_nodes.map_or(true, |k| t.body().node_count() <= k)
            && (self.labels == LabelMode::Labeled || t.is_primitive())
    }
}

struct Generator {
    symbols: Vec<(Symbol, usize)>,
    memo: HashMap<(usize, usize), Rc<Vec<Node>>>,
    by_nodes: HashMap<(usize, usize), Rc<Vec<Node>>>,
}

impl Generator {
    /// Bodies with identity labels, arity `a` and exactly `u` unreduced nodes.
    fn bodies(&mut self, a: usize, u: usize) -> Rc<Vec<Node>> {
        if let Some(v) = self.memo.get(&(a, u)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if (a, u) == (0, 0) {
            out.push(Node::e());
        }
        if (a, u) == (1, 0) {
            out.push(Node::Leaf);
        }
        for (symbol, k) in self.symbols.clone() {
            if k == 0 {
                continue;
            }
            for spec in child_specs(a, u, k) {
                let live = spec.iter().filter(|&&s| s != (0, 0)).count();
                let own = usize::from(live < 2);
                if spec.iter().map(|s| s.1).sum::<usize>() + own != u {
                    continue;
                }
                let pools: Vec<Rc<Vec<Node>>> = spec.iter().map(|&(ca, cu)| self.bodies(ca, cu)).collect();
                if pools.iter().any(|p| p.is_empty()) {
                    continue;
                }
                for children in pools.iter().map(|p| p.iter()).multi_cartesian_product() {
                    out.push(Node::op(symbol, children.into_iter().cloned().collect()));
                }
            }
        }
        let out = Rc::new(out);
        self.memo.insert((a, u), out.clone());
        out
    }

    /// Bodies with identity labels, arity `a` and exactly `k` nodes.
    fn bodies_with_nodes(&mut self, a: usize, k: usize) -> Rc<Vec<Node>> {
        if let Some(v) = self.by_nodes.get(&(a, k)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if k == 0 && a == 1 {
            out.push(Node::Leaf);
        }
        if k == 1 && a == 0 {
            out.push(Node::e());
        }
        if k >= 1 {
            for (symbol, m) in self.symbols.clone() {
                if m == 0 {
                    continue;
                }
                for arities in splits(a, m) {
                    for counts in splits(k - 1, m) {
                        let pools: Vec<Rc<Vec<Node>>> =
                            arities.iter().zip(&counts).map(|(&ca, &ck)| self.bodies_with_nodes(ca, ck)).collect();
                        if pools.iter().any(|p| p.is_empty()) {
                            continue;
                        }
                        for children in pools.iter().map(|p| p.iter()).multi_cartesian_product() {
                            out.push(Node::op(symbol, children.into_iter().cloned().collect()));
                        }
                    }
                }
            }
        }
        let out = Rc::new(out);
        self.by_nodes.insert((a, k), out.clone());
        out
    }
}

/// Ordered ways to write `total` as a sum of `parts` nonnegative integers.
fn splits(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=total)
        .flat_map(|first| {
            splits(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every `k`-tuple of `(arity, unreduced)` pairs with arities summing to `a` and unreduced counts summing to at most `u`.
fn child_specs(a: usize, u: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(a: usize, u: usize, k: usize, top: (usize, usize), cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if k == 0 {
            if a == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for ca in 0..=a {
            for cu in 0..=u {
                // a child as large as its parent forces the parent to be unreduced, overshooting u
                if (ca, cu) == top {
                    continue;
                }
                cur.push((ca, cu));
                rec(a - ca, u - cu, k - 1, top, cur, out);
                cur.pop();
            }
        }
    }
    rec(a, u, k, (a, u), &mut cur, &mut out);
    out
}

/// Enumerates every tree admitted by `rule`, without duplicates, in a deterministic order.
pub fn enumerate_trees(sig: &Signature, rule: &UniverseRule) -> Result<Vec<OpTree>> {
    let mut gen = Generator {
        symbols: [Symbol::Tensor, Symbol::Box].iter().map(|&s| (s, sig.symbol_arity(s))).collect(),
        memo: HashMap::new(),
        by_nodes: HashMap::new(),
    };
    let mut bodies = Vec::new();
    match (rule.max_unreduced, rule.max_nodes) {
        (max_u, Some(max_k)) => {
            for k in 0..=max_k {
                let level = gen.bodies_with_nodes(rule.arity, k);
                bodies.extend(level.iter().filter(|b| max_u.map_or(true, |u| b.unreduced_count() <= u)).cloned());
            }
        }
        (Some(max_u), None) => {
            for u in 0..=max_u {
                bodies.extend(gen.bodies(rule.arity, u).iter().cloned());
            }
        }
        (None, None) => {
            return Err(Error::UnboundedUniverse(format!(
                "arity {} has infinitely many trees; set max_unreduced or max_nodes",
                rule.arity
            )))
        }
    }
    Ok(match rule.labels {
        LabelMode::Primitive => bodies.into_iter().map(OpTree::primitive).collect(),
        LabelMode::Labeled => {
            let order = sig.group().order();
            let roots: Vec<_> = all_perms(rule.arity).collect();
            let mut out = Vec::new();
            for b in bodies {
                for labeled in relabelings(&b, order) {
                    for r in &roots {
                        out.push(OpTree::new(labeled.clone(), r.clone()).expect("arity matches"));
                    }
                }
            }
            out
        }
    })
}

fn relabelings(node: &Node, order: usize) -> Vec<Node> {
    match node {
        Node::Leaf => vec![Node::Leaf],
        Node::Op { symbol, children, .. } => {
            let child_options: Vec<Vec<Node>> = children.iter().map(|c| relabelings(c, order)).collect();
            let mut out = Vec::new();
            for g in 0..order {
                if children.is_empty() {
                    out.push(Node::Op { g: GroupElem(g), symbol: *symbol, children: Vec::new() });
                    continue;
                }
                for combo in child_options.iter().map(|v| v.iter()).multi_cartesian_product() {
                    out.push(Node::Op { g: GroupElem(g), symbol: *symbol, children: combo.into_iter().cloned().collect() });
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn arity_zero_reduced() {
        let t = enumerate_trees(&Signature::c2(), &UniverseRule::primitive(0, 0)).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].body().is_e());
    }

    #[test]
    fn c2_binary_reduced() {
        let t = enumerate_trees(&Signature::c2(), &UniverseRule::primitive(2, 0)).unwrap();
        let s: Vec<String> = t.iter().map(ToString::to_string).collect();
        assert_eq!(s, vec!["⊗(□,□)", "⊠(□,□)"]);
    }

    #[test]
    fn unbounded_rejected() {
        let rule = UniverseRule { arity: 2, ..UniverseRule::default() };
        assert!(matches!(enumerate_trees(&Signature::c2(), &rule), Err(Error::UnboundedUniverse(_))));
    }

    #[test]
    fn node_and_unreduced_bounds_agree() {
        let sig = Signature::c3();
        for arity in 0..=3 {
            let by_nodes = enumerate_trees(&sig, &UniverseRule { arity, max_nodes: Some(4), ..UniverseRule::default() }).unwrap();
            let set: HashSet<_> = by_nodes.iter().cloned().collect();
            assert_eq!(set.len(), by_nodes.len());
            assert!(by_nodes.iter().all(|t| t.arity() == arity && t.body().node_count() <= 4));
            for u in 0..=1 {
                let by_u: HashSet<_> = enumerate_trees(&sig, &UniverseRule::primitive(arity, u)).unwrap().into_iter().collect();
                let filtered: HashSet<_> = set.iter().filter(|t| t.body().unreduced_count() <= u).cloned().collect();
                assert!(filtered.is_subset(&by_u), "arity {arity}, u {u}");
            }
        }
    }

    #[test]
    fn labeled_mode_counts() {
        let rule = UniverseRule { arity: 2, max_unreduced: Some(0), labels: LabelMode::Labeled, ..UniverseRule::default() };
        // two one-node bodies, two labels each, two root permutations
        assert_eq!(enumerate_trees(&Signature::c2(), &rule).unwrap().len(), 8);
    }
}
