//! Congruence closure of a relation set over a finite universe of trees.
//!
//! Each relation `lhs = rhs` becomes rewrite rules in both directions and for
//! every `G`-translate. A rule replaces an instance of its pattern anywhere in
//! a body; the permutation picked up by the replacement is pushed out to the
//! root label. Starting from seed trees, the universe grows by single rewrites
//! that stay inside the admissible region, and a union-find merges the two
//! ends of every rewrite.

use std::collections::{HashMap, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::{block_perm, embed_block, LabelMode, Node, OpTree, Signature};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// An equation between two trees of equal arity, read with leaves as variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub name: String,
    pub lhs: OpTree,
    pub rhs: OpTree,
}

impl Relation {
    pub fn new(name: impl Into<String>, lhs: OpTree, rhs: OpTree) -> Result<Relation> {
        if lhs.arity() != rhs.arity() {
            return Err(Error::SizeMismatch { what: "relation sides", expected: lhs.arity(), found: rhs.arity() });
        }
        Ok(Relation { name: name.into(), lhs, rhs })
    }

    /// Both sides evaluate to the same element of `P_G`.
    pub fn holds(&self, sig: &Signature) -> Result<bool> {
        Ok(self.lhs.evaluate(sig)? == self.rhs.evaluate(sig)?)
    }

    /// Rewrite rules for both directions and every `G`-translate.
    pub fn rules(&self, sig: &Signature) -> Vec<RewriteRule> {
        let group = sig.group();
        let mut out: Vec<RewriteRule> = Vec::new();
        for (from, to, dir) in [(&self.lhs, &self.rhs, "→"), (&self.rhs, &self.lhs, "←")] {
            // from.body·from.root = to.body·to.root, so from.body = to.body·(to.root·from.root⁻¹)
            let rho = to.root().compose(&from.root().inverse()).expect("equal arity");
            for a in group.elements() {
                let rule = RewriteRule {
                    name: format!("{} {dir} [{a}]", self.name),
                    pattern: from.body().map_labels(&|g| group.mul(a, g)),
                    replacement: to.body().map_labels(&|g| group.mul(a, g)),
                    rho: rho.clone(),
                };
                if !out.iter().any(|r| r.pattern == rule.pattern && r.replacement == rule.replacement && r.rho == rule.rho) {
                    out.push(rule);
                }
            }
        }
        out
    }
}

/// `pattern(x_1, …, x_k) ⇝ replacement(x_1, …, x_k)·rho`, leaves as variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub pattern: Node,
    pub replacement: Node,
    pub rho: Perm,
}

impl RewriteRule {
    fn matches<'a>(&self, node: &'a Node, binds: &mut Vec<&'a Node>) -> bool {
        fn go<'a>(p: &Node, n: &'a Node, binds: &mut Vec<&'a Node>) -> bool {
            match (p, n) {
                (Node::Leaf, _) => {
                    binds.push(n);
                    true
                }
                (Node::Op { g: pg, symbol: ps, children: pc }, Node::Op { g, symbol, children }) => {
                    pg == g && ps == symbol && pc.len() == children.len() && pc.iter().zip(children).all(|(a, b)| go(a, b, binds))
                }
                _ => false,
            }
        }
        binds.clear();
        go(&self.pattern, node, binds)
    }

    /// Applies the rule at the root of `node`, returning the new subtree and the permutation of its leaves.
    fn apply_here(&self, node: &Node) -> Option<(Node, Perm)> {
        let mut binds = Vec::new();
        if !self.matches(node, &mut binds) {
            return None;
        }
        // replacement leaf j receives x_{ρ⁻¹(j)}; the block permutation ρ⟨|x_1|, …⟩ moves to the root
        let inv = self.rho.inverse();
        let subs: Vec<Node> = (0..binds.len()).map(|j| binds[inv.apply(j)].clone()).collect();
        let sizes: Vec<usize> = binds.iter().map(|b| b.leaf_count()).collect();
        Some((self.replacement.substitute(&subs), block_perm(&self.rho, &sizes)))
    }
}

/// All trees one rewrite away from `t`.
pub fn one_step(t: &OpTree, rules: &[RewriteRule]) -> Vec<(OpTree, usize)> {
    fn go(node: &Node, rules: &[RewriteRule], out: &mut Vec<(Node, Perm, usize)>) {
        for (ri, r) in rules.iter().enumerate() {
            if let Some((n, p)) = r.apply_here(node) {
                out.push((n, p, ri));
            }
        }
        if let Node::Op { g, symbol, children } = node {
            let total = node.leaf_count();
            let mut off = 0;
            for (i, c) in children.iter().enumerate() {
                let mut inner = Vec::new();
                go(c, rules, &mut inner);
                for (nc, p, ri) in inner {
                    let mut kids = children.clone();
                    kids[i] = nc;
                    let pi = embed_block(off, &p, total);
                    out.push((Node::Op { g: *g, symbol: *symbol, children: kids }, pi, ri));
                }
                off += c.leaf_count();
            }
        }
    }
    let mut raw = Vec::new();
    go(t.body(), rules, &mut raw);
    raw.into_iter()
        .map(|(body, pi, ri)| {
            let root = pi.compose(t.root()).expect("rewrites preserve arity");
            (OpTree::new(body, root).expect("rewrites preserve arity"), ri)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceOptions {
    /// Trees with more unreduced nodes than this are outside the universe.
    pub max_unreduced: usize,
    /// Expansion budget: the universe may hold at most this many trees.
    pub max_universe: usize,
    /// With [`LabelMode::Primitive`], rewrites leaving the unlabeled trees with identity root are skipped.
    pub labels: LabelMode,
}

impl Default for CongruenceOptions {
    fn default() -> CongruenceOptions {
        CongruenceOptions { max_unreduced: 1, max_universe: 2_000_000, labels: LabelMode::Primitive }
    }
}

/// The classes of the closed universe. Seeds occupy indices `0..seed_count`.
#[derive(Debug, Clone)]
pub struct Partition {
    pub trees: Vec<OpTree>,
    pub seed_count: usize,
    /// Class index for each tree, numbered in order of first appearance.
    pub class_of: Vec<usize>,
}

impl Partition {
    pub fn class_count(&self) -> usize {
        self.class_of.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Classes meeting the seeds, each listed by its seed members.
    pub fn seed_classes(&self) -> Vec<Vec<&OpTree>> {
        let mut by_class: HashMap<usize, Vec<&OpTree>> = HashMap::new();
        let mut order = Vec::new();
        for i in 0..self.seed_count {
            let c = self.class_of[i];
            by_class.entry(c).or_insert_with(|| {
                order.push(c);
                Vec::new()
            });
            by_class.get_mut(&c).expect("inserted").push(&self.trees[i]);
        }
        order.into_iter().map(|c| by_class.remove(&c).expect("present")).collect()
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Closes `seeds` under rewrites by `relations` and partitions the result.
///
/// Rewrites leading outside the admissible region (too many unreduced
/// nodes, or a non-primitive tree in primitive mode) are skipped; the region
/// is part of the universe definition.
pub fn congruence_classes(
    sig: &Signature,
    seeds: &[OpTree],
    relations: &[Relation],
    opts: CongruenceOptions,
) -> Result<Partition> {
    let mut rules: Vec<RewriteRule> = relations.iter().flat_map(|r| r.rules(sig)).collect();
    if opts.labels == LabelMode::Primitive {
        // a labeled pattern never matches and a labeled replacement never stays primitive
        rules.retain(|r| r.pattern.is_unlabeled() && r.replacement.is_unlabeled());
    }
    let mut index: HashMap<OpTree, usize> = HashMap::new();
    let mut trees: Vec<OpTree> = Vec::new();
    let mut parent: Vec<Option<(usize, usize)>> = Vec::new();
    for s in seeds {
        if !index.contains_key(s) {
            index.insert(s.clone(), trees.len());
            trees.push(s.clone());
            parent.push(None);
        }
    }
    let seed_count = trees.len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut queue: VecDeque<usize> = (0..seed_count).collect();
    while let Some(i) = queue.pop_front() {
        let next = one_step(&trees[i], &rules);
        for (t, ri) in next {
            if t.body().unreduced_count() > opts.max_unreduced || (opts.labels == LabelMode::Primitive && !t.is_primitive()) {
                continue;
            }
            let j = match index.get(&t) {
                Some(&j) => j,
                None => {
                    if trees.len() >= opts.max_universe {
                        return Err(Error::BudgetExhausted { limit: opts.max_universe, chain: chain(&trees, &parent, &rules, i, &t, ri) });
                    }
                    let j = trees.len();
                    index.insert(t.clone(), j);
                    trees.push(t);
                    parent.push(Some((i, ri)));
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, j));
        }
    }
    let mut uf = UnionFind::<usize>::new(trees.len());
    for (a, b) in edges {
        uf.union(a, b);
    }
    let mut numbering: HashMap<usize, usize> = HashMap::new();
    let class_of = (0..trees.len())
        .map(|i| {
            let r = uf.find(i);
            let next = numbering.len();
            *numbering.entry(r).or_insert(next)
        })
        .collect();
    Ok(Partition { trees, seed_count, class_of })
}

fn chain(trees: &[OpTree], parent: &[Option<(usize, usize)>], rules: &[RewriteRule], last: usize, t: &OpTree, ri: usize) -> Vec<String> {
    let mut out = vec![format!("{t}   (by {})", rules[ri].name)];
    let mut cur = Some(last);
    while let Some(i) = cur {
        match parent[i] {
            Some((p, r)) => {
                out.push(format!("{}   (by {})", trees[i], rules[r].name));
                cur = Some(p);
            }
            None => {
                out.push(format!("{}   (seed)", trees[i]));
                cur = None;
            }
        }
    }
    out.reverse();
    out
}
