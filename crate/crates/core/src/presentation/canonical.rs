//! The rewriting system behind canonical trees.
//!
//! A node's shape is its symbol together with the positions of its `E`
//! children; the remaining children are live. A node with fewer than two live
//! children is absorbed into its live child (or into `e`). A node with exactly
//! two live children whose right live child has the same shape is rotated:
//! `◇(A, ◇(B, C)) ⇝ ◇(◇(A, B), C)`. The same rules cover both groups: for `C2`
//! the binary shapes are `⊗` and `⊠`, for `C3` they are `⊗` and `⊠` with one
//! `e` input.

use std::collections::HashMap;

use itertools::Itertools;

use crate::free_operad::{Node, OpTree, Signature, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Shape {
    symbol: Symbol,
    /// Bit `i` set when child `i` is `E`.
    e_mask: u64,
    arity: usize,
}

impl Shape {
    fn of(node: &Node) -> Option<Shape> {
        match node {
            Node::Op { symbol, children, .. } if *symbol != Symbol::E => {
                let e_mask = children.iter().enumerate().filter(|(_, c)| c.is_e()).fold(0, |m, (i, _)| m | 1 << i);
                Some(Shape { symbol: *symbol, e_mask, arity: children.len() })
            }
            _ => None,
        }
    }

    fn live(&self) -> Vec<usize> {
        (0..self.arity).filter(|i| self.e_mask & (1 << i) == 0).collect()
    }

    fn is_binary(&self) -> bool {
        self.live().len() == 2
    }

    /// The node of this shape with `live` filling the non-`E` inputs in order.
    fn build(&self, live: Vec<Node>) -> Node {
        let mut live = live.into_iter();
        let children = (0..self.arity).map(|i| if self.e_mask & (1 << i) != 0 { Node::e() } else { live.next().expect("live count") }).collect();
        Node::op(self.symbol, children)
    }

    fn split(node: &Node) -> Option<(Shape, Vec<&Node>)> {
        let shape = Shape::of(node)?;
        let live = shape.live().into_iter().map(|i| &node.children()[i]).collect();
        Some((shape, live))
    }
}

/// The canonical form of an unlabeled body.
pub(crate) fn canonical_node(node: &Node) -> Node {
    match node {
        Node::Leaf => Node::Leaf,
        Node::Op { symbol: Symbol::E, .. } => Node::e(),
        Node::Op { symbol, children, .. } => {
            let kids: Vec<Node> = children.iter().map(canonical_node).collect();
            let rebuilt = Node::op(*symbol, kids);
            let shape = Shape::of(&rebuilt).expect("op node");
            let live = shape.live();
            let Node::Op { children: mut kids, .. } = rebuilt else { unreachable!() };
            match live.len() {
                0 => Node::e(),
                1 => kids.swap_remove(live[0]),
                2 => {
                    let b = kids.swap_remove(live[1]);
                    let a = kids.swap_remove(live[0]);
                    join(&shape, a, b)
                }
                _ => shape.build(live.iter().map(|&i| std::mem::replace(&mut kids[i], Node::Leaf)).collect()),
            }
        }
    }
}

/// `◇(a, b)` for canonical `a`, `b`, rotating left while `b` has the shape of `◇`.
fn join(shape: &Shape, a: Node, b: Node) -> Node {
    if Shape::of(&b) == Some(*shape) {
        let live = shape.live();
        let Node::Op { children: mut bk, .. } = b else { unreachable!() };
        let b2 = bk.swap_remove(live[1]);
        let b1 = bk.swap_remove(live[0]);
        let left = join(shape, a, b1);
        join(shape, left, b2)
    } else {
        shape.build(vec![a, b])
    }
}

/// True for an unlabeled tree in normal form: every non-`E` node has at least
/// two live children, and no binary node has a right live child of its own shape.
pub fn is_canonical(t: &OpTree) -> bool {
    fn go(node: &Node) -> bool {
        match Shape::split(node) {
            None => true,
            Some((shape, live)) => {
                live.len() >= 2
                    && !(live.len() == 2 && Shape::of(live[1]) == Some(shape))
                    && node.children().iter().all(go)
            }
        }
    }
    t.is_primitive() && go(t.body())
}

/// Every tree one rewrite away from a primitive tree.
pub fn rewrite_steps(t: &OpTree) -> Vec<OpTree> {
    fn go(node: &Node, out: &mut Vec<Node>) {
        if let Some((shape, live)) = Shape::split(node) {
            match live.len() {
                0 => out.push(Node::e()),
                1 => out.push(live[0].clone()),
                2 => {
                    if Shape::of(live[1]) == Some(shape) {
                        let inner = Shape::split(live[1]).expect("op").1;
                        let left = shape.build(vec![live[0].clone(), inner[0].clone()]);
                        out.push(shape.build(vec![left, inner[1].clone()]));
                    }
                }
                _ => {}
            }
            let Node::Op { g, symbol, children } = node else { unreachable!() };
            for (i, c) in children.iter().enumerate() {
                let mut inner = Vec::new();
                go(c, &mut inner);
                for nc in inner {
                    let mut kids = children.clone();
                    kids[i] = nc;
                    out.push(Node::Op { g: *g, symbol: *symbol, children: kids });
                }
            }
        }
    }
    let mut out = Vec::new();
    go(t.body(), &mut out);
    out.into_iter().map(OpTree::primitive).collect()
}

/// Canonical bodies by arity, built by structural recursion.
pub(crate) struct Enumerator {
    shapes: Vec<Shape>,
    memo: HashMap<usize, Vec<Node>>,
}

impl Enumerator {
    pub(crate) fn new(sig: &Signature) -> Enumerator {
        let mut shapes = Vec::new();
        for symbol in [Symbol::Tensor, Symbol::Box] {
            let arity = sig.symbol_arity(symbol);
            for e_mask in 0..1u64 << arity {
                let shape = Shape { symbol, e_mask, arity };
                if shape.live().len() >= 2 {
                    shapes.push(shape);
                }
            }
        }
        Enumerator { shapes, memo: HashMap::new() }
    }

    pub(crate) fn level(&mut self, n: usize) -> &[Node] {
        if !self.memo.contains_key(&n) {
            let nodes = self.build_level(n);
            self.memo.insert(n, nodes);
        }
        &self.memo[&n]
    }

    fn build_level(&mut self, n: usize) -> Vec<Node> {
        match n {
            0 => return vec![Node::e()],
            1 => return vec![Node::Leaf],
            _ => {}
        }
        let mut out = Vec::new();
        for shape in self.shapes.clone() {
            let k = shape.live().len();
            for parts in compositions(n, k) {
                for &p in &parts {
                    self.level(p);
                }
                let pools: Vec<&Vec<Node>> = parts.iter().map(|p| &self.memo[p]).collect();
                for combo in pools.iter().map(|p| p.iter()).multi_cartesian_product() {
                    if shape.is_binary() && Shape::of(combo[1]) == Some(shape) {
                        continue;
                    }
                    out.push(shape.build(combo.into_iter().cloned().collect()));
                }
            }
        }
        out
    }
}

/// Ordered ways to write `n` as `k` positive parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (1..=n.saturating_sub(k - 1))
        .flat_map(|first| {
            compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}
