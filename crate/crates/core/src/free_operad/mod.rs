//! The free operad on `{e, ⊗, ⊠}` as labeled planar trees.
//!
//! An [`OpTree`] is a body (a planar tree whose internal nodes carry a group
//! element and a generator symbol) together with a root permutation. The
//! tree stands for `φ(body)·root`. `E` is a childless node, distinct from a
//! leaf; leaves are numbered left to right.

mod congruence;
mod enumerate;
mod notation;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupDesc, GroupElem};
use crate::norms::{norm, OrderedGSet};
use crate::perm::{block_permutation, block_sum, permuted_block_sum, Perm};
use crate::pg_operad::PGElement;

pub use congruence::{congruence_classes, one_step, CongruenceOptions, Partition, Relation, RewriteRule};
pub use enumerate::{enumerate_trees, LabelMode, UniverseRule};
pub use notation::{parse_tree, NotationStyle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    E,
    Tensor,
    Box,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::E, Symbol::Tensor, Symbol::Box];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf,
    Op { g: GroupElem, symbol: Symbol, children: Vec<Node> },
}

impl Node {
    pub fn e() -> Node {
        Node::Op { g: GroupElem::IDENTITY, symbol: Symbol::E, children: Vec::new() }
    }

    pub fn op(symbol: Symbol, children: Vec<Node>) -> Node {
        Node::Op { g: GroupElem::IDENTITY, symbol, children }
    }

    pub fn tensor(a: Node, b: Node) -> Node {
        Node::op(Symbol::Tensor, vec![a, b])
    }

    pub fn boxed(children: Vec<Node>) -> Node {
        Node::op(Symbol::Box, children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf)
    }

    pub fn is_e(&self) -> bool {
        matches!(self, Node::Op { symbol: Symbol::E, .. })
    }

    pub fn children(&self) -> &[Node] {
        match self {
            Node::Leaf => &[],
            Node::Op { children, .. } => children,
        }
    }

    pub fn symbol(&self) -> Option<Symbol> {
        match self {
            Node::Leaf => None,
            Node::Op { symbol, .. } => Some(*symbol),
        }
    }

    pub fn label(&self) -> Option<GroupElem> {
        match self {
            Node::Leaf => None,
            Node::Op { g, .. } => Some(*g),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Node::Leaf => 1,
            Node::Op { children, .. } => children.iter().map(Node::leaf_count).sum(),
        }
    }

    /// Number of `Op` nodes, `E` included.
    pub fn node_count(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Op { children, .. } => 1 + children.iter().map(Node::node_count).sum::<usize>(),
        }
    }

    pub fn e_count(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Op { symbol, children, .. } => {
                usize::from(*symbol == Symbol::E) + children.iter().map(Node::e_count).sum::<usize>()
            }
        }
    }

    /// Number of non-`E` nodes with fewer than two children that are not `E` nodes.
    pub fn unreduced_count(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Op { symbol: Symbol::E, .. } => 0,
            Node::Op { children, .. } => {
                let live = children.iter().filter(|c| !c.is_e()).count();
                usize::from(live < 2) + children.iter().map(Node::unreduced_count).sum::<usize>()
            }
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.unreduced_count() == 0
    }

    /// True if every node carries the identity group label.
    pub fn is_unlabeled(&self) -> bool {
        match self {
            Node::Leaf => true,
            Node::Op { g, children, .. } => g.is_identity() && children.iter().all(Node::is_unlabeled),
        }
    }

    pub fn map_labels(&self, f: &impl Fn(GroupElem) -> GroupElem) -> Node {
        match self {
            Node::Leaf => Node::Leaf,
            Node::Op { g, symbol, children } => Node::Op {
                g: f(*g),
                symbol: *symbol,
                children: children.iter().map(|c| c.map_labels(f)).collect(),
            },
        }
    }

    /// Substitutes `subs[i]` for the `i`-th leaf.
    pub fn substitute(&self, subs: &[Node]) -> Node {
        fn go(node: &Node, subs: &[Node], next: &mut usize) -> Node {
            match node {
                Node::Leaf => {
                    *next += 1;
                    subs[*next - 1].clone()
                }
                Node::Op { g, symbol, children } => Node::Op {
                    g: *g,
                    symbol: *symbol,
                    children: children.iter().map(|c| go(c, subs, next)).collect(),
                },
            }
        }
        debug_assert_eq!(subs.len(), self.leaf_count());
        go(self, subs, &mut 0)
    }

    fn check(&self, sig: &Signature) -> Result<()> {
        match self {
            Node::Leaf => Ok(()),
            Node::Op { g, symbol, children } => {
                sig.group.elem(g.index())?;
                let want = sig.symbol_arity(*symbol);
                if children.len() != want {
                    return Err(Error::MalformedTree(format!(
                        "{symbol:?} node has {} children, expected {want}",
                        children.len()
                    )));
                }
                children.iter().try_for_each(|c| c.check(sig))
            }
        }
    }
}

/// An element of the free operad: `φ(body)·root`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTree {
    body: Node,
    root: Perm,
}

impl OpTree {
    pub fn new(body: Node, root: Perm) -> Result<OpTree> {
        let n = body.leaf_count();
        if root.len() != n {
            return Err(Error::SizeMismatch { what: "root label", expected: n, found: root.len() });
        }
        Ok(OpTree { body, root })
    }

    /// A tree with identity root label.
    pub fn primitive(body: Node) -> OpTree {
        let n = body.leaf_count();
        OpTree { body, root: Perm::identity(n) }
    }

    /// The unit `𝟙`: a single leaf.
    pub fn unit() -> OpTree {
        OpTree::primitive(Node::Leaf)
    }

    /// The one-node tree for a generator.
    pub fn generator(sig: &Signature, symbol: Symbol) -> OpTree {
        OpTree::primitive(Node::op(symbol, vec![Node::Leaf; sig.symbol_arity(symbol)]))
    }

    pub fn body(&self) -> &Node {
        &self.body
    }

    pub fn root(&self) -> &Perm {
        &self.root
    }

    pub fn into_parts(self) -> (Node, Perm) {
        (self.body, self.root)
    }

    pub fn arity(&self) -> usize {
        self.root.len()
    }

    /// Identity root and identity labels throughout.
    pub fn is_primitive(&self) -> bool {
        self.root.is_identity() && self.body.is_unlabeled()
    }

    /// Checks child counts and group labels against a signature.
    pub fn validate(&self, sig: &Signature) -> Result<()> {
        self.body.check(sig)
    }

    /// Grafts `hs[i]` onto the inputs of `self`.
    ///
    /// With root `ρ`, the body of `h_i` lands on leaf `ρ(i)` and the new root is `ρ⟨root(h_1), …⟩`.
    pub fn gamma(&self, hs: &[OpTree]) -> Result<OpTree> {
        let k = self.arity();
        if hs.len() != k {
            return Err(Error::SizeMismatch { what: "tree gamma inputs", expected: k, found: hs.len() });
        }
        let inv = self.root.inverse();
        let subs: Vec<Node> = (0..k).map(|leaf| hs[inv.apply(leaf)].body.clone()).collect();
        let roots: Vec<Perm> = hs.iter().map(|h| h.root.clone()).collect();
        Ok(OpTree { body: self.body.substitute(&subs), root: permuted_block_sum(&self.root, &roots)? })
    }

    /// `f ∘_i h`, `i` 1-indexed.
    pub fn graft(&self, i: usize, h: &OpTree) -> Result<OpTree> {
        if i == 0 || i > self.arity() {
            return Err(Error::IndexOutOfRange { index: i, len: self.arity() });
        }
        let hs: Vec<OpTree> = (1..=self.arity()).map(|j| if j == i { h.clone() } else { OpTree::unit() }).collect();
        self.gamma(&hs)
    }

    pub fn sigma_act(&self, sigma: &Perm) -> Result<OpTree> {
        Ok(OpTree { body: self.body.clone(), root: self.root.compose(sigma)? })
    }

    /// Left-multiplies every node label by `a`.
    pub fn g_act(&self, group: &GroupDesc, a: GroupElem) -> Result<OpTree> {
        group.elem(a.index())?;
        Ok(OpTree { body: self.body.map_labels(&|g| group.mul(a, g)), root: self.root.clone() })
    }

    /// The evaluation map `φ` into `P_G`.
    pub fn evaluate(&self, sig: &Signature) -> Result<PGElement> {
        self.validate(sig)?;
        sig.eval_node(&self.body).sigma_act(&self.root)
    }
}

impl From<Node> for OpTree {
    fn from(body: Node) -> OpTree {
        OpTree::primitive(body)
    }
}

/// The group together with the `P_G` elements that `⊗` and `⊠` name.
#[derive(Debug, Clone)]
pub struct Signature {
    group: Arc<GroupDesc>,
    boxtimes: PGElement,
    generators: [PGElement; 3],
}

impl Signature {
    /// `⊠` is the norm of `G` acting on itself by left multiplication.
    pub fn regular(group: Arc<GroupDesc>) -> Signature {
        let boxtimes = norm(&OrderedGSet::left_regular(group.clone()));
        Signature::with_box(group, boxtimes)
    }

    pub fn with_box(group: Arc<GroupDesc>, boxtimes: PGElement) -> Signature {
        let generators = [PGElement::empty(group.clone()), PGElement::tensor(group.clone()), boxtimes.clone()];
        Signature { group, boxtimes, generators }
    }

    pub fn c2() -> Signature {
        Signature::regular(GroupDesc::cyclic(2).expect("C2"))
    }

    pub fn c3() -> Signature {
        Signature::regular(GroupDesc::cyclic(3).expect("C3"))
    }

    pub fn group(&self) -> &Arc<GroupDesc> {
        &self.group
    }

    pub fn boxtimes(&self) -> &PGElement {
        &self.boxtimes
    }

    pub fn box_arity(&self) -> usize {
        self.boxtimes.arity()
    }

    pub fn symbol_arity(&self, symbol: Symbol) -> usize {
        match symbol {
            Symbol::E => 0,
            Symbol::Tensor => 2,
            Symbol::Box => self.box_arity(),
        }
    }

    pub fn generator(&self, symbol: Symbol) -> &PGElement {
        &self.generators[symbol as usize]
    }

    fn eval_node(&self, node: &Node) -> PGElement {
        match node {
            Node::Leaf => PGElement::unit(self.group.clone()),
            Node::Op { g, symbol, children } => {
                let base = self.generator(*symbol).g_act(*g).expect("validated label");
                let hs: Vec<PGElement> = children.iter().map(|c| self.eval_node(c)).collect();
                base.gamma(&hs).expect("validated arity")
            }
        }
    }
}

/// `(id_off ⊕ π ⊕ id_rest)`, the effect of acting by `π` on a block of consecutive leaves.
pub(crate) fn embed_block(off: usize, pi: &Perm, total: usize) -> Perm {
    let rest = total - off - pi.len();
    block_sum([&Perm::identity(off), pi, &Perm::identity(rest)])
}

/// `ρ⟨k_1, …⟩`, re-exported for rewrite bookkeeping.
pub(crate) fn block_perm(rho: &Perm, ks: &[usize]) -> Perm {
    block_permutation(rho, ks).expect("sizes match")
}

impl fmt::Display for OpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_notation(NotationStyle::Unicode))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::node_to_string(self, NotationStyle::Unicode))
    }
}
