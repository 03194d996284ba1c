//! Canonical `C2` trees and separable permutations.
//!
//! Reading a leaf as `1 ∈ Σ_1`, `⊗` as block sum and `⊠` as skew sum gives the
//! value of a tree at the generator. The inverse splits a separable
//! permutation at its rightmost sum or skew-sum point, so the right part is
//! indecomposable for that operation and the tree comes out canonical.

use crate::error::{Error, Result};
use crate::free_operad::{Node, OpTree, Symbol};
use crate::perm::{block_sum, skew_sum, Perm};

/// The permutation `φ(t)(g)` of a primitive `C2` tree.
pub fn c2_tree_to_separable(t: &OpTree) -> Result<Perm> {
    fn go(node: &Node) -> Result<Perm> {
        match node {
            Node::Leaf => Ok(Perm::identity(1)),
            Node::Op { symbol: Symbol::E, .. } => Ok(Perm::identity(0)),
            Node::Op { symbol, children, .. } => {
                let [a, b] = children.as_slice() else {
                    return Err(Error::MalformedTree(format!("{node} is not binary")));
                };
                let (a, b) = (go(a)?, go(b)?);
                Ok(match symbol {
                    Symbol::Tensor => block_sum([&a, &b]),
                    _ => skew_sum(&a, &b),
                })
            }
        }
    }
    if !t.is_primitive() {
        return Err(Error::NonPrimitiveTree(t.to_string()));
    }
    go(t.body())
}

/// The canonical `C2` tree whose value at the generator is `sigma`.
pub fn c2_separable_to_tree(sigma: &Perm) -> Result<OpTree> {
    fn go(values: &[usize]) -> Option<Node> {
        let n = values.len();
        match n {
            0 => return Some(Node::e()),
            1 => return Some(Node::Leaf),
            _ => {}
        }
        let (mut lo, mut hi) = (usize::MAX, 0);
        let (mut sum_at, mut skew_at) = (None, None);
        for (k, &v) in values[..n - 1].iter().enumerate() {
            lo = lo.min(v);
            hi = hi.max(v);
            if hi == k {
                sum_at = Some(k + 1);
            }
            if lo == n - k - 1 {
                skew_at = Some(k + 1);
            }
        }
        let (symbol, k) = match (sum_at, skew_at) {
            (Some(k), _) => (Symbol::Tensor, k),
            (None, Some(k)) => (Symbol::Box, k),
            (None, None) => return None,
        };
        let left = go(Perm::standardize(&values[..k]).images())?;
        let right = go(Perm::standardize(&values[k..]).images())?;
        Some(Node::op(symbol, vec![left, right]))
    }
    go(sigma.images()).map(OpTree::primitive).ok_or_else(|| Error::NotSeparable(sigma.to_string()))
}
