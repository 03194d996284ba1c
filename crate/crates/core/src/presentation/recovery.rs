//! Reading a canonical `C3` tree off the matrices of `f(g)` and `f(g²)`.
//!
//! An uncovered node `t` grafted at leaf `j` shows up as the blocks `t(g)` and
//! `t(g²)` sitting in both matrices on the same columns `j, …, j+|t|-1`. A
//! chain of equal binary nodes gives the same block at several consecutive
//! columns, so only the first column of a run counts. Peeling the leftmost
//! such node and compressing its block to a single entry leaves the value of a
//! smaller canonical tree.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::Presented;
use crate::error::{Error, Result};
use crate::free_operad::{Node, OpTree};
use crate::group::{GroupDesc, GroupElem};
use crate::perm::Perm;
use crate::pg_operad::PGElement;

/// `⊗`, `⊠`, or `⊠` with `e` grafted on one input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EssentialNode {
    Tensor,
    Box,
    /// `⊠` with `e` on input `p` (0-indexed).
    BoxE(usize),
}

impl EssentialNode {
    pub const ALL: [EssentialNode; 5] =
        [EssentialNode::Tensor, EssentialNode::Box, EssentialNode::BoxE(0), EssentialNode::BoxE(1), EssentialNode::BoxE(2)];

    pub const BINARY: [EssentialNode; 4] =
        [EssentialNode::Tensor, EssentialNode::BoxE(0), EssentialNode::BoxE(1), EssentialNode::BoxE(2)];

    pub fn arity(self) -> usize {
        match self {
            EssentialNode::Box => 3,
            _ => 2,
        }
    }

    pub fn tree(self) -> OpTree {
        OpTree::primitive(match self {
            EssentialNode::Tensor => Node::tensor(Node::Leaf, Node::Leaf),
            EssentialNode::Box => Node::boxed(vec![Node::Leaf; 3]),
            EssentialNode::BoxE(p) => {
                let mut kids = vec![Node::Leaf; 3];
                kids[p] = Node::e();
                Node::boxed(kids)
            }
        })
    }

    /// The values at `g` and `g²`.
    pub fn outputs(self) -> (Perm, Perm) {
        let p = |v: &[usize]| Perm::from_one_line(v).expect("table entry");
        match self {
            EssentialNode::Tensor => (p(&[1, 2]), p(&[1, 2])),
            EssentialNode::Box => (p(&[2, 3, 1]), p(&[3, 1, 2])),
            EssentialNode::BoxE(0) => (p(&[2, 1]), p(&[1, 2])),
            EssentialNode::BoxE(1) => (p(&[2, 1]), p(&[2, 1])),
            EssentialNode::BoxE(_) => (p(&[1, 2]), p(&[2, 1])),
        }
    }
}

impl fmt::Display for EssentialNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EssentialNode::Tensor => f.write_str("⊗"),
            EssentialNode::Box => f.write_str("⊠"),
            _ => write!(f, "{}", self.tree()),
        }
    }
}

impl Serialize for EssentialNode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn c3_generator(group: &Arc<GroupDesc>) -> Result<(GroupElem, GroupElem)> {
    if group.order() != 3 {
        return Err(Error::Unsupported(format!("matrix-pattern recovery needs C3, got a group of order {}", group.order())));
    }
    let g = GroupElem(1);
    Ok((g, group.mul(g, g)))
}

fn primitive_values(f: &PGElement) -> Result<(Perm, Perm)> {
    let (g, g2) = c3_generator(f.group())?;
    if !f.is_primitive() {
        return Err(Error::NonPrimitive(f.value(GroupElem::IDENTITY).to_string()));
    }
    Ok((f.value(g).clone(), f.value(g2).clone()))
}

/// `pattern` occupies columns `j..j+|pattern|` of the matrix of `sigma` as a block.
fn occurs(sigma: &Perm, pattern: &Perm, j: usize) -> bool {
    let a = pattern.len();
    if j + a > sigma.len() {
        return false;
    }
    let window = &sigma.images()[j..j + a];
    let lo = *window.iter().min().expect("nonempty");
    window.iter().zip(pattern.images()).all(|(&v, &p)| v - lo == p)
}

fn simultaneous(fg: &Perm, fg2: &Perm, t: EssentialNode, j: usize) -> bool {
    let (tg, tg2) = t.outputs();
    occurs(fg, &tg, j) && occurs(fg2, &tg2, j)
}

/// Every `(t, j)` with a `j`-column-simultaneous instance of `(t(g), t(g²))`
/// and none at `j - 1`. Columns are 1-indexed; the list is sorted by column.
pub fn find_uncovered_patterns(f: &PGElement) -> Result<Vec<(EssentialNode, usize)>> {
    let (fg, fg2) = primitive_values(f)?;
    let mut out = Vec::new();
    for j in 0..f.arity() {
        for t in EssentialNode::ALL {
            if simultaneous(&fg, &fg2, t, j) && !(j > 0 && simultaneous(&fg, &fg2, t, j - 1)) {
                out.push((t, j + 1));
            }
        }
    }
    Ok(out)
}

/// Compresses the block of `t` at column `j` (1-indexed) to a single entry.
pub fn uncompose(f: &PGElement, t: EssentialNode, j: usize) -> Result<PGElement> {
    let (fg, fg2) = primitive_values(f)?;
    if j == 0 || !simultaneous(&fg, &fg2, t, j - 1) {
        return Err(Error::PatternAbsent { node: t.to_string(), column: j });
    }
    let start = j - 1;
    let values = f
        .values()
        .iter()
        .map(|sigma| {
            let kept: Vec<usize> = sigma
                .images()
                .iter()
                .enumerate()
                .filter(|&(c, _)| c <= start || c >= start + t.arity())
                .map(|(_, &v)| v)
                .collect();
            Perm::standardize(&kept)
        })
        .collect();
    PGElement::new(f.group().clone(), values)
}

/// The canonical tree evaluating to a primitive `f ∈ P_{C3}(n)`, or
/// [`Error::NotInQ`] when `f` is not in `Q_{C3}`.
pub fn recover_tree_c3(f: &PGElement) -> Result<OpTree> {
    fn go(f: &PGElement) -> Result<OpTree> {
        match f.arity() {
            0 => return Ok(OpTree::primitive(Node::e())),
            1 => return Ok(OpTree::unit()),
            _ => {}
        }
        let patterns = find_uncovered_patterns(f)?;
        let Some(&(t, j)) = patterns.first() else {
            return Err(Error::NotInQ { arity: f.arity(), element: f.to_string() });
        };
        let rest = go(&uncompose(f, t, j)?)?;
        rest.graft(j, &t.tree())
    }
    primitive_values(f)?;
    let t = go(f)?;
    if t.evaluate(&Presented::C3.signature())?.values() != f.values() {
        return Err(Error::NotInQ { arity: f.arity(), element: f.to_string() });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_operad::parse_tree;
    use crate::perm::perm_from_rows;

    fn c3() -> crate::free_operad::Signature {
        Presented::C3.signature()
    }

    fn eval(s: &str) -> PGElement {
        parse_tree(s).unwrap().evaluate(&c3()).unwrap()
    }

    #[test]
    fn table_matches_evaluation() {
        let sig = c3();
        for t in EssentialNode::ALL {
            let f = t.tree().evaluate(&sig).unwrap();
            let (a, b) = t.outputs();
            assert_eq!((f.value(GroupElem(1)), f.value(GroupElem(2))), (&a, &b), "{t}");
        }
    }

    #[test]
    fn table_rows_as_matrices() {
        let rows = |r: &[&[u8]]| perm_from_rows(r.iter().map(|x| x.to_vec()).collect()).unwrap();
        assert_eq!(EssentialNode::Box.outputs().0, rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(EssentialNode::Box.outputs().1, rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
        assert_eq!(EssentialNode::BoxE(0).outputs().0, rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(EssentialNode::BoxE(2).outputs().1, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn single_nodes() {
        assert_eq!(find_uncovered_patterns(&eval("⊠(□,□,□)")).unwrap(), vec![(EssentialNode::Box, 1)]);
        assert_eq!(find_uncovered_patterns(&eval("⊗(□,□)")).unwrap(), vec![(EssentialNode::Tensor, 1)]);
    }

    #[test]
    fn uncompose_box_on_box() {
        let f = eval("⊠(⊠(□,□,□),□,□)");
        assert_eq!(uncompose(&f, EssentialNode::Box, 1).unwrap(), eval("⊠(□,□,□)"));
        assert!(matches!(uncompose(&f, EssentialNode::Tensor, 2), Err(Error::PatternAbsent { .. })));
    }

    #[test]
    fn worked_example() {
        let g = Perm::from_one_line(&[4, 5, 6, 7, 2, 3, 1]).unwrap();
        let g2 = Perm::from_one_line(&[5, 6, 7, 1, 4, 2, 3]).unwrap();
        let group = GroupDesc::cyclic(3).unwrap();
        let f = PGElement::new(group, vec![Perm::identity(7), g, g2]).unwrap();
        assert_eq!(
            find_uncovered_patterns(&f).unwrap(),
            vec![(EssentialNode::Tensor, 1), (EssentialNode::Box, 5)]
        );
        let t = recover_tree_c3(&f).unwrap();
        assert_eq!(t.to_string(), "⊠(⊗(⊗(□,□),□),□,⊠(□,□,□))");
    }

    #[test]
    fn simple_value_not_in_q() {
        let group = GroupDesc::cyclic(3).unwrap();
        let s: Perm = "[2,4,1,3]".parse().unwrap();
        let f = PGElement::new(group, vec![Perm::identity(4), s.clone(), s.inverse()]).unwrap();
        assert!(matches!(recover_tree_c3(&f), Err(Error::NotInQ { .. })));
    }
}
