//! Text, JSON and diagram forms of trees.
//!
//! Text form: `□` (or `_`) is a leaf, `e` the arity-0 generator, `⊗(…)`/`T(…)`
//! and `⊠(…)`/`B(…)` the others. A group label precedes a node as `g·⊠(…)`
//! (or `g2*B(…)`), and a root permutation follows the whole tree as
//! `⊠(□,□)·[2,1]` or `·(1 2)`. Identity labels are omitted when printing.

use serde::{Deserialize, Serialize};

use super::{Node, OpTree, Symbol};
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotationStyle {
    Unicode,
    Ascii,
}

impl NotationStyle {
    fn symbol(self, s: Symbol) -> &'static str {
        match (self, s) {
            (_, Symbol::E) => "e",
            (NotationStyle::Unicode, Symbol::Tensor) => "⊗",
            (NotationStyle::Unicode, Symbol::Box) => "⊠",
            (NotationStyle::Ascii, Symbol::Tensor) => "T",
            (NotationStyle::Ascii, Symbol::Box) => "B",
        }
    }

    fn leaf(self) -> &'static str {
        match self {
            NotationStyle::Unicode => "□",
            NotationStyle::Ascii => "_",
        }
    }

    fn dot(self) -> &'static str {
        match self {
            NotationStyle::Unicode => "·",
            NotationStyle::Ascii => "*",
        }
    }
}

pub(crate) fn node_to_string(node: &Node, style: NotationStyle) -> String {
    let mut out = String::new();
    write_node(node, style, &mut out);
    out
}

fn write_node(node: &Node, style: NotationStyle, out: &mut String) {
    match node {
        Node::Leaf => out.push_str(style.leaf()),
        Node::Op { g, symbol, children } => {
            if !g.is_identity() {
                out.push_str(&g.to_string());
                out.push_str(style.dot());
            }
            out.push_str(style.symbol(*symbol));
            if !children.is_empty() {
                out.push('(');
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_node(c, style, out);
                }
                out.push(')');
            }
        }
    }
}

impl OpTree {
    pub fn to_notation(&self, style: NotationStyle) -> String {
        let mut s = node_to_string(&self.body, style);
        if !self.root.is_identity() {
            s.push_str(style.dot());
            s.push_str(&self.root.to_string());
        }
        s
    }

    /// A multi-line diagram with the root at the top.
    pub fn render(&self, style: NotationStyle) -> String {
        let mut out = String::new();
        if !self.root.is_identity() {
            out.push_str(&format!("root {}\n", self.root));
        }
        render_node(&self.body, style, "", "", &mut out);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TreeRepr::from(self)).expect("tree serializes")
    }
}

fn render_node(node: &Node, style: NotationStyle, head: &str, tail: &str, out: &mut String) {
    out.push_str(head);
    match node {
        Node::Leaf => out.push_str(style.leaf()),
        Node::Op { g, symbol, .. } => {
            if !g.is_identity() {
                out.push_str(&format!("{g}{}", style.dot()));
            }
            out.push_str(style.symbol(*symbol));
        }
    }
    out.push('\n');
    let (branch, last, pipe) = match style {
        NotationStyle::Unicode => ("├── ", "└── ", "│   "),
        NotationStyle::Ascii => ("|-- ", "`-- ", "|   "),
    };
    let children = node.children();
    for (i, c) in children.iter().enumerate() {
        let is_last = i + 1 == children.len();
        let h = format!("{tail}{}", if is_last { last } else { branch });
        let t = format!("{tail}{}", if is_last { "    " } else { pipe });
        render_node(c, style, &h, &t, out);
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_dot(&mut self) -> bool {
        self.eat('·') || self.eat('*') || self.eat('.')
    }

    fn label(&mut self) -> Result<Option<GroupElem>> {
        let start = self.pos;
        let c = match self.peek() {
            Some(c) => c,
            None => return Ok(None),
        };
        let value = if c == '1' {
            self.pos += 1;
            0
        } else if c == 'g' {
            self.pos += 1;
            self.eat('^');
            let digits_start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if digits_start == self.pos {
                1
            } else {
                let text: String = self.chars[digits_start..self.pos].iter().collect();
                text.parse().map_err(|_| self.err("bad group label"))?
            }
        } else {
            return Ok(None);
        };
        if !self.eat_dot() {
            self.pos = start;
            return Err(self.err("group label must be followed by `·` or `*`"));
        }
        Ok(Some(GroupElem(value)))
    }

    fn node(&mut self) -> Result<Node> {
        let g = self.label()?;
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        let symbol = match c {
            '□' | '_' => {
                if g.is_some() {
                    return Err(self.err("leaves carry no group label"));
                }
                self.pos += 1;
                return Ok(Node::Leaf);
            }
            'e' | 'E' => Symbol::E,
            '⊗' | 'T' => Symbol::Tensor,
            '⊠' | 'B' => Symbol::Box,
            _ => return Err(self.err(&format!("unexpected `{c}`"))),
        };
        self.pos += 1;
        let mut children = Vec::new();
        if self.eat('(') {
            if !self.eat(')') {
                loop {
                    children.push(self.node()?);
                    if self.eat(')') {
                        break;
                    }
                    if !self.eat(',') {
                        return Err(self.err("expected `,` or `)`"));
                    }
                }
            }
        }
        Ok(Node::Op { g: g.unwrap_or(GroupElem::IDENTITY), symbol, children })
    }
}

/// Parses the text form, or the JSON form when the input starts with `{`.
///
/// Child counts are not checked here, since they depend on the group; see [`OpTree::validate`].
pub fn parse_tree(s: &str) -> Result<OpTree> {
    let trimmed = s.trim();
    if trimmed.starts_with('{') {
        let repr: TreeRepr = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        return repr.try_into();
    }
    let mut p = Parser { chars: trimmed.chars().collect(), pos: 0, src: trimmed };
    let body = p.node()?;
    let n = body.leaf_count();
    let root = if p.eat_dot() {
        p.skip_ws();
        let rest: String = p.chars[p.pos..].iter().collect();
        p.pos = p.chars.len();
        let rest = rest.trim();
        if rest.starts_with('(') {
            Perm::from_cycles(rest, Some(n))?
        } else {
            rest.parse()?
        }
    } else {
        Perm::identity(n)
    };
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    OpTree::new(body, root)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NodeRepr {
    Leaf(LeafTag),
    Op {
        #[serde(default)]
        g: usize,
        symbol: Symbol,
        #[serde(default)]
        children: Vec<NodeRepr>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum LeafTag {
    Leaf,
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    root: Perm,
    body: NodeRepr,
}

impl From<&Node> for NodeRepr {
    fn from(node: &Node) -> NodeRepr {
        match node {
            Node::Leaf => NodeRepr::Leaf(LeafTag::Leaf),
            Node::Op { g, symbol, children } => {
                NodeRepr::Op { g: g.index(), symbol: *symbol, children: children.iter().map(NodeRepr::from).collect() }
            }
        }
    }
}

impl From<NodeRepr> for Node {
    fn from(repr: NodeRepr) -> Node {
        match repr {
            NodeRepr::Leaf(_) => Node::Leaf,
            NodeRepr::Op { g, symbol, children } => {
                Node::Op { g: GroupElem(g), symbol, children: children.into_iter().map(Node::from).collect() }
            }
        }
    }
}

impl From<&OpTree> for TreeRepr {
    fn from(t: &OpTree) -> TreeRepr {
        TreeRepr { root: t.root.clone(), body: NodeRepr::from(&t.body) }
    }
}

impl TryFrom<TreeRepr> for OpTree {
    type Error = Error;

    fn try_from(repr: TreeRepr) -> Result<OpTree> {
        OpTree::new(repr.body.into(), repr.root)
    }
}

impl Serialize for OpTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TreeRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OpTree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<OpTree, D::Error> {
        TreeRepr::deserialize(deserializer)?.try_into().map_err(serde::de::Error::custom)
    }
}
