//! Finite groups given by explicit Cayley tables.
//!
//! The identity always sits at index 0. Everything downstream (the operads
//! `P_G`, norms, free operads) is parameterized by a [`GroupDesc`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of a [`GroupDesc`], stored by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(pub usize);

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "g"),
            k => write!(f, "g{k}"),
        }
    }
}

/// A finite group as a multiplication table: `table[a][b]` is the index of `a·b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct GroupDesc {
    table: Vec<Vec<usize>>,
}

/// A failed group axiom, as reported by [`GroupDesc::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    NotSquare { row: usize, len: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize },
    LatinRow { row: usize, value: usize },
    LatinColumn { col: usize, value: usize },
    Identity { element: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl GroupDesc {
    /// The cyclic group `C_m`, with element `i` standing for `g^i`.
    pub fn cyclic(m: usize) -> Result<Arc<GroupDesc>> {
        if m == 0 {
            return Err(Error::InvalidGroup("cyclic group order must be at least 1".into()));
        }
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Ok(Arc::new(GroupDesc { table }))
    }

    /// Builds a group from a table, rejecting it if any axiom fails.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Arc<GroupDesc>> {
        let desc = GroupDesc { table };
        let violations = desc.validate();
        if let Some(v) = violations.first() {
            return Err(Error::InvalidGroup(format!(
                "{} violation(s), first: {v:?}",
                violations.len()
            )));
        }
        Ok(Arc::new(desc))
    }

    /// Wraps a table without checking it. Use [`GroupDesc::validate`] to inspect.
    pub fn from_table_unchecked(table: Vec<Vec<usize>>) -> GroupDesc {
        GroupDesc { table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + '_ {
        (0..self.order()).map(GroupElem)
    }

    pub fn elem(&self, index: usize) -> Result<GroupElem> {
        if index < self.order() {
            Ok(GroupElem(index))
        } else {
            Err(Error::ElementOutOfRange { index, order: self.order() })
        }
    }

    pub fn multiply(&self, a: GroupElem, b: GroupElem) -> Result<GroupElem> {
        let order = self.order();
        for x in [a, b] {
            if x.0 >= order {
                return Err(Error::ElementOutOfRange { index: x.0, order });
            }
        }
        Ok(self.mul(a, b))
    }

    /// Unchecked multiplication for internal hot paths.
    #[inline]
    pub(crate) fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        GroupElem(self.table[a.0][b.0])
    }

    pub fn inverse(&self, a: GroupElem) -> GroupElem {
        let row = &self.table[a.0];
        GroupElem(row.iter().position(|&x| x == 0).expect("validated group has inverses"))
    }

    /// `a^k` by repeated multiplication.
    pub fn pow(&self, a: GroupElem, k: usize) -> GroupElem {
        (0..k).fold(GroupElem::IDENTITY, |acc, _| self.mul(acc, a))
    }

    /// Exhaustively checks the Latin square, identity and associativity axioms.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.table.len();
        let mut out = Vec::new();
        if n == 0 {
            out.push(Violation::Empty);
            return out;
        }
        for (row, r) in self.table.iter().enumerate() {
            if r.len() != n {
                out.push(Violation::NotSquare { row, len: r.len() });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (row, r) in self.table.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    out.push(Violation::EntryOutOfRange { row, col, value });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for row in 0..n {
            let mut seen = vec![false; n];
            for col in 0..n {
                let v = self.table[row][col];
                if std::mem::replace(&mut seen[v], true) {
                    out.push(Violation::LatinRow { row, value: v });
                }
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for row in 0..n {
                let v = self.table[row][col];
                if std::mem::replace(&mut seen[v], true) {
                    out.push(Violation::LatinColumn { col, value: v });
                }
            }
        }
        for a in 0..n {
            if self.table[0][a] != a || self.table[a][0] != a {
                out.push(Violation::Identity { element: a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = &self.table;
                    if t[t[a][b]][c] != t[a][t[b][c]] {
                        out.push(Violation::Associativity { a, b, c });
                    }
                }
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<usize>>> for GroupDesc {
    type Error = Error;

    fn try_from(table: Vec<Vec<usize>>) -> Result<Self> {
        GroupDesc::from_table(table).map(|g| (*g).clone())
    }
}

impl From<GroupDesc> for Vec<Vec<usize>> {
    fn from(g: GroupDesc) -> Self {
        g.table
    }
}

/// How a group was specified on the command line: `cyclic:<m>`, `c<m>`, or `cayley:<file>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Cayley(String),
}

impl GroupSpec {
    pub fn load(&self) -> Result<Arc<GroupDesc>> {
        match self {
            GroupSpec::Cyclic(m) => GroupDesc::cyclic(*m),
            GroupSpec::Cayley(path) => {
                let text = if path == "-" {
                    std::io::read_to_string(std::io::stdin())
                        .map_err(|e| Error::Parse(format!("stdin: {e}")))?
                } else {
                    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
                };
                let table: Vec<Vec<usize>> =
                    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                GroupDesc::from_table(table)
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(m) = s.strip_prefix("cyclic:") {
            return m.parse().map(GroupSpec::Cyclic).map_err(|_| Error::Parse(format!("bad group {s}")));
        }
        if let Some(path) = s.strip_prefix("cayley:") {
            return Ok(GroupSpec::Cayley(path.to_string()));
        }
        if let Some(m) = s.strip_prefix('c').or_else(|| s.strip_prefix('C')) {
            if let Ok(m) = m.parse() {
                return Ok(GroupSpec::Cyclic(m));
            }
        }
        Err(Error::Parse(format!("unrecognized group `{s}` (use cyclic:<m>, c<m> or cayley:<file>)")))
    }
}
