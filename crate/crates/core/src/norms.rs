//! Ordered G-sets, their norms, and suboperads of `P_G` generated by finite sets.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupDesc, GroupElem};
use crate::perm::Perm;
use crate::pg_operad::PGElement;

/// A finite totally ordered set `{0, …, size-1}` with a left `G`-action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedGSet {
    #[serde(skip)]
    group: Arc<GroupDesc>,
    /// `action[a][x]` is the position of `a·x`.
    action: Vec<Vec<usize>>,
    /// Human-readable origin, e.g. `C4/{1,g2}`.
    label: String,
}

impl OrderedGSet {
    pub fn new(group: Arc<GroupDesc>, action: Vec<Vec<usize>>, label: impl Into<String>) -> Result<OrderedGSet> {
        if action.len() != group.order() {
            return Err(Error::InvalidGSet(format!("{} rows for a group of order {}", action.len(), group.order())));
        }
        let size = action[0].len();
        for (a, row) in action.iter().enumerate() {
            if Perm::from_images(row.clone()).is_err() || row.len() != size {
                return Err(Error::InvalidGSet(format!("element {} does not act by a permutation", GroupElem(a))));
            }
        }
        if action[0].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidGSet("the identity does not act trivially".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                for x in 0..size {
                    if action[ab.index()][x] != action[a.index()][action[b.index()][x]] {
                        return Err(Error::InvalidGSet(format!("(ab)·x ≠ a·(b·x) for a = {a}, b = {b}, x = {x}")));
                    }
                }
            }
        }
        Ok(OrderedGSet { group, action, label: label.into() })
    }

    /// `n` points with trivial action.
    pub fn trivial(group: Arc<GroupDesc>, size: usize) -> OrderedGSet {
        let action = vec![(0..size).collect(); group.order()];
        OrderedGSet { group, action, label: format!("trivial({size})") }
    }

    /// `G` acting on itself by left multiplication, in index order.
    pub fn left_regular(group: Arc<GroupDesc>) -> OrderedGSet {
        let action = group.elements().map(|a| group.elements().map(|x| group.mul(a, x).index()).collect()).collect();
        OrderedGSet { label: "G".into(), group, action }
    }

    /// `G/H` with cosets ordered by their least element index.
    pub fn cosets(group: Arc<GroupDesc>, subgroup: &[GroupElem]) -> Result<OrderedGSet> {
        if !is_subgroup(&group, subgroup) {
            return Err(Error::InvalidGSet(format!("{subgroup:?} is not a subgroup")));
        }
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut count = 0;
        for x in group.elements() {
            if coset_of[x.index()] == usize::MAX {
                for &h in subgroup {
                    coset_of[group.mul(x, h).index()] = count;
                }
                count += 1;
            }
        }
        let reps: Vec<GroupElem> = (0..count)
            .map(|c| GroupElem(coset_of.iter().position(|&k| k == c).expect("nonempty coset")))
            .collect();
        let action = group
            .elements()
            .map(|a| reps.iter().map(|&r| coset_of[group.mul(a, r).index()]).collect())
            .collect();
        let label = format!("G/{{{}}}", subgroup.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        Ok(OrderedGSet { group, action, label })
    }

    /// Reorders the points: the point at position `x` moves to position `rho(x)`.
    pub fn reorder(&self, rho: &Perm) -> Result<OrderedGSet> {
        if rho.len() != self.size() {
            return Err(Error::SizeMismatch { what: "reorder", expected: self.size(), found: rho.len() });
        }
        let inv = rho.inverse();
        let action = self
            .action
            .iter()
            .map(|row| (0..self.size()).map(|y| rho.apply(row[inv.apply(y)])).collect())
            .collect();
        Ok(OrderedGSet { group: self.group.clone(), action, label: format!("{}·reordered", self.label) })
    }

    pub fn size(&self) -> usize {
        self.action[0].len()
    }

    pub fn group(&self) -> &Arc<GroupDesc> {
        &self.group
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// The external norm `⊗_T`: each group element maps to the permutation of positions it induces.
pub fn norm(t: &OrderedGSet) -> PGElement {
    let values = t.action.iter().map(|row| Perm::from_images_unchecked(row.clone())).collect();
    PGElement::from_parts_unchecked(t.group.clone(), t.size(), values)
}

fn is_subgroup(group: &GroupDesc, elems: &[GroupElem]) -> bool {
    let set: HashSet<GroupElem> = elems.iter().copied().collect();
    set.contains(&GroupElem::IDENTITY)
        && set.len() == elems.len()
        && elems.iter().all(|&a| elems.iter().all(|&b| set.contains(&group.mul(a, b))))
}

/// Largest group order for which subgroups are enumerated by brute force over subsets.
pub const MAX_SUBGROUP_SEARCH_ORDER: usize = 20;

/// All subgroups, each sorted, ordered by size and then lexicographically.
pub fn subgroups(group: &GroupDesc) -> Result<Vec<Vec<GroupElem>>> {
    let n = group.order();
    if n > MAX_SUBGROUP_SEARCH_ORDER {
        return Err(Error::Unsupported(format!(
            "subgroup enumeration is brute force and limited to order {MAX_SUBGROUP_SEARCH_ORDER}"
        )));
    }
    // subsets always containing the identity: iterate over the other n-1 elements
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << (n - 1)) {
        let elems: Vec<GroupElem> = std::iter::once(GroupElem::IDENTITY)
            .chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1).map(GroupElem))
            .collect();
        if n % elems.len() == 0 && is_subgroup(group, &elems) {
            out.push(elems);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn conjugate(group: &GroupDesc, x: GroupElem, h: &[GroupElem]) -> BTreeSet<GroupElem> {
    let inv = group.inverse(x);
    h.iter().map(|&a| group.mul(group.mul(x, a), inv)).collect()
}

/// One ordered orbit `G/H` for each conjugacy class of proper subgroups `H`, smallest `H` first.
pub fn complete_orbit_set(group: &Arc<GroupDesc>) -> Result<Vec<OrderedGSet>> {
    let subs = subgroups(group)?;
    let mut seen: HashSet<BTreeSet<GroupElem>> = HashSet::new();
    let mut out = Vec::new();
    for h in subs.iter().filter(|h| h.len() < group.order()) {
        let key: BTreeSet<GroupElem> = h.iter().copied().collect();
        if seen.contains(&key) {
            continue;
        }
        for x in group.elements() {
            seen.insert(conjugate(group, x, h));
        }
        out.push(OrderedGSet::cosets(group.clone(), h)?);
    }
    Ok(out)
}

/// A named finite set of elements of `P_G`.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorSet {
    pub generators: Vec<(String, PGElement)>,
}

impl GeneratorSet {
    pub fn elements(&self) -> impl Iterator<Item = &PGElement> {
        self.generators.iter().map(|(_, f)| f)
    }

    pub fn max_arity(&self) -> usize {
        self.elements().map(PGElement::arity).max().unwrap_or(0)
    }
}

/// Norms of `∅`, `{0,1}` with trivial action, and each orbit of [`complete_orbit_set`].
pub fn qg_generators(group: &Arc<GroupDesc>) -> Result<GeneratorSet> {
    let mut generators = vec![
        ("e".to_string(), norm(&OrderedGSet::trivial(group.clone(), 0))),
        ("⊗".to_string(), norm(&OrderedGSet::trivial(group.clone(), 2))),
    ];
    for orbit in complete_orbit_set(group)? {
        generators.push((format!("⊗[{}]", orbit.label()), norm(&orbit)));
    }
    Ok(GeneratorSet { generators })
}

/// The arity-`≤ n` part of a generated suboperad, stored as primitive parts.
///
/// Every element of `P_G(k)` is uniquely `p·σ` with `p` primitive, and the
/// suboperad is closed under `Σ_k`, so its arity-`k` level is `prim(k) × Σ_k`.
#[derive(Debug, Clone)]
pub struct GeneratedSuboperad {
    group: Arc<GroupDesc>,
    primitive: Vec<Vec<PGElement>>,
}

impl GeneratedSuboperad {
    pub fn max_arity(&self) -> usize {
        self.primitive.len() - 1
    }

    /// Primitive elements of arity `k`, sorted.
    pub fn primitive(&self, k: usize) -> &[PGElement] {
        &self.primitive[k]
    }

    pub fn primitive_count(&self, k: usize) -> usize {
        self.primitive[k].len()
    }

    pub fn total_count(&self, k: usize) -> u128 {
        let fact: u128 = (1..=k as u128).product();
        self.primitive[k].len() as u128 * fact
    }

    pub fn contains(&self, f: &PGElement) -> bool {
        f.arity() <= self.max_arity() && self.primitive[f.arity()].binary_search_by(|p| cmp_values(p, &f.primitivize().0)).is_ok()
    }

    /// All elements of arity `k`, i.e. every `p·σ`.
    pub fn elements(&self, k: usize) -> Vec<PGElement> {
        let sigmas: Vec<Perm> = crate::perm::all_perms(k).collect();
        self.primitive[k]
            .iter()
            .flat_map(|p| sigmas.iter().map(move |s| p.sigma_act(s).expect("arity matches")))
            .collect()
    }

    pub fn group(&self) -> &Arc<GroupDesc> {
        &self.group
    }
}

fn cmp_values(a: &PGElement, b: &PGElement) -> std::cmp::Ordering {
    a.values().cmp(b.values())
}

/// Cap on the number of primitive elements a saturation may hold.
pub const DEFAULT_SATURATION_CAP: usize = 5_000_000;

/// Saturates `{𝟙} ∪ S` under the `G`-action, the `Σ`-action and partial composition, reporting arities `≤ n`.
///
/// Composites are formed up to the working arity `max(n, max |s|)`: any
/// element of arity `≤ n` is a tree of generators in which each `e` can be
/// composed in first, so no intermediate composite needs a larger arity.
/// Elements are tracked by their primitive parts, which is exact because
/// `prim((x·σ) ∘_i (y·τ)) = prim(x ∘_{σ(i)} y)` and `prim(a·(x·σ)) = prim(a·x)`.
pub fn generated_suboperad(s: &GeneratorSet, n: usize, cap: usize) -> Result<GeneratedSuboperad> {
    let group = match s.generators.first() {
        Some((_, f)) => f.group().clone(),
        None => return Err(Error::Unsupported("empty generator set; pass at least the unit".into())),
    };
    let work = n.max(s.max_arity()).max(1);
    let mut levels: Vec<Vec<PGElement>> = vec![Vec::new(); work + 1];
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut queue: Vec<PGElement> = Vec::new();

    let push = |f: PGElement, seen: &mut HashSet<Vec<Perm>>, queue: &mut Vec<PGElement>| -> Result<()> {
        let p = f.primitivize().0;
        if seen.contains(p.values()) {
            return Ok(());
        }
        if seen.len() >= cap {
            return Err(Error::BudgetExhausted { limit: cap, chain: vec![format!("saturation at working arity {work}")] });
        }
        seen.insert(p.values().to_vec());
        queue.push(p);
        Ok(())
    };

    push(PGElement::unit(group.clone()), &mut seen, &mut queue)?;
    for f in s.elements() {
        if !Arc::ptr_eq(f.group(), &group) && **f.group() != *group {
            return Err(Error::GroupMismatch);
        }
        push(f.clone(), &mut seen, &mut queue)?;
    }

    while let Some(x) = queue.pop() {
        levels[x.arity()].push(x.clone());
        for a in group.elements() {
            push(x.g_act(a)?, &mut seen, &mut queue)?;
        }
        // pair x with every processed y, in both orders
        for ya in 0..=work {
            for yi in 0..levels[ya].len() {
                let y = levels[ya][yi].clone();
                for (outer, inner) in [(&x, &y), (&y, &x)] {
                    if outer.arity() == 0 || outer.arity() + inner.arity() - 1 > work {
                        continue;
                    }
                    for i in 1..=outer.arity() {
                        push(outer.partial_compose(i, inner)?, &mut seen, &mut queue)?;
                    }
                }
            }
        }
    }

    levels.truncate(n + 1);
    levels.resize(n + 1, Vec::new());
    for level in &mut levels {
        level.sort_by(cmp_values);
    }
    Ok(GeneratedSuboperad { group, primitive: levels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: usize) -> Arc<GroupDesc> {
        GroupDesc::cyclic(m).unwrap()
    }

    #[test]
    fn basic_norms() {
        let g = c(2);
        assert_eq!(norm(&OrderedGSet::trivial(g.clone(), 0)), PGElement::empty(g.clone()));
        assert_eq!(norm(&OrderedGSet::trivial(g.clone(), 2)), PGElement::tensor(g.clone()));
        let b = norm(&OrderedGSet::left_regular(g.clone()));
        assert_eq!(b.values()[1], "(1 2)".parse().unwrap());
        let b3 = norm(&OrderedGSet::left_regular(c(3)));
        assert_eq!(b3.values()[1], "(1 2 3)".parse().unwrap());
        assert_eq!(b3.values()[2], "(1 3 2)".parse().unwrap());
    }

    #[test]
    fn invalid_actions() {
        let g = c(2);
        assert!(OrderedGSet::new(g.clone(), vec![vec![0, 1]], "x").is_err());
        assert!(OrderedGSet::new(g.clone(), vec![vec![1, 0], vec![0, 1]], "x").is_err());
        assert!(OrderedGSet::new(c(3), vec![vec![0, 1], vec![1, 0], vec![1, 0]], "x").is_err());
        assert!(OrderedGSet::new(g, vec![vec![0, 1], vec![1, 0]], "x").is_ok());
    }

    #[test]
    fn orbit_sets() {
        let sizes = |m| complete_orbit_set(&c(m)).unwrap().iter().map(OrderedGSet::size).collect::<Vec<_>>();
        assert_eq!(sizes(2), vec![2]);
        assert_eq!(sizes(3), vec![3]);
        assert_eq!(sizes(4), vec![4, 2]);
        assert_eq!(sizes(6), vec![6, 3, 2]);
        assert_eq!(qg_generators(&c(4)).unwrap().generators.len(), 4);
    }

    #[test]
    fn c3_arity_two_saturation() {
        let s = qg_generators(&c(3)).unwrap();
        let q = generated_suboperad(&s, 2, DEFAULT_SATURATION_CAP).unwrap();
        assert_eq!(q.primitive_count(2), 4);
        assert_eq!(q.total_count(2), 8);
        assert_eq!(q.primitive_count(0), 1);
        assert_eq!(q.primitive_count(1), 1);
    }

    #[test]
    fn unit_only() {
        let g = c(2);
        let s = GeneratorSet { generators: vec![("1".into(), PGElement::unit(g))] };
        let q = generated_suboperad(&s, 3, DEFAULT_SATURATION_CAP).unwrap();
        assert_eq!((0..=3).map(|k| q.primitive_count(k)).collect::<Vec<_>>(), vec![0, 1, 0, 0]);
    }
}
