//! The object operad `P_G(n) = Set(G, Σ_n)`.
//!
//! An element is stored extensionally as one permutation per group element.
//! Composition is pointwise permuted block sum, the group acts by
//! `(a·f)(h) = f(h·a)` and `Σ_n` acts on the right by `(f·σ)(h) = f(h)σ`.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupDesc, GroupElem};
use crate::perm::{all_perms, is_simple, permuted_block_sum_refs, Perm};

#[derive(Clone)]
pub struct PGElement {
    group: Arc<GroupDesc>,
    arity: usize,
    values: Vec<Perm>,
}

impl PGElement {
    pub fn new(group: Arc<GroupDesc>, values: Vec<Perm>) -> Result<PGElement> {
        if values.len() != group.order() {
            return Err(Error::SizeMismatch { what: "PGElement values", expected: group.order(), found: values.len() });
        }
        let arity = values.first().map(Perm::len).unwrap_or(0);
        if let Some(bad) = values.iter().find(|v| v.len() != arity) {
            return Err(Error::SizeMismatch { what: "PGElement arity", expected: arity, found: bad.len() });
        }
        Ok(PGElement { group, arity, values })
    }

    pub(crate) fn from_parts_unchecked(group: Arc<GroupDesc>, arity: usize, values: Vec<Perm>) -> PGElement {
        debug_assert!(values.iter().all(|v| v.len() == arity) && values.len() == group.order());
        PGElement { group, arity, values }
    }

    /// The constant function at `sigma`.
    pub fn constant(group: Arc<GroupDesc>, sigma: Perm) -> PGElement {
        let values = vec![sigma.clone(); group.order()];
        PGElement { group, arity: sigma.len(), values }
    }

    /// The operadic unit `𝟙 ∈ P_G(1)`.
    pub fn unit(group: Arc<GroupDesc>) -> PGElement {
        PGElement::constant(group, Perm::identity(1))
    }

    /// `e`, the unique element of arity 0.
    pub fn empty(group: Arc<GroupDesc>) -> PGElement {
        PGElement::constant(group, Perm::identity(0))
    }

    /// `⊗`, constant at the identity of `Σ_2`.
    pub fn tensor(group: Arc<GroupDesc>) -> PGElement {
        PGElement::constant(group, Perm::identity(2))
    }

    pub fn group(&self) -> &Arc<GroupDesc> {
        &self.group
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Perm] {
        &self.values
    }

    pub fn value(&self, g: GroupElem) -> &Perm {
        &self.values[g.index()]
    }

    pub fn into_values(self) -> Vec<Perm> {
        self.values
    }

    fn same_group(&self, other: &PGElement) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group == other.group
    }

    /// `γ(f; h_1, …, h_n)`, computed pointwise as `f(g)⟨h_1(g), …, h_n(g)⟩`.
    pub fn gamma(&self, hs: &[PGElement]) -> Result<PGElement> {
        if hs.len() != self.arity {
            return Err(Error::SizeMismatch { what: "gamma inputs", expected: self.arity, found: hs.len() });
        }
        if hs.iter().any(|h| !self.same_group(h)) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.gamma_refs(&hs.iter().collect::<Vec<_>>()))
    }

    pub(crate) fn gamma_refs(&self, hs: &[&PGElement]) -> PGElement {
        let arity = hs.iter().map(|h| h.arity).sum();
        let values = (0..self.values.len())
            .map(|g| permuted_block_sum_refs(&self.values[g], hs.iter().map(|h| &h.values[g])))
            .collect();
        PGElement { group: self.group.clone(), arity, values }
    }

    /// `f ∘_i h`, with `i` 1-indexed.
    pub fn partial_compose(&self, i: usize, h: &PGElement) -> Result<PGElement> {
        if i == 0 || i > self.arity {
            return Err(Error::IndexOutOfRange { index: i, len: self.arity });
        }
        if !self.same_group(h) {
            return Err(Error::GroupMismatch);
        }
        let unit = PGElement::unit(self.group.clone());
        let hs: Vec<&PGElement> = (1..=self.arity).map(|j| if j == i { h } else { &unit }).collect();
        Ok(self.gamma_refs(&hs))
    }

    /// Right `Σ_n`-action `(f·σ)(g) = f(g)σ`.
    pub fn sigma_act(&self, sigma: &Perm) -> Result<PGElement> {
        if sigma.len() != self.arity {
            return Err(Error::SizeMismatch { what: "sigma_act", expected: self.arity, found: sigma.len() });
        }
        Ok(PGElement {
            group: self.group.clone(),
            arity: self.arity,
            values: self.values.iter().map(|v| v * sigma).collect(),
        })
    }

    /// Left `G`-action `(a·f)(h) = f(h·a)`.
    pub fn g_act(&self, a: GroupElem) -> Result<PGElement> {
        self.group.elem(a.index())?;
        Ok(PGElement {
            group: self.group.clone(),
            arity: self.arity,
            values: self.group.elements().map(|h| self.values[self.group.mul(h, a).index()].clone()).collect(),
        })
    }

    pub fn is_primitive(&self) -> bool {
        self.values[0].is_identity()
    }

    /// Splits `f` as `p·σ` with `p` primitive and `σ = f(1_G)`.
    pub fn primitivize(&self) -> (PGElement, Perm) {
        let sigma = self.values[0].clone();
        let inv = sigma.inverse();
        let p = PGElement {
            group: self.group.clone(),
            arity: self.arity,
            values: self.values.iter().map(|v| v * &inv).collect(),
        };
        (p, sigma)
    }

    /// Returns a group element `g` for which `f(g)f(1_G)⁻¹` is simple, if any.
    ///
    /// Such a `g` certifies that `f` is not generated from below. Under the
    /// literal definition every permutation of size at most 2 is simple, so
    /// the certificate only carries information for arity at least 4.
    pub fn simple_certificate(&self) -> Option<GroupElem> {
        let inv = self.values[0].inverse();
        self.group.elements().find(|&g| is_simple(&(self.value(g) * &inv)))
    }

    /// True iff `f(g)f(1_G)⁻¹` is nonsimple for every `g`; a necessary condition for generation from below.
    pub fn nonsimple_necessary_test(&self) -> bool {
        self.simple_certificate().is_none()
    }
}

impl PartialEq for PGElement {
    fn eq(&self, other: &PGElement) -> bool {
        self.values == other.values && self.same_group(other)
    }
}

impl Eq for PGElement {}

impl Hash for PGElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl fmt::Debug for PGElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PGElement{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} ↦ {}", GroupElem(i), v)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PGElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct PGElementRepr {
    group: GroupDesc,
    arity: usize,
    values: Vec<Perm>,
}

impl Serialize for PGElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PGElementRepr { group: (*self.group).clone(), arity: self.arity, values: self.values.clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PGElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<PGElement, D::Error> {
        let repr = PGElementRepr::deserialize(deserializer)?;
        let elem = PGElement::new(Arc::new(repr.group), repr.values).map_err(serde::de::Error::custom)?;
        if elem.arity != repr.arity && !elem.values.is_empty() {
            return Err(serde::de::Error::custom(format!("declared arity {} but values have size {}", repr.arity, elem.arity)));
        }
        Ok(elem)
    }
}

/// Every element of `P_G(n)`, with the value at `1_G` varying slowest.
pub fn all_elements(group: &Arc<GroupDesc>, n: usize) -> impl Iterator<Item = PGElement> + '_ {
    (0..group.order())
        .map(|_| all_perms(n).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(move |values| PGElement { group: group.clone(), arity: n, values })
}

/// Every primitive element of `P_G(n)`.
pub fn primitive_elements(group: &Arc<GroupDesc>, n: usize) -> impl Iterator<Item = PGElement> + '_ {
    let rest = group.order() - 1;
    (0..rest)
        .map(|_| all_perms(n).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(move |tail| {
            let mut values = Vec::with_capacity(tail.len() + 1);
            values.push(Perm::identity(n));
            values.extend(tail);
            PGElement { group: group.clone(), arity: n, values }
        })
}

/// `|P_G(n)| = (n!)^{|G|}`, or `None` on overflow.
pub fn element_count(order: usize, n: usize) -> Option<u128> {
    let fact = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    (0..order).try_fold(1u128, |acc, _| acc.checked_mul(fact))
}

/// Default cap on the number of `γ(s; h_1, …)` candidates examined by the exact search.
pub const DEFAULT_SEARCH_CAP: u128 = 20_000_000;

/// A decomposition `f = γ(outer; inner)·sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub outer: PGElement,
    pub inner: Vec<PGElement>,
    pub sigma: Perm,
}

impl Decomposition {
    pub fn evaluate(&self) -> Result<PGElement> {
        self.outer.gamma(&self.inner)?.sigma_act(&self.sigma)
    }
}

/// Counts candidate tuples `(s; h_1, …, h_{|s|})` with every arity below `n` and `Σ|h_i| = n`.
pub fn candidate_count(order: usize, n: usize) -> Option<u128> {
    candidate_count_filtered(n, |m| element_count(order, m), 0)
}

fn candidate_count_filtered(n: usize, size: impl Fn(usize) -> Option<u128>, min_inner: usize) -> Option<u128> {
    if n == 0 {
        return Some(0);
    }
    let mut total = 0u128;
    // ways[t] = weighted number of k-tuples of inner arities summing to t
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for k in 1..n {
        let mut next = vec![0u128; n + 1];
        for t in 0..=n {
            if ways[t] == 0 {
                continue;
            }
            for m in min_inner..n {
                if t + m > n {
                    break;
                }
                next[t + m] = next[t + m].checked_add(ways[t].checked_mul(size(m)?)?)?;
            }
        }
        ways = next;
        total = total.checked_add(size(k)?.checked_mul(ways[n])?)?;
    }
    Some(total)
}

/// Compositions of `n` into `k` parts each in `lo..n`.
fn compositions(n: usize, k: usize, lo: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for m in lo..=hi.min(left) {
            cur.push(m);
            rec(left - m, parts - 1, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, k, lo, n - 1, &mut Vec::new(), &mut out);
    }
    out
}

struct BelowSearch {
    n: usize,
    primitive_only: bool,
    by_arity: Vec<Vec<PGElement>>,
}

impl BelowSearch {
    fn new(group: &Arc<GroupDesc>, n: usize, primitive_only: bool, cap: u128) -> Result<BelowSearch> {
        let candidates = if primitive_only {
            let order = group.order();
            candidate_count_filtered(n, |m| element_count(order - 1, m), 1)
        } else {
            candidate_count(group.order(), n)
        }
        .unwrap_or(u128::MAX);
        if candidates > cap {
            return Err(Error::Infeasible { arity: n, candidates, cap });
        }
        let by_arity = (0..n)
            .map(|m| {
                if primitive_only {
                    primitive_elements(group, m).collect()
                } else {
                    all_elements(group, m).collect()
                }
            })
            .collect();
        Ok(BelowSearch { n, primitive_only, by_arity })
    }

    fn jobs(&self) -> Vec<(usize, usize, Vec<usize>)> {
        let lo = usize::from(self.primitive_only);
        let mut jobs = Vec::new();
        for k in 2..self.n {
            let comps = compositions(self.n, k, lo);
            for s in 0..self.by_arity[k].len() {
                for c in &comps {
                    jobs.push((k, s, c.clone()));
                }
            }
        }
        jobs
    }

    /// Calls `visit` on every `γ(s; h)` of one job until it returns true.
    fn run_job<F>(&self, job: &(usize, usize, Vec<usize>), mut visit: F) -> Option<Decomposition>
    where
        F: FnMut(&PGElement) -> bool,
    {
        let (_, s, comp) = job;
        let s = &self.by_arity[comp.len()][*s];
        let pools: Vec<&Vec<PGElement>> = comp.iter().map(|&m| &self.by_arity[m]).collect();
        let mut idx = vec![0usize; comp.len()];
        loop {
            let hs: Vec<&PGElement> = idx.iter().zip(&pools).map(|(&i, p)| &p[i]).collect();
            let composite = s.gamma_refs(&hs);
            if visit(&composite) {
                return Some(Decomposition {
                    outer: s.clone(),
                    inner: hs.into_iter().cloned().collect(),
                    sigma: Perm::identity(self.n),
                });
            }
            // odometer
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < pools[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn find(&self, target: &PGElement) -> Option<Decomposition> {
        let (prim, sigma) = target.primitivize();
        let primitive_only = self.primitive_only;
        self.jobs().par_iter().find_map_any(|job| {
            self.run_job(job, |c| if primitive_only { c == &prim } else { c.primitivize().0 == prim })
        })
        .map(|mut d| {
            // γ(s; h) = prim·γ(s; h)(1_G), so f = γ(s; h)·γ(s; h)(1_G)⁻¹·f(1_G)
            let composite = d.outer.gamma(&d.inner).expect("consistent decomposition");
            let residual = &composite.values[0].inverse() * &sigma;
            d.sigma = residual;
            debug_assert_eq!(d.evaluate().ok().as_ref(), Some(target));
            d
        })
    }

    fn primitive_closure(&self) -> HashSet<Vec<Perm>> {
        self.jobs()
            .par_iter()
            .fold(HashSet::new, |mut acc, job| {
                self.run_job(job, |c| {
                    acc.insert(c.primitivize().0.values);
                    false
                });
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    }
}

/// Decides whether `f` is generated from below by exhausting every `γ(s; h_1, …, h_{|s|})`
/// with all arities below `n`, over the whole of each `P_G(i)`.
///
/// `f = γ(s; h)·σ` for some `σ` exactly when `f` and `γ(s; h)` have the same
/// primitive part, so the search compares primitive parts.
pub fn generated_from_below_exact(f: &PGElement) -> Result<bool> {
    Ok(find_decomposition(f, DEFAULT_SEARCH_CAP)?.is_some())
}

/// As [`generated_from_below_exact`], returning a witness decomposition and accepting a cap.
pub fn find_decomposition(f: &PGElement, cap: u128) -> Result<Option<Decomposition>> {
    if f.arity < 2 {
        return Ok(None);
    }
    Ok(BelowSearch::new(&f.group, f.arity, false, cap)?.find(f))
}

/// Searches for `f = γ(s; h_1, …)` with `s` and every `h_i` primitive and of arity in `1..n`.
pub fn primitive_decomposition(f: &PGElement, cap: u128) -> Result<Option<Decomposition>> {
    if !f.is_primitive() {
        return Err(Error::NonPrimitive(f.values[0].to_string()));
    }
    if f.arity < 2 {
        return Ok(None);
    }
    Ok(BelowSearch::new(&f.group, f.arity, true, cap)?.find(f))
}

/// The primitive parts of every element of `P_G(n)` that is generated from below.
///
/// `f` is generated from below iff its primitive part (values) lies in this set.
pub fn generated_from_below_set(group: &Arc<GroupDesc>, n: usize, cap: u128) -> Result<HashSet<Vec<Perm>>> {
    if n < 2 {
        return Ok(HashSet::new());
    }
    Ok(BelowSearch::new(group, n, false, cap)?.primitive_closure())
}

/// A primitive element that is not generated from below, with its certificate.
#[derive(Debug, Clone, Serialize)]
pub struct NotFgWitness {
    pub element: PGElement,
    /// The non-identity group element at which the value is simple.
    pub at: GroupElem,
    pub simple: Perm,
}

/// The lexicographically least simple permutation of `Σ_n`, for `n ≥ 4`.
pub fn least_simple(n: usize) -> Option<Perm> {
    if n < 4 {
        return None;
    }
    all_perms(n).find(is_simple)
}

/// Builds the primitive `f ∈ P_G(n)` with `f(g) = σ` for the first non-identity `g`, `σ` the least
/// simple permutation of `Σ_n`, and `f(h) = id` elsewhere.
pub fn not_fg_witness(group: &Arc<GroupDesc>, n: usize) -> Result<NotFgWitness> {
    if group.order() < 2 {
        return Err(Error::Unsupported("the trivial group has P_G = Assoc, which is finitely generated".into()));
    }
    if n <= 3 {
        return Err(Error::Unsupported(format!(
            "arity {n}: simple permutations exist only for n > 3, so no witness is produced"
        )));
    }
    let sigma = least_simple(n).expect("simple permutations exist for n ≥ 4");
    let at = GroupElem(1);
    let mut values = vec![Perm::identity(n); group.order()];
    values[at.index()] = sigma.clone();
    let element = PGElement { group: group.clone(), arity: n, values };
    debug_assert_eq!(element.simple_certificate(), Some(at));
    Ok(NotFgWitness { element, at, simple: sigma })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: usize) -> Arc<GroupDesc> {
        GroupDesc::cyclic(m).unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn c2_box() -> PGElement {
        PGElement::new(c(2), vec![Perm::identity(2), p("(1 2)")]).unwrap()
    }

    fn c3_box() -> PGElement {
        PGElement::new(c(3), vec![Perm::identity(3), p("(1 2 3)"), p("(1 3 2)")]).unwrap()
    }

    #[test]
    fn unit_laws() {
        let f = c2_box();
        assert_eq!(PGElement::unit(c(2)).gamma(&[f.clone()]).unwrap(), f);
        let u = PGElement::unit(c(2));
        assert_eq!(f.gamma(&[u.clone(), u]).unwrap(), f);
        assert_eq!(f.partial_compose(1, &PGElement::unit(c(2))).unwrap(), f);
        assert!(f.partial_compose(3, &f).is_err());
    }

    #[test]
    fn c2_gamma_example() {
        let t = PGElement::tensor(c(2));
        let r = c2_box().gamma(&[t.clone(), t]).unwrap();
        assert_eq!(r.values()[0], Perm::identity(4));
        assert_eq!(r.values()[1].one_line(), vec![3, 4, 1, 2]);
    }

    #[test]
    fn c3_table_rows() {
        let g = c(3);
        let e = PGElement::empty(g.clone());
        let u = PGElement::unit(g.clone());
        let r1 = c3_box().gamma(&[e.clone(), u.clone(), u.clone()]).unwrap();
        assert_eq!(r1.values(), &[Perm::identity(2), p("(1 2)"), Perm::identity(2)]);
        let r2 = c3_box().partial_compose(2, &e).unwrap();
        assert_eq!(r2.values(), &[Perm::identity(2), p("(1 2)"), p("(1 2)")]);
        let r3 = c3_box().partial_compose(3, &e).unwrap();
        assert_eq!(r3.values(), &[Perm::identity(2), Perm::identity(2), p("(1 2)")]);
    }

    #[test]
    fn actions() {
        let b = c2_box();
        let swapped = b.sigma_act(&p("(1 2)")).unwrap();
        assert_eq!(swapped.values(), &[p("(1 2)"), Perm::identity(2)]);
        assert_eq!(b.g_act(GroupElem(1)).unwrap(), swapped);
        assert_eq!(b.g_act(GroupElem(0)).unwrap(), b);
        assert_eq!(b.sigma_act(&Perm::identity(2)).unwrap(), b);
        assert_eq!(c3_box().g_act(GroupElem(1)).unwrap(), c3_box().sigma_act(&p("(1 2 3)")).unwrap());
        assert!(b.sigma_act(&Perm::identity(3)).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(PGElement::tensor(c(2)).is_primitive());
        assert!(c2_box().is_primitive());
        let nb = c2_box().sigma_act(&p("(1 2)")).unwrap();
        assert!(!nb.is_primitive());
        assert_eq!(nb.primitivize(), (c2_box(), p("(1 2)")));
        assert_eq!(c2_box().primitivize(), (c2_box(), Perm::identity(2)));
    }

    #[test]
    fn primitivize_reconstructs_on_c2_arity3() {
        let g = c(2);
        let all: Vec<_> = all_elements(&g, 3).collect();
        assert_eq!(all.len(), 36);
        for f in &all {
            let (q, s) = f.primitivize();
            assert!(q.is_primitive());
            assert_eq!(&q.sigma_act(&s).unwrap(), f);
        }
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(candidate_count(2, 1), Some(0));
        // n = 2: s ∈ P(1) only, which leaves no room
        assert_eq!(candidate_count(2, 2), Some(0));
        // n = 3: s ∈ P(2) (4 elements), (h1,h2) arities (1,2),(2,1) → 4·(4+4)
        assert_eq!(candidate_count(2, 3), Some(32));
    }

    #[test]
    fn below_small_arities() {
        let g = c(2);
        assert!(!generated_from_below_exact(&PGElement::unit(g.clone())).unwrap());
        assert!(!generated_from_below_exact(&c2_box()).unwrap());
        let t = PGElement::tensor(g.clone());
        let tt = t.gamma(&[t.clone(), t.clone()]).unwrap();
        assert!(generated_from_below_exact(&tt).unwrap());
        let d = find_decomposition(&tt.sigma_act(&p("(1 3)(2 4)")).unwrap(), DEFAULT_SEARCH_CAP).unwrap().unwrap();
        assert_eq!(d.evaluate().unwrap(), tt.sigma_act(&p("(1 3)(2 4)")).unwrap());
    }

    #[test]
    fn search_cap_is_enforced() {
        let w = not_fg_witness(&c(2), 4).unwrap();
        assert!(matches!(find_decomposition(&w.element, 10), Err(Error::Infeasible { cap: 10, .. })));
    }

    #[test]
    fn witness_shape() {
        let w = not_fg_witness(&c(2), 4).unwrap();
        assert_eq!(w.simple.one_line(), vec![2, 4, 1, 3]);
        assert!(w.element.is_primitive());
        assert!(!w.element.nonsimple_necessary_test());
        let w3 = not_fg_witness(&c(3), 4).unwrap();
        assert_eq!(w3.element.values()[2], Perm::identity(4));
        assert!(not_fg_witness(&c(1), 5).is_err());
        assert!(not_fg_witness(&c(2), 3).is_err());
    }

    #[test]
    fn nonsimple_test_on_constants() {
        for n in 0..=5 {
            let f = PGElement::constant(c(2), Perm::identity(n));
            assert_eq!(f.nonsimple_necessary_test(), n >= 3, "n = {n}");
        }
    }

    #[test]
    fn serde_round_trip() {
        let s = serde_json::to_string(&c3_box()).unwrap();
        assert_eq!(s, r#"{"group":[[0,1,2],[1,2,0],[2,0,1]],"arity":3,"values":[[1,2,3],[2,3,1],[3,1,2]]}"#);
        let back: PGElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c3_box());
    }
}
