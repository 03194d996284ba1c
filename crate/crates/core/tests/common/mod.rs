//! Independent oracles, proptest strategies and the property suites shared by
//! the integration tests and the acceptance binary.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qoperad::free_operad::{enumerate_trees, LabelMode, Node, OpTree, Signature, Symbol, UniverseRule};
use qoperad::group::{GroupDesc, GroupElem};
use qoperad::norms::{norm, OrderedGSet};
use qoperad::perm::{all_perms, Perm};
use qoperad::pg_operad::PGElement;
use qoperad::presentation::{
    c2_separable_to_tree, c2_tree_to_separable, find_uncovered_patterns, is_canonical, rewrite_steps, uncompose,
    Presented,
};

// ---------------------------------------------------------------------------
// Oracles on plain 0-indexed image vectors.

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn direct_sum(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().chain(b.iter().map(|x| x + a.len())).collect()
}

pub fn skew(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|x| x + b.len()).chain(b.iter().copied()).collect()
}

/// `σ⟨τ_1, …, τ_k⟩` by labelling every point as (block, offset): the domain lists blocks
/// `0, 1, …`, the codomain lists them in the order `σ⁻¹(0), σ⁻¹(1), …`, and the point
/// `(j, x)` goes to the codomain position of `(j, τ_j(x))`.
pub fn permuted_block_sum(sigma: &[usize], taus: &[Vec<usize>]) -> Vec<usize> {
    let sinv = inverse(sigma);
    let codomain: Vec<(usize, usize)> =
        sinv.iter().flat_map(|&j| (0..taus[j].len()).map(move |y| (j, y))).collect();
    let position: HashMap<(usize, usize), usize> = codomain.iter().enumerate().map(|(p, &pt)| (pt, p)).collect();
    taus.iter().enumerate().flat_map(|(j, tau)| tau.iter().map(move |&y| (j, y))).map(|pt| position[&pt]).collect()
}

/// Every interval of positions of size `2..n` checked against the set of its values.
pub fn is_simple_naive(p: &[usize]) -> bool {
    let n = p.len();
    for len in 2..n {
        for start in 0..=n - len {
            let vals: HashSet<usize> = p[start..start + len].iter().copied().collect();
            let lo = *vals.iter().min().unwrap();
            if (lo..lo + len).all(|v| vals.contains(&v)) {
                return false;
            }
        }
    }
    true
}

/// `sep[n]`: the closure of `{1}` under block and skew sums, level by level.
pub fn separable_closure(max: usize) -> Vec<HashSet<Vec<usize>>> {
    let mut sep: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); max + 1];
    if max >= 1 {
        sep[1].insert(vec![0]);
    }
    for n in 2..=max {
        let mut level = HashSet::new();
        for k in 1..n {
            for a in &sep[k] {
                for b in &sep[n - k] {
                    level.insert(direct_sum(a, b));
                    level.insert(skew(a, b));
                }
            }
        }
        sep[n] = level;
    }
    sep
}

/// Large Schröder numbers from their three-term recurrence.
pub fn schroeder_recurrence(max: usize) -> Vec<u128> {
    let mut s = vec![1u128, 2];
    for n in 2..=max {
        let n = n as u128;
        let next = (3 * (2 * n - 1) * s[n as usize - 1] - (n - 2) * s[n as usize - 2]) / (n + 1);
        s.push(next);
    }
    s.truncate(max + 1);
    s
}

fn all_value_tuples(order: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    (0..order).map(|_| perms.clone()).multi_cartesian_product().collect()
}

/// Primitive parts of all `γ(s; h_1, …, h_k)` in `P_G(n)` with every arity below `n`,
/// composed pointwise with [`permuted_block_sum`].
pub fn from_below_naive(order: usize, n: usize) -> HashSet<Vec<Vec<usize>>> {
    let elements: Vec<Vec<Vec<Vec<usize>>>> = (0..n).map(|m| all_value_tuples(order, m)).collect();
    let mut out = HashSet::new();
    for k in 0..n {
        for arities in (0..k).map(|_| 0..n).multi_cartesian_product() {
            if arities.iter().sum::<usize>() != n {
                continue;
            }
            let choices: Vec<&Vec<Vec<Vec<usize>>>> = arities.iter().map(|&m| &elements[m]).collect();
            for s in &elements[k] {
                for hs in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
                    let values: Vec<Vec<usize>> = (0..order)
                        .map(|g| {
                            let taus: Vec<Vec<usize>> = hs.iter().map(|h| h[g].clone()).collect();
                            permuted_block_sum(&s[g], &taus)
                        })
                        .collect();
                    let inv = inverse(&values[0]);
                    out.insert(values.iter().map(|v| compose(v, &inv)).collect());
                }
            }
        }
    }
    out
}

/// Every table on `{0, …, m-1}` with identity `0` whose rows and columns are permutations.
pub fn normalized_latin_squares(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(t: &mut Vec<Vec<usize>>, cell: usize, m: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if cell == m * m {
            out.push(t.clone());
            return;
        }
        let (r, c) = (cell / m, cell % m);
        if r == 0 || c == 0 {
            t[r][c] = r.max(c);
            let ok = (0..r).all(|i| t[i][c] != t[r][c]) && (0..c).all(|j| t[r][j] != t[r][c]);
            if ok {
                fill(t, cell + 1, m, out);
            }
            return;
        }
        for v in 0..m {
            if (0..r).all(|i| t[i][c] != v) && (0..c).all(|j| t[r][j] != v) {
                t[r][c] = v;
                fill(t, cell + 1, m, out);
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![vec![0; m]; m], 0, m, &mut out);
    out
}

pub fn is_associative(t: &[Vec<usize>]) -> bool {
    let m = t.len();
    (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// A loop of order 5 with `(1·1)·2 ≠ 1·(1·2)`.
pub fn nonassociative_loop5() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ]
}

/// Every body with exactly `k` operation nodes, labels at the identity, any arity.
pub fn bodies_with_nodes(box_arity: usize, k: usize) -> Vec<Node> {
    fn go(box_arity: usize, k: usize, memo: &mut HashMap<usize, Vec<Node>>) -> Vec<Node> {
        if let Some(v) = memo.get(&k) {
            return v.clone();
        }
        let mut out = Vec::new();
        match k {
            0 => out.push(Node::Leaf),
            1 => out.push(Node::e()),
            _ => {}
        }
        if k >= 1 {
            for (symbol, width) in [(Symbol::Tensor, 2), (Symbol::Box, box_arity)] {
                for split in (0..width).map(|_| 0..k).multi_cartesian_product() {
                    if split.iter().sum::<usize>() != k - 1 {
                        continue;
                    }
                    let kids: Vec<Vec<Node>> = split.iter().map(|&c| go(box_arity, c, memo)).collect();
                    for choice in kids.iter().map(|v| v.iter().cloned()).multi_cartesian_product() {
                        out.push(Node::op(symbol, choice));
                    }
                }
            }
        }
        memo.insert(k, out.clone());
        out
    }
    go(box_arity, k, &mut HashMap::new())
}

// ---------------------------------------------------------------------------
// Strategies.

pub fn klein_four() -> Arc<GroupDesc> {
    GroupDesc::from_table(vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]).unwrap()
}

pub fn test_groups() -> Vec<Arc<GroupDesc>> {
    vec![GroupDesc::cyclic(2).unwrap(), GroupDesc::cyclic(3).unwrap(), klein_four()]
}

pub fn perm(n: usize) -> BoxedStrategy<Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap()).boxed()
}

pub fn element(group: Arc<GroupDesc>, n: usize) -> BoxedStrategy<PGElement> {
    let m = group.order();
    proptest::collection::vec(perm(n), m).prop_map(move |v| PGElement::new(group.clone(), v).unwrap()).boxed()
}

pub fn element_upto(group: Arc<GroupDesc>, max: usize) -> BoxedStrategy<PGElement> {
    (0..=max).prop_flat_map(move |n| element(group.clone(), n)).boxed()
}

pub fn elements_with_arities(group: Arc<GroupDesc>, count: usize, max: usize) -> BoxedStrategy<Vec<PGElement>> {
    proptest::collection::vec(element_upto(group, max), count).boxed()
}

fn label(order: usize, labeled: bool) -> BoxedStrategy<GroupElem> {
    if labeled {
        (0..order).prop_map(GroupElem).boxed()
    } else {
        Just(GroupElem::IDENTITY).boxed()
    }
}

pub fn body(order: usize, box_arity: usize, labeled: bool, depth: u32) -> BoxedStrategy<Node> {
    let e = label(order, labeled).prop_map(|g| Node::Op { g, symbol: Symbol::E, children: Vec::new() });
    let base = prop_oneof![3 => Just(Node::Leaf), 1 => e];
    base.prop_recursive(depth, 32, box_arity as u32, move |inner| {
        let tensor = (label(order, labeled), proptest::collection::vec(inner.clone(), 2))
            .prop_map(|(g, children)| Node::Op { g, symbol: Symbol::Tensor, children });
        let boxed = (label(order, labeled), proptest::collection::vec(inner, box_arity))
            .prop_map(|(g, children)| Node::Op { g, symbol: Symbol::Box, children });
        prop_oneof![tensor, boxed]
    })
    .boxed()
}

pub fn labeled_tree(sig: &Signature, depth: u32) -> BoxedStrategy<OpTree> {
    body(sig.group().order(), sig.box_arity(), true, depth)
        .prop_flat_map(|b| {
            let n = b.leaf_count();
            (Just(b), perm(n))
        })
        .prop_map(|(b, root)| OpTree::new(b, root).unwrap())
        .boxed()
}

pub fn primitive_tree(sig: &Signature, depth: u32) -> BoxedStrategy<OpTree> {
    body(sig.group().order(), sig.box_arity(), false, depth).prop_map(OpTree::primitive).boxed()
}

/// A transitive cyclic-group orbit `C_m / C_{m/d}` of size `d`, as generator shifts.
fn cyclic_orbits(m: usize) -> BoxedStrategy<Vec<usize>> {
    let divisors: Vec<usize> = (1..=m).filter(|d| m % d == 0).collect();
    proptest::collection::vec(proptest::sample::select(divisors), 1..=3).boxed()
}

/// A random ordered `C_m`-set: a disjoint union of orbits `Z/d` with `g^a` acting by `+a`,
/// then reordered by a random permutation.
pub fn cyclic_gset(m: usize) -> BoxedStrategy<OrderedGSet> {
    cyclic_orbits(m)
        .prop_flat_map(|orbits| {
            let size = orbits.iter().sum();
            (Just(orbits), perm(size))
        })
        .prop_map(move |(orbits, rho)| {
            let group = GroupDesc::cyclic(m).unwrap();
            let action: Vec<Vec<usize>> = (0..m)
                .map(|a| {
                    let mut row = Vec::new();
                    let mut off = 0;
                    for &d in &orbits {
                        row.extend((0..d).map(|x| off + (x + a) % d));
                        off += d;
                    }
                    row
                })
                .collect();
            let permuted: Vec<Vec<usize>> = action
                .iter()
                .map(|row| {
                    let inv = inverse(rho.images());
                    (0..row.len()).map(|y| rho.apply(row[inv[y]])).collect()
                })
                .collect();
            OrderedGSet::new(group, permuted, format!("orbits {orbits:?}")).unwrap()
        })
        .boxed()
}

// ---------------------------------------------------------------------------
// Property suites. Each returns the first failure as text.

pub fn run<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new(config);
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn tc<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Units, associativity, both equivariance laws and the action laws of `P_G`.
pub fn operad_axioms() -> Result<(), String> {
    for group in test_groups() {
        let gname = format!("order {}", group.order());
        let unit = PGElement::unit(group.clone());

        run(&format!("unit laws ({gname})"), 128, element_upto(group.clone(), 6), |f| {
            let ones = vec![unit.clone(); f.arity()];
            prop_assert_eq!(tc(f.gamma(&ones))?, f.clone());
            prop_assert_eq!(tc(unit.gamma(std::slice::from_ref(&f)))?, f);
            Ok(())
        })?;

        let assoc = (0..=3usize)
            .prop_flat_map({
                let group = group.clone();
                move |k| (element(group.clone(), k), elements_with_arities(group.clone(), k, 2))
            })
            .prop_flat_map({
                let group = group.clone();
                move |(f, gs)| {
                    let total = gs.iter().map(PGElement::arity).sum();
                    (Just(f), Just(gs), elements_with_arities(group.clone(), total, 2))
                }
            });
        run(&format!("associativity ({gname})"), 128, assoc, |(f, gs, hs)| {
            let lhs = tc(tc(f.gamma(&gs))?.gamma(&hs))?;
            let mut rest = hs.as_slice();
            let mut inner = Vec::new();
            for g in &gs {
                let (now, later) = rest.split_at(g.arity());
                inner.push(tc(g.gamma(now))?);
                rest = later;
            }
            prop_assert_eq!(lhs, tc(f.gamma(&inner))?);
            Ok(())
        })?;

        let equiv = (0..=4usize).prop_flat_map({
            let group = group.clone();
            move |k| {
                (
                    element(group.clone(), k),
                    perm(k),
                    elements_with_arities(group.clone(), k, 3),
                    proptest::collection::vec((0..=3usize).prop_flat_map(perm), k),
                )
            }
        });
        run(&format!("equivariance ({gname})"), 128, equiv, |(f, sigma, hs, taus)| {
            check_equivariance(&f, &sigma, &hs)?;
            let taus: Vec<Perm> = hs
                .iter()
                .zip(&taus)
                .map(|(h, t)| if t.len() == h.arity() { t.clone() } else { Perm::identity(h.arity()) })
                .collect();
            let twisted: Vec<PGElement> = hs.iter().zip(&taus).map(|(h, t)| h.sigma_act(t).unwrap()).collect();
            let block: Vec<usize> = {
                let v: Vec<Vec<usize>> = taus.iter().map(|t| t.images().to_vec()).collect();
                v.iter().fold(Vec::new(), |acc, t| direct_sum(&acc, t))
            };
            let expected = tc(tc(f.gamma(&hs))?.sigma_act(&Perm::from_images(block).unwrap()))?;
            prop_assert_eq!(tc(f.gamma(&twisted))?, expected);
            Ok(())
        })?;

        let action = (0..=4usize).prop_flat_map({
            let group = group.clone();
            let m = group.order();
            move |k| (element(group.clone(), k), elements_with_arities(group.clone(), k, 3), 0..m, 0..m, perm(k), perm(k))
        });
        run(&format!("action laws ({gname})"), 128, action, |(f, hs, a, b, s, t)| {
            let (a, b) = (GroupElem(a), GroupElem(b));
            let ab = tc(group.multiply(a, b))?;
            prop_assert_eq!(tc(tc(f.g_act(b))?.g_act(a))?, tc(f.g_act(ab))?);
            prop_assert_eq!(tc(tc(f.sigma_act(&s))?.sigma_act(&t))?, tc(f.sigma_act(&tc(s.compose(&t))?))?);
            prop_assert_eq!(tc(tc(f.g_act(a))?.sigma_act(&s))?, tc(tc(f.sigma_act(&s))?.g_act(a))?);
            let moved: Vec<PGElement> = hs.iter().map(|h| h.g_act(a).unwrap()).collect();
            prop_assert_eq!(tc(tc(f.gamma(&hs))?.g_act(a))?, tc(tc(f.g_act(a))?.gamma(&moved))?);
            for (i, h) in hs.iter().enumerate() {
                let mut ones = vec![PGElement::unit(group.clone()); f.arity()];
                ones[i] = h.clone();
                prop_assert_eq!(tc(f.partial_compose(i + 1, h))?, tc(f.gamma(&ones))?);
            }
            Ok(())
        })?;

        run(&format!("gamma agrees with the block-sum oracle ({gname})"), 128, action_gamma(group.clone()), |(f, hs)| {
            let got = tc(f.gamma(&hs))?;
            for g in group.elements() {
                let taus: Vec<Vec<usize>> = hs.iter().map(|h| h.value(g).images().to_vec()).collect();
                let expected = permuted_block_sum(f.value(g).images(), &taus);
                prop_assert_eq!(got.value(g).images(), expected.as_slice());
            }
            Ok(())
        })?;
    }
    exhaustive_c2_equivariance()
}

fn action_gamma(group: Arc<GroupDesc>) -> BoxedStrategy<(PGElement, Vec<PGElement>)> {
    (0..=4usize)
        .prop_flat_map(move |k| (element(group.clone(), k), elements_with_arities(group.clone(), k, 3)))
        .boxed()
}

/// `γ(f·σ; h_1, …, h_k) = γ(f; h_{σ⁻¹(1)}, …, h_{σ⁻¹(k)})·σ⟨|h_1|, …, |h_k|⟩`.
fn check_equivariance(f: &PGElement, sigma: &Perm, hs: &[PGElement]) -> Result<(), TestCaseError> {
    let lhs = tc(tc(f.sigma_act(sigma))?.gamma(hs))?;
    let inv = sigma.inverse();
    let shuffled: Vec<PGElement> = (0..hs.len()).map(|i| hs[inv.apply(i)].clone()).collect();
    let identities: Vec<Vec<usize>> = hs.iter().map(|h| (0..h.arity()).collect()).collect();
    let block = Perm::from_images(permuted_block_sum(sigma.images(), &identities)).unwrap();
    let rhs = tc(tc(f.gamma(&shuffled))?.sigma_act(&block))?;
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// The first equivariance law over every `f ∈ P_{C2}(k)`, `σ ∈ Σ_k`, `k ≤ 3`, and every
/// `(h_1, …, h_k)` of total arity at most 4.
pub fn exhaustive_c2_equivariance() -> Result<(), String> {
    let group = GroupDesc::cyclic(2).unwrap();
    let by_arity: Vec<Vec<PGElement>> = (0..=4).map(|m| qoperad::pg_operad::all_elements(&group, m).collect()).collect();
    for k in 0..=3 {
        for arities in (0..k).map(|_| 0..=4usize).multi_cartesian_product() {
            if arities.iter().sum::<usize>() > 4 {
                continue;
            }
            for hs in arities.iter().map(|&m| by_arity[m].iter().cloned()).multi_cartesian_product() {
                for f in &by_arity[k] {
                    for sigma in all_perms(k) {
                        check_equivariance(f, &sigma, &hs).map_err(|e| format!("exhaustive C2 equivariance: {e}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// `φ` commutes with composition, the group action and the symmetric action.
pub fn phi_equivariance() -> Result<(), String> {
    let sigs = vec![Signature::c2(), Signature::c3(), Signature::regular(GroupDesc::cyclic(4).unwrap()), Signature::regular(klein_four())];
    for sig in sigs {
        let name = format!("order {}", sig.group().order());
        let m = sig.group().order();
        let small = labeled_tree(&sig, 1);
        let strategy = labeled_tree(&sig, 2).prop_flat_map(move |t| {
            let n = t.arity();
            (Just(t), proptest::collection::vec(small.clone(), n), 0..m, perm(n))
        });
        run(&format!("φ equivariance ({name})"), 96, strategy, |(t, hs, a, sigma)| {
            let a = GroupElem(a);
            let ft = tc(t.evaluate(&sig))?;
            let fhs: Vec<PGElement> = hs.iter().map(|h| h.evaluate(&sig).unwrap()).collect();
            prop_assert_eq!(tc(tc(t.gamma(&hs))?.evaluate(&sig))?, tc(ft.gamma(&fhs))?);
            prop_assert_eq!(tc(tc(t.g_act(sig.group(), a))?.evaluate(&sig))?, tc(ft.g_act(a))?);
            prop_assert_eq!(tc(tc(t.sigma_act(&sigma))?.evaluate(&sig))?, tc(ft.sigma_act(&sigma))?);
            Ok(())
        })?;
    }
    Ok(())
}

/// Collects the normal forms reachable from `t` by [`rewrite_steps`], failing on a cycle.
fn normal_forms(
    t: &OpTree,
    memo: &mut HashMap<OpTree, Option<Vec<OpTree>>>,
) -> Result<Vec<OpTree>, String> {
    match memo.get(t) {
        Some(Some(v)) => return Ok(v.clone()),
        Some(None) => return Err(format!("rewriting loops through {t}")),
        None => {}
    }
    memo.insert(t.clone(), None);
    let steps = rewrite_steps(t);
    let mut out: Vec<OpTree> = if steps.is_empty() {
        vec![t.clone()]
    } else {
        let mut acc = Vec::new();
        for s in &steps {
            acc.extend(normal_forms(s, memo)?);
        }
        acc.sort();
        acc.dedup();
        acc
    };
    out.shrink_to_fit();
    memo.insert(t.clone(), Some(out.clone()));
    Ok(out)
}

/// Termination and confluence over every primitive tree with at most `max_nodes`
/// operation nodes, soundness on random trees, and the C2/C3 read-back maps.
pub fn canonicalization(max_nodes: usize) -> Result<(), String> {
    for p in Presented::ALL {
        let sig = p.signature();
        let mut memo = HashMap::new();
        let max_arity = 1 + max_nodes * (sig.box_arity() - 1);
        for n in 0..=max_arity {
            let rule = UniverseRule { arity: n, max_unreduced: None, max_nodes: Some(max_nodes), labels: LabelMode::Primitive };
            let trees = enumerate_trees(&sig, &rule).map_err(|e| e.to_string())?;
            for t in &trees {
                let nf = normal_forms(t, &mut memo)?;
                let canon = p.canonicalize(t).map_err(|e| e.to_string())?;
                ensure(nf == vec![canon.clone()], || format!("{p}: {t} reaches {nf:?}, canonicalize gives {canon}"))?;
                ensure(is_canonical(&canon), || format!("{p}: {canon} is not flagged canonical"))?;
            }
        }

        let tree = primitive_tree(&sig, 4);
        run(&format!("canonicalize preserves φ ({p})"), 128, tree, |t| {
            let c = tc(p.canonicalize(&t))?;
            prop_assert_eq!(tc(c.evaluate(&sig))?, tc(t.evaluate(&sig))?);
            prop_assert!(is_canonical(&c));
            prop_assert_eq!(tc(p.canonicalize(&c))?, c);
            Ok(())
        })?;
    }

    let mut count = 0;
    for sigma in all_perms(6) {
        if let Ok(t) = c2_separable_to_tree(&sigma) {
            count += 1;
            let back = c2_tree_to_separable(&t).map_err(|e| e.to_string())?;
            ensure(back == sigma, || format!("Σ6 round trip: {sigma} → {t} → {back}"))?;
        }
    }
    ensure(count == 394, || format!("{count} separable permutations in Σ6"))?;

    let sig = Signature::c3();
    for n in 0..=6 {
        for t in Presented::C3.enumerate_canonical(n) {
            let f = t.evaluate(&sig).map_err(|e| e.to_string())?;
            for (node, j) in find_uncovered_patterns(&f).map_err(|e| e.to_string())? {
                let smaller = uncompose(&f, node, j).map_err(|e| e.to_string())?;
                let h = node.tree().evaluate(&sig).map_err(|e| e.to_string())?;
                let regraft = smaller.partial_compose(j, &h).map_err(|e| e.to_string())?;
                ensure(regraft == f, || format!("{t}: uncompose {node} at {j} then regraft gives {regraft}"))?;
            }
        }
    }
    Ok(())
}

/// Norms turn reorderings into conjugation, disjoint unions into `γ(⊗; ⊗_T, ⊗_S)` and
/// lexicographic products into `γ(⊗_T; ⊗_S, …, ⊗_S)`.
pub fn norm_functoriality() -> Result<(), String> {
    for m in [2usize, 3, 4, 6] {
        let group = GroupDesc::cyclic(m).unwrap();
        let strategy = (cyclic_gset(m), cyclic_gset(m)).prop_flat_map(|(t, s)| {
            let n = t.size();
            (Just(t), Just(s), perm(n))
        });
        let tensor = PGElement::tensor(group.clone());
        run(&format!("norm functoriality (C{m})"), 96, strategy, |(t, s, rho)| {
            let nt = norm(&t);
            prop_assert!(nt.is_primitive());
            for a in group.elements() {
                for b in group.elements() {
                    let ab = tc(group.multiply(a, b))?;
                    prop_assert_eq!(nt.value(ab), &(nt.value(a) * nt.value(b)));
                }
                prop_assert_eq!(tc(nt.g_act(a))?, tc(nt.sigma_act(nt.value(a)))?);
            }

            let moved = norm(&tc(t.reorder(&rho))?);
            for a in group.elements() {
                let expected = &(&rho * nt.value(a)) * &rho.inverse();
                prop_assert_eq!(moved.value(a), &expected);
            }

            let (a_len, b_len) = (t.size(), s.size());
            let union: Vec<Vec<usize>> = t
                .action()
                .iter()
                .zip(s.action())
                .map(|(x, y)| x.iter().copied().chain(y.iter().map(|v| v + a_len)).collect())
                .collect();
            let union = tc(OrderedGSet::new(group.clone(), union, "union"))?;
            let ns = norm(&s);
            prop_assert_eq!(norm(&union), tc(tensor.gamma(&[nt.clone(), ns.clone()]))?);

            let product: Vec<Vec<usize>> = t
                .action()
                .iter()
                .zip(s.action())
                .map(|(x, y)| (0..a_len * b_len).map(|i| x[i / b_len] * b_len + y[i % b_len]).collect())
                .collect();
            let product = tc(OrderedGSet::new(group.clone(), product, "product"))?;
            prop_assert_eq!(norm(&product), tc(nt.gamma(&vec![ns; a_len]))?);
            Ok(())
        })?;
    }
    Ok(())
}
