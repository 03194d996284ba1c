//! Canonical C2 trees, Schröder counts and separable permutations.

use qoperad::free_operad::parse_tree;
use qoperad::perm::Perm;
use qoperad::presentation::{c2_separable_to_tree, c2_tree_to_separable, schroeder, verify_presentation, Presented, VerifyOptions};

fn main() -> qoperad::Result<()> {
    let p = Presented::C2;
    for r in p.relations() {
        println!("{}: {} = {}", r.name, r.lhs, r.rhs);
    }
    let t = parse_tree("⊠(□,⊠(⊗(□,⊠(□,□)),□))")?;
    println!("canonical form of {t}: {}", p.canonicalize(&t)?);

    for n in 1..=8 {
        println!("arity {n}: {} canonical trees, S_{} = {}", p.canonical_count(n), n - 1, schroeder(n - 1)?);
    }

    let sigma: Perm = "[3,4,1,2,5]".parse()?;
    let tree = c2_separable_to_tree(&sigma)?;
    println!("{sigma} ↦ {tree} ↦ {}", c2_tree_to_separable(&tree)?);
    println!("[2,4,1,3]: {}", c2_separable_to_tree(&"[2,4,1,3]".parse()?).unwrap_err());

    let report = verify_presentation(p, &VerifyOptions::quick(p, 5))?;
    println!("verified through arity 5: {}", report.verified());
    Ok(())
}
