//! Composition, block sums, skew sums and the simple/separable dichotomy.

use qoperad::perm::{all_perms, block_permutation, block_sum, is_separable, is_simple, permuted_block_sum, skew_sum, to_matrix, Perm};
use qoperad::pg_operad::least_simple;

fn main() -> qoperad::Result<()> {
    let sigma: Perm = "[2,3,1]".parse()?;
    let tau = Perm::from_cycles("(1 2)", Some(3))?;
    println!("σ = {sigma}  cycles {}", sigma.to_cycle_string());
    println!("σ∘τ = {}  (τ first)", sigma.compose(&tau)?);
    println!("σ⁻¹ = {}", sigma.inverse());
    println!("matrix of σ:\n{}", to_matrix(&sigma));

    let swap: Perm = "[2,1]".parse()?;
    let id2 = Perm::identity(2);
    println!("(2 1)⟨2,1⟩ = {}", block_permutation(&swap, &[2, 1])?);
    println!("[2,1] ⊕ [1,2] = {}", block_sum([&swap, &id2]));
    println!("[2,1] ⊖ [1,2] = {}", skew_sum(&swap, &id2));
    println!("(2 1)⟨[2,1], [1,2]⟩ = {}", permuted_block_sum(&swap, &[swap.clone(), id2.clone()])?);

    for n in 4..=7 {
        let simple = all_perms(n).filter(is_simple).count();
        let separable = all_perms(n).filter(|s| is_separable(s).unwrap_or(false)).count();
        println!("n = {n}: {simple} simple, {separable} separable, least simple {}", least_simple(n).expect("n ≥ 4"));
    }
    Ok(())
}
