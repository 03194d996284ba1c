//! Elements of P_C3, composition, both actions and the primitive factorization.

use qoperad::group::{GroupDesc, GroupElem};
use qoperad::perm::Perm;
use qoperad::pg_operad::{element_count, PGElement};

fn main() -> qoperad::Result<()> {
    let c3 = GroupDesc::cyclic(3)?;
    let p = |s: &str| s.parse::<Perm>();
    let rot = PGElement::new(c3.clone(), vec![p("[1,2,3]")?, p("[2,3,1]")?, p("[3,1,2]")?])?;
    let tensor = PGElement::tensor(c3.clone());
    let swap = PGElement::constant(c3.clone(), p("[2,1]")?);

    println!("f = {rot}");
    println!("γ(f; ⊗, 𝟙, [2,1]) = {}", rot.gamma(&[tensor.clone(), PGElement::unit(c3.clone()), swap.clone()])?);
    println!("f ∘_2 ⊗ = {}", rot.partial_compose(2, &tensor)?);
    println!("g·f = {}", rot.g_act(GroupElem(1))?);
    let moved = rot.sigma_act(&p("[2,1,3]")?)?;
    println!("f·[2,1,3] = {moved}");
    let (prim, sigma) = moved.primitivize();
    println!("primitive part {prim}, times {sigma}");

    for n in 0..=5 {
        println!("|P_C3({n})| = {}", element_count(3, n).expect("fits"));
    }
    Ok(())
}
