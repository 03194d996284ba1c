//! Norms of ordered G-sets and the suboperad they generate.

use qoperad::group::{GroupDesc, GroupElem};
use qoperad::norms::{complete_orbit_set, generated_suboperad, norm, qg_generators, OrderedGSet, DEFAULT_SATURATION_CAP};
use qoperad::perm::Perm;
use qoperad::presentation::schroeder;

fn main() -> qoperad::Result<()> {
    let c4 = GroupDesc::cyclic(4)?;
    for t in complete_orbit_set(&c4)? {
        println!("{}: ⊗_T = {}", t.label(), norm(&t));
    }
    let half = OrderedGSet::cosets(c4.clone(), &[GroupElem(0), GroupElem(2)])?;
    let reordered = half.reorder(&"[2,1]".parse::<Perm>()?)?;
    println!("reordered {}: {}", half.label(), norm(&reordered));

    let c2 = GroupDesc::cyclic(2)?;
    let gens = qg_generators(&c2)?;
    for (name, f) in &gens.generators {
        println!("Q_C2 generator {name} = {f}");
    }
    let q = generated_suboperad(&gens, 6, DEFAULT_SATURATION_CAP)?;
    for n in 1..=6 {
        println!("arity {n}: {} primitive elements, S_{} = {}", q.primitive_count(n), n - 1, schroeder(n - 1)?);
    }
    Ok(())
}
