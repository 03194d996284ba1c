//! The primitive element of P_C2(n) with a simple value at g is not generated from below.

use qoperad::group::GroupDesc;
use qoperad::pg_operad::{candidate_count, generated_from_below_exact, not_fg_witness, primitive_elements};

fn main() -> qoperad::Result<()> {
    let c2 = GroupDesc::cyclic(2)?;
    let w = not_fg_witness(&c2, 4)?;
    println!("witness {}  (f(g) = {} is simple)", w.element, w.simple);
    println!("exhaustive search over {} candidates", candidate_count(2, 4).expect("fits"));
    println!("generated from below: {}", generated_from_below_exact(&w.element)?);
    println!("passes the nonsimple test: {}", w.element.nonsimple_necessary_test());

    let below = primitive_elements(&c2, 4).filter(|f| generated_from_below_exact(f).unwrap_or(false)).count();
    println!("{below} of 24 primitive elements of P_C2(4) are generated from below");

    for n in 5..=8 {
        let w = not_fg_witness(&c2, n)?;
        println!("n = {n}: f(g) = {} is simple, so f is not generated from below", w.simple);
    }
    Ok(())
}
