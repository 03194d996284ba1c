//! Parsing, drawing, grafting and evaluating trees on e, ⊗, ⊠.

use qoperad::free_operad::{enumerate_trees, parse_tree, LabelMode, NotationStyle, Signature, UniverseRule};
use qoperad::group::GroupElem;

fn main() -> qoperad::Result<()> {
    let sig = Signature::c2();
    let t = parse_tree("g·⊠(□,⊗(□,e))·[2,1]")?;
    println!("{t}\n{}", t.render(NotationStyle::Unicode));
    println!("ascii: {}", t.to_notation(NotationStyle::Ascii));
    println!("json: {}", t.to_json());
    println!("φ(t) = {}", t.evaluate(&sig)?);

    let grafted = t.graft(1, &parse_tree("⊠(□,□)")?)?;
    println!("t ∘_1 ⊠ = {grafted}  ↦ {}", grafted.evaluate(&sig)?);
    println!("g·t = {}", t.g_act(sig.group(), GroupElem(1))?);

    for n in 0..=4 {
        let rule = UniverseRule { arity: n, max_unreduced: None, max_nodes: Some(3), labels: LabelMode::Primitive };
        println!("arity {n}: {} primitive trees with at most 3 nodes", enumerate_trees(&sig, &rule)?.len());
    }
    Ok(())
}
