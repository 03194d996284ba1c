//! Congruence closure of the relations on a bounded universe of primitive trees.

use qoperad::free_operad::{congruence_classes, enumerate_trees, CongruenceOptions, UniverseRule};
use qoperad::presentation::{is_canonical, Presented};

fn main() -> qoperad::Result<()> {
    for (p, max) in [(Presented::C2, 4), (Presented::C3, 3)] {
        let sig = p.signature();
        for n in 0..=max {
            let seeds = enumerate_trees(&sig, &UniverseRule::primitive(n, 1))?;
            let part = congruence_classes(&sig, &seeds, &p.relations(), CongruenceOptions::default())?;
            println!(
                "{p} arity {n}: {} trees, {} classes, {} canonical trees",
                part.trees.len(),
                part.class_count(),
                p.canonical_count(n)
            );
        }
        let seeds = enumerate_trees(&sig, &UniverseRule::primitive(3, 1))?;
        let part = congruence_classes(&sig, &seeds, &p.relations(), CongruenceOptions::default())?;
        if let Some(class) = part.seed_classes().into_iter().max_by_key(Vec::len) {
            let canon = class.iter().find(|t| is_canonical(t)).expect("one canonical tree per class");
            println!("largest {p} class at arity 3 has {} trees, canonical {canon}:", class.len());
            for t in class.iter().take(6) {
                println!("  {t}");
            }
        }
    }
    Ok(())
}
