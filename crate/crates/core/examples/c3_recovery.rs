//! Reading a canonical C3 tree back off the matrices of f(g) and f(g²).

use qoperad::group::{GroupDesc, GroupElem};
use qoperad::perm::{to_matrix, Perm};
use qoperad::pg_operad::PGElement;
use qoperad::presentation::{find_uncovered_patterns, recover_tree_c3, uncompose, Presented};

fn main() -> qoperad::Result<()> {
    let c3 = GroupDesc::cyclic(3)?;
    let fg = Perm::from_one_line(&[4, 5, 6, 7, 2, 3, 1])?;
    let fg2 = Perm::from_one_line(&[5, 6, 7, 1, 4, 2, 3])?;
    let f = PGElement::new(c3.clone(), vec![Perm::identity(7), fg, fg2])?;
    println!("f(g):\n{}\nf(g²):\n{}", to_matrix(f.value(GroupElem(1))), to_matrix(f.value(GroupElem(2))));

    let mut current = f.clone();
    while current.arity() > 1 {
        let patterns = find_uncovered_patterns(&current)?;
        let Some(&(node, j)) = patterns.first() else { break };
        println!("arity {}: uncovered {patterns:?}, peel {node} at column {j}", current.arity());
        current = uncompose(&current, node, j)?;
    }

    let t = recover_tree_c3(&f)?;
    println!("recovered {t}");
    println!("evaluates back: {}", t.evaluate(&Presented::C3.signature())? == f);
    println!("29 canonical trees at arity 3: {}", Presented::C3.canonical_count(3) == 29);

    let simple = Perm::from_one_line(&[2, 4, 1, 3])?;
    let outside = PGElement::new(c3, vec![Perm::identity(4), simple.clone(), simple.inverse()])?;
    println!("{}", recover_tree_c3(&outside).unwrap_err());
    Ok(())
}
