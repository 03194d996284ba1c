mod common;

#[test]
fn operad_axioms() {
    common::operad_axioms().unwrap();
}
