fn main() {
    use axial::universal::{universal, closed_forms, span::*};
    let u = universal();
    let t = &u.table;
    let checks: Vec<(&str, axial::algebra::Element, axial::algebra::Element)> = vec![
        ("a0s", t.product(A0, S).unwrap().clone(), closed_forms::a0_s()),
        ("a1s", t.product(A1, S).unwrap().clone(), closed_forms::a1_s()),
        ("a0s2", t.product(A0, S2).unwrap().clone(), closed_forms::a0_s2()),
        ("ss", t.product(S, S).unwrap().clone(), closed_forms::ss()),
        ("a3", u.a3.clone(), closed_forms::a3_printed()),
        ("a0s2f", t.product(A0, S2F).unwrap().clone(), closed_forms::a0_s2f_printed()),
    ];
    for (name, derived, printed) in checks {
        if derived == printed {
            println!("{name}: MATCH");
        } else {
            println!("{name}: MISMATCH");
            for k in 0..DIM {
                if derived[k] != printed[k] {
                    println!("  slot {}:", LABELS[k]);
                    println!("    derived: {}", derived[k]);
                    println!("    printed: {}", printed[k]);
                    let diff = derived[k].sub(&printed[k]);
                    println!("    diff:    {}", diff);
                }
            }
        }
    }
}
