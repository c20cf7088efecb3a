fn main() {
    use axial::universal::{universal, closed_forms, span::*};
    let u = universal();
    let t = &u.table;
    for (name, derived, printed) in [
        ("a3 (reconstructed)", u.a3.clone(), closed_forms::a3()),
        ("a0s2f (reconstructed)", t.product(A0, S2F).unwrap().clone(), closed_forms::a0_s2f()),
        ("ss (reconstructed)", t.product(S, S).unwrap().clone(), closed_forms::ss()),
    ] {
        if derived == printed { println!("{name}: MATCH"); }
        else {
            println!("{name}: MISMATCH");
            for k in 0..DIM {
                if derived[k] != printed[k] {
                    println!("  {}: Δ = {}", LABELS[k], derived[k].sub(&printed[k]));
                }
            }
        }
    }
    match axial::universal::mother_coefficient(u) {
        Ok(r) => println!("mother: matches={} only_axis_support={}", r.matches, r.only_axis_support),
        Err(e) => println!("mother: ERR {e}"),
    }
    // tau-automorphism status on the completed table
    for (nm, m) in [("tau0", &u.tau0), ("tau1", &u.tau1)] {
        match t.automorphism_witness(m) {
            Ok(None) => println!("{nm}: automorphism of the completed table"),
            Ok(Some((i, j))) => println!("{nm}: NOT automorphism, witness pair ({}, {})", LABELS[i.min(7)], LABELS[j.min(7)]),
            Err(e) => println!("{nm}: ERR {e}"),
        }
    }
}
