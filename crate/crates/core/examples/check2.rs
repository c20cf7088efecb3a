fn main() {
    use axial::universal::{universal, closed_forms, span::*};
    use axial::exact::{Frac, Var};
    use std::collections::BTreeMap;
    let u = universal();
    let t = &u.table;
    let mut sym = BTreeMap::new();
    sym.insert(Var::Lm1f, Frac::var(Var::Lm1));
    sym.insert(Var::Lm2f, Frac::var(Var::Lm2));
    // symmetric-lambda comparison for ss and a3
    for (name, derived, printed) in [
        ("ss", t.product(S, S).unwrap().clone(), closed_forms::ss()),
        ("a3", u.a3.clone(), closed_forms::a3_printed()),
        ("a0s2f", t.product(A0, S2F).unwrap().clone(), closed_forms::a0_s2f_printed()),
    ] {
        let d = derived.substitute(&sym).unwrap();
        let p = printed.substitute(&sym).unwrap();
        if d == p {
            println!("{name}: MATCH under symmetric lambda");
        } else {
            println!("{name}: symmetric-lambda MISMATCH:");
            for k in 0..DIM {
                if d[k] != p[k] {
                    println!("  slot {}: diff = {}", LABELS[k], d[k].sub(&p[k]));
                }
            }
        }
    }
    // eigenvector + zz + mother checks
    match u.eigenvectors() {
        Ok(e) => {
            println!("eigenvectors: OK");
            if e.zz == closed_forms::zz_printed() { println!("zz: MATCH"); }
            else {
                println!("zz: MISMATCH");
                let p = closed_forms::zz_printed();
                for k in 0..DIM {
                    if e.zz[k] != p[k] {
                        println!("  slot {}: derived {} printed {}", LABELS[k], e.zz[k], p[k]);
                    }
                }
            }
        }
        Err(e) => println!("eigenvectors: FAIL {e}"),
    }
    match axial::universal::mother_coefficient(u) {
        Ok(r) => println!("mother: matches={} only_axis_support={}", r.matches, r.only_axis_support),
        Err(e) => println!("mother: ERR {e}"),
    }
}
