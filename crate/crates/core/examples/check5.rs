fn main() {
    use axial::universal::{universal, closed_forms, span::*};
    let u = universal();
    let t = &u.table;
    for (name, derived, printed) in [
        ("a3", u.a3.clone(), closed_forms::a3_printed()),
        ("a0s2f", t.product(A0, S2F).unwrap().clone(), closed_forms::a0_s2f_printed()),
        ("ss", t.product(S, S).unwrap().clone(), closed_forms::ss()),
    ] {
        println!("== {name}");
        for k in 0..DIM {
            if derived[k] != printed[k] {
                println!("  {}: Δ = {}", LABELS[k], derived[k].sub(&printed[k]));
            }
        }
    }
    // independent 6A anchor for a3: al=1/4 gives beta=1/32, lm1=5/256, lm2=13/256,
    // a3 = am2+a0+a2-am1-a1+kappa(s2-s2f), kappa = 4(1-2al)/(al(3al-1)) = -32
    use axial::exact::{Frac, Var};
    use std::collections::BTreeMap;
    let mut asn = BTreeMap::new();
    asn.insert(Var::Al, Frac::rat(1,4));
    asn.insert(Var::Bt, Frac::rat(1,32));
    asn.insert(Var::Lm1, Frac::rat(5,256));
    asn.insert(Var::Lm1f, Frac::rat(5,256));
    asn.insert(Var::Lm2, Frac::rat(13,256));
    asn.insert(Var::Lm2f, Frac::rat(13,256));
    let a3s = u.a3.substitute(&asn).unwrap();
    println!("a3 at 6A point: {}", a3s.display_with(&t.basis));
}
