fn main() {
    use axial::universal::{universal, closed_forms};
    use axial::exact::{poly_divides};
    let u = universal();
    let r = axial::universal::mother_coefficient(u).unwrap();
    let (pre, fs) = closed_forms::mother_factors();
    println!("coefficient: num deg {} terms {}", r.coefficient.num().total_degree(), r.coefficient.num().num_terms());
    println!("den: {}", r.coefficient.den());
    // try dividing coefficient by each stated factor
    let mut rest = r.coefficient.clone();
    for (i, f) in fs.iter().enumerate() {
        match rest.div(f) {
            Ok(q) => {
                // polynomial quotient? check den stays simple
                println!("factor {} divides; rest den now: {}", i + 1, q.den());
                rest = q;
            }
            Err(e) => println!("factor {i}: div error {e}"),
        }
    }
    println!("after removing 3 factors: num {} / den {}", rest.num(), rest.den());
    println!("expected leftover (prefactor): num {} / den {}", pre.num(), pre.den());
    let ratio = rest.div(&pre).unwrap();
    println!("ratio leftover/prefactor = {}", ratio);
    let _ = poly_divides;
}
