fn main() {
    let t0 = std::time::Instant::now();
    let u = axial::universal::universal();
    eprintln!("build: {:?}", t0.elapsed());
    let t1 = std::time::Instant::now();
    let _ = u.symmetric_lambda_table();
    eprintln!("sym table: {:?}", t1.elapsed());
}
