// Baric algebras A ⊕ I built from a weight on A and a symmetric map into I.
//
// `cargo run --example baric_jordan`

use std::error::Error;

use highwater::jordan::{baric_jordan_build, BaricAlgebraSpec};
use highwater::sampling;
use highwater::Field;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = sampling::rng(7);
    for field in [Field::rationals(), Field::prime(5)?] {
        let spec = BaricAlgebraSpec::random(3, 2, field, &mut rng);
        let b = baric_jordan_build(&spec)?;
        let mut holds = 0;
        for _ in 0..25 {
            let x = b.random_vector(&mut rng);
            let y = b.random_vector(&mut rng);
            holds += usize::from(b.jordan_identity(&x, &y));
        }
        println!("{field}: dim {}, jordan identity on {holds}/25 pairs", b.dim());
        assert_eq!(holds, 25);
    }
    // A finite window of the highwater algebra over GF(3) has this shape.
    let spec = BaricAlgebraSpec::highwater_window(2, Field::prime(3)?);
    let b = baric_jordan_build(&spec)?;
    println!("window algebra: dim A = {}, dim = {}", b.dim_a(), b.dim());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
