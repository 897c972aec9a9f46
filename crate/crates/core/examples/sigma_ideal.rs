// The ideal generated by the sigmas, the ideal J and the radical of the
// Frobenius form.
//
// `cargo run --example sigma_ideal`

use std::error::Error;

use highwater::spectral::c_vec;
use highwater::structure::{frobenius_radical_check, ideal_closure, in_j};
use highwater::{Axis, Element, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let q = Field::rationals();
    let gens: Vec<Element> = (1..=3).map(|j| Element::sigma(j, q)).collect();
    let st = ideal_closure(&gens, 5, 2)?;
    println!("ideal dims per sweep: {:?}", st.dims);
    assert!(st.basis().all(in_j));
    assert!(st.contains(&c_vec(1, Axis(0), q)?));
    let diff = Element::a(0, q) - Element::a(1, q);
    println!("{diff} in ideal: {}", st.contains(&diff));
    assert!(frobenius_radical_check(6, q));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
