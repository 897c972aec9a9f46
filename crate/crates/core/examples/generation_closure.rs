// Growth of the subalgebra generated by two axes.
//
// `cargo run --example generation_closure`

use std::error::Error;

use highwater::structure::subalgebra_closure;
use highwater::{Element, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for field in [Field::rationals(), Field::prime(7)?, Field::prime(3)?] {
        let gens = [Element::a(0, field), Element::a(1, field)];
        let st = subalgebra_closure(&gens, 5)?;
        println!("{field}: dims {:?}, stable {}", st.dims, st.stable);
    }
    let q = Field::rationals();
    let st = subalgebra_closure(&[Element::a(0, q), Element::a(1, q)], 2)?;
    assert!(st.contains(&Element::sigma(1, q)));
    assert!(st.contains(&Element::a(-1, q)));
    assert!(st.contains(&Element::a(2, q)));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
