// In characteristic 3 the sigmas annihilate everything and the algebra is
// Jordan. Over the rationals it is not.
//
// `cargo run --example char3_jordan`

use std::error::Error;

use highwater::jordan::{char3_sigma_annihilation_check, char3_w_product, jordan_identity_check};
use highwater::{parse_element, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let gf3 = Field::prime(3)?;
    assert!(char3_sigma_annihilation_check(6, gf3)?);
    println!("w1 w3 = {}", char3_w_product(1, 3, gf3)?);

    let x = parse_element("a(0) + a(1)", gf3)?;
    let y = parse_element("a(2) - s(1)", gf3)?;
    println!("jordan identity over {gf3}: {}", jordan_identity_check(&x, &y)?);

    let q = Field::rationals();
    let x = parse_element("a(0) + a(1)", q)?;
    let y = parse_element("a(2)", q)?;
    let ok = jordan_identity_check(&x, &y)?;
    println!("jordan identity over {q}: {ok}");
    assert!(!ok);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
