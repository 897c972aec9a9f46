// Products of basis vectors, the weight homomorphism and the Frobenius form.
//
// `cargo run --example product_table`

use std::error::Error;

use highwater::{BasisIndex, Element, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let q = Field::rationals();
    let basis = [BasisIndex::A(0), BasisIndex::A(1), BasisIndex::A(3), BasisIndex::S(1), BasisIndex::S(2)];
    for (k, &x) in basis.iter().enumerate() {
        for &y in &basis[k..] {
            let p = Element::basis(x, q) * Element::basis(y, q);
            println!("{x} * {y} = {p}");
        }
    }

    for i in -3..=3 {
        assert!(Element::a(i, q).is_idempotent());
    }

    let x = Element::a(0, q) + Element::a(2, q).scale(&q.ratio(3, 2)) - Element::sigma(4, q);
    let y = Element::a(-1, q) - Element::sigma(1, q).scale(&q.ratio(1, 3));
    let xy = &x * &y;
    println!("weight({x}) = {}", x.weight());
    println!("weight({y}) = {}", y.weight());
    println!("weight(xy) = {}", xy.weight());
    assert_eq!(xy.weight(), x.weight() * y.weight());
    // The form is associative: (xy, z) = (x, yz).
    let z = Element::a(5, q) + Element::sigma(2, q);
    assert_eq!(xy.frobenius(&z)?, x.frobenius(&(&y * &z))?);

    let gf5 = Field::prime(5)?;
    println!("over {gf5}: a(0)*s(1) = {}", Element::a(0, gf5) * Element::sigma(1, gf5));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
