// Eigenvectors of an axis and the decomposition of an element into
// eigenvalue parts.
//
// `cargo run --example eigen_decomposition`

use std::error::Error;

use highwater::spectral::{char_poly_ad4, decompose, u_vec, v_vec, w_vec, EigenPart};
use highwater::{parse_element, Axis, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let q = Field::rationals();
    let axis = Axis(2);
    let a = axis.element(q);
    for j in 1..=3 {
        let (u, v, w) = (u_vec(j, axis, q)?, v_vec(j, axis, q)?, w_vec(j, axis, q)?);
        assert!((&a * &u).is_zero());
        assert_eq!(&a * &v, v.scale(&q.ratio(2, 1)));
        assert_eq!(&a * &w, w.scale(&q.ratio(1, 2)));
        println!("u{j} = {u}");
    }
    println!("char poly of ad(a(0)): {}", char_poly_ad4(1, q)?);

    let x = parse_element("a(0) + 2*a(5) - 1/3*s(2)", q)?;
    let d = decompose(&x, axis);
    for part in EigenPart::ALL {
        println!("{part} (eigenvalue {}): {}", part.eigenvalue(q), d.component(part));
    }
    assert_eq!(d.reassemble(), x);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
