// The dihedral action on axes, and the involutions of the subalgebra
// spanned by the u- and v-eigenvectors.
//
// `cargo run --example automorphisms`

use std::error::Error;

use highwater::symmetry::{
    apply_dihedral, basis_pairs, check_automorphism, check_v_automorphism, orbit_order, v_basis,
    v_psi, v_rho, v_theta, DihedralElement, VElement, VInvolution,
};
use highwater::{Element, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let q = Field::rationals();
    let pairs = basis_pairs(5, q);
    for g in [DihedralElement::tau(), DihedralElement::pi(), DihedralElement::translate(3)] {
        let check = check_automorphism(|x| apply_dihedral(g, x), &pairs);
        println!("{g}: {} pairs, holds = {}", check.pairs_checked, check.holds());
    }
    let x = Element::a(2, q) + Element::sigma(3, q);
    println!("tau({x}) = {}", apply_dihedral(DihedralElement::tau(), &x));

    for map in [VInvolution::Rho, VInvolution::Theta, VInvolution::Psi] {
        assert!(check_v_automorphism(map, 6, q).holds());
    }
    let c1 = VElement::c(1, q);
    println!("psi(c1) = {}", v_psi(&c1).to_element());
    for b in v_basis(6, q) {
        assert_eq!(v_psi(&v_psi(&b)), b);
        assert_eq!(v_psi(&v_rho(&v_psi(&b))), v_theta(&b));
    }
    let order = orbit_order(|y| v_rho(&v_psi(y)), &c1, 16);
    println!("rho psi returns c1 to itself after {order:?} steps");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
