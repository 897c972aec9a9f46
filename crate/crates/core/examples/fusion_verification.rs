// Checking a fusion law on the eigenbasis of an axis, and watching a
// stricter law fail.
//
// `cargo run --example fusion_verification`

use std::error::Error;

use highwater::fusion::{hw_law, monster_law, verify_axis};
use highwater::{Axis, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let q = Field::rationals();
    let law = hw_law(q);
    println!("{law}");
    let report = verify_axis(Axis(-2), &law, 5)?;
    println!(
        "{} pairs checked, primitivity {}, all passed: {}",
        report.pairs.len(),
        report.primitivity.passed(),
        report.all_passed()
    );
    assert!(report.all_passed());

    // Over a field of characteristic 3 the eigenvalue 2 collapses onto 1/2.
    let gf3 = Field::prime(3)?;
    assert!(verify_axis(Axis(0), &hw_law(gf3), 4)?.all_passed());

    // The law of Monster type M(2, 1/2) is weaker, so it holds as well.
    let monster = monster_law(&q.ratio(2, 1), &q.ratio(1, 2))?;
    assert!(verify_axis(Axis(0), &monster, 4)?.all_passed());

    // Shrinking 1/2 * 1/2 to {0} is too strong: w-products have 2-parts.
    let half = q.ratio(1, 2);
    let tight = law.with_cell(&half, &half, &[q.zero()])?;
    let report = verify_axis(Axis(0), &tight, 3)?;
    for entry in report.failures().take(3) {
        let bad: Vec<String> = entry.check.offending.iter().map(|(p, _)| p.to_string()).collect();
        println!("{} * {} has a forbidden {}-part", entry.left, entry.right, bad.join(","));
    }
    assert!(!report.all_passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
