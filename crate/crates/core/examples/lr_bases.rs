// Determinantal bases with the Littlewood-Richardson property, and their duals.

use symfunc::partitions::Partition;
use symfunc::symmetric::{convert, hall_inner, Basis};
use symfunc::umbral::{coproduct_constants, dual_basis, lr_basis, lr_property_holds, DeltaSeries};

pub fn run_example() -> symfunc::Result<()> {
    let f = DeltaSeries::mobius(6);
    let lam = Partition::new(vec![2, 1])?;
    let p = lr_basis(&f, &lam)?;
    println!("P(2,1) = {}", convert(&p, Basis::S));
    for ((mu, nu), c) in coproduct_constants(&f, &lam)? {
        println!("  Δ: P{mu} ⊗ P{nu} with coefficient {c}");
    }
    assert!(lr_property_holds(&f, &lam)?);
    let q = dual_basis(&f, &lam, 3)?;
    println!("<Q(2,1), P(2,1)> = {}", hall_inner(&q, &p));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
