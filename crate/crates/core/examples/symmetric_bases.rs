// The classical bases, the Hall product and Littlewood-Richardson numbers.

use symfunc::partitions::Partition;
use symfunc::symmetric::{convert, evaluate, hall_inner, lr_coefficients, multiply, skew_schur, Basis, SymFunc};

pub fn run_example() -> symfunc::Result<()> {
    let s21 = SymFunc::basis_element(Basis::S, Partition::new(vec![2, 1])?);
    for b in Basis::ALL {
        println!("s(2,1) in {b}: {}", convert(&s21, b));
    }
    println!("<s21, s21> = {}", hall_inner(&s21, &s21));
    let sq = multiply(&s21, &s21);
    println!("s21^2 = {}", convert(&sq, Basis::S));
    let c = lr_coefficients(&Partition::new(vec![3, 2, 1])?);
    println!("c^(3,2,1)_(2,1),(2,1) = {}", c[&(Partition::new(vec![2, 1])?, Partition::new(vec![2, 1])?)]);
    println!("s(3,2)/(1) = {}", skew_schur(&Partition::new(vec![3, 2])?, &Partition::new(vec![1])?)?);
    println!("s(2,1) in two variables: {}", evaluate(&s21, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
