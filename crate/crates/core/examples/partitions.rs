// Young diagram statistics: conjugates, arms and legs, B_λ, strips.

use symfunc::partitions::{arm_leg, b_stat, dominance_leq, enumerate, strip_stats, strips, Box, Partition, StripDirection, StripKind};

pub fn run_example() -> symfunc::Result<()> {
    let lam = Partition::new(vec![6, 6, 4, 2, 1])?;
    println!("λ = {lam}, λ' = {}", lam.conjugate());
    let (a, l) = arm_leg(&lam, Box::new(2, 2));
    println!("arm and leg of (2,2): {a}, {l}");
    println!("B_(2,1) = {}", b_stat(&Partition::new(vec![2, 1])?));

    let mu = Partition::new(vec![3, 1])?;
    for nu in strips(&mu, StripKind::Horizontal, StripDirection::Add, 2) {
        let st = strip_stats(&nu, &mu)?;
        println!("{nu}/{mu}: C = {}, C~ = {}", st.c, st.c_tilde);
    }
    let four = enumerate(4, None, false);
    let below: Vec<_> = four.iter().filter(|p| dominance_leq(p, &Partition::new(vec![3, 1]).unwrap()).unwrap()).collect();
    println!("partitions of 4 dominated by (3,1): {below:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
