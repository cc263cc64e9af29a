// Pieri coefficients and the one-variable recurrence.

use symfunc::macdonald::{pieri_coeff, pieri_expand, recurrence_expand, PieriKind};
use symfunc::partitions::Partition;

pub fn run_example() -> symfunc::Result<()> {
    let mu = Partition::new(vec![2, 1])?;
    for (lam, c) in pieri_expand(&mu, 1)? {
        assert_eq!(c, pieri_coeff(&lam, &mu, PieriKind::Phi)?);
        println!("P{mu} g_1 ∋ {c} P{lam}");
    }
    let lam = Partition::new(vec![2, 2])?;
    for (nu, c) in recurrence_expand(&lam)? {
        println!("P{lam}(X + z) ∋ {c} P{nu} z^{}", lam.size() - nu.size());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
