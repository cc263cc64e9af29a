// Macdonald polynomials: expansions, norms, the operator D and ω duality.

use symfunc::macdonald::{d_eigenvalue, macdonald_norm, macdonald_p, macdonald_q, norm_formula, omega_qt, operator_d_apply, swap_qt};
use symfunc::partitions::Partition;
use symfunc::symmetric::{convert, evaluate, Basis};

pub fn run_example() -> symfunc::Result<()> {
    let lam = Partition::new(vec![2, 1])?;
    let p = macdonald_p(&lam);
    println!("P(2,1) = {}", p.expansion());
    println!("<P, P> = {}", macdonald_norm(&lam));
    assert_eq!(macdonald_norm(&lam), norm_formula(&lam));

    let f = evaluate(p.expansion(), 3);
    assert_eq!(operator_d_apply(&f)?, f.scale(&d_eigenvalue(&lam, 3)));
    println!("D eigenvalue in 3 variables: {}", d_eigenvalue(&lam, 3));

    let lhs = convert(&omega_qt(p.expansion()), Basis::M);
    let rhs = convert(&swap_qt(&macdonald_q(&lam.conjugate())), Basis::M);
    assert_eq!(lhs, rhs);
    println!("ω P(2,1) = Q(2,1)(t, q): {lhs}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
