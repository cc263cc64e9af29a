// The rational-function lemmas behind the Kawanaka identity.

use num_rational::BigRational;
use symfunc::identities::{check_final_identity, check_phi_split, lr_proof_sides, resultant_fn, ResultantKind};
use symfunc::partitions::Partition;
use symfunc::qt::QTRational;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn run_example() -> symfunc::Result<()> {
    let (q, t) = (r(3, 7), r(-2, 5));
    let x = [r(2, 1), r(1, 3), r(-5, 4), r(7, 2)];
    for kind in ResultantKind::ALL {
        println!("{kind}(x1 : x2) = {}", resultant_fn(kind, &x[..1], &x[1..2], &q, &t, false)?);
    }
    assert!(check_phi_split(&x, 2, &q, &t)?);
    assert!(check_final_identity(&x[..3], 2, &t.recip(), &q, &t)?);

    // with q and t left symbolic
    let a = [QTRational::from_int(2), QTRational::from_int(-3)];
    assert!(check_final_identity(&a, 1, &QTRational::from_int(5), &QTRational::q(), &QTRational::t())?);

    let (lhs, rhs) = lr_proof_sides(&Partition::new(vec![2, 1])?, 1)?;
    println!("strip identity for (2,1), k = 1: {lhs} = {rhs}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
