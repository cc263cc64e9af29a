// Delta series, their Jabotinsky matrices, and the Stirling and Lah tables.

use symfunc::umbral::{jabotinsky, stirling_lah_extract, transition_matrix, DeltaSeries};

pub fn run_example() -> symfunc::Result<()> {
    let f = DeltaSeries::exp_minus_one(6);
    let seed = DeltaSeries::seed_of(&f)?;
    println!("f = {f}");
    println!("seed = {seed}");
    assert!(jabotinsky(&f).mul(&jabotinsky(&seed))?.is_identity());

    for (name, seed) in [
        ("A", seed),
        ("B", DeltaSeries::seed_of(&DeltaSeries::one_minus_exp_neg(6))?),
        ("L", DeltaSeries::mobius(6)),
    ] {
        let m = transition_matrix(&seed, 5)?;
        println!("{name}, one-row entries scaled by n!/k!:");
        for row in stirling_lah_extract(&m, 5)? {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
            println!("  {}", cells.join(""));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
