// Driving the command line in-process.

use symfunc::cli::run_captured;

pub fn run_example() -> symfunc::Result<()> {
    for argv in [
        &["symfunc", "macdonald", "P", "--partition", "1,1"][..],
        &["symfunc", "umbral-matrix", "--series", "exp-1", "--deg", "4", "--extract", "stirling", "--out", "table"],
        &["symfunc", "verify", "phi-split", "--size", "3", "--k", "1", "--seed", "7"],
    ] {
        let (code, out, err) = run_captured(argv, "");
        println!("$ {} -> exit {code}\n{out}{err}", argv[1..].join(" "));
    }
    let (_, expanded, _) = run_captured(&["symfunc", "expand", "e", "--partition", "2", "--to", "m"], "");
    let (code, back, _) = run_captured(&["symfunc", "convert", "--to", "e"], &expanded);
    assert_eq!(code, 0);
    print!("round trip: {back}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
