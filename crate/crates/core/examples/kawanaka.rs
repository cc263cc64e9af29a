// Exact truncated checks of the Kawanaka generating-function identity.

use symfunc::identities::{verify_kawanaka, verify_kawanaka_degeneration};

pub fn run_example() -> symfunc::Result<()> {
    let r = verify_kawanaka(2, 4)?;
    println!("{}", serde_json::to_string(&r).expect("report serializes"));
    assert!(r.equal);
    let d = verify_kawanaka_degeneration(2, 4)?;
    println!("at q = -t: equal = {}", d.equal);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
