// Exact arithmetic in Q(q,t): parsing, canonical text, Ω of signed alphabets.

use symfunc::qt::{omega_eval, q_pochhammer, MonomialLetter, MonomialSum, QTRational};

pub fn run_example() -> symfunc::Result<()> {
    let a: QTRational = "(1 - t)/(1 - q)".parse()?;
    let b: QTRational = "(1 - q^2)/(1 - t^2)".parse()?;
    let prod = &a * &b;
    println!("a = {a}");
    println!("a * b = {prod}");
    assert_eq!(prod, "(q + 1)/(t + 1)".parse()?);
    println!("a at (q, t) = (1/2, 1/3): {}", a.eval(&"1/2".parse().unwrap(), &"1/3".parse().unwrap())?);

    // Ω(q - εt) = (1 + t)/(1 - q)
    let s = &MonomialSum::letter(1, 0) - &MonomialSum::eps_letter(0, 1);
    let w = omega_eval(&s)?;
    println!("Ω({s}) = {w}");
    assert_eq!(w, "(1 + t)/(1 - q)".parse()?);

    let poch = q_pochhammer(MonomialLetter::plain(0, 1), 3)?;
    println!("(t; q)_3 = {poch}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
