//! One PASS/FAIL line per acceptance criterion. All comparisons are exact
//! (zero tolerance); each criterion also has a wall-clock budget.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use symfunc::identities::{
    kawanaka_sides, lr_proof_terms, sample_final_identity, sample_phi_split, verify_kawanaka, verify_kawanaka_degeneration,
    verify_schur_identity, Sampler,
};
use symfunc::macdonald::{
    macdonald_p, macdonald_q, norm_formula, omega_qt, operator_d_apply, pieri_coeff, pieri_expand, qt_inner, recurrence_expand,
    swap_qt, d_eigenvalue, PieriKind,
};
use symfunc::partitions::{
    b_stat, combine, conjugate, enumerate, staircase_complement_check, strip_stats, strips, CombineMode, Partition, StripDirection,
    StripKind,
};
use symfunc::qt::QTRational;
use symfunc::symmetric::{convert, evaluate, Basis};
use symfunc::umbral::{lr_property_holds, stirling_lah_extract, transition_matrix, DeltaSeries, TransitionMatrix};

/// Proptest cases per invariant.
const CASES: u32 = 256;
/// Random rational points per sampled lemma instance.
const SAMPLES: usize = 4;

const PRINTED_A: [[&str; 18]; 18] = [
    ["1", "-1/2", "1/2", "1/3", "-1/3", "1/3", "-1/4", "1/4", "0", "-1/4", "1/4", "1/5", "-1/5", "0", "1/5", "0", "-1/5", "1/5"],
    ["0", "1", "0", "-1", "1/2", "0", "11/12", "-7/12", "-1/12", "1/3", "0", "-5/6", "7/12", "1/12", "-5/12", "-1/12", "1/4", "0"],
    ["0", "0", "1", "0", "-1/2", "1", "0", "1/3", "-1/12", "-7/12", "11/12", "0", "-1/4", "1/12", "5/12", "-1/12", "-7/12", "5/6"],
    ["0", "0", "0", "1", "0", "0", "-3/2", "1/2", "0", "0", "0", "7/4", "-5/6", "-1/12", "1/3", "0", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "-1", "0", "1", "0", "0", "11/12", "-1/12", "-13/12", "-1/12", "11/12", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0", "0", "-1/2", "3/2", "0", "0", "0", "1/3", "-1/12", "-5/6", "7/4"],
    ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-2", "1/2", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-3/2", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-1", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-1", "0", "3/2", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "-1/2", "2"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
];

const PRINTED_B: [[&str; 18]; 18] = [
    ["1", "1/2", "-1/2", "1/3", "-1/3", "1/3", "1/4", "-1/4", "0", "1/4", "-1/4", "1/5", "-1/5", "0", "1/5", "0", "-1/5", "1/5"],
    ["0", "1", "0", "1", "-1/2", "0", "11/12", "-7/12", "-1/12", "1/3", "0", "5/6", "-7/12", "-1/12", "5/12", "1/12", "-1/4", "0"],
    ["0", "0", "1", "0", "1/2", "-1", "0", "1/3", "-1/12", "-7/12", "11/12", "0", "1/4", "-1/12", "-5/12", "1/12", "7/12", "-5/6"],
    ["0", "0", "0", "1", "0", "0", "3/2", "-1/2", "0", "0", "0", "7/4", "-5/6", "-1/12", "1/3", "0", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "1", "0", "-1", "0", "0", "11/12", "-1/12", "-13/12", "-1/12", "11/12", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0", "0", "1/2", "-3/2", "0", "0", "0", "1/3", "-1/12", "-5/6", "7/4"],
    ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "2", "-1/2", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "3/2", "0", "-1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "-1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "-3/2", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "1/2", "-2"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
];

const PRINTED_L: [[&str; 18]; 18] = [
    ["1", "1", "-1", "1", "-1", "1", "1", "-1", "0", "1", "-1", "1", "-1", "0", "1", "0", "-1", "1"],
    ["0", "1", "0", "2", "-1", "0", "3", "-2", "0", "1", "0", "4", "-3", "0", "2", "0", "-1", "0"],
    ["0", "0", "1", "0", "1", "-2", "0", "1", "0", "-2", "3", "0", "1", "0", "-2", "0", "3", "-4"],
    ["0", "0", "0", "1", "0", "0", "3", "-1", "0", "0", "0", "6", "-3", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "2", "0", "-2", "0", "0", "3", "0", "-4", "0", "3", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0", "0", "1", "-3", "0", "0", "0", "1", "0", "-3", "6"],
    ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "4", "-1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "3", "0", "-2", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "2", "0", "-2", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "2", "0", "-3", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "1", "-4"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
];

const STIRLING: [[i64; 5]; 5] = [[1, -1, 2, -6, 24], [0, 1, -3, 11, -50], [0, 0, 1, -6, 35], [0, 0, 0, 1, -10], [0, 0, 0, 0, 1]];
const UNSIGNED_STIRLING: [[i64; 5]; 5] = [[1, 1, 2, 6, 24], [0, 1, 3, 11, 50], [0, 0, 1, 6, 35], [0, 0, 0, 1, 10], [0, 0, 0, 0, 1]];
const LAH: [[i64; 5]; 5] = [[1, 2, 6, 24, 120], [0, 1, 6, 36, 240], [0, 0, 1, 12, 120], [0, 0, 0, 1, 20], [0, 0, 0, 0, 1]];

type Outcome = Result<String, String>;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|d| enumerate(d, None, false)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn seeds() -> Result<[TransitionMatrix; 3], String> {
    let a = DeltaSeries::seed_of(&DeltaSeries::exp_minus_one(6)).map_err(e)?;
    let b = DeltaSeries::seed_of(&DeltaSeries::one_minus_exp_neg(6)).map_err(e)?;
    let l = DeltaSeries::mobius(6);
    Ok([transition_matrix(&a, 5).map_err(e)?, transition_matrix(&b, 5).map_err(e)?, transition_matrix(&l, 5).map_err(e)?])
}

fn compare_printed(name: &str, m: &TransitionMatrix, printed: &[[&str; 18]; 18]) -> Result<(), String> {
    ensure(m.index().len() == 18, || format!("{name}: index has {} entries", m.index().len()))?;
    for (i, row) in printed.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            let want = BigRational::from_str(want).unwrap();
            let got = &m.entries()[i][j];
            ensure(*got == want, || format!("{name}[{},{}] = {got}, printed {want}", m.index()[i], m.index()[j]))?;
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let [a, b, l] = seeds()?;
    compare_printed("A", &a, &PRINTED_A)?;
    compare_printed("B", &b, &PRINTED_B)?;
    compare_printed("L", &l, &PRINTED_L)?;
    let a12 = a.get(&p(&[1]), &p(&[2]));
    ensure(a12 == BigRational::new((-1).into(), 2.into()), || format!("a_(1),(2) = {a12}"))?;
    let first: Vec<String> = l.entries()[0][..6].iter().map(|v| v.to_string()).collect();
    ensure(first == ["1", "1", "-1", "1", "-1", "1"], || format!("L first row {first:?}"))?;
    Ok("A, B, L match the printed 18x18 matrices entrywise".into())
}

fn table_eq(name: &str, got: &[Vec<BigInt>], want: &[[i64; 5]; 5]) -> Result<(), String> {
    let w: Vec<Vec<BigInt>> = want.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    ensure(got == w.as_slice(), || format!("{name}: got {got:?}"))
}

fn criterion_2() -> Outcome {
    let [a, b, l] = seeds()?;
    table_eq("Stirling from A", &stirling_lah_extract(&a, 5).map_err(e)?, &STIRLING)?;
    table_eq("unsigned Stirling from B", &stirling_lah_extract(&b, 5).map_err(e)?, &UNSIGNED_STIRLING)?;
    table_eq("Lah from L", &stirling_lah_extract(&l, 5).map_err(e)?, &LAH)?;
    let al = a.mul(&l).map_err(e)?;
    ensure(al == b, || "AL != B".into())?;
    Ok("three 5x5 tables exact; AL = B on all 18x18 entries".into())
}

fn criterion_3() -> Outcome {
    let labels = [("exp(z)-1", DeltaSeries::exp_minus_one(6)), ("z/(1-z)", DeltaSeries::mobius(6))];
    let mut n = 0;
    for (name, label) in labels {
        let seed = DeltaSeries::seed_of(&label).map_err(e)?;
        for f in [&label, &seed] {
            for lam in upto(5) {
                ensure(lr_property_holds(f, &lam).map_err(e)?, || format!("{name}: coproduct constants differ at {lam}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} (series, partition) pairs, |λ| <= 5, each series as label and as seed"))
}

fn criterion_4() -> Outcome {
    let all = upto(6);
    for lam in &all {
        let pl = macdonald_p(lam);
        let norm = qt_inner(pl.expansion(), pl.expansion());
        let want = norm_formula(lam);
        ensure(norm == want, || format!("<P{lam}, P{lam}> = {norm}, formula {want}"))?;
    }
    Ok(format!("{} partitions, |λ| <= 6", all.len()))
}

fn criterion_5() -> Outcome {
    let mut n_checks = 0;
    for lam in upto(4) {
        for n in 1..=3 {
            let f = evaluate(macdonald_p(&lam).expansion(), n);
            let lhs = operator_d_apply(&f).map_err(e)?;
            ensure(lhs == f.scale(&d_eigenvalue(&lam, n)), || format!("D P{lam} in {n} variables"))?;
            n_checks += usize::from(!f.is_zero());
        }
    }
    Ok(format!("|λ| <= 4, n <= 3 ({n_checks} nonzero evaluations)"))
}

fn criterion_6() -> Outcome {
    let all = upto(5);
    for lam in &all {
        let lhs = convert(&omega_qt(macdonald_p(lam).expansion()), Basis::M);
        let rhs = convert(&swap_qt(&macdonald_q(&conjugate(lam))), Basis::M);
        ensure(lhs == rhs, || format!("ω P{lam} != Q{}(t,q)", conjugate(lam)))?;
    }
    Ok(format!("{} partitions, |λ| <= 5", all.len()))
}

fn criterion_7() -> Outcome {
    let mut n = 0;
    for mu in upto(4) {
        for k in 1..=3 {
            for lam in strips(&mu, StripKind::Horizontal, StripDirection::Add, k) {
                let got: BTreeMap<Partition, QTRational> = recurrence_expand(&lam).map_err(e)?.into_iter().collect();
                let want = pieri_coeff(&lam, &mu, PieriKind::Psi).map_err(e)?;
                ensure(got.get(&mu) == Some(&want), || format!("recurrence coefficient of P{mu} in P{lam}(X+z)"))?;
                n += 1;
            }
            let expanded = pieri_expand(&mu, k).map_err(e)?;
            let phi: BTreeMap<Partition, QTRational> = strips(&mu, StripKind::Horizontal, StripDirection::Add, k)
                .into_iter()
                .map(|l| {
                    let c = pieri_coeff(&l, &mu, PieriKind::Phi).unwrap();
                    (l, c)
                })
                .collect();
            ensure(expanded == phi, || format!("P{mu} g_{k} differs from φ"))?;
            n += phi.len();
        }
    }
    Ok(format!("{n} strip coefficients, |μ| <= 4, strips of 1..=3 boxes"))
}

// (-t;q)_m/(q;q)_m as an explicit product of factors.
fn q_binomial_coefficient(m: usize) -> QTRational {
    let mut acc = QTRational::one();
    for i in 0..m {
        let num = QTRational::one() + QTRational::monomial(1, i as u32, 1);
        let den = QTRational::one() - QTRational::monomial(1, i as u32 + 1, 0);
        acc = acc * num.checked_div(&den).unwrap();
    }
    acc
}

fn criterion_8() -> Outcome {
    for (n, deg) in [(1, 8), (2, 6), (3, 5)] {
        let r = verify_kawanaka(n, deg).map_err(e)?;
        ensure(r.equal, || format!("Kawanaka fails at n = {n}, deg = {deg}: {:?}", r.per_degree))?;
    }
    let d = verify_kawanaka_degeneration(2, 6).map_err(e)?;
    ensure(d.equal, || "q = -t degeneration differs from the Schur identity at (2, 6)".into())?;
    ensure(verify_schur_identity(2, 6).map_err(e)?.equal, || "Schur identity fails at (2, 6)".into())?;
    let (lhs, _) = kawanaka_sides(1, 8).map_err(e)?;
    for m in 0..=8u32 {
        let c = lhs.coeff(&[m]);
        ensure(c == q_binomial_coefficient(m as usize), || format!("one-variable coefficient of x^{m} is {c}"))?;
    }
    Ok("(1,8), (2,6), (3,5) exact; q = -t gives the Schur identity at (2,6); n = 1 closed form through x^8".into())
}

fn criterion_9() -> Outcome {
    let mut s = Sampler::new(1);
    let mut n = 0;
    for size in 2..=4 {
        for k in 1..size {
            ensure(sample_phi_split(size, k, SAMPLES, &mut s).map_err(e)?, || format!("Φ split |X| = {size}, k = {k}"))?;
            n += 1;
        }
    }
    for size in 1..=3 {
        for k in 0..=size.min(2) {
            for inverse_t in [false, true] {
                let ok = sample_final_identity(size, k, SAMPLES, inverse_t, &mut s).map_err(e)?;
                ensure(ok, || format!("final identity |A| = {size}, k = {k}, z = 1/t: {inverse_t}"))?;
                n += 1;
            }
        }
    }
    for mu in [p(&[1]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2])] {
        for k in 0..=2 {
            ensure(lr_proof_terms(&mu, k).map_err(e)?, || format!("strip identity for {mu}, k = {k}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} lemma instances, {SAMPLES} random rational points each for the sampled ones"))
}

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_multiset)
}

fn naive_conjugate(parts: &[usize]) -> Vec<usize> {
    let top = parts.first().copied().unwrap_or(0);
    (1..=top).map(|j| parts.iter().filter(|&&x| x >= j).count()).collect()
}

// Σ q^{arm} t^{leg}, arms and legs read straight off the diagram.
fn naive_b(parts: &[usize]) -> QTRational {
    let conj = naive_conjugate(parts);
    let mut acc = QTRational::zero();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            acc += &QTRational::monomial(1, (row - j - 1) as u32, (conj[j] - i - 1) as u32);
        }
    }
    acc
}

fn nested_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (partition(8, 8), prop::collection::vec(0usize..=8, 8)).prop_filter_map("size at most 8", |(lam, cuts)| {
        if lam.size() > 8 {
            return None;
        }
        let mut prev = usize::MAX;
        let mu: Vec<usize> = lam
            .parts()
            .iter()
            .zip(&cuts)
            .map(|(&x, &c)| {
                prev = prev.min(c % (x + 1));
                prev
            })
            .collect();
        Some((lam, Partition::new(mu).unwrap()))
    })
}

fn criterion_10() -> Outcome {
    let runner = || TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() });
    runner()
        .run(&partition(9, 9), |lam| {
            let c = conjugate(&lam);
            prop_assert_eq!(c.parts(), &naive_conjugate(lam.parts())[..]);
            prop_assert_eq!(conjugate(&c), lam);
            Ok(())
        })
        .map_err(|f| format!("conjugation: {f}"))?;
    runner()
        .run(&(partition(7, 6), partition(7, 6)), |(lam, mu)| {
            let lhs = conjugate(&combine(&lam, &mu, CombineMode::Union));
            prop_assert_eq!(lhs, combine(&conjugate(&lam), &conjugate(&mu), CombineMode::Sum));
            Ok(())
        })
        .map_err(|f| format!("union/sum: {f}"))?;
    runner()
        .run(&(1usize..=4, 1usize..=5, prop::collection::vec(0usize..=5, 4)), |(n, m, raw)| {
            let lam = Partition::from_multiset(raw.into_iter().take(n).map(|x| x.min(m)).collect());
            prop_assert!(staircase_complement_check(&lam, n, m).unwrap());
            Ok(())
        })
        .map_err(|f| format!("staircase complement: {f}"))?;
    runner()
        .run(&nested_pair(), |(lam, mu)| {
            let st = strip_stats(&lam, &mu).unwrap();
            let want = naive_b(lam.parts()) - naive_b(mu.parts());
            prop_assert_eq!((&st.c + &st.c_tilde).to_qt(), want.clone());
            prop_assert_eq!((&st.r + &st.r_tilde).to_qt(), want.clone());
            prop_assert_eq!((&b_stat(&lam) - &b_stat(&mu)).to_qt(), want);
            Ok(())
        })
        .map_err(|f| format!("strip statistics: {f}"))?;
    Ok(format!("4 invariants x {CASES} random cases, zero failures"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 10] = [
        (1, "transition matrices A, B, L", Duration::from_secs(10), criterion_1),
        (2, "Stirling/Lah extraction and AL = B", Duration::from_secs(10), criterion_2),
        (3, "Littlewood-Richardson property", Duration::from_secs(60), criterion_3),
        (4, "Macdonald norm formula", Duration::from_secs(60), criterion_4),
        (5, "operator D eigenvalues", Duration::from_secs(60), criterion_5),
        (6, "ω_{q,t} duality", Duration::from_secs(60), criterion_6),
        (7, "Pieri/recurrence consistency", Duration::from_secs(60), criterion_7),
        (8, "Kawanaka identity", Duration::from_secs(300), criterion_8),
        (9, "proof lemmas", Duration::from_secs(60), criterion_9),
        (10, "combinatorial invariants", Duration::from_secs(60), criterion_10),
    ];
    let mut failed = 0;
    for (n, name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} [{n:>2}] {name}: {detail} ({:.2}s / {}s)", took.as_secs_f64(), budget.as_secs());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
