use super::*;
use crate::symmetric::{coproduct, hall_inner, tensor_product, Tensor};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn r(n: i64, d: i64) -> BigRational {
    ratio(n, d)
}

fn sym(b: Basis, terms: &[(&[usize], BigRational)]) -> SymFunc {
    SymFunc::from_terms(b, terms.iter().map(|(v, c)| (p(v), QTRational::from_ratio(c))))
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |a, i| a * (n - i) as i64 / (i as i64 + 1))
}

#[test]
fn composition() {
    let g = DeltaSeries::from_ints(&[2, -1, 5, 0, 3]);
    assert_eq!(DeltaSeries::identity(5).compose(&g).unwrap(), g);
    assert_eq!(DeltaSeries::mobius(9).compose(&DeltaSeries::mobius_inv(9)).unwrap(), DeltaSeries::identity(9));
    assert_eq!(DeltaSeries::exp_minus_one(8).compose(&DeltaSeries::log_one_plus(8)).unwrap(), DeltaSeries::identity(8));
    assert!(DeltaSeries::identity(3).compose(&DeltaSeries::identity(4)).is_err());
}

#[test]
fn reversion() {
    assert_eq!(DeltaSeries::identity(6).revert().unwrap(), DeltaSeries::identity(6));
    assert_eq!(DeltaSeries::exp_minus_one(10).revert().unwrap(), DeltaSeries::log_one_plus(10));
    assert_eq!(DeltaSeries::mobius_inv(10).revert().unwrap(), DeltaSeries::mobius(10));
    assert_eq!(DeltaSeries::one_minus_exp_neg(6).revert().unwrap().coeffs()[..3], [r(1, 1), r(1, 2), r(1, 3)]);
    assert_eq!(DeltaSeries::from_ints(&[0, 1, 1]).revert(), Err(Error::NonInvertible));
}

// [z^n] g = (1/n) [w^{n-1}] (w / f(w))^n
fn lagrange_inverse(f: &DeltaSeries) -> DeltaSeries {
    let n = f.order();
    // u(w) = f(w)/w, then 1/u by long division
    let u: Vec<BigRational> = (0..n).map(|i| f.coeff(i + 1)).collect();
    let mut inv = vec![BigRational::zero(); n];
    inv[0] = u[0].recip();
    for k in 1..n {
        let s: BigRational = (1..=k).map(|j| &u[j] * &inv[k - j]).sum();
        inv[k] = -s * &inv[0];
    }
    let mut pw = vec![BigRational::zero(); n];
    pw[0] = BigRational::one();
    let mut out = Vec::new();
    for m in 1..=n {
        pw = mul_trunc(&pw, &inv, n - 1);
        out.push(&pw[m - 1] / BigRational::from_integer(BigInt::from(m)));
    }
    DeltaSeries::new(out)
}

#[test]
fn reversion_matches_lagrange_inversion() {
    let samples = [
        DeltaSeries::exp_minus_one(9),
        DeltaSeries::one_minus_exp_neg(9),
        DeltaSeries::from_ints(&[3, -2, 7, 1, 0, -4, 2, 2, 1]),
        DeltaSeries::new(vec![r(-1, 2), r(1, 3), r(5, 7), r(0, 1), r(-9, 4), r(1, 1)]),
    ];
    for f in &samples {
        let g = f.revert().unwrap();
        assert_eq!(g, lagrange_inverse(f), "{f}");
        assert_eq!(f.compose(&g).unwrap(), DeltaSeries::identity(f.order()));
        assert_eq!(g.compose(f).unwrap(), DeltaSeries::identity(f.order()));
    }
}

#[test]
fn jabotinsky_matrices() {
    assert!(jabotinsky(&DeltaSeries::identity(6)).is_identity());
    let l = jabotinsky(&DeltaSeries::mobius(7));
    for n in 1..=7 {
        for k in 1..=7 {
            let want = if k <= n { binom(n - 1, k - 1) } else { 0 };
            assert_eq!(*l.get(n, k), r(want, 1), "({n},{k})");
        }
    }
    let f = DeltaSeries::exp_minus_one(7);
    let g = DeltaSeries::from_ints(&[1, 3, -1, 0, 2, 1, -5]);
    assert!(jabotinsky(&f).mul(&jabotinsky(&f.revert().unwrap())).unwrap().is_identity());
    assert_eq!(jabotinsky(&f).mul(&jabotinsky(&g)).unwrap(), jabotinsky(&g.compose(&f).unwrap()));
    assert_eq!(jabotinsky(&g).mul(&jabotinsky(&f)).unwrap(), jabotinsky(&f.compose(&g).unwrap()));
    for n in 1..=7 {
        assert_eq!(*jabotinsky(&g).get(n, n), r(1, 1));
    }
}

#[test]
fn umbral_operator_characterization() {
    for f in [DeltaSeries::exp_minus_one(8), DeltaSeries::log_one_plus(8), DeltaSeries::mobius(8), DeltaSeries::from_ints(&[2, 1, 0, -3, 1, 1, 4, 2])] {
        assert!(umbral_characterization_holds(&f), "{f}");
    }
    // U sends x^n/n! to (x)_n / n! for the seed log(1 + z)
    let u = umbral_operator(&DeltaSeries::log_one_plus(5));
    assert_eq!(&u[1][3] * BigRational::from_integer(6.into()), r(2, 1));
    assert_eq!(&u[2][3] * BigRational::from_integer(3.into()), r(-3, 1));
}

#[test]
fn generalized_complete_and_elementary() {
    let z = DeltaSeries::identity(8);
    for n in 0..=6 {
        let want = if n == 0 { SymFunc::one(Basis::H) } else { SymFunc::basis_element(Basis::H, Partition::row(n)) };
        assert_eq!(generalized_h(&z, n).unwrap(), want);
        let want = if n == 0 { SymFunc::one(Basis::E) } else { SymFunc::basis_element(Basis::E, Partition::row(n)) };
        assert_eq!(generalized_e(&z, n).unwrap(), want);
    }
    let a = DeltaSeries::seed_of(&DeltaSeries::exp_minus_one(8)).unwrap();
    assert_eq!(generalized_h(&a, 1).unwrap(), sym(Basis::H, &[(&[1], r(1, 1))]));
    assert_eq!(generalized_h(&a, 2).unwrap(), sym(Basis::H, &[(&[2], r(1, 1)), (&[1], r(-1, 2))]));
    assert_eq!(generalized_e(&a, 2).unwrap(), sym(Basis::E, &[(&[2], r(1, 1)), (&[1], r(1, 2))]));
    assert_eq!(generalized_h(&DeltaSeries::mobius(8), 2).unwrap(), sym(Basis::H, &[(&[2], r(1, 1)), (&[1], r(1, 1))]));
    assert!(generalized_h(&z, 9).is_err());
}

#[test]
fn generalized_complete_functions_convolve() {
    for f in [DeltaSeries::log_one_plus(6), DeltaSeries::mobius(6)] {
        for n in 0..=6 {
            let lhs = coproduct(&generalized_h(&f, n).unwrap(), Basis::H);
            let mut rhs: Tensor = Tensor::new();
            for k in 0..=n {
                for (key, v) in tensor_product(&generalized_h(&f, k).unwrap(), &generalized_h(&f, n - k).unwrap()) {
                    let e = rhs.entry(key).or_insert_with(QTRational::zero);
                    *e += &v;
                }
            }
            rhs.retain(|_, v| !v.is_zero());
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}

#[test]
fn lr_basis_examples() {
    let z = DeltaSeries::identity(6);
    for n in 0..=5 {
        for lam in enumerate(n, None, false) {
            assert_eq!(convert(&lr_basis(&z, &lam).unwrap(), Basis::S), SymFunc::basis_element(Basis::S, lam.clone()));
        }
    }
    let a = DeltaSeries::log_one_plus(6);
    assert_eq!(convert(&lr_basis(&a, &p(&[1])).unwrap(), Basis::S), sym(Basis::S, &[(&[1], r(1, 1))]));
    let l = DeltaSeries::mobius(6);
    assert_eq!(convert(&lr_basis(&l, &p(&[2])).unwrap(), Basis::S), sym(Basis::S, &[(&[2], r(1, 1)), (&[1], r(1, 1))]));
}

#[test]
fn row_and_column_determinants_agree() {
    for f in [DeltaSeries::log_one_plus(6), DeltaSeries::mobius(6), DeltaSeries::from_ints(&[2, -1, 3, 1, 0, 1])] {
        for n in 0..=5 {
            for lam in enumerate(n, None, false) {
                let rows = convert(&lr_basis(&f, &lam).unwrap(), Basis::M);
                let cols = convert(&lr_basis_by_columns(&f, &lam).unwrap(), Basis::M);
                assert_eq!(rows, cols, "{lam} for {f}");
            }
        }
    }
}

#[test]
fn dual_bases_pair_to_identity() {
    let z = DeltaSeries::identity(6);
    assert_eq!(convert(&dual_basis(&z, &p(&[2, 1]), 3).unwrap(), Basis::S), SymFunc::basis_element(Basis::S, p(&[2, 1])));
    let a = DeltaSeries::log_one_plus(6);
    assert!(hall_inner(&dual_basis(&a, &p(&[2]), 2).unwrap(), &lr_basis(&a, &p(&[1, 1])).unwrap()).is_zero());
    let l = DeltaSeries::mobius(6);
    let deg = 4;
    let ps: Vec<Partition> = (0..=deg).flat_map(|n| enumerate(n, None, false)).collect();
    for lam in &ps {
        let q = dual_basis(&l, lam, deg).unwrap();
        for mu in &ps {
            let v = hall_inner(&q, &lr_basis(&l, mu).unwrap());
            assert_eq!(v.is_one(), lam == mu, "<Q{lam}, P{mu}> = {v}");
            assert_eq!(v.is_zero(), lam != mu, "<Q{lam}, P{mu}> = {v}");
        }
    }
    assert!(dual_basis(&l, &p(&[3]), 2).is_err());
}

#[test]
fn transition_matrix_corners() {
    let a = transition_matrix(&DeltaSeries::log_one_plus(5), 3).unwrap();
    assert_eq!(a.index().len(), 6);
    assert_eq!(a.get(&p(&[1]), &p(&[2])), r(-1, 2));
    assert_eq!(a.get(&p(&[1]), &p(&[1, 1])), r(1, 2));
    assert_eq!(a.get(&p(&[1]), &p(&[3])), r(1, 3));
    let b = transition_matrix(&DeltaSeries::seed_of(&DeltaSeries::one_minus_exp_neg(5)).unwrap(), 3).unwrap();
    assert_eq!(b.get(&p(&[1]), &p(&[2])), r(1, 2));
    let l = transition_matrix(&DeltaSeries::mobius(5), 3).unwrap();
    let row: Vec<BigRational> = l.entries()[0].clone();
    assert_eq!(row, [1, 1, -1, 1, -1, 1].map(|v| r(v, 1)));
    let st = stirling_lah_extract(&l, 3).unwrap();
    assert_eq!(st[0], [1, 2, 6].map(BigInt::from));
}

#[test]
fn json_round_trip() {
    let f = DeltaSeries::log_one_plus(12);
    let text = serde_json::to_string(&f).unwrap();
    assert!(text.starts_with(r#"{"order":12,"coeffs":["1","-1/2","1/3""#), "{text}");
    let back: DeltaSeries = serde_json::from_str(&text).unwrap();
    assert_eq!(back, f);
    let short: DeltaSeries = serde_json::from_str(r#"{"order":4,"coeffs":["1","1"]}"#).unwrap();
    assert_eq!(short, DeltaSeries::from_ints(&[1, 1, 0, 0]));
    assert!(serde_json::from_str::<DeltaSeries>(r#"{"order":1,"coeffs":["1","1"]}"#).is_err());
    assert!(serde_json::from_str::<DeltaSeries>(r#"{"order":2,"coeffs":["x"]}"#).is_err());
}

#[test]
fn display() {
    assert_eq!(DeltaSeries::log_one_plus(3).to_string(), "z - 1/2*z^2 + 1/3*z^3 + O(z^4)");
    assert_eq!(DeltaSeries::from_ints(&[-1, 0]).to_string(), "-z + O(z^3)");
}

#[test]
fn lr_property() {
    let a = DeltaSeries::log_one_plus(6);
    let c = coproduct_constants(&a, &p(&[2])).unwrap();
    let want: BTreeMap<(Partition, Partition), BigRational> =
        [((p(&[2]), p(&[])), r(1, 1)), ((p(&[1]), p(&[1])), r(1, 1)), ((p(&[]), p(&[2])), r(1, 1))].into_iter().collect();
    assert_eq!(c, want);
    for f in [DeltaSeries::identity(6), a, DeltaSeries::mobius(6), DeltaSeries::from_ints(&[3, 1, -2, 0, 5, 1])] {
        for n in 0..=4 {
            for lam in enumerate(n, None, false) {
                assert!(lr_property_holds(&f, &lam).unwrap(), "{lam} for {f}");
            }
        }
    }
}
