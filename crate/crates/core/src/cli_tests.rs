use super::*;

fn sh(args: &str) -> (i32, String, String) {
    let argv: Vec<&str> = std::iter::once("symfunc").chain(args.split_whitespace()).collect();
    run_captured(&argv, "")
}

fn ok(args: &str) -> String {
    let (code, out, err) = sh(args);
    assert_eq!(code, EXIT_OK, "{args}: {err}");
    out
}

#[test]
fn partitions_parse() {
    assert_eq!(parse_partition("4,2,1").unwrap().parts(), &[4, 2, 1]);
    assert_eq!(parse_partition("").unwrap(), Partition::empty());
    assert_eq!(parse_partition("3, 1,0,0").unwrap().parts(), &[3, 1]);
    assert!(parse_partition("1,2").is_err());
    assert!(parse_partition("2,x").is_err());
    assert!(parse_partition("2,-1").is_err());
}

#[test]
fn macdonald_golden() {
    assert_eq!(ok("macdonald P --partition 1,1 --out json"), "{\"basis\":\"m\",\"terms\":[{\"partition\":[1,1],\"coeff\":\"1\"}]}\n");
    assert_eq!(
        ok("macdonald P --partition 2"),
        "{\"basis\":\"m\",\"terms\":[{\"partition\":[2],\"coeff\":\"1\"},{\"partition\":[1,1],\"coeff\":\"(-q*t + q - t + 1)/(-q*t + 1)\"}]}\n"
    );
    assert_eq!(ok("macdonald P --partition 2,1 --out table"), "m(2,1)                                                  1\nm(1,1,1)  (-2*q*t^2 + q*t + q - t^2 - t + 2)/(-q*t^2 + 1)\n");
    let norm = ok("macdonald P --partition 2,1 --norm");
    assert!(norm.contains("\"equal\":true"), "{norm}");
}

#[test]
fn stirling_and_lah_golden() {
    let want = "{\"seed\":{\"order\":12,\"coeffs\":[\"1\",\"-1/2\",\"1/3\",\"-1/4\",\"1/5\",\"-1/6\",\"1/7\",\"-1/8\",\"1/9\",\"-1/10\",\"1/11\",\"-1/12\"]},\
\"deg\":5,\"table\":\"stirling\",\"rows\":[[\"1\",\"-1\",\"2\",\"-6\",\"24\"],[\"0\",\"1\",\"-3\",\"11\",\"-50\"],[\"0\",\"0\",\"1\",\"-6\",\"35\"],\
[\"0\",\"0\",\"0\",\"1\",\"-10\"],[\"0\",\"0\",\"0\",\"0\",\"1\"]]}\n";
    assert_eq!(ok("umbral-matrix --series exp-1 --deg 5 --extract stirling"), want);
    let lah = "1  2  6  24  120\n0  1  6  36  240\n0  0  1  12  120\n0  0  0   1   20\n0  0  0   0    1\n";
    assert_eq!(ok("umbral-matrix --series mobius --direct --deg 5 --extract lah --out table"), lah);
    assert_eq!(ok("umbral-matrix --series mobius-inv --deg 5 --extract lah --out table"), lah);
    let unsigned = ok("umbral-matrix --series neg-exp --deg 3 --extract stirling --out table");
    assert_eq!(unsigned, "1  1  2\n0  1  3\n0  0  1\n");
}

#[test]
fn transition_table() {
    let out = ok("umbral-matrix --series mobius --direct --deg 2 --out table");
    assert_eq!(out, "       (1)  (2)  (1,1)\n(1)      1    1     -1\n(2)      0    1      0\n(1,1)    0    0      1\n");
    let j = ok("umbral-matrix --series [\"1\",\"1\"] --direct --deg 3 --kind jabotinsky");
    assert!(j.ends_with("\"deg\":3,\"entries\":[[\"1\",\"0\",\"0\"],[\"1\",\"1\",\"0\"],[\"0\",\"2\",\"1\"]]}\n"), "{j}");
}

#[test]
fn verify_reports() {
    let out = ok("verify kawanaka --vars 2 --deg 4");
    assert!(out.starts_with("{\"identity\":\"kawanaka\",\"n\":2,\"deg\":4,\"equal\":true,\"per_degree\":[{\"d\":0,\"equal\":true}"), "{out}");
    let r: IdentityReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.per_degree.len(), 5);
    assert!(ok("verify schur --vars 3 --deg 3").contains("\"equal\":true"));
    assert!(ok("verify degeneration --vars 2 --deg 4").contains("\"identity\":\"kawanaka-at-q=-t\""));
    assert_eq!(ok("verify phi-split --size 4 --k 2"), "{\"identity\":\"phi-split\",\"size\":4,\"k\":2,\"samples\":5,\"seed\":1,\"equal\":true}\n");
    assert!(ok("verify final --size 3 --k 2 --z-inverse-t --seed 9").contains("\"equal\":true"));
    assert!(ok("verify lr-proof --partition 3,1 --k 2").contains("\"equal\":true"));
    assert!(ok("verify lr-property --partition 2,2 --series exp-1").contains("\"equal\":true"));
    assert_eq!(ok("verify norm --deg 3"), "{\"identity\":\"norm\",\"deg\":3,\"equal\":true,\"failures\":[]}\n");
}

#[test]
fn lr_and_pieri() {
    let out = ok("lr --partition 2,1");
    assert!(out.starts_with("{\"partition\":[2,1],\"terms\":[{\"mu\":[2,1],\"nu\":[],\"coeff\":\"1\"}"), "{out}");
    assert!(ok("lr --partition 3,2,1").contains("{\"mu\":[2,1],\"nu\":[2,1],\"coeff\":\"2\"}"));
    let p = ok("pieri --partition 1 --k 1 --kind phi --expand");
    assert!(p.contains("\"equal\":true"), "{p}");
    let v = ok("pieri --partition 1 --k 1 --kind psi-prime --out table");
    assert_eq!(v.lines().map(|l| l.split_whitespace().next().unwrap()).collect::<Vec<_>>(), ["(2)", "(1,1)"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        "macdonald P --partition 1,2",
        "macdonald R --partition 1",
        "bogus",
        "umbral-matrix --series exp-1 --deg 0",
        "umbral-matrix --series exp-1 --deg 6 --order 4",
        "umbral-matrix --series nope --deg 3",
        "verify kawanaka --vars 0 --deg 2",
        "expand x --partition 1",
        "pieri --partition 1 --k 1 --kind psi --expand",
        "verify phi-split --size 3 --k 3",
    ] {
        let (code, out, err) = sh(args);
        assert_eq!(code, EXIT_USAGE, "{args}");
        assert!(out.is_empty(), "{args}");
        assert!(!err.is_empty(), "{args}");
    }
    assert_eq!(sh("--help").0, EXIT_OK);
}

#[test]
fn json_round_trips() {
    let s = ok("expand s --partition 2,1 --to m");
    let (code, back, _) = run_captured(&["symfunc", "convert", "--to", "s"], &s);
    assert_eq!(code, EXIT_OK);
    assert_eq!(back, "{\"basis\":\"s\",\"terms\":[{\"partition\":[2,1],\"coeff\":\"1\"}]}\n");
    let q = ok("macdonald Q --partition 2");
    let (_, same, _) = run_captured(&["symfunc", "convert", "--to", "m"], &q);
    assert_eq!(same, q);
    let (_, p, _) = run_captured(&["symfunc", "convert", "--to", "p"], &q);
    let (_, m, _) = run_captured(&["symfunc", "convert", "--to", "m"], &p);
    assert_eq!(m, q);
    // the seed printed with a matrix is accepted as a series
    let first = ok("umbral-matrix --series neg-exp --deg 3");
    let v: Value = serde_json::from_str(&first).unwrap();
    let seed = v["seed"].to_string();
    let argv = ["symfunc", "umbral-matrix", "--series", &seed, "--direct", "--deg", "3"];
    assert_eq!(run_captured(&argv, "").1, first);
    let lr = ok("expand lr --series exp-1 --partition 2 --to s");
    assert_eq!(lr, "{\"basis\":\"s\",\"terms\":[{\"partition\":[1],\"coeff\":\"-1/2\"},{\"partition\":[2],\"coeff\":\"1\"}]}\n");
}

#[test]
fn deterministic_output() {
    for args in ["verify final --size 3 --k 1 --seed 4", "verify phi-split --size 3 --k 1 --seed 4", "macdonald Q --partition 2,1"] {
        assert_eq!(sh(args), sh(args));
    }
}
