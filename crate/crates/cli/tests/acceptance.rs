//! End-to-end acceptance checks. Run with
//! `cargo test -p degbell-cli --test acceptance -- --nocapture` to see one
//! PASS/FAIL line per criterion.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use degbell::algebra::{compositions, rat, MPoly, Var};
use degbell::bell::{
    bell_deg, deg_falling, falling, stirling2_deg, stirling2_deg_via_compositions, stirling2_r_deg,
};
use degbell::identities::{
    deg_spivey_termwise_agrees, verify_deg_spivey, verify_gould_quaintance, verify_prob_r_spivey,
    verify_prob_spivey, verify_r_stirling_decomposition, verify_recurrence, verify_spivey,
};
use degbell::moments::RandomVariable;
use degbell::prob_bell::{
    prob_stirling2_deg, prob_stirling2_deg_alternating, sk_mixed_expectation, sk_mixed_expectation_direct,
    MixedExpectationSpec,
};

const PROB_SPIVEY_BUDGET: Duration = Duration::from_secs(60);
const PROB_R_SPIVEY_BUDGET: Duration = Duration::from_secs(120);
const BENCH_BUDGET: Duration = Duration::from_secs(300);
const BELL_NUMBERS: [u64; 8] = [1, 1, 2, 5, 15, 52, 203, 877];

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn suite() -> Vec<RandomVariable> {
    [
        "point:1",
        "point:3/2",
        "bernoulli:1/2",
        "finite:{1:1/3,2:2/3}",
        "poisson:1",
        "geometric:1/2",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Set partitions of `{0..n}` counted by brute-force block assignment.
fn count_set_partitions(n: usize) -> u64 {
    fn go(i: usize, n: usize, blocks: usize) -> u64 {
        if i == n {
            return 1;
        }
        // element i joins an existing block or opens a new one
        (0..=blocks).map(|b| go(i + 1, n, if b == blocks { blocks + 1 } else { blocks })).sum()
    }
    go(0, n, 0)
}

fn prob_spivey_grid() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for rv in suite() {
        for n in 0..=6 {
            for l in 0..=6 - n {
                let r = verify_prob_spivey(&rv, n, l);
                ensure(r.equal, || format!("{rv} n={n} l={l}: {} != {}", r.lhs, r.rhs))?;
                cells += 1;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < PROB_SPIVEY_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{cells} cells exact in {took:?}"))
}

fn prob_r_spivey_grid() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for rv in suite() {
        for r in 1..=3 {
            for n in 0..=5 {
                for j in 0..=5 - n {
                    let rep = verify_prob_r_spivey(&rv, n, j, r);
                    ensure(rep.equal, || format!("{rv} n={n} j={j} r={r}: {} != {}", rep.lhs, rep.rhs))?;
                    cells += 1;
                }
            }
        }
    }
    let took = start.elapsed();
    ensure(took < PROB_R_SPIVEY_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{cells} cells exact in {took:?}"))
}

fn reduction_chain() -> Outcome {
    for n in 0..=5 {
        for l in 0..=5 - n {
            ensure(deg_spivey_termwise_agrees(n, l), || format!("termwise n={n} l={l}"))?;
            ensure(verify_deg_spivey(n, l).equal, || format!("degenerate n={n} l={l}"))?;
            ensure(verify_gould_quaintance(n, l).equal, || format!("λ=0 n={n} l={l}"))?;
        }
    }
    for (n, &expected) in BELL_NUMBERS.iter().enumerate() {
        let oracle = count_set_partitions(n);
        ensure(oracle == expected, || format!("enumeration gives {oracle} for n={n}"))?;
        let engine = bell_deg(n)
            .eval_var(Var::Lambda, &rat(0, 1))
            .eval_var(Var::Y, &rat(1, 1));
        ensure(engine == MPoly::from_int(oracle as i64), || format!("bell n={n}: {engine}"))?;
        for l in 0..=n {
            let rep = verify_spivey(n - l, l);
            ensure(rep.equal && rep.lhs == oracle.to_string(), || {
                format!("y=1 n={} l={l}: {} vs {}", n - l, rep.lhs, rep.rhs)
            })?;
        }
    }
    Ok("termwise, λ=0 and y=1 stages exact; Bell numbers 1..877 match".into())
}

fn dual_algorithms() -> Outcome {
    for n in 0..=8 {
        for k in 0..=n {
            ensure(stirling2_deg(n, k) == stirling2_deg_via_compositions(n, k), || {
                format!("(a) n={n} k={k}")
            })?;
        }
    }
    let models = suite();
    for rv in &models {
        for n in 0..=6 {
            for k in 0..=n {
                ensure(prob_stirling2_deg(rv, n, k) == prob_stirling2_deg_alternating(rv, n, k), || {
                    format!("(b) {rv} n={n} k={k}")
                })?;
            }
        }
    }
    let mut specs = 0;
    for rv in &models {
        for k in 0..=3 {
            for weight in k..=5 {
                for parts in compositions(weight, k) {
                    for shift in 0..=4 {
                        for j in 0..=4 {
                            let spec = MixedExpectationSpec::new(rv, k, parts.clone(), shift, j).unwrap();
                            ensure(sk_mixed_expectation(&spec) == sk_mixed_expectation_direct(&spec), || {
                                format!("(c) {rv} parts={parts:?} shift={shift} j={j}")
                            })?;
                            specs += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("(a) n<=8, (b) n<=6, (c) {specs} specs agree"))
}

fn round_trips() -> Outcome {
    let x = MPoly::x();
    for n in 0..=8 {
        let rebuilt: MPoly = (0..=n).map(|k| &stirling2_deg(n, k) * &falling(&x, k)).sum();
        ensure(rebuilt == deg_falling(&x, n), || format!("(x)_n n={n}"))?;
    }
    for r in 1..=3u32 {
        let shifted = &x + &MPoly::from_int(r as i64);
        for n in 0..=6 {
            let rebuilt: MPoly = (0..=n).map(|k| &stirling2_r_deg(n, k, r) * &falling(&x, k)).sum();
            ensure(rebuilt == deg_falling(&shifted, n), || format!("(x+r)_n n={n} r={r}"))?;
            for k in 0..=n {
                let rep = verify_r_stirling_decomposition(n, k, r);
                ensure(rep.equal, || format!("decomposition n={n} k={k} r={r}"))?;
            }
        }
    }
    for rv in suite() {
        for n in 0..=5 {
            let rep = verify_recurrence(&rv, n);
            ensure(rep.equal, || format!("recurrence {rv} n={n}: {} != {}", rep.lhs, rep.rhs))?;
        }
    }
    Ok("falling-factorial expansions, decomposition and recurrence exact".into())
}

fn degbell() -> Command {
    Command::new(env!("CARGO_BIN_EXE_degbell"))
}

fn exit_code(cmd: &mut Command) -> i32 {
    cmd.output().expect("spawn degbell").status.code().expect("exit code")
}

fn bench_integrity(dir: &Path) -> Outcome {
    let out = dir.join("bench.csv");
    let start = Instant::now();
    let output = degbell()
        .args(["bench", "--rv", "poisson:1", "--sum-max", "8", "--out"])
        .arg(&out)
        .output()
        .expect("spawn degbell");
    let took = start.elapsed();
    ensure(output.status.success(), || String::from_utf8_lossy(&output.stderr).into_owned())?;
    ensure(took < BENCH_BUDGET, || format!("took {took:?}"))?;
    let mut reader = csv::Reader::from_path(&out).map_err(|e| e.to_string())?;
    let header = reader.headers().map_err(|e| e.to_string())?.clone();
    ensure(header == vec!["strategy", "n", "l", "rv", "wall_time_ns"], || format!("header {header:?}"))?;
    let mut rows = 0;
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let ns: u64 = record[4].parse().map_err(|e| format!("{e}"))?;
        ensure(ns > 0, || format!("non-positive time in {record:?}"))?;
        rows += 1;
    }
    // 45 cells with n + l <= 8, two strategies each
    ensure(rows == 90, || format!("{rows} rows"))?;
    Ok(format!("{rows} rows, strategies identical, {took:?}"))
}

fn cli_contract(dir: &Path) -> Outcome {
    let report = dir.join("report.json");
    let code = exit_code(degbell().args(["verify", "--out"]).arg(&report));
    ensure(code == 0, || format!("verify defaults exited {code}"))?;
    let json: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&report).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(json["failures"] == 0, || format!("failures {}", json["failures"]))?;

    let failing = dir.join("failing.json");
    let code = exit_code(degbell().args(["verify", "--identity", "spivey", "--inject-fault", "--out"]).arg(&failing));
    ensure(code == 1, || format!("failing verify exited {code}"))?;
    let code = exit_code(degbell().args(["bench", "--sum-max", "2", "--inject-fault"]));
    ensure(code == 1, || format!("mismatching bench exited {code}"))?;

    let code = exit_code(degbell().args(["table", "--family", "bell-prob", "--rv", "bogus:1"]));
    ensure(code == 2, || format!("bad rv exited {code}"))?;
    let code = exit_code(degbell().args(["verify", "--n-max", "-1"]));
    ensure(code == 2, || format!("negative bound exited {code}"))?;

    let unwritable = dir.join("missing").join("out.json");
    let code = exit_code(degbell().args(["table", "--family", "bell-deg", "--out"]).arg(&unwritable));
    ensure(code == 3, || format!("unwritable output exited {code}"))?;
    Ok("exit codes 0/1/2/3 as documented".into())
}

#[test]
fn acceptance_criteria() {
    let dir = tempfile::tempdir().unwrap();
    let criteria: Vec<Criterion<'_>> = vec![
        ("1 probabilistic Spivey relation, n+l<=6", Box::new(prob_spivey_grid)),
        ("2 probabilistic r-Bell Spivey relation, n+j<=5, r=1..3", Box::new(prob_r_spivey_grid)),
        ("3 reduction chain to Bell numbers", Box::new(reduction_chain)),
        ("4 dual-algorithm oracles", Box::new(dual_algorithms)),
        ("5 defining-identity round trips", Box::new(round_trips)),
        ("6 bench integrity, poisson:1, n+l<=8", Box::new(|| bench_integrity(dir.path()))),
        ("7 CLI exit-code contract", Box::new(|| cli_contract(dir.path()))),
    ];
    let mut failed = Vec::new();
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
