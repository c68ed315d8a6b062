//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any failure.
//! All comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hurwitz_phi::monodromy::{realize, verify_certificate, MonodromyCertificate, Realization, SearchBudget};
use hurwitz_phi::sphere::{classify_sphere_pair, SpherePhi, SphereStatus};
use hurwitz_phi::{
    cli, closed_form_phi, hurwitz_euler, oracle_phi, phi, volume_ratio, OracleOutcome, PhiResult, RamificationProfile,
    RatioMod1, Surface,
};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn run_cli(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("hurwitz-phi").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn profile(v: &[u32]) -> RamificationProfile {
    RamificationProfile::new(v.to_vec()).unwrap()
}

/// φ column of a tsv table from the CLI.
fn table_phi_column(target_genus: u32, max: u32) -> Result<Vec<String>, String> {
    let (code, out, err) = run_cli(&[
        "table",
        "--target-genus",
        &target_genus.to_string(),
        "--max-source-genus",
        &max.to_string(),
        "--format",
        "tsv",
    ]);
    ensure!(code == 0, "table exited {code}: {err}");
    let mut lines = out.lines();
    ensure!(lines.next() == Some("G\tphi\twitness"), "bad header in {out:?}");
    let mut col = Vec::new();
    for (g, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split('\t').collect();
        ensure!(cells.len() == 3 && cells[0] == g.to_string(), "bad row {line:?}");
        col.push(cells[1].to_string());
    }
    Ok(col)
}

fn ac1_golden_tables() -> Check {
    let sphere = table_phi_column(0, 10)?;
    let mut expected: Vec<String> = vec!["0".into()];
    expected.extend((1..=10).map(|_| "3".to_string()));
    ensure!(sphere == expected, "sphere table {sphere:?}");

    let torus = table_phi_column(1, 10)?;
    let mut expected: Vec<String> = vec!["infinite".into(), "0".into()];
    expected.extend((2..=10).map(|_| "1".to_string()));
    ensure!(torus == expected, "torus table {torus:?}");
    Ok(())
}

fn ac2_closed_form_scan_oracle() -> Check {
    let budget = SearchBudget::default();
    let mut oracle_hits = 0;
    let mut mismatches = Vec::new();
    for g in 2..=5u32 {
        for big_g in g..=20u32 {
            let (src, tgt) = (Surface::new(big_g), Surface::new(g));
            let (chi_src, chi_tgt) = (src.euler(), tgt.euler());
            let value = phi(src, tgt).value().map(u64::from);
            if chi_src.abs() >= 2 * chi_tgt.abs() {
                let cf = closed_form_phi(chi_src, chi_tgt).map_err(|e| e.to_string())?;
                ensure!(value == Some(cf), "G={big_g} g={g}: phi {value:?} vs closed form {cf}");
            }
            if let OracleOutcome::Finite { k, .. } = oracle_phi(src, tgt, 6, 12, budget) {
                oracle_hits += 1;
                if value != Some(u64::from(k)) {
                    mismatches.push(format!("(G={big_g},g={g}: phi {value:?}, oracle {k})"));
                }
            }
        }
    }
    ensure!(oracle_hits > 0, "oracle never returned a finite value");
    ensure!(mismatches.is_empty(), "oracle disagrees at {}", mismatches.join(" "));
    Ok(())
}

/// The oracle's own contract on the same grid: never below φ, and equal to φ
/// whenever φ <= k_max with a witness of degree <= d_max.
fn ac2_oracle_contract() -> Check {
    let budget = SearchBudget::default();
    for g in 2..=5u32 {
        for big_g in g..=20u32 {
            let (src, tgt) = (Surface::new(big_g), Surface::new(g));
            let exact = phi(src, tgt);
            let oracle = oracle_phi(src, tgt, 6, 12, budget);
            if let (Some(p), Some(o)) = (exact.value(), oracle.value()) {
                ensure!(o >= p, "G={big_g} g={g}: oracle {o} below phi {p}");
            }
            if let (Some(p), Some(w)) = (exact.value(), exact.witness()) {
                if p <= 6 && w.degree() <= 12 {
                    ensure!(oracle.value() == Some(p), "G={big_g} g={g}: oracle {oracle:?}, phi {p}");
                }
            }
            if exact.is_infinite() {
                ensure!(oracle.value().is_none(), "G={big_g} g={g}: oracle finite for infinite phi");
            }
        }
    }
    Ok(())
}

fn ac3_corollary() -> Check {
    for g in 2..=4u32 {
        let start = 2 * (g - 1) * (g - 1);
        for big_g in start..=start + 20 {
            let v = phi(Surface::new(big_g), Surface::new(g)).value();
            let divides = (big_g - 1) % (g - 1) == 0;
            let expected = if divides { 0 } else { 1 };
            ensure!(v == Some(expected), "G={big_g} g={g}: phi {v:?}, expected {expected}");
        }
    }
    Ok(())
}

fn realization_cases() -> Vec<(Surface, u32, RamificationProfile)> {
    let mut cases = Vec::new();
    for big_g in [2u32, 3, 4] {
        let d = 2 * big_g - 1;
        cases.push((Surface::TORUS, d, profile(&[d])));
    }
    for d in [3u32, 5, 7] {
        cases.push((Surface::SPHERE, d, profile(&[d, d, d])));
    }
    cases
}

fn ac4_realizations() -> Check {
    for (target, d, p) in realization_cases() {
        let r = realize(target, d, &p, SearchBudget::default());
        let Realization::Certificate(cert) = r else {
            return Err(format!("{target} d={d} [{p}]: {r:?}"));
        };
        let report = verify_certificate(&cert).map_err(|e| e.to_string())?;
        ensure!(report.valid, "{target} d={d} [{p}]: {:?}", report.violations);
        let expected = hurwitz_euler(target.euler(), d, &p).map_err(|e| e.to_string())?;
        ensure!(
            report.computed_source_euler == expected,
            "{target} d={d}: computed χ′ {} vs Hurwitz {expected}",
            report.computed_source_euler
        );
    }
    Ok(())
}

fn ac5_exhaustive_oracle() -> Check {
    let mut compared = 0;
    for d in 1..=4usize {
        for genus in 0..=1usize {
            for k in 0..=3usize {
                let truth = common::realized_profiles(d, genus, k);
                for ms in common::multisets(k, 2, d as u32 + 1) {
                    let p = profile(&ms);
                    let target = Surface::new(genus as u32);
                    let r = realize(target, d as u32, &p, SearchBudget::default());
                    let exists = match &r {
                        Realization::Certificate(_) => true,
                        Realization::Infeasible(_) => false,
                        Realization::NotFound { .. } => {
                            return Err(format!("d={d} g={genus} {ms:?}: undecided"));
                        }
                    };
                    ensure!(
                        exists == truth.contains(&ms),
                        "d={d} g={genus} {ms:?}: realize {r:?}, oracle {}",
                        truth.contains(&ms)
                    );
                    compared += 1;
                }
            }
        }
    }
    ensure!(compared > 100, "only {compared} comparisons");
    Ok(())
}

fn ac6_sphere_bound() -> Check {
    for d in 1..=12u32 {
        for k in 0..=2usize {
            for ms in common::multisets(k, 2, d) {
                let chi = hurwitz_euler(2, d, &profile(&ms)).map_err(|e| e.to_string())?;
                ensure!(chi > 0, "d={d} {ms:?} over S² gives χ′ = {chi}");
            }
        }
    }
    for big_g in 1..=10u32 {
        let v = phi(Surface::new(big_g), Surface::SPHERE).value();
        ensure!(v == Some(3), "phi(Σ_{big_g}, S²) = {v:?}");
    }
    Ok(())
}

fn ac7_sphere_table() -> Check {
    let mut zero = Vec::new();
    let mut two = Vec::new();
    for n in 2..=20u32 {
        for m in n..=40u32 {
            let SpherePhi { status, .. } = classify_sphere_pair(m, n).map_err(|e| e.to_string())?;
            match status {
                SphereStatus::Exact(0) if m > n => zero.push((m, n)),
                SphereStatus::Exact(2) => two.push((m, n)),
                _ => {}
            }
            if m == n {
                ensure!(status == SphereStatus::Exact(0), "({m},{n}) is {status:?}");
            }
            let must_be_infinite = m + 3 <= 2 * n || (m + 2 == 2 * n && ![2, 3, 5, 9].contains(&n));
            if must_be_infinite && m != n {
                ensure!(status == SphereStatus::ExactlyInfinite, "({m},{n}) is {status:?}");
            }
            if status == SphereStatus::ExactlyInfinite {
                ensure!(must_be_infinite, "({m},{n}) reported infinite without a rule");
            }
        }
    }
    ensure!(zero == vec![(3, 2), (7, 4), (15, 8)], "exact 0 at {zero:?}");
    two.sort_by_key(|&(m, n)| (n, m));
    ensure!(two == vec![(4, 3), (8, 5), (16, 9)], "exact 2 at {two:?}");
    Ok(())
}

fn ac8_volume_equivalence() -> Check {
    for g in 2..=5u32 {
        for big_g in g..=30u32 {
            let v = volume_ratio(Surface::new(big_g), Surface::new(g)).map_err(|e| e.to_string())?;
            let p = phi(Surface::new(big_g), Surface::new(g)).value();
            ensure!(v.is_zero() == (p == Some(0)), "G={big_g} g={g}: ratio {v}, phi {p:?}");
        }
    }
    Ok(())
}

fn ac9_round_trips() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (i, (target, d, p)) in realization_cases().into_iter().enumerate() {
        let path = dir.path().join(format!("cert{i}.json"));
        let path_str = path.to_str().unwrap();
        let (code, _, err) = run_cli(&[
            "realize",
            "--target-genus",
            &target.genus().to_string(),
            "--degree",
            &d.to_string(),
            "--profile",
            &p.to_string(),
            "--out",
            path_str,
        ]);
        ensure!(code == 0, "realize {target} d={d}: {err}");
        let (code, out, err) = run_cli(&["verify-cert", path_str]);
        ensure!(code == 0 && out.starts_with("valid\n"), "verify-cert: {out}{err}");
        let cert =
            MonodromyCertificate::from_json(&std::fs::read_to_string(&path).unwrap()).map_err(|e| e.to_string())?;
        ensure!(verify_certificate(&cert).map_err(|e| e.to_string())?.valid, "library rejects {path_str}");
    }

    for g in 0..=5u32 {
        for big_g in 0..=12u32 {
            let (_, out, _) = run_cli(&[
                "phi",
                "--source-genus",
                &big_g.to_string(),
                "--target-genus",
                &g.to_string(),
                "--format",
                "json",
            ]);
            let parsed: PhiResult = serde_json::from_str(&out).map_err(|e| format!("{out}: {e}"))?;
            ensure!(parsed == phi(Surface::new(big_g), Surface::new(g)), "phi json G={big_g} g={g}: {out}");
        }
        if g >= 2 {
            for big_g in 0..=12u32 {
                let (_, out, _) = run_cli(&["volume-ratio", &big_g.to_string(), &g.to_string(), "--format", "json"]);
                let parsed: RatioMod1 = serde_json::from_str(&out).map_err(|e| format!("{out}: {e}"))?;
                ensure!(parsed == volume_ratio(Surface::new(big_g), Surface::new(g)).unwrap(), "volume json {out}");
            }
        }
    }

    let (_, out, _) = run_cli(&["table", "--target-genus", "3", "--max-source-genus", "12", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    for (big_g, row) in rows.iter().enumerate() {
        ensure!(row["G"] == big_g as u64, "row order {row}");
        let parsed: PhiResult = serde_json::from_value(row["phi"].clone()).map_err(|e| e.to_string())?;
        ensure!(parsed == phi(Surface::new(big_g as u32), Surface::new(3)), "table json row {row}");
    }

    for (m, n) in [(3u32, 2u32), (4, 3), (5, 4), (9, 5), (20, 4)] {
        let (_, out, _) = run_cli(&["sphere-phi", &m.to_string(), &n.to_string(), "--format", "json"]);
        let parsed: SpherePhi = serde_json::from_str(&out).map_err(|e| format!("{out}: {e}"))?;
        ensure!(parsed == classify_sphere_pair(m, n).unwrap(), "sphere json {out}");
    }

    let (_, out, _) = run_cli(&["oracle-phi", "6", "3", "--max-k", "4", "--max-degree", "6", "--format", "json"]);
    let parsed: OracleOutcome = serde_json::from_str(&out).map_err(|e| format!("{out}: {e}"))?;
    ensure!(parsed == oracle_phi(Surface::new(6), Surface::new(3), 4, 6, SearchBudget::default()), "oracle json {out}");
    Ok(())
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 golden φ tables for sphere and torus targets", ac1_golden_tables, Duration::from_secs(1)),
        ("AC2 closed form = minimal-k scan = oracle", ac2_closed_form_scan_oracle, Duration::from_secs(30)),
        (
            "AC2 (supplemental) oracle is an upper bound, exact within its bounds",
            ac2_oracle_contract,
            Duration::from_secs(30),
        ),
        ("AC3 corollary range φ ∈ {0,1}", ac3_corollary, Duration::from_secs(5)),
        ("AC4 monodromy realizations verify", ac4_realizations, Duration::from_secs(60)),
        ("AC5 realize agrees with all-tuples oracle", ac5_exhaustive_oracle, Duration::from_secs(60)),
        ("AC6 sphere-target arithmetic bound", ac6_sphere_bound, Duration::from_secs(5)),
        ("AC7 sphere-pair classification table", ac7_sphere_table, Duration::from_secs(1)),
        ("AC8 volume ratio zero ⟺ φ = 0", ac8_volume_equivalence, Duration::from_secs(1)),
        ("AC9 certificate and JSON round trips", ac9_round_trips, Duration::from_secs(60)),
    ];

    let mut failures = 0;
    for &(name, check, limit) in &criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed <= limit {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(()) => println!("PASS  {name} ({elapsed:.2?})"),
            Err(msg) => {
                failures += 1;
                println!("FAIL  {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("{} of {} checks passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
