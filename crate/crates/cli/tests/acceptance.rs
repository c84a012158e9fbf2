//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use treeirr::extremal::{
    k3_arrangement_irr, k3_irr_max, k3_irr_max_product_form, k3_irr_min, sweep_hypothesis, Middle,
};
use treeirr::{
    albertson_index, canonical_code, count_realizations, enumerate_realizations, extremal_search,
    is_adjacency_regular, sigma_index, Arrangement, EnumerationOptions, IndexKind,
    InternalDegreeSequence, Realization,
};
use treeirr_cli::claims::{claims_for, compare, Status, Target};
use treeirr_cli::{cmd_enumerate, cmd_extremal, Format, IndexChoice};
use treeirr_oracle::{min_root_code, multisets, realizations_by_quotient_prufer};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn seq(d: &[u32]) -> InternalDegreeSequence {
    InternalDegreeSequence::new(d.to_vec()).expect("valid sequence")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn indices(r: &Realization) -> (u64, u64) {
    (albertson_index(r.tree()), sigma_index(r.tree()))
}

fn find(rs: &[Realization], pred: impl Fn(&Arrangement) -> bool) -> Result<&Realization, String> {
    rs.iter()
        .find(|r| pred(&r.arrangement()))
        .ok_or_else(|| "arrangement not enumerated".to_string())
}

fn claim_status(
    s: &InternalDegreeSequence,
    rs: &[Realization],
    index: IndexKind,
    target: &Target,
) -> Result<(Status, Option<u64>, u64), String> {
    let claim = claims_for(s)
        .find(|c| c.index == index && &c.target == target)
        .ok_or_else(|| format!("no recorded claim for {index} {target}"))?;
    let c = compare(claim, rs);
    Ok((c.status, c.computed, claim.value))
}

fn three_degree_table() -> Outcome {
    let rs = enumerate_realizations(&seq(&[4, 3, 2])).map_err(|e| e.to_string())?;
    ensure(rs.len() == 3, || {
        format!("{} realizations, want 3", rs.len())
    })?;
    let mut got: Vec<(u64, u64)> = rs.iter().map(indices).collect();
    got.sort_unstable();
    let want = vec![(14, 32), (14, 34), (16, 40)];
    ensure(got == want, || {
        format!("(irr, sigma) = {got:?}, want {want:?}")
    })?;
    Ok(format!("(irr, sigma) multiset {got:?}"))
}

fn four_degree_placements() -> Outcome {
    let s = seq(&[8, 5, 4, 2]);
    let rs = enumerate_realizations(&s).map_err(|e| e.to_string())?;
    let path = find(&rs, |a| a.is_path(&[8, 4, 2, 5]))?;
    ensure(indices(path).0 == 80, || {
        format!("path 8-4-2-5 irr {}", indices(path).0)
    })?;
    let stars = [(4u32, 76u64, 438u64), (5, 74, 422), (8, 74, 398)];
    for (center, irr, sigma) in stars {
        let r = find(
            &rs,
            |a| matches!(a, Arrangement::Star { center: c, .. } if *c == center),
        )?;
        ensure(indices(r) == (irr, sigma), || {
            format!(
                "star center {center}: {:?}, want ({irr}, {sigma})",
                indices(r)
            )
        })?;
    }
    let path_sigma = indices(path).1;
    ensure(path_sigma == 454, || {
        format!("path 8-4-2-5 sigma {path_sigma}, want 454")
    })?;
    let (status, computed, claimed) =
        claim_status(&s, &rs, IndexKind::Sigma, &Target::Path(vec![8, 4, 2, 5]))?;
    ensure(
        status == Status::Mismatch && computed == Some(454) && claimed == 470,
        || format!("path sigma comparison {status} computed {computed:?} claimed {claimed}"),
    )?;
    Ok("irr 80/76/74/74, sigma 398/422/438; path sigma 454 flagged MISMATCH vs 470".into())
}

fn four_degree_extremes() -> Outcome {
    let s = seq(&[8, 5, 4, 2]);
    let rs = enumerate_realizations(&s).map_err(|e| e.to_string())?;
    ensure(rs.len() == 15, || {
        format!("{} realizations, want 15", rs.len())
    })?;
    let irr = extremal_search(&s, IndexKind::Albertson).map_err(|e| e.to_string())?;
    ensure((irr.min_value, irr.max_value) == (74, 80), || {
        format!("irr extremes ({}, {})", irr.min_value, irr.max_value)
    })?;
    let sigma = extremal_search(&s, IndexKind::Sigma).map_err(|e| e.to_string())?;
    let direct_max = rs.iter().map(|r| sigma_index(r.tree())).max().unwrap_or(0);
    ensure(sigma.min_value == 398, || {
        format!("sigma min {}", sigma.min_value)
    })?;
    ensure(sigma.max_value == direct_max && direct_max == 466, || {
        format!(
            "sigma max {} (direct {direct_max}), want 466",
            sigma.max_value
        )
    })?;
    ensure(
        sigma
            .max_witnesses
            .iter()
            .any(|w| w.arrangement().is_path(&[5, 4, 2, 8])),
        || "sigma max not attained by path 5-4-2-8".into(),
    )?;
    let (status, _, claimed) = claim_status(&s, &rs, IndexKind::Sigma, &Target::Max)?;
    ensure(status == Status::Mismatch && claimed == 470, || {
        format!("sigma max comparison {status}")
    })?;
    let (status, _, _) = claim_status(&s, &rs, IndexKind::Sigma, &Target::Min)?;
    ensure(status == Status::Match, || {
        format!("sigma min comparison {status}")
    })?;
    Ok("irr 74..80, sigma 398..466 (MISMATCH vs 470)".into())
}

fn k3_extreme_forms() -> Outcome {
    let mut checked = 0;
    for d in multisets(3, 2, 9) {
        let (a, b, c) = (d[0], d[1], d[2]);
        let irr = extremal_search(&seq(&d), IndexKind::Albertson).map_err(|e| e.to_string())?;
        let min = k3_irr_min(a, b, c).map_err(|e| e.to_string())?;
        let max = k3_irr_max(a, b, c).map_err(|e| e.to_string())?;
        ensure(min == irr.min_value, || {
            format!("{d:?}: min form {min} vs {}", irr.min_value)
        })?;
        ensure(max == irr.max_value, || {
            format!("{d:?}: max form {max} vs {}", irr.max_value)
        })?;
        checked += 1;
    }
    let printed = k3_irr_max_product_form(4, 3, 2).map_err(|e| e.to_string())?;
    ensure(printed == 13, || {
        format!("product form at (4,3,2) = {printed}, want 13")
    })?;
    ensure(printed != 16, || "product form unexpectedly agrees".into())?;
    Ok(format!(
        "{checked} sequences; product form gives 13 vs 16 at (4,3,2)"
    ))
}

fn case_ordering() -> Outcome {
    let all = multisets(3, 2, 12);
    ensure(all.len() == 286, || {
        format!("{} sequences, want 286", all.len())
    })?;
    let mut violations = Vec::new();
    for d in &all {
        let (a, b, c) = (d[0], d[1], d[2]);
        let v = |m| k3_arrangement_irr(a, b, c, m).map_err(|e| e.to_string());
        let (ma, mb, mc) = (v(Middle::A)?, v(Middle::B)?, v(Middle::C)?);
        if !(ma == mb && mb <= mc) {
            violations.push(d.clone());
        }
    }
    ensure(violations.is_empty(), || {
        format!("violations: {violations:?}")
    })?;
    Ok("286 sequences, 0 violations".into())
}

fn gap_sweep() -> Outcome {
    let sweep = sweep_hypothesis(12).map_err(|e| e.to_string())?;
    let refuted: Vec<String> = sweep
        .refutations()
        .map(|r| {
            format!(
                "{} predicted {} got {}",
                r.sequence, r.predicted_gap, r.oracle_gap
            )
        })
        .collect();
    ensure(refuted.is_empty(), || {
        format!("counterexamples: {}", refuted.join("; "))
    })?;
    Ok(format!(
        "{} sequences, {} confirmed, 0 refuted",
        sweep.reports.len(),
        sweep.confirmed()
    ))
}

fn property_sequences() -> Vec<Vec<u32>> {
    let mut all = vec![
        vec![4, 3, 2],
        vec![8, 5, 4, 2],
        vec![7, 6, 2],
        vec![5, 3, 3],
    ];
    for k in 1..=4 {
        all.extend(multisets(k, 2, 6));
    }
    all.extend(multisets(5, 2, 4));
    all
}

fn property_suite() -> Outcome {
    let mut trees = 0;
    for d in property_sequences() {
        for r in enumerate_realizations(&seq(&d)).map_err(|e| e.to_string())? {
            let t = r.tree();
            let (irr, sigma) = indices(&r);
            let regular = is_adjacency_regular(t);
            ensure(irr % 2 == 0, || format!("{d:?}: odd irr {irr}"))?;
            ensure(sigma >= irr, || format!("{d:?}: sigma {sigma} < irr {irr}"))?;
            ensure((sigma == 0) == (irr == 0) && (irr == 0) == regular, || {
                format!("{d:?}: zero/regularity disagree")
            })?;
            let n = t.vertex_count();
            let perm: Vec<usize> = (0..n).map(|v| (n - 1 - v + 3) % n).collect();
            let u = t.relabeled(&perm);
            ensure(canonical_code(&u) == *r.code(), || {
                format!("{d:?}: code changed under relabeling")
            })?;
            ensure(
                (albertson_index(&u), sigma_index(&u)) == (irr, sigma),
                || format!("{d:?}: indices changed under relabeling"),
            )?;
            trees += 1;
        }
    }
    Ok(format!("{trees} realizations checked"))
}

fn oracle_cross_validation() -> Outcome {
    let mut sequences = 0;
    let mut classes = 0;
    for k in 1..=4 {
        for d in multisets(k, 2, 6) {
            let s = seq(&d);
            let oracle = realizations_by_quotient_prufer(&d);
            let rs = enumerate_realizations(&s).map_err(|e| e.to_string())?;
            let ours: BTreeSet<String> = rs
                .iter()
                .map(|r| min_root_code(r.tree().vertex_count(), r.tree().edges()))
                .collect();
            let counted = count_realizations(&s).map_err(|e| e.to_string())?;
            ensure(rs.len() == oracle.len() && counted == oracle.len(), || {
                format!(
                    "{d:?}: enumerate {} count {counted} oracle {}",
                    rs.len(),
                    oracle.len()
                )
            })?;
            ensure(ours == oracle, || format!("{d:?}: class sets differ"))?;
            sequences += 1;
            classes += oracle.len();
        }
    }
    Ok(format!("{sequences} sequences, {classes} classes agree"))
}

fn determinism() -> Outcome {
    let opts = EnumerationOptions::default();
    for text in ["4,3,2", "8,5,4,2", "5", "3,3,3,3,2"] {
        for format in [Format::Table, Format::Csv, Format::Json, Format::Dot] {
            let a = cmd_enumerate(text, format, &opts).map_err(|e| e.to_string())?;
            let b = cmd_enumerate(text, format, &opts).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("enumerate {text} {format:?} differs"))?;
        }
        for format in [Format::Table, Format::Csv, Format::Json] {
            for check in [false, true] {
                let a = cmd_extremal(text, IndexChoice::Both, format, check, &opts)
                    .map_err(|e| e.to_string())?;
                let b = cmd_extremal(text, IndexChoice::Both, format, check, &opts)
                    .map_err(|e| e.to_string())?;
                ensure(a == b, || format!("extremal {text} {format:?} differs"))?;
            }
        }
    }
    let bin = env!("CARGO_BIN_EXE_treeirr");
    for args in [
        vec!["enumerate", "--seq", "8,5,4,2", "--format", "json"],
        vec!["extremal", "--seq", "8,5,4,2", "--check-paper"],
    ] {
        let run = || {
            std::process::Command::new(bin)
                .args(&args)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.success() && a.stdout == b.stdout, || {
            format!("binary output differs for {args:?}")
        })?;
    }
    Ok("enumerate and extremal byte-identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "1 three-degree worked example (4,3,2) reproduced",
            three_degree_table,
        ),
        (
            "2 four-degree per-placement values (8,5,4,2)",
            four_degree_placements,
        ),
        (
            "3 four-degree extremal summary (8,5,4,2)",
            four_degree_extremes,
        ),
        (
            "4 three-degree min/max closed forms vs enumeration, entries <= 9",
            k3_extreme_forms,
        ),
        ("5 middle ordering a = b <= c, entries <= 12", case_ordering),
        ("6 gap 2(d2-d3) sweep, entries <= 12", gap_sweep),
        (
            "7 index properties on every enumerated realization",
            property_suite,
        ),
        (
            "8 enumeration vs Prufer oracle, k <= 4, entries <= 6",
            oracle_cross_validation,
        ),
        ("9 deterministic command output", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail} ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why} ({ms} ms)");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
