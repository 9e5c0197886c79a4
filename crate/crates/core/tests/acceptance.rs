//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sylvester_core::fraction_free::{bareiss_certified, growth_trial, GrowthTable};
use sylvester_core::identities::bgm::{corollary_two_applies, Z_HI, Z_LO};
use sylvester_core::identities::{
    bgm_corollary_checks, bgm_ratio_constancy, bgm_sylvester_specialization, glr_check,
    glr_matrix, glr_sign, mulders_check, newgen_block_check, newgen_check, sylvester_check,
    yakovlev_check, BgmConfig, GlrConfig,
};
use sylvester_core::index::parse_list_of_lists;
use sylvester_core::{
    det_reference, enumerate_permutations, Error, IndexList, PairClass, SeedStream,
};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lists(s: &str) -> Vec<IndexList> {
    parse_list_of_lists(s).expect("literal lists parse")
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.1?}, limit {limit:?}"))
}

fn ac1_sylvester() -> Verdict {
    let start = Instant::now();
    let mut checks = 0;
    for trial in 0..1000 {
        let mut s = SeedStream::for_trial(0xA1, trial);
        let n = s.next_in(2, 8) as usize;
        let m = s.matrix(n, n, -9, 9);
        for t in 0..n {
            let r = sylvester_check(&m, t).map_err(|e| e.to_string())?;
            ensure(r.holds, || format!("trial {trial}, n={n}, t={t}: {r}"))?;
            checks += 1;
        }
    }
    within(start, Duration::from_secs(60), "suite")?;
    Ok(format!("{checks} checks over 1000 matrices in {:.1?}", start.elapsed()))
}

fn ac2_glr() -> Verdict {
    let first = GlrConfig::new(2, lists("(1,3,4);(1,4,5);(2,4,5)")).map_err(|e| e.to_string())?;
    let sign = glr_sign(&first);
    ensure(sign.mu == 7 && sign.c == -1, || {
        format!("first configuration: mu={}, c={}", sign.mu, sign.c)
    })?;

    let second = GlrConfig::new(2, lists("(1,2,3);(2,3,4);(1,2,4)")).map_err(|e| e.to_string())?;
    ensure(glr_sign(&second).c == 0, || "second configuration: c != 0".into())?;
    for trial in 0..100 {
        let m = SeedStream::for_trial(0xA2, trial).matrix(5, 5, -9, 9);
        let det_b = det_reference(&glr_matrix(&m, &second).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(det_b.is_zero(), || format!("trial {trial}: det B = {det_b}"))?;
        let r = glr_check(&m, &first).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("trial {trial}: {r}"))?;
    }
    Ok("mu=7, c=-1; c=0 with det B = 0 on 100 matrices".into())
}

fn ac3_yakovlev() -> Verdict {
    let base = IndexList::ordered(vec![6, 7, 8]).unwrap();
    let perms = enumerate_permutations(&base).map_err(|e| e.to_string())?;
    let listing: [([usize; 3], usize); 6] = [
        ([8, 7, 6], 3),
        ([8, 6, 7], 2),
        ([7, 8, 6], 2),
        ([7, 6, 8], 1),
        ([6, 7, 8], 0),
        ([6, 8, 7], 1),
    ];
    ensure(perms.len() == 6, || format!("{} permutations", perms.len()))?;
    for (arr, mu) in listing {
        let found = perms.iter().find(|p| p.arrangement == arr);
        ensure(found.map(|p| p.inversions) == Some(mu), || {
            format!("{arr:?}: expected mu={mu}, got {:?}", found.map(|p| p.inversions))
        })?;
    }

    for trial in 0..500 {
        let mut s = SeedStream::for_trial(0xA3, trial);
        let n = s.next_in(4, 7) as usize;
        let t = s.next_in(1, n as i64 - 1) as usize;
        let rows = IndexList::ordered(s.subset(n, t)).unwrap();
        let cols = IndexList::ordered(s.subset(n, t)).unwrap();
        let m = s.matrix(n, n, -9, 9);
        let r = yakovlev_check(&m, &rows, &cols).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("trial {trial}: {r}"))?;
    }
    Ok("mu multiset {3,2,2,1,0,1}; 500 random list pairs hold".into())
}

fn ac4_mulders() -> Verdict {
    let base = PairClass::new(vec![(2, 1), (3, 3), (1, 5), (5, 3)]).unwrap();
    let update = PairClass::new(vec![(1, 1), (2, 3), (4, 4)]).unwrap();
    let got = base.arrow(&update).to_string();
    ensure(got == "[(2,3),(3,3),(1,1),(5,3),(4,4)]", || format!("arrow gave {got}"))?;

    for trial in 0..100 {
        let m = SeedStream::for_trial(0xA4, trial).matrix(7, 8, -9, 9);
        let r = mulders_check(&m, 5, 3, 4, 3).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("trial {trial}, t=5: {r}"))?;
        let r = mulders_check(&m, 6, 2, 3, 3).map_err(|e| e.to_string())?;
        ensure(r.holds && r.lhs.is_zero() && r.rhs.is_zero(), || {
            format!("trial {trial}, t=6: {r}")
        })?;
    }
    for trial in 0..100 {
        let mut s = SeedStream::for_trial(0x4A, trial);
        let n = s.next_in(2, 7) as usize;
        let t = s.next_in(0, n as i64 - 1) as usize;
        let m = s.matrix(n, n, -9, 9);
        let r = mulders_check(&m, t, t, t, n - t).map_err(|e| e.to_string())?;
        let syl = sylvester_check(&m, t).map_err(|e| e.to_string())?;
        ensure(r.lhs == syl.lhs && r.rhs == syl.rhs, || {
            format!("trial {trial}: {r} vs {syl}")
        })?;
    }
    Ok("arrow example; both parameterizations on 100 7x8; Sylvester reduction".into())
}

fn ac5_newgen() -> Verdict {
    let mut checks = 0;
    for (n, t, s) in [(10, 2, 2), (10, 6, 2), (8, 4, 2), (9, 3, 3), (7, 3, 1)] {
        let q = (n - t) / s;
        for trial in 0..100 {
            let m = SeedStream::for_trial(0xA5 + n as u64 * 100 + t as u64 * 10 + s as u64, trial)
                .matrix(n, n, -9, 9);
            for k in 0..=q {
                let r = newgen_check(&m, t, s, k).map_err(|e| e.to_string())?;
                ensure(r.holds, || format!("(n,t,s)=({n},{t},{s}) k={k} trial {trial}: {r}"))?;
                checks += 1;
            }
            let first = newgen_check(&m, t, s, 1).map_err(|e| e.to_string())?;
            let m1 = m.leading(t + s).map_err(|e| e.to_string())?;
            let syl = sylvester_check(&m1, t).map_err(|e| e.to_string())?;
            ensure(first.lhs == syl.lhs && first.rhs == syl.rhs, || {
                format!("(n,t,s)=({n},{t},{s}) trial {trial}: k=1 differs from Sylvester on M_1")
            })?;
        }
    }
    for trial in 0..100 {
        let m = SeedStream::for_trial(0x5A, trial).matrix(8, 8, -9, 9);
        let r = newgen_block_check(&m, 4).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("block trial {trial}: {r}"))?;
    }
    Ok(format!("{checks} stage checks; k=1 matches Sylvester; 100 block checks"))
}

fn ac6_bgm() -> Verdict {
    let configs = [
        BgmConfig::new(
            lists("(1,4);(3,4);(2,4);(4,5);(4,6)"),
            lists("(1,2,4);(1,4,7);(1,2,7);(1,4,7);(1,2,7)"),
            None,
        ),
        BgmConfig::new(lists("(1);(2);(3)"), lists("(1,2);(1,2);(1,2)"), None),
    ];
    for (c, cfg) in configs.into_iter().enumerate() {
        let cfg = cfg.map_err(|e| e.to_string())?;
        ensure(corollary_two_applies(&cfg), || format!("config {c}: second corollary not triggered"))?;
        for trial in 0..100 {
            let mut s = SeedStream::for_trial(0xA6 + c as u64, trial);
            let m = s.matrix(6, 7, -9, 9);
            let z = s.matrix(cfg.q(), 7, Z_LO, Z_HI);
            let r = bgm_corollary_checks(&m, &cfg, &z)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("config {c}: no corollary applies"))?;
            ensure(r.holds && r.lhs.is_zero(), || format!("config {c} trial {trial}: {r}"))?;
        }
    }

    let example = BgmConfig::new(
        lists("(2,3,4);(2,4);(1,2,4)"),
        lists("(2,3,4,5);(2,3,4);(2,3,4,7)"),
        None,
    )
    .map_err(|e| e.to_string())?;
    let mut inconclusive = 0;
    for trial in 0..100 {
        let m = SeedStream::for_trial(0x6A, trial).matrix(6, 7, -9, 9);
        let r = bgm_ratio_constancy(&m, &example, 5, 1000 + trial).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("ratio trial {trial}: {r}"))?;
        if r.notes.iter().any(|n| n.starts_with("inconclusive")) {
            inconclusive += 1;
        }
    }
    ensure(inconclusive < 100, || "every ratio trial was inconclusive".into())?;

    for trial in 0..100 {
        let mut s = SeedStream::for_trial(0x66, trial);
        let n = s.next_in(3, 7) as usize;
        let t = s.next_in(1, n as i64 - 1) as usize;
        let m = s.matrix(n, n, -9, 9);
        let r = bgm_sylvester_specialization(&m, t).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("specialization trial {trial}: {r}"))?;
    }
    Ok(format!(
        "corollary zeros on 200 draws; ratio constant on 100 matrices ({inconclusive} inconclusive); c = lead^(q-1) on 100"
    ))
}

fn ac7_certificate() -> Verdict {
    let start = Instant::now();
    let (mut accepted, mut rejected, mut draw) = (0, 0, 0u64);
    while accepted < 200 {
        let mut s = SeedStream::for_trial(0xA7, draw);
        draw += 1;
        let n = s.next_in(3, 7) as usize;
        let m = s.matrix(n, n, -9, 9);
        match bareiss_certified(&m) {
            Ok(cert) => {
                ensure(cert.trace.all_divisions_exact(), || format!("draw {draw}: inexact"))?;
                accepted += 1;
            }
            Err(Error::PivotFailure { .. }) => rejected += 1,
            Err(e) => return Err(format!("draw {draw}: {e}")),
        }
    }
    within(start, Duration::from_secs(30), "certification")?;
    Ok(format!(
        "200 certified ({rejected} singular-minor draws rejected) in {:.1?}",
        start.elapsed()
    ))
}

fn ac8_growth() -> Verdict {
    let mut stats = Vec::new();
    let mut skipped = 0;
    for trial in 0..20 {
        match growth_trial(8, 0xA8, trial, -99, 99).map_err(|e| e.to_string())? {
            Some(g) => {
                ensure(g.dets_agree(), || format!("trial {trial}: determinants differ"))?;
                ensure(g.ff_never_exceeds_naive(), || format!("trial {trial}: {:?}", g.stages))?;
                stats.push(g);
            }
            None => skipped += 1,
        }
    }
    ensure(!stats.is_empty(), || "every trial was singular".into())?;
    let table = GrowthTable::from_stats(8, &stats, skipped);
    ensure(table.rows.iter().all(|(_, ff, naive)| ff <= naive), || table.to_tsv())?;
    let (_, ff, naive) = table.rows.last().unwrap();
    Ok(format!(
        "{} trials ({skipped} skipped); last stage {ff:.1} vs {naive:.1} bits",
        stats.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Verdict); 8] = [
        ("AC1", "classical Sylvester suite", ac1_sylvester),
        ("AC2", "GLR sign values", ac2_glr),
        ("AC3", "Yakovlev expansion", ac3_yakovlev),
        ("AC4", "Mulders pair classes", ac4_mulders),
        ("AC5", "generalized chain identity", ac5_newgen),
        ("AC6", "BGM behaviour", ac6_bgm),
        ("AC7", "fraction-free certificate", ac7_certificate),
        ("AC8", "growth benchmark", ac8_growth),
    ];
    let mut failed = 0;
    for (id, title, run) in criteria {
        match run() {
            Ok(detail) => println!("{id} PASS {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {title}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
