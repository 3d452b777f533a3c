//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use capparelli_core::combinatorics::{enumerate_family, family_table, FamilyId, JaggedOverpartition, ProductSideId, Stats};
use capparelli_core::identities::{verify, verify_all, CaseId, Profile, Verdict, VerifyBounds};
use capparelli_core::qfactory::{constant_term_lhs, constant_term_lhs_unpruned, product_rhs, ConstantTermRoute, ProductId};
use capparelli_core::series::Bounds;
use capparelli_core::staircase::{bijection_audit_through, compose_levels, decompose_levels, AuditVariant};
use rayon::prelude::*;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn expect_pass(id: CaseId, bounds: VerifyBounds) -> Outcome {
    let r = verify(id, &bounds);
    let used: Vec<String> = r.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
    match r.verdict {
        Verdict::Pass => Ok(format!("{id} [{}]", used.join(" "))),
        v => Err(format!("{id} {v}: {}", r.discrepancy.map(|d| d.to_string()).unwrap_or_default())),
    }
}

fn all(results: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for r in results {
        notes.push(r?);
    }
    Ok(notes.join("; "))
}

fn series(q: u32, d: u32) -> VerifyBounds {
    VerifyBounds::explicit(q, d)
}

fn tables(n: u32) -> VerifyBounds {
    VerifyBounds { n_dilated: n, ..VerifyBounds::explicit(0, 0) }
}

fn listing(family: FamilyId, side: ProductSideId, n: u32, family_text: &str, side_text: &str) -> Outcome {
    let got: BTreeSet<JaggedOverpartition> = enumerate_family(&family.spec(), n, None).unwrap().into_iter().collect();
    let want: BTreeSet<JaggedOverpartition> = parse_list(family_text).into_iter().collect();
    if got != want {
        return Err(format!("{family} listing at {n} differs ({} vs {})", got.len(), want.len()));
    }
    let got: BTreeSet<_> = side.enumerate(n).iter().map(|l| l.as_jagged()).collect();
    let want: BTreeSet<_> = parse_list(side_text).into_iter().collect();
    if got != want {
        return Err(format!("{side} listing at {n} differs ({} vs {})", got.len(), want.len()));
    }
    Ok(format!("{family}/{side} listings at {n} match ({} each)", want.len()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = expect_pass(CaseId::Ct, series(30, 0))?;
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{r} in {t:.2?}"))
}

fn criterion_2() -> Outcome {
    all(vec![expect_pass(CaseId::Aag, series(25, 0)), expect_pass(CaseId::Contributions, series(25, 0))])
}

fn criterion_3() -> Outcome {
    all([CaseId::Thm15, CaseId::Thm16, CaseId::Thm17].map(|id| expect_pass(id, series(18, 6))).to_vec())
}

fn criterion_4() -> Outcome {
    all([CaseId::Thm18, CaseId::Thm19, CaseId::Thm110].map(|id| expect_pass(id, series(20, 0))).to_vec())
}

fn criterion_5() -> Outcome {
    let cell = (13, Stats { k: 1, i: 1, j: 0 });
    let left = family_table(&FamilyId::Cor1.spec(), 13, None).unwrap()[&cell];
    let right = ProductSideId::Dbar.table(13)[&cell];
    let cell_note = if left == 4 && right == 4 {
        Ok(format!("cell (13;1;1,0) = {left} = {right}"))
    } else {
        Err(format!("cell (13;1;1,0): {left} vs {right}"))
    };
    all(vec![
        expect_pass(CaseId::Cor1, tables(35)),
        listing(FamilyId::Cor1, ProductSideId::Dbar, 13, COR1_13, DBAR_13),
        cell_note,
    ])
}

fn criterion_6() -> Outcome {
    all(vec![
        expect_pass(CaseId::Cor2, tables(30)),
        listing(FamilyId::Cor2, ProductSideId::Dprime, 11, COR2_11, DPRIME_11),
    ])
}

fn criterion_7() -> Outcome {
    all(vec![
        expect_pass(CaseId::Cor3, tables(30)),
        listing(FamilyId::Cor3, ProductSideId::Ddprime, 11, COR3_11, DDPRIME_11),
    ])
}

fn criterion_8() -> Outcome {
    all(
        [CaseId::Capparelli, CaseId::CapparelliMatrix, CaseId::Cor14Refined, CaseId::Cstar, CaseId::CstarMatrix]
            .map(|id| expect_pass(id, tables(40)))
            .to_vec(),
    )
}

fn criterion_9() -> Outcome {
    let runs = [(AuditVariant::Full, 18, 0), (AuditVariant::C1, 14, 4), (AuditVariant::C2, 14, 4), (AuditVariant::C3, 14, 4)];
    let mut notes = Vec::new();
    for (variant, n, k) in runs {
        let reports = bijection_audit_through(variant, n, k).map_err(|e| e.to_string())?;
        if let Some(bad) = reports.iter().find(|r| !r.passed()) {
            return Err(format!("{variant} n={} fails: {:?}", bad.n, bad.reason));
        }
        let images: usize = reports.iter().map(|r| r.images).sum();
        notes.push(format!("{variant} n<={n} k<={k} ({images} images)"));
    }
    Ok(notes.join("; "))
}

fn criterion_10() -> Outcome {
    all(vec![expect_pass(CaseId::Eq51, series(25, 8)), expect_pass(CaseId::Eq52, series(18, 6))])
}

fn criterion_11() -> Outcome {
    expect_pass(CaseId::Lemmas, series(0, 0))
}

fn criterion_12() -> Outcome {
    let jobs: Vec<(FamilyId, u32, u32)> = FamilyId::ALL
        .iter()
        .flat_map(|&f| (0..=12).flat_map(move |n| (0..=4).map(move |k| (f, n, k))))
        .collect();
    let mismatch = jobs.par_iter().find_any(|&&(family, n, k)| {
        let spec = family.spec();
        let fast: BTreeSet<_> = enumerate_family(&spec, n, Some(k)).unwrap().into_iter().collect();
        fast != naive_family(&spec, n, k)
    });
    if let Some((family, n, k)) = mismatch {
        return Err(format!("enumerator and naive filter differ for {family} n={n} k={k}"));
    }
    let quads = quadruples(20, 2);
    if let Some(c) = quads.par_iter().find_any(|c| decompose_levels(&compose_levels(c)).as_ref() != Ok(*c)) {
        return Err(format!("level round trip fails for {c:?}"));
    }
    for n in 0..=12 {
        let b = Bounds::new(n);
        let truth = product_rhs(ProductId::Aag, b);
        let pruned = constant_term_lhs(b, ConstantTermRoute::Laurent);
        if pruned != constant_term_lhs_unpruned(b) || !pruned.equal_up_to(&truth, n, None).unwrap().is_equal() {
            return Err(format!("pruned Laurent route differs at q_bound {n}"));
        }
    }
    Ok(format!(
        "naive filter agrees on {} (family, n, k) cells; {} level round trips; pruned Laurent route exact for q_bound <= 12",
        jobs.len(),
        quads.len()
    ))
}

fn criterion_13() -> Outcome {
    let start = Instant::now();
    let reports = verify_all(&Profile::Standard.bounds());
    let t = start.elapsed();
    if let Some(bad) = reports.iter().find(|r| r.verdict != Verdict::Pass) {
        return Err(format!("{} {}", bad.id, bad.verdict));
    }
    if t > Duration::from_secs(600) {
        return Err(format!("standard profile took {t:?}"));
    }
    Ok(format!("{} cases pass in {t:.2?}", reports.len()))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("constant-term identity to q^30", criterion_1),
        ("aag family and quadruple sum equal the product to q^25", criterion_2),
        ("c1/c2/c3 family series equal the staircase sums to (q^18, d^6)", criterion_3),
        ("d=1 specializations equal the infinite products to q^20", criterion_4),
        ("cor1 tables through 35, listings at 13", criterion_5),
        ("cor2 tables through 30, listings at 11", criterion_6),
        ("cor3 tables through 30, listings at 11", criterion_7),
        ("capparelli and companion refined counts through 40", criterion_8),
        ("bijection audits", criterion_9),
        ("parity-alternation sums", criterion_10),
        ("lemma suite", criterion_11),
        ("property suites", criterion_12),
        ("standard profile under 10 minutes", criterion_13),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(note) => println!("criterion {:>2}: PASS  {name}: {note}", idx + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", idx + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
