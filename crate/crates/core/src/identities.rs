//! Registry of identities and the engine that checks each one to finite
//! bounds, producing machine-readable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::combinatorics::{
    family_table, series_of_family, series_of_table, CombError, CountTable, FamilyId, ProductSideId, Stats,
};
use crate::qfactory::{
    constant_term_lhs, lemma_suite, product_rhs, quad_sum, sum_rhs, ConstantTermRoute, LemmaBounds, ProductId,
    QuadId, SumId,
};
use crate::series::{Bounds, Comparison, DilationRule, Series, SeriesError, WeightFloor};
use crate::staircase::{bijection_audit_through, AuditVariant, StaircaseError};

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("unknown profile {0:?}")]
    UnknownProfile(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Family(#[from] CombError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    SeriesEq,
    CountTableEq,
    BijectionAudit,
    Lemma,
}

macro_rules! cases {
    ($($variant:ident => $text:literal, $kind:ident, $lhs:literal, $rhs:literal;)+) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CaseId { $($variant),+ }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[$(CaseId::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self { $(CaseId::$variant => $text),+ }
            }

            pub fn case(&self) -> IdentityCase {
                match self {
                    $(CaseId::$variant => IdentityCase {
                        id: *self,
                        kind: CaseKind::$kind,
                        lhs: $lhs,
                        rhs: $rhs,
                    }),+
                }
            }
        }

        impl FromStr for CaseId {
            type Err = IdentityError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok(CaseId::$variant),)+
                    _ => Err(IdentityError::UnknownCase(s.to_string())),
                }
            }
        }
    };
}

cases! {
    Aag => "aag", SeriesEq, "aag family series", "product aag";
    Ct => "ct", SeriesEq, "constant term of the triple-product integrand", "product aag";
    Contributions => "contributions", SeriesEq, "quadruple sum, full staircase", "product aag";
    Thm15 => "thm15", SeriesEq, "c1 family series", "staircase sum thm15";
    Thm16 => "thm16", SeriesEq, "c2 family series", "staircase sum thm16";
    Thm17 => "thm17", SeriesEq, "c3 family series", "staircase sum thm17";
    Thm18 => "thm18", SeriesEq, "c1 family series at d=1", "product thm18";
    Thm19 => "thm19", SeriesEq, "c2 family series at d=1", "product thm19";
    Thm110 => "thm110", SeriesEq, "c3 family series at d=1", "product thm110";
    C1Quad => "c1-quad", SeriesEq, "quadruple sum, generalized staircase in two cases", "c1 family series";
    C2Quad => "c2-quad", SeriesEq, "quadruple sum, partial staircase over a-parts", "c2 family series";
    C3Quad => "c3-quad", SeriesEq, "quadruple sum, partial staircase over a- and b-parts", "c3 family series";
    Cor1 => "cor1", CountTableEq, "cor1 family table", "dbar table";
    Cor2 => "cor2", CountTableEq, "cor2 family table", "dprime table";
    Cor3 => "cor3", CountTableEq, "cor3 family table", "ddprime table";
    Capparelli => "capparelli", CountTableEq, "capparelli family, congruence form", "d table";
    CapparelliMatrix => "capparelli-matrix", CountTableEq, "capparelli family, undilated matrix form", "capparelli family, congruence form";
    Cor14Refined => "cor14-refined", SeriesEq, "aag family series dilated mod 3", "d table series";
    Cstar => "cstar", CountTableEq, "cstar-dilated family, congruence form", "d table";
    CstarMatrix => "cstar-matrix", CountTableEq, "cstar-dilated family, undilated matrix form", "d table";
    CstarWeighted => "cstar-weighted", SeriesEq, "cstar family series", "product aag";
    Eq51 => "eq51", SeriesEq, "a table series", "staircase sum eq51";
    Eq52 => "eq52", SeriesEq, "c4 family series", "staircase sum eq52";
    BijFull => "bij-full", BijectionAudit, "level composition with generalized staircase", "cbar family";
    BijC1 => "bij-c1", BijectionAudit, "both c1 cases", "c1 family";
    BijC2 => "bij-c2", BijectionAudit, "partial staircase over a-parts", "c2 family";
    BijC3 => "bij-c3", BijectionAudit, "partial staircase over a- and b-parts", "c3 family";
    Lemmas => "lemmas", Lemma, "lemma left sides", "lemma right sides";
}

impl Serialize for CaseId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub id: CaseId,
    pub kind: CaseKind,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

/// Every case, sorted by id.
pub fn registry() -> Vec<IdentityCase> {
    let mut all: Vec<IdentityCase> = CaseId::ALL.iter().map(|c| c.case()).collect();
    all.sort_by_key(|c| c.id.as_str());
    all
}

/// Requested bounds. Cases may cap them; the report records what was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyBounds {
    /// `q`-bound for series cases.
    pub q: u32,
    /// `d`-bound for series cases with a staircase variable.
    pub d: u32,
    /// Weight bound for congruence-class count tables.
    pub n_dilated: u32,
    /// Weight and `k` bounds for bijection audits.
    pub audit_n: u32,
    pub audit_k: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Standard,
    Deep,
}

impl Profile {
    pub fn bounds(self) -> VerifyBounds {
        match self {
            Profile::Quick => VerifyBounds { q: 12, d: 4, n_dilated: 20, audit_n: 10, audit_k: 3 },
            Profile::Standard => VerifyBounds { q: 20, d: 6, n_dilated: 30, audit_n: 16, audit_k: 4 },
            Profile::Deep => VerifyBounds { q: 30, d: 8, n_dilated: 40, audit_n: 18, audit_k: 5 },
        }
    }
}

impl FromStr for Profile {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "standard" => Ok(Profile::Standard),
            "deep" => Ok(Profile::Deep),
            _ => Err(IdentityError::UnknownProfile(s.to_string())),
        }
    }
}

impl VerifyBounds {
    /// Explicit `q`/`d` bounds; every other bound follows `q` and `d`.
    pub fn explicit(q: u32, d: u32) -> Self {
        VerifyBounds { q, d, n_dilated: q, audit_n: q, audit_k: d }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Blocked,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Blocked => "blocked",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    pub kind: CaseKind,
    /// Bounds actually used.
    pub bounds: BTreeMap<&'static str, u32>,
    pub verdict: Verdict,
    /// First discrepancy for a failure, the reason for a blocked case.
    pub discrepancy: Option<Value>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if timings {
            v["wall_ms"] = json!(self.wall_time.as_secs_f64() * 1e3);
        }
        v
    }
}

/// Combined status: 0 all pass, 1 any failure, 2 blocked without failures.
pub fn exit_status(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().any(|r| r.verdict == Verdict::Blocked) {
        2
    } else {
        0
    }
}

/// What a case produced before it is turned into a report.
enum Outcome {
    Pass,
    Fail(Value),
}

fn compare_series(lhs: &Series, rhs: &Series, n: i64, k: Option<u32>) -> Result<Outcome, IdentityError> {
    Ok(match lhs.equal_up_to(rhs, n, k)? {
        Comparison::Equal => Outcome::Pass,
        Comparison::Differ { monomial, left, right } => Outcome::Fail(json!({
            "monomial": monomial.to_string(),
            "left": left.to_string(),
            "right": right.to_string(),
        })),
    })
}

fn compare_tables(lhs: &CountTable, rhs: &CountTable) -> Outcome {
    let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).collect();
    for key in keys {
        let (l, r) = (lhs.get(key).copied().unwrap_or(0), rhs.get(key).copied().unwrap_or(0));
        if l != r {
            let (n, s) = key;
            return Outcome::Fail(json!({
                "cell": {"n": n, "k": s.k, "i": s.i, "j": s.j},
                "left": l,
                "right": r,
            }));
        }
    }
    Outcome::Pass
}

/// Sums out `k`, keeping `(n, i, j)`.
fn forget_k(t: &CountTable) -> CountTable {
    let mut out = CountTable::new();
    for ((n, s), c) in t {
        *out.entry((*n, Stats { k: 0, ..*s })).or_insert(0) += c;
    }
    out
}

fn family_sum(id: FamilyId, quad: QuadId, b: &VerifyBounds, used: &mut BTreeMap<&'static str, u32>) -> Result<Outcome, IdentityError> {
    used.insert("q", b.q);
    used.insert("d", b.d);
    let bounds = Bounds::new(i64::from(b.q)).with_d(b.d);
    let family = series_of_family(&id.spec(), b.q, Some(b.d))?;
    compare_series(&quad_sum(quad, bounds), &family, i64::from(b.q), Some(b.d))
}

fn run_case(id: CaseId, b: &VerifyBounds, used: &mut BTreeMap<&'static str, u32>) -> Result<Outcome, IdentityError> {
    let n = i64::from(b.q);
    let plain = Bounds::new(n);
    let aag = || product_rhs(ProductId::Aag, plain);
    let staircase = |family: FamilyId, sum: SumId, used: &mut BTreeMap<&'static str, u32>| {
        used.insert("q", b.q);
        used.insert("d", b.d);
        let lhs = series_of_family(&family.spec(), b.q, Some(b.d))?;
        compare_series(&lhs, &sum_rhs(sum, plain.with_d(b.d)), n, Some(b.d))
    };
    let at_one = |family: FamilyId, product: ProductId, used: &mut BTreeMap<&'static str, u32>| {
        used.insert("q", b.q);
        let lhs = series_of_family(&family.spec(), b.q, None)?.at_d_one()?;
        compare_series(&lhs, &product_rhs(product, plain), n, None)
    };
    let tables = |family: FamilyId, side: ProductSideId, used: &mut BTreeMap<&'static str, u32>, refine: fn(&CountTable) -> CountTable| {
        used.insert("n", b.n_dilated);
        let lhs = family_table(&family.spec(), b.n_dilated, None)?;
        Ok::<_, IdentityError>(compare_tables(&refine(&lhs), &refine(&side.table(b.n_dilated))))
    };
    let audit = |variant: AuditVariant, used: &mut BTreeMap<&'static str, u32>| {
        // Weight-0 images carry no overlines, so k never exceeds the weight.
        let k = b.audit_k.min(b.audit_n);
        used.insert("n", b.audit_n);
        used.insert("k", k);
        let reports = bijection_audit_through(variant, b.audit_n, k)?;
        Ok::<_, IdentityError>(match reports.into_iter().find(|r| !r.passed()) {
            None => Outcome::Pass,
            Some(r) => Outcome::Fail(json!({"audit": r, "reason": r.reason})),
        })
    };
    match id {
        CaseId::Aag => {
            used.insert("q", b.q);
            compare_series(&series_of_family(&FamilyId::Aag.spec(), b.q, Some(0))?, &aag(), n, Some(0))
        }
        CaseId::Ct => {
            used.insert("q", b.q);
            compare_series(&constant_term_lhs(plain, ConstantTermRoute::Taylor), &aag(), n, None)
        }
        CaseId::Contributions => {
            used.insert("q", b.q);
            compare_series(&quad_sum(QuadId::Contributions, plain), &aag(), n, None)
        }
        CaseId::Thm15 => staircase(FamilyId::C1, SumId::Thm15, used),
        CaseId::Thm16 => staircase(FamilyId::C2, SumId::Thm16, used),
        CaseId::Thm17 => staircase(FamilyId::C3, SumId::Thm17, used),
        CaseId::Thm18 => at_one(FamilyId::C1, ProductId::Thm18, used),
        CaseId::Thm19 => at_one(FamilyId::C2, ProductId::Thm19, used),
        CaseId::Thm110 => at_one(FamilyId::C3, ProductId::Thm110, used),
        CaseId::C1Quad => family_sum(FamilyId::C1, QuadId::C1, b, used),
        CaseId::C2Quad => family_sum(FamilyId::C2, QuadId::C2, b, used),
        CaseId::C3Quad => family_sum(FamilyId::C3, QuadId::C3, b, used),
        CaseId::Cor1 => tables(FamilyId::Cor1, ProductSideId::Dbar, used, CountTable::clone),
        CaseId::Cor2 => tables(FamilyId::Cor2, ProductSideId::Dprime, used, CountTable::clone),
        CaseId::Cor3 => tables(FamilyId::Cor3, ProductSideId::Ddprime, used, CountTable::clone),
        CaseId::Capparelli => tables(FamilyId::Capparelli, ProductSideId::D, used, forget_k),
        CaseId::Cstar => tables(FamilyId::CstarDilated, ProductSideId::D, used, forget_k),
        CaseId::CstarMatrix => tables(FamilyId::CstarDilatedMatrix, ProductSideId::D, used, forget_k),
        CaseId::CapparelliMatrix => {
            used.insert("n", b.n_dilated);
            let lhs = family_table(&FamilyId::CapparelliMatrix.spec(), b.n_dilated, None)?;
            let rhs = family_table(&FamilyId::Capparelli.spec(), b.n_dilated, None)?;
            Ok(compare_tables(&lhs, &rhs))
        }
        CaseId::Cor14Refined => {
            // Parts a, b >= 2 in the aag family.
            let floor = WeightFloor { per_a: 2, per_b: 2, per_d: 0 };
            let target = i64::from(b.n_dilated);
            let undilated = (0..=target)
                .find(|&q| DilationRule::MOD3.horizon(q, &floor) >= target)
                .unwrap_or(target);
            used.insert("q", undilated as u32);
            used.insert("n", b.n_dilated);
            let lhs = series_of_family(&FamilyId::Aag.spec(), undilated as u32, Some(0))?
                .dilate(&DilationRule::MOD3, &floor)?;
            let rhs = series_of_table(&ProductSideId::D.table(b.n_dilated), Bounds::new(target).with_d(0));
            compare_series(&lhs, &rhs, target, Some(0))
        }
        CaseId::CstarWeighted => {
            used.insert("q", b.q);
            compare_series(&series_of_family(&FamilyId::Cstar.spec(), b.q, Some(0))?, &aag(), n, Some(0))
        }
        CaseId::Eq51 => {
            used.insert("q", b.q);
            used.insert("d", b.d);
            let bounds = plain.with_d(b.d);
            let lhs = series_of_table(&ProductSideId::A.table(b.q), bounds);
            compare_series(&lhs, &sum_rhs(SumId::Eq51, bounds), n, Some(b.d))
        }
        CaseId::Eq52 => staircase(FamilyId::C4, SumId::Eq52, used),
        CaseId::BijFull => audit(AuditVariant::Full, used),
        CaseId::BijC1 => audit(AuditVariant::C1, used),
        CaseId::BijC2 => audit(AuditVariant::C2, used),
        CaseId::BijC3 => audit(AuditVariant::C3, used),
        CaseId::Lemmas => {
            let lb = LemmaBounds::default();
            used.insert("reversal_n", lb.reversal_n);
            used.insert("chu_n", lb.chu_n);
            used.insert("q", lb.binomial_q as u32);
            used.insert("jtp_q", lb.jtp_q as u32);
            let report = lemma_suite(&lb);
            Ok(match report.results.iter().find(|r| !r.passed) {
                None => Outcome::Pass,
                Some(r) => Outcome::Fail(json!({"lemma": r.name, "instance": r.failure})),
            })
        }
    }
}

/// Checks one case. Errors from the engine (bounds, dilation domain)
/// become a blocked verdict rather than a failure.
pub fn verify(id: CaseId, bounds: &VerifyBounds) -> Report {
    let start = Instant::now();
    let mut used = BTreeMap::new();
    let (verdict, discrepancy) = match run_case(id, bounds, &mut used) {
        Ok(Outcome::Pass) => (Verdict::Pass, None),
        Ok(Outcome::Fail(v)) => (Verdict::Fail, Some(v)),
        Err(e) => (Verdict::Blocked, Some(json!({"reason": e.to_string()}))),
    };
    Report {
        id: id.as_str().to_string(),
        kind: id.case().kind,
        bounds: used,
        verdict,
        discrepancy,
        wall_time: start.elapsed(),
    }
}

/// Every case, run concurrently, sorted by id.
pub fn verify_all(bounds: &VerifyBounds) -> Vec<Report> {
    verify_many(CaseId::ALL, bounds)
}

pub fn verify_many(ids: &[CaseId], bounds: &VerifyBounds) -> Vec<Report> {
    let mut reports: Vec<Report> = ids.par_iter().map(|&id| verify(id, bounds)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// One line of the text rendering.
pub fn describe(report: &Report) -> String {
    let bounds: Vec<String> = report.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut line = format!("{:<18} {:<8} {}", report.id, report.verdict.to_string(), bounds.join(" "));
    if let Some(d) = &report.discrepancy {
        line.push_str(&format!("  {d}"));
    }
    line
}
