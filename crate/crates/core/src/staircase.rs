//! Level composition of four component partitions into a colored jagged
//! partition, staircase selections, and bijection audits of the resulting
//! forward maps against the enumerated families.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::combinatorics::{
    enumerate_family, Color, ColoredPart, CombError, FamilyId, FamilySpec, JaggedOverpartition, Stats,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StaircaseError {
    #[error("no level structure fits at position {position}")]
    Decomposition { position: usize },
    #[error("selection expects {expected} parts, partition has {actual}")]
    PartCount { expected: usize, actual: usize },
    #[error("staircase input already carries overlines")]
    Overlined,
    #[error("selection index {0} is outside its window")]
    BadIndex(u32),
    #[error("selection window {window} does not match variant {variant} (expected {expected})")]
    Window { variant: Variant, window: u32, expected: u32 },
    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
    #[error(transparent)]
    Family(#[from] CombError),
}

/// `a` and `b` strictly decreasing and positive, `ab` weakly decreasing odd,
/// `u` weakly decreasing non-negative.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentQuadruple {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub ab: Vec<u32>,
    pub u: Vec<u32>,
}

impl ComponentQuadruple {
    pub fn weight(&self) -> u32 {
        [&self.a, &self.b, &self.ab, &self.u].iter().map(|v| v.iter().sum::<u32>()).sum()
    }

    pub fn part_count(&self) -> usize {
        self.a.len() + self.b.len() + 2 * self.ab.len() + self.u.len()
    }

    pub fn is_well_formed(&self) -> bool {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]) && v.iter().all(|&x| x > 0);
        let weak = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
        strict(&self.a) && strict(&self.b) && weak(&self.ab) && self.ab.iter().all(|x| x % 2 == 1) && weak(&self.u)
    }

    fn top_level(&self) -> u32 {
        let a = self.a.first().copied().unwrap_or(0);
        let b = self.b.first().copied().unwrap_or(0);
        let ab = self.ab.first().map_or(0, |x| x.div_ceil(2));
        let u = self.u.first().map_or(0, |x| x + 1);
        a.max(b).max(ab).max(u)
    }
}

/// Level `k`, from the top down: `k_a`, the `(k-1)_u`, a lone `k_b`, then the
/// pairs `(k-1)_a k_b` coming from parts `2k-1` of `ab`.
pub fn compose_levels(c: &ComponentQuadruple) -> JaggedOverpartition {
    let mut parts = Vec::with_capacity(c.part_count());
    for k in (1..=c.top_level()).rev() {
        if c.a.contains(&k) {
            parts.push(ColoredPart::plain(k, Color::A));
        }
        for _ in c.u.iter().filter(|&&x| x == k - 1) {
            parts.push(ColoredPart::plain(k - 1, Color::U));
        }
        if c.b.contains(&k) {
            parts.push(ColoredPart::plain(k, Color::B));
        }
        for _ in c.ab.iter().filter(|&&x| x == 2 * k - 1) {
            parts.push(ColoredPart::plain(k - 1, Color::A));
            parts.push(ColoredPart::plain(k, Color::B));
        }
    }
    JaggedOverpartition::new(parts)
}

pub fn decompose_levels(lambda: &JaggedOverpartition) -> Result<ComponentQuadruple, StaircaseError> {
    let parts = &lambda.parts;
    if let Some(pos) = parts.iter().position(|p| p.overlined) {
        return Err(StaircaseError::Decomposition { position: pos });
    }
    let is = |pos: usize, v: u32, c: Color| parts.get(pos).is_some_and(|p| p.value == v && p.color == c);
    // A pair (k-1)_a k_b may open the sequence, so start one level above the largest value.
    let top = parts.iter().map(|p| p.value + 1).max().unwrap_or(0);
    let mut c = ComponentQuadruple::default();
    let mut pos = 0;
    for k in (1..=top).rev() {
        if is(pos, k, Color::A) {
            c.a.push(k);
            pos += 1;
        }
        while is(pos, k - 1, Color::U) {
            c.u.push(k - 1);
            pos += 1;
        }
        if is(pos, k, Color::B) {
            c.b.push(k);
            pos += 1;
        }
        while is(pos, k - 1, Color::A) && is(pos + 1, k, Color::B) {
            c.ab.push(2 * k - 1);
            pos += 2;
        }
    }
    if pos != parts.len() {
        return Err(StaircaseError::Decomposition { position: pos });
    }
    Ok(c)
}

/// Indices `1..=window` are optional and `chosen` picks among them; indices
/// `window+1..=m` are always applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseSelection {
    pub m: u32,
    pub window: u32,
    pub chosen: BTreeSet<u32>,
}

impl StaircaseSelection {
    pub fn new(m: u32, window: u32, chosen: impl IntoIterator<Item = u32>) -> Self {
        StaircaseSelection { m, window, chosen: chosen.into_iter().collect() }
    }

    /// Every index chosen.
    pub fn full(m: u32) -> Self {
        StaircaseSelection::new(m, m, 1..=m)
    }

    pub fn d_exponent(&self) -> u32 {
        self.window - self.chosen.len() as u32
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.chosen.iter().copied().chain(self.window + 1..=self.m)
    }

    pub fn added_weight(&self) -> u32 {
        self.indices().sum()
    }
}

/// For each applied index `k`: add 1 to the first `k` parts and overline
/// part `k`.
pub fn apply_selection(
    lambda: &JaggedOverpartition,
    sel: &StaircaseSelection,
) -> Result<JaggedOverpartition, StaircaseError> {
    if lambda.len() != sel.m as usize {
        return Err(StaircaseError::PartCount { expected: sel.m as usize, actual: lambda.len() });
    }
    if lambda.parts.iter().any(|p| p.overlined) {
        return Err(StaircaseError::Overlined);
    }
    if sel.window > sel.m {
        return Err(StaircaseError::BadIndex(sel.window));
    }
    if let Some(&bad) = sel.chosen.iter().find(|&&k| k == 0 || k > sel.window) {
        return Err(StaircaseError::BadIndex(bad));
    }
    let m = sel.m as usize;
    // Part p gains the number of applied indices >= p.
    let mut gain = vec![0u32; m + 1];
    let mut over = vec![false; m];
    for k in sel.indices() {
        gain[k as usize - 1] += 1;
        over[k as usize - 1] = true;
    }
    for p in (0..m).rev() {
        gain[p] += gain[p + 1];
    }
    let parts = lambda
        .parts
        .iter()
        .enumerate()
        .map(|(p, part)| ColoredPart { value: part.value + gain[p], color: part.color, overlined: over[p] })
        .collect();
    Ok(JaggedOverpartition::new(parts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Optional indices over all parts.
    Full,
    /// u-parts raised by one, optional indices over all parts.
    C1Case1,
    /// `0_u` inserted, the last index forced.
    C1Case2,
    /// Optional indices over the first `r+v` parts.
    C2,
    /// Optional indices over the first `r+s+2v` parts.
    C3,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::Full, Variant::C1Case1, Variant::C1Case2, Variant::C2, Variant::C3];

    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::C1Case1 => "c1_case1",
            Variant::C1Case2 => "c1_case2",
            Variant::C2 => "c2",
            Variant::C3 => "c3",
        }
    }

    pub fn family(&self) -> FamilyId {
        match self {
            Variant::Full => FamilyId::Cbar,
            Variant::C1Case1 | Variant::C1Case2 => FamilyId::C1,
            Variant::C2 => FamilyId::C2,
            Variant::C3 => FamilyId::C3,
        }
    }

    /// The jagged partition the selection acts on.
    pub fn base(&self, c: &ComponentQuadruple) -> JaggedOverpartition {
        match self {
            Variant::C1Case1 => {
                let raised = ComponentQuadruple { u: c.u.iter().map(|x| x + 1).collect(), ..c.clone() };
                compose_levels(&raised)
            }
            Variant::C1Case2 => {
                let mut u = c.u.clone();
                u.push(0);
                compose_levels(&ComponentQuadruple { u, ..c.clone() })
            }
            _ => compose_levels(c),
        }
    }

    /// Window size for the base partition built from `c`.
    pub fn window(&self, c: &ComponentQuadruple) -> u32 {
        let m = c.part_count() as u32;
        let (r, s, v) = (c.a.len() as u32, c.b.len() as u32, c.ab.len() as u32);
        match self {
            Variant::Full | Variant::C1Case1 => m,
            Variant::C1Case2 => m,
            Variant::C2 => r + v,
            Variant::C3 => r + s + 2 * v,
        }
    }

    fn base_len(&self, c: &ComponentQuadruple) -> u32 {
        c.part_count() as u32 + u32::from(*self == Variant::C1Case2)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = StaircaseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| StaircaseError::UnknownVariant(s.to_string()))
    }
}

pub fn forward_map(
    c: &ComponentQuadruple,
    sel: &StaircaseSelection,
    variant: Variant,
) -> Result<JaggedOverpartition, StaircaseError> {
    let expected = variant.window(c);
    if sel.window != expected {
        return Err(StaircaseError::Window { variant, window: sel.window, expected });
    }
    apply_selection(&variant.base(c), sel)
}

/// Statistics the forward map promises: `k = w - |S|`, `i = r+v`, `j = s+v`.
pub fn expected_stats(c: &ComponentQuadruple, sel: &StaircaseSelection) -> Stats {
    let v = c.ab.len() as u32;
    Stats { k: sel.d_exponent(), i: c.a.len() as u32 + v, j: c.b.len() as u32 + v }
}

/// Audited correspondence: `c1` covers both of its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuditVariant {
    Full,
    C1,
    C2,
    C3,
}

impl AuditVariant {
    pub const ALL: [AuditVariant; 4] = [AuditVariant::Full, AuditVariant::C1, AuditVariant::C2, AuditVariant::C3];

    pub fn as_str(&self) -> &'static str {
        match self {
            AuditVariant::Full => "full",
            AuditVariant::C1 => "c1",
            AuditVariant::C2 => "c2",
            AuditVariant::C3 => "c3",
        }
    }

    pub fn parts(&self) -> &'static [Variant] {
        match self {
            AuditVariant::Full => &[Variant::Full],
            AuditVariant::C1 => &[Variant::C1Case1, Variant::C1Case2],
            AuditVariant::C2 => &[Variant::C2],
            AuditVariant::C3 => &[Variant::C3],
        }
    }

    pub fn family(&self) -> FamilyId {
        self.parts()[0].family()
    }
}

impl fmt::Display for AuditVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AuditVariant {
    type Err = StaircaseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AuditVariant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| StaircaseError::UnknownVariant(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub variant: String,
    pub n: u32,
    pub k_max: u32,
    pub status: AuditStatus,
    pub witness: Option<Value>,
    pub images: usize,
    #[serde(skip)]
    pub reason: Option<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.status == AuditStatus::Pass
    }
}

fn distinct_partitions(max_weight: u32, max_part: u32, step: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    out.push(cur.clone());
    let mut v = max_part.min(max_weight);
    while v >= 1 {
        if step == 0 || v % 2 == 1 {
            cur.push(v);
            let next_max = if step == 0 { v - 1 } else { v };
            distinct_partitions(max_weight - v, next_max, step, out, cur);
            cur.pop();
        }
        v -= 1;
    }
}

/// Strictly decreasing positive sequences of weight at most `w`.
fn strict_parts(w: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    distinct_partitions(w, w, 0, &mut out, &mut Vec::new());
    out
}

/// Weakly decreasing odd sequences of weight at most `w`.
fn odd_parts(w: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    distinct_partitions(w, w, 1, &mut out, &mut Vec::new());
    out
}

/// Weakly decreasing non-negative sequences with weight at most `w` and at
/// most `len` entries.
fn u_parts(w: u32, len: usize) -> Vec<Vec<u32>> {
    fn go(w: u32, max: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() == len {
            return;
        }
        for v in (0..=max.min(w)).rev() {
            cur.push(v);
            go(w - v, v, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w, w, len, &mut Vec::new(), &mut out);
    out
}

/// Subsets of `1..=w` with sum `target` and size at least `min_size`.
fn subsets_with_sum(w: u32, target: u32, min_size: u32) -> Vec<Vec<u32>> {
    fn go(top: u32, target: u32, need: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if target == 0 {
            if need == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // Largest reachable sum with indices <= top is top(top+1)/2.
        if top * (top + 1) / 2 < target {
            return;
        }
        for k in (1..=top.min(target)).rev() {
            cur.push(k);
            go(k - 1, target - k, need.saturating_sub(1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w, target, min_size, &mut Vec::new(), &mut out);
    out
}

/// Every `(quadruple, selection)` whose image under `variant` has weight `n`
/// and at most `k_max` unchosen optional indices.
pub fn preimages(variant: Variant, n: u32, k_max: u32) -> Vec<(ComponentQuadruple, StaircaseSelection)> {
    let max_parts = (n + k_max) as usize;
    let a_side = strict_parts(n);
    let ab_side = odd_parts(n);
    let mut out = Vec::new();
    for a in &a_side {
        let wa: u32 = a.iter().sum();
        for b in a_side.iter().filter(|b| b.iter().sum::<u32>() + wa <= n) {
            let wb = wa + b.iter().sum::<u32>();
            for ab in ab_side.iter().filter(|ab| ab.iter().sum::<u32>() + wb <= n) {
                let wab = wb + ab.iter().sum::<u32>();
                let fixed = a.len() + b.len() + 2 * ab.len();
                if fixed > max_parts {
                    continue;
                }
                for u in u_parts(n - wab, max_parts - fixed) {
                    let c = ComponentQuadruple { a: a.clone(), b: b.clone(), ab: ab.clone(), u };
                    let extra = if variant == Variant::C1Case1 { c.u.len() as u32 } else { 0 };
                    let m = variant.base_len(&c);
                    let w = variant.window(&c);
                    let forced: u32 = (w + 1..=m).sum();
                    let Some(rest) = n.checked_sub(c.weight() + extra + forced) else { continue };
                    for chosen in subsets_with_sum(w, rest, w.saturating_sub(k_max)) {
                        out.push((c.clone(), StaircaseSelection::new(m, w, chosen)));
                    }
                }
            }
        }
    }
    out
}

fn smallest_u_matches_overline_count(lambda: &JaggedOverpartition) -> bool {
    let parts = &lambda.parts;
    let Some(pos) = (0..parts.len())
        .filter(|&p| parts[p].color == Color::U)
        .min_by_key(|&p| (parts[p].value, std::cmp::Reverse(p)))
    else {
        return false;
    };
    let over = parts[pos..].iter().filter(|p| p.overlined).count() as u32;
    parts[pos].value == over
}

/// Checks that the forward maps of `variant` at weight `n` hit every member
/// of the family with at most `k_max` non-overlined parts exactly once, with
/// the promised statistics.
pub fn bijection_audit(variant: AuditVariant, n: u32, k_max: u32) -> Result<AuditReport, StaircaseError> {
    let spec: FamilySpec = variant.family().spec();
    let colored = true;
    let mut report = AuditReport {
        variant: variant.as_str().to_string(),
        n,
        k_max,
        status: AuditStatus::Pass,
        witness: None,
        images: 0,
        reason: None,
    };
    let fail = |report: &mut AuditReport, lambda: &JaggedOverpartition, reason: String| {
        if report.status == AuditStatus::Pass {
            report.status = AuditStatus::Fail;
            report.witness = Some(lambda.to_json(colored, spec.stats(&lambda.parts)));
            report.reason = Some(reason);
        }
    };
    let mut seen: HashSet<JaggedOverpartition> = HashSet::new();
    for &part in variant.parts() {
        for (c, sel) in preimages(part, n, k_max) {
            let image = forward_map(&c, &sel, part)?;
            report.images += 1;
            if !spec.is_valid(&image) {
                fail(&mut report, &image, format!("{part} image is not in {}", spec.id));
            }
            if spec.stats(&image.parts) != expected_stats(&c, &sel) {
                fail(&mut report, &image, format!("{part} image has unexpected statistics"));
            }
            if part == Variant::C1Case2 && !smallest_u_matches_overline_count(&image) {
                fail(&mut report, &image, "c1_case2 image is not detectable".to_string());
            }
            if !seen.insert(image.clone()) {
                fail(&mut report, &image, format!("{part} image is hit twice"));
            }
        }
    }
    let family = enumerate_family(&spec, n, Some(k_max))?;
    if family.len() != seen.len() {
        let missing = family.iter().find(|l| !seen.contains(*l));
        let witness = missing.cloned().unwrap_or_default();
        fail(
            &mut report,
            &witness,
            format!("{} family members, {} distinct images", family.len(), seen.len()),
        );
    } else if let Some(missing) = family.iter().find(|l| !seen.contains(*l)) {
        fail(&mut report, missing, "family member has no preimage".to_string());
    }
    Ok(report)
}

/// One audit per weight `0..=n_max`, run concurrently, in weight order.
pub fn bijection_audit_through(
    variant: AuditVariant,
    n_max: u32,
    k_max: u32,
) -> Result<Vec<AuditReport>, StaircaseError> {
    (0..=n_max).into_par_iter().map(|n| bijection_audit(variant, n, k_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(spec: &[(u32, char)]) -> JaggedOverpartition {
        JaggedOverpartition::new(
            spec.iter()
                .map(|&(v, c)| {
                    let color = match c {
                        'a' => Color::A,
                        'b' => Color::B,
                        _ => Color::U,
                    };
                    ColoredPart::plain(v, color)
                })
                .collect(),
        )
    }

    fn listing_example() -> (ComponentQuadruple, JaggedOverpartition) {
        let c = ComponentQuadruple {
            a: vec![4, 2, 1],
            b: vec![4, 3, 1],
            ab: vec![7, 7, 7, 5, 1, 1, 1],
            u: vec![1, 1, 0, 0, 0],
        };
        let lambda = parts(&[
            (4, 'a'), (4, 'b'), (3, 'a'), (4, 'b'), (3, 'a'), (4, 'b'), (3, 'a'), (4, 'b'),
            (3, 'b'), (2, 'a'), (3, 'b'),
            (2, 'a'), (1, 'u'), (1, 'u'),
            (1, 'a'), (0, 'u'), (0, 'u'), (0, 'u'), (1, 'b'), (0, 'a'), (1, 'b'), (0, 'a'), (1, 'b'), (0, 'a'), (1, 'b'),
        ]);
        (c, lambda)
    }

    #[test]
    fn compose_and_decompose_example() {
        let (c, lambda) = listing_example();
        assert_eq!(compose_levels(&c), lambda);
        assert_eq!(decompose_levels(&lambda).unwrap(), c);
        assert_eq!(lambda.weight(), c.weight());
    }

    #[test]
    fn compose_small_cases() {
        assert!(compose_levels(&ComponentQuadruple::default()).is_empty());
        let lone = ComponentQuadruple { ab: vec![1], ..Default::default() };
        assert_eq!(compose_levels(&lone), parts(&[(0, 'a'), (1, 'b')]));
    }

    #[test]
    fn decompose_after_staircase_removal() {
        let lambda = parts(&[
            (7, 'b'), (6, 'b'), (5, 'a'), (6, 'b'), (5, 'a'), (4, 'a'), (3, 'b'), (0, 'a'), (1, 'b'), (0, 'a'), (1, 'b'),
        ]);
        let c = decompose_levels(&lambda).unwrap();
        assert_eq!(
            c,
            ComponentQuadruple { a: vec![5, 4], b: vec![7, 6, 3], ab: vec![11, 1, 1], u: vec![] }
        );
    }

    #[test]
    fn decompose_leading_pair() {
        let c = ComponentQuadruple { ab: vec![3], ..Default::default() };
        assert_eq!(decompose_levels(&compose_levels(&c)).unwrap(), c);
    }

    #[test]
    fn decompose_rejects_bad_structure() {
        let lambda = parts(&[(1, 'a'), (3, 'b')]);
        assert_eq!(decompose_levels(&lambda), Err(StaircaseError::Decomposition { position: 1 }));
    }

    #[test]
    fn selections_on_small_partition() {
        let lambda = parts(&[(2, 'u'), (1, 'u'), (0, 'u')]);
        let full = apply_selection(&lambda, &StaircaseSelection::full(3)).unwrap();
        assert_eq!(full.render(false), "(5~, 3~, 1~)");
        let none = StaircaseSelection::new(3, 3, []);
        assert_eq!(apply_selection(&lambda, &none).unwrap(), lambda);
        assert_eq!(none.d_exponent(), 3);
        let two = StaircaseSelection::new(3, 3, [2]);
        assert_eq!(apply_selection(&lambda, &two).unwrap().render(false), "(3, 2~, 0)");
        assert_eq!((two.added_weight(), two.d_exponent()), (2, 2));
    }

    #[test]
    fn c1_case2_on_empty_quadruple() {
        let c = ComponentQuadruple::default();
        let sel = StaircaseSelection::new(1, 0, []);
        let image = forward_map(&c, &sel, Variant::C1Case2).unwrap();
        assert_eq!(image.render(true), "(1~u)");
    }

    #[test]
    fn full_staircase_on_example_is_in_aag() {
        let (c, _) = listing_example();
        let m = c.part_count() as u32;
        let image = forward_map(&c, &StaircaseSelection::full(m), Variant::Full).unwrap();
        assert_eq!(image.weight(), c.weight() + m * (m + 1) / 2);
        assert!(FamilyId::Aag.spec().is_valid(&image.stripped()));
        assert!(FamilyId::Cbar.spec().is_valid(&image));
    }

    #[test]
    fn small_audits() {
        for v in AuditVariant::ALL {
            let r = bijection_audit(v, 0, 0).unwrap();
            assert!(r.passed(), "{v}: {:?}", r.reason);
            assert_eq!(r.images, 1);
            for n in 1..=6 {
                let r = bijection_audit(v, n, 2).unwrap();
                assert!(r.passed(), "{v} n={n}: {:?}", r.reason);
            }
        }
    }
}
