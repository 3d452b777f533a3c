//! Colored jagged overpartitions, difference-condition families, exhaustive
//! enumerators, and the congruence-class counters used as product sides.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::series::{AbdPoly, Bounds, Monomial, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error(
        "family {0} needs a bound on the number of non-overlined parts: 0_u may repeat, \
         so each weight has infinitely many objects unless k is capped"
    )]
    KBoundRequired(&'static str),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("part {part} dilates to a non-positive value under the {rule} rule")]
    DilationDomain { part: ColoredPart, rule: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    A,
    B,
    U,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::U];

    fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Color::A => 'a',
            Color::B => 'b',
            Color::U => 'u',
        }
    }
}

/// A part of a jagged overpartition. Uncolored families store `Color::U`
/// and derive the effective color from residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPart {
    pub value: u32,
    pub color: Color,
    pub overlined: bool,
}

impl ColoredPart {
    pub const fn plain(value: u32, color: Color) -> Self {
        ColoredPart { value, color, overlined: false }
    }

    pub fn over(value: u32, color: Color) -> Self {
        assert!(value >= 1, "zero parts are never overlined");
        ColoredPart { value, color, overlined: true }
    }

    /// Uncolored part.
    pub const fn bare(value: u32, overlined: bool) -> Self {
        ColoredPart { value, color: Color::U, overlined }
    }

    pub fn render(&self, colored: bool) -> String {
        let mut s = self.value.to_string();
        if self.overlined {
            s.push('~');
        }
        if colored {
            s.push(self.color.letter());
        }
        s
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JaggedOverpartition {
    pub parts: Vec<ColoredPart>,
}

impl JaggedOverpartition {
    pub fn new(parts: Vec<ColoredPart>) -> Self {
        JaggedOverpartition { parts }
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Same parts with every overline removed.
    pub fn stripped(&self) -> JaggedOverpartition {
        JaggedOverpartition {
            parts: self.parts.iter().map(|p| ColoredPart { overlined: false, ..*p }).collect(),
        }
    }

    pub fn render(&self, colored: bool) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.render(colored)).collect();
        format!("({})", inner.join(", "))
    }

    pub fn to_json(&self, colored: bool, stats: Stats) -> Value {
        let parts: Vec<Value> = self
            .parts
            .iter()
            .map(|p| {
                if colored {
                    json!({"value": p.value, "color": p.color, "overlined": p.overlined})
                } else {
                    json!({"value": p.value, "overlined": p.overlined})
                }
            })
            .collect();
        json!({"parts": parts, "n": self.weight(), "stats": stats})
    }
}

/// `k` non-overlined parts (or the family's own k-statistic), `i` a-parts,
/// `j` b-parts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Stats {
    pub k: u32,
    pub i: u32,
    pub j: u32,
}

/// Minimal differences `left - right`, indexed by the classes of both parts.
/// Class order: overlined a, b, u, then plain a, b, u.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DifferenceMatrix {
    pub name: &'static str,
    gaps: [[i32; 6]; 6],
    overline_aware: bool,
}

const fn square(rows: [[i32; 3]; 3]) -> [[i32; 6]; 6] {
    let mut out = [[0; 6]; 6];
    let mut r = 0;
    while r < 6 {
        let mut c = 0;
        while c < 6 {
            out[r][c] = rows[r % 3][c % 3];
            c += 1;
        }
        r += 1;
    }
    out
}

impl DifferenceMatrix {
    pub const C: DifferenceMatrix = DifferenceMatrix {
        name: "C",
        gaps: square([[2, 0, 2], [2, 2, 3], [1, 0, 1]]),
        overline_aware: false,
    };

    pub const CBAR: DifferenceMatrix = DifferenceMatrix {
        name: "Cbar",
        gaps: [
            [2, 0, 2, 2, 0, 2],
            [2, 2, 3, 2, 2, 3],
            [1, 0, 1, 1, 0, 1],
            [1, -1, 1, 1, -1, 1],
            [1, 1, 2, 1, 1, 2],
            [0, -1, 0, 0, -1, 0],
        ],
        overline_aware: true,
    };

    pub const CSTAR: DifferenceMatrix = DifferenceMatrix {
        name: "Cstar",
        gaps: square([[2, 0, 3], [2, 2, 3], [0, 0, 1]]),
        overline_aware: false,
    };

    fn class(&self, color: Color, overlined: bool) -> usize {
        color.index() + if self.overline_aware && !overlined { 3 } else { 0 }
    }

    pub fn min_gap(&self, left: &ColoredPart, right: &ColoredPart) -> i32 {
        self.gaps[self.class(left.color, left.overlined)][self.class(right.color, right.overlined)]
    }

    pub fn gap_by_color(&self, left: Color, left_over: bool, right: Color) -> i32 {
        self.gaps[self.class(left, left_over)][self.class(right, false)]
    }
}

/// How the effective color of a part is determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coloring {
    Explicit,
    /// Residue mod 3: 1 is a, 2 is b, 0 is u.
    Mod3,
    /// Residue mod 4: 1 is a, 2 is b, 0 is u; 3 has no color.
    Mod4,
}

impl Coloring {
    pub fn color_of(&self, p: &ColoredPart) -> Option<Color> {
        match self {
            Coloring::Explicit => Some(p.color),
            Coloring::Mod3 => Some(match p.value % 3 {
                1 => Color::A,
                2 => Color::B,
                _ => Color::U,
            }),
            Coloring::Mod4 => match p.value % 4 {
                1 => Some(Color::A),
                2 => Some(Color::B),
                0 => Some(Color::U),
                _ => None,
            },
        }
    }

    /// Value before dilation, for residue colorings.
    pub fn undilated(&self, p: &ColoredPart) -> Option<i64> {
        let v = i64::from(p.value);
        let (scale, offset) = self.affine(self.color_of(p)?);
        Some((v - offset) / scale)
    }

    /// `value = scale * undilated + offset` for parts of the given color.
    fn affine(&self, c: Color) -> (i64, i64) {
        match (self, c) {
            (Coloring::Explicit, _) => (1, 0),
            (Coloring::Mod3, Color::A) => (3, -2),
            (Coloring::Mod3, Color::B) => (3, -4),
            (Coloring::Mod3, Color::U) => (3, 0),
            (Coloring::Mod4, Color::A) => (4, 1),
            (Coloring::Mod4, Color::B) => (4, -2),
            (Coloring::Mod4, Color::U) => (4, 0),
        }
    }
}

/// Condition on each adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairRule {
    Matrix(DifferenceMatrix),
    /// Undilate both parts by the family's residue coloring and consult the matrix.
    UndilatedMatrix(DifferenceMatrix),
    /// `-1 + 3x` when the sum is divisible by 3, else `1 + 3x`; `x` marks an overlined left part.
    Mod3Overlined,
    /// `-2 + 4x` when the left part is divisible by 4 or the sum is 3 mod 4, else `4 + 4x`.
    Mod4Overlined,
    /// At least 2, and at least 4 unless the sum is divisible by 3.
    Capparelli,
    /// At least 2, and at least 5 unless the larger part or the sum is divisible by 3.
    CapparelliCompanion,
}

/// Non-local side conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraCondition {
    /// Let `x` be the smallest u-part (last occurrence). If its undilated
    /// value equals the number of overlined parts from `x` to the end, the
    /// final part must be overlined.
    SmallestUTrigger,
    /// The final `t` parts are overlined, `t` the number of parts whose
    /// effective color is flagged.
    TrailingOverlined { b: bool, u: bool },
    /// Adjacent parts, with a phantom 0 after the last, differ in parity
    /// exactly when the left one is not overlined.
    ParityAlternation,
    /// No consecutive u, a, b parts with equal undilated values.
    NoFlatUab,
    /// No three consecutive parts with both differences equal to 2.
    NoDoubleTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KStat {
    NonOverlined,
    Untracked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartDomain {
    /// Stored colors a part may carry.
    pub colors: Vec<Color>,
    /// Minimum value per stored color, indexed a, b, u.
    pub min_value: [u32; 3],
    pub overlines: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub coloring: Coloring,
    pub pair_rule: PairRule,
    pub domain: PartDomain,
    pub last_part_exclusions: Vec<ColoredPart>,
    pub extra: Vec<ExtraCondition>,
    pub k_stat: KStat,
    /// Whether 0_u-type repetition makes per-weight counts infinite without a k cap.
    pub needs_k_bound: bool,
    /// Skip `0_u` candidates: no valid object of this family contains one.
    pub prune_zero_u: bool,
}

macro_rules! families {
    ($($variant:ident => $text:literal),+ $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum FamilyId { $($variant),+ }

        impl FamilyId {
            pub const ALL: &'static [FamilyId] = &[$(FamilyId::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self { $(FamilyId::$variant => $text),+ }
            }
        }

        impl FromStr for FamilyId {
            type Err = CombError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok(FamilyId::$variant),)+
                    _ => Err(CombError::UnknownFamily(s.to_string())),
                }
            }
        }
    };
}

families! {
    Aag => "aag",
    Cstar => "cstar",
    Cbar => "cbar",
    C1 => "c1",
    C2 => "c2",
    C3 => "c3",
    C4 => "c4",
    Cor1 => "cor1",
    Cor2 => "cor2",
    Cor3 => "cor3",
    Capparelli => "capparelli",
    CapparelliMatrix => "capparelli-matrix",
    CstarDilated => "cstar-dilated",
    CstarDilatedMatrix => "cstar-dilated-matrix",
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FamilyId {
    pub fn spec(self) -> FamilySpec {
        FamilySpec::of(self)
    }
}

const ABU: [Color; 3] = [Color::A, Color::B, Color::U];

impl FamilySpec {
    pub fn of(id: FamilyId) -> FamilySpec {
        let weighted = |matrix: DifferenceMatrix, extra: Vec<ExtraCondition>| FamilySpec {
            id,
            coloring: Coloring::Explicit,
            pair_rule: PairRule::Matrix(matrix),
            domain: PartDomain { colors: ABU.to_vec(), min_value: [2, 2, 1], overlines: false },
            last_part_exclusions: vec![],
            extra,
            k_stat: KStat::Untracked,
            needs_k_bound: false,
            prune_zero_u: false,
        };
        let jagged = |extra: Vec<ExtraCondition>| FamilySpec {
            id,
            coloring: Coloring::Explicit,
            pair_rule: PairRule::Matrix(DifferenceMatrix::CBAR),
            domain: PartDomain { colors: ABU.to_vec(), min_value: [0, 0, 0], overlines: true },
            last_part_exclusions: vec![
                ColoredPart::plain(0, Color::A),
                ColoredPart::plain(0, Color::B),
                ColoredPart::over(1, Color::A),
                ColoredPart::over(1, Color::B),
            ],
            extra,
            k_stat: KStat::NonOverlined,
            needs_k_bound: false,
            prune_zero_u: true,
        };
        let dilated = |coloring: Coloring, pair_rule: PairRule, min: u32, overlines: bool| FamilySpec {
            id,
            coloring,
            pair_rule,
            domain: PartDomain { colors: vec![Color::U], min_value: [min; 3], overlines },
            last_part_exclusions: vec![],
            extra: vec![],
            k_stat: KStat::Untracked,
            needs_k_bound: false,
            prune_zero_u: false,
        };
        let mod4_last = vec![
            ColoredPart::bare(1, true),
            ColoredPart::bare(1, false),
            ColoredPart::bare(2, true),
            ColoredPart::bare(5, true),
        ];
        match id {
            FamilyId::Aag => weighted(DifferenceMatrix::C, vec![]),
            FamilyId::Cstar => weighted(DifferenceMatrix::CSTAR, vec![ExtraCondition::NoFlatUab]),
            FamilyId::Cbar => FamilySpec { needs_k_bound: true, prune_zero_u: false, ..jagged(vec![]) },
            FamilyId::C1 => jagged(vec![ExtraCondition::SmallestUTrigger]),
            FamilyId::C2 => jagged(vec![ExtraCondition::TrailingOverlined { b: true, u: true }]),
            FamilyId::C3 => jagged(vec![ExtraCondition::TrailingOverlined { b: false, u: true }]),
            FamilyId::C4 => {
                let mut spec = jagged(vec![ExtraCondition::ParityAlternation]);
                spec.domain.colors = vec![Color::A, Color::B];
                spec
            }
            FamilyId::Cor1 => FamilySpec {
                last_part_exclusions: vec![ColoredPart::bare(1, true)],
                extra: vec![ExtraCondition::TrailingOverlined { b: true, u: true }],
                k_stat: KStat::NonOverlined,
                ..dilated(Coloring::Mod3, PairRule::Mod3Overlined, 1, true)
            },
            FamilyId::Cor2 => FamilySpec {
                last_part_exclusions: mod4_last,
                extra: vec![ExtraCondition::SmallestUTrigger],
                ..dilated(Coloring::Mod4, PairRule::Mod4Overlined, 1, true)
            },
            FamilyId::Cor3 => FamilySpec {
                last_part_exclusions: mod4_last,
                extra: vec![ExtraCondition::TrailingOverlined { b: false, u: true }],
                ..dilated(Coloring::Mod4, PairRule::Mod4Overlined, 1, true)
            },
            FamilyId::Capparelli => dilated(Coloring::Mod3, PairRule::Capparelli, 2, false),
            FamilyId::CapparelliMatrix => {
                dilated(Coloring::Mod3, PairRule::UndilatedMatrix(DifferenceMatrix::C), 2, false)
            }
            FamilyId::CstarDilated => FamilySpec {
                extra: vec![ExtraCondition::NoDoubleTwo],
                ..dilated(Coloring::Mod3, PairRule::CapparelliCompanion, 2, false)
            },
            FamilyId::CstarDilatedMatrix => FamilySpec {
                extra: vec![ExtraCondition::NoFlatUab],
                ..dilated(Coloring::Mod3, PairRule::UndilatedMatrix(DifferenceMatrix::CSTAR), 2, false)
            },
        }
    }

    pub fn colored(&self) -> bool {
        self.coloring == Coloring::Explicit
    }

    pub fn part_ok(&self, p: &ColoredPart) -> bool {
        if !self.domain.colors.contains(&p.color) {
            return false;
        }
        if p.value < self.domain.min_value[p.color.index()] {
            return false;
        }
        if p.overlined && (!self.domain.overlines || p.value == 0) {
            return false;
        }
        self.coloring.color_of(p).is_some()
    }

    pub fn pair_ok(&self, left: &ColoredPart, right: &ColoredPart) -> bool {
        let diff = i64::from(left.value) - i64::from(right.value);
        let (x, y) = (i64::from(left.value), i64::from(right.value));
        let bar = i64::from(left.overlined);
        match &self.pair_rule {
            PairRule::Matrix(m) => diff >= i64::from(m.min_gap(left, right)),
            PairRule::UndilatedMatrix(m) => {
                let (Some(cl), Some(cr)) = (self.coloring.color_of(left), self.coloring.color_of(right))
                else {
                    return false;
                };
                let (Some(vl), Some(vr)) = (self.coloring.undilated(left), self.coloring.undilated(right))
                else {
                    return false;
                };
                vl - vr >= i64::from(m.gap_by_color(cl, left.overlined, cr))
            }
            PairRule::Mod3Overlined => {
                let base = if (x + y) % 3 == 0 { -1 } else { 1 };
                diff >= base + 3 * bar
            }
            PairRule::Mod4Overlined => {
                let base = if x % 4 == 0 || (x + y) % 4 == 3 { -2 } else { 4 };
                diff >= base + 4 * bar
            }
            PairRule::Capparelli => diff >= 2 && ((x + y) % 3 == 0 || diff >= 4),
            PairRule::CapparelliCompanion => {
                diff >= 2 && (x % 3 == 0 || (x + y) % 3 == 0 || diff >= 5)
            }
        }
    }

    /// A lower bound on `left - right` over every right part the rule admits.
    fn gap_floor(&self, left: &ColoredPart) -> i64 {
        let bar = i64::from(left.overlined);
        match &self.pair_rule {
            PairRule::Matrix(m) => Color::ALL
                .iter()
                .map(|&c| i64::from(m.gap_by_color(left.color, left.overlined, c)))
                .min()
                .unwrap_or(0),
            PairRule::UndilatedMatrix(m) => {
                let Some(cl) = self.coloring.color_of(left) else { return 0 };
                let (scale, off_l) = self.coloring.affine(cl);
                Color::ALL
                    .iter()
                    .map(|&c| {
                        let (_, off_r) = self.coloring.affine(c);
                        scale * i64::from(m.gap_by_color(cl, left.overlined, c)) + off_l - off_r
                    })
                    .min()
                    .unwrap_or(0)
            }
            PairRule::Mod3Overlined => -1 + 3 * bar,
            PairRule::Mod4Overlined => -2 + 4 * bar,
            PairRule::Capparelli | PairRule::CapparelliCompanion => 2,
        }
    }

    /// Conditions that can be decided as soon as `next` is appended to `prefix`.
    fn local_ok(&self, prefix: &[ColoredPart], next: &ColoredPart) -> bool {
        for cond in &self.extra {
            match cond {
                ExtraCondition::ParityAlternation => {
                    if let Some(left) = prefix.last() {
                        let alternates = (left.value + next.value) % 2 == 1;
                        if alternates == left.overlined {
                            return false;
                        }
                    }
                }
                ExtraCondition::NoFlatUab => {
                    if let [.., p1, p2] = prefix {
                        let colors = [p1, p2, next].map(|p| self.coloring.color_of(p));
                        if colors == [Some(Color::U), Some(Color::A), Some(Color::B)] {
                            let vals = [p1, p2, next].map(|p| self.coloring.undilated(p));
                            if vals[0] == vals[1] && vals[1] == vals[2] {
                                return false;
                            }
                        }
                    }
                }
                ExtraCondition::NoDoubleTwo => {
                    if let [.., p1, p2] = prefix {
                        if i64::from(p1.value) - i64::from(p2.value) == 2
                            && i64::from(p2.value) - i64::from(next.value) == 2
                        {
                            return false;
                        }
                    }
                }
                ExtraCondition::SmallestUTrigger | ExtraCondition::TrailingOverlined { .. } => {}
            }
        }
        true
    }

    /// Conditions on the completed object.
    fn final_ok(&self, parts: &[ColoredPart]) -> bool {
        let Some(last) = parts.last() else { return true };
        if self.last_part_exclusions.contains(last) {
            return false;
        }
        for cond in &self.extra {
            match cond {
                ExtraCondition::SmallestUTrigger => {
                    let mut pos: Option<usize> = None;
                    for (idx, p) in parts.iter().enumerate() {
                        if self.coloring.color_of(p) == Some(Color::U)
                            && pos.is_none_or(|q| p.value <= parts[q].value)
                        {
                            pos = Some(idx);
                        }
                    }
                    if let Some(pos) = pos {
                        let over = parts[pos..].iter().filter(|p| p.overlined).count() as i64;
                        if self.coloring.undilated(&parts[pos]) == Some(over) && !last.overlined {
                            return false;
                        }
                    }
                }
                ExtraCondition::TrailingOverlined { b, u } => {
                    let t = parts
                        .iter()
                        .filter(|p| match self.coloring.color_of(p) {
                            Some(Color::B) => *b,
                            Some(Color::U) => *u,
                            _ => false,
                        })
                        .count();
                    if !parts[parts.len() - t..].iter().all(|p| p.overlined) {
                        return false;
                    }
                }
                ExtraCondition::ParityAlternation => {
                    if (last.value % 2 == 1) == last.overlined {
                        return false;
                    }
                }
                ExtraCondition::NoFlatUab | ExtraCondition::NoDoubleTwo => {}
            }
        }
        true
    }

    pub fn is_valid(&self, lambda: &JaggedOverpartition) -> bool {
        let parts = &lambda.parts;
        for (idx, p) in parts.iter().enumerate() {
            if !self.part_ok(p) {
                return false;
            }
            if idx > 0 && (!self.pair_ok(&parts[idx - 1], p) || !self.local_ok(&parts[..idx], p)) {
                return false;
            }
        }
        self.final_ok(parts)
    }

    /// Prefix check used by backtracking oracles: part domain, pairs and
    /// local conditions, but not the conditions on the completed object.
    pub fn prefix_ok(&self, parts: &[ColoredPart]) -> bool {
        parts.iter().enumerate().all(|(idx, p)| {
            self.part_ok(p)
                && (idx == 0 || (self.pair_ok(&parts[idx - 1], p) && self.local_ok(&parts[..idx], p)))
        })
    }

    pub fn stats(&self, parts: &[ColoredPart]) -> Stats {
        let mut s = Stats::default();
        for p in parts {
            match self.coloring.color_of(p) {
                Some(Color::A) => s.i += 1,
                Some(Color::B) => s.j += 1,
                _ => {}
            }
            if self.k_stat == KStat::NonOverlined && !p.overlined {
                s.k += 1;
            }
        }
        s
    }

    /// Part classes in enumeration order: overlined before plain, colors a, b, u.
    fn classes(&self) -> Vec<(Color, bool)> {
        let mut out = Vec::new();
        for over in [true, false] {
            if over && !self.domain.overlines {
                continue;
            }
            for c in Color::ALL {
                if self.domain.colors.contains(&c) {
                    out.push((c, over));
                }
            }
        }
        out
    }

    fn k_budget(&self, k_max: Option<u32>) -> Result<Option<u32>, CombError> {
        if self.needs_k_bound && k_max.is_none() {
            return Err(CombError::KBoundRequired(self.id.as_str()));
        }
        Ok(match self.k_stat {
            KStat::NonOverlined => k_max,
            KStat::Untracked => None,
        })
    }
}

struct Search<'a> {
    spec: &'a FamilySpec,
    max_weight: u32,
    k_budget: Option<u32>,
    max_len: usize,
    classes: Vec<(Color, bool)>,
}

impl<'a> Search<'a> {
    fn new(spec: &'a FamilySpec, max_weight: u32, k_max: Option<u32>) -> Result<Self, CombError> {
        let k_budget = spec.k_budget(k_max)?;
        // Overlined parts are positive; in every family without a k cap the
        // only zero part is 0_a, which is always followed by a positive part.
        let max_len = match k_budget {
            Some(k) => (max_weight + k) as usize,
            None => 2 * max_weight as usize + 1,
        };
        Ok(Search { spec, max_weight, k_budget, max_len, classes: spec.classes() })
    }

    fn candidates(&self, prev: Option<&ColoredPart>, remaining: u32) -> Vec<ColoredPart> {
        let top = match prev {
            None => i64::from(remaining),
            Some(p) => (i64::from(p.value) - self.spec.gap_floor(p)).min(i64::from(remaining)),
        };
        let mut out = Vec::new();
        let mut v = top;
        while v >= 0 {
            for &(color, overlined) in &self.classes {
                let part = ColoredPart { value: v as u32, color, overlined };
                if self.spec.prune_zero_u && v == 0 && color == Color::U {
                    continue;
                }
                if self.spec.part_ok(&part) {
                    out.push(part);
                }
            }
            v -= 1;
        }
        out
    }

    fn admits(&self, stack: &[ColoredPart], k_used: u32, part: &ColoredPart) -> bool {
        if !part.overlined && self.spec.k_stat == KStat::NonOverlined {
            if let Some(k) = self.k_budget {
                if k_used >= k {
                    return false;
                }
            }
        }
        match stack.last() {
            None => true,
            Some(left) => self.spec.pair_ok(left, part) && self.spec.local_ok(stack, part),
        }
    }

    fn walk<F: FnMut(&[ColoredPart], u32)>(
        &self,
        stack: &mut Vec<ColoredPart>,
        weight: u32,
        k_used: u32,
        visit: &mut F,
    ) {
        if self.spec.final_ok(stack) {
            visit(stack, weight);
        }
        if stack.len() >= self.max_len {
            return;
        }
        for part in self.candidates(stack.last(), self.max_weight - weight) {
            if !self.admits(stack, k_used, &part) {
                continue;
            }
            let k_next = k_used + u32::from(!part.overlined);
            stack.push(part);
            self.walk(stack, weight + part.value, k_next, visit);
            stack.pop();
        }
    }

    fn run<F: FnMut(&[ColoredPart], u32)>(&self, mut visit: F) {
        self.walk(&mut Vec::new(), 0, 0, &mut visit);
    }
}

/// Every valid object of weight exactly `n` with at most `k_max`
/// non-overlined parts (`None`: no cap).
///
/// Order: parts are generated left to right, values descending, and at each
/// value overlined before plain, colors a, b, u; a proper prefix precedes its
/// extensions.
pub fn enumerate_family(
    spec: &FamilySpec,
    n: u32,
    k_max: Option<u32>,
) -> Result<Vec<JaggedOverpartition>, CombError> {
    let search = Search::new(spec, n, k_max)?;
    let mut out = Vec::new();
    search.run(|parts, w| {
        if w == n {
            out.push(JaggedOverpartition::new(parts.to_vec()));
        }
    });
    Ok(out)
}

/// Refined counts `(n, stats) -> count`.
pub type CountTable = BTreeMap<(u32, Stats), u64>;

/// Refined counts for every weight up to `max_n` in a single search.
pub fn family_table(spec: &FamilySpec, max_n: u32, k_max: Option<u32>) -> Result<CountTable, CombError> {
    let search = Search::new(spec, max_n, k_max)?;
    let mut counts: HashMap<(u32, Stats), u64> = HashMap::new();
    search.run(|parts, w| *counts.entry((w, spec.stats(parts))).or_insert(0) += 1);
    Ok(counts.into_iter().collect())
}

/// `sum a^i b^j d^k` over the objects of weight `n`.
pub fn gen_poly(spec: &FamilySpec, n: u32, k_max: Option<u32>) -> Result<AbdPoly, CombError> {
    let table = family_table(spec, n, k_max)?;
    Ok(poly_at(&table, n))
}

pub fn poly_at(table: &CountTable, n: u32) -> AbdPoly {
    let mut poly = AbdPoly::new();
    for ((w, s), c) in table.range((n, Stats::default())..) {
        if *w != n {
            break;
        }
        *poly.entry((s.i, s.j, s.k)).or_default() += BigInt::from(*c);
    }
    poly
}

/// `sum_{n <= N} gen_poly(n) q^n`, with `d`-bound `k_max`.
pub fn series_of_family(spec: &FamilySpec, max_n: u32, k_max: Option<u32>) -> Result<Series, CombError> {
    let table = family_table(spec, max_n, k_max)?;
    let d_bound = match spec.k_stat {
        KStat::NonOverlined => k_max,
        KStat::Untracked => k_max.or(Some(0)),
    };
    Ok(series_of_table(&table, Bounds::new(i64::from(max_n)).with_d_opt(d_bound)))
}

pub fn series_of_table(table: &CountTable, bounds: Bounds) -> Series {
    Series::from_terms(
        table.iter().map(|((n, s), c)| {
            (
                Monomial::q(i64::from(*n)).with_a(s.i).with_b(s.j).with_d(s.k),
                BigInt::from(*c),
            )
        }),
        bounds,
    )
}

/// Part-by-part dilation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartDilation {
    /// a: 3v-2, b: 3v-4, u: 3v.
    Mod3,
    /// a: 4v+1, b: 4v-2, u: 4v.
    Mod4,
}

impl PartDilation {
    fn coloring(self) -> Coloring {
        match self {
            PartDilation::Mod3 => Coloring::Mod3,
            PartDilation::Mod4 => Coloring::Mod4,
        }
    }

    fn name(self) -> &'static str {
        match self {
            PartDilation::Mod3 => "mod3",
            PartDilation::Mod4 => "mod4",
        }
    }
}

/// Uncolored image of a colored part; the overline is kept.
pub fn dilate_part(p: &ColoredPart, rule: PartDilation) -> Result<ColoredPart, CombError> {
    let (scale, offset) = rule.coloring().affine(p.color);
    let v = scale * i64::from(p.value) + offset;
    if v < 1 {
        return Err(CombError::DilationDomain { part: *p, rule: rule.name() });
    }
    Ok(ColoredPart::bare(v as u32, p.overlined))
}

pub fn dilate_partition(
    lambda: &JaggedOverpartition,
    rule: PartDilation,
) -> Result<JaggedOverpartition, CombError> {
    Ok(JaggedOverpartition::new(
        lambda.parts.iter().map(|p| dilate_part(p, rule)).collect::<Result<_, _>>()?,
    ))
}

/// Uncolored overpartition: weakly decreasing values, the final occurrence
/// of a value may be overlined.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UncoloredOverpartition {
    /// `(value, overlined)`.
    pub parts: Vec<(u32, bool)>,
}

impl UncoloredOverpartition {
    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn as_jagged(&self) -> JaggedOverpartition {
        JaggedOverpartition::new(self.parts.iter().map(|&(v, o)| ColoredPart::bare(v, o)).collect())
    }
}

macro_rules! product_sides {
    ($($variant:ident => $text:literal),+ $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ProductSideId { $($variant),+ }

        impl ProductSideId {
            pub const ALL: &'static [ProductSideId] = &[$(ProductSideId::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self { $(ProductSideId::$variant => $text),+ }
            }
        }

        impl FromStr for ProductSideId {
            type Err = CombError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok(ProductSideId::$variant),)+
                    _ => Err(CombError::UnknownFamily(s.to_string())),
                }
            }
        }
    };
}

product_sides! {
    D => "d",
    Dbar => "dbar",
    Dprime => "dprime",
    Ddprime => "ddprime",
    A => "a",
}

impl fmt::Display for ProductSideId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl ProductSideId {
    /// Allowed `(value, overlined)` parts.
    fn allows(self, v: u32, overlined: bool) -> bool {
        match self {
            ProductSideId::D => !overlined && v % 6 != 1 && v % 6 != 5,
            ProductSideId::Dbar => !overlined && v % 6 != 5,
            ProductSideId::A => !overlined,
            ProductSideId::Dprime | ProductSideId::Ddprime if overlined => v % 4 != 3 && v != 1,
            ProductSideId::Dprime => matches!(v % 8, 0 | 3 | 4),
            ProductSideId::Ddprime => v % 8 == 3,
        }
    }

    fn distinct(self) -> bool {
        matches!(self, ProductSideId::D | ProductSideId::Dbar | ProductSideId::A)
    }

    pub fn stats(self, lambda: &UncoloredOverpartition) -> Stats {
        let values: Vec<u32> = lambda.parts.iter().map(|p| p.0).collect();
        match self {
            ProductSideId::D | ProductSideId::Dbar => {
                let i = values.iter().filter(|v| *v % 3 == 1).count() as u32;
                let j = values.iter().filter(|v| *v % 3 == 2).count() as u32;
                let k = if self == ProductSideId::Dbar {
                    let mut ones: Vec<i64> =
                        values.iter().filter(|v| *v % 3 == 1).map(|v| i64::from(*v)).collect();
                    ones.push(-2);
                    ones.windows(2).filter(|w| (w[0] - w[1]).rem_euclid(6) == 3).count() as u32
                } else {
                    0
                };
                Stats { k, i, j }
            }
            ProductSideId::Dprime | ProductSideId::Ddprime => {
                let i = values.iter().filter(|v| *v % 4 == 1 || *v % 8 == 3).count() as u32;
                let j = values.iter().filter(|v| *v % 4 == 2 || *v % 8 == 3).count() as u32;
                Stats { k: 0, i, j }
            }
            ProductSideId::A => {
                let mut with_phantom = values.clone();
                with_phantom.push(0);
                let k = with_phantom.windows(2).filter(|w| (w[0] + w[1]) % 2 == 1).count() as u32;
                Stats { k, i: values.len() as u32, j: 0 }
            }
        }
    }

    /// Every object of weight `n`, largest first part first; at equal
    /// values the overlined copy comes first.
    pub fn enumerate(self, n: u32) -> Vec<UncoloredOverpartition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend(n, n, &mut stack, &mut out);
        out
    }

    fn extend(
        self,
        remaining: u32,
        max_part: u32,
        stack: &mut Vec<(u32, bool)>,
        out: &mut Vec<UncoloredOverpartition>,
    ) {
        if remaining == 0 {
            out.push(UncoloredOverpartition { parts: stack.clone() });
            return;
        }
        for v in (1..=max_part.min(remaining)).rev() {
            // Copies of v: an optional overlined one (written last) and any
            // number of plain ones, or a single part when parts are distinct.
            for overlined in [true, false] {
                if !self.allows(v, overlined) {
                    continue;
                }
                let plain_max = if self.distinct() { 1 } else { remaining / v };
                if overlined {
                    // v~ alone, or plain copies followed by v~.
                    for plain in (0..=plain_max).rev() {
                        if plain > 0 && !self.allows(v, false) {
                            continue;
                        }
                        let used = v * (plain + 1);
                        if used > remaining {
                            continue;
                        }
                        let before = stack.len();
                        stack.extend(std::iter::repeat_n((v, false), plain as usize));
                        stack.push((v, true));
                        self.extend(remaining - used, v - 1, stack, out);
                        stack.truncate(before);
                    }
                } else {
                    for plain in (1..=plain_max).rev() {
                        let used = v * plain;
                        if used > remaining {
                            continue;
                        }
                        let before = stack.len();
                        stack.extend(std::iter::repeat_n((v, false), plain as usize));
                        self.extend(remaining - used, v - 1, stack, out);
                        stack.truncate(before);
                    }
                }
            }
        }
    }

    pub fn table(self, max_n: u32) -> CountTable {
        let rows: Vec<CountTable> = (0..=max_n)
            .into_par_iter()
            .map(|n| {
                let mut t = CountTable::new();
                for lambda in self.enumerate(n) {
                    *t.entry((n, self.stats(&lambda))).or_insert(0) += 1;
                }
                t
            })
            .collect();
        rows.into_iter().flatten().collect()
    }
}

/// Counts indexed by statistics for a product side at one weight.
pub fn count_product_side(id: ProductSideId, n: u32) -> BTreeMap<Stats, u64> {
    let mut out = BTreeMap::new();
    for lambda in id.enumerate(n) {
        *out.entry(id.stats(&lambda)).or_insert(0) += 1;
    }
    out
}
