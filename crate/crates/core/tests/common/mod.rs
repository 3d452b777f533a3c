#![allow(dead_code)]

use std::collections::BTreeSet;

use capparelli_core::combinatorics::{Color, ColoredPart, FamilySpec, JaggedOverpartition};
use capparelli_core::staircase::{compose_levels, ComponentQuadruple};

pub const COR1_13: &str = "(13~) (13) (11~, 2~) (10~, 3~) (10, 3~) (10~, 1, 2~) (10, 1, 2~) \
     (9~, 4~) (9, 4~) (7, 6~) (7, 4~, 2~) (7, 4, 2~) (4, 5, 4~)";
pub const COR1_13_CELL: &str = "(13) (10, 3~) (9, 4~) (7, 6~)";
pub const DBAR_13: &str = "(13) (12, 1) (10, 3) (10, 2, 1) (9, 4) (9, 3, 1) (8, 4, 1) \
     (8, 3, 2) (7, 6) (7, 4, 2) (7, 3, 2, 1) (6, 4, 3) (6, 4, 2, 1)";
pub const DBAR_13_CELL: &str = "(13) (12, 1) (9, 3, 1) (7, 6)";
pub const COR2_11: &str = "(9~, 2) (9, 2) (8~, 1, 2) (8, 1, 2) (6, 5) (6, 2, 1, 2) (5, 6~) (5, 6) \
     (5, 1, 2, 1, 2) (4, 5, 2) (4, 4, 1, 2) (2, 1, 2, 1, 2, 1, 2)";
pub const DPRIME_11: &str = "(11) (9~, 2~) (8~, 3) (8, 3) (6~, 5~) (6~, 3, 2~) \
     (5~, 3, 3) (5~, 4~, 2~) (5~, 4, 2~) (4, 4~, 3) (4, 4, 3) (3, 3, 3, 2~)";
pub const COR3_11: &str = "(9~, 2) (9, 2) (6, 5) (6, 2, 1, 2) (5, 6~) (5, 6) (5, 1, 2, 1, 2) (2, 1, 2, 1, 2, 1, 2)";
pub const DDPRIME_11: &str = "(11) (9~, 2~) (8~, 3) (6~, 5~) (6~, 3, 2~) (5~, 3, 3) (5~, 4~, 2~) (3, 3, 3, 2~)";

fn parse_part(text: &str) -> ColoredPart {
    let text = text.trim();
    let (body, color) = match text.chars().last() {
        Some('a') => (&text[..text.len() - 1], Color::A),
        Some('b') => (&text[..text.len() - 1], Color::B),
        Some('u') => (&text[..text.len() - 1], Color::U),
        _ => (text, Color::U),
    };
    let (digits, overlined) = match body.strip_suffix('~') {
        Some(d) => (d, true),
        None => (body, false),
    };
    ColoredPart { value: digits.parse().expect("part value"), color, overlined }
}

/// Parses a space-separated run of `(p, p, ...)` groups written in the text
/// rendering (`5~b`, `4a`, `13~`).
pub fn parse_list(text: &str) -> Vec<JaggedOverpartition> {
    text.split(')')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|group| {
            let inner = group.trim_start_matches('(').trim();
            let parts = if inner.is_empty() { vec![] } else { inner.split(',').map(parse_part).collect() };
            JaggedOverpartition::new(parts)
        })
        .collect()
}

/// Generates every sequence with parts at most `n`, total weight `n`,
/// length at most `n + k` and at most `k` non-overlined parts (when the
/// family tracks them), extending only prefixes that satisfy the
/// part-by-part and adjacent-pair conditions, and keeps what passes the full
/// validity check.
pub fn naive_family(spec: &FamilySpec, n: u32, k: u32) -> BTreeSet<JaggedOverpartition> {
    fn go(spec: &FamilySpec, n: u32, k: u32, cur: &mut Vec<ColoredPart>, w: u32, out: &mut BTreeSet<JaggedOverpartition>) {
        if w == n {
            let lambda = JaggedOverpartition::new(cur.clone());
            if spec.is_valid(&lambda) {
                out.insert(lambda);
            }
        }
        if cur.len() as u32 >= n + k {
            return;
        }
        for value in 0..=n - w {
            for color in [Color::A, Color::B, Color::U] {
                for overlined in [false, true] {
                    cur.push(ColoredPart { value, color, overlined });
                    if spec.stats(cur).k <= k && spec.prefix_ok(cur) {
                        go(spec, n, k, cur, w + value, out);
                    }
                    cur.pop();
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    go(spec, n, k, &mut Vec::new(), 0, &mut out);
    out
}

/// Every quadruple that composes to `lambda`, by exhaustive search over
/// components drawn from the colored values present in `lambda`.
pub fn quadruples_composing_to(lambda: &JaggedOverpartition) -> Vec<ComponentQuadruple> {
    let values = |c: Color| -> Vec<u32> {
        let set: BTreeSet<u32> = lambda.parts.iter().filter(|p| p.color == c).map(|p| p.value).collect();
        set.into_iter().rev().collect()
    };
    let count = |v: u32, c: Color| lambda.parts.iter().filter(|p| p.value == v && p.color == c).count();
    let a_vals: Vec<u32> = values(Color::A).into_iter().filter(|&v| v > 0).collect();
    let b_vals = values(Color::B);
    let u_vals = values(Color::U);
    // Pair 2k-1 needs a (k-1)_a and a k_b.
    let pair_ks: Vec<(u32, usize)> = b_vals
        .iter()
        .filter(|&&k| k >= 1)
        .map(|&k| (k, count(k - 1, Color::A).min(count(k, Color::B))))
        .filter(|&(_, c)| c > 0)
        .collect();
    let u_caps: Vec<(u32, usize)> = u_vals.iter().map(|&v| (v, count(v, Color::U))).collect();
    let mut found = Vec::new();
    for a in subsets(&a_vals) {
        for b in subsets(&b_vals) {
            for ab in multisets(&pair_ks) {
                let ab: Vec<u32> = ab.iter().map(|k| 2 * k - 1).collect();
                for u in multisets(&u_caps) {
                    let c = ComponentQuadruple { a: a.clone(), b: b.clone(), ab: ab.clone(), u };
                    if c.part_count() == lambda.len() && compose_levels(&c) == *lambda {
                        found.push(c);
                    }
                }
            }
        }
    }
    found
}

/// Subsets of a strictly decreasing list, each kept decreasing.
fn subsets(vals: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &v in vals {
        let more: Vec<Vec<u32>> = out.iter().map(|s| {
            let mut t = s.clone();
            t.push(v);
            t
        }).collect();
        out.extend(more);
    }
    out
}

/// Weakly decreasing sequences over `(value, max multiplicity)` pairs given
/// in decreasing value order.
fn multisets(caps: &[(u32, usize)]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &(v, cap) in caps {
        out = out
            .iter()
            .flat_map(|s| (0..=cap).map(move |c| {
                let mut t = s.clone();
                t.extend(std::iter::repeat_n(v, c));
                t
            }))
            .collect();
    }
    out
}

/// Strictly decreasing positive sequences with sum at most `n`.
pub fn strict_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for v in (1..=max.min(n)).rev() {
            cur.push(v);
            go(n - v, v - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weakly decreasing odd sequences with sum at most `n`.
pub fn odd_partitions(n: u32) -> Vec<Vec<u32>> {
    weak_partitions(n, n as usize).into_iter().filter(|p| p.iter().all(|x| x % 2 == 1)).collect()
}

/// Weakly decreasing non-negative sequences with sum at most `n` and at
/// most `len` entries.
pub fn weak_partitions(n: u32, len: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() == len {
            return;
        }
        for v in (0..=max.min(n)).rev() {
            cur.push(v);
            go(n - v, v, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, len, &mut Vec::new(), &mut out);
    out
}

/// Every quadruple of weight at most `n` with at most `zeros` zero u-parts.
pub fn quadruples(n: u32, zeros: usize) -> Vec<ComponentQuadruple> {
    let strict = strict_partitions(n);
    let odd = odd_partitions(n);
    // u-sides by remaining weight: positive parts, then up to `zeros` zeros.
    let u_sides: Vec<Vec<Vec<u32>>> = (0..=n)
        .map(|r| {
            let mut sides = Vec::new();
            for p in weak_partitions(r, r as usize).into_iter().filter(|p| !p.contains(&0)) {
                for z in 0..=zeros {
                    let mut u = p.clone();
                    u.extend(std::iter::repeat_n(0, z));
                    sides.push(u);
                }
            }
            sides
        })
        .collect();
    let mut out = Vec::new();
    for a in &strict {
        let wa: u32 = a.iter().sum();
        for b in strict.iter().filter(|b| wa + b.iter().sum::<u32>() <= n) {
            let wb = wa + b.iter().sum::<u32>();
            for ab in odd.iter().filter(|ab| wb + ab.iter().sum::<u32>() <= n) {
                let rest = n - wb - ab.iter().sum::<u32>();
                for u in &u_sides[rest as usize] {
                    out.push(ComponentQuadruple { a: a.clone(), b: b.clone(), ab: ab.clone(), u: u.clone() });
                }
            }
        }
    }
    out
}
