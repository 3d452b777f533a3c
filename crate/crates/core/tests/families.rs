mod common;

use std::collections::{BTreeMap, BTreeSet};

use capparelli_core::combinatorics::{
    dilate_partition, enumerate_family, family_table, gen_poly, ColoredPart, Color, FamilyId, JaggedOverpartition,
    PartDilation, ProductSideId, Stats,
};
use capparelli_core::series::{DilationRule, WeightFloor};
use num_bigint::BigInt;
use proptest::prelude::*;
use rayon::prelude::*;

use common::*;

fn as_set(list: Vec<JaggedOverpartition>) -> BTreeSet<JaggedOverpartition> {
    list.into_iter().collect()
}

fn product_set(id: ProductSideId, n: u32) -> BTreeSet<JaggedOverpartition> {
    id.enumerate(n).iter().map(|l| l.as_jagged()).collect()
}

#[test]
fn listings_for_thirteen_and_eleven() {
    let cases = [
        (FamilyId::Cor1, 13, COR1_13, ProductSideId::Dbar, DBAR_13, 13),
        (FamilyId::Cor2, 11, COR2_11, ProductSideId::Dprime, DPRIME_11, 12),
        (FamilyId::Cor3, 11, COR3_11, ProductSideId::Ddprime, DDPRIME_11, 8),
    ];
    for (family, n, family_text, side, side_text, size) in cases {
        let listed = as_set(parse_list(family_text));
        assert_eq!(listed.len(), size);
        assert_eq!(as_set(enumerate_family(&family.spec(), n, None).unwrap()), listed, "{family}");
        let listed = as_set(parse_list(side_text));
        assert_eq!(listed.len(), size);
        assert_eq!(product_set(side, n), listed, "{side}");
    }
}

#[test]
fn cell_thirteen_one_one_zero() {
    let cell = Stats { k: 1, i: 1, j: 0 };
    let spec = FamilyId::Cor1.spec();
    let family: BTreeSet<_> = enumerate_family(&spec, 13, None)
        .unwrap()
        .into_iter()
        .filter(|l| spec.stats(&l.parts) == cell)
        .collect();
    assert_eq!(family, as_set(parse_list(COR1_13_CELL)));
    let side: BTreeSet<_> = ProductSideId::Dbar
        .enumerate(13)
        .into_iter()
        .filter(|l| ProductSideId::Dbar.stats(l) == cell)
        .map(|l| l.as_jagged())
        .collect();
    assert_eq!(side, as_set(parse_list(DBAR_13_CELL)));
}

#[test]
fn enumerator_matches_naive_filter() {
    let jobs: Vec<(FamilyId, u32)> =
        FamilyId::ALL.iter().flat_map(|&f| (0..=12).map(move |n| (f, n))).collect();
    jobs.par_iter().for_each(|&(family, n)| {
        let spec = family.spec();
        for k in 0..=4 {
            let fast = as_set(enumerate_family(&spec, n, Some(k)).unwrap());
            assert_eq!(fast, naive_family(&spec, n, k), "{family} n={n} k={k}");
        }
    });
}

#[test]
fn enumeration_has_no_duplicates_and_all_valid() {
    for &family in FamilyId::ALL {
        let spec = family.spec();
        for n in 0..=10 {
            let list = enumerate_family(&spec, n, Some(3)).unwrap();
            assert_eq!(list.len(), as_set(list.clone()).len(), "{family} n={n}");
            assert!(list.iter().all(|l| spec.is_valid(l) && l.weight() == n), "{family} n={n}");
        }
    }
}

#[test]
fn statistics_sum_to_gen_poly() {
    for &family in FamilyId::ALL {
        let spec = family.spec();
        for n in [0, 5, 9] {
            let mut poly = BTreeMap::new();
            for l in enumerate_family(&spec, n, Some(3)).unwrap() {
                let s = spec.stats(&l.parts);
                *poly.entry((s.i, s.j, s.k)).or_insert_with(|| BigInt::from(0)) += 1;
            }
            assert_eq!(poly, gen_poly(&spec, n, Some(3)).unwrap(), "{family} n={n}");
        }
    }
}

#[test]
fn overline_free_members_are_aag_partitions() {
    let aag = FamilyId::Aag.spec();
    for family in [FamilyId::C1, FamilyId::C2, FamilyId::C3] {
        let spec = family.spec();
        for n in 0..=14 {
            let members = enumerate_family(&spec, n, Some(0)).unwrap();
            let stripped: BTreeSet<_> = members.iter().map(|l| l.stripped()).collect();
            assert!(stripped.iter().all(|l| aag.is_valid(l)), "{family} n={n}");
            assert_eq!(gen_poly(&spec, n, Some(0)).unwrap(), gen_poly(&aag, n, Some(0)).unwrap());
        }
    }
}

#[test]
fn weighted_companion_counts_match() {
    let a = family_table(&FamilyId::Aag.spec(), 25, Some(0)).unwrap();
    let c = family_table(&FamilyId::Cstar.spec(), 25, Some(0)).unwrap();
    assert_eq!(a, c);
}

/// Dilating every member of `source` part by part gives exactly the
/// members of `target` up to the completeness horizon.
fn check_dilation(source: FamilyId, rule: PartDilation, target: FamilyId, n: u32, floor: WeightFloor) {
    let series_rule = match rule {
        PartDilation::Mod3 => DilationRule::MOD3,
        PartDilation::Mod4 => DilationRule::MOD4,
    };
    let horizon = series_rule.horizon(i64::from(n), &floor);
    assert!(horizon >= i64::from(n), "{source}: horizon {horizon}");
    let spec = source.spec();
    let mut images = BTreeSet::new();
    for w in 0..=n {
        for l in enumerate_family(&spec, w, None).unwrap() {
            let image = dilate_partition(&l, rule).unwrap();
            if i64::from(image.weight()) <= horizon {
                assert!(images.insert(image));
            }
        }
    }
    let target_spec = target.spec();
    let mut expected = BTreeSet::new();
    for w in 0..=horizon as u32 {
        expected.extend(enumerate_family(&target_spec, w, None).unwrap());
    }
    assert_eq!(images, expected, "{source} -> {target}");
}

#[test]
fn dilated_members_are_the_congruence_families() {
    check_dilation(FamilyId::C2, PartDilation::Mod3, FamilyId::Cor1, 14, WeightFloor { per_a: 1, per_b: 2, per_d: 0 });
    check_dilation(FamilyId::C1, PartDilation::Mod4, FamilyId::Cor2, 10, WeightFloor { per_a: 0, per_b: 1, per_d: 0 });
    check_dilation(FamilyId::C3, PartDilation::Mod4, FamilyId::Cor3, 10, WeightFloor { per_a: 0, per_b: 1, per_d: 0 });
    check_dilation(FamilyId::Aag, PartDilation::Mod3, FamilyId::CapparelliMatrix, 16, WeightFloor { per_a: 2, per_b: 2, per_d: 0 });
}

#[test]
fn dilated_tables_match_product_sides() {
    for (family, side) in [
        (FamilyId::Cor1, ProductSideId::Dbar),
        (FamilyId::Cor2, ProductSideId::Dprime),
        (FamilyId::Cor3, ProductSideId::Ddprime),
    ] {
        assert_eq!(family_table(&family.spec(), 24, None).unwrap(), side.table(24), "{family}");
    }
}

fn arb_part() -> impl Strategy<Value = ColoredPart> {
    (0u32..8, 0usize..3, any::<bool>()).prop_map(|(value, c, over)| ColoredPart {
        value,
        color: [Color::A, Color::B, Color::U][c],
        overlined: over && value > 0,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn valid_sequences_are_enumerated(
        family in 0usize..FamilyId::ALL.len(),
        parts in prop::collection::vec(arb_part(), 0..6),
    ) {
        let spec = FamilyId::ALL[family].spec();
        let lambda = JaggedOverpartition::new(parts);
        if spec.is_valid(&lambda) {
            let k = spec.stats(&lambda.parts).k;
            let list = enumerate_family(&spec, lambda.weight(), Some(k)).unwrap();
            prop_assert!(list.contains(&lambda));
        }
    }

    #[test]
    fn overlined_zero_is_never_valid(family in 0usize..FamilyId::ALL.len(), color in 0usize..3) {
        let spec = FamilyId::ALL[family].spec();
        let part = ColoredPart { value: 0, color: [Color::A, Color::B, Color::U][color], overlined: true };
        prop_assert!(!spec.is_valid(&JaggedOverpartition::new(vec![part])));
    }
}
