use num_bigint::BigInt;
use num_traits::ToPrimitive;

use twocubes::fixtures::table1_records;
use twocubes::oracle::multi_representations;
use twocubes::search::{in_search_region, scan_ab_with, search_consecutive_with, SearchConfig};
use twocubes::{classify_family, search_consecutive, verify_record, Branch, FamilyId};

const BUDGET: u64 = 10_000_000;

#[test]
fn search_reproduces_table() {
    let found = search_consecutive(1000).unwrap();
    assert_eq!(found, table1_records());
    for r in &found {
        assert!(verify_record(r));
        assert!(in_search_region(&r.a, &r.b));
    }
}

#[test]
fn scan_agrees_with_search_on_shared_window() {
    let config = SearchConfig::default().with_chunk_size(16);
    let scanned = scan_ab_with(3225, -4274, 1000, &config).unwrap();
    let searched = search_consecutive_with(1000, &config).unwrap();
    assert_eq!(scanned, searched);
}

#[test]
fn scan_roots_carry_the_same_branch_as_search() {
    let scanned = scan_ab_with(200, -800, 1000, &SearchConfig::default()).unwrap();
    let searched = search_consecutive(1000).unwrap();
    for r in &scanned {
        let hit = searched.iter().find(|s| s.n == r.n && s.a == r.a).expect("scan row missing from search");
        assert_eq!(hit.root, r.root);
    }
}

#[test]
fn multi_representation_counts() {
    let ns = |found: &[(BigInt, twocubes::RepresentationSet)]| -> Vec<u64> {
        found.iter().map(|(n, _)| n.to_u64().unwrap()).collect()
    };
    let three = multi_representations(1000, 3, BUDGET).unwrap();
    assert_eq!(ns(&three), vec![121, 163, 235, 562]);

    let two = multi_representations(1000, 2, BUDGET).unwrap();
    let mut expected: Vec<u64> = table1_records().iter().map(|r| r.n.to_u64().unwrap()).collect();
    expected.dedup();
    assert_eq!(expected.len(), 27);
    assert_eq!(ns(&two), expected);
}

#[test]
fn family_members_in_table() {
    let members: Vec<(u64, Option<(FamilyId, u64)>)> = table1_records()
        .iter()
        .map(|r| (r.n.to_u64().unwrap(), classify_family(r).unwrap()))
        .filter(|(_, c)| c.is_some())
        .collect();
    assert_eq!(
        members,
        vec![
            (3, Some((FamilyId::One, 1))),
            (4, Some((FamilyId::Two, 1))),
            (46, Some((FamilyId::One, 2))),
            (121, Some((FamilyId::Two, 2))),
            (197, Some((FamilyId::One, 3))),
            (528, Some((FamilyId::One, 4))),
            (562, Some((FamilyId::Two, 3))),
        ]
    );
}

#[test]
fn branch_tags_follow_plus_root_convention() {
    let found = search_consecutive(10).unwrap();
    let tags: Vec<(u64, Option<Branch>)> = found.iter().map(|r| (r.n.to_u64().unwrap(), r.root)).collect();
    assert_eq!(
        tags,
        vec![(3, Some(Branch::Plus)), (4, Some(Branch::Plus)), (9, Some(Branch::Minus))]
    );
}
