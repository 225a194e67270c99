//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! The fixture rows are the published classification tables. Comparisons are
//! made in canonical coordinates: every fixture tuple is mapped to the
//! lexicographic minimum of its Omega-orbit before matching, and for G2 in
//! characteristic 2 and 3 the two simple-root coordinates are swapped into
//! Bourbaki numbering first (see docs/CONFORMANCE.md).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::LazyLock;

use toral_core::{
    all_tables, candidate_primes, canonicalize_omega, conjugate_under, eigen_profile,
    enumerate_balanced, is_heavy_case, omega_group, phi, reduce_to_alcove, reflect, scale_class,
    verify_scalar_theorem, CentralizerType, ConjugacyGroup, ExceptionalType, ExtendedDiagram,
    KacTuple, LabelVector, PrimeOutcome, RootSystem, SearchMode, TypeTable,
};

struct Row {
    p: i64,
    kac: &'static [i64],
    centralizer: &'static str,
    d: u32,
}

const fn row(p: i64, kac: &'static [i64], centralizer: &'static str, d: u32) -> Row {
    Row {
        p,
        kac,
        centralizer,
        d,
    }
}

/// Published rows for G2. The characteristic 2 and 3 rows are printed in the
/// opposite numbering of the two simple roots; `expected_records` swaps them.
const G2_ROWS: &[Row] = &[
    row(2, &[0, 1, 0], "A1~A1", 8),
    row(3, &[0, 0, 1], "A2", 3),
    row(3, &[1, 1, 0], "A1~", 5),
    row(7, &[2, 1, 1], "regular", 2),
    row(13, &[6, 1, 2], "regular", 1),
    row(13, &[1, 2, 3], "regular", 1),
];

const F4_ROWS: &[Row] = &[
    row(2, &[0, 1, 0, 0, 0], "A1C3", 28),
    row(2, &[0, 0, 0, 0, 1], "B4", 16),
    row(3, &[1, 1, 0, 0, 0], "C3", 15),
    row(3, &[0, 0, 1, 0, 0], "A2~A2", 18),
    row(3, &[1, 0, 0, 0, 1], "B3", 15),
    row(5, &[1, 1, 0, 0, 1], "B2", 10),
    row(7, &[1, 0, 0, 1, 1], "A2", 7),
    row(7, &[2, 1, 1, 0, 0], "A2~", 7),
    row(13, &[2, 1, 1, 1, 1], "regular", 4),
    row(17, &[4, 2, 1, 1, 1], "regular", 3),
    row(17, &[1, 1, 2, 1, 2], "regular", 3),
];

const E6_ROWS: &[Row] = &[
    row(2, &[1, 1, 0, 0, 0, 0, 0], "D5", 32),
    row(2, &[0, 0, 0, 1, 0, 0, 0], "A1A5", 40),
    row(3, &[2, 1, 0, 0, 0, 0, 0], "D5", 16),
    row(3, &[1, 2, 0, 0, 0, 0, 0], "D5", 16),
    row(3, &[1, 1, 0, 0, 0, 0, 1], "D4", 24),
    row(3, &[1, 0, 1, 0, 0, 0, 0], "A5", 21),
    row(3, &[1, 0, 0, 1, 0, 0, 0], "A1A4", 25),
    row(3, &[1, 0, 0, 0, 0, 1, 0], "A1A4", 25),
    row(3, &[0, 0, 0, 0, 1, 0, 0], "A2^3", 27),
    row(5, &[1, 1, 1, 0, 0, 0, 1], "A3", 15),
    row(7, &[2, 4, 0, 0, 0, 0, 1], "D4", 8),
    row(7, &[1, 4, 0, 0, 0, 0, 2], "D4", 8),
    row(7, &[2, 0, 1, 0, 1, 0, 0], "A2^2", 10),
    row(7, &[1, 1, 1, 0, 0, 1, 1], "A2", 11),
    row(11, &[2, 1, 1, 0, 1, 1, 1], "A1", 7),
    row(11, &[1, 1, 1, 0, 1, 1, 2], "A1", 7),
    row(13, &[2, 1, 1, 1, 1, 1, 1], "regular", 6),
    row(19, &[4, 1, 2, 2, 1, 1, 1], "regular", 4),
    row(19, &[1, 4, 2, 2, 1, 1, 1], "regular", 4),
    row(37, &[9, 5, 4, 3, 2, 1, 1], "regular", 2),
    row(37, &[5, 9, 3, 4, 2, 1, 1], "regular", 2),
    row(37, &[8, 9, 4, 1, 1, 2, 3], "regular", 2),
    row(37, &[9, 8, 1, 4, 1, 2, 3], "regular", 2),
];

const E7_ROWS: &[Row] = &[
    row(2, &[1, 0, 0, 0, 0, 0, 0, 1], "E6", 54),
    row(2, &[0, 1, 0, 0, 0, 0, 0, 0], "A1D6", 64),
    row(2, &[0, 0, 1, 0, 0, 0, 0, 0], "A7", 70),
    row(3, &[2, 0, 0, 0, 0, 0, 0, 1], "E6", 27),
    row(3, &[1, 0, 0, 0, 0, 0, 1, 0], "A1D5", 42),
    row(3, &[1, 0, 1, 0, 0, 0, 0, 0], "A6", 42),
    row(3, &[1, 1, 0, 0, 0, 0, 0, 0], "D6", 33),
    row(3, &[0, 0, 0, 1, 0, 0, 0, 0], "A2A5", 45),
    row(5, &[1, 1, 0, 0, 0, 0, 1, 0], "D4A1", 25),
    row(7, &[2, 1, 0, 1, 0, 0, 0, 0], "A5", 16),
    row(7, &[2, 1, 0, 0, 0, 0, 1, 1], "D4", 17),
    row(7, &[1, 0, 0, 0, 1, 0, 1, 0], "A1^3A2", 19),
    row(11, &[1, 1, 1, 0, 0, 1, 1, 1], "A2", 12),
    row(13, &[2, 1, 0, 1, 1, 0, 1, 0], "A1^3", 10),
    row(19, &[2, 1, 1, 1, 1, 1, 1, 1], "regular", 7),
];

const E8_ROWS: &[Row] = &[
    row(2, &[0, 1, 0, 0, 0, 0, 0, 0, 0], "D8", 128),
    row(2, &[0, 0, 0, 0, 0, 0, 0, 0, 1], "A1E7", 112),
    row(3, &[1, 1, 0, 0, 0, 0, 0, 0, 0], "D7", 78),
    row(3, &[0, 0, 1, 0, 0, 0, 0, 0, 0], "A8", 84),
    row(3, &[0, 0, 0, 0, 0, 0, 0, 1, 0], "A2E6", 81),
    row(3, &[1, 0, 0, 0, 0, 0, 0, 0, 1], "E7", 57),
    row(5, &[1, 1, 0, 0, 0, 0, 0, 0, 1], "D6", 45),
    row(5, &[1, 0, 0, 1, 0, 0, 0, 0, 0], "A1A6", 49),
    row(5, &[0, 0, 1, 0, 0, 0, 0, 0, 1], "A1A6", 49),
    row(5, &[0, 0, 0, 0, 0, 1, 0, 0, 0], "A4^2", 50),
    row(7, &[2, 0, 0, 0, 0, 0, 0, 1, 1], "E6", 28),
    row(7, &[1, 1, 0, 0, 0, 0, 1, 0, 0], "D4A2", 35),
    row(11, &[1, 1, 1, 0, 0, 0, 0, 1, 1], "A4", 22),
    row(13, &[2, 1, 0, 0, 0, 0, 1, 1, 1], "D4", 18),
    row(13, &[1, 1, 1, 0, 0, 1, 0, 0, 1], "A2^2", 19),
    row(19, &[1, 1, 1, 1, 0, 0, 1, 1, 1], "A2", 13),
    row(31, &[2, 1, 1, 1, 1, 1, 1, 1, 1], "regular", 8),
    row(41, &[5, 3, 2, 1, 1, 1, 1, 1, 1], "regular", 6),
    row(41, &[1, 2, 1, 1, 1, 1, 1, 2, 4], "regular", 6),
    row(61, &[7, 5, 1, 3, 1, 1, 1, 2, 4], "regular", 4),
    row(61, &[3, 2, 2, 1, 1, 1, 4, 1, 7], "regular", 4),
];

fn rows_for(ty: ExceptionalType) -> &'static [Row] {
    match ty {
        ExceptionalType::G2 => G2_ROWS,
        ExceptionalType::F4 => F4_ROWS,
        ExceptionalType::E6 => E6_ROWS,
        ExceptionalType::E7 => E7_ROWS,
        ExceptionalType::E8 => E8_ROWS,
    }
}

/// canonical comparable form: (prime, canonical kac, canonical type string, d)
type Key = (i64, Vec<i64>, CentralizerType, u32);

fn expected_records(ty: ExceptionalType, rs: &RootSystem) -> BTreeSet<Key> {
    rows_for(ty)
        .iter()
        .map(|r| {
            let mut kac = r.kac.to_vec();
            if ty == ExceptionalType::G2 && r.p <= 3 {
                kac.swap(1, 2);
            }
            let tuple = KacTuple::new(rs, r.p, kac).expect("fixture rows are valid tuples");
            let canon = canonicalize_omega(rs, &tuple);
            let ct = CentralizerType::parse(r.centralizer).expect("fixture type strings parse");
            (r.p, canon.coords().to_vec(), ct, r.d)
        })
        .collect()
}

fn computed_records(table: &TypeTable) -> BTreeSet<Key> {
    table
        .computed_records()
        .iter()
        .map(|rec| {
            (
                rec.prime(),
                rec.kac.coords().to_vec(),
                rec.centralizer.clone(),
                rec.d,
            )
        })
        .collect()
}

static HEAVY_TABLES: LazyLock<Vec<TypeTable>> = LazyLock::new(|| all_tables(true));

fn heavy_table(ty: ExceptionalType) -> &'static TypeTable {
    HEAVY_TABLES.iter().find(|t| t.ty == ty).unwrap()
}

#[test]
fn criterion_1_table_reproduction() {
    let expected_counts = [
        (ExceptionalType::G2, 6),
        (ExceptionalType::F4, 11),
        (ExceptionalType::E6, 23),
        (ExceptionalType::E7, 15),
        (ExceptionalType::E8, 21),
    ];
    for (ty, count) in expected_counts {
        let rs = RootSystem::build(ty);
        let table = heavy_table(ty);
        let computed = computed_records(table);
        assert_eq!(computed.len(), count, "{ty}: class count");
        let expected = expected_records(ty, &rs);
        assert_eq!(computed, expected, "{ty}: exact table rows");
    }
    println!("ACCEPTANCE 1 (table reproduction, heavy cells included): PASS");
}

#[test]
fn criterion_2_negative_completeness() {
    for ty in ExceptionalType::ALL {
        let rs = RootSystem::build(ty);
        let expected = expected_records(ty, &rs);
        let by_prime: BTreeMap<i64, BTreeSet<&Key>> = {
            let mut m: BTreeMap<i64, BTreeSet<&Key>> = BTreeMap::new();
            for k in &expected {
                m.entry(k.0).or_default().insert(k);
            }
            m
        };
        for (p, outcome) in &heavy_table(ty).primes {
            let PrimeOutcome::Computed(records) = outcome else {
                panic!("{ty} p={p}: heavy table must compute every cell");
            };
            let got: BTreeSet<Key> = records
                .iter()
                .map(|r| {
                    (
                        r.prime(),
                        r.kac.coords().to_vec(),
                        r.centralizer.clone(),
                        r.d,
                    )
                })
                .collect();
            let want: BTreeSet<Key> = by_prime
                .get(p)
                .map(|s| s.iter().map(|k| (*k).clone()).collect())
                .unwrap_or_default();
            assert_eq!(got, want, "{ty} p={p}: no classes outside the table rows");

            // the pruned engine searches every wall-0 candidate explicitly,
            // in good characteristic as well; it must agree everywhere
            if !is_heavy_case(ty, *p) {
                let pruned = enumerate_balanced(&rs, *p, SearchMode::Pruned).unwrap();
                assert_eq!(&pruned, records, "{ty} p={p}: pruned agrees");
            }
        }
    }
    println!("ACCEPTANCE 2 (negative completeness incl. wall-0 candidates): PASS");
}

#[test]
fn criterion_3_scalar_conjugations() {
    // E6 p=7: 3 * (2,4,0,0,0,0,1) lands on (1,4,0,0,0,0,2)
    let e6 = RootSystem::build(ExceptionalType::E6);
    let h = KacTuple::new(&e6, 7, vec![2, 4, 0, 0, 0, 0, 1]).unwrap();
    let target = KacTuple::new(&e6, 7, vec![1, 4, 0, 0, 0, 0, 2]).unwrap();
    assert_eq!(
        scale_class(&e6, &h, 3).unwrap(),
        canonicalize_omega(&e6, &target)
    );

    // E8 p=5: 2 * (1,0,0,1,0,0,0,0,0) = (0,0,1,0,0,0,0,0,1)
    let e8 = RootSystem::build(ExceptionalType::E8);
    let h = KacTuple::new(&e8, 5, vec![1, 0, 0, 1, 0, 0, 0, 0, 0]).unwrap();
    let got = scale_class(&e8, &h, 2).unwrap();
    assert_eq!(got.coords(), &[0, 0, 1, 0, 0, 0, 0, 0, 1]);

    // E6 p=3: 2 * (2,1,0,0,0,0,0) lands on (1,2,0,0,0,0,0)
    let h = KacTuple::new(&e6, 3, vec![2, 1, 0, 0, 0, 0, 0]).unwrap();
    let target = KacTuple::new(&e6, 3, vec![1, 2, 0, 0, 0, 0, 0]).unwrap();
    assert_eq!(
        scale_class(&e6, &h, 2).unwrap(),
        canonicalize_omega(&e6, &target)
    );

    // E6 p=3, centralizer A1A4: the two classes are conjugate under the full
    // automorphism group but not under the inner one, and scaling by 2 fixes
    // each of them up to the full group. In exact coordinates the scaling
    // exchanges the two inner classes: with alpha = a1+a2+2a3+2a4+a5 one has
    // alpha^vee = w3^vee - w6^vee, so the affine reflection S_{alpha,1} maps
    // 2/3 w3^vee to 1/3 (w3^vee + w6^vee), a closed-alcove point lying in
    // the rotation orbit of 1/3 w5^vee. That single reflection pins the
    // exchange; see docs/CONFORMANCE.md.
    let c1 = canonicalize_omega(
        &e6,
        &KacTuple::new(&e6, 3, vec![1, 0, 0, 1, 0, 0, 0]).unwrap(),
    );
    let c2 = canonicalize_omega(
        &e6,
        &KacTuple::new(&e6, 3, vec![1, 0, 0, 0, 0, 1, 0]).unwrap(),
    );
    assert!(!conjugate_under(&e6, &c1, &c2, ConjugacyGroup::Inner).unwrap());
    assert!(conjugate_under(&e6, &c1, &c2, ConjugacyGroup::Full).unwrap());
    assert_eq!(scale_class(&e6, &c1, 2).unwrap(), c2);
    assert_eq!(scale_class(&e6, &c2, 2).unwrap(), c1);
    for c in [&c1, &c2] {
        let doubled = scale_class(&e6, c, 2).unwrap();
        assert!(conjugate_under(&e6, &doubled, c, ConjugacyGroup::Full).unwrap());
    }
    println!("ACCEPTANCE 3 (explicit scalar conjugations): PASS");
}

#[test]
fn criterion_4_scalar_theorem_witnesses() {
    // every (type, p) with more than one class sharing a centralizer type
    let cases = [
        (ExceptionalType::G2, 13),
        (ExceptionalType::F4, 17),
        (ExceptionalType::E6, 3),
        (ExceptionalType::E6, 7),
        (ExceptionalType::E6, 11),
        (ExceptionalType::E6, 19),
        (ExceptionalType::E6, 37),
        (ExceptionalType::E8, 5),
        (ExceptionalType::E8, 41),
        (ExceptionalType::E8, 61),
    ];
    for (ty, p) in cases {
        let rs = RootSystem::build(ty);
        let report = verify_scalar_theorem(&rs, p).unwrap();
        assert!(report.all_linked(), "{ty} p={p}: scalar witnesses missing");
    }

    // E6 p=37: all four regular classes pairwise linked
    let rs = RootSystem::build(ExceptionalType::E6);
    let report = verify_scalar_theorem(&rs, 37).unwrap();
    let regular = report
        .groups
        .iter()
        .find(|g| g.centralizer.is_regular())
        .expect("regular classes at p=37");
    assert_eq!(regular.classes.len(), 4);
    for i in 0..4 {
        for j in 0..4 {
            assert!(regular.witnesses[i][j].is_some(), "pair ({i},{j}) unlinked");
        }
    }

    // sanity: no other (type, p) has repeated centralizer types
    for ty in ExceptionalType::ALL {
        for (p, outcome) in &heavy_table(ty).primes {
            let PrimeOutcome::Computed(records) = outcome else {
                continue;
            };
            let mut seen: BTreeMap<String, usize> = BTreeMap::new();
            for r in records {
                *seen.entry(r.centralizer.to_string()).or_default() += 1;
            }
            let repeated = seen.values().any(|&n| n > 1);
            assert_eq!(
                repeated,
                cases.contains(&(ty, *p)),
                "{ty} p={p}: repeated-centralizer bookkeeping"
            );
        }
    }
    println!("ACCEPTANCE 4 (scalar-multiple theorem witnesses): PASS");
}

#[test]
fn criterion_5_property_suites() {
    for ty in ExceptionalType::ALL {
        let rs = RootSystem::build(ty);
        let omega = omega_group(&rs);
        for rec in heavy_table(ty).computed_records() {
            let p = rec.prime();
            let prof = eigen_profile(&rs, &rec.kac);
            let v = prof.counts();
            // v_j = v_{p-j} and total |Phi|
            for j in 1..p as usize {
                assert_eq!(v[j], v[p as usize - j]);
            }
            assert_eq!(v.iter().map(|&x| x as i64).sum::<i64>(), rs.num_roots());
            // (p-1) d = |Phi| - v_0
            assert_eq!((p - 1) * rec.d as i64, rs.num_roots() - v[0] as i64);
            // trace form vanishes for p > 3
            if p > 3 {
                assert_eq!(prof.killing_norm(), 0);
            }
            // profile and centralizer invariance under Omega
            for g in &omega {
                let relabeled = KacTuple::new(&rs, p, g.apply_labels(rec.kac.coords())).unwrap();
                assert_eq!(eigen_profile(&rs, &relabeled), prof);
                let (_, ct) = toral_core::centralizer(&rs, &relabeled);
                assert_eq!(ct, rec.centralizer);
            }
            // scaling permutes the profile by v_j -> v_{r j} and keeps d
            for r in 1..p {
                let scaled = scale_class(&rs, &rec.kac, r).unwrap();
                let sprof = eigen_profile(&rs, &scaled);
                for j in 0..p {
                    let image = (r * j % p) as usize;
                    assert_eq!(sprof.counts()[image], v[j as usize]);
                }
                let (_, ct) = toral_core::centralizer(&rs, &scaled);
                assert_eq!(ct, rec.centralizer);
            }
            // alcove reduction is constant on reflection orbits
            let mut label = LabelVector::from_kac(&rec.kac);
            for step in 0..24u64 {
                let node = ((step * 2654435761 + p as u64) % (rs.rank() as u64 + 1)) as usize;
                label = reflect(&rs, &label, node);
            }
            assert_eq!(&reduce_to_alcove(&rs, &label).unwrap(), &rec.kac);
        }

        // engine agreement at p <= 13
        for p in candidate_primes(ty).into_iter().filter(|&p| p <= 13) {
            let exhaustive = enumerate_balanced(&rs, p, SearchMode::Exhaustive).unwrap();
            let pruned = enumerate_balanced(&rs, p, SearchMode::Pruned).unwrap();
            assert_eq!(exhaustive, pruned, "{ty} p={p}");
            if ty.is_good_prime(p).unwrap() {
                let levi = enumerate_balanced(&rs, p, SearchMode::Levi).unwrap();
                assert_eq!(exhaustive, levi, "{ty} p={p}");
            }
        }
    }
    println!("ACCEPTANCE 5 (profile, orbit-dimension, trace-form, scaling and engine-agreement properties): PASS");
}

#[test]
fn criterion_6_diagram_combinatorics() {
    // phi injective for all five types
    for ty in ExceptionalType::ALL {
        let rs = RootSystem::build(ty);
        let diagram = ExtendedDiagram::new(&rs);
        let mut images = BTreeSet::new();
        for j in diagram.connected_subgraphs() {
            let root = phi(&rs, &j).unwrap();
            assert!(images.insert(root.coeffs().to_vec()), "{ty}: phi injective");
        }
    }

    // |Psi(E6)| = 36 = |Phi^+(E6)| and the three constrained counts equal 6
    let rs = RootSystem::build(ExceptionalType::E6);
    let diagram = ExtendedDiagram::new(&rs);
    assert_eq!(diagram.connected_subgraphs().len(), 36);
    assert_eq!(rs.positives().len(), 36);
    let count = |req: &[usize], forb: &[usize]| {
        diagram
            .psi_count(
                &req.iter().copied().collect(),
                &forb.iter().copied().collect(),
            )
            .unwrap()
    };
    assert_eq!(count(&[0], &[1, 6]), 6);
    assert_eq!(count(&[1], &[0, 6]), 6);
    assert_eq!(count(&[6], &[0, 1]), 6);

    // height gap: ht(phi(J')) <= l < h - l - 1 <= ht(phi(J)) for 0 in J
    for ty in [
        ExceptionalType::G2,
        ExceptionalType::F4,
        ExceptionalType::E7,
        ExceptionalType::E8,
    ] {
        let rs = RootSystem::build(ty);
        let l = rs.rank() as i64;
        let h = rs.coxeter_number();
        assert!(l < h - l - 1, "{ty}: gap between the two height ranges");
        let diagram = ExtendedDiagram::new(&rs);
        for j in diagram.connected_subgraphs() {
            let height = phi(&rs, &j).unwrap().height();
            if j.contains(&0) {
                assert!(height >= h - l - 1, "{ty}: {j:?}");
            } else {
                assert!(height <= l, "{ty}: {j:?}");
            }
        }
    }
    println!("ACCEPTANCE 6 (subgraph injection and counting): PASS");
}

#[test]
fn criterion_7_small_characteristic_completeness() {
    // independent enumeration of all nonzero toral classes at p = 2, 3:
    // walk every tuple of level p, canonicalize, deduplicate, drop the zero
    // class; everything must be balanced and counts must match the tables.
    let expected = [
        (ExceptionalType::G2, 1, 2),
        (ExceptionalType::F4, 2, 3),
        (ExceptionalType::E6, 2, 7),
        (ExceptionalType::E7, 3, 5),
        (ExceptionalType::E8, 2, 4),
    ];
    for (ty, at2, at3) in expected {
        let rs = RootSystem::build(ty);
        for (p, want) in [(2i64, at2), (3, at3)] {
            let all = all_toral_classes(&rs, p);
            let balanced = enumerate_balanced(&rs, p, SearchMode::Exhaustive).unwrap();
            assert_eq!(all.len(), want, "{ty} p={p}: all nonzero classes");
            assert_eq!(balanced.len(), want, "{ty} p={p}: balanced classes");
            for kac in &all {
                let prof = eigen_profile(&rs, kac);
                assert!(prof.is_balanced(), "{ty} p={p}: {kac} must be balanced");
            }
        }
    }
    println!("ACCEPTANCE 7 (characteristic 2 and 3 completeness): PASS");
}

/// Every nonzero toral class at level p, up to Omega: brute force over all
/// tuples, independent of the search module's engines.
fn all_toral_classes(rs: &RootSystem, p: i64) -> BTreeSet<KacTuple> {
    let l = rs.rank();
    let marks = rs.marks();
    let mut out = BTreeSet::new();
    let mut coords = vec![0i64; l + 1];
    fn rec(
        rs: &RootSystem,
        marks: &[i64],
        p: i64,
        coords: &mut Vec<i64>,
        node: usize,
        used: i64,
        out: &mut BTreeSet<KacTuple>,
    ) {
        if node > marks.len() {
            coords[0] = p - used;
            let kac = KacTuple::new(rs, p, coords.clone()).unwrap();
            if !kac.is_zero_class() {
                out.insert(canonicalize_omega(rs, &kac));
            }
            return;
        }
        let b = marks[node - 1];
        let mut a = 0;
        while used + a * b <= p {
            coords[node] = a;
            rec(rs, marks, p, coords, node + 1, used + a * b, out);
            a += 1;
        }
        coords[node] = 0;
    }
    rec(rs, marks, p, &mut coords, 1, 0, &mut out);
    out
}
