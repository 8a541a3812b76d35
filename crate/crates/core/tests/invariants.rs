use std::collections::BTreeSet;

use partcert::bounds::{self, Containment};
use partcert::decay::{d_exact, q2_exact};
use partcert::exact::{p_brute_all, PartitionTable};
use partcert::series::{a_k_star, big_t};
use partcert::verify::{self, CheckId, ScanParams};
use partcert::Enclosure;
use rayon::prelude::*;
use rug::{Float, Integer};

fn table(n: u64) -> PartitionTable {
    PartitionTable::with_max(n)
}

#[test]
fn table_is_monotone_and_matches_oracle() {
    let t = table(1200);
    assert!(t.values()[1..].windows(2).all(|w| w[0] <= w[1]));
    let brute = p_brute_all(1200, 2000).unwrap();
    assert_eq!(brute, t.values());
}

#[test]
fn remainder_bound_covers_decomposition() {
    let t = table(5000);
    let bad: Vec<u64> = (2..=5000u64)
        .into_par_iter()
        .filter(|&n| {
            let mid = Float::with_val(256, big_t(n, 256).unwrap().midpoint());
            let gap = Float::with_val(256, t.at(n) - mid).abs();
            gap >= *bounds::bound_r(n, 128).unwrap().hi()
        })
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn coefficient_sanity() {
    for n in 1..=60u64 {
        let one = a_k_star(n, 1, 128).unwrap();
        assert_eq!(one.unique_integer(), Some(Integer::from(1)));
        assert!(*one.lo() == 1 && *one.hi() == 1);
        let two = a_k_star(n, 2, 128).unwrap();
        assert_eq!(two.is_positive(), n % 2 == 0);
        for k in 3..=25u64 {
            let a = a_k_star(n, k, 128).unwrap();
            let root = Enclosure::from_integer(k).sqrt().unwrap();
            assert!(a.abs().hi() <= root.hi(), "n={n} k={k}");
        }
    }
}

#[test]
fn t1_and_q2_sandwiches_hold_on_sample() {
    let t = table(5001);
    for n in (50..=5000u64).step_by(7) {
        let pair = bounds::t1_bounds(n, 128).unwrap();
        assert_eq!(pair.classify(&bounds::t1_value(n, 128).unwrap()), Containment::Inside, "T1 n={n}");
        let q = bounds::q2_bounds(n, 128).unwrap();
        assert_eq!(q.classify(&q2_exact(&t, n, 128).unwrap()), Containment::Inside, "q2 n={n}");
        let p2 = bounds::p2_bounds_explicit(n, 128).unwrap();
        assert_eq!(p2.classify(&d_exact(&t, n, 128).unwrap()), Containment::Inside, "p2 n={n}");
    }
    assert!(bounds::q2_bounds(2600, 128).unwrap().lower.is_positive());
}

#[test]
fn decay_sign_dichotomy_and_asymptotic_sandwich() {
    let t = table(10_001);
    let negative: BTreeSet<u64> = (2..=10_000u64)
        .into_par_iter()
        .filter(|&n| {
            let d = d_exact(&t, n, 128).unwrap();
            assert!(d.sign().is_some(), "n={n} unresolved");
            d.is_negative()
        })
        .collect();
    assert_eq!(negative, (3..=25).step_by(2).collect());
    for n in (2600..=10_000u64).step_by(101) {
        let pair = bounds::p2_bounds_simple(n, 128).unwrap();
        assert_eq!(pair.classify(&d_exact(&t, n, 128).unwrap()), Containment::Inside);
    }
}

#[test]
fn gap_is_increasing_past_300() {
    let gaps: Vec<Enclosure> = (300..=10_000u64).into_par_iter().map(|m| bounds::thm51_gap(m, 128).unwrap()).collect();
    assert!(gaps.windows(2).all(|w| (&w[1] - &w[0]).is_positive()));
}

#[test]
fn sign_agrees_across_exact_and_enclosure_routes() {
    let mut t = table(3001);
    let p = ScanParams::default();
    let lc = verify::scan(&mut t, CheckId::LogConcave, 50, 3000, &p).unwrap();
    assert!(lc.passed);
    for n in (50..=3000).step_by(13) {
        assert!(d_exact(&t, n, 128).unwrap().is_positive());
    }
}

#[test]
fn exact_scans_never_indeterminate_and_theorem_form_of_q() {
    let mut t = PartitionTable::new();
    let p = ScanParams::default();
    for check in [CheckId::ChenReverse, CheckId::ChenRefined, CheckId::SunQ, CheckId::LogConcave] {
        let r = verify::scan(&mut t, check, 2, 10_000, &p).unwrap();
        assert!(r.indeterminate.is_empty(), "{check}");
    }
    let r = verify::scan(&mut t, CheckId::SunQ, 32, 10_000, &p).unwrap();
    assert!(r.passed);
    let r = verify::scan(&mut t, CheckId::ChenReverse, 2, 2600, &p).unwrap();
    assert!(r.passed);
    let r = verify::scan(&mut t, CheckId::ChenRefined, 7, 2600, &p).unwrap();
    assert!(r.passed);
}

#[test]
fn janoski_ceil_reading_is_reported() {
    let mut t = PartitionTable::new();
    let p = ScanParams::default();
    let r = verify::scan(&mut t, CheckId::Janoski, 2, 120, &p).unwrap();
    assert!(r.parameters.contains_key("ceil_limit_flips"));
    assert_eq!(r.parameters["normalization"], "star-over-sqrtk");
    assert!(r.violation_indices().iter().all(|n| n % 3 == 0));
    assert!(r.violation_indices().contains(&27) && r.violation_indices().contains(&36));
    let json = r.to_json();
    assert!(json.contains("\"tool_version\""));
}
