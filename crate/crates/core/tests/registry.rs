use qmoments::verify::{find_check, registry, run_suite, Mode, Section, Selector, Status};

/// Identities that must each have a registry entry.
const REQUIRED: &[&str] = &[
    "eq-1.3", "eq-1.4", "eq-1.13", "eq-1.14", "eq-1.17", "eq-1.20", "eq-1.21", "eq-1.23", "eq-1.24", "eq-1.25",
    "eq-1.27", "eq-1.28", "eq-1.29", "eq-1.30", "eq-1.31", "eq-1.32", "eq-1.33", "eq-1.34", "eq-1.35", "eq-1.36",
    "eq-1.37", "eq-1.43", "eq-1.44", "eq-1.45", "psi-m",
    "eq-2.3", "eq-2.4", "eq-2.6", "eq-2.7", "eq-2.8", "eq-2.9", "eq-2.10",
    "eq-3.4", "eq-3.5", "eq-3.6", "eq-3.7", "eq-3.8", "eq-3.12", "eq-3.13", "eq-3.14", "eq-3.18", "eq-3.19",
    "eq-3.20", "eq-3.21", "eq-3.22", "eq-3.23", "eq-3.24", "eq-3.1-witness",
    "eq-4.4", "eq-4.5", "eq-4.6", "eq-4.7", "eq-4.8", "eq-4.11", "eq-4.13", "eq-4.14", "eq-4.15", "eq-4.17",
    "eq-4.18", "eq-4.19", "eq-4.20", "eq-4.21",
    "eq-5.1", "eq-5.2", "eq-5.6", "eq-5.7", "eq-5.8", "eq-5.9", "eq-5.13", "eq-5.14", "eq-5.15", "eq-5.18",
    "eq-5.19", "eq-5.20", "eq-5.21", "eq-5.22", "eq-5.23", "eq-5.24", "eq-5.25", "eq-5.27",
];

#[test]
fn registry_is_complete() {
    let missing: Vec<_> = REQUIRED.iter().filter(|id| find_check(id).is_none()).collect();
    assert!(missing.is_empty(), "unregistered: {missing:?}");
}

#[test]
fn every_section_is_populated() {
    for s in Section::ALL {
        assert!(registry().iter().any(|c| c.section == s), "{s} is empty");
    }
}

#[test]
fn single_id_suite() {
    let r = run_suite(&Selector::parse("eq-4.21").unwrap(), 6, Mode::Symbolic).unwrap();
    assert!(r.all_passed());
}

#[test]
fn witness_is_reported() {
    let r = run_suite(&Selector::parse("eq-3.1-witness").unwrap(), 4, Mode::Symbolic).unwrap();
    assert_eq!(r.checks[0].status, Status::Pass);
    assert_eq!(r.checks[0].witness.as_deref(), Some("-q^3+q^4"));
}

#[test]
fn classical_section_passes() {
    let r = run_suite(&Selector::parse("classical").unwrap(), 6, Mode::Symbolic).unwrap();
    assert!(r.all_passed(), "{}", r.to_text(false));
}

#[test]
fn sampled_mode_records_points() {
    let sel = Selector::parse("eq-5.2,eq-5.6").unwrap();
    let a = run_suite(&sel, 3, Mode::Sampled { seed: 11 }).unwrap();
    assert!(a.all_passed(), "{}", a.to_text(false));
    for c in &a.checks {
        let s = c.sampling.as_ref().expect("z-dependent checks are sampled");
        assert!(s.points.len() > s.degree_bound);
    }
    let b = run_suite(&sel, 3, Mode::Sampled { seed: 11 }).unwrap();
    assert_eq!(a.to_json(false), b.to_json(false));
}

#[test]
fn failures_name_known_ids() {
    let err = run_suite(&Selector::parse("eq-0.0").unwrap(), 4, Mode::Symbolic).unwrap_err();
    assert!(err.to_string().contains("eq-4.21"));
}
