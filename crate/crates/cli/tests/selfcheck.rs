use linkwidth_cli::selfcheck::selfcheck;
use linkwidth_core::BoundConstants;

fn failed(k: &BoundConstants) -> Vec<String> {
    let (env, passed) = selfcheck(k, 1);
    let names: Vec<String> = serde_json::from_value(env.payload["failed"].clone()).unwrap();
    assert_eq!(passed, names.is_empty());
    names
}

#[test]
fn standard_constants_pass() {
    assert!(failed(&BoundConstants::standard()).is_empty());
}

#[test]
fn tampered_tetrahedron_volume_fails() {
    let k = BoundConstants {
        v3: 1.1,
        ..BoundConstants::standard()
    };
    let names = failed(&k);
    assert!(names.contains(&"v3-tetrahedron".to_string()));
    assert!(names.contains(&"crossing-lower-bound-100".to_string()));
    assert!(names.iter().any(|n| n.ends_with("interval-upper")));
}

#[test]
fn tampered_twisted_lower_bound_fails_corollary() {
    let k = BoundConstants {
        ht_lower: 0.6,
        ..BoundConstants::standard()
    };
    let names = failed(&k);
    assert!(names.contains(&"corollary-c1".to_string()));
    assert!(names.contains(&"corollary-c2".to_string()));
}

#[test]
fn tampered_separator_constant_fails() {
    let k = BoundConstants {
        k612: 15.0,
        ..BoundConstants::standard()
    };
    let names = failed(&k);
    assert!(names.contains(&"closure-identity".to_string()));
    assert!(names.contains(&"separator-constants".to_string()));
}

#[test]
fn same_seed_same_payload() {
    let k = BoundConstants::standard();
    assert_eq!(selfcheck(&k, 8).0.render(), selfcheck(&k, 8).0.render());
}
