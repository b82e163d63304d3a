use serde_json::json;
use triflect_cli::{ClaimRecord, Golden, Report, Status, Summary};

fn record(id: &str, status: Status, reason: Option<&str>) -> ClaimRecord {
    ClaimRecord {
        id: id.into(),
        description: format!("claim {id}"),
        source: "derived".into(),
        expected: json!({"a": [1, 2]}),
        computed: json!("x y"),
        status,
        reason: reason.map(String::from),
        wall_ms: 12,
    }
}

#[test]
fn empty_report_summary() {
    let r = Report::new(vec![]);
    assert_eq!(r.summary, Summary::default());
    assert_eq!(r.version, "1");
    assert!(r.passed());
}

#[test]
fn json_text_json_round_trip() {
    let r = Report::new(vec![
        record("a.one", Status::Pass, None),
        record("b.two", Status::Fail, Some("differs")),
        record("c", Status::Skipped, None),
        record("d", Status::Exploratory, None),
    ]);
    assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 1, exploratory: 1 });
    let j = Report::from_json(&r.to_json()).unwrap();
    assert_eq!(j, r);
    let t = Report::from_text(&j.to_text()).unwrap();
    assert_eq!(t, r);
    assert_eq!(Report::from_json(&t.to_json()).unwrap(), r);
}

#[test]
fn tampered_summary_is_rejected() {
    let r = Report::new(vec![record("a", Status::Pass, None)]);
    let t = r.to_text().replace("1 pass", "2 pass");
    assert!(Report::from_text(&t).is_err());
}

#[test]
fn unknown_version_is_rejected() {
    let r = Report::new(vec![]);
    let s = r.to_json().replace("\"1\"", "\"9\"");
    assert!(Report::from_json(&s).is_err());
}

#[test]
fn golden_render_round_trip() {
    let g = Golden::builtin();
    let back: Golden = toml::from_str(&g.render()).unwrap();
    assert_eq!(back.free_12gon_count, g.free_12gon_count);
    assert_eq!(back.group_orders, g.group_orders);
    assert_eq!(back.twenty_six_cell_orbit_sizes, g.twenty_six_cell_orbit_sizes);
    for (a, b) in back.regular_12gon_z.iter().zip(&g.regular_12gon_z) {
        assert!((a - b).abs() < 1e-12);
    }
}
