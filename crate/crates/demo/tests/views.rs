use serde_json::Value;
use triflect_demo::{i26_json, polygon_json, vinberg_json, zperp_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn regular_hexagon() {
    let v = parse(polygon_json(6, "", "").unwrap());
    let l: Vec<f64> = serde_json::from_value(v["lengths"].clone()).unwrap();
    assert_eq!(l.len(), 6);
    assert!(l.iter().all(|x| (x - l[0]).abs() < 1e-8));
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
}

#[test]
fn explicit_weights() {
    let v = parse(polygon_json(0, "0.5, 0.5, 0.5, 0.5", "-1 0 1 2").unwrap());
    assert_eq!(v["lengths"].as_array().unwrap().len(), 4);
    assert!(polygon_json(0, "0.5,0.5", "").is_err());
    assert!(polygon_json(0, "a,b", "").is_err());
}

#[test]
fn zperp_of_a4_is_the_free_12gon() {
    let v = parse(zperp_json("c3 d3 e3 f3").unwrap());
    assert_eq!(v["j"]["shape"], "A4");
    assert_eq!(v["z"]["shape"], "tildeA11");
    assert_eq!(v["closed"], true);
    assert!(zperp_json("c3 nope").is_err());
}

#[test]
fn i26_nodes() {
    let v = parse(i26_json());
    let nodes = v.as_array().unwrap();
    assert_eq!(nodes.len(), 26);
    assert!(nodes.iter().all(|n| n["neighbors"].as_array().unwrap().len() == 4));
}

#[test]
fn vinberg_views() {
    let v = parse(vinberg_json("tildeA11").unwrap());
    assert_eq!(v["finite_volume"], true);
    assert_eq!(v["critical"]["A5"], 12);
    let v = parse(vinberg_json("Y555").unwrap());
    assert_eq!(v["finite_volume"], false);
    let text = "nodes: a:b b:w c:b\nedges: a-b b-c\n";
    assert!(vinberg_json(text).is_err());
}
