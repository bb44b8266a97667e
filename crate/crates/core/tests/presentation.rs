use quiver_cover::golden;
use quiver_cover::{load_presentation, AnyPresentation, Error, PrimeField};

fn f() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

const N32: &str = r#"{"field": {"kind": "prime", "p": 32003}, "group": {"kind": "free-abelian", "rank": 1},
 "vertices": ["1","2","3"],
 "arrows": [{"id":"a1","src":"1","tgt":"2","weight":[1]}, {"id":"a2","src":"2","tgt":"3","weight":[1]}, {"id":"a3","src":"3","tgt":"1","weight":[1]}],
 "relations": [[{"coeff": "1", "path": ["a1","a2"]}], [{"coeff": "1", "path": ["a2","a3"]}], [{"coeff": "1", "path": ["a3","a1"]}]],
 "nilbound": 2}"#;

#[test]
fn nakayama_document_loads() {
    let p = load_presentation(N32).unwrap();
    let AnyPresentation::Prime(p) = p else { panic!("expected a prime field") };
    assert_eq!(p.vertices().len(), 3);
    assert_eq!(p.algebra().total_dim(), 6);
}

#[test]
fn dual_numbers_document_loads() {
    let doc = r#"{"field": {"kind": "prime", "p": 32003}, "group": {"kind": "free-abelian", "rank": 1},
      "vertices": ["1"], "arrows": [{"id":"x","src":"1","tgt":"1","weight":[1]}],
      "relations": [[{"coeff": "1", "path": ["x","x"]}]], "nilbound": 2}"#;
    let AnyPresentation::Prime(p) = load_presentation(doc).unwrap() else { panic!() };
    assert_eq!(p.algebra().dim(0, 0), 2);
}

#[test]
fn free_loop_is_not_locally_bounded() {
    let doc = r#"{"field": {"kind": "prime", "p": 32003}, "group": {"kind": "free-abelian", "rank": 1},
      "vertices": ["1"], "arrows": [{"id":"x","src":"1","tgt":"1","weight":[1]}],
      "relations": [], "nilbound": 4}"#;
    let err = load_presentation(doc).unwrap_err();
    assert!(matches!(err, Error::NotLocallyBounded(_)), "{err}");
}

#[test]
fn inhomogeneous_relation_rejected() {
    let doc = r#"{"field": {"kind": "prime", "p": 32003}, "group": {"kind": "free-abelian", "rank": 1},
      "vertices": ["1","2"],
      "arrows": [{"id":"a","src":"1","tgt":"2","weight":[1]}, {"id":"b","src":"1","tgt":"2","weight":[2]},
                 {"id":"c","src":"2","tgt":"2","weight":[0]}],
      "relations": [[{"coeff": "1", "path": ["a","c"]}, {"coeff": "-1", "path": ["b","c"]}], [{"coeff":"1","path":["c","c"]}]],
      "nilbound": 2}"#;
    let err = load_presentation(doc).unwrap_err();
    assert_eq!(err.kind(), "InhomogeneousRelation");
}

#[test]
fn non_admissible_relation_rejected() {
    let doc = r#"{"field": {"kind": "prime", "p": 32003}, "group": {"kind": "free-abelian", "rank": 1},
      "vertices": ["1","2"], "arrows": [{"id":"a","src":"1","tgt":"2","weight":[1]}],
      "relations": [[{"coeff": "1", "path": ["a"]}]], "nilbound": 1}"#;
    assert_eq!(load_presentation(doc).unwrap_err().kind(), "NotAdmissible");
}

#[test]
fn unknown_field_is_schema_error() {
    let doc = N32.replace("\"nilbound\"", "\"extra\": 1, \"nilbound\"");
    assert_eq!(load_presentation(&doc).unwrap_err().kind(), "SchemaError");
}

#[test]
fn rational_coefficients_parse() {
    let doc = N32.replace(r#""kind": "prime", "p": 32003"#, r#""kind": "rationals""#).replacen(
        r#""coeff": "1""#,
        r#""coeff": "3/4""#,
        1,
    );
    let p = load_presentation(&doc).unwrap();
    assert!(matches!(p, AnyPresentation::Rational(_)));
}

#[test]
fn path_basis_examples() {
    let a3 = golden::linear_a(f(), 3).unwrap();
    assert_eq!(a3.path_basis(0, 2).len(), 1);
    assert_eq!(a3.path_basis(0, 2)[0].len(), 2);
    let n = golden::nakayama(f(), 3, 2).unwrap();
    assert_eq!(n.path_basis(0, 2).len(), 0);
    for x in 0..3 {
        assert_eq!(a3.path_basis(x, x), &[Vec::<usize>::new()]);
        assert_eq!(n.path_basis(x, x), &[Vec::<usize>::new()]);
    }
}

#[test]
fn commutativity_relation_cuts_dimension() {
    // 1 -> 2 -> 4 and 1 -> 3 -> 4 with ab = cd
    let doc = r#"{"field": {"kind": "prime", "p": 7}, "group": {"kind": "free-abelian", "rank": 1},
      "vertices": ["1","2","3","4"],
      "arrows": [{"id":"a","src":"1","tgt":"2","weight":[1]}, {"id":"b","src":"2","tgt":"4","weight":[1]},
                 {"id":"c","src":"1","tgt":"3","weight":[1]}, {"id":"d","src":"3","tgt":"4","weight":[1]}],
      "relations": [[{"coeff": "1", "path": ["a","b"]}, {"coeff": "-1", "path": ["c","d"]}]], "nilbound": 2}"#;
    let AnyPresentation::Prime(p) = load_presentation(doc).unwrap() else { panic!() };
    assert_eq!(p.path_basis(0, 3).len(), 1);
}

#[test]
fn square_free_examples() {
    assert!(golden::nakayama(f(), 3, 2).unwrap().is_square_free());
    assert!(!golden::kronecker(f()).unwrap().is_square_free());
    let doc = r#"{"field": {"kind": "prime", "p": 7}, "group": {"kind": "free-abelian", "rank": 1},
      "vertices": ["1"], "arrows": [{"id":"x","src":"1","tgt":"1","weight":[1]}, {"id":"y","src":"1","tgt":"1","weight":[1]}],
      "relations": [[{"coeff":"1","path":["x","x"]}], [{"coeff":"1","path":["x","y"]}], [{"coeff":"1","path":["y","x"]}], [{"coeff":"1","path":["y","y"]}]],
      "nilbound": 2}"#;
    let AnyPresentation::Prime(p) = load_presentation(doc).unwrap() else { panic!() };
    assert!(!p.is_square_free());
}

#[test]
fn raw_round_trip() {
    let p = golden::auslander_dual_numbers(f()).unwrap();
    let raw = p.to_raw();
    let text = serde_json::to_string(&raw).unwrap();
    let AnyPresentation::Prime(q) = load_presentation(&text).unwrap() else { panic!() };
    assert_eq!(q.to_raw(), raw);
}
