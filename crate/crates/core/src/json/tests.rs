use serde_json::json;

use super::*;
use crate::classify::{classify_group, classify_ordered};
use crate::cohomology::heis_cocycle;
use crate::sampling::SampleConfig;
use crate::tolerance::Tolerance;

fn round_trip(law: GroupLaw<f64>) {
    let v = law_to_json(&law).unwrap();
    let back: GroupLaw<f64> = law_from_json(&v).unwrap();
    assert_eq!(back, law, "{v}");
    assert_eq!(v["dim"], json!(law.dim()));
}

#[test]
fn laws_round_trip() {
    round_trip(GroupLaw::Additive(2));
    round_trip(GroupLaw::SemidirectRR(-2.5));
    round_trip(GroupLaw::Ec(0.1));
    round_trip(GroupLaw::Sut3);
    round_trip(GroupLaw::GCd(2.0, -3.0));
    round_trip(GroupLaw::KCd(1.0 / 3.0, 6.0));
    round_trip(GroupLaw::Tk(-1.0));
    round_trip(GroupLaw::product(GroupLaw::SemidirectRR(1.0), GroupLaw::Additive(1)).unwrap());
}

#[test]
fn cocycle_descriptors() {
    let v = json!({"family": "from_cocycle", "params": {"cocycle": {"cocycle": "heis", "c": 0.5}}});
    let law: GroupLaw<f64> = law_from_json(&v).unwrap();
    assert_eq!(law.mul_raw(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).coords(), &[5.0, 7.0, 7.5]);
    let out = law_to_json(&law).unwrap();
    assert_eq!(out["params"]["cocycle"], json!({"cocycle": "heis", "c": 0.5}));
    assert_eq!(law_from_json::<f64>(&out).unwrap(), law);

    let v = json!({"family": "from_cocycle", "params": {"cocycle": {"cocycle": "g3", "k": 1}}, "dim": 3});
    assert!(law_from_json::<f64>(&v).is_ok());
    let v = json!({"family": "from_cocycle", "params": {"cocycle": {"cocycle": "zero"}}});
    assert!(law_from_json::<f64>(&v).is_err());
    let v = json!({"family": "from_cocycle", "params": {
        "module": {"acting": {"family": "semidirect_rr", "params": {"c": 1}},
                   "action": {"kind": "affine_on_semidirect", "coeffs": [1]}},
        "cocycle": {"cocycle": "zero"}}});
    let law: GroupLaw<f64> = law_from_json(&v).unwrap();
    assert_eq!(law_to_json(&law).unwrap()["params"]["module"]["action"], json!({"kind": "affine_on_semidirect", "coeffs": [1.0]}));
}

#[test]
fn untagged_cochains_have_no_descriptor() {
    let f = heis_cocycle(1.0).add(&heis_cocycle(1.0)).unwrap();
    let law = extension_from_cocycle(&f).unwrap();
    assert!(law_to_json(&law).is_err());
}

#[test]
fn descriptor_errors() {
    for bad in [
        json!({"params": {}}),
        json!({"family": "nope"}),
        json!({"family": "e_c", "params": {}}),
        json!({"family": "e_c", "params": {"c": "x"}}),
        json!({"family": "e_c", "params": {"c": 1}, "dim": 2}),
        json!({"family": "additive", "params": {"n": 4}}),
    ] {
        assert!(law_from_json::<f64>(&bad).is_err(), "{bad}");
    }
    assert!(matches!(parse("{"), Err(Error::Json(_))));
    assert!(spec_from_json::<f64>(&json!({"family": "sut3", "order": {"significance": [0, 1]}})).is_err());
    let (law, order) = spec_from_json::<f64>(&json!({"family": "sut3", "order": {"significance": [1, 0, 2]}})).unwrap();
    assert_eq!((law, order.unwrap().significance().to_vec()), (GroupLaw::Sut3, vec![1, 0, 2]));
}

#[test]
fn actions_and_orders_round_trip() {
    for a in [ExpAction::Character(vec![1.0, -0.5]), ExpAction::Diagonal(2.0, 3.0), ExpAction::AffineOnSemidirect(-1.0)] {
        assert_eq!(action_from_json::<f64>(&action_to_json(&a)).unwrap(), a);
    }
    let o = LexOrder::new(vec![2, 0, 1]).unwrap();
    assert_eq!(order_to_json(&o), json!({"significance": [2, 0, 1]}));
    assert_eq!(order_from_json(&order_to_json(&o)).unwrap(), o);
    assert!(order_from_json(&json!({"significance": [0, 0]})).is_err());
}

#[test]
fn number_formatting() {
    let v = element_to_json(&Element::<f64>::from_f64(&[5.0, 7.0, 7.5]));
    assert_eq!(to_canonical_string(&v), "[5,7,7.5]");
    assert_eq!(to_canonical_string(&json!([-0.0, 0.1, 1e300])), "[0,0.1,1e+300]");
    assert_eq!(to_canonical_string(&json!({"b": 1.0, "a": [2.0]})), r#"{"a":[2],"b":1}"#);
}

#[test]
fn csv_parsing() {
    assert_eq!(parse_csv::<f64>("1, 2.5,-3").unwrap().coords(), &[1.0, 2.5, -3.0]);
    assert!(parse_csv::<f64>("1,,2").is_err());
    assert_eq!(parse_order_csv("2,1,0").unwrap().significance(), &[2, 1, 0]);
    assert!(parse_order_csv("0,0").is_err());
}

#[test]
fn witnesses_round_trip() {
    let c = classify_ordered(&GroupLaw::GCd(2.0, 3.0), &LexOrder::standard(3)).unwrap();
    let v = witness_to_json(&c.witness).unwrap();
    assert_eq!(v["matrix"], json!([[1.0, 0.0, 0.0], [2.0, 3.0, 0.0], [0.0, 0.0, 1.0]]));
    assert_eq!(v["flags"]["order_verified"], json!(true));
    let back: IsoWitness<f64> = witness_from_json(&v).unwrap();
    assert_eq!(back.flags.order_pair, c.witness.flags.order_pair);
    let (_, report) = back.verified(&SampleConfig::default(), &Tolerance::default());
    assert!(report.pass);

    let c = classify_group(&GroupLaw::Sut3).unwrap();
    let v = witness_to_json(&c.witness).unwrap();
    assert_eq!(v["steps"][0]["kind"], json!("sut3_to_heis"));
    let back: IsoWitness<f64> = witness_from_json(&v).unwrap();
    assert_eq!(back.map, c.witness.map);

    let minimal = json!({
        "source": {"family": "e_c", "params": {"c": 3}},
        "target": {"family": "e_c", "params": {"c": 0.5}},
        "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 6]],
    });
    let w: IsoWitness<f64> = witness_from_json(&minimal).unwrap();
    assert!(!w.verified(&SampleConfig::default(), &Tolerance::default()).1.pass);
    let singular = json!({
        "source": {"family": "sut3"}, "target": {"family": "sut3"},
        "matrix": [[1, 0, 0], [0, 0, 0], [0, 0, 1]],
    });
    assert!(witness_from_json::<f64>(&singular).is_err());
}

#[test]
fn classification_output_shape() {
    let c = classify_group(&GroupLaw::Ec(3.0)).unwrap();
    let v = classification_to_json(&c).unwrap();
    assert_eq!(v["label"], json!("Heis"));
    assert_eq!(v["alias"], json!("G_Heis"));
    assert_eq!(v["canonical"]["law"]["family"], json!("e_c"));
    assert_eq!(v["verification"]["pass"], json!(true));
    assert_eq!(to_canonical_string(&v["witness"]["inverse_matrix"]), "[[1,0,0],[0,1,0],[0,0,6]]");
}
