use rough3_core::approximation::{lower, upper};
use rough3_core::lukasiewicz::{check_axioms, import_rough_algebra};
use rough3_core::monteiro::{membership_all, quotient_algebra};
use rough3_core::representation::represent;
use rough3_core::rough::rough_of;
use rough3_core::{InformationTable, ThreeValue};

fn fixture() -> InformationTable {
    let objects = (1..=5).map(|i| i.to_string()).collect();
    let cells = ["v", "v", "w", "u", "u"].iter().map(|v| vec![v.to_string()]).collect();
    InformationTable::new(objects, vec!["attr".into()], cells).unwrap()
}

#[test]
fn table_to_rough_sets() {
    let p = fixture().indiscernibility_partition();
    assert_eq!(p.blocks(), &[vec![0, 1], vec![2], vec![3, 4]]);

    let x = p.set_of(["1", "3"]).unwrap();
    assert_eq!(p.names(&lower(&p, &x).unwrap()), ["3"]);
    assert_eq!(p.names(&upper(&p, &x).unwrap()), ["1", "2", "3"]);

    let r = rough_of(&p, &x).unwrap();
    assert_eq!(p.names(r.negation().lower()), ["4", "5"]);
    assert_eq!(p.names(r.negation().upper()), ["1", "2", "4", "5"]);
    assert_eq!(
        membership_all(&p, &x).unwrap(),
        [
            ThreeValue::Half,
            ThreeValue::Half,
            ThreeValue::One,
            ThreeValue::Zero,
            ThreeValue::Zero
        ]
    );
}

#[test]
fn algebra_round_trip_through_representation() {
    let p = fixture().indiscernibility_partition();
    let b = import_rough_algebra(&p, 6).unwrap();
    assert_eq!(b.len(), 18);
    assert!(check_axioms(&b).passed());

    let q = quotient_algebra(&p, 6).unwrap();
    assert!(q.algebra.isomorphism_to(&b).is_some());

    let rep = represent(&b).unwrap();
    assert_eq!(rep.filters.len(), 5);
    assert_eq!(rep.space.blocks().len(), 3);
    let h = import_rough_algebra(&rep.space, 6).unwrap();
    assert_eq!(h.len(), b.len());
    assert!(h.isomorphism_to(&b).is_some());
}
