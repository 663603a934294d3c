use hta_core::operad::{ideal_component, quotient_dim, relation_vectors, FreeComponent, OperadVector};
use hta_core::Permutation;

#[test]
fn arity_seven_ideal() {
    let ideal = ideal_component(7).unwrap();
    assert_eq!(ideal.ambient_dim(), 60480);
    assert_eq!(ideal.rank(), 55440);

    let mu = OperadVector::generator();
    let (r1, r2) = relation_vectors();
    let sigma = Permutation::from_images(&[4, 1, 5, 3, 2]).unwrap();
    for r in [&r1, &r2] {
        let rs = r.act(&sigma).unwrap();
        for i in 1..=5 {
            assert!(ideal.contains(&rs.compose(i, &mu).unwrap()).unwrap());
        }
        for j in 1..=3 {
            let v = mu.compose(j, &rs).unwrap();
            assert!(ideal.contains(&v).unwrap());
            let tau = Permutation::from_images(&[7, 3, 1, 2, 6, 4, 5]).unwrap();
            assert!(ideal.contains(&v.act(&tau).unwrap()).unwrap());
        }
    }

    // a single tree term is never a relation
    let comp = FreeComponent::new(7).unwrap();
    for i in (0..comp.dim()).step_by(5039) {
        assert!(!ideal.contains(&OperadVector::term(comp.term(i))).unwrap());
    }
}

#[test]
fn quotient_dimensions_are_factorials() {
    assert_eq!(quotient_dim(3).unwrap(), 6);
    assert_eq!(quotient_dim(5).unwrap(), 120);
    assert_eq!(quotient_dim(7).unwrap(), 5040);
}
