use hta_core::json::{tensor_from_json, tensor_to_json};
use hta_core::product::phi_sigma;
use hta_core::random::{random_rational, random_rational_tensor, rng};
use hta_core::rational::{format, int, parse, ratio};
use hta_core::tensor::all_tuples;
use hta_core::{mu_chain, MultiVector, Permutation, ProductSpec, Tensor};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn multivector(arity: usize, dim: usize, seed: u64) -> MultiVector {
    let mut r = rng(seed);
    MultiVector::new(
        arity,
        dim,
        all_tuples(arity, dim).map(|i| (i, random_rational(&mut r, 4))),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution(p in 1usize..=3, q in 1usize..=2, dim in 1usize..=3, seed: u64) {
        let t = random_rational_tensor(p, q, dim, seed, 5);
        prop_assert_eq!(t.dual().dual(), t);
    }

    #[test]
    fn compose_matches_sequential_application(a in 1usize..=2, b in 1usize..=2, c in 1usize..=2, dim in 1usize..=2, seed: u64) {
        let f = random_rational_tensor(a, b, dim, seed, 4);
        let g = random_rational_tensor(b, c, dim, seed.wrapping_add(1), 4);
        let v = multivector(a, dim, seed.wrapping_add(2));
        let lhs = Tensor::compose(&f, &g).unwrap().apply(&v).unwrap();
        let rhs = g.apply(&f.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_is_associative(dim in 1usize..=2, seed: u64) {
        let f = random_rational_tensor(2, 1, dim, seed, 4);
        let g = random_rational_tensor(1, 2, dim, seed ^ 1, 4);
        let h = random_rational_tensor(2, 2, dim, seed ^ 2, 4);
        let left = Tensor::compose(&Tensor::compose(&f, &g).unwrap(), &h).unwrap();
        let right = Tensor::compose(&f, &Tensor::compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transpose_inputs_is_precomposition(r in perm(3), dim in 1usize..=2, seed: u64) {
        let t = random_rational_tensor(3, 1, dim, seed, 4);
        let v = multivector(3, dim, seed ^ 7);
        let lhs = t.transpose_inputs(&r).unwrap().apply(&v).unwrap();
        let rhs = t.apply(&phi_sigma(&r, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_inputs_is_a_right_action(r1 in perm(3), r2 in perm(3), seed: u64) {
        let t = random_rational_tensor(3, 1, 2, seed, 4);
        let twice = t.transpose_inputs(&r1).unwrap().transpose_inputs(&r2).unwrap();
        prop_assert_eq!(twice, t.transpose_inputs(&r1.compose(&r2)).unwrap());
    }

    #[test]
    fn phi_sigma_is_a_linear_left_action(s in perm(4), u in perm(4), seed: u64) {
        let v = multivector(4, 2, seed);
        let w = multivector(4, 2, seed ^ 3);
        let both = phi_sigma(&s, &phi_sigma(&u, &v).unwrap()).unwrap();
        prop_assert_eq!(both, phi_sigma(&s.compose(&u), &v).unwrap());
        let sum = phi_sigma(&s, &v.add(&w).unwrap()).unwrap();
        prop_assert_eq!(sum, phi_sigma(&s, &v).unwrap().add(&phi_sigma(&s, &w).unwrap()).unwrap());
    }

    #[test]
    fn chain_product_is_multilinear(slot in 0usize..3, c in -5i64..=5, p in 1usize..=2, q in 1usize..=2, seed: u64) {
        let spec = ProductSpec::ltr(1);
        let args: Vec<Tensor> = (0..3).map(|i| random_rational_tensor(p, q, 2, seed ^ i, 3)).collect();
        let extra = random_rational_tensor(p, q, 2, seed ^ 99, 3);
        let mut mixed = args.clone();
        mixed[slot] = args[slot].scale(&int(c)).add(&extra).unwrap();
        let mut only = args.clone();
        only[slot] = extra;
        let lhs = mu_chain(&spec, &mixed).unwrap();
        let rhs = mu_chain(&spec, &args).unwrap().scale(&int(c)).add(&mu_chain(&spec, &only).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_group_laws(a in perm(5), b in perm(5)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        prop_assert_eq!(Permutation::unrank(5, a.rank()), a.clone());
        let xs: Vec<usize> = (10..15).collect();
        prop_assert_eq!(a.permute_slots(&b.permute_slots(&xs)), a.compose(&b).permute_slots(&xs));
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = ratio(n, d);
        prop_assert_eq!(parse(&format(&r)).unwrap(), r);
    }

    #[test]
    fn tensor_json_round_trip(p in 1usize..=2, q in 1usize..=2, dim in 1usize..=3, seed: u64) {
        let t = random_rational_tensor(p, q, dim, seed, 50);
        let s = tensor_to_json(&t);
        let back = tensor_from_json(&s).unwrap();
        prop_assert_eq!(tensor_to_json(&back), s);
        prop_assert_eq!(back, t);
    }
}
