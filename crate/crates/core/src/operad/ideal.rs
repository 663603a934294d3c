use std::collections::VecDeque;

use super::tree::{enumerate_shapes, free_dim, TreeShape, TreeTerm};
use super::vector::{FreeComponent, OperadVector};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::perm::Permutation;
use crate::rational::{int, Rational};

pub fn sigma_action(v: &OperadVector, sigma: &Permutation) -> Result<OperadVector> {
    v.act(sigma)
}

fn comb(slot: usize, labels: &[usize]) -> TreeTerm {
    let shape: TreeShape = enumerate_shapes(5).expect("arity 5")[slot - 1].clone();
    TreeTerm::from_leaf_labels(shape, labels).expect("valid labels")
}

/// `r₁ = μ∘₁μ − μ∘₂(μ·τ₁₃)` and `r₂ = μ∘₁μ − μ∘₃μ`.
pub fn relation_vectors() -> (OperadVector, OperadVector) {
    let mu = OperadVector::generator();
    let twisted = mu.act(&Permutation::transposition(3, 1, 3)).expect("degree 3");
    let left = mu.compose(1, &mu).expect("slot 1");
    let r1 = left.sub(&mu.compose(2, &twisted).expect("slot 2")).expect("arity 5");
    let r2 = left.sub(&mu.compose(3, &mu).expect("slot 3")).expect("arity 5");
    (r1, r2)
}

/// The degree-one partial associativity vector `α∘₁α − α∘₂(α·τ₁₃) + α∘₃α`,
/// written in the same tree basis as the relations.
pub fn partial_relation() -> OperadVector {
    OperadVector::from_terms(
        5,
        [
            (comb(1, &[1, 2, 3, 4, 5]), int(1)),
            (comb(2, &[1, 4, 3, 2, 5]), int(-1)),
            (comb(3, &[1, 2, 3, 4, 5]), int(1)),
        ],
    )
    .expect("arity 5")
}

/// A subspace of one free component, kept in row-reduced form.
#[derive(Clone, Debug)]
pub struct RelationSpace {
    component: FreeComponent,
    spanning: Vec<SparseRow>,
    echelon: Echelon,
}

impl RelationSpace {
    pub fn new(arity: usize) -> Result<RelationSpace> {
        let component = FreeComponent::new(arity)?;
        let echelon = Echelon::new(component.dim());
        Ok(RelationSpace {
            component,
            spanning: Vec::new(),
            echelon,
        })
    }

    pub fn from_vectors<'a>(
        arity: usize,
        vectors: impl IntoIterator<Item = &'a OperadVector>,
    ) -> Result<RelationSpace> {
        let mut space = RelationSpace::new(arity)?;
        for v in vectors {
            space.insert(v)?;
        }
        Ok(space)
    }

    pub fn arity(&self) -> usize {
        self.component.arity()
    }

    pub fn ambient_dim(&self) -> usize {
        self.component.dim()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn component(&self) -> &FreeComponent {
        &self.component
    }

    /// Adds `v`; returns true if the rank grew. Only rank-increasing vectors
    /// are kept as spanning vectors.
    pub fn insert(&mut self, v: &OperadVector) -> Result<bool> {
        let row = self.component.to_row(v)?;
        Ok(self.insert_row(row))
    }

    fn insert_row(&mut self, row: SparseRow) -> bool {
        let grew = self.echelon.insert(&row);
        if grew {
            self.spanning.push(row);
        }
        grew
    }

    pub fn contains(&self, v: &OperadVector) -> Result<bool> {
        Ok(self.echelon.contains(&self.component.to_row(v)?))
    }

    pub fn spanning_vectors(&self) -> Vec<OperadVector> {
        self.spanning.iter().map(|r| self.component.from_row(r)).collect()
    }

    pub fn spanning_rows(&self) -> &[SparseRow] {
        &self.spanning
    }

    /// Equal spans: same rank and mutual containment.
    pub fn same_span(&self, other: &RelationSpace) -> bool {
        self.arity() == other.arity()
            && self.rank() == other.rank()
            && self.spanning.iter().all(|r| other.echelon.contains(r))
            && other.spanning.iter().all(|r| self.echelon.contains(r))
    }

    /// Closes the span under the right Σ-action, using adjacent transpositions
    /// as generators and revisiting only vectors that raised the rank.
    pub fn close_under_symmetric_group(&mut self) {
        let n = self.arity();
        let gens: Vec<Permutation> = (1..n).map(|a| Permutation::transposition(n, a, a + 1)).collect();
        let mut queue: VecDeque<SparseRow> = self.spanning.iter().cloned().collect();
        while let Some(row) = queue.pop_front() {
            for s in &gens {
                let mut moved: SparseRow = row
                    .iter()
                    .map(|(i, c)| (self.component.act_index(*i, s), c.clone()))
                    .collect();
                moved.sort_by_key(|(i, _)| *i);
                if self.insert_row(moved.clone()) {
                    queue.push_back(moved);
                }
            }
        }
    }
}

/// The Σ-closure of a single vector.
pub fn sigma_closure(v: &OperadVector) -> Result<RelationSpace> {
    let mut space = RelationSpace::new(v.arity())?;
    space.insert(v)?;
    space.close_under_symmetric_group();
    Ok(space)
}

/// The arity-`n` component of the operadic ideal generated by `r₁, r₂`.
pub fn ideal_component(arity: usize) -> Result<RelationSpace> {
    let (r1, r2) = relation_vectors();
    match arity {
        5 => {
            let mut space = RelationSpace::new(5)?;
            for sigma in Permutation::all(5) {
                space.insert(&r1.act(&sigma)?)?;
                space.insert(&r2.act(&sigma)?)?;
            }
            Ok(space)
        }
        7 => {
            let mu = OperadVector::generator();
            let mut space = RelationSpace::new(7)?;
            for sigma in Permutation::all(5) {
                for r in [&r1, &r2] {
                    let rs = r.act(&sigma)?;
                    for i in 1..=5 {
                        space.insert(&rs.compose(i, &mu)?)?;
                    }
                    for j in 1..=3 {
                        space.insert(&mu.compose(j, &rs)?)?;
                    }
                }
            }
            space.close_under_symmetric_group();
            Ok(space)
        }
        _ => Err(Error::UnsupportedArity(arity)),
    }
}

/// `free_dim − rank(ideal)`; the ideal is empty at arity 3.
pub fn quotient_dim(arity: usize) -> Result<usize> {
    match arity {
        3 => free_dim(3),
        5 | 7 => {
            let ideal = ideal_component(arity)?;
            Ok(ideal.ambient_dim() - ideal.rank())
        }
        _ => Err(Error::UnsupportedArity(arity)),
    }
}

fn labeling_sign(t: &TreeTerm) -> Rational {
    int(t.labeling().sign() as i64)
}

/// `⟨(T_i)·σ, (T_j)·ρ⟩ = δ_ij δ_σρ sgn σ`, extended bilinearly.
pub fn pairing(x: &OperadVector, y: &OperadVector) -> Result<Rational> {
    for v in [x, y] {
        if v.arity() != 5 {
            return Err(Error::ArityMismatch {
                expected: 5,
                found: v.arity(),
            });
        }
    }
    let mut acc = int(0);
    for (t, c) in x.terms() {
        let d = y.coefficient(t);
        acc += c * d * labeling_sign(t);
    }
    Ok(acc)
}

/// `R^⊥` under `pairing`, as the kernel of the sign-twisted relation rows.
pub fn annihilator(space: &RelationSpace) -> Result<RelationSpace> {
    if space.arity() != 5 {
        return Err(Error::ArityMismatch {
            expected: 5,
            found: space.arity(),
        });
    }
    let comp = space.component();
    let signs: Vec<Rational> = (0..comp.dim()).map(|i| labeling_sign(&comp.term(i))).collect();
    let mut twisted = Echelon::new(comp.dim());
    for row in space.spanning_rows() {
        let r: SparseRow = row.iter().map(|(i, c)| (*i, c * &signs[*i])).collect();
        twisted.insert(&r);
    }
    let mut out = RelationSpace::new(5)?;
    for k in twisted.kernel() {
        out.insert_row(k);
    }
    Ok(out)
}

/// Whether `annihilator(ideal(5))` equals the Σ₅-closure of `partial_relation`.
pub fn dual_matches_partial_closure() -> Result<bool> {
    let perp = annihilator(&ideal_component(5)?)?;
    Ok(perp.same_span(&sigma_closure(&partial_relation())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;

    fn shape(slot: usize) -> TreeShape {
        enumerate_shapes(5).unwrap()[slot - 1].clone()
    }

    #[test]
    fn r2_is_a_two_term_difference() {
        let (_, r2) = relation_vectors();
        assert_eq!(r2.len(), 2);
        let id = Permutation::identity(5);
        assert_eq!(r2.coefficient(&TreeTerm::new(shape(1), id.clone()).unwrap()), int(1));
        assert_eq!(r2.coefficient(&TreeTerm::new(shape(3), id).unwrap()), int(-1));
    }

    #[test]
    fn r1_inner_block_is_reversed() {
        let (r1, r2) = relation_vectors();
        assert_eq!(r1.len(), 2);
        assert_eq!(r1.coefficient(&comb(2, &[1, 4, 3, 2, 5])), int(-1));
        let d = r1.sub(&r2).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficient(&comb(3, &[1, 2, 3, 4, 5])), int(1));
        assert_eq!(d.coefficient(&comb(2, &[1, 4, 3, 2, 5])), int(-1));
    }

    #[test]
    fn sigma_action_is_a_linear_group_action() {
        let (r1, r2) = relation_vectors();
        let s = Permutation::from_images(&[3, 1, 5, 2, 4]).unwrap();
        let t = Permutation::from_images(&[2, 1, 4, 5, 3]).unwrap();
        assert_eq!(sigma_action(&r1, &Permutation::identity(5)).unwrap(), r1);
        assert_eq!(sigma_action(&sigma_action(&r1, &s).unwrap(), &s.inverse()).unwrap(), r1);
        let sum = r1.add(&r2).unwrap();
        assert_eq!(
            sum.act(&s).unwrap(),
            r1.act(&s).unwrap().add(&r2.act(&s).unwrap()).unwrap()
        );
        assert_eq!(r1.act(&s).unwrap().act(&t).unwrap(), r1.act(&s.compose(&t)).unwrap());
        assert!(matches!(
            r1.act(&Permutation::identity(3)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn arity_five_ideal() {
        let ideal = ideal_component(5).unwrap();
        assert_eq!(ideal.rank(), 240);
        let (r1, r2) = relation_vectors();
        for sigma in Permutation::all(5) {
            assert!(ideal.contains(&r1.act(&sigma).unwrap()).unwrap());
        }
        let mut rng = crate::random::rng(11);
        let mut perms = Permutation::all(5);
        perms.shuffle(&mut rng);
        for sigma in perms.iter().take(20) {
            for v in ideal.spanning_vectors().iter().take(40) {
                assert!(ideal.contains(&v.act(sigma).unwrap()).unwrap());
            }
            assert!(ideal.contains(&r2.act(sigma).unwrap()).unwrap());
        }
        assert!(!ideal.contains(&OperadVector::term(comb(1, &[1, 2, 3, 4, 5]))).unwrap());
        assert!(matches!(ideal_component(3), Err(Error::UnsupportedArity(3))));
    }

    #[test]
    fn quotient_dims() {
        assert_eq!(quotient_dim(3).unwrap(), 6);
        assert_eq!(quotient_dim(5).unwrap(), 120);
        assert!(quotient_dim(4).is_err());
    }

    #[test]
    fn pairing_values() {
        let t1 = OperadVector::term(comb(1, &[1, 2, 3, 4, 5]));
        assert_eq!(pairing(&t1, &t1).unwrap(), int(1));
        let (r1, r2) = relation_vectors();
        let p = partial_relation();
        assert_eq!(pairing(&r1, &p).unwrap(), int(0));
        assert_eq!(pairing(&r2, &p).unwrap(), int(0));
        let tau = Permutation::transposition(5, 1, 3);
        let t2 = OperadVector::term(TreeTerm::new(shape(2), tau).unwrap());
        assert_eq!(pairing(&t2, &t2).unwrap(), int(-1));
        assert!(matches!(
            pairing(&t1, &OperadVector::generator()),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn pairing_is_perfect() {
        // each basis term pairs to ±1 with itself and 0 with every other term
        let comp = FreeComponent::new(5).unwrap();
        let mut rng = crate::random::rng(3);
        let mut idx: Vec<usize> = (0..comp.dim()).collect();
        idx.shuffle(&mut rng);
        for &i in idx.iter().take(30) {
            let x = OperadVector::term(comp.term(i));
            for j in 0..comp.dim() {
                let y = OperadVector::term(comp.term(j));
                let v = pairing(&x, &y).unwrap();
                if i == j {
                    assert!(v == int(1) || v == int(-1));
                } else {
                    assert_eq!(v, int(0));
                }
            }
        }
    }

    #[test]
    fn annihilator_is_the_partial_closure() {
        let ideal = ideal_component(5).unwrap();
        let perp = annihilator(&ideal).unwrap();
        assert_eq!(perp.rank(), 120);
        assert_eq!(perp.rank() + ideal.rank(), 360);
        for x in ideal.spanning_vectors().iter().take(50) {
            for y in perp.spanning_vectors().iter().take(20) {
                assert_eq!(pairing(x, y).unwrap(), int(0));
            }
        }
        assert!(perp.same_span(&sigma_closure(&partial_relation()).unwrap()));
        assert!(annihilator(&perp).unwrap().same_span(&ideal));
        assert!(dual_matches_partial_closure().unwrap());
    }

    #[test]
    fn ideal_closure_matches_full_orbit() {
        let (r1, r2) = relation_vectors();
        let mut fast = RelationSpace::from_vectors(5, [&r1, &r2]).unwrap();
        fast.close_under_symmetric_group();
        assert!(fast.same_span(&ideal_component(5).unwrap()));
    }
}
