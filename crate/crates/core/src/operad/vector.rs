use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::tree::{compose_terms, enumerate_shapes, Tree, TreeShape, TreeTerm};
use crate::error::{Error, Result};
use crate::linalg::SparseRow;
use crate::perm::Permutation;
use crate::rational::Rational;

/// A finite linear combination of tree terms of one arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadVector {
    arity: usize,
    coeffs: BTreeMap<TreeTerm, Rational>,
}

impl OperadVector {
    pub fn zero(arity: usize) -> OperadVector {
        OperadVector {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn term(t: TreeTerm) -> OperadVector {
        OperadVector::from_terms(t.arity(), [(t, Rational::one())]).expect("single term")
    }

    pub fn generator() -> OperadVector {
        OperadVector::term(TreeTerm::generator())
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (TreeTerm, Rational)>) -> Result<OperadVector> {
        let mut v = OperadVector::zero(arity);
        for (t, c) in terms {
            if t.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: t.arity(),
                });
            }
            v.accumulate(t, c);
        }
        Ok(v)
    }

    fn accumulate(&mut self, t: TreeTerm, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TreeTerm, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, t: &TreeTerm) -> Rational {
        self.coeffs.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &OperadVector) -> Result<OperadVector> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.accumulate(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &OperadVector) -> Result<OperadVector> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> OperadVector {
        if c.is_zero() {
            return OperadVector::zero(self.arity);
        }
        OperadVector {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    /// Right Σ-action, termwise.
    pub fn act(&self, sigma: &Permutation) -> Result<OperadVector> {
        let mut out = OperadVector::zero(self.arity);
        for (t, c) in &self.coeffs {
            out.coeffs.insert(t.act(sigma)?, c.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of `compose_terms`.
    pub fn compose(&self, i: usize, g: &OperadVector) -> Result<OperadVector> {
        if i == 0 || i > self.arity {
            return Err(Error::SlotOutOfRange {
                slot: i,
                arity: self.arity,
            });
        }
        let mut out = OperadVector::zero(self.arity + g.arity - 1);
        for (a, x) in &self.coeffs {
            for (b, y) in &g.coeffs {
                out.accumulate(compose_terms(a, i, b)?, x * y);
            }
        }
        Ok(out)
    }
}

/// The basis of the free operad in one arity, indexed by
/// `shape_index · arity! + rank(labeling)`.
#[derive(Clone, Debug)]
pub struct FreeComponent {
    arity: usize,
    shapes: Vec<TreeShape>,
    shape_index: HashMap<Tree, usize>,
    perms: usize,
}

impl FreeComponent {
    pub fn new(arity: usize) -> Result<FreeComponent> {
        let shapes = enumerate_shapes(arity)?;
        let shape_index = shapes.iter().enumerate().map(|(i, s)| (s.tree().clone(), i)).collect();
        Ok(FreeComponent {
            arity,
            shapes,
            shape_index,
            perms: (1..=arity).product(),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.shapes.len() * self.perms
    }

    pub fn shapes(&self) -> &[TreeShape] {
        &self.shapes
    }

    pub fn index(&self, t: &TreeTerm) -> Result<usize> {
        if t.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: t.arity(),
            });
        }
        let s = self.shape_index[t.shape().tree()];
        Ok(s * self.perms + t.labeling().rank())
    }

    pub fn term(&self, index: usize) -> TreeTerm {
        let (s, r) = (index / self.perms, index % self.perms);
        TreeTerm::new(self.shapes[s].clone(), Permutation::unrank(self.arity, r)).expect("degree matches")
    }

    /// Index of `term(index) · sigma`.
    pub fn act_index(&self, index: usize, sigma: &Permutation) -> usize {
        let (s, r) = (index / self.perms, index % self.perms);
        s * self.perms + Permutation::unrank(self.arity, r).compose(sigma).rank()
    }

    pub fn to_row(&self, v: &OperadVector) -> Result<SparseRow> {
        let mut row = v
            .terms()
            .map(|(t, c)| Ok((self.index(t)?, c.clone())))
            .collect::<Result<SparseRow>>()?;
        row.sort_by_key(|(c, _)| *c);
        Ok(row)
    }

    pub fn from_row(&self, row: &[(usize, Rational)]) -> OperadVector {
        OperadVector::from_terms(self.arity, row.iter().map(|(i, c)| (self.term(*i), c.clone())))
            .expect("terms share the component arity")
    }
}
