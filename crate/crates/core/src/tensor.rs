//! Dense-in-principle, sparse-in-storage tensors of type (p, q) over the
//! rationals, read as linear maps `E^{⊗p} → E^{⊗q}`.
//!
//! An index tuple lists the `p` input (contravariant) indices followed by the
//! `q` output (covariant) indices, all 1-based. Missing entries are zero and
//! stored entries are never zero, so structural equality is value equality.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    p: usize,
    q: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, Rational>,
}

fn check_tuple(tuple: &[usize], len: usize, dim: usize) -> Result<()> {
    if tuple.len() != len {
        return Err(Error::ArityMismatch {
            expected: len,
            found: tuple.len(),
        });
    }
    if let Some(&index) = tuple.iter().find(|&&i| i == 0 || i > dim) {
        return Err(Error::IndexOutOfRange {
            index,
            dim,
            tuple: tuple.to_vec(),
        });
    }
    Ok(())
}

/// Row-major position of a 1-based tuple in `[1..dim]^len`.
pub(crate) fn flatten(tuple: &[usize], dim: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + (i - 1))
}

pub(crate) fn unflatten(mut flat: usize, len: usize, dim: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = flat % dim + 1;
        flat /= dim;
    }
    out
}

/// All tuples of `[1..dim]^len` in lexicographic order.
pub fn all_tuples(len: usize, dim: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = dim.pow(len as u32);
    (0..count).map(move |f| unflatten(f, len, dim))
}

impl Tensor {
    /// Builds a tensor from a sparse coefficient list, rejecting bad indices
    /// and repeated tuples. Zero coefficients are dropped.
    pub fn new<I>(p: usize, q: usize, dim: usize, entries: I) -> Result<Tensor>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        if dim == 0 || p + q == 0 {
            return Err(Error::ShapeMismatch(format!(
                "tensor needs dim >= 1 and p + q >= 1 (got p={p}, q={q}, dim={dim})"
            )));
        }
        let mut map = BTreeMap::new();
        for (idx, val) in entries {
            check_tuple(&idx, p + q, dim)?;
            if map.contains_key(&idx) {
                return Err(Error::DuplicateEntry(idx));
            }
            map.insert(idx, val);
        }
        map.retain(|_, v| !v.is_zero());
        Ok(Tensor {
            p,
            q,
            dim,
            entries: map,
        })
    }

    pub(crate) fn from_map(p: usize, q: usize, dim: usize, mut entries: BTreeMap<Vec<usize>, Rational>) -> Tensor {
        entries.retain(|_, v| !v.is_zero());
        Tensor { p, q, dim, entries }
    }

    pub fn zero(p: usize, q: usize, dim: usize) -> Tensor {
        Tensor::from_map(p, q, dim, BTreeMap::new())
    }

    /// The identity map of `E^{⊗n}` as an (n, n) tensor.
    pub fn identity(n: usize, dim: usize) -> Tensor {
        let entries = all_tuples(n, dim)
            .map(|t| {
                let mut idx = t.clone();
                idx.extend(t);
                (idx, crate::rational::one())
            })
            .collect();
        Tensor::from_map(n, n, dim, entries)
    }

    /// Single-entry tensor with coefficient 1 at `idx`.
    pub fn unit(p: usize, q: usize, dim: usize, idx: Vec<usize>) -> Result<Tensor> {
        Tensor::new(p, q, dim, [(idx, crate::rational::one())])
    }

    /// Builds a tensor from its matrix: row `r` is the flattened output tuple,
    /// column `c` the flattened input tuple (so `apply` is `M · v`).
    pub fn from_matrix(p: usize, q: usize, dim: usize, rows: &[Vec<Rational>]) -> Result<Tensor> {
        let (nr, nc) = (dim.pow(q as u32), dim.pow(p as u32));
        if rows.len() != nr || rows.iter().any(|r| r.len() != nc) {
            return Err(Error::ShapeMismatch(format!(
                "expected a {nr}x{nc} matrix for a ({p},{q}) tensor of dim {dim}"
            )));
        }
        let mut entries = BTreeMap::new();
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let mut idx = unflatten(c, p, dim);
                idx.extend(unflatten(r, q, dim));
                entries.insert(idx, v.clone());
            }
        }
        Ok(Tensor::from_map(p, q, dim, entries))
    }

    pub fn to_matrix(&self) -> Vec<Vec<Rational>> {
        let (nr, nc) = (self.dim.pow(self.q as u32), self.dim.pow(self.p as u32));
        let mut m = vec![vec![Rational::zero(); nc]; nr];
        for (idx, v) in &self.entries {
            let (i, j) = idx.split_at(self.p);
            m[flatten(j, self.dim)][flatten(i, self.dim)] = v.clone();
        }
        m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.p, self.q, self.dim)
    }

    pub fn get(&self, idx: &[usize]) -> Rational {
        self.entries.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Swaps the roles of input and output indices: a (p,q) tensor becomes the
    /// (q,p) tensor with the same coefficients. For (1,1) this is the transpose.
    pub fn dual(&self) -> Tensor {
        let entries = self
            .entries
            .iter()
            .map(|(idx, v)| {
                let (i, j) = idx.split_at(self.p);
                let mut swapped = j.to_vec();
                swapped.extend_from_slice(i);
                (swapped, v.clone())
            })
            .collect();
        Tensor::from_map(self.q, self.p, self.dim, entries)
    }

    /// Permutes input slots: the entry at `(i_{ρ(1)}, …, i_{ρ(p)}; J)` of the
    /// result is the entry at `(i_1, …, i_p; J)` of `self`.
    ///
    /// As a map this is `t ∘ Φ_ρ`, so two applications compose as a right
    /// action: `transpose_inputs(transpose_inputs(t, ρ'), ρ) = transpose_inputs(t, ρ' ∘ ρ)`.
    pub fn transpose_inputs(&self, rho: &Permutation) -> Result<Tensor> {
        if rho.degree() != self.p {
            return Err(Error::ArityMismatch {
                expected: self.p,
                found: rho.degree(),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|(idx, v)| {
                let mut out: Vec<usize> = (1..=self.p).map(|s| idx[rho.image(s) - 1]).collect();
                out.extend_from_slice(&idx[self.p..]);
                (out, v.clone())
            })
            .collect();
        Ok(Tensor::from_map(self.p, self.q, self.dim, entries))
    }

    pub fn apply(&self, v: &MultiVector) -> Result<MultiVector> {
        if v.arity != self.p {
            return Err(Error::ArityMismatch {
                expected: self.p,
                found: v.arity,
            });
        }
        if v.dim != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                found: v.dim,
            });
        }
        let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (idx, c) in &self.entries {
            let (i, j) = idx.split_at(self.p);
            if let Some(x) = v.coeffs.get(i) {
                *out.entry(j.to_vec()).or_insert_with(Rational::zero) += c * x;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(MultiVector {
            arity: self.q,
            dim: self.dim,
            coeffs: out,
        })
    }

    /// `g ∘ f`: apply `f` (a → b) first, then `g` (b → c). The coefficients are
    /// the contraction over the shared `b` indices.
    pub fn compose(f: &Tensor, g: &Tensor) -> Result<Tensor> {
        if f.q != g.p || f.dim != g.dim {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose ({},{}) dim {} with ({},{}) dim {}",
                f.p, f.q, f.dim, g.p, g.q, g.dim
            )));
        }
        let mut by_input: BTreeMap<&[usize], Vec<(&[usize], &Rational)>> = BTreeMap::new();
        for (idx, v) in &g.entries {
            let (j, k) = idx.split_at(g.p);
            by_input.entry(j).or_default().push((k, v));
        }
        let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (idx, a) in &f.entries {
            let (i, j) = idx.split_at(f.p);
            if let Some(row) = by_input.get(j) {
                for (k, b) in row {
                    let mut key = i.to_vec();
                    key.extend_from_slice(k);
                    *out.entry(key).or_insert_with(Rational::zero) += a * *b;
                }
            }
        }
        Ok(Tensor::from_map(f.p, g.q, f.dim, out))
    }

    fn check_same_shape(&self, other: &Tensor) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "({},{}) dim {} vs ({},{}) dim {}",
                self.p, self.q, self.dim, other.p, other.q, other.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_same_shape(other)?;
        let mut entries = self.entries.clone();
        for (idx, v) in &other.entries {
            *entries.entry(idx.clone()).or_insert_with(Rational::zero) += v;
        }
        Ok(Tensor::from_map(self.p, self.q, self.dim, entries))
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.add(&other.scale(&-crate::rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        let entries = self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        Tensor::from_map(self.p, self.q, self.dim, entries)
    }
}

/// An element of `E^{⊗n}` in the basis `e_{i_1} ⊗ … ⊗ e_{i_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiVector {
    arity: usize,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl MultiVector {
    pub fn new<I>(arity: usize, dim: usize, coeffs: I) -> Result<MultiVector>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        let mut map: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (idx, c) in coeffs {
            check_tuple(&idx, arity, dim)?;
            *map.entry(idx).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(MultiVector {
            arity,
            dim,
            coeffs: map,
        })
    }

    pub fn basis(dim: usize, indices: &[usize]) -> Result<MultiVector> {
        MultiVector::new(indices.len(), dim, [(indices.to_vec(), crate::rational::one())])
    }

    pub fn zero(arity: usize, dim: usize) -> MultiVector {
        MultiVector {
            arity,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, idx: &[usize]) -> Rational {
        self.coeffs.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &MultiVector) -> Result<MultiVector> {
        if (self.arity, self.dim) != (other.arity, other.dim) {
            return Err(Error::ShapeMismatch("multivectors of different shape".into()));
        }
        let mut coeffs = self.coeffs.clone();
        for (idx, c) in &other.coeffs {
            *coeffs.entry(idx.clone()).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(MultiVector {
            arity: self.arity,
            dim: self.dim,
            coeffs,
        })
    }

    pub fn scale(&self, c: &Rational) -> MultiVector {
        let mut coeffs: BTreeMap<_, _> = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        coeffs.retain(|_, v: &mut Rational| !v.is_zero());
        MultiVector {
            arity: self.arity,
            dim: self.dim,
            coeffs,
        }
    }

    /// Rebuilds with every basis tuple mapped through `f` (must stay in range).
    pub(crate) fn map_basis(&self, f: impl Fn(&[usize]) -> Vec<usize>) -> MultiVector {
        let mut coeffs: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (idx, c) in &self.coeffs {
            *coeffs.entry(f(idx)).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        MultiVector {
            arity: self.arity,
            dim: self.dim,
            coeffs,
        }
    }
}
