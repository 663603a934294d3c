//! Tensor products `(V ⊗ W, μ ⊗ μ̃)` of n-ary algebras.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laws::{check_sigma_total, nest, Linear};
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::table::NAryTable;
use crate::tensor::all_tuples;

/// `V ⊗ W` with basis `e_i ⊗ f_j` flattened to `(i - 1)·dim W + j`, and
/// constants `c^{(t,u)}_{(i_1,j_1)…(i_n,j_n)} = a^t_{i_1…i_n} · b^u_{j_1…j_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductAlgebra {
    pub left: NAryTable,
    pub right: NAryTable,
    pub table: NAryTable,
}

pub fn flatten_pair(i: usize, j: usize, right_dim: usize) -> usize {
    (i - 1) * right_dim + j
}

pub fn tensor_algebra(a: &NAryTable, b: &NAryTable) -> Result<ProductAlgebra> {
    let n = a.arity();
    if b.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: b.arity(),
        });
    }
    let mw = b.dim();
    let mut entries: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (ka, va) in a.entries() {
        for (kb, vb) in b.entries() {
            let key: Vec<usize> = ka.iter().zip(kb).map(|(&i, &j)| flatten_pair(i, j, mw)).collect();
            entries.insert(key, va * vb);
        }
    }
    Ok(ProductAlgebra {
        left: a.clone(),
        right: b.clone(),
        table: NAryTable::from_map(n, a.dim() * mw, entries),
    })
}

/// Verdicts of the two sides of the current-algebra equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurrentVerdict {
    /// `V ⊗ W` is `s_k`-totally associative.
    pub forward: bool,
    /// `W` is `s_k`-totally associative.
    pub backward: bool,
}

/// Whether `μ(μ(x_1, …, x_n), x_{n+1}, …)` is nonzero on some basis input.
fn has_nonzero_square(a: &NAryTable) -> bool {
    let n = a.arity();
    let op = a.evaluator();
    let id = Permutation::identity(n);
    all_tuples(2 * n - 1, a.dim()).any(|input| {
        let xs: Vec<Vec<Rational>> = input.iter().map(|&i| op.basis_vector(i)).collect();
        !nest(&op, &xs, 0, &id).expect("shapes are consistent").is_zero()
    })
}

/// Requires `a` to be `s_k`-totally associative of arity `2k + 1` with
/// `μ ∘ (μ ⊗ I) ≠ 0`. Reports both verdicts so callers can test they agree.
pub fn verify_current_iff(a: &NAryTable, b: &NAryTable, k: usize) -> Result<CurrentVerdict> {
    let sigma = Permutation::reversal(2 * k + 1);
    if a.arity() != 2 * k + 1 {
        return Err(Error::ArityMismatch {
            expected: 2 * k + 1,
            found: a.arity(),
        });
    }
    if !has_nonzero_square(a) {
        return Err(Error::PreconditionFailed(
            "left factor has μ ∘ (μ ⊗ I) = 0, so it cannot detect the law in the right factor".into(),
        ));
    }
    if !check_sigma_total(a, &sigma)?.holds {
        return Err(Error::PreconditionFailed(format!(
            "left factor is not s_{k}-totally associative"
        )));
    }
    let product = tensor_algebra(a, b)?;
    Ok(CurrentVerdict {
        forward: check_sigma_total(&product.table, &sigma)?.holds,
        backward: check_sigma_total(b, &sigma)?.holds,
    })
}
