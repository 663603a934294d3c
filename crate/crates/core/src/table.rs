//! Structure-constant tables of abstract n-ary algebras.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::{flatten, Tensor};

/// `μ(e_{i_1} ⊗ … ⊗ e_{i_n}) = Σ_t c^t_{i_1…i_n} e_t`, stored sparsely under the
/// key `(i_1, …, i_n, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NAryTable {
    n: usize,
    dim: usize,
    constants: BTreeMap<Vec<usize>, Rational>,
}

impl NAryTable {
    pub fn new<I>(n: usize, dim: usize, entries: I) -> Result<NAryTable>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        if n == 0 {
            return Err(Error::ShapeMismatch("table arity must be at least 1".into()));
        }
        let t = Tensor::new(n, 1, dim, entries)?;
        Ok(NAryTable::from_tensor_unchecked(&t))
    }

    pub(crate) fn from_map(n: usize, dim: usize, mut constants: BTreeMap<Vec<usize>, Rational>) -> NAryTable {
        constants.retain(|_, v| !v.is_zero());
        NAryTable { n, dim, constants }
    }

    pub fn zero(n: usize, dim: usize) -> NAryTable {
        NAryTable::from_map(n, dim, BTreeMap::new())
    }

    fn from_tensor_unchecked(t: &Tensor) -> NAryTable {
        NAryTable {
            n: t.p(),
            dim: t.dim(),
            constants: t.entries().map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// The algebra view of a (p, 1) tensor: an p-ary multiplication on E.
    pub fn from_tensor(t: &Tensor) -> Result<NAryTable> {
        if t.q() != 1 {
            return Err(Error::ShapeMismatch(format!(
                "only (p,1) tensors define an algebra on E; got ({},{})",
                t.p(),
                t.q()
            )));
        }
        Ok(NAryTable::from_tensor_unchecked(t))
    }

    pub fn to_tensor(&self) -> Tensor {
        Tensor::from_map(self.n, 1, self.dim, self.constants.clone())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, inputs: &[usize], t: usize) -> Rational {
        let mut key = inputs.to_vec();
        key.push(t);
        self.constants.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.constants.iter()
    }

    pub fn nnz(&self) -> usize {
        self.constants.len()
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> NAryTable {
        NAryTable::from_map(
            self.n,
            self.dim,
            self.constants.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        )
    }

    /// Evaluator on dense coordinate vectors of length `dim`.
    pub fn evaluator(&self) -> TableOp<'_> {
        let mut lookup: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for (key, v) in &self.constants {
            let (inputs, t) = key.split_at(self.n);
            lookup
                .entry(flatten(inputs, self.dim))
                .or_default()
                .push((t[0] - 1, v.clone()));
        }
        TableOp { table: self, lookup }
    }
}

/// A table prepared for repeated multilinear evaluation.
pub struct TableOp<'a> {
    table: &'a NAryTable,
    lookup: HashMap<usize, Vec<(usize, Rational)>>,
}

impl TableOp<'_> {
    pub fn table(&self) -> &NAryTable {
        self.table
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.table.dim];
        v[i - 1] = crate::rational::one();
        v
    }

    /// `μ(x_1, …, x_n)` extended multilinearly over the supports of the arguments.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        let (n, dim) = (self.table.n, self.table.dim);
        if args.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: args.len(),
            });
        }
        if let Some(bad) = args.iter().find(|a| a.len() != dim) {
            return Err(Error::DimMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        let supports: Vec<Vec<usize>> = args
            .iter()
            .map(|a| (0..dim).filter(|&i| !a[i].is_zero()).collect())
            .collect();
        let mut out = vec![Rational::zero(); dim];
        if supports.iter().any(|s| s.is_empty()) {
            return Ok(out);
        }
        let mut cursor = vec![0usize; n];
        loop {
            let flat = cursor.iter().zip(&supports).fold(0, |acc, (&c, s)| acc * dim + s[c]);
            if let Some(row) = self.lookup.get(&flat) {
                let mut coeff = crate::rational::one();
                for (slot, (&c, s)) in cursor.iter().zip(&supports).enumerate() {
                    coeff *= &args[slot][s[c]];
                }
                for (t, v) in row {
                    out[*t] += &coeff * v;
                }
            }
            // odometer over the supports
            let mut slot = n;
            loop {
                if slot == 0 {
                    return Ok(out);
                }
                slot -= 1;
                cursor[slot] += 1;
                if cursor[slot] < supports[slot].len() {
                    break;
                }
                cursor[slot] = 0;
            }
        }
    }
}
