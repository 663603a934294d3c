//! Associativity laws for n-ary multiplications.
//!
//! Every law compares the `n` single nestings of `μ` in itself on inputs of
//! arity `2n - 1`. At nesting position `p` (0-based) the inner `μ` reads the
//! arguments `x_{p+1}, …, x_{p+n}` after the slot permutation `Φ_{σ^p}`:
//!
//! ```text
//! nest_p = μ(x_1, …, x_p, μ(Φ_{σ^p}(x_{p+1} ⊗ … ⊗ x_{p+n})), x_{p+n+1}, …)
//! ```
//!
//! * total: `nest_0 = nest_p` for every `p`;
//! * partial: `Σ_p (-1)^{p(n-1)} (-1)^{p·ε(σ)} nest_p = 0`, with `ε(σ)` the
//!   parity of `σ`.
//!
//! The plain laws are the `σ = id` cases.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::table::{NAryTable, TableOp};
use crate::tensor::{all_tuples, Tensor};

/// The vector-space operations the law evaluator needs from algebra elements.
pub trait Linear: Clone + PartialEq {
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Coordinates used when reporting a violation.
    fn coordinates(&self) -> Vec<Rational>;
}

impl Linear for Vec<Rational> {
    fn add(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a + b).collect()
    }

    fn scale(&self, c: &Rational) -> Self {
        self.iter().map(|a| a * c).collect()
    }

    fn is_zero(&self) -> bool {
        self.iter().all(Zero::is_zero)
    }

    fn coordinates(&self) -> Vec<Rational> {
        self.clone()
    }
}

impl Linear for Tensor {
    fn add(&self, other: &Self) -> Self {
        Tensor::add(self, other).expect("law terms share one tensor shape")
    }

    fn scale(&self, c: &Rational) -> Self {
        Tensor::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        Tensor::is_zero(self)
    }

    fn coordinates(&self) -> Vec<Rational> {
        all_tuples(self.p() + self.q(), self.dim())
            .map(|i| self.get(&i))
            .collect()
    }
}

/// An n-ary multiplication on some vector space.
pub trait MultilinearOp {
    type Elem: Linear;
    fn arity(&self) -> usize;
    fn eval(&self, args: &[Self::Elem]) -> Result<Self::Elem>;
}

impl MultilinearOp for TableOp<'_> {
    type Elem = Vec<Rational>;

    fn arity(&self) -> usize {
        self.table().arity()
    }

    fn eval(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        TableOp::eval(self, args)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawKind {
    Partial,
    Total,
    SigmaPartial,
    SigmaTotal,
}

impl LawKind {
    pub fn name(self) -> &'static str {
        match self {
            LawKind::Partial => "partial",
            LawKind::Total => "total",
            LawKind::SigmaPartial => "sigma-partial",
            LawKind::SigmaTotal => "sigma-total",
        }
    }

    pub fn from_name(s: &str) -> Option<LawKind> {
        match s {
            "partial" => Some(LawKind::Partial),
            "total" => Some(LawKind::Total),
            "sigma-partial" => Some(LawKind::SigmaPartial),
            "sigma-total" => Some(LawKind::SigmaTotal),
            _ => None,
        }
    }

    pub fn needs_sigma(self) -> bool {
        matches!(self, LawKind::SigmaPartial | LawKind::SigmaTotal)
    }

    fn is_total(self) -> bool {
        matches!(self, LawKind::Total | LawKind::SigmaTotal)
    }
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    kind: LawKind,
    sigma: Permutation,
}

impl Law {
    pub fn total(n: usize) -> Law {
        Law {
            kind: LawKind::Total,
            sigma: Permutation::identity(n),
        }
    }

    pub fn partial(n: usize) -> Law {
        Law {
            kind: LawKind::Partial,
            sigma: Permutation::identity(n),
        }
    }

    pub fn sigma_total(sigma: Permutation) -> Law {
        Law {
            kind: LawKind::SigmaTotal,
            sigma,
        }
    }

    pub fn sigma_partial(sigma: Permutation) -> Law {
        Law {
            kind: LawKind::SigmaPartial,
            sigma,
        }
    }

    pub fn kind(&self) -> LawKind {
        self.kind
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn arity(&self) -> usize {
        self.sigma.degree()
    }

    /// The sign `(-1)^{p(n-1)} (-1)^{p·ε(σ)}` of nesting `p` in the partial law.
    pub fn partial_sign(&self, p: usize) -> i32 {
        let n = self.arity();
        let exponent = p * (n - 1) + p * self.sigma.parity() as usize;
        if exponent.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `μ(x_1, …, x_p, μ(Φ_φ(x_{p+1}, …, x_{p+n})), …)` with `p` 0-based.
pub fn nest<O: MultilinearOp>(op: &O, xs: &[O::Elem], position: usize, phi: &Permutation) -> Result<O::Elem> {
    let n = op.arity();
    if xs.len() != 2 * n - 1 {
        return Err(Error::ArityMismatch {
            expected: 2 * n - 1,
            found: xs.len(),
        });
    }
    if position >= n {
        return Err(Error::SlotOutOfRange {
            slot: position,
            arity: n,
        });
    }
    let inner = op.eval(&phi.permute_slots(&xs[position..position + n]))?;
    let mut outer = Vec::with_capacity(n);
    outer.extend_from_slice(&xs[..position]);
    outer.push(inner);
    outer.extend_from_slice(&xs[position + n..]);
    op.eval(&outer)
}

/// Where and how a law fails on one input tuple. For total laws `position`
/// is the first nesting that disagrees with `nest_0`; for partial laws it is
/// absent, `lhs` is the signed sum and `rhs` is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<E> {
    pub position: Option<usize>,
    pub lhs: E,
    pub rhs: E,
}

/// Evaluates `law` on one tuple of `2n - 1` elements.
pub fn violation<O: MultilinearOp>(op: &O, law: &Law, xs: &[O::Elem]) -> Result<Option<Violation<O::Elem>>> {
    let n = op.arity();
    if law.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: law.arity(),
        });
    }
    let lhs = nest(op, xs, 0, &Permutation::identity(n))?;
    if law.kind.is_total() {
        for p in 1..n {
            let rhs = nest(op, xs, p, &law.sigma.pow(p))?;
            if rhs != lhs {
                return Ok(Some(Violation {
                    position: Some(p),
                    lhs,
                    rhs,
                }));
            }
        }
        Ok(None)
    } else {
        let mut sum = lhs.clone();
        for p in 1..n {
            let term = nest(op, xs, p, &law.sigma.pow(p))?;
            sum = sum.add(&term.scale(&crate::rational::int(law.partial_sign(p) as i64)));
        }
        if sum.is_zero() {
            Ok(None)
        } else {
            let rhs = sum.scale(&Rational::zero());
            Ok(Some(Violation {
                position: None,
                lhs: sum,
                rhs,
            }))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub holds: bool,
    pub law: LawKind,
    /// Present for the σ-laws.
    pub sigma: Option<Vec<usize>>,
    /// 1-based nesting position of a total-law violation, i.e. the `p` of
    /// `I_p ⊗ μ ⊗ I_{n-p-1}`.
    pub position: Option<usize>,
    pub input: Option<Vec<usize>>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

/// Exhaustive check over all basis inputs of arity `2n - 1`, in lexicographic
/// order; the first violating input is reported.
pub fn check(table: &NAryTable, law: &Law) -> Result<LawReport> {
    let n = table.arity();
    if law.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: law.arity(),
        });
    }
    let op = table.evaluator();
    let sigma = law.kind.needs_sigma().then(|| law.sigma.images());
    for input in all_tuples(2 * n - 1, table.dim()) {
        let xs: Vec<Vec<Rational>> = input.iter().map(|&i| op.basis_vector(i)).collect();
        if let Some(v) = violation(&op, law, &xs)? {
            return Ok(LawReport {
                holds: false,
                law: law.kind,
                sigma,
                position: v.position,
                input: Some(input),
                lhs: v.lhs,
                rhs: v.rhs,
            });
        }
    }
    Ok(LawReport {
        holds: true,
        law: law.kind,
        sigma,
        position: None,
        input: None,
        lhs: Vec::new(),
        rhs: Vec::new(),
    })
}

pub fn check_total(table: &NAryTable) -> LawReport {
    check(table, &Law::total(table.arity())).expect("law arity matches table")
}

pub fn check_partial(table: &NAryTable) -> LawReport {
    check(table, &Law::partial(table.arity())).expect("law arity matches table")
}

pub fn check_sigma_total(table: &NAryTable, sigma: &Permutation) -> Result<LawReport> {
    check(table, &Law::sigma_total(sigma.clone()))
}

pub fn check_sigma_partial(table: &NAryTable, sigma: &Permutation) -> Result<LawReport> {
    check(table, &Law::sigma_partial(sigma.clone()))
}

/// True iff `μ ∘_i μ` vanishes on every basis input for every slot `i`.
pub fn check_nilpotent2(table: &NAryTable) -> bool {
    let n = table.arity();
    let op = table.evaluator();
    let id = Permutation::identity(n);
    all_tuples(2 * n - 1, table.dim()).all(|input| {
        let xs: Vec<Vec<Rational>> = input.iter().map(|&i| op.basis_vector(i)).collect();
        (0..n).all(|p| nest(&op, &xs, p, &id).expect("shapes are consistent").is_zero())
    })
}

/// Re-evaluates the two sides a report claims for its violating input.
pub fn reevaluate(table: &NAryTable, law: &Law, report: &LawReport) -> Result<Option<(Vec<Rational>, Vec<Rational>)>> {
    let Some(input) = &report.input else {
        return Ok(None);
    };
    let op = table.evaluator();
    let xs: Vec<Vec<Rational>> = input.iter().map(|&i| op.basis_vector(i)).collect();
    let n = table.arity();
    match report.position {
        Some(p) => {
            let lhs = nest(&op, &xs, 0, &Permutation::identity(n))?;
            let rhs = nest(&op, &xs, p, &law.sigma.pow(p))?;
            Ok(Some((lhs, rhs)))
        }
        None => Ok(violation(&op, law, &xs)?.map(|v| (v.lhs, v.rhs))),
    }
}
