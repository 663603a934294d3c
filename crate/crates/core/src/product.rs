//! Odd-arity chain products on `T^p_q(E)`.
//!
//! A chain of `2k + 1` tensors alternates maps `E^{⊗p} → E^{⊗q}` (odd
//! positions) with duals `E^{⊗q} → E^{⊗p}` (even positions):
//!
//! ```text
//! left-to-right:  φ_1 ∘ φ̃_2 ∘ φ_3 ∘ … ∘ φ̃_{2k} ∘ φ_{2k+1}
//! right-to-left:  φ_{2k+1} ∘ φ̃_{2k} ∘ … ∘ φ̃_2 ∘ φ_1
//! ```
//!
//! Each argument may first have its input slots permuted (`ᵗφ` for p = 2).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laws::MultilinearOp;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::table::NAryTable;
use crate::tensor::{all_tuples, MultiVector, Tensor};

/// The order-reversing involution of Σ_{2k+1}.
pub fn s_k(k: usize) -> Permutation {
    assert!(k >= 1, "s_k needs k >= 1");
    Permutation::reversal(2 * k + 1)
}

/// `Φ_σ(e_{i_1} ⊗ … ⊗ e_{i_n}) = e_{i_{σ⁻¹(1)}} ⊗ … ⊗ e_{i_{σ⁻¹(n)}}`, extended linearly.
pub fn phi_sigma(sigma: &Permutation, v: &MultiVector) -> Result<MultiVector> {
    if sigma.degree() != v.arity() {
        return Err(Error::ArityMismatch {
            expected: v.arity(),
            found: sigma.degree(),
        });
    }
    Ok(v.map_basis(|idx| sigma.permute_slots(idx)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `φ_1 ∘ φ̃_2 ∘ … ∘ φ_{2k+1}`: `φ_{2k+1}` acts first.
    LeftToRight,
    /// `φ_{2k+1} ∘ φ̃_{2k} ∘ … ∘ φ_1`: `φ_1` acts first.
    RightToLeft,
}

impl Orientation {
    pub fn code(self) -> &'static str {
        match self {
            Orientation::LeftToRight => "ltr",
            Orientation::RightToLeft => "rtl",
        }
    }

    pub fn from_code(s: &str) -> Option<Orientation> {
        match s {
            "ltr" => Some(Orientation::LeftToRight),
            "rtl" => Some(Orientation::RightToLeft),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub k: usize,
    pub orientation: Orientation,
    /// One input-slot permutation per argument; `None` means all identity.
    pub transpose: Option<Vec<Permutation>>,
}

impl ProductSpec {
    pub fn new(k: usize, orientation: Orientation) -> ProductSpec {
        ProductSpec {
            k,
            orientation,
            transpose: None,
        }
    }

    pub fn ltr(k: usize) -> ProductSpec {
        ProductSpec::new(k, Orientation::LeftToRight)
    }

    pub fn rtl(k: usize) -> ProductSpec {
        ProductSpec::new(k, Orientation::RightToLeft)
    }

    pub fn with_transpose(mut self, pattern: Vec<Permutation>) -> ProductSpec {
        self.transpose = Some(pattern);
        self
    }

    /// Pattern transposing the two inputs of the argument at 1-based `slot`
    /// only (the `ᵗφ` of the (2,1) case, generalized to any `p` as `ρ`).
    pub fn transposing(mut self, slot: usize, rho: Permutation) -> ProductSpec {
        let arity = self.arity();
        let p = rho.degree();
        let mut pattern = self
            .transpose
            .take()
            .unwrap_or_else(|| vec![Permutation::identity(p); arity]);
        pattern[slot - 1] = rho;
        self.transpose = Some(pattern);
        self
    }

    pub fn arity(&self) -> usize {
        2 * self.k + 1
    }

    pub fn validate(&self, p: usize) -> Result<()> {
        if self.k == 0 {
            return Err(Error::ShapeMismatch("chain parameter k must be at least 1".into()));
        }
        if let Some(pattern) = &self.transpose {
            if pattern.len() != self.arity() {
                return Err(Error::ArityMismatch {
                    expected: self.arity(),
                    found: pattern.len(),
                });
            }
            if let Some(bad) = pattern.iter().find(|r| r.degree() != p) {
                return Err(Error::ArityMismatch {
                    expected: p,
                    found: bad.degree(),
                });
            }
        }
        Ok(())
    }
}

/// The `(2k+1)`-ary chain product of `args` under `spec`.
pub fn mu_chain(spec: &ProductSpec, args: &[Tensor]) -> Result<Tensor> {
    let n = spec.arity();
    if args.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: args.len(),
        });
    }
    let (p, q, dim) = args[0].shape();
    if p == 0 || q == 0 {
        return Err(Error::ShapeMismatch(format!(
            "chain products need p, q >= 1 (got ({p},{q}))"
        )));
    }
    if let Some((i, a)) = args.iter().enumerate().find(|(_, a)| a.shape() != (p, q, dim)) {
        return Err(Error::ShapeMismatch(format!(
            "argument {} has shape ({},{}) dim {}, expected ({p},{q}) dim {dim}",
            i + 1,
            a.p(),
            a.q(),
            a.dim()
        )));
    }
    spec.validate(p)?;

    // maps in the order they act: odd positions E^p → E^q, even positions the
    // duals E^q → E^p
    let order: Vec<usize> = match spec.orientation {
        Orientation::LeftToRight => (1..=n).rev().collect(),
        Orientation::RightToLeft => (1..=n).collect(),
    };
    let mut acc: Option<Tensor> = None;
    for (step, &pos) in order.iter().enumerate() {
        let mut phi = args[pos - 1].clone();
        if let Some(pattern) = &spec.transpose {
            phi = phi.transpose_inputs(&pattern[pos - 1])?;
        }
        let map = if pos % 2 == 0 { phi.dual() } else { phi };
        let expect_input = if step % 2 == 0 { p } else { q };
        if map.p() != expect_input {
            return Err(Error::ShapeMismatch(format!(
                "chain step {} expects a map from E^{expect_input}",
                step + 1
            )));
        }
        acc = Some(match acc {
            None => map,
            Some(prev) => Tensor::compose(&prev, &map)?,
        });
    }
    Ok(acc.expect("chain has at least three factors"))
}

/// The four ternary products on `T^2_1(E)` built from one dual in the middle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mu3Variant {
    /// `φ_1 ∘ φ̃_2 ∘ φ_3`
    Mu,
    /// `φ_3 ∘ φ̃_2 ∘ φ_1`
    Mu2,
    /// `φ_1 ∘ φ̃_2 ∘ ᵗφ_3`
    Mu3,
    /// `φ_3 ∘ φ̃_2 ∘ ᵗφ_1`
    Mu4,
}

impl Mu3Variant {
    pub const ALL: [Mu3Variant; 4] = [Mu3Variant::Mu, Mu3Variant::Mu2, Mu3Variant::Mu3, Mu3Variant::Mu4];

    pub fn spec(self) -> ProductSpec {
        let swap = Permutation::transposition(2, 1, 2);
        match self {
            Mu3Variant::Mu => ProductSpec::ltr(1),
            Mu3Variant::Mu2 => ProductSpec::rtl(1),
            Mu3Variant::Mu3 => ProductSpec::ltr(1).transposing(3, swap),
            Mu3Variant::Mu4 => ProductSpec::rtl(1).transposing(1, swap),
        }
    }
}

pub fn mu3_variant(which: Mu3Variant, args: &[Tensor; 3]) -> Result<Tensor> {
    if let Some(a) = args.iter().find(|a| (a.p(), a.q()) != (2, 1)) {
        return Err(Error::ShapeMismatch(format!(
            "ternary variants act on (2,1) tensors, got ({},{})",
            a.p(),
            a.q()
        )));
    }
    mu_chain(&which.spec(), args)
}

/// The `s_k`-totally associative family obtained by transposing the inputs
/// of the outermost factor of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainVariant {
    /// `φ_1 ∘ φ̃_2 ∘ … ∘ φ_{2k+1}`
    Standard,
    /// `φ_{2k+1} ∘ φ̃_{2k} ∘ … ∘ φ_1`
    Mirrored,
    /// the standard chain with `ρ` applied to the inputs of `φ_1`
    TransposedFirst,
    /// the mirrored chain with `ρ` applied to the inputs of `φ_{2k+1}`
    MirroredTransposedLast,
}

impl ChainVariant {
    pub const ALL: [ChainVariant; 4] = [
        ChainVariant::Standard,
        ChainVariant::Mirrored,
        ChainVariant::TransposedFirst,
        ChainVariant::MirroredTransposedLast,
    ];

    pub fn spec(self, k: usize, rho: Permutation) -> ProductSpec {
        match self {
            ChainVariant::Standard => ProductSpec::ltr(k),
            ChainVariant::Mirrored => ProductSpec::rtl(k),
            ChainVariant::TransposedFirst => ProductSpec::ltr(k).transposing(1, rho),
            ChainVariant::MirroredTransposedLast => ProductSpec::rtl(k).transposing(2 * k + 1, rho),
        }
    }
}

/// A chain product viewed as an n-ary multiplication on `T^p_q(E)`.
#[derive(Clone, Debug)]
pub struct ChainAlgebra {
    pub spec: ProductSpec,
}

impl MultilinearOp for ChainAlgebra {
    type Elem = Tensor;

    fn arity(&self) -> usize {
        self.spec.arity()
    }

    fn eval(&self, args: &[Tensor]) -> Result<Tensor> {
        mu_chain(&self.spec, args)
    }
}

/// Structure table of a chain product restricted to the span of the unit
/// tensors at `basis` (index tuples of length p + q). The span must be
/// closed under the product; basis element `b` becomes `e_b` (1-based order
/// of `basis`).
pub fn chain_subalgebra_table(
    spec: &ProductSpec,
    p: usize,
    q: usize,
    dim: usize,
    basis: &[Vec<usize>],
) -> Result<NAryTable> {
    let n = spec.arity();
    let position: BTreeMap<&Vec<usize>, usize> = basis.iter().enumerate().map(|(i, b)| (b, i + 1)).collect();
    if position.len() != basis.len() {
        return Err(Error::DuplicateEntry(basis[0].clone()));
    }
    let units: Vec<Tensor> = basis
        .iter()
        .map(|b| Tensor::unit(p, q, dim, b.clone()))
        .collect::<Result<_>>()?;
    let mut entries: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for inputs in all_tuples(n, basis.len()) {
        let args: Vec<Tensor> = inputs.iter().map(|&i| units[i - 1].clone()).collect();
        let prod = mu_chain(spec, &args)?;
        for (idx, v) in prod.entries() {
            let Some(&t) = position.get(idx) else {
                return Err(Error::PreconditionFailed(format!(
                    "span is not closed: product of {inputs:?} has a component at {idx:?}"
                )));
            };
            let mut key = inputs.clone();
            key.push(t);
            entries.insert(key, v.clone());
        }
    }
    Ok(NAryTable::from_map(n, basis.len(), entries))
}

/// Structure table of a chain product on all of `T^p_q(E)`, with the unit
/// tensors ordered lexicographically by index tuple.
pub fn chain_table(spec: &ProductSpec, p: usize, q: usize, dim: usize) -> Result<NAryTable> {
    let basis: Vec<Vec<usize>> = all_tuples(p + q, dim).collect();
    chain_subalgebra_table(spec, p, q, dim, &basis)
}

/// Groupings of a five-fold nested ternary product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NestedGrouping {
    /// `μ(μ(φ_1, φ_2, φ_3), φ_4, φ_5)`
    Left,
    /// `μ(φ_1, μ(φ_a, φ_b, φ_c), φ_5)` with `(a, b, c)` a permutation of (2, 3, 4)
    Middle([usize; 3]),
    /// `μ(φ_1, φ_2, μ(φ_3, φ_4, φ_5))`
    Right,
}

/// Dense structure constants `c[t][i][j][k]` (0-based) of a (2,1) tensor,
/// `φ_t(e_i ⊗ e_j) = Σ_k c e_k`.
fn dense_21(args: &[Tensor; 5]) -> Result<(usize, Vec<Vec<Rational>>)> {
    let dim = args[0].dim();
    for a in args {
        if a.shape() != (2, 1, dim) {
            return Err(Error::ShapeMismatch(
                "nested oracle expects five (2,1) tensors of one dim".into(),
            ));
        }
    }
    let flat = |a: &Tensor| all_tuples(3, dim).map(|idx| a.get(&idx)).collect::<Vec<_>>();
    Ok((dim, args.iter().map(flat).collect()))
}

/// Structure constants of a nested ternary product computed directly from
/// the index sums (not by composing maps); an oracle for `mu_chain`.
///
/// With `C^k_{ij}(l)` the constants of `φ_l`:
/// * `Left`: `Σ_{k,l,m,u,r,s} C^k_{ij}(5) C^k_{lm}(4) C^u_{lm}(3) C^u_{rs}(2) C^t_{rs}(1)`
/// * `Right`: `Σ_{u,r,s} A^u_{ij}(3,4,5) C^u_{rs}(2) C^t_{rs}(1)`
/// * `Middle(a,b,c)`: `Σ_{k,l,m} C^k_{ij}(5) A^k_{lm}(a,b,c) C^t_{lm}(1)`
///
/// where `A^t_{ij}(x,y,z) = Σ_{k,l,m} C^k_{ij}(z) C^k_{lm}(y) C^t_{lm}(x)`.
pub fn structure_constants_nested(grouping: NestedGrouping, args: &[Tensor; 5]) -> Result<Tensor> {
    let (n, c) = dense_21(args)?;
    let at = |phi: usize, i: usize, j: usize, k: usize| &c[phi - 1][(i * n + j) * n + k];
    let ternary = |x: usize, y: usize, z: usize| -> Vec<Rational> {
        let mut a = vec![Rational::default(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for t in 0..n {
                    let mut s = Rational::default();
                    for k in 0..n {
                        for l in 0..n {
                            for m in 0..n {
                                s += at(z, i, j, k) * at(y, l, m, k) * at(x, l, m, t);
                            }
                        }
                    }
                    a[(i * n + j) * n + t] = s;
                }
            }
        }
        a
    };
    let mut out = BTreeMap::new();
    match grouping {
        NestedGrouping::Left => {
            for i in 0..n {
                for j in 0..n {
                    for t in 0..n {
                        let mut s = Rational::default();
                        for k in 0..n {
                            for l in 0..n {
                                for m in 0..n {
                                    for u in 0..n {
                                        for r in 0..n {
                                            for w in 0..n {
                                                s += at(5, i, j, k)
                                                    * at(4, l, m, k)
                                                    * at(3, l, m, u)
                                                    * at(2, r, w, u)
                                                    * at(1, r, w, t);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                        out.insert(vec![i + 1, j + 1, t + 1], s);
                    }
                }
            }
        }
        NestedGrouping::Right => {
            let inner = ternary(3, 4, 5);
            for i in 0..n {
                for j in 0..n {
                    for t in 0..n {
                        let mut s = Rational::default();
                        for u in 0..n {
                            for r in 0..n {
                                for w in 0..n {
                                    s += &inner[(i * n + j) * n + u] * at(2, r, w, u) * at(1, r, w, t);
                                }
                            }
                        }
                        out.insert(vec![i + 1, j + 1, t + 1], s);
                    }
                }
            }
        }
        NestedGrouping::Middle([a, b, cc]) => {
            let mut sorted = [a, b, cc];
            sorted.sort_unstable();
            if sorted != [2, 3, 4] {
                return Err(Error::ShapeMismatch(format!(
                    "middle grouping must permute (2,3,4), got ({a},{b},{cc})"
                )));
            }
            let inner = ternary(a, b, cc);
            for i in 0..n {
                for j in 0..n {
                    for t in 0..n {
                        let mut s = Rational::default();
                        for k in 0..n {
                            for l in 0..n {
                                for m in 0..n {
                                    s += at(5, i, j, k) * &inner[(l * n + m) * n + k] * at(1, l, m, t);
                                }
                            }
                        }
                        out.insert(vec![i + 1, j + 1, t + 1], s);
                    }
                }
            }
        }
    }
    Ok(Tensor::from_map(2, 1, n, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{check_sigma_total, check_total};
    use crate::random::{random_rational_tensor, random_tensor};
    use crate::rational::int;

    #[test]
    fn s_k_examples() {
        assert_eq!(s_k(1).images(), vec![3, 2, 1]);
        assert_eq!(s_k(1), Permutation::transposition(3, 1, 3));
        assert_eq!(s_k(2).images(), vec![5, 4, 3, 2, 1]);
        for k in 1..5 {
            assert!(s_k(k).compose(&s_k(k)).is_identity());
        }
    }

    #[test]
    fn phi_sigma_examples() {
        let v = MultiVector::basis(3, &[1, 2, 3]).unwrap();
        assert_eq!(phi_sigma(&Permutation::identity(3), &v).unwrap(), v);
        let tau12 = Permutation::transposition(3, 1, 2);
        assert_eq!(
            phi_sigma(&tau12, &v).unwrap(),
            MultiVector::basis(3, &[2, 1, 3]).unwrap()
        );
        assert!(phi_sigma(&Permutation::identity(2), &v).is_err());
    }

    #[test]
    fn phi_sigma_is_a_left_action_on_all_basis_vectors() {
        let perms = Permutation::all(3);
        for idx in all_tuples(3, 2) {
            let v = MultiVector::basis(2, &idx).unwrap();
            for s in &perms {
                for t in &perms {
                    let lhs = phi_sigma(&s.compose(t), &v).unwrap();
                    let rhs = phi_sigma(s, &phi_sigma(t, &v).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "σ={s} τ={t} v={idx:?}");
                }
            }
        }
    }

    #[test]
    fn scalar_chains_multiply() {
        for k in 1..=3 {
            let n = 2 * k + 1;
            for (p, q) in [(2, 1), (1, 1), (2, 2)] {
                let args: Vec<Tensor> = (0..n)
                    .map(|i| Tensor::new(p, q, 1, [(vec![1; p + q], int(i as i64 + 2))]).unwrap())
                    .collect();
                let expected: i64 = (0..n as i64).map(|i| i + 2).product();
                let got = mu_chain(&ProductSpec::ltr(k), &args).unwrap();
                assert_eq!(got.get(&vec![1; p + q]), int(expected));
            }
        }
    }

    #[test]
    fn ternary_matches_structure_constant_formula() {
        // A^t_ij(1,2,3) = Σ C^k_ij(3) C^k_lm(2) C^t_lm(1)
        let phis: Vec<Tensor> = (0..3).map(|s| random_tensor(2, 1, 2, 40 + s, 3)).collect();
        let got = mu_chain(&ProductSpec::ltr(1), &phis).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                for t in 1..=2 {
                    let mut s = Rational::default();
                    for k in 1..=2 {
                        for l in 1..=2 {
                            for m in 1..=2 {
                                s += phis[2].get(&[i, j, k]) * phis[1].get(&[l, m, k]) * phis[0].get(&[l, m, t]);
                            }
                        }
                    }
                    assert_eq!(got.get(&[i, j, t]), s);
                }
            }
        }
    }

    #[test]
    fn arity_and_shape_errors() {
        let a = random_tensor(2, 1, 2, 1, 2);
        assert!(matches!(
            mu_chain(&ProductSpec::ltr(1), &[a.clone(), a.clone()]),
            Err(Error::ArityMismatch { expected: 3, found: 2 })
        ));
        let b = random_tensor(1, 1, 2, 1, 2);
        assert!(matches!(
            mu_chain(&ProductSpec::ltr(1), &[a.clone(), b, a.clone()]),
            Err(Error::ShapeMismatch(_))
        ));
        let spec = ProductSpec::ltr(1).with_transpose(vec![Permutation::identity(3); 3]);
        assert!(matches!(
            mu_chain(&spec, &[a.clone(), a.clone(), a.clone()]),
            Err(Error::ArityMismatch { .. })
        ));
        let degenerate = Tensor::new(0, 1, 2, [(vec![1], int(1))]).unwrap();
        assert!(matches!(
            mu_chain(
                &ProductSpec::ltr(1),
                &[degenerate.clone(), degenerate.clone(), degenerate]
            ),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn mu2_is_mu_with_reversed_arguments() {
        for seed in 0..10 {
            let [a, b, c] = [0, 1, 2].map(|s| random_rational_tensor(2, 1, 2, seed * 3 + s, 4));
            let lhs = mu3_variant(Mu3Variant::Mu2, &[a.clone(), b.clone(), c.clone()]).unwrap();
            let rhs = mu3_variant(Mu3Variant::Mu, &[c, b, a]).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mu3_equals_mu_on_symmetric_arguments() {
        let swap = Permutation::transposition(2, 1, 2);
        for seed in 0..10 {
            let args = [0, 1, 2].map(|s| {
                let t = random_tensor(2, 1, 2, 100 + seed * 3 + s, 4);
                t.add(&t.transpose_inputs(&swap).unwrap()).unwrap()
            });
            assert_eq!(
                mu3_variant(Mu3Variant::Mu3, &args).unwrap(),
                mu3_variant(Mu3Variant::Mu, &args).unwrap()
            );
        }
    }

    #[test]
    fn mu_and_mu2_differ_on_generic_inputs() {
        let args = [0, 1, 2].map(|s| random_tensor(2, 1, 2, 7 + s, 9));
        assert_ne!(
            mu3_variant(Mu3Variant::Mu, &args).unwrap(),
            mu3_variant(Mu3Variant::Mu2, &args).unwrap()
        );
    }

    #[test]
    fn nested_groupings_agree_with_composition() {
        let mu = ProductSpec::ltr(1);
        for seed in 0..5 {
            let phis: [Tensor; 5] = std::array::from_fn(|s| random_tensor(2, 1, 2, 500 + seed * 5 + s as u64, 3));
            let [a, b, c, d, e] = phis.clone();
            let left = mu_chain(
                &mu,
                &[
                    mu_chain(&mu, &[a.clone(), b.clone(), c.clone()]).unwrap(),
                    d.clone(),
                    e.clone(),
                ],
            )
            .unwrap();
            let middle = mu_chain(
                &mu,
                &[
                    a.clone(),
                    mu_chain(&mu, &[d.clone(), c.clone(), b.clone()]).unwrap(),
                    e.clone(),
                ],
            )
            .unwrap();
            let right = mu_chain(&mu, &[a, b, mu_chain(&mu, &[c, d, e]).unwrap()]).unwrap();
            assert_eq!(structure_constants_nested(NestedGrouping::Left, &phis).unwrap(), left);
            assert_eq!(
                structure_constants_nested(NestedGrouping::Middle([4, 3, 2]), &phis).unwrap(),
                middle
            );
            assert_eq!(structure_constants_nested(NestedGrouping::Right, &phis).unwrap(), right);
            assert_eq!(left, middle);
            assert_eq!(left, right);
        }
        let phis: [Tensor; 5] = std::array::from_fn(|_| random_tensor(2, 1, 2, 1, 1));
        assert!(structure_constants_nested(NestedGrouping::Middle([2, 2, 4]), &phis).is_err());
    }

    #[test]
    fn nested_scalars_multiply_regardless_of_grouping() {
        let phis: [Tensor; 5] =
            std::array::from_fn(|i| Tensor::new(2, 1, 1, [(vec![1, 1, 1], int(i as i64 + 2))]).unwrap());
        for g in [
            NestedGrouping::Left,
            NestedGrouping::Middle([2, 3, 4]),
            NestedGrouping::Middle([4, 3, 2]),
            NestedGrouping::Right,
        ] {
            assert_eq!(structure_constants_nested(g, &phis).unwrap().get(&[1, 1, 1]), int(720));
        }
    }

    #[test]
    fn cubic_matrix_table_is_tau13_but_not_plainly_associative() {
        let table = chain_table(&ProductSpec::ltr(1), 2, 1, 2).unwrap();
        assert_eq!(table.dim(), 8);
        assert!(check_sigma_total(&table, &s_k(1)).unwrap().holds);
        assert!(!check_total(&table).holds);
    }

    #[test]
    fn subalgebra_must_be_closed() {
        // unit (1,1) tensors [i, j] are the matrix units E_ji; span{E11, E12}
        // is closed under A·Bᵀ·C, span{E21, E22, E11} is not (E11·E12·E22 = E12)
        let rows = chain_subalgebra_table(&ProductSpec::ltr(1), 1, 1, 2, &[vec![1, 1], vec![2, 1]]).unwrap();
        // μ(e_a, e_b, e_c) = δ_ab e_c
        assert_eq!(rows.get(&[1, 1, 2], 2), int(1));
        assert_eq!(rows.get(&[1, 2, 2], 2), int(0));
        let err = chain_subalgebra_table(&ProductSpec::ltr(1), 1, 1, 2, &[vec![1, 2], vec![2, 2], vec![1, 1]]);
        assert!(matches!(err, Err(Error::PreconditionFailed(_))));
    }
}
