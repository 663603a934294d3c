use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A planar rooted tree whose internal vertices have exactly three children.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Box<[Tree; 3]>),
}

impl Tree {
    pub fn node(children: [Tree; 3]) -> Tree {
        Tree::Node(Box::new(children))
    }

    /// The single-vertex tree, i.e. the generator `μ`.
    pub fn corolla() -> Tree {
        Tree::node([Tree::Leaf, Tree::Leaf, Tree::Leaf])
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(c) => c.iter().map(Tree::leaves).sum(),
        }
    }

    pub fn internal_vertices(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(c) => 1 + c.iter().map(Tree::internal_vertices).sum::<usize>(),
        }
    }

    /// Replaces the leaf at 1-based left-to-right `slot` with `other`.
    pub fn graft(&self, slot: usize, other: &Tree) -> Tree {
        fn go(t: &Tree, slot: &mut usize, other: &Tree) -> Tree {
            match t {
                Tree::Leaf => {
                    if *slot == 0 {
                        return Tree::Leaf;
                    }
                    *slot -= 1;
                    if *slot == 0 {
                        other.clone()
                    } else {
                        Tree::Leaf
                    }
                }
                Tree::Node(c) => Tree::node([go(&c[0], slot, other), go(&c[1], slot, other), go(&c[2], slot, other)]),
            }
        }
        assert!(slot >= 1 && slot <= self.leaves(), "graft slot out of range");
        let mut remaining = slot;
        go(self, &mut remaining, other)
    }

    /// All trees with `m` internal vertices, in canonical order: children
    /// sizes `(n_1, n_2, n_3)` with `n_1` descending, then `n_2` descending,
    /// then recursively.
    pub fn with_internal_vertices(m: usize) -> Vec<Tree> {
        if m == 0 {
            return vec![Tree::Leaf];
        }
        let mut out = Vec::new();
        for n1 in (0..m).rev() {
            for n2 in (0..m - n1).rev() {
                let n3 = m - 1 - n1 - n2;
                for a in Tree::with_internal_vertices(n1) {
                    for b in Tree::with_internal_vertices(n2) {
                        for c in Tree::with_internal_vertices(n3) {
                            out.push(Tree::node([a.clone(), b.clone(), c]));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("|"),
            Tree::Node(c) => write!(f, "({:?}{:?}{:?})", c[0], c[1], c[2]),
        }
    }
}

/// A tree with at least one vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TreeShape {
    tree: Tree,
}

impl TreeShape {
    pub fn new(tree: Tree) -> Result<TreeShape> {
        if tree.internal_vertices() == 0 {
            return Err(Error::UnsupportedArity(1));
        }
        Ok(TreeShape { tree })
    }

    pub fn corolla() -> TreeShape {
        TreeShape { tree: Tree::corolla() }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn arity(&self) -> usize {
        self.tree.leaves()
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if matches!(arity, 3 | 5 | 7) {
        Ok(())
    } else {
        Err(Error::UnsupportedArity(arity))
    }
}

/// All shapes with `arity` leaves (3, 5 or 7), in canonical order. At arity 5
/// the order is `μ∘₁μ, μ∘₂μ, μ∘₃μ`.
pub fn enumerate_shapes(arity: usize) -> Result<Vec<TreeShape>> {
    check_arity(arity)?;
    Ok(Tree::with_internal_vertices((arity - 1) / 2)
        .into_iter()
        .map(|tree| TreeShape { tree })
        .collect())
}

/// `|shapes| × arity!`.
pub fn free_dim(arity: usize) -> Result<usize> {
    let shapes = enumerate_shapes(arity)?.len();
    Ok(shapes * (1..=arity).product::<usize>())
}

/// `shape · σ`: the leaf in slot `s` carries input `σ⁻¹(s)`, so that
/// `(f·σ)(x_1, …, x_m) = f(x_{σ⁻¹(1)}, …, x_{σ⁻¹(m)})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TreeTerm {
    shape: TreeShape,
    labeling: Permutation,
}

impl TreeTerm {
    pub fn new(shape: TreeShape, labeling: Permutation) -> Result<TreeTerm> {
        if labeling.degree() != shape.arity() {
            return Err(Error::ArityMismatch {
                expected: shape.arity(),
                found: labeling.degree(),
            });
        }
        Ok(TreeTerm { shape, labeling })
    }

    /// Builds the term whose leaves, read left to right, carry `labels`.
    pub fn from_leaf_labels(shape: TreeShape, labels: &[usize]) -> Result<TreeTerm> {
        let inv = Permutation::from_images(labels)?;
        TreeTerm::new(shape, inv.inverse())
    }

    pub fn generator() -> TreeTerm {
        TreeTerm {
            shape: TreeShape::corolla(),
            labeling: Permutation::identity(3),
        }
    }

    pub fn shape(&self) -> &TreeShape {
        &self.shape
    }

    pub fn labeling(&self) -> &Permutation {
        &self.labeling
    }

    pub fn arity(&self) -> usize {
        self.shape.arity()
    }

    pub fn leaf_labels(&self) -> Vec<usize> {
        self.labeling.inverse().images()
    }

    /// Right action `(t·σ)`: the labeling becomes `labeling ∘ σ`.
    pub fn act(&self, sigma: &Permutation) -> Result<TreeTerm> {
        if sigma.degree() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: sigma.degree(),
            });
        }
        Ok(TreeTerm {
            shape: self.shape.clone(),
            labeling: self.labeling.compose(sigma),
        })
    }
}

/// `f ∘_i g`: feeds the output of `g` into input `i` of `f`. Inputs of `g`
/// become `i, …, i + |g| - 1`; inputs of `f` above `i` shift up by `|g| - 1`.
pub fn compose_terms(f: &TreeTerm, i: usize, g: &TreeTerm) -> Result<TreeTerm> {
    let (a, b) = (f.arity(), g.arity());
    if i == 0 || i > a {
        return Err(Error::SlotOutOfRange { slot: i, arity: a });
    }
    let slot = f.labeling.image(i);
    let f_labels = f.leaf_labels();
    let mut labels = Vec::with_capacity(a + b - 1);
    for (s, &x) in f_labels.iter().enumerate() {
        if s + 1 == slot {
            labels.extend(g.leaf_labels().iter().map(|y| y + i - 1));
        } else if x < i {
            labels.push(x);
        } else {
            labels.push(x + b - 1);
        }
    }
    let shape = TreeShape {
        tree: f.shape.tree.graft(slot, &g.shape.tree),
    };
    TreeTerm::from_leaf_labels(shape, &labels)
}
