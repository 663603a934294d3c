//! Sparse exact elimination.
//!
//! Rows are kept over the integers and reduced fraction-free: eliminating the
//! leading entry of `r` with pivot row `s` gives `s_0 r - r_0 s` divided by
//! its content. Each stored row has its pivot as its smallest column, which
//! is all that rank and membership queries need; `rref` finishes the
//! reduction over the rationals when a kernel is wanted.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type SparseRow = Vec<(usize, Rational)>;
type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and removes zero entries; the row must be sorted.
fn to_int_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect()
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let negate = first.1.is_negative();
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a·x - b·y` on sorted sparse rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: HashMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon {
            ncols,
            pivots: HashMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce_int(&self, mut row: IntRow) -> IntRow {
        make_primitive(&mut row);
        while let Some((lead, lead_val)) = row.first().cloned() {
            let Some(pivot) = self.pivots.get(&lead) else { break };
            let g = lead_val.gcd(&pivot[0].1);
            let a = &pivot[0].1 / &g;
            let b = &lead_val / &g;
            row = combine(&a, &row, &b, pivot);
            make_primitive(&mut row);
        }
        row
    }

    /// Adds `row` to the span; returns true if the rank grew.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut sorted = row.to_vec();
        sorted.sort_by_key(|(c, _)| *c);
        debug_assert!(sorted.iter().all(|(c, _)| *c < self.ncols));
        self.insert_int(to_int_row(&sorted))
    }

    pub(crate) fn insert_int(&mut self, row: IntRow) -> bool {
        let reduced = self.reduce_int(row);
        match reduced.first() {
            None => false,
            Some(&(lead, _)) => {
                self.pivots.insert(lead, reduced);
                true
            }
        }
    }

    pub fn contains(&self, row: &[(usize, Rational)]) -> bool {
        let mut sorted = row.to_vec();
        sorted.sort_by_key(|(c, _)| *c);
        self.reduce_int(to_int_row(&sorted)).is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    /// Reduced row echelon form: one row per pivot column, pivot entry 1 and
    /// zeros in every other pivot column.
    pub fn rref(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for &c in self.pivot_columns().iter().rev() {
            let row = &self.pivots[&c];
            let lead = Rational::from_integer(row[0].1.clone());
            let mut acc: BTreeMap<usize, Rational> = row
                .iter()
                .map(|(col, v)| (*col, Rational::from_integer(v.clone()) / &lead))
                .collect();
            // later pivot rows are already reduced, so one pass suffices
            let later: Vec<(usize, Rational)> = acc
                .iter()
                .filter(|(col, _)| **col != c && done.contains_key(col))
                .map(|(col, v)| (*col, v.clone()))
                .collect();
            for (col, factor) in later {
                for (cc, v) in &done[&col] {
                    let e = acc.entry(*cc).or_insert_with(Rational::zero);
                    *e -= &factor * v;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            done.insert(c, acc.into_iter().collect());
        }
        done
    }

    /// A basis of `{x : r · x = 0 for every row r}`, one vector per free column.
    pub fn kernel(&self) -> Vec<SparseRow> {
        let rref = self.rref();
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&pivot, row) in &rref {
            for (col, v) in row {
                if *col != pivot {
                    by_free.entry(*col).or_default().push((pivot, -v.clone()));
                }
            }
        }
        (0..self.ncols)
            .filter(|c| !rref.contains_key(c))
            .map(|free| {
                let mut v = by_free.remove(&free).unwrap_or_default();
                v.push((free, Rational::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}
