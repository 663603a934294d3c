//! Floating-point timing kernel. Each `(2,1)` tensor of dimension `d` is a
//! dense `d × d²` matrix `M`, and the chain product is
//! `M_1 · M_2ᵀ · M_3 · … · M_{2k+1}`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone)]
struct Dense {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Dense {
    fn random(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Dense {
        let data = (0..rows * cols).map(|_| rng.random_range(-1.0..1.0)).collect();
        Dense { rows, cols, data }
    }

    fn transpose(&self) -> Dense {
        let mut data = vec![0.0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        Dense {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn mul(&self, other: &Dense) -> Dense {
        debug_assert_eq!(self.cols, other.rows);
        let mut data = vec![0.0; self.rows * other.cols];
        for r in 0..self.rows {
            let out = &mut data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Dense {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }
}

pub struct BenchResult {
    pub seconds: f64,
    pub checksum: f64,
}

pub fn run(dim: usize, k: usize, iters: usize, seed: u64) -> BenchResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let args: Vec<Dense> = (0..2 * k + 1)
        .map(|_| Dense::random(dim, dim * dim, &mut rng))
        .collect();
    let factors: Vec<Dense> = args
        .iter()
        .enumerate()
        .map(|(i, m)| if i % 2 == 1 { m.transpose() } else { m.clone() })
        .collect();
    let start = Instant::now();
    let mut checksum = 0.0;
    for _ in 0..iters {
        let mut acc = factors[0].mul(&factors[1]);
        for f in &factors[2..] {
            acc = acc.mul(f);
        }
        checksum += acc.data.iter().sum::<f64>();
    }
    BenchResult {
        seconds: start.elapsed().as_secs_f64(),
        checksum,
    }
}
