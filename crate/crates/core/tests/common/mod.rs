#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use splitz::gog::{GbsEdge, GbsGraph};
use splitz::presentations::FinitePresentation;
use splitz::words::{Generator, Word};
use splitz::zlinalg::IntMatrix;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn gen(name: &str) -> Generator {
    Generator::new(name).unwrap()
}

fn nonzero_label<R: Rng>(rng: &mut R, bound: i64) -> BigInt {
    let v = rng.gen_range(1..=bound);
    BigInt::from(if rng.gen_bool(0.5) { v } else { -v })
}

/// A connected graph with at most `max_v` vertices and `max_e` edges,
/// labels in [-bound, bound] minus zero.
pub fn random_graph<R: Rng>(rng: &mut R, max_v: usize, max_e: usize, bound: i64) -> GbsGraph {
    let n = rng.gen_range(1..=max_v);
    let vertices: Vec<Generator> = (0..n).map(|i| gen(&format!("v{i}"))).collect();
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((j, i));
    }
    let extra = rng.gen_range(0..=max_e - edges.len());
    for _ in 0..extra {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    edges.shuffle(rng);
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| {
            GbsEdge::new(
                format!("e{}", k + 1),
                vertices[a].clone(),
                vertices[b].clone(),
                nonzero_label(rng, bound),
                nonzero_label(rng, bound),
            )
        })
        .collect();
    GbsGraph::new(vertices, edges).expect("connected by construction")
}

pub fn random_word<R: Rng>(rng: &mut R, gens: &[Generator], max_len: usize, max_exp: i64) -> Word {
    let len = rng.gen_range(0..=max_len);
    let pairs = (0..len).map(|_| {
        let g = gens.choose(rng).unwrap().clone();
        (g, nonzero_label(rng, max_exp))
    });
    Word::new(pairs.collect::<Vec<_>>()).unwrap()
}

/// Random word that is trivial in the group: a product of conjugates of
/// relators, with the same random conjugator on both sides so that it stays
/// short.
pub fn random_trivial_word<R: Rng>(rng: &mut R, p: &FinitePresentation, max_len: usize) -> Word {
    if p.relators().is_empty() {
        return Word::identity();
    }
    loop {
        let u = random_word(rng, p.generators(), 3, 2);
        let r = p.relators().choose(rng).unwrap();
        let r = if rng.gen_bool(0.5) { r.clone() } else { r.invert() };
        let mut w = u.mul(&r).mul(&u.invert());
        if rng.gen_bool(0.5) {
            let v = random_word(rng, p.generators(), 2, 2);
            let s = p.relators().choose(rng).unwrap();
            w = w.mul(&v.mul(s).mul(&v.invert()));
        }
        let w = w.free_reduce();
        if w.len() <= max_len {
            return w;
        }
    }
}

/// Affine maps y -> a y + b over Q, composed left to right as group
/// elements act on the left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Affine {
    pub a: BigRational,
    pub b: BigRational,
}

impl Affine {
    pub fn identity() -> Self {
        Affine {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    /// self then other applied first: (self * other)(y) = self(other(y)).
    pub fn compose(&self, other: &Affine) -> Affine {
        Affine {
            a: &self.a * &other.a,
            b: &self.a * &other.b + &self.b,
        }
    }

    pub fn pow(&self, e: &BigInt) -> Affine {
        let base = if e.is_negative() { self.inverse() } else { self.clone() };
        let mut out = Affine::identity();
        let mut k = e.abs();
        while k.is_positive() {
            out = out.compose(&base);
            k -= 1;
        }
        out
    }

    pub fn inverse(&self) -> Affine {
        let a = self.a.recip();
        Affine {
            b: -(&a * &self.b),
            a,
        }
    }
}

/// Faithful image of BS(1,n) = <x, t | t x t^-1 = x^n> in Aff(Q):
/// x -> y + 1, t -> n y.
pub fn bs1n_affine(w: &Word, n: i64) -> Affine {
    let x = Affine {
        a: BigRational::one(),
        b: BigRational::one(),
    };
    let t = Affine {
        a: BigRational::from_integer(n.into()),
        b: BigRational::zero(),
    };
    w.syllables().iter().fold(Affine::identity(), |acc, s| {
        let m = match s.generator.name() {
            "x" => &x,
            "t" => &t,
            other => panic!("unexpected generator {other}"),
        };
        acc.compose(&m.pow(&s.exponent))
    })
}

/// F2 x Z with central generator `x`: trivial iff the x exponent sum is zero
/// and deleting x leaves a freely trivial word.
pub fn f2z_oracle(w: &Word) -> bool {
    let x = gen("x");
    if !w.exponent_sum(&x).is_zero() {
        return false;
    }
    let rest: Vec<(Generator, BigInt)> = w
        .syllables()
        .iter()
        .filter(|s| s.generator != x)
        .map(|s| (s.generator.clone(), s.exponent.clone()))
        .collect();
    Word::new(rest).unwrap().free_reduce().is_empty()
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let sparse = rng.gen_bool(0.3);
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if sparse && rng.gen_bool(0.6) {
                        BigInt::zero()
                    } else {
                        BigInt::from(rng.gen_range(-bound..=bound))
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(cols, data).unwrap()
}

fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .filter(|&j| !m[0][j].is_zero())
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * laplace_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(BigInt::zero(), |a, b| a + b),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors d_k = gcd of all k x k minors, for k = 1..min.
pub fn determinantal_divisors(m: &IntMatrix) -> Vec<BigInt> {
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    (1..=m.rows().min(m.cols()))
        .map(|k| {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<BigInt>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                    g = g.gcd(&laplace_det(&sub));
                }
            }
            g
        })
        .collect()
}

pub fn square_det(m: &IntMatrix) -> BigInt {
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    laplace_det(&rows)
}
