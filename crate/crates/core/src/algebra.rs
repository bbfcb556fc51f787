//! Finite-dimensional associative algebras over the rationals.
//!
//! Everything is computed exactly except [`numerical_block_sizes`]. The
//! radical, the centre of `A/J(A)` and the commutator ideal of `A/J(A)` are all
//! solutions of rational linear systems, so their dimensions do not change
//! when scalars are extended to the complex numbers. That makes the block
//! counts in [`AlgebraSummary`] equal to the complex Wedderburn counts even
//! though the individual block sizes may not be visible over the rationals.

use nalgebra::DMatrix;
use num::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rational, Echelon, Rational};
use crate::semigroup::Semigroup;

/// A subspace of an algebra, as an echelon basis in algebra coordinates.
pub type Subspace = Echelon;

/// An algebra given by structure constants `e_i e_j = Σ_k c(i, j, k) e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalAlgebra {
    dim: usize,
    constants: Vec<Rational>,
    labels: Vec<String>,
}

impl RationalAlgebra {
    /// `constants[(i * dim + j) * dim + k]` is `c(i, j, k)`.
    pub fn new(dim: usize, constants: Vec<Rational>, labels: Vec<String>) -> Result<Self> {
        if constants.len() != dim * dim * dim || labels.len() != dim {
            return Err(Error::InvalidArgument(format!(
                "{dim}-dimensional algebra needs {} constants and {dim} labels",
                dim * dim * dim
            )));
        }
        let a = RationalAlgebra {
            dim,
            constants,
            labels,
        };
        if !a.is_associative() {
            return Err(Error::InvalidArgument(
                "structure constants are not associative".into(),
            ));
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = rational(1);
        v
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let (ei, ek) = (self.unit_vector(i), self.unit_vector(k));
                    let ij = self.basis_product(i, j).to_vec();
                    let jk = self.basis_product(j, k).to_vec();
                    self.mul(&ij, &ek) == self.mul(&ei, &jk)
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `tr(L_{e_i})`, the trace of left multiplication by a basis element.
    fn left_traces(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|m| (0..self.dim).map(|l| self.constant(m, l, l).clone()).sum())
            .collect()
    }

    /// The trace form `tr(L_{e_i e_j})`.
    pub fn trace_form(&self) -> Vec<Vec<Rational>> {
        let t = self.left_traces();
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        self.basis_product(i, j)
                            .iter()
                            .zip(&t)
                            .map(|(c, tm)| c * tm)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Span of the products `u v` for `u` in `left`, `v` in `right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for u in left.rows() {
            for v in right.rows() {
                rows.push(self.mul(u, v));
            }
        }
        Echelon::span(&rows, self.dim)
    }

    /// The two-sided ideal generated by a subspace.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let mut ideal = seed.clone();
        loop {
            let mut extra = Vec::new();
            for v in ideal.rows() {
                for i in 0..self.dim {
                    let e = self.unit_vector(i);
                    extra.push(self.mul(&e, v));
                    extra.push(self.mul(v, &e));
                }
            }
            let bigger = ideal.extend(&extra);
            if bigger.rank() == ideal.rank() {
                return ideal;
            }
            ideal = bigger;
        }
    }

    /// `A / I` for a two-sided ideal `I`, using the free columns of `I`'s
    /// echelon form as basis.
    pub fn quotient(&self, ideal: &Subspace) -> RationalAlgebra {
        let free = ideal.free_columns();
        let m = free.len();
        let mut constants = Vec::with_capacity(m * m * m);
        for &a in &free {
            for &b in &free {
                let r = ideal.reduce(self.basis_product(a, b));
                constants.extend(free.iter().map(|&c| r[c].clone()));
            }
        }
        let labels = free
            .iter()
            .map(|&c| format!("{}+I", self.labels[c]))
            .collect();
        RationalAlgebra {
            dim: m,
            constants,
            labels,
        }
    }

    /// `{x : xy = yx for all y}`.
    pub fn center(&self) -> Subspace {
        let d = self.dim;
        let mut rows = Vec::with_capacity(d * d);
        for j in 0..d {
            for k in 0..d {
                rows.push(
                    (0..d)
                        .map(|i| self.constant(i, j, k) - self.constant(j, i, k))
                        .collect::<Vec<_>>(),
                );
            }
        }
        Echelon::span(&nullspace(&rows, d), d)
    }

    /// The ideal generated by all commutators `ab − ba`.
    pub fn commutator_ideal(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v: Vec<Rational> = self
                    .basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .map(|(a, b)| a - b)
                    .collect();
                rows.push(v);
            }
        }
        self.ideal_closure(&Echelon::span(&rows, self.dim))
    }

    /// Left multiplication by `x`, as a float matrix acting on columns.
    fn left_matrix_f64(&self, x: &[Rational]) -> DMatrix<f64> {
        let d = self.dim;
        let mut m = DMatrix::zeros(d, d);
        for j in 0..d {
            let col = self.mul(x, &self.unit_vector(j));
            for (k, v) in col.iter().enumerate() {
                m[(k, j)] = v.to_f64().unwrap_or(f64::NAN);
            }
        }
        m
    }
}

/// `Q[S]`: one basis vector per element, `e_x e_y = e_{xy}`.
pub fn semigroup_algebra(s: &Semigroup) -> RationalAlgebra {
    let n = s.size();
    let mut constants = vec![Rational::zero(); n * n * n];
    for x in 0..n {
        for y in 0..n {
            constants[(x * n + y) * n + s.mul(x, y)] = rational(1);
        }
    }
    RationalAlgebra {
        dim: n,
        constants,
        labels: (0..n).map(|x| x.to_string()).collect(),
    }
}

/// `Q_0[S]`: the semigroup algebra with the zero of `S` identified with 0.
/// Basis vectors are the nonzero elements in ascending order.
pub fn contracted_algebra(s: &Semigroup) -> Result<RationalAlgebra> {
    let z = s.zero().ok_or_else(|| Error::NoZeroElement {
        what: "contracted algebra input".into(),
    })?;
    let basis: Vec<usize> = s.elements().filter(|&x| x != z).collect();
    let d = basis.len();
    let mut index = vec![usize::MAX; s.size()];
    for (i, &x) in basis.iter().enumerate() {
        index[x] = i;
    }
    let mut constants = vec![Rational::zero(); d * d * d];
    for (i, &x) in basis.iter().enumerate() {
        for (j, &y) in basis.iter().enumerate() {
            let p = s.mul(x, y);
            if p != z {
                constants[(i * d + j) * d + index[p]] = rational(1);
            }
        }
    }
    Ok(RationalAlgebra {
        dim: d,
        constants,
        labels: basis.iter().map(|x| x.to_string()).collect(),
    })
}

/// The Jacobson radical, as the kernel of the trace form `tr(L_{xy})`.
///
/// In characteristic zero `x` is in the radical iff `tr(L_{xy}) = 0` for every
/// `y`; the trace form is symmetric so its null space is the radical.
pub fn radical(a: &RationalAlgebra) -> Subspace {
    Echelon::span(&nullspace(&a.trace_form(), a.dim), a.dim)
}

/// Closed under multiplication by every basis element on both sides, and
/// some power vanishes.
pub fn is_nilpotent_ideal(a: &RationalAlgebra, j: &Subspace) -> bool {
    if a.ideal_closure(j).rank() != j.rank() {
        return false;
    }
    let mut power = j.clone();
    for _ in 0..=a.dim {
        if power.rank() == 0 {
            return true;
        }
        power = a.product_space(&power, j);
    }
    false
}

/// Radical dimension and the Wedderburn block statistics of `A/J(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub radical_dim: usize,
    pub num_blocks: usize,
    pub one_dim_blocks: usize,
}

impl AlgebraSummary {
    pub fn semisimple_dim(&self) -> usize {
        self.dim - self.radical_dim
    }
}

pub fn summary(a: &RationalAlgebra) -> AlgebraSummary {
    let j = radical(a);
    let semisimple = a.quotient(&j);
    AlgebraSummary {
        dim: a.dim,
        radical_dim: j.rank(),
        num_blocks: semisimple.center().rank(),
        one_dim_blocks: semisimple.dim - semisimple.commutator_ideal().rank(),
    }
}

pub const CLUSTER_TOLERANCE: f64 = 1e-6;
pub const MAX_BLOCK_ATTEMPTS: usize = 8;
const COEFF_RANGE: i64 = 100;

/// The block sizes `n_i` of `A/J(A) ≅ ⊕ M_{n_i}(C)`, in ascending order.
///
/// A random rational central element acts on block `i` as a scalar `λ_i`, so
/// left multiplication by it has eigenvalue `λ_i` with multiplicity `n_i²`.
/// Eigenvalues are clustered numerically and the result is checked against
/// the exact [`summary`]; a degenerate draw is retried with a fresh element.
pub fn numerical_block_sizes(a: &RationalAlgebra, seed: u64) -> Result<Vec<usize>> {
    let exact = summary(a);
    let semisimple = a.quotient(&radical(a));
    if semisimple.dim == 0 {
        return Ok(Vec::new());
    }
    let center = semisimple.center();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_BLOCK_ATTEMPTS {
        let mut c = vec![Rational::zero(); semisimple.dim];
        for z in center.rows() {
            let coeff = rational(rng.random_range(-COEFF_RANGE..=COEFF_RANGE));
            for (ci, zi) in c.iter_mut().zip(z) {
                *ci += &coeff * zi;
            }
        }
        let eigen = semisimple.left_matrix_f64(&c).complex_eigenvalues();
        let values: Vec<(f64, f64)> = eigen.iter().map(|z| (z.re, z.im)).collect();
        let Some(mut sizes) = cluster_sizes(&values)
            .into_iter()
            .map(exact_sqrt)
            .collect::<Option<Vec<usize>>>()
        else {
            continue;
        };
        sizes.sort_unstable();
        let ones = sizes.iter().filter(|&&s| s == 1).count();
        if sizes.len() == exact.num_blocks && ones == exact.one_dim_blocks {
            return Ok(sizes);
        }
    }
    Err(Error::NumericalAmbiguity {
        attempts: MAX_BLOCK_ATTEMPTS,
    })
}

fn exact_sqrt(k: usize) -> Option<usize> {
    let r = (k as f64).sqrt().round() as usize;
    (r * r == k).then_some(r)
}

/// Sizes of single-linkage clusters under relative distance `CLUSTER_TOLERANCE`.
fn cluster_sizes(values: &[(f64, f64)]) -> Vec<usize> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (values[i], values[j]);
            let dist = (a.0 - b.0).hypot(a.1 - b.1);
            let scale = 1f64.max(a.0.hypot(a.1)).max(b.0.hypot(b.1));
            if dist <= CLUSTER_TOLERANCE * scale {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    for i in 0..n {
        *counts.entry(find(&mut parent, i)).or_insert(0) += 1;
    }
    counts.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Semigroup {
        Semigroup::from_rows(
            &[
                vec![0, 0, 0, 0, 0],
                vec![0, 1, 2, 0, 0],
                vec![0, 0, 0, 1, 2],
                vec![0, 3, 4, 0, 0],
                vec![0, 0, 0, 3, 4],
            ],
            None,
        )
        .unwrap()
    }

    fn chain(n: usize) -> Semigroup {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
        Semigroup::from_rows(&rows, None).unwrap()
    }

    fn null(n: usize) -> Semigroup {
        Semigroup::from_flat(n, vec![0; n * n], None).unwrap()
    }

    fn cyclic_group(n: usize) -> Semigroup {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Semigroup::from_rows(&rows, None).unwrap()
    }

    /// Null space of the trace form computed straight from the definition
    /// `tr(L_x L_y)`, multiplying the left-regular matrices out.
    fn brute_radical_dim(a: &RationalAlgebra) -> usize {
        let d = a.dim();
        let lmat = |i: usize| -> Vec<Vec<Rational>> {
            (0..d)
                .map(|k| (0..d).map(|l| a.constant(i, l, k).clone()).collect())
                .collect()
        };
        let mats: Vec<_> = (0..d).map(lmat).collect();
        let gram: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut tr = Rational::zero();
                        for (k, row) in mats[i].iter().enumerate() {
                            for (l, v) in row.iter().enumerate() {
                                tr += v * &mats[j][l][k];
                            }
                        }
                        tr
                    })
                    .collect()
            })
            .collect();
        d - crate::linalg::rank(&gram, d)
    }

    #[test]
    fn b2_algebra() {
        let a = semigroup_algebra(&b2());
        assert_eq!(a.dim(), 5);
        assert!(a.is_associative());
        assert_eq!(
            summary(&a),
            AlgebraSummary {
                dim: 5,
                radical_dim: 0,
                num_blocks: 2,
                one_dim_blocks: 1
            }
        );
        assert_eq!(numerical_block_sizes(&a, 0).unwrap(), vec![1, 2]);
    }

    #[test]
    fn b2_contracted_is_one_matrix_block() {
        let a = contracted_algebra(&b2()).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(
            summary(&a),
            AlgebraSummary {
                dim: 4,
                radical_dim: 0,
                num_blocks: 1,
                one_dim_blocks: 0
            }
        );
        assert_eq!(numerical_block_sizes(&a, 3).unwrap(), vec![2]);
    }

    #[test]
    fn contracted_needs_a_zero() {
        assert!(matches!(
            contracted_algebra(&cyclic_group(2)),
            Err(Error::NoZeroElement { .. })
        ));
    }

    #[test]
    fn contracted_chain_and_null() {
        let a = contracted_algebra(&chain(2)).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.constant(0, 0, 0), &rational(1));
        let n = contracted_algebra(&null(4)).unwrap();
        assert_eq!(
            summary(&n),
            AlgebraSummary {
                dim: 3,
                radical_dim: 3,
                num_blocks: 0,
                one_dim_blocks: 0
            }
        );
        assert!(numerical_block_sizes(&n, 0).unwrap().is_empty());
    }

    #[test]
    fn semilattices_are_split_semisimple() {
        for d in 1..=5 {
            let a = semigroup_algebra(&chain(d));
            assert_eq!(
                summary(&a),
                AlgebraSummary {
                    dim: d,
                    radical_dim: 0,
                    num_blocks: d,
                    one_dim_blocks: d
                }
            );
            assert_eq!(numerical_block_sizes(&a, 7).unwrap(), vec![1; d]);
        }
    }

    #[test]
    fn null_semigroup_radical_matches_brute_force() {
        for n in 2..=6 {
            let a = semigroup_algebra(&null(n));
            let j = radical(&a);
            assert_eq!(j.rank(), n - 1);
            assert_eq!(brute_radical_dim(&a), n - 1);
            assert!(is_nilpotent_ideal(&a, &j));
        }
    }

    #[test]
    fn group_algebra_over_rationals_has_complex_blocks() {
        // Q[C3] = Q ⊕ Q(ω); over C that is three 1-dimensional blocks
        let a = semigroup_algebra(&cyclic_group(3));
        assert_eq!(
            summary(&a),
            AlgebraSummary {
                dim: 3,
                radical_dim: 0,
                num_blocks: 3,
                one_dim_blocks: 3
            }
        );
        assert_eq!(numerical_block_sizes(&a, 1).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn structure_constants_are_validated() {
        let bad = RationalAlgebra::new(1, vec![rational(1)], vec![]);
        assert!(bad.is_err());
        let ok = RationalAlgebra::new(1, vec![rational(2)], vec!["e".into()]).unwrap();
        assert_eq!(summary(&ok).one_dim_blocks, 1);
    }
}
