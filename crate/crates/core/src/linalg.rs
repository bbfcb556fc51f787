//! Exact linear algebra over the rationals.
//!
//! Elimination runs on primitive integer rows (fraction-free, each row kept
//! divided by the gcd of its entries); rationals only appear when the final
//! echelon form is normalized to unit pivots.

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A subspace of `Q^ncols` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// The row space of `rows`, each of length `ncols`.
    pub fn span(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let mut ints: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "row length");
                clear_denominators(r)
            })
            .filter(|r| r.iter().any(|v| !v.is_zero()))
            .collect();
        let pivots = integer_rref(&mut ints, ncols);
        let rows = ints
            .into_iter()
            .zip(&pivots)
            .map(|(r, &p)| {
                let lead = r[p].clone();
                r.into_iter()
                    .map(|v| Rational::new(v, lead.clone()))
                    .collect()
            })
            .collect();
        Echelon {
            ncols,
            rows,
            pivots,
        }
    }

    pub fn zero(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// `v` minus its projection along the pivot columns. The result vanishes
    /// on every pivot column and is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Span of `self` together with `extra`.
    pub fn extend(&self, extra: &[Vec<Rational>]) -> Echelon {
        let mut all = self.rows.clone();
        all.extend_from_slice(extra);
        Echelon::span(&all, self.ncols)
    }
}

/// A basis of `{x : M x = 0}` for the `nrows × ncols` matrix `M`.
pub fn nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ech = Echelon::span(matrix, ncols);
    ech.free_columns()
        .into_iter()
        .map(|f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn rank(matrix: &[Vec<Rational>], ncols: usize) -> usize {
    Echelon::span(matrix, ncols).rank()
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Gauss–Jordan elimination on integer rows. Rows end up primitive with a
/// positive pivot, zero rows are dropped, and the pivot columns returned.
fn integer_rref(rows: &mut Vec<Vec<BigInt>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // smallest nonzero entry keeps the numbers down
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()))
        else {
            continue;
        };
        rows.swap(r, p);
        if rows[r][c].is_negative() {
            for v in rows[r].iter_mut() {
                *v = -&*v;
            }
        }
        make_primitive(&mut rows[r]);
        let pivot_row = rows[r].clone();
        let a = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let b = row[c].clone();
            let g = a.gcd(&b);
            let (fa, fb) = (&a / &g, &b / &g);
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = &*v * &fa - pv * &fb;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = vec![q(&[1, 2, 3]), q(&[2, 4, 6]), q(&[1, 0, 1])];
        assert_eq!(rank(&m, 3), 2);
    }

    #[test]
    fn reduced_form_has_unit_pivots() {
        let m = vec![q(&[2, 4, 6]), q(&[3, 3, 3])];
        let e = Echelon::span(&m, 3);
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.rows()[0], q(&[1, 0, -1]));
        assert_eq!(e.rows()[1], q(&[0, 1, 2]));
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let m = vec![q(&[1, 1, 0, 2]), q(&[0, 3, 1, -1])];
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for row in &m {
                let dot: Rational = row.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn membership_and_reduction() {
        let e = Echelon::span(&[q(&[1, 1, 0])], 3);
        assert!(e.contains(&q(&[-3, -3, 0])));
        assert!(!e.contains(&q(&[1, 0, 0])));
        let r = e.reduce(&q(&[2, 5, 7]));
        assert_eq!(r, q(&[0, 3, 7]));
    }

    #[test]
    fn fractions_are_exact() {
        let third = Rational::new(BigInt::from(1), BigInt::from(3));
        let m = vec![
            vec![third.clone(), rational(1)],
            vec![rational(1), rational(3)],
        ];
        assert_eq!(rank(&m, 2), 1);
    }
}
