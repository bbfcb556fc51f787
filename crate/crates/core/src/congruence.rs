use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Morphism, Semigroup};

/// Largest order for which [`congruences`] will enumerate set partitions.
pub const CONGRUENCE_LIMIT: usize = 10;

/// A partition of the elements, stored as a class index per element.
///
/// Classes are numbered by their least element, so two equal partitions
/// always compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    /// Normalizes an arbitrary labelling into restricted-growth form.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut rename = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = rename.len();
                *rename.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { class_of }
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n || labels[x] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "element {x} is out of range or repeated"
                    )));
                }
                labels[x] = i;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidArgument(format!(
                "element {x} is in no class"
            )));
        }
        Ok(Congruence::from_labels(&labels))
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Congruence {
            class_of: vec![0; n],
        }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// `x ≡ x'` and `y ≡ y'` imply `xy ≡ x'y'`.
    pub fn is_compatible(&self, s: &Semigroup) -> bool {
        let n = s.size();
        if self.class_of.len() != n {
            return false;
        }
        // one-sided checks suffice by transitivity
        for x in 0..n {
            for x2 in x + 1..n {
                if self.class_of[x] != self.class_of[x2] {
                    continue;
                }
                for y in 0..n {
                    if self.class_of[s.mul(x, y)] != self.class_of[s.mul(x2, y)]
                        || self.class_of[s.mul(y, x)] != self.class_of[s.mul(y, x2)]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Every congruence of `s`, in lexicographic order of restricted-growth labels.
pub fn congruences(s: &Semigroup) -> Result<Vec<Congruence>> {
    let n = s.size();
    if n > CONGRUENCE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "congruence enumeration",
            size: n,
            limit: CONGRUENCE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut labels = vec![0; n];
    extend(s, &mut labels, 1, 1, &mut out);
    Ok(out)
}

fn extend(s: &Semigroup, labels: &mut [usize], k: usize, used: usize, out: &mut Vec<Congruence>) {
    let n = s.size();
    if k == n {
        let c = Congruence {
            class_of: labels.to_vec(),
        };
        if c.is_compatible(s) {
            out.push(c);
        }
        return;
    }
    for l in 0..=used {
        labels[k] = l;
        if partial_ok(s, labels, k) {
            extend(s, labels, k + 1, used.max(l + 1), out);
        }
    }
}

/// Checks the pairs `(x, k)` with `x < k` in one class against every `y ≤ k`
/// whose products are already labelled.
fn partial_ok(s: &Semigroup, labels: &[usize], k: usize) -> bool {
    for x in (0..k).filter(|&x| labels[x] == labels[k]) {
        for y in 0..=k {
            for (p, q) in [(s.mul(x, y), s.mul(k, y)), (s.mul(y, x), s.mul(y, k))] {
                if p <= k && q <= k && labels[p] != labels[q] {
                    return false;
                }
            }
        }
    }
    true
}

/// The quotient `S/α` with its canonical surjection. Class `i` of the
/// congruence is element `i` of the quotient.
pub fn quotient(s: &Semigroup, alpha: &Congruence) -> Result<(Semigroup, Morphism)> {
    if !alpha.is_compatible(s) {
        return Err(Error::InvalidArgument(
            "partition is not a congruence".into(),
        ));
    }
    let m = alpha.num_classes();
    let reps: Vec<usize> = alpha.classes().iter().map(|c| c[0]).collect();
    let mut table = Vec::with_capacity(m * m);
    for &x in &reps {
        for &y in &reps {
            table.push(alpha.class_of(s.mul(x, y)));
        }
    }
    Ok((
        Semigroup::from_flat_trusted(m, table),
        Morphism::new(alpha.class_of.clone()),
    ))
}
