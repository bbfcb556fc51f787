//! Finite semigroups given by Cayley tables.
//!
//! Elements are the indices `0..n`. A [`Semigroup`] is only ever built from a
//! table that has been checked for associativity, and its zero (if any) is
//! detected from the table itself.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite semigroup stored as a row-major Cayley table.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Semigroup {
    n: usize,
    table: Vec<usize>,
    zero: Option<usize>,
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("n", &self.n)
            .field("zero", &self.zero)
            .field("rows", &self.rows())
            .finish()
    }
}

impl Semigroup {
    /// Validates a table given as rows and builds the semigroup.
    ///
    /// A declared zero must be absorbing; when none is declared the zero is
    /// detected automatically.
    pub fn from_rows(rows: &[Vec<usize>], zero: Option<usize>) -> Result<Self> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Shape {
                    expected: n,
                    row,
                    found: r.len(),
                });
            }
            table.extend_from_slice(r);
        }
        Self::from_flat(n, table, zero)
    }

    /// Same as [`Semigroup::from_rows`] for a flat row-major table.
    pub fn from_flat(n: usize, table: Vec<usize>, zero: Option<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if table.len() != n * n {
            return Err(Error::Shape {
                expected: n,
                row: table.len() / n,
                found: table.len() % n,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
                n,
            });
        }
        if let Some((x, y, z)) = associativity_witness(n, &table) {
            return Err(Error::Associativity {
                x,
                y,
                z,
                left: table[table[x * n + y] * n + z],
                right: table[x * n + table[y * n + z]],
            });
        }
        let detected = detect_zero(n, &table);
        let zero = match zero {
            Some(z) if z >= n => {
                return Err(Error::EntryOutOfRange {
                    row: z,
                    col: z,
                    value: z,
                    n,
                })
            }
            Some(z) => {
                if let Some(w) = (0..n).find(|&x| table[z * n + x] != z || table[x * n + z] != z) {
                    return Err(Error::Zero {
                        zero: z,
                        witness: w,
                    });
                }
                Some(z)
            }
            None => detected,
        };
        Ok(Semigroup { n, table, zero })
    }

    /// Builds a semigroup from a table the caller has already proven
    /// associative.
    pub(crate) fn from_flat_trusted(n: usize, table: Vec<usize>) -> Self {
        debug_assert!(associativity_witness(n, &table).is_none());
        let zero = detect_zero(n, &table);
        Semigroup { n, table, zero }
    }

    /// The one-element semigroup.
    pub fn trivial() -> Self {
        Semigroup::from_flat_trusted(1, vec![0])
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Commutative and every element idempotent.
    pub fn is_semilattice(&self) -> bool {
        self.is_commutative() && (0..self.n).all(|x| self.is_idempotent(x))
    }

    /// All products equal the zero.
    pub fn is_null(&self) -> bool {
        match self.zero {
            Some(z) => self.table.iter().all(|&v| v == z),
            None => false,
        }
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_group(&self) -> bool {
        match self.identity() {
            Some(e) => {
                (0..self.n).all(|x| (0..self.n).any(|y| self.mul(x, y) == e && self.mul(y, x) == e))
            }
            None => false,
        }
    }

    /// The semigroup with reversed multiplication.
    pub fn opposite(&self) -> Semigroup {
        let n = self.n;
        let table = (0..n * n).map(|i| self.mul(i % n, i / n)).collect();
        Semigroup::from_flat_trusted(n, table)
    }

    /// Relabels the semigroup so that element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Semigroup {
        let n = self.n;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        Semigroup::from_flat_trusted(n, table)
    }

    /// Powers `x, x², …` up to the first repetition, together with the index
    /// at which the cycle starts.
    ///
    /// The cyclic subsemigroup is `powers`, and `powers[cycle_start..]` is its
    /// unique cyclic group.
    pub fn cyclic(&self, x: usize) -> (Vec<usize>, usize) {
        let mut seen = vec![usize::MAX; self.n];
        let mut powers = Vec::new();
        let mut p = x;
        while seen[p] == usize::MAX {
            seen[p] = powers.len();
            powers.push(p);
            p = self.mul(p, x);
        }
        (powers, seen[p])
    }

    /// `E(S)`, in ascending order.
    pub fn idempotents(&self) -> Subset {
        Subset::from_sorted((0..self.n).filter(|&x| self.is_idempotent(x)).collect())
    }

    /// `S¹ A S¹`: the least ideal containing `A`.
    pub fn ideal_generated(&self, seeds: &[usize]) -> Result<Subset> {
        if seeds.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut inside = vec![false; self.n];
        let mut queue = VecDeque::new();
        for &a in seeds {
            if a >= self.n {
                return Err(Error::InvalidArgument(format!(
                    "element {a} is outside 0..{}",
                    self.n
                )));
            }
            if !inside[a] {
                inside[a] = true;
                queue.push_back(a);
            }
        }
        while let Some(x) = queue.pop_front() {
            for s in 0..self.n {
                for p in [self.mul(s, x), self.mul(x, s)] {
                    if !inside[p] {
                        inside[p] = true;
                        queue.push_back(p);
                    }
                }
            }
        }
        Ok(Subset::from_mask(&inside))
    }

    /// `J(a)`, the principal ideal generated by `a`.
    pub fn principal_ideal(&self, a: usize) -> Subset {
        self.ideal_generated(&[a]).expect("singleton seed")
    }

    /// The unique minimal ideal: the intersection of all principal ideals.
    pub fn kernel(&self) -> Subset {
        if let Some(z) = self.zero {
            return Subset::from_sorted(vec![z]);
        }
        let mut inside = vec![true; self.n];
        for a in 0..self.n {
            let j = self.principal_ideal(a);
            for (x, flag) in inside.iter_mut().enumerate() {
                *flag &= j.contains(x);
            }
        }
        Subset::from_mask(&inside)
    }

    /// Returns a witness product leaving `members` if it is not an ideal.
    pub fn ideal_witness(&self, members: &Subset) -> Option<(usize, usize, usize)> {
        let mask = members.mask(self.n);
        for &x in members.iter() {
            for s in 0..self.n {
                let p = self.mul(s, x);
                if !mask[p] {
                    return Some((s, x, p));
                }
                let p = self.mul(x, s);
                if !mask[p] {
                    return Some((x, s, p));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, members: &Subset) -> bool {
        !members.is_empty() && self.ideal_witness(members).is_none()
    }

    /// Returns a witness product leaving `members` if it is not closed.
    pub fn closure_witness(&self, members: &Subset) -> Option<(usize, usize, usize)> {
        let mask = members.mask(self.n);
        for &x in members.iter() {
            for &y in members.iter() {
                let p = self.mul(x, y);
                if !mask[p] {
                    return Some((x, y, p));
                }
            }
        }
        None
    }

    pub fn is_subsemigroup(&self, members: &Subset) -> bool {
        !members.is_empty() && self.closure_witness(members).is_none()
    }

    /// The subsemigroup on `members`, relabelled `0..k` in ascending order,
    /// with the inclusion map into `self`.
    pub fn restrict(&self, members: &Subset) -> Result<(Semigroup, Morphism)> {
        if members.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((x, y, product)) = self.closure_witness(members) {
            return Err(Error::NotClosed { x, y, product });
        }
        let k = members.len();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in members.iter().enumerate() {
            index[x] = i;
        }
        let mut table = Vec::with_capacity(k * k);
        for &x in members.iter() {
            for &y in members.iter() {
                table.push(index[self.mul(x, y)]);
            }
        }
        let sub = Semigroup::from_flat_trusted(k, table);
        Ok((sub, Morphism::new(members.to_vec())))
    }

    /// The Rees quotient `S/I`.
    ///
    /// The collapsed ideal becomes element 0 and the surviving elements keep
    /// their relative order at indices `1..`. The quotient map is returned
    /// alongside.
    pub fn rees_quotient(&self, ideal: &Subset) -> Result<(Semigroup, Morphism)> {
        if ideal.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((x, y, product)) = self.ideal_witness(ideal) {
            return Err(Error::NotAnIdeal { x, y, product });
        }
        let mask = ideal.mask(self.n);
        let mut map = vec![0; self.n];
        let mut next = 1;
        for x in 0..self.n {
            if !mask[x] {
                map[x] = next;
                next += 1;
            }
        }
        let m = next;
        let mut table = vec![0; m * m];
        for x in (0..self.n).filter(|&x| !mask[x]) {
            for y in (0..self.n).filter(|&y| !mask[y]) {
                table[map[x] * m + map[y]] = map[self.mul(x, y)];
            }
        }
        Ok((Semigroup::from_flat_trusted(m, table), Morphism::new(map)))
    }

    /// Componentwise product; the pair `(i, j)` has index `i * |other| + j`.
    pub fn direct_product(&self, other: &Semigroup) -> Semigroup {
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let i = self.mul(x / b, y / b);
                let j = other.mul(x % b, y % b);
                table.push(i * b + j);
            }
        }
        Semigroup::from_flat_trusted(n, table)
    }

    /// Elements `y` with `x y x = x` and `y x y = y`.
    pub fn inverses_of(&self, x: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y)
            .collect()
    }

    /// Every element has exactly one inverse.
    pub fn is_inverse_semigroup(&self) -> bool {
        (0..self.n).all(|x| self.inverses_of(x).len() == 1)
    }

    /// Every ideal of the semigroup, as unions of principal ideals.
    ///
    /// Refuses semigroups larger than 20 elements.
    pub fn ideals(&self) -> Result<Vec<Subset>> {
        const LIMIT: usize = 20;
        if self.n > LIMIT {
            return Err(Error::SizeLimitExceeded {
                what: "ideal enumeration",
                size: self.n,
                limit: LIMIT,
            });
        }
        let principal: Vec<u64> = (0..self.n)
            .map(|a| self.principal_ideal(a).bits())
            .collect();
        let mut family: std::collections::BTreeSet<u64> = principal.iter().copied().collect();
        let mut frontier: Vec<u64> = family.iter().copied().collect();
        while let Some(ideal) = frontier.pop() {
            for &p in &principal {
                let u = ideal | p;
                if family.insert(u) {
                    frontier.push(u);
                }
            }
        }
        let mut out: Vec<Subset> = family.into_iter().map(Subset::from_bits).collect();
        out.sort();
        Ok(out)
    }
}

fn associativity_witness(n: usize, t: &[usize]) -> Option<(usize, usize, usize)> {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            for z in 0..n {
                if t[xy * n + z] != t[x * n + t[y * n + z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn detect_zero(n: usize, t: &[usize]) -> Option<usize> {
    (0..n).find(|&z| (0..n).all(|x| t[z * n + x] == z && t[x * n + z] == z))
}

/// A set of elements, kept sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subset(members)
    }

    fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subset(members)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Subset((0..mask.len()).filter(|&i| mask[i]).collect())
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        Subset((0..64).filter(|&i| bits >> i & 1 == 1).collect())
    }

    pub(crate) fn bits(&self) -> u64 {
        self.0.iter().fold(0, |acc, &x| acc | 1 << x)
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.0 {
            m[x] = true;
        }
        m
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.clone()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The elements of `0..n` not in this subset.
    pub fn complement(&self, n: usize) -> Subset {
        let mask = self.mask(n);
        Subset((0..n).filter(|&x| !mask[x]).collect())
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A map between semigroups, one target index per source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Morphism {
    map: Vec<usize>,
}

impl Morphism {
    pub fn new(map: Vec<usize>) -> Self {
        Morphism { map }
    }

    pub fn identity(n: usize) -> Self {
        Morphism {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `map[xy] = map[x] map[y]` for all `x, y`.
    pub fn is_homomorphism(&self, source: &Semigroup, target: &Semigroup) -> bool {
        self.map.len() == source.size()
            && self.map.iter().all(|&v| v < target.size())
            && source.elements().all(|x| {
                source
                    .elements()
                    .all(|y| self.map[source.mul(x, y)] == target.mul(self.map[x], self.map[y]))
            })
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_surjective_onto(&self, target: &Semigroup) -> bool {
        let mut hit = vec![false; target.size()];
        for &v in &self.map {
            if v < hit.len() {
                hit[v] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_isomorphism(&self, source: &Semigroup, target: &Semigroup) -> bool {
        source.size() == target.size()
            && self.is_injective()
            && self.is_homomorphism(source, target)
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &Morphism) -> Morphism {
        Morphism::new(self.map.iter().map(|&x| then.map[x]).collect())
    }

    /// The partition of the source into fibres, in ascending order.
    pub fn kernel_classes(&self) -> Vec<Vec<usize>> {
        let mut by_image: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &v) in self.map.iter().enumerate() {
            by_image.entry(v).or_default().push(x);
        }
        let mut classes: Vec<Vec<usize>> = by_image.into_values().collect();
        classes.sort();
        classes
    }
}
