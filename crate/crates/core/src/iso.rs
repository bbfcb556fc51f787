//! Isomorphism testing for Cayley tables.
//!
//! Elements are coloured by iso-invariant signatures which are refined until
//! stable. The search individualizes one element at a time on both sides and
//! refines again, so every leaf of the search tree is a bijection that is then
//! checked against both tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::semigroup::{Morphism, Semigroup};

/// The first invariant that told two semigroups apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distinguisher {
    Size,
    IdempotentCount,
    DiagonalMultiset,
    RowColumnProfile,
    RefinedColours,
    /// Every colour-compatible bijection failed the homomorphism check.
    Search,
}

impl fmt::Display for Distinguisher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Distinguisher::Size => "size",
            Distinguisher::IdempotentCount => "idempotent count",
            Distinguisher::DiagonalMultiset => "diagonal multiset",
            Distinguisher::RowColumnProfile => "row/column profiles",
            Distinguisher::RefinedColours => "refined element colours",
            Distinguisher::Search => "exhaustive bijection search",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(Morphism),
    NotIsomorphic(Distinguisher),
}

impl IsoOutcome {
    pub fn morphism(&self) -> Option<&Morphism> {
        match self {
            IsoOutcome::Isomorphic(m) => Some(m),
            IsoOutcome::NotIsomorphic(_) => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

/// Finds an isomorphism `a -> b` or names the first invariant that differs.
pub fn find_isomorphism(a: &Semigroup, b: &Semigroup) -> IsoOutcome {
    if let Some(d) = cheap_distinguisher(a, b) {
        return IsoOutcome::NotIsomorphic(d);
    }
    let sgs = [a, b];
    let mut colours = vec![initial_colours(a), initial_colours(b)];
    // Joint ranking keeps the colour names comparable between the two sides.
    rerank(&mut colours);
    if !refine(&sgs, &mut colours) {
        return IsoOutcome::NotIsomorphic(Distinguisher::RefinedColours);
    }
    match search(&sgs, colours) {
        Some(map) => IsoOutcome::Isomorphic(Morphism::new(map)),
        None => IsoOutcome::NotIsomorphic(Distinguisher::Search),
    }
}

pub fn are_isomorphic(a: &Semigroup, b: &Semigroup) -> bool {
    find_isomorphism(a, b).is_isomorphic()
}

fn cheap_distinguisher(a: &Semigroup, b: &Semigroup) -> Option<Distinguisher> {
    if a.size() != b.size() {
        return Some(Distinguisher::Size);
    }
    if a.idempotents().len() != b.idempotents().len() {
        return Some(Distinguisher::IdempotentCount);
    }
    if diagonal_profile(a) != diagonal_profile(b) {
        return Some(Distinguisher::DiagonalMultiset);
    }
    if row_column_profile(a) != row_column_profile(b) {
        return Some(Distinguisher::RowColumnProfile);
    }
    None
}

/// Sorted multiset of square-root counts `|{y : y² = x}|`.
fn diagonal_profile(s: &Semigroup) -> Vec<usize> {
    let mut roots = vec![0; s.size()];
    for y in s.elements() {
        roots[s.mul(y, y)] += 1;
    }
    roots.sort_unstable();
    roots
}

/// Sorted multiset of (distinct entries in row x, distinct entries in column x).
fn row_column_profile(s: &Semigroup) -> Vec<(usize, usize)> {
    let n = s.size();
    let mut out: Vec<(usize, usize)> = s
        .elements()
        .map(|x| {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for y in 0..n {
                row[s.mul(x, y)] = true;
                col[s.mul(y, x)] = true;
            }
            (
                row.iter().filter(|&&b| b).count(),
                col.iter().filter(|&&b| b).count(),
            )
        })
        .collect();
    out.sort_unstable();
    out
}

pub(crate) type Colours = Vec<u32>;

/// Starting colour: (idempotent, zero, square is idempotent, length of ⟨x⟩).
pub(crate) fn initial_colours(s: &Semigroup) -> Colours {
    s.elements()
        .map(|x| {
            let (powers, start) = s.cyclic(x);
            let idem = s.is_idempotent(x) as u32;
            let zero = (s.zero() == Some(x)) as u32;
            let period = (powers.len() - start) as u32;
            (zero << 30) | (idem << 29) | ((start as u32) << 14) | period
        })
        .collect()
}

/// Replaces every colour by its rank among all colours in use.
pub(crate) fn rerank(colours: &mut [Colours]) {
    let mut all: Vec<u32> = colours.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    for c in colours.iter_mut().flatten() {
        *c = all.binary_search(c).unwrap() as u32;
    }
}

fn distinct(colours: &[Colours]) -> usize {
    let mut all: Vec<u32> = colours.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn same_multisets(colours: &[Colours]) -> bool {
    let mut sorted = colours.iter().map(|c| {
        let mut c = c.clone();
        c.sort_unstable();
        c
    });
    let first = sorted.next().unwrap_or_default();
    sorted.all(|c| c == first)
}

/// Refines colours to a fixpoint. Returns false when the sides disagree on
/// their colour multisets, which rules out an isomorphism.
pub(crate) fn refine(sgs: &[&Semigroup], colours: &mut [Colours]) -> bool {
    if !same_multisets(colours) {
        return false;
    }
    loop {
        let before = distinct(colours);
        let sigs: Vec<Vec<Vec<u32>>> = sgs
            .iter()
            .zip(colours.iter())
            .map(|(s, c)| s.elements().map(|x| signature(s, c, x)).collect())
            .collect();
        let mut all: Vec<&Vec<u32>> = sigs.iter().flatten().collect();
        all.sort_unstable();
        all.dedup();
        for (c, side) in colours.iter_mut().zip(&sigs) {
            for (x, sig) in side.iter().enumerate() {
                c[x] = all.binary_search(&sig).unwrap() as u32;
            }
        }
        if !same_multisets(colours) {
            return false;
        }
        if distinct(colours) == before {
            return true;
        }
    }
}

fn signature(s: &Semigroup, c: &[u32], x: usize) -> Vec<u32> {
    let mut triples: Vec<[u32; 3]> = s
        .elements()
        .map(|y| [c[y], c[s.mul(x, y)], c[s.mul(y, x)]])
        .collect();
    triples.sort_unstable();
    let mut sig = Vec::with_capacity(2 + 3 * triples.len());
    sig.push(c[x]);
    sig.push(c[s.mul(x, x)]);
    sig.extend(triples.into_iter().flatten());
    sig
}

/// First colour class with more than one member on side 0.
pub(crate) fn target_cell(colours: &[u32]) -> Option<u32> {
    let mut count = vec![0usize; colours.len()];
    for &c in colours {
        count[c as usize] += 1;
    }
    count.iter().position(|&k| k > 1).map(|c| c as u32)
}

/// Gives `x` a colour of its own, just below the rest of its class.
pub(crate) fn individualize(colours: &mut Colours, x: usize) {
    let cx = colours[x];
    for c in colours.iter_mut() {
        *c = *c * 2 + u32::from(*c == cx);
    }
    colours[x] -= 1;
}

fn search(sgs: &[&Semigroup; 2], colours: Vec<Colours>) -> Option<Vec<usize>> {
    let Some(cell) = target_cell(&colours[0]) else {
        let n = sgs[0].size();
        let mut by_colour = vec![0; n];
        for (y, &c) in colours[1].iter().enumerate() {
            by_colour[c as usize] = y;
        }
        let map: Vec<usize> = colours[0].iter().map(|&c| by_colour[c as usize]).collect();
        let m = Morphism::new(map);
        return m
            .is_isomorphism(sgs[0], sgs[1])
            .then(|| m.as_slice().to_vec());
    };
    let x = colours[0].iter().position(|&c| c == cell).unwrap();
    for y in (0..sgs[1].size()).filter(|&y| colours[1][y] == cell) {
        let mut next = colours.clone();
        individualize(&mut next[0], x);
        individualize(&mut next[1], y);
        rerank(&mut next);
        if refine(sgs, &mut next) {
            if let Some(map) = search(sgs, next) {
                return Some(map);
            }
        }
    }
    None
}
