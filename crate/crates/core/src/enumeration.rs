//! Small semigroups up to isomorphism, and the B₂-combinatorial classes of
//! orders 1, 5 and 9.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{b2, munn, times0, Semilattice};
use crate::error::{Error, Result};
use crate::iso::{
    are_isomorphic, individualize, initial_colours, refine, rerank, target_cell, Colours,
};
use crate::lattice::is_b2_combinatorial;
use crate::semigroup::{Semigroup, Subset};

/// Largest order accepted by [`enumerate_semigroups`].
pub const ENUMERATION_LIMIT: usize = 5;

/// Up to this order canonical forms minimise over every relabelling.
pub const FACTORIAL_LIMIT: usize = 7;

/// A canonical Cayley table: equal for two semigroups iff they are
/// isomorphic.
///
/// Up to [`FACTORIAL_LIMIT`] elements this is the lexicographically least
/// relabelled table. Above it, the least table among the leaves of an
/// individualisation-refinement search, which is canonical but need not be
/// the global minimum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalTable {
    n: usize,
    table: Vec<usize>,
}

impl CanonicalTable {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn to_semigroup(&self) -> Semigroup {
        Semigroup::from_flat_trusted(self.n, self.table.clone())
    }
}

pub fn canonicalize(s: &Semigroup) -> CanonicalTable {
    let n = s.size();
    let table = if n <= FACTORIAL_LIMIT {
        lex_min_all(s)
    } else {
        let mut colours = vec![initial_colours(s)];
        rerank(&mut colours);
        refine(&[s], &mut colours);
        let mut best = None;
        leaves(s, colours.pop().unwrap(), &mut best);
        best.unwrap()
    };
    CanonicalTable { n, table }
}

/// `perm` maps old labels to new ones.
fn relabelled_cmp(
    s: &Semigroup,
    perm: &[usize],
    inverse: &[usize],
    best: &[usize],
) -> std::cmp::Ordering {
    let n = s.size();
    for a in 0..n {
        for b in 0..n {
            let v = perm[s.mul(inverse[a], inverse[b])];
            match v.cmp(&best[a * n + b]) {
                std::cmp::Ordering::Equal => {}
                other => return other,
            }
        }
    }
    std::cmp::Ordering::Equal
}

fn relabelled(s: &Semigroup, perm: &[usize]) -> Vec<usize> {
    s.relabel(perm).flat_table().to_vec()
}

fn lex_min_all(s: &Semigroup) -> Vec<usize> {
    let n = s.size();
    let mut inverse: Vec<usize> = (0..n).collect();
    let mut perm = inverse.clone();
    let mut best = s.flat_table().to_vec();
    loop {
        for (new, &old) in inverse.iter().enumerate() {
            perm[old] = new;
        }
        if relabelled_cmp(s, &perm, &inverse, &best).is_lt() {
            best = relabelled(s, &perm);
        }
        if !next_permutation(&mut inverse) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&v| v > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn leaves(s: &Semigroup, colours: Colours, best: &mut Option<Vec<usize>>) {
    let Some(cell) = target_cell(&colours) else {
        let perm: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
        let table = relabelled(s, &perm);
        if best.as_ref().is_none_or(|b| table < *b) {
            *best = Some(table);
        }
        return;
    };
    for x in s.elements().filter(|&x| colours[x] == cell) {
        let mut next = vec![colours.clone()];
        individualize(&mut next[0], x);
        rerank(&mut next);
        refine(&[s], &mut next);
        leaves(s, next.pop().unwrap(), best);
    }
}

const UNSET: u8 = u8::MAX;

/// Checks every associativity instance that the cell `(i, j)` completes.
fn consistent(n: usize, t: &[u8], i: usize, j: usize) -> bool {
    let get = |a: u8, b: u8| -> u8 {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            t[a as usize * n + b as usize]
        }
    };
    let agree = |l: u8, r: u8| l == UNSET || r == UNSET || l == r;
    let (iu, ju) = (i as u8, j as u8);
    let v = t[i * n + j];
    for z in 0..n as u8 {
        // (ij)z = i(jz)
        if !agree(get(v, z), get(iu, get(ju, z))) {
            return false;
        }
        // z(ij) = (zi)j
        if !agree(get(z, v), get(get(z, iu), ju)) {
            return false;
        }
    }
    for x in 0..n as u8 {
        for y in 0..n as u8 {
            let xy = get(x, y);
            // (xy)j with xy = i
            if xy == iu && !agree(v, get(x, get(y, ju))) {
                return false;
            }
            // i(xy) with xy = j
            if xy == ju && !agree(get(get(iu, x), y), v) {
                return false;
            }
        }
    }
    true
}

fn fill(n: usize, t: &mut [u8], pos: usize, out: &mut dyn FnMut(&[u8])) {
    if pos == n * n {
        out(t);
        return;
    }
    let (i, j) = (pos / n, pos % n);
    for v in 0..n as u8 {
        t[pos] = v;
        if consistent(n, t, i, j) {
            fill(n, t, pos + 1, out);
        }
    }
    t[pos] = UNSET;
}

/// One canonical table per isomorphism class of semigroups of order `n`,
/// sorted.
pub fn enumerate_semigroups(n: usize) -> Result<Vec<CanonicalTable>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "semigroup enumeration",
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    // fill the first row serially, then split the remaining search
    let mut prefixes = Vec::new();
    let mut t = vec![UNSET; n * n];
    fill_prefix(n, &mut t, 0, &mut prefixes);
    let classes = prefixes
        .into_par_iter()
        .map(|mut t| {
            let mut local = BTreeSet::new();
            fill(n, &mut t, n, &mut |t| {
                let table = t.iter().map(|&v| v as usize).collect();
                local.insert(canonicalize(&Semigroup::from_flat_trusted(n, table)));
            });
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(classes.into_iter().collect())
}

fn fill_prefix(n: usize, t: &mut [u8], pos: usize, out: &mut Vec<Vec<u8>>) {
    if pos == n {
        out.push(t.to_vec());
        return;
    }
    for v in 0..n as u8 {
        t[pos] = v;
        if consistent(n, t, 0, pos) {
            fill_prefix(n, t, pos + 1, out);
        }
    }
    t[pos] = UNSET;
}

/// The classes of [`enumerate_semigroups`] whose representative satisfies
/// `predicate`.
pub fn enumerate_where<F>(n: usize, predicate: F) -> Result<Vec<CanonicalTable>>
where
    F: Fn(&Semigroup) -> bool + Sync,
{
    let all = enumerate_semigroups(n)?;
    Ok(all
        .into_par_iter()
        .filter(|c| predicate(&c.to_semigroup()))
        .collect())
}

/// Canonical forms of the B₂-combinatorial semigroups of order 1, 5 or 9.
pub fn classify_b2c(order: usize) -> Result<Vec<CanonicalTable>> {
    match order {
        1 | 5 => enumerate_where(order, is_b2_combinatorial),
        9 => Ok(classify_order9()?.classes),
        _ => Err(Error::UnsupportedOrder(order)),
    }
}

/// Search result for one Munn semigroup `T_E`, `|E| = 5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MunnSearch {
    pub semilattice: CanonicalTable,
    /// One of the named semilattices `U`, `F`, `X`, when it is one.
    pub name: Option<String>,
    pub munn_size: usize,
    /// The 9-element B₂-combinatorial full inverse subsemigroups.
    pub subsemigroups: Vec<Subset>,
    /// Index into the class list for each entry of `subsemigroups`.
    pub class_of: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Order9Classification {
    pub classes: Vec<CanonicalTable>,
    /// `C3 ×₀ B₂`, `V ×₀ B₂` or `T_F`, per class.
    pub class_names: Vec<String>,
    pub searches: Vec<MunnSearch>,
    pub munn_u_is_c3_times_b2: bool,
    pub munn_f_is_no_times0: bool,
    /// `E(C3 ×₀ B₂) ≅ U`, `E(V ×₀ B₂) ≅ X`, `E(T_F) ≅ F`.
    pub idempotent_semilattices: [bool; 3],
    pub note: String,
}

const ORDER9_NOTE: &str = "Candidates are the 9-element full inverse subsemigroups of the Munn \
semigroups of all 5-element semilattices, together with Y x0 B2 for both 3-element semilattices. \
Completeness rests on the Munn representation of fundamental inverse semigroups; all 9-element \
semigroups were not enumerated.";

/// The B₂-combinatorial semigroups of order 9, with the evidence collected
/// on the way.
///
/// A B₂-combinatorial subsemigroup of order 9 has 5 idempotents, so inside a
/// Munn semigroup over a 5-element semilattice it contains every idempotent
/// and, being regular, is closed under inverses. The search over full
/// inverse subsemigroups is therefore exhaustive for each `T_E`.
pub fn classify_order9() -> Result<Order9Classification> {
    let b = b2();
    let c3 = Semilattice::named("C3")?;
    let v = Semilattice::named("V")?;
    let c3b = times0(c3.semigroup(), &b)?;
    let vb = times0(v.semigroup(), &b)?;
    let tf = munn(&Semilattice::named("F")?)?;
    let tu = munn(&Semilattice::named("U")?)?;

    let named: Vec<(String, Semigroup)> = ["U", "F", "X"]
        .iter()
        .map(|&name| Ok((name.to_string(), Semilattice::named(name)?.into_semigroup())))
        .collect::<Result<_>>()?;

    let mut pool: BTreeSet<CanonicalTable> = BTreeSet::new();
    for s in [&c3b, &vb] {
        if is_b2_combinatorial(s) {
            pool.insert(canonicalize(s));
        }
    }
    let mut raw = Vec::new();
    for e in enumerate_where(5, Semigroup::is_semilattice)? {
        let sg = e.to_semigroup();
        let name = named
            .iter()
            .find(|(_, y)| are_isomorphic(y, &sg))
            .map(|(n, _)| n.clone());
        let t = munn(&Semilattice::new(sg)?)?;
        let subs = full_inverse_subsemigroups(&t, 9);
        let mut found = Vec::new();
        for sub in subs {
            let r = t.restrict(&sub)?.0;
            if is_b2_combinatorial(&r) {
                let c = canonicalize(&r);
                pool.insert(c.clone());
                found.push((sub, c));
            }
        }
        raw.push((e, name, t.size(), found));
    }
    let classes: Vec<CanonicalTable> = pool.into_iter().collect();
    let searches = raw
        .into_iter()
        .map(|(semilattice, name, munn_size, found)| {
            let (subsemigroups, class_of) = found
                .into_iter()
                .map(|(sub, c)| (sub, classes.binary_search(&c).unwrap()))
                .unzip();
            MunnSearch {
                semilattice,
                name,
                munn_size,
                subsemigroups,
                class_of,
            }
        })
        .collect();

    let class_names = classes
        .iter()
        .map(|c| {
            let s = c.to_semigroup();
            if are_isomorphic(&s, &c3b) {
                "C3 x0 B2".to_string()
            } else if are_isomorphic(&s, &vb) {
                "V x0 B2".to_string()
            } else if are_isomorphic(&s, &tf) {
                "T_F".to_string()
            } else {
                "unnamed".to_string()
            }
        })
        .collect();

    let idem = |s: &Semigroup, name: &str| -> Result<bool> {
        let e = Semilattice::of_idempotents(s)?;
        Ok(are_isomorphic(
            e.semigroup(),
            &Semilattice::named(name)?.into_semigroup(),
        ))
    };
    Ok(Order9Classification {
        classes,
        class_names,
        searches,
        munn_u_is_c3_times_b2: are_isomorphic(&tu, &c3b),
        munn_f_is_no_times0: !are_isomorphic(&tf, &c3b) && !are_isomorphic(&tf, &vb),
        idempotent_semilattices: [idem(&c3b, "U")?, idem(&vb, "X")?, idem(&tf, "F")?],
        note: ORDER9_NOTE.to_string(),
    })
}

/// Inverse subsemigroups of the inverse semigroup `t` that contain every
/// idempotent and have exactly `size` elements.
pub fn full_inverse_subsemigroups(t: &Semigroup, size: usize) -> Vec<Subset> {
    let idem = t.idempotents();
    if size < idem.len() {
        return Vec::new();
    }
    // non-idempotents grouped into {x, x⁻¹}
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in t.elements().filter(|&x| !t.is_idempotent(x)) {
        let inv = t.inverses_of(x)[0];
        if inv >= x {
            orbits.push(if inv == x { vec![x] } else { vec![x, inv] });
        }
    }
    let mut out = Vec::new();
    let mut chosen = idem.to_vec();
    pick_orbits(t, &orbits, 0, size, &mut chosen, &mut out);
    out.sort();
    out
}

fn pick_orbits(
    t: &Semigroup,
    orbits: &[Vec<usize>],
    from: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Subset>,
) {
    if chosen.len() == size {
        let candidate = Subset::new(chosen.clone());
        if t.is_subsemigroup(&candidate) {
            out.push(candidate);
        }
        return;
    }
    for k in from..orbits.len() {
        if chosen.len() + orbits[k].len() > size {
            continue;
        }
        chosen.extend(&orbits[k]);
        pick_orbits(t, orbits, k + 1, size, chosen, out);
        chosen.truncate(chosen.len() - orbits[k].len());
    }
}
