//! Subsemilattices, the `2⌊(n−1)/4⌋+1` bound, principal factors and
//! B₂-combinatorial semigroups.

use serde::{Deserialize, Serialize};

use crate::algebra::{numerical_block_sizes, semigroup_algebra, summary, AlgebraSummary};
use crate::congruence::{congruences, quotient, CONGRUENCE_LIMIT};
use crate::constructions::{adjoin_zprime, b2, brandt, times0_with_map, Semilattice, B2_A, B2_D};
use crate::error::{Error, Result};
use crate::indecomposability::{is_s_indecomposable_graph, verdicts};
use crate::iso::are_isomorphic;
use crate::semigroup::{Semigroup, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    ZeroSimple,
    Simple,
    /// All products are zero. The one-element factor counts as null.
    Null,
}

/// `J(a)/I(a)`, or `J(a)` itself when `I(a)` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalFactor {
    pub element: usize,
    pub factor: Semigroup,
    pub kind: FactorKind,
}

pub fn is_simple(s: &Semigroup) -> bool {
    s.elements().all(|a| s.principal_ideal(a).len() == s.size())
}

/// Has a zero, is not null, and every nonzero element generates `S`.
pub fn is_zero_simple(s: &Semigroup) -> bool {
    match s.zero() {
        Some(z) => {
            s.size() > 1
                && !s.is_null()
                && s.elements()
                    .filter(|&a| a != z)
                    .all(|a| s.principal_ideal(a).len() == s.size())
        }
        None => false,
    }
}

pub fn factor_kind(s: &Semigroup) -> Option<FactorKind> {
    if s.size() == 1 || s.is_null() {
        Some(FactorKind::Null)
    } else if is_simple(s) {
        Some(FactorKind::Simple)
    } else if is_zero_simple(s) {
        Some(FactorKind::ZeroSimple)
    } else {
        None
    }
}

pub fn principal_factor(s: &Semigroup, a: usize) -> Result<PrincipalFactor> {
    let j = s.principal_ideal(a);
    let lower: Subset = j
        .iter()
        .copied()
        .filter(|&b| s.principal_ideal(b) != j)
        .collect();
    let (sub, inclusion) = s.restrict(&j)?;
    let factor = if lower.is_empty() {
        sub
    } else {
        // `lower` is an ideal of S inside J(a); translate it into J(a)'s labels
        let local: Subset = (0..sub.size())
            .filter(|&i| lower.contains(inclusion.apply(i)))
            .collect();
        sub.rees_quotient(&local)?.0
    };
    let kind = factor_kind(&factor).ok_or_else(|| {
        Error::Invariant(format!(
            "principal factor of {a} is neither 0-simple, simple nor null"
        ))
    })?;
    Ok(PrincipalFactor {
        element: a,
        factor,
        kind,
    })
}

/// Largest subsemilattice, with the lexicographically least witness among
/// those of maximum size.
///
/// Branch and bound over idempotents in index order: every member must
/// commute with the others, and a product that falls below the last added
/// element without being a member kills the branch.
pub fn max_subsemilattice(s: &Semigroup) -> (usize, Subset) {
    let idem = s.idempotents().to_vec();
    let mut best = Vec::new();
    let mut current = Vec::new();
    grow(s, &mut current, &idem, &mut best);
    (best.len(), Subset::new(best))
}

fn grow(s: &Semigroup, current: &mut Vec<usize>, candidates: &[usize], best: &mut Vec<usize>) {
    if current.len() > best.len() && is_closed(s, current) {
        *best = current.clone();
    }
    for (pos, &v) in candidates.iter().enumerate() {
        let rest = &candidates[pos + 1..];
        if current.len() + 1 + rest.len() <= best.len() {
            return;
        }
        let next: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&w| s.mul(v, w) == s.mul(w, v))
            .collect();
        current.push(v);
        if closure_possible(s, current, v, &next) {
            grow(s, current, &next, best);
        }
        current.pop();
    }
}

fn is_closed(s: &Semigroup, set: &[usize]) -> bool {
    set.iter()
        .all(|&x| set.iter().all(|&y| set.contains(&s.mul(x, y))))
}

/// Products already settled (index ≤ last) must be members; later ones must
/// still be available.
fn closure_possible(s: &Semigroup, set: &[usize], last: usize, later: &[usize]) -> bool {
    set.iter().all(|&x| {
        let p = s.mul(x, last);
        if p <= last {
            set.contains(&p)
        } else {
            later.contains(&p)
        }
    })
}

/// `2⌊(n−1)/4⌋ + 1`.
pub fn subsemilattice_bound(n: usize) -> usize {
    2 * ((n - 1) / 4) + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub size: usize,
    pub max_subsemilattice: usize,
    pub bound: usize,
    pub holds: bool,
    pub tight: bool,
    /// Present when the semigroup is completely 0-simple.
    pub zero_simple: Option<ZeroSimpleBound>,
}

/// `|Y| ≤ √(|S|−1) + 1` for completely 0-simple semigroups, with equality
/// only for `M⁰(1; n, n; I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSimpleBound {
    pub holds: bool,
    pub tight: bool,
    /// Whether the semigroup is a Brandt semigroup `B_n` with
    /// `n = |Y| − 1`; checked only in the tight case.
    pub brandt: Option<bool>,
}

pub fn check_bound(s: &Semigroup) -> Result<BoundReport> {
    let n = s.size();
    let (max, _) = max_subsemilattice(s);
    let bound = subsemilattice_bound(n);
    let zero_simple = if is_zero_simple(s) {
        let lhs = (max - 1) * (max - 1);
        let tight = lhs == n - 1;
        Some(ZeroSimpleBound {
            holds: lhs < n,
            tight,
            brandt: if tight {
                Some(are_isomorphic(s, &brandt(max - 1)?))
            } else {
                None
            },
        })
    } else {
        None
    };
    Ok(BoundReport {
        size: n,
        max_subsemilattice: max,
        bound,
        holds: max <= bound,
        tight: max == bound,
        zero_simple,
    })
}

/// s-indecomposable, `|S| = 4k+1`, with a subsemilattice of size `2k+1`.
pub fn is_b2_combinatorial(s: &Semigroup) -> bool {
    let n = s.size();
    (n - 1).is_multiple_of(4)
        && is_s_indecomposable_graph(s)
        && max_subsemilattice(s).0 == subsemilattice_bound(n)
}

/// Has a zero, and every nonzero principal factor is `B₂`.
pub fn is_b2_combinatorial_via_factors(s: &Semigroup) -> Result<bool> {
    let Some(z) = s.zero() else {
        return Ok(false);
    };
    let b = b2();
    for a in s.elements().filter(|&a| a != z) {
        if !are_isomorphic(&principal_factor(s, a)?.factor, &b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An `n`-element s-indecomposable semigroup with a subsemilattice of the
/// maximal size `2⌊(n−1)/4⌋+1`.
///
/// With `n = 4k + 1 + l`, `0 ≤ l < 4`, this is `C_{k+1} ×₀ B₂` followed by
/// `l` z′-extensions, and the subsemilattice is the image of
/// `C_{k+1} ×₀ {0, a, d}`. For `k = 0` the base is the one-element semigroup.
pub fn extremal_witness(n: usize) -> Result<(Semigroup, Subset)> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let (k, l) = ((n - 1) / 4, (n - 1) % 4);
    let chain = Semilattice::chain(k + 1)?;
    let (mut s, map) = times0_with_map(chain.semigroup(), &b2())?;
    let mut y = vec![map.apply(0)];
    for c in 1..=k {
        y.push(map.apply(c * 5 + B2_A));
        y.push(map.apply(c * 5 + B2_D));
    }
    let y = Subset::new(y);
    for _ in 0..l {
        s = adjoin_zprime(&s)?;
    }
    let v = verdicts(&s)?;
    let is_semilattice = s.is_subsemigroup(&y) && s.restrict(&y)?.0.is_semilattice();
    if s.size() != n
        || !v.graph
        || !v.agree()
        || !is_semilattice
        || y.len() != subsemilattice_bound(n)
    {
        return Err(Error::Invariant(format!(
            "extremal witness for n = {n} failed verification"
        )));
    }
    Ok((s, y))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop8Report {
    pub k: usize,
    pub has_zero: bool,
    pub summary: AlgebraSummary,
    pub expected_summary: AlgebraSummary,
    pub blocks: Vec<usize>,
    pub algebra_ok: bool,
    pub ideals_checked: usize,
    pub ideals_ok: bool,
    pub quotients_checked: usize,
    pub quotients_ok: bool,
}

impl Prop8Report {
    pub fn all_hold(&self) -> bool {
        self.has_zero && self.algebra_ok && self.ideals_ok && self.quotients_ok
    }
}

/// Checks, for a B₂-combinatorial `S` with `|S| = 4k+1`: a zero exists; the
/// algebra summary is `(4k+1, 0, k+1, 1)` with blocks `{1, 2, …, 2}`; every
/// ideal and every homomorphic image is again B₂-combinatorial.
pub fn verify_prop8(s: &Semigroup, seed: u64) -> Result<Prop8Report> {
    if !is_b2_combinatorial(s) {
        return Err(Error::InvalidArgument(
            "input is not B2-combinatorial".into(),
        ));
    }
    if s.size() > CONGRUENCE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "homomorphic image check",
            size: s.size(),
            limit: CONGRUENCE_LIMIT,
        });
    }
    let n = s.size();
    let k = (n - 1) / 4;
    let a = semigroup_algebra(s);
    let summary = summary(&a);
    let expected_summary = AlgebraSummary {
        dim: n,
        radical_dim: 0,
        num_blocks: k + 1,
        one_dim_blocks: 1,
    };
    let blocks = numerical_block_sizes(&a, seed)?;
    let mut expected_blocks = vec![2; k];
    expected_blocks.insert(0, 1);

    let ideals = s.ideals()?;
    let mut ideals_ok = true;
    for i in &ideals {
        ideals_ok &= is_b2_combinatorial(&s.restrict(i)?.0);
    }
    let congs = congruences(s)?;
    let mut quotients_ok = true;
    for c in &congs {
        quotients_ok &= is_b2_combinatorial(&quotient(s, c)?.0);
    }
    Ok(Prop8Report {
        k,
        has_zero: s.zero().is_some(),
        summary,
        expected_summary,
        algebra_ok: summary == expected_summary && blocks == expected_blocks,
        blocks,
        ideals_checked: ideals.len(),
        ideals_ok,
        quotients_checked: congs.len(),
        quotients_ok,
    })
}
