//! Semigroup constructions.
//!
//! Conventions:
//!
//! * `rees_matrix` puts the zero at index 0 and `(g; i, λ)` at
//!   `1 + (i·|Λ| + λ)·|G| + g`; the sandwich matrix is indexed `[λ][i]`.
//! * `times0` and the other quotient-based constructions keep the collapsed
//!   zero at index 0 (see [`Semigroup::rees_quotient`]).
//! * `adjoin_zero` and `adjoin_zprime` append the new element at the end.
//! * Munn semigroups compose left to right: `αβ` applies `α` first.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Morphism, Semigroup, Subset};

/// The Brandt semigroup `B₂ = M⁰(1; 2, 2; I)` with elements
/// `0 = zero, 1 = a, 2 = b, 3 = c, 4 = d`; `a` and `d` are the nonzero
/// idempotents.
pub fn b2() -> Semigroup {
    Semigroup::from_rows(
        &[
            vec![0, 0, 0, 0, 0],
            vec![0, 1, 2, 0, 0],
            vec![0, 0, 0, 1, 2],
            vec![0, 3, 4, 0, 0],
            vec![0, 0, 0, 3, 4],
        ],
        Some(0),
    )
    .expect("reference table is valid")
}

/// Index of the idempotent `a` in [`b2`].
pub const B2_A: usize = 1;
/// Index of the idempotent `d` in [`b2`].
pub const B2_D: usize = 4;

/// Parameters of a Rees matrix semigroup `M⁰(G; I, Λ; P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesMatrixSpec {
    group: Semigroup,
    identity: usize,
    rows: usize,
    cols: usize,
    sandwich: Vec<Vec<Option<usize>>>,
}

impl ReesMatrixSpec {
    /// `rows = |I|`, `cols = |Λ|`; `sandwich[λ][i]` is a group element or
    /// `None` for zero. Every row and column must contain a nonzero entry.
    pub fn new(
        group: Semigroup,
        rows: usize,
        cols: usize,
        sandwich: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        if !group.is_group() {
            return Err(Error::NotAGroup("no identity or missing inverses".into()));
        }
        let identity = group.identity().expect("groups have an identity");
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("index sets must be nonempty".into()));
        }
        if sandwich.len() != cols || sandwich.iter().any(|r| r.len() != rows) {
            return Err(Error::InvalidArgument(format!(
                "sandwich matrix must be {cols}×{rows}"
            )));
        }
        if sandwich
            .iter()
            .flatten()
            .flatten()
            .any(|&g| g >= group.size())
        {
            return Err(Error::InvalidArgument(
                "sandwich entry outside the group".into(),
            ));
        }
        if let Some(l) = (0..cols).find(|&l| sandwich[l].iter().all(Option::is_none)) {
            return Err(Error::IrregularSandwich {
                kind: "row",
                index: l,
            });
        }
        if let Some(i) = (0..rows).find(|&i| sandwich.iter().all(|r| r[i].is_none())) {
            return Err(Error::IrregularSandwich {
                kind: "column",
                index: i,
            });
        }
        Ok(ReesMatrixSpec {
            group,
            identity,
            rows,
            cols,
            sandwich,
        })
    }

    /// Over the trivial group with a 0/1 pattern.
    pub fn trivial_group(pattern: &[Vec<u8>]) -> Result<Self> {
        let cols = pattern.len();
        let rows = pattern.first().map_or(0, Vec::len);
        let sandwich = pattern
            .iter()
            .map(|r| r.iter().map(|&v| (v != 0).then_some(0)).collect())
            .collect();
        ReesMatrixSpec::new(Semigroup::trivial(), rows, cols, sandwich)
    }

    pub fn group(&self) -> &Semigroup {
        &self.group
    }

    pub fn group_identity(&self) -> usize {
        self.identity
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn sandwich(&self) -> &[Vec<Option<usize>>] {
        &self.sandwich
    }

    pub fn element_index(&self, g: usize, i: usize, l: usize) -> usize {
        1 + (i * self.cols + l) * self.group.size() + g
    }
}

/// `M⁰(G; I, Λ; P)`: `(g; i, λ)(h; j, μ) = (g p_{λj} h; i, μ)` when
/// `p_{λj} ≠ 0`, else zero.
pub fn rees_matrix(spec: &ReesMatrixSpec) -> Semigroup {
    let gs = spec.group.size();
    let n = 1 + gs * spec.rows * spec.cols;
    let decode = |x: usize| {
        let k = x - 1;
        (k % gs, k / gs / spec.cols, k / gs % spec.cols)
    };
    let mut table = vec![0; n * n];
    for x in 1..n {
        let (g, i, l) = decode(x);
        for y in 1..n {
            let (h, j, mu) = decode(y);
            if let Some(p) = spec.sandwich[l][j] {
                let prod = spec.group.mul(spec.group.mul(g, p), h);
                table[x * n + y] = spec.element_index(prod, i, mu);
            }
        }
    }
    Semigroup::from_flat(n, table, Some(0)).expect("Rees matrix semigroups are associative")
}

/// `B_n = M⁰(1; n, n; I)`, with `n² + 1` elements.
pub fn brandt(n: usize) -> Result<Semigroup> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "brandt order must be positive".into(),
        ));
    }
    let pattern: Vec<Vec<u8>> = (0..n)
        .map(|l| (0..n).map(|i| u8::from(i == l)).collect())
        .collect();
    Ok(rees_matrix(&ReesMatrixSpec::trivial_group(&pattern)?))
}

/// `A ×₀ B` together with the quotient map from `A × B`.
pub fn times0_with_map(a: &Semigroup, b: &Semigroup) -> Result<(Semigroup, Morphism)> {
    let za = a.zero().ok_or_else(|| Error::NoZeroElement {
        what: "left factor".into(),
    })?;
    let zb = b.zero().ok_or_else(|| Error::NoZeroElement {
        what: "right factor".into(),
    })?;
    let product = a.direct_product(b);
    let nb = b.size();
    let ideal: Subset = (0..product.size())
        .filter(|&p| p / nb == za || p % nb == zb)
        .collect();
    product.rees_quotient(&ideal)
}

/// `(A × B) / (({z_A} × B) ∪ (A × {z_B}))`, of size `(|A|−1)(|B|−1)+1`.
pub fn times0(a: &Semigroup, b: &Semigroup) -> Result<Semigroup> {
    Ok(times0_with_map(a, b)?.0)
}

/// `S⁰`: a new zero appended at index `|S|`, even when `S` already has one.
pub fn adjoin_zero(s: &Semigroup) -> Semigroup {
    let n = s.size();
    let m = n + 1;
    let mut table = vec![n; m * m];
    for x in 0..n {
        for y in 0..n {
            table[x * m + y] = s.mul(x, y);
        }
    }
    Semigroup::from_flat(m, table, Some(n)).expect("adjoining a zero preserves associativity")
}

/// Appends `z'` at index `|S|` with every product involving `z'` equal to
/// the zero of `S`.
pub fn adjoin_zprime(s: &Semigroup) -> Result<Semigroup> {
    let z = s.zero().ok_or_else(|| Error::NoZeroElement {
        what: "z' extension input".into(),
    })?;
    let n = s.size();
    let m = n + 1;
    let mut table = vec![z; m * m];
    for x in 0..n {
        for y in 0..n {
            table[x * m + y] = s.mul(x, y);
        }
    }
    Semigroup::from_flat(m, table, Some(z))
}

/// Embeds `S` into the s-indecomposable semigroup `S⁰ ×₀ B₂` of size
/// `4|S| + 1`, via `s ↦ (s, a)`.
pub fn embed_indecomposable(s: &Semigroup) -> (Semigroup, Morphism) {
    let s0 = adjoin_zero(s);
    let (t, quotient) = times0_with_map(&s0, &b2()).expect("both factors have zeros");
    let embedding = Morphism::new(s.elements().map(|x| quotient.apply(x * 5 + B2_A)).collect());
    debug_assert!(embedding.is_injective() && embedding.is_homomorphism(s, &t));
    (t, embedding)
}

/// A commutative semigroup of idempotents, ordered by `x ≤ y ⇔ xy = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilattice {
    sg: Semigroup,
}

impl Semilattice {
    pub fn new(sg: Semigroup) -> Result<Self> {
        if let Some(x) = sg.elements().find(|&x| !sg.is_idempotent(x)) {
            return Err(Error::NotASemilattice(format!(
                "element {x} is not idempotent"
            )));
        }
        if !sg.is_commutative() {
            return Err(Error::NotASemilattice(
                "multiplication is not commutative".into(),
            ));
        }
        Ok(Semilattice { sg })
    }

    /// The idempotents of `s` as a semilattice, when they form one.
    pub fn of_idempotents(s: &Semigroup) -> Result<Self> {
        let e = s.idempotents();
        let (sub, _) = s.restrict(&e)?;
        Semilattice::new(sub)
    }

    /// A tree-shaped semilattice with element 0 as the bottom; `parents[x]`
    /// is the element directly below `x` (ignored for 0, must be smaller
    /// than `x` otherwise). The meet of two elements is their deepest common
    /// ancestor.
    pub fn from_parents(parents: &[usize]) -> Result<Self> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if (1..n).any(|x| parents[x] >= x) {
            return Err(Error::InvalidArgument(
                "parents must precede their children".into(),
            ));
        }
        let ancestors = |mut x: usize| {
            let mut path = vec![x];
            while x != 0 {
                x = parents[x];
                path.push(x);
            }
            path
        };
        let paths: Vec<Vec<usize>> = (0..n).map(ancestors).collect();
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = *paths[x].iter().find(|a| paths[y].contains(a)).unwrap();
            }
        }
        Semilattice::new(Semigroup::from_flat(n, table, None)?)
    }

    /// The chain `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let parents: Vec<usize> = (0..n).map(|x| x.saturating_sub(1)).collect();
        Semilattice::from_parents(&parents)
    }

    /// `C3`, `V`, `U`, `F` or `X`.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "C3" => Semilattice::chain(3),
            "V" => Semilattice::from_parents(&[0, 0, 0]),
            "U" => Semilattice::from_parents(&[0, 0, 0, 1, 2]),
            "F" => Semilattice::from_parents(&[0, 0, 0, 2, 2]),
            "X" => Semilattice::from_parents(&[0, 0, 0, 0, 0]),
            other => Err(Error::InvalidArgument(format!(
                "unknown semilattice {other:?}"
            ))),
        }
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.sg
    }

    pub fn into_semigroup(self) -> Semigroup {
        self.sg
    }

    pub fn size(&self) -> usize {
        self.sg.size()
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.sg.mul(x, y)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.sg.mul(x, y) == x
    }

    pub fn bottom(&self) -> usize {
        self.sg
            .zero()
            .expect("finite semilattices have a least element")
    }

    /// `Ee = {x : x ≤ e}` in ascending order.
    pub fn down_set(&self, e: usize) -> Vec<usize> {
        self.sg.elements().filter(|&x| self.leq(x, e)).collect()
    }
}

/// A semilattice isomorphism between the principal ideals `Ee` and `Ef`,
/// stored as its graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialIso {
    pub domain_root: usize,
    pub range_root: usize,
    pub graph: Vec<(usize, usize)>,
}

impl PartialIso {
    pub fn image(&self, x: usize) -> Option<usize> {
        self.graph.iter().find(|(a, _)| *a == x).map(|&(_, b)| b)
    }

    pub fn preimage(&self, y: usize) -> Option<usize> {
        self.graph.iter().find(|(_, b)| *b == y).map(|&(a, _)| a)
    }

    pub fn is_identity(&self) -> bool {
        self.graph.iter().all(|(a, b)| a == b)
    }
}

pub const MUNN_LIMIT: usize = 8;

/// All isomorphisms `Ee → Ef`, sorted by `(e, f, graph)`.
pub fn munn_elements(e: &Semilattice) -> Result<Vec<PartialIso>> {
    if e.size() > MUNN_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "Munn semigroup",
            size: e.size(),
            limit: MUNN_LIMIT,
        });
    }
    let n = e.size();
    let downs: Vec<Vec<usize>> = (0..n).map(|x| e.down_set(x)).collect();
    let mut out = Vec::new();
    for d in 0..n {
        for r in 0..n {
            if downs[d].len() != downs[r].len() {
                continue;
            }
            let mut assignment = vec![usize::MAX; downs[d].len()];
            let mut used = vec![false; n];
            order_isos(
                e,
                &downs[d],
                &downs[r],
                0,
                &mut assignment,
                &mut used,
                &mut |graph| {
                    out.push(PartialIso {
                        domain_root: d,
                        range_root: r,
                        graph,
                    });
                },
            );
        }
    }
    out.sort();
    Ok(out)
}

fn order_isos(
    e: &Semilattice,
    dom: &[usize],
    range: &[usize],
    k: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    emit: &mut dyn FnMut(Vec<(usize, usize)>),
) {
    if k == dom.len() {
        let image = |x: usize| assignment[dom.iter().position(|&v| v == x).unwrap()];
        let preserves = dom.iter().all(|&x| {
            dom.iter()
                .all(|&y| image(e.meet(x, y)) == e.meet(image(x), image(y)))
        });
        if preserves {
            emit(
                dom.iter()
                    .copied()
                    .zip(assignment.iter().copied())
                    .collect(),
            );
        }
        return;
    }
    for &y in range {
        if used[y] {
            continue;
        }
        assignment[k] = y;
        // meets with already-placed elements must be preserved
        let consistent = (0..=k).all(|i| {
            let m = e.meet(dom[i], dom[k]);
            match dom[..=k].iter().position(|&v| v == m) {
                Some(pos) => assignment[pos] == e.meet(assignment[i], y),
                None => true,
            }
        });
        if consistent {
            used[y] = true;
            order_isos(e, dom, range, k + 1, assignment, used, emit);
            used[y] = false;
        }
    }
    assignment[k] = usize::MAX;
}

/// The Munn semigroup `T_E` of a semilattice with at most [`MUNN_LIMIT`]
/// elements. Element `i` of the result is `munn_elements(e)[i]`.
pub fn munn(e: &Semilattice) -> Result<Semigroup> {
    let elems = munn_elements(e)?;
    let index: HashMap<&PartialIso, usize> =
        elems.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let m = elems.len();
    let mut table = vec![0; m * m];
    for (i, alpha) in elems.iter().enumerate() {
        for (j, beta) in elems.iter().enumerate() {
            // dom(αβ) = α⁻¹(Ef ∩ Eg) = α⁻¹(E(fg))
            let meet = e.meet(alpha.range_root, beta.domain_root);
            let root = alpha
                .preimage(meet)
                .expect("meet lies below the range root");
            let mut graph: Vec<(usize, usize)> = alpha
                .graph
                .iter()
                .filter(|&&(_, y)| e.leq(y, meet))
                .map(|&(x, y)| (x, beta.image(y).expect("inside the domain of β")))
                .collect();
            graph.sort_unstable();
            let product = PartialIso {
                domain_root: root,
                range_root: beta.image(meet).unwrap(),
                graph,
            };
            table[i * m + j] = index[&product];
        }
    }
    Semigroup::from_flat(m, table, None)
}
