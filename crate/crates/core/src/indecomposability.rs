//! Semilattice-indecomposability, decided three independent ways.
//!
//! * the divisibility graph: `x → y` when `x` divides some power of `y`;
//!   the semigroup is s-indecomposable iff the graph is strongly connected;
//! * completely prime ideals: there must be none;
//! * the algebra test: `Q[S/K_S] / J` has exactly one 1-dimensional block.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use crate::algebra::{semigroup_algebra, summary, AlgebraSummary};
use crate::error::Result;
use crate::semigroup::{Semigroup, Subset};

/// Edge `x → y` iff `y^k ∈ S¹xS¹` for some `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityGraph {
    n: usize,
    adjacency: Vec<bool>,
}

impl DivisibilityGraph {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adjacency[x * self.n + y]
    }

    /// Strongly connected components, each sorted, listed in reverse
    /// topological order of the condensation (sinks first).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut g = DiGraph::<(), ()>::with_capacity(self.n, 0);
        let nodes: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.has_edge(x, y) {
                    g.add_edge(nodes[x], nodes[y], ());
                }
            }
        }
        tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| v.index()).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components().len() == 1
    }
}

pub fn divisibility_graph(s: &Semigroup) -> DivisibilityGraph {
    let n = s.size();
    let divisors: Vec<Vec<bool>> = s.elements().map(|x| s.principal_ideal(x).mask(n)).collect();
    let powers: Vec<Vec<usize>> = s.elements().map(|y| s.cyclic(y).0).collect();
    let mut adjacency = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            adjacency[x * n + y] = powers[y].iter().any(|&p| divisors[x][p]);
        }
    }
    DivisibilityGraph { n, adjacency }
}

pub fn is_s_indecomposable_graph(s: &Semigroup) -> bool {
    divisibility_graph(s).is_strongly_connected()
}

/// Proper nonempty ideals whose complement is a subsemigroup.
pub fn completely_prime_ideals(s: &Semigroup) -> Result<Vec<Subset>> {
    let n = s.size();
    Ok(s.ideals()?
        .into_iter()
        .filter(|i| i.len() < n && s.is_subsemigroup(&i.complement(n)))
        .collect())
}

/// `S/K_S`, or the one-element semigroup when `S` is simple.
pub fn kernel_quotient(s: &Semigroup) -> Semigroup {
    let k = s.kernel();
    if k.len() == s.size() {
        Semigroup::trivial()
    } else {
        s.rees_quotient(&k).expect("the kernel is an ideal").0
    }
}

/// Summary of `Q[S/K_S]`; the verdict is `one_dim_blocks == 1`.
pub fn kernel_quotient_summary(s: &Semigroup) -> AlgebraSummary {
    summary(&semigroup_algebra(&kernel_quotient(s)))
}

pub fn is_s_indecomposable_algebra(s: &Semigroup) -> bool {
    kernel_quotient_summary(s).one_dim_blocks == 1
}

/// All three verdicts, with a separating completely prime ideal when the
/// answer is negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub graph: bool,
    pub algebra: bool,
    pub prime_ideals: bool,
    pub components: Vec<Vec<usize>>,
    pub kernel_quotient_summary: AlgebraSummary,
    pub separating_ideal: Option<Subset>,
}

impl Verdicts {
    pub fn agree(&self) -> bool {
        self.graph == self.algebra && self.algebra == self.prime_ideals
    }
}

pub fn verdicts(s: &Semigroup) -> Result<Verdicts> {
    let graph = divisibility_graph(s);
    let components = graph.components();
    let primes = completely_prime_ideals(s)?;
    let summary = kernel_quotient_summary(s);
    Ok(Verdicts {
        graph: components.len() == 1,
        algebra: summary.one_dim_blocks == 1,
        prime_ideals: primes.is_empty(),
        components,
        kernel_quotient_summary: summary,
        separating_ideal: primes.into_iter().next(),
    })
}
