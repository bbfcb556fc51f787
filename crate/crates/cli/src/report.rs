use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use semilab::algebra::{numerical_block_sizes, semigroup_algebra, summary, AlgebraSummary};
use semilab::indecomposability::{verdicts, Verdicts};
use semilab::lattice::{
    check_bound, is_b2_combinatorial, is_b2_combinatorial_via_factors, max_subsemilattice,
    principal_factor, BoundReport, FactorKind,
};
use semilab::{Error, Semigroup, Subset};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    /// `sha256:` followed by the hex digest of the input bytes.
    pub input_digest: String,
    pub size: usize,
    pub zero: Option<usize>,
    pub idempotents: Subset,
    pub kernel: Subset,
    pub s_indecomposable: Verdicts,
    pub algebra: AlgebraSummary,
    pub blocks: Vec<usize>,
    pub max_subsemilattice: MaxSubsemilattice,
    pub bound: BoundReport,
    pub b2_combinatorial: B2Verdicts,
    pub principal_factors: Vec<FactorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxSubsemilattice {
    pub size: usize,
    pub witness: Subset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct B2Verdicts {
    pub definition: bool,
    pub principal_factors: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub element: usize,
    pub kind: FactorKind,
    pub size: usize,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Builds the report; disagreeing verdicts come back as
/// [`Error::Invariant`].
pub fn analyze(s: &Semigroup, input: &[u8], seed: u64) -> Result<AnalysisReport, Error> {
    let v = verdicts(s)?;
    if !v.agree() {
        return Err(Error::Invariant(format!(
            "s-indecomposability verdicts disagree: graph {}, algebra {}, prime ideals {}",
            v.graph, v.algebra, v.prime_ideals
        )));
    }
    let a = semigroup_algebra(s);
    let algebra = summary(&a);
    let blocks = numerical_block_sizes(&a, seed)?;
    let (size, witness) = max_subsemilattice(s);
    let b2 = B2Verdicts {
        definition: is_b2_combinatorial(s),
        principal_factors: is_b2_combinatorial_via_factors(s)?,
    };
    if b2.definition != b2.principal_factors {
        return Err(Error::Invariant(format!(
            "B2-combinatorial verdicts disagree: definition {}, principal factors {}",
            b2.definition, b2.principal_factors
        )));
    }
    let principal_factors = s
        .elements()
        .map(|x| {
            principal_factor(s, x).map(|pf| FactorEntry {
                element: x,
                kind: pf.kind,
                size: pf.factor.size(),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(AnalysisReport {
        schema: SCHEMA,
        input_digest: digest(input),
        size: s.size(),
        zero: s.zero(),
        idempotents: s.idempotents(),
        kernel: s.kernel(),
        s_indecomposable: v,
        algebra,
        blocks,
        max_subsemilattice: MaxSubsemilattice { size, witness },
        bound: check_bound(s)?,
        b2_combinatorial: b2,
        principal_factors,
    })
}

fn set(s: &Subset) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn kind_name(k: FactorKind) -> &'static str {
    match k {
        FactorKind::ZeroSimple => "0-simple",
        FactorKind::Simple => "simple",
        FactorKind::Null => "null",
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let v = &self.s_indecomposable;
        let a = &self.algebra;
        let mut lines = vec![
            format!("input: {}", self.input_digest),
            format!("size: {}", self.size),
            format!(
                "zero: {}",
                self.zero.map_or("none".to_string(), |z| z.to_string())
            ),
            format!("idempotents: {}", set(&self.idempotents)),
            format!("kernel: {}", set(&self.kernel)),
            format!(
                "s-indecomposable: {} (graph {}, algebra {}, prime ideals {})",
                v.graph, v.graph, v.algebra, v.prime_ideals
            ),
            format!("divisibility components: {}", v.components.len()),
        ];
        if let Some(i) = &v.separating_ideal {
            lines.push(format!("completely prime ideal: {}", set(i)));
        }
        lines.push(format!(
            "algebra: dim {}, radical {}, blocks {}, one-dimensional {}",
            a.dim, a.radical_dim, a.num_blocks, a.one_dim_blocks
        ));
        lines.push(format!("block sizes: {:?}", self.blocks));
        lines.push(format!(
            "max subsemilattice: {} {}",
            self.max_subsemilattice.size,
            set(&self.max_subsemilattice.witness)
        ));
        lines.push(format!(
            "bound 2*floor((n-1)/4)+1 = {}: holds {}, tight {}",
            self.bound.bound, self.bound.holds, self.bound.tight
        ));
        if let Some(z) = &self.bound.zero_simple {
            lines.push(format!(
                "0-simple bound sqrt(n-1)+1: holds {}, tight {}",
                z.holds, z.tight
            ));
        }
        lines.push(format!(
            "B2-combinatorial: {}",
            self.b2_combinatorial.definition
        ));
        let kinds: Vec<String> = self
            .principal_factors
            .iter()
            .map(|f| format!("{}:{}/{}", f.element, kind_name(f.kind), f.size))
            .collect();
        lines.push(format!("principal factors: {}", kinds.join(" ")));
        lines.join("\n") + "\n"
    }
}
