//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{chain2, corpus, cyclic_group, null};
use semilab::algebra::{
    numerical_block_sizes, radical, semigroup_algebra, summary, CLUSTER_TOLERANCE,
};
use semilab::constructions::{
    adjoin_zprime, b2, brandt, embed_indecomposable, munn, rees_matrix, times0, ReesMatrixSpec,
    Semilattice,
};
use semilab::enumeration::{
    canonicalize, classify_order9, enumerate_semigroups, full_inverse_subsemigroups,
};
use semilab::indecomposability::{is_s_indecomposable_graph, verdicts};
use semilab::lattice::{
    check_bound, extremal_witness, is_b2_combinatorial, is_b2_combinatorial_via_factors,
    is_zero_simple, max_subsemilattice, subsemilattice_bound, verify_prop8,
};
use semilab::{are_isomorphic, AlgebraSummary, Semigroup};

const SAMPLE_SEED: u64 = 0;
const ORDER5_SAMPLE: usize = 200;
const BLOCK_SEED: u64 = 0;

const LIMIT_VERDICTS: Duration = Duration::from_secs(60);
const LIMIT_TWO_IDEMPOTENTS: Duration = Duration::from_secs(600);
const LIMIT_EXTREMAL: Duration = Duration::from_secs(10);
const LIMIT_ORDER9: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.pass &= elapsed <= limit;
    o.detail = format!(
        "{} [{:.1}s, limit {}s]",
        o.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    o
}

fn has_two_commuting_idempotents(s: &Semigroup) -> bool {
    let e = s.idempotents();
    e.iter()
        .any(|&x| e.iter().any(|&y| x < y && s.mul(x, y) == s.mul(y, x)))
}

fn c1_verdicts(order5: &[Semigroup]) -> Outcome {
    timed(LIMIT_VERDICTS, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let sample = rand::seq::index::sample(&mut rng, order5.len(), ORDER5_SAMPLE);
        let pool: Vec<&Semigroup> = corpus()
            .iter()
            .chain(sample.iter().map(|i| &order5[i]))
            .collect();
        let disagreements = pool
            .iter()
            .filter(|s| !verdicts(s).unwrap().agree())
            .count();
        outcome(
            disagreements == 0,
            format!(
                "{} semigroups ({} of order <= 4, {} sampled of order 5), {} disagreements",
                pool.len(),
                corpus().len(),
                ORDER5_SAMPLE,
                disagreements
            ),
        )
    })
}

fn c2_two_idempotents() -> Outcome {
    timed(LIMIT_TWO_IDEMPOTENTS, || {
        let predicate =
            |s: &Semigroup| is_s_indecomposable_graph(s) && has_two_commuting_idempotents(s);
        let small = corpus().iter().filter(|s| predicate(s)).count();
        let found = semilab::enumeration::enumerate_where(5, predicate).unwrap();
        let p = rees_matrix(&ReesMatrixSpec::trivial_group(&[vec![1, 1], vec![0, 1]]).unwrap());
        let expected = [canonicalize(&b2()), canonicalize(&p)];
        let matches = found.len() == 2 && expected.iter().all(|c| found.contains(c));
        outcome(
            small == 0 && matches,
            format!(
                "{small} classes below order 5, {} at order 5 (B2 and M0(1;2,2;P) expected)",
                found.len()
            ),
        )
    })
}

fn c3_bound(order5: &[Semigroup]) -> Outcome {
    let mut checked = 0;
    let mut violations = 0;
    for s in corpus()
        .iter()
        .chain(order5)
        .filter(|s| is_s_indecomposable_graph(s))
    {
        checked += 1;
        if max_subsemilattice(s).0 > subsemilattice_bound(s.size()) {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("{checked} s-indecomposable classes of order <= 5, {violations} violations"),
    )
}

fn c4_extremal() -> Outcome {
    timed(LIMIT_EXTREMAL, || {
        let mut bad = Vec::new();
        for n in 1..=13 {
            let ok = match extremal_witness(n) {
                Ok((s, y)) => {
                    let v = verdicts(&s).unwrap();
                    s.size() == n
                        && v.graph
                        && v.algebra
                        && v.prime_ideals
                        && y.len() == subsemilattice_bound(n)
                }
                Err(_) => false,
            };
            if !ok {
                bad.push(n);
            }
        }
        outcome(bad.is_empty(), format!("n = 1..13, failures {bad:?}"))
    })
}

fn c5_times0() -> Outcome {
    let pool = common::with_zero_up_to(3);
    let mut pairs = 0;
    let mut violations = 0;
    for a in &pool {
        for b in &pool {
            pairs += 1;
            let lhs = is_s_indecomposable_graph(&times0(a, b).unwrap());
            let rhs = is_s_indecomposable_graph(a) || is_s_indecomposable_graph(b);
            if lhs != rhs {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{pairs} ordered pairs of order <= 3 with zero, {violations} violations"),
    )
}

fn zprime_inputs() -> Vec<Semigroup> {
    let mut v: Vec<Semigroup> = (1..=13).map(|n| extremal_witness(n).unwrap().0).collect();
    let named = |n: &str| Semilattice::named(n).unwrap();
    v.push(brandt(3).unwrap());
    v.push(rees_matrix(
        &ReesMatrixSpec::trivial_group(&[vec![1, 1], vec![0, 1]]).unwrap(),
    ));
    v.push(times0(named("V").semigroup(), &b2()).unwrap());
    v.push(munn(&named("F")).unwrap());
    v.push(embed_indecomposable(&cyclic_group(2)).0);
    v.push(embed_indecomposable(&chain2()).0);
    v.push(null(4));
    v
}

fn c6_zprime() -> Outcome {
    let inputs = zprime_inputs();
    let mut bad = Vec::new();
    for (k, s) in inputs.iter().enumerate() {
        let t = adjoin_zprime(s).unwrap();
        let (before, after) = (
            summary(&semigroup_algebra(s)),
            summary(&semigroup_algebra(&t)),
        );
        let expected = AlgebraSummary {
            dim: before.dim + 1,
            radical_dim: before.radical_dim + 1,
            ..before
        };
        let ok = is_s_indecomposable_graph(s)
            && verdicts(&t).unwrap().graph
            && verdicts(&t).unwrap().agree()
            && after == expected;
        if !ok {
            bad.push(k);
        }
    }
    outcome(
        inputs.len() == 20 && bad.is_empty(),
        format!("{} inputs, failures at {bad:?}", inputs.len()),
    )
}

fn c7_prop8() -> Outcome {
    let b = b2();
    let cases = [
        ("B2", b.clone()),
        (
            "C3 x0 B2",
            times0(Semilattice::named("C3").unwrap().semigroup(), &b).unwrap(),
        ),
        (
            "V x0 B2",
            times0(Semilattice::named("V").unwrap().semigroup(), &b).unwrap(),
        ),
    ];
    let mut details = Vec::new();
    let mut pass = true;
    for (name, s) in &cases {
        match verify_prop8(s, BLOCK_SEED) {
            Ok(r) => {
                let nine = s.size() != 9
                    || (r.summary
                        == AlgebraSummary {
                            dim: 9,
                            radical_dim: 0,
                            num_blocks: 3,
                            one_dim_blocks: 1,
                        }
                        && r.blocks == [1, 2, 2]);
                pass &= r.all_hold() && nine;
                details.push(format!(
                    "{name}: blocks {:?}, {} ideals, {} images",
                    r.blocks, r.ideals_checked, r.quotients_checked
                ));
            }
            Err(e) => {
                pass = false;
                details.push(format!("{name}: {e}"));
            }
        }
    }
    outcome(
        pass,
        format!("{} (tolerance {CLUSTER_TOLERANCE:e})", details.join("; ")),
    )
}

fn patterns(n: usize) -> Vec<Vec<Vec<u8>>> {
    (0u32..1 << (n * n))
        .map(|bits| {
            (0..n)
                .map(|r| (0..n).map(|c| ((bits >> (r * n + c)) & 1) as u8).collect())
                .collect()
        })
        .collect()
}

fn is_permutation_pattern(p: &[Vec<u8>]) -> bool {
    p.iter().all(|r| r.iter().filter(|&&v| v == 1).count() == 1)
        && (0..p.len()).all(|c| p.iter().filter(|r| r[c] == 1).count() == 1)
}

fn c8_zero_simple(order5: &[Semigroup]) -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for n in 2..=3 {
        let target = brandt(n).unwrap();
        for p in patterns(n) {
            let Ok(spec) = ReesMatrixSpec::trivial_group(&p) else {
                continue;
            };
            checked += 1;
            let s = rees_matrix(&spec);
            let z = check_bound(&s).unwrap().zero_simple.unwrap();
            let iso = are_isomorphic(&s, &target);
            if !z.holds || z.tight != is_permutation_pattern(&p) || z.tight != iso {
                bad += 1;
            }
        }
    }
    let zero_simple_b2c: Vec<_> = order5
        .iter()
        .filter(|s| is_zero_simple(s) && is_b2_combinatorial(s))
        .map(canonicalize)
        .collect();
    let only_b2 = zero_simple_b2c == [canonicalize(&b2())];
    outcome(
        bad == 0 && only_b2,
        format!("{checked} regular patterns, {bad} failures; {} 0-simple B2-combinatorial class(es) at order 5", zero_simple_b2c.len()),
    )
}

fn order9_candidates() -> Vec<Semigroup> {
    let b = b2();
    let named = |n: &str| Semilattice::named(n).unwrap();
    let mut v = vec![
        times0(named("C3").semigroup(), &b).unwrap(),
        times0(named("V").semigroup(), &b).unwrap(),
        munn(&named("U")).unwrap(),
        munn(&named("F")).unwrap(),
    ];
    for e in semilab::enumeration::enumerate_where(5, Semigroup::is_semilattice).unwrap() {
        let t = munn(&Semilattice::new(e.to_semigroup()).unwrap()).unwrap();
        for sub in full_inverse_subsemigroups(&t, 9) {
            v.push(t.restrict(&sub).unwrap().0);
        }
    }
    v
}

fn c9_two_characterisations(order5: &[Semigroup]) -> Outcome {
    let candidates = order9_candidates();
    let pool: Vec<&Semigroup> = corpus().iter().chain(order5).chain(&candidates).collect();
    let disagreements = pool
        .iter()
        .filter(|s| is_b2_combinatorial(s) != is_b2_combinatorial_via_factors(s).unwrap())
        .count();
    outcome(
        disagreements == 0,
        format!(
            "{} semigroups ({} order-9 candidates), {disagreements} disagreements",
            pool.len(),
            candidates.len()
        ),
    )
}

fn c10_order9() -> Outcome {
    timed(LIMIT_ORDER9, || {
        let c = classify_order9().unwrap();
        let x = c
            .searches
            .iter()
            .find(|s| s.name.as_deref() == Some("X"))
            .unwrap();
        let vb = times0(Semilattice::named("V").unwrap().semigroup(), &b2()).unwrap();
        let vb_class = c.classes.binary_search(&canonicalize(&vb)).ok();
        let x_ok = x.subsemigroups.len() == 3 && x.class_of.iter().all(|&k| Some(k) == vb_class);
        let pass = c.classes.len() == 3
            && c.munn_u_is_c3_times_b2
            && x_ok
            && c.idempotent_semilattices == [true, true, true]
            && c.munn_f_is_no_times0;
        outcome(
            pass,
            format!(
                "{} classes {:?}; T_X has {} B2-combinatorial 9-element subsemigroups; E-checks {:?}",
                c.classes.len(),
                c.class_names,
                x.subsemigroups.len(),
                c.idempotent_semilattices
            ),
        )
    })
}

fn c11_negative_control() -> Outcome {
    let (g, ch) = (cyclic_group(2), chain2());
    let expected = AlgebraSummary {
        dim: 2,
        radical_dim: 0,
        num_blocks: 2,
        one_dim_blocks: 2,
    };
    let (sg, sc) = (
        summary(&semigroup_algebra(&g)),
        summary(&semigroup_algebra(&ch)),
    );
    let (vg, vc) = (verdicts(&g).unwrap(), verdicts(&ch).unwrap());
    let pass = sg == expected
        && sc == expected
        && vg.graph
        && vg.algebra
        && vg.prime_ideals
        && !vc.graph
        && !vc.algebra
        && !vc.prime_ideals;
    outcome(
        pass,
        "C2 and the 2-chain: equal full summaries, opposite verdicts",
    )
}

fn c12_algebra_units() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=6 {
        if radical(&semigroup_algebra(&null(n))).rank() != n - 1 {
            bad.push(format!("null {n}"));
        }
    }
    let mut semilattices: Vec<Semigroup> = corpus()
        .iter()
        .filter(|s| s.is_semilattice())
        .cloned()
        .collect();
    semilattices.extend(
        ["C3", "V", "U", "F", "X"].map(|n| Semilattice::named(n).unwrap().into_semigroup()),
    );
    for s in &semilattices {
        let a = semigroup_algebra(s);
        let blocks = numerical_block_sizes(&a, BLOCK_SEED).unwrap();
        if summary(&a).radical_dim != 0 || blocks != vec![1; s.size()] {
            bad.push(format!("semilattice of order {}", s.size()));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "null n = 2..6, {} semilattices; failures {bad:?}",
            semilattices.len()
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let order5: Vec<Semigroup> = enumerate_semigroups(5)
        .unwrap()
        .iter()
        .map(|c| c.to_semigroup())
        .collect();
    let criteria: Vec<Criterion> = vec![
        (
            "s-indecomposability verdicts agree",
            Box::new(|| c1_verdicts(&order5)),
        ),
        (
            "order-5 s-indecomposable with two commuting idempotents",
            Box::new(c2_two_idempotents),
        ),
        (
            "subsemilattice bound on order <= 5",
            Box::new(|| c3_bound(&order5)),
        ),
        ("extremal witnesses n = 1..13", Box::new(c4_extremal)),
        ("times0 indecomposability law", Box::new(c5_times0)),
        ("z' extension", Box::new(c6_zprime)),
        (
            "B2-combinatorial algebra, ideals and images",
            Box::new(c7_prop8),
        ),
        (
            "completely 0-simple bound and equality case",
            Box::new(|| c8_zero_simple(&order5)),
        ),
        (
            "two B2-combinatorial characterisations agree",
            Box::new(|| c9_two_characterisations(&order5)),
        ),
        (
            "order-9 B2-combinatorial classification",
            Box::new(c10_order9),
        ),
        (
            "C2 / 2-chain negative control",
            Box::new(c11_negative_control),
        ),
        ("algebra unit suite", Box::new(c12_algebra_units)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
