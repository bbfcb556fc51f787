//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::sync::OnceLock;

use semilab::enumeration::enumerate_semigroups;
use semilab::Semigroup;

/// One representative per isomorphism class, orders 1 to 4.
pub fn corpus() -> &'static [Semigroup] {
    static CORPUS: OnceLock<Vec<Semigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (1..=4)
            .flat_map(|n| enumerate_semigroups(n).unwrap())
            .map(|c| c.to_semigroup())
            .collect()
    })
}

pub fn corpus_up_to(n: usize) -> impl Iterator<Item = &'static Semigroup> {
    corpus().iter().filter(move |s| s.size() <= n)
}

pub fn with_zero_up_to(n: usize) -> Vec<&'static Semigroup> {
    corpus_up_to(n).filter(|s| s.zero().is_some()).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Tries all `n!` bijections.
pub fn brute_isomorphic(a: &Semigroup, b: &Semigroup) -> bool {
    let n = a.size();
    n == b.size()
        && permutations(n).iter().any(|p| {
            a.elements()
                .all(|x| a.elements().all(|y| p[a.mul(x, y)] == b.mul(p[x], p[y])))
        })
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur.push(c);
            go(n, cur, max.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, &mut vec![0], 0, &mut out);
    out
}

pub fn is_compatible_partition(s: &Semigroup, labels: &[usize]) -> bool {
    let n = s.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            labels[x] != labels[y]
                || (0..n).all(|z| {
                    labels[s.mul(x, z)] == labels[s.mul(y, z)]
                        && labels[s.mul(z, x)] == labels[s.mul(z, y)]
                })
        })
    })
}

/// Nonzero multiplicative maps into `{0} ∪ μ₁₂`. Every character of a
/// semigroup of order at most 4 takes values there.
pub fn complex_characters(s: &Semigroup) -> usize {
    const ZERO: usize = 12;
    let n = s.size();
    let times = |a: usize, b: usize| {
        if a == ZERO || b == ZERO {
            ZERO
        } else {
            (a + b) % 12
        }
    };
    let mut count = 0;
    let mut chi = vec![0usize; n];
    for code in 0..13usize.pow(n as u32) {
        let mut c = code;
        for v in chi.iter_mut() {
            *v = c % 13;
            c /= 13;
        }
        if chi.iter().all(|&v| v == ZERO) {
            continue;
        }
        if s.elements().all(|x| {
            s.elements()
                .all(|y| chi[s.mul(x, y)] == times(chi[x], chi[y]))
        }) {
            count += 1;
        }
    }
    count
}

pub fn cyclic_group(n: usize) -> Semigroup {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    Semigroup::from_rows(&rows, None).unwrap()
}

pub fn chain2() -> Semigroup {
    Semigroup::from_rows(&[vec![0, 0], vec![0, 1]], None).unwrap()
}

pub fn null(n: usize) -> Semigroup {
    Semigroup::from_flat(n, vec![0; n * n], None).unwrap()
}
