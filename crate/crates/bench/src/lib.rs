//! Fixtures shared by the benchmarks.

use semilab::constructions::{b2, munn, times0, Semilattice};
use semilab::Semigroup;

/// The three B₂-combinatorial semigroups of order 9.
pub fn order_nine() -> Vec<(&'static str, Semigroup)> {
    let named = |n: &str| Semilattice::named(n).expect("named semilattice");
    vec![
        (
            "c3xb2",
            times0(named("C3").semigroup(), &b2()).expect("both have zeros"),
        ),
        (
            "vxb2",
            times0(named("V").semigroup(), &b2()).expect("both have zeros"),
        ),
        ("tf", munn(&named("F")).expect("small semilattice")),
    ]
}

/// Munn semigroup of the four-atom semilattice, 17 elements.
pub fn munn_x() -> Semigroup {
    munn(&Semilattice::named("X").expect("named semilattice")).expect("small semilattice")
}
