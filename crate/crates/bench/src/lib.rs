//! Shared inputs for the criterion benchmarks.

use fordapprox_core::{golden_ratio, sqrt_real, Rational, RealNumber, Search, SweepParams, Window};

pub fn irrationals() -> Vec<(&'static str, RealNumber)> {
    vec![
        ("golden", golden_ratio()),
        ("sqrt2", sqrt_real(2).expect("2 is not a square")),
        ("sqrt3", sqrt_real(3).expect("3 is not a square")),
    ]
}

pub fn small_sweep(max_den: u64) -> SweepParams {
    SweepParams {
        max_den_x: max_den,
        max_den_alpha: max_den,
        window: Window {
            lo: Rational::zero(),
            hi: Rational::one(),
        },
        search: Search::Pruned,
    }
}
