//! Named small semigroups used throughout tests and examples.

use crate::FiniteSemigroup;

fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let table = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| f(x, y))
        .collect();
    FiniteSemigroup::new(n, table).expect("named semigroup tables are associative")
}

/// The one-element semigroup.
pub fn trivial() -> FiniteSemigroup {
    from_fn(1, |_, _| 0)
}

/// `Z_n` under addition; `0` is the identity.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    from_fn(n, |x, y| (x + y) % n)
}

/// `x·y = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    from_fn(n, |_, y| y)
}

/// `x·y = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    from_fn(n, |x, _| x)
}

/// `x·y = 0`.
pub fn null(n: usize) -> FiniteSemigroup {
    from_fn(n, |_, _| 0)
}

/// `{0 < 1 < … < n-1}` under `min`; `n-1` is the identity, `0` the zero.
pub fn semilattice_chain(n: usize) -> FiniteSemigroup {
    from_fn(n, |x, y| x.min(y))
}

/// `n × m` rectangular band: element `i * m + j` is `(i, j)`, with
/// `(i, j)(k, l) = (i, l)`.
pub fn rectangular_band(n: usize, m: usize) -> FiniteSemigroup {
    from_fn(n * m, |x, y| (x / m) * m + (y % m))
}
