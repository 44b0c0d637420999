//! Fixture ideals shared by the benchmarks.

use rp_core::{parse_ideal, MonomialIdeal};

fn parse(src: &str) -> MonomialIdeal {
    parse_ideal(src).expect("fixture parses").ideal
}

/// `(x^2)` and `(y^2, yz)`.
pub fn example_pair() -> (MonomialIdeal, MonomialIdeal) {
    (parse("vars x\nx^2"), parse("vars y z\ny^2\ny*z"))
}

/// Path edge ideal `(xy, yz)` and `(u^2, uv)`.
pub fn integral_pair() -> (MonomialIdeal, MonomialIdeal) {
    (parse("vars x y z\nx*y\ny*z"), parse("vars u v\nu^2\nu*v"))
}

/// Three generators in three variables with mixed exponents.
pub fn mixed_ideal() -> MonomialIdeal {
    parse("vars x y z\nx^3*y\ny^2*z^3\nx*z^2")
}
