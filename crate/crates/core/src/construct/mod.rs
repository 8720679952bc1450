//! Extremal families, concrete drawings, the hardness gadget reduction and
//! the crossing-number arithmetic separating fan-planar from k-planar graphs.

mod drawings;
mod families;
mod reduction;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub use drawings::{
    different_sides_configuration, independent_crossers_configuration, k13h_drawing, k7_drawing,
    nonfanplanar_2planar, same_side_configuration, CARRIER_EDGES, EXTRA_EDGES, K7_COORDS,
};
pub use families::{glued_k5_family, k2_family, GluedFamily};
pub use reduction::{reduce_one_planarity, EdgeGadgets, ReductionOutput};

/// `2 floor(h/2) floor((h-1)/2) + ceil(h/2)`, the crossing number formula for
/// K_{1,3,h} as used in the separation argument. For odd `h` the additive term
/// is one more than the established value (it gives 1 at `h = 1`, where the
/// graph is planar); both agree for even `h`.
pub fn cr_k13h(h: u64) -> u64 {
    2 * (h / 2) * (h.saturating_sub(1) / 2) + h.div_ceil(2)
}

/// `(cr(K_{1,3,4k+2}), k (16k + 11) / 2)`: crossings forced in any drawing
/// versus the most a k-planar drawing of its `16k + 11` edges can have.
pub fn kplanar_separation_margin(k: u64) -> Result<(u64, Ratio<u64>)> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let lhs = cr_k13h(4 * k + 2);
    let rhs = Ratio::new(k * (16 * k + 11), 2);
    assert!(Ratio::from_integer(lhs) > rhs);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_formula_values() {
        assert_eq!(cr_k13h(6), 15);
        assert_eq!(cr_k13h(10), 45);
        assert_eq!(cr_k13h(2), 1);
        assert_eq!(cr_k13h(1), 1);
        for k in 1..=50u64 {
            assert_eq!(cr_k13h(4 * k + 2), 8 * k * k + 6 * k + 1);
        }
    }

    #[test]
    fn margin_values() {
        assert_eq!(kplanar_separation_margin(1).unwrap(), (15, Ratio::new(27, 2)));
        assert_eq!(kplanar_separation_margin(2).unwrap(), (45, Ratio::from_integer(43)));
        assert_eq!(kplanar_separation_margin(3).unwrap(), (91, Ratio::new(177, 2)));
        assert!(kplanar_separation_margin(0).is_err());
    }
}
