use serde::{Deserialize, Serialize};

use super::nil::{nilradical_of, solvable_radical_of};
use crate::config::Caps;
use crate::error::Result;
use crate::exactla::Subspace;
use crate::liecore::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub nilregular: bool,
    pub solregular: bool,
    pub regular: bool,
    /// Nilpotency class of `N(U)`.
    pub class: usize,
    /// Derived length of `R(U)`.
    pub derived_length: usize,
}

impl RegularityVerdict {
    /// Characteristic `p` (0 means every predicate holds): nilregular iff
    /// `class < p - 1`, solregular iff `2^dl < p`.
    pub fn from_numbers(p: u32, class: usize, derived_length: usize) -> Self {
        let (nilregular, solregular) = if p == 0 {
            (true, true)
        } else {
            let p = p as u128;
            let pow = if derived_length >= 127 {
                u128::MAX
            } else {
                1u128 << derived_length
            };
            ((class as u128) + 1 < p, pow < p)
        };
        RegularityVerdict {
            nilregular,
            solregular,
            regular: nilregular || solregular,
            class,
            derived_length,
        }
    }
}

/// Regularity of the subalgebra `u`.
pub fn regularity(l: &LieAlgebra, u: &Subspace, caps: &Caps) -> Result<RegularityVerdict> {
    let n = nilradical_of(l, u, caps)?;
    let r = solvable_radical_of(l, u, caps)?;
    let class = l.nilpotency_class(&n)?.expect("nilradical is nilpotent");
    let dl = l.derived_length(&r)?.expect("radical is solvable");
    Ok(RegularityVerdict::from_numbers(
        l.field().characteristic(),
        class,
        dl,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        // class 1 < 3 - 1, 2^2 = 4 > 3
        let v = RegularityVerdict::from_numbers(3, 1, 2);
        assert!(v.nilregular && !v.solregular && v.regular);
        // class 4 = 5 - 1 is not below; 2^2 < 5
        let v = RegularityVerdict::from_numbers(5, 4, 2);
        assert!(!v.nilregular && v.solregular);
        // p = 2 forces a zero radical for solregularity
        assert!(!RegularityVerdict::from_numbers(2, 0, 1).solregular);
        assert!(RegularityVerdict::from_numbers(2, 0, 0).solregular);
        let v = RegularityVerdict::from_numbers(0, 9, 9);
        assert!(v.nilregular && v.solregular && v.regular);
    }
}
