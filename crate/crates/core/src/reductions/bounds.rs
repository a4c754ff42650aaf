//! Exact sizes of the unpruned targets, checked against their closed-form
//! bounds with big integers. Nothing here is ever materialized.

use num_bigint::BigUint;

/// `L * 3^r * (r^2 * L * 3)^{4r}` with `L = 16 r^2 + 1`: labels, bucket
/// colorings and four slots per vertex of a degree-four bucket.
pub fn configuration_bound(r: u32) -> BigUint {
    let l = BigUint::from(16 * r * r + 1);
    let slot = BigUint::from(r * r) * &l * 3u32;
    &l * BigUint::from(3u32).pow(r) * slot.pow(4 * r)
}

/// The same count when each slot may also be null.
pub fn configuration_bound_with_null(r: u32) -> BigUint {
    let l = BigUint::from(16 * r * r + 1);
    let slot = BigUint::from(r * r) * &l * 3u32 + 1u32;
    &l * BigUint::from(3u32).pow(r) * slot.pow(4 * r)
}

/// `5r * 3^r + 25 r^2 * 3^{2r}`: singles and ordered pairs of the small-cover
/// construction with `5r` labels.
pub fn bucket_pair_bound(r: u32) -> BigUint {
    let three_r = BigUint::from(3u32).pow(r);
    BigUint::from(5 * r) * &three_r + BigUint::from(25 * r * r) * &three_r * &three_r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub value: BigUint,
    pub limit: BigUint,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.value <= self.limit
    }
}

/// Against `r^{50r}`.
pub fn configuration_bound_holds(r: u32) -> BoundCheck {
    BoundCheck {
        value: configuration_bound(r),
        limit: BigUint::from(r).pow(50 * r),
    }
}

/// Against `300^r`.
pub fn bucket_pair_bound_holds(r: u32) -> BoundCheck {
    BoundCheck {
        value: bucket_pair_bound(r),
        limit: BigUint::from(300u32).pow(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_r_values() {
        // r = 2: L = 65, slot factor 4 * 65 * 3 = 780
        assert_eq!(
            configuration_bound(2),
            BigUint::from(65u32 * 9) * BigUint::from(780u32).pow(8)
        );
        assert_eq!(bucket_pair_bound(2), BigUint::from(8190u32));
        assert!(configuration_bound_with_null(2) > configuration_bound(2));
    }
}
