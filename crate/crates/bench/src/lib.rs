//! Shared inputs for the criterion benches.

use qmoments::qseries::inv_pochhammer;
use qmoments::{FamilyId, RatFunc};

pub fn family(name: &str) -> FamilyId {
    FamilyId::parse(name).expect("catalog id")
}

/// `Σ_(k<=n) 1/(q;q)_k`, a sum whose denominators share most factors.
pub fn pochhammer_sum(n: u32) -> RatFunc {
    let q = RatFunc::q_pow(1);
    (0..=n).fold(RatFunc::zero(), |acc, k| &acc + &inv_pochhammer(&q, k).expect("nonzero"))
}
