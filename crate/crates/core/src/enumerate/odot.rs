//! The splice product on `theta` images of 321-avoiding cyclic permutations.

use crate::characterize::is_member_direct;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `tau_hat ⊙ sigma_hat`: every entry of `tau_hat` is raised by
/// `n = |sigma_hat|` and `sigma_hat` is spliced in right after the raised
/// copy of `tau_hat`'s 1.
///
/// Both arguments must be `theta` images of members.
pub fn odot(tau_hat: &Permutation, sigma_hat: &Permutation) -> Result<Permutation> {
    for (name, hat) in [("tau_hat", tau_hat), ("sigma_hat", sigma_hat)] {
        if !is_member_direct(&hat.theta_inv()) {
            return Err(Error::Domain(format!(
                "{name} = {hat} is not the theta image of a 321-avoiding cyclic permutation"
            )));
        }
    }
    let n = sigma_hat.size();
    let t = tau_hat.entries();
    let k = t
        .iter()
        .position(|&v| v == 1)
        .expect("permutation contains 1");
    let mut word: Vec<usize> = t[..=k].iter().map(|&v| v + n).collect();
    word.extend_from_slice(sigma_hat.entries());
    word.extend(t[k + 1..].iter().map(|&v| v + n));
    Permutation::new(word)
}

/// `theta_inv(tau_hat ⊙ sigma_hat)`.
pub fn odot_perm(tau_hat: &Permutation, sigma_hat: &Permutation) -> Result<Permutation> {
    Ok(odot(tau_hat, sigma_hat)?.theta_inv())
}
