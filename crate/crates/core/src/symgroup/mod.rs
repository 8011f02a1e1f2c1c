//! Permutations, reduced words, the Hecke algebra `H_n` in the `T_w` basis with
//! `T_s T_w = T_{sw}` when lengths add and `T_s^2 = (q - q^{-1}) T_s + 1`, and the
//! rational group algebra `Q S_n`.

mod group_algebra;
mod hecke;
mod perm;

pub use group_algebra::GroupAlgebraElement;
pub use hecke::{hecke_multiply, HeckeElement};
pub use perm::Permutation;

/// Inversion count.
pub fn length(w: &Permutation) -> usize {
    w.length()
}

pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    w.reduced_word()
}
