//! Stabilization `F_{n-1} ↪ F_n` skipping one generator slot, and the
//! induced embedding of automorphism groups.

use super::endo::{Automorphism, Endomorphism};
use super::word::Word;
use crate::error::{Error, Result};

fn check_slot(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n || n < 2 {
        return Err(Error::InvalidSlot { slot: j, rank: n });
    }
    Ok(())
}

fn shift_letter(l: i32, j: usize) -> i32 {
    if (l.unsigned_abs() as usize) < j {
        l
    } else {
        l + l.signum()
    }
}

/// `ι_j`: `X_i ↦ X_i` for `i < j`, `X_i ↦ X_{i+1}` for `i ≥ j`.
pub fn iota(j: usize, w: &Word, n: usize) -> Result<Word> {
    check_slot(j, n)?;
    if w.rank() + 1 != n {
        return Err(Error::RankMismatch {
            expected: n - 1,
            found: w.rank(),
        });
    }
    let letters = w.letters().iter().map(|&l| shift_letter(l, j)).collect();
    Ok(Word::from_reduced_unchecked(n, letters))
}

/// Inverse relabeling on words avoiding `X_j`.
fn iota_inverse_generator(j: usize, i: usize) -> i32 {
    if i < j {
        i as i32
    } else {
        i as i32 - 1
    }
}

fn stabilize_endo(j: usize, phi: &Endomorphism, n: usize) -> Result<Endomorphism> {
    let images = (1..=n)
        .map(|i| {
            if i == j {
                Word::generator(n, j)
            } else {
                let src = Word::from_reduced_unchecked(n - 1, vec![iota_inverse_generator(j, i)]);
                iota(j, &phi.apply(&src)?, n)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Endomorphism::new(images)
}

/// `I_j(φ)`: fixes `X_j` and acts on the remaining generators through
/// `ι_j`, so that `I_j(φ) ∘ ι_j = ι_j ∘ φ`.
pub fn stabilize(j: usize, phi: &Automorphism, n: usize) -> Result<Automorphism> {
    check_slot(j, n)?;
    if phi.rank() + 1 != n {
        return Err(Error::RankMismatch {
            expected: n - 1,
            found: phi.rank(),
        });
    }
    Automorphism::new(
        format!("I{j}({})", phi.name()),
        stabilize_endo(j, phi.forward(), n)?,
        stabilize_endo(j, phi.backward(), n)?,
    )
}
