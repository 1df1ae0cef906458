use std::fmt;

use super::word::Word;
use crate::error::{Error, Result};

/// Endomorphism of `F_rank`, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    rank: usize,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        if let Some(w) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                found: w.rank(),
            });
        }
        Ok(Self { rank, images })
    }

    /// Builds from letter sequences, one per generator.
    pub fn from_letters(rank: usize, images: &[&[i32]]) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: images.len(),
            });
        }
        let images = images
            .iter()
            .map(|l| Word::new(rank, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }

    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank as i32)
            .map(|i| Word::from_reduced_unchecked(rank, vec![i]))
            .collect();
        Self { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of generator `X_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters() == [k as i32 + 1])
    }

    /// Substitutes each letter of `w` by its image and reduces.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        let mut out: Vec<i32> = Vec::new();
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &m in img.letters() {
                    push(&mut out, m);
                }
            } else {
                for &m in img.letters().iter().rev() {
                    push(&mut out, -m);
                }
            }
        }
        Ok(Word::from_reduced_unchecked(self.rank, out))
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            rank: self.rank,
            images,
        })
    }
}

fn push(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn apply_endo(phi: &Endomorphism, w: &Word) -> Result<Word> {
    phi.apply(w)
}

pub fn compose(phi: &Endomorphism, psi: &Endomorphism) -> Result<Endomorphism> {
    phi.compose(psi)
}

/// Automorphism stored together with its inverse.
///
/// Both composites are checked against the identity at construction, so
/// every value of this type is a genuine automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    name: String,
    forward: Endomorphism,
    backward: Endomorphism,
}

impl Automorphism {
    pub fn new(
        name: impl Into<String>,
        forward: Endomorphism,
        backward: Endomorphism,
    ) -> Result<Self> {
        let name = name.into();
        let fb = forward.compose(&backward)?;
        let bf = backward.compose(&forward)?;
        if !fb.is_identity() || !bf.is_identity() {
            return Err(Error::NotInverse(name));
        }
        Ok(Self {
            name,
            forward,
            backward,
        })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            name: "id".into(),
            forward: Endomorphism::identity(rank),
            backward: Endomorphism::identity(rank),
        }
    }

    /// Conjugation `X_i ↦ w X_i w⁻¹`.
    pub fn inner(w: &Word) -> Self {
        let rank = w.rank();
        let conj = |u: &Word| -> Endomorphism {
            let images = (1..=rank)
                .map(|i| {
                    let g = Word::from_reduced_unchecked(rank, vec![i as i32]);
                    u.concat(&g).and_then(|v| v.concat(&u.inverse())).expect("same rank")
                })
                .collect();
            Endomorphism { rank, images }
        };
        Self {
            name: format!("inner({w})"),
            forward: conj(w),
            backward: conj(&w.inverse()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.forward.rank
    }

    pub fn forward(&self) -> &Endomorphism {
        &self.forward
    }

    pub fn backward(&self) -> &Endomorphism {
        &self.backward
    }

    pub fn inverse(&self) -> Self {
        Self {
            name: format!("{}^-1", self.name),
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        Ok(Self {
            name: format!("{}*{}", self.name, other.name),
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.forward.apply(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Automorphism {
        let f = Endomorphism::from_letters(3, &[&[1], &[2, -1], &[1, 3]]).unwrap();
        let b = Endomorphism::from_letters(3, &[&[1], &[2, 1], &[-1, 3]]).unwrap();
        Automorphism::new("alpha", f, b).unwrap()
    }

    #[test]
    fn alpha_on_words() {
        let a = alpha();
        let c = Word::parse(3, "C").unwrap();
        assert_eq!(a.apply(&c).unwrap(), Word::parse(3, "AC").unwrap());
        let d = Word::parse(3, "cba").unwrap();
        assert_eq!(a.apply(&d).unwrap(), d);
    }

    #[test]
    fn identity_and_inverse_composition() {
        let a = alpha();
        let w = Word::parse(3, "AbCCa").unwrap();
        assert_eq!(Endomorphism::identity(3).apply(&w).unwrap(), w);
        assert!(a.forward().compose(a.backward()).unwrap().is_identity());
        let id = Endomorphism::identity(3);
        assert_eq!(id.compose(a.forward()).unwrap(), *a.forward());
    }

    #[test]
    fn swaps_are_involutions() {
        let s = Endomorphism::from_letters(2, &[&[2], &[1]]).unwrap();
        assert!(s.compose(&s).unwrap().is_identity());
    }

    #[test]
    fn construction_rejects_non_inverse() {
        let f = Endomorphism::from_letters(2, &[&[1, 2], &[2]]).unwrap();
        let err = Automorphism::new("bad", f.clone(), f).unwrap_err();
        assert_eq!(err, Error::NotInverse("bad".into()));
    }

    #[test]
    fn rank_mismatches() {
        let e2 = Endomorphism::identity(2);
        let e3 = Endomorphism::identity(3);
        assert!(e2.compose(&e3).is_err());
        assert!(e2.apply(&Word::empty(3)).is_err());
        assert!(Endomorphism::from_letters(2, &[&[1]]).is_err());
    }

    #[test]
    fn inner_automorphism_is_valid() {
        let w = Word::parse(3, "AbC").unwrap();
        let inn = Automorphism::inner(&w);
        Automorphism::new("check", inn.forward().clone(), inn.backward().clone()).unwrap();
    }
}
