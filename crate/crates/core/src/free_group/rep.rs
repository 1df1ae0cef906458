use super::endo::Automorphism;
use super::word::Word;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::su2::{haar_sample, GroupElement, RngStream};

/// A point of `Hom(F_n, SU(2))`: the images of the free generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<T> {
    images: Vec<GroupElement<T>>,
}

impl<T: Real> Representation<T> {
    pub fn new(images: Vec<GroupElement<T>>) -> Result<Self> {
        for g in &images {
            let norm = g.norm();
            if (norm - T::one()).abs() > T::NORM_TOL {
                return Err(Error::NotUnit {
                    norm: norm.to_f64_lossy(),
                });
            }
        }
        Ok(Self { images })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            images: vec![GroupElement::identity(); rank],
        }
    }

    /// Independent Haar-distributed generator images.
    pub fn haar(rank: usize, rng: &mut RngStream) -> Self {
        Self {
            images: (0..rank).map(|_| haar_sample(rng)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[GroupElement<T>] {
        &self.images
    }

    /// Image of `X_i` (1-based).
    pub fn image(&self, i: usize) -> &GroupElement<T> {
        &self.images[i - 1]
    }

    /// Product of generator images along a word.
    pub fn evaluate(&self, w: &Word) -> Result<GroupElement<T>> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: w.rank(),
            });
        }
        Ok(self.evaluate_letters(w.letters()))
    }

    pub(crate) fn evaluate_letters(&self, letters: &[i32]) -> GroupElement<T> {
        let letter = |l: i32| {
            let g = self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                g
            } else {
                g.inverse()
            }
        };
        let Some((&first, rest)) = letters.split_first() else {
            return GroupElement::identity();
        };
        rest.iter()
            .fold(letter(first), |acc, &l| acc.mul(&letter(l)))
    }

    pub fn trace_of(&self, w: &Word) -> Result<T> {
        Ok(self.evaluate(w)?.trace())
    }

    /// `ρ ∘ φ⁻¹`: generator `X_i` maps to `ρ(φ⁻¹(X_i))`.
    ///
    /// This is a left action, `act(φψ) = act(φ) ∘ act(ψ)`, and is the
    /// convention under which the induced map of `alpha` on trace
    /// coordinates is `(a, x, ac − z, d, ax − b, y, c)`.
    pub fn act(&self, phi: &Automorphism) -> Result<Self> {
        if phi.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: phi.rank(),
                found: self.rank(),
            });
        }
        Ok(Self {
            images: phi
                .backward()
                .images()
                .iter()
                .map(|w| self.evaluate_letters(w.letters()))
                .collect(),
        })
    }

    /// Simultaneous conjugation `g ρ g⁻¹`.
    pub fn conjugated_by(&self, g: &GroupElement<T>) -> Self {
        Self {
            images: self.images.iter().map(|h| h.conjugated_by(g)).collect(),
        }
    }

    /// Largest generator-wise distance.
    pub fn distance(&self, other: &Self) -> T {
        self.images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.distance(b))
            .fold(T::zero(), T::max)
    }
}

pub fn evaluate<T: Real>(w: &Word, rho: &Representation<T>) -> Result<GroupElement<T>> {
    rho.evaluate(w)
}

pub fn act_on_rep<T: Real>(phi: &Automorphism, rho: &Representation<T>) -> Result<Representation<T>> {
    rho.act(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = GroupElement<f64>;

    #[test]
    fn evaluation_examples() {
        let rho = Representation::new(vec![G::i(), G::j()]).unwrap();
        let x1 = Word::generator(2, 1).unwrap();
        assert_eq!(rho.evaluate(&x1).unwrap(), G::i());
        assert_eq!(rho.evaluate(&Word::new(2, &[1, 2]).unwrap()).unwrap(), G::k());
        assert_eq!(rho.evaluate(&Word::new(2, &[1, -1]).unwrap()).unwrap(), G::identity());
        assert_eq!(rho.evaluate(&Word::empty(2)).unwrap(), G::identity());
        assert!(rho.evaluate(&Word::empty(3)).is_err());
    }

    #[test]
    fn rejects_non_unit_images() {
        let bad = G {
            w: 1.0,
            x: 1.0,
            y: 0.0,
            z: 0.0,
        };
        assert!(Representation::new(vec![bad]).is_err());
    }

    #[test]
    fn identity_automorphism_fixes_rep() {
        let mut rng = RngStream::new(11, 0);
        let rho: Representation<f64> = Representation::haar(3, &mut rng);
        assert_eq!(rho.act(&Automorphism::identity(3)).unwrap(), rho);
        assert!(rho.act(&Automorphism::identity(2)).is_err());
    }
}
