use crate::error::{Error, Result};
use crate::free_group::IntMatrix;

/// Point of `ℝⁿ/ℤⁿ`, each coordinate in `[0, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint {
    coords: Vec<f64>,
}

fn wrap(v: f64) -> f64 {
    let r = v.rem_euclid(1.0);
    // rem_euclid can round up to exactly 1 for tiny negative inputs
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

impl TorusPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|v| !(0.0..1.0).contains(*v)) {
            return Err(Error::OutOfRange {
                what: "torus coordinate",
                value: bad,
            });
        }
        Ok(Self { coords })
    }

    /// Reduces arbitrary reals mod 1.
    pub fn wrapped(coords: &[f64]) -> Self {
        Self {
            coords: coords.iter().map(|&v| wrap(v)).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords: vec![0.0; n] }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

fn apply(m: &IntMatrix, p: &TorusPoint) -> TorusPoint {
    let n = m.dim();
    let coords = (0..n)
        .map(|i| wrap((0..n).map(|j| m.get(i, j) as f64 * p.coords[j]).sum()))
        .collect();
    TorusPoint { coords }
}

/// `Mp mod 1`.
pub fn torus_step(m: &IntMatrix, p: &TorusPoint) -> Result<TorusPoint> {
    if !m.is_unimodular() {
        return Err(Error::NonUnimodular(m.det()));
    }
    if m.dim() != p.dim() {
        return Err(Error::RankMismatch {
            expected: m.dim(),
            found: p.dim(),
        });
    }
    Ok(apply(m, p))
}

/// A fixed unimodular matrix acting on the torus.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusMap {
    matrix: IntMatrix,
}

impl TorusMap {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_unimodular() {
            return Err(Error::NonUnimodular(matrix.det()));
        }
        Ok(Self { matrix })
    }

    /// `[[2, 1], [1, 1]]`.
    pub fn cat() -> Self {
        Self::new(IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).expect("square"))
            .expect("unimodular")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn step(&self, p: &TorusPoint) -> Result<TorusPoint> {
        torus_step(&self.matrix, p)
    }

    /// `steps` iterates after `p`, not including `p`.
    pub fn orbit(&self, p: &TorusPoint, steps: usize) -> Result<Vec<TorusPoint>> {
        if self.matrix.dim() != p.dim() {
            return Err(Error::RankMismatch {
                expected: self.matrix.dim(),
                found: p.dim(),
            });
        }
        let mut out = Vec::with_capacity(steps);
        let mut cur = p.clone();
        for _ in 0..steps {
            cur = apply(&self.matrix, &cur);
            out.push(cur.clone());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let cat = TorusMap::cat();
        assert_eq!(cat.step(&TorusPoint::zero(2)).unwrap(), TorusPoint::zero(2));
        let p = TorusPoint::new(vec![0.5, 0.5]).unwrap();
        assert_eq!(cat.step(&p).unwrap().coords(), &[0.5, 0.0]);
        let singular = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(torus_step(&singular, &p).is_err());
        assert!(TorusMap::new(singular).is_err());
        assert!(TorusPoint::new(vec![1.0]).is_err());
        assert_eq!(TorusPoint::wrapped(&[-1e-18, 2.25]).coords(), &[0.0, 0.25]);
    }
}
