//! Named automorphisms of `F_n`.
//!
//! | name              | action                                             |
//! |-------------------|----------------------------------------------------|
//! | `swap_i_j`        | exchange `X_i` and `X_j` (`i < j`)                 |
//! | `inv_i`           | `X_i ↦ X_i⁻¹`                                      |
//! | `rmul_i_j`        | `X_i ↦ X_i X_j`                                    |
//! | `rmulinv_i_j`     | `X_i ↦ X_i X_j⁻¹`                                  |
//! | `lmul_i_j`        | `X_i ↦ X_j X_i`                                    |
//! | `lmulinv_i_j`     | `X_i ↦ X_j⁻¹ X_i`                                  |
//! | `sigma_i`         | `X_i ↦ X_{i+1}`, `X_{i+1} ↦ X_{i+1}⁻¹ X_i X_{i+1}` |
//! | `twist_i`         | conjugate `X_i`, `X_{i+1}` by `X_i X_{i+1}`        |
//! | `alpha` (n = 3)   | `A ↦ A`, `B ↦ BA⁻¹`, `C ↦ AC`                      |
//! | `gamma` (n = 3)   | `A ↦ CA`, `B ↦ B`, `C ↦ C`                         |
//!
//! Group names expand to families: `nielsen` (swaps, inversions and the
//! four multiplier families), `braid`, `twist`, `mcg` (braids and twists,
//! which fix the boundary word up to conjugacy), and `all`.

use super::endo::{Automorphism, Endomorphism};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Catalog {
    rank: usize,
    entries: Vec<(Family, Automorphism)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Nielsen,
    Braid,
    Twist,
    Special,
}

fn gens(n: usize) -> Vec<Vec<i32>> {
    (1..=n as i32).map(|i| vec![i]).collect()
}

fn endo(n: usize, images: Vec<Vec<i32>>) -> Result<Endomorphism> {
    let refs: Vec<&[i32]> = images.iter().map(|v| v.as_slice()).collect();
    Endomorphism::from_letters(n, &refs)
}

fn with_images(n: usize, changes: &[(usize, Vec<i32>)]) -> Result<Endomorphism> {
    let mut images = gens(n);
    for (i, img) in changes {
        images[i - 1] = img.clone();
    }
    endo(n, images)
}

fn conj(by: &[i32], l: i32) -> Vec<i32> {
    let mut out = by.to_vec();
    out.push(l);
    out.extend(by.iter().rev().map(|x| -x));
    out
}

/// Catalog of named generators for rank `n`, each with a verified inverse.
pub fn named_generators(n: usize) -> Result<Catalog> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let mut entries = Vec::new();
    let mut add = |fam: Family, name: String, f: Endomorphism, b: Endomorphism| -> Result<()> {
        entries.push((fam, Automorphism::new(name, f, b)?));
        Ok(())
    };

    for i in 1..=n {
        for j in i + 1..=n {
            let s = with_images(n, &[(i, vec![j as i32]), (j, vec![i as i32])])?;
            add(Family::Nielsen, format!("swap_{i}_{j}"), s.clone(), s)?;
        }
    }
    for i in 1..=n {
        let s = with_images(n, &[(i, vec![-(i as i32)])])?;
        add(Family::Nielsen, format!("inv_{i}"), s.clone(), s)?;
    }
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let (xi, xj) = (i as i32, j as i32);
            let r = with_images(n, &[(i, vec![xi, xj])])?;
            let ri = with_images(n, &[(i, vec![xi, -xj])])?;
            let l = with_images(n, &[(i, vec![xj, xi])])?;
            let li = with_images(n, &[(i, vec![-xj, xi])])?;
            add(Family::Nielsen, format!("rmul_{i}_{j}"), r.clone(), ri.clone())?;
            add(Family::Nielsen, format!("rmulinv_{i}_{j}"), ri, r)?;
            add(Family::Nielsen, format!("lmul_{i}_{j}"), l.clone(), li.clone())?;
            add(Family::Nielsen, format!("lmulinv_{i}_{j}"), li, l)?;
        }
    }
    for i in 1..n {
        let (a, b) = (i as i32, i as i32 + 1);
        let f = with_images(n, &[(i, vec![b]), (i + 1, vec![-b, a, b])])?;
        let g = with_images(n, &[(i, vec![a, b, -a]), (i + 1, vec![a])])?;
        add(Family::Braid, format!("sigma_{i}"), f, g)?;
    }
    for i in 1..n {
        let (a, b) = (i as i32, i as i32 + 1);
        let p = [a, b];
        let pinv = [-b, -a];
        let f = with_images(n, &[(i, conj(&p, a)), (i + 1, conj(&p, b))])?;
        let g = with_images(n, &[(i, conj(&pinv, a)), (i + 1, conj(&pinv, b))])?;
        add(Family::Twist, format!("twist_{i}"), f, g)?;
    }
    if n == 3 {
        add(
            Family::Special,
            "alpha".into(),
            endo(3, vec![vec![1], vec![2, -1], vec![1, 3]])?,
            endo(3, vec![vec![1], vec![2, 1], vec![-1, 3]])?,
        )?;
        add(
            Family::Special,
            "gamma".into(),
            endo(3, vec![vec![3, 1], vec![2], vec![3]])?,
            endo(3, vec![vec![-3, 1], vec![2], vec![3]])?,
        )?;
    }
    Ok(Catalog { rank: n, entries })
}

impl Catalog {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn all(&self) -> impl Iterator<Item = &Automorphism> {
        self.entries.iter().map(|(_, a)| a)
    }

    pub fn names(&self) -> Vec<&str> {
        self.all().map(|a| a.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&Automorphism> {
        self.all()
            .find(|a| a.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    fn family(&self, fam: Family) -> impl Iterator<Item = &Automorphism> {
        self.entries
            .iter()
            .filter(move |(f, _)| *f == fam)
            .map(|(_, a)| a)
    }

    /// Expands generator and group names into distinct automorphisms,
    /// preserving first-occurrence order.
    pub fn resolve<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<Automorphism>> {
        let mut out: Vec<Automorphism> = Vec::new();
        for name in names {
            let name = name.as_ref();
            let batch: Vec<&Automorphism> = match name {
                "nielsen" => self.family(Family::Nielsen).collect(),
                "braid" => self.family(Family::Braid).collect(),
                "twist" => self.family(Family::Twist).collect(),
                "mcg" => self
                    .family(Family::Braid)
                    .chain(self.family(Family::Twist))
                    .collect(),
                "all" => self.all().collect(),
                single => vec![self.get(single)?],
            };
            for a in batch {
                if !out.iter().any(|b| b.name() == a.name()) {
                    out.push(a.clone());
                }
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownGenerator(String::new()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::{boundary_word, Word};

    #[test]
    fn rank_three_catalog() {
        let cat = named_generators(3).unwrap();
        let gamma = cat.get("gamma").unwrap();
        assert_eq!(gamma.forward().image(1).to_string(), "CA");
        assert_eq!(gamma.forward().image(2).to_string(), "B");
        assert_eq!(gamma.forward().image(3).to_string(), "C");
        let d = boundary_word(3).unwrap();
        let dc = d.concat(&Word::parse(3, "c").unwrap()).unwrap();
        assert_eq!(gamma.apply(&d).unwrap(), dc);
        assert_eq!(cat.resolve(&["nielsen"]).unwrap().len(), 3 + 3 + 24);
        assert!(cat.get("sigma_3").is_err());
        assert!(cat.resolve(&["nope"]).is_err());
    }

    #[test]
    fn boundary_preservers_fix_boundary_word() {
        for n in 2..=5 {
            let cat = named_generators(n).unwrap();
            let x0 = boundary_word(n).unwrap();
            for a in cat.resolve(&["mcg"]).unwrap() {
                assert_eq!(a.apply(&x0).unwrap(), x0, "{}", a.name());
            }
        }
    }

    #[test]
    fn too_small() {
        assert!(named_generators(1).is_err());
        assert!(named_generators(2).unwrap().get("alpha").is_err());
    }
}
