use std::fmt;

use crate::error::{Error, Result};

/// Freely reduced word in the generators of `F_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<i32>,
}

/// Free reduction of a letter sequence.
pub fn reduce(rank: usize, letters: &[i32]) -> Result<Word> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if l == 0 || l.unsigned_abs() as usize > rank {
            return Err(Error::LetterOutOfRange { letter: l, rank });
        }
        push_reduced(&mut out, l);
    }
    Ok(Word { rank, letters: out })
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// `X_0 = X_n⁻¹ ⋯ X_1⁻¹`, the boundary word of the (n+1)-holed sphere.
pub fn boundary_word(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let letters: Vec<i32> = (1..=n as i32).rev().map(|i| -i).collect();
    Ok(Word { rank: n, letters })
}

impl Word {
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        reduce(rank, letters)
    }

    pub fn empty(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator `X_i`, 1-based.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        reduce(rank, &[i as i32])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Ok(Word {
            rank: self.rank,
            letters: out,
        })
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<i32>) -> Self {
        Self { rank, letters }
    }

    /// Parses the letter syntax: `A`..`Z` are `X_1`..`X_26`, lowercase are
    /// inverses, whitespace is ignored, `1` or an empty string is the
    /// identity.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Self::empty(rank));
        }
        let mut letters = Vec::new();
        for ch in trimmed.chars().filter(|c| !c.is_whitespace()) {
            let l = if ch.is_ascii_uppercase() {
                (ch as u8 - b'A') as i32 + 1
            } else if ch.is_ascii_lowercase() {
                -((ch as u8 - b'a') as i32 + 1)
            } else {
                return Err(Error::WordSyntax(s.to_string()));
            };
            letters.push(l);
        }
        reduce(rank, &letters).map_err(|_| Error::WordSyntax(s.to_string()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        if self.rank <= 26 {
            for &l in &self.letters {
                let base = if l > 0 { b'A' } else { b'a' };
                write!(f, "{}", (base + (l.unsigned_abs() as u8 - 1)) as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self
                .letters
                .iter()
                .map(|&l| {
                    if l > 0 {
                        format!("X{l}")
                    } else {
                        format!("X{}^-1", -l)
                    }
                })
                .collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}
