use crate::error::{Error, Result};
use crate::free_group::{named_generators, Automorphism, Representation, Word};
use crate::scalar::Real;
use crate::su2::RngStream;
use crate::trace::{fourholes_residual, kappa, sample_kappa_level, t_boundary, trace_coords3};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Quantity recorded along a walk.
#[derive(Clone, Debug, PartialEq)]
pub enum Statistic {
    /// `tr ρ(w)`, written `tr(AB)` with upper case for generators and lower
    /// case for inverses.
    Trace(Word),
    /// `tr ρ([X_1, X_2])`, rank 2 only.
    Kappa,
    /// Residual of the rank-3 trace relation.
    Residual,
    /// One of the rank-3 trace coordinates `a b c d x y z`.
    Coord(char),
    /// `tr ρ(X_i)` with `X_0` the boundary word.
    Boundary(usize),
}

impl Statistic {
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let stat = match s {
            "kappa" => Self::Kappa,
            "residual" => Self::Residual,
            "a" | "b" | "c" | "d" | "x" | "y" | "z" => Self::Coord(s.chars().next().unwrap_or('a')),
            _ if s.starts_with("tr(") && s.ends_with(')') => {
                Self::Trace(Word::parse(rank, &s[3..s.len() - 1])?)
            }
            _ if s.starts_with('t') && s[1..].parse::<usize>().is_ok() => {
                Self::Boundary(s[1..].parse().unwrap_or(0))
            }
            _ => return Err(Error::UnknownStatistic(s.to_string())),
        };
        stat.check_rank(rank)?;
        Ok(stat)
    }

    /// `t0, t1, ..., tn`.
    pub fn boundary_all(rank: usize) -> Vec<Self> {
        (0..=rank).map(Self::Boundary).collect()
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        let ok = match self {
            Self::Trace(w) => w.rank() == rank,
            Self::Kappa => rank == 2,
            Self::Residual | Self::Coord(_) => rank == 3,
            Self::Boundary(i) => *i <= rank && rank >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownStatistic(format!("{self} at rank {rank}")))
        }
    }

    fn eval<T: Real>(&self, rho: &Representation<T>) -> Result<f64> {
        let v = match self {
            Self::Trace(w) => rho.trace_of(w)?,
            Self::Kappa => kappa(rho)?,
            Self::Residual => fourholes_residual(&trace_coords3(rho)?),
            Self::Coord(ch) => {
                let t = trace_coords3(rho)?;
                match ch {
                    'a' => t.a,
                    'b' => t.b,
                    'c' => t.c,
                    'd' => t.d,
                    'x' => t.x,
                    'y' => t.y,
                    _ => t.z,
                }
            }
            Self::Boundary(i) => t_boundary(rho)?.values[*i],
        };
        Ok(v.to_f64_lossy())
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trace(w) => write!(f, "tr({w})"),
            Self::Kappa => f.write_str("kappa"),
            Self::Residual => f.write_str("residual"),
            Self::Coord(c) => write!(f, "{c}"),
            Self::Boundary(i) => write!(f, "t{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkSpec {
    pub rank: usize,
    /// Names or group names understood by the generator catalog.
    pub generators: Vec<String>,
    pub steps: usize,
    pub burn_in: usize,
    pub seed: u64,
    pub walkers: usize,
    pub statistics: Vec<Statistic>,
}

impl WalkSpec {
    pub fn new(rank: usize, generators: &[&str], steps: usize, seed: u64) -> Self {
        Self {
            rank,
            generators: generators.iter().map(|s| s.to_string()).collect(),
            steps,
            burn_in: 0,
            seed,
            walkers: 1,
            statistics: Vec::new(),
        }
    }

    pub fn with_burn_in(mut self, burn_in: usize) -> Self {
        self.burn_in = burn_in;
        self
    }

    pub fn with_walkers(mut self, walkers: usize) -> Self {
        self.walkers = walkers;
        self
    }

    pub fn with_statistics(mut self, statistics: Vec<Statistic>) -> Self {
        self.statistics = statistics;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps <= self.burn_in {
            return Err(Error::InvalidSpec(format!(
                "steps ({}) must exceed burn-in ({})",
                self.steps, self.burn_in
            )));
        }
        if self.walkers == 0 {
            return Err(Error::InvalidSpec("need at least one walker".into()));
        }
        if self.statistics.is_empty() {
            return Err(Error::InvalidSpec("no statistics to record".into()));
        }
        for s in &self.statistics {
            s.check_rank(self.rank)?;
        }
        Ok(())
    }

    /// Generators together with their inverses.
    fn moves(&self) -> Result<Vec<Automorphism>> {
        let gens = named_generators(self.rank)?.resolve(&self.generators)?;
        if gens.is_empty() {
            return Err(Error::InvalidSpec("empty generator set".into()));
        }
        Ok(gens.iter().flat_map(|g| [g.clone(), g.inverse()]).collect())
    }
}

/// Recorded statistics, stored walker by walker. Each walker also keeps
/// the row for its starting point, which is not counted among the rows.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitLog {
    columns: Vec<String>,
    walkers: usize,
    burn_in: usize,
    rows_per_walker: usize,
    initial: Vec<f64>,
    data: Vec<f64>,
}

impl OrbitLog {
    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn walkers(&self) -> usize {
        self.walkers
    }

    pub fn rows_per_walker(&self) -> usize {
        self.rows_per_walker
    }

    pub fn row_count(&self) -> usize {
        self.walkers * self.rows_per_walker
    }

    /// Step index of row `r` of any walker.
    pub fn step_of(&self, r: usize) -> usize {
        self.burn_in + 1 + r
    }

    pub fn row(&self, walker: usize, r: usize) -> &[f64] {
        let k = self.columns.len();
        let start = (walker * self.rows_per_walker + r) * k;
        &self.data[start..start + k]
    }

    pub fn initial(&self, walker: usize) -> &[f64] {
        let k = self.columns.len();
        &self.initial[walker * k..(walker + 1) * k]
    }

    /// `(walker, step, values)` in storage order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, &[f64])> + '_ {
        let k = self.columns.len().max(1);
        self.data.chunks(k).enumerate().map(move |(i, row)| {
            let w = i / self.rows_per_walker;
            (w, self.step_of(i % self.rows_per_walker), row)
        })
    }

    /// All recorded values of one column, walker by walker.
    pub fn values(&self, name: &str) -> Result<Vec<f64>> {
        let col = self
            .column(name)
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))?;
        Ok(self.rows().map(|(_, _, r)| r[col]).collect())
    }
}

fn record<T: Real>(stats: &[Statistic], rho: &Representation<T>, out: &mut Vec<f64>) -> Result<()> {
    for s in stats {
        out.push(s.eval(rho)?);
    }
    Ok(())
}

fn walk_one<T: Real>(
    start: &Representation<T>,
    moves: &[Automorphism],
    spec: &WalkSpec,
    walker: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut rng = RngStream::new(spec.seed, walker as u64);
    let mut rho = start.clone();
    let mut initial = Vec::with_capacity(spec.statistics.len());
    record(&spec.statistics, &rho, &mut initial)?;
    let mut rows = Vec::with_capacity((spec.steps - spec.burn_in) * spec.statistics.len());
    for step in 1..=spec.steps {
        rho = rho.act(&moves[rng.below(moves.len())])?;
        if step > spec.burn_in {
            record(&spec.statistics, &rho, &mut rows)?;
        }
    }
    Ok((initial, rows))
}

/// Independent walkers, one per starting representation. Walker `i` draws
/// its moves from stream `i` of `spec.seed`; `spec.walkers` is ignored.
pub fn random_walk_from<T: Real>(starts: &[Representation<T>], spec: &WalkSpec) -> Result<OrbitLog> {
    let spec = WalkSpec {
        walkers: starts.len(),
        ..spec.clone()
    };
    spec.validate()?;
    for s in starts {
        if s.rank() != spec.rank {
            return Err(Error::RankMismatch {
                expected: spec.rank,
                found: s.rank(),
            });
        }
    }
    let moves = spec.moves()?;
    let parts: Vec<(Vec<f64>, Vec<f64>)> = starts
        .par_iter()
        .enumerate()
        .map(|(i, s)| walk_one(s, &moves, &spec, i))
        .collect::<Result<_>>()?;
    let mut initial = Vec::new();
    let mut data = Vec::new();
    for (i, d) in parts {
        initial.extend(i);
        data.extend(d);
    }
    Ok(OrbitLog {
        columns: spec.statistics.iter().map(|s| s.to_string()).collect(),
        walkers: spec.walkers,
        burn_in: spec.burn_in,
        rows_per_walker: spec.steps - spec.burn_in,
        initial,
        data,
    })
}

/// Walk `spec.walkers` copies of `rho0`. At each step one generator or its
/// inverse is applied through `ρ ↦ ρ ∘ φ⁻¹`, chosen uniformly.
pub fn random_walk<T: Real>(rho0: &Representation<T>, spec: &WalkSpec) -> Result<OrbitLog> {
    spec.validate()?;
    random_walk_from(&vec![rho0.clone(); spec.walkers], spec)
}

/// Rank-2 walkers, each started from its own sample of `κ⁻¹(t)`.
pub fn level_set_walk(t: f64, spec: &WalkSpec) -> Result<OrbitLog> {
    if spec.rank != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: spec.rank,
        });
    }
    spec.validate()?;
    let starts = (0..spec.walkers)
        .map(|w| {
            let mut rng = RngStream::new(spec.seed, (1 << 32) + w as u64);
            sample_kappa_level::<f64>(t, &mut rng, 10_000)
        })
        .collect::<Result<Vec<_>>>()?;
    random_walk_from(&starts, spec)
}

/// What [`conservation_check`] compares against each walker's start.
#[derive(Clone, Debug, PartialEq)]
pub enum Conserved {
    Column(String),
    /// The boundary traces `t0..tn` as a sorted multiset.
    BoundaryMultiset,
}

impl FromStr for Conserved {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boundary-multiset" => Ok(Self::BoundaryMultiset),
            _ => Ok(Self::Column(s.to_string())),
        }
    }
}

/// Largest deviation of the statistic from its value at the walker's start.
pub fn conservation_check(log: &OrbitLog, what: &Conserved) -> Result<f64> {
    let cols: Vec<usize> = match what {
        Conserved::Column(name) => vec![log
            .column(name)
            .ok_or_else(|| Error::UnknownStatistic(name.clone()))?],
        Conserved::BoundaryMultiset => {
            let cols: Vec<usize> = (0..)
                .map_while(|i| log.column(&format!("t{i}")))
                .collect();
            if cols.len() < 3 {
                return Err(Error::UnknownStatistic("boundary traces t0..tn".into()));
            }
            cols
        }
    };
    let pick = |row: &[f64]| {
        let mut v: Vec<f64> = cols.iter().map(|&c| row[c]).collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let mut drift = 0.0f64;
    for w in 0..log.walkers() {
        let base = pick(log.initial(w));
        for r in 0..log.rows_per_walker() {
            let cur = pick(log.row(w, r));
            for (a, b) in base.iter().zip(&cur) {
                drift = drift.max((a - b).abs());
            }
        }
    }
    Ok(drift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(rank: usize, names: &[&str]) -> Vec<Statistic> {
        names.iter().map(|s| Statistic::parse(rank, s).unwrap()).collect()
    }

    #[test]
    fn parsing() {
        assert_eq!(Statistic::parse(2, "kappa").unwrap(), Statistic::Kappa);
        assert_eq!(Statistic::parse(3, "t3").unwrap(), Statistic::Boundary(3));
        assert_eq!(Statistic::parse(3, "tr(AbC)").unwrap().to_string(), "tr(AbC)");
        assert!(Statistic::parse(3, "kappa").is_err());
        assert!(Statistic::parse(2, "residual").is_err());
        assert!(Statistic::parse(3, "t4").is_err());
        assert!(Statistic::parse(3, "foo").is_err());
    }

    #[test]
    fn spec_validation() {
        let base = WalkSpec::new(3, &["alpha"], 10, 1).with_statistics(stats(3, &["a"]));
        assert!(base.validate().is_ok());
        assert!(base.clone().with_burn_in(10).validate().is_err());
        assert!(base.clone().with_walkers(0).validate().is_err());
        let rho = Representation::<f64>::identity(3);
        let bad = WalkSpec::new(3, &["nope"], 10, 1).with_statistics(stats(3, &["a"]));
        assert!(random_walk(&rho, &bad).is_err());
    }

    #[test]
    fn deterministic_and_shaped() {
        let mut rng = RngStream::new(4, 0);
        let rho = Representation::<f64>::haar(3, &mut rng);
        let spec = WalkSpec::new(3, &["nielsen"], 50, 9)
            .with_burn_in(10)
            .with_walkers(3)
            .with_statistics(stats(3, &["a", "residual"]));
        let l1 = random_walk(&rho, &spec).unwrap();
        let l2 = random_walk(&rho, &spec).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1.row_count(), 3 * 40);
        assert_eq!(l1.rows().count(), 120);
        assert_eq!(l1.rows().next().unwrap().1, 11);
        assert!(conservation_check(&l1, &Conserved::Column("residual".into())).unwrap() < 1e-9);
    }

    #[test]
    fn alpha_walk_fixes_a_d_y_but_not_b() {
        let mut rng = RngStream::new(8, 0);
        let rho = Representation::<f64>::haar(3, &mut rng);
        let spec = WalkSpec::new(3, &["alpha"], 200, 2)
            .with_walkers(2)
            .with_statistics(stats(3, &["a", "d", "y", "b"]));
        let log = random_walk(&rho, &spec).unwrap();
        for c in ["a", "d", "y"] {
            assert!(conservation_check(&log, &Conserved::Column(c.into())).unwrap() < 1e-9);
        }
        assert!(conservation_check(&log, &Conserved::Column("b".into())).unwrap() > 0.1);
    }

    #[test]
    fn mapping_class_walk_keeps_boundary_multiset() {
        let mut rng = RngStream::new(12, 0);
        let rho = Representation::<f64>::haar(3, &mut rng);
        let spec = WalkSpec::new(3, &["mcg"], 500, 3)
            .with_walkers(2)
            .with_statistics(Statistic::boundary_all(3));
        let log = random_walk(&rho, &spec).unwrap();
        assert!(conservation_check(&log, &Conserved::BoundaryMultiset).unwrap() < 1e-9);
        assert!(conservation_check(&log, &Conserved::Column("t1".into())).unwrap() > 1e-3);
    }

    #[test]
    fn level_sets() {
        let spec = WalkSpec::new(2, &["nielsen"], 300, 5)
            .with_walkers(2)
            .with_statistics(stats(2, &["kappa", "tr(AB)"]));
        for t in [-2.0, 0.7, 2.0] {
            let log = level_set_walk(t, &spec).unwrap();
            let k = log.column("kappa").unwrap();
            assert!((log.initial(0)[k] - t).abs() < 1e-9);
            assert!(conservation_check(&log, &Conserved::Column("kappa".into())).unwrap() < 1e-9);
        }
    }
}
