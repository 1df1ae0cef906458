use crate::figure;
use crate::manifest::{
    Equidistribute, Expectation, Experiment, Manifest, ManifestError, Membership, Orbit,
    Patching, Probe, Reference, Start, Torus, TorusMatrix, Verify,
};
use crate::report::{Check, Report};
use crate::table::{Cell, Table};
use anyhow::{Context, Result};
use charvar::ergodics::{
    conservation_check, level_set_walk, patching_experiment, random_walk, sample_ks,
    semicircle_cdf, uniform_cdf, Conserved, OrbitLog, Statistic, TorusMap, TorusPoint, WalkSpec,
};
use charvar::free_group::{abelianization_matrix, named_generators, IntMatrix};
use charvar::induced::{alpha_star, fiber_connectivity_probe, gamma_star, in_fiber, ProbeParams};
use charvar::trace::{
    boundary_realizable, delta, delta_base, fourholes_residual, trace_coords3,
    RealizabilityMethod,
};
use charvar::{Rep, RngStream};
use std::time::Instant;

/// Stream reserved for drawing starting points, away from walker streams.
const START_STREAM: u64 = 1 << 40;

/// Runs the experiment, writes its data files and `report.json` into the
/// output directory, and returns the report.
pub fn run(manifest: &Manifest) -> Result<Report> {
    manifest.validate()?;
    let t0 = Instant::now();
    let seed = manifest.seed;
    let (tables, checks) = match &manifest.experiment {
        Experiment::Verify(v) => verify(v, seed)?,
        Experiment::Orbit(o) => orbit(o, seed)?,
        Experiment::Membership(m) => membership(m)?,
        Experiment::Figure(f) => figure::emit(f)?,
        Experiment::Torus(t) => torus(t)?,
        Experiment::Patching(p) => patching(p, seed)?,
        Experiment::Probe(p) => probe(p, seed)?,
    };
    let dir = &manifest.output.dir;
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut data_files = Vec::new();
    for t in &tables {
        t.write(dir, manifest.output.format)?;
        data_files.push(t.file_name(manifest.output.format));
    }
    let report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        manifest: manifest.clone(),
        checks,
        data_files,
        wall_clock_seconds: t0.elapsed().as_secs_f64(),
    };
    std::fs::write(dir.join("report.json"), report.to_json())?;
    Ok(report)
}

type Outcome = (Vec<Table>, Vec<Check>);

fn verify(v: &Verify, seed: u64) -> Result<Outcome> {
    let cat = named_generators(3)?;
    let (alpha, gamma) = (cat.get("alpha")?, cat.get("gamma")?);
    let mut rng = RngStream::new(seed, 0);
    let mut t = Table::new("verify", &["sample", "residual", "alpha_deviation", "gamma_deviation"]);
    let (mut res, mut ea, mut eg, mut fixed) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for i in 0..v.samples {
        let rho = Rep::haar(3, &mut rng);
        let tc = trace_coords3(&rho)?;
        let r = fourholes_residual(&tc).abs();
        let a = alpha_star(&tc).max_abs_diff(&trace_coords3(&rho.act(alpha)?)?);
        let g = gamma_star(&tc).max_abs_diff(&trace_coords3(&rho.act(gamma)?)?);
        let s = alpha_star(&tc);
        fixed = fixed.max((s.a - tc.a).abs()).max((s.d - tc.d).abs()).max((s.y - tc.y).abs());
        res = res.max(r);
        ea = ea.max(a);
        eg = eg.max(g);
        t.push(vec![i.into(), r.into(), a.into(), g.into()]);
    }
    let id = fourholes_residual(&trace_coords3(&Rep::identity(3))?);
    let checks = vec![
        Check::at_most("relation-residual", res, v.tolerance),
        Check::equal("identity-residual", id.abs(), 0.0),
        Check::at_most("alpha-commuting", ea, v.tolerance),
        Check::at_most("gamma-commuting", eg, v.tolerance),
        Check::equal("alpha-fixes-a-d-y", fixed, 0.0),
    ];
    Ok((vec![t], checks))
}

fn orbit_table(log: &OrbitLog) -> Table {
    let mut cols = vec!["walker".to_string(), "step".to_string()];
    cols.extend(log.columns().iter().cloned());
    let mut t = Table::with_columns("orbit", cols);
    for (w, step, vals) in log.rows() {
        let mut row: Vec<Cell> = vec![w.into(), step.into()];
        row.extend(vals.iter().map(|&v| Cell::Num(v)));
        t.push(row);
    }
    t
}

fn equidistribution_check(log: &OrbitLog, e: &Equidistribute) -> Result<Check> {
    let samples = log.values(&e.statistic)?;
    let ks = match e.reference {
        Reference::Semicircle => sample_ks(&samples, |t| {
            semicircle_cdf(t.clamp(-2.0, 2.0)).unwrap_or(0.0)
        })?,
        Reference::Uniform => sample_ks(&samples, |t| uniform_cdf((t + 2.0) / 4.0))?,
    };
    Ok(Check::below(format!("ks-{}", e.statistic), ks, e.max_ks))
}

fn orbit(o: &Orbit, seed: u64) -> Result<Outcome> {
    let stats = o
        .statistics
        .iter()
        .map(|s| Statistic::parse(o.rank, s))
        .collect::<charvar::Result<Vec<_>>>()
        .map_err(|e| ManifestError(e.to_string()))?;
    let spec = WalkSpec {
        rank: o.rank,
        generators: o.generators.clone(),
        steps: o.steps,
        burn_in: o.burn_in,
        seed,
        walkers: o.walkers,
        statistics: stats,
    };
    let log = match (o.kappa_level, o.start) {
        (Some(t), _) => level_set_walk(t, &spec)?,
        (None, Start::Identity) => random_walk(&Rep::identity(o.rank), &spec)?,
        (None, Start::Haar) => {
            let rho = Rep::haar(o.rank, &mut RngStream::new(seed, START_STREAM));
            random_walk(&rho, &spec)?
        }
    };
    let mut checks = Vec::new();
    for c in &o.conserve {
        let what: Conserved = c.statistic.parse()?;
        let drift = conservation_check(&log, &what)?;
        checks.push(match c.min_drift {
            Some(m) => Check::new(format!("drift-{}", c.statistic), drift, crate::report::Comparison::Above, m),
            None => Check::at_most(format!("drift-{}", c.statistic), drift, c.tolerance.unwrap_or(1e-9)),
        });
    }
    if let Some(e) = &o.equidistribute {
        checks.push(equidistribution_check(&log, e)?);
    }
    Ok((vec![orbit_table(&log)], checks))
}

fn membership(m: &Membership) -> Result<Outcome> {
    let mut t = Table::new(
        "membership",
        &["case", "a", "b", "c", "d", "delta", "delta_base", "discriminant", "interval", "expected"],
    );
    let mut checks = Vec::new();
    let mut disagreements = 0usize;
    for (i, case) in m.cases.iter().enumerate() {
        let [a, b, c, d] = case.quadruple;
        let disc = boundary_realizable(a, b, c, d, RealizabilityMethod::Discriminant)
            .map_err(|e| ManifestError(e.to_string()))?;
        let intv = boundary_realizable(a, b, c, d, RealizabilityMethod::Interval)
            .map_err(|e| ManifestError(e.to_string()))?;
        if disc != intv {
            disagreements += 1;
        }
        let expected = match case.expect {
            Some(Expectation::Realizable) => "realizable",
            Some(Expectation::Unrealizable) => "unrealizable",
            None => "",
        };
        if let Some(exp) = case.expect {
            let want = exp == Expectation::Realizable;
            checks.push(Check::equal(format!("case-{i}-{expected}"), disc as u8 as f64, want as u8 as f64));
        }
        t.push(vec![
            i.into(),
            a.into(),
            b.into(),
            c.into(),
            d.into(),
            delta(a, b, c, d).into(),
            delta_base(a, b, c, d).into(),
            disc.into(),
            intv.into(),
            expected.to_string().into(),
        ]);
    }
    checks.push(Check::equal("methods-agree", disagreements as f64, 0.0));
    Ok((vec![t], checks))
}

fn torus_matrix(map: &TorusMatrix) -> Result<IntMatrix> {
    Ok(match map {
        TorusMatrix::Cat => TorusMap::cat().matrix().clone(),
        TorusMatrix::Alpha => abelianization_matrix(named_generators(3)?.get("alpha")?.forward()),
        TorusMatrix::Rows(rows) => IntMatrix::from_rows(rows).map_err(|e| ManifestError(e.to_string()))?,
    })
}

fn torus(t: &Torus) -> Result<Outcome> {
    let map = TorusMap::new(torus_matrix(&t.map)?).map_err(|e| ManifestError(e.to_string()))?;
    let start = TorusPoint::new(t.start.clone()).map_err(|e| ManifestError(e.to_string()))?;
    let orbit = map.orbit(&start, t.steps).map_err(|e| ManifestError(e.to_string()))?;
    let n = start.dim();
    let coords: Vec<usize> = t.coordinates.clone().unwrap_or_else(|| (0..n).collect());
    if let Some(&bad) = coords.iter().find(|&&c| c >= n) {
        return Err(ManifestError(format!("coordinate {bad} out of range for dimension {n}")).into());
    }
    let mut cols = vec!["step".to_string()];
    cols.extend((1..=n).map(|i| format!("x{i}")));
    let mut table = Table::with_columns("torus", cols);
    for (k, p) in orbit.iter().enumerate() {
        let mut row: Vec<Cell> = vec![(k + 1).into()];
        row.extend(p.coords().iter().map(|&v| Cell::Num(v)));
        table.push(row);
    }
    let mut checks = Vec::new();
    for c in coords {
        let v: Vec<f64> = orbit.iter().map(|p| p.coords()[c]).collect();
        checks.push(Check::below(format!("ks-x{}", c + 1), sample_ks(&v, uniform_cdf)?, t.max_ks));
    }
    Ok((vec![table], checks))
}

fn patching(p: &Patching, seed: u64) -> Result<Outcome> {
    let r = patching_experiment(p.rank, p.pairs, seed)?;
    let mut t = Table::new(
        "patching",
        &["rank", "pairs", "successes", "max_error_first", "max_error_last", "grid_side", "grid_failures"],
    );
    t.push(vec![
        r.rank.into(),
        r.pairs.into(),
        r.successes.into(),
        r.max_error_first.into(),
        r.max_error_last.into(),
        r.grid_side.into(),
        r.grid_failures.into(),
    ]);
    let checks = vec![
        Check::equal("success-rate", r.success_rate(), 1.0),
        Check::at_most("trace-error", r.max_error_first.max(r.max_error_last), 1e-9),
        Check::equal("grid-failures", r.grid_failures as f64, 0.0),
    ];
    Ok((vec![t], checks))
}

fn probe(p: &Probe, seed: u64) -> Result<Outcome> {
    let (a0, d0) = (p.a0, p.d0);
    if !(a0.abs() < 2.0 && d0.abs() < 2.0) {
        return Err(ManifestError("probe needs |a0|, |d0| < 2".into()).into());
    }
    let mut rng = RngStream::new(seed, 0);
    let mut point = || loop {
        let (b, c) = (rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0));
        if in_fiber(a0, d0, b, c) {
            return (b, c);
        }
    };
    let mut t = Table::new(
        "probe",
        &["trial", "p_b", "p_c", "q_b", "q_c", "connected", "segments", "message"],
    );
    let mut ok = 0usize;
    for trial in 0..p.pairs {
        let (pp, qq) = (point(), point());
        let params = ProbeParams {
            epsilon: p.epsilon,
            seed: seed.wrapping_add(trial as u64),
            ..ProbeParams::default()
        };
        let (connected, segments, message) = match fiber_connectivity_probe(a0, d0, pp, qq, &params) {
            Ok(chain) if chain.verify(pp, qq, p.epsilon) => (true, chain.len(), String::new()),
            Ok(_) => (false, 0, "chain failed verification".to_string()),
            Err(e) => (false, 0, e.to_string()),
        };
        ok += connected as usize;
        t.push(vec![
            trial.into(),
            pp.0.into(),
            pp.1.into(),
            qq.0.into(),
            qq.1.into(),
            connected.into(),
            segments.into(),
            message.into(),
        ]);
    }
    let frac = ok as f64 / p.pairs as f64;
    let check = Check::new("connected-fraction", frac, crate::report::Comparison::AtLeast, p.min_success).advisory();
    Ok((vec![t], vec![check]))
}
