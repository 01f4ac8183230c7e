//! Named verification suites shared by the CLI and the acceptance tests:
//! each suite runs a family of exact checks over a type/rank grid and
//! reports one pass/fail result per instance.

use num::{Signed, Zero};

use crate::coxfeas::{self, CoxeterExpected};
use crate::rootsys::{Kind, RootSystem, Weight};
use crate::ssgit;
use crate::weyl::{bruhat_leq, coxeter_elements, min_coset_reps, CosetSpec, WeylElement};
use crate::{rat, Rat, Result};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteOutcome {
    fn new(suite: &str) -> Self {
        SuiteOutcome {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            details: details.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn classical_systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
        let min = match kind {
            Kind::A => 1,
            Kind::B | Kind::C => 2,
            _ => 3,
        };
        for rank in min..=max_rank {
            out.push(RootSystem::build(kind, rank).expect("valid rank"));
        }
    }
    out
}

/// `|<omega_r, coroot(beta)>| <= 2` for every fundamental weight and every
/// root of types A-D up to the given rank.
pub fn suite_pairing_bound(max_rank: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("pairing-bound");
    let two = rat(2, 1);
    for rs in classical_systems(max_rank) {
        let mut worst = Rat::zero();
        let mut ok = true;
        let roots = rs.positive_roots();
        for r in 1..=rs.rank() {
            let omega = rs.fundamental_weight(r)?;
            for root in &roots {
                let v = rs.pairing_coroot(&omega, &root.coroot)?.abs();
                if v > worst {
                    worst = v.clone();
                }
                if v > two {
                    ok = false;
                }
            }
        }
        outcome.push(
            format!("{rs}"),
            ok,
            format!("max |pairing| = {}", crate::rootsys::format_rat(&worst)),
        );
    }
    Ok(outcome)
}

fn witness_check(
    outcome: &mut SuiteOutcome,
    rs: &RootSystem,
    name: String,
    word: &[usize],
    scale: i64,
    r: usize,
    expected: &Weight,
) -> Result<()> {
    let w = WeylElement::from_word(rs, word)?;
    let chi = rs.fundamental_weight(r)?.scaled_int(scale);
    let image = w.apply(&chi);
    let ok = image == *expected;
    outcome.push(
        name,
        ok,
        format!("word {:?}: image {}, expected {}", word, image, expected),
    );
    Ok(())
}

/// All stated (word, weight) pairs reproduce exactly.
pub fn suite_explicit_witnesses() -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("witnesses");
    for n in 2..=7usize {
        let rs = RootSystem::build(Kind::B, n)?;
        let descending: Vec<usize> = (1..=n).rev().collect();
        let mut coords = vec![0i64; n];
        coords[n - 1] = -1;
        witness_check(
            &mut outcome,
            &rs,
            format!("B{n} r=1"),
            &descending,
            1,
            1,
            &Weight::from_integers(&coords),
        )?;
        // Spin case: w(2 omega_n) = -(alpha_1 + alpha_3 + ...).
        let mut coords = vec![0i64; n];
        for i in 1..=n.div_ceil(2) {
            coords[2 * i - 1 - 1] = -1;
        }
        witness_check(
            &mut outcome,
            &rs,
            format!("B{n} r={n}"),
            &ssgit::b_spin_word(n),
            2,
            n,
            &Weight::from_integers(&coords),
        )?;

        let rs = RootSystem::build(Kind::C, n)?;
        let mut coords = vec![0i64; n];
        coords[n - 1] = -1;
        witness_check(
            &mut outcome,
            &rs,
            format!("C{n} r=1"),
            &descending,
            2,
            1,
            &Weight::from_integers(&coords),
        )?;
    }
    for n in 4..=7usize {
        let rs = RootSystem::build(Kind::D, n)?;
        let descending: Vec<usize> = (1..=n).rev().collect();
        let mut coords = vec![0i64; n];
        coords[n - 2] = -1;
        coords[n - 1] = -1;
        witness_check(
            &mut outcome,
            &rs,
            format!("D{n} r=1"),
            &descending,
            2,
            1,
            &Weight::from_integers(&coords),
        )?;
        for r in [n - 1, n] {
            let expected = ssgit::d_spin_weight(n, r).scaled_int(4);
            witness_check(
                &mut outcome,
                &rs,
                format!("D{n} r={r} (n mod 4 = {})", n % 4),
                &ssgit::d_spin_word(n, r),
                4,
                r,
                &expected,
            )?;
        }
    }
    Ok(outcome)
}

fn minimal_sets_grid(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for n in 3..=max_rank {
        out.push(RootSystem::build(Kind::B, n).expect("valid"));
        out.push(RootSystem::build(Kind::C, n).expect("valid"));
    }
    for n in 4..=max_rank {
        out.push(RootSystem::build(Kind::D, n).expect("valid"));
    }
    out
}

/// Oracle minimal sets equal the closed-form expected sets on every
/// covered (type, rank, r); closed-form-silent cases run the oracle only.
pub fn suite_minimal_sets(limit: u128, max_rank: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("minimal-sets");
    for rs in minimal_sets_grid(max_rank) {
        for r in 1..=rs.rank() {
            let report = ssgit::minimal_report(&rs, r, limit)?;
            let name = format!("{rs} r={r}");
            match report.matches {
                Some(true) => outcome.push(
                    name,
                    true,
                    format!("{} minimal elements, closed form matches", report.oracle.len()),
                ),
                Some(false) => outcome.push(name, false, report.mismatches.join("; ")),
                None => outcome.push(
                    name,
                    true,
                    format!("closed-form-silent; oracle found {} elements", report.oracle.len()),
                ),
            }
        }
    }
    Ok(outcome)
}

/// Max coordinate over maximal-length nonnegative images lies in
/// {1, 3/2}, with 3/2 confined to type D, odd r, coordinate n-1 or n.
pub fn suite_coord_bound(limit: u128, max_rank: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("coord-bound");
    for rs in minimal_sets_grid(max_rank) {
        for r in 1..=rs.rank() {
            let report = ssgit::check_coord_bound(&rs, r, limit)?;
            let distinct: std::collections::BTreeSet<String> = report
                .entries
                .iter()
                .map(|e| crate::rootsys::format_rat(&e.max_coord))
                .collect();
            outcome.push(
                format!("{rs} r={r}"),
                report.ok,
                if report.ok {
                    format!(
                        "{}max length {}, coordinate maxima {{{}}}",
                        if report.covered { "" } else { "outside the bound's range; " },
                        report.max_length,
                        distinct.into_iter().collect::<Vec<_>>().join(", ")
                    )
                } else {
                    report.failures.join("; ")
                },
            );
        }
    }
    Ok(outcome)
}

fn coxeter_grid(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(RootSystem::build(Kind::A, n).expect("valid"));
    }
    for n in 2..=max_rank {
        out.push(RootSystem::build(Kind::B, n).expect("valid"));
        out.push(RootSystem::build(Kind::C, n).expect("valid"));
    }
    for n in 3..=max_rank {
        out.push(RootSystem::build(Kind::D, n).expect("valid"));
    }
    for n in 6..=8 {
        out.push(RootSystem::build(Kind::E, n).expect("valid"));
    }
    out.push(RootSystem::build(Kind::F, 4).expect("valid"));
    out.push(RootSystem::build(Kind::G, 2).expect("valid"));
    out
}

/// Full Coxeter-element sweep: closed-form agreement on every element,
/// empty admitting sets for E/F/G, and verified witnesses for every
/// positive decision.
pub fn suite_coxeter_sweep(max_rank: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("coxeter-sweep");
    for rs in coxeter_grid(max_rank) {
        let reports = coxfeas::classify_all(&rs)?;
        let mut failures = Vec::new();
        let mut admitting = 0usize;
        for report in &reports {
            if report.admits {
                admitting += 1;
                if report.witness.is_none() {
                    failures.push(format!("{:?}: admits without witness", report.element.word()));
                }
                if !report.passes_descent_filter {
                    failures.push(format!(
                        "{:?}: admits but fails the descent filter",
                        report.element.word()
                    ));
                }
            }
            if !report.agreement {
                failures.push(format!(
                    "{:?}: decision {} disagrees with closed form {:?}",
                    report.element.word(),
                    report.admits,
                    report.expected
                ));
            }
            if matches!(report.expected, CoxeterExpected::Biconditional(false)) && report.admits {
                failures.push(format!(
                    "{:?}: admits where the closed form forbids it",
                    report.element.word()
                ));
            }
        }
        outcome.push(
            format!("{rs}"),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{} Coxeter elements, {admitting} admitting", reports.len())
            } else {
                failures.join("; ")
            },
        );
    }
    Ok(outcome)
}

fn rank_le4_systems() -> Vec<RootSystem> {
    let mut out = classical_systems(4);
    out.push(RootSystem::build(Kind::F, 4).expect("valid"));
    out.push(RootSystem::build(Kind::G, 2).expect("valid"));
    out
}

/// Fourier-Motzkin decisions match bounded integer grid search for every
/// Coxeter element at rank <= 4.
pub fn suite_fm_grid(max_coord: i64) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("fm-grid");
    for rs in rank_le4_systems() {
        let mut failures = Vec::new();
        let mut count = 0usize;
        for w in coxeter_elements(&rs)? {
            count += 1;
            let (admits, witness) = coxfeas::decide_admits(&rs, &w);
            let grid = coxfeas::grid_search(&rs, &w, max_coord);
            if admits != grid.is_some() {
                // FM-feasible but grid-empty is only acceptable if the FM
                // witness itself checks out by direct substitution.
                let vindicated = admits
                    && witness.as_ref().is_some_and(|chi| {
                        rs.is_dominant(chi).unwrap_or(false)
                            && !chi.is_zero()
                            && w.apply(chi).is_nonpositive()
                    });
                if !vindicated {
                    failures.push(format!(
                        "{:?}: FM {} vs grid {}",
                        w.word(),
                        admits,
                        grid.is_some()
                    ));
                }
            }
        }
        outcome.push(
            format!("{rs}"),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{count} Coxeter elements agree")
            } else {
                failures.join("; ")
            },
        );
    }
    Ok(outcome)
}

/// Bruhat monotonicity of images, up-closedness of the admitting set, and
/// local/global minimality agreement.
pub fn suite_invariants(limit: u128, max_rank: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("invariants");
    for rs in classical_systems(max_rank) {
        let mut failures = Vec::new();
        for r in 1..=rs.rank() {
            let omega = rs.fundamental_weight(r)?;
            let chi = omega.scaled(&Rat::from(omega.clearing_factor()));
            let reps = min_coset_reps(&rs, &CosetSpec::maximal(r), limit)?;
            let images: Vec<Weight> = reps.iter().map(|w| w.apply(&chi)).collect();
            for (i, u) in reps.iter().enumerate() {
                for (j, w) in reps.iter().enumerate() {
                    if i == j || !bruhat_leq(&rs, u, w) {
                        continue;
                    }
                    // u <= w forces w(chi) <= u(chi) coordinatewise.
                    let dominated = images[j]
                        .coords()
                        .iter()
                        .zip(images[i].coords())
                        .all(|(wc, uc)| wc <= uc);
                    if !dominated {
                        failures.push(format!(
                            "monotonicity fails at r={r}: {:?} <= {:?}",
                            u.word(),
                            w.word()
                        ));
                    }
                    // Up-closedness of the admitting set.
                    if images[i].is_nonpositive() && !images[j].is_nonpositive() {
                        failures.push(format!(
                            "admitting set not up-closed at r={r}: {:?} <= {:?}",
                            u.word(),
                            w.word()
                        ));
                    }
                }
            }
            // The oracle cross-checks local vs global minimality
            // internally and errors on disagreement.
            if let Err(e) = ssgit::minimal_admitting_oracle(&rs, r, limit) {
                failures.push(format!("minimality filters at r={r}: {e}"));
            }
        }
        outcome.push(
            format!("{rs}"),
            failures.is_empty(),
            if failures.is_empty() {
                "monotone, up-closed, filters agree".to_string()
            } else {
                failures.join("; ")
            },
        );
    }
    Ok(outcome)
}

/// The feasible cone for `w = s_1 s_3 s_2` in A_3 is exactly the ray
/// through `(1, 2, 1)`: enumerate candidate extreme rays as pairwise row
/// intersections of the six defining half-spaces.
pub fn suite_a3_ray() -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("a3-ray");
    let rs = RootSystem::build(Kind::A, 3)?;
    let w = WeylElement::from_word(&rs, &[1, 3, 2])?;
    let n = 3usize;
    // Integer rows: dominance then nonpositivity of the image.
    let mut rows: Vec<[i64; 3]> = Vec::new();
    for j in 1..=n {
        rows.push([rs.cartan(1, j), rs.cartan(2, j), rs.cartan(3, j)]);
    }
    for i in 0..n {
        rows.push([
            -w.matrix().get(i, 0),
            -w.matrix().get(i, 1),
            -w.matrix().get(i, 2),
        ]);
    }
    let satisfies = |d: &[i64; 3]| rows.iter().all(|r| r[0] * d[0] + r[1] * d[1] + r[2] * d[2] >= 0);
    let cross = |a: &[i64; 3], b: &[i64; 3]| -> [i64; 3] {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let normalize = |d: [i64; 3]| -> [i64; 3] {
        let g = d.iter().fold(0i64, |acc, &v| num::integer::gcd(acc, v.abs()));
        if g == 0 {
            return d;
        }
        [d[0] / g, d[1] / g, d[2] / g]
    };
    let mut feasible_rays: std::collections::BTreeSet<[i64; 3]> = std::collections::BTreeSet::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let d = cross(&rows[i], &rows[j]);
            if d == [0, 0, 0] {
                continue;
            }
            for cand in [d, [-d[0], -d[1], -d[2]]] {
                if satisfies(&cand) {
                    feasible_rays.insert(normalize(cand));
                }
            }
        }
    }
    let expected = [1i64, 2, 1];
    let only_ray = feasible_rays.iter().all(|d| *d == expected);
    outcome.push(
        "A3 s1 s3 s2 extreme rays",
        only_ray && feasible_rays.contains(&expected),
        format!("feasible extreme directions: {:?}", feasible_rays),
    );
    // The cone is pointed (it sits inside the dominance cone), so a unique
    // extreme ray means the cone is that ray; cross-check the FM witness.
    let (admits, witness) = coxfeas::decide_admits(&rs, &w);
    let on_ray = witness.as_ref().is_some_and(|chi| {
        let unit = chi.coord(1).clone();
        !unit.is_zero()
            && *chi.coord(2) == unit.clone() * rat(2, 1)
            && *chi.coord(3) == unit
    });
    outcome.push(
        "A3 s1 s3 s2 witness on the ray",
        admits && on_ray,
        format!("witness {:?}", witness),
    );
    Ok(outcome)
}

/// Runs every suite at the standard grids.
pub fn all_suites(limit: u128) -> Result<Vec<SuiteOutcome>> {
    Ok(vec![
        suite_pairing_bound(7)?,
        suite_explicit_witnesses()?,
        suite_minimal_sets(limit, 5)?,
        suite_coord_bound(limit, 5)?,
        suite_coxeter_sweep(6)?,
        suite_fm_grid(6)?,
        suite_invariants(limit, 4)?,
        suite_a3_ray()?,
    ])
}

/// Runs one suite by CLI name; `max_rank` overrides the per-suite default
/// grid ceiling.
pub fn run_suite(name: &str, limit: u128, max_rank: Option<usize>) -> Result<Option<Vec<SuiteOutcome>>> {
    let mr = |default: usize| max_rank.unwrap_or(default);
    let one = |s: SuiteOutcome| Some(vec![s]);
    Ok(match name {
        "pairing-bound" => one(suite_pairing_bound(mr(7))?),
        "witnesses" => one(suite_explicit_witnesses()?),
        "minimal-sets" => one(suite_minimal_sets(limit, mr(5))?),
        "coord-bound" => one(suite_coord_bound(limit, mr(5))?),
        "coxeter-sweep" => one(suite_coxeter_sweep(mr(6))?),
        "fm-grid" => one(suite_fm_grid(6)?),
        "invariants" => one(suite_invariants(limit, mr(4))?),
        "a3-ray" => one(suite_a3_ray()?),
        "all" => Some(all_suites(limit)?),
        _ => None,
    })
}
