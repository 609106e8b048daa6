use std::time::Instant;

use gruss::{Flavor, RadiusMode, Slack};
use rand::Rng;
use sha2::{Digest, Sha256};

use crate::checks::{evaluate, flavor_of, Group, Outcome, SECTIONS};
use crate::config::{FlavorChoice, SuiteConfig};
use crate::error::Result;
use crate::instance::{random_instance, ModuleInstance};
use crate::io::instance_to_string;
use crate::report::{SectionReport, SuiteReport};
use crate::rng::{trial_rng, TrialRng};

pub(crate) fn digest(instance: &ModuleInstance) -> String {
    let hash = Sha256::digest(instance_to_string(instance).as_bytes());
    hex::encode(&hash[..8])
}

pub(crate) fn slack_of(config: &SuiteConfig) -> Slack {
    Slack::new(config.slack_scale)
}

pub(crate) fn mode_of(config: &SuiteConfig) -> RadiusMode {
    if config.strict_radius_mode {
        RadiusMode::AllM
    } else {
        RadiusMode::PerM
    }
}

/// Draws trial `trial`'s instance: shape uniform within the caps, radii in
/// `flavor`.
pub fn trial_instance(config: &SuiteConfig, trial: u64, flavor: Flavor) -> Result<(ModuleInstance, TrialRng)> {
    let mut rng = trial_rng(config.seed, trial, 0);
    let k = rng.random_range(1..=config.k_max);
    let d = rng.random_range(1..=config.d_max);
    let n = rng.random_range(1..=config.n_max);
    let inst = random_instance(&mut rng, k, d, n, flavor)?;
    Ok((inst, rng))
}

/// Folds one outcome into a section aggregate.
pub(crate) fn record(section: &mut SectionReport, trial: usize, outcome: &Outcome, instance: &ModuleInstance) {
    section.trials += 1;
    if outcome.pass {
        section.passes += 1;
    } else if section.first_failure.is_none() {
        let msg = outcome.message.as_deref().unwrap_or("failed");
        section.first_failure = Some(format!("trial {trial}: {msg}"));
    }
    if let Some(t) = outcome.tightness.filter(|t| t.is_finite()) {
        if section.max_tightness.is_none_or(|m| t > m) {
            section.max_tightness = Some(t);
            section.argmax_digest = Some(digest(instance));
        }
    }
    if let Some(r) = outcome.residual.filter(|r| r.is_finite()) {
        if section.max_residual.is_none_or(|m| r > m) {
            section.max_residual = Some(r);
            section.argmax_digest = Some(digest(instance));
        }
    }
}

pub(crate) fn selected(flavor: FlavorChoice) -> Vec<(&'static str, Group)> {
    SECTIONS
        .iter()
        .copied()
        .filter(|(_, g)| match g {
            Group::Identity => true,
            Group::CStar => flavor.includes_cstar(),
            Group::HStar => flavor.includes_hstar(),
        })
        .collect()
}

/// Runs every selected section on `config.trials` seeded instances.
/// Checker failures are recorded and the run continues.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let start = Instant::now();
    let sections = selected(config.flavor);
    let mut report = SuiteReport::new(config.clone());
    report.sections = sections.iter().map(|(id, _)| SectionReport::new(id)).collect();
    let (slack, mode) = (slack_of(config), mode_of(config));
    let base_flavor = if config.flavor == FlavorChoice::Hstar {
        Flavor::HStar
    } else {
        Flavor::CStar
    };

    for trial in 0..config.trials {
        let (inst, _) = trial_instance(config, trial as u64, base_flavor)?;
        let other = inst.with_flavor(match base_flavor {
            Flavor::CStar => Flavor::HStar,
            Flavor::HStar => Flavor::CStar,
        });
        for ((id, group), section) in sections.iter().zip(report.sections.iter_mut()) {
            let view = if flavor_of(*group) == base_flavor { &inst } else { &other };
            let outcome = evaluate(id, view, slack, mode)?;
            record(section, trial, &outcome, view);
        }
    }
    report.wall_time_secs = start.elapsed().as_secs_f64();
    Ok(report)
}
