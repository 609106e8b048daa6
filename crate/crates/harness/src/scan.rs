use std::time::Instant;

use crate::checks::{evaluate, flavor_of, group_of, witness_instance};
use crate::config::SuiteConfig;
use crate::error::Result;
use crate::report::{SectionReport, SuiteReport};
use crate::rng::trial_rng;
use crate::suite::{mode_of, record, slack_of, trial_instance};

/// Sections whose supremum tightness must reach `1 - SHARP_SCAN_GAP`.
pub const SHARP_SECTIONS: &[&str] = &["3.8", "5.2", "sharp-3.8", "sharp-5.2"];
pub const SHARP_SCAN_GAP: f64 = 1e-6;

/// Evaluates one section on `config.trials` random instances and, for each,
/// on a member of the section's equality family; reports the supremum of the
/// tightness. Trial `t` draws from the same streams whatever the trial
/// count, so a longer scan never reports a smaller maximum.
pub fn tightness_scan(config: &SuiteConfig, inequality_id: &str) -> Result<SuiteReport> {
    config.validate()?;
    let group = group_of(inequality_id)?;
    let start = Instant::now();
    let flavor = flavor_of(group);
    let (slack, mode) = (slack_of(config), mode_of(config));
    let mut section = SectionReport::new(inequality_id);
    if SHARP_SECTIONS.contains(&inequality_id) {
        section.required_tightness = Some(1.0 - SHARP_SCAN_GAP);
    }
    for trial in 0..config.trials {
        let (inst, _) = trial_instance(config, trial as u64, flavor)?;
        record(&mut section, trial, &evaluate(inequality_id, &inst, slack, mode)?, &inst);
        let mut rng = trial_rng(config.seed, trial as u64, 1);
        if let Some(w) = witness_instance(inequality_id, &inst, &mut rng) {
            record(&mut section, trial, &evaluate(inequality_id, &w, slack, mode)?, &w);
        }
    }
    let mut report = SuiteReport::new(config.clone());
    report.sections.push(section);
    report.wall_time_secs = start.elapsed().as_secs_f64();
    Ok(report)
}
