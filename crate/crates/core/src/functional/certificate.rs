use serde::{Deserialize, Serialize};

use crate::tolerance::Slack;

/// An auxiliary quantity recorded alongside a certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedValue {
    pub label: String,
    pub value: f64,
}

/// Evaluated inequality chain `lhs <= rhs_chain[0] <= rhs_chain[1] <= ...`.
///
/// `pass` holds when every adjacent pair is ordered within `slack`.
/// `tightness` is `lhs / rhs_chain.last()`; when the final link is within
/// slack of zero the bound is degenerate and tightness is 0 if lhs is also
/// negligible (and infinite, with `pass = false`, otherwise).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub name: String,
    pub lhs: f64,
    pub rhs_chain: Vec<f64>,
    pub slack: f64,
    pub pass: bool,
    pub tightness: f64,
    /// Radii (`r`, and `s` when present) the bound was evaluated with.
    pub radii: Vec<f64>,
    pub extras: Vec<NamedValue>,
}

impl BoundCertificate {
    pub fn evaluate(name: &str, lhs: f64, rhs_chain: Vec<f64>, policy: Slack) -> Self {
        assert!(!rhs_chain.is_empty(), "an inequality needs a right-hand side");
        let slack = policy.for_values(std::iter::once(lhs).chain(rhs_chain.iter().copied()));
        let finite = lhs.is_finite() && rhs_chain.iter().all(|v| v.is_finite());
        let ordered = std::iter::once(&lhs)
            .chain(rhs_chain.iter())
            .zip(rhs_chain.iter())
            .all(|(lo, hi)| *lo <= *hi + slack);
        let last = *rhs_chain.last().unwrap();
        let (tightness, degenerate_ok) = if last > slack {
            (lhs / last, true)
        } else if lhs <= slack {
            (0.0, true)
        } else {
            (f64::INFINITY, false)
        };
        BoundCertificate {
            name: name.to_string(),
            lhs,
            rhs_chain,
            slack,
            pass: finite && ordered && degenerate_ok,
            tightness,
            radii: Vec::new(),
            extras: Vec::new(),
        }
    }

    pub fn with_radii(mut self, radii: &[f64]) -> Self {
        self.radii = radii.to_vec();
        self
    }

    /// Records a value without affecting `pass`.
    pub fn with_extra(mut self, label: &str, value: f64) -> Self {
        self.extras.push(NamedValue {
            label: label.to_string(),
            value,
        });
        self
    }

    /// Records an additional upper bound for `lhs` and folds it into `pass`.
    pub fn with_upper_bound(mut self, label: &str, value: f64, policy: Slack) -> Self {
        let slack = policy.for_values([self.lhs, value]);
        self.pass &= value.is_finite() && self.lhs <= value + slack;
        self.with_extra(label, value)
    }

    /// Records that two routes to the same quantity agree to `rel`.
    pub fn with_agreement(mut self, label: &str, a: f64, b: f64, rel: f64) -> Self {
        let ok = (a - b).abs() <= rel * a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
        self.pass &= ok || a == b;
        self.with_extra(label, b)
    }

    /// Every adjacent pair of `rhs_chain` ordered within slack.
    pub fn is_monotone(&self) -> bool {
        self.rhs_chain
            .windows(2)
            .all(|w| w[0] <= w[1] + self.slack)
    }

    pub fn final_rhs(&self) -> f64 {
        *self.rhs_chain.last().unwrap()
    }

    pub fn extra(&self, label: &str) -> Option<f64> {
        self.extras.iter().find(|e| e.label == label).map(|e| e.value)
    }
}
