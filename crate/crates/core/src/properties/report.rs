use serde::Serialize;

/// Outcome of one property check. `passed` holds exactly when `failures == 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub subject: String,
    pub trials: usize,
    pub failures: usize,
    /// Trials that could not be evaluated (e.g. arguments outside the range of `G`).
    pub skipped: usize,
    /// Largest residual among evaluated trials (0 when none was evaluated);
    /// negative for inequality checks that held with room to spare.
    pub worst_residual: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub witness: Option<String>,
    pub passed: bool,
    /// Report-only checks never fail a verification run.
    pub asserted: bool,
}

impl PropertyReport {
    pub(crate) fn new(property: &str, subject: String, tolerance: f64, seed: u64) -> Self {
        PropertyReport {
            property: property.to_string(),
            subject,
            trials: 0,
            failures: 0,
            skipped: 0,
            worst_residual: 0.0,
            tolerance,
            seed,
            witness: None,
            passed: true,
            asserted: true,
        }
    }

    /// Records a residual; it fails when it exceeds the tolerance.
    pub(crate) fn record(&mut self, residual: f64, witness: impl FnOnce() -> String) {
        self.trials += 1;
        let failed = !(residual <= self.tolerance);
        if failed {
            self.failures += 1;
        }
        let first = self.trials - self.skipped == 1;
        // NaN residuals count as the worst possible outcome.
        let worse = first || residual.is_nan() && !self.worst_residual.is_nan() || residual > self.worst_residual;
        if worse || (self.witness.is_none() && failed) {
            self.worst_residual = residual;
            self.witness = Some(witness());
        }
        self.passed = self.failures == 0;
    }

    pub(crate) fn skip(&mut self) {
        self.trials += 1;
        self.skipped += 1;
    }

    pub(crate) fn report_only(mut self) -> Self {
        self.asserted = false;
        self
    }

    /// True unless an asserted check failed.
    pub fn ok(&self) -> bool {
        self.passed || !self.asserted
    }
}

pub(crate) fn fmt_vec(p: &[f64]) -> String {
    let items: Vec<_> = p.iter().map(|x| format!("{x:.14e}")).collect();
    format!("[{}]", items.join(","))
}
