//! Pass/fail summaries shared by the property checks and verification suites.

/// Outcome of one sampled property. `worst_margin ≥ 0` means the property held
/// on every sample; the worst sample is the one with the smallest margin, the
/// lowest index winning ties.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub samples: usize,
    pub worst_margin: f64,
    pub worst_index: Option<usize>,
    pub note: Option<String>,
}

impl PropertyCheck {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            samples: 0,
            worst_margin: f64::INFINITY,
            worst_index: None,
            note: None,
        }
    }

    /// Records the margin of sample `index`; a negative or NaN margin fails the property.
    pub fn record(&mut self, index: usize, margin: f64) {
        self.samples += 1;
        let margin = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
        let tie_lower = margin == self.worst_margin && self.worst_index.is_some_and(|w| index < w);
        if margin < self.worst_margin || tie_lower || self.worst_index.is_none() {
            self.worst_margin = margin;
            self.worst_index = Some(index);
        }
        if margin < 0.0 {
            self.passed = false;
        }
    }

    /// Records a boolean outcome as margin `+1` or `-1`.
    pub fn record_bool(&mut self, index: usize, ok: bool) {
        self.record(index, if ok { 1.0 } else { -1.0 });
    }

    pub fn fail(&mut self, index: usize, note: impl Into<String>) {
        self.record(index, f64::NEG_INFINITY);
        self.note.get_or_insert_with(|| note.into());
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A named group of property checks.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub checks: Vec<PropertyCheck>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, c: PropertyCheck) {
        self.checks.push(c);
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ties_keep_lowest_index() {
        let mut c = PropertyCheck::new("p");
        c.record(3, 0.5);
        c.record(1, 0.5);
        assert_eq!(c.worst_index, Some(1));
        c.record(7, -0.1);
        assert!(!c.passed);
        assert_eq!(c.worst_index, Some(7));
    }
}
