use std::fmt;

use serde::Serialize;

use crate::Elem;

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Stable identifier such as `"dimonoid.3"` or `"module.lact.rprod"`.
    pub axiom: String,
    /// Element indices of the witness, in the order the axiom quantifies them.
    pub witness: Vec<Elem>,
    pub message: String,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, witness: Vec<Elem>, message: impl Into<String>) -> Self {
        Violation {
            axiom: axiom.into(),
            witness,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.axiom, self.message)
    }
}

/// Outcome of an exhaustive check: `ok` exactly when there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport {
            ok: true,
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Violation) {
        self.ok = false;
        self.violations.push(v);
    }

    pub fn fail(
        &mut self,
        axiom: impl Into<String>,
        witness: Vec<Elem>,
        message: impl Into<String>,
    ) {
        self.push(Violation::new(axiom, witness, message));
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for v in other.violations {
            self.push(v);
        }
    }

    /// Prefix every axiom id, for reports assembled from several sub-checks.
    pub fn scoped(mut self, scope: &str) -> Self {
        for v in &mut self.violations {
            v.axiom = format!("{scope}.{}", v.axiom);
        }
        self
    }

    pub fn has(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn into_result<T>(self, value: T) -> Result<T, ValidationReport> {
        if self.ok {
            Ok(value)
        } else {
            Err(self)
        }
    }
}

impl From<Violation> for ValidationReport {
    fn from(v: Violation) -> Self {
        let mut r = ValidationReport::new();
        r.push(v);
        r
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
