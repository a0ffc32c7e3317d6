use std::fmt;

use serde::Serialize;

/// One failed condition together with the elements or points that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub witness: Vec<String>,
}

/// Outcome of checking a structure against its defining conditions.
///
/// `ok()` holds exactly when no violation was recorded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn push<S: Into<String>>(&mut self, condition: &str, witness: impl IntoIterator<Item = S>) {
        self.violations.push(Violation {
            condition: condition.to_string(),
            witness: witness.into_iter().map(Into::into).collect(),
        });
    }

    /// Records a violation unless one for `condition` is already present.
    pub fn push_once<S: Into<String>>(&mut self, condition: &str, witness: impl IntoIterator<Item = S>) {
        if !self.has(condition) {
            self.push(condition, witness);
        }
    }

    pub fn has(&self, condition: &str) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ValidationReport", 2)?;
        s.serialize_field("ok", &self.ok())?;
        s.serialize_field("violations", &self.violations)?;
        s.end()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "violated {}: ({})", v.condition, v.witness.join(", "))?;
        }
        Ok(())
    }
}
