//! Job configuration shared by the command-line front end and the
//! verification suites.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mseg::Window;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub enum Mode {
    #[default]
    #[serde(rename = "typeA")]
    TypeA,
    #[serde(rename = "theta")]
    Theta,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "typeA" | "typea" | "type-a" | "A" => Ok(Mode::TypeA),
            "theta" => Ok(Mode::Theta),
            other => Err(Error::Config(format!("unknown mode '{other}' (expected typeA or theta)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::TypeA => "typeA",
            Mode::Theta => "theta",
        })
    }
}

impl From<Mode> for crate::canonical::BasisKind {
    fn from(m: Mode) -> Self {
        match m {
            Mode::TypeA => crate::canonical::BasisKind::TypeA,
            Mode::Theta => crate::canonical::BasisKind::Theta,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JobConfig {
    pub window: Window,
    pub max_degree: u32,
    pub mode: Mode,
}

impl Default for JobConfig {
    fn default() -> Self {
        Self { window: Window::symmetric(3).unwrap(), max_degree: 4, mode: Mode::TypeA }
    }
}

impl JobConfig {
    pub fn new(window: Window, max_degree: u32, mode: Mode) -> Result<Self> {
        let c = Self { window, max_degree, mode };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.mode == Mode::Theta && !self.window.is_symmetric() {
            return Err(Error::Config(format!("theta mode needs a symmetric window, got {}", self.window)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = JobConfig::default();
        assert_eq!(c.window.to_string(), "{-3,-1,1,3}");
        assert_eq!(c.max_degree, 4);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn theta_needs_symmetry() {
        let w: Window = "1,3".parse().unwrap();
        assert!(JobConfig::new(w.clone(), 2, Mode::Theta).is_err());
        assert!(JobConfig::new(w, 2, Mode::TypeA).is_ok());
        assert_eq!("theta".parse::<Mode>().unwrap(), Mode::Theta);
        assert!("B".parse::<Mode>().is_err());
    }
}
