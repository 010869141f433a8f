use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Strictly increasing transforms applied to metric values before testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Transform {
    Identity,
    /// `sign(x) * ln(1 + |x|)`, defined for signed and zero values.
    #[default]
    SignedLog1p,
}

impl Transform {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Transform::Identity => x,
            Transform::SignedLog1p => x.signum() * x.abs().ln_1p(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Transform::Identity => "identity",
            Transform::SignedLog1p => "signed-log1p",
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(Transform::Identity),
            "signed-log1p" | "signed_log1p" | "log" => Ok(Transform::SignedLog1p),
            other => Err(Error::InvalidArgument(format!("unknown transform {other:?}"))),
        }
    }
}

pub fn apply_transform(values: &[f64], t: Transform) -> Vec<f64> {
    values.iter().map(|&x| t.apply(x)).collect()
}
