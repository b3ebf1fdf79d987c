//! JSON model descriptors.

use jordan_gpt_core::eja::Algebra;
use jordan_gpt_core::model::{build_model, Model, ModelDescriptor};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Descriptor {
    pub schema_version: u32,
    #[serde(flatten)]
    pub backend: BackendSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "snake_case")]
pub enum BackendSpec {
    Classical {
        outcomes: Vec<String>,
    },
    /// `kind` is one of `real`, `complex`, `quaternion`, `spin`; `size` is
    /// the matrix order, or `d` for the spin factor `R ⊕ R^d`.
    Jordan {
        kind: String,
        size: usize,
    },
    /// Tests list outcome names; each vertex gives one weight per outcome.
    Polytopic {
        outcomes: Vec<String>,
        tests: Vec<Vec<String>>,
        vertices: Vec<Vec<f64>>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum DescriptorError {
    #[error("malformed descriptor at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Version(u32),
    #[error("invalid model: {0}")]
    Model(#[from] jordan_gpt_core::Error),
}

impl From<serde_json::Error> for DescriptorError {
    fn from(e: serde_json::Error) -> Self {
        DescriptorError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

impl Descriptor {
    pub fn jordan(kind: &str, size: usize) -> Self {
        Descriptor {
            schema_version: SCHEMA_VERSION,
            backend: BackendSpec::Jordan {
                kind: kind.into(),
                size,
            },
        }
    }

    /// Parses and validates: a descriptor is accepted only if the model it
    /// describes can be built.
    pub fn from_json(text: &str) -> Result<Self, DescriptorError> {
        let d: Descriptor = serde_json::from_str(text)?;
        if d.schema_version != SCHEMA_VERSION {
            return Err(DescriptorError::Version(d.schema_version));
        }
        d.build()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("descriptor serializes");
        s.push('\n');
        s
    }

    pub fn core_descriptor(&self) -> Result<ModelDescriptor, jordan_gpt_core::Error> {
        Ok(match &self.backend {
            BackendSpec::Classical { outcomes } => ModelDescriptor::Classical {
                outcomes: outcomes.clone(),
            },
            BackendSpec::Jordan { kind, size } => ModelDescriptor::Jordan {
                kind: Algebra::from_name(kind, *size)?.kind().clone(),
            },
            BackendSpec::Polytopic {
                outcomes,
                tests,
                vertices,
            } => ModelDescriptor::Polytopic {
                outcomes: outcomes.clone(),
                tests: tests.clone(),
                vertices: vertices.clone(),
            },
        })
    }

    pub fn build(&self) -> Result<Model, jordan_gpt_core::Error> {
        build_model(&self.core_descriptor()?)
    }
}
