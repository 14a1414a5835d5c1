use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::sqfcore::{MonomialIdeal, PrimeDecomposition, SqfDegree, MAX_VARS};

/// A job file: named variables and an ideal given either by squarefree
/// generators or by the variable sets of its prime components.
///
/// ```json
/// {
///   "variables": ["a", "b", "c"],
///   "generators": [["a", "b"], ["b", "c"]],
///   "field": "GF(2)"
/// }
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

impl JobSpec {
    pub fn parse(json: &str) -> Result<Self> {
        let job: JobSpec = serde_json::from_str(json).map_err(|e| Error::InvalidInput(e.to_string()))?;
        job.validate()?;
        Ok(job)
    }

    fn validate(&self) -> Result<()> {
        if self.variables.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!("at most {MAX_VARS} variables are supported")));
        }
        let mut seen = HashMap::new();
        for (k, v) in self.variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if seen.insert(v.as_str(), k).is_some() {
                return Err(Error::InvalidInput(format!("variable {v:?} declared twice")));
            }
        }
        match (&self.generators, &self.primes) {
            (Some(_), None) | (None, Some(_)) => {}
            _ => return Err(Error::InvalidInput("give exactly one of \"generators\" and \"primes\"".into())),
        }
        self.field_spec()?;
        self.ideal().map(|_| ())
    }

    pub fn n(&self) -> usize {
        self.variables.len()
    }

    pub fn field_spec(&self) -> Result<Option<FieldSpec>> {
        self.field.as_deref().map(str::parse).transpose()
    }

    fn degree(&self, names: &[String]) -> Result<SqfDegree> {
        let vars = names
            .iter()
            .map(|name| {
                self.variables
                    .iter()
                    .position(|v| v == name)
                    .map(|k| k + 1)
                    .ok_or_else(|| Error::InvalidInput(format!("undeclared variable {name:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SqfDegree::from_vars(self.n(), vars)
    }

    /// The ideal described by the job. Repeated variables inside one
    /// monomial collapse, since only the squarefree part matters.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let n = self.n();
        if let Some(gens) = &self.generators {
            let g = gens.iter().map(|m| self.degree(m)).collect::<Result<Vec<_>>>()?;
            return MonomialIdeal::from_gens(n, &g);
        }
        let primes = self.primes.as_deref().unwrap_or_default();
        let components = primes.iter().map(|p| self.degree(p)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::from_primes(&PrimeDecomposition { n, components })
    }

    /// Renders a squarefree degree with the job's variable names.
    pub fn monomial(&self, deg: SqfDegree) -> String {
        if deg.is_empty() {
            return "1".into();
        }
        deg.iter().map(|v| self.variables[v - 1].as_str()).collect::<Vec<_>>().join("*")
    }

    /// Renders the prime generated by the variables in `deg`.
    pub fn prime(&self, deg: SqfDegree) -> String {
        let names: Vec<_> = deg.iter().map(|v| self.variables[v - 1].as_str()).collect();
        format!("({})", names.join(","))
    }
}
