use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::sparse::Vector;
use crate::error::{Error, Result};

/// A `Z/2`-graded vector space with a named, ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(String, u8)>", into = "Vec<(String, u8)>")]
pub struct SuperSpace {
    names: Vec<String>,
    parities: Vec<u8>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl SuperSpace {
    pub fn new<S: Into<String>>(basis: Vec<(S, u8)>) -> Result<SuperSpace> {
        let mut names = Vec::with_capacity(basis.len());
        let mut parities = Vec::with_capacity(basis.len());
        let mut index = HashMap::new();
        for (i, (name, parity)) in basis.into_iter().enumerate() {
            let name = name.into();
            if parity > 1 {
                return Err(Error::InvalidStructure(format!(
                    "parity of {name:?} must be 0 or 1"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidStructure(format!(
                    "basis symbol {name:?} declared twice"
                )));
            }
            names.push(name);
            parities.push(parity);
        }
        Ok(SuperSpace {
            names,
            parities,
            index,
        })
    }

    pub fn even<S: Into<String>>(names: Vec<S>) -> Result<SuperSpace> {
        SuperSpace::new(names.into_iter().map(|n| (n, 0)).collect())
    }

    pub fn odd<S: Into<String>>(names: Vec<S>) -> Result<SuperSpace> {
        SuperSpace::new(names.into_iter().map(|n| (n, 1)).collect())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parities[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn is_purely_even(&self) -> bool {
        self.parities.iter().all(|&p| p == 0)
    }

    pub fn is_purely_odd(&self) -> bool {
        self.parities.iter().all(|&p| p == 1)
    }

    /// The common parity of the support, or `None` for mixed vectors.
    /// The zero vector counts as even.
    pub fn homogeneous_parity(&self, v: &Vector) -> Option<u8> {
        let mut it = v.keys().map(|&i| self.parities[i]);
        match it.next() {
            None => Some(0),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    /// Basis of `V (x) W`, indexed `i * dim W + j`.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                basis.push((
                    format!("{}⊗{}", self.names[i], other.names[j]),
                    (self.parities[i] + other.parities[j]) % 2,
                ));
            }
        }
        SuperSpace::new(basis).expect("tensor basis names are distinct")
    }

    /// The dual space with dual basis named `name*`.
    pub fn dual(&self) -> SuperSpace {
        SuperSpace::new(
            self.names
                .iter()
                .zip(&self.parities)
                .map(|(n, &p)| (format!("{n}*"), p))
                .collect(),
        )
        .expect("dual basis names are distinct")
    }

    /// The same basis with every name passed through `f`.
    pub fn renamed<F: Fn(&str) -> String>(&self, f: F) -> Result<SuperSpace> {
        SuperSpace::new(
            self.names
                .iter()
                .zip(&self.parities)
                .map(|(n, &p)| (f(n), p))
                .collect(),
        )
    }
}

impl TryFrom<Vec<(String, u8)>> for SuperSpace {
    type Error = Error;
    fn try_from(v: Vec<(String, u8)>) -> Result<SuperSpace> {
        SuperSpace::new(v)
    }
}

impl From<SuperSpace> for Vec<(String, u8)> {
    fn from(s: SuperSpace) -> Self {
        s.names.into_iter().zip(s.parities).collect()
    }
}
