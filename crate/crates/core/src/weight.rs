use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

pub type Weight = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Weight {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Weight {
    BigRational::from_integer(BigInt::from(value))
}

/// Nonnegative exact vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFn {
    weights: Vec<Weight>,
}

impl WeightFn {
    pub fn unit(n: usize) -> Self {
        WeightFn {
            weights: vec![Weight::one(); n],
        }
    }

    pub fn new(weights: Vec<Weight>) -> Result<Self, GraphError> {
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(GraphError::NegativeWeight(v));
        }
        Ok(WeightFn { weights })
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Result<Self, GraphError> {
        WeightFn::new(values.into_iter().map(int).collect())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn as_slice(&self) -> &[Weight] {
        &self.weights
    }

    pub fn is_unit(&self) -> bool {
        self.weights.iter().all(|w| w.is_one())
    }

    /// w(S)
    pub fn total(&self, set: &VertexSet) -> Weight {
        set.iter()
            .fold(Weight::zero(), |acc, v| acc + &self.weights[v])
    }

    pub fn sum(&self) -> Weight {
        self.weights.iter().fold(Weight::zero(), |acc, w| acc + w)
    }

    /// Weights of a subgraph whose vertex `i` is `map[i]` here.
    pub fn restrict(&self, map: &[usize]) -> WeightFn {
        WeightFn {
            weights: map.iter().map(|&v| self.weights[v].clone()).collect(),
        }
    }
}
