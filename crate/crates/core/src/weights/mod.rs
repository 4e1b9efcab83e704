//! Arc and vertex weights: search path counts (SPC, SPLC, SPNP), node pair
//! projection counts (NPPC and the additive variant), path length
//! polynomials, and the normalization and logarithmic transforms.
//!
//! Counts can be computed with 64-bit floats, exact big integers, or in log
//! space. Float mode reports overflow instead of saturating.

mod closure;
mod count;
mod flow;
mod polynomial;
mod transform;

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigUint;

pub use closure::{closure_sizes, nppc, sum_weights, ClosureSizes, SumWeights};
pub use count::{big_ln, big_ratio, LogCount, PathCount, TIE_EPSILON};
pub use flow::{flow_counts, spc, splc, spnp, spnp_direct, FlowCounts};
pub use polynomial::{aged_path_counts, path_polynomials, path_totals, PathPolynomials};
pub use transform::{log_transform, normalize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumericMode {
    /// 64-bit floats.
    Float,
    /// Arbitrary-precision integers.
    Exact,
    /// Natural logarithms of the counts.
    Log,
}

impl NumericMode {
    pub fn name(self) -> &'static str {
        match self {
            NumericMode::Float => "float",
            NumericMode::Exact => "exact",
            NumericMode::Log => "log",
        }
    }
}

impl fmt::Display for NumericMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumericMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "float" => Ok(NumericMode::Float),
            "exact" | "exactinteger" => Ok(NumericMode::Exact),
            "log" | "logspace" => Ok(NumericMode::Log),
            _ => Err(Error::Argument(format!("unknown numeric mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Search path count.
    Spc,
    /// Search path link count: every vertex is also a path origin.
    Splc,
    /// Search path node pair: every connected pair of vertices.
    Spnp,
    /// Node pair projection count (product of closure sizes).
    Nppc,
    /// Sum of closure sizes.
    Sum,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Spc => "spc",
            Method::Splc => "splc",
            Method::Spnp => "spnp",
            Method::Nppc => "nppc",
            Method::Sum => "sum",
        }
    }

    /// Methods computed on the standard form and carrying a total flow.
    pub fn is_flow(self) -> bool {
        matches!(self, Method::Spc | Method::Splc | Method::Spnp)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "spc" => Ok(Method::Spc),
            "splc" => Ok(Method::Splc),
            "spnp" => Ok(Method::Spnp),
            "nppc" => Ok(Method::Nppc),
            "sum" => Ok(Method::Sum),
            _ => Err(Error::Argument(format!("unknown weight method {s:?}"))),
        }
    }
}

/// Storage for one vector of weights in a given numeric mode.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightValues {
    Float(Vec<f64>),
    Exact(Vec<BigUint>),
    Log(Vec<LogCount>),
}

/// A single weight.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightValue {
    Float(f64),
    Exact(BigUint),
    Log(f64),
}

impl WeightValue {
    pub fn linear(&self) -> f64 {
        match self {
            WeightValue::Float(x) => *x,
            WeightValue::Exact(x) => x.to_linear(),
            WeightValue::Log(x) => x.exp(),
        }
    }

    pub fn ln(&self) -> f64 {
        match self {
            WeightValue::Float(x) => x.ln(),
            WeightValue::Exact(x) => big_ln(x),
            WeightValue::Log(x) => *x,
        }
    }

    pub fn mode(&self) -> NumericMode {
        match self {
            WeightValue::Float(_) => NumericMode::Float,
            WeightValue::Exact(_) => NumericMode::Exact,
            WeightValue::Log(_) => NumericMode::Log,
        }
    }

    /// The value as a counter of type `C`, if the modes agree.
    pub fn as_count<C: PathCount>(&self) -> Option<C> {
        let values = match self {
            WeightValue::Float(x) => WeightValues::Float(vec![*x]),
            WeightValue::Exact(x) => WeightValues::Exact(vec![x.clone()]),
            WeightValue::Log(x) => WeightValues::Log(vec![LogCount(*x)]),
        };
        C::slice(&values).map(|v| v[0].clone())
    }

    pub(crate) fn from_count<C: PathCount>(c: C) -> WeightValue {
        WeightVector::from_counts(vec![c]).get(0)
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightValue::Float(x) | WeightValue::Log(x) => x.fmt(f),
            WeightValue::Exact(x) => x.fmt(f),
        }
    }
}

/// A vector of weights aligned 1:1 with the arcs (or vertices) of a network.
/// In log mode the stored values are natural logarithms.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    values: WeightValues,
}

/// Weights aligned with the arcs of a network.
pub type ArcWeights = WeightVector;

impl WeightVector {
    pub fn new(values: WeightValues) -> Self {
        WeightVector { values }
    }

    pub fn from_counts<C: PathCount>(values: Vec<C>) -> Self {
        WeightVector {
            values: C::into_values(values),
        }
    }

    pub fn from_f64(values: Vec<f64>) -> Self {
        WeightVector {
            values: WeightValues::Float(values),
        }
    }

    pub fn values(&self) -> &WeightValues {
        &self.values
    }

    pub fn mode(&self) -> NumericMode {
        match self.values {
            WeightValues::Float(_) => NumericMode::Float,
            WeightValues::Exact(_) => NumericMode::Exact,
            WeightValues::Log(_) => NumericMode::Log,
        }
    }

    pub fn len(&self) -> usize {
        match &self.values {
            WeightValues::Float(v) => v.len(),
            WeightValues::Exact(v) => v.len(),
            WeightValues::Log(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> WeightValue {
        match &self.values {
            WeightValues::Float(v) => WeightValue::Float(v[i]),
            WeightValues::Exact(v) => WeightValue::Exact(v[i].clone()),
            WeightValues::Log(v) => WeightValue::Log(v[i].0),
        }
    }

    /// Value `i` on the linear scale.
    pub fn linear(&self, i: usize) -> f64 {
        match &self.values {
            WeightValues::Float(v) => v[i],
            WeightValues::Exact(v) => v[i].to_linear(),
            WeightValues::Log(v) => v[i].0.exp(),
        }
    }

    /// Natural logarithm of value `i`.
    pub fn ln(&self, i: usize) -> f64 {
        match &self.values {
            WeightValues::Float(v) => v[i].ln(),
            WeightValues::Exact(v) => big_ln(&v[i]),
            WeightValues::Log(v) => v[i].0,
        }
    }

    /// The stored representation of value `i` as text (a logarithm in log
    /// mode, a decimal integer in exact mode).
    pub fn display(&self, i: usize) -> String {
        match &self.values {
            WeightValues::Float(v) => v[i].to_string(),
            WeightValues::Exact(v) => v[i].to_string(),
            WeightValues::Log(v) => v[i].0.to_string(),
        }
    }

    pub fn to_linear_vec(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.linear(i)).collect()
    }

    /// Stored values as floats: the values themselves, or their logarithms in
    /// log mode.
    pub fn to_stored_f64(&self) -> Vec<f64> {
        match &self.values {
            WeightValues::Log(v) => v.iter().map(|x| x.0).collect(),
            _ => self.to_linear_vec(),
        }
    }

    pub fn as_float(&self) -> Option<&[f64]> {
        f64::slice(&self.values)
    }

    pub fn as_exact(&self) -> Option<&[BigUint]> {
        BigUint::slice(&self.values)
    }

    pub fn as_log(&self) -> Option<&[LogCount]> {
        LogCount::slice(&self.values)
    }

    /// The contiguous sub-vector `range`.
    pub fn slice_range(&self, range: Range<usize>) -> WeightVector {
        let values = match &self.values {
            WeightValues::Float(v) => WeightValues::Float(v[range].to_vec()),
            WeightValues::Exact(v) => WeightValues::Exact(v[range].to_vec()),
            WeightValues::Log(v) => WeightValues::Log(v[range].to_vec()),
        };
        WeightVector { values }
    }

    /// The values at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> WeightVector {
        let values = match &self.values {
            WeightValues::Float(v) => WeightValues::Float(indices.iter().map(|&i| v[i]).collect()),
            WeightValues::Exact(v) => {
                WeightValues::Exact(indices.iter().map(|&i| v[i].clone()).collect())
            }
            WeightValues::Log(v) => WeightValues::Log(indices.iter().map(|&i| v[i]).collect()),
        };
        WeightVector { values }
    }

    /// Calls `visit` with the values as a typed slice.
    pub fn visit<V: WeightVisitor>(&self, visit: V) -> V::Output {
        match &self.values {
            WeightValues::Float(v) => visit.visit(v),
            WeightValues::Exact(v) => visit.visit(v),
            WeightValues::Log(v) => visit.visit(v),
        }
    }
}

/// Generic access to the typed values of a [`WeightVector`].
pub trait WeightVisitor {
    type Output;
    fn visit<C: PathCount>(self, values: &[C]) -> Self::Output;
}

/// Output of a weight computation.
///
/// For the flow methods (SPC, SPLC, SPNP) `arc` is aligned with the arcs of
/// the standard form (original arcs first, then the source, sink and
/// feedback arcs) and `vertex` with its `n + 2` vertices. For NPPC and the
/// sum variant both are aligned with the original network.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightResult {
    pub method: Method,
    pub arc: ArcWeights,
    pub vertex: WeightVector,
    /// Flow through the feedback arc, `N(t, s)`; flow methods only.
    pub total_flow: Option<WeightValue>,
    /// Number of original vertices and arcs (they lead both vectors).
    pub original_vertices: usize,
    pub original_arcs: usize,
    /// Aging factor of the path-length variant of SPNP.
    pub alpha: Option<f64>,
    pub normalized: bool,
    /// Arcs whose zero weight was replaced by a floor in the log transform.
    pub floored_arcs: Vec<usize>,
}

impl WeightResult {
    pub fn mode(&self) -> NumericMode {
        self.arc.mode()
    }

    /// Weights of the original arcs only.
    pub fn original_arc_weights(&self) -> ArcWeights {
        self.arc.slice_range(0..self.original_arcs)
    }

    /// Weights of the original vertices only.
    pub fn original_vertex_weights(&self) -> WeightVector {
        self.vertex.slice_range(0..self.original_vertices)
    }
}
