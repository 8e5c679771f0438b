use std::fmt;

use crate::error::{Error, Result};

/// Ordered qubit labels of a multi-qubit state, most significant first.
///
/// Basis index `b` of an `n`-qubit state has the qubit at position `p`
/// in bit `n - 1 - p`; `|01⟩` over `[A, B]` is index 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QubitLabeling {
    order: Vec<char>,
}

impl QubitLabeling {
    pub fn new(order: &[char]) -> Result<Self> {
        if order.is_empty() {
            return Err(Error::InvalidConfig("empty qubit labeling".into()));
        }
        for (i, a) in order.iter().enumerate() {
            if order[..i].contains(a) {
                return Err(Error::InvalidConfig(format!("duplicate qubit label '{a}'")));
            }
        }
        Ok(Self { order: order.to_vec() })
    }

    /// `A, B, C, ...` for `n` qubits.
    pub fn sequential(n: usize) -> Self {
        Self { order: (0..n).map(|i| (b'A' + i as u8) as char).collect() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn labels(&self) -> &[char] {
        &self.order
    }

    pub fn position(&self, label: char) -> Result<usize> {
        self.order.iter().position(|&l| l == label).ok_or(Error::UnknownLabel(label))
    }

    /// For each position in `self`, the position of the same label in
    /// `other`. Fails unless the two are permutations of each other.
    pub fn permutation_to(&self, other: &QubitLabeling) -> Result<Vec<usize>> {
        let mismatch =
            || Error::LabelMismatch { from: self.order.clone(), to: other.order.clone() };
        if self.len() != other.len() {
            return Err(mismatch());
        }
        self.order
            .iter()
            .map(|&l| other.order.iter().position(|&m| m == l).ok_or_else(mismatch))
            .collect()
    }
}

impl fmt::Debug for QubitLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.order.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for QubitLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.order.iter().collect::<String>())
    }
}
