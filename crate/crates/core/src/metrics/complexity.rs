//! State complexity: the minimal Bures distance from a state to the
//! diagonal states sharing its spectrum.

use super::fidelity::{bures_from_fidelity, fidelity_from_roots};
use crate::error::{Error, Result};
use crate::linalg::{psd_sqrt, ComplexMatrix};
use crate::scalar::Real;
use crate::state::DensityMatrix;

/// Largest dimension accepted by the permutation search (8! candidates).
pub const MAX_COMPLEXITY_DIM: usize = 8;

/// Eigenvalues of a density matrix, descending, clamped to `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T: Real> {
    values: Vec<T>,
}

impl<T: Real> Spectrum<T> {
    pub fn new(mut values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DomainError("empty spectrum".into()));
        }
        let lo = -T::STRUCTURAL;
        let hi = T::one() + T::STRUCTURAL;
        if let Some(bad) = values.iter().find(|v| !(**v >= lo && **v <= hi)) {
            return Err(Error::DomainError(format!("eigenvalue {bad} outside [0, 1]")));
        }
        let sum: T = values.iter().copied().sum();
        if !((sum - T::one()).abs() <= T::DERIVED) {
            return Err(Error::DomainError(format!("spectrum sums to {sum}")));
        }
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        for v in &mut values {
            *v = v.max(T::zero()).min(T::one());
        }
        let sum: T = values.iter().copied().sum();
        for v in &mut values {
            *v /= sum;
        }
        Ok(Self { values })
    }

    pub fn of(rho: &DensityMatrix<T>) -> Result<Self> {
        Self::new(rho.eigenvalues()?)
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Group id per value; neighbours within `STRUCTURAL` share a group.
    fn groups(&self) -> Vec<usize> {
        let mut ids = Vec::with_capacity(self.values.len());
        let mut id = 0;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 && (self.values[i - 1] - *v) > T::STRUCTURAL {
                id += 1;
            }
            ids.push(id);
        }
        ids
    }
}

/// A zero-complexity candidate: `diag(λ_{perm[0]}, ..., λ_{perm[d-1]})`
/// with indices into the descending spectrum.
#[derive(Debug, Clone)]
pub struct ZeroComplexityState<T: Real> {
    pub permutation: Vec<usize>,
    pub state: DensityMatrix<T>,
}

/// Outcome of the permutation search.
#[derive(Debug, Clone)]
pub struct ComplexityResult<T: Real> {
    pub complexity: T,
    pub argmin_permutation: Vec<usize>,
    /// Distance to every candidate, in enumeration order.
    pub distances: Vec<T>,
}

/// In-place lexicographic successor; false once the last arrangement is
/// reached. Handles repeated elements, so only distinct arrangements are
/// visited.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct diagonal states carrying `spectrum`, in lexicographic
/// order of their group arrangement (descending order first).
pub fn zero_complexity_states<T: Real>(spectrum: &Spectrum<T>) -> Result<Vec<ZeroComplexityState<T>>> {
    let dim = spectrum.len();
    if dim > MAX_COMPLEXITY_DIM {
        return Err(Error::UnsupportedDim(dim));
    }
    let groups = spectrum.groups();
    let n_groups = groups.last().map_or(0, |g| g + 1);
    // Members of each group share their mean so merged values are exact.
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n_groups];
    for (i, &g) in groups.iter().enumerate() {
        members[g].push(i);
    }
    let means: Vec<T> = members
        .iter()
        .map(|m| m.iter().map(|&i| spectrum.values[i]).sum::<T>() / T::lit(m.len() as f64))
        .collect();

    let mut arrangement = groups.clone();
    let mut out = Vec::new();
    loop {
        let mut cursor = vec![0usize; n_groups];
        let permutation: Vec<usize> = arrangement
            .iter()
            .map(|&g| {
                let idx = members[g][cursor[g]];
                cursor[g] += 1;
                idx
            })
            .collect();
        let diag: Vec<T> = arrangement.iter().map(|&g| means[g]).collect();
        let state = DensityMatrix::new(ComplexMatrix::from_real_diagonal(&diag))?;
        out.push(ZeroComplexityState { permutation, state });
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    Ok(out)
}

/// The diagonal states carrying `spectrum`, without bookkeeping.
pub fn zero_complexity_set<T: Real>(spectrum: &Spectrum<T>) -> Result<Vec<DensityMatrix<T>>> {
    Ok(zero_complexity_states(spectrum)?.into_iter().map(|z| z.state).collect())
}

/// Minimal Bures distance from `rho` to its zero-complexity set. Ties go
/// to the first candidate in enumeration order.
pub fn state_complexity<T: Real>(rho: &DensityMatrix<T>) -> Result<ComplexityResult<T>> {
    if rho.dim() > MAX_COMPLEXITY_DIM {
        return Err(Error::UnsupportedDim(rho.dim()));
    }
    let candidates = zero_complexity_states(&Spectrum::of(rho)?)?;
    let root = psd_sqrt(rho.matrix())?;
    let mut distances = Vec::with_capacity(candidates.len());
    let mut best = 0;
    for (k, cand) in candidates.iter().enumerate() {
        let diag: Vec<T> = cand.state.matrix().diagonal().iter().map(|z| z.re.max(T::zero()).sqrt()).collect();
        let f = fidelity_from_roots(&root, &ComplexMatrix::from_real_diagonal(&diag))?;
        let d = bures_from_fidelity(rho.matrix().trace() + cand.state.matrix().trace(), f);
        if k > 0 && d < distances[best] {
            best = k;
        }
        distances.push(d);
    }
    Ok(ComplexityResult {
        complexity: distances[best],
        argmin_permutation: candidates[best].permutation.clone(),
        distances,
    })
}

/// Shorthand for `state_complexity(rho)?.complexity`.
pub fn complexity<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    Ok(state_complexity(rho)?.complexity)
}
