//! Symmetric-matrix primitives: principal submatrices, rectangular minors,
//! numeric rank, positive definiteness, Gram products, and the exhaustive
//! search for non-singular off-diagonal minors.
//!
//! Symmetry is structural: [`SymMatrix`] stores one triangle, so `s(i, j) ==
//! s(j, i)` holds identically rather than up to rounding. Dense linear
//! algebra (determinants, SVD, eigenvalues) is delegated to nalgebra; the
//! matrices here are tiny (p rarely exceeds 10).

use itertools::Itertools;
use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Numeric policy shared by all deciders.
///
/// The membership sets are defined in exact arithmetic ("entry is zero",
/// "rank equals m"); these thresholds translate those statements to floating
/// point. Inputs with entries near `tau_zero` or singular-value gaps near
/// `tau_rank` are genuinely ambiguous under this translation and may come
/// back `Indeterminate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute threshold below which an entry counts as zero.
    pub tau_zero: f64,
    /// Relative singular-value cutoff for numeric rank.
    pub tau_rank: f64,
    /// Residual threshold for accepting a numerical decomposition.
    pub tau_fit: f64,
    /// Residual threshold above which non-membership is reported.
    pub tau_reject: f64,
    /// Strict positivity margin required of uniquenesses and eigenvalues.
    pub eps_pd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tau_zero: 1e-8,
            tau_rank: 1e-9,
            tau_fit: 1e-7,
            tau_reject: 1e-3,
            eps_pd: 1e-8,
        }
    }
}

impl Tolerances {
    /// Validates positivity and the `tau_fit < tau_reject` ordering.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("tau_zero", self.tau_zero),
            ("tau_rank", self.tau_rank),
            ("tau_fit", self.tau_fit),
            ("tau_reject", self.tau_reject),
            ("eps_pd", self.eps_pd),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidTolerances(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        if self.tau_fit >= self.tau_reject {
            return Err(Error::InvalidTolerances(format!(
                "tau_fit ({}) must be below tau_reject ({})",
                self.tau_fit, self.tau_reject
            )));
        }
        Ok(())
    }

    /// Agreement tolerance for loading rows shared by two representations.
    pub(crate) fn overlap(&self) -> f64 {
        10.0 * self.tau_fit
    }

    /// Tolerance for the internal consistency check of a forced diagonal.
    pub(crate) fn forcing_check(&self) -> f64 {
        1e3 * self.tau_fit
    }
}

/// Sorted, duplicate-free subset of row/column indices (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Builds an index set, sorting the input. Duplicates are an error.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex);
        }
        Ok(IndexSet(indices))
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(vec![i])
    }

    /// The full set `{0, …, p-1}`.
    pub fn full(p: usize) -> Self {
        IndexSet((0..p).collect())
    }

    /// Complement within `{0, …, p-1}`.
    pub fn complement(&self, p: usize) -> Self {
        IndexSet((0..p).filter(|i| !self.contains(*i)).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Errors unless every index lies in `{0, …, p-1}`.
    pub fn check_range(&self, p: usize) -> Result<()> {
        match self.0.last() {
            Some(&max) if max >= p => Err(Error::IndexOutOfRange { index: max, dim: p }),
            _ => Ok(()),
        }
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|i| !other.contains(*i))
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// All size-`k` subsets of `{0, …, p-1}` in lexicographic order.
pub(crate) fn k_subsets(p: usize, k: usize) -> Vec<IndexSet> {
    (0..p).combinations(k).map(IndexSet).collect()
}

/// Symmetric real matrix stored as a single (lower) triangle, so symmetry
/// holds identically. Indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    p: usize,
    // Row-major lower triangle: entry (i, j) with i >= j at i*(i+1)/2 + j.
    tri: Vec<f64>,
}

impl SymMatrix {
    fn tri_index(i: usize, j: usize) -> usize {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        a * (a + 1) / 2 + b
    }

    /// Zero matrix of dimension `p` (p >= 1).
    pub fn zeros(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::DimensionTooSmall { dim: 0, needed: 1 });
        }
        Ok(SymMatrix {
            p,
            tri: vec![0.0; p * (p + 1) / 2],
        })
    }

    pub fn identity(p: usize) -> Result<Self> {
        let mut m = SymMatrix::zeros(p)?;
        for i in 0..p {
            m.set(i, i, 1.0);
        }
        Ok(m)
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = SymMatrix::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m.check_finite()?;
        Ok(m)
    }

    /// Builds from `f(i, j)` evaluated on the lower triangle (`i >= j`).
    pub fn from_fn(p: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut m = SymMatrix::zeros(p)?;
        for i in 0..p {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m.check_finite()?;
        Ok(m)
    }

    /// Ingests dense rows. Asymmetry beyond 1e-12 is rejected; anything
    /// below is removed exactly by averaging mirrored entries.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let p = rows.len();
        if p == 0 {
            return Err(Error::DimensionTooSmall { dim: 0, needed: 1 });
        }
        for row in rows {
            if row.len() != p {
                return Err(Error::NotSquare {
                    rows: p,
                    cols: row.len(),
                });
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        let mut max_asym = 0.0_f64;
        for i in 0..p {
            for j in 0..i {
                max_asym = max_asym.max((rows[i][j] - rows[j][i]).abs());
            }
        }
        if max_asym > 1e-12 {
            return Err(Error::Asymmetric {
                max_asymmetry: max_asym,
            });
        }
        SymMatrix::from_fn(p, |i, j| {
            if i == j {
                rows[i][i]
            } else {
                0.5 * (rows[i][j] + rows[j][i])
            }
        })
    }

    fn check_finite(&self) -> Result<()> {
        if self.tri.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.p && j < self.p);
        self.tri[Self::tri_index(i, j)]
    }

    /// Sets both mirrored entries at once.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.p && j < self.p);
        self.tri[Self::tri_index(i, j)] = v;
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.p).map(|i| self.get(i, i)).collect()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.p, self.p, |i, j| self.get(i, j))
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.p)
            .map(|i| (0..self.p).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Max-norm of the entrywise difference.
    pub fn max_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.p, other.p);
        self.tri
            .iter()
            .zip(&other.tri)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Applies the relabeling `perm`: entry (i, j) of the result is
    /// `self(perm[i], perm[j])`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.p {
            return Err(Error::NotSquare {
                rows: self.p,
                cols: perm.len(),
            });
        }
        for &q in perm {
            if q >= self.p {
                return Err(Error::IndexOutOfRange {
                    index: q,
                    dim: self.p,
                });
            }
        }
        SymMatrix::from_fn(self.p, |i, j| self.get(perm[i], perm[j]))
    }

    /// Principal submatrix `(s(i, j))` for `i, j` in `a`, in the order of `a`.
    pub fn principal_submatrix(&self, a: &IndexSet) -> Result<SymMatrix> {
        if a.is_empty() {
            return Err(Error::DimensionTooSmall { dim: 0, needed: 1 });
        }
        a.check_range(self.p)?;
        let idx = a.as_slice();
        SymMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Principal submatrix dropping one index.
    pub fn drop_index(&self, i: usize) -> Result<SymMatrix> {
        self.principal_submatrix(&IndexSet::singleton(i).complement(self.p))
    }

    /// Rectangular selection `(s(i, j))` for `i` in `a`, `j` in `b`.
    pub fn selection(&self, a: &IndexSet, b: &IndexSet) -> Result<DMatrix<f64>> {
        a.check_range(self.p)?;
        b.check_range(self.p)?;
        let ra = a.as_slice();
        let cb = b.as_slice();
        Ok(DMatrix::from_fn(ra.len(), cb.len(), |i, j| {
            self.get(ra[i], cb[j])
        }))
    }

    /// Determinant of the rectangular selection `(s(i, j))`, `i` in `a`,
    /// `j` in `b`. Requires `|a| = |b| >= 1`.
    pub fn minor(&self, a: &IndexSet, b: &IndexSet) -> Result<f64> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::SelectionSizeMismatch {
                rows: a.len(),
                cols: b.len(),
            });
        }
        Ok(self.selection(a, b)?.determinant())
    }

    /// Count of singular values above `tau_rank` times the largest one.
    pub fn numeric_rank(&self, tol: &Tolerances) -> usize {
        numeric_rank_dense(&self.to_dense(), tol)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .to_dense()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// True iff the minimum eigenvalue exceeds `eps_pd`.
    pub fn is_positive_definite(&self, tol: &Tolerances) -> bool {
        self.min_eigenvalue() > tol.eps_pd
    }

    /// Largest absolute off-diagonal entry, with the lexicographically first
    /// attaining pair. Returns `None` for `p = 1`.
    pub fn max_offdiag(&self) -> Option<(usize, usize, f64)> {
        let mut best: Option<(usize, usize, f64)> = None;
        for i in 0..self.p {
            for j in (i + 1)..self.p {
                let v = self.get(i, j).abs();
                if best.map_or(true, |(_, _, b)| v > b) {
                    best = Some((i, j, v));
                }
            }
        }
        best
    }
}

/// Rank of a dense matrix by singular values, relative cutoff.
pub(crate) fn numeric_rank_dense(m: &DMatrix<f64>, tol: &Tolerances) -> usize {
    let sv = m.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0_f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol.tau_rank * max).count()
}

/// Real `p x m` loading matrix, row-major. `m` may be zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadingMatrix {
    p: usize,
    m: usize,
    entries: Vec<f64>,
}

impl LoadingMatrix {
    pub fn zeros(p: usize, m: usize) -> Self {
        LoadingMatrix {
            p,
            m,
            entries: vec![0.0; p * m],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>], m: usize) -> Result<Self> {
        let p = rows.len();
        let mut l = LoadingMatrix::zeros(p, m);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::SelectionSizeMismatch {
                    rows: m,
                    cols: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite);
                }
                l.set(i, j, v);
            }
        }
        Ok(l)
    }

    /// Single-column loading from a vector.
    pub fn column(v: &[f64]) -> Self {
        LoadingMatrix {
            p: v.len(),
            m: 1,
            entries: v.to_vec(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.p && j < self.m);
        self.entries[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.p && j < self.m);
        self.entries[i * self.m + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.m..(i + 1) * self.m]
    }

    pub fn rows_vec(&self) -> Vec<Vec<f64>> {
        (0..self.p).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_norm_sq(&self, i: usize) -> f64 {
        self.row(i).iter().map(|v| v * v).sum()
    }

    pub fn dot_rows(&self, i: usize, j: usize) -> f64 {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.p, self.m, |i, j| self.get(i, j))
    }

    pub fn from_dense(d: &DMatrix<f64>) -> Self {
        let mut l = LoadingMatrix::zeros(d.nrows(), d.ncols());
        for i in 0..d.nrows() {
            for j in 0..d.ncols() {
                l.set(i, j, d[(i, j)]);
            }
        }
        l
    }

    /// Rows restricted to `a`, in order.
    pub fn restrict_rows(&self, a: &IndexSet) -> Result<LoadingMatrix> {
        a.check_range(self.p)?;
        let mut l = LoadingMatrix::zeros(a.len(), self.m);
        for (k, i) in a.iter().enumerate() {
            for j in 0..self.m {
                l.set(k, j, self.get(i, j));
            }
        }
        Ok(l)
    }

    /// Appends zero columns on the right until there are `m` columns.
    pub fn pad_columns(&self, m: usize) -> LoadingMatrix {
        assert!(m >= self.m);
        let mut l = LoadingMatrix::zeros(self.p, m);
        for i in 0..self.p {
            for j in 0..self.m {
                l.set(i, j, self.get(i, j));
            }
        }
        l
    }

    pub fn max_diff(&self, other: &LoadingMatrix) -> f64 {
        assert_eq!((self.p, self.m), (other.p, other.m));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn numeric_rank(&self, tol: &Tolerances) -> usize {
        if self.p == 0 || self.m == 0 {
            return 0;
        }
        numeric_rank_dense(&self.to_dense(), tol)
    }

    /// Gram product `Gamma * Gamma^t` as a symmetric matrix.
    pub fn gram(&self) -> SymMatrix {
        SymMatrix::from_fn(self.p, |i, j| self.dot_rows(i, j))
            .expect("finite loadings have a finite Gram")
    }
}

/// Searches for disjoint `A, B` in `{0, …, p-1} \ {i}` with `|A| = |B| = m`
/// and `|det(psi[A, B])| > tau_zero`. Returns the lexicographically smallest
/// such pair (`A` major, `B` minor), or `None` when every pair is singular.
///
/// Requires `p >= 2m + 1` and `m >= 1`; the search is exhaustive (the sizes
/// here keep the combinatorics tiny).
pub fn find_nonsingular_offdiag_minor(
    psi: &SymMatrix,
    i: usize,
    m: usize,
    tol: &Tolerances,
) -> Result<Option<(IndexSet, IndexSet)>> {
    let p = psi.dim();
    if i >= p {
        return Err(Error::IndexOutOfRange { index: i, dim: p });
    }
    if m == 0 {
        return Err(Error::UnsupportedFactorCount { m, expected: ">= 1" });
    }
    if p < 2 * m + 1 {
        return Err(Error::DimensionTooSmall {
            dim: p,
            needed: 2 * m + 1,
        });
    }
    let avail: Vec<usize> = (0..p).filter(|&k| k != i).collect();
    for a in avail.iter().copied().combinations(m) {
        let rest: Vec<usize> = avail
            .iter()
            .copied()
            .filter(|k| !a.contains(k))
            .collect();
        for b in rest.iter().copied().combinations(m) {
            let a_set = IndexSet(a.clone());
            let b_set = IndexSet(b);
            let det = psi.minor(&a_set, &b_set)?;
            if det.abs() > tol.tau_zero {
                return Ok(Some((a_set, b_set)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn tolerances_validate() {
        assert!(tol().validate().is_ok());
        let bad = Tolerances {
            tau_fit: 1.0,
            tau_reject: 0.5,
            ..tol()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidTolerances(_))));
        let neg = Tolerances {
            tau_zero: -1.0,
            ..tol()
        };
        assert!(neg.validate().is_err());
    }

    #[test]
    fn index_set_rejects_duplicates() {
        assert!(IndexSet::new(vec![0, 1, 1]).is_err());
        let s = IndexSet::new(vec![3, 0, 2]).unwrap();
        assert_eq!(s.as_slice(), &[0, 2, 3]);
        assert!(s.check_range(4).is_ok());
        assert!(matches!(
            s.check_range(3),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        ));
        assert_eq!(s.complement(5).as_slice(), &[1, 4]);
    }

    #[test]
    fn symmetry_is_structural() {
        let mut m = SymMatrix::zeros(3).unwrap();
        m.set(0, 2, 5.0);
        assert_eq!(m.get(2, 0), 5.0);
        m.set(2, 0, -1.0);
        assert_eq!(m.get(0, 2), -1.0);
    }

    #[test]
    fn from_rows_symmetrizes_and_rejects() {
        let ok = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(ok.get(0, 1), 2.0);
        let err = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.1, 4.0]]);
        assert!(matches!(err, Err(Error::Asymmetric { .. })));
        let nan = SymMatrix::from_rows(&[vec![f64::NAN, 0.0], vec![0.0, 1.0]]);
        assert!(matches!(nan, Err(Error::NonFinite)));
    }

    #[test]
    fn principal_submatrix_diagonal_selection() {
        let s = SymMatrix::diagonal(&[1.0, 2.0, 3.0]).unwrap();
        let a = IndexSet::new(vec![0, 2]).unwrap();
        let sub = s.principal_submatrix(&a).unwrap();
        assert_eq!(sub.rows(), vec![vec![1.0, 0.0], vec![0.0, 3.0]]);
    }

    #[test]
    fn principal_submatrix_identity_case() {
        let s = SymMatrix::from_fn(6, |i, j| (i * 7 + j) as f64 / 3.0).unwrap();
        let full = s.principal_submatrix(&IndexSet::full(6)).unwrap();
        assert_eq!(full, s);
        let oob = IndexSet::new(vec![0, 6]).unwrap();
        assert!(s.principal_submatrix(&oob).is_err());
    }

    #[test]
    fn minor_identity_singleton() {
        let s = SymMatrix::identity(4).unwrap();
        let a = IndexSet::singleton(1);
        assert_abs_diff_eq!(s.minor(&a, &a).unwrap(), 1.0);
        let b = IndexSet::new(vec![0, 1]).unwrap();
        assert!(matches!(
            s.minor(&a, &b),
            Err(Error::SelectionSizeMismatch { .. })
        ));
    }

    #[test]
    fn numeric_rank_basics() {
        let t = tol();
        assert_eq!(SymMatrix::identity(3).unwrap().numeric_rank(&t), 3);
        assert_eq!(SymMatrix::zeros(4).unwrap().numeric_rank(&t), 0);
        let gamma = LoadingMatrix::column(&[1.0, 2.0, 3.0]);
        assert_eq!(gamma.gram().numeric_rank(&t), 1);
        assert_eq!(gamma.numeric_rank(&t), 1);
    }

    #[test]
    fn positive_definiteness() {
        let t = tol();
        assert!(SymMatrix::diagonal(&[1.0, 1.0])
            .unwrap()
            .is_positive_definite(&t));
        let s = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(!s.is_positive_definite(&t));
        assert_abs_diff_eq!(s.min_eigenvalue(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn gram_small_cases() {
        let zero = LoadingMatrix::zeros(3, 2);
        assert_eq!(zero.gram(), SymMatrix::zeros(3).unwrap());
        let ones = LoadingMatrix::column(&[1.0; 4]);
        let g = ones.gram();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g.get(i, j), 1.0);
            }
        }
    }

    #[test]
    fn offdiag_minor_search_rank_one() {
        let t = tol();
        let psi = LoadingMatrix::column(&[1.0; 5]).gram();
        let hit = find_nonsingular_offdiag_minor(&psi, 0, 1, &t)
            .unwrap()
            .unwrap();
        // Lexicographically smallest pair avoiding index 0.
        assert_eq!(hit.0.as_slice(), &[1]);
        assert_eq!(hit.1.as_slice(), &[2]);
    }

    #[test]
    fn offdiag_minor_search_diagonal_is_empty() {
        let t = tol();
        let psi = SymMatrix::diagonal(&[1.0, 2.0, 3.0]).unwrap();
        assert!(find_nonsingular_offdiag_minor(&psi, 0, 1, &t)
            .unwrap()
            .is_none());
    }

    #[test]
    fn offdiag_minor_search_preconditions() {
        let t = tol();
        let psi = SymMatrix::identity(2).unwrap();
        assert!(matches!(
            find_nonsingular_offdiag_minor(&psi, 0, 1, &t),
            Err(Error::DimensionTooSmall { .. })
        ));
        let psi5 = SymMatrix::identity(5).unwrap();
        assert!(find_nonsingular_offdiag_minor(&psi5, 7, 1, &t).is_err());
    }

    #[test]
    fn permuted_relabels() {
        let s = SymMatrix::from_fn(3, |i, j| (3 * i + j) as f64).unwrap();
        let p = s.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(p.get(0, 0), s.get(2, 2));
        assert_eq!(p.get(0, 1), s.get(2, 0));
    }
}
