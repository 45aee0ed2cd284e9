//! Positive definite integral lattices with exact arithmetic: determinants,
//! discriminant groups, characteristic covectors and their shifted minima,
//! unit-vector splitting, and the Owens–Strle characterization check.
//!
//! Covectors are stored as integer vectors in the dual basis, pairing with
//! the lattice by the standard dot product; the extended pairing on the dual
//! is computed through the exact inverse of the Gram matrix. In these
//! coordinates ξ is characteristic iff ξ_k ≡ G[k][k] (mod 2) for every k.

mod enumerate;
mod ldl;
mod snf;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rational::{round_half_up, Rational};
pub use enumerate::{MinResult, Shape};

/// A positive definite symmetric integer matrix together with the exact
/// data every operation reuses. Construction certifies positive
/// definiteness by exact LDL^T; the inverse and the Smith form are computed
/// lazily and shared between threads.
#[derive(Debug)]
pub struct GramLattice {
    gram: Vec<Vec<BigInt>>,
    rank: usize,
    det: BigInt,
    shape: Shape,
    ldl: ldl::Ldl,
    inverse: OnceLock<Vec<Vec<Rational>>>,
    smith: OnceLock<snf::SmithForm>,
}

/// Integer coordinate vector in the dual basis satisfying the
/// characteristic parity condition for its lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CharCovector(Vec<BigInt>);

impl CharCovector {
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }
}

/// Canonical name of a coset of 2L inside the characteristic set: the
/// residues of P·s modulo the nontrivial invariant factors, where the
/// covector is diag(G) + 2s and P is the Smith row transform.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CosetLabel(pub Vec<BigInt>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    invariant_factors: Vec<BigInt>,
    order: BigInt,
}

impl DiscriminantGroup {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

impl std::fmt::Display for DiscriminantGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which sublattice the minimization shifts over, in dual coordinates:
/// 2L* = 2Z^r keeps the parity class, 2L = 2G·Z^r keeps the coset used to
/// index boundary spin-c structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetModulus {
    DualDoubled,
    LatticeDoubled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitVerdict {
    Standard(BigInt),
    NonStandard,
}

impl SplitVerdict {
    pub fn is_standard(&self) -> bool {
        matches!(self, SplitVerdict::Standard(_))
    }
}

#[derive(Debug, Clone)]
pub struct CosetEntry {
    pub label: CosetLabel,
    pub negated: CosetLabel,
    pub representative: CharCovector,
    pub minimum: Rational,
    pub witness: CharCovector,
}

/// Minima of the extended pairing over every coset of 2L in the
/// characteristic set, with the negation involution on labels.
#[derive(Debug, Clone)]
pub struct CosetMinima {
    entries: Vec<CosetEntry>,
    index: BTreeMap<CosetLabel, usize>,
}

impl CosetMinima {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CosetEntry> {
        self.entries.iter()
    }

    pub fn get(&self, label: &CosetLabel) -> Option<&CosetEntry> {
        self.index.get(label).map(|&i| &self.entries[i])
    }

    pub fn negate(&self, label: &CosetLabel) -> Option<&CosetLabel> {
        self.get(label).map(|e| &e.negated)
    }

    /// Entry with the smallest minimum (first in transversal order on ties).
    pub fn min_entry(&self) -> &CosetEntry {
        self.entries
            .iter()
            .min_by(|a, b| a.minimum.cmp(&b.minimum))
            .expect("coset minima of a valid lattice are nonempty")
    }
}

#[derive(Debug, Clone)]
pub struct OwensStrleReport {
    pub rank: usize,
    pub determinant: BigInt,
    pub bound: Rational,
    pub min_norm: Rational,
    pub witness: CharCovector,
    pub split: SplitVerdict,
    /// 4/δ, the step both sides of the inequality agree modulo.
    pub congruence_step: Rational,
}

#[derive(Deserialize)]
struct GramDocument {
    gram: Vec<Vec<i64>>,
}

impl GramLattice {
    pub fn new(gram: Vec<Vec<BigInt>>) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 {
            return Err(Error::EmptyLattice);
        }
        for (row, r) in gram.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: rank,
                });
            }
        }
        for i in 0..rank {
            for j in i + 1..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        let rational: Vec<Vec<Rational>> = gram
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let ldl = ldl::decompose(&rational).map_err(|(index, pivot)| Error::NotPositiveDefinite {
            index,
            pivot: pivot.to_string(),
        })?;
        let det = ldl.determinant();
        debug_assert!(det.is_integer());
        let det = det.to_integer();
        let shape = enumerate::detect_shape(&gram);
        Ok(GramLattice {
            gram,
            rank,
            det,
            shape,
            ldl,
            inverse: OnceLock::new(),
            smith: OnceLock::new(),
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// ⟨a_1⟩ ⊕ … ⟨a_r⟩.
    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        for (i, &a) in entries.iter().enumerate() {
            gram[i][i] = BigInt::from(a);
        }
        Self::new(gram)
    }

    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        let n = self.rank + other.rank;
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        for i in 0..self.rank {
            gram[i][..self.rank].clone_from_slice(&self.gram[i]);
        }
        for i in 0..other.rank {
            for j in 0..other.rank {
                gram[self.rank + i][self.rank + j] = other.gram[i][j].clone();
            }
        }
        GramLattice::new(gram).expect("direct sum of valid lattices is valid")
    }

    /// Parses `{"gram": [[...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GramDocument = serde_json::from_str(text).map_err(|e| Error::InvalidDocument {
            detail: e.to_string(),
        })?;
        Self::from_rows(&doc.gram)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    fn inverse(&self) -> &Vec<Vec<Rational>> {
        self.inverse.get_or_init(|| {
            let n = self.rank;
            let mut cols = Vec::with_capacity(n);
            for j in 0..n {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                cols.push(self.ldl.solve(&e));
            }
            // columns of the inverse, transposed into rows (symmetric anyway)
            (0..n)
                .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
                .collect()
        })
    }

    fn smith(&self) -> &snf::SmithForm {
        self.smith.get_or_init(|| snf::smith_form(&self.gram))
    }

    /// Smith diagonal and row transform, for callers that label cosets in
    /// bulk (the verification oracle).
    pub(crate) fn smith_parts(&self) -> (&[BigInt], &[Vec<BigInt>]) {
        let smith = self.smith();
        (&smith.diag, &smith.p)
    }

    pub fn discriminant_group(&self) -> DiscriminantGroup {
        let smith = self.smith();
        let one = BigInt::one();
        let factors: Vec<BigInt> = smith.diag.iter().filter(|d| **d > one).cloned().collect();
        let order: BigInt = smith.diag.iter().product();
        debug_assert_eq!(order, self.det);
        DiscriminantGroup {
            invariant_factors: factors,
            order,
        }
    }

    /// Q*(ξ, η) = ξᵀ G⁻¹ η, the extended pairing in dual coordinates.
    pub fn dual_norm(&self, xi: &[BigInt], eta: &[BigInt]) -> Rational {
        assert_eq!(xi.len(), self.rank);
        assert_eq!(eta.len(), self.rank);
        let inv = self.inverse();
        let mut total = Rational::zero();
        for i in 0..self.rank {
            if xi[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..self.rank {
                if !eta[j].is_zero() {
                    row += &inv[i][j] * Rational::from_integer(eta[j].clone());
                }
            }
            total += row * Rational::from_integer(xi[i].clone());
        }
        total
    }

    /// The canonical characteristic center diag(G).
    pub fn characteristic_center(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.gram[i][i].clone()).collect()
    }

    pub fn is_characteristic(&self, xi: &[BigInt]) -> bool {
        xi.len() == self.rank
            && xi
                .iter()
                .zip(self.characteristic_center())
                .all(|(x, d)| (x - d).is_even())
    }

    pub fn characteristic_covector(&self, coords: Vec<BigInt>) -> Result<CharCovector> {
        if self.is_characteristic(&coords) {
            Ok(CharCovector(coords))
        } else {
            Err(Error::InvalidDocument {
                detail: "vector does not satisfy the characteristic parity condition".into(),
            })
        }
    }

    /// Babai-reduced representative of `center` modulo the chosen
    /// sublattice: the real minimizer shifts into [-1/2, 1/2]^r.
    pub fn reduce_center(&self, center: &[BigInt], modulus: CosetModulus) -> Vec<BigInt> {
        match modulus {
            CosetModulus::DualDoubled => center
                .iter()
                .map(|c| {
                    let tau = -Rational::new(c.clone(), BigInt::from(2));
                    c + 2 * round_half_up(&tau)
                })
                .collect(),
            CosetModulus::LatticeDoubled => {
                let rhs: Vec<Rational> = center
                    .iter()
                    .map(|c| Rational::new(-c.clone(), BigInt::from(2)))
                    .collect();
                let tau = self.ldl.solve(&rhs);
                let shift: Vec<BigInt> = tau.iter().map(round_half_up).collect();
                (0..self.rank)
                    .map(|i| {
                        let mut x = center[i].clone();
                        for j in 0..self.rank {
                            x += 2 * &self.gram[i][j] * &shift[j];
                        }
                        x
                    })
                    .collect()
            }
        }
    }

    /// Exact minimum of Q*(ξ,ξ) over ξ ∈ center + modulus, with a
    /// deterministic minimizing witness. Exact ties resolve to the
    /// lexicographically greatest witness on the separable and
    /// branch-and-bound paths.
    pub fn shifted_min(&self, center: &[BigInt], modulus: CosetModulus) -> MinResult {
        assert_eq!(center.len(), self.rank, "center length must match rank");
        match (self.shape, modulus) {
            (Shape::Diagonal, CosetModulus::DualDoubled) => {
                let moduli = vec![BigInt::from(2); self.rank];
                enumerate::separable_min(&self.characteristic_center(), center, &moduli)
            }
            (Shape::Diagonal, CosetModulus::LatticeDoubled) => {
                let moduli: Vec<BigInt> =
                    (0..self.rank).map(|i| 2 * &self.gram[i][i]).collect();
                enumerate::separable_min(&self.characteristic_center(), center, &moduli)
            }
            (Shape::Chain, CosetModulus::LatticeDoubled) => {
                let result = enumerate::chain_min(&self.gram, &self.ldl, center);
                debug_assert_eq!(
                    result.value,
                    self.dual_norm(&result.witness, &result.witness)
                );
                result
            }
            (Shape::Chain, CosetModulus::DualDoubled) => {
                // the parity class is the disjoint union of the det(L)
                // cosets of 2L through center + 2s, s over a transversal
                let mut best: Option<MinResult> = None;
                for s in self.transversal() {
                    let shifted: Vec<BigInt> =
                        center.iter().zip(&s).map(|(c, si)| c + 2 * si).collect();
                    let candidate = self.shifted_min(&shifted, CosetModulus::LatticeDoubled);
                    let replace = match &best {
                        None => true,
                        Some(b) => {
                            candidate.value < b.value
                                || (candidate.value == b.value && candidate.witness > b.witness)
                        }
                    };
                    if replace {
                        best = Some(candidate);
                    }
                }
                best.expect("transversal of a valid lattice is nonempty")
            }
            (Shape::Dense, _) => self.branch_bound_min(center, modulus),
        }
    }

    fn branch_bound_min(&self, center: &[BigInt], modulus: CosetModulus) -> MinResult {
        let n = self.rank;
        let two = BigInt::from(2);
        let four = Rational::from_integer(BigInt::from(4));
        let (a, tau): (Vec<Vec<Rational>>, Vec<Rational>) = match modulus {
            CosetModulus::DualDoubled => {
                let inv = self.inverse();
                let a = inv
                    .iter()
                    .map(|row| row.iter().map(|x| x * &four).collect())
                    .collect();
                let tau = center
                    .iter()
                    .map(|c| Rational::new(-c.clone(), two.clone()))
                    .collect();
                (a, tau)
            }
            CosetModulus::LatticeDoubled => {
                let a = self
                    .gram
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| Rational::from_integer(x * 4))
                            .collect()
                    })
                    .collect();
                let rhs: Vec<Rational> = center
                    .iter()
                    .map(|c| Rational::new(-c.clone(), two.clone()))
                    .collect();
                (a, self.ldl.solve(&rhs))
            }
        };
        let ldl_a = ldl::decompose(&a).expect("form of a positive definite lattice");
        let map = |t: &[BigInt]| -> Vec<BigInt> {
            match modulus {
                CosetModulus::DualDoubled => center
                    .iter()
                    .zip(t)
                    .map(|(c, ti)| c + 2 * ti)
                    .collect(),
                CosetModulus::LatticeDoubled => (0..n)
                    .map(|i| {
                        let mut x = center[i].clone();
                        for j in 0..n {
                            x += 2 * &self.gram[i][j] * &t[j];
                        }
                        x
                    })
                    .collect(),
            }
        };
        // Babai start: value at the rounded real minimizer seeds the radius
        let start: Vec<BigInt> = tau.iter().map(round_half_up).collect();
        let diff: Vec<Rational> = start
            .iter()
            .zip(&tau)
            .map(|(s, t)| Rational::from_integer(s.clone()) - t)
            .collect();
        let mut start_value = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                start_value += &a[i][j] * &diff[i] * &diff[j];
            }
        }
        let search = enumerate::BranchBound {
            ldl: &ldl_a,
            tau: &tau,
            map: &map,
            exclude_zero: false,
        };
        let (value, t) = search
            .minimize(start_value, Some(start))
            .expect("seeded search always returns");
        MinResult {
            value,
            witness: map(&t),
        }
    }

    /// Minimum of Q* over the characteristic set diag(G) + 2Z^r.
    pub fn min_char_norm(&self) -> (Rational, CharCovector) {
        let result = self.shifted_min(&self.characteristic_center(), CosetModulus::DualDoubled);
        debug_assert!(self.is_characteristic(&result.witness));
        (result.value, CharCovector(result.witness))
    }

    /// Transversal of Z^r / G·Z^r in the fixed Smith order.
    fn transversal(&self) -> Vec<Vec<BigInt>> {
        let smith = self.smith();
        let one = BigInt::one();
        let nontrivial: Vec<usize> = (0..self.rank).filter(|&i| smith.diag[i] > one).collect();
        let mut out = Vec::new();
        let mut counter: Vec<BigInt> = vec![BigInt::zero(); nontrivial.len()];
        loop {
            let mut xfull = vec![BigInt::zero(); self.rank];
            for (slot, &pos) in nontrivial.iter().enumerate() {
                xfull[pos] = counter[slot].clone();
            }
            // s = P^{-1} x
            let s: Vec<BigInt> = (0..self.rank)
                .map(|i| {
                    (0..self.rank)
                        .map(|j| &smith.p_inv[i][j] * &xfull[j])
                        .sum()
                })
                .collect();
            out.push(s);
            // odometer
            let mut slot = nontrivial.len();
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                counter[slot] += 1;
                if counter[slot] < smith.diag[nontrivial[slot]] {
                    break;
                }
                counter[slot] = BigInt::zero();
            }
        }
    }

    /// Canonical label of the 2L-coset of a characteristic covector.
    pub fn coset_label(&self, xi: &CharCovector) -> CosetLabel {
        let smith = self.smith();
        let one = BigInt::one();
        let diag = self.characteristic_center();
        let s: Vec<BigInt> = xi
            .coords()
            .iter()
            .zip(&diag)
            .map(|(x, d)| {
                let twice = x - d;
                debug_assert!(twice.is_even());
                twice / 2
            })
            .collect();
        let mut label = Vec::new();
        for i in 0..self.rank {
            if smith.diag[i] > one {
                let y: BigInt = (0..self.rank).map(|j| &smith.p[i][j] * &s[j]).sum();
                label.push(y.mod_floor(&smith.diag[i]));
            }
        }
        CosetLabel(label)
    }

    /// Minima over all det(L) cosets of 2L in the characteristic set.
    pub fn char_coset_minima(&self) -> CosetMinima {
        let diag = self.characteristic_center();
        let mut entries = Vec::new();
        let mut index = BTreeMap::new();
        for s in self.transversal() {
            let center: Vec<BigInt> = diag.iter().zip(&s).map(|(d, si)| d + 2 * si).collect();
            let representative =
                CharCovector(self.reduce_center(&center, CosetModulus::LatticeDoubled));
            let label = self.coset_label(&representative);
            let negated_rep: Vec<BigInt> =
                representative.coords().iter().map(|x| -x.clone()).collect();
            let negated = self.coset_label(&CharCovector(negated_rep));
            let result = self.shifted_min(&center, CosetModulus::LatticeDoubled);
            debug_assert_eq!(self.coset_label(&CharCovector(result.witness.clone())), label);
            let entry = CosetEntry {
                label: label.clone(),
                negated,
                representative,
                minimum: result.value,
                witness: CharCovector(result.witness),
            };
            let slot = entries.len();
            entries.push(entry);
            let previous = index.insert(label, slot);
            debug_assert!(previous.is_none(), "transversal hit a coset twice");
        }
        CosetMinima { entries, index }
    }

    fn unit_vector(gram: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
        let rational: Vec<Vec<Rational>> = gram
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let decomposed =
            ldl::decompose(&rational).expect("orthogonal complements stay positive definite");
        let tau = vec![Rational::zero(); gram.len()];
        let identity = |t: &[BigInt]| t.to_vec();
        let search = enumerate::BranchBound {
            ldl: &decomposed,
            tau: &tau,
            map: &identity,
            exclude_zero: true,
        };
        let (value, witness) = search.minimize(Rational::one(), None)?;
        debug_assert_eq!(value, Rational::one());
        Some(witness)
    }

    /// Basis of the orthogonal complement of a unit vector `v`: the kernel
    /// of x ↦ (Gv)ᵀx, computed by a unimodular gcd sweep. Q(v,v) = 1 makes
    /// Gv primitive, so the complement has corank one.
    fn complement_gram(gram: &[Vec<BigInt>], v: &[BigInt]) -> Vec<Vec<BigInt>> {
        let n = gram.len();
        let mut w: Vec<BigInt> = (0..n)
            .map(|i| (0..n).map(|j| &gram[i][j] * &v[j]).sum())
            .collect();
        let mut cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| (0..n).map(|i| BigInt::from((i == j) as i64)).collect())
            .collect();
        for i in 1..n {
            if w[i].is_zero() {
                continue;
            }
            let eg = w[0].extended_gcd(&w[i]);
            let w0_over = &w[0] / &eg.gcd;
            let wi_over = &w[i] / &eg.gcd;
            let old0 = cols[0].clone();
            let oldi = cols[i].clone();
            for k in 0..n {
                cols[0][k] = &eg.x * &old0[k] + &eg.y * &oldi[k];
                cols[i][k] = -&wi_over * &old0[k] + &w0_over * &oldi[k];
            }
            w[i] = BigInt::zero();
            w[0] = eg.gcd;
        }
        debug_assert!(w[0].abs().is_one(), "Gv must be primitive for a unit v");
        let basis = &cols[1..];
        (0..n - 1)
            .map(|a| {
                (0..n - 1)
                    .map(|b| {
                        let mut acc = BigInt::zero();
                        for i in 0..n {
                            for j in 0..n {
                                acc += &basis[a][i] * &gram[i][j] * &basis[b][j];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// Standard(δ) iff the lattice is ⟨1⟩^{r-1} ⊕ ⟨δ⟩: split off a unit
    /// vector r−1 times. Distinct unit vectors are orthogonal up to sign,
    /// so no backtracking is needed.
    pub fn split_standard(&self) -> SplitVerdict {
        let mut gram = self.gram.clone();
        while gram.len() > 1 {
            let Some(v) = Self::unit_vector(&gram) else {
                return SplitVerdict::NonStandard;
            };
            gram = Self::complement_gram(&gram, &v);
        }
        let delta = gram[0][0].clone();
        debug_assert_eq!(delta, self.det);
        SplitVerdict::Standard(delta)
    }

    /// Upper bound of the characterization theorem: r−1+1/δ for odd
    /// determinant, r−1 for even.
    pub fn characterization_bound(&self) -> Rational {
        let r = Rational::from_integer(BigInt::from(self.rank as i64 - 1));
        if self.det.is_odd() {
            r + Rational::new(BigInt::one(), self.det.clone())
        } else {
            r
        }
    }

    /// Checks the Owens–Strle characterization on this lattice: the minimum
    /// characteristic norm μ satisfies μ ≤ bound, with equality exactly for
    /// standard lattices, and μ ≡ bound modulo 4/δ. Any violation is an
    /// implementation bug, reported as AssertionViolated.
    pub fn owens_strle_check(&self) -> Result<OwensStrleReport> {
        let bound = self.characterization_bound();
        let (min_norm, witness) = self.min_char_norm();
        let split = self.split_standard();
        let step = Rational::new(BigInt::from(4), self.det.clone());
        if min_norm > bound {
            return Err(Error::AssertionViolated {
                detail: format!("min characteristic norm {min_norm} exceeds bound {bound}"),
            });
        }
        let strict = min_norm < bound;
        if strict == split.is_standard() {
            return Err(Error::AssertionViolated {
                detail: format!(
                    "strictness mismatch: min {min_norm}, bound {bound}, split {split:?}"
                ),
            });
        }
        let gap = &bound - &min_norm;
        if !crate::rational::divides(&step, &gap) {
            return Err(Error::AssertionViolated {
                detail: format!("gap {gap} is not a multiple of 4/det = {step}"),
            });
        }
        Ok(OwensStrleReport {
            rank: self.rank,
            determinant: self.det.clone(),
            bound,
            min_norm,
            witness,
            split,
            congruence_step: step,
        })
    }
}
