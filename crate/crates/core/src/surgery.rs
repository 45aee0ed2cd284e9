//! The obstruction pipeline: β(n), surgery correction-term tables, the
//! bounding-lemma check, the concordance-invariant upper bound, the
//! definite-filling obstruction in its three modes, standardness verdicts,
//! sharp-filling certification, and the slope-bound consistency check.
//!
//! The obstruction comes in a hierarchy of necessary conditions. Global
//! compares only the minimum characteristic norm against the worst
//! correction term. Matching asks for a bijection between spin-c indices
//! and characteristic cosets compatible with the two conjugation
//! involutions (i ↦ n−i on indices, c ↦ −c on cosets). Affine restricts
//! the bijection to the family ψ(i) = [ξ₀ + 2·i·u] with u generating the
//! discriminant group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::knot::{AlexanderPolynomial, KnotModel, VSequence};
use crate::lattice::{CharCovector, CosetEntry, CosetLabel, CosetMinima, GramLattice, SplitVerdict};
use crate::lens::{conjugate_index, d_lens, LensSpace};
use crate::rational::{render, Rational};

/// β(n): 1/n − 1 for odd n, −1 for even n.
pub fn beta(n: u64) -> Rational {
    assert!(n >= 1);
    if n % 2 == 1 {
        Rational::new(BigInt::from(1), BigInt::from(n)) - Rational::from_integer(BigInt::from(1))
    } else {
        Rational::from_integer(BigInt::from(-1))
    }
}

/// Correction term of p/q surgery:
/// d(S³_{p/q}(K), i) = d(L(p,q), i) − 2·max(V_{⌊i/q⌋}, V_{⌊(p+q−1−i)/q⌋}).
pub fn d_surgery(v: &VSequence, p: u64, q: u64, i: u64) -> Result<Rational> {
    if i >= p {
        return Err(Error::IndexOutOfRange {
            index: i,
            modulus: p,
        });
    }
    let lens = d_lens(p, q, i)?;
    let a = v.value(i / q);
    let b = v.value((p + q - 1 - i) / q);
    let vmax = a.max(b);
    Ok(lens - Rational::from_integer(BigInt::from(2 * vmax as i64)))
}

/// Exact correction terms indexed by spin-c labels 0..p−1, carrying the
/// conjugation involution i ↦ (p+q−1−i) mod p under which the values are
/// symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DInvariantTable {
    p: u64,
    q: u64,
    values: Vec<Rational>,
    source: String,
}

impl DInvariantTable {
    fn checked(p: u64, q: u64, values: Vec<Rational>, source: String) -> Self {
        let table = DInvariantTable {
            p,
            q,
            values,
            source,
        };
        let step = Rational::new(BigInt::from(1), BigInt::from(4 * p));
        for (i, value) in table.values.iter().enumerate() {
            assert!(
                crate::rational::divides(&step, value),
                "denominator of {source} at {i} does not divide 4p",
                source = table.source
            );
            let j = table.conjugate(i as u64);
            assert_eq!(
                *value,
                table.values[j as usize],
                "table {} is not conjugation symmetric at {i}",
                table.source
            );
        }
        table
    }

    /// Table of an integer surgery S³_n(K) from the knot's V-sequence.
    pub fn surgery(v: &VSequence, n: u64) -> Self {
        assert!(n >= 1);
        let values: Vec<Rational> = (0..n)
            .map(|i| d_surgery(v, n, 1, i).expect("index in range"))
            .collect();
        Self::checked(n, 1, values, format!("S3_{n}(K)"))
    }

    /// Table of a fractional surgery S³_{p/q}(K); labels are formula-level
    /// indices.
    pub fn fractional_surgery(v: &VSequence, p: u64, q: u64) -> Result<Self> {
        let values: Result<Vec<Rational>> = (0..p).map(|i| d_surgery(v, p, q, i)).collect();
        Ok(Self::checked(p, q, values?, format!("S3_{p}/{q}(K)")))
    }

    /// Table of a lens space in its stored orientation.
    pub fn lens(space: &LensSpace) -> Self {
        let p = space.p();
        let q = if p == 1 { 1 } else { space.q() };
        Self::checked(p, q, space.correction_terms(), space.to_string())
    }

    /// Orientation reversal: negate the values and reindex by the
    /// conjugation involution.
    pub fn reversed(&self) -> Self {
        let values: Vec<Rational> = (0..self.p)
            .map(|i| -&self.values[self.conjugate(i) as usize])
            .collect();
        let source = match self.source.strip_prefix('-') {
            Some(rest) => rest.to_string(),
            None => format!("-{}", self.source),
        };
        Self::checked(self.p, self.q, values, source)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn conjugate(&self, i: u64) -> u64 {
        if self.p == 1 {
            0
        } else {
            conjugate_index(self.p, self.q, i)
        }
    }

    pub fn value(&self, i: u64) -> &Rational {
        &self.values[i as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn min_entry(&self) -> (u64, &Rational) {
        self.values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, v)| (i as u64, v))
            .expect("tables are nonempty")
    }

    pub fn sorted_values(&self) -> Vec<Rational> {
        let mut v = self.values.clone();
        v.sort();
        v
    }
}

/// Result of the bounding-lemma scan β(n) ≤ 4·d(S³_n(K), i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaBound {
    Holds,
    FailsAt(u64),
}

/// Checks β(n) ≤ 4·d(S³_n(K), i) for every i. For n > 4·g4 + 3 the
/// bounding lemma guarantees Holds, so a failure there is an
/// implementation bug and panics.
pub fn beta_bound_check(v: &VSequence, n: u64) -> BetaBound {
    let bound = beta(n);
    let table = DInvariantTable::surgery(v, n);
    let four = Rational::from_integer(BigInt::from(4));
    let result = (0..n)
        .find(|&i| &four * table.value(i) < bound)
        .map_or(BetaBound::Holds, BetaBound::FailsAt);
    if matches!(result, BetaBound::FailsAt(_)) {
        assert!(
            n <= 4 * v.slice_genus() + 3,
            "bounding lemma violated at n = {n} with g4 = {}; implementation bug",
            v.slice_genus()
        );
    }
    result
}

/// Largest n ≥ 1 where the β-bound fails, or 0 if it never does. The
/// search space is bounded by 4·g4 + 3; beyond it the bound always holds.
/// This upper-bounds the supremum of slopes whose surgery can bound a
/// non-standard lattice — an upper bound, not the invariant itself.
pub fn l_upper_bound(v: &VSequence) -> u64 {
    let cap = 4 * v.slice_genus() + 3;
    (1..=cap)
        .rev()
        .find(|&n| matches!(beta_bound_check(v, n), BetaBound::FailsAt(_)))
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionMode {
    Global,
    Matching,
    Affine,
}

impl ObstructionMode {
    pub fn name(&self) -> &'static str {
        match self {
            ObstructionMode::Global => "global",
            ObstructionMode::Matching => "matching",
            ObstructionMode::Affine => "affine",
        }
    }
}

impl std::str::FromStr for ObstructionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "global" => Ok(ObstructionMode::Global),
            "matching" => Ok(ObstructionMode::Matching),
            "affine" => Ok(ObstructionMode::Affine),
            other => Err(Error::InvalidDocument {
                detail: format!("unknown mode {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// One row of a matching or affine witness: index i assigned to the coset
/// with the given label, whose minimum is compared against the target
/// rank + 4·T[i] (inequality) or rank − 4·T[i] (equality).
#[derive(Debug, Clone)]
pub struct AssignmentPair {
    pub index: u64,
    pub label: CosetLabel,
    pub minimum: Rational,
    pub target: Rational,
}

#[derive(Debug, Clone)]
pub enum ObstructionWitness {
    /// Global-mode data: the minimum characteristic norm against the
    /// required bound derived from the extremal correction term.
    Global {
        min_char_norm: Rational,
        covector: CharCovector,
        required: Rational,
        extremal_index: u64,
    },
    /// Sharpness global mode compares value multisets.
    Multisets {
        lattice: Vec<Rational>,
        table: Vec<Rational>,
    },
    Assignment {
        pairs: Vec<AssignmentPair>,
    },
    AffineAssignment {
        base: CharCovector,
        step: u64,
        pairs: Vec<AssignmentPair>,
    },
    /// An index orbit no coset orbit can serve.
    Unmatched { indices: Vec<u64> },
    /// The two involutions have different fixed-point counts.
    OrbitCountMismatch {
        fixed_indices: usize,
        fixed_cosets: usize,
    },
    /// No (base, generator) pair yields a valid affine family.
    NoAffineFamily { tried: usize },
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub mode: ObstructionMode,
    pub verdict: Verdict,
    pub witness: ObstructionWitness,
    pub rank: usize,
    pub determinant: BigInt,
    pub source: String,
}

fn label_json(label: &CosetLabel) -> Value {
    Value::Array(
        label
            .0
            .iter()
            .map(|x| json!(x.to_i64().expect("coset label component fits i64")))
            .collect(),
    )
}

fn covector_json(c: &CharCovector) -> Value {
    Value::Array(
        c.coords()
            .iter()
            .map(|x| json!(x.to_i64().expect("witness coordinate fits i64")))
            .collect(),
    )
}

fn rationals_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| json!(render(v))).collect())
}

fn pairs_json(pairs: &[AssignmentPair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "coset": label_json(&p.label),
                    "index": p.index,
                    "minimum": render(&p.minimum),
                    "target": render(&p.target),
                })
            })
            .collect(),
    )
}

impl ObstructionReport {
    pub fn to_json(&self) -> Value {
        let witness = match &self.witness {
            ObstructionWitness::Global {
                min_char_norm,
                covector,
                required,
                extremal_index,
            } => json!({
                "covector": covector_json(covector),
                "extremal_index": extremal_index,
                "kind": "global",
                "min_char_norm": render(min_char_norm),
                "required": render(required),
            }),
            ObstructionWitness::Multisets { lattice, table } => json!({
                "kind": "multisets",
                "lattice": rationals_json(lattice),
                "table": rationals_json(table),
            }),
            ObstructionWitness::Assignment { pairs } => json!({
                "kind": "assignment",
                "pairs": pairs_json(pairs),
            }),
            ObstructionWitness::AffineAssignment { base, step, pairs } => json!({
                "base": covector_json(base),
                "kind": "affine",
                "pairs": pairs_json(pairs),
                "step": step,
            }),
            ObstructionWitness::Unmatched { indices } => json!({
                "indices": indices,
                "kind": "unmatched",
            }),
            ObstructionWitness::OrbitCountMismatch {
                fixed_indices,
                fixed_cosets,
            } => json!({
                "fixed_cosets": fixed_cosets,
                "fixed_indices": fixed_indices,
                "kind": "orbit-count-mismatch",
            }),
            ObstructionWitness::NoAffineFamily { tried } => json!({
                "kind": "no-affine-family",
                "tried": tried,
            }),
        };
        json!({
            "data": {
                "determinant": self.determinant.to_string(),
                "rank": self.rank,
                "table": self.source,
            },
            "mode": self.mode.name(),
            "verdict": if self.verdict.passed() { "pass" } else { "fail" },
            "witness": witness,
        })
    }
}

/// Inequality mode (filling obstruction) or equality mode (sharpness).
#[derive(Clone, Copy, PartialEq, Eq)]
enum Comparison {
    AtLeast,
    Equal,
}

impl Comparison {
    /// The value the coset minimum is compared against for index i.
    fn target(&self, rank: usize, t_i: &Rational) -> Rational {
        let four = Rational::from_integer(BigInt::from(4));
        let r = Rational::from_integer(BigInt::from(rank as i64));
        match self {
            Comparison::AtLeast => r + four * t_i,
            Comparison::Equal => r - four * t_i,
        }
    }

    fn feasible(&self, minimum: &Rational, target: &Rational) -> bool {
        match self {
            Comparison::AtLeast => minimum >= target,
            Comparison::Equal => minimum == target,
        }
    }
}

struct OrbitProblem<'a> {
    rank: usize,
    table: &'a DInvariantTable,
    minima: &'a CosetMinima,
    comparison: Comparison,
}

#[derive(Debug)]
enum OrbitOutcome {
    Assigned(Vec<AssignmentPair>),
    Unmatched(Vec<u64>),
    CountMismatch { fixed_indices: usize, fixed_cosets: usize },
}

fn kuhn_augment(
    left: usize,
    adjacency: &[Vec<usize>],
    seen: &mut [bool],
    matched_right: &mut [Option<usize>],
) -> bool {
    for &r in &adjacency[left] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if matched_right[r].is_none()
            || kuhn_augment(matched_right[r].unwrap(), adjacency, seen, matched_right)
        {
            matched_right[r] = Some(left);
            return true;
        }
    }
    false
}

impl<'a> OrbitProblem<'a> {
    /// Perfect matching of involution orbits: fixed indices pair with
    /// negation-fixed cosets, two-cycles with two-cycles. Feasibility of an
    /// orbit pair collapses to one comparison because tables are
    /// conjugation symmetric and minima are negation symmetric.
    fn solve(&self) -> OrbitOutcome {
        let p = self.table.p();
        let mut fixed_idx: Vec<u64> = Vec::new();
        let mut pair_idx: Vec<u64> = Vec::new();
        for i in 0..p {
            let j = self.table.conjugate(i);
            if i == j {
                fixed_idx.push(i);
            } else if i < j {
                pair_idx.push(i);
            }
        }
        let mut fixed_cos: Vec<&CosetEntry> = Vec::new();
        let mut pair_cos: Vec<&CosetEntry> = Vec::new();
        for entry in self.minima.iter() {
            if entry.negated == entry.label {
                fixed_cos.push(entry);
            } else if entry.label < entry.negated {
                pair_cos.push(entry);
            }
        }
        if fixed_idx.len() != fixed_cos.len() {
            return OrbitOutcome::CountMismatch {
                fixed_indices: fixed_idx.len(),
                fixed_cosets: fixed_cos.len(),
            };
        }
        let mut pairs: Vec<AssignmentPair> = Vec::new();
        for (indices, cosets) in [(&fixed_idx, &fixed_cos), (&pair_idx, &pair_cos)] {
            let adjacency: Vec<Vec<usize>> = indices
                .iter()
                .map(|&i| {
                    let target = self.comparison.target(self.rank, self.table.value(i));
                    cosets
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| self.comparison.feasible(&e.minimum, &target))
                        .map(|(slot, _)| slot)
                        .collect()
                })
                .collect();
            let mut matched_right: Vec<Option<usize>> = vec![None; cosets.len()];
            for (l, _) in indices.iter().enumerate() {
                let mut seen = vec![false; cosets.len()];
                if !kuhn_augment(l, &adjacency, &mut seen, &mut matched_right) {
                    let i = indices[l];
                    let j = self.table.conjugate(i);
                    let orbit = if i == j { vec![i] } else { vec![i, j] };
                    return OrbitOutcome::Unmatched(orbit);
                }
            }
            for (slot, owner) in matched_right.iter().enumerate() {
                if let Some(l) = owner {
                    let i = indices[*l];
                    let entry = cosets[slot];
                    let target = self.comparison.target(self.rank, self.table.value(i));
                    pairs.push(AssignmentPair {
                        index: i,
                        label: entry.label.clone(),
                        minimum: entry.minimum.clone(),
                        target,
                    });
                    let j = self.table.conjugate(i);
                    if j != i {
                        let target = self.comparison.target(self.rank, self.table.value(j));
                        let negated = self
                            .minima
                            .get(&entry.negated)
                            .expect("negated labels are present");
                        pairs.push(AssignmentPair {
                            index: j,
                            label: negated.label.clone(),
                            minimum: negated.minimum.clone(),
                            target,
                        });
                    }
                }
            }
        }
        pairs.sort_by_key(|p| p.index);
        OrbitOutcome::Assigned(pairs)
    }

    /// Affine families ψ(i) = [ξ₀ + 2·i·u] over a cyclic discriminant
    /// group: scan every base coset and generator residue.
    fn solve_affine(&self, lattice: &GramLattice) -> (Option<(CharCovector, u64, Vec<AssignmentPair>)>, usize) {
        let p = self.table.p();
        let by_residue: BTreeMap<u64, &CosetEntry> = self
            .minima
            .iter()
            .map(|e| (label_residue(&e.label), e))
            .collect();
        debug_assert_eq!(by_residue.len() as u64, p);
        let generators: Vec<u64> = if p == 1 {
            vec![0]
        } else {
            (1..p).filter(|g| g.gcd(&p) == 1).collect()
        };
        let mut tried = 0;
        for base in 0..p {
            for &step in &generators {
                tried += 1;
                let psi = |i: u64| (base + i % p * step) % p;
                let ok = (0..p).all(|i| {
                    let entry = by_residue[&psi(i)];
                    let target = self.comparison.target(self.rank, self.table.value(i));
                    let involution_ok =
                        label_residue(&entry.negated) == psi(self.table.conjugate(i));
                    involution_ok && self.comparison.feasible(&entry.minimum, &target)
                });
                if ok {
                    let pairs: Vec<AssignmentPair> = (0..p)
                        .map(|i| {
                            let entry = by_residue[&psi(i)];
                            AssignmentPair {
                                index: i,
                                label: entry.label.clone(),
                                minimum: entry.minimum.clone(),
                                target: self.comparison.target(self.rank, self.table.value(i)),
                            }
                        })
                        .collect();
                    let base_entry = by_residue[&psi(0)];
                    let base_cov = lattice
                        .characteristic_covector(base_entry.representative.coords().to_vec())
                        .expect("coset representatives are characteristic");
                    return (Some((base_cov, step, pairs)), tried);
                }
            }
        }
        (None, tried)
    }
}

fn label_residue(label: &CosetLabel) -> u64 {
    match label.0.as_slice() {
        [] => 0,
        [x] => x.to_u64().expect("cyclic label fits u64"),
        _ => panic!("residue of a non-cyclic label"),
    }
}

fn check_determinant(lattice: &GramLattice, table: &DInvariantTable) -> Result<()> {
    if *lattice.determinant() != BigInt::from(table.p()) {
        return Err(Error::DeterminantMismatch {
            det: lattice.determinant().clone(),
            p: table.p(),
        });
    }
    Ok(())
}

fn run_modes(
    lattice: &GramLattice,
    table: &DInvariantTable,
    mode: ObstructionMode,
    comparison: Comparison,
) -> Result<ObstructionReport> {
    check_determinant(lattice, table)?;
    let rank = lattice.rank();
    let report = |verdict, witness| ObstructionReport {
        mode,
        verdict,
        witness,
        rank,
        determinant: lattice.determinant().clone(),
        source: table.source().to_string(),
    };
    match (mode, comparison) {
        (ObstructionMode::Global, Comparison::AtLeast) => {
            let (min_norm, covector) = lattice.min_char_norm();
            let (extremal_index, min_t) = table.min_entry();
            let required = comparison.target(rank, min_t);
            let verdict = if min_norm >= required {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok(report(
                verdict,
                ObstructionWitness::Global {
                    min_char_norm: min_norm,
                    covector,
                    required,
                    extremal_index,
                },
            ))
        }
        (ObstructionMode::Global, Comparison::Equal) => {
            // multiset equality of realized sharp values against the table
            let minima = lattice.char_coset_minima();
            let four = Rational::from_integer(BigInt::from(4));
            let r = Rational::from_integer(BigInt::from(rank as i64));
            let mut lattice_values: Vec<Rational> =
                minima.iter().map(|e| (&r - &e.minimum) / &four).collect();
            lattice_values.sort();
            let table_values = table.sorted_values();
            let verdict = if lattice_values == table_values {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok(report(
                verdict,
                ObstructionWitness::Multisets {
                    lattice: lattice_values,
                    table: table_values,
                },
            ))
        }
        (ObstructionMode::Matching, _) => {
            let minima = lattice.char_coset_minima();
            let problem = OrbitProblem {
                rank,
                table,
                minima: &minima,
                comparison,
            };
            Ok(match problem.solve() {
                OrbitOutcome::Assigned(pairs) => {
                    report(Verdict::Pass, ObstructionWitness::Assignment { pairs })
                }
                OrbitOutcome::Unmatched(indices) => {
                    report(Verdict::Fail, ObstructionWitness::Unmatched { indices })
                }
                OrbitOutcome::CountMismatch {
                    fixed_indices,
                    fixed_cosets,
                } => report(
                    Verdict::Fail,
                    ObstructionWitness::OrbitCountMismatch {
                        fixed_indices,
                        fixed_cosets,
                    },
                ),
            })
        }
        (ObstructionMode::Affine, _) => {
            let group = lattice.discriminant_group();
            if !group.is_cyclic() {
                return Err(Error::NonCyclicDiscriminant {
                    group: group.to_string(),
                });
            }
            let minima = lattice.char_coset_minima();
            let problem = OrbitProblem {
                rank,
                table,
                minima: &minima,
                comparison,
            };
            Ok(match problem.solve_affine(lattice) {
                (Some((base, step, pairs)), _) => report(
                    Verdict::Pass,
                    ObstructionWitness::AffineAssignment { base, step, pairs },
                ),
                (None, tried) => {
                    report(Verdict::Fail, ObstructionWitness::NoAffineFamily { tried })
                }
            })
        }
    }
}

/// Necessary condition for L to be the intersection form of a positive
/// definite filling of the manifold with correction terms T: every spin-c
/// structure needs its coset minimum to be at least rank + 4·T[i].
pub fn lattice_obstruction(
    lattice: &GramLattice,
    table: &DInvariantTable,
    mode: ObstructionMode,
) -> Result<ObstructionReport> {
    run_modes(lattice, table, mode, Comparison::AtLeast)
}

/// Sharpness certification: the positive form L stands in for the negative
/// filling −L, and every correction term must be realized with equality,
/// T[i] = (rank − m(ψ(i)))/4.
pub fn sharpness_check(
    lattice: &GramLattice,
    table: &DInvariantTable,
    mode: ObstructionMode,
) -> Result<ObstructionReport> {
    run_modes(lattice, table, mode, Comparison::Equal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardnessOutcome {
    /// The lattice split as ⟨n⟩ ⊕ ⟨1⟩^{r−1}.
    StandardBranch,
    /// The lattice flunked the global obstruction, as every non-standard
    /// candidate must once n > 4·g4 + 3.
    ObstructionFailBranch,
    /// n ≤ 4·g4 + 3: the classification does not apply; all data reported.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct StandardnessReport {
    pub knot: String,
    pub n: u64,
    pub slice_genus: u64,
    pub threshold: u64,
    pub outcome: StandardnessOutcome,
    /// Set when n is square-free: the verdict then extends to fillings with
    /// torsion in their homology.
    pub squarefree: bool,
    pub split: SplitVerdict,
    pub obstruction: ObstructionReport,
}

fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        while n.is_multiple_of(d) {
            n /= d;
        }
        d += 1;
    }
    true
}

impl StandardnessReport {
    pub fn to_json(&self) -> Value {
        json!({
            "knot": self.knot,
            "n": self.n,
            "obstruction": self.obstruction.to_json(),
            "outcome": match self.outcome {
                StandardnessOutcome::StandardBranch => "standard",
                StandardnessOutcome::ObstructionFailBranch => "obstruction-fail",
                StandardnessOutcome::Inconclusive => "inconclusive",
            },
            "slice_genus": self.slice_genus,
            "squarefree": self.squarefree,
            "standard": self.split.is_standard(),
            "threshold": self.threshold,
        })
    }
}

/// For n > 4·g4 + 3, any lattice with determinant n bounded by S³_n(K)
/// must be standard; equivalently, a lattice passing the global
/// obstruction in that regime must split. Reports which branch holds.
pub fn standardness_verdict(
    knot: &KnotModel,
    n: u64,
    lattice: &GramLattice,
) -> Result<StandardnessReport> {
    let v = knot.v_sequence()?;
    let table = DInvariantTable::surgery(&v, n);
    check_determinant(lattice, &table)?;
    let obstruction = lattice_obstruction(lattice, &table, ObstructionMode::Global)?;
    let split = lattice.split_standard();
    let threshold = 4 * v.slice_genus() + 3;
    let outcome = if n > threshold {
        if split.is_standard() {
            StandardnessOutcome::StandardBranch
        } else if !obstruction.verdict.passed() {
            StandardnessOutcome::ObstructionFailBranch
        } else {
            return Err(Error::AssertionViolated {
                detail: format!(
                    "non-standard lattice passed the global obstruction at n = {n} > {threshold}"
                ),
            });
        }
    } else {
        StandardnessOutcome::Inconclusive
    };
    Ok(StandardnessReport {
        knot: knot.name.clone(),
        n,
        slice_genus: v.slice_genus(),
        threshold,
        outcome,
        squarefree: is_squarefree(n),
        split,
        obstruction,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknotVerdict {
    Unknot,
    NonTrivial,
}

/// Among L-space knots, only the unknot has vanishing Δ″(1).
pub fn unknot_check(alexander: &AlexanderPolynomial) -> UnknotVerdict {
    if alexander.second_derivative_at_one().is_zero() {
        UnknotVerdict::Unknot
    } else {
        UnknotVerdict::NonTrivial
    }
}

#[derive(Debug, Clone)]
pub struct SlopeBoundReport {
    pub knot: String,
    pub n: u64,
    pub second_derivative: BigInt,
    pub nontrivial: bool,
    /// Sharpness verdict of the standard lattice against the
    /// reversed-orientation surgery table (matching mode).
    pub standard_sharpness: Verdict,
    pub l_upper_bound: u64,
    pub genus_bound: u64,
    pub slope_within_genus_bound: bool,
    /// True when the data is consistent with the slope-bound theorem: a
    /// non-trivial knot's standard lattice must fail sharpness.
    pub consistent: bool,
}

impl SlopeBoundReport {
    pub fn to_json(&self) -> Value {
        json!({
            "consistent": self.consistent,
            "delta_second_derivative": self.second_derivative.to_string(),
            "genus_bound": self.genus_bound,
            "knot": self.knot,
            "l_upper_bound": self.l_upper_bound,
            "n": self.n,
            "nontrivial": self.nontrivial,
            "slope_within_genus_bound": self.slope_within_genus_bound,
            "standard_sharpness": if self.standard_sharpness.passed() { "pass" } else { "fail" },
        })
    }
}

/// Data-level check of the slope-bound theorem for a candidate sharp
/// standard filling: for a non-trivial L-space knot the standard lattice
/// must fail sharpness against the reversed-orientation surgery table, and
/// the slope comparisons n vs l-bound vs 4g+3 are reported.
pub fn slope_bound_check(knot: &KnotModel, n: u64) -> Result<SlopeBoundReport> {
    assert!(n >= 1);
    let alexander = knot.alexander.as_ref().ok_or(Error::MissingVData)?;
    let v = knot.v_sequence()?;
    let delta2 = alexander.second_derivative_at_one();
    let nontrivial = unknot_check(alexander) == UnknotVerdict::NonTrivial;
    let reversed = DInvariantTable::surgery(&v, n).reversed();
    let standard = GramLattice::diagonal(&[n as i64])?;
    let sharp = sharpness_check(&standard, &reversed, ObstructionMode::Matching)?;
    let l_bound = l_upper_bound(&v);
    let genus_bound = 4 * v.slice_genus() + 3;
    Ok(SlopeBoundReport {
        knot: knot.name.clone(),
        n,
        second_derivative: delta2,
        nontrivial,
        standard_sharpness: sharp.verdict,
        l_upper_bound: l_bound,
        genus_bound,
        slope_within_genus_bound: n <= genus_bound,
        consistent: !nontrivial || !sharp.verdict.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn trefoil() -> KnotModel {
        KnotModel::torus_knot(2, 3).unwrap()
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(2), int(-1));
        assert_eq!(beta(3), ratio(-2, 3));
        assert_eq!(beta(1), int(0));
        assert_eq!(beta(8), int(-1));
        assert_eq!(beta(7), ratio(-6, 7));
    }

    #[test]
    fn surgery_values() {
        let v = trefoil().v_sequence().unwrap();
        assert_eq!(d_surgery(&v, 8, 1, 0).unwrap(), ratio(-1, 4));
        assert_eq!(d_surgery(&v, 8, 1, 4).unwrap(), ratio(-1, 4));
        // unknot surgeries are lens spaces
        let zero = VSequence::zero();
        for i in 0..11 {
            assert_eq!(d_surgery(&zero, 11, 4, i).unwrap(), d_lens(11, 4, i).unwrap());
        }
        assert!(d_surgery(&v, 8, 1, 8).is_err());
    }

    #[test]
    fn tables() {
        let unknot3 = DInvariantTable::surgery(&VSequence::zero(), 3);
        assert_eq!(
            unknot3.values(),
            &[ratio(1, 2), ratio(-1, 6), ratio(-1, 6)]
        );
        let v = trefoil().v_sequence().unwrap();
        let t8 = DInvariantTable::surgery(&v, 8);
        assert_eq!(*t8.value(0), ratio(-1, 4));
        for i in 0..8 {
            assert_eq!(t8.value(i), t8.value((8 - i) % 8));
        }
        // n = 1: the single correction term is d(L(1,1),0) − 2V_0
        let t1 = DInvariantTable::surgery(&v, 1);
        assert_eq!(t1.values(), &[int(-2)]);
    }

    #[test]
    fn reversed_tables_negate_multisets() {
        let v = trefoil().v_sequence().unwrap();
        let t = DInvariantTable::surgery(&v, 5);
        let r = t.reversed();
        let mut negated: Vec<Rational> = t.values().iter().map(|x| -x).collect();
        negated.sort();
        assert_eq!(r.sorted_values(), negated);
        assert_eq!(r.reversed(), t);
        assert_eq!(r.sum(), -t.sum());
    }

    #[test]
    fn beta_bound_examples() {
        let v = trefoil().v_sequence().unwrap();
        assert_eq!(beta_bound_check(&v, 8), BetaBound::Holds);
        assert_eq!(beta_bound_check(&v, 7), BetaBound::FailsAt(0));
        let zero = VSequence::zero();
        for n in 1..30 {
            assert_eq!(beta_bound_check(&zero, n), BetaBound::Holds);
        }
    }

    #[test]
    fn l_bound_examples() {
        assert_eq!(l_upper_bound(&VSequence::zero()), 0);
        assert_eq!(l_upper_bound(&trefoil().v_sequence().unwrap()), 7);
        let t25 = KnotModel::torus_knot(2, 5).unwrap().v_sequence().unwrap();
        assert_eq!(l_upper_bound(&t25), 11);
    }

    #[test]
    fn obstruction_trivial_lattice() {
        let unit = GramLattice::diagonal(&[1]).unwrap();
        let s3 = DInvariantTable::surgery(&VSequence::zero(), 1);
        for mode in [
            ObstructionMode::Global,
            ObstructionMode::Matching,
            ObstructionMode::Affine,
        ] {
            let report = lattice_obstruction(&unit, &s3, mode).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "mode {mode:?}");
        }
    }

    #[test]
    fn obstruction_standard_passes_global() {
        // ⟨n⟩ ⊕ ⟨1⟩^{r−1} vs d_table(V, n) whenever the β-bound holds
        for (v, n) in [
            (VSequence::zero(), 6),
            (VSequence::zero(), 7),
            (trefoil().v_sequence().unwrap(), 8),
            (trefoil().v_sequence().unwrap(), 9),
        ] {
            assert_eq!(beta_bound_check(&v, n), BetaBound::Holds);
            let table = DInvariantTable::surgery(&v, n);
            for extra in 0..3 {
                let mut diag = vec![n as i64];
                diag.extend(std::iter::repeat_n(1, extra));
                let lattice = GramLattice::diagonal(&diag).unwrap();
                let report =
                    lattice_obstruction(&lattice, &table, ObstructionMode::Global).unwrap();
                assert_eq!(report.verdict, Verdict::Pass, "n={n}, rank={}", extra + 1);
            }
        }
    }

    #[test]
    fn obstruction_linear_lattice_realized_and_refuted() {
        let lam = crate::lens::linear_lattice(11, 4).unwrap();
        let t25 = KnotModel::torus_knot(2, 5).unwrap().v_sequence().unwrap();
        let realized = DInvariantTable::surgery(&t25, 11);
        for mode in [ObstructionMode::Matching, ObstructionMode::Affine] {
            let report = lattice_obstruction(&lam, &realized, mode).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "mode {mode:?}");
        }
        let unknot11 = DInvariantTable::surgery(&VSequence::zero(), 11);
        let report = lattice_obstruction(&lam, &unknot11, ObstructionMode::Global).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        if let ObstructionWitness::Global {
            min_char_norm,
            required,
            ..
        } = &report.witness
        {
            assert_eq!(*min_char_norm, ratio(4, 11));
            assert_eq!(*required, ratio(12, 11));
        } else {
            panic!("global witness expected");
        }
        // determinant mismatch is rejected
        let bad = DInvariantTable::surgery(&VSequence::zero(), 7);
        assert!(matches!(
            lattice_obstruction(&lam, &bad, ObstructionMode::Global),
            Err(Error::DeterminantMismatch { .. })
        ));
    }

    #[test]
    fn affine_needs_cyclic_group() {
        let klein = GramLattice::diagonal(&[2, 2]).unwrap();
        let table = DInvariantTable::surgery(&VSequence::zero(), 4);
        assert!(matches!(
            lattice_obstruction(&klein, &table, ObstructionMode::Affine),
            Err(Error::NonCyclicDiscriminant { .. })
        ));
    }

    #[test]
    fn standardness_examples() {
        let k = trefoil();
        let standard = GramLattice::diagonal(&[9, 1]).unwrap();
        let report = standardness_verdict(&k, 9, &standard).unwrap();
        assert_eq!(report.outcome, StandardnessOutcome::StandardBranch);
        assert!(!report.squarefree);

        let lam92 = crate::lens::linear_lattice(9, 2).unwrap();
        assert_eq!(lam92.gram()[0][0], BigInt::from(5));
        let report = standardness_verdict(&k, 9, &lam92).unwrap();
        assert_eq!(report.outcome, StandardnessOutcome::ObstructionFailBranch);

        let t25 = KnotModel::torus_knot(2, 5).unwrap();
        let lam114 = crate::lens::linear_lattice(11, 4).unwrap();
        let report = standardness_verdict(&t25, 11, &lam114).unwrap();
        assert_eq!(report.outcome, StandardnessOutcome::Inconclusive);
        assert!(report.squarefree);
    }

    #[test]
    fn sharpness_rank_one_lens() {
        // ⟨3⟩ against d(L(3,−1)): realized sharply
        let three = GramLattice::diagonal(&[3]).unwrap();
        let lens = LensSpace::new(3, -1).unwrap();
        let table = DInvariantTable::lens(&lens);
        assert_eq!(
            table.sorted_values(),
            vec![ratio(-1, 2), ratio(1, 6), ratio(1, 6)]
        );
        for mode in [
            ObstructionMode::Global,
            ObstructionMode::Matching,
            ObstructionMode::Affine,
        ] {
            let report = sharpness_check(&three, &table, mode).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "mode {mode:?}");
        }
    }

    #[test]
    fn sharpness_standard_fails_for_trefoil() {
        // a sharp standard filling would force the unknot
        let v = trefoil().v_sequence().unwrap();
        let reversed = DInvariantTable::surgery(&v, 5).reversed();
        let standard = GramLattice::diagonal(&[5]).unwrap();
        let report = sharpness_check(&standard, &reversed, ObstructionMode::Global).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let report = sharpness_check(&standard, &reversed, ObstructionMode::Matching).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
    }

    #[test]
    fn unknot_detection() {
        assert_eq!(
            unknot_check(&AlexanderPolynomial::one()),
            UnknotVerdict::Unknot
        );
        assert_eq!(
            unknot_check(&crate::knot::torus_alexander(2, 3).unwrap()),
            UnknotVerdict::NonTrivial
        );
        assert_eq!(
            unknot_check(&crate::knot::torus_alexander(2, 7).unwrap()),
            UnknotVerdict::NonTrivial
        );
    }

    #[test]
    fn slope_bound_reports() {
        let report = slope_bound_check(&trefoil(), 5).unwrap();
        assert!(report.nontrivial);
        assert_eq!(report.standard_sharpness, Verdict::Fail);
        assert!(report.consistent);
        assert_eq!(report.genus_bound, 7);
        assert!(report.slope_within_genus_bound);

        let t25 = KnotModel::torus_knot(2, 5).unwrap();
        let report = slope_bound_check(&t25, 11).unwrap();
        assert!(report.consistent);
        assert_eq!(report.l_upper_bound, 11);
        assert_eq!(report.genus_bound, 11);

        let report = slope_bound_check(&KnotModel::unknot(), 6).unwrap();
        assert!(!report.nontrivial);
        assert_eq!(report.standard_sharpness, Verdict::Pass);
        assert!(report.consistent);
    }
}
