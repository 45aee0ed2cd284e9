//! Knot input layer: Alexander polynomials, torsion coefficients,
//! V-sequences, and the second derivative at 1.
//!
//! For L-space knots the V-sequence is taken to be the torsion
//! coefficients of the Alexander polynomial, with slice genus equal to the
//! degree; the monotone-step, ceiling-bound, and vanishing constraints are
//! re-verified on every construction, and the tool refuses inputs that
//! break them instead of guessing.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};

/// Symmetric integer Laurent polynomial with Δ(1) = 1, stored as the
/// coefficients a_0..a_g of the non-negative exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    half: Vec<BigInt>,
}

impl AlexanderPolynomial {
    pub fn one() -> Self {
        AlexanderPolynomial {
            half: vec![BigInt::one()],
        }
    }

    /// Builds from (exponent, coefficient) pairs. Exponents may appear on
    /// either side of zero; when both signs of an exponent are present they
    /// must agree, otherwise the mirror side is implied by symmetry.
    pub fn from_pairs(pairs: &[(i64, BigInt)]) -> Result<Self> {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (m, a) in pairs {
            if let Some(previous) = map.insert(*m, a.clone()) {
                if previous != *a {
                    return Err(Error::InvalidDocument {
                        detail: format!("conflicting coefficients for exponent {m}"),
                    });
                }
            }
        }
        for (m, a) in map.iter() {
            if let Some(b) = map.get(&-m) {
                if a != b {
                    return Err(Error::AsymmetricAlexander { exponent: *m });
                }
            }
        }
        let degree = map
            .keys()
            .map(|m| m.unsigned_abs())
            .max()
            .unwrap_or(0);
        let mut half = vec![BigInt::zero(); degree as usize + 1];
        for (m, a) in map {
            let idx = m.unsigned_abs() as usize;
            if !half[idx].is_zero() && half[idx] != a {
                return Err(Error::AsymmetricAlexander { exponent: m });
            }
            half[idx] = a;
        }
        let poly = AlexanderPolynomial { half };
        poly.check_normalized()?;
        Ok(poly.trimmed())
    }

    fn trimmed(mut self) -> Self {
        while self.half.len() > 1 && self.half.last().is_some_and(Zero::is_zero) {
            self.half.pop();
        }
        self
    }

    fn check_normalized(&self) -> Result<()> {
        let mut total = self.half[0].clone();
        for a in &self.half[1..] {
            total += 2 * a;
        }
        if total.is_one() {
            Ok(())
        } else {
            Err(Error::NotNormalized { total })
        }
    }

    pub fn degree(&self) -> u64 {
        (self.half.len() - 1) as u64
    }

    pub fn coefficient(&self, m: i64) -> BigInt {
        let idx = m.unsigned_abs() as usize;
        self.half.get(idx).cloned().unwrap_or_else(BigInt::zero)
    }

    /// t_i = Σ_{j≥1} j·a_{i+j} for 0 ≤ i ≤ deg(Δ); the last entry is
    /// always zero.
    pub fn torsion_coefficients(&self) -> Vec<BigInt> {
        let g = self.half.len() - 1;
        (0..=g)
            .map(|i| {
                let mut t = BigInt::zero();
                for j in 1..=g.saturating_sub(i) {
                    t += BigInt::from(j as i64) * &self.half[i + j];
                }
                t
            })
            .collect()
    }

    /// Δ″(1) = Σ_m m(m−1)·a_m = 2·Σ_{m>0} m²·a_m.
    pub fn second_derivative_at_one(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (m, a) in self.half.iter().enumerate().skip(1) {
            total += BigInt::from(2 * (m * m) as i64) * a;
        }
        total
    }

    /// Laurent coefficient pairs for m ≥ 0, skipping zeros.
    pub fn pairs(&self) -> Vec<(i64, BigInt)> {
        self.half
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(m, a)| (m as i64, a.clone()))
            .collect()
    }
}

impl std::fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for m in (1..self.half.len()).rev() {
            let a = &self.half[m];
            if !a.is_zero() {
                terms.push(format!("{a}*t^{m}"));
            }
        }
        if !self.half[0].is_zero() {
            terms.push(self.half[0].to_string());
        }
        for m in 1..self.half.len() {
            let a = &self.half[m];
            if !a.is_zero() {
                terms.push(format!("{a}*t^-{m}"));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

/// Exact division of integer polynomials, panicking if not exact.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().expect("nonzero divisor");
    assert!(!lead.is_zero());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / lead;
        debug_assert_eq!(&c * lead, rem[k + dd]);
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + j] -= t;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "polynomial division not exact");
    quot
}

/// Alexander polynomial of the (p,q) torus knot: the symmetric
/// normalization of (t^{pq}−1)(t−1)/((t^p−1)(t^q−1)).
pub fn torus_alexander(p: u64, q: u64) -> Result<AlexanderPolynomial> {
    use num_integer::Integer;
    if p < 2 || q < 2 {
        return Err(Error::InvalidDocument {
            detail: format!("torus knot parameters must be at least 2, got ({p},{q})"),
        });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime {
            p: BigInt::from(p),
            q: BigInt::from(q),
        });
    }
    let power_minus_one = |top: usize| {
        let mut v = vec![BigInt::zero(); top + 1];
        v[0] = BigInt::from(-1);
        v[top] = BigInt::one();
        v
    };
    let pq = (p * q) as usize;
    // (t^{pq} − 1)(t − 1) = t^{pq+1} − t^{pq} − t + 1
    let mut num = vec![BigInt::zero(); pq + 2];
    num[pq + 1] = BigInt::one();
    num[pq] = BigInt::from(-1);
    num[1] = BigInt::from(-1);
    num[0] = BigInt::one();
    let step = poly_div_exact(&num, &power_minus_one(p as usize));
    let full = poly_div_exact(&step, &power_minus_one(q as usize));
    // degree (p−1)(q−1); center at half of it
    let span = ((p - 1) * (q - 1)) as usize;
    assert_eq!(full.len() - 1, span);
    let g = span / 2;
    let pairs: Vec<(i64, BigInt)> = full
        .iter()
        .enumerate()
        .map(|(m, a)| (m as i64 - g as i64, a.clone()))
        .collect();
    AlexanderPolynomial::from_pairs(&pairs)
}

/// The sequence V_0, V_1, … with its declared slice genus. Entries beyond
/// the stored list are zero. Construction re-verifies the monotone step,
/// ceiling bound, and vanishing constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSequence {
    values: Vec<u64>,
    slice_genus: u64,
}

impl VSequence {
    pub fn new(mut values: Vec<u64>, slice_genus: u64) -> Result<Self> {
        while values.last() == Some(&0) {
            values.pop();
        }
        for (i, pair) in values.windows(2).enumerate() {
            let (a, b) = (pair[0], pair[1]);
            if b > a || a > b + 1 {
                return Err(Error::VInvariantViolated {
                    detail: format!("step from V_{i}={a} to V_{}={b} is not in [V_i-1, V_i]", i + 1),
                });
            }
        }
        if let Some(&last) = values.last() {
            if last > 1 {
                return Err(Error::VInvariantViolated {
                    detail: format!(
                        "V_{}={last} cannot drop to the implicit V_{}=0",
                        values.len() - 1,
                        values.len()
                    ),
                });
            }
        }
        if values.len() as u64 > slice_genus {
            return Err(Error::VInvariantViolated {
                detail: format!(
                    "V_{} is nonzero but V_i must vanish for i >= g4 = {slice_genus}",
                    values.len() - 1
                ),
            });
        }
        for (i, &v) in values.iter().enumerate() {
            let allowed = (slice_genus - i as u64).div_ceil(2);
            if v > allowed {
                return Err(Error::VInvariantViolated {
                    detail: format!(
                        "V_{i}={v} exceeds the ceiling bound {allowed} for g4 = {slice_genus}"
                    ),
                });
            }
        }
        Ok(VSequence {
            values,
            slice_genus,
        })
    }

    pub fn zero() -> Self {
        VSequence {
            values: Vec::new(),
            slice_genus: 0,
        }
    }

    pub fn value(&self, i: u64) -> u64 {
        self.values.get(i as usize).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn slice_genus(&self) -> u64 {
        self.slice_genus
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

/// A knot as this tool sees it: a name plus whichever of the Alexander
/// polynomial and an explicit V-sequence the document provided.
#[derive(Debug, Clone)]
pub struct KnotModel {
    pub name: String,
    pub alexander: Option<AlexanderPolynomial>,
    pub genus: Option<u64>,
    pub slice_genus: u64,
    pub l_space: bool,
    explicit_v: Option<Vec<u64>>,
}

#[derive(Deserialize)]
struct KnotDocument {
    name: String,
    #[serde(default)]
    alexander: Option<Vec<(i64, i64)>>,
    slice_genus: u64,
    #[serde(default)]
    l_space: bool,
    #[serde(default)]
    v_sequence: Option<Vec<u64>>,
}

impl KnotModel {
    fn validate(self) -> Result<Self> {
        if self.explicit_v.is_none() && !(self.l_space && self.alexander.is_some()) {
            return Err(Error::MissingVData);
        }
        if self.l_space {
            if let Some(alex) = &self.alexander {
                if alex.degree() != self.slice_genus {
                    return Err(Error::SliceGenusMismatch {
                        declared: self.slice_genus,
                        degree: alex.degree(),
                    });
                }
            }
        }
        Ok(self)
    }

    /// Parses the knot JSON document format.
    pub fn parse_knot(text: &str) -> Result<Self> {
        let doc: KnotDocument = serde_json::from_str(text).map_err(|e| Error::InvalidDocument {
            detail: e.to_string(),
        })?;
        let alexander = doc
            .alexander
            .map(|pairs| {
                let pairs: Vec<(i64, BigInt)> = pairs
                    .into_iter()
                    .map(|(m, a)| (m, BigInt::from(a)))
                    .collect();
                AlexanderPolynomial::from_pairs(&pairs)
            })
            .transpose()?;
        let genus = if doc.l_space {
            alexander.as_ref().map(|a| a.degree())
        } else {
            None
        };
        KnotModel {
            name: doc.name,
            alexander,
            genus,
            slice_genus: doc.slice_genus,
            l_space: doc.l_space,
            explicit_v: doc.v_sequence,
        }
        .validate()
    }

    pub fn unknot() -> Self {
        KnotModel {
            name: "unknot".into(),
            alexander: Some(AlexanderPolynomial::one()),
            genus: Some(0),
            slice_genus: 0,
            l_space: true,
            explicit_v: None,
        }
    }

    /// L-space knot from its Alexander polynomial; slice genus is the
    /// degree.
    pub fn l_space_knot(name: &str, alexander: AlexanderPolynomial) -> Self {
        let g = alexander.degree();
        KnotModel {
            name: name.into(),
            alexander: Some(alexander),
            genus: Some(g),
            slice_genus: g,
            l_space: true,
            explicit_v: None,
        }
    }

    pub fn torus_knot(p: u64, q: u64) -> Result<Self> {
        Ok(Self::l_space_knot(
            &format!("T({p},{q})"),
            torus_alexander(p, q)?,
        ))
    }

    /// Knot known only through an explicit V-sequence.
    pub fn from_v_sequence(name: &str, values: Vec<u64>, slice_genus: u64) -> Result<Self> {
        VSequence::new(values.clone(), slice_genus)?;
        Ok(KnotModel {
            name: name.into(),
            alexander: None,
            genus: None,
            slice_genus,
            l_space: false,
            explicit_v: Some(values),
        })
    }

    fn derived_v(&self) -> Option<Result<VSequence>> {
        if !self.l_space {
            return None;
        }
        let alex = self.alexander.as_ref()?;
        let torsion = alex.torsion_coefficients();
        let mut values = Vec::with_capacity(torsion.len());
        for (i, t) in torsion.iter().enumerate() {
            if t.is_negative() {
                return Some(Err(Error::VInvariantViolated {
                    detail: format!("torsion coefficient t_{i} = {t} is negative"),
                }));
            }
            match t.to_u64() {
                Some(v) => values.push(v),
                None => {
                    return Some(Err(Error::VInvariantViolated {
                        detail: format!("torsion coefficient t_{i} = {t} does not fit u64"),
                    }))
                }
            }
        }
        Some(VSequence::new(values, alex.degree()))
    }

    /// The knot's V-sequence. An explicit sequence wins over the
    /// Alexander-derived one; see `v_mismatch_warning`.
    pub fn v_sequence(&self) -> Result<VSequence> {
        if let Some(values) = &self.explicit_v {
            return VSequence::new(values.clone(), self.slice_genus);
        }
        self.derived_v().ok_or(Error::MissingVData)?
    }

    /// Set when both an explicit and a derived V-sequence exist and they
    /// disagree; the explicit one is the one in force.
    pub fn v_mismatch_warning(&self) -> Option<String> {
        let explicit = self.explicit_v.as_ref()?;
        let derived = self.derived_v()?.ok()?;
        let explicit = VSequence::new(explicit.clone(), self.slice_genus).ok()?;
        if explicit != derived {
            Some(format!(
                "explicit V-sequence {:?} (g4={}) disagrees with the Alexander-derived {:?} (g4={}); using the explicit one",
                explicit.values(),
                explicit.slice_genus(),
                derived.values(),
                derived.slice_genus()
            ))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn torus_alexander_small() {
        let t23 = torus_alexander(2, 3).unwrap();
        assert_eq!(t23.pairs(), vec![(0, big(-1)), (1, big(1))]);
        assert_eq!(t23.degree(), 1);

        let t25 = torus_alexander(2, 5).unwrap();
        assert_eq!(t25.pairs(), vec![(0, big(1)), (1, big(-1)), (2, big(1))]);

        let t27 = torus_alexander(2, 7).unwrap();
        assert_eq!(
            t27.pairs(),
            vec![(0, big(-1)), (1, big(1)), (2, big(-1)), (3, big(1))]
        );

        assert!(torus_alexander(2, 4).is_err());
        assert!(torus_alexander(1, 5).is_err());
    }

    #[test]
    fn torsion_coefficients_examples() {
        assert_eq!(
            AlexanderPolynomial::one().torsion_coefficients(),
            vec![big(0)]
        );
        let trefoil = torus_alexander(2, 3).unwrap();
        assert_eq!(trefoil.torsion_coefficients(), vec![big(1), big(0)]);
        let t25 = torus_alexander(2, 5).unwrap();
        assert_eq!(t25.torsion_coefficients(), vec![big(1), big(1), big(0)]);
    }

    #[test]
    fn second_derivative_examples() {
        assert_eq!(AlexanderPolynomial::one().second_derivative_at_one(), big(0));
        assert_eq!(
            torus_alexander(2, 3).unwrap().second_derivative_at_one(),
            big(2)
        );
        assert_eq!(
            torus_alexander(2, 5).unwrap().second_derivative_at_one(),
            big(6)
        );
        assert_eq!(
            torus_alexander(2, 7).unwrap().second_derivative_at_one(),
            big(12)
        );
    }

    #[test]
    fn second_derivative_is_twice_total_torsion() {
        // Δ″(1) = 2·Σ_{i∈Z} t_i with t_{-i} = t_i
        for q in (3..16).step_by(2) {
            let alex = torus_alexander(2, q).unwrap();
            let torsion = alex.torsion_coefficients();
            let mut doubled = torsion[0].clone();
            for t in &torsion[1..] {
                doubled += 2 * t;
            }
            assert_eq!(alex.second_derivative_at_one(), 2 * doubled);
        }
    }

    #[test]
    fn v_sequences_of_torus_knots() {
        let unknot = KnotModel::unknot();
        let v = unknot.v_sequence().unwrap();
        assert!(v.is_zero());
        assert_eq!(v.slice_genus(), 0);

        let trefoil = KnotModel::torus_knot(2, 3).unwrap();
        let v = trefoil.v_sequence().unwrap();
        assert_eq!(v.values(), &[1]);
        assert_eq!(v.slice_genus(), 1);

        let t25 = KnotModel::torus_knot(2, 5).unwrap();
        let v = t25.v_sequence().unwrap();
        assert_eq!(v.values(), &[1, 1]);
        assert_eq!(v.slice_genus(), 2);

        // the torsion rule stays inside Rasmussen's bound for the family
        for q in (3..16).step_by(2) {
            let k = KnotModel::torus_knot(2, q).unwrap();
            k.v_sequence().unwrap();
        }
    }

    #[test]
    fn v_sequence_validation() {
        assert!(VSequence::new(vec![1], 1).is_ok());
        assert!(VSequence::new(vec![0, 1], 2).is_err()); // increasing step
        assert!(VSequence::new(vec![3, 1], 4).is_err()); // step drop of 2
        assert!(VSequence::new(vec![2], 1).is_err()); // above ceiling bound
        assert!(VSequence::new(vec![1], 0).is_err()); // nonzero past g4
        assert!(VSequence::new(vec![2, 1], 3).is_ok());
        assert_eq!(VSequence::new(vec![1, 0, 0], 1).unwrap().values(), &[1]);
    }

    #[test]
    fn parse_knot_documents() {
        let unknot = KnotModel::parse_knot(
            r#"{"name": "unknot", "alexander": [[0, 1]], "slice_genus": 0, "l_space": true}"#,
        )
        .unwrap();
        assert!(unknot.v_sequence().unwrap().is_zero());

        let trefoil = KnotModel::parse_knot(
            r#"{"name": "trefoil", "alexander": [[0, -1], [1, 1]], "slice_genus": 1, "l_space": true}"#,
        )
        .unwrap();
        assert_eq!(trefoil.v_sequence().unwrap().values(), &[1]);
        assert!(trefoil.v_mismatch_warning().is_none());

        let bad = KnotModel::parse_knot(
            r#"{"name": "bad", "alexander": [[1, 1]], "slice_genus": 1, "l_space": true}"#,
        );
        assert!(matches!(bad, Err(Error::NotNormalized { .. })));

        let missing = KnotModel::parse_knot(r#"{"name": "mystery", "slice_genus": 2}"#);
        assert!(matches!(missing, Err(Error::MissingVData)));

        let asym = AlexanderPolynomial::from_pairs(&[(1, big(1)), (-1, big(2)), (0, big(-2))]);
        assert!(matches!(asym, Err(Error::AsymmetricAlexander { .. })));

        let mismatch = KnotModel::parse_knot(
            r#"{"name": "off", "alexander": [[0, -1], [1, 1]], "slice_genus": 2, "l_space": true}"#,
        );
        assert!(matches!(mismatch, Err(Error::SliceGenusMismatch { .. })));
    }

    #[test]
    fn explicit_v_wins_with_warning() {
        let doc = r#"{"name": "tweaked", "alexander": [[0, -1], [1, 1]], "slice_genus": 1,
                      "l_space": true, "v_sequence": [0]}"#;
        let k = KnotModel::parse_knot(doc).unwrap();
        assert!(k.v_sequence().unwrap().is_zero());
        assert!(k.v_mismatch_warning().is_some());
    }
}
