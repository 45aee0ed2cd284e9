//! Lens spaces: negative continued fractions, the linear lattices Λ(p,q),
//! and exact correction terms.
//!
//! Orientation bookkeeping lives here and nowhere else. L(p,q) is the p/q
//! surgery on the unknot; a reversed orientation means L(p,−q) = L(p,p−q),
//! whose correction terms are the negatives of the standard ones up to the
//! conjugation relabeling of spin-c indices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::GramLattice;
use crate::rational::Rational;

/// Coefficients of r = a_1 − 1/(a_2 − 1/(…)). Canonical expansions of p/q
/// with p > q ≥ 1 have every a_i ≥ 2; the expansion of 1/n is [1,2,…,2]
/// with n−1 twos.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegContinuedFraction {
    coefficients: Vec<i64>,
}

impl NegContinuedFraction {
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn evaluate(&self) -> Rational {
        let mut value = Rational::zero();
        for &a in self.coefficients.iter().rev() {
            let a = Rational::from_integer(BigInt::from(a));
            if value.is_zero() {
                value = a;
            } else {
                value = a - value.recip();
            }
        }
        value
    }
}

fn ensure_coprime(p: u64, q: u64) -> Result<()> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime {
            p: BigInt::from(p),
            q: BigInt::from(q),
        });
    }
    Ok(())
}

/// Ceiling-algorithm expansion of p/q as a negative continued fraction.
pub fn neg_continued_fraction(p: u64, q: u64) -> Result<NegContinuedFraction> {
    if p == 0 || q == 0 {
        return Err(Error::NotCoprime {
            p: BigInt::from(p),
            q: BigInt::from(q),
        });
    }
    ensure_coprime(p, q)?;
    let mut coefficients = Vec::new();
    let (mut p, mut q) = (p as i64, q as i64);
    loop {
        let a = (p + q - 1).div_euclid(q); // ceil(p/q) for positive p, q
        coefficients.push(a);
        let r = a * q - p; // in [0, q)
        if r == 0 {
            break;
        }
        p = q;
        q = r;
    }
    Ok(NegContinuedFraction { coefficients })
}

/// The linear lattice Λ(p,q): tridiagonal Gram matrix with the continued
/// fraction coefficients on the diagonal and −1 off it. Its determinant
/// is p.
pub fn linear_lattice(p: u64, q: u64) -> Result<GramLattice> {
    if p <= q || q == 0 {
        return Err(Error::InvalidDocument {
            detail: format!("linear lattice needs p > q >= 1, got ({p},{q})"),
        });
    }
    let cf = neg_continued_fraction(p, q)?;
    let n = cf.len();
    let mut gram = vec![vec![BigInt::zero(); n]; n];
    for (i, &a) in cf.coefficients().iter().enumerate() {
        gram[i][i] = BigInt::from(a);
        if i + 1 < n {
            gram[i][i + 1] = BigInt::from(-1);
            gram[i + 1][i] = BigInt::from(-1);
        }
    }
    let lattice = GramLattice::new(gram)?;
    debug_assert_eq!(*lattice.determinant(), BigInt::from(p));
    Ok(lattice)
}

/// d(L(n,1), i) = ((2i−n)² − n) / 4n.
pub fn d_lens_n1(n: u64, i: u64) -> Result<Rational> {
    if i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            modulus: n,
        });
    }
    let n = BigInt::from(n);
    let i = BigInt::from(i);
    let top = &i * BigInt::from(2) - &n;
    Ok(Rational::new(&top * &top - &n, BigInt::from(4) * n))
}

/// Correction term d(L(p,q), i) by the standard recursion
/// d(L(p,q),i) = ((2i+1−p−q)² − pq)/(4pq) − d(L(q, p mod q), i mod q),
/// grounded at d(L(1,0),0) = 0. Any coprime positive pair is accepted;
/// the labels are the ones the surgery formula uses.
pub fn d_lens(p: u64, q: u64, i: u64) -> Result<Rational> {
    if p == 0 || q == 0 {
        return Err(Error::NotCoprime {
            p: BigInt::from(p),
            q: BigInt::from(q),
        });
    }
    ensure_coprime(p, q)?;
    if i >= p {
        return Err(Error::IndexOutOfRange {
            index: i,
            modulus: p,
        });
    }
    let value = d_lens_recursive(p, q, i);
    // every correction term of L(p,q) lies in (1/4p)·Z
    let four_p = Rational::new(BigInt::from(1), BigInt::from(4 * p));
    assert!(
        crate::rational::divides(&four_p, &value),
        "denominator of d(L({p},{q}),{i}) = {value} does not divide 4p"
    );
    Ok(value)
}

fn d_lens_recursive(p: u64, q: u64, i: u64) -> Rational {
    if p == 1 {
        return Rational::zero();
    }
    let pq = BigInt::from(p) * BigInt::from(q);
    let top = BigInt::from(2 * i as i64 + 1) - BigInt::from(p) - BigInt::from(q);
    let head = Rational::new(&top * &top - &pq, BigInt::from(4) * pq);
    let (p2, q2, i2) = (q, p % q, i % q);
    if q2 == 0 {
        // q = 1: tail is d(L(1,0),0) = 0
        debug_assert_eq!(p2, 1);
        head
    } else {
        head - d_lens_recursive(p2, q2, i2)
    }
}

/// Spin-c conjugation on the index set of L(p,q): i ↦ (p+q−1−i) mod p.
/// Correction terms are invariant under it.
pub fn conjugate_index(p: u64, q: u64, i: u64) -> u64 {
    debug_assert!(q >= 1 && i < p);
    (p + q - 1 - i) % p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Standard,
    Reversed,
}

/// A lens space with normalized parameters 0 < q < p (p = 1 for the three
/// sphere) and an orientation flag. Reversal negates correction terms and
/// conjugates the index labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensSpace {
    p: u64,
    q: u64,
    orientation: Orientation,
}

impl LensSpace {
    /// Normalizes q modulo p into (0, p); q may be negative or exceed p, so
    /// L(n,−1) arrives as L(n, n−1) with standard orientation.
    pub fn new(p: u64, q: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::NotCoprime {
                p: BigInt::from(p),
                q: BigInt::from(q),
            });
        }
        let q_norm = q.rem_euclid(p as i64) as u64;
        if p == 1 {
            return Ok(LensSpace {
                p: 1,
                q: 0,
                orientation: Orientation::Standard,
            });
        }
        if q_norm == 0 || p.gcd(&q_norm) != 1 {
            return Err(Error::NotCoprime {
                p: BigInt::from(p),
                q: BigInt::from(q),
            });
        }
        Ok(LensSpace {
            p,
            q: q_norm,
            orientation: Orientation::Standard,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn reversed(&self) -> LensSpace {
        LensSpace {
            p: self.p,
            q: self.q,
            orientation: match self.orientation {
                Orientation::Standard => Orientation::Reversed,
                Orientation::Reversed => Orientation::Standard,
            },
        }
    }

    pub fn conjugate_index(&self, i: u64) -> u64 {
        if self.p == 1 {
            return 0;
        }
        conjugate_index(self.p, self.q, i)
    }

    pub fn correction_term(&self, i: u64) -> Result<Rational> {
        if self.p == 1 {
            return if i == 0 {
                Ok(Rational::zero())
            } else {
                Err(Error::IndexOutOfRange {
                    index: i,
                    modulus: 1,
                })
            };
        }
        match self.orientation {
            Orientation::Standard => d_lens(self.p, self.q, i),
            Orientation::Reversed => {
                let d = d_lens(self.p, self.q, self.conjugate_index(i))?;
                Ok(-d)
            }
        }
    }

    pub fn correction_terms(&self) -> Vec<Rational> {
        (0..self.p)
            .map(|i| self.correction_term(i).expect("index in range"))
            .collect()
    }
}

impl std::fmt::Display for LensSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.orientation {
            Orientation::Standard => write!(f, "L({},{})", self.p, self.q),
            Orientation::Reversed => write!(f, "-L({},{})", self.p, self.q),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn expansions() {
        assert_eq!(neg_continued_fraction(3, 1).unwrap().coefficients(), &[3]);
        assert_eq!(
            neg_continued_fraction(1, 3).unwrap().coefficients(),
            &[1, 2, 2]
        );
        assert_eq!(
            neg_continued_fraction(11, 4).unwrap().coefficients(),
            &[3, 4]
        );
        assert!(neg_continued_fraction(4, 2).is_err());
    }

    #[test]
    fn expansion_of_reciprocal_is_one_then_twos() {
        for n in 2..12u64 {
            let cf = neg_continued_fraction(1, n).unwrap();
            let mut expected = vec![1i64];
            expected.extend(std::iter::repeat_n(2, n as usize - 1));
            assert_eq!(cf.coefficients(), &expected[..]);
            assert_eq!(cf.evaluate(), Rational::new(BigInt::from(1), BigInt::from(n)));
        }
    }

    #[test]
    fn round_trip_evaluation() {
        for p in 1..40u64 {
            for q in 1..40u64 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let cf = neg_continued_fraction(p, q).unwrap();
                assert_eq!(
                    cf.evaluate(),
                    Rational::new(BigInt::from(p), BigInt::from(q)),
                    "expansion of {p}/{q}"
                );
            }
        }
    }

    #[test]
    fn linear_lattices() {
        let l31 = linear_lattice(3, 1).unwrap();
        assert_eq!(l31.gram(), &[vec![BigInt::from(3)]]);

        let l114 = linear_lattice(11, 4).unwrap();
        assert_eq!(l114.rank(), 2);
        assert_eq!(l114.gram()[0][0], BigInt::from(3));
        assert_eq!(l114.gram()[1][1], BigInt::from(4));
        assert_eq!(l114.gram()[0][1], BigInt::from(-1));
        assert_eq!(*l114.determinant(), BigInt::from(11));

        for n in 2..12 {
            let l = linear_lattice(n, 1).unwrap();
            assert_eq!(l.gram(), &[vec![BigInt::from(n as i64)]]);
        }
        assert!(linear_lattice(4, 4).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(d_lens_n1(3, 0).unwrap(), ratio(1, 2));
        assert_eq!(d_lens_n1(3, 1).unwrap(), ratio(-1, 6));
        assert_eq!(d_lens_n1(8, 4).unwrap(), ratio(-1, 4));
        assert!(d_lens_n1(3, 3).is_err());
    }

    #[test]
    fn recursion_agrees_with_closed_form_small() {
        for n in 1..40u64 {
            for i in 0..n {
                assert_eq!(d_lens(n, 1, i).unwrap(), d_lens_n1(n, i).unwrap());
            }
        }
    }

    #[test]
    fn base_cases() {
        assert_eq!(d_lens(1, 1, 0).unwrap(), int(0));
        assert!(d_lens(1, 1, 1).is_err());
        assert!(d_lens(6, 4, 0).is_err());
    }

    #[test]
    fn orientation_reversal_negates_the_multiset() {
        // {d(L(3,2), i)} = {1/6, 1/6, -1/2} = -{d(L(3,1), i)}
        let mut reversed: Vec<Rational> =
            (0..3).map(|i| d_lens(3, 2, i).unwrap()).collect();
        reversed.sort();
        let mut negated: Vec<Rational> =
            (0..3).map(|i| -d_lens(3, 1, i).unwrap()).collect();
        negated.sort();
        assert_eq!(reversed, negated);
        assert_eq!(reversed, vec![ratio(-1, 2), ratio(1, 6), ratio(1, 6)]);
    }

    #[test]
    fn conjugation_symmetry() {
        for p in 2..25u64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for i in 0..p {
                    let j = conjugate_index(p, q, i);
                    assert_eq!(
                        d_lens(p, q, i).unwrap(),
                        d_lens(p, q, j).unwrap(),
                        "conjugation failed for L({p},{q}) at {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn lens_space_normalization() {
        let l = LensSpace::new(3, -1).unwrap();
        assert_eq!((l.p(), l.q()), (3, 2));
        let mut values = l.correction_terms();
        values.sort();
        assert_eq!(values, vec![ratio(-1, 2), ratio(1, 6), ratio(1, 6)]);

        let s3 = LensSpace::new(1, 0).unwrap();
        assert_eq!(s3.correction_terms(), vec![int(0)]);

        assert!(LensSpace::new(4, 2).is_err());
    }

    #[test]
    fn reversal_is_negation_with_conjugation() {
        let l = LensSpace::new(7, 2).unwrap();
        let r = l.reversed();
        let mut direct: Vec<Rational> = l.correction_terms().iter().map(|d| -d).collect();
        let mut flipped = r.correction_terms();
        direct.sort();
        flipped.sort();
        assert_eq!(direct, flipped);
        assert_eq!(r.reversed(), l);
    }
}
