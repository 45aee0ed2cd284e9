//! Exact minimization of shifted quadratic forms. Three kernels share the
//! same contract (exact minimum plus a deterministic witness):
//!
//! * a separable closed form for diagonal Gram matrices,
//! * an integer dynamic program along the chain for tridiagonal matrices
//!   with -1 off the diagonal (the linear lattices), where branch-and-bound
//!   drowns in tied minima,
//! * rational-LDL branch-and-bound (Fincke–Pohst style) for everything else.
//!
//! Both shifted problems reduce to the same normal form: with ξ = c + M·t,
//! the norm ξᵀG⁻¹ξ equals (t−τ)ᵀA(t−τ) exactly, where A = 4G⁻¹, τ = −c/2
//! for M = 2I and A = 4G, τ = −G⁻¹c/2 for M = 2G.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ldl::Ldl;
use crate::rational::{round_half_up, sqrt_ceil, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Diagonal,
    Chain,
    Dense,
}

pub fn detect_shape(gram: &[Vec<BigInt>]) -> Shape {
    let n = gram.len();
    let mut diagonal = true;
    let mut chain = n >= 2;
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    for i in 0..n {
        if gram[i][i] < two {
            chain = false;
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if !gram[i][j].is_zero() {
                diagonal = false;
            }
            if i.abs_diff(j) == 1 {
                if gram[i][j] != -&one {
                    chain = false;
                }
            } else if !gram[i][j].is_zero() {
                chain = false;
            }
        }
    }
    if diagonal {
        Shape::Diagonal
    } else if chain {
        Shape::Chain
    } else {
        Shape::Dense
    }
}

#[derive(Debug, Clone)]
pub struct MinResult {
    pub value: Rational,
    /// Minimizing vector in the shifted set, dual coordinates.
    pub witness: Vec<BigInt>,
}

/// Minimum of Σ ξ_k²/a_k over ξ_k ∈ c_k + m_k·Z, coordinate by coordinate.
/// Ties inside a coordinate keep the representative produced by
/// round-half-up reduction, matching the enumeration order of the other
/// kernels.
pub fn separable_min(diag: &[BigInt], center: &[BigInt], moduli: &[BigInt]) -> MinResult {
    let mut value = Rational::zero();
    let mut witness = Vec::with_capacity(diag.len());
    for ((a, c), m) in diag.iter().zip(center).zip(moduli) {
        let tau = -Rational::new(c.clone(), m.clone());
        let k = round_half_up(&tau);
        let best = c + m * &k;
        // the reduced representative and its two neighbours cover the minimum
        let mut chosen = best.clone();
        let mut chosen_sq = &best * &best;
        for cand in [&best + m, &best - m] {
            let sq = &cand * &cand;
            if sq < chosen_sq {
                chosen = cand;
                chosen_sq = sq;
            }
        }
        value += Rational::new(chosen_sq, a.clone());
        witness.push(chosen);
    }
    MinResult { value, witness }
}

/// Chain DP for modulus 2L on a tridiagonal Gram matrix: minimizes
/// h(t) = tᵀGt + cᵀt exactly in integer arithmetic. The search windows are
/// certified by the chain decomposition of the form
/// ΔᵀGΔ = Σ(a_i−2)Δ_i² + Δ_1² + Σ(Δ_i−Δ_{i+1})² + Δ_r², every term of
/// which is bounded by the slack of the zero vector after reduction.
pub fn chain_min(
    gram: &[Vec<BigInt>],
    gram_ldl: &Ldl,
    center: &[BigInt],
) -> MinResult {
    let n = gram.len();
    // τ solves Gτ = -c/2
    let rhs: Vec<Rational> = center
        .iter()
        .map(|c| Rational::new(-c.clone(), BigInt::from(2)))
        .collect();
    let mut tau = gram_ldl.solve(&rhs);
    // reduce so that round(τ) = 0 coordinatewise; c stays in the same coset of 2L
    let shift: Vec<BigInt> = tau.iter().map(round_half_up).collect();
    let mut c = center.to_vec();
    for i in 0..n {
        for j in 0..n {
            c[i] += 2 * &gram[i][j] * &shift[j];
        }
    }
    for i in 0..n {
        tau[i] -= Rational::from_integer(shift[i].clone());
    }
    // slack of t = 0 over the real minimum: S = -h(τ) = -cᵀτ/2
    let dot: Rational = c
        .iter()
        .zip(&tau)
        .map(|(ci, ti)| Rational::from_integer(ci.clone()) * ti)
        .sum();
    let slack = -dot / Rational::from_integer(BigInt::from(2));
    assert!(
        !slack.is_negative(),
        "reduced center has negative slack; Gram matrix not positive definite?"
    );

    let step_bound: i64 = (sqrt_ceil(&slack) + BigInt::from(1))
        .to_i64()
        .expect("chain step bound overflows i64");
    let windows: Vec<i64> = (0..n)
        .map(|i| {
            let end_dist = BigInt::from(std::cmp::min(i + 1, n - i) as i64);
            let w: BigInt =
                sqrt_ceil(&(Rational::from_integer(&end_dist * &end_dist) * &slack)) + 1;
            w.to_i64().expect("chain window overflows i64")
        })
        .collect();
    let a: Vec<i128> = (0..n)
        .map(|i| gram[i][i].to_i128().expect("chain diagonal overflows i128"))
        .collect();
    let b: Vec<i128> = c
        .iter()
        .map(|x| x.to_i128().expect("chain center overflows i128"))
        .collect();

    const UNREACHED: i128 = i128::MAX / 4;
    let width = |i: usize| (2 * windows[i] + 1) as usize;
    let mut layer: Vec<i128> = (0..width(0))
        .map(|idx| {
            let x = (idx as i64 - windows[0]) as i128;
            a[0] * x * x + b[0] * x
        })
        .collect();
    // predecessor index per level per state
    let mut preds: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 1..n {
        let mut next = vec![UNREACHED; width(i)];
        let mut pred = vec![0u32; width(i)];
        for (yidx, slot) in next.iter_mut().enumerate() {
            let y = (yidx as i64 - windows[i]) as i128;
            let lo = std::cmp::max(-windows[i - 1], yidx as i64 - windows[i] - step_bound);
            let hi = std::cmp::min(windows[i - 1], yidx as i64 - windows[i] + step_bound);
            let mut best = UNREACHED;
            let mut best_x = 0u32;
            let mut x = lo;
            while x <= hi {
                let xidx = (x + windows[i - 1]) as usize;
                let f = layer[xidx];
                if f < UNREACHED {
                    let v = f - 2 * (x as i128) * y;
                    if v < best {
                        best = v;
                        best_x = xidx as u32;
                    }
                }
                x += 1;
            }
            if best < UNREACHED {
                *slot = best + a[i] * y * y + b[i] * y;
                pred[yidx] = best_x;
            }
        }
        preds.push(pred);
        layer = next;
    }
    let (mut idx, h_min) = layer
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, v)| (i, *v))
        .expect("chain DP produced no states");
    let mut t = vec![0i64; n];
    for i in (0..n).rev() {
        t[i] = idx as i64 - windows[i];
        if i > 0 {
            idx = preds[i - 1][idx] as usize;
        }
    }
    // ξ = c + 2Gt, norm = cᵀG⁻¹c + 4h = 4(S + h)
    let witness: Vec<BigInt> = (0..n)
        .map(|i| {
            let mut xi = c[i].clone();
            for j in 0..n {
                xi += 2 * &gram[i][j] * BigInt::from(t[j]);
            }
            xi
        })
        .collect();
    let value = (slack + Rational::from_integer(BigInt::from(h_min)))
        * Rational::from_integer(BigInt::from(4));
    assert!(!value.is_negative(), "chain minimum came out negative");
    MinResult { value, witness }
}

/// Branch-and-bound over the exact LDL^T of a positive definite rational
/// form: minimizes (t−τ)ᵀA(t−τ) over integer t. Candidates at each level
/// zig-zag outward from the rounded center, so the first witness found is
/// reproducible; later exact ties only replace it if the mapped vector is
/// lexicographically greater.
pub struct BranchBound<'a> {
    pub ldl: &'a Ldl,
    pub tau: &'a [Rational],
    /// Maps a solution t to the vector witnesses are compared by.
    pub map: &'a dyn Fn(&[BigInt]) -> Vec<BigInt>,
    pub exclude_zero: bool,
}

struct SearchState {
    t: Vec<BigInt>,
    bound: Rational,
    best: Option<(Rational, Vec<BigInt>, Vec<BigInt>)>, // (value, t, mapped)
    exclude_zero: bool,
}

impl<'a> BranchBound<'a> {
    /// `initial` seeds the inclusive search radius, optionally with a witness
    /// already known to attain it.
    pub fn minimize(
        &self,
        initial_bound: Rational,
        initial_witness: Option<Vec<BigInt>>,
    ) -> Option<(Rational, Vec<BigInt>)> {
        let n = self.tau.len();
        let mut state = SearchState {
            t: vec![BigInt::zero(); n],
            bound: initial_bound.clone(),
            best: initial_witness.map(|t| {
                let mapped = (self.map)(&t);
                (initial_bound, t, mapped)
            }),
            exclude_zero: self.exclude_zero,
        };
        if n > 0 {
            self.descend(n - 1, &Rational::zero(), &mut state);
        }
        state.best.map(|(v, t, _)| (v, t))
    }

    fn descend(&self, level: usize, partial: &Rational, state: &mut SearchState) {
        // center of this level given the choices above it
        let mut offset = Rational::zero();
        for k in level + 1..self.tau.len() {
            offset += &self.ldl.lower[k][level]
                * (Rational::from_integer(state.t[k].clone()) - &self.tau[k]);
        }
        let center = &self.tau[level] - offset;
        let start = round_half_up(&center);
        let frac_nonneg = center >= Rational::from_integer(start.clone());
        let pivot = &self.ldl.pivots[level];

        let mut up = start.clone();
        let mut down: BigInt = &start - 1;
        let mut up_alive = true;
        let mut down_alive = true;
        let mut toward_up = true; // `start` itself goes first
        while up_alive || down_alive {
            let use_up = match (up_alive, down_alive) {
                (true, false) => true,
                (false, true) => false,
                _ => toward_up,
            };
            let cand = if use_up { up.clone() } else { down.clone() };
            let y = Rational::from_integer(cand.clone()) - &center;
            let contribution = pivot * &y * &y;
            let total = partial + &contribution;
            if total > state.bound {
                if use_up {
                    up_alive = false;
                } else {
                    down_alive = false;
                }
            } else {
                state.t[level] = cand;
                if level == 0 {
                    self.offer(&total, state);
                } else {
                    self.descend(level - 1, &total, state);
                }
                if use_up {
                    up += 1;
                } else {
                    down -= 1;
                }
            }
            toward_up = if use_up { !frac_nonneg } else { frac_nonneg };
        }
    }

    fn offer(&self, value: &Rational, state: &mut SearchState) {
        if state.exclude_zero && state.t.iter().all(Zero::is_zero) {
            return;
        }
        let improved = match &state.best {
            None => true,
            Some((best_value, _, best_mapped)) => {
                if value < best_value {
                    true
                } else if value == best_value {
                    let mapped = (self.map)(&state.t);
                    mapped > *best_mapped
                } else {
                    false
                }
            }
        };
        if improved {
            let mapped = (self.map)(&state.t);
            state.bound = value.clone();
            state.best = Some((value.clone(), state.t.clone(), mapped));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ldl;
    use crate::rational::{int, ratio};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rows(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| big(r)).collect()
    }

    #[test]
    fn shapes() {
        assert_eq!(detect_shape(&rows(&[&[3]])), Shape::Diagonal);
        assert_eq!(detect_shape(&rows(&[&[2, -1], &[-1, 2]])), Shape::Chain);
        assert_eq!(detect_shape(&rows(&[&[3, -1], &[-1, 4]])), Shape::Chain);
        assert_eq!(detect_shape(&rows(&[&[1, -1], &[-1, 4]])), Shape::Dense);
        assert_eq!(detect_shape(&rows(&[&[3, 1], &[1, 4]])), Shape::Dense);
        assert_eq!(
            detect_shape(&rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])),
            Shape::Dense
        );
    }

    #[test]
    fn separable_prefers_positive_residue() {
        // odd class of <3>: ±1 tie resolves to +1
        let r = separable_min(&big(&[3]), &big(&[1]), &big(&[2]));
        assert_eq!(r.value, ratio(1, 3));
        assert_eq!(r.witness, big(&[1]));
        // coset ξ ≡ 3 mod 6 of <3>
        let r = separable_min(&big(&[3]), &big(&[3]), &big(&[6]));
        assert_eq!(r.value, int(3));
        assert_eq!(r.witness, big(&[3]));
        // all-odd vectors of <1>^2
        let r = separable_min(&big(&[1, 1]), &big(&[1, 1]), &big(&[2, 2]));
        assert_eq!(r.value, int(2));
        assert_eq!(r.witness, big(&[1, 1]));
    }

    #[test]
    fn chain_matches_direct_computation() {
        // A_2 chain, coset of 2L through the characteristic center (2,2)
        let gram = rows(&[&[2, -1], &[-1, 2]]);
        let l = ldl::decompose(
            &gram
                .iter()
                .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let r = chain_min(&gram, &l, &big(&[2, 2]));
        // ξ = (0,0) is characteristic for an even lattice
        assert_eq!(r.value, int(0));
        assert_eq!(r.witness, big(&[0, 0]));
    }

    #[test]
    fn branch_bound_finds_unit_vectors() {
        // x² + 2xy + 4y² has (±1, 0) as its only unit vectors
        let a = vec![vec![int(1), int(1)], vec![int(1), int(4)]];
        let l = ldl::decompose(&a).unwrap();
        let tau = vec![int(0), int(0)];
        let identity = |t: &[BigInt]| t.to_vec();
        let bb = BranchBound {
            ldl: &l,
            tau: &tau,
            map: &identity,
            exclude_zero: true,
        };
        let (value, witness) = bb.minimize(int(1), None).unwrap();
        assert_eq!(value, int(1));
        assert_eq!(witness.iter().map(|x| x * x).sum::<BigInt>(), BigInt::from(1));
    }

    #[test]
    fn branch_bound_none_when_radius_too_small() {
        let a = vec![vec![int(3), int(-1)], vec![int(-1), int(4)]];
        let l = ldl::decompose(&a).unwrap();
        let tau = vec![int(0), int(0)];
        let identity = |t: &[BigInt]| t.to_vec();
        let bb = BranchBound {
            ldl: &l,
            tau: &tau,
            map: &identity,
            exclude_zero: true,
        };
        assert!(bb.minimize(int(1), None).is_none());
    }
}
