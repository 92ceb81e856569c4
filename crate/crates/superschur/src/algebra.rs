//! The free supercommutative ring in even generators `x₁, x₂, …` and odd
//! generators `θ₁, θ₂, …` over exact rationals, together with its scalar
//! product and basic derivations.
//!
//! Canonical monomial form: θ-factors in strictly increasing index order
//! (reordering signs are absorbed into coefficients, `θ_k² = 0`), x-factors
//! as a non-increasing index multiset.  The bidegree of a monomial counts
//! `x_k` as `k` and `θ_k` as `k−1` toward the total degree; the fermionic
//! degree is the number of θ-factors.
//!
//! The scalar product is defined directly on canonical monomials:
//!
//! ```text
//! ⟨θ_S x_λ, θ_T x_μ⟩ = δ_{S,T} δ_{λ,μ} (−1)^binom(|S|,2) |Aut(λ)| / Π λ_i
//! ```
//!
//! It is symmetric and block-diagonal across bidegrees, and it reproduces
//! the signed weight `𝗓_Λ` on the power-sum superbasis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::superpartition::aut_order;

/// Exact rational coefficient type used everywhere.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Grading key `(total degree, fermionic degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub total: u32,
    pub fermionic: u32,
}

impl Bidegree {
    pub fn new(total: u32, fermionic: u32) -> Self {
        Self { total, fermionic }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.total, self.fermionic)
    }
}

/// A canonical product of θ- and x-generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    /// Strictly increasing θ-indices.
    thetas: Vec<u32>,
    /// Non-increasing x-indices with multiplicity.
    xs: Vec<u32>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        Self {
            thetas: Vec::new(),
            xs: Vec::new(),
        }
    }

    /// Build from raw parts; panics if the invariants are violated.
    pub fn new(thetas: Vec<u32>, xs: Vec<u32>) -> Self {
        assert!(
            thetas.windows(2).all(|w| w[0] < w[1]) && thetas.iter().all(|&t| t >= 1),
            "theta indices must be strictly increasing and positive"
        );
        assert!(
            xs.windows(2).all(|w| w[0] >= w[1]) && xs.iter().all(|&x| x >= 1),
            "x indices must be non-increasing and positive"
        );
        Self { thetas, xs }
    }

    pub fn x(k: u32) -> Self {
        Self::new(vec![], vec![k])
    }

    pub fn theta(k: u32) -> Self {
        Self::new(vec![k], vec![])
    }

    pub fn thetas(&self) -> &[u32] {
        &self.thetas
    }

    pub fn xs(&self) -> &[u32] {
        &self.xs
    }

    pub fn bidegree(&self) -> Bidegree {
        let total: u32 = self.xs.iter().sum::<u32>()
            + self.thetas.iter().map(|&t| t - 1).sum::<u32>();
        Bidegree::new(total, self.thetas.len() as u32)
    }

    /// Total degree carried by the x-part alone.
    pub fn x_degree(&self) -> u32 {
        self.xs.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.thetas.is_empty() && self.xs.is_empty()
    }

    /// Product of two canonical monomials: `None` when a θ-index repeats,
    /// otherwise the merged monomial and the parity sign of the θ-merge.
    pub fn mul(&self, other: &Self) -> Option<(Self, i8)> {
        let mut inversions = 0usize;
        let mut thetas = Vec::with_capacity(self.thetas.len() + other.thetas.len());
        let (mut i, mut j) = (0, 0);
        while i < self.thetas.len() && j < other.thetas.len() {
            match self.thetas[i].cmp(&other.thetas[j]) {
                Ordering::Less => {
                    thetas.push(self.thetas[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // other's θ passes over the remaining θ's of self
                    inversions += self.thetas.len() - i;
                    thetas.push(other.thetas[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        thetas.extend_from_slice(&self.thetas[i..]);
        thetas.extend_from_slice(&other.thetas[j..]);

        let mut xs = self.xs.clone();
        xs.extend_from_slice(&other.xs);
        xs.sort_unstable_by(|a, b| b.cmp(a));

        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((Self { thetas, xs }, sign))
    }

    /// Diagonal norm `⟨μ, μ⟩ = (−1)^binom(m,2) |Aut(xs)| / Π xs`.
    pub fn norm(&self) -> Rat {
        let m = self.thetas.len();
        let mut value = aut_order(&self.xs);
        for &p in &self.xs {
            value /= rat_int(p as i64);
        }
        if (m * m.saturating_sub(1) / 2) % 2 == 1 {
            value = -value;
        }
        value
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SuperMonomial {
    /// Canonical term order: by bidegree, then lexicographically larger
    /// θ-set first, then lexicographically larger x-multiset first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.bidegree()
            .cmp(&other.bidegree())
            .then_with(|| lex_desc(&self.thetas, &other.thetas))
            .then_with(|| lex_desc(&self.xs, &other.xs))
    }
}

fn lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut factors: Vec<String> = self.thetas.iter().map(|t| format!("t{t}")).collect();
        let mut i = 0;
        let mut ascending = self.xs.clone();
        ascending.reverse();
        while i < ascending.len() {
            let k = ascending[i];
            let mut count = 1;
            while i + count < ascending.len() && ascending[i + count] == k {
                count += 1;
            }
            if count == 1 {
                factors.push(format!("x{k}"));
            } else {
                factors.push(format!("x{k}^{count}"));
            }
            i += count;
        }
        write!(f, "{}", factors.join("*"))
    }
}

/// A finite formal sum of canonical monomials with nonzero exact rational
/// coefficients.  The zero polynomial is the empty sum.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuperPolynomial {
    terms: BTreeMap<SuperMonomial, Rat>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(SuperMonomial::one(), Rat::one())
    }

    pub fn monomial(mono: SuperMonomial, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Self { terms }
    }

    pub fn x(k: u32) -> Self {
        Self::monomial(SuperMonomial::x(k), Rat::one())
    }

    pub fn theta(k: u32) -> Self {
        Self::monomial(SuperMonomial::theta(k), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &SuperMonomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, mono: SuperMonomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Largest x-degree over the terms; 0 for the zero polynomial.
    pub fn max_x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x_degree()).max().unwrap_or(0)
    }

    /// Bidegrees present in the support.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut seen: Vec<Bidegree> = Vec::new();
        for mono in self.terms.keys() {
            let d = mono.bidegree();
            if !seen.contains(&d) {
                seen.push(d);
            }
        }
        seen.sort();
        seen
    }

    /// The homogeneous component of the given bidegree.
    pub fn component(&self, degree: Bidegree) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into homogeneous components keyed by bidegree.
    pub fn components(&self) -> BTreeMap<Bidegree, Self> {
        let mut out: BTreeMap<Bidegree, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// `Some(degree)` when the polynomial is homogeneous (zero counts as
    /// homogeneous of no degree).
    pub fn homogeneous_bidegree(&self) -> Option<Bidegree> {
        let mut iter = self.terms.keys();
        let first = iter.next()?.bidegree();
        iter.all(|m| m.bidegree() == first).then_some(first)
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((mono, sign)) = ma.mul(mb) {
                    let mut coeff = ca * cb;
                    if sign < 0 {
                        coeff = -coeff;
                    }
                    out.add_term(mono, coeff);
                }
            }
        }
        out
    }

    /// Symmetric scalar product, diagonal on canonical monomials.
    pub fn scalar_product(&self, other: &Self) -> Rat {
        // iterate over the smaller support
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut total = Rat::zero();
        for (mono, c) in &small.terms {
            if let Some(d) = large.terms.get(mono) {
                total += c * d * mono.norm();
            }
        }
        total
    }

    /// Even derivation `∂_{x_k}`.
    pub fn partial_x(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (mono, coeff) in &self.terms {
            let mult = mono.xs.iter().filter(|&&x| x == k).count();
            if mult == 0 {
                continue;
            }
            let mut xs = mono.xs.clone();
            let pos = xs.iter().position(|&x| x == k).unwrap();
            xs.remove(pos);
            out.add_term(
                SuperMonomial {
                    thetas: mono.thetas.clone(),
                    xs,
                },
                coeff * rat_int(mult as i64),
            );
        }
        out
    }

    /// Odd left derivation `∂_{θ_k}`: a θ-factor passed over flips the sign.
    pub fn partial_theta(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (mono, coeff) in &self.terms {
            if let Some(pos) = mono.thetas.iter().position(|&t| t == k) {
                let mut thetas = mono.thetas.clone();
                thetas.remove(pos);
                let mut c = coeff.clone();
                if pos % 2 == 1 {
                    c = -c;
                }
                out.add_term(
                    SuperMonomial {
                        thetas,
                        xs: mono.xs.clone(),
                    },
                    c,
                );
            }
        }
        out
    }

    /// Renders the canonical text form, e.g. `-1 t4 | 1 t1*x3`.
    pub fn render_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(mono, coeff)| {
                if mono.is_one() {
                    format!("{coeff}")
                } else {
                    format!("{coeff} {mono}")
                }
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// JSON term list `[{"coeff":"p/q","theta":[…],"x":[…]}, …]`.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(mono, coeff)| TermJson {
                coeff: coeff.to_string(),
                theta: mono.thetas.clone(),
                x: mono.xs.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<Self, TermParseError> {
        let mut out = Self::zero();
        for term in terms {
            let coeff: Rat = term
                .coeff
                .parse()
                .map_err(|_| TermParseError::BadCoefficient(term.coeff.clone()))?;
            if term.theta.windows(2).any(|w| w[0] >= w[1]) || term.theta.contains(&0) {
                return Err(TermParseError::BadThetaIndices(term.theta.clone()));
            }
            if term.x.windows(2).any(|w| w[0] < w[1]) || term.x.contains(&0) {
                return Err(TermParseError::BadXIndices(term.x.clone()));
            }
            out.add_term(
                SuperMonomial {
                    thetas: term.theta.clone(),
                    xs: term.x.clone(),
                },
                coeff,
            );
        }
        Ok(out)
    }
}

/// Serialized term of a [`SuperPolynomial`].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub theta: Vec<u32>,
    pub x: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermParseError {
    #[error("invalid rational coefficient {0:?}")]
    BadCoefficient(String),
    #[error("theta indices must be strictly increasing and positive: {0:?}")]
    BadThetaIndices(Vec<u32>),
    #[error("x indices must be non-increasing and positive: {0:?}")]
    BadXIndices(Vec<u32>),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("even adjoint requires an input without theta content")]
pub struct OddInputRejected;

/// Substitutes `x_k ↦ (1/k)∂_{x_k}` in `f_even` and applies the resulting
/// differential operator to `g`.  This realizes `e_r^⊥` and `h_s^⊥`.
pub fn apply_even_adjoint(
    f_even: &SuperPolynomial,
    g: &SuperPolynomial,
) -> Result<SuperPolynomial, OddInputRejected> {
    if f_even.terms.keys().any(|m| !m.thetas.is_empty()) {
        return Err(OddInputRejected);
    }
    let mut out = SuperPolynomial::zero();
    for (mono, coeff) in &f_even.terms {
        let mut part = g.clone();
        let mut scale = coeff.clone();
        for &k in &mono.xs {
            part = part.partial_x(k);
            scale /= rat_int(k as i64);
            if part.is_zero() {
                break;
            }
        }
        out += part.scale(&scale);
    }
    Ok(out)
}

/// All canonical monomials of the given bidegree, in canonical order.
pub fn monomials_of_bidegree(degree: Bidegree) -> Vec<SuperMonomial> {
    let mut out = Vec::new();
    let m = degree.fermionic as usize;
    for thetas in strict_theta_sets(degree.total, m) {
        let used: u32 = thetas.iter().map(|&t| t - 1).sum();
        let remaining = degree.total - used;
        for xs in crate::superpartition::partitions_of(remaining) {
            out.push(SuperMonomial {
                thetas: thetas.clone(),
                xs,
            });
        }
    }
    out.sort();
    out
}

/// Strictly increasing θ-index sets of size `m` with total degree ≤ `budget`.
fn strict_theta_sets(budget: u32, m: usize) -> Vec<Vec<u32>> {
    fn rec(budget: i64, slots: usize, min_next: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut t = min_next;
        loop {
            // remaining slots cost at least (t−1)+t+(t+1)+…
            let min_cost: i64 = (0..slots as i64).map(|i| (t as i64 - 1) + i).sum();
            if min_cost > budget {
                break;
            }
            prefix.push(t);
            rec(budget - (t as i64 - 1), slots - 1, t + 1, prefix, out);
            prefix.pop();
            t += 1;
        }
    }
    let mut out = Vec::new();
    rec(budget as i64, m, 1, &mut Vec::new(), &mut out);
    out
}

impl Add for SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(mut self, rhs: SuperPolynomial) -> SuperPolynomial {
        self += rhs;
        self
    }
}

impl AddAssign for SuperPolynomial {
    fn add_assign(&mut self, rhs: SuperPolynomial) {
        for (mono, coeff) in rhs.terms {
            self.add_term(mono, coeff);
        }
    }
}

impl AddAssign<&SuperPolynomial> for SuperPolynomial {
    fn add_assign(&mut self, rhs: &SuperPolynomial) {
        for (mono, coeff) in &rhs.terms {
            self.add_term(mono.clone(), coeff.clone());
        }
    }
}

impl Sub for SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(mut self, rhs: SuperPolynomial) -> SuperPolynomial {
        self -= rhs;
        self
    }
}

impl SubAssign for SuperPolynomial {
    fn sub_assign(&mut self, rhs: SuperPolynomial) {
        for (mono, coeff) in rhs.terms {
            self.add_term(mono, -coeff);
        }
    }
}

impl Neg for SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        SuperPolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn theta(k: u32) -> SuperPolynomial {
        SuperPolynomial::theta(k)
    }

    fn x(k: u32) -> SuperPolynomial {
        SuperPolynomial::x(k)
    }

    #[test]
    fn nilpotency_and_anticommutation() {
        assert!(theta(1).mul(&theta(1)).is_zero());
        let t2t1 = theta(2).mul(&theta(1));
        let t1t2 = theta(1).mul(&theta(2));
        assert_eq!(t2t1, -t1t2);
    }

    #[test]
    fn merge_sign_past_even_factor() {
        // (θ₁x₂)·θ₄ = +θ₁θ₄x₂: one merge with no inversions
        let left = theta(1).mul(&x(2));
        let product = left.mul(&theta(4));
        let expected =
            SuperPolynomial::monomial(SuperMonomial::new(vec![1, 4], vec![2]), Rat::one());
        assert_eq!(product, expected);
        // (θ₃)·(θ₁x₂) = −θ₁θ₃x₂: one inversion
        let product2 = theta(3).mul(&theta(1).mul(&x(2)));
        let expected2 =
            SuperPolynomial::monomial(SuperMonomial::new(vec![1, 3], vec![2]), -Rat::one());
        assert_eq!(product2, expected2);
    }

    #[test]
    fn scalar_product_on_monomials() {
        assert_eq!(x(1).scalar_product(&x(1)), Rat::one());
        assert_eq!(x(2).scalar_product(&x(1).mul(&x(1))), Rat::zero());
        assert_eq!(x(2).scalar_product(&x(2)), rat(1, 2));
        let m = SuperPolynomial::monomial(SuperMonomial::new(vec![1, 2], vec![]), Rat::one());
        assert_eq!(m.scalar_product(&m), rat_int(-1));
    }

    #[test]
    fn partial_derivatives() {
        // ∂_{θ₁}(θ₁x₃) = x₃
        assert_eq!(theta(1).mul(&x(3)).partial_theta(1), x(3));
        // ∂_{θ₂}(θ₁θ₂) = −θ₁
        assert_eq!(theta(1).mul(&theta(2)).partial_theta(2), -theta(1));
        // ∂_{x₁}(x₁²) = 2x₁
        let sq = x(1).mul(&x(1));
        assert_eq!(sq.partial_x(1), x(1).scale(&rat_int(2)));
    }

    #[test]
    fn even_adjoint_rejects_odd_input() {
        assert_eq!(
            apply_even_adjoint(&theta(1), &x(1)),
            Err(OddInputRejected)
        );
        // e₀^⊥ f = f
        let f = theta(2).mul(&x(3));
        assert_eq!(
            apply_even_adjoint(&SuperPolynomial::one(), &f).unwrap(),
            f
        );
    }

    #[test]
    fn monomial_block_enumeration() {
        // block (3,1): t4, t1*x3, t1*x1*x2, t1*x1^3, t2*x2, t2*x1^2, t3*x1
        let block = monomials_of_bidegree(Bidegree::new(3, 1));
        assert_eq!(block.len(), 7);
        for mono in &block {
            assert_eq!(mono.bidegree(), Bidegree::new(3, 1));
        }
        // canonical order puts the largest θ-index first
        assert_eq!(block[0].to_string(), "t4");
        assert_eq!(block[1].to_string(), "t3*x1");
    }

    #[test]
    fn render_matches_fixture() {
        // −θ₄ + θ₁x₃ + θ₁x₁x₂ + θ₁x₁³/6 renders in canonical order
        let mut p = -theta(4);
        p += theta(1).mul(&x(3));
        p += theta(1).mul(&x(1)).mul(&x(2));
        p += theta(1).mul(&x(1)).mul(&x(1)).mul(&x(1)).scale(&rat(1, 6));
        assert_eq!(
            p.render_text(),
            "-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3"
        );
        assert_eq!(SuperPolynomial::one().render_text(), "1");
        assert_eq!(SuperPolynomial::zero().render_text(), "0");
    }

    #[test]
    fn json_round_trip() {
        let mut p = theta(1).mul(&theta(3)).mul(&x(2)).scale(&rat(-7, 3));
        p += x(1);
        let json = serde_json::to_string(&p.to_json_terms()).unwrap();
        let parsed: Vec<TermJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(SuperPolynomial::from_json_terms(&parsed).unwrap(), p);
    }

    fn arb_monomial() -> impl Strategy<Value = SuperMonomial> {
        (
            proptest::collection::btree_set(1u32..7, 0..3),
            proptest::collection::vec(1u32..5, 0..4),
        )
            .prop_map(|(thetas, mut xs)| {
                xs.sort_unstable_by(|a, b| b.cmp(a));
                SuperMonomial::new(thetas.into_iter().collect(), xs)
            })
    }

    proptest! {
        #[test]
        fn koszul_sign_rule(a in arb_monomial(), b in arb_monomial()) {
            let fa = SuperPolynomial::monomial(a.clone(), Rat::one());
            let fb = SuperPolynomial::monomial(b.clone(), Rat::one());
            let ab = fa.mul(&fb);
            let ba = fb.mul(&fa);
            let parity = (a.thetas().len() * b.thetas().len()) % 2;
            if parity == 0 {
                prop_assert_eq!(ab, ba);
            } else {
                prop_assert_eq!(ab, -ba);
            }
        }

        #[test]
        fn associativity(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
            let fa = SuperPolynomial::monomial(a, rat(2, 3));
            let fb = SuperPolynomial::monomial(b, rat(-1, 2));
            let fc = SuperPolynomial::monomial(c, rat_int(5));
            prop_assert_eq!(fa.mul(&fb).mul(&fc), fa.mul(&fb.mul(&fc)));
        }

        #[test]
        fn leibniz_even(a in arb_monomial(), b in arb_monomial(), k in 1u32..5) {
            let fa = SuperPolynomial::monomial(a, Rat::one());
            let fb = SuperPolynomial::monomial(b, Rat::one());
            let lhs = fa.mul(&fb).partial_x(k);
            let rhs = fa.partial_x(k).mul(&fb) + fa.mul(&fb.partial_x(k));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn leibniz_odd_signed(a in arb_monomial(), b in arb_monomial(), k in 1u32..7) {
            // ∂_θ(fg) = (∂_θf)g + (−1)^{p(f)} f(∂_θg) for homogeneous parity f
            let pa = a.thetas().len() % 2;
            let fa = SuperPolynomial::monomial(a, Rat::one());
            let fb = SuperPolynomial::monomial(b, Rat::one());
            let lhs = fa.mul(&fb).partial_theta(k);
            let mut rhs = fa.partial_theta(k).mul(&fb);
            let cross = fa.mul(&fb.partial_theta(k));
            if pa == 0 { rhs += cross; } else { rhs -= cross; }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn theta_derivatives_anticommute(a in arb_monomial(), j in 1u32..7, k in 1u32..7) {
            let f = SuperPolynomial::monomial(a, Rat::one());
            let jk = f.partial_theta(k).partial_theta(j);
            let kj = f.partial_theta(j).partial_theta(k);
            prop_assert_eq!(jk, -kj);
        }
    }
}
