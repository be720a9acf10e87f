//! Exact truncated polynomial arithmetic, Lyndon word counts by content,
//! the Witt product identity and the weighted even/odd sums.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::enumeration::words_of;
use crate::error::{Error, Result};
use crate::json;
use crate::lyndon::lyndon_tuple;
use crate::words::{compositions, content, multinomial, ContentVector, MultisetSpec};

/// Exponents of a monomial `x1^e1 ... xk^ek`.
///
/// Ordered by total degree, then lexicographically with larger powers of
/// earlier variables first, so `1 < x1 < x2 < x1^2 < x1x2 < x2^2 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<usize>);

impl ExponentVector {
    pub fn new(exponents: Vec<usize>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(vars: usize) -> Self {
        ExponentVector(vec![0; vars])
    }

    /// The exponent vector of `x_i` (0-based `i`).
    pub fn unit(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().sum()
    }

    fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn scaled(&self, factor: usize) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * factor).collect())
    }
}

impl From<ContentVector> for ExponentVector {
    fn from(c: ContentVector) -> Self {
        ExponentVector(c.counts().to_vec())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with integer coefficients in `vars` commuting variables,
/// with every term of total degree above `max_degree` discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    vars: usize,
    max_degree: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(vars: usize, max_degree: usize) -> Self {
        TruncatedPolynomial {
            vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize, max_degree: usize) -> Self {
        let mut p = Self::zero(vars, max_degree);
        p.add_term(ExponentVector::zero(vars), BigInt::one());
        p
    }

    /// Builds a polynomial from terms; like terms are combined and terms
    /// above the truncation degree dropped.
    pub fn from_terms(
        vars: usize,
        max_degree: usize,
        terms: impl IntoIterator<Item = (ExponentVector, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars, max_degree);
        for (e, c) in terms {
            if e.vars() != vars {
                return Err(Error::VariableCountMismatch {
                    left: vars,
                    right: e.vars(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `1 - x1 - ... - xk`.
    pub fn witt_rhs(vars: usize, max_degree: usize) -> Self {
        let mut p = Self::one(vars, max_degree);
        for i in 0..vars {
            p.add_term(ExponentVector::unit(vars, i), -BigInt::one());
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        debug_assert_eq!(e.vars(), self.vars);
        if e.total_degree() > self.max_degree || c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableCountMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        if self.max_degree != other.max_degree {
            return Err(Error::DegreeMismatch {
                left: self.max_degree,
                right: other.max_degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        poly_mul(self, other)
    }

    /// Writes terms as `1 - x1 - x2 + 2x1^2x2`, naming variables
    /// `{var}1, {var}2, ...`.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a TruncatedPolynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms.iter().enumerate() {
            let negative = c.sign() == Sign::Minus;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let constant = e.total_degree() == 0;
            if constant || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            for (v, &p) in e.exponents().iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "{}{}", self.var, v + 1)?,
                    _ => write!(f, "{}{}^{}", self.var, v + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

/// A term as it appears in JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub exponents: ExponentVector,
    #[serde(serialize_with = "json::big")]
    pub coefficient: BigInt,
}

impl TruncatedPolynomial {
    pub fn to_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .map(|(e, c)| Term {
                exponents: e.clone(),
                coefficient: c.clone(),
            })
            .collect()
    }
}

pub fn poly_mul(a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> Result<TruncatedPolynomial> {
    a.compatible(b)?;
    let mut out = TruncatedPolynomial::zero(a.vars, a.max_degree);
    for (ea, ca) in &a.terms {
        let room = a.max_degree - ea.total_degree();
        for (eb, cb) in &b.terms {
            // terms are sorted by degree, nothing further fits
            if eb.total_degree() > room {
                break;
            }
            *out.terms.entry(ea.add(eb)).or_default() += ca * cb;
        }
    }
    out.terms.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn binomial(n: &BigUint, j: usize) -> BigUint {
    let mut c = BigUint::one();
    for i in 0..j {
        let i_big = BigUint::from(i);
        if &i_big >= n {
            return BigUint::zero();
        }
        c *= n - &i_big;
        c /= BigUint::from(i + 1);
    }
    c
}

/// `(1 - x^m)^e` truncated at total degree `max_degree`.
pub fn poly_binomial_power(
    m: &ExponentVector,
    e: &BigUint,
    max_degree: usize,
) -> TruncatedPolynomial {
    let vars = m.vars();
    let degree = m.total_degree();
    if degree == 0 {
        // (1 - 1)^e
        return if e.is_zero() {
            TruncatedPolynomial::one(vars, max_degree)
        } else {
            TruncatedPolynomial::zero(vars, max_degree)
        };
    }
    let mut p = TruncatedPolynomial::zero(vars, max_degree);
    for j in 0..=max_degree / degree {
        let c = BigInt::from(binomial(e, j));
        let c = if j % 2 == 0 { c } else { -c };
        p.add_term(m.scaled(j), c);
    }
    p
}

/// Number-theoretic Möbius function.
pub fn moebius(d: u64) -> i8 {
    assert!(d >= 1, "moebius is defined on positive integers");
    let mut n = d;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of Lyndon words with content `m`, by the necklace formula
/// `(1/N) sum_{d | gcd(m)} mu(d) (N/d)! / prod (m_i/d)!`.
pub fn lyndon_count(m: &ExponentVector) -> BigUint {
    let n = m.total_degree();
    if n == 0 {
        return BigUint::zero();
    }
    let g = m.exponents().iter().fold(0usize, |g, &e| g.gcd(&e));
    let mut sum = BigInt::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let parts: Vec<usize> = m.exponents().iter().map(|e| e / d).collect();
        let term = BigInt::from(multinomial(&parts));
        sum += if mu > 0 { term } else { -term };
    }
    let (q, r) = sum.div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "necklace sum not divisible by {n}");
    q.to_biguint().expect("Lyndon counts are non-negative")
}

/// `prod (1 - x^m)^{M(m)}` over `1 <= |m| <= max_degree`, truncated.
pub fn witt_product(vars: usize, max_degree: usize) -> TruncatedPolynomial {
    let mut lhs = TruncatedPolynomial::one(vars, max_degree);
    for degree in 1..=max_degree {
        for exps in compositions(degree, vars) {
            let m = ExponentVector::new(exps);
            let count = lyndon_count(&m);
            if count.is_zero() {
                continue;
            }
            let factor = poly_binomial_power(&m, &count, max_degree);
            lhs = poly_mul(&lhs, &factor).expect("same shape");
        }
    }
    lhs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittReport {
    pub k: usize,
    pub max_degree: usize,
    pub lhs: TruncatedPolynomial,
    pub rhs: TruncatedPolynomial,
    pub equal: bool,
}

impl Serialize for WittReport {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("WittReport", 7)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("D", &self.max_degree)?;
        s.serialize_field("equal", &self.equal)?;
        s.serialize_field("lhs", &self.lhs.to_string())?;
        s.serialize_field("rhs", &self.rhs.to_string())?;
        s.serialize_field("lhs_terms", &self.lhs.to_terms())?;
        s.serialize_field("rhs_terms", &self.rhs.to_terms())?;
        s.end()
    }
}

/// Expands the Witt product in `k` variables up to degree `max_degree` and
/// compares it with `1 - x1 - ... - xk`.
pub fn verify_witt(k: usize, max_degree: usize) -> WittReport {
    let lhs = witt_product(k, max_degree);
    let rhs = TruncatedPolynomial::witt_rhs(k, max_degree);
    let equal = lhs == rhs;
    WittReport {
        k,
        max_degree,
        lhs,
        rhs,
        equal,
    }
}

/// Even and odd weighted sums over one content class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedClass {
    pub content: ContentVector,
    #[serde(serialize_with = "json::big")]
    pub even_weight_count: BigUint,
    #[serde(serialize_with = "json::big")]
    pub odd_weight_count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSums {
    pub even: TruncatedPolynomial,
    pub odd: TruncatedPolynomial,
    pub classes: Vec<WeightedClass>,
}

impl WeightedSums {
    pub fn equal(&self) -> bool {
        self.even == self.odd
    }
}

impl Serialize for WeightedSums {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("WeightedSums", 4)?;
        s.serialize_field("even", &self.even.display_with("u").to_string())?;
        s.serialize_field("odd", &self.odd.display_with("u").to_string())?;
        s.serialize_field("equal", &self.equal())?;
        s.serialize_field("classes", &self.classes)?;
        s.end()
    }
}

fn accumulate(
    m: &MultisetSpec,
    even: &mut TruncatedPolynomial,
    odd: &mut TruncatedPolynomial,
) -> Result<()> {
    let alphabet = m.alphabet();
    for w in words_of(m)? {
        let Ok(tuple) = lyndon_tuple(&w) else {
            continue;
        };
        // wt(w) is the product of the factor weights
        let weight = tuple
            .factors()
            .iter()
            .map(|l| content(l, alphabet))
            .fold(ContentVector::zero(alphabet), |acc, c| &acc + &c);
        let target = if tuple.index() % 2 == 0 {
            &mut *even
        } else {
            &mut *odd
        };
        target.add_term(weight.into(), BigInt::one());
    }
    Ok(())
}

fn classes_of(even: &TruncatedPolynomial, odd: &TruncatedPolynomial) -> Vec<WeightedClass> {
    let mut exps: Vec<&ExponentVector> = even.terms.keys().chain(odd.terms.keys()).collect();
    exps.sort();
    exps.dedup();
    exps.into_iter()
        .map(|e| WeightedClass {
            content: ContentVector::new(e.exponents().to_vec()),
            even_weight_count: even.coefficient(e).to_biguint().unwrap_or_default(),
            odd_weight_count: odd.coefficient(e).to_biguint().unwrap_or_default(),
        })
        .collect()
}

/// `sum_{w in E} wt(w)` and `sum_{w in O} wt(w)` over the permutations of `m`,
/// as polynomials in the letter weights `u1, ..., un`.
pub fn weighted_sums(m: &MultisetSpec) -> Result<WeightedSums> {
    let n = m.cardinality();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let vars = m.alphabet().size();
    let mut even = TruncatedPolynomial::zero(vars, n);
    let mut odd = TruncatedPolynomial::zero(vars, n);
    accumulate(m, &mut even, &mut odd)?;
    let classes = classes_of(&even, &odd);
    Ok(WeightedSums { even, odd, classes })
}

/// Weighted sums over all words of length `n` on `vars` letters, i.e. over
/// every multiset of cardinality `n` at once.
pub fn weighted_identity(vars: usize, n: usize) -> Result<WeightedSums> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let mut even = TruncatedPolynomial::zero(vars, n);
    let mut odd = TruncatedPolynomial::zero(vars, n);
    for counts in compositions(n, vars) {
        let m = MultisetSpec::from_multiplicities(counts)?;
        accumulate(&m, &mut even, &mut odd)?;
    }
    let classes = classes_of(&even, &odd);
    Ok(WeightedSums { even, odd, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: &[usize]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn poly(vars: usize, d: usize, terms: &[(&[usize], i64)]) -> TruncatedPolynomial {
        TruncatedPolynomial::from_terms(
            vars,
            d,
            terms.iter().map(|(e, c)| (ev(e), BigInt::from(*c))),
        )
        .unwrap()
    }

    /// Möbius values from a linear sieve.
    fn sieve_moebius(limit: usize) -> Vec<i8> {
        let mut mu = vec![1i8; limit + 1];
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i);
                mu[i] = -1;
            }
            for &p in &primes {
                if i * p > limit {
                    break;
                }
                composite[i * p] = true;
                if i % p == 0 {
                    mu[i * p] = 0;
                    break;
                }
                mu[i * p] = -mu[i];
            }
        }
        mu
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
        let sieve = sieve_moebius(1000);
        for (d, &mu) in sieve.iter().enumerate().skip(1) {
            assert_eq!(moebius(d as u64), mu, "mu({d})");
        }
    }

    #[test]
    fn lyndon_count_examples() {
        assert_eq!(lyndon_count(&ev(&[1, 1])), 1u32.into());
        assert_eq!(lyndon_count(&ev(&[2, 1])), 1u32.into());
        assert_eq!(lyndon_count(&ev(&[1, 1, 1])), 2u32.into());
        assert_eq!(lyndon_count(&ev(&[3, 0])), 0u32.into());
        assert_eq!(lyndon_count(&ev(&[1])), 1u32.into());
        assert_eq!(lyndon_count(&ev(&[0, 0])), 0u32.into());
        // 111222, 112122, 112212
        assert_eq!(lyndon_count(&ev(&[3, 3])), 3u32.into());
    }

    #[test]
    fn exponent_order_is_graded() {
        let mut es = vec![
            ev(&[0, 2]),
            ev(&[1, 0]),
            ev(&[0, 0]),
            ev(&[1, 1]),
            ev(&[2, 0]),
            ev(&[0, 1]),
        ];
        es.sort();
        assert_eq!(
            es,
            vec![
                ev(&[0, 0]),
                ev(&[1, 0]),
                ev(&[0, 1]),
                ev(&[2, 0]),
                ev(&[1, 1]),
                ev(&[0, 2])
            ]
        );
    }

    #[test]
    fn multiplication_examples() {
        let a = poly(2, 2, &[(&[0, 0], 1), (&[1, 0], -1)]);
        let b = poly(2, 2, &[(&[0, 0], 1), (&[0, 1], -1)]);
        let ab = poly_mul(&a, &b).unwrap();
        assert_eq!(
            ab,
            poly(
                2,
                2,
                &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], 1)]
            )
        );
        assert_eq!(ab.to_string(), "1 - x1 - x2 + x1x2");

        let sq = poly_binomial_power(&ev(&[1]), &2u32.into(), 2);
        assert_eq!(sq.to_string(), "1 - 2x1 + x1^2");
        let dropped = poly_binomial_power(&ev(&[1, 1]), &1u32.into(), 1);
        assert_eq!(dropped, TruncatedPolynomial::one(2, 1));
        let zero_power = poly_binomial_power(&ev(&[1, 0]), &0u32.into(), 3);
        assert_eq!(zero_power, TruncatedPolynomial::one(2, 3));
    }

    #[test]
    fn binomial_power_large_exponent() {
        // (1 - x)^10 up to x^3: 1 - 10x + 45x^2 - 120x^3
        let p = poly_binomial_power(&ev(&[1]), &10u32.into(), 3);
        assert_eq!(p.to_string(), "1 - 10x1 + 45x1^2 - 120x1^3");
        // C(2, 3) = 0 leaves only three terms
        let p = poly_binomial_power(&ev(&[1]), &2u32.into(), 5);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn mismatches() {
        let a = TruncatedPolynomial::one(2, 3);
        assert_eq!(
            poly_mul(&a, &TruncatedPolynomial::one(3, 3)),
            Err(Error::VariableCountMismatch { left: 2, right: 3 })
        );
        assert_eq!(
            poly_mul(&a, &TruncatedPolynomial::one(2, 4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
        assert!(TruncatedPolynomial::from_terms(2, 3, [(ev(&[1]), BigInt::one())]).is_err());
    }

    #[test]
    fn witt_small_cases() {
        for d in 1..=6 {
            let r = verify_witt(1, d);
            assert!(r.equal);
            assert_eq!(r.lhs.to_string(), "1 - x1");
        }
        let r = verify_witt(2, 3);
        assert!(r.equal, "{}", r.lhs);
        assert_eq!(r.lhs.to_string(), "1 - x1 - x2");
        assert!(verify_witt(3, 6).equal);
    }

    #[test]
    fn witt_two_variables_by_hand() {
        // (1-x)(1-y)(1-xy)(1-x^2y)(1-xy^2) mod degree 4
        let mut p = TruncatedPolynomial::one(2, 3);
        for e in [[1, 0], [0, 1], [1, 1], [2, 1], [1, 2]] {
            p = poly_mul(&p, &poly(2, 3, &[(&[0, 0], 1), (&e, -1)])).unwrap();
        }
        assert_eq!(p, TruncatedPolynomial::witt_rhs(2, 3));
        assert_eq!(p, witt_product(2, 3));
    }

    #[test]
    fn weighted_examples() {
        let m = MultisetSpec::from_multiplicities(vec![2, 1]).unwrap();
        let s = weighted_sums(&m).unwrap();
        assert!(s.equal());
        assert_eq!(s.even.display_with("u").to_string(), "u1^2u2");
        assert_eq!(s.classes.len(), 1);
        assert_eq!(s.classes[0].even_weight_count, 1u32.into());

        let s = weighted_sums(&MultisetSpec::set(2).unwrap()).unwrap();
        assert_eq!(s.even.display_with("u").to_string(), "u1u2");
        assert_eq!(s.odd.display_with("u").to_string(), "u1u2");

        let single = MultisetSpec::from_multiplicities(vec![1]).unwrap();
        assert_eq!(weighted_sums(&single), Err(Error::TooShort(1)));
    }

    #[test]
    fn weighted_identity_over_all_words() {
        for vars in 1..=3 {
            for n in 2..=6 {
                let s = weighted_identity(vars, n).unwrap();
                assert!(s.equal(), "vars={vars} n={n}");
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let v = serde_json::to_value(verify_witt(1, 2)).unwrap();
        assert_eq!(v["equal"], true);
        assert_eq!(v["D"], 2);
        assert_eq!(v["lhs"], "1 - x1");
        assert_eq!(
            v["lhs_terms"],
            serde_json::json!([
                {"exponents": [0], "coefficient": "1"},
                {"exponents": [1], "coefficient": "-1"}
            ])
        );
    }
}
