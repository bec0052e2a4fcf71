//! Sparse multivariate polynomials over `Z` or `Q` in variables `x0, x1, ...`
//! ordered by grevlex, and Gröbner bases of the ideals they generate.

mod groebner;
mod monomial;
mod parse;

pub use groebner::{
    groebner, groebner_with, ideal_equal, is_trivial, reduce, GbOptions, GroebnerBasis, DEFAULT_BUDGET,
};
pub use monomial::Monomial;

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Coefficient domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Domain {
    Z,
    Q,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Z => "Z",
            Domain::Q => "Q",
        }
    }
}

/// A polynomial with nonzero coefficients, terms sorted by decreasing
/// monomial. Over `Z` every coefficient is an integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    domain: Domain,
    terms: Vec<(Monomial, BigRational)>,
}

fn check_domains(a: Domain, b: Domain) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DomainMismatch(a.name(), b.name()))
    }
}

fn check_integral(domain: Domain, c: &BigRational) -> Result<()> {
    if domain == Domain::Z && !c.is_integer() {
        return Err(Error::invalid(format!("coefficient {c} is not an integer")));
    }
    Ok(())
}

impl MultiPoly {
    pub fn zero(domain: Domain) -> Self {
        MultiPoly { domain, terms: Vec::new() }
    }

    pub fn one(domain: Domain) -> Self {
        Self::int(domain, 1)
    }

    pub fn int(domain: Domain, c: i64) -> Self {
        Self::monomial(domain, Monomial::one(), BigInt::from(c))
    }

    pub fn var(domain: Domain, v: u16) -> Self {
        Self::monomial(domain, Monomial::var(v), BigInt::one())
    }

    pub fn monomial(domain: Domain, m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(domain);
        }
        MultiPoly { domain, terms: vec![(m, BigRational::from_integer(c))] }
    }

    /// Constant polynomial; over `Z` the value must be an integer.
    pub fn constant(domain: Domain, c: BigRational) -> Result<Self> {
        Self::from_terms(domain, vec![(Monomial::one(), c)])
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(domain: Domain, terms: Vec<(Monomial, BigRational)>) -> Result<Self> {
        for (_, c) in &terms {
            check_integral(domain, c)?;
        }
        Ok(Self::normalize(domain, terms))
    }

    pub(crate) fn normalize(domain: Domain, mut terms: Vec<(Monomial, BigRational)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly { domain, terms: out }
    }

    /// Caller guarantees sorted, distinct, nonzero terms.
    pub(crate) fn from_sorted(domain: Domain, terms: Vec<(Monomial, BigRational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        MultiPoly { domain, terms }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// One past the largest variable index occurring.
    pub fn var_bound(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.var_bound()).max().unwrap_or(0)
    }

    /// Reinterpret over another domain; `Q -> Z` requires integral coefficients.
    pub fn to_domain(&self, domain: Domain) -> Result<Self> {
        for (_, c) in &self.terms {
            check_integral(domain, c)?;
        }
        Ok(MultiPoly { domain, terms: self.terms.clone() })
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly { domain: self.domain, terms }
    }

    pub fn add(&self, other: &MultiPoly) -> Result<Self> {
        check_domains(self.domain, other.domain)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<Self> {
        check_domains(self.domain, other.domain)?;
        Ok(self.add_unchecked(other, true))
    }

    fn add_unchecked(&self, other: &MultiPoly, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigRational| if negate { -c } else { c.clone() };
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Less,
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + sign(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly { domain: self.domain, terms: out }
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<Self> {
        check_domains(self.domain, other.domain)?;
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MultiPoly { domain: self.domain, terms })
    }

    /// Multiply by a scalar; over `Z` the scalar must be an integer.
    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        check_integral(self.domain, c)?;
        if c.is_zero() {
            return Ok(Self::zero(self.domain));
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect();
        Ok(MultiPoly { domain: self.domain, terms })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::one(self.domain);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Replace the listed variables simultaneously.
    pub fn substitute(&self, map: &BTreeMap<u16, MultiPoly>) -> Result<Self> {
        for p in map.values() {
            check_domains(self.domain, p.domain)?;
        }
        let mut out = Self::zero(self.domain);
        let mut powers: BTreeMap<(u16, u16), MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (kept, removed) = m.split_off(|v| map.contains_key(&v));
            let mut term = MultiPoly { domain: self.domain, terms: vec![(kept, c.clone())] };
            for (v, e) in removed {
                let power = match powers.entry((v, e)) {
                    std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
                    std::collections::btree_map::Entry::Vacant(slot) => slot.insert(map[&v].pow(e as u32)?),
                };
                term = term.mul(power)?;
            }
            out = out.add_unchecked(&term, false);
        }
        Ok(out)
    }

    /// Substitute integer values for the listed variables.
    pub fn evaluate_partial(&self, values: &BTreeMap<u16, BigInt>) -> Result<Self> {
        let map =
            values.iter().map(|(&v, x)| (v, MultiPoly::monomial(self.domain, Monomial::one(), x.clone()))).collect();
        self.substitute(&map)
    }

    /// Evaluate at a full point (`point[v]` is the value of `x_v`).
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = point
                    .get(v as usize)
                    .ok_or_else(|| Error::invalid(format!("no value for x{v} in a point of length {}", point.len())))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Format with custom variable names.
    pub fn to_string_with(&self, name: &dyn Fn(u16) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let vars: Vec<String> =
                m.pairs().iter().map(|&(v, e)| if e == 1 { name(v) } else { format!("{}^{e}", name(v)) }).collect();
            if vars.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }

    pub fn parse(text: &str, domain: Domain) -> Result<Self> {
        parse::parse(text, domain, &parse::default_var)
    }

    /// Parse with a custom variable resolver.
    pub fn parse_with(text: &str, domain: Domain, var: &dyn Fn(&str) -> Option<u16>) -> Result<Self> {
        parse::parse(text, domain, var)
    }
}

pub fn default_var_name(v: u16) -> String {
    format!("x{v}")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_var_name))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.domain.name(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> MultiPoly {
        MultiPoly::parse(s, Domain::Q).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = q("x0 - 2");
        let b = q("x0 + 2");
        assert_eq!(a.mul(&b).unwrap(), q("x0^2 - 4"));
    }

    #[test]
    fn display_form() {
        let p = q("7 - 1/2*x0 + x5*x3^2");
        assert_eq!(p.to_string(), "x3^2*x5 - 1/2*x0 + 7");
        assert_eq!(q("-x1 + x0").to_string(), "x0 - x1");
        assert_eq!(MultiPoly::zero(Domain::Z).to_string(), "0");
    }

    #[test]
    fn mixed_domains_rejected() {
        let a = MultiPoly::var(Domain::Z, 0);
        let b = MultiPoly::var(Domain::Q, 0);
        assert!(matches!(a.add(&b), Err(Error::DomainMismatch("Z", "Q"))));
        assert!(a.mul(&b).is_err());
        assert!(MultiPoly::parse("1/2*x0", Domain::Z).is_err());
        let half = BigRational::new(1.into(), 2.into());
        assert!(a.scale(&half).is_err());
    }

    #[test]
    fn substitution_is_simultaneous() {
        // swap x0 and x1
        let p = q("x0^2 + 3*x1");
        let map = BTreeMap::from([(0, q("x1")), (1, q("x0"))]);
        assert_eq!(p.substitute(&map).unwrap(), q("x1^2 + 3*x0"));
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u16..3, 3), -5i64..=5), 0..5).prop_map(|ts| {
            let terms =
                ts.into_iter().map(|(e, c)| (Monomial::from_dense(&e), BigRational::from_integer(c.into()))).collect();
            MultiPoly::from_terms(Domain::Z, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn substitution_commutes_with_products(p in small_poly(), r in small_poly(), s in small_poly()) {
            let map = BTreeMap::from([(1u16, s.clone()), (2u16, p.clone())]);
            let lhs = p.mul(&r).unwrap().substitute(&map).unwrap();
            let rhs = p.substitute(&map).unwrap().mul(&r.substitute(&map).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_is_a_ring_map(p in small_poly(), r in small_poly(), pt in prop::collection::vec(-3i64..=3, 3)) {
            let pt: Vec<BigRational> = pt.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
            let prod = p.mul(&r).unwrap().evaluate(&pt).unwrap();
            prop_assert_eq!(prod, p.evaluate(&pt).unwrap() * r.evaluate(&pt).unwrap());
            let sum = p.add(&r).unwrap().evaluate(&pt).unwrap();
            prop_assert_eq!(sum, p.evaluate(&pt).unwrap() + r.evaluate(&pt).unwrap());
        }

        #[test]
        fn display_parses_back(p in small_poly()) {
            prop_assert_eq!(MultiPoly::parse(&p.to_string(), Domain::Z).unwrap(), p);
        }
    }
}
