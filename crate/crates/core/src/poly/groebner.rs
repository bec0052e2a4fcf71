//! Gröbner bases over `Q` (reduced bases) and over `Z` (strong bases).
//!
//! Both engines work on primitive integer polynomials internally. Inputs and
//! critical pairs share one queue ordered by degree (normal strategy), with
//! inputs processed before pairs of the same degree.

use super::{Domain, Monomial, MultiPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Default limit on elementary reduction steps per basis computation.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbOptions {
    /// elementary reduction steps allowed before giving up
    pub budget: u64,
}

impl Default for GbOptions {
    /// Honors `DIG_GB_BUDGET` when it holds a positive integer.
    fn default() -> Self {
        let budget = std::env::var("DIG_GB_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&b: &u64| b > 0)
            .unwrap_or(DEFAULT_BUDGET);
        GbOptions { budget }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerBasis {
    domain: Domain,
    #[serde(serialize_with = "ser_polys")]
    basis: Vec<MultiPoly>,
    term_order: &'static str,
    #[serde(skip)]
    steps: u64,
}

fn ser_polys<S: serde::Serializer>(polys: &[MultiPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(polys.iter().map(|p| p.to_string()))
}

impl GroebnerBasis {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Over `Q`: the reduced basis, monic, sorted by leading monomial.
    /// Over `Z`: a minimal strong basis with positive leading coefficients
    /// and reduced tails, sorted the same way.
    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// Reduction steps spent computing the basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// The positive integer generating the ideal's intersection with the
    /// constants, if that intersection is nonzero.
    pub fn constant(&self) -> Option<BigInt> {
        self.basis.iter().find(|p| p.is_constant()).map(|p| p.terms()[0].1.to_integer())
    }

    pub fn reduce(&self, p: &MultiPoly) -> Result<MultiPoly> {
        reduce(p, self)
    }

    pub fn contains(&self, p: &MultiPoly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    pub fn to_strings_with(&self, name: &dyn Fn(u16) -> String) -> Vec<String> {
        self.basis.iter().map(|p| p.to_string_with(name)).collect()
    }
}

pub fn groebner(gens: &[MultiPoly]) -> Result<GroebnerBasis> {
    groebner_with(gens, &GbOptions::default())
}

pub fn groebner_with(gens: &[MultiPoly], options: &GbOptions) -> Result<GroebnerBasis> {
    let domain = gens.first().ok_or(Error::EmptyGenerators)?.domain();
    for g in gens {
        if g.domain() != domain {
            return Err(Error::DomainMismatch(domain.name(), g.domain().name()));
        }
    }
    let inputs = preprocess(gens, domain);
    let mut engine = Engine::new(domain, options.budget);
    let basis = match domain {
        Domain::Q => engine.run_q(inputs)?,
        Domain::Z => engine.run_z(inputs)?,
    };
    Ok(GroebnerBasis { domain, basis, term_order: "grevlex", steps: engine.steps })
}

/// Normal form of `p` modulo the basis.
pub fn reduce(p: &MultiPoly, gb: &GroebnerBasis) -> Result<MultiPoly> {
    if p.domain() != gb.domain {
        return Err(Error::DomainMismatch(gb.domain.name(), p.domain().name()));
    }
    match gb.domain {
        Domain::Q => Ok(reduce_rational(p, &gb.basis)),
        Domain::Z => {
            let basis: Vec<IPoly> = gb.basis.iter().map(|g| IPoly::from_multi(g, false)).collect();
            let refs: Vec<&IPoly> = basis.iter().collect();
            let mut steps = 0;
            let r = reduce_full_z(IPoly::from_multi(p, false), &refs, &mut steps, u64::MAX)?;
            Ok(r.to_multi(Domain::Z))
        }
    }
}

pub fn is_trivial(gb: &GroebnerBasis) -> bool {
    gb.is_trivial()
}

/// Whether two generator lists span the same ideal, by mutual membership.
pub fn ideal_equal(a: &[MultiPoly], b: &[MultiPoly]) -> Result<bool> {
    let (ga, gb) = (groebner(a)?, groebner(b)?);
    for p in b {
        if !ga.contains(p)? {
            return Ok(false);
        }
    }
    for p in a {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Primitive-free integer polynomial, terms in decreasing grevlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    /// Clear denominators (and content too when `primitive`).
    fn from_multi(p: &MultiPoly, primitive: bool) -> Self {
        let den = p.terms().iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = p.terms().iter().map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom()))).collect();
        let mut out = IPoly { terms };
        if primitive {
            out.make_primitive();
        }
        out
    }

    fn to_multi(&self, domain: Domain) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect();
        MultiPoly::from_sorted(domain, terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.abs().is_one()
    }

    fn negate_if_needed(&mut self) {
        if self.terms.first().is_some_and(|t| t.1.is_negative()) {
            for t in &mut self.terms {
                t.1 = -&t.1;
            }
        }
    }

    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for t in &mut self.terms {
                t.1 = &t.1 / &g;
            }
        }
        self.negate_if_needed();
    }
}

/// `a·p - c·m·q`
fn combine(
    p: &[(Monomial, BigInt)],
    a: &BigInt,
    q: &[(Monomial, BigInt)],
    c: &BigInt,
    m: &Monomial,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let a_one = a.is_one();
    let mut j = 0;
    let mut shifted: Option<(Monomial, BigInt)> = q.first().map(|(qm, qc)| (qm.mul(m), -(qc * c)));
    for (pm, pc) in p {
        while let Some((sm, sc)) = shifted.take() {
            if sm > *pm {
                out.push((sm, sc));
                j += 1;
                shifted = q.get(j).map(|(qm, qc)| (qm.mul(m), -(qc * c)));
            } else {
                shifted = Some((sm, sc));
                break;
            }
        }
        let pc = if a_one { pc.clone() } else { pc * a };
        match shifted.take() {
            Some((sm, sc)) if sm == *pm => {
                let s = pc + sc;
                if !s.is_zero() {
                    out.push((sm, s));
                }
                j += 1;
                shifted = q.get(j).map(|(qm, qc)| (qm.mul(m), -(qc * c)));
            }
            other => {
                out.push((pm.clone(), pc));
                shifted = other;
            }
        }
    }
    while let Some((sm, sc)) = shifted.take() {
        out.push((sm, sc));
        j += 1;
        shifted = q.get(j).map(|(qm, qc)| (qm.mul(m), -(qc * c)));
    }
    out
}

fn tick(steps: &mut u64, budget: u64) -> Result<()> {
    *steps += 1;
    if *steps > budget {
        return Err(Error::Budget { budget, index: None });
    }
    Ok(())
}

/// Quotient `q` with `c - q·d` in the symmetric range `(-d/2, d/2]`, `d > 0`.
fn symmetric_quotient(c: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = c.div_mod_floor(d);
    if &r * 2 > *d {
        q += 1;
    }
    q
}

/// Reduce every term of `p` over `Z`. A term `c·m` is rewritten by a basis
/// element with leading term `d·m'` when `m' | m`: exactly when `d | c`,
/// otherwise to the symmetric remainder of `c` modulo `d` when `|c| ≥ d`.
fn reduce_full_z(p: IPoly, basis: &[&IPoly], steps: &mut u64, budget: u64) -> Result<IPoly> {
    let mut rest = p.terms;
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((m, c)) = rest.first().cloned() {
        let mut reducer = None;
        for (k, g) in basis.iter().enumerate() {
            if g.lm().divides(&m) {
                if (&c % g.lc()).is_zero() {
                    reducer = Some(k);
                    break;
                }
                if reducer.is_none() && c.abs() >= *g.lc() {
                    reducer = Some(k);
                }
            }
        }
        match reducer {
            Some(k) => {
                let g = basis[k];
                let q = symmetric_quotient(&c, g.lc());
                let shift = g.lm().quotient_of(&m);
                rest = combine(&rest, &BigInt::one(), &g.terms, &q, &shift);
                tick(steps, budget)?;
            }
            None => {
                out.push((m, c));
                rest.remove(0);
            }
        }
    }
    Ok(IPoly { terms: out })
}

/// Fraction-free reduction over `Q`; with `tail` false only the leading
/// term is reduced. The result is primitive with positive leading coefficient.
fn reduce_q(p: IPoly, basis: &[&IPoly], tail: bool, steps: &mut u64, budget: u64) -> Result<IPoly> {
    let mut rest = p.terms;
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    let mut since_content = 0;
    while let Some((m, c)) = rest.first().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let gcd = c.gcd(g.lc());
                let a = g.lc() / &gcd;
                let b = &c / &gcd;
                let shift = g.lm().quotient_of(&m);
                rest = combine(&rest, &a, &g.terms, &b, &shift);
                if !a.is_one() {
                    for t in &mut out {
                        t.1 = &t.1 * &a;
                    }
                }
                tick(steps, budget)?;
                since_content += 1;
                if since_content >= 8 {
                    since_content = 0;
                    let k = out.len();
                    out.append(&mut rest);
                    divide_content(&mut out);
                    rest = out.split_off(k);
                }
            }
            None => {
                if !tail {
                    out.extend(rest);
                    break;
                }
                out.push((m, c));
                rest.remove(0);
            }
        }
    }
    let mut result = IPoly { terms: out };
    result.make_primitive();
    Ok(result)
}

fn divide_content(terms: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for t in terms.iter_mut() {
            t.1 = &t.1 / &g;
        }
    }
}

fn reduce_rational(p: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let domain = p.domain();
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        match basis.iter().find(|g| g.terms()[0].0.divides(&m)) {
            Some(g) => {
                let (gm, gc) = &g.terms()[0];
                let factor = MultiPoly::from_sorted(domain, vec![(gm.quotient_of(&m), &c / gc)]);
                rest = rest.sub(&g.mul(&factor).expect("same domain")).expect("same domain");
            }
            None => {
                out.push((m, c));
                rest = MultiPoly::from_sorted(domain, rest.terms()[1..].to_vec());
            }
        }
    }
    MultiPoly::from_sorted(domain, out)
}

/// Drop zeros, remove duplicates up to sign, order by (degree, length).
fn preprocess(gens: &[MultiPoly], domain: Domain) -> Vec<IPoly> {
    let mut polys: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut p = IPoly::from_multi(g, domain == Domain::Q);
            p.negate_if_needed();
            p
        })
        .collect();
    polys.sort_by(|a, b| {
        (a.degree(), a.terms.len()).cmp(&(b.degree(), b.terms.len())).then_with(|| b.terms.cmp_terms(&a.terms))
    });
    polys.dedup();
    polys
}

trait TermCmp {
    fn cmp_terms(&self, other: &Self) -> std::cmp::Ordering;
}

impl TermCmp for Vec<(Monomial, BigInt)> {
    /// Deterministic total order on term lists.
    fn cmp_terms(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.iter().zip(other) {
            let ord = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
            if ord.is_ne() {
                return ord;
            }
        }
        self.len().cmp(&other.len())
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    /// over `Z`: the gcd-combination rather than the S-polynomial
    gpoly: bool,
}

impl Pair {
    fn key(&self) -> (u32, bool, &Monomial, usize, usize) {
        (self.lcm.degree(), !self.gpoly, &self.lcm, self.j, self.i)
    }
}

struct Engine {
    domain: Domain,
    polys: Vec<IPoly>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    steps: u64,
    budget: u64,
}

enum Next {
    Input(IPoly),
    Pair(Pair),
}

impl Engine {
    fn new(domain: Domain, budget: u64) -> Self {
        Engine { domain, polys: Vec::new(), basis: Vec::new(), pairs: Vec::new(), steps: 0, budget }
    }

    /// Pop the lowest-degree item; inputs win ties.
    fn next(&mut self, inputs: &mut std::collections::VecDeque<IPoly>) -> Option<Next> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| self.pairs[a].key().cmp(&self.pairs[b].key()));
        match (inputs.front(), best) {
            (Some(inp), Some(k)) if inp.degree() > self.pairs[k].lcm.degree() => {
                Some(Next::Pair(self.pairs.swap_remove(k)))
            }
            (Some(_), _) => inputs.pop_front().map(Next::Input),
            (None, Some(k)) => Some(Next::Pair(self.pairs.swap_remove(k))),
            (None, None) => None,
        }
    }

    fn basis_refs(&self) -> Vec<&IPoly> {
        self.basis.iter().map(|&k| &self.polys[k]).collect()
    }

    fn unit(&self) -> Vec<MultiPoly> {
        vec![MultiPoly::one(self.domain)]
    }

    fn run_q(&mut self, inputs: Vec<IPoly>) -> Result<Vec<MultiPoly>> {
        let mut inputs: std::collections::VecDeque<IPoly> = inputs.into();
        while let Some(item) = self.next(&mut inputs) {
            let p = match item {
                Next::Input(p) => p,
                Next::Pair(pair) => self.spoly_q(&pair),
            };
            if p.is_zero() {
                continue;
            }
            let mut steps = self.steps;
            let h = {
                let refs = self.basis_refs();
                reduce_q(p, &refs, false, &mut steps, self.budget)
            };
            self.steps = steps;
            let h = h?;
            if h.is_zero() {
                continue;
            }
            if h.lm().is_one() {
                return Ok(self.unit());
            }
            self.polys.push(h);
            self.update_q(self.polys.len() - 1);
        }
        // the basis is minimal; reduce tails and normalise
        let mut out = Vec::with_capacity(self.basis.len());
        for (idx, &k) in self.basis.iter().enumerate() {
            let others: Vec<&IPoly> =
                self.basis.iter().enumerate().filter(|&(o, _)| o != idx).map(|(_, &o)| &self.polys[o]).collect();
            let g = reduce_q(self.polys[k].clone(), &others, true, &mut self.steps, self.budget)?;
            let lc = BigRational::from_integer(g.lc().clone());
            let terms = g.terms.iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()) / &lc)).collect();
            out.push(MultiPoly::from_sorted(Domain::Q, terms));
        }
        out.sort_by(|a, b| a.terms()[0].0.cmp(&b.terms()[0].0));
        Ok(out)
    }

    fn spoly_q(&self, pair: &Pair) -> IPoly {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        let fm = f.lm().quotient_of(&pair.lcm);
        let gm = g.lm().quotient_of(&pair.lcm);
        // a·(fm·f) - b·(gm·g)
        let lhs = IPoly { terms: f.terms.iter().map(|(m, c)| (m.mul(&fm), c.clone())).collect() };
        let mut s = IPoly { terms: combine(&lhs.terms, &a, &g.terms, &b, &gm) };
        s.make_primitive();
        s
    }

    /// Gebauer-Möller installation of a new basis element.
    fn update_q(&mut self, h: usize) {
        let lh = self.polys[h].lm().clone();
        let mut c: std::collections::VecDeque<(usize, Monomial)> =
            self.basis.iter().map(|&g| (g, lh.lcm(self.polys[g].lm()))).collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = c.pop_front() {
            let coprime = lh.is_coprime(self.polys[g1].lm());
            let covered = c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !covered {
                d.push((g1, l1));
            }
        }
        let polys = &self.polys;
        self.pairs
            .retain(|p| !(lh.divides(&p.lcm) && lh.lcm(polys[p.i].lm()) != p.lcm && lh.lcm(polys[p.j].lm()) != p.lcm));
        for (g, l) in d {
            if !lh.is_coprime(self.polys[g].lm()) {
                self.pairs.push(Pair { i: g, j: h, lcm: l, gpoly: false });
            }
        }
        self.basis.retain(|&g| !lh.divides(polys[g].lm()));
        self.basis.push(h);
    }

    fn run_z(&mut self, inputs: Vec<IPoly>) -> Result<Vec<MultiPoly>> {
        let mut inputs: std::collections::VecDeque<IPoly> = inputs.into();
        while let Some(item) = self.next(&mut inputs) {
            let p = match item {
                Next::Input(p) => p,
                Next::Pair(pair) => self.pair_poly_z(&pair),
            };
            if p.is_zero() {
                continue;
            }
            let mut steps = self.steps;
            let h = {
                let refs = self.basis_refs();
                reduce_full_z(p, &refs, &mut steps, self.budget)
            };
            self.steps = steps;
            let mut h = h?;
            if h.is_zero() {
                continue;
            }
            h.negate_if_needed();
            if h.is_unit_constant() {
                return Ok(self.unit());
            }
            self.polys.push(h);
            self.add_pairs_z(self.polys.len() - 1);
        }
        self.finish_z()
    }

    fn add_pairs_z(&mut self, h: usize) {
        let (lh, ch) = (self.polys[h].lm().clone(), self.polys[h].lc().clone());
        for &g in &self.basis {
            let (lg, cg) = (self.polys[g].lm(), self.polys[g].lc());
            let lcm = lh.lcm(lg);
            let coprime = lh.is_coprime(lg) && ch.gcd(cg).is_one();
            if !coprime {
                self.pairs.push(Pair { i: g, j: h, lcm: lcm.clone(), gpoly: false });
            }
            if !(&ch % cg).is_zero() && !(cg % &ch).is_zero() {
                self.pairs.push(Pair { i: g, j: h, lcm, gpoly: true });
            }
        }
        self.basis.push(h);
    }

    fn pair_poly_z(&self, pair: &Pair) -> IPoly {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let fm = f.lm().quotient_of(&pair.lcm);
        let gm = g.lm().quotient_of(&pair.lcm);
        let shifted_f: Vec<(Monomial, BigInt)> = f.terms.iter().map(|(m, c)| (m.mul(&fm), c.clone())).collect();
        if pair.gpoly {
            // u·a + v·b = gcd(a, b): u·fm·f + v·gm·g
            let e = f.lc().extended_gcd(g.lc());
            IPoly { terms: combine(&shifted_f, &e.x, &g.terms, &-e.y, &gm) }
        } else {
            let l = f.lc().lcm(g.lc());
            let a = &l / f.lc();
            let b = &l / g.lc();
            IPoly { terms: combine(&shifted_f, &a, &g.terms, &b, &gm) }
        }
    }

    /// Keep one element per strongly-minimal leading term, reduce tails.
    fn finish_z(&mut self) -> Result<Vec<MultiPoly>> {
        let mut keep: Vec<usize> = Vec::new();
        for (pos, &k) in self.basis.iter().enumerate() {
            let (lm, lc) = (self.polys[k].lm(), self.polys[k].lc());
            let dominated = self.basis.iter().enumerate().any(|(opos, &o)| {
                if o == k {
                    return false;
                }
                let (om, oc) = (self.polys[o].lm(), self.polys[o].lc());
                let divides = om.divides(lm) && (lc % oc).is_zero();
                let same = om == lm && oc == lc;
                divides && (!same || opos < pos)
            });
            if !dominated {
                keep.push(k);
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for &k in &keep {
            let p = &self.polys[k];
            let others: Vec<&IPoly> = keep.iter().filter(|&&o| o != k).map(|&o| &self.polys[o]).collect();
            let head = IPoly { terms: vec![p.terms[0].clone()] };
            let tail = IPoly { terms: p.terms[1..].to_vec() };
            let tail = reduce_full_z(tail, &others, &mut self.steps, self.budget)?;
            let mut terms = head.terms;
            terms.extend(tail.terms);
            out.push(IPoly { terms }.to_multi(Domain::Z));
        }
        out.sort_by(|a, b| {
            let (x, y) = (&a.terms()[0], &b.terms()[0]);
            x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1))
        });
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(domain: Domain, src: &[&str]) -> Vec<MultiPoly> {
        src.iter().map(|s| MultiPoly::parse(s, domain).unwrap()).collect()
    }

    fn strings(gb: &GroebnerBasis) -> Vec<String> {
        gb.basis().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn unit_from_difference() {
        let gb = groebner(&polys(Domain::Q, &["x0 - 1", "x0"])).unwrap();
        assert!(gb.is_trivial());
        assert_eq!(strings(&gb), vec!["1"]);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(groebner(&[]), Err(Error::EmptyGenerators)));
        let mixed = vec![MultiPoly::var(Domain::Q, 0), MultiPoly::var(Domain::Z, 0)];
        assert!(matches!(groebner(&mixed), Err(Error::DomainMismatch(..))));
    }

    #[test]
    fn textbook_rational_basis() {
        // <x^3 - 2xy, x^2 y - 2y^2 + x> has reduced graded basis {x^2, xy, y^2 - x/2}
        let gb = groebner(&polys(Domain::Q, &["x0^3 - 2*x0*x1", "x0^2*x1 - 2*x1^2 + x0"])).unwrap();
        assert_eq!(strings(&gb), vec!["x1^2 - 1/2*x0", "x0*x1", "x0^2"]);
    }

    #[test]
    fn univariate_integer_ideal() {
        let gens = polys(Domain::Z, &["x0 + 6", "11"]);
        let gb = groebner(&gens).unwrap();
        assert!(!gb.is_trivial());
        assert_eq!(gb.constant(), Some(BigInt::from(11)));
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        for c in 1..11 {
            assert!(!gb.contains(&MultiPoly::int(Domain::Z, c)).unwrap());
        }
        assert!(ideal_equal(&gens, gb.basis()).unwrap());
    }

    #[test]
    fn integer_gcd_combinations() {
        // <2x, 3y> contains xy = 3y·x - 2x·y
        let gb = groebner(&polys(Domain::Z, &["2*x0", "3*x1"])).unwrap();
        assert!(gb.contains(&MultiPoly::parse("x0*x1", Domain::Z).unwrap()).unwrap());
        assert!(!gb.contains(&MultiPoly::parse("x0", Domain::Z).unwrap()).unwrap());
        // <4, 6> = <2>, and <2, 3x> = <2, x>
        assert_eq!(strings(&groebner(&polys(Domain::Z, &["4", "6"])).unwrap()), vec!["2"]);
        let gb = groebner(&polys(Domain::Z, &["2", "3*x0"])).unwrap();
        assert_eq!(strings(&gb), vec!["2", "x0"]);
        assert!(groebner(&polys(Domain::Z, &["2", "3"])).unwrap().is_trivial());
    }

    #[test]
    fn integers_are_stricter_than_rationals() {
        let z = groebner(&polys(Domain::Z, &["2*x0 - 1", "x0"])).unwrap();
        assert!(z.is_trivial());
        let z = groebner(&polys(Domain::Z, &["2*x0 - 1", "2*x1"])).unwrap();
        assert!(!z.is_trivial());
        let q = groebner(&polys(Domain::Q, &["2*x0 - 1", "2*x1"])).unwrap();
        assert_eq!(strings(&q), vec!["x1", "x0 - 1/2"]);
    }

    #[test]
    fn inequality_of_ideals() {
        let a = polys(Domain::Q, &["x0^2", "x0*x1"]);
        let b = polys(Domain::Q, &["x0"]);
        assert!(!ideal_equal(&a, &b).unwrap());
        assert!(ideal_equal(&a, &polys(Domain::Q, &["x0*x1", "x0^2", "x0^2 + x0*x1"])).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let gens = polys(Domain::Q, &["x0^3 - 2*x0*x1", "x0^2*x1 - 2*x1^2 + x0"]);
        let err = groebner_with(&gens, &GbOptions { budget: 0 }).unwrap_err();
        assert!(matches!(err, Error::Budget { budget: 0, .. }));
    }

    #[test]
    fn symmetric_quotients() {
        let q = |c: i64, d: i64| symmetric_quotient(&c.into(), &d.into());
        assert_eq!(q(7, 5), BigInt::from(1));
        assert_eq!(q(8, 5), BigInt::from(2));
        assert_eq!(q(-8, 5), BigInt::from(-2));
        assert_eq!(q(-7, 5), BigInt::from(-1));
    }

    mod oracle {
        use super::super::*;
        use proptest::prelude::*;

        /// Textbook Buchberger over rationals: every S-polynomial, no criteria.
        fn naive_reduced_basis(gens: &[MultiPoly]) -> Vec<MultiPoly> {
            let monic = |p: &MultiPoly| {
                let lc = p.terms()[0].1.clone();
                p.scale(&(BigRational::one() / lc)).unwrap()
            };
            let mut g: Vec<MultiPoly> = gens.iter().filter(|p| !p.is_zero()).map(monic).collect();
            let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            while let Some((i, j)) = pairs.pop() {
                let (mi, mj) = (&g[i].terms()[0].0, &g[j].terms()[0].0);
                let l = mi.lcm(mj);
                let ti = MultiPoly::monomial(Domain::Q, mi.quotient_of(&l), BigInt::one());
                let tj = MultiPoly::monomial(Domain::Q, mj.quotient_of(&l), BigInt::one());
                let s = g[i].mul(&ti).unwrap().sub(&g[j].mul(&tj).unwrap()).unwrap();
                let r = reduce_rational(&s, &g);
                if !r.is_zero() {
                    g.push(monic(&r));
                    let k = g.len() - 1;
                    pairs.extend((0..k).map(|i| (i, k)));
                }
            }
            // minimalise, then reduce each element by the rest
            let mut minimal: Vec<MultiPoly> = Vec::new();
            for (k, p) in g.iter().enumerate() {
                let lm = &p.terms()[0].0;
                let dominated = g.iter().enumerate().any(|(o, q)| {
                    let om = &q.terms()[0].0;
                    o != k && om.divides(lm) && (om != lm || o < k)
                });
                if !dominated {
                    minimal.push(p.clone());
                }
            }
            let mut out: Vec<MultiPoly> = (0..minimal.len())
                .map(|k| {
                    let others: Vec<MultiPoly> =
                        minimal.iter().enumerate().filter(|&(o, _)| o != k).map(|(_, p)| p.clone()).collect();
                    reduce_rational(&minimal[k], &others)
                })
                .collect();
            out.sort_by(|a, b| a.terms()[0].0.cmp(&b.terms()[0].0));
            out
        }

        fn poly(domain: Domain) -> impl Strategy<Value = MultiPoly> {
            prop::collection::vec((prop::collection::vec(0u16..3, 3), -4i64..=4), 1..4).prop_map(move |ts| {
                let terms = ts
                    .into_iter()
                    .map(|(e, c)| (Monomial::from_dense(&e), BigRational::from_integer(c.into())))
                    .collect();
                MultiPoly::from_terms(domain, terms).unwrap()
            })
        }

        fn ideal(domain: Domain) -> impl Strategy<Value = Vec<MultiPoly>> {
            prop::collection::vec(poly(domain), 1..4)
                .prop_filter("nonzero generators", |g| g.iter().any(|p| !p.is_zero()))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(96))]

            #[test]
            fn rational_basis_matches_naive_buchberger(gens in ideal(Domain::Q)) {
                let gb = groebner(&gens).unwrap();
                prop_assert_eq!(gb.basis().to_vec(), naive_reduced_basis(&gens));
                for g in &gens {
                    prop_assert!(gb.contains(g).unwrap());
                }
            }

            #[test]
            fn rational_basis_ignores_generator_order(gens in ideal(Domain::Q), seed: u64) {
                let mut shuffled = gens.clone();
                let k = shuffled.len();
                shuffled.rotate_left(seed as usize % k);
                if seed & 1 == 1 {
                    shuffled.reverse();
                }
                prop_assert_eq!(groebner(&gens).unwrap(), groebner(&shuffled).unwrap());
            }

            #[test]
            fn rational_triviality_ignores_scaling(gens in ideal(Domain::Q), scales in prop::collection::vec(1i64..=6, 4)) {
                let scaled: Vec<MultiPoly> = gens
                    .iter()
                    .zip(&scales)
                    .map(|(g, &c)| g.scale(&BigRational::new(c.into(), 7.into())).unwrap())
                    .collect();
                prop_assert_eq!(groebner(&gens).unwrap().is_trivial(), groebner(&scaled).unwrap().is_trivial());
            }

            #[test]
            fn integer_basis_is_consistent(gens in ideal(Domain::Z)) {
                let gb = groebner(&gens).unwrap();
                for g in &gens {
                    prop_assert!(gb.contains(g).unwrap(), "{} not reduced to zero", g);
                }
                for b in gb.basis() {
                    prop_assert!(b.terms()[0].1.is_positive());
                }
                // same ideal after extending scalars to Q
                let q_gens: Vec<MultiPoly> = gens.iter().map(|g| g.to_domain(Domain::Q).unwrap()).collect();
                let q_gb: Vec<MultiPoly> = gb.basis().iter().map(|g| g.to_domain(Domain::Q).unwrap()).collect();
                prop_assert!(ideal_equal(&q_gens, &q_gb).unwrap());
                // every S- and G-combination of basis elements reduces to zero
                let basis = gb.basis();
                for i in 0..basis.len() {
                    for j in i + 1..basis.len() {
                        for comb in pair_combinations(&basis[i], &basis[j]) {
                            prop_assert!(gb.contains(&comb).unwrap());
                        }
                    }
                }
            }
        }

        fn pair_combinations(f: &MultiPoly, g: &MultiPoly) -> Vec<MultiPoly> {
            let ((mf, cf), (mg, cg)) = (&f.terms()[0], &g.terms()[0]);
            let (cf, cg) = (cf.to_integer(), cg.to_integer());
            let l = mf.lcm(mg);
            let tf = |c: BigInt| MultiPoly::monomial(Domain::Z, mf.quotient_of(&l), c);
            let tg = |c: BigInt| MultiPoly::monomial(Domain::Z, mg.quotient_of(&l), c);
            let lc = cf.lcm(&cg);
            let s = f.mul(&tf(&lc / &cf)).unwrap().sub(&g.mul(&tg(&lc / &cg)).unwrap()).unwrap();
            let e = cf.extended_gcd(&cg);
            let gp = f.mul(&tf(e.x)).unwrap().add(&g.mul(&tg(e.y)).unwrap()).unwrap();
            vec![s, gp]
        }

        /// Constants reachable as `h1·g1 + h2·g2` with small multipliers must
        /// all be multiples of the basis constant.
        #[test]
        fn reachable_constants_divide_by_basis_constant() {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            let multipliers: Vec<Monomial> = vec![Monomial::one(), Monomial::var(0), Monomial::var(1)];
            for _ in 0..24 {
                let mut gens = Vec::new();
                for _ in 0..2 {
                    let terms = multipliers
                        .iter()
                        .map(|m| (m.clone(), BigRational::from_integer(rng.gen_range(-6i64..=6).into())))
                        .collect();
                    gens.push(MultiPoly::from_terms(Domain::Z, terms).unwrap());
                }
                if gens.iter().all(|g| g.is_zero()) {
                    continue;
                }
                let gb = groebner(&gens).unwrap();
                let base = gb.constant().unwrap_or_else(BigInt::zero);
                let products: Vec<MultiPoly> = gens
                    .iter()
                    .flat_map(|g| {
                        multipliers
                            .iter()
                            .map(move |m| g.mul(&MultiPoly::monomial(Domain::Z, m.clone(), BigInt::one())).unwrap())
                    })
                    .collect();
                // all coefficient vectors in [-2, 2]^6
                for code in 0..5usize.pow(6) {
                    let mut acc = MultiPoly::zero(Domain::Z);
                    let mut c = code;
                    for p in &products {
                        let k = (c % 5) as i64 - 2;
                        c /= 5;
                        if k != 0 {
                            acc = acc.add(&p.scale(&BigRational::from_integer(k.into())).unwrap()).unwrap();
                        }
                    }
                    if acc.is_constant() && !acc.is_zero() {
                        let v = acc.terms()[0].1.to_integer();
                        prop_assert_or_panic(!base.is_zero() && (&v % &base).is_zero(), &gens, &v, &base);
                        assert!(gb.contains(&acc).unwrap());
                    }
                }
                if !base.is_zero() {
                    assert!(gb.contains(&MultiPoly::monomial(Domain::Z, Monomial::one(), base.clone())).unwrap());
                    let smaller = MultiPoly::monomial(Domain::Z, Monomial::one(), &base - 1);
                    assert!(base.is_one() || !gb.contains(&smaller).unwrap());
                }
            }
        }

        fn prop_assert_or_panic(ok: bool, gens: &[MultiPoly], v: &BigInt, base: &BigInt) {
            assert!(ok, "{gens:?}: constant {v} reachable but basis constant is {base}");
        }
    }
}
