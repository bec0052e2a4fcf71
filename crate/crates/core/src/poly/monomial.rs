use smallvec::SmallVec;
use std::cmp::Ordering;

/// A power product `x_{i1}^{e1} ⋯ x_{ik}^{ek}` stored sparsely as
/// `(variable, exponent)` pairs with strictly increasing variable index and
/// positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(u16, u16); 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: u16) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: u16, e: u16) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut exps = SmallVec::new();
        exps.push((v, e));
        Monomial { exps, degree: e as u32 }
    }

    /// Build from arbitrary `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u16, u16)>) -> Self {
        pairs.into_iter().fold(Self::one(), |m, (v, e)| m.mul(&Self::power(v, e)))
    }

    /// Dense exponent vector `[e_0, e_1, ...]`; trailing zeros may be omitted.
    pub fn from_dense(exps: &[u16]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(v, &e)| (v as u16, e)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: u16) -> u16 {
        self.exps.binary_search_by_key(&v, |&(w, _)| w).map_or(0, |i| self.exps[i].1)
    }

    pub fn pairs(&self) -> &[(u16, u16)] {
        &self.exps
    }

    /// One past the largest variable index present.
    pub fn var_bound(&self) -> usize {
        self.exps.last().map_or(0, |&(v, _)| v as usize + 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a + b))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a.min(b)).filter(|&e| e > 0))
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u16, u16) -> Option<u16>) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut exps = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let (v, ea, eb) = match (a.get(i), b.get(j)) {
                (None, None) => break,
                (Some(&(v, e)), None) => {
                    i += 1;
                    (v, e, 0)
                }
                (None, Some(&(v, e))) => {
                    j += 1;
                    (v, 0, e)
                }
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, 0, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, ea, eb)
                    }
                },
            };
            if let Some(e) = f(ea, eb).filter(|&e| e > 0) {
                exps.push((v, e));
            }
        }
        let degree = exps.iter().map(|&(_, e)| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        other.merge(self, |a, b| Some(a - b))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Drop the listed variables, returning the removed part as pairs.
    pub(crate) fn split_off(&self, vars: impl Fn(u16) -> bool) -> (Monomial, Vec<(u16, u16)>) {
        let mut kept = SmallVec::new();
        let mut removed = Vec::new();
        for &(v, e) in &self.exps {
            if vars(v) {
                removed.push((v, e));
            } else {
                kept.push((v, e));
            }
        }
        let degree = kept.iter().map(|&(_, e)| e as u32).sum();
        (Monomial { exps: kept, degree }, removed)
    }
}

/// Graded reverse lexicographic order with `x0 > x1 > x2 > ...`: higher total
/// degree wins; on a tie, the monomial with the smaller exponent in the
/// highest-indexed variable where they differ is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (va, ea) = a[i - 1];
            let (vb, eb) = b[j - 1];
            match va.cmp(&vb) {
                // self has the higher variable, other has exponent 0 there
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            }
        }
        // equal degrees force both to be exhausted together
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.exps.iter().map(|&(v, e)| if e == 1 { format!("x{v}") } else { format!("x{v}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}
