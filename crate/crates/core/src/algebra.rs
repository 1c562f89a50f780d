//! Polynomials, monomial ideals and artinian monomial algebras.
//!
//! Variables are `x1, x2, ...`; internally variable `x{i+1}` has index `i`,
//! which is also the index of the matching vertex of a complex.
//!
//! Monomials are ordered by degree and then lexicographically with
//! `x1 > x2 > ...`. Bases of graded pieces list a degree from its
//! lex-largest monomial down (`x1^2, x1*x2, x2^2`), and polynomials print
//! from their largest term down.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::subdivision::{hesd, incidence_complex, LatticePoint};

/// `x^a` stored as sorted `(variable, exponent)` pairs with positive
/// exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        Self::power(i, 1)
    }

    pub fn power(i: usize, e: u32) -> Self {
        Self::from_pairs([(i, e)])
    }

    /// Merges repeated variables and drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map: BTreeMap<usize, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        let exps: Vec<(usize, u32)> = map.into_iter().filter(|(_, e)| *e > 0).collect();
        let degree = exps.iter().map(|(_, e)| e).sum();
        Monomial { exps, degree }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    /// `x_σ`, the squarefree monomial of a face.
    pub fn squarefree(face: &[usize]) -> Self {
        Self::from_pairs(face.iter().map(|&v| (v, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&var, |e| e.0)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn support(&self) -> Face {
        self.exps.iter().map(|e| e.0).collect()
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().map(|e| e.1).max().unwrap_or(0)
    }

    /// One more than the largest variable index present.
    pub fn num_vars(&self) -> usize {
        self.exps.last().map_or(0, |e| e.0 + 1)
    }

    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for &(v, e) in &self.exps {
            out[v] = e;
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let a = self.exps.get(i).map_or(usize::MAX, |e| e.0);
            let b = other.exps.get(j).map_or(usize::MAX, |e| e.0);
            match a.cmp(&b) {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Vec<(usize, u32)> = other
            .exps
            .iter()
            .map(|&(v, e)| (v, e - self.exponent(v)))
            .filter(|e| e.1 > 0)
            .collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    /// `b! / (b-a)!` for `self = x^a` acting on `x^b` by differentiation.
    fn falling_factorial_on(&self, other: &Monomial) -> BigInt {
        let mut acc = BigInt::one();
        for &(v, a) in &self.exps {
            let b = other.exponent(v);
            for k in 0..a {
                acc *= BigInt::from(b - k);
            }
        }
        acc
    }

    fn factorial_weight(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &(_, e) in &self.exps {
            for k in 2..=e {
                acc *= BigInt::from(k);
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.exps.get(i), other.exps.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(a), Some(b)) => {
                        if a.0 != b.0 {
                            // the smaller variable index is the more significant one
                            return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
                        }
                        if a.1 != b.1 {
                            return a.1.cmp(&b.1);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `L = x1 + ... + xn`.
    pub fn sum_of_vars(n: usize) -> Self {
        Self::from_terms((0..n).map(|i| (Monomial::var(i), BigRational::one())))
    }

    /// Sum of the given variables.
    pub fn sum_of(vars: &[usize]) -> Self {
        Self::from_terms(vars.iter().map(|&i| (Monomial::var(i), BigRational::one())))
    }

    /// Sum of all squarefree monomials of degree `k` in `n` variables.
    pub fn elementary_symmetric(n: usize, k: usize) -> Self {
        let mut out = Polynomial::zero();
        let mut idx: Vec<usize> = (0..k).collect();
        if k > n {
            return out;
        }
        loop {
            out.add_term(Monomial::squarefree(&idx), BigRational::one());
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree when every term has the same degree; `None` for zero or mixed
    /// degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn require_homogeneous(&self) -> Result<u32> {
        self.homogeneous_degree().ok_or_else(|| Error::Homogeneity(self.to_string()))
    }

    /// The single monomial when this is a nonzero multiple of one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        (self.terms.len() == 1).then(|| self.terms.keys().next().unwrap())
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::num_vars).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v * c)))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(BigRational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Contraction `self ∘ other`: `x^a ∘ y^b = y^(b-a)` when `a <= b`, else
    /// 0, extended bilinearly.
    pub fn contract(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                if let Some(q) = a.quotient_of(b) {
                    out.add_term(q, c * d);
                }
            }
        }
        out
    }

    /// Differentiation action `self • other`: each `x^a` acts as
    /// `∂^a / ∂x^a`.
    pub fn differentiate(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                if let Some(q) = a.quotient_of(b) {
                    let w = BigRational::from_integer(a.falling_factorial_on(b));
                    out.add_term(q, c * d * w);
                }
            }
        }
        out
    }

    /// `Σ c_b x^b  ↦  Σ c_b x^b / b!`. Intertwines the two actions:
    /// `g • divided(F) = divided(g ∘ F)`.
    pub fn to_divided_powers(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            (m.clone(), c / BigRational::from_integer(m.factorial_weight()))
        }))
    }

    /// Dense coordinates in the given basis; `None` if a term lies outside it.
    pub fn coordinates(&self, index: &HashMap<Monomial, usize>, len: usize) -> Option<Vec<BigRational>> {
        let mut v = vec![BigRational::zero(); len];
        for (m, c) in &self.terms {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn from_coordinates(basis: &[Monomial], coords: &[BigRational]) -> Polynomial {
        Polynomial::from_terms(basis.iter().cloned().zip(coords.iter().cloned()))
    }

    /// Rescales to integer coefficients with gcd one and a positive leading
    /// coefficient.
    pub fn primitive(&self) -> Polynomial {
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return self.clone();
        };
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, v| num_integer::gcd(acc, v.clone()));
        if lead.is_negative() {
            g = -g;
        }
        self.scale(&(BigRational::from_integer(lcm) / BigRational::from_integer(g)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Terms joined by `+`/`-`; a term is an optional coefficient `p` or
    /// `p/q` followed by factors `x<i>` or `x<i>^<k>`, with optional `*`
    /// between factors.
    fn from_str(s: &str) -> Result<Polynomial> {
        PolyParser { chars: s.chars().collect(), pos: 0, text: s }.parse()
    }
}

struct PolyParser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl PolyParser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().unwrap())
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut first = true;
        loop {
            let mut sign = BigRational::one();
            let mut saw_sign = false;
            while let Some(c) = self.peek() {
                match c {
                    '+' => {}
                    '-' | '−' => sign = -sign,
                    _ => break,
                }
                saw_sign = true;
                self.pos += 1;
            }
            if self.peek().is_none() {
                if first && !saw_sign {
                    return Err(self.err("empty polynomial"));
                }
                if saw_sign {
                    return Err(self.err("dangling sign"));
                }
                break;
            }
            if !first && !saw_sign {
                return Err(self.err("expected `+` or `-`"));
            }
            let (c, m) = self.term()?;
            out.add_term(m, c * sign);
            first = false;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let mut coef = BigRational::one();
        let mut has_coef = false;
        if let Some(n) = self.number() {
            has_coef = true;
            coef = BigRational::from_integer(n);
            if self.peek() == Some('/') {
                self.pos += 1;
                let d = self.number().ok_or_else(|| self.err("expected denominator"))?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                coef /= BigRational::from_integer(d);
            }
        }
        let mut pairs = Vec::new();
        loop {
            let save = self.pos;
            let star = self.peek() == Some('*');
            if star {
                self.pos += 1;
                if !has_coef && pairs.is_empty() {
                    return Err(self.err("leading `*`"));
                }
            }
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    if !self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                        return Err(self.err("expected variable index"));
                    }
                    let i = self.number().unwrap();
                    let i = i.to_usize().filter(|&i| i >= 1).ok_or_else(|| self.err("variable index must be >= 1"))?;
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self
                            .number()
                            .and_then(|n| n.to_u32())
                            .ok_or_else(|| self.err("expected exponent"))?;
                    }
                    pairs.push((i - 1, e));
                }
                _ if star => return Err(self.err("expected factor after `*`")),
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if !has_coef && pairs.is_empty() {
            return Err(self.err("expected term"));
        }
        Ok((coef, Monomial::from_pairs(pairs)))
    }
}

/// Parses `"f1; f2; ..."`.
pub fn parse_forms(s: &str) -> Result<Vec<Polynomial>> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(str::parse).collect()
}

/// Homogeneous nonzero generators in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealPresentation {
    pub generators: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub ambient_vars: usize,
}

impl IdealPresentation {
    pub fn new(generators: Vec<Polynomial>, ambient_vars: usize) -> Result<Self> {
        let mut degrees = Vec::with_capacity(generators.len());
        for g in &generators {
            if g.is_zero() {
                return Err(Error::Input("zero generator".into()));
            }
            degrees.push(g.require_homogeneous()?);
            if g.num_vars() > ambient_vars {
                return Err(Error::Input(format!("`{g}` uses more than {ambient_vars} variables")));
            }
        }
        Ok(IdealPresentation { generators, degrees, ambient_vars })
    }

    /// Ideal of monomials only.
    pub fn monomial(monomials: Vec<Monomial>, ambient_vars: usize) -> Result<Self> {
        Self::new(monomials.into_iter().map(Polynomial::monomial).collect(), ambient_vars)
    }
}

/// Squarefree monomials of the minimal non-faces, by degree and then by
/// vertex list.
pub fn stanley_reisner_generators(complex: &SimplicialComplex) -> IdealPresentation {
    let n = complex.num_vertices();
    let mut gens: Vec<Face> = Vec::new();
    for tau in complex.all_faces() {
        let start = tau.last().map_or(0, |&v| v + 1);
        for v in start..n {
            let mut sigma = tau.clone();
            sigma.push(v);
            if complex.contains_face(&sigma) {
                continue;
            }
            let minimal = (0..sigma.len()).all(|j| {
                let mut sub = sigma.clone();
                sub.remove(j);
                complex.contains_face(&sub)
            });
            if minimal {
                gens.push(sigma);
            }
        }
    }
    gens.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    IdealPresentation::monomial(gens.iter().map(|g| Monomial::squarefree(g)).collect(), n)
        .expect("squarefree monomials are homogeneous")
}

/// One squarefree monomial per facet, in facet order.
pub fn facet_ideal(complex: &SimplicialComplex) -> IdealPresentation {
    IdealPresentation::monomial(
        complex.facets().iter().map(|f| Monomial::squarefree(f)).collect(),
        complex.num_vertices(),
    )
    .expect("squarefree monomials are homogeneous")
}

/// Monomials of degree `k` whose support is a face of `complex` and whose
/// exponent at each variable `i` stays below `cap(i)` (no bound for `None`).
/// Listed from the lex-largest down.
pub(crate) fn face_monomials(
    complex: &SimplicialComplex,
    k: u32,
    cap: &dyn Fn(usize) -> Option<u32>,
) -> Vec<Monomial> {
    let mut out = Vec::new();
    for face in complex.all_faces() {
        let s = face.len() as u32;
        if s > k || (s == 0 && k > 0) {
            continue;
        }
        let bounds: Vec<u32> = face.iter().map(|&v| cap(v).map_or(u32::MAX, |c| c.saturating_sub(1))).collect();
        if bounds.iter().any(|&b| b == 0) {
            continue;
        }
        let mut exps = vec![1u32; face.len()];
        compositions(&mut exps, 0, k - s, &bounds, &mut |e| {
            out.push(Monomial::from_pairs(face.iter().copied().zip(e.iter().copied())));
        });
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn compositions(exps: &mut [u32], at: usize, remaining: u32, bounds: &[u32], emit: &mut dyn FnMut(&[u32])) {
    if at == exps.len() {
        if remaining == 0 {
            emit(exps);
        }
        return;
    }
    let room = bounds[at] - 1;
    for extra in 0..=remaining.min(room) {
        exps[at] = 1 + extra;
        compositions(exps, at + 1, remaining - extra, bounds, emit);
    }
    exps[at] = 1;
}

/// `A_Δ(a) = R / (I_Δ + (x_1^{a_1}, ..., x_n^{a_n}))` presented by its
/// standard monomials.
#[derive(Clone, Debug)]
pub struct ArtinianFrame {
    complex: SimplicialComplex,
    caps: Vec<u32>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl ArtinianFrame {
    pub fn new(complex: SimplicialComplex, caps: Vec<u32>) -> Result<Self> {
        if caps.len() != complex.num_vertices() {
            return Err(Error::Input(format!(
                "{} caps for {} variables",
                caps.len(),
                complex.num_vertices()
            )));
        }
        if let Some(i) = caps.iter().position(|&a| a < 2) {
            return Err(Error::Range(format!("cap of x{} must be at least 2", i + 1)));
        }
        let socle = complex
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| caps[v] - 1).sum::<u32>())
            .max()
            .unwrap_or(0);
        let bases: Vec<Vec<Monomial>> =
            (0..=socle).map(|k| face_monomials(&complex, k, &|v| Some(caps[v]))).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        Ok(ArtinianFrame { complex, caps, bases, index })
    }

    /// Same cap `a` on every variable.
    pub fn uniform(complex: SimplicialComplex, a: u32) -> Result<Self> {
        let n = complex.num_vertices();
        Self::new(complex, vec![a; n])
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn num_vars(&self) -> usize {
        self.caps.len()
    }

    /// Largest degree with a nonzero standard monomial.
    pub fn socle_degree(&self) -> u32 {
        self.bases.iter().rposition(|b| !b.is_empty()).unwrap_or(0) as u32
    }

    pub fn standard_basis(&self, k: u32) -> &[Monomial] {
        self.bases.get(k as usize).map_or(&[], Vec::as_slice)
    }

    pub fn basis_index(&self, k: u32) -> Option<&HashMap<Monomial, usize>> {
        self.index.get(k as usize)
    }

    pub fn hilbert_function(&self, k: u32) -> usize {
        self.standard_basis(k).len()
    }

    /// `(HF(0), ..., HF(socle))`.
    pub fn hilbert_vector(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        m.pairs().iter().all(|&(v, e)| v < self.caps.len() && e < self.caps[v])
            && self.complex.contains_face(&m.support())
    }

    /// Matrix of `×f : A_k -> A_{k + deg f}`; rows index the target basis,
    /// columns the source basis.
    pub fn multiplication_matrix(&self, f: &Polynomial, k: u32) -> Result<ExactMatrix> {
        let e = f.require_homogeneous()?;
        let src = self.standard_basis(k);
        let dst = self.standard_basis(k + e);
        let empty = HashMap::new();
        let dst_index = self.basis_index(k + e).unwrap_or(&empty);
        let mut triplets = Vec::new();
        for (c, m) in src.iter().enumerate() {
            for (u, coef) in f.terms() {
                if let Some(&r) = dst_index.get(&m.mul(u)) {
                    triplets.push((r, c, coef.clone()));
                }
            }
        }
        Ok(ExactMatrix::new(dst.len(), src.len(), triplets))
    }

    /// Matrix of `f ∘` from the degree `k + deg f` standard monomials to the
    /// degree `k` ones, built from the contraction action alone. Equals the
    /// transpose of [`multiplication_matrix`](Self::multiplication_matrix).
    pub fn contraction_matrix(&self, f: &Polynomial, k: u32) -> Result<ExactMatrix> {
        let e = f.require_homogeneous()?;
        let src = self.standard_basis(k + e);
        let dst = self.standard_basis(k);
        let empty = HashMap::new();
        let dst_index = self.basis_index(k).unwrap_or(&empty);
        let mut triplets = Vec::new();
        for (c, m) in src.iter().enumerate() {
            let image = f.contract(&Polynomial::monomial(m.clone()));
            for (q, coef) in image.terms() {
                if let Some(&r) = dst_index.get(q) {
                    triplets.push((r, c, coef.clone()));
                }
            }
        }
        Ok(ExactMatrix::new(dst.len(), src.len(), triplets))
    }

    /// `L = x1 + ... + xn` in this frame's ring.
    pub fn sum_of_vars(&self) -> Polynomial {
        Polynomial::sum_of_vars(self.num_vars())
    }
}

/// Exponent matrix of a monomial ideal: entry `(i, j)` is the exponent of
/// `x_j` in generator `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogMatrix {
    pub matrix: ExactMatrix,
    pub row_labels: Vec<Monomial>,
}

impl LogMatrix {
    pub fn row_sums(&self) -> Vec<u32> {
        let mut sums = vec![0u32; self.matrix.rows()];
        for (r, _, v) in self.matrix.entries() {
            sums[*r] += v.to_integer().to_u32().expect("exponent fits");
        }
        sums
    }
}

pub fn log_matrix(ideal: &IdealPresentation) -> Result<LogMatrix> {
    let mut rows = Vec::with_capacity(ideal.generators.len());
    for g in &ideal.generators {
        let m = g.as_monomial().ok_or_else(|| Error::NotMonomial(g.to_string()))?;
        rows.push(m.clone());
    }
    let triplets = rows
        .iter()
        .enumerate()
        .flat_map(|(i, m)| m.pairs().iter().map(move |&(v, e)| (i, v, e as i64)));
    let matrix = ExactMatrix::from_integer_triplets(rows.len(), ideal.ambient_vars, triplets);
    Ok(LogMatrix { matrix, row_labels: rows })
}

/// Analytic spread of an equigenerated monomial ideal, as the rational rank
/// of its log matrix.
pub fn analytic_spread(ideal: &IdealPresentation) -> Result<usize> {
    let log = log_matrix(ideal)?;
    if ideal.degrees.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Equigeneration);
    }
    Ok(log.matrix.rank())
}

/// Both sides of the identification of `×L : A_t -> A_{t+1}`, `t = d(a-1)`,
/// with the log matrix of the facet ideal of `hesd(Δ(d), a-1)`.
#[derive(Clone, Debug)]
pub struct HesdLogComparison {
    pub equal: bool,
    /// Rows: degree `t+1` standard monomials; columns: degree `t` ones.
    pub multiplication: ExactMatrix,
    /// Rows: facets of the subdivision; columns: its vertices.
    pub log: LogMatrix,
    /// Lattice point (over the ridges of Δ) of each degree `t` monomial.
    pub column_points: Vec<LatticePoint>,
    /// For each multiplication row, the matching log-matrix row.
    pub row_map: Vec<usize>,
    /// For each multiplication column, the matching log-matrix column.
    pub col_map: Vec<usize>,
}

pub fn multiplication_equals_hesd_log(complex: &SimplicialComplex, a: u32) -> Result<HesdLogComparison> {
    if !complex.is_pure() {
        return Err(Error::Purity);
    }
    if a < 2 {
        return Err(Error::Range("a must be at least 2".into()));
    }
    let d = complex.dim();
    if d < 1 {
        return Err(Error::Dimension { requested: d as i64, min: 1, max: i64::MAX });
    }
    let d = d as u32;
    let frame = ArtinianFrame::uniform(complex.clone(), a)?;
    let t = d * (a - 1);
    let multiplication = frame.multiplication_matrix(&frame.sum_of_vars(), t)?;

    let inc = incidence_complex(complex, d as isize)?;
    let ridge_index: HashMap<&Face, usize> = inc.faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let sub = hesd(&inc.complex, a - 1)?;
    let log = log_matrix(&facet_ideal(&sub.complex))?;

    // lattice point over the ridges of the facet F ⊇ supp(m):
    // coordinate of F∖{j} is (a-1) - exponent of x_j
    let point_of = |m: &Monomial, slack: u32| -> Option<LatticePoint> {
        let supp = m.support();
        let facet = complex.facets().iter().find(|f| supp.iter().all(|v| f.binary_search(v).is_ok()))?;
        let mut coords = vec![0u32; inc.faces.len()];
        for (j, &v) in facet.iter().enumerate() {
            let mut ridge = facet.clone();
            ridge.remove(j);
            coords[ridge_index[&ridge]] += (a - 1) - m.exponent(v);
        }
        let p = LatticePoint::new(coords);
        (p.level() == slack).then_some(p)
    };
    let point_id: HashMap<&LatticePoint, usize> = sub.points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let facet_id: HashMap<&Face, usize> = sub.complex.facets().iter().enumerate().map(|(i, f)| (f, i)).collect();

    let mut equal = multiplication.rows() == log.matrix.rows() && multiplication.cols() == log.matrix.cols();
    let mut column_points = Vec::new();
    let mut col_map = Vec::new();
    for m in frame.standard_basis(t) {
        match point_of(m, a - 1).and_then(|p| point_id.get(&p).map(|&i| (p, i))) {
            Some((p, i)) => {
                column_points.push(p);
                col_map.push(i);
            }
            None => {
                equal = false;
                col_map.push(usize::MAX);
            }
        }
    }
    let mut row_map = Vec::new();
    for m in frame.standard_basis(t + 1) {
        // the facet of m is {point(m / x_i) : x_i | m}
        let mut verts: Option<Face> = Some(Vec::new());
        for &(v, _) in m.pairs() {
            let q = Monomial::var(v).quotient_of(m).expect("x_v divides m");
            match (point_of(&q, a - 1).and_then(|p| point_id.get(&p).copied()), verts.as_mut()) {
                (Some(i), Some(vs)) => vs.push(i),
                _ => verts = None,
            }
        }
        let id = verts.and_then(|mut vs| {
            vs.sort_unstable();
            facet_id.get(&vs).copied()
        });
        row_map.push(id.unwrap_or(usize::MAX));
        equal &= id.is_some();
    }
    let injective = |map: &[usize], n: usize| {
        let mut seen = vec![false; n];
        map.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
    };
    equal &= injective(&row_map, log.matrix.rows()) && injective(&col_map, log.matrix.cols());
    if equal {
        let permuted = ExactMatrix::new(
            multiplication.rows(),
            multiplication.cols(),
            (0..multiplication.rows()).flat_map(|r| {
                (0..multiplication.cols()).map(move |c| (r, c)).collect::<Vec<_>>()
            })
            .map(|(r, c)| (r, c, log.matrix.get(row_map[r], col_map[c]))),
        );
        equal = permuted == multiplication;
    }
    Ok(HesdLogComparison { equal, multiplication, log, column_points, row_map, col_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn monomial_order_and_display() {
        let a = Monomial::from_dense(&[2, 0]);
        let b = Monomial::from_dense(&[1, 1]);
        let c = Monomial::from_dense(&[0, 2]);
        assert!(a > b && b > c);
        assert!(Monomial::var(0) < c);
        assert_eq!(Monomial::from_dense(&[1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("x1*x2 - x3^2").to_string(), "x1*x2 - x3^2");
        assert_eq!(p("1/2 x1^3").to_string(), "1/2*x1^3");
        assert_eq!(p("x3^2 + x1x2").to_string(), "x1*x2 + x3^2");
        assert_eq!(p("2x1 x2 − x2*x1").to_string(), "x1*x2");
        assert_eq!(p("x1 - x1").to_string(), "0");
        assert_eq!(p("-3 + x1").to_string(), "x1 - 3");
        assert_eq!(p("6/4*x2").to_string(), "3/2*x2");
        for bad in ["", "x0", "x", "x1 x2 +", "1/0 x1", "x1 ^", "*x1", "x1 2", "y1"] {
            assert!(matches!(bad.parse::<Polynomial>(), Err(Error::Parse(_))), "{bad}");
        }
        assert_eq!(parse_forms("x1+x2; x3+x4;").unwrap().len(), 2);
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(p("x1").contract(&p("x1*x2")), p("x2"));
        assert!(p("x1*x2").contract(&p("x1")).is_zero());
        assert!(p("x1 + x2").contract(&p("x1*x3 - x2*x3")).is_zero());
    }

    #[test]
    fn differentiation_examples() {
        assert_eq!(p("x1").differentiate(&p("x1^2")), p("2 x1"));
        assert!(p("x1").differentiate(&p("x2")).is_zero());
        let f = &(&p("x1 - x2") * &p("x3 - x4")) * &p("x1 + x2 - x3 - x4");
        assert!(Polynomial::sum_of_vars(4).differentiate(&f).is_zero());
        assert_eq!(p("x1^2").differentiate(&p("x1^3")), p("6 x1"));
    }

    #[test]
    fn divided_powers_intertwine_actions() {
        let g = p("x1 + 2 x2");
        let f = p("x1^3*x2 - 4 x1*x2^2 + x2^4");
        assert_eq!(g.differentiate(&f.to_divided_powers()), g.contract(&f).to_divided_powers());
    }

    #[test]
    fn ideal_examples() {
        let sr = stanley_reisner_generators(&fixtures::oct().complex);
        assert_eq!(sr.generators, vec![p("x1*x2"), p("x3*x4"), p("x5*x6")]);
        let simplex = SimplicialComplex::from_facets([vec![1, 2, 3]]).unwrap();
        assert!(stanley_reisner_generators(&simplex).generators.is_empty());
        assert_eq!(stanley_reisner_generators(&fixtures::c3().complex).generators, vec![p("x1*x2*x3")]);
        let fi = facet_ideal(&fixtures::fan4().complex);
        let mut shown: Vec<String> = fi.generators.iter().map(ToString::to_string).collect();
        shown.sort();
        assert_eq!(shown, vec!["x1*x2*x4", "x2*x3*x5", "x2*x4*x5", "x4*x5*x6"]);
        let vertex = SimplicialComplex::from_facets([vec![1]]).unwrap();
        assert_eq!(facet_ideal(&vertex).generators, vec![p("x1")]);
        assert_eq!(facet_ideal(&fixtures::edge().complex).generators, vec![p("x1*x2")]);
    }

    #[test]
    fn standard_basis_examples() {
        let oct = ArtinianFrame::uniform(fixtures::oct().complex, 2).unwrap();
        assert_eq!(oct.standard_basis(2).len(), 12);
        let edge = ArtinianFrame::uniform(fixtures::edge().complex, 3).unwrap();
        assert_eq!(edge.standard_basis(2), &[p("x1^2"), p("x1*x2"), p("x2^2")]
            .iter().map(|f| f.as_monomial().unwrap().clone()).collect::<Vec<_>>()[..]);
        assert_eq!(edge.hilbert_vector(), vec![1, 2, 3, 2, 1]);
        assert!(edge.standard_basis(5).is_empty());
        assert!(ArtinianFrame::uniform(fixtures::edge().complex, 1).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let cross = ArtinianFrame::uniform(fixtures::cross4().complex, 3).unwrap();
        assert_eq!((cross.hilbert_function(5), cross.hilbert_function(6)), (160, 128));
        let oct = ArtinianFrame::uniform(fixtures::oct().complex, 5).unwrap();
        assert_eq!((oct.hilbert_function(6), oct.hilbert_function(7)), (116, 120));
    }

    #[test]
    fn multiplication_examples() {
        let edge = ArtinianFrame::uniform(fixtures::edge().complex, 3).unwrap();
        let m = edge.multiplication_matrix(&edge.sum_of_vars(), 3).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[vec![1, 1]]));
        let oct = ArtinianFrame::uniform(fixtures::oct().complex, 2).unwrap();
        for k in 0..=3 {
            let id = oct.multiplication_matrix(&p("1"), k).unwrap();
            assert_eq!(id, ExactMatrix::identity(oct.hilbert_function(k)));
        }
        let m = oct.multiplication_matrix(&oct.sum_of_vars(), 2).unwrap();
        assert_eq!((m.rows(), m.cols(), m.nnz()), (8, 12, 24));
        assert!(matches!(oct.multiplication_matrix(&p("x1 + x2^2"), 0), Err(Error::Homogeneity(_))));
    }

    #[test]
    fn log_matrix_examples() {
        let i = IdealPresentation::new(vec![p("x1*x2"), p("x2*x3")], 3).unwrap();
        let log = log_matrix(&i).unwrap();
        assert_eq!(log.matrix, ExactMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]]));
        let fan = log_matrix(&facet_ideal(&fixtures::fan4().complex)).unwrap();
        assert_eq!((fan.matrix.rows(), fan.matrix.cols()), (4, 6));
        assert_eq!(fan.row_sums(), vec![3; 4]);
        let cube = log_matrix(&IdealPresentation::new(vec![p("x1^3")], 1).unwrap()).unwrap();
        assert_eq!(cube.matrix, ExactMatrix::from_rows(&[vec![3]]));
        let mixed = IdealPresentation::new(vec![p("x1 + x2")], 2).unwrap();
        assert!(matches!(log_matrix(&mixed), Err(Error::NotMonomial(_))));
    }

    #[test]
    fn analytic_spread_examples() {
        let tri = IdealPresentation::new(vec![p("x1*x2"), p("x2*x3"), p("x1*x3")], 3).unwrap();
        assert_eq!(analytic_spread(&tri).unwrap(), 3);
        assert_eq!(analytic_spread(&IdealPresentation::new(vec![p("x1*x2")], 2).unwrap()).unwrap(), 1);
        let uneven = IdealPresentation::new(vec![p("x1"), p("x2*x3")], 3).unwrap();
        assert_eq!(analytic_spread(&uneven), Err(Error::Equigeneration));
    }

    #[test]
    fn elementary_symmetric() {
        assert_eq!(Polynomial::elementary_symmetric(3, 2), p("x1*x2 + x1*x3 + x2*x3"));
        assert_eq!(Polynomial::elementary_symmetric(3, 0), p("1"));
        assert_eq!(Polynomial::elementary_symmetric(4, 4), p("x1*x2*x3*x4"));
    }

    #[test]
    fn hesd_log_identification() {
        let fan = multiplication_equals_hesd_log(&fixtures::fan4().complex, 3).unwrap();
        assert!(fan.equal);
        assert!(multiplication_equals_hesd_log(&fixtures::oct().complex, 2).unwrap().equal);
        for g in fixtures::graphs() {
            let cmp = multiplication_equals_hesd_log(&g.complex, 2).unwrap();
            assert!(cmp.equal, "{}", g.name);
            // hesd(G, 1) = G: the log matrix is the edge-vertex incidence of G
            assert_eq!(cmp.log.matrix.rows(), g.complex.facets().len());
        }
        let _ = q(0);
    }
}
