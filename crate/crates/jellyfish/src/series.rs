//! Exact rational generating functions with factored denominators
//! ∏(1-t^a)^e, and the Hilbert series built from path families.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::paths::{
    corners, d_max, e_max, enumerate_families, family_size, valid_endpoint_sets, wallach_facets, EndpointSet,
};
use crate::poset::{Group, GroupCase, WallachCase};
use crate::tableaux::{bin_sizes, Shape};

/// Dense integer polynomial in t, lowest degree first, no trailing zeros.
pub type Poly = Vec<BigInt>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = (0..a.len().max(b.len()))
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    trim(&mut out);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Multiplies by (1 - t^a)^e.
fn mul_one_minus(p: &Poly, a: u32, e: u32) -> Poly {
    let mut out = p.clone();
    for _ in 0..e {
        let mut next = out.clone();
        next.resize(out.len() + a as usize, BigInt::zero());
        for (i, x) in out.iter().enumerate() {
            next[i + a as usize] -= x;
        }
        trim(&mut next);
        out = next;
    }
    out
}

/// Exact division by (1 - t^a), if possible.
fn div_one_minus(p: &Poly, a: u32) -> Option<Poly> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let a = a as usize;
    if p.len() <= a {
        return None;
    }
    let n = p.len() - a;
    let mut q = vec![BigInt::zero(); n];
    for i in 0..n {
        q[i] = p[i].clone() + if i >= a { q[i - a].clone() } else { BigInt::zero() };
    }
    let mut check = mul_one_minus(&q, a as u32, 1);
    trim(&mut check);
    (check == *p).then_some(q)
}

fn poly_eval_one(p: &Poly) -> BigInt {
    p.iter().sum()
}

/// A rational function N(t) / ∏(1 - t^a)^e with integer coefficients.
#[derive(Debug, Clone, Default)]
pub struct RationalSeries {
    num: Poly,
    den: BTreeMap<u32, u32>,
}

impl RationalSeries {
    pub fn new(num: Poly, den: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut s = RationalSeries { num, den: BTreeMap::new() };
        trim(&mut s.num);
        for (a, e) in den {
            if e > 0 {
                *s.den.entry(a).or_insert(0) += e;
            }
        }
        s
    }

    pub fn from_coeffs(coeffs: &[i64], den: &[(u32, u32)]) -> Self {
        RationalSeries::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), den.iter().copied())
    }

    pub fn zero() -> Self {
        RationalSeries::default()
    }

    pub fn one() -> Self {
        RationalSeries::new(vec![BigInt::one()], [])
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerator_terms(&self) -> Vec<(u32, BigInt)> {
        self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u32, c.clone())).collect()
    }

    /// Rewrites over the denominator `target`, which must be a multiple of the
    /// current one as a rational function.
    pub fn over_denominator(&self, target: &BTreeMap<u32, u32>) -> Option<RationalSeries> {
        let mut num = self.num.clone();
        for (&a, &e) in target {
            num = mul_one_minus(&num, a, e);
        }
        for (&a, &e) in &self.den {
            for _ in 0..e {
                num = div_one_minus(&num, a)?;
            }
        }
        Some(RationalSeries { num, den: target.clone() })
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&a, &e) in &other.den {
            let slot = den.entry(a).or_insert(0);
            *slot = (*slot).max(e);
        }
        let a = self.over_denominator(&den).expect("common denominator");
        let b = other.over_denominator(&den).expect("common denominator");
        RationalSeries::new(poly_add(&a.num, &b.num), den)
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let mut den = self.den.clone();
        for (&a, &e) in &other.den {
            *den.entry(a).or_insert(0) += e;
        }
        RationalSeries::new(poly_mul(&self.num, &other.num), den)
    }

    /// c · t^shift · self.
    pub fn scale(&self, c: impl Into<BigInt>, shift: u32) -> RationalSeries {
        let c = c.into();
        let mut num = vec![BigInt::zero(); shift as usize];
        num.extend(self.num.iter().map(|x| x * &c));
        RationalSeries::new(num, self.den.clone())
    }

    /// Cancels (1 - t^a) factors shared by numerator and denominator.
    pub fn reduce(&self) -> RationalSeries {
        if self.is_zero() {
            return RationalSeries::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (&a, e) in den.iter_mut().rev() {
            while *e > 0 {
                match div_one_minus(&num, a) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, e| *e > 0);
        RationalSeries { num, den }
    }

    /// Taylor coefficients c_0..=c_d.
    pub fn expand(&self, d: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = (0..=d).map(|i| self.num.get(i).cloned().unwrap_or_default()).collect();
        for (&a, &e) in &self.den {
            let a = a as usize;
            for _ in 0..e {
                for i in a..=d {
                    let prev = c[i - a].clone();
                    c[i] += prev;
                }
            }
        }
        c
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        let mut l = self.num.clone();
        for (&a, &e) in &other.den {
            l = mul_one_minus(&l, a, e);
        }
        let mut r = other.num.clone();
        for (&a, &e) in &self.den {
            r = mul_one_minus(&r, a, e);
        }
        l == r
    }

    pub fn numerator_at_one(&self) -> BigInt {
        poly_eval_one(&self.num)
    }

    pub fn is_palindromic(&self) -> bool {
        let terms = self.numerator_terms();
        let Some((lo, _)) = terms.first() else { return true };
        let hi = terms.last().unwrap().0;
        let lo = *lo;
        (lo..=hi).all(|i| {
            let a = self.num.get(i as usize).cloned().unwrap_or_default();
            let b = self.num.get((lo + hi - i) as usize).cloned().unwrap_or_default();
            a == b
        })
    }

    pub fn has_nonnegative_numerator(&self) -> bool {
        self.num.iter().all(|c| !c.is_negative())
    }

    fn numerator_latex(&self) -> String {
        let terms = self.numerator_terms();
        if terms.is_empty() {
            return "0".into();
        }
        let spaced = terms.iter().any(|(_, c)| c.is_negative());
        let mut out = String::new();
        for (idx, (e, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            let body = match (*e, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => monomial_t(*e),
                (_, false) => format!("{mag}{}", monomial_t(*e)),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            match (idx, spaced) {
                (0, _) if c.is_negative() => out.push_str(&format!("-{body}")),
                (0, _) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" {sign} {body}")),
                (_, false) => out.push_str(&format!("{sign}{body}")),
            }
        }
        out
    }

    fn denominator_latex(&self) -> String {
        self.den
            .iter()
            .map(|(&a, &e)| {
                let base = if a == 1 { "(1-t)".to_string() } else { format!("(1-t^{})", exp_str(a)) };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{{{e}}}")
                }
            })
            .collect()
    }

    /// LaTeX in the form `\frac{70t^3 - 14t^5}{(1-t^2)^{14}}`.
    pub fn to_latex(&self) -> String {
        if self.den.is_empty() {
            return self.numerator_latex();
        }
        format!("\\frac{{{}}}{{{}}}", self.numerator_latex(), self.denominator_latex())
    }

    pub fn to_json(&self) -> Value {
        let num: Vec<Value> = self.numerator_terms().into_iter().map(|(e, c)| json!([e, int_json(&c)])).collect();
        let den: Vec<Value> = self.den.iter().map(|(a, e)| json!([a, e])).collect();
        json!({ "numerator": num, "denominator": den })
    }

    pub fn from_json(v: &Value) -> Result<RationalSeries> {
        let bad = || Error::Parse("malformed series JSON".into());
        let mut num = Vec::new();
        for term in v["numerator"].as_array().ok_or_else(bad)? {
            let e = term[0].as_u64().ok_or_else(bad)? as usize;
            let c: BigInt = match &term[1] {
                Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad)?,
                Value::String(s) => s.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            };
            if num.len() <= e {
                num.resize(e + 1, BigInt::zero());
            }
            num[e] += c;
        }
        let mut den = Vec::new();
        for f in v["denominator"].as_array().ok_or_else(bad)? {
            den.push((f[0].as_u64().ok_or_else(bad)? as u32, f[1].as_u64().ok_or_else(bad)? as u32));
        }
        Ok(RationalSeries::new(num, den))
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for RationalSeries {}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator_latex().replace(['{', '}'], "");
        if self.den.is_empty() {
            return f.write_str(&num);
        }
        let den: String = self.denominator_latex().replace(['{', '}'], "");
        write!(f, "({num})/({den})")
    }
}

fn exp_str(e: u32) -> String {
    if e >= 10 {
        format!("{{{e}}}")
    } else {
        e.to_string()
    }
}

fn monomial_t(e: u32) -> String {
    if e == 1 {
        "t".into()
    } else {
        format!("t^{}", exp_str(e))
    }
}

fn int_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(x) => json!(x),
        Err(_) => json!(c.to_string()),
    }
}

/// Histogram of corner counts over all families with endpoints E.
pub fn corner_histogram(case: &GroupCase, e: &EndpointSet) -> Result<Vec<u64>> {
    let mut hist = Vec::new();
    for f in enumerate_families(case, e)? {
        let c = corners(case, &f).len();
        if hist.len() <= c {
            hist.resize(c + 1, 0);
        }
        hist[c] += 1;
    }
    Ok(hist)
}

fn histogram_series(hist: &[u64], step: u32, base: u32, d: u32) -> RationalSeries {
    let mut num = vec![BigInt::zero(); hist.len().saturating_sub(1) * step as usize + 1];
    for (c, &n) in hist.iter().enumerate() {
        num[c * step as usize] += n;
    }
    RationalSeries::new(num, [(base, d)])
}

/// P_E(t) = Σ_F (t²)^{#cor F} / (1-t²)^{d_E}.
pub fn p_e_series(case: &GroupCase, e: &EndpointSet) -> Result<RationalSeries> {
    let d = family_size(case, e)? as u32;
    Ok(histogram_series(&corner_histogram(case, e)?, 2, 2, d))
}

/// One summand #τ_E · P_E(t) of a covariant series.
#[derive(Debug, Clone)]
pub struct SeriesTerm {
    pub endpoints: EndpointSet,
    pub multiplicity: u64,
    pub p_e: RationalSeries,
}

/// A covariant series kept both as its positive combination and reduced.
#[derive(Debug, Clone)]
pub struct CovariantSeries {
    pub case: GroupCase,
    pub shape: Shape,
    pub shift: u32,
    pub terms: Vec<SeriesTerm>,
    pub reduced: RationalSeries,
}

impl CovariantSeries {
    /// Σ #τ_E P_E(t), shifted, over a common denominator but not reduced.
    pub fn combined(&self) -> RationalSeries {
        self.terms.iter().fold(RationalSeries::zero(), |acc, t| acc.add(&t.p_e.scale(t.multiplicity, self.shift)))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| json!({"endpoints": t.endpoints.to_string(), "multiplicity": t.multiplicity, "series": t.p_e.to_json()}))
            .collect();
        json!({
            "case": self.case.to_string(),
            "tau": self.shape.to_string(),
            "shift": self.shift,
            "terms": terms,
            "reduced": self.reduced.to_json(),
        })
    }
}

fn shape_shift(case: &GroupCase, shape: &Shape) -> Result<u32> {
    Ok(match case.group {
        Group::O => shape.column_height()?,
        _ => shape.degree(),
    })
}

/// t^{|τ|} Σ_E #τ_E P_E(t).
pub fn covariant_series(case: &GroupCase, shape: &Shape) -> Result<CovariantSeries> {
    case.require_range()?;
    shape.check_in_sigma(case)?;
    let shift = shape_shift(case, shape)?;
    let bins: Vec<(EndpointSet, u64)> = bin_sizes(case, shape)?.into_iter().filter(|(_, n)| *n > 0).collect();
    let terms: Vec<SeriesTerm> = bins
        .into_par_iter()
        .map(|(e, n)| p_e_series(case, &e).map(|p| SeriesTerm { endpoints: e, multiplicity: n, p_e: p }))
        .collect::<Result<_>>()?;
    let mut out = CovariantSeries { case: *case, shape: shape.clone(), shift, terms, reduced: RationalSeries::zero() };
    out.reduced = out.combined().reduce();
    Ok(out)
}

/// Hilbert series of the invariant ring.
pub fn invariant_series(case: &GroupCase) -> Result<RationalSeries> {
    if case.k >= case.rank() {
        return Ok(RationalSeries::new(vec![BigInt::one()], [(2, case.poset_size() as u32)]));
    }
    p_e_series(case, &e_max(case))
}

/// A maximal chain of k-columns from E up to the top column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalChain {
    pub elements: Vec<Vec<u32>>,
    pub increments: Vec<usize>,
    pub corners: Vec<Vec<u32>>,
}

/// All maximal chains from the column E to the top column {m-k+1..m}.
pub fn maximal_chains(e: &[u32], alphabet: u32, k: u32) -> Result<Vec<MaximalChain>> {
    let k = k as usize;
    if e.len() != k || e.windows(2).any(|w| w[0] >= w[1]) || e.iter().any(|&x| x == 0 || x > alphabet) {
        return Err(Error::InvalidEndpoints(format!("{e:?} is not a strictly increasing column in [{alphabet}]")));
    }
    let top: Vec<u32> = (0..k).map(|i| alphabet - (k - 1 - i) as u32).collect();
    let mut out = Vec::new();
    fn rec(
        cur: &mut Vec<u32>,
        top: &[u32],
        elems: &mut Vec<Vec<u32>>,
        inc: &mut Vec<usize>,
        out: &mut Vec<MaximalChain>,
    ) {
        if cur.as_slice() == top {
            let corners =
                (1..elems.len().saturating_sub(1)).filter(|&m| inc[m - 1] < inc[m]).map(|m| elems[m].clone()).collect();
            out.push(MaximalChain { elements: elems.clone(), increments: inc.clone(), corners });
            return;
        }
        for i in 0..cur.len() {
            let next = cur[i] + 1;
            if next > top[i] || (i + 1 < cur.len() && next >= cur[i + 1]) {
                continue;
            }
            cur[i] = next;
            elems.push(cur.clone());
            inc.push(i);
            rec(cur, top, elems, inc, out);
            inc.pop();
            elems.pop();
            cur[i] -= 1;
        }
    }
    let mut cur = e.to_vec();
    let mut elems = vec![cur.clone()];
    rec(&mut cur, &top, &mut elems, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Q_E(t) = Σ_C (t^k)^{#cor C} / (1-t^k)^{c_E}, with c_E the number of
/// chain elements.
pub fn q_e_series(e: &[u32], alphabet: u32, k: u32) -> Result<RationalSeries> {
    let chains = maximal_chains(e, alphabet, k)?;
    let c_e = chains[0].elements.len() as u32;
    let mut hist: Vec<u64> = Vec::new();
    for c in &chains {
        if hist.len() <= c.corners.len() {
            hist.resize(c.corners.len() + 1, 0);
        }
        hist[c.corners.len()] += 1;
    }
    Ok(histogram_series(&hist, k, k, c_e))
}

/// One product P_E Q_E in the SL invariant series.
#[derive(Debug, Clone)]
pub struct SlTerm {
    pub endpoints: EndpointSet,
    pub p_e: RationalSeries,
    pub q_e: RationalSeries,
}

#[derive(Debug, Clone)]
pub struct SlSeries {
    pub k: u32,
    pub invariants: RationalSeries,
    pub unstarred: Vec<SlTerm>,
    pub starred: Vec<SlTerm>,
    pub reduced: RationalSeries,
}

impl SlSeries {
    pub fn combined(&self) -> RationalSeries {
        let mut acc = self.invariants.clone();
        for t in self.unstarred.iter().chain(&self.starred) {
            acc = acc.add(&t.p_e.mul(&t.q_e).scale(1, self.k));
        }
        acc
    }
}

/// Hilbert series of the SL_k invariants of V^{*p} ⊕ V^q.
pub fn sl_invariant_series(k: u32, p: u32, q: u32) -> Result<SlSeries> {
    let case = GroupCase::gl(k, p, q)?;
    case.require_range()?;
    let mut unstarred = Vec::new();
    let mut starred = Vec::new();
    for e in valid_endpoint_sets(&case) {
        let rows = e.rows();
        let cols = e.cols();
        if rows.is_empty() {
            let q_e = q_e_series(&cols, q, k)?;
            unstarred.push(SlTerm { p_e: p_e_series(&case, &e)?, q_e, endpoints: e });
        } else if cols.is_empty() {
            let q_e = q_e_series(&rows, p, k)?;
            starred.push(SlTerm { p_e: p_e_series(&case, &e)?, q_e, endpoints: e });
        }
    }
    unstarred.reverse();
    let mut out =
        SlSeries { k, invariants: invariant_series(&case)?, unstarred, starred, reduced: RationalSeries::zero() };
    out.reduced = out.combined().reduce();
    Ok(out)
}

/// Hilbert series of the SO_k invariants of V^n.
pub fn so_invariant_series(k: u32, n: u32) -> Result<RationalSeries> {
    let case = GroupCase::o(k, n)?;
    case.require_range()?;
    let mut acc = invariant_series(&case)?;
    for e in valid_endpoint_sets(&case) {
        acc = acc.add(&p_e_series(&case, &e)?.scale(1, k));
    }
    Ok(acc.reduce())
}

/// Bernstein degree from the positive combination: Σ_{d_E = d_max} #τ_E P_E(1).
pub fn bernstein_degree(case: &GroupCase, shape: &Shape) -> Result<BigInt> {
    let s = covariant_series(case, shape)?;
    let dm = d_max(case) as u32;
    Ok(s.terms
        .iter()
        .filter(|t| t.p_e.denominator().get(&2) == Some(&dm))
        .map(|t| t.p_e.numerator_at_one() * t.multiplicity)
        .sum())
}

/// Bernstein degree read off the series written over (1-t²)^{d_max}.
pub fn bernstein_from_series(series: &CovariantSeries) -> Result<BigInt> {
    let dm = d_max(&series.case) as u32;
    let target = BTreeMap::from([(2, dm)]);
    let s = series
        .reduced
        .over_denominator(&target)
        .ok_or_else(|| Error::Unsupported("series does not fit over (1-t^2)^d_max".into()))?;
    Ok(s.numerator_at_one())
}

/// Σ_F t^{#cor F} / (1-t)^d over the facets of the kth order complex.
pub fn wallach_series(wcase: &WallachCase) -> RationalSeries {
    let facets = wallach_facets(wcase);
    let d = facets[0].size() as u32;
    let mut hist: Vec<u64> = Vec::new();
    for f in &facets {
        if hist.len() <= f.corners.len() {
            hist.resize(f.corners.len() + 1, 0);
        }
        hist[f.corners.len()] += 1;
    }
    histogram_series(&hist, 1, 1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], d: &[(u32, u32)]) -> RationalSeries {
        RationalSeries::from_coeffs(c, d)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn expansion() {
        assert_eq!(s(&[1], &[(2, 3)]).expand(6), big(&[1, 0, 3, 0, 6, 0, 10]));
        assert_eq!(s(&[1, 1], &[(1, 1)]).expand(3), big(&[1, 2, 2, 2]));
    }

    #[test]
    fn reduce_and_rewrite() {
        let a = s(&[1, 0, -1], &[(2, 3)]).reduce();
        assert_eq!(a, s(&[1], &[(2, 2)]));
        let b = s(&[1], &[(2, 1), (3, 1)]);
        let over = b.over_denominator(&BTreeMap::from([(2, 1), (3, 1), (6, 1)])).unwrap();
        assert!(over.same_function(&b));
        assert!(b.over_denominator(&BTreeMap::from([(6, 1)])).is_none());
    }

    #[test]
    fn latex_forms() {
        assert_eq!(
            s(&[0, 0, 0, 70, 0, -14, 0, -14, 0, 6], &[(2, 14)]).to_latex(),
            "\\frac{70t^3 - 14t^5 - 14t^7 + 6t^9}{(1-t^2)^{14}}"
        );
        assert_eq!(s(&[1, 1, 1], &[(1, 26)]).to_latex(), "\\frac{1+t+t^2}{(1-t)^{26}}");
        assert_eq!(s(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2], &[(3, 1)]).to_latex(), "\\frac{1+2t^{10}}{(1-t^3)}");
    }

    #[test]
    fn json_round_trip() {
        let a = s(&[13, 0, 0, 0, -4], &[(2, 12)]);
        assert_eq!(RationalSeries::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn sp_covariants() {
        let case = GroupCase::sp(2, 6).unwrap();
        let cov = covariant_series(&case, &Shape::parse("2,1").unwrap()).unwrap();
        assert_eq!(cov.reduced, s(&[0, 0, 0, 70, 0, -14, 0, -14, 0, 6], &[(2, 14)]));
        assert_eq!(bernstein_degree(&case, &Shape::parse("2,1").unwrap()).unwrap(), BigInt::from(48));
        assert_eq!(bernstein_from_series(&cov).unwrap(), BigInt::from(48));
        assert_eq!(cov.reduced.expand(3)[3], BigInt::from(70));
    }

    #[test]
    fn chains() {
        let c = maximal_chains(&[2, 4, 5], 8, 3).unwrap();
        assert!(c.iter().all(|x| x.elements.len() == 11));
        assert_eq!(q_e_series(&[2, 3, 4], 4, 3).unwrap(), s(&[1], &[(3, 1)]));
        assert_eq!(q_e_series(&[1, 2, 3], 4, 3).unwrap(), s(&[1], &[(3, 4)]));
    }

    #[test]
    fn wallach_dn() {
        for n in 4..=7 {
            let w = WallachCase::new(crate::poset::WallachFamily::D(n), 1).unwrap();
            assert_eq!(wallach_series(&w), s(&[1, 1], &[(1, 2 * n - 3)]));
        }
    }
}
