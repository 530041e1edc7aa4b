//! Telescoping nested sums used to evaluate the slice-chain sums in closed
//! form, together with their product-side evaluations.
//!
//! All three families share one summand. For blocks `m = (m_1, ..., m_n)`,
//! `K_i = 2(k_1 + ... + k_i)` and `M_i = m_1 + ... + m_i`, block `i` contributes
//!
//! ```text
//! ∏_{j=0}^{m_i-1} q^{K_i + 2M_{i-1} + 2j + 1 + e}  /  ∏_{j=0}^{m_i} (1 + q^{K_i + 2M_{i-1} + 2j + e})
//! ```
//!
//! with offset `e = 0` (family A), `e = 1` (family B) or `e = -1` (family C).
//! Summing over `k_1, ..., k_n >= 1` gives
//!
//! ```text
//! ∏_{j=0}^{M_n-1} q^{2j+1+e} / (1 + q^{2j+2+e})  ·  ∏_{i=1}^{n} q^{2S_i} / (1 - q^{2S_i}),   S_i = m_i + ... + m_n.
//! ```

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::genfun::{verify_equal, Comparison};
use crate::qseries::{Series, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub fn offset(self) -> i64 {
        match self {
            Family::A => 0,
            Family::B => 1,
            Family::C => -1,
        }
    }

    pub fn all() -> [Family; 3] {
        [Family::A, Family::B, Family::C]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        })
    }
}

/// One instance of the nested sum. With `fixed_k` set there is a single block
/// and no summation: the identity is the one-step telescoping relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NestedSumSpec {
    pub family: Family,
    pub blocks: Vec<u32>,
    pub fixed_k: Option<u32>,
}

impl NestedSumSpec {
    pub fn summed(family: Family, blocks: Vec<u32>) -> Self {
        NestedSumSpec {
            family,
            blocks,
            fixed_k: None,
        }
    }

    pub fn fixed(family: Family, k: u32, length: u32) -> Self {
        NestedSumSpec {
            family,
            blocks: vec![length],
            fixed_k: Some(k),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.blocks.is_empty() {
            return Err(Error::ParameterOutOfRange("at least one block is required".into()));
        }
        if self.blocks.contains(&0) {
            return Err(Error::ParameterOutOfRange(format!(
                "block lengths must be at least 1, got {:?}",
                self.blocks
            )));
        }
        if let Some(k) = self.fixed_k {
            if self.blocks.len() != 1 {
                return Err(Error::ParameterOutOfRange("a fixed k needs exactly one block".into()));
            }
            if 2 * i64::from(k) + self.family.offset() < 0 {
                return Err(Error::ParameterOutOfRange(format!(
                    "k = {k} gives a negative exponent in family {}",
                    self.family
                )));
            }
        }
        Ok(())
    }

    /// Total block length `M_n`.
    pub fn total_length(&self) -> u32 {
        self.blocks.iter().sum()
    }
}

/// Numerator and denominator exponents of the summand at `ks`.
fn summand_exponents(family: Family, blocks: &[u32], ks: &[u32]) -> (u64, Vec<u64>) {
    let e = family.offset();
    let mut numerator = 0i64;
    let mut denominators = Vec::new();
    let mut k_sum = 0i64;
    let mut m_sum = 0i64;
    for (&m, &k) in blocks.iter().zip(ks) {
        k_sum += i64::from(k);
        let base = 2 * k_sum + 2 * m_sum + e;
        for j in 0..i64::from(m) {
            numerator += base + 2 * j + 1;
        }
        for j in 0..=i64::from(m) {
            denominators.push((base + 2 * j) as u64);
        }
        m_sum += i64::from(m);
    }
    (numerator as u64, denominators)
}

fn summand(family: Family, blocks: &[u32], ks: &[u32], order: usize) -> Result<Series> {
    let (numerator, denominators) = summand_exponents(family, blocks, ks);
    if numerator > order as u64 {
        return Ok(Series::zero(order));
    }
    let mut s = Series::monomial(BigRational::one(), numerator as usize, order);
    for d in denominators {
        s.div_binomial(Sign::Minus, d as usize)?;
    }
    Ok(s)
}

/// The left-hand side at `order`.
pub fn nested_sum(spec: &NestedSumSpec, order: usize) -> Result<Series> {
    nested_sum_with_cutoff(spec, order, order as u64)
}

/// The left-hand side at `order`, keeping only the `k` tuples whose summand
/// starts at degree `cutoff` or below.
pub fn nested_sum_with_cutoff(spec: &NestedSumSpec, order: usize, cutoff: u64) -> Result<Series> {
    spec.validate()?;
    if let Some(k) = spec.fixed_k {
        return summand(spec.family, &spec.blocks, &[k], order);
    }
    let n = spec.blocks.len();
    let mut acc = Series::zero(order);
    let mut ks = vec![1u32; n];
    // Depth-first over k tuples; the leading degree grows with every k_i, so
    // each loop stops at the first k whose lower bound passes the cutoff.
    fn walk(
        spec: &NestedSumSpec,
        depth: usize,
        ks: &mut Vec<u32>,
        order: usize,
        cutoff: u64,
        acc: &mut Series,
    ) -> Result<()> {
        if depth == ks.len() {
            let s = summand(spec.family, &spec.blocks, ks, order)?;
            *acc = acc.add(&s)?;
            return Ok(());
        }
        ks[depth] = 1;
        loop {
            for slot in &mut ks[depth + 1..] {
                *slot = 1;
            }
            let (lead, _) = summand_exponents(spec.family, &spec.blocks, ks);
            if lead > cutoff {
                break;
            }
            walk(spec, depth + 1, ks, order, cutoff, acc)?;
            ks[depth] += 1;
        }
        Ok(())
    }
    walk(spec, 0, &mut ks, order, cutoff, &mut acc)?;
    Ok(acc)
}

/// The right-hand side at `order`.
pub fn closed_form(spec: &NestedSumSpec, order: usize) -> Result<Series> {
    spec.validate()?;
    let e = spec.family.offset();
    if let Some(k) = spec.fixed_k {
        return fixed_k_closed_form(e, i64::from(k), i64::from(spec.blocks[0]), order);
    }
    let mut lead = 0i64;
    let mut s = Series::one(order);
    for j in 0..i64::from(spec.total_length()) {
        lead += 2 * j + 1 + e;
        s.div_binomial(Sign::Minus, (2 * j + 2 + e) as usize)?;
    }
    let mut tail = 0u64;
    for &m in spec.blocks.iter().rev() {
        tail += u64::from(m);
        lead += 2 * tail as i64;
        s.div_binomial(Sign::Plus, 2 * tail as usize)?;
    }
    Ok(shift_or_zero(&s, lead as u64))
}

fn shift_or_zero(s: &Series, by: u64) -> Series {
    if by > s.order() as u64 {
        Series::zero(s.order())
    } else {
        s.shift(by as usize)
    }
}

/// `q/(1-q^{2n}) · (P/∏_{j=1}^{n}(1+q^{2k+2j+e}) - P/∏_{j=0}^{n-1}(1+q^{2k+2j+e}))`
/// with `P = ∏_{j=1}^{n-1} q^{2k+2j+1+e}`.
fn fixed_k_closed_form(e: i64, k: i64, n: i64, order: usize) -> Result<Series> {
    let p: i64 = (1..n).map(|j| 2 * k + 2 * j + 1 + e).sum();
    let lead = (p + 1) as u64;
    let mut upper = Series::one(order);
    for j in 1..=n {
        upper.div_binomial(Sign::Minus, (2 * k + 2 * j + e) as usize)?;
    }
    let mut lower = Series::one(order);
    for j in 0..n {
        lower.div_binomial(Sign::Minus, (2 * k + 2 * j + e) as usize)?;
    }
    let mut diff = upper.sub(&lower)?;
    diff.div_binomial(Sign::Plus, (2 * n) as usize)?;
    Ok(shift_or_zero(&diff, lead))
}

/// Expands both sides and compares them.
pub fn verify_lemma(spec: &NestedSumSpec, order: usize) -> Result<Comparison> {
    verify_equal(&nested_sum(spec, order)?, &closed_form(spec, order)?)
}

/// A named lemma instance, written `L4.1(k)`, `L4.1(k,n)`, `L4.2(m)`,
/// `L4.3(m1,m2)`, `L4.4(m1,...)`, `L5.1(k)`, `L5.1(k,n)`, `L5.2(m)`,
/// `L5.3(m1,m2)`, `L5.4(m1,...)` or `L5.5(m1,...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LemmaId {
    number: (u8, u8),
    spec: NestedSumSpec,
}

impl LemmaId {
    pub fn number(&self) -> (u8, u8) {
        self.number
    }

    pub fn spec(&self) -> &NestedSumSpec {
        &self.spec
    }

    /// The lemma that states `spec`.
    pub fn for_spec(spec: NestedSumSpec) -> Result<Self> {
        spec.validate()?;
        let n = spec.blocks.len();
        let number = match (spec.family, spec.fixed_k.is_some(), n) {
            (Family::A, true, _) => (4, 1),
            (Family::B, true, _) => (5, 1),
            (Family::A, false, 1) => (4, 2),
            (Family::A, false, 2) => (4, 3),
            (Family::A, false, _) => (4, 4),
            (Family::B, false, 1) => (5, 2),
            (Family::B, false, 2) => (5, 3),
            (Family::B, false, _) => (5, 4),
            (Family::C, false, _) => (5, 5),
            (Family::C, true, _) => {
                return Err(Error::ParameterOutOfRange("family C has no fixed-k form".into()))
            }
        };
        Ok(LemmaId { number, spec })
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.number;
        let params: Vec<u32> = match self.spec.fixed_k {
            Some(k) if self.spec.blocks[0] == 1 => vec![k],
            Some(k) => vec![k, self.spec.blocks[0]],
            None => self.spec.blocks.clone(),
        };
        let params: Vec<String> = params.iter().map(u32::to_string).collect();
        write!(f, "L{a}.{b}({})", params.join(","))
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownIdentity(s.to_string());
        let body = s.strip_prefix('L').ok_or_else(unknown)?;
        let (head, rest) = body.split_once('(').ok_or_else(unknown)?;
        let args = rest.strip_suffix(')').ok_or_else(unknown)?;
        let (a, b) = head.split_once('.').ok_or_else(unknown)?;
        let number: (u8, u8) = (a.parse().map_err(|_| unknown())?, b.parse().map_err(|_| unknown())?);
        let params: Vec<u32> = args
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        let arity = |ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(Error::ParameterOutOfRange(format!("wrong number of parameters in `{s}`")))
            }
        };
        let spec = match number {
            (4, 1) | (5, 1) => {
                arity(params.len() == 1 || params.len() == 2)?;
                let family = if number.0 == 4 { Family::A } else { Family::B };
                NestedSumSpec::fixed(family, params[0], params.get(1).copied().unwrap_or(1))
            }
            (4, 2) | (5, 2) => {
                arity(params.len() == 1)?;
                NestedSumSpec::summed(if number.0 == 4 { Family::A } else { Family::B }, params)
            }
            (4, 3) | (5, 3) => {
                arity(params.len() == 2)?;
                NestedSumSpec::summed(if number.0 == 4 { Family::A } else { Family::B }, params)
            }
            (4, 4) | (5, 4) => NestedSumSpec::summed(if number.0 == 4 { Family::A } else { Family::B }, params),
            (5, 5) => NestedSumSpec::summed(Family::C, params),
            _ => return Err(unknown()),
        };
        spec.validate()?;
        Ok(LemmaId { number, spec })
    }
}

/// Bounds for a sweep over lemma instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridBounds {
    pub max_blocks: usize,
    pub max_length: u32,
    pub max_k: u32,
}

/// Every instance within `bounds`: the fixed-k forms of families A and B for
/// `k <= max_k`, and the summed forms of all three families for every block
/// vector with at most `max_blocks` entries each at most `max_length`.
pub fn lemma_grid(bounds: GridBounds) -> Vec<NestedSumSpec> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B] {
        for k in 0..=bounds.max_k {
            for n in 1..=bounds.max_length {
                out.push(NestedSumSpec::fixed(family, k, n));
            }
        }
    }
    for family in Family::all() {
        let mut vectors: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..bounds.max_blocks {
            vectors = vectors
                .iter()
                .flat_map(|v| {
                    (1..=bounds.max_length).map(move |m| {
                        let mut w = v.clone();
                        w.push(m);
                        w
                    })
                })
                .collect();
            out.extend(vectors.iter().map(|b| NestedSumSpec::summed(family, b.clone())));
        }
    }
    out
}

/// One CSV line `family,n,m_vec,k_or_-,order,status` for a verified instance.
pub fn report_line(spec: &NestedSumSpec, order: usize, outcome: &Comparison) -> String {
    let blocks: Vec<String> = spec.blocks.iter().map(u32::to_string).collect();
    let k = spec.fixed_k.map_or_else(|| "-".to_string(), |k| k.to_string());
    let status = match outcome {
        Comparison::Equal => "PASS".to_string(),
        Comparison::Mismatch { degree, .. } => format!("FAIL@{degree}"),
    };
    format!(
        "{},{},{},{k},{order},{status}",
        spec.family,
        spec.blocks.len(),
        blocks.join(";")
    )
}
