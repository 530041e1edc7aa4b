//! Generating functions of cylindric partitions computed from slices and from
//! closed forms, and exact comparison of series.
//!
//! * [`borodin`] expands Borodin's infinite product for `F_c(1, q)`.
//! * [`chain_series`] sums over strict containment chains of non-empty slices,
//!   letting each chain element repeat (the "weighted words" construction), and
//!   keeps the number of levels as the `z` degree.
//! * [`catalog_sides`] expands both sides of the sum/product identities for the
//!   rank 2 profiles and their duals, the auxiliary Rogers-Ramanujan type
//!   identities, the Euler/Gasper identity at `z = q^j`, and the telescoping
//!   lemmas (delegated to [`crate::lemmas`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cylindric::Profile;
use crate::error::{Error, Result};
use crate::lemmas::{self, LemmaId};
use crate::qseries::{product_expr, PochSpec, Series};
use crate::slices::{contains, valid_slices};

/// Denominator factors of Borodin's product for `F_c(1, q)`:
///
/// ```text
/// (q^t;q^t)_∞ · ∏_{i=1}^{r} ∏_{j=i}^{r} ∏_{m=1}^{c_i} (q^{m+j-i+s(i+1,j)}; q^t)_∞
///             · ∏_{i=2}^{r} ∏_{j=2}^{i} ∏_{m=1}^{c_i} (q^{t-m+j-i-s(j,i-1)}; q^t)_∞
/// ```
///
/// Every exponent must come out at least 1; anything else is reported as an
/// instantiation error instead of being dropped.
pub fn borodin_factors(profile: &Profile) -> Result<Vec<PochSpec>> {
    let r = profile.rank();
    let t = i64::from(profile.period());
    let s = |i: usize, j: usize| i64::from(profile.partial_sum(i, j));
    let mut factors = vec![PochSpec::inf(t as u32, t as u32)];
    let mut push = |exponent: i64, context: String| -> Result<()> {
        if exponent < 1 {
            return Err(Error::FormulaInstantiation { exponent, context });
        }
        factors.push(PochSpec::inf(exponent as u32, t as u32));
        Ok(())
    };
    for i in 1..=r {
        for j in i..=r {
            for m in 1..=i64::from(profile.c(i)) {
                let e = m + (j - i) as i64 + s(i + 1, j);
                push(e, format!("first product i={i} j={j} m={m}"))?;
            }
        }
    }
    for i in 2..=r {
        for j in 2..=i {
            for m in 1..=i64::from(profile.c(i)) {
                let e = t - m + j as i64 - i as i64 - s(j, i - 1);
                push(e, format!("second product i={i} j={j} m={m}"))?;
            }
        }
    }
    Ok(factors)
}

/// `F_c(1, q)` from Borodin's product, truncated at `order`.
pub fn borodin(profile: &Profile, order: usize) -> Result<Series> {
    product_expr(&[], &borodin_factors(profile)?, order)
}

/// Bivariate counts `G[m][n]`: coefficient of `z^m q^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGF {
    profile: Profile,
    order: usize,
    distinct: bool,
    table: Vec<Vec<BigUint>>,
}

impl ChainGF {
    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn distinct(&self) -> bool {
        self.distinct
    }

    pub fn get(&self, m: usize, n: usize) -> &BigUint {
        &self.table[m][n]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.table
    }

    /// The series at `z = 1`.
    pub fn marginal(&self) -> Series {
        Series::from_integers((0..=self.order).map(|n| {
            let total: BigUint = self.table.iter().map(|row| &row[n]).sum();
            BigInt::from(total)
        }))
    }

    /// CSV `max,size,count` over the nonzero entries, header included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("max,size,count\n");
        for (m, row) in self.table.iter().enumerate() {
            for (n, count) in row.iter().enumerate() {
                if !count.is_zero() {
                    out.push_str(&format!("{m},{n},{count}\n"));
                }
            }
        }
        out
    }
}

type Grid = Vec<Vec<BigUint>>;

fn zero_grid(order: usize) -> Grid {
    vec![vec![BigUint::zero(); order + 1]; order + 1]
}

fn add_into(acc: &mut Grid, other: &Grid, min_degree: usize) {
    for (dst, src) in acc.iter_mut().zip(other) {
        for n in min_degree..dst.len() {
            if !src[n].is_zero() {
                dst[n] += &src[n];
            }
        }
    }
}

/// Multiplies `acc` by `z q^w` (distinct) or by `z q^w / (1 - z q^w)`.
fn times_slice(acc: &Grid, weight: usize, distinct: bool) -> Grid {
    let order = acc.len() - 1;
    let mut out = zero_grid(order);
    let max_copies = if distinct { 1 } else { order / weight };
    for k in 1..=max_copies {
        for m in k..=order {
            for n in k * weight..=order {
                let src = &acc[m - k][n - k * weight];
                if !src.is_zero() {
                    out[m][n] += src;
                }
            }
        }
    }
    out
}

/// Generating function of chains of slices.
///
/// With `distinct = false` every weakly decreasing chain of non-empty slices
/// (a cylindric partition) is counted once, so the result is `F_c(z, q)`.
/// With `distinct = true` only strict chains are counted.
///
/// Each slice `s` of weight at most `order` receives
/// `g(s) = weight_factor(s) · (1 + Σ_{s' ⊊ s} g(s'))`, the sum over strict
/// chains whose largest element is `s`; the answer is `1 + Σ_s g(s)`.
pub fn chain_series(profile: &Profile, order: usize, distinct: bool) -> ChainGF {
    let slices: Vec<_> = valid_slices(profile, order as u32)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let mut total = zero_grid(order);
    total[0][0] = BigUint::one();
    let mut g: Vec<Grid> = Vec::with_capacity(slices.len());
    for (idx, s) in slices.iter().enumerate() {
        let weight = s.weight() as usize;
        let mut below = zero_grid(order);
        below[0][0] = BigUint::one();
        for (prev, gp) in slices[..idx].iter().zip(&g) {
            if prev.weight() < s.weight() && contains(prev, s).expect("same profile") {
                add_into(&mut below, gp, prev.weight() as usize);
            }
        }
        let gs = times_slice(&below, weight, distinct);
        add_into(&mut total, &gs, weight);
        g.push(gs);
    }
    ChainGF {
        profile: profile.clone(),
        order,
        distinct,
        table: total,
    }
}

/// Outcome of an exact comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Mismatch {
        degree: usize,
        lhs: BigRational,
        rhs: BigRational,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Equal => f.write_str("PASS"),
            Comparison::Mismatch { degree, lhs, rhs } => {
                write!(f, "FAIL at q^{degree}: {lhs} != {rhs}")
            }
        }
    }
}

/// Compares two series of equal order and reports the earliest difference.
pub fn verify_equal(a: &Series, b: &Series) -> Result<Comparison> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            lhs: a.order(),
            rhs: b.order(),
        });
    }
    Ok(a.coeffs()
        .iter()
        .zip(b.coeffs())
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map_or(Comparison::Equal, |(degree, (x, y))| Comparison::Mismatch {
            degree,
            lhs: x.clone(),
            rhs: y.clone(),
        }))
}

/// CSV `degree,lhs,rhs,equal` for two series of equal order.
pub fn sides_csv(lhs: &Series, rhs: &Series) -> Result<String> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch {
            lhs: lhs.order(),
            rhs: rhs.order(),
        });
    }
    let mut out = String::from("degree,lhs,rhs,equal\n");
    for (n, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
        out.push_str(&format!("{n},{a},{b},{}\n", a == b));
    }
    Ok(out)
}

/// Identities the catalog can expand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// Sum side equals Borodin's product for the profiles of equation `1.<n>`,
    /// `n` in `2..=8`.
    Profile(u8),
    A1,
    A2,
    /// Euler/Gasper `Σ q^{n(n-1)/2} z^n / (q;q)_n = (-z;q)_∞` at `z = q^j`.
    Gasper(u32),
    Lemma(LemmaId),
}

impl IdentityId {
    /// Equations relating a sum to a product, in catalog order.
    pub fn product_identities() -> Vec<IdentityId> {
        (2..=8).map(IdentityId::Profile).collect()
    }

    /// Profiles whose generating function the equation describes.
    pub fn profiles(&self) -> Vec<Profile> {
        let parts: &[&[u32]] = match self {
            IdentityId::Profile(2) => &[&[1, 1]],
            IdentityId::Profile(3) => &[&[2, 0]],
            IdentityId::Profile(4) => &[&[2, 1], &[1, 1, 0]],
            IdentityId::Profile(5) => &[&[3, 0], &[2, 0, 0]],
            IdentityId::Profile(6) => &[&[4, 0], &[2, 0, 0, 0]],
            IdentityId::Profile(7) => &[&[2, 2], &[1, 0, 1, 0]],
            IdentityId::Profile(8) => &[&[3, 1], &[1, 1, 0, 0]],
            _ => &[],
        };
        parts
            .iter()
            .map(|p| Profile::new(p.to_vec()).expect("static profile"))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        match self {
            IdentityId::Profile(n) if !(2..=8).contains(n) => Err(Error::UnknownIdentity(format!("1.{n}"))),
            IdentityId::Gasper(0) => Err(Error::ParameterOutOfRange("gasper needs z = q^j with j >= 1".into())),
            IdentityId::Lemma(l) => l.spec().validate(),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::Profile(n) => write!(f, "1.{n}"),
            IdentityId::A1 => f.write_str("A1"),
            IdentityId::A2 => f.write_str("A2"),
            IdentityId::Gasper(1) => f.write_str("gasper(z=q)"),
            IdentityId::Gasper(j) => write!(f, "gasper(z=q^{j})"),
            IdentityId::Lemma(l) => write!(f, "{l}"),
        }
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let id = match s {
            "A1" => IdentityId::A1,
            "A2" => IdentityId::A2,
            "gasper(z=q)" => IdentityId::Gasper(1),
            _ if s.starts_with("1.") => {
                let n: u8 = s[2..].parse().map_err(|_| Error::UnknownIdentity(s.into()))?;
                IdentityId::Profile(n)
            }
            _ if s.starts_with("gasper(z=q^") && s.ends_with(')') => {
                let j: u32 = s["gasper(z=q^".len()..s.len() - 1]
                    .parse()
                    .map_err(|_| Error::UnknownIdentity(s.into()))?;
                IdentityId::Gasper(j)
            }
            _ if s.starts_with('L') => IdentityId::Lemma(s.parse()?),
            _ => return Err(Error::UnknownIdentity(s.into())),
        };
        id.validate()?;
        Ok(id)
    }
}

/// `Σ_{n ≥ first} coeff(n) · q^{exp(n)} · ∏num(n) / ∏den(n)`, stopping at the
/// first `n` whose exponent exceeds `order`. `exp` must be strictly increasing.
fn q_sum<E, T>(order: usize, first: u32, exp: E, term: T) -> Result<Series>
where
    E: Fn(u32) -> u64,
    T: Fn(u32) -> (i64, Vec<PochSpec>, Vec<PochSpec>),
{
    let mut acc = Series::zero(order);
    for n in first.. {
        let e = exp(n);
        if e > order as u64 {
            break;
        }
        let (coeff, num, den) = term(n);
        let body = product_expr(&num, &den, order)?;
        let piece = body
            .shift(e as usize)
            .scale(&BigRational::from_integer(coeff.into()));
        acc = acc.add(&piece)?;
    }
    Ok(acc)
}

fn sq(n: u32) -> u64 {
    u64::from(n) * u64::from(n)
}

/// `Σ_{n≥0} q^{n²}/(q⁴;q⁴)_n` and its shifted sibling with `n² + 2n`.
fn rogers_ramanujan_mod4(order: usize, shifted: bool) -> Result<Series> {
    q_sum(
        order,
        0,
        |n| if shifted { sq(n) + 2 * u64::from(n) } else { sq(n) },
        |n| (1, vec![], vec![PochSpec::finite(4, 4, n)]),
    )
}

/// The sum side of equation `1.<n>` and its product side.
fn profile_identity(eq: u8, order: usize) -> Result<(Series, Series)> {
    use PochSpec as P;
    let euler = P::inf(1, 1);
    let (lhs, rhs) = match eq {
        2 => (
            product_expr(&[P::neg_inf(1, 2)], &[euler], order)?,
            product_expr(
                &[],
                &[P::inf(4, 4), P::inf(1, 4), P::inf(1, 4), P::inf(3, 4), P::inf(3, 4)],
                order,
            )?,
        ),
        3 => (
            product_expr(&[P::neg_inf(2, 2)], &[euler], order)?,
            product_expr(&[], &[euler, P::inf(2, 4)], order)?,
        ),
        4 | 5 => {
            let sum = rogers_ramanujan_mod4(order, eq == 5)?;
            let tail = product_expr(&[P::neg_inf(2, 2)], &[euler], order)?;
            let rhs = if eq == 4 {
                [euler, P::inf(1, 5), P::inf(4, 5)]
            } else {
                [euler, P::inf(2, 5), P::inf(3, 5)]
            };
            (sum.mul(&tail)?, product_expr(&[], &rhs, order)?)
        }
        6 => {
            // Σ q^{n(n+1)} (-q²;q²)_n / ((-q³;q²)_n (q²;q²)_n)
            let sum = q_sum(
                order,
                0,
                |n| u64::from(n) * u64::from(n + 1),
                |n| (1, vec![P::neg_finite(2, 2, n)], vec![P::neg_finite(3, 2, n), P::finite(2, 2, n)]),
            )?;
            let tail = product_expr(&[P::neg_inf(3, 2)], &[euler], order)?;
            (
                sum.mul(&tail)?,
                product_expr(&[], &[euler, P::inf(2, 6), P::inf(3, 6), P::inf(4, 6)], order)?,
            )
        }
        7 => {
            // 1 + Σ_{n≥1} 2 q^{n(n+1)} (-q²;q²)_{n-1} / ((q²;q²)_n (-q;q²)_n), constant kept apart
            let sum = q_sum(
                order,
                1,
                |n| u64::from(n) * u64::from(n + 1),
                |n| (2, vec![P::neg_finite(2, 2, n - 1)], vec![P::finite(2, 2, n), P::neg_finite(1, 2, n)]),
            )?
            .add(&Series::one(order))?;
            let tail = product_expr(&[P::neg_inf(1, 2)], &[euler], order)?;
            let rhs = [
                P::inf(6, 6),
                P::inf(1, 6),
                P::inf(1, 6),
                P::inf(2, 6),
                P::inf(2, 6),
                P::inf(4, 6),
                P::inf(4, 6),
                P::inf(5, 6),
                P::inf(5, 6),
            ];
            (sum.mul(&tail)?, product_expr(&[], &rhs, order)?)
        }
        8 => {
            let sum = q_sum(order, 0, sq, |n| (1, vec![], vec![P::finite(2, 2, n)]))?;
            let tail = product_expr(&[P::neg_inf(2, 2)], &[euler], order)?;
            (
                sum.mul(&tail)?,
                product_expr(&[], &[euler, P::inf(1, 6), P::inf(3, 6), P::inf(5, 6)], order)?,
            )
        }
        _ => return Err(Error::UnknownIdentity(format!("1.{eq}"))),
    };
    Ok((lhs, rhs))
}

/// Expands both sides of `id` at `order`.
pub fn catalog_sides(id: &IdentityId, order: usize) -> Result<(Series, Series)> {
    use PochSpec as P;
    id.validate()?;
    match id {
        IdentityId::Profile(eq) => profile_identity(*eq, order),
        IdentityId::A1 | IdentityId::A2 => {
            let shifted = *id == IdentityId::A2;
            let lhs = rogers_ramanujan_mod4(order, shifted)?;
            let den = if shifted {
                [P::neg_inf(2, 2), P::inf(2, 5), P::inf(3, 5)]
            } else {
                [P::neg_inf(2, 2), P::inf(1, 5), P::inf(4, 5)]
            };
            Ok((lhs, product_expr(&[], &den, order)?))
        }
        IdentityId::Gasper(j) => {
            let j = *j;
            let lhs = q_sum(
                order,
                0,
                |n| u64::from(n) * u64::from(n.saturating_sub(1)) / 2 + u64::from(j) * u64::from(n),
                |n| (1, vec![], vec![P::finite(1, 1, n)]),
            )?;
            Ok((lhs, product_expr(&[P::neg_inf(j, 1)], &[], order)?))
        }
        IdentityId::Lemma(l) => Ok((
            lemmas::nested_sum(l.spec(), order)?,
            lemmas::closed_form(l.spec(), order)?,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylindric::enumerate;

    fn profile(parts: &[u32]) -> Profile {
        Profile::new(parts.to_vec()).unwrap()
    }

    fn sorted(mut v: Vec<PochSpec>) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = v.drain(..).map(|p| (p.start, p.step)).collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn borodin_examples() {
        let c = profile(&[1, 1]);
        assert_eq!(borodin(&c, 4).unwrap().to_i64s().unwrap(), vec![1, 2, 3, 6, 10]);
        assert_eq!(
            sorted(borodin_factors(&c).unwrap()),
            vec![(1, 4), (1, 4), (3, 4), (3, 4), (4, 4)]
        );
        let b20 = borodin(&profile(&[2, 0]), 30).unwrap();
        let rhs = product_expr(&[], &[PochSpec::inf(1, 1), PochSpec::inf(2, 4)], 30).unwrap();
        assert_eq!(b20, rhs);
    }

    #[test]
    fn borodin_factor_multisets_match_product_sides() {
        type Case = (&'static [u32], &'static [(u32, u32)]);
        let cases: &[Case] = &[
            (&[2, 1], &[(1, 5), (1, 5), (2, 5), (3, 5), (4, 5), (4, 5), (5, 5)]),
            (&[3, 1], &[(1, 6), (1, 6), (2, 6), (3, 6), (3, 6), (4, 6), (5, 6), (5, 6), (6, 6)]),
        ];
        for (c, expected) in cases {
            assert_eq!(sorted(borodin_factors(&profile(c)).unwrap()), expected.to_vec(), "{c:?}");
        }
    }

    #[test]
    fn borodin_rank_one_is_partition_function() {
        let p = product_expr(&[], &[PochSpec::inf(1, 1)], 20).unwrap();
        for l in 1..5 {
            assert_eq!(borodin(&profile(&[l]), 20).unwrap(), p);
        }
    }

    #[test]
    fn borodin_factors_always_positive() {
        for c in Profile::all_up_to_period(9) {
            let f = borodin_factors(&c).unwrap();
            // c_i(r-i+1) factors from the first product, c_i(i-1) from the second
            assert_eq!(f.len(), 1 + c.rank() * c.level() as usize, "{c}");
            assert!(f.iter().all(|p| p.start >= 1 && p.start <= c.period()), "{c}");
        }
    }

    #[test]
    fn chain_examples() {
        let c = profile(&[1, 1]);
        let g = chain_series(&c, 4, false);
        assert_eq!(g.marginal().to_i64s().unwrap(), vec![1, 2, 3, 6, 10]);
        for c in [profile(&[2, 1]), profile(&[1, 1, 1])] {
            let g = chain_series(&c, 0, false);
            assert_eq!(g.rows(), &[vec![BigUint::one()]]);
            assert_eq!(chain_series(&c, 0, true).rows(), &[vec![BigUint::one()]]);
        }
    }

    #[test]
    fn distinct_chains_for_profile_1_1() {
        let order = 20;
        let g = chain_series(&profile(&[1, 1]), order, true);
        // ∏_{k≥0} (1 + 2q^{2k+1})(1 + q^{2k+2}) expanded by repeated polynomial products
        let mut expected = Series::one(order);
        for k in 0..order {
            let mut f = Series::one(order);
            let odd = 2 * k + 1;
            if odd <= order {
                f = f.add(&Series::monomial(BigRational::from_integer(2.into()), odd, order)).unwrap();
            }
            let even = 2 * k + 2;
            let mut g2 = Series::one(order);
            if even <= order {
                g2 = g2.add(&Series::monomial(BigRational::one(), even, order)).unwrap();
            }
            expected = expected.mul(&f).unwrap().mul(&g2).unwrap();
        }
        assert_eq!(g.marginal(), expected);
    }

    #[test]
    fn chain_refined_matches_enumeration() {
        for c in [profile(&[1, 1]), profile(&[2, 1]), profile(&[1, 0, 2])] {
            let g = chain_series(&c, 9, false);
            let t = enumerate(&c, 9);
            for m in 0..=9 {
                for n in 0..=9 {
                    assert_eq!(g.get(m, n), &BigUint::from(t.get(m, n)), "{c} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn verify_equal_examples() {
        let a = Series::from_integers([1, 1]);
        assert_eq!(verify_equal(&a, &a).unwrap(), Comparison::Equal);
        let b = Series::from_integers([1, 2]);
        assert_eq!(
            verify_equal(&a, &b).unwrap(),
            Comparison::Mismatch {
                degree: 1,
                lhs: BigRational::one(),
                rhs: BigRational::from_integer(2.into())
            }
        );
        assert!(verify_equal(&a, &Series::one(3)).is_err());
        let b21 = borodin(&profile(&[2, 1]), 20).unwrap();
        let (_, rhs) = catalog_sides(&IdentityId::Profile(4), 20).unwrap();
        assert!(verify_equal(&b21, &rhs).unwrap().is_equal());
    }

    #[test]
    fn catalog_examples() {
        let (lhs, rhs) = catalog_sides(&IdentityId::Profile(2), 4).unwrap();
        assert_eq!(lhs.to_i64s().unwrap(), vec![1, 2, 3, 6, 10]);
        assert_eq!(rhs, lhs);
        for id in IdentityId::product_identities() {
            let (lhs, rhs) = catalog_sides(&id, 30).unwrap();
            assert_eq!(lhs, rhs, "{id}");
        }
        for j in 1..=3 {
            let (lhs, rhs) = catalog_sides(&IdentityId::Gasper(j), 30).unwrap();
            assert_eq!(lhs, rhs, "gasper {j}");
        }
    }

    #[test]
    fn identity_ids_parse_and_print() {
        for s in ["1.2", "1.8", "A1", "A2", "gasper(z=q)", "gasper(z=q^3)", "L4.1(0)", "L4.1(2,3)", "L4.3(1,2)", "L5.5(2,1)"] {
            let id: IdentityId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!(matches!("1.9".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
        assert!(matches!("B7".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
        assert!(matches!("gasper(z=q^0)".parse::<IdentityId>(), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!("L4.2(0)".parse::<IdentityId>(), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn sides_csv_format() {
        let a = Series::from_integers([1, 2]);
        let b = Series::from_integers([1, 3]);
        assert_eq!(sides_csv(&a, &b).unwrap(), "degree,lhs,rhs,equal\n0,1,1,true\n1,2,3,false\n");
    }
}
