//! Stirling numbers, surjection counts and the average number of satisfying words.
//!
//! Everything here is exact: big integers and reduced rationals, never floats.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::{count_satisfying_bounded, enumerate_configurations, m_range, require_square};
use crate::error::{check_bound, Error, Result};
use crate::family::{SetFamily, Transversal};
use crate::shelling::is_shellable;

/// Default bound on `n` for [`average_bruteforce`].
pub const AVERAGE_ORACLE_BOUND: usize = 8;

/// A reduced rational with positive denominator.
///
/// Serialized as `{"num": "<decimal>", "den": "<decimal>"}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        ExactRational(BigRational::new(num, den))
    }

    pub fn from_integer<T: Into<BigInt>>(value: T) -> Self {
        ExactRational(BigRational::from_integer(value.into()))
    }

    pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Self {
        Self::new(num.into(), den.into())
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Integer part and fractional remainder, e.g. `4014814003 + 1/5`.
    pub fn split(&self) -> (BigInt, ExactRational) {
        let whole = self.0.floor();
        (whole.to_integer(), ExactRational(&self.0 - whole))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Hypothesis(format!("cannot parse rational {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Self::new(num, den))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.0.numer().to_string(),
            den: self.0.denom().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        let num = BigInt::from_str(&repr.num).map_err(serde::de::Error::custom)?;
        let den = BigInt::from_str(&repr.den).map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(ExactRational::new(num, den))
    }
}

/// Memoized table of `S(n, m)` built by `S(n, m) = m S(n-1, m) + S(n-1, m-1)`.
///
/// Row `n` holds `S(n, 0..=n)`. The table grows on demand; take a snapshot with
/// `clone` to share it read-only.
#[derive(Clone, Debug, Default)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![BigUint::one()]],
        }
    }

    /// `S(n, m)`; zero when `m > n`.
    pub fn get(&mut self, n: usize, m: usize) -> BigUint {
        if m > n {
            return BigUint::zero();
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 exists");
            let k = self.rows.len();
            let row: Vec<BigUint> = (0..=k)
                .map(|j| {
                    let stay = if j < k {
                        prev[j].clone() * j
                    } else {
                        BigUint::zero()
                    };
                    let join = if j > 0 {
                        prev[j - 1].clone()
                    } else {
                        BigUint::zero()
                    };
                    stay + join
                })
                .collect();
            self.rows.push(row);
        }
        self.rows[n][m].clone()
    }
}

/// Stirling number of the second kind, by the recurrence.
pub fn stirling2(n: usize, m: usize) -> BigUint {
    StirlingTable::new().get(n, m)
}

/// Stirling number of the second kind from the alternating sum
/// `(1/m!) Σ_{i=0}^{m} (-1)^i C(m, i) (m - i)^n`.
pub fn stirling2_explicit(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    let mut sum = BigInt::zero();
    for i in 0..=m {
        let term = BigInt::from(binomial(m, i)) * BigInt::from(m - i).pow(n as u32);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let fact = BigInt::from(factorial(m));
    debug_assert!((&sum % &fact).is_zero());
    (sum / fact)
        .abs()
        .to_biguint()
        .expect("alternating sum is non-negative")
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `m! S(n, m)`, the number of surjections `[n] -> [m]`.
pub fn surjection_count(n: usize, m: usize) -> BigUint {
    factorial(m) * stirling2(n, m)
}

fn member_size_product(fam: &SetFamily) -> BigUint {
    fam.members()
        .iter()
        .map(|m| BigUint::from(m.len()))
        .product()
}

/// Checks the averaging theorem's hypotheses: `|F| = n`, shellable, `m` in range.
fn check_average_hypotheses(fam: &SetFamily, m: usize) -> Result<()> {
    require_square(fam)?;
    fam.ensure_nonempty_members()?;
    if !is_shellable(fam)? {
        return Err(Error::Hypothesis("family is not shellable".into()));
    }
    let (lower, upper) = m_range(fam)?;
    if m < lower || m > upper {
        return Err(Error::MOutOfRange { m, lower, upper });
    }
    Ok(())
}

/// `m! S(n, m) / ∏|F|`: the average of `A_{n,m}(f)` over configurations with at
/// least one satisfying word.
pub fn average_formula(fam: &SetFamily, m: usize) -> Result<ExactRational> {
    check_average_hypotheses(fam, m)?;
    Ok(ExactRational::new(
        surjection_count(fam.n(), m).into(),
        member_size_product(fam).into(),
    ))
}

/// The same average in closed form for `n - m ∈ {0, 1, 2}`:
/// `S(m, m) = 1`, `S(m+1, m) = C(m+1, 2)` and
/// `S(m+2, m) = ½ C(m+1, 2) (C(m+1, 2) + (2m+1)/3)`.
pub fn average_closed_form(fam: &SetFamily, m: usize) -> Result<ExactRational> {
    check_average_hypotheses(fam, m)?;
    let n = fam.n();
    let pairs = BigRational::from_integer(binomial(m + 1, 2).into());
    let stirling = match n - m {
        0 => BigRational::one(),
        1 => pairs,
        2 => {
            let third = BigRational::new(BigInt::from(2 * m + 1), BigInt::from(3));
            BigRational::new(BigInt::one(), BigInt::from(2)) * &pairs * (&pairs + third)
        }
        d => return Err(Error::UnsupportedDifference(d)),
    };
    let scale = BigRational::new(factorial(m).into(), member_size_product(fam).into());
    Ok(ExactRational(stirling * scale))
}

/// The average computed by definition: count `A_{n,m}(f)` for every configuration,
/// keep those with `A >= 1`, and average (0 when none qualify).
pub fn average_bruteforce(fam: &SetFamily, t: &Transversal, m: usize) -> Result<ExactRational> {
    average_bruteforce_bounded(fam, t, m, AVERAGE_ORACLE_BOUND)
}

pub fn average_bruteforce_bounded(
    fam: &SetFamily,
    t: &Transversal,
    m: usize,
    bound: usize,
) -> Result<ExactRational> {
    Ok(configuration_counts(fam, t, m, bound)?.average())
}

/// `A_{n,m}(f)` for every configuration of `t`, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationCounts {
    pub counts: Vec<(Vec<usize>, u64)>,
}

impl ConfigurationCounts {
    pub fn total(&self) -> BigUint {
        self.counts.iter().map(|&(_, c)| BigUint::from(c)).sum()
    }

    pub fn achievable(&self) -> usize {
        self.counts.iter().filter(|&&(_, c)| c >= 1).count()
    }

    pub fn min(&self) -> u64 {
        self.counts.iter().map(|&(_, c)| c).min().unwrap_or(0)
    }

    pub fn average(&self) -> ExactRational {
        match self.achievable() {
            0 => ExactRational::zero(),
            x => ExactRational::new(self.total().into(), BigInt::from(x)),
        }
    }

    /// How many configurations have `A <= bound`.
    pub fn at_most(&self, bound: &ExactRational) -> usize {
        self.counts
            .iter()
            .filter(|&&(_, c)| ExactRational::from_integer(c) <= *bound)
            .count()
    }

    pub fn as_map(&self) -> HashMap<Vec<usize>, u64> {
        self.counts.iter().cloned().collect()
    }
}

pub fn configuration_counts(
    fam: &SetFamily,
    t: &Transversal,
    m: usize,
    bound: usize,
) -> Result<ConfigurationCounts> {
    check_bound("n", fam.n(), bound)?;
    let mut counts = Vec::new();
    for f in enumerate_configurations(fam, t)? {
        let c = count_satisfying_bounded(fam, t, &f, m, bound)?;
        counts.push((f.demands().to_vec(), c));
    }
    Ok(ConfigurationCounts { counts })
}
