use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime accepted for `F_p`; keeps residue products inside `u128`.
pub const MAX_PRIME: u64 = 1 << 31;

/// The ground field: the rationals or a prime field of odd characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn rational() -> Field {
        Field::Rational
    }

    /// `F_p`. Characteristic 2 gets its own error since the whole theory
    /// assumes `char k != 2`.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) || p >= MAX_PRIME {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q`, `Fp:<p>` or the shorthand `F<p>`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("GF:"))
            .or_else(|| t.strip_prefix('F'));
        match digits.map(|d| d.trim().parse::<u64>()) {
            Some(Ok(p)) => Field::prime(p),
            _ => Err(Error::Schema(format!(
                "unknown field {text:?}; expected Q or Fp:<p>"
            ))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(n, 1)),
            Field::Prime(p) => Scalar(Repr::Mod(n.rem_euclid(*p as i64) as u64, *p)),
        }
    }

    /// `a / b` in this field; `None` when `b` vanishes in the field.
    pub fn fraction(&self, a: i64, b: i64) -> Option<Scalar> {
        let d = self.from_i64(b);
        d.inv().map(|di| &self.from_i64(a) * &di)
    }

    /// Maps a rational number into the field; `None` if `p` divides the
    /// denominator.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(Scalar::from_big(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap();
                let den = q.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return None;
                }
                let d = Scalar(Repr::Mod(den, *p)).inv()?;
                Some(&Scalar(Repr::Mod(num, *p)) * &d)
            }
        }
    }

    /// Parses a scalar literal such as `"3/4"`, `"-1"` or `"0"`.
    pub fn parse_scalar(&self, literal: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::InvalidScalar {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let t = literal.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad("not an integer or fraction"))?;
        let d: BigInt = d.parse().map_err(|_| bad("not an integer or fraction"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        let q = BigRational::new(n, d);
        self.from_rational(&q)
            .ok_or_else(|| bad("denominator vanishes in this characteristic"))
    }

    /// Does this field admit exact division by every integer `1..=n`?
    pub fn allows_division_up_to(&self, n: usize) -> bool {
        match self {
            Field::Rational => true,
            Field::Prime(p) => (*p as usize) > n,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals that fit in machine words are kept unboxed and promoted to
/// arbitrary precision only on overflow; values are always in canonical form,
/// so the derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    /// Reduced fraction that does not fit in `Small`.
    Big(BigRational),
    /// Residue in `[0, p)` together with `p`.
    Mod(u64, u64),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn small_from_i128(n: i128, d: i128) -> Scalar {
    debug_assert!(d != 0);
    let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
    let g = gcd_i128(n, d);
    if g > 1 {
        n /= g;
        d /= g;
    }
    if n == 0 {
        return Scalar(Repr::Small(0, 1));
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
        _ => Scalar(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl Scalar {
    fn from_big(q: BigRational) -> Scalar {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(q)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(q) => q.clone(),
            Repr::Mod(..) => panic!("residue used where a rational was expected"),
        }
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Mod(_, p) => Field::Prime(*p),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _) | Repr::Mod(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1) | Repr::Mod(1, _))
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => small_from_i128(*d as i128, *n as i128),
            Repr::Big(q) => Scalar::from_big(q.recip()),
            Repr::Mod(v, p) => Scalar(Repr::Mod(pow_mod(*v, p - 2, *p), *p)),
        })
    }

    /// The rational value, when this scalar lives in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Mod(..) => None,
            _ => Some(self.to_big()),
        }
    }

    /// Multiplies by `(-1)^k`.
    pub fn signed(&self, negative: bool) -> Scalar {
        if negative {
            -self
        } else {
            self.clone()
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalars from different fields: {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    small_from_i128(a + c, b)
                } else {
                    small_from_i128(a * d + c * b, b * d)
                }
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) if p == q => Scalar(Repr::Mod((a + b) % p, *p)),
            (Repr::Mod(..), _) | (_, Repr::Mod(..)) => mismatch(self, rhs),
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                small_from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) if p == q => {
                Scalar(Repr::Mod(((*a as u128 * *b as u128) % *p as u128) as u64, *p))
            }
            (Repr::Mod(..), _) | (_, Repr::Mod(..)) => mismatch(self, rhs),
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => small_from_i128(-(*n as i128), *d as i128),
            Repr::Big(q) => Scalar::from_big(-q),
            Repr::Mod(v, p) => Scalar(Repr::Mod((p - v) % p, *p)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Scalar {
    /// Like `Display`, but residues above `p / 2` are written as negative
    /// integers, so the literal means the same thing in every field.
    pub fn literal(&self) -> String {
        match &self.0 {
            Repr::Mod(v, p) if 2 * *v > *p => format!("-{}", p - v),
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A total order used only to make output deterministic; it is the numeric
/// order for rationals and the residue order for `F_p`.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Mod(a, _), Repr::Mod(b, _)) => a.cmp(b),
            (Repr::Mod(..), _) => Ordering::Greater,
            (_, Repr::Mod(..)) => Ordering::Less,
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Scalar {
    /// Absolute value for rationals; identity for residues.
    pub fn abs_rational(&self) -> Scalar {
        match &self.0 {
            Repr::Small(..) | Repr::Big(_) => Scalar::from_big(self.to_big().abs()),
            Repr::Mod(..) => self.clone(),
        }
    }
}
